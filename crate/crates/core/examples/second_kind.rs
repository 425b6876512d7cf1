//! Series solutions, and the reduction of a second-kind equation to first kind.

use abel_geometry::equation::{AbelEquation, ChartedEquation};
use abel_geometry::series::integer;
use abel_geometry::solve::{ode_residual, series_solve, SecondKindEquation};
use abel_geometry::{Jet, Result};

fn main() -> Result<()> {
    let order = 8;
    let pure: ChartedEquation = AbelEquation::from_integers([&[], &[], &[], &[1]], order)?.into();
    println!("y' = y³, y(0) = 1: y = {}", series_solve(&pure, integer(1), order)?);

    // y' = (1 + x + 3x y + 3y² + (1 + x²) y³) / (2 + x + (1 - x²) y)
    let ints = |c: &[i64]| Jet::from_integers(c, order);
    let second = SecondKindEquation::new(
        ints(&[2, 1]),
        ints(&[1, 0, -1]),
        [ints(&[1, 1]), ints(&[0, 1]), ints(&[1]), ints(&[1, 0, 1])],
    )?;
    let first: ChartedEquation = second.reduce()?.into();
    for (i, c) in first.eq.coefficients().iter().enumerate() {
        println!("c{i} = {c}");
    }
    let y = second.series_solve(integer(1), order)?;
    let z = second.substitution(&y)?;
    let residual = ode_residual(&first, &z)?;
    println!("z = 1/(b0 + b1 y) = {z}");
    println!("residual in the reduced equation vanishes: {}", residual.agrees_with(&Jet::zero(order)));
    Ok(())
}
