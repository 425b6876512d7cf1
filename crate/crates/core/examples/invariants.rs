//! The Liouville hierarchy and its transformation law under a gauge map.

use abel_geometry::equation::{transform, AbelEquation, ChartedEquation, PseudoGroupMap};
use abel_geometry::invariants::{connection, s_hierarchy};
use abel_geometry::{Jet, Result};

fn main() -> Result<()> {
    let order = 8;
    // dy/dx = 3x y² + y³
    let eq: ChartedEquation = AbelEquation::from_integers([&[], &[], &[0, 1], &[1]], order)?.into();
    for (n, s) in s_hierarchy(&eq, 3)?.iter().enumerate() {
        println!("s{} = {s}", 2 * n + 3);
    }
    println!("r  = {}", connection(&eq));

    // y = η(ξ)(1 + x) + x², dξ/dx = 2 - x
    let t = PseudoGroupMap::new(
        Jet::from_integers(&[1, 1], order),
        Jet::from_integers(&[0, 0, 1], order),
        Jet::from_integers(&[2, -1], order),
    )?;
    let out = transform(&eq, &t)?;
    let jac = t.in_chart(&eq)?.jacobian();
    let before = s_hierarchy(&eq, 3)?;
    let after = s_hierarchy(&out, 3)?;
    for n in 1..=3usize {
        let expected = &jac.pow(2 * n as u32 + 1) * &before[n - 1];
        println!(
            "s{} transforms with (u/μ)^{}: {}",
            2 * n + 1,
            2 * n + 1,
            after[n - 1].agrees_with(&expected)
        );
    }
    Ok(())
}
