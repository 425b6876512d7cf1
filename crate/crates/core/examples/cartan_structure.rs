//! Structure equations of the coframe at rational points, computed exactly.

use abel_geometry::cartan::{
    duality_matrix, frame_derivatives_of_i, invariant_i, structure_residuals, varpi_curvature, PointXYU,
    TwoForm,
};
use abel_geometry::equation::AbelEquation;
use abel_geometry::series::{integer, ratio};
use abel_geometry::Result;

fn show(w: &TwoForm) -> String {
    format!("{} dx∧dy + {} dx∧du + {} dy∧du", w.dx_dy, w.dx_du, w.dy_du)
}

fn main() -> Result<()> {
    // f = 1 + x + 3y² + y³
    let eq = AbelEquation::from_integers([&[1, 1], &[], &[1], &[1]], 3)?;
    let p = PointXYU::new(ratio(1, 2), integer(1), integer(3))?;

    let res = structure_residuals(&eq, &p)?;
    println!("dθ1 - ϖ∧θ1 = {}", show(&res.theta1));
    println!("dθ2 - ϖ∧θ2 = {}", show(&res.theta2));
    println!("dϖ - I θ1∧θ2 = {}", show(&res.varpi));
    println!("I = {}, dϖ/θ1∧θ2 = {}", invariant_i(&eq, &p), varpi_curvature(&eq, &p));

    for row in duality_matrix(&eq, &p)? {
        println!("{}", row.iter().map(ToString::to_string).collect::<Vec<_>>().join(" "));
    }
    let [a, b, c] = frame_derivatives_of_i(&eq, &p)?;
    println!("X1(I) = {a}, X2(I) = {b}, X3(I) = {c}");
    Ok(())
}
