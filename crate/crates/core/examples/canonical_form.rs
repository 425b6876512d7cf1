//! Reduction to dY/dX = Y³ + J(X) and the moduli group acting on J.

use abel_geometry::canonical::{canonical_related, canonicalize, find_moduli, moduli_apply, ModuliMap};
use abel_geometry::equation::{AbelEquation, ChartedEquation};
use abel_geometry::series::integer;
use abel_geometry::{Jet, Result};

fn main() -> Result<()> {
    let order = 6;
    let eq: ChartedEquation = AbelEquation::from_integers([&[1, 1], &[0, 2], &[1], &[1, 0, 1]], order)?.into();
    let cd = canonicalize(&eq, &integer(1))?;
    println!("V    = {}", cd.v);
    println!("U    = {}", cd.u);
    println!("X(x) = {}", cd.x_of_x);
    println!("J(X) = {}", cd.j_in_x);

    let j = Jet::polynomial(vec![integer(0), integer(1)]);
    let m = ModuliMap::new(integer(2), integer(0))?;
    let image = moduli_apply(&j, &m)?;
    println!("J = X under K = 2: {image}");
    println!("related: {}", canonical_related(&j, &image, &m)?);
    if let Some(found) = find_moduli(&j, &image) {
        println!("recovered K = {}, h = {}", found.k, found.h);
    }

    let shift = ModuliMap::new(integer(1), integer(3))?;
    let two_step = moduli_apply(&moduli_apply(&j, &shift)?, &m)?;
    let composite = moduli_apply(&j, &m.after(&shift))?;
    println!("composition respected: {}", two_step == composite);
    Ok(())
}
