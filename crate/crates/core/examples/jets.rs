//! Exact truncated series: arithmetic, reversion, and the valid-order watermark.

use abel_geometry::series::{integer, Jet};
use abel_geometry::Result;

fn main() -> Result<()> {
    let order = 6;
    let x = Jet::variable(order);
    let one = Jet::one(order);

    let geometric = (&one - &x).recip()?;
    println!("1/(1 - x)          = {geometric}");

    let e = x.exp()?;
    println!("exp(x)             = {e}");
    println!("log(exp(x))        = {}", e.log()?);

    // tan is the reversion of arctan = ∫ 1/(1 + x²)
    let arctan = (&one + &x * &x).recip()?.integrate().truncate(order);
    println!("arctan(x)          = {arctan}");
    println!("tan(x)             = {}", arctan.revert()?);

    // a polynomial stays exact under differentiation, a series loses a term
    let p = Jet::from_integers(&[1, 2, 3], order);
    let s = p.clone().as_series();
    println!("d/dx polynomial    = {} (valid through {:?})", p.differentiate(), p.differentiate().valid_order());
    println!("d/dx series        = {} (valid through {:?})", s.differentiate(), s.differentiate().valid_order());

    println!("(1 + x)³ at x = 2  = {}", Jet::from_integers(&[1, 1], order).pow(3).eval(&integer(2)));
    Ok(())
}
