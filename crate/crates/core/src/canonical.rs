//! Reduction to the canonical form `dY/dX = Y³ + J` and the moduli group.
//!
//! The substitution `y = U Y + V`, `dX = M dξ` with
//!
//! ```text
//! V = -c2/c3,   U = ρ exp(3 ∫ (c1 c3 - c2²)/c3 dξ),   M = c3 U²
//! ```
//!
//! kills the `Y` and `Y²` terms and normalizes the cubic one. The remaining
//! coefficient is `J = s3 / (c3 U)³`. The antiderivative vanishes at the
//! origin; the leftover one-parameter freedom is the rational multiplier `ρ`.
//!
//! Canonical forms are permuted by `W = (X + h)/K²`, `Z = K Y`, which acts on
//! the invariant as `J̃(W) = K³ J(K² W - h)`.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::equation::{ChartedEquation, PseudoGroupMap};
use crate::error::{Error, Result};
use crate::invariants::s3;
use crate::series::rational::rational_powi;
use crate::series::{Jet, Rational};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CanonicalData {
    /// `-c2/c3`.
    pub v: Jet,
    /// Scaling of the dependent variable.
    pub u: Jet,
    /// `c3 U²`, the rate `dX/dξ` in the equation's own chart.
    pub m: Jet,
    /// The invariant as a series in the base variable.
    pub j: Jet,
    /// `X` as a function of the base variable, zero at the origin.
    pub x_of_x: Jet,
    /// The invariant as a series in `X`.
    pub j_in_x: Jet,
    pub rho: Rational,
    /// `dξ/dx` of the source chart, kept for `d/dX = (M dvar)⁻¹ d/dx`.
    pub dvar: Jet,
}

pub fn canonicalize(eq: &ChartedEquation, rho: &Rational) -> Result<CanonicalData> {
    if rho.is_zero() {
        return Err(Error::Domain("normalization multiplier must be nonzero".into()));
    }
    let [_, c1, c2, c3] = eq.eq.coefficients();
    let v = -c2.checked_div(c3)?;
    // d/dx log U = 3 (c1 c3 - c2²)/c3 · dξ/dx
    let rate = ((c1 * c3 - c2 * c2) * 3).checked_div(c3)? * &eq.dvar;
    let u = rate.integrate().exp()?.scale(rho);
    let m = c3 * &u * &u;
    let c3u = c3 * &u;
    let j = s3(eq).checked_div(&c3u.pow(3))?;
    let x_of_x = (&m * &eq.dvar).integrate();
    let j_in_x = j.compose(&x_of_x.revert()?)?;
    Ok(CanonicalData { v, u, m, j, x_of_x, j_in_x, rho: rho.clone(), dvar: eq.dvar.clone() })
}

impl CanonicalData {
    /// `dX/dx` in the base variable.
    pub fn base_rate(&self) -> Jet {
        &self.m * &self.dvar
    }

    /// `dⁿJ/dXⁿ` as a series in the base variable.
    pub fn d_j_d_x(&self, n: usize) -> Jet {
        d_j_d_x(self, n)
    }
}

/// `(d/dX)ⁿ J`, computed as `((M dvar)⁻¹ d/dx)ⁿ J`.
pub fn d_j_d_x(cd: &CanonicalData, n: usize) -> Jet {
    let rate = cd.base_rate();
    let mut out = cd.j.clone();
    for _ in 0..n {
        out = out.differentiate().checked_div(&rate).expect("dX/dx is nonzero at the origin");
    }
    out
}

/// The multiplier `ρ̃` that makes `Ũ = U/u` for the equation transformed by
/// `t`, given the source normalization `ρ`.
pub fn compatible_rho(eq: &ChartedEquation, t: &PseudoGroupMap, rho: &Rational) -> Result<Rational> {
    let t = t.in_chart(eq)?;
    Ok(rho / t.u.constant_term())
}

/// `W = (X + h)/K²`, `Z = K Y`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ModuliMap {
    pub k: Rational,
    pub h: Rational,
}

impl ModuliMap {
    pub fn new(k: Rational, h: Rational) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::Domain("moduli parameter K must be nonzero".into()));
        }
        Ok(Self { k, h })
    }

    pub fn identity() -> Self {
        Self { k: Rational::one(), h: Rational::zero() }
    }

    /// `self ∘ first`: apply `first`, then `self`.
    pub fn after(&self, first: &ModuliMap) -> ModuliMap {
        ModuliMap {
            k: &first.k * &self.k,
            h: &first.h + &first.k * &first.k * &self.h,
        }
    }

    /// The gauge map realizing this moduli transformation on a canonical form.
    pub fn as_gauge(&self, order: usize) -> PseudoGroupMap {
        PseudoGroupMap {
            u: Jet::constant(self.k.recip(), order),
            nu: Jet::zero(order),
            mu: Jet::constant(rational_powi(&self.k, -2), order),
        }
    }
}

/// `J̃(W) = K³ J(K² W - h)`. A nonzero shift needs `J` to be an exact
/// polynomial.
pub fn moduli_apply(j: &Jet, m: &ModuliMap) -> Result<Jet> {
    let k2 = &m.k * &m.k;
    let shifted = j.substitute_affine(&-&m.h, &k2)?;
    Ok(shifted.scale(&(&k2 * &m.k)))
}

/// Whether `j2 = moduli_apply(j1, m)` up to the common valid order.
pub fn canonical_related(j1: &Jet, j2: &Jet, m: &ModuliMap) -> Result<bool> {
    let image = moduli_apply(j1, m)?;
    if image.order() != j2.order() {
        return Err(Error::OrderMismatch { left: image.order(), right: j2.order() });
    }
    Ok(image.agrees_with(j2))
}

/// Searches for `K` with `h = 0` relating the two series, solving
/// `J2ₖ = K^(3+2k) J1ₖ` at the lowest nonzero order and checking the rest.
pub fn find_moduli(j1: &Jet, j2: &Jet) -> Option<ModuliMap> {
    if j1.order() != j2.order() {
        return None;
    }
    let n = j1.valid_len().min(j2.valid_len());
    let lowest = (0..n).find(|&k| !j1.coeff(k).is_zero() || !j2.coeff(k).is_zero());
    let Some(k) = lowest else {
        return Some(ModuliMap::identity());
    };
    let (a, b) = (j1.coeff(k), j2.coeff(k));
    if a.is_zero() || b.is_zero() {
        return None;
    }
    let exponent = 3 + 2 * k as u32;
    let big_k = odd_rational_root(&(b / a), exponent)?;
    let m = ModuliMap::new(big_k, Rational::zero()).ok()?;
    match canonical_related(j1, j2, &m) {
        Ok(true) => Some(m),
        _ => None,
    }
}

/// The rational `r` with `r^e = q` for odd `e`, if one exists.
fn odd_rational_root(q: &Rational, e: u32) -> Option<Rational> {
    debug_assert!(e % 2 == 1);
    let root = |n: &BigInt| -> Option<BigInt> {
        let r = n.abs().nth_root(e);
        (num_traits::pow(r.clone(), e as usize) == n.abs()).then(|| if n.is_negative() { -r } else { r })
    };
    let num = root(q.numer())?;
    let den = root(q.denom())?;
    Some(Rational::new(num, den))
}

/// `s3` recovered from the canonical data: `J (c3 U)³`.
pub fn reconstructed_s3(eq: &ChartedEquation, cd: &CanonicalData) -> Jet {
    &cd.j * &(eq.eq.c3() * &cd.u).pow(3)
}

/// `(c3 U)^power`, the factor relating `dⁿJ/dXⁿ` to `s_{2n+3}`.
pub fn c3u_power(eq: &ChartedEquation, cd: &CanonicalData, power: u32) -> Jet {
    (eq.eq.c3() * &cd.u).pow(power)
}
