//! The Abel equation, gauge maps, and the induced action on coefficients.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::series::Jet;

/// `dy/dx = c0 + 3 c1 y + 3 c2 y² + c3 y³` with `c3(0) ≠ 0`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelEquation {
    c: [Jet; 4],
}

impl AbelEquation {
    pub fn new(c0: Jet, c1: Jet, c2: Jet, c3: Jet) -> Result<Self> {
        let order = c0.order();
        for c in [&c1, &c2, &c3] {
            if c.order() != order {
                return Err(Error::OrderMismatch { left: order, right: c.order() });
            }
        }
        if c3.constant_term().is_zero() {
            return Err(Error::ZeroLeading("c3"));
        }
        Ok(Self { c: [c0, c1, c2, c3] })
    }

    /// Equation with polynomial coefficients given as integers.
    pub fn from_integers(c: [&[i64]; 4], order: usize) -> Result<Self> {
        let [c0, c1, c2, c3] = c.map(|p| Jet::from_integers(p, order));
        Self::new(c0, c1, c2, c3)
    }

    pub fn order(&self) -> usize {
        self.c[0].order()
    }

    pub fn coefficients(&self) -> &[Jet; 4] {
        &self.c
    }

    pub fn c0(&self) -> &Jet {
        &self.c[0]
    }
    pub fn c1(&self) -> &Jet {
        &self.c[1]
    }
    pub fn c2(&self) -> &Jet {
        &self.c[2]
    }
    pub fn c3(&self) -> &Jet {
        &self.c[3]
    }

    pub fn into_coefficients(self) -> [Jet; 4] {
        self.c
    }
}

/// Equation written in a chart variable `ξ` whose coefficients are still
/// expanded in the base variable `x`; `dvar = dξ/dx`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChartedEquation {
    pub eq: AbelEquation,
    pub dvar: Jet,
}

impl From<AbelEquation> for ChartedEquation {
    fn from(eq: AbelEquation) -> Self {
        let dvar = Jet::one(eq.order());
        Self { eq, dvar }
    }
}

impl ChartedEquation {
    pub fn new(eq: AbelEquation, dvar: Jet) -> Result<Self> {
        if dvar.order() != eq.order() {
            return Err(Error::OrderMismatch { left: eq.order(), right: dvar.order() });
        }
        if dvar.constant_term().is_zero() {
            return Err(Error::ZeroLeading("dvar"));
        }
        Ok(Self { eq, dvar })
    }

    pub fn original(eq: AbelEquation) -> Self {
        eq.into()
    }

    pub fn order(&self) -> usize {
        self.eq.order()
    }

    pub fn is_original(&self) -> bool {
        self.dvar == Jet::one(self.order())
    }

    /// The chart derivation `D = dvar⁻¹ d/dx`.
    pub fn derive(&self, phi: &Jet) -> Jet {
        let d = phi.differentiate();
        if self.is_original() {
            d.with_valid_len(self.dvar.valid_len())
        } else {
            d.checked_div(&self.dvar).expect("dvar has a nonzero constant term")
        }
    }

    /// The chart variable as a function of `x`, vanishing at the origin.
    pub fn chart_coordinate(&self) -> Jet {
        self.dvar.integrate()
    }

    /// The right-hand side `c0 + 3 c1 y + 3 c2 y² + c3 y³`.
    pub fn rhs(&self, y: &Jet) -> Result<Jet> {
        rhs(&self.eq, y)
    }
}

pub fn rhs(eq: &AbelEquation, y: &Jet) -> Result<Jet> {
    if y.order() != eq.order() {
        return Err(Error::OrderMismatch { left: eq.order(), right: y.order() });
    }
    let [c0, c1, c2, c3] = &eq.c;
    let inner = c2 * 3 + y * c3;
    let inner = c1 * 3 + y * inner;
    Ok(c0 + y * inner)
}

/// A gauge transformation `y = η(ξ) u + ν`, `dξ/dx = μ`.
///
/// The jets are functions of the variable of the equation the map acts on.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PseudoGroupMap {
    pub u: Jet,
    pub nu: Jet,
    pub mu: Jet,
}

impl PseudoGroupMap {
    pub fn new(u: Jet, nu: Jet, mu: Jet) -> Result<Self> {
        for other in [&nu, &mu] {
            if other.order() != u.order() {
                return Err(Error::OrderMismatch { left: u.order(), right: other.order() });
            }
        }
        if u.constant_term().is_zero() {
            return Err(Error::ZeroLeading("u"));
        }
        if mu.constant_term().is_zero() {
            return Err(Error::ZeroLeading("mu"));
        }
        Ok(Self { u, nu, mu })
    }

    pub fn identity(order: usize) -> Self {
        Self { u: Jet::one(order), nu: Jet::zero(order), mu: Jet::one(order) }
    }

    pub fn order(&self) -> usize {
        self.u.order()
    }

    /// `u/μ = ∂(x, y)/∂(ξ, η)`.
    pub fn jacobian(&self) -> Jet {
        self.u.checked_div(&self.mu).expect("mu has a nonzero constant term")
    }

    /// The map with every component precomposed with `through`.
    pub fn pull_back(&self, through: &Jet) -> Result<Self> {
        Ok(Self {
            u: self.u.compose(through)?,
            nu: self.nu.compose(through)?,
            mu: self.mu.compose(through)?,
        })
    }

    /// The map re-expressed in the base variable `x` of `eq`.
    pub fn in_chart(&self, eq: &ChartedEquation) -> Result<Self> {
        if self.order() != eq.order() {
            return Err(Error::OrderMismatch { left: eq.order(), right: self.order() });
        }
        if eq.is_original() {
            Ok(self.clone())
        } else {
            self.pull_back(&eq.chart_coordinate())
        }
    }
}

/// Applies `t` to `eq`. The components of `t` are read as functions of the
/// chart variable of `eq`; derivatives are taken with its derivation.
pub fn transform(eq: &ChartedEquation, t: &PseudoGroupMap) -> Result<ChartedEquation> {
    let t = t.in_chart(eq)?;
    let [_, c1, c2, c3] = eq.eq.coefficients();
    let (u, nu, mu) = (&t.u, &t.nu, &t.mu);
    let du = eq.derive(u);
    let dnu = eq.derive(nu);
    let mu_u = mu * u;

    let cubic_at_nu = rhs(&eq.eq, nu)?;
    let g0 = (cubic_at_nu - dnu).checked_div(&mu_u)?;

    let quad = c1 + nu * (c2 * 2 + nu * c3);
    let g1 = quad.checked_div(mu)? - du.checked_div(&(&mu_u * 3))?;

    let g2 = (u * (c2 + nu * c3)).checked_div(mu)?;
    let g3 = (u * u * c3).checked_div(mu)?;

    let dvar = &eq.dvar * mu;
    ChartedEquation::new(AbelEquation::new(g0, g1, g2, g3)?, dvar)
}

/// The map equal to applying `first`, then `second`.
///
/// `second` is written in the chart variable `ξ` produced by `first`; it is
/// pulled back through `ξ(x) = ∫ μ₁ dx`.
pub fn compose_maps(second: &PseudoGroupMap, first: &PseudoGroupMap) -> Result<PseudoGroupMap> {
    if second.order() != first.order() {
        return Err(Error::OrderMismatch { left: first.order(), right: second.order() });
    }
    let xi = first.mu.integrate();
    let pulled = second.pull_back(&xi)?;
    PseudoGroupMap::new(
        &first.u * &pulled.u,
        &first.nu + &first.u * &pulled.nu,
        &first.mu * &pulled.mu,
    )
}

/// Relative invariance of `c3`: the expected `γ3 = (u²/μ) c3`.
pub fn expected_leading(eq: &ChartedEquation, t: &PseudoGroupMap) -> Result<Jet> {
    let t = t.in_chart(eq)?;
    (&t.u * &t.u * eq.eq.c3()).checked_div(&t.mu)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::{integer, ratio};

    fn ints(c: &[i64], order: usize) -> Jet {
        Jet::from_integers(c, order)
    }

    fn abel(c: [&[i64]; 4], order: usize) -> ChartedEquation {
        AbelEquation::from_integers(c, order).unwrap().into()
    }

    #[test]
    fn rejects_vanishing_leading_coefficient() {
        let err = AbelEquation::from_integers([&[1], &[], &[], &[0, 1]], 3).unwrap_err();
        assert_eq!(err, Error::ZeroLeading("c3"));
        let mismatch = AbelEquation::new(ints(&[1], 2), ints(&[], 3), ints(&[], 3), ints(&[1], 3));
        assert!(matches!(mismatch, Err(Error::OrderMismatch { .. })));
    }

    #[test]
    fn right_hand_side() {
        assert_eq!(abel([&[], &[], &[], &[1]], 3).rhs(&Jet::one(3)).unwrap(), Jet::one(3));
        assert_eq!(abel([&[1], &[], &[], &[1]], 3).rhs(&Jet::zero(3)).unwrap(), Jet::one(3));
        assert_eq!(abel([&[], &[], &[0, 1], &[1]], 3).rhs(&Jet::one(3)).unwrap(), ints(&[1, 3], 3));
    }

    #[test]
    fn identity_map_leaves_equation_alone() {
        let eq = abel([&[1, 2], &[0, -1], &[3], &[2, 0, 1]], 5);
        let out = transform(&eq, &PseudoGroupMap::identity(5)).unwrap();
        assert_eq!(out, eq);
    }

    #[test]
    fn shift_by_x() {
        let eq = abel([&[], &[], &[], &[1]], 5);
        let t = PseudoGroupMap::new(Jet::one(5), Jet::variable(5), Jet::one(5)).unwrap();
        let out = transform(&eq, &t).unwrap();
        let [g0, g1, g2, g3] = out.eq.coefficients();
        assert_eq!(g0, &ints(&[-1, 0, 0, 1], 5));
        assert_eq!(g1, &ints(&[0, 0, 1], 5));
        assert_eq!(g2, &ints(&[0, 1], 5));
        assert_eq!(g3, &Jet::one(5));
    }

    #[test]
    fn constant_scaling_multiplies_leading_by_u_squared() {
        let eq = abel([&[1, 1], &[2], &[0, 3], &[5, -1]], 4);
        let t = PseudoGroupMap::new(Jet::constant(integer(2), 4), Jet::zero(4), Jet::one(4)).unwrap();
        let out = transform(&eq, &t).unwrap();
        assert_eq!(out.eq.c3(), &(eq.eq.c3() * 4));
        assert_eq!(out.eq.c3(), &expected_leading(&eq, &t).unwrap());
    }

    #[test]
    fn transform_tracks_chart_rate() {
        let eq = abel([&[1], &[], &[], &[1]], 4);
        let mu = ints(&[2, 1], 4);
        let t = PseudoGroupMap::new(Jet::one(4), Jet::zero(4), mu.clone()).unwrap();
        let out = transform(&eq, &t).unwrap();
        assert_eq!(out.dvar, mu);
        assert!(!out.is_original());
    }

    #[test]
    fn map_validation() {
        assert_eq!(
            PseudoGroupMap::new(ints(&[0, 1], 2), Jet::zero(2), Jet::one(2)).unwrap_err(),
            Error::ZeroLeading("u")
        );
        assert_eq!(
            PseudoGroupMap::new(Jet::one(2), Jet::zero(2), ints(&[0, 1], 2)).unwrap_err(),
            Error::ZeroLeading("mu")
        );
    }

    #[test]
    fn composing_constant_scalings_multiplies() {
        let s = |q| PseudoGroupMap::new(Jet::constant(q, 3), Jet::zero(3), Jet::one(3)).unwrap();
        let c = compose_maps(&s(integer(3)), &s(ratio(1, 2))).unwrap();
        assert_eq!(c.u, Jet::constant(ratio(3, 2), 3));
        let t = PseudoGroupMap::new(ints(&[2, 1], 3), ints(&[1, 0, 1], 3), ints(&[1, -1], 3)).unwrap();
        let id = PseudoGroupMap::identity(3);
        assert_eq!(compose_maps(&id, &t).unwrap(), t);
        assert_eq!(compose_maps(&t, &id).unwrap(), t);
    }
}
