//! Series solutions, solution transport, and the second-kind reduction.

use num_traits::Zero;

use crate::equation::{rhs, AbelEquation, ChartedEquation, PseudoGroupMap};
use crate::error::{Error, Result};
use crate::series::{integer, Jet, Rational};

/// Solves `y' = field(y)`, `y(0) = y0` by order-by-order coefficient
/// matching. `field` must map a jet of order `order` to one of the same
/// order, with the coefficient of `xᵏ` depending only on `y₀..yₖ`.
pub fn series_solve_with<F>(order: usize, y0: Rational, field: F) -> Result<Jet>
where
    F: Fn(&Jet) -> Result<Jet>,
{
    let mut coeffs = vec![Rational::zero(); order + 1];
    coeffs[0] = y0;
    let mut valid = order + 1;
    for k in 0..order {
        let partial = Jet::new(coeffs.clone());
        let f = field(&partial)?;
        if f.order() != order {
            return Err(Error::OrderMismatch { left: order, right: f.order() });
        }
        valid = valid.min(f.valid_len() + 1);
        coeffs[k + 1] = f.coeff(k) / integer(k as i64 + 1);
    }
    Ok(Jet::new(coeffs).with_valid_len(valid))
}

/// Series solution of an equation in its original variable.
pub fn series_solve(eq: &ChartedEquation, y0: Rational, order: usize) -> Result<Jet> {
    if !eq.is_original() {
        return Err(Error::Domain("series_solve needs an equation in its original variable".into()));
    }
    if order > eq.order() {
        return Err(Error::Domain(format!(
            "requested order {order} exceeds equation order {}",
            eq.order()
        )));
    }
    let [c0, c1, c2, c3] = eq.eq.coefficients().clone().map(|c| c.truncate(order));
    let eq = AbelEquation::new(c0, c1, c2, c3)?;
    series_solve_with(order, y0, |y| rhs(&eq, y))
}

/// `Dy - (c0 + 3 c1 y + 3 c2 y² + c3 y³)`, zero when `y` solves `eq`.
pub fn ode_residual(eq: &ChartedEquation, y: &Jet) -> Result<Jet> {
    Ok(eq.derive(y) - eq.rhs(y)?)
}

/// The image `η = (y - ν)/u` of a solution of `eq` under `t`, as a function
/// of the base variable.
pub fn transport_solution(eq: &ChartedEquation, t: &PseudoGroupMap, y: &Jet) -> Result<Jet> {
    let t = t.in_chart(eq)?;
    y.checked_sub(&t.nu)?.checked_div(&t.u)
}

/// `dy/dx = (n0 + 3 n1 y + 3 n2 y² + n3 y³) / (b0 + b1 y)`.
///
/// The numerator is an arbitrary cubic; its leading coefficient may vanish.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SecondKindEquation {
    pub b0: Jet,
    pub b1: Jet,
    pub num: [Jet; 4],
}

impl SecondKindEquation {
    pub fn new(b0: Jet, b1: Jet, num: [Jet; 4]) -> Result<Self> {
        let order = b0.order();
        for j in num.iter().chain([&b1]) {
            if j.order() != order {
                return Err(Error::OrderMismatch { left: order, right: j.order() });
            }
        }
        if b1.constant_term().is_zero() {
            return Err(Error::ZeroLeading("b1"));
        }
        Ok(Self { b0, b1, num })
    }

    pub fn order(&self) -> usize {
        self.b0.order()
    }

    pub fn rhs(&self, y: &Jet) -> Result<Jet> {
        let [n0, n1, n2, n3] = &self.num;
        let cubic = n0 + y * (n1 * 3 + y * (n2 * 3 + y * n3));
        cubic.checked_div(&(&self.b0 + &self.b1 * y))
    }

    /// `z = 1/(b0 + b1 y)`.
    pub fn substitution(&self, y: &Jet) -> Result<Jet> {
        (&self.b0 + &self.b1 * y).recip()
    }

    pub fn series_solve(&self, y0: Rational, order: usize) -> Result<Jet> {
        if order != self.order() {
            return Err(Error::OrderMismatch { left: self.order(), right: order });
        }
        series_solve_with(order, y0, |y| self.rhs(y))
    }

    /// The first-kind equation satisfied by `z = 1/(b0 + b1 y)`.
    ///
    /// With `y = (1 - b0 z)/(b1 z)`, `dz/dx = -z²(b0' + b1' y) - b1 z³ P(y)`
    /// is a cubic in `z`; writing `L = 1/b1 - (b0/b1) z` gives `z y = L` and
    ///
    /// ```text
    /// dz/dx = -b0' z² - b1' z L - b1 (n0 z³ + 3 n1 z² L + 3 n2 z L² + n3 L³).
    /// ```
    pub fn reduce(&self) -> Result<AbelEquation> {
        let order = self.order();
        let w = self.b1.recip()?;
        let beta = self.b0.checked_div(&self.b1)?;
        // polynomials in z with jet coefficients, index = power of z
        let lin = ZCubic::from([w, -beta]);
        let z = ZCubic::monomial(1, order);
        let z2 = z.mul(&z);
        let z3 = z2.mul(&z);
        let l2 = lin.mul(&lin);
        let l3 = l2.mul(&lin);
        let [n0, n1, n2, n3] = &self.num;
        let numerator = z3
            .scale(n0)
            .add(&z2.mul(&lin).scale(&(n1 * 3)))
            .add(&z.mul(&l2).scale(&(n2 * 3)))
            .add(&l3.scale(n3));
        let db0 = self.b0.differentiate();
        let db1 = self.b1.differentiate();
        let out = z2
            .scale(&db0)
            .add(&z.mul(&lin).scale(&db1))
            .add(&numerator.scale(&self.b1))
            .scale(&Jet::constant(integer(-1), order));
        let third = Rational::new(1.into(), 3.into());
        let [d0, d1, d2, d3] = out.0;
        if d3.constant_term().is_zero() {
            return Err(Error::DegenerateLeadingCoefficient);
        }
        AbelEquation::new(d0, d1.scale(&third), d2.scale(&third), d3)
    }
}

pub fn reduce_second_kind(b0: Jet, b1: Jet, num: [Jet; 4]) -> Result<AbelEquation> {
    SecondKindEquation::new(b0, b1, num)?.reduce()
}

/// A polynomial of degree at most three in `z` with jet coefficients.
#[derive(Clone, Debug)]
struct ZCubic([Jet; 4]);

impl ZCubic {
    fn from(low: [Jet; 2]) -> Self {
        let order = low[0].order();
        let [a, b] = low;
        Self([a, b, Jet::zero(order), Jet::zero(order)])
    }

    fn monomial(power: usize, order: usize) -> Self {
        let mut c: [Jet; 4] = std::array::from_fn(|_| Jet::zero(order));
        c[power] = Jet::one(order);
        Self(c)
    }

    fn add(&self, other: &Self) -> Self {
        Self(std::array::from_fn(|k| &self.0[k] + &other.0[k]))
    }

    fn scale(&self, by: &Jet) -> Self {
        Self(std::array::from_fn(|k| &self.0[k] * by))
    }

    /// Product; every caller stays within degree three.
    fn mul(&self, other: &Self) -> Self {
        let order = self.0[0].order();
        let mut out: [Jet; 4] = std::array::from_fn(|_| Jet::zero(order));
        for i in 0..4 {
            for j in 0..4 {
                let term = &self.0[i] * &other.0[j];
                if i + j < 4 {
                    out[i + j] = &out[i + j] + &term;
                } else {
                    debug_assert!(term.is_zero(), "z-degree overflow");
                }
            }
        }
        Self(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::ratio;

    fn ints(c: &[i64], order: usize) -> Jet {
        Jet::from_integers(c, order)
    }

    fn abel(c: [&[i64]; 4], order: usize) -> ChartedEquation {
        AbelEquation::from_integers(c, order).unwrap().into()
    }

    #[test]
    fn pure_cubic_from_one() {
        let y = series_solve(&abel([&[], &[], &[], &[1]], 4), integer(1), 4).unwrap();
        // y = (1 - 2x)^(-1/2)
        let expected = Jet::from_rationals(&[integer(1), integer(1), ratio(3, 2), ratio(5, 2), ratio(35, 8)], 4);
        assert_eq!(y, expected);
    }

    #[test]
    fn first_coefficient_is_c0_at_origin() {
        let y = series_solve(&abel([&[1], &[], &[], &[1]], 6), integer(0), 6).unwrap();
        assert_eq!(y.coeff(0), &integer(0));
        assert_eq!(y.coeff(1), &integer(1));
        let residual = ode_residual(&abel([&[1], &[], &[], &[1]], 6), &y).unwrap();
        assert!(residual.agrees_with(&Jet::zero(6)));
    }

    #[test]
    fn equilibrium_stays_put() {
        let y = series_solve(&abel([&[], &[], &[], &[1]], 5), integer(0), 5).unwrap();
        assert!(y.is_zero());
    }

    #[test]
    fn solve_rejects_charted_or_too_long() {
        let eq = abel([&[1], &[], &[], &[1]], 3);
        assert!(series_solve(&eq, integer(0), 4).is_err());
        let charted = ChartedEquation::new(eq.eq.clone(), ints(&[2], 3)).unwrap();
        assert!(series_solve(&charted, integer(0), 3).is_err());
    }

    #[test]
    fn reduction_examples() {
        let order = 4;
        let cubic = [ints(&[], order), ints(&[], order), ints(&[], order), ints(&[1], order)];
        let out = reduce_second_kind(Jet::one(order), Jet::one(order), cubic).unwrap();
        assert_eq!(out, AbelEquation::from_integers([&[-1], &[1], &[-1], &[1]], order).unwrap());

        let constant = [ints(&[1], order), ints(&[], order), ints(&[], order), ints(&[], order)];
        let out = reduce_second_kind(Jet::one(order), Jet::one(order), constant).unwrap();
        assert_eq!(out, AbelEquation::from_integers([&[], &[], &[], &[-1]], order).unwrap());
    }

    #[test]
    fn reduction_rejects_degenerate_inputs() {
        let order = 3;
        let cubic = || [ints(&[], order), ints(&[], order), ints(&[], order), ints(&[1], order)];
        assert_eq!(
            reduce_second_kind(Jet::one(order), Jet::zero(order), cubic()).unwrap_err(),
            Error::ZeroLeading("b1")
        );
        // b1 = 1, b0 = 0, P = y^2: z³ y² b1 = z, so no cubic term survives
        let quad = [ints(&[], order), ints(&[], order), ints(&[1], order), ints(&[], order)];
        let err = reduce_second_kind(Jet::zero(order), Jet::one(order), quad.map(|j| j.scale(&ratio(1, 3))));
        assert_eq!(err.unwrap_err(), Error::DegenerateLeadingCoefficient);
    }

    #[test]
    fn reduction_transports_solutions() {
        let order = 8;
        let second = SecondKindEquation::new(
            ints(&[2, 1], order),
            ints(&[1, 0, -1], order),
            [ints(&[1, 1], order), ints(&[0, 1], order), ints(&[1], order), ints(&[1, 0, 1], order)],
        )
        .unwrap();
        let first: ChartedEquation = second.reduce().unwrap().into();
        let y = second.series_solve(integer(1), order).unwrap();
        let z = second.substitution(&y).unwrap();
        let residual = ode_residual(&first, &z).unwrap();
        assert!(residual.agrees_with(&Jet::zero(order)), "{residual}");
        assert!(residual.valid_order().unwrap() >= order - 1);
    }
}
