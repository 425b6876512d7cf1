//! Weight and degree gradings on coefficient monomials.
//!
//! The generator `dᵏcᵢ/dxᵏ` has weight `i + k` and degree `1 + k`. They are
//! read off from two one-parameter scaling subgroups: under
//! `(x, y) = (λˢ ξ, λʳ η)` the generator picks up `λ^((k+1)s + r(i-1))`, which
//! is `λ^(s·degree + r·(weight - degree))` for a monomial.

use num_traits::Zero;

use crate::equation::{ChartedEquation, PseudoGroupMap};
use crate::error::{Error, Result};
use crate::series::rational::rational_powi;
use crate::series::{Jet, Rational};

/// One factor `dᵏcᵢ/dxᵏ`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Generator {
    pub index: u8,
    pub derivative: u32,
}

impl Generator {
    pub fn new(index: u8, derivative: u32) -> Self {
        assert!(index <= 3, "coefficient index is 0..=3");
        Self { index, derivative }
    }

    pub fn weight(self) -> i64 {
        i64::from(self.index) + i64::from(self.derivative)
    }

    pub fn degree(self) -> i64 {
        1 + i64::from(self.derivative)
    }
}

/// A product of generators (a multiset, so order does not matter).
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct MonomialGrade {
    factors: Vec<Generator>,
}

impl MonomialGrade {
    pub fn new(factors: impl IntoIterator<Item = (u8, u32)>) -> Self {
        let mut factors: Vec<Generator> = factors.into_iter().map(|(i, k)| Generator::new(i, k)).collect();
        factors.sort();
        Self { factors }
    }

    pub fn factors(&self) -> &[Generator] {
        &self.factors
    }

    pub fn weight(&self) -> i64 {
        weight_of(self)
    }

    pub fn degree(&self) -> i64 {
        degree_of(self)
    }

    /// Exponent of `λ` picked up under `(x, y) = (λˢ ξ, λʳ η)`.
    pub fn scaling_exponent(&self, s: i32, r: i32) -> i64 {
        let d = self.degree();
        i64::from(s) * d + i64::from(r) * (self.weight() - d)
    }
}

pub fn weight_of(m: &MonomialGrade) -> i64 {
    m.factors.iter().map(|g| g.weight()).sum()
}

pub fn degree_of(m: &MonomialGrade) -> i64 {
    m.factors.iter().map(|g| g.degree()).sum()
}

/// The five monomials of `s3`.
pub fn s3_monomials() -> [MonomialGrade; 5] {
    [
        MonomialGrade::new([(3, 0), (2, 1)]),
        MonomialGrade::new([(2, 0), (3, 1)]),
        MonomialGrade::new([(1, 0), (2, 0), (3, 0)]),
        MonomialGrade::new([(2, 0), (2, 0), (2, 0)]),
        MonomialGrade::new([(0, 0), (3, 0), (3, 0)]),
    ]
}

/// `(weight, degree)` of `s_{2n+1}`.
pub fn hierarchy_grade(n: usize) -> (i64, i64) {
    let n = n as i64;
    (4 * n + 2, 2 * n + 1)
}

/// The map `(x, y) = (λˢ ξ, λʳ η)`, i.e. `u = λʳ`, `ν = 0`, `μ = λ^(-s)`.
pub fn scaling_map(lambda: &Rational, s: i32, r: i32, order: usize) -> Result<PseudoGroupMap> {
    if lambda.is_zero() {
        return Err(Error::Domain("scaling parameter must be nonzero".into()));
    }
    PseudoGroupMap::new(
        Jet::constant(rational_powi(lambda, r), order),
        Jet::zero(order),
        Jet::constant(rational_powi(lambda, -s), order),
    )
}

/// `Dᵏ cᵢ` in the chart of `eq`.
pub fn coefficient_derivative(eq: &ChartedEquation, g: Generator) -> Jet {
    let mut out = eq.eq.coefficients()[usize::from(g.index)].clone();
    for _ in 0..g.derivative {
        out = eq.derive(&out);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equation::{transform, AbelEquation};
    use crate::series::integer;

    #[test]
    fn single_factor_and_empty() {
        let m = MonomialGrade::new([(2, 1)]);
        assert_eq!((m.weight(), m.degree()), (3, 2));
        let e = MonomialGrade::default();
        assert_eq!((weight_of(&e), degree_of(&e)), (0, 0));
    }

    #[test]
    fn s3_is_homogeneous_of_weight_six_degree_three() {
        for m in s3_monomials() {
            assert_eq!((m.weight(), m.degree()), (6, 3), "{m:?}");
        }
        assert_eq!(hierarchy_grade(1), (6, 3));
    }

    #[test]
    fn factor_order_is_irrelevant() {
        assert_eq!(MonomialGrade::new([(0, 0), (3, 0), (3, 0)]), MonomialGrade::new([(3, 0), (0, 0), (3, 0)]));
    }

    #[test]
    fn unit_scaling_is_identity() {
        assert_eq!(scaling_map(&integer(1), 1, 1, 4).unwrap(), PseudoGroupMap::identity(4));
        assert!(scaling_map(&integer(0), 1, 1, 4).is_err());
    }

    #[test]
    fn generator_multipliers_match_weight_and_degree() {
        let eq: ChartedEquation =
            AbelEquation::from_integers([&[1, 2, 0, 1], &[0, 1, -1], &[2, 0, 3], &[1, 1, 0, -2]], 8)
                .unwrap()
                .into();
        for (lambda, s, r) in [(integer(2), 1, 1), (integer(3), 1, 0), (integer(-2), 2, -1)] {
            let t = scaling_map(&lambda, s, r, 8).unwrap();
            let out = transform(&eq, &t).unwrap();
            for i in 0..4u8 {
                for k in 0..3u32 {
                    let g = Generator::new(i, k);
                    let m = MonomialGrade::new([(i, k)]);
                    let factor = rational_powi(&lambda, m.scaling_exponent(s, r) as i32);
                    let lhs = coefficient_derivative(&out, g);
                    let rhs = coefficient_derivative(&eq, g).scale(&factor);
                    assert!(lhs.agrees_with(&rhs), "i={i} k={k} s={s} r={r}");
                }
            }
        }
    }
}
