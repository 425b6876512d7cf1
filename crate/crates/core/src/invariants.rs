//! Liouville's relative invariants, the affine connection, and the covariant
//! derivative.
//!
//! All derivatives use the chart derivation of the equation, so the same
//! formulas apply to an original equation and to a transformed one.

use crate::equation::ChartedEquation;
use crate::error::{Error, Result};
use crate::series::{integer, Jet};

/// `s3 = c3 Dc2 - c2 Dc3 - 3 c1 c2 c3 + 2 c2³ + c0 c3²`.
pub fn s3(eq: &ChartedEquation) -> Jet {
    let [c0, c1, c2, c3] = eq.eq.coefficients();
    let dc2 = eq.derive(c2);
    let dc3 = eq.derive(c3);
    c3 * &dc2 - c2 * &dc3 - c1 * c2 * c3 * 3 + c2 * c2 * c2 * 2 + c0 * c3 * c3
}

/// `Dc3 + 3 (c1 c3 - c2²)`, the numerator of the connection.
pub fn connection_numerator(eq: &ChartedEquation) -> Jet {
    let [_, c1, c2, c3] = eq.eq.coefficients();
    eq.derive(c3) + (c1 * c3 - c2 * c2) * 3
}

/// `[s3, s5, ..., s_{2 n_max + 1}]` via
/// `s_{2n+1} = c3 D s_{2n-1} - (2n-1) s_{2n-1} (Dc3 + 3(c1 c3 - c2²))`.
pub fn s_hierarchy(eq: &ChartedEquation, n_max: usize) -> Result<Vec<Jet>> {
    if n_max == 0 {
        return Err(Error::Domain("the hierarchy starts at n = 1".into()));
    }
    let c3 = eq.eq.c3();
    let bracket = connection_numerator(eq);
    let mut out = vec![s3(eq)];
    for n in 2..=n_max {
        let prev = out.last().unwrap();
        let weight = 2 * n as i64 - 1;
        let next = c3 * &eq.derive(prev) - prev * &bracket * weight;
        out.push(next);
    }
    Ok(out)
}

/// `r = (Dc3 + 3(c1 c3 - c2²)) / c3`.
pub fn connection(eq: &ChartedEquation) -> Jet {
    connection_numerator(eq)
        .checked_div(eq.eq.c3())
        .expect("c3 has a nonzero constant term")
}

/// `∇_n φ = Dφ - n r φ`, for any integer `n`.
pub fn covariant_derivative(eq: &ChartedEquation, phi: &Jet, n: i64) -> Jet {
    let r = connection(eq);
    eq.derive(phi) - (&r * phi).scale(&integer(n))
}

/// `c3 ∇_{2n-1}`, which sends `s_{2n-1}` to `s_{2n+1}`.
pub fn nabla_raise(eq: &ChartedEquation, s_prev: &Jet, n: i64) -> Jet {
    eq.eq.c3() * &covariant_derivative(eq, s_prev, 2 * n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equation::AbelEquation;

    fn abel(c: [&[i64]; 4], order: usize) -> ChartedEquation {
        AbelEquation::from_integers(c, order).unwrap().into()
    }

    fn ints(c: &[i64], order: usize) -> Jet {
        Jet::from_integers(c, order)
    }

    #[test]
    fn s3_examples() {
        assert_eq!(s3(&abel([&[1], &[], &[], &[1]], 4)), Jet::one(4));
        assert_eq!(s3(&abel([&[], &[], &[0, 1], &[1]], 6)), ints(&[1, 0, 0, 2], 6));
        assert_eq!(s3(&abel([&[7], &[], &[], &[1]], 4)), Jet::constant(integer(7), 4));
    }

    #[test]
    fn s5_examples() {
        let h = s_hierarchy(&abel([&[1], &[], &[], &[1]], 5), 3).unwrap();
        assert!(h[1].is_zero() && h[2].is_zero());
        let h = s_hierarchy(&abel([&[], &[], &[0, 1], &[1]], 8), 2).unwrap();
        assert_eq!(h[1], ints(&[0, 0, 15, 0, 0, 18], 8));
        assert!(s_hierarchy(&abel([&[1], &[], &[], &[1]], 5), 0).is_err());
    }

    #[test]
    fn connection_examples() {
        assert!(connection(&abel([&[4], &[], &[], &[1]], 4)).is_zero());
        assert_eq!(connection(&abel([&[], &[], &[0, 1], &[1]], 4)), ints(&[0, 0, -3], 4));
        assert_eq!(connection(&abel([&[], &[1], &[], &[1]], 4)), Jet::constant(integer(3), 4));
    }

    #[test]
    fn covariant_derivative_examples() {
        let eq = abel([&[], &[], &[0, 1], &[1]], 8);
        let phi = ints(&[1, 2, 3], 8);
        assert_eq!(covariant_derivative(&eq, &phi, 0), eq.derive(&phi));
        let s = s3(&eq);
        assert_eq!(covariant_derivative(&eq, &s, 3), ints(&[0, 0, 15, 0, 0, 18], 8));
        assert!(covariant_derivative(&eq, &Jet::zero(8), 5).is_zero());
    }

    #[test]
    fn nabla_raise_examples() {
        let eq = abel([&[], &[], &[0, 1], &[1]], 8);
        let h = s_hierarchy(&eq, 2).unwrap();
        assert_eq!(nabla_raise(&eq, &h[0], 2), h[1]);
        assert!(nabla_raise(&eq, &Jet::zero(8), 2).is_zero());
        let flat = abel([&[1], &[], &[], &[1]], 5);
        assert!(nabla_raise(&flat, &Jet::one(5), 2).is_zero());
    }

    #[test]
    fn each_derivative_costs_one_order_on_series() {
        let eq: ChartedEquation = AbelEquation::new(
            ints(&[1, 1], 6).as_series(),
            ints(&[0, 2], 6).as_series(),
            ints(&[1], 6).as_series(),
            ints(&[1, 0, 1], 6).as_series(),
        )
        .unwrap()
        .into();
        let h = s_hierarchy(&eq, 3).unwrap();
        let orders: Vec<_> = h.iter().map(Jet::valid_order).collect();
        assert_eq!(orders, vec![Some(5), Some(4), Some(3)]);
    }
}
