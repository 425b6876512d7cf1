//! Truncated Taylor series at the origin with exact rational coefficients.
//!
//! A [`Jet`] of order `N` stores the coefficients of `1, x, ..., x^N`.
//! Besides the coefficients it carries two pieces of bookkeeping:
//!
//! * a *valid-order watermark*: how many leading coefficients are trusted.
//!   Differentiation moves the watermark down by one because the coefficient
//!   of `x^N` in the derivative would need the unknown `x^(N+1)` term; the
//!   slot is padded with zero instead. Binary operations take the minimum of
//!   their inputs.
//! * a *polynomial* flag: the jet is known to be an exact polynomial of degree
//!   at most `N`, so nothing was lost to truncation. Polynomials keep their
//!   full validity under differentiation.
//!
//! Equality via `==` compares stored coefficients. [`Jet::agrees_with`]
//! compares only up to the common valid order and is what identity checks use.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::{One, Zero};

use super::rational::{integer, Rational, RationalText};
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct Jet {
    coeffs: Vec<Rational>,
    valid: usize,
    polynomial: bool,
}

impl PartialEq for Jet {
    fn eq(&self, other: &Self) -> bool {
        self.coeffs == other.coeffs
    }
}

impl Eq for Jet {}

impl Jet {
    /// A truncated series: the coefficients are the first `len` terms of some
    /// unknown analytic function.
    ///
    /// Panics if `coeffs` is empty.
    pub fn new(coeffs: Vec<Rational>) -> Self {
        assert!(!coeffs.is_empty(), "a jet needs at least one coefficient");
        let valid = coeffs.len();
        Self { coeffs, valid, polynomial: false }
    }

    /// An exact polynomial stored at order `coeffs.len() - 1`.
    pub fn polynomial(coeffs: Vec<Rational>) -> Self {
        Self { polynomial: true, ..Self::new(coeffs) }
    }

    /// Exact polynomial from integer coefficients, zero-padded to `order`.
    pub fn from_integers(coeffs: &[i64], order: usize) -> Self {
        assert!(coeffs.len() <= order + 1, "polynomial degree exceeds jet order");
        let mut c: Vec<Rational> = coeffs.iter().map(|&n| integer(n)).collect();
        c.resize(order + 1, Rational::zero());
        Self::polynomial(c)
    }

    /// Exact polynomial from rational coefficients, zero-padded to `order`.
    pub fn from_rationals(coeffs: &[Rational], order: usize) -> Self {
        assert!(coeffs.len() <= order + 1, "polynomial degree exceeds jet order");
        let mut c = coeffs.to_vec();
        c.resize(order + 1, Rational::zero());
        Self::polynomial(c)
    }

    pub fn zero(order: usize) -> Self {
        Self::polynomial(vec![Rational::zero(); order + 1])
    }

    pub fn one(order: usize) -> Self {
        Self::constant(Rational::one(), order)
    }

    pub fn constant(q: Rational, order: usize) -> Self {
        let mut c = vec![Rational::zero(); order + 1];
        c[0] = q;
        Self::polynomial(c)
    }

    /// The identity function `x`. Requires `order >= 1`.
    pub fn variable(order: usize) -> Self {
        assert!(order >= 1, "the variable needs order >= 1");
        let mut c = vec![Rational::zero(); order + 1];
        c[1] = Rational::one();
        Self::polynomial(c)
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn coeff(&self, k: usize) -> &Rational {
        &self.coeffs[k]
    }

    pub fn constant_term(&self) -> &Rational {
        &self.coeffs[0]
    }

    /// Highest trusted power, `None` once every coefficient is suspect.
    pub fn valid_order(&self) -> Option<usize> {
        self.valid.checked_sub(1)
    }

    /// Number of trusted leading coefficients.
    pub fn valid_len(&self) -> usize {
        self.valid
    }

    pub fn is_polynomial(&self) -> bool {
        self.polynomial
    }

    /// Highest power with a nonzero coefficient.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.iter().rposition(|c| !c.is_zero())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Zero::is_zero)
    }

    /// Same coefficients, marked as a truncated series.
    pub fn as_series(mut self) -> Self {
        self.polynomial = false;
        self
    }

    /// Caps the watermark at `valid_len` trusted coefficients.
    pub fn with_valid_len(mut self, valid_len: usize) -> Self {
        if valid_len < self.valid {
            self.valid = valid_len;
            self.polynomial = false;
        }
        self
    }

    /// Drops every coefficient above `order`.
    pub fn truncate(&self, order: usize) -> Self {
        if order >= self.order() {
            return self.clone();
        }
        let lost = self.coeffs[order + 1..].iter().any(|c| !c.is_zero());
        Self {
            coeffs: self.coeffs[..=order].to_vec(),
            valid: self.valid.min(order + 1),
            polynomial: self.polynomial && !lost,
        }
    }

    /// Zero-pads to a higher order. A truncated series gains no validity.
    pub fn extend(&self, order: usize) -> Self {
        let mut out = self.clone();
        if order > self.order() {
            out.coeffs.resize(order + 1, Rational::zero());
            if out.polynomial {
                out.valid = order + 1;
            }
        }
        out
    }

    /// Index of the first coefficient (within the common valid range) where
    /// the two jets differ.
    pub fn first_mismatch(&self, other: &Jet) -> Option<usize> {
        let n = self.valid.min(other.valid).min(self.coeffs.len()).min(other.coeffs.len());
        (0..n).find(|&k| self.coeffs[k] != other.coeffs[k])
    }

    /// Equality up to the common valid order.
    pub fn agrees_with(&self, other: &Jet) -> bool {
        self.first_mismatch(other).is_none()
    }

    fn check_order(&self, other: &Jet) -> Result<()> {
        if self.order() == other.order() {
            Ok(())
        } else {
            Err(Error::OrderMismatch { left: self.order(), right: other.order() })
        }
    }

    fn zip_with(&self, other: &Jet, f: impl Fn(&Rational, &Rational) -> Rational) -> Result<Jet> {
        self.check_order(other)?;
        Ok(Jet {
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| f(a, b)).collect(),
            valid: self.valid.min(other.valid),
            polynomial: self.polynomial && other.polynomial,
        })
    }

    pub fn checked_add(&self, other: &Jet) -> Result<Jet> {
        self.zip_with(other, |a, b| a + b)
    }

    pub fn checked_sub(&self, other: &Jet) -> Result<Jet> {
        self.zip_with(other, |a, b| a - b)
    }

    pub fn scale(&self, q: &Rational) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().map(|c| c * q).collect(),
            valid: self.valid,
            polynomial: self.polynomial,
        }
    }

    /// Cauchy product truncated at the common order.
    pub fn checked_mul(&self, other: &Jet) -> Result<Jet> {
        self.check_order(other)?;
        let n = self.coeffs.len();
        let mut coeffs = vec![Rational::zero(); n];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..n - i].iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        let fits = match (self.degree(), other.degree()) {
            (Some(p), Some(q)) => p + q < n,
            _ => true,
        };
        Ok(Jet {
            coeffs,
            valid: self.valid.min(other.valid),
            polynomial: self.polynomial && other.polynomial && fits,
        })
    }

    /// Series quotient `self / divisor`; the divisor needs a nonzero constant
    /// term.
    pub fn checked_div(&self, divisor: &Jet) -> Result<Jet> {
        self.check_order(divisor)?;
        let b0 = divisor.constant_term();
        if b0.is_zero() {
            return Err(Error::ZeroConstantTerm);
        }
        let b0_inv = b0.recip();
        let n = self.coeffs.len();
        let mut q: Vec<Rational> = Vec::with_capacity(n);
        for k in 0..n {
            let mut acc = self.coeffs[k].clone();
            for j in 1..=k {
                let b = &divisor.coeffs[j];
                if !b.is_zero() {
                    acc -= b * &q[k - j];
                }
            }
            q.push(acc * &b0_inv);
        }
        let mut out = Jet {
            coeffs: q,
            valid: self.valid.min(divisor.valid),
            polynomial: false,
        };
        if self.polynomial && divisor.polynomial {
            // The quotient is a polynomial exactly when it divides evenly
            // without anything spilling past order N.
            let full = full_product(&out.coeffs, &divisor.coeffs);
            let even = full.iter().enumerate().all(|(k, c)| match self.coeffs.get(k) {
                Some(a) => a == c,
                None => c.is_zero(),
            });
            out.polynomial = even;
        }
        Ok(out)
    }

    /// `1 / self`.
    pub fn recip(&self) -> Result<Jet> {
        Jet::one(self.order()).checked_div(self)
    }

    pub fn pow(&self, exp: u32) -> Jet {
        let mut acc = Jet::one(self.order()).with_valid_len(self.valid);
        acc.polynomial = self.polynomial || exp == 0;
        let mut base = self.clone();
        let mut e = exp;
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Integer power with a possibly negative exponent.
    pub fn powi(&self, exp: i32) -> Result<Jet> {
        let p = self.pow(exp.unsigned_abs());
        if exp < 0 {
            p.recip()
        } else {
            Ok(p)
        }
    }

    /// Termwise derivative. The result keeps order `N`; its top coefficient
    /// is a zero pad and, unless `self` is a polynomial, is not trusted.
    pub fn differentiate(&self) -> Jet {
        let n = self.coeffs.len();
        let mut coeffs: Vec<Rational> = (1..n).map(|k| &self.coeffs[k] * integer(k as i64)).collect();
        coeffs.push(Rational::zero());
        let valid = if self.polynomial { n } else { self.valid.saturating_sub(1) };
        Jet { coeffs, valid, polynomial: self.polynomial }
    }

    /// Termwise antiderivative vanishing at the origin.
    pub fn integrate(&self) -> Jet {
        let n = self.coeffs.len();
        let mut coeffs = Vec::with_capacity(n);
        coeffs.push(Rational::zero());
        for k in 0..n - 1 {
            coeffs.push(&self.coeffs[k] / integer(k as i64 + 1));
        }
        let spilled = !self.coeffs[n - 1].is_zero();
        let polynomial = self.polynomial && !spilled;
        let valid = if polynomial { n } else { (self.valid + 1).min(n) };
        Jet { coeffs, valid, polynomial }
    }

    /// `exp(self)`; the argument must vanish at the origin so the result stays
    /// rational.
    pub fn exp(&self) -> Result<Jet> {
        if !self.constant_term().is_zero() {
            return Err(Error::BadConstantTerm { op: "exp", expected: "0" });
        }
        let n = self.coeffs.len();
        // E' = a' E  =>  k e_k = sum_{j=1..k} j a_j e_{k-j}
        let mut e: Vec<Rational> = Vec::with_capacity(n);
        e.push(Rational::one());
        for k in 1..n {
            let mut acc = Rational::zero();
            for j in 1..=k {
                let a = &self.coeffs[j];
                if !a.is_zero() {
                    acc += a * integer(j as i64) * &e[k - j];
                }
            }
            e.push(acc / integer(k as i64));
        }
        Ok(Jet { coeffs: e, valid: self.valid, polynomial: self.is_zero() && self.polynomial })
    }

    /// `log(self)`; the argument must have constant term one.
    pub fn log(&self) -> Result<Jet> {
        if !self.constant_term().is_one() {
            return Err(Error::BadConstantTerm { op: "log", expected: "1" });
        }
        let n = self.coeffs.len();
        // a L' = a'  =>  k l_k = k a_k - sum_{j=1..k-1} j l_j a_{k-j}
        let mut l: Vec<Rational> = Vec::with_capacity(n);
        l.push(Rational::zero());
        for k in 1..n {
            let mut acc = &self.coeffs[k] * integer(k as i64);
            for j in 1..k {
                let a = &self.coeffs[k - j];
                if !a.is_zero() {
                    acc -= &l[j] * integer(j as i64) * a;
                }
            }
            l.push(acc / integer(k as i64));
        }
        let trivial = self.polynomial && self.degree() == Some(0);
        Ok(Jet { coeffs: l, valid: self.valid, polynomial: trivial })
    }

    /// `self ∘ inner`; the inner series must vanish at the origin.
    pub fn compose(&self, inner: &Jet) -> Result<Jet> {
        self.check_order(inner)?;
        if !inner.constant_term().is_zero() {
            return Err(Error::NonzeroInnerConstant);
        }
        let order = self.order();
        // Horner: p0 + q (p1 + q (p2 + ...)).
        let mut acc = Jet::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = &acc * inner;
            acc.coeffs[0] += &self.coeffs[k];
        }
        let fits = match (self.degree(), inner.degree()) {
            (Some(p), Some(q)) => p * q <= order,
            _ => true,
        };
        acc.valid = self.valid.min(inner.valid);
        acc.polynomial = self.polynomial && inner.polynomial && fits;
        Ok(acc)
    }

    /// Compositional inverse by Lagrange inversion:
    /// `[x^k] r = (1/k) [t^(k-1)] (t / q(t))^k`.
    pub fn revert(&self) -> Result<Jet> {
        let order = self.order();
        if order == 0 || !self.constant_term().is_zero() || self.coeffs[1].is_zero() {
            return Err(Error::NotInvertible);
        }
        // q(t)/t as a jet of order N-1, then its reciprocal.
        let shifted = Jet::new(self.coeffs[1..].to_vec());
        let ratio = shifted.recip()?;
        let mut coeffs = vec![Rational::zero(); order + 1];
        let mut power = Jet::one(order - 1);
        for k in 1..=order {
            power = &power * &ratio;
            coeffs[k] = &power.coeffs[k - 1] / integer(k as i64);
        }
        Ok(Jet {
            coeffs,
            valid: self.valid,
            polynomial: self.polynomial && self.degree() == Some(1),
        })
    }

    /// Evaluates the stored polynomial at `x0`.
    pub fn eval(&self, x0: &Rational) -> Rational {
        self.coeffs
            .iter()
            .rev()
            .fold(Rational::zero(), |acc, c| acc * x0 + c)
    }

    /// `self(a + b x)` for an exact polynomial. With `a = 0` this is a plain
    /// rescaling and is fine on truncated series too.
    pub fn substitute_affine(&self, a: &Rational, b: &Rational) -> Result<Jet> {
        let order = self.order();
        if a.is_zero() {
            let mut scale = Rational::one();
            let coeffs = self
                .coeffs
                .iter()
                .map(|c| {
                    let out = c * &scale;
                    scale *= b;
                    out
                })
                .collect();
            return Ok(Jet { coeffs, valid: self.valid, polynomial: self.polynomial });
        }
        if !self.polynomial {
            return Err(Error::NonPolynomialShift);
        }
        let mut lin = vec![Rational::zero(); order + 1];
        lin[0] = a.clone();
        if order >= 1 {
            lin[1] = b.clone();
        }
        let lin = Jet::polynomial(lin);
        let mut acc = Jet::constant(self.coeffs[order].clone(), order);
        for k in (0..order).rev() {
            acc = &acc * &lin;
            acc.coeffs[0] += &self.coeffs[k];
        }
        acc.polynomial = true;
        acc.valid = order + 1;
        Ok(acc)
    }
}

fn full_product(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            if !y.is_zero() {
                out[i + j] += x * y;
            }
        }
    }
    out
}

macro_rules! forward_binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl $trait<&Jet> for &Jet {
            type Output = Jet;
            /// Panics if the orders differ; use the `checked_*` form otherwise.
            fn $method(self, rhs: &Jet) -> Jet {
                self.$checked(rhs).expect("jet order mismatch")
            }
        }
        impl $trait<Jet> for Jet {
            type Output = Jet;
            fn $method(self, rhs: Jet) -> Jet {
                (&self).$method(&rhs)
            }
        }
        impl $trait<&Jet> for Jet {
            type Output = Jet;
            fn $method(self, rhs: &Jet) -> Jet {
                (&self).$method(rhs)
            }
        }
        impl $trait<Jet> for &Jet {
            type Output = Jet;
            fn $method(self, rhs: Jet) -> Jet {
                self.$method(&rhs)
            }
        }
    };
}

forward_binop!(Add, add, checked_add);
forward_binop!(Sub, sub, checked_sub);
forward_binop!(Mul, mul, checked_mul);

impl Mul<&Rational> for &Jet {
    type Output = Jet;
    fn mul(self, rhs: &Rational) -> Jet {
        self.scale(rhs)
    }
}

impl Mul<i64> for &Jet {
    type Output = Jet;
    fn mul(self, rhs: i64) -> Jet {
        self.scale(&integer(rhs))
    }
}

impl Mul<i64> for Jet {
    type Output = Jet;
    fn mul(self, rhs: i64) -> Jet {
        self.scale(&integer(rhs))
    }
}

impl Neg for &Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        Jet {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
            valid: self.valid,
            polynomial: self.polynomial,
        }
    }
}

impl Neg for Jet {
    type Output = Jet;
    fn neg(self) -> Jet {
        -&self
    }
}

fn superscript(n: usize) -> String {
    const DIGITS: [char; 10] = ['⁰', '¹', '²', '³', '⁴', '⁵', '⁶', '⁷', '⁸', '⁹'];
    n.to_string().chars().map(|c| DIGITS[c.to_digit(10).unwrap() as usize]).collect()
}

/// Human-readable form, e.g. `1 + 2x³` or `x - (1/2)x² + O(x³)`.
impl fmt::Display for Jet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        let shown = if self.polynomial { self.coeffs.len() } else { self.valid };
        for (k, c) in self.coeffs.iter().enumerate().take(shown) {
            if c.is_zero() {
                continue;
            }
            let negative = c < &Rational::zero();
            let magnitude = if negative { -c } else { c.clone() };
            if first {
                if negative {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if negative { '-' } else { '+' })?;
            }
            first = false;
            let mag = RationalText(&magnitude).to_string();
            match k {
                0 => write!(f, "{mag}")?,
                _ => {
                    if !magnitude.is_one() {
                        if magnitude.denom().is_one() {
                            write!(f, "{mag}")?;
                        } else {
                            write!(f, "({mag})")?;
                        }
                    }
                    write!(f, "x")?;
                    if k > 1 {
                        write!(f, "{}", superscript(k))?;
                    }
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        if !self.polynomial {
            write!(f, " + O(x{})", superscript(self.valid))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::series::rational::ratio;

    fn ints(c: &[i64], order: usize) -> Jet {
        Jet::from_integers(c, order)
    }

    #[test]
    fn add_sub_scale() {
        assert_eq!(ints(&[1, 1], 3) + ints(&[1, -1], 3), ints(&[2], 3));
        assert_eq!(ints(&[0, 0, 1], 3).scale(&ratio(3, 2)), Jet::from_rationals(&[integer(0), integer(0), ratio(3, 2)], 3));
        let a = ints(&[4, -2, 7], 4);
        assert!((&a + &(-&a)).is_zero());
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let err = ints(&[1], 2).checked_add(&ints(&[1], 3)).unwrap_err();
        assert_eq!(err, Error::OrderMismatch { left: 2, right: 3 });
        assert!(ints(&[1], 2).checked_mul(&ints(&[1], 3)).is_err());
    }

    #[test]
    fn mul_truncates() {
        assert_eq!(ints(&[1, 1], 2) * ints(&[1, -1], 2), ints(&[1, 0, -1], 2));
        let x1 = Jet::variable(1);
        let sq = &x1 * &x1;
        assert!(sq.is_zero());
        assert!(!sq.is_polynomial());
        assert_eq!(ints(&[1, 1, 1], 4) * Jet::one(4), ints(&[1, 1, 1], 4));
    }

    #[test]
    fn division() {
        let geo = Jet::one(5).checked_div(&ints(&[1, -1], 5)).unwrap();
        assert_eq!(geo, ints(&[1, 1, 1, 1, 1, 1], 5));
        assert!(!geo.is_polynomial());
        let a = ints(&[3, 1, 4], 5);
        assert_eq!(a.checked_div(&a).unwrap(), Jet::one(5));
        let q = ints(&[1, 0, -1], 4).checked_div(&ints(&[1, 1], 4)).unwrap();
        assert_eq!(q, ints(&[1, -1], 4));
        assert!(q.is_polynomial());
        assert_eq!(&q * &ints(&[1, 1], 4), ints(&[1, 0, -1], 4));
        assert_eq!(ints(&[1], 3).checked_div(&ints(&[0, 1], 3)).unwrap_err(), Error::ZeroConstantTerm);
    }

    #[test]
    fn differentiate_and_integrate() {
        assert_eq!(ints(&[0, 0, 1], 3).differentiate(), ints(&[0, 2], 3));
        assert!(Jet::constant(ratio(5, 7), 3).differentiate().is_zero());
        let a = Jet::from_rationals(&[integer(1), integer(3), ratio(9, 2)], 4);
        assert_eq!(a.differentiate(), ints(&[3, 9], 4));
        assert_eq!(ints(&[1, 2], 3).integrate(), ints(&[0, 1, 1], 3));
        assert!(Jet::zero(3).integrate().is_zero());
    }

    #[test]
    fn watermark_moves_with_calculus() {
        let s = ints(&[1, 2, 3, 4], 3).as_series();
        assert_eq!(s.valid_order(), Some(3));
        let d = s.differentiate();
        assert_eq!(d.valid_order(), Some(2));
        assert_eq!(d.differentiate().valid_order(), Some(1));
        assert_eq!(d.integrate().valid_order(), Some(3));
        // polynomials lose nothing
        let p = ints(&[1, 2, 3], 3);
        assert_eq!(p.differentiate().valid_order(), Some(3));
        // a jet with every order spent
        let mut z = Jet::variable(1).as_series();
        z = z.differentiate().differentiate();
        assert_eq!(z.valid_order(), None);
    }

    #[test]
    fn agreement_ignores_untrusted_tail() {
        let a = ints(&[1, 2, 3], 2).as_series().with_valid_len(2);
        let b = ints(&[1, 2, 99], 2);
        assert!(a.agrees_with(&b));
        assert_ne!(a, b);
        let c = ints(&[1, 5, 3], 2);
        assert_eq!(a.first_mismatch(&c), Some(1));
    }

    #[test]
    fn exp_and_log() {
        let e = Jet::variable(3).exp().unwrap();
        assert_eq!(e, Jet::from_rationals(&[integer(1), integer(1), ratio(1, 2), ratio(1, 6)], 3));
        assert_eq!(Jet::zero(4).exp().unwrap(), Jet::one(4));
        let l = ints(&[1, 1], 3).log().unwrap();
        assert_eq!(l, Jet::from_rationals(&[integer(0), integer(1), ratio(-1, 2), ratio(1, 3)], 3));
        assert_eq!(l.exp().unwrap(), ints(&[1, 1], 3));
        assert!(matches!(ints(&[1], 2).exp(), Err(Error::BadConstantTerm { .. })));
        assert!(matches!(ints(&[2], 2).log(), Err(Error::BadConstantTerm { .. })));
    }

    #[test]
    fn composition() {
        let p = ints(&[0, 0, 1], 4);
        let q = ints(&[0, 1, 1], 4);
        let r = p.compose(&q).unwrap();
        assert_eq!(r, ints(&[0, 0, 1, 2, 1], 4));
        assert!(r.is_polynomial());
        let any = ints(&[3, -1, 4, 1, -5], 4);
        assert_eq!(any.compose(&Jet::variable(4)).unwrap(), any);
        let geo = Jet::one(6).checked_div(&ints(&[1, -1], 6)).unwrap();
        assert_eq!(geo.compose(&ints(&[0, 0, 1], 6)).unwrap(), ints(&[1, 0, 1, 0, 1, 0, 1], 6));
        assert_eq!(p.compose(&ints(&[1, 1], 4)).unwrap_err(), Error::NonzeroInnerConstant);
    }

    #[test]
    fn reversion() {
        assert_eq!(Jet::variable(5).revert().unwrap(), Jet::variable(5));
        let half = Jet::from_rationals(&[integer(0), ratio(1, 2)], 5);
        assert_eq!(ints(&[0, 2], 5).revert().unwrap(), half);
        let q = ints(&[0, 1, 1], 6);
        let r = q.revert().unwrap();
        // Catalan numbers with alternating sign
        assert_eq!(r, ints(&[0, 1, -1, 2, -5, 14, -42], 6));
        assert_eq!(q.compose(&r).unwrap(), Jet::variable(6));
        assert_eq!(ints(&[1, 1], 3).revert().unwrap_err(), Error::NotInvertible);
        assert_eq!(ints(&[0, 0, 1], 3).revert().unwrap_err(), Error::NotInvertible);
    }

    #[test]
    fn evaluation() {
        assert_eq!(ints(&[1, 2], 3).eval(&integer(3)), integer(7));
        let a = ints(&[5, -1, 2], 3);
        assert_eq!(a.eval(&integer(0)), integer(5));
        assert_eq!(ints(&[0, 0, 1], 2).eval(&ratio(1, 2)), ratio(1, 4));
    }

    #[test]
    fn affine_substitution() {
        let j = ints(&[0, 1], 3);
        assert_eq!(j.substitute_affine(&integer(-2), &integer(1)).unwrap(), ints(&[-2, 1], 3));
        assert_eq!(j.substitute_affine(&integer(0), &integer(4)).unwrap(), ints(&[0, 4], 3));
        let s = j.as_series();
        assert_eq!(s.substitute_affine(&integer(1), &integer(1)).unwrap_err(), Error::NonPolynomialShift);
    }

    #[test]
    fn display() {
        assert_eq!(ints(&[1, 0, 0, 2], 3).to_string(), "1 + 2x³");
        let s = Jet::from_rationals(&[integer(0), integer(1), ratio(-1, 2)], 2).as_series();
        assert_eq!(s.to_string(), "x - (1/2)x² + O(x³)");
        assert_eq!(Jet::zero(2).to_string(), "0");
        assert_eq!(ints(&[-1, 0, 0, 0, 0, 0, 0, 0, 0, 0, -3], 10).to_string(), "-1 - 3x¹⁰");
    }
}
