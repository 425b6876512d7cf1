//! Seeded generator for random trials.
//!
//! The stream is SplitMix64: the state advances by `0x9E3779B97F4A7C15` and
//! each output is the state passed through
//!
//! ```text
//! z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//! z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//! z ^ (z >> 31)
//! ```
//!
//! with wrapping arithmetic. Draws are reduced with `% n`. Rationals take a
//! numerator in `[-9, 9]` (`next % 19 - 9`) and then a denominator in `[1, 9]`
//! (`next % 9 + 1`). Random jets are polynomials of degree at most 3 whose four
//! coefficients are drawn in increasing power; a constant term that must be
//! nonzero is redrawn until it is.

use num_traits::Zero;

use crate::equation::{AbelEquation, ChartedEquation, PseudoGroupMap};
use crate::series::{ratio, Jet, Rational};

pub const MAX_DEGREE: usize = 3;

#[derive(Clone, Debug)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        Self { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    pub fn below(&mut self, n: u64) -> u64 {
        self.next_u64() % n
    }

    pub fn rational(&mut self) -> Rational {
        let num = self.below(19) as i64 - 9;
        let den = self.below(9) as i64 + 1;
        ratio(num, den)
    }

    pub fn nonzero_rational(&mut self) -> Rational {
        loop {
            let q = self.rational();
            if !q.is_zero() {
                return q;
            }
        }
    }

    /// Random polynomial of degree ≤ 3 stored at `order`.
    pub fn jet(&mut self, order: usize) -> Jet {
        let degree = MAX_DEGREE.min(order);
        let c: Vec<Rational> = (0..=degree).map(|_| self.rational()).collect();
        Jet::from_rationals(&c, order)
    }

    /// Random polynomial whose constant term is nonzero.
    pub fn unit_jet(&mut self, order: usize) -> Jet {
        let degree = MAX_DEGREE.min(order);
        let mut c = vec![self.nonzero_rational()];
        c.extend((1..=degree).map(|_| self.rational()));
        Jet::from_rationals(&c, order)
    }

    pub fn equation(&mut self, order: usize) -> ChartedEquation {
        let c0 = self.jet(order);
        let c1 = self.jet(order);
        let c2 = self.jet(order);
        let c3 = self.unit_jet(order);
        AbelEquation::new(c0, c1, c2, c3).expect("c3 has a nonzero constant term").into()
    }

    pub fn map(&mut self, order: usize) -> PseudoGroupMap {
        let u = self.unit_jet(order);
        let nu = self.jet(order);
        let mu = self.unit_jet(order);
        PseudoGroupMap::new(u, nu, mu).expect("u and mu have nonzero constant terms")
    }
}
