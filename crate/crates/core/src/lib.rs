//! Differential invariants of the first-kind Abel equation
//!
//! ```text
//! dy/dx = c0(x) + 3 c1(x) y + 3 c2(x) y² + c3(x) y³,   c3 ≠ 0
//! ```
//!
//! under the gauge pseudo-group `y = η(ξ) u(x) + ν(x)`, `dξ/dx = μ(x)`.
//! Every coefficient function is a [`Jet`]: a truncated Taylor series at the
//! origin with exact rational coefficients, so each identity of the theory is
//! checked with exact equality up to a tracked valid order.
//!
//! Modules:
//!
//! - [`series`]: jets and rationals.
//! - [`equation`]: the equation, gauge maps and their action on coefficients.
//! - [`invariants`]: the Liouville hierarchy `s3, s5, ...`, the affine
//!   connection and the covariant derivative.
//! - [`grading`]: weight and degree of coefficient monomials, scaling maps.
//! - [`solve`]: series solutions and the second-kind reduction.
//! - [`canonical`]: reduction to `dY/dX = Y³ + J` and the moduli group.
//! - [`cartan`]: the coframe on `(x, y, u)`, structure-equation residuals and
//!   the dual frame.
//! - [`cli`]: JSON documents, reports and the seeded verification harness
//!   behind the `abel` binary.
//!
//! The `examples/` directory of this crate has one runnable program per
//! capability.

pub mod canonical;
pub mod cartan;
pub mod cli;
pub mod equation;
mod error;
pub mod grading;
pub mod invariants;
pub mod series;
pub mod solve;

pub use error::{Error, Result};
pub use series::{Jet, Rational};
