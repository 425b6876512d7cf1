use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("jet order mismatch: {left} vs {right}")]
    OrderMismatch { left: usize, right: usize },
    #[error("divisor has zero constant term")]
    ZeroConstantTerm,
    #[error("{op} requires constant term {expected}")]
    BadConstantTerm { op: &'static str, expected: &'static str },
    #[error("inner series of a composition must have zero constant term")]
    NonzeroInnerConstant,
    #[error("series is not invertible under composition (needs q(0) = 0, q'(0) != 0)")]
    NotInvertible,
    #[error("{0} must have nonzero constant term")]
    ZeroLeading(&'static str),
    #[error("reduced equation has a leading coefficient vanishing at the base point")]
    DegenerateLeadingCoefficient,
    #[error("shift by a nonzero constant needs a polynomial-exact series")]
    NonPolynomialShift,
    #[error("f(x, y) vanishes at the evaluation point")]
    ZeroF,
    #[error("{0}")]
    Domain(String),
}

pub type Result<T> = std::result::Result<T, Error>;
