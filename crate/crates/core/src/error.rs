//! Error type shared across the crate.

use std::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A monoid on `n` strands needs `n >= 2`.
    InvalidStrandCount { n: usize },
    /// Strand count outside the supported range for automaton construction.
    StrandCountOutOfRange { n: usize, max: usize },
    /// Brute-force enumeration would visit more words than the configured budget.
    WordBudgetExceeded { required: u128, budget: u64 },
    /// Division by the zero polynomial or a zero denominator.
    ZeroDenominator,
    /// Power-series expansion requires a denominator nonzero at the origin.
    PoleAtOrigin,
    /// The coefficient matrix of a linear system is singular.
    SingularMatrix,
    /// Cubic analysis applies to degree-3 polynomials only.
    NonCubic { degree: Option<usize> },
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidStrandCount { n } => {
                write!(f, "invalid strand count {n}: need at least 2 strands")
            }
            Error::StrandCountOutOfRange { n, max } => {
                write!(f, "strand count {n} out of range: supported range is 2..={max}")
            }
            Error::WordBudgetExceeded { required, budget } => {
                write!(
                    f,
                    "enumeration would visit {required} words, exceeding the budget of {budget}"
                )
            }
            Error::ZeroDenominator => write!(f, "division by zero polynomial"),
            Error::PoleAtOrigin => {
                write!(f, "denominator vanishes at the origin; no power series there")
            }
            Error::SingularMatrix => write!(f, "linear system has a singular coefficient matrix"),
            Error::NonCubic { degree: Some(d) } => {
                write!(f, "expected a cubic polynomial, got degree {d}")
            }
            Error::NonCubic { degree: None } => {
                write!(f, "expected a cubic polynomial, got the zero polynomial")
            }
        }
    }
}

impl std::error::Error for Error {}
