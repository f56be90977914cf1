use thiserror::Error;

/// Every failure mode of the library.
///
/// `DivisionByZero` and `PoleAtPoint` are the two "measure zero" outcomes of
/// evaluating at a random point; the identity harness resamples on either.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("pole at the evaluation point")]
    PoleAtPoint,
    #[error("unbound variable `{0}`")]
    UnboundVariable(String),
    #[error("constraint for slack `{0}` could not be solved")]
    UnsatisfiableConstraint(String),
    #[error("trial {trial} hit a pole on every one of {attempts} resamples")]
    ExhaustedResamples { trial: usize, attempts: usize },
    #[error("vertex index {index} outside 1..={size}")]
    IndexOutOfRange { index: usize, size: usize },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("word `{0}` did not restore the quiver")]
    QuiverNotRestored(String),
    #[error("phi_{0} is zero")]
    ZeroPhi(usize),
    #[error("root choice required: {0}")]
    RootChoiceRequired(String),
    #[error("zero denominator in {0}")]
    ZeroDenominator(String),
    #[error("gamma block pattern violated at entry ({row}, {col})")]
    BlockPatternViolation { row: usize, col: usize },
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("parse error: {0}")]
    Parse(String),
}

impl Error {
    /// True for errors that signal an unlucky evaluation point rather than a bug.
    pub fn is_pole(&self) -> bool {
        matches!(self, Error::DivisionByZero | Error::PoleAtPoint)
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
