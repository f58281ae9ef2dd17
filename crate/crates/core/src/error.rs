use crate::measures::MeasureId;

/// Errors raised while building clusterings or evaluating measures.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("dimension mismatch: {left} points vs {right} points")]
    DimensionMismatch { left: usize, right: usize },

    /// The measure has no value on this input (e.g. Rand index of one point).
    #[error("measure `{measure}` is undefined here: {reason}")]
    UndefinedMeasure {
        measure: MeasureId,
        reason: &'static str,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("no component decomposition is available for measure `{0}`")]
    UnsupportedDecomposition(MeasureId),

    #[error("measure `{0}` needs per-point features but none were supplied")]
    MissingFeatures(String),

    #[error("refusing to enumerate partitions of {n} points (cap is {cap})")]
    EnumerationCap { n: usize, cap: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

pub(crate) fn check_same_n(left: usize, right: usize) -> Result<()> {
    if left != right {
        return Err(Error::DimensionMismatch { left, right });
    }
    Ok(())
}
