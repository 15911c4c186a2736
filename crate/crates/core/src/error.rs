use drg_exact::ExactError;
use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DrgError {
    #[error("parse error: {0}")]
    Parse(String),
    /// The parameters cannot belong to a distance-regular graph; `rule`
    /// names the violated condition.
    #[error("infeasible ({rule}): {detail}")]
    Infeasible { rule: String, detail: String },
    #[error("precondition not met: {0}")]
    Precondition(String),
    #[error(transparent)]
    Exact(#[from] ExactError),
}

impl DrgError {
    pub(crate) fn infeasible(rule: &str, detail: impl Into<String>) -> Self {
        DrgError::Infeasible {
            rule: rule.to_string(),
            detail: detail.into(),
        }
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        DrgError::Precondition(msg.into())
    }
}

pub type Result<T, E = DrgError> = std::result::Result<T, E>;
