use thiserror::Error;

use crate::params::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid network parameters: {}", format_violations(.0))]
    InvalidParams(Vec<Violation>),

    #[error("{function}: argument outside domain ({detail})")]
    Domain {
        function: &'static str,
        detail: String,
    },

    #[error("gamma function pole at {0}")]
    GammaPole(f64),

    #[error("{routine} did not converge: {detail}")]
    NoConvergence {
        routine: &'static str,
        detail: String,
    },

    #[error("quantile bracket could not be established for p = {p}")]
    Bracket { p: f64 },

    #[error("mean interference is infinite under the untruncated stable model (alpha = {alpha} < 1); no SIR threshold exists")]
    InfiniteMean { alpha: f64 },

    #[error("expected {expected:.3e} points exceeds the sampling budget of {cap:.3e}")]
    SamplingBudget { expected: f64, cap: f64 },

    #[error("config: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Csv(#[from] csv::Error),
}

impl Error {
    pub(crate) fn domain(function: &'static str, detail: impl Into<String>) -> Self {
        Error::Domain {
            function,
            detail: detail.into(),
        }
    }
}

fn format_violations(v: &[Violation]) -> String {
    v.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join("; ")
}
