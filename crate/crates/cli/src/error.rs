use std::path::PathBuf;

use matchrb::CertificateReport;
use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("unknown target {0:?}")]
    UnknownTarget(String),
    #[error("unknown checker {0:?}")]
    UnknownChecker(String),
    #[error("unknown construction {0:?}")]
    UnknownConstruction(String),
    #[error("unknown complex {0:?}")]
    UnknownComplex(String),
    #[error("{name:?} has kind {found}, expected {expected}")]
    WrongKind { name: String, expected: &'static str, found: &'static str },
    #[error("reference cycle through {0:?}")]
    Cycle(String),
    #[error("construction output fails its certificate ({})", .0.checker)]
    ConstructionFailed(Box<CertificateReport>),
    #[error("{0}")]
    Usage(String),
    #[error("cannot parse {file}: {source}")]
    Parse { file: PathBuf, source: serde_json::Error },
    #[error(transparent)]
    Core(#[from] matchrb::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
}

impl CliError {
    /// The certificate behind a refusal, when there is one.
    pub fn report(&self) -> Option<&CertificateReport> {
        match self {
            CliError::ConstructionFailed(r) => Some(r),
            CliError::Core(e) => e.report(),
            _ => None,
        }
    }

    /// 1 when an input fails a certificate, 2 for every other input error.
    pub fn exit_code(&self) -> i32 {
        if self.report().is_some() {
            1
        } else {
            2
        }
    }
}
