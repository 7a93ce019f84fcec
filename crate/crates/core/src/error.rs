use matchrb_linalg::LinalgError;
use thiserror::Error;

use crate::report::CertificateReport;

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("label sets differ")]
    LabelSetMismatch,
    #[error("unknown label {0:?}")]
    UnknownLabel(String),
    #[error("invalid label set: {0}")]
    InvalidLabels(String),
    #[error("element for label {label:?} is not central (fails against {witness:?})")]
    NotCentral { label: String, witness: String },
    #[error("operation supports a single label only")]
    MultiLabelNotSupported,
    #[error("bimodule is not the adjoint bimodule of its algebra")]
    NotAdjoint,
    #[error("cochains live over different contexts")]
    ContextMismatch,
    #[error("degree {degree} outside the supported range {range}")]
    DegreeOutOfRange { degree: usize, range: String },
    #[error("position {position} outside 1..={arity}")]
    PositionOutOfRange { position: usize, arity: usize },
    #[error("degree constraint violated: {0}")]
    DegreeMismatch(String),
    #[error("input fails a required check ({})", .0.checker)]
    Precondition(Box<CertificateReport>),
    #[error("operator family is not a Maurer-Cartan element")]
    NotMaurerCartan(Box<CertificateReport>),
    #[error("structure fails the matching dendriform axioms")]
    MdaFails(Box<CertificateReport>),
    #[error("cochain is not a cocycle")]
    NotCocycle(Box<CertificateReport>),
    #[error("deformation fails its equations at order ≤ 1")]
    DeformationInvalid(Box<CertificateReport>),
    #[error("invalid input: {0}")]
    Invalid(String),
}

impl Error {
    pub fn precondition(report: CertificateReport) -> Self {
        Error::Precondition(Box::new(report))
    }

    pub fn report(&self) -> Option<&CertificateReport> {
        match self {
            Error::Precondition(r)
            | Error::NotMaurerCartan(r)
            | Error::MdaFails(r)
            | Error::NotCocycle(r)
            | Error::DeformationInvalid(r) => Some(r),
            _ => None,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

/// Fails with the report attached when it has failures.
pub fn require(report: CertificateReport) -> Result<()> {
    if report.passed() {
        Ok(())
    } else {
        Err(Error::precondition(report))
    }
}
