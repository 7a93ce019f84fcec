//! Matching relative Rota-Baxter algebras and matching dendriform algebras:
//! structure checks, constructions, cohomology, deformations and homotopy
//! versions, all over exact rationals.

pub mod algebra;
pub mod cochain;
pub mod complex;
pub mod deformation;
pub mod dendriform;
pub mod error;
pub mod exact_sequence;
pub mod fixtures;
pub mod homotopy;
pub mod io;
pub mod labels;
pub mod linear;
pub mod operad;
pub mod operators;
pub mod random;
pub mod report;

pub use algebra::{Algebra, Bimodule};
pub use operators::OperatorFamily;
pub use error::{Error, Result};
pub use cochain::LabeledCochain;
pub use labels::LabelSet;
pub use linear::{LinearMap, Vector};
pub use matchrb_linalg::{q, DenseMatrix, DenseTensor, Scalar};
pub use report::{CertificateReport, Failure};
