use matchrb_linalg::Scalar;
use serde::{Deserialize, Serialize};

/// One violated identity instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub identity: String,
    pub index: Vec<String>,
    pub lhs: Vec<Scalar>,
    pub rhs: Vec<Scalar>,
}

/// Outcome of checking an identity on every basis instance.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CertificateReport {
    pub checker: String,
    pub checked: usize,
    pub failures: Vec<Failure>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub notes: Vec<String>,
}

impl CertificateReport {
    pub fn new(checker: &str) -> Self {
        CertificateReport { checker: checker.to_string(), checked: 0, failures: Vec::new(), notes: Vec::new() }
    }

    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }

    /// Records one instance; a failure is kept only when the sides differ.
    pub fn compare(&mut self, identity: &str, index: Vec<String>, lhs: Vec<Scalar>, rhs: Vec<Scalar>) {
        self.checked += 1;
        if lhs != rhs {
            self.failures.push(Failure { identity: identity.to_string(), index, lhs, rhs });
        }
    }

    /// Records an instance whose value must vanish.
    pub fn vanish(&mut self, identity: &str, index: Vec<String>, value: Vec<Scalar>) {
        let zeros = vec![Scalar::zero(); value.len()];
        self.compare(identity, index, value, zeros);
    }

    pub fn fail(&mut self, identity: &str, index: Vec<String>) {
        self.checked += 1;
        self.failures.push(Failure { identity: identity.to_string(), index, lhs: vec![], rhs: vec![] });
    }

    pub fn note(&mut self, s: impl Into<String>) {
        self.notes.push(s.into());
    }

    /// Folds another report in, prefixing its identity names.
    pub fn absorb(&mut self, other: CertificateReport) {
        self.checked += other.checked;
        for mut f in other.failures {
            f.identity = format!("{}/{}", other.checker, f.identity);
            self.failures.push(f);
        }
        self.notes.extend(other.notes);
    }

    pub fn summary(&self) -> String {
        format!(
            "{}: {} ({} instances, {} failures)",
            self.checker,
            if self.passed() { "pass" } else { "FAIL" },
            self.checked,
            self.failures.len()
        )
    }
}
