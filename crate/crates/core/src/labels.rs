use matchrb_linalg::MultiIndexIter;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Finite ordered label set; the order fixes tuple enumeration.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(try_from = "Vec<String>", into = "Vec<String>")]
pub struct LabelSet {
    labels: Vec<String>,
}

impl TryFrom<Vec<String>> for LabelSet {
    type Error = Error;
    fn try_from(v: Vec<String>) -> Result<Self> {
        LabelSet::new(v)
    }
}

impl From<LabelSet> for Vec<String> {
    fn from(l: LabelSet) -> Self {
        l.labels
    }
}

impl LabelSet {
    pub fn new<S: Into<String>>(labels: impl IntoIterator<Item = S>) -> Result<Self> {
        let labels: Vec<String> = labels.into_iter().map(Into::into).collect();
        if labels.is_empty() {
            return Err(Error::InvalidLabels("empty".into()));
        }
        for (i, l) in labels.iter().enumerate() {
            if labels[..i].contains(l) {
                return Err(Error::InvalidLabels(format!("duplicate {l:?}")));
            }
        }
        Ok(LabelSet { labels })
    }

    /// Labels "0", "1", ..., "q-1".
    pub fn numbered(q: usize) -> Self {
        LabelSet::new((0..q).map(|i| i.to_string())).expect("q > 0")
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn names(&self) -> &[String] {
        &self.labels
    }

    pub fn name(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn index_of(&self, name: &str) -> Result<usize> {
        self.labels.iter().position(|l| l == name).ok_or_else(|| Error::UnknownLabel(name.to_string()))
    }

    /// All n-tuples in lexicographic order.
    pub fn tuples(&self, n: usize) -> MultiIndexIter {
        MultiIndexIter::new(&vec![self.len(); n])
    }

    pub fn tuple_count(&self, n: usize) -> usize {
        self.len().pow(n as u32)
    }

    pub fn tuple_index(&self, t: &[usize]) -> usize {
        t.iter().fold(0, |acc, &x| acc * self.len() + x)
    }

    pub fn tuple_name(&self, t: &[usize]) -> String {
        t.iter().map(|&x| self.labels[x].as_str()).collect::<Vec<_>>().join(",")
    }
}
