use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::arrangement::{form_strings, Arrangement};
use crate::error::{Error, Result};
use crate::linalg::parse_rational;

/// On-disk arrangement: `{"ambient_dim": 3, "forms": [["1","-1","0"], ...],
/// "labels": [...]}`. Coefficients are strings so no float ever sneaks in.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementDocument {
    pub ambient_dim: usize,
    pub forms: Vec<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<String>>,
}

impl ArrangementDocument {
    pub fn parse(json: &str) -> Result<Self> {
        serde_json::from_str(json).map_err(|e| Error::MalformedInput(format!("arrangement document: {e}")))
    }

    pub fn from_arrangement(arrangement: &Arrangement) -> Self {
        ArrangementDocument {
            ambient_dim: arrangement.dim(),
            forms: arrangement.forms().iter().map(form_strings).collect(),
            labels: arrangement.labels().map(<[String]>::to_vec),
        }
    }

    pub fn to_arrangement(&self) -> Result<Arrangement> {
        if self.ambient_dim == 0 {
            return Err(Error::MalformedInput("ambient_dim must be positive".into()));
        }
        let forms = self
            .forms
            .iter()
            .map(|f| f.iter().map(|c| parse_rational(c)).collect::<Result<Vec<_>>>())
            .collect::<Result<Vec<_>>>()?;
        Arrangement::with_labels(self.ambient_dim, forms, self.labels.clone())
    }

    /// Pretty JSON with a trailing newline.
    pub fn to_json(&self) -> String {
        let mut out = serde_json::to_string_pretty(self).expect("document serializes");
        out.push('\n');
        out
    }

    /// Hex SHA-256 of the compact canonical JSON.
    pub fn digest(&self) -> String {
        let compact = serde_json::to_string(self).expect("document serializes");
        hex::encode(Sha256::digest(compact.as_bytes()))
    }
}
