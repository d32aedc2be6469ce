use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::Error;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Metric {
    /// Degree.
    Deg,
    /// Eigenvector centrality.
    Ec,
    /// PageRank.
    Pr,
    /// Katz score `(I − δA)⁻¹ × 1`.
    Katz,
    /// Geometric potential gain.
    Gpg,
    /// Exponential potential gain.
    Epg,
    /// Communicability vector `exp(A) × 1`.
    Comm,
}

impl Metric {
    /// The six metrics compared in correlation reports.
    pub const COMPARED: [Metric; 6] = [
        Metric::Deg,
        Metric::Ec,
        Metric::Pr,
        Metric::Katz,
        Metric::Gpg,
        Metric::Epg,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Metric::Deg => "deg",
            Metric::Ec => "ec",
            Metric::Pr => "pr",
            Metric::Katz => "katz",
            Metric::Gpg => "gpg",
            Metric::Epg => "epg",
            Metric::Comm => "comm",
        }
    }
}

impl fmt::Display for Metric {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Metric {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Ok(match s.to_ascii_lowercase().as_str() {
            "deg" => Metric::Deg,
            "ec" => Metric::Ec,
            "pr" => Metric::Pr,
            "katz" => Metric::Katz,
            "gpg" => Metric::Gpg,
            "epg" => Metric::Epg,
            "comm" => Metric::Comm,
            other => return Err(Error::InvalidParameter(format!("unknown metric {other:?}"))),
        })
    }
}

/// Parameters a score vector was computed with. Unused fields stay `None`.
#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct ParamSnapshot {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_star: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub alpha: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub tolerance: Option<f64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub max_walk_length: Option<usize>,
}

/// Per-node scores indexed by internal node index.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct CentralityVector {
    pub metric: Metric,
    pub scores: Vec<f64>,
    pub params: ParamSnapshot,
    pub iterations_used: usize,
    pub converged: bool,
}

impl CentralityVector {
    pub fn len(&self) -> usize {
        self.scores.len()
    }

    pub fn is_empty(&self) -> bool {
        self.scores.is_empty()
    }
}
