use serde::Serialize;

use crate::model::Coloring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictTag {
    Feasible,
    Infeasible,
    Unknown,
}

impl std::fmt::Display for VerdictTag {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Self::Feasible => "feasible",
            Self::Infeasible => "infeasible",
            Self::Unknown => "unknown",
        })
    }
}

/// Outcome of an exact realizability search.
#[derive(Clone, Debug)]
pub struct Verdict {
    pub tag: VerdictTag,
    /// Present exactly when `tag` is `Feasible`.
    pub witness: Option<Coloring>,
    pub nodes_explored: u64,
}

impl Verdict {
    pub fn feasible(witness: Coloring, nodes_explored: u64) -> Self {
        Self {
            tag: VerdictTag::Feasible,
            witness: Some(witness),
            nodes_explored,
        }
    }

    pub fn infeasible(nodes_explored: u64) -> Self {
        Self {
            tag: VerdictTag::Infeasible,
            witness: None,
            nodes_explored,
        }
    }

    pub fn unknown(nodes_explored: u64) -> Self {
        Self {
            tag: VerdictTag::Unknown,
            witness: None,
            nodes_explored,
        }
    }

    pub fn is_feasible(&self) -> bool {
        self.tag == VerdictTag::Feasible
    }
}
