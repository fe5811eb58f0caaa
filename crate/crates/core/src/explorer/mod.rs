//! Exhaustive exploration of realization families: enumeration, stability
//! and interval audits, constrained transition search, isomorphism and the
//! bipartite and unicyclic case studies.

mod audit;
mod bipartite;
mod enumerate;
mod iso;
pub mod masks;
mod search;
mod table;
mod unicyclic;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{count_components, is_bipartite_rows, Graph};
use crate::params::{ParamError, ParameterKind};
use crate::transition::TransitionError;

pub use audit::{
    edge_diff_audit, interval_audit, interval_sweep, realize_parameter_value, stability_audit,
    stability_sweep, AuditReport, EdgeDiffReport, StabilityScope,
};
pub use bipartite::{
    bipartite_counterexample_check, BipartiteCheckReport, ClosureReport, OneStepReport,
};
pub use enumerate::{enumerate_family, Enumeration, DEFAULT_ENUMERATION_CAP};
pub use iso::{are_isomorphic, ISOMORPHISM_CAP};
pub use search::{constrained_transition_search, SearchOutcome, DEFAULT_BUDGET};
pub use table::ValueTable;
pub use unicyclic::{unicyclic_transition_search, UnicyclicFinding, UnicyclicReport};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum FamilyKind {
    AllGraphs,
    Forests,
    Unicyclic,
    Bipartite,
}

impl FamilyKind {
    pub fn contains(self, g: &Graph) -> bool {
        self.contains_rows(g.rows(), g.size())
    }

    pub(crate) fn contains_rows(self, rows: &[u64], size: usize) -> bool {
        let n = rows.len();
        match self {
            FamilyKind::AllGraphs => true,
            FamilyKind::Forests => size + count_components(rows) == n,
            FamilyKind::Unicyclic => size + count_components(rows) == n + 1,
            FamilyKind::Bipartite => is_bipartite_rows(rows),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::AllGraphs => "all_graphs",
            FamilyKind::Forests => "forests",
            FamilyKind::Unicyclic => "unicyclic",
            FamilyKind::Bipartite => "bipartite",
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "all" | "all_graphs" | "graphs" | "graph" => Ok(FamilyKind::AllGraphs),
            "forest" | "forests" => Ok(FamilyKind::Forests),
            "unicyclic" => Ok(FamilyKind::Unicyclic),
            "bipartite" => Ok(FamilyKind::Bipartite),
            _ => Err(format!("unknown family `{s}`")),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ExplorerError {
    #[error("order {order} exceeds the cap of {cap}")]
    CapExceeded { order: usize, cap: usize },
    #[error("value {value} lies outside [{min}, {max}]")]
    ValueOutOfRange {
        value: usize,
        min: usize,
        max: usize,
    },
    #[error("family {0} is empty for this sequence")]
    EmptyFamily(FamilyKind),
    #[error("family {0} is not supported here")]
    UnsupportedFamily(FamilyKind),
    #[error("graph is not in family {0}")]
    NotInFamily(FamilyKind),
    #[error("graphs have different degree sequences")]
    DegreeSequenceMismatch,
    #[error("parameter {0} is undefined on this family")]
    OutOfDomain(ParameterKind),
    #[error(transparent)]
    Param(#[from] ParamError),
    #[error(transparent)]
    Transition(#[from] TransitionError),
}

pub(crate) fn check_cap(order: usize, cap: usize) -> Result<(), ExplorerError> {
    if order > cap {
        Err(ExplorerError::CapExceeded { order, cap })
    } else {
        Ok(())
    }
}
