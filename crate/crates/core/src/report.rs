//! The analysis report printed by `lpa analyze`.

use std::fmt::{self, Write as _};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::algebra::LeavittAlgebra;
use crate::paths::enumerate_csp;
use crate::structure::{edge_matrix, is_simple, SimplicityVerdict};

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionLReport {
    pub holds: bool,
    pub witness_cycle: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ConditionIReport {
    pub holds: bool,
    pub witness_subset: Option<Vec<String>>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AnalysisReport {
    pub graph: String,
    pub row_finite: bool,
    pub sinks: Vec<String>,
    pub sources: Vec<String>,
    #[serde(rename = "condition_L")]
    pub condition_l: ConditionLReport,
    pub condition_i: ConditionIReport,
    pub simple: bool,
    pub witness_element: Option<String>,
    pub edge_matrix: Vec<Vec<u8>>,
    /// Closed simple paths per vertex up to the enumeration bound; text output only.
    #[serde(skip)]
    pub csp: Vec<(String, Vec<String>)>,
    #[serde(skip)]
    pub csp_bound: usize,
}

impl AnalysisReport {
    pub fn new(name: &str, alg: &Arc<LeavittAlgebra>, csp_bound: usize) -> AnalysisReport {
        let verdict = is_simple(alg);
        AnalysisReport::from_verdict(name, alg, &verdict, csp_bound)
    }

    pub fn from_verdict(
        name: &str,
        alg: &Arc<LeavittAlgebra>,
        verdict: &SimplicityVerdict,
        csp_bound: usize,
    ) -> AnalysisReport {
        let g = alg.graph();
        let csp = g
            .vertices()
            .map(|v| {
                let paths = enumerate_csp(g, v, csp_bound).expect("vertex exists");
                (g.vertex_name(v).to_string(), paths.iter().map(|p| g.format_path(p)).collect())
            })
            .collect();
        AnalysisReport {
            graph: name.to_string(),
            row_finite: true,
            sinks: g.vertex_names(g.sinks()),
            sources: g.vertex_names(g.sources()),
            condition_l: ConditionLReport {
                holds: verdict.condition_l.holds,
                witness_cycle: verdict
                    .condition_l
                    .witness
                    .as_ref()
                    .map(|c| c.path().edges().iter().map(|&e| g.edge_name(e).to_string()).collect()),
            },
            condition_i: ConditionIReport {
                holds: verdict.condition_i.holds,
                witness_subset: verdict.condition_i.witness.as_ref().map(|h| h.names(g)),
            },
            simple: verdict.simple,
            witness_element: verdict.witness_element.as_ref().map(ToString::to_string),
            edge_matrix: edge_matrix(g).map(|m| m.rows().to_vec()).unwrap_or_default(),
            csp,
            csp_bound,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }
}

impl fmt::Display for AnalysisReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let list = |xs: &[String]| if xs.is_empty() { "-".to_string() } else { xs.join(", ") };
        writeln!(f, "graph: {}", self.graph)?;
        writeln!(f, "row finite: {}", self.row_finite)?;
        writeln!(f, "sinks: {}", list(&self.sinks))?;
        writeln!(f, "sources: {}", list(&self.sources))?;
        match &self.condition_l.witness_cycle {
            None => writeln!(f, "condition (L): holds")?,
            Some(c) => writeln!(f, "condition (L): fails, cycle without exit {}", c.join("."))?,
        }
        match &self.condition_i.witness_subset {
            None => writeln!(f, "hereditary saturated subsets: only trivial")?,
            Some(h) => writeln!(f, "hereditary saturated subsets: nontrivial {{{}}}", h.join(", "))?,
        }
        writeln!(f, "simple: {}", self.simple)?;
        if let Some(w) = &self.witness_element {
            writeln!(f, "witness element: {w}")?;
        }
        writeln!(f, "closed simple paths (length <= {}):", self.csp_bound)?;
        for (v, paths) in &self.csp {
            writeln!(f, "  {v}: {}", list(paths))?;
        }
        write!(f, "edge matrix:")?;
        if self.edge_matrix.is_empty() {
            write!(f, " (no edges)")?;
        }
        for row in &self.edge_matrix {
            let mut line = String::new();
            for x in row {
                write!(line, " {x}")?;
            }
            write!(f, "\n {line}")?;
        }
        Ok(())
    }
}
