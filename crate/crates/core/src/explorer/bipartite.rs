use serde::Serialize;

use super::{
    are_isomorphic, constrained_transition_search, ExplorerError, FamilyKind, SearchOutcome,
};
use crate::fixtures::{fig2_g0, fig2_g1};
use crate::graph::{Graph, Vertex};
use crate::switch::nontrivial_switches;

const SEQUENCE: [usize; 11] = [6, 5, 4, 4, 3, 3, 3, 2, 2, 2, 2];
const DEGREE_FOUR: (Vertex, Vertex) = (3, 4);

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OneStepReport {
    /// Nontrivial 2-switches of G₀.
    pub candidates: usize,
    /// Those whose result is bipartite.
    pub bipartite_results: usize,
    /// Bipartite results where `G₀ − ab − cd` is disconnected.
    pub disconnected_remainders: usize,
    /// Bipartite results that put vertices 3 and 4 in the same part.
    pub part_changes: usize,
    pub holds: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ClosureReport {
    pub budget: usize,
    pub explored: usize,
    pub complete: bool,
    pub reached_target: bool,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BipartiteCheckReport {
    pub sequence_ok: bool,
    pub bipartite_and_connected: bool,
    pub degree_four_split_in_g0: bool,
    pub degree_four_together_in_g1: bool,
    pub non_isomorphic: bool,
    /// Degrees of the neighbors of the degree-6 vertex, sorted.
    pub hub_neighbor_degrees: (Vec<usize>, Vec<usize>),
    pub one_step: OneStepReport,
    pub closure: Option<ClosureReport>,
    /// Verdict over every check except the budgeted closure.
    pub passed: bool,
}

/// The two bipartite graphs of the shipped `fig2` fixtures share a degree
/// sequence, yet no bipartite-only 2-switch path joins them: every such
/// switch keeps the degree-4 vertices in different parts.
pub fn bipartite_counterexample_check(
    closure_budget: Option<usize>,
) -> Result<BipartiteCheckReport, ExplorerError> {
    let (g0, g1) = (fig2_g0(), fig2_g1());
    let sequence_ok = g0.degree_sequence().0 == SEQUENCE && g1.degree_sequence().0 == SEQUENCE;
    let bipartite_and_connected = [&g0, &g1]
        .iter()
        .all(|g| g.is_bipartite() && g.kappa() == 1);
    let (x, y) = DEGREE_FOUR;
    let same_part = |g: &Graph| g.bipartition().is_some_and(|b| b.same_part(x, y));
    let non_isomorphic = !are_isomorphic(&g0, &g1)?;
    let one_step = one_step_invariant(&g0);
    let closure = match closure_budget {
        Some(budget) => {
            let out = constrained_transition_search(&g0, &g1, FamilyKind::Bipartite, budget)?;
            Some(ClosureReport {
                budget,
                explored: out.explored(),
                complete: !matches!(out, SearchOutcome::BudgetExhausted { .. }),
                reached_target: out.trace().is_some(),
            })
        }
        None => None,
    };
    let mut report = BipartiteCheckReport {
        sequence_ok,
        bipartite_and_connected,
        degree_four_split_in_g0: !same_part(&g0),
        degree_four_together_in_g1: same_part(&g1),
        non_isomorphic,
        hub_neighbor_degrees: (hub_neighbor_degrees(&g0), hub_neighbor_degrees(&g1)),
        one_step,
        closure,
        passed: false,
    };
    report.passed = report.sequence_ok
        && report.bipartite_and_connected
        && report.degree_four_split_in_g0
        && report.degree_four_together_in_g1
        && report.non_isomorphic
        && report.one_step.holds;
    Ok(report)
}

fn one_step_invariant(g0: &Graph) -> OneStepReport {
    let (x, y) = DEGREE_FOUR;
    let switches = nontrivial_switches(g0);
    let mut report = OneStepReport {
        candidates: switches.len(),
        bipartite_results: 0,
        disconnected_remainders: 0,
        part_changes: 0,
        holds: true,
    };
    for a in switches {
        let h = a.apply(g0);
        let Some(parts) = h.bipartition() else {
            continue;
        };
        report.bipartite_results += 1;
        let mut rest = g0.clone();
        for (u, v) in a.removed_edges() {
            rest.remove_edge(u, v);
        }
        if rest.kappa() != 1 {
            report.disconnected_remainders += 1;
        }
        if parts.same_part(x, y) {
            report.part_changes += 1;
        }
    }
    report.holds = report.disconnected_remainders == 0 && report.part_changes == 0;
    report
}

fn hub_neighbor_degrees(g: &Graph) -> Vec<usize> {
    let hub = g
        .vertices()
        .max_by_key(|&v| (g.degree(v), std::cmp::Reverse(v)))
        .unwrap();
    let mut d: Vec<usize> = g.neighbors(hub).map(|u| g.degree(u)).collect();
    d.sort_unstable();
    d
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_checks_pass() {
        let r = bipartite_counterexample_check(None).unwrap();
        assert!(r.sequence_ok);
        assert!(r.bipartite_and_connected);
        assert!(r.degree_four_split_in_g0);
        assert!(r.degree_four_together_in_g1);
        assert!(r.non_isomorphic);
        assert!(r.one_step.holds, "{:?}", r.one_step);
        assert!(r.one_step.bipartite_results > 0);
        assert!(r.passed);
    }

    #[test]
    fn hub_neighbors() {
        let r = bipartite_counterexample_check(None).unwrap();
        assert_eq!(r.hub_neighbor_degrees.0, vec![2, 2, 2, 3, 4, 5]);
        assert_eq!(r.hub_neighbor_degrees.1, vec![2, 2, 3, 3, 3, 5]);
    }
}
