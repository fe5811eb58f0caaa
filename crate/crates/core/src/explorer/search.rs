use std::collections::{HashMap, VecDeque};

use serde::Serialize;

use super::masks::{PairIndex, MASK_MAX_ORDER};
use super::{check_cap, ExplorerError, FamilyKind};
use crate::graph::Graph;
use crate::transition::SwitchTrace;

pub const DEFAULT_BUDGET: usize = 10_000_000;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "outcome", rename_all = "snake_case")]
pub enum SearchOutcome {
    /// A shortest family-preserving trace.
    Found {
        trace_len: usize,
        explored: usize,
        #[serde(skip)]
        trace: SwitchTrace,
    },
    /// The whole reachable set was explored without meeting the target.
    NotFound { explored: usize },
    /// The state budget ran out first.
    BudgetExhausted { explored: usize },
}

impl SearchOutcome {
    pub fn trace(&self) -> Option<&SwitchTrace> {
        match self {
            SearchOutcome::Found { trace, .. } => Some(trace),
            _ => None,
        }
    }

    pub fn explored(&self) -> usize {
        match *self {
            SearchOutcome::Found { explored, .. }
            | SearchOutcome::NotFound { explored }
            | SearchOutcome::BudgetExhausted { explored } => explored,
        }
    }
}

/// Breadth-first search from `g` to `h` over 2-switches whose results stay
/// in `fam`. States are labeled edge sets; `budget` caps the number of
/// distinct states visited.
pub fn constrained_transition_search(
    g: &Graph,
    h: &Graph,
    fam: FamilyKind,
    budget: usize,
) -> Result<SearchOutcome, ExplorerError> {
    check_cap(g.order().max(h.order()), MASK_MAX_ORDER)?;
    if g.degree_sequence() != h.degree_sequence() {
        return Err(ExplorerError::DegreeSequenceMismatch);
    }
    if !fam.contains(g) || !fam.contains(h) {
        return Err(ExplorerError::NotInFamily(fam));
    }
    let idx = PairIndex::new(g.order());
    let start = idx.from_graph(g);
    let goal = idx.from_graph(h);
    let mut parent: HashMap<u64, u64> = HashMap::from([(start, start)]);
    let mut queue = VecDeque::from([start]);
    let mut rows = vec![0u64; g.order()];
    let size = g.size();
    let found = |parent: &HashMap<u64, u64>| {
        let trace = rebuild(&idx, g, parent, start, goal);
        SearchOutcome::Found {
            trace_len: trace.len(),
            explored: parent.len(),
            trace,
        }
    };
    if start == goal {
        return Ok(found(&parent));
    }
    while let Some(cur) = queue.pop_front() {
        let mut stop = None;
        idx.for_each_switch(cur, |_, next| {
            if stop.is_some() || parent.contains_key(&next) {
                return;
            }
            idx.fill_rows(next, &mut rows);
            if !fam.contains_rows(&rows, size) {
                return;
            }
            if parent.len() >= budget {
                stop = Some(false);
                return;
            }
            parent.insert(next, cur);
            if next == goal {
                stop = Some(true);
            }
            queue.push_back(next);
        });
        match stop {
            Some(true) => return Ok(found(&parent)),
            Some(false) => {
                return Ok(SearchOutcome::BudgetExhausted {
                    explored: parent.len(),
                })
            }
            None => {}
        }
    }
    Ok(SearchOutcome::NotFound {
        explored: parent.len(),
    })
}

fn rebuild(
    idx: &PairIndex,
    g: &Graph,
    parent: &HashMap<u64, u64>,
    start: u64,
    goal: u64,
) -> SwitchTrace {
    let mut path = vec![goal];
    while *path.last().unwrap() != start {
        path.push(parent[path.last().unwrap()]);
    }
    path.reverse();
    let matrices = path.windows(2).map(|w| {
        idx.switch_between(w[0], w[1])
            .expect("consecutive states differ by one switch")
    });
    SwitchTrace::from_matrices(g.clone(), matrices)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fig1_g0, fig1_g2};
    use crate::transition::replay;

    #[test]
    fn forest_pair_found() {
        let out = constrained_transition_search(&fig1_g0(), &fig1_g2(), FamilyKind::Forests, 1000)
            .unwrap();
        let trace = out.trace().unwrap();
        assert_eq!(trace.len(), 1);
        assert_eq!(replay(trace).unwrap().last(), Some(&fig1_g2()));
    }

    #[test]
    fn same_graph_is_empty_trace() {
        let u = Graph::new(4, [(1, 2), (2, 3), (1, 3), (3, 4)]).unwrap();
        let out = constrained_transition_search(&u, &u, FamilyKind::Unicyclic, 10).unwrap();
        assert!(out.trace().unwrap().is_empty());
    }

    #[test]
    fn budget_is_reported() {
        let out = constrained_transition_search(&fig1_g0(), &fig1_g2(), FamilyKind::AllGraphs, 1)
            .unwrap();
        assert_eq!(out, SearchOutcome::BudgetExhausted { explored: 1 });
    }

    #[test]
    fn preconditions() {
        let a = Graph::new(4, [(1, 2), (3, 4)]).unwrap();
        let b = Graph::new(4, [(1, 2), (2, 3)]).unwrap();
        assert_eq!(
            constrained_transition_search(&a, &b, FamilyKind::Forests, 100),
            Err(ExplorerError::DegreeSequenceMismatch)
        );
        let c4 = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        assert_eq!(
            constrained_transition_search(&c4, &c4, FamilyKind::Forests, 100),
            Err(ExplorerError::NotInFamily(FamilyKind::Forests))
        );
    }
}
