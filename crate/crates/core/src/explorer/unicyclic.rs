use std::collections::{BTreeMap, HashMap};

use serde::Serialize;

use super::masks::PairIndex;
use super::{check_cap, ExplorerError, FamilyKind};
use crate::graph::{DegreeSequence, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnicyclicFinding {
    pub sequence: DegreeSequence,
    pub graphs: usize,
    /// Sizes of the classes of graphs mutually reachable through unicyclic
    /// intermediates, largest first.
    pub class_sizes: Vec<usize>,
    /// The first graph (edge-list order) of each class.
    pub representatives: Vec<Graph>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UnicyclicReport {
    pub order: usize,
    pub sequences: usize,
    pub graphs: usize,
    /// Same-sequence pairs that are joined inside the family.
    pub connected_pairs: u64,
    /// Same-sequence pairs that are not.
    pub separated_pairs: u64,
    /// Sequences whose unicyclic realizations split into several classes.
    pub findings: Vec<UnicyclicFinding>,
}

/// Exhaustive reachability among unicyclic graphs on `[n]`: two graphs with
/// the same degree sequence are joined when a sequence of 2-switches with
/// every intermediate unicyclic takes one to the other.
pub fn unicyclic_transition_search(n: usize) -> Result<UnicyclicReport, ExplorerError> {
    check_cap(n, 7)?;
    let idx = PairIndex::new(n);
    let mut rows = vec![0u64; n];
    let members: Vec<u64> = (0..1u64 << idx.pair_count())
        .filter(|&m| {
            idx.fill_rows(m, &mut rows);
            FamilyKind::Unicyclic.contains_rows(&rows, m.count_ones() as usize)
        })
        .collect();
    let id: HashMap<u64, usize> = members.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let mut uf = UnionFind::new(members.len());
    for (i, &m) in members.iter().enumerate() {
        idx.for_each_switch(m, |_, next| {
            if let Some(&j) = id.get(&next) {
                uf.union(i, j);
            }
        });
    }
    let mut by_sequence: BTreeMap<Vec<usize>, BTreeMap<usize, Vec<u64>>> = BTreeMap::new();
    for (i, &m) in members.iter().enumerate() {
        let root = uf.find(i);
        by_sequence
            .entry(idx.degrees(m))
            .or_default()
            .entry(root)
            .or_default()
            .push(m);
    }
    let mut report = UnicyclicReport {
        order: n,
        sequences: by_sequence.len(),
        graphs: members.len(),
        connected_pairs: 0,
        separated_pairs: 0,
        findings: Vec::new(),
    };
    for (degrees, classes) in by_sequence {
        let sizes: Vec<u64> = classes.values().map(|c| c.len() as u64).collect();
        let total: u64 = sizes.iter().sum();
        let within: u64 = sizes.iter().map(|s| s * (s - 1) / 2).sum();
        report.connected_pairs += within;
        report.separated_pairs += total * (total - 1) / 2 - within;
        if classes.len() > 1 {
            let mut classes: Vec<Vec<u64>> = classes.into_values().collect();
            for c in &mut classes {
                c.sort_by(|&x, &y| lex_order(x, y));
            }
            classes.sort_by(|x, y| y.len().cmp(&x.len()).then(lex_order(x[0], y[0])));
            report.findings.push(UnicyclicFinding {
                sequence: DegreeSequence(degrees),
                graphs: total as usize,
                class_sizes: classes.iter().map(Vec::len).collect(),
                representatives: classes.iter().map(|c| idx.to_graph(c[0])).collect(),
            });
        }
    }
    Ok(report)
}

fn lex_order(x: u64, y: u64) -> std::cmp::Ordering {
    if x == y {
        std::cmp::Ordering::Equal
    } else if super::masks::lex_less(x, y) {
        std::cmp::Ordering::Less
    } else {
        std::cmp::Ordering::Greater
    }
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, x: usize, y: usize) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            self.parent[rx.max(ry)] = rx.min(ry);
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_orders() {
        let r = unicyclic_transition_search(4).unwrap();
        // 4-cycles (3), triangle plus pendant (12), triangle plus isolated vertex (4)
        assert_eq!(r.graphs, 19);
        assert_eq!(r.separated_pairs, 0);
        assert!(unicyclic_transition_search(8).is_err());
    }
}
