use super::masks::PairIndex;
use super::{check_cap, ExplorerError, FamilyKind};
use crate::graph::{component_of, DegreeSequence, Graph};

pub const DEFAULT_ENUMERATION_CAP: usize = 9;

/// Every labeled graph on `[n]` realizing `s` and lying in `fam`, in
/// lexicographic order of sorted edge lists.
///
/// A non-graphical sequence yields an empty stream with
/// [`Enumeration::not_graphical`] set.
pub fn enumerate_family(s: &DegreeSequence, fam: FamilyKind) -> Result<Enumeration, ExplorerError> {
    Enumeration::with_cap(s, fam, DEFAULT_ENUMERATION_CAP)
}

/// Depth-first search over vertex pairs, trying "include" before "exclude".
#[derive(Debug, Clone)]
pub struct Enumeration {
    pub not_graphical: bool,
    fam: FamilyKind,
    index: PairIndex,
    residual: Vec<usize>,
    rows: Vec<u64>,
    mask: u64,
    choices: Vec<bool>,
    exhausted: bool,
}

impl Enumeration {
    pub fn with_cap(
        s: &DegreeSequence,
        fam: FamilyKind,
        cap: usize,
    ) -> Result<Self, ExplorerError> {
        let n = s.order();
        check_cap(n, cap.min(super::masks::MASK_MAX_ORDER))?;
        let not_graphical = !s.is_graphical();
        Ok(Enumeration {
            not_graphical,
            fam,
            index: PairIndex::new(n),
            residual: s.0.clone(),
            rows: vec![0; n],
            mask: 0,
            choices: Vec::new(),
            exhausted: not_graphical,
        })
    }

    pub fn pair_index(&self) -> &PairIndex {
        &self.index
    }

    /// The next member as an edge mask over [`Enumeration::pair_index`].
    pub fn next_mask(&mut self) -> Option<u64> {
        if self.exhausted {
            return None;
        }
        let m = self.index.pair_count();
        loop {
            let depth = self.choices.len();
            if depth == m {
                let found = self.residual.iter().all(|&r| r == 0)
                    && self
                        .fam
                        .contains_rows(&self.rows, self.mask.count_ones() as usize);
                let mask = self.mask;
                if !self.backtrack() {
                    self.exhausted = true;
                }
                if found {
                    return Some(mask);
                }
                if self.exhausted {
                    return None;
                }
                continue;
            }
            if self.can_include(depth) {
                self.include(depth);
                self.choices.push(true);
            } else if self.can_exclude(depth) {
                self.choices.push(false);
            } else if !self.backtrack() {
                self.exhausted = true;
                return None;
            }
        }
    }

    /// Pops choices until one can be flipped from include to exclude.
    fn backtrack(&mut self) -> bool {
        while let Some(included) = self.choices.pop() {
            let depth = self.choices.len();
            if included {
                self.exclude_undo(depth);
                if self.can_exclude(depth) {
                    self.choices.push(false);
                    return true;
                }
            }
        }
        false
    }

    fn can_include(&self, p: usize) -> bool {
        let (u, v) = self.index.pair(p);
        let (ru, rv) = (self.residual[u], self.residual[v]);
        if ru == 0 || rv == 0 {
            return false;
        }
        if ru - 1 > self.later_slots_u(u, v) || rv - 1 > self.later_slots_v(u, v) {
            return false;
        }
        match self.fam {
            FamilyKind::Forests => component_of(&self.rows, u) & (1 << v) == 0,
            FamilyKind::Unicyclic => {
                // At most one cycle may ever be closed.
                let cycles = self.mask.count_ones() as usize + super::count_components(&self.rows)
                    - self.rows.len();
                cycles == 0 || component_of(&self.rows, u) & (1 << v) == 0
            }
            _ => true,
        }
    }

    fn can_exclude(&self, p: usize) -> bool {
        let (u, v) = self.index.pair(p);
        self.residual[u] <= self.later_slots_u(u, v) && self.residual[v] <= self.later_slots_v(u, v)
    }

    // Pairs after (u, v) that still touch u: (u, v+1..n).
    fn later_slots_u(&self, _u: usize, v: usize) -> usize {
        self.rows.len() - 1 - v
    }

    // Pairs after (u, v) that still touch v: (u+1..v, v) and (v, v+1..n).
    fn later_slots_v(&self, u: usize, v: usize) -> usize {
        (v - u - 1) + (self.rows.len() - 1 - v)
    }

    fn include(&mut self, p: usize) {
        let (u, v) = self.index.pair(p);
        self.residual[u] -= 1;
        self.residual[v] -= 1;
        self.rows[u] |= 1 << v;
        self.rows[v] |= 1 << u;
        self.mask |= 1 << p;
    }

    fn exclude_undo(&mut self, p: usize) {
        let (u, v) = self.index.pair(p);
        self.residual[u] += 1;
        self.residual[v] += 1;
        self.rows[u] &= !(1 << v);
        self.rows[v] &= !(1 << u);
        self.mask &= !(1 << p);
    }
}

impl Iterator for Enumeration {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        self.next_mask().map(|m| self.index.to_graph(m))
    }
}
