//! Graphs on at most 11 vertices packed into one `u64`: bit `i` is the
//! `i`-th vertex pair in lexicographic order `(1,2), (1,3), …, (n-1,n)`.

use crate::graph::Graph;
use crate::switch::ActionMatrix;

/// Largest order whose pairs fit in a `u64`.
pub const MASK_MAX_ORDER: usize = 11;

#[derive(Debug, Clone)]
pub struct PairIndex {
    n: usize,
    pairs: Vec<(u8, u8)>,
    index: Vec<Vec<u8>>,
}

impl PairIndex {
    pub fn new(n: usize) -> Self {
        assert!(n <= MASK_MAX_ORDER, "order {n} does not fit a pair mask");
        let mut pairs = Vec::with_capacity(n * n.saturating_sub(1) / 2);
        let mut index = vec![vec![u8::MAX; n]; n];
        for u in 0..n {
            for v in u + 1..n {
                index[u][v] = pairs.len() as u8;
                index[v][u] = pairs.len() as u8;
                pairs.push((u as u8, v as u8));
            }
        }
        PairIndex { n, pairs, index }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    pub fn pair_count(&self) -> usize {
        self.pairs.len()
    }

    /// 0-based endpoints of pair `i`.
    #[inline]
    pub fn pair(&self, i: usize) -> (usize, usize) {
        let (u, v) = self.pairs[i];
        (u as usize, v as usize)
    }

    /// Bit of the pair on 0-based vertices `u != v`.
    #[inline]
    pub fn bit(&self, u: usize, v: usize) -> u64 {
        1 << self.index[u][v]
    }

    pub fn rows(&self, mask: u64) -> Vec<u64> {
        let mut rows = vec![0u64; self.n];
        self.fill_rows(mask, &mut rows);
        rows
    }

    pub fn fill_rows(&self, mut mask: u64, rows: &mut [u64]) {
        rows.fill(0);
        while mask != 0 {
            let (u, v) = self.pair(mask.trailing_zeros() as usize);
            rows[u] |= 1 << v;
            rows[v] |= 1 << u;
            mask &= mask - 1;
        }
    }

    pub fn degrees(&self, mut mask: u64) -> Vec<usize> {
        let mut deg = vec![0; self.n];
        while mask != 0 {
            let (u, v) = self.pair(mask.trailing_zeros() as usize);
            deg[u] += 1;
            deg[v] += 1;
            mask &= mask - 1;
        }
        deg
    }

    /// Degrees packed three bits per vertex; equal keys mean equal labeled
    /// degree sequences (valid for `n <= 8`).
    pub fn degree_key(&self, mut mask: u64) -> u32 {
        let mut key = 0u32;
        while mask != 0 {
            let (u, v) = self.pair(mask.trailing_zeros() as usize);
            key += (1 << (3 * u)) + (1 << (3 * v));
            mask &= mask - 1;
        }
        key
    }

    pub fn to_graph(&self, mask: u64) -> Graph {
        Graph::from_rows(self.rows(mask))
    }

    pub fn from_graph(&self, g: &Graph) -> u64 {
        assert_eq!(g.order(), self.n);
        g.edges()
            .into_iter()
            .fold(0, |m, (u, v)| m | self.bit(u - 1, v - 1))
    }

    /// Applies `a b / c d` (0-based) when interchangeable in `mask`.
    #[inline]
    pub fn switch(&self, mask: u64, a: usize, b: usize, c: usize, d: usize) -> Option<u64> {
        let (ab, cd, ac, bd) = (
            self.bit(a, b),
            self.bit(c, d),
            self.bit(a, c),
            self.bit(b, d),
        );
        (mask & ab != 0 && mask & cd != 0 && mask & (ac | bd) == 0)
            .then_some(mask ^ ab ^ cd ^ ac ^ bd)
    }

    /// Calls `f(matrix, result)` for every nontrivial 2-switch of `mask`,
    /// each switch once, in the order of
    /// [`nontrivial_switches`](crate::switch::nontrivial_switches).
    pub fn for_each_switch(&self, mask: u64, mut f: impl FnMut(ActionMatrix, u64)) {
        let mut outer = mask;
        while outer != 0 {
            let i = outer.trailing_zeros() as usize;
            outer &= outer - 1;
            let (a, b) = self.pair(i);
            let mut inner = outer;
            while inner != 0 {
                let j = inner.trailing_zeros() as usize;
                inner &= inner - 1;
                let (c, d) = self.pair(j);
                if a == c || a == d || b == c || b == d {
                    continue;
                }
                if let Some(out) = self.switch(mask, a, b, c, d) {
                    f(ActionMatrix::new(a + 1, b + 1, c + 1, d + 1), out);
                }
                if let Some(out) = self.switch(mask, a, b, d, c) {
                    f(ActionMatrix::new(a + 1, b + 1, d + 1, c + 1), out);
                }
            }
        }
    }

    /// Recovers the switch taking `from` to `to`, if they differ by one.
    pub fn switch_between(&self, from: u64, to: u64) -> Option<ActionMatrix> {
        let removed = from & !to;
        let added = to & !from;
        if removed.count_ones() != 2 || added.count_ones() != 2 {
            return None;
        }
        let (p, q) = self.pair(removed.trailing_zeros() as usize);
        let (r, s) = self.pair(63 - removed.leading_zeros() as usize);
        if p == r || p == s || q == r || q == s {
            return None;
        }
        for (a, b) in [(p, q), (q, p)] {
            for (c, d) in [(r, s), (s, r)] {
                if self.switch(from, a, b, c, d) == Some(to) {
                    return Some(ActionMatrix::new(a + 1, b + 1, c + 1, d + 1));
                }
            }
        }
        None
    }

    /// Image of `mask` under the vertex permutation given as a pair map.
    #[inline]
    pub fn permute(pair_map: &[u8], mut mask: u64) -> u64 {
        let mut out = 0;
        while mask != 0 {
            out |= 1 << pair_map[mask.trailing_zeros() as usize];
            mask &= mask - 1;
        }
        out
    }

    /// Pair map of a 0-based vertex permutation.
    pub fn pair_map(&self, perm: &[usize]) -> Vec<u8> {
        self.pairs
            .iter()
            .map(|&(u, v)| self.index[perm[u as usize]][perm[v as usize]])
            .collect()
    }
}

/// Whether the sorted edge list of `x` precedes that of `y` (same size).
#[inline]
pub fn lex_less(x: u64, y: u64) -> bool {
    let diff = x ^ y;
    diff != 0 && x & (diff & diff.wrapping_neg()) != 0
}

/// All permutations of `0..n` in lexicographic order.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        out.push(perm.clone());
        let Some(i) = (1..n).rev().find(|&i| perm[i - 1] < perm[i]) else {
            return out;
        };
        let j = (i..n).rev().find(|&j| perm[j] > perm[i - 1]).unwrap();
        perm.swap(i - 1, j);
        perm[i..].reverse();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::fig1_g0;
    use crate::switch::nontrivial_switches;

    #[test]
    fn round_trip() {
        let idx = PairIndex::new(7);
        let g = fig1_g0();
        let mask = idx.from_graph(&g);
        assert_eq!(mask.count_ones(), 6);
        assert_eq!(idx.to_graph(mask), g);
        assert_eq!(idx.degrees(mask), g.degree_sequence().0);
    }

    #[test]
    fn switches_match_graph_level() {
        let idx = PairIndex::new(7);
        let g = fig1_g0();
        let mask = idx.from_graph(&g);
        let mut seen = Vec::new();
        idx.for_each_switch(mask, |a, out| {
            assert_eq!(idx.to_graph(out), a.apply(&g));
            let back = idx.switch_between(mask, out).unwrap();
            assert_eq!(back.apply(&g), a.apply(&g));
            seen.push(a);
        });
        assert_eq!(seen, nontrivial_switches(&g));
    }

    #[test]
    fn lexicographic_comparison() {
        // {12, 34} precedes {13, 24}
        let idx = PairIndex::new(4);
        let x = idx.bit(0, 1) | idx.bit(2, 3);
        let y = idx.bit(0, 2) | idx.bit(1, 3);
        assert!(lex_less(x, y));
        assert!(!lex_less(y, x));
        assert!(!lex_less(x, x));
    }

    #[test]
    fn permutation_count() {
        assert_eq!(permutations(4).len(), 24);
        assert_eq!(permutations(0).len(), 1);
    }
}
