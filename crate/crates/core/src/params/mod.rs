//! Exact graph parameters.
//!
//! General graphs use deterministic branch-and-bound over bitset adjacency
//! rows, always pivoting on the lowest label. Forests additionally have
//! rooted dynamic programs in [`forest`]; [`compute`] uses those when the
//! input is a forest.

pub mod forest;

use std::fmt;
use std::str::FromStr;

use serde::Serialize;
use thiserror::Error;

use crate::graph::{count_components, full_mask, labels, Graph, Vertex};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParamError {
    #[error("vertex {0} is isolated; edge cover is undefined")]
    IsolatedVertex(Vertex),
    #[error("graph is not a forest")]
    NotAForest,
    #[error("rank computation overflowed at order {0}")]
    RankOverflow(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ParameterKind {
    Matching,
    Independence,
    Domination,
    PathCover,
    EdgeCover,
    VertexCover,
    Chromatic,
    Clique,
    Components,
    Rank,
    Nullity,
}

impl ParameterKind {
    /// The nine parameters shown stable under 2-switch.
    pub const STABLE: [ParameterKind; 9] = [
        ParameterKind::Matching,
        ParameterKind::Independence,
        ParameterKind::Domination,
        ParameterKind::PathCover,
        ParameterKind::EdgeCover,
        ParameterKind::VertexCover,
        ParameterKind::Chromatic,
        ParameterKind::Clique,
        ParameterKind::Components,
    ];

    pub const ALL: [ParameterKind; 11] = [
        ParameterKind::Matching,
        ParameterKind::Independence,
        ParameterKind::Domination,
        ParameterKind::PathCover,
        ParameterKind::EdgeCover,
        ParameterKind::VertexCover,
        ParameterKind::Chromatic,
        ParameterKind::Clique,
        ParameterKind::Components,
        ParameterKind::Rank,
        ParameterKind::Nullity,
    ];

    pub fn name(self) -> &'static str {
        match self {
            ParameterKind::Matching => "matching",
            ParameterKind::Independence => "independence",
            ParameterKind::Domination => "domination",
            ParameterKind::PathCover => "path_cover",
            ParameterKind::EdgeCover => "edge_cover",
            ParameterKind::VertexCover => "vertex_cover",
            ParameterKind::Chromatic => "chromatic",
            ParameterKind::Clique => "clique",
            ParameterKind::Components => "components",
            ParameterKind::Rank => "rank",
            ParameterKind::Nullity => "nullity",
        }
    }

    /// Whether `g` lies in the kind's domain.
    pub fn applies_to(self, g: &Graph) -> bool {
        match self {
            ParameterKind::EdgeCover => !g.has_isolated_vertex(),
            ParameterKind::Rank | ParameterKind::Nullity => g.is_forest(),
            _ => true,
        }
    }
}

impl fmt::Display for ParameterKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for ParameterKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let kind = match s.to_ascii_lowercase().replace('-', "_").as_str() {
            "matching" | "mu" => ParameterKind::Matching,
            "independence" | "alpha" => ParameterKind::Independence,
            "domination" | "gamma" => ParameterKind::Domination,
            "path_cover" | "pi" => ParameterKind::PathCover,
            "edge_cover" | "epsilon" => ParameterKind::EdgeCover,
            "vertex_cover" | "nu" => ParameterKind::VertexCover,
            "chromatic" | "chi" => ParameterKind::Chromatic,
            "clique" | "omega" => ParameterKind::Clique,
            "components" | "kappa" => ParameterKind::Components,
            "rank" => ParameterKind::Rank,
            "nullity" => ParameterKind::Nullity,
            _ => return Err(format!("unknown parameter kind `{s}`")),
        };
        Ok(kind)
    }
}

/// Uniform dispatch. Forests go through the rooted dynamic programs.
pub fn compute(kind: ParameterKind, g: &Graph) -> Result<usize, ParamError> {
    let is_forest = g.is_forest();
    let value = match kind {
        ParameterKind::Matching if is_forest => forest::matching_number(g)?,
        ParameterKind::Matching => matching_number(g),
        ParameterKind::Independence if is_forest => forest::independence_number(g)?,
        ParameterKind::Independence => independence_number(g),
        ParameterKind::Domination if is_forest => forest::domination_number(g)?,
        ParameterKind::Domination => domination_number(g),
        ParameterKind::PathCover if is_forest => forest::path_cover_number(g)?,
        ParameterKind::PathCover => path_cover_number(g),
        ParameterKind::EdgeCover => edge_cover_number(g)?,
        ParameterKind::VertexCover => vertex_cover_number(g),
        ParameterKind::Chromatic => chromatic_number(g),
        ParameterKind::Clique => clique_number(g),
        ParameterKind::Components => g.kappa(),
        ParameterKind::Rank => forest_rank_nullity(g)?.0,
        ParameterKind::Nullity => forest_rank_nullity(g)?.1,
    };
    Ok(value)
}

/// Lowest vertex index (0-based) of a nonempty mask.
#[inline]
fn lowest(mask: u64) -> usize {
    mask.trailing_zeros() as usize
}

// ---------------------------------------------------------------- matching

/// μ(G), the size of a maximum matching.
pub fn matching_number(g: &Graph) -> usize {
    matching_rows(g.rows())
}

pub(crate) fn matching_rows(rows: &[u64]) -> usize {
    let mut best = 0;
    matching_search(rows, full_mask(rows.len()), 0, &mut best);
    best
}

// Some maximum matching covers any non-isolated vertex, so it suffices to
// branch over the partners of the lowest live vertex.
fn matching_search(rows: &[u64], mut alive: u64, size: usize, best: &mut usize) {
    loop {
        if alive == 0 {
            *best = (*best).max(size);
            return;
        }
        let v = lowest(alive);
        if rows[v] & alive != 0 {
            break;
        }
        alive &= !(1 << v);
    }
    let bound = size + alive.count_ones() as usize / 2;
    if bound <= *best {
        return;
    }
    let v = lowest(alive);
    let rest = alive & !(1 << v);
    let partners = rows[v] & rest;
    if partners.count_ones() == 1 {
        let u = lowest(partners);
        return matching_search(rows, rest & !(1 << u), size + 1, best);
    }
    for u in labels(partners) {
        matching_search(rows, rest & !(1 << (u - 1)), size + 1, best);
        if *best == bound {
            return;
        }
    }
}

/// ε(G), the minimum number of edges covering every vertex. Computed by
/// branching on the edge that covers the lowest uncovered vertex.
pub fn edge_cover_number(g: &Graph) -> Result<usize, ParamError> {
    if let Some(v) = g.vertices().find(|&v| g.degree(v) == 0) {
        return Err(ParamError::IsolatedVertex(v));
    }
    let rows = g.rows();
    let n = rows.len();
    let mut best = n;
    edge_cover_search(rows, full_mask(n), 0, &mut best);
    Ok(best)
}

fn edge_cover_search(rows: &[u64], uncovered: u64, used: usize, best: &mut usize) {
    if uncovered == 0 {
        *best = (*best).min(used);
        return;
    }
    if used + (uncovered.count_ones() as usize).div_ceil(2) >= *best {
        return;
    }
    let v = lowest(uncovered);
    let rest = uncovered & !(1 << v);
    // Uncovered partners first: they make more progress.
    let fresh = rows[v] & rest;
    for u in labels(fresh).chain(labels(rows[v] & !rest)) {
        edge_cover_search(rows, rest & !(1 << (u - 1)), used + 1, best);
    }
}

// ----------------------------------------------------- independence / cover

/// α(G), the size of a maximum independent set.
pub fn independence_number(g: &Graph) -> usize {
    independence_rows(g.rows())
}

pub(crate) fn independence_rows(rows: &[u64]) -> usize {
    let mut best = 0;
    independent_search(rows, full_mask(rows.len()), 0, &mut best);
    best
}

fn independent_search(rows: &[u64], mut alive: u64, size: usize, best: &mut usize) {
    let mut size = size;
    // Vertices of live degree <= 1 belong to some maximum independent set.
    loop {
        if alive == 0 {
            *best = (*best).max(size);
            return;
        }
        let mut changed = false;
        let mut scan = alive;
        while scan != 0 {
            let v = lowest(scan);
            scan &= scan - 1;
            if alive & (1 << v) == 0 {
                continue;
            }
            let nb = rows[v] & alive;
            if nb.count_ones() <= 1 {
                alive &= !(nb | (1 << v));
                scan &= alive;
                size += 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    if alive == 0 {
        *best = (*best).max(size);
        return;
    }
    if size + alive.count_ones() as usize <= *best {
        return;
    }
    let v = lowest(alive);
    independent_search(rows, alive & !(rows[v] | (1 << v)), size + 1, best);
    independent_search(rows, alive & !(1 << v), size, best);
}

/// ν(G), the size of a minimum vertex cover. Branches on the lowest
/// uncovered edge `uv`: one of its endpoints joins the cover.
pub fn vertex_cover_number(g: &Graph) -> usize {
    vertex_cover_rows(g.rows())
}

pub(crate) fn vertex_cover_rows(rows: &[u64]) -> usize {
    let n = rows.len();
    let mut best = n;
    vertex_cover_search(rows, full_mask(n), 0, &mut best);
    best
}

fn vertex_cover_search(rows: &[u64], alive: u64, used: usize, best: &mut usize) {
    if used >= *best {
        return;
    }
    let mut scan = alive;
    while scan != 0 {
        let u = lowest(scan);
        scan &= scan - 1;
        let nb = rows[u] & alive;
        if nb != 0 {
            let v = lowest(nb);
            vertex_cover_search(rows, alive & !(1 << u), used + 1, best);
            vertex_cover_search(rows, alive & !(1 << v), used + 1, best);
            return;
        }
    }
    *best = used;
}

// -------------------------------------------------------------- domination

/// γ(G), the size of a minimum dominating set.
pub fn domination_number(g: &Graph) -> usize {
    domination_rows(g.rows())
}

pub(crate) fn domination_rows(rows: &[u64]) -> usize {
    let n = rows.len();
    let mut best = n;
    domination_search(rows, full_mask(n), 0, &mut best);
    best
}

fn domination_search(rows: &[u64], undominated: u64, used: usize, best: &mut usize) {
    if undominated == 0 {
        *best = (*best).min(used);
        return;
    }
    if used + 1 >= *best {
        return;
    }
    // Some member of N[v] dominates the lowest undominated vertex v.
    let v = lowest(undominated);
    let closed = rows[v] | (1 << v);
    for u in labels(closed) {
        let ball = rows[u - 1] | (1 << (u - 1));
        domination_search(rows, undominated & !ball, used + 1, best);
    }
}

// -------------------------------------------------------------- path cover

/// π(G), the minimum number of vertex-disjoint paths covering `V(G)`.
///
/// A cover by `k` paths is a spanning linear forest with `n - k` edges, so
/// this maximizes the edge count of a linear forest by branch-and-bound
/// over the edges in lexicographic order.
pub fn path_cover_number(g: &Graph) -> usize {
    path_cover_rows(g.rows())
}

pub(crate) fn path_cover_rows(rows: &[u64]) -> usize {
    let n = rows.len();
    if n == 0 {
        return 0;
    }
    let mut edges = Vec::new();
    for u in 0..n {
        for v in labels(rows[u] & !full_mask(u + 1)) {
            edges.push((u, v - 1));
        }
    }
    let mut state = LinearForest {
        degree: vec![0; n],
        other_end: (0..n).collect(),
        remaining: vec![0; n],
    };
    for &(u, v) in &edges {
        state.remaining[u] += 1;
        state.remaining[v] += 1;
    }
    let ceiling = n - count_components(rows);
    let mut best = 0;
    state.search(&edges, 0, 0, ceiling, &mut best);
    n - best
}

struct LinearForest {
    degree: Vec<u8>,
    /// For a path endpoint, the other endpoint of its path.
    other_end: Vec<usize>,
    /// Undecided edges incident to each vertex.
    remaining: Vec<u32>,
}

impl LinearForest {
    fn capacity_bound(&self) -> usize {
        let total: u32 = self
            .degree
            .iter()
            .zip(&self.remaining)
            .map(|(&d, &r)| (2 - d as u32).min(r))
            .sum();
        total as usize / 2
    }

    fn search(
        &mut self,
        edges: &[(usize, usize)],
        next: usize,
        taken: usize,
        ceiling: usize,
        best: &mut usize,
    ) {
        if taken > *best {
            *best = taken;
        }
        if *best == ceiling || next == edges.len() {
            return;
        }
        if taken + self.capacity_bound().min(edges.len() - next) <= *best {
            return;
        }
        let (u, v) = edges[next];
        self.remaining[u] -= 1;
        self.remaining[v] -= 1;
        if self.degree[u] < 2 && self.degree[v] < 2 && self.other_end[u] != v {
            let (eu, ev) = (self.other_end[u], self.other_end[v]);
            self.degree[u] += 1;
            self.degree[v] += 1;
            self.other_end[eu] = ev;
            self.other_end[ev] = eu;
            self.search(edges, next + 1, taken + 1, ceiling, best);
            self.other_end[ev] = v;
            self.other_end[eu] = u;
            self.degree[u] -= 1;
            self.degree[v] -= 1;
        }
        if *best < ceiling {
            self.search(edges, next + 1, taken, ceiling, best);
        }
        self.remaining[u] += 1;
        self.remaining[v] += 1;
    }
}

// ------------------------------------------------------ chromatic / clique

/// χ(G) by iterative deepening on the number of colors.
pub fn chromatic_number(g: &Graph) -> usize {
    chromatic_rows(g.rows())
}

pub(crate) fn chromatic_rows(rows: &[u64]) -> usize {
    let n = rows.len();
    if n == 0 {
        return 0;
    }
    let mut colors = vec![usize::MAX; n];
    (1..=n)
        .find(|&k| color_search(rows, 0, k, 0, &mut colors))
        .expect("n colors always suffice")
}

fn color_search(rows: &[u64], v: usize, k: usize, used: usize, colors: &mut [usize]) -> bool {
    if v == rows.len() {
        return true;
    }
    let mut blocked = 0u64;
    for u in labels(rows[v] & full_mask(v)) {
        blocked |= 1 << colors[u - 1];
    }
    // Colors above `used` are interchangeable, so only one fresh color is tried.
    for c in 0..k.min(used + 1) {
        if blocked & (1 << c) == 0 {
            colors[v] = c;
            if color_search(rows, v + 1, k, used.max(c + 1), colors) {
                return true;
            }
        }
    }
    colors[v] = usize::MAX;
    false
}

/// ω(G) by Bron–Kerbosch with pivoting.
pub fn clique_number(g: &Graph) -> usize {
    clique_rows(g.rows())
}

pub(crate) fn clique_rows(rows: &[u64]) -> usize {
    let mut best = 0;
    bron_kerbosch(rows, 0, full_mask(rows.len()), 0, &mut best);
    best
}

fn bron_kerbosch(
    rows: &[u64],
    size: usize,
    mut candidates: u64,
    mut excluded: u64,
    best: &mut usize,
) {
    if candidates == 0 {
        if excluded == 0 {
            *best = (*best).max(size);
        }
        return;
    }
    if size + candidates.count_ones() as usize <= *best {
        return;
    }
    let pivot = labels(candidates | excluded)
        .max_by_key(|&p| (rows[p - 1] & candidates).count_ones())
        .unwrap();
    for v in labels(candidates & !rows[pivot - 1]) {
        let bit = 1u64 << (v - 1);
        let nb = rows[v - 1];
        bron_kerbosch(rows, size + 1, candidates & nb, excluded & nb, best);
        candidates &= !bit;
        excluded |= bit;
    }
}

// -------------------------------------------------------------------- rank

/// Rank of the adjacency matrix over the rationals, by fraction-free
/// (Bareiss) elimination.
pub fn adjacency_rank(g: &Graph) -> Result<usize, ParamError> {
    let n = g.order();
    let mut m: Vec<Vec<i128>> = g
        .rows()
        .iter()
        .map(|&r| (0..n).map(|j| ((r >> j) & 1) as i128).collect())
        .collect();
    let overflow = || ParamError::RankOverflow(n);
    let mut rank = 0;
    let mut prev = 1i128;
    for col in 0..n {
        let Some(pivot) = (rank..n).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pivot);
        for r in rank + 1..n {
            for c in col + 1..n {
                let lhs = m[rank][col].checked_mul(m[r][c]).ok_or_else(overflow)?;
                let rhs = m[r][col].checked_mul(m[rank][c]).ok_or_else(overflow)?;
                m[r][c] = lhs.checked_sub(rhs).ok_or_else(overflow)? / prev;
            }
            m[r][col] = 0;
        }
        prev = m[rank][col];
        rank += 1;
    }
    Ok(rank)
}

/// `(rank, nullity) = (2μ(F), n - 2μ(F))` for a forest.
pub fn forest_rank_nullity(f: &Graph) -> Result<(usize, usize), ParamError> {
    let mu = forest::matching_number(f)?;
    Ok((2 * mu, f.order() - 2 * mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{fig1_g0, fig1_g1};

    fn complete(n: usize) -> Graph {
        let edges = (1..=n).flat_map(|u| (u + 1..=n).map(move |v| (u, v)));
        Graph::new(n, edges).unwrap()
    }

    fn star(leaves: usize) -> Graph {
        Graph::new(leaves + 1, (2..=leaves + 1).map(|v| (1, v))).unwrap()
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i, i + 1))).unwrap()
    }

    fn matching(pairs: usize) -> Graph {
        Graph::new(2 * pairs, (0..pairs).map(|i| (2 * i + 1, 2 * i + 2))).unwrap()
    }

    #[test]
    fn figure1_values() {
        let g0 = fig1_g0();
        assert_eq!(matching_number(&g0), 3);
        assert_eq!(independence_number(&g0), 4);
        assert_eq!(vertex_cover_number(&g0), 3);
        assert_eq!(domination_number(&g0), 3);
        assert_eq!(path_cover_number(&g0), 2);
        assert_eq!(edge_cover_number(&g0), Ok(4));
        assert_eq!(chromatic_number(&g0), 2);
        assert_eq!(clique_number(&g0), 2);
        assert_eq!(forest_rank_nullity(&g0), Ok((6, 1)));
        assert_eq!(adjacency_rank(&g0), Ok(6));
        let g1 = fig1_g1();
        assert_eq!(chromatic_number(&g1), 3);
        assert_eq!(clique_number(&g1), 3);
    }

    #[test]
    fn small_families() {
        assert_eq!(matching_number(&Graph::empty(4)), 0);
        let k4 = complete(4);
        assert_eq!(independence_number(&k4), 1);
        assert_eq!(vertex_cover_number(&k4), 3);
        assert_eq!(chromatic_number(&k4), 4);
        assert_eq!(clique_number(&k4), 4);
        let e5 = Graph::empty(5);
        assert_eq!(independence_number(&e5), 5);
        assert_eq!(vertex_cover_number(&e5), 0);
        assert_eq!(domination_number(&star(4)), 1);
        assert_eq!(domination_number(&Graph::empty(3)), 3);
        assert_eq!(path_cover_number(&path(6)), 1);
        assert_eq!(path_cover_number(&Graph::empty(4)), 4);
        assert_eq!(edge_cover_number(&matching(2)), Ok(2));
        assert_eq!(chromatic_number(&Graph::empty(2)), 1);
        assert_eq!(clique_number(&Graph::empty(2)), 1);
        assert_eq!(forest_rank_nullity(&Graph::empty(3)), Ok((0, 3)));
        assert_eq!(forest_rank_nullity(&matching(3)), Ok((6, 0)));
    }

    #[test]
    fn degenerate_order_zero() {
        let g = Graph::empty(0);
        assert_eq!(matching_number(&g), 0);
        assert_eq!(domination_number(&g), 0);
        assert_eq!(chromatic_number(&g), 0);
        assert_eq!(clique_number(&g), 0);
        assert_eq!(path_cover_number(&g), 0);
        assert_eq!(g.kappa(), 0);
    }

    #[test]
    fn domain_errors() {
        let g = Graph::new(3, [(1, 2)]).unwrap();
        assert_eq!(edge_cover_number(&g), Err(ParamError::IsolatedVertex(3)));
        assert_eq!(forest_rank_nullity(&fig1_g1()), Err(ParamError::NotAForest));
        assert_eq!(
            compute(ParameterKind::Rank, &fig1_g1()),
            Err(ParamError::NotAForest)
        );
    }

    #[test]
    fn dispatch() {
        assert_eq!(compute(ParameterKind::Components, &fig1_g1()), Ok(2));
        assert_eq!(compute(ParameterKind::Matching, &Graph::empty(3)), Ok(0));
        assert_eq!(compute(ParameterKind::Domination, &fig1_g0()), Ok(3));
        assert_eq!(compute(ParameterKind::Nullity, &fig1_g0()), Ok(1));
    }

    #[test]
    fn kind_names_round_trip() {
        for kind in ParameterKind::ALL {
            assert_eq!(kind.name().parse::<ParameterKind>(), Ok(kind));
        }
        assert_eq!(
            "gamma".parse::<ParameterKind>(),
            Ok(ParameterKind::Domination)
        );
        assert!("girth".parse::<ParameterKind>().is_err());
    }

    #[test]
    fn rank_of_cycles() {
        // C4 has rank 2, C5 full rank.
        let c4 = Graph::new(4, [(1, 2), (2, 3), (3, 4), (1, 4)]).unwrap();
        let c5 = Graph::new(5, [(1, 2), (2, 3), (3, 4), (4, 5), (1, 5)]).unwrap();
        assert_eq!(adjacency_rank(&c4), Ok(2));
        assert_eq!(adjacency_rank(&c5), Ok(5));
        assert_eq!(adjacency_rank(&complete(6)), Ok(6));
    }
}
