//! Labeled simple graphs on the vertex set `{1..n}`.
//!
//! A [`Graph`] keeps its order independently of its edges, so isolated
//! vertices are first-class. Adjacency is stored as one bitset row per
//! vertex; bit `i - 1` of row `v - 1` is set iff `v ~ i`. Iteration is always
//! by ascending label, which makes every operation deterministic.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};
use thiserror::Error;

/// A vertex label in `1..=n`.
pub type Vertex = usize;

/// Largest supported order (one `u64` adjacency row per vertex).
pub const MAX_ORDER: usize = 64;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("order {0} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge(usize),
    #[error("vertex {vertex} is outside 1..={order}")]
    VertexOutOfRange { vertex: Vertex, order: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(Vertex),
    #[error("duplicate edge {0}-{1}")]
    DuplicateEdge(Vertex, Vertex),
    #[error("graph is not a forest")]
    NotAForest,
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[inline]
pub(crate) fn bit(v: Vertex) -> u64 {
    1u64 << (v - 1)
}

/// Iterates the 1-based labels of the set bits of `mask`, ascending.
pub(crate) fn labels(mut mask: u64) -> impl Iterator<Item = Vertex> {
    std::iter::from_fn(move || {
        if mask == 0 {
            None
        } else {
            let i = mask.trailing_zeros() as usize;
            mask &= mask - 1;
            Some(i + 1)
        }
    })
}

#[inline]
pub(crate) fn full_mask(n: usize) -> u64 {
    if n == 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A finite, simple, undirected graph with vertex set `{1..n}`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<u64>,
    size: usize,
}

impl Graph {
    /// Builds a graph of order `n` from an edge list.
    pub fn new<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        if n > MAX_ORDER {
            return Err(GraphError::OrderTooLarge(n));
        }
        let mut g = Graph {
            rows: vec![0; n],
            size: 0,
        };
        for (u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(GraphError::VertexOutOfRange {
                        vertex: w,
                        order: n,
                    });
                }
            }
            if u == v {
                return Err(GraphError::SelfLoop(u));
            }
            if !g.insert_edge(u, v) {
                return Err(GraphError::DuplicateEdge(u.min(v), u.max(v)));
            }
        }
        Ok(g)
    }

    /// The edgeless graph of order `n`.
    ///
    /// # Panics
    /// If `n > MAX_ORDER`.
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_ORDER, "order {n} exceeds {MAX_ORDER}");
        Graph {
            rows: vec![0; n],
            size: 0,
        }
    }

    /// Builds a graph from symmetric adjacency rows. The caller guarantees
    /// symmetry and an empty diagonal.
    pub(crate) fn from_rows(rows: Vec<u64>) -> Self {
        debug_assert!(rows.len() <= MAX_ORDER);
        let size = rows.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2;
        Graph { rows, size }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn size(&self) -> usize {
        self.size
    }

    /// Adjacency rows, one per vertex (index `v - 1`).
    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    pub fn contains_vertex(&self, v: Vertex) -> bool {
        v >= 1 && v <= self.order()
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains_vertex(u) && self.contains_vertex(v) && self.rows[u - 1] & bit(v) != 0
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.rows[v - 1].count_ones() as usize
    }

    /// Neighbor set of `v` as a bitset over labels.
    pub fn neighbor_mask(&self, v: Vertex) -> u64 {
        self.rows[v - 1]
    }

    pub fn neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> {
        labels(self.rows[v - 1])
    }

    pub fn vertices(&self) -> std::ops::RangeInclusive<Vertex> {
        1..=self.order()
    }

    /// Edges `(u, v)` with `u < v`, sorted lexicographically.
    pub fn edges(&self) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::with_capacity(self.size);
        for u in self.vertices() {
            let above = self.rows[u - 1] & !full_mask(u);
            out.extend(labels(above).map(|v| (u, v)));
        }
        out
    }

    pub fn degree_sequence(&self) -> DegreeSequence {
        DegreeSequence(self.rows.iter().map(|r| r.count_ones() as usize).collect())
    }

    pub fn has_isolated_vertex(&self) -> bool {
        self.rows.contains(&0)
    }

    /// `|E(self) - E(other)|`: edges of `self` missing from `other`.
    pub fn edges_missing_from(&self, other: &Graph) -> usize {
        let mut count = 0;
        for (i, &r) in self.rows.iter().enumerate() {
            let o = other.rows.get(i).copied().unwrap_or(0);
            count += (r & !o).count_ones() as usize;
        }
        count / 2
    }

    /// Returns `true` if the edge was absent.
    pub(crate) fn insert_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if self.rows[u - 1] & bit(v) != 0 {
            return false;
        }
        self.rows[u - 1] |= bit(v);
        self.rows[v - 1] |= bit(u);
        self.size += 1;
        true
    }

    /// Returns `true` if the edge was present.
    pub(crate) fn remove_edge(&mut self, u: Vertex, v: Vertex) -> bool {
        if self.rows[u - 1] & bit(v) == 0 {
            return false;
        }
        self.rows[u - 1] &= !bit(v);
        self.rows[v - 1] &= !bit(u);
        self.size -= 1;
        true
    }

    /// Vertex set of the component containing `v`, as a bitset.
    pub fn component_mask(&self, v: Vertex) -> u64 {
        component_of(&self.rows, v - 1)
    }

    /// Connected components as ascending label lists, ordered by their
    /// lowest label.
    pub fn components(&self) -> Vec<Vec<Vertex>> {
        let mut seen = 0u64;
        let mut out = Vec::new();
        for v in self.vertices() {
            if seen & bit(v) == 0 {
                let comp = self.component_mask(v);
                seen |= comp;
                out.push(labels(comp).collect());
            }
        }
        out
    }

    /// Number of connected components, κ(G).
    pub fn kappa(&self) -> usize {
        count_components(&self.rows)
    }

    pub fn is_forest(&self) -> bool {
        self.size + self.kappa() == self.order()
    }

    pub fn is_tree(&self) -> bool {
        self.order() > 0 && self.kappa() == 1 && self.is_forest()
    }

    /// Exactly one cycle overall: `‖G‖ = n - κ(G) + 1`.
    pub fn is_unicyclic(&self) -> bool {
        self.size + self.kappa() == self.order() + 1
    }

    /// The unique path from `u` to `v` in a forest, or `None` when they lie in
    /// different components.
    pub fn path_in_forest(&self, u: Vertex, v: Vertex) -> Result<Option<Vec<Vertex>>, GraphError> {
        if !self.is_forest() {
            return Err(GraphError::NotAForest);
        }
        for w in [u, v] {
            if !self.contains_vertex(w) {
                return Err(GraphError::VertexOutOfRange {
                    vertex: w,
                    order: self.order(),
                });
            }
        }
        Ok(self.bfs_path(u, v))
    }

    /// Shortest path by BFS (unique in a forest).
    pub(crate) fn bfs_path(&self, u: Vertex, v: Vertex) -> Option<Vec<Vertex>> {
        if u == v {
            return Some(vec![u]);
        }
        let mut parent = vec![0usize; self.order() + 1];
        let mut seen = bit(u);
        let mut queue = VecDeque::from([u]);
        while let Some(x) = queue.pop_front() {
            for y in labels(self.rows[x - 1] & !seen) {
                seen |= bit(y);
                parent[y] = x;
                if y == v {
                    let mut path = vec![v];
                    let mut cur = v;
                    while cur != u {
                        cur = parent[cur];
                        path.push(cur);
                    }
                    path.reverse();
                    return Some(path);
                }
                queue.push_back(y);
            }
        }
        None
    }

    /// A 2-coloring when the graph is bipartite. The lowest label of each
    /// component goes to part A.
    pub fn bipartition(&self) -> Option<Bipartition> {
        let n = self.order();
        let mut side: Vec<Option<bool>> = vec![None; n + 1];
        for root in self.vertices() {
            if side[root].is_some() {
                continue;
            }
            side[root] = Some(false);
            let mut queue = VecDeque::from([root]);
            while let Some(x) = queue.pop_front() {
                let sx = side[x].unwrap();
                for y in self.neighbors(x) {
                    match side[y] {
                        None => {
                            side[y] = Some(!sx);
                            queue.push_back(y);
                        }
                        Some(sy) if sy == sx => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        let mut part_a = Vec::new();
        let mut part_b = Vec::new();
        for v in self.vertices() {
            if side[v] == Some(false) {
                part_a.push(v);
            } else {
                part_b.push(v);
            }
        }
        Some(Bipartition { part_a, part_b })
    }

    pub fn is_bipartite(&self) -> bool {
        is_bipartite_rows(&self.rows)
    }

    /// Relabels by `perm`, where vertex `v` becomes `perm[v - 1]`.
    pub fn relabel(&self, perm: &[Vertex]) -> Graph {
        assert_eq!(perm.len(), self.order());
        let mut g = Graph::empty(self.order());
        for (u, v) in self.edges() {
            g.insert_edge(perm[u - 1], perm[v - 1]);
        }
        g
    }

    /// Serializes in the edge-list text format: `n <order>` followed by one
    /// `u v` line per edge, sorted.
    pub fn to_edge_list(&self) -> String {
        let mut out = format!("n {}\n", self.order());
        for (u, v) in self.edges() {
            out.push_str(&format!("{u} {v}\n"));
        }
        out
    }

    pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
        let err = |line: usize, message: &str| GraphError::Parse {
            line,
            message: message.to_string(),
        };
        let mut order = None;
        let mut edges = Vec::new();
        for (i, raw) in text.lines().enumerate() {
            let line_no = i + 1;
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line.split_whitespace().collect();
            match order {
                None => {
                    if fields.len() != 2 || fields[0] != "n" {
                        return Err(err(line_no, "expected header `n <order>`"));
                    }
                    let n: usize = fields[1].parse().map_err(|_| err(line_no, "bad order"))?;
                    if n > MAX_ORDER {
                        return Err(GraphError::OrderTooLarge(n));
                    }
                    order = Some(n);
                }
                Some(n) => {
                    if fields.len() != 2 {
                        return Err(err(line_no, "expected `u v`"));
                    }
                    let u: usize = fields[0].parse().map_err(|_| err(line_no, "bad vertex"))?;
                    let v: usize = fields[1].parse().map_err(|_| err(line_no, "bad vertex"))?;
                    if !(1 <= u && u < v && v <= n) {
                        return Err(err(line_no, "edge must satisfy 1 <= u < v <= n"));
                    }
                    edges.push((u, v));
                }
            }
        }
        let n = order.ok_or_else(|| err(0, "missing header `n <order>`"))?;
        Graph::new(n, edges)
    }

    /// DOT export with vertices labeled `1..n`.
    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {name} {{\n");
        for v in self.vertices() {
            out.push_str(&format!("  {v};\n"));
        }
        for (u, v) in self.edges() {
            out.push_str(&format!("  {u} -- {v};\n"));
        }
        out.push_str("}\n");
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, {{", self.order())?;
        for (i, (u, v)) in self.edges().into_iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "}})")
    }
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let edges: Vec<[Vertex; 2]> = self.edges().into_iter().map(|(u, v)| [u, v]).collect();
        let mut st = serializer.serialize_struct("Graph", 2)?;
        st.serialize_field("n", &self.order())?;
        st.serialize_field("edges", &edges)?;
        st.end()
    }
}

pub(crate) fn component_of(rows: &[u64], start: usize) -> u64 {
    let mut comp = 1u64 << start;
    let mut frontier = comp;
    while frontier != 0 {
        let mut next = 0;
        for x in labels(frontier) {
            next |= rows[x - 1];
        }
        frontier = next & !comp;
        comp |= next;
    }
    comp
}

pub(crate) fn count_components(rows: &[u64]) -> usize {
    let mut remaining = full_mask(rows.len());
    let mut count = 0;
    while remaining != 0 {
        let start = remaining.trailing_zeros() as usize;
        remaining &= !component_of(rows, start);
        count += 1;
    }
    count
}

pub(crate) fn is_bipartite_rows(rows: &[u64]) -> bool {
    let n = rows.len();
    let mut unseen = full_mask(n);
    while unseen != 0 {
        let start = unseen.trailing_zeros() as usize;
        let mut even = 1u64 << start;
        let mut odd = 0u64;
        let mut frontier = even;
        let mut frontier_even = true;
        while frontier != 0 {
            let mut next = 0;
            for x in labels(frontier) {
                next |= rows[x - 1];
            }
            let (same, other) = if frontier_even {
                (even, odd)
            } else {
                (odd, even)
            };
            if next & same != 0 {
                return false;
            }
            let fresh = next & !other;
            if frontier_even {
                odd |= fresh;
            } else {
                even |= fresh;
            }
            frontier = fresh;
            frontier_even = !frontier_even;
        }
        unseen &= !(even | odd);
    }
    true
}

/// A partition of `{1..n}` into two parts with no edge inside a part.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Bipartition {
    pub part_a: Vec<Vertex>,
    pub part_b: Vec<Vertex>,
}

impl Bipartition {
    pub fn in_part_a(&self, v: Vertex) -> bool {
        self.part_a.binary_search(&v).is_ok()
    }

    pub fn same_part(&self, u: Vertex, v: Vertex) -> bool {
        self.in_part_a(u) == self.in_part_a(v)
    }
}

/// Degree vector `(d_1, ..., d_n)` indexed by vertex label.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(transparent)]
pub struct DegreeSequence(pub Vec<usize>);

impl DegreeSequence {
    pub fn order(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self, v: Vertex) -> usize {
        self.0[v - 1]
    }

    pub fn total(&self) -> usize {
        self.0.iter().sum()
    }

    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Non-increasing rearrangement.
    pub fn sorted_desc(&self) -> Vec<usize> {
        let mut d = self.0.clone();
        d.sort_unstable_by(|a, b| b.cmp(a));
        d
    }

    pub fn is_graphical(&self) -> bool {
        is_graphical(&self.0)
    }
}

impl fmt::Display for DegreeSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|d| d.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

impl FromStr for DegreeSequence {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim().trim_start_matches('(').trim_end_matches(')');
        if s.is_empty() {
            return Ok(DegreeSequence(Vec::new()));
        }
        s.split(|c: char| c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().map_err(|_| format!("bad degree `{t}`")))
            .collect::<Result<Vec<_>, _>>()
            .map(DegreeSequence)
    }
}

/// Erdős–Gallai test: `true` iff some simple graph on `{1..n}` has these
/// degrees.
pub fn is_graphical(degrees: &[usize]) -> bool {
    let n = degrees.len();
    let mut d = degrees.to_vec();
    d.sort_unstable_by(|a, b| b.cmp(a));
    if d.iter().sum::<usize>() % 2 != 0 {
        return false;
    }
    let mut prefix = 0;
    for k in 1..=n {
        prefix += d[k - 1];
        let tail: usize = d[k..].iter().map(|&x| x.min(k)).sum();
        if prefix > k * (k - 1) + tail {
            return false;
        }
    }
    true
}
