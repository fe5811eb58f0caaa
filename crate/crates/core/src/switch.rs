//! The 2-switch as a total function on graphs.
//!
//! An [`ActionMatrix`] `a b / c d` names the switch that deletes the rows
//! `ab`, `cd` and adds the columns `ac`, `bd`. When the matrix is not
//! interchangeable in a graph the switch acts as the identity.

use std::fmt;
use std::str::FromStr;

use serde::Serialize;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ActionMatrix {
    pub a: Vertex,
    pub b: Vertex,
    pub c: Vertex,
    pub d: Vertex,
}

impl ActionMatrix {
    pub const fn new(a: Vertex, b: Vertex, c: Vertex, d: Vertex) -> Self {
        ActionMatrix { a, b, c, d }
    }

    pub fn to_array(self) -> [Vertex; 4] {
        [self.a, self.b, self.c, self.d]
    }

    /// `Aᵗ = a c / b d`, the inverse switch.
    pub fn transpose(self) -> Self {
        ActionMatrix::new(self.a, self.c, self.b, self.d)
    }

    /// Edges deleted by the switch (the rows).
    pub fn removed_edges(self) -> [(Vertex, Vertex); 2] {
        [(self.a, self.b), (self.c, self.d)]
    }

    /// Edges added by the switch (the columns).
    pub fn added_edges(self) -> [(Vertex, Vertex); 2] {
        [(self.a, self.c), (self.b, self.d)]
    }

    pub fn is_interchangeable(self, g: &Graph) -> bool {
        let ActionMatrix { a, b, c, d } = self;
        g.has_edge(a, b)
            && g.has_edge(c, d)
            && a != c
            && a != d
            && b != c
            && b != d
            && !g.has_edge(a, c)
            && !g.has_edge(b, d)
    }

    /// `G - ab - cd + ac + bd` when interchangeable, `G` otherwise.
    pub fn apply(self, g: &Graph) -> Graph {
        let mut out = g.clone();
        self.apply_in_place(&mut out);
        out
    }

    /// Applies the switch to `g`; returns whether it was nontrivial.
    pub fn apply_in_place(self, g: &mut Graph) -> bool {
        if !self.is_interchangeable(g) {
            return false;
        }
        for (u, v) in self.removed_edges() {
            g.remove_edge(u, v);
        }
        for (u, v) in self.added_edges() {
            g.insert_edge(u, v);
        }
        true
    }

    /// The four matrices obtained by swapping rows and/or columns. All of
    /// them define the same switch.
    pub fn equivalent_forms(self) -> [ActionMatrix; 4] {
        let ActionMatrix { a, b, c, d } = self;
        [
            ActionMatrix::new(a, b, c, d),
            ActionMatrix::new(c, d, a, b),
            ActionMatrix::new(b, a, d, c),
            ActionMatrix::new(d, c, b, a),
        ]
    }

    /// Structural classification: uses component membership and forest paths
    /// rather than applying the switch.
    pub fn classify(self, g: &Graph) -> SwitchKind {
        if !self.is_interchangeable(g) {
            return SwitchKind::Trivial;
        }
        if !g.is_forest() {
            return SwitchKind::Plain;
        }
        let ActionMatrix { a, b, c, d } = self;
        if g.component_mask(a) & g.component_mask(c) == 0 {
            return SwitchKind::FSwitch;
        }
        if has_form(g, a, b, c, d) || has_form(g, b, a, d, c) {
            if g.kappa() == 1 {
                SwitchKind::TSwitch
            } else {
                SwitchKind::FSwitch
            }
        } else {
            SwitchKind::Plain
        }
    }
}

/// Whether the forest path from `x` to `w` reads `(x y ... z w)`.
fn has_form(g: &Graph, x: Vertex, y: Vertex, z: Vertex, w: Vertex) -> bool {
    match g.bfs_path(x, w) {
        Some(p) if p.len() >= 4 => p[1] == y && p[p.len() - 2] == z,
        _ => false,
    }
}

pub fn is_interchangeable(a: ActionMatrix, g: &Graph) -> bool {
    a.is_interchangeable(g)
}

pub fn apply_switch(a: ActionMatrix, g: &Graph) -> Graph {
    a.apply(g)
}

pub fn inverse_matrix(a: ActionMatrix) -> ActionMatrix {
    a.transpose()
}

pub fn classify(a: ActionMatrix, g: &Graph) -> SwitchKind {
    a.classify(g)
}

/// Every distinct nontrivial 2-switch of `g`: for each pair of disjoint
/// edges `ab < cd`, the interchangeable ones among `a b / c d` and
/// `a b / d c`.
pub fn nontrivial_switches(g: &Graph) -> Vec<ActionMatrix> {
    let edges = g.edges();
    let mut out = Vec::new();
    for (i, &(a, b)) in edges.iter().enumerate() {
        for &(c, d) in &edges[i + 1..] {
            for m in [ActionMatrix::new(a, b, c, d), ActionMatrix::new(a, b, d, c)] {
                if m.is_interchangeable(g) {
                    out.push(m);
                }
            }
        }
    }
    out
}

impl fmt::Display for ActionMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} / {} {}", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for ActionMatrix {
    type Err = String;

    /// Accepts `a b / c d` (the slash is optional).
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let nums = s
            .split(|c: char| c == '/' || c == ',' || c.is_whitespace())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<Vertex>().map_err(|_| format!("bad label `{t}`")))
            .collect::<Result<Vec<_>, _>>()?;
        match nums[..] {
            [a, b, c, d] => Ok(ActionMatrix::new(a, b, c, d)),
            _ => Err(format!("expected four labels, got {}", nums.len())),
        }
    }
}

impl Serialize for ActionMatrix {
    fn serialize<S: serde::Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        self.to_array().serialize(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum SwitchKind {
    Trivial,
    Plain,
    TSwitch,
    FSwitch,
}

impl SwitchKind {
    pub fn is_nontrivial(self) -> bool {
        self != SwitchKind::Trivial
    }

    /// t-switches and f-switches keep a forest a forest.
    pub fn preserves_forest(self) -> bool {
        matches!(self, SwitchKind::TSwitch | SwitchKind::FSwitch)
    }
}
