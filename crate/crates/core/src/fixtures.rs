//! The graphs drawn in the reference figures, shipped as edge-list files.

use crate::graph::Graph;

pub const FIG1_G0: &str = include_str!("../fixtures/fig1_g0.edges");
pub const FIG1_G1: &str = include_str!("../fixtures/fig1_g1.edges");
pub const FIG1_G2: &str = include_str!("../fixtures/fig1_g2.edges");
pub const FIG2_G0: &str = include_str!("../fixtures/fig2_g0.edges");
pub const FIG2_G1: &str = include_str!("../fixtures/fig2_g1.edges");

/// Fixture names with their edge-list text.
pub const ALL: [(&str, &str); 5] = [
    ("fig1_g0", FIG1_G0),
    ("fig1_g1", FIG1_G1),
    ("fig1_g2", FIG1_G2),
    ("fig2_g0", FIG2_G0),
    ("fig2_g1", FIG2_G1),
];

pub fn by_name(name: &str) -> Option<Graph> {
    ALL.iter()
        .find(|(n, _)| *n == name)
        .map(|(_, text)| Graph::parse_edge_list(text).expect("fixture parses"))
}

/// Spider with three legs of length two: edges 12,13,14,25,36,47.
pub fn fig1_g0() -> Graph {
    by_name("fig1_g0").unwrap()
}

/// `fig1_g0` after the switch `2 5 / 3 6`; contains the triangle 1-2-3.
pub fn fig1_g1() -> Graph {
    by_name("fig1_g1").unwrap()
}

pub fn fig1_g2() -> Graph {
    by_name("fig1_g2").unwrap()
}

/// Bipartite, degree sequence (6,5,4,4,3,3,3,2,2,2,2) once sorted.
pub fn fig2_g0() -> Graph {
    by_name("fig2_g0").unwrap()
}

pub fn fig2_g1() -> Graph {
    by_name("fig2_g1").unwrap()
}
