mod common;

use proptest::prelude::*;
use twoswitch::switch::nontrivial_switches;
use twoswitch::{ActionMatrix, Graph, SwitchKind};

fn matrices(n: usize) -> impl Iterator<Item = ActionMatrix> {
    (1..=n).flat_map(move |a| {
        (1..=n).flat_map(move |b| {
            (1..=n).flat_map(move |c| (1..=n).map(move |d| ActionMatrix::new(a, b, c, d)))
        })
    })
}

#[test]
fn classification_matches_result_on_all_small_forests() {
    for n in 4..=6 {
        for edges in common::all_forests(n) {
            let f = Graph::new(n, edges).unwrap();
            for a in matrices(n) {
                let kind = a.classify(&f);
                let h = a.apply(&f);
                match kind {
                    SwitchKind::Trivial => assert_eq!(h, f),
                    SwitchKind::Plain => assert!(!common::is_forest(n, &h.edges()), "{a} on {f:?}"),
                    SwitchKind::TSwitch => {
                        assert_eq!(common::kappa(n, &f.edges()), 1);
                        assert!(
                            common::is_forest(n, &h.edges()) && common::kappa(n, &h.edges()) == 1
                        );
                    }
                    SwitchKind::FSwitch => {
                        assert!(common::kappa(n, &f.edges()) > 1);
                        assert!(common::is_forest(n, &h.edges()), "{a} on {f:?}");
                    }
                }
            }
        }
    }
}

#[test]
fn enumeration_lists_each_nontrivial_switch_once() {
    for g in common::all_graphs(5) {
        let listed = nontrivial_switches(&g);
        let mut results: Vec<Graph> = listed.iter().map(|a| a.apply(&g)).collect();
        let expected: std::collections::BTreeSet<Vec<(usize, usize)>> = matrices(5)
            .filter(|a| a.is_interchangeable(&g))
            .map(|a| a.apply(&g).edges())
            .collect();
        results.sort_by_key(|h| h.edges());
        results.dedup();
        assert_eq!(results.len(), listed.len());
        assert_eq!(
            results
                .into_iter()
                .map(|h| h.edges())
                .collect::<std::collections::BTreeSet<_>>(),
            expected
        );
    }
}

fn graph_and_matrix() -> impl Strategy<Value = (Graph, ActionMatrix)> {
    (4usize..=9).prop_flat_map(|n| {
        let pairs = common::all_pairs(n);
        (
            proptest::collection::vec(any::<bool>(), pairs.len()),
            proptest::array::uniform4(1..=n),
        )
            .prop_map(move |(keep, [a, b, c, d])| {
                let edges = pairs.iter().zip(&keep).filter(|(_, &k)| k).map(|(&e, _)| e);
                (Graph::new(n, edges).unwrap(), ActionMatrix::new(a, b, c, d))
            })
    })
}

proptest! {
    #[test]
    fn switch_preserves_degrees_and_inverts((g, a) in graph_and_matrix()) {
        let h = a.apply(&g);
        prop_assert_eq!(common::degrees(g.order(), &h.edges()), common::degrees(g.order(), &g.edges()));
        prop_assert_eq!(h.size(), g.size());
        if a.is_interchangeable(&g) {
            prop_assert!(a.transpose().is_interchangeable(&h));
            prop_assert_eq!(a.transpose().apply(&h), g.clone());
            prop_assert_eq!(g.edges_missing_from(&h), 2);
            for form in a.equivalent_forms() {
                prop_assert_eq!(form.apply(&g), h.clone());
            }
        } else {
            prop_assert_eq!(h, g);
        }
    }

    #[test]
    fn matrix_text_round_trips((_g, a) in graph_and_matrix()) {
        prop_assert_eq!(a.to_string().parse::<ActionMatrix>().unwrap(), a);
    }
}
