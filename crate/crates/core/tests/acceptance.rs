//! Acceptance run: one PASS/FAIL line per criterion.

mod common;

use std::collections::{BTreeSet, HashMap};
use std::process::ExitCode;
use std::time::Instant;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twoswitch::explorer::masks::PairIndex;
use twoswitch::explorer::{
    bipartite_counterexample_check, constrained_transition_search, edge_diff_audit,
    enumerate_family, interval_audit, interval_sweep, stability_sweep, FamilyKind, ValueTable,
};
use twoswitch::params::{
    adjacency_rank, edge_cover_number, independence_number, matching_number, vertex_cover_number,
};
use twoswitch::random::{random_forest, random_forest_walk};
use twoswitch::transition::replay;
use twoswitch::{fixtures, transition_forest, ActionMatrix, DegreeSequence, Graph, ParameterKind};

struct Outcome {
    passed: bool,
    detail: String,
}

fn outcome(passed: bool, detail: impl Into<String>) -> Outcome {
    Outcome {
        passed,
        detail: detail.into(),
    }
}

fn edge_set(g: &Graph) -> BTreeSet<(usize, usize)> {
    g.edges().into_iter().collect()
}

/// Checks one forest transition against independently computed
/// postconditions.
fn forest_transition_ok(f: &Graph, g: &Graph) -> bool {
    let Ok(trace) = transition_forest(f, g) else {
        return false;
    };
    let Ok(states) = replay(&trace) else {
        return false;
    };
    let reaches = states.last().map(edge_set) == Some(edge_set(g));
    let forests = states
        .iter()
        .all(|h| common::is_forest(h.order(), &h.edges()));
    let missing = edge_set(g).difference(&edge_set(f)).count();
    reaches && forests && trace.len() <= missing.saturating_sub(1)
}

fn forest_families(n: usize) -> Vec<Vec<Graph>> {
    let mut seqs: Vec<Vec<usize>> = common::all_forests(n)
        .iter()
        .map(|e| common::degrees(n, e))
        .collect();
    seqs.sort();
    seqs.dedup();
    seqs.into_iter()
        .map(|s| {
            enumerate_family(&DegreeSequence(s), FamilyKind::Forests)
                .unwrap()
                .collect()
        })
        .collect()
}

fn figure_one_replay() -> Outcome {
    let g0 = fixtures::fig1_g0();
    let g1 = ActionMatrix::new(2, 5, 3, 6).apply(&g0);
    let g2 = ActionMatrix::new(2, 1, 5, 6).apply(&g1);
    let ok = edge_set(&g1) == edge_set(&fixtures::fig1_g1())
        && edge_set(&g2) == edge_set(&fixtures::fig1_g2())
        && !g1.is_forest()
        && g2.is_tree();
    outcome(ok, format!("G1 = {:?}, G2 = {:?}", g1.edges(), g2.edges()))
}

fn forest_transitions_exhaustive() -> Outcome {
    let (mut pairs, mut bad) = (0u64, 0u64);
    for n in 0..=6 {
        for family in forest_families(n) {
            for f in &family {
                for g in &family {
                    pairs += 1;
                    if !forest_transition_ok(f, g) {
                        bad += 1;
                    }
                }
            }
        }
    }
    outcome(bad == 0, format!("{pairs} ordered pairs, {bad} violations"))
}

fn forest_transitions_random() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(0x2_5_3_6);
    let mut bad = 0;
    for _ in 0..500 {
        let n = rng.gen_range(1..=12);
        let f = random_forest(n, 0.85, &mut rng);
        let steps = rng.gen_range(1..=15);
        let g = random_forest_walk(&f, steps, &mut rng);
        if !forest_transition_ok(&f, &g) {
            bad += 1;
        }
    }
    outcome(bad == 0, format!("500 seeded pairs, {bad} violations"))
}

fn stability_exhaustive() -> Outcome {
    let mut failures = Vec::new();
    let mut checked = 0;
    for n in 1..=7 {
        let table = ValueTable::build(n).unwrap();
        for r in stability_sweep(&table) {
            checked += r.checked;
            if !r.passed {
                failures.push(format!("{} at n={n}: {:?}", r.kind, r.counterexample));
            }
        }
    }
    outcome(
        failures.is_empty(),
        format!(
            "all graphs n<=7, {checked} (graph, switch, kind) comparisons; failures: {failures:?}"
        ),
    )
}

fn interval_exhaustive() -> Outcome {
    let (mut reports, mut excluded, mut failures) = (0u64, 0u64, Vec::new());
    for n in 0..=7 {
        let table = ValueTable::build(n).unwrap();
        interval_sweep(&table, |r| {
            reports += 1;
            if r.skipped > 0 && r.checked == 0 {
                excluded += 1;
            }
            if !r.interval_ok {
                failures.push(format!(
                    "{} {:?} {}: {:?}",
                    r.sequence.as_ref().unwrap(),
                    r.family,
                    r.kind,
                    r.values
                ));
            }
        });
    }
    outcome(
        failures.is_empty(),
        format!("{reports} (sequence, family, kind) reports, {excluded} edge-cover exclusions; gaps: {failures:?}"),
    )
}

fn kappa_constancy() -> Outcome {
    let (mut sequences, mut forests, mut bad) = (0u64, 0u64, 0u64);
    for n in 0..=8 {
        let all = common::all_forests(n);
        let mut seqs: Vec<Vec<usize>> = all.iter().map(|e| common::degrees(n, e)).collect();
        seqs.sort();
        seqs.dedup();
        let mut seen = 0;
        for s in seqs {
            let r = interval_audit(
                &DegreeSequence(s),
                ParameterKind::Components,
                FamilyKind::Forests,
            )
            .unwrap();
            sequences += 1;
            seen += r.checked;
            if r.values.len() != 1 {
                bad += 1;
            }
        }
        forests += seen;
        if seen != all.len() as u64 {
            bad += 1;
        }
    }
    outcome(
        bad == 0,
        format!("{sequences} sequences, {forests} forests, {bad} non-singleton"),
    )
}

fn edge_difference() -> Outcome {
    let mut pairs = 0;
    let mut ok = true;
    for n in 0..=6 {
        let r = edge_diff_audit(n).unwrap();
        pairs += r.pairs_checked;
        ok &= r.passed;
    }
    outcome(
        ok,
        format!("{pairs} same-sequence pairs, none at difference 1"),
    )
}

fn identities() -> Outcome {
    let (mut graphs, mut bad) = (0u64, 0u64);
    for n in 0..=7 {
        let idx = PairIndex::new(n);
        for mask in 0..1u64 << idx.pair_count() {
            let g = idx.to_graph(mask);
            graphs += 1;
            if let Ok(eps) = edge_cover_number(&g) {
                if eps != n - matching_number(&g) {
                    bad += 1;
                }
            }
            if vertex_cover_number(&g) != n - independence_number(&g) {
                bad += 1;
            }
        }
    }
    let (mut forests, mut steps) = (0u64, 0u64);
    for n in 0..=8 {
        let idx = PairIndex::new(n);
        let mut rank_of: HashMap<u64, usize> = HashMap::new();
        let mut rank = |g: &Graph| {
            *rank_of
                .entry(idx.from_graph(g))
                .or_insert_with(|| adjacency_rank(g).unwrap())
        };
        for edges in common::all_forests(n) {
            let f = Graph::new(n, edges).unwrap();
            forests += 1;
            let r = rank(&f);
            if r != 2 * matching_number(&f) {
                bad += 1;
            }
            for a in twoswitch::switch::nontrivial_switches(&f) {
                if a.classify(&f).preserves_forest() {
                    steps += 1;
                    if !matches!(r.abs_diff(rank(&a.apply(&f))), 0 | 2) {
                        bad += 1;
                    }
                }
            }
        }
    }
    outcome(
        bad == 0,
        format!("{graphs} graphs (n<=7), {forests} forests (n<=8), {steps} f-switch rank steps, {bad} mismatches"),
    )
}

fn figure_two() -> Outcome {
    let budget = 200_000;
    let r = bipartite_counterexample_check(Some(budget)).unwrap();
    let closure = r.closure.as_ref().unwrap();
    let closure_text = if closure.reached_target {
        "closure REACHED G1".to_string()
    } else if closure.complete {
        format!(
            "closure complete at {} states, G1 unreachable",
            closure.explored
        )
    } else {
        format!(
            "closure budget exhausted at {} states, G1 not met (not gating)",
            closure.explored
        )
    };
    outcome(
        r.passed,
        format!(
            "{} bipartite-preserving of {} switches, {} part changes, {} disconnected remainders; hub neighbor degrees {:?} / {:?}; {closure_text}",
            r.one_step.bipartite_results,
            r.one_step.candidates,
            r.one_step.part_changes,
            r.one_step.disconnected_remainders,
            r.hub_neighbor_degrees.0,
            r.hub_neighbor_degrees.1,
        ),
    )
}

fn search_cross_check() -> Outcome {
    let (mut pairs, mut bad, mut shorter) = (0u64, 0u64, 0u64);
    for n in 0..=6 {
        for family in forest_families(n) {
            for f in &family {
                for g in &family {
                    pairs += 1;
                    let algo = transition_forest(f, g).unwrap().len();
                    match constrained_transition_search(f, g, FamilyKind::Forests, usize::MAX)
                        .unwrap()
                        .trace()
                    {
                        Some(t) if t.len() <= algo => shorter += u64::from(t.len() < algo),
                        _ => bad += 1,
                    }
                }
            }
        }
    }
    outcome(
        bad == 0,
        format!("{pairs} pairs, {bad} failures, BFS strictly shorter on {shorter}"),
    )
}

fn main() -> ExitCode {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("figure-1 replay", figure_one_replay),
        (
            "forest transitions, exhaustive n<=6",
            forest_transitions_exhaustive,
        ),
        (
            "forest transitions, 500 random pairs n<=12",
            forest_transitions_random,
        ),
        (
            "stability of nine parameters, all graphs n<=7",
            stability_exhaustive,
        ),
        ("interval property, all sequences n<=7", interval_exhaustive),
        (
            "components constant on forest families n<=8",
            kappa_constancy,
        ),
        (
            "no same-sequence pair at edge difference 1, n<=6",
            edge_difference,
        ),
        ("Gallai identities n<=7, forest rank n<=8", identities),
        ("figure-2 bipartite counterexample", figure_two),
        (
            "BFS vs transition algorithm on forests n<=6",
            search_cross_check,
        ),
    ];
    let mut all = true;
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let o = run();
        all &= o.passed;
        let verdict = if o.passed { "PASS" } else { "FAIL" };
        println!(
            "criterion {:>2} {verdict} {name} ({:.2?}): {}",
            i + 1,
            start.elapsed(),
            o.detail
        );
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
