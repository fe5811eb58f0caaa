use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use super::masks::{lex_less, PairIndex};
use super::table::{stable_slot, ValueTable};
use super::{check_cap, enumerate_family, ExplorerError, FamilyKind};
use crate::graph::{DegreeSequence, Graph};
use crate::params::{compute, ParameterKind};
use crate::switch::{nontrivial_switches, ActionMatrix};
use crate::transition::{replay, transition_forest, transition_graph};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub kind: ParameterKind,
    pub order: usize,
    pub family: Option<FamilyKind>,
    pub sequence: Option<DegreeSequence>,
    pub values: Vec<usize>,
    pub interval_ok: bool,
    pub witnesses: BTreeMap<usize, Graph>,
    pub counterexample: Option<(Graph, ActionMatrix)>,
    pub checked: u64,
    pub skipped: u64,
    pub note: Option<String>,
    pub passed: bool,
}

impl AuditReport {
    fn new(kind: ParameterKind, order: usize) -> Self {
        AuditReport {
            kind,
            order,
            family: None,
            sequence: None,
            values: Vec::new(),
            interval_ok: true,
            witnesses: BTreeMap::new(),
            counterexample: None,
            checked: 0,
            skipped: 0,
            note: None,
            passed: true,
        }
    }

    fn set_values(&mut self, values: impl IntoIterator<Item = usize>) {
        self.values = values.into_iter().collect();
        self.values.sort_unstable();
        self.values.dedup();
        self.interval_ok = is_interval(&self.values);
    }
}

fn is_interval(sorted: &[usize]) -> bool {
    sorted.windows(2).all(|w| w[1] == w[0] + 1)
}

#[derive(Debug, Clone)]
pub enum StabilityScope {
    Graph(Graph),
    Order(usize),
}

/// Checks `|ξ(τ(G)) − ξ(G)| <= 1` over every nontrivial 2-switch of the
/// scope. Pairs outside the parameter's domain are counted as skipped.
pub fn stability_audit(
    kind: ParameterKind,
    scope: &StabilityScope,
) -> Result<AuditReport, ExplorerError> {
    match scope {
        StabilityScope::Graph(g) => Ok(stability_of_graph(kind, g)),
        StabilityScope::Order(n) => {
            if stable_slot(kind).is_none() {
                return Err(ExplorerError::OutOfDomain(kind));
            }
            let table = ValueTable::build(*n)?;
            Ok(stability_sweep(&table)
                .into_iter()
                .find(|r| r.kind == kind)
                .unwrap())
        }
    }
}

fn stability_of_graph(kind: ParameterKind, g: &Graph) -> AuditReport {
    let mut report = AuditReport::new(kind, g.order());
    let base = compute(kind, g).ok();
    let mut values: Vec<usize> = base.into_iter().collect();
    for a in nontrivial_switches(g) {
        let h = a.apply(g);
        match (base, compute(kind, &h).ok()) {
            (Some(x), Some(y)) => {
                report.checked += 1;
                values.push(y);
                if x.abs_diff(y) > 1 && report.counterexample.is_none() {
                    report.counterexample = Some((g.clone(), a));
                }
            }
            _ => report.skipped += 1,
        }
    }
    if base.is_none() {
        report.note = Some(format!("{kind} is undefined on this graph"));
    }
    report.set_values(values);
    report.passed = report.counterexample.is_none();
    report
}

#[derive(Clone)]
struct SweepPart {
    checked: [u64; 9],
    skipped: [u64; 9],
    seen: [u16; 9],
    first: [Option<(u64, ActionMatrix)>; 9],
}

impl SweepPart {
    fn new() -> Self {
        SweepPart {
            checked: [0; 9],
            skipped: [0; 9],
            seen: [0; 9],
            first: [None; 9],
        }
    }

    fn merge(mut self, other: SweepPart) -> SweepPart {
        for k in 0..9 {
            self.checked[k] += other.checked[k];
            self.skipped[k] += other.skipped[k];
            self.seen[k] |= other.seen[k];
            if self.first[k].is_none() {
                self.first[k] = other.first[k];
            }
        }
        self
    }
}

/// Stability of all nine kinds over every graph of the table's order and
/// every nontrivial 2-switch, one report per kind. The first counterexample
/// in mask order is kept, so the result does not depend on thread count.
pub fn stability_sweep(table: &ValueTable) -> Vec<AuditReport> {
    const CHUNK: u64 = 1 << 12;
    let idx = table.pair_index();
    let total = table.len() as u64;
    let chunks = total.div_ceil(CHUNK);
    let part = (0..chunks)
        .into_par_iter()
        .map(|c| {
            let mut part = SweepPart::new();
            for mask in c * CHUNK..total.min((c + 1) * CHUNK) {
                let here = table.row(mask);
                for k in 0..9 {
                    if here[k] != ValueTable::UNDEFINED {
                        part.seen[k] |= 1 << here[k];
                    }
                }
                idx.for_each_switch(mask, |a, out| {
                    let there = table.row(out);
                    for k in 0..9 {
                        let (x, y) = (here[k], there[k]);
                        if x == ValueTable::UNDEFINED || y == ValueTable::UNDEFINED {
                            part.skipped[k] += 1;
                            continue;
                        }
                        part.checked[k] += 1;
                        if x.abs_diff(y) > 1 && part.first[k].is_none() {
                            part.first[k] = Some((mask, a));
                        }
                    }
                });
            }
            part
        })
        .reduce(SweepPart::new, SweepPart::merge);
    ParameterKind::STABLE
        .iter()
        .enumerate()
        .map(|(k, &kind)| {
            let mut report = AuditReport::new(kind, table.order());
            report.family = Some(FamilyKind::AllGraphs);
            report.checked = part.checked[k];
            report.skipped = part.skipped[k];
            report.set_values((0..16).filter(|v| part.seen[k] & (1 << v) != 0));
            report.counterexample = part.first[k].map(|(m, a)| (idx.to_graph(m), a));
            report.passed = report.counterexample.is_none();
            if report.skipped > 0 {
                report.note = Some(format!(
                    "{} switch pairs skipped: {kind} undefined",
                    report.skipped
                ));
            }
            report
        })
        .collect()
}

fn check_interval_family(fam: FamilyKind) -> Result<(), ExplorerError> {
    match fam {
        FamilyKind::AllGraphs | FamilyKind::Forests => Ok(()),
        other => Err(ExplorerError::UnsupportedFamily(other)),
    }
}

/// The value set of `kind` over `fam(s)`, with the first witness (in
/// enumeration order) of every value.
pub fn interval_audit(
    s: &DegreeSequence,
    kind: ParameterKind,
    fam: FamilyKind,
) -> Result<AuditReport, ExplorerError> {
    check_interval_family(fam)?;
    let mut report = AuditReport::new(kind, s.order());
    report.family = Some(fam);
    report.sequence = Some(s.clone());
    let mut members = enumerate_family(s, fam)?;
    if members.not_graphical {
        report.note = Some("sequence is not graphical".into());
        return Ok(report);
    }
    if kind == ParameterKind::EdgeCover && s.0.contains(&0) {
        report.skipped = members.count() as u64;
        report.note = Some(exclusion_note());
        return Ok(report);
    }
    for g in &mut members {
        match compute(kind, &g) {
            Ok(v) => {
                report.checked += 1;
                report.witnesses.entry(v).or_insert(g);
            }
            Err(_) => report.skipped += 1,
        }
    }
    if report.checked == 0 && report.skipped == 0 {
        report.note = Some("family is empty".into());
    }
    report.set_values(report.witnesses.keys().copied().collect::<Vec<_>>());
    report.passed = report.interval_ok;
    Ok(report)
}

fn exclusion_note() -> String {
    "edge cover excluded: sequence has a zero degree".into()
}

/// Interval reports for every graphical sequence of length `n`, both
/// families and all nine kinds, computed from a value table. Reports are
/// passed to `visit` ordered by sequence, family, kind; they match what
/// [`interval_audit`] returns for the same inputs.
pub fn interval_sweep(table: &ValueTable, mut visit: impl FnMut(AuditReport)) {
    let idx = table.pair_index();
    let mut keyed: Vec<(Vec<usize>, u64)> = Vec::new();
    let mut by_key: Vec<(u32, u32)> = (0..table.len() as u32)
        .map(|m| (idx.degree_key(m as u64), m))
        .collect();
    by_key.sort_unstable();
    let mut start = 0;
    while start < by_key.len() {
        let key = by_key[start].0;
        let end = start + by_key[start..].iter().take_while(|e| e.0 == key).count();
        let degrees = idx.degrees(by_key[start].1 as u64);
        keyed.push((degrees, (start as u64) << 32 | end as u64));
        start = end;
    }
    keyed.sort();
    for (degrees, range) in keyed {
        let group = &by_key[(range >> 32) as usize..(range & 0xffff_ffff) as usize];
        let seq = DegreeSequence(degrees);
        for fam in [FamilyKind::AllGraphs, FamilyKind::Forests] {
            let members: Vec<u64> = group
                .iter()
                .map(|&(_, m)| m as u64)
                .filter(|&m| {
                    fam == FamilyKind::AllGraphs
                        || fam.contains_rows(&idx.rows(m), m.count_ones() as usize)
                })
                .collect();
            for kind in ParameterKind::STABLE {
                visit(interval_report_from_table(table, &seq, kind, fam, &members));
            }
        }
    }
}

fn interval_report_from_table(
    table: &ValueTable,
    seq: &DegreeSequence,
    kind: ParameterKind,
    fam: FamilyKind,
    members: &[u64],
) -> AuditReport {
    let mut report = AuditReport::new(kind, seq.order());
    report.family = Some(fam);
    report.sequence = Some(seq.clone());
    if kind == ParameterKind::EdgeCover && seq.0.contains(&0) {
        report.skipped = members.len() as u64;
        report.note = Some(exclusion_note());
        return report;
    }
    if members.is_empty() {
        report.note = Some("family is empty".into());
        return report;
    }
    let mut best: BTreeMap<usize, u64> = BTreeMap::new();
    for &m in members {
        let v = table.get(m, kind).expect("in-domain value");
        report.checked += 1;
        best.entry(v)
            .and_modify(|w| {
                if lex_less(m, *w) {
                    *w = m;
                }
            })
            .or_insert(m);
    }
    let idx = table.pair_index();
    report.witnesses = best
        .into_iter()
        .map(|(v, m)| (v, idx.to_graph(m)))
        .collect();
    report.set_values(report.witnesses.keys().copied().collect::<Vec<_>>());
    report.passed = report.interval_ok;
    report
}

/// A member of `fam(s)` with `ξ = k`, found on the transition trace from a
/// minimizing witness to a maximizing one.
pub fn realize_parameter_value(
    s: &DegreeSequence,
    kind: ParameterKind,
    k: usize,
    fam: FamilyKind,
) -> Result<Graph, ExplorerError> {
    check_interval_family(fam)?;
    let mut lowest: Option<(usize, Graph)> = None;
    let mut highest: Option<(usize, Graph)> = None;
    for g in enumerate_family(s, fam)? {
        let v = match compute(kind, &g) {
            Ok(v) => v,
            Err(_) => return Err(ExplorerError::OutOfDomain(kind)),
        };
        if lowest.as_ref().is_none_or(|(x, _)| v < *x) {
            lowest = Some((v, g.clone()));
        }
        if highest.as_ref().is_none_or(|(x, _)| v > *x) {
            highest = Some((v, g));
        }
    }
    let ((min, low), (max, high)) = lowest.zip(highest).ok_or(ExplorerError::EmptyFamily(fam))?;
    if k < min || k > max {
        return Err(ExplorerError::ValueOutOfRange { value: k, min, max });
    }
    if k == min {
        return Ok(low);
    }
    let trace = match fam {
        FamilyKind::Forests => transition_forest(&low, &high)?,
        _ => transition_graph(&low, &high)?,
    };
    for g in replay(&trace)? {
        if compute(kind, &g)? == k {
            return Ok(g);
        }
    }
    unreachable!("a stable parameter takes every value between its endpoints along a trace")
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EdgeDiffReport {
    pub order: usize,
    pub graphs: u64,
    pub sequences: u64,
    pub pairs_checked: u64,
    pub violation: Option<(Graph, Graph)>,
    pub passed: bool,
}

/// Checks that no two distinct graphs on `[n]` with equal degree sequences
/// differ in exactly one edge.
pub fn edge_diff_audit(n: usize) -> Result<EdgeDiffReport, ExplorerError> {
    check_cap(n, 7)?;
    let idx = PairIndex::new(n);
    let total = 1u64 << idx.pair_count();
    let mut keyed: Vec<(u32, u64)> = (0..total).map(|m| (idx.degree_key(m), m)).collect();
    keyed.sort_unstable();
    let mut report = EdgeDiffReport {
        order: n,
        graphs: total,
        sequences: 0,
        pairs_checked: 0,
        violation: None,
        passed: true,
    };
    for group in keyed.chunk_by(|x, y| x.0 == y.0) {
        report.sequences += 1;
        for (i, &(_, g)) in group.iter().enumerate() {
            for &(_, h) in &group[i + 1..] {
                report.pairs_checked += 1;
                if (g & !h).count_ones() == 1 && report.violation.is_none() {
                    report.violation = Some((idx.to_graph(g), idx.to_graph(h)));
                }
            }
        }
    }
    report.passed = report.violation.is_none();
    Ok(report)
}
