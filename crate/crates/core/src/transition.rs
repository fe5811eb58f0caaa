//! Building 2-switch sequences between graphs with the same degree sequence.
//!
//! [`transition_forest`] moves between two forests through forests only,
//! using at most `|E(F') - E(F)| - 1` switches. [`transition_graph`] works on
//! arbitrary graphs by routing both endpoints to a canonical realization.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{bit, labels, Graph, GraphError, Vertex};
use crate::switch::{ActionMatrix, SwitchKind};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TransitionError {
    #[error("graphs have different degree sequences")]
    DegreeSequenceMismatch,
    #[error("{0} is not a forest")]
    NotAForest(&'static str),
    #[error("vertex {0} is isolated")]
    IsolatedVertex(Vertex),
    #[error("the graphs already share trimmable leaves")]
    TrimmableLeavesPresent,
    #[error("forests with equal degree sequences have {0} and {1} components")]
    ComponentCountMismatch(usize, usize),
    #[error("step {0} is trivial for the graph it is applied to")]
    TrivialStep(usize),
    #[error("invalid trace: {0}")]
    Format(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub matrix: ActionMatrix,
    /// Classification in the graph the step is applied to.
    pub kind: SwitchKind,
}

/// A start graph together with the switches applied to it, in order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SwitchTrace {
    pub initial: Graph,
    pub steps: Vec<TraceStep>,
}

#[derive(Serialize, Deserialize)]
struct TraceFile {
    n: usize,
    initial: Vec<[usize; 2]>,
    steps: Vec<[usize; 4]>,
}

impl SwitchTrace {
    pub fn empty(initial: Graph) -> Self {
        SwitchTrace {
            initial,
            steps: Vec::new(),
        }
    }

    /// Builds a trace from bare matrices, annotating each step with its kind
    /// in the graph reached so far. Trivial steps are kept (as `Trivial`).
    pub fn from_matrices(initial: Graph, matrices: impl IntoIterator<Item = ActionMatrix>) -> Self {
        let mut current = initial.clone();
        let steps = matrices
            .into_iter()
            .map(|matrix| {
                let kind = matrix.classify(&current);
                matrix.apply_in_place(&mut current);
                TraceStep { matrix, kind }
            })
            .collect();
        SwitchTrace { initial, steps }
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn matrices(&self) -> impl Iterator<Item = ActionMatrix> + '_ {
        self.steps.iter().map(|s| s.matrix)
    }

    /// The trace that undoes this one: transposed steps in reverse order,
    /// starting from this trace's final graph.
    pub fn inverted(&self) -> Result<SwitchTrace, TransitionError> {
        let last = replay(self)?.pop().expect("replay is never empty");
        let back: Vec<_> = self.matrices().map(ActionMatrix::transpose).collect();
        Ok(SwitchTrace::from_matrices(last, back.into_iter().rev()))
    }

    /// `{"n": int, "initial": [[u,v],...], "steps": [[a,b,c,d],...]}` on one
    /// line.
    pub fn to_json(&self) -> String {
        let file = TraceFile {
            n: self.initial.order(),
            initial: self
                .initial
                .edges()
                .into_iter()
                .map(|(u, v)| [u, v])
                .collect(),
            steps: self.matrices().map(ActionMatrix::to_array).collect(),
        };
        serde_json::to_string(&file).expect("trace serializes")
    }

    pub fn from_json(text: &str) -> Result<Self, TransitionError> {
        let file: TraceFile =
            serde_json::from_str(text).map_err(|e| TransitionError::Format(e.to_string()))?;
        let initial = Graph::new(file.n, file.initial.iter().map(|&[u, v]| (u, v)))?;
        let matrices = file
            .steps
            .iter()
            .map(|&[a, b, c, d]| ActionMatrix::new(a, b, c, d));
        Ok(SwitchTrace::from_matrices(initial, matrices))
    }
}

/// The graphs `G_0 = initial, G_i = τ_i(G_{i-1})`. Fails on the first step
/// (1-based) that is trivial where it is applied.
pub fn replay(trace: &SwitchTrace) -> Result<Vec<Graph>, TransitionError> {
    let mut out = Vec::with_capacity(trace.len() + 1);
    let mut current = trace.initial.clone();
    out.push(current.clone());
    for (i, step) in trace.steps.iter().enumerate() {
        if !step.matrix.apply_in_place(&mut current) {
            return Err(TransitionError::TrivialStep(i + 1));
        }
        out.push(current.clone());
    }
    Ok(out)
}

fn check_same_sequence(g: &Graph, h: &Graph) -> Result<(), TransitionError> {
    if g.degree_sequence() != h.degree_sequence() {
        return Err(TransitionError::DegreeSequenceMismatch);
    }
    Ok(())
}

/// Λ(G, H): leaves with the same neighbor in both graphs.
pub fn trimmable_leaves(g: &Graph, h: &Graph) -> Result<Vec<Vertex>, TransitionError> {
    check_same_sequence(g, h)?;
    Ok(labels(trimmable_mask(g, h)).collect())
}

fn trimmable_mask(g: &Graph, h: &Graph) -> u64 {
    let mut mask = 0;
    for v in g.vertices() {
        let row = g.neighbor_mask(v);
        if row.count_ones() == 1 && row == h.neighbor_mask(v) {
            mask |= bit(v);
        }
    }
    mask
}

/// A switch that makes some leaf trimmable, following the two cases of the
/// leaf-fixing construction. Both inputs must be forests without isolated
/// vertices, with equal degree sequences and no trimmable leaves.
pub fn leaf_fixing_switch(f: &Graph, target: &Graph) -> Result<ActionMatrix, TransitionError> {
    check_same_sequence(f, target)?;
    if !f.is_forest() {
        return Err(TransitionError::NotAForest("source"));
    }
    if !target.is_forest() {
        return Err(TransitionError::NotAForest("target"));
    }
    if let Some(v) = f.vertices().find(|&v| f.degree(v) == 0) {
        return Err(TransitionError::IsolatedVertex(v));
    }
    if trimmable_mask(f, target) != 0 {
        return Err(TransitionError::TrimmableLeavesPresent);
    }
    Ok(fixing_switch(f, target))
}

/// Core of [`leaf_fixing_switch`]. Isolated vertices are treated as deleted,
/// which is how stripped vertices appear in the working copies.
fn fixing_switch(f: &Graph, target: &Graph) -> ActionMatrix {
    let leaves: Vec<Vertex> = f.vertices().filter(|&v| f.degree(v) == 1).collect();
    let only_leaves = f.vertices().all(|v| f.degree(v) <= 1);
    let sole_neighbor = |g: &Graph, v: Vertex| g.neighbors(v).next().expect("leaf has a neighbor");

    if only_leaves {
        // Both forests are perfect matchings on the remaining vertices.
        let l = leaves[0];
        let v = sole_neighbor(f, l);
        let u = sole_neighbor(target, l);
        let w = sole_neighbor(f, u);
        return ActionMatrix::new(l, v, u, w);
    }

    // The construction leaves ℓ and w open. Among the admissible choices,
    // take the one adding the most target edges, so every step makes progress.
    let mut best: Option<(usize, ActionMatrix)> = None;
    for &l in &leaves {
        let u = sole_neighbor(target, l);
        if target.degree(u) < 2 {
            continue;
        }
        let v = sole_neighbor(f, l);
        let before_u = f.bfs_path(l, u).map(|path| path[path.len() - 2]);
        for w in f.neighbors(u).filter(|&x| Some(x) != before_u) {
            let gain = 1 + usize::from(target.has_edge(v, w)) - usize::from(target.has_edge(u, w));
            if best.is_none_or(|(g, _)| gain > g) {
                best = Some((gain, ActionMatrix::new(l, v, u, w)));
            }
        }
    }
    best.expect("a leaf whose target neighbor is internal exists")
        .1
}

/// Removes trimmable leaves from both working copies until none remain.
fn strip_trimmable(work: &mut Graph, target: &mut Graph) {
    loop {
        let lambda = trimmable_mask(work, target);
        if lambda == 0 {
            return;
        }
        for l in labels(lambda) {
            if let Some(nb) = work.neighbors(l).next() {
                work.remove_edge(l, nb);
                target.remove_edge(l, nb);
            }
        }
    }
}

/// Transforms forest `f` into forest `target` using f-switches only.
///
/// Trimmable leaves are stripped from working copies; whenever none are
/// left, [`leaf_fixing_switch`] creates one. Every recorded switch touches
/// only unstripped vertices, so it acts the same way on the full forests.
pub fn transition_forest(f: &Graph, target: &Graph) -> Result<SwitchTrace, TransitionError> {
    check_same_sequence(f, target)?;
    if !f.is_forest() {
        return Err(TransitionError::NotAForest("source"));
    }
    if !target.is_forest() {
        return Err(TransitionError::NotAForest("target"));
    }
    let (k1, k2) = (f.kappa(), target.kappa());
    if k1 != k2 {
        return Err(TransitionError::ComponentCountMismatch(k1, k2));
    }

    let mut trace = SwitchTrace::empty(f.clone());
    let mut current = f.clone();
    let mut work = f.clone();
    let mut work_target = target.clone();
    loop {
        strip_trimmable(&mut work, &mut work_target);
        if work == work_target {
            break;
        }
        let matrix = fixing_switch(&work, &work_target);
        let kind = matrix.classify(&current);
        debug_assert!(
            kind.preserves_forest(),
            "{matrix} is {kind:?} in {current:?}"
        );
        let applied = matrix.apply_in_place(&mut current);
        debug_assert!(applied);
        matrix.apply_in_place(&mut work);
        trace.steps.push(TraceStep { matrix, kind });
    }
    debug_assert_eq!(&current, target);
    Ok(trace)
}

/// Switches from `g` to the canonical realization of its degree sequence.
///
/// Vertices are settled one at a time in order of residual degree (highest
/// first, ties by label). A settled vertex is joined to the unsettled
/// vertices of highest residual degree; each missing edge `xy` is traded for
/// an unwanted edge `xz` through a witness `w` with `yw ∈ E`, `zw ∉ E`.
pub fn canonical_trace(g: &Graph) -> SwitchTrace {
    let n = g.order();
    let mut current = g.clone();
    let mut matrices = Vec::new();
    let mut residual: Vec<usize> = g.vertices().map(|v| g.degree(v)).collect();
    let mut unsettled: u64 = crate::graph::full_mask(n);

    while let Some(x) = labels(unsettled)
        .filter(|&v| residual[v - 1] > 0)
        .max_by(|&p, &q| residual[p - 1].cmp(&residual[q - 1]).then(q.cmp(&p)))
    {
        let mut ranked: Vec<Vertex> = labels(unsettled & !bit(x)).collect();
        ranked.sort_by(|&p, &q| residual[q - 1].cmp(&residual[p - 1]).then(p.cmp(&q)));
        let wanted: u64 = ranked[..residual[x - 1]].iter().fold(0, |m, &v| m | bit(v));
        let others = unsettled & !bit(x) & !wanted;

        loop {
            let row = current.neighbor_mask(x);
            let missing = wanted & !row;
            let unwanted = others & row;
            if missing == 0 {
                debug_assert_eq!(unwanted, 0);
                break;
            }
            let y = missing.trailing_zeros() as usize + 1;
            let z = unwanted.trailing_zeros() as usize + 1;
            let candidates = current.neighbor_mask(y)
                & !current.neighbor_mask(z)
                & unsettled
                & !(bit(x) | bit(y) | bit(z));
            let w = candidates.trailing_zeros() as usize + 1;
            debug_assert!(
                candidates != 0,
                "residual degree ordering guarantees a witness"
            );
            let m = ActionMatrix::new(x, z, y, w);
            let applied = m.apply_in_place(&mut current);
            debug_assert!(applied);
            matrices.push(m);
        }
        unsettled &= !bit(x);
        residual[x - 1] = 0;
        for v in labels(wanted) {
            residual[v - 1] -= 1;
        }
    }
    SwitchTrace::from_matrices(g.clone(), matrices)
}

/// Transforms `g` into `h` for any pair with equal degree sequences, going
/// through the canonical realization. Intermediate graphs are unrestricted
/// and the length is not minimal.
pub fn transition_graph(g: &Graph, h: &Graph) -> Result<SwitchTrace, TransitionError> {
    check_same_sequence(g, h)?;
    if g == h {
        return Ok(SwitchTrace::empty(g.clone()));
    }
    let forward = canonical_trace(g);
    let back = canonical_trace(h).inverted()?;
    let matrices: Vec<_> = forward.matrices().chain(back.matrices()).collect();
    Ok(SwitchTrace::from_matrices(g.clone(), matrices))
}

/// Outcome of [`validate_trace`].
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TraceReport {
    pub length: usize,
    /// `max(0, |E(target) - E(initial)| - 1)`.
    pub bound: usize,
    pub within_bound: bool,
    pub reaches_target: bool,
    /// First (1-based) step that is trivial where it is applied.
    pub trivial_step: Option<usize>,
    pub forests_required: bool,
    /// First graph index (0 = initial) that is not a forest.
    pub non_forest_step: Option<usize>,
    pub passed: bool,
}

/// Replays `trace` and checks it against `target`. The length bound is
/// reported but does not affect `passed`.
pub fn validate_trace(trace: &SwitchTrace, target: &Graph, require_forests: bool) -> TraceReport {
    let bound = target.edges_missing_from(&trace.initial).saturating_sub(1);
    let mut current = trace.initial.clone();
    let mut trivial_step = None;
    let mut non_forest_step = None;
    if require_forests && !current.is_forest() {
        non_forest_step = Some(0);
    }
    for (i, step) in trace.steps.iter().enumerate() {
        if !step.matrix.apply_in_place(&mut current) {
            trivial_step = Some(i + 1);
            break;
        }
        if require_forests && non_forest_step.is_none() && !current.is_forest() {
            non_forest_step = Some(i + 1);
        }
    }
    let reaches_target = trivial_step.is_none() && &current == target;
    TraceReport {
        length: trace.len(),
        bound,
        within_bound: trace.len() <= bound,
        reaches_target,
        trivial_step,
        forests_required: require_forests,
        non_forest_step,
        passed: reaches_target && non_forest_step.is_none(),
    }
}
