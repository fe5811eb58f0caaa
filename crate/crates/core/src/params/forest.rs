//! Linear-time dynamic programs on forests. Each component is rooted at its
//! lowest label and processed children-first.

use super::ParamError;
use crate::graph::{labels, Graph};

const INF: usize = usize::MAX / 4;

/// Vertices (0-based) in an order where every vertex follows its parent,
/// together with the parent of each vertex.
fn rooted_order(f: &Graph) -> Result<(Vec<usize>, Vec<Option<usize>>), ParamError> {
    if !f.is_forest() {
        return Err(ParamError::NotAForest);
    }
    let rows = f.rows();
    let n = rows.len();
    let mut parent = vec![None; n];
    let mut seen = 0u64;
    let mut order = Vec::with_capacity(n);
    for root in 0..n {
        if seen & (1 << root) != 0 {
            continue;
        }
        seen |= 1 << root;
        let mut stack = vec![root];
        while let Some(v) = stack.pop() {
            order.push(v);
            for u in labels(rows[v] & !seen) {
                let u = u - 1;
                seen |= 1 << u;
                parent[u] = Some(v);
                stack.push(u);
            }
        }
    }
    Ok((order, parent))
}

/// Folds `state` bottom-up: `combine(parent_state, child_state)` is called
/// for every edge after the child's subtree is complete.
fn fold_up<S: Clone>(
    f: &Graph,
    leaf: S,
    mut combine: impl FnMut(&mut S, &S),
    mut finish: impl FnMut(&mut S),
) -> Result<Vec<(S, bool)>, ParamError> {
    let (order, parent) = rooted_order(f)?;
    let mut state = vec![leaf; f.order()];
    for &v in order.iter().rev() {
        finish(&mut state[v]);
        if let Some(p) = parent[v] {
            let child = state[v].clone();
            combine(&mut state[p], &child);
        }
    }
    Ok(state
        .into_iter()
        .zip(parent)
        .map(|(s, p)| (s, p.is_none()))
        .collect())
}

fn sum_over_roots<S>(states: Vec<(S, bool)>, value: impl Fn(&S) -> usize) -> usize {
    states
        .iter()
        .filter(|(_, root)| *root)
        .map(|(s, _)| value(s))
        .sum()
}

/// μ(F). State: (best with v free, best overall).
pub fn matching_number(f: &Graph) -> Result<usize, ParamError> {
    #[derive(Clone)]
    struct M {
        free: usize,
        matched: usize,
        gain: usize,
    }
    let states = fold_up(
        f,
        M {
            free: 0,
            matched: 0,
            gain: 0,
        },
        |p, c| {
            let c_best = c.free.max(c.matched);
            p.free += c_best;
            // Matching v to c trades c's best for c.free + 1.
            p.gain = p.gain.max(c.free + 1 - c_best);
        },
        |s| {
            s.matched = if s.gain > 0 { s.free + s.gain } else { 0 };
        },
    )?;
    Ok(sum_over_roots(states, |s| s.free.max(s.matched)))
}

/// α(F).
pub fn independence_number(f: &Graph) -> Result<usize, ParamError> {
    let states = fold_up(
        f,
        (1usize, 0usize),
        |(inc, exc), &(c_inc, c_exc)| {
            *inc += c_exc;
            *exc += c_inc.max(c_exc);
        },
        |_| {},
    )?;
    Ok(sum_over_roots(states, |&(inc, exc)| inc.max(exc)))
}

/// γ(F). States: v chosen; v dominated by a chosen child; v waiting for its
/// parent.
pub fn domination_number(f: &Graph) -> Result<usize, ParamError> {
    #[derive(Clone)]
    struct D {
        chosen: usize,
        by_child: usize,
        waiting: usize,
        free_sum: usize,
        penalty: usize,
    }
    let states = fold_up(
        f,
        D {
            chosen: 1,
            by_child: INF,
            waiting: 0,
            free_sum: 0,
            penalty: INF,
        },
        |p, c| {
            p.chosen += c.chosen.min(c.by_child).min(c.waiting);
            p.waiting = (p.waiting + c.by_child).min(INF);
            let cheap = c.chosen.min(c.by_child);
            p.free_sum += cheap;
            p.penalty = p.penalty.min(c.chosen - cheap);
        },
        |s| {
            if s.penalty < INF {
                s.by_child = s.free_sum + s.penalty;
            }
        },
    )?;
    Ok(sum_over_roots(states, |s| s.chosen.min(s.by_child)))
}

/// π(F) = n − (edges of a maximum spanning linear forest).
pub fn path_cover_number(f: &Graph) -> Result<usize, ParamError> {
    // best[k]: most linear-forest edges in the subtree with exactly k edges
    // from v down to its children.
    #[derive(Clone)]
    struct P {
        base: usize,
        top: [Option<i64>; 2],
        best: [Option<usize>; 3],
    }
    let states = fold_up(
        f,
        P {
            base: 0,
            top: [None, None],
            best: [None; 3],
        },
        |p, c| {
            let c_all = c.best.iter().flatten().copied().max().unwrap();
            let c_link = c.best[0].max(c.best[1]).unwrap() + 1;
            p.base += c_all;
            let gain = c_link as i64 - c_all as i64;
            match p.top {
                [None, _] => p.top[0] = Some(gain),
                [Some(g0), _] if gain > g0 => p.top = [Some(gain), Some(g0)],
                [_, None] => p.top[1] = Some(gain),
                [_, Some(g1)] if gain > g1 => p.top[1] = Some(gain),
                _ => {}
            }
        },
        |s| {
            let base = s.base as i64;
            s.best[0] = Some(s.base);
            s.best[1] = s.top[0].map(|g| (base + g) as usize);
            s.best[2] = s.top[0].zip(s.top[1]).map(|(a, b)| (base + a + b) as usize);
        },
    )?;
    let edges = sum_over_roots(states, |s| s.best.iter().flatten().copied().max().unwrap());
    Ok(f.order() - edges)
}
