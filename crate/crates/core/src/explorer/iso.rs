use std::collections::BTreeMap;

use super::{check_cap, ExplorerError};
use crate::graph::{labels, Graph};

pub const ISOMORPHISM_CAP: usize = 12;

/// Exact isomorphism test: joint color refinement followed by backtracking
/// over color-preserving bijections.
pub fn are_isomorphic(g: &Graph, h: &Graph) -> Result<bool, ExplorerError> {
    check_cap(g.order().max(h.order()), ISOMORPHISM_CAP)?;
    if g.order() != h.order() || g.size() != h.size() {
        return Ok(false);
    }
    let n = g.order();
    let (cg, ch) = refine(g.rows(), h.rows());
    let histogram = |c: &[usize]| {
        let mut v = c.to_vec();
        v.sort_unstable();
        v
    };
    if histogram(&cg) != histogram(&ch) {
        return Ok(false);
    }
    // Rarest colors first keeps the search narrow.
    let mut class_size = BTreeMap::new();
    for &c in &cg {
        *class_size.entry(c).or_insert(0usize) += 1;
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (class_size[&cg[v]], cg[v], v));
    let mut image = vec![usize::MAX; n];
    Ok(extend(
        g.rows(),
        h.rows(),
        &cg,
        &ch,
        &order,
        0,
        &mut image,
        0,
    ))
}

#[allow(clippy::too_many_arguments)]
fn extend(
    gr: &[u64],
    hr: &[u64],
    cg: &[usize],
    ch: &[usize],
    order: &[usize],
    depth: usize,
    image: &mut [usize],
    used: u64,
) -> bool {
    let Some(&v) = order.get(depth) else {
        return true;
    };
    for w in 0..hr.len() {
        if used & (1 << w) != 0 || ch[w] != cg[v] {
            continue;
        }
        let consistent = order[..depth]
            .iter()
            .all(|&u| (gr[v] >> u & 1) == (hr[w] >> image[u] & 1));
        if consistent {
            image[v] = w;
            if extend(gr, hr, cg, ch, order, depth + 1, image, used | (1 << w)) {
                return true;
            }
        }
    }
    image[v] = usize::MAX;
    false
}

/// Stable colorings of both graphs with a shared palette.
fn refine(gr: &[u64], hr: &[u64]) -> (Vec<usize>, Vec<usize>) {
    let mut cg: Vec<usize> = gr.iter().map(|r| r.count_ones() as usize).collect();
    let mut ch: Vec<usize> = hr.iter().map(|r| r.count_ones() as usize).collect();
    loop {
        let signature = |rows: &[u64], colors: &[usize], v: usize| {
            let mut nb: Vec<usize> = labels(rows[v]).map(|u| colors[u - 1]).collect();
            nb.sort_unstable();
            (colors[v], nb)
        };
        let sg: Vec<_> = (0..gr.len()).map(|v| signature(gr, &cg, v)).collect();
        let sh: Vec<_> = (0..hr.len()).map(|v| signature(hr, &ch, v)).collect();
        let mut palette: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in sg.iter().chain(&sh) {
            let next = palette.len();
            palette.entry(s).or_insert(next);
        }
        let ng: Vec<usize> = sg.iter().map(|s| palette[s]).collect();
        let nh: Vec<usize> = sh.iter().map(|s| palette[s]).collect();
        let classes = |c: &[usize]| c.iter().collect::<std::collections::BTreeSet<_>>().len();
        let stable = classes(&ng) + classes(&nh) == classes(&cg) + classes(&ch);
        cg = ng;
        ch = nh;
        if stable {
            return (cg, ch);
        }
    }
}
