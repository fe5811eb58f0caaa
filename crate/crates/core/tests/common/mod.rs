//! Brute-force reference implementations. Everything here works on plain
//! `(n, edges)` data and exhaustive subset search, sharing no code with the
//! library's algorithms.

#![allow(dead_code)]

use twoswitch::Graph;

/// Adjacency as 0-based bitmasks.
pub fn adjacency(n: usize, edges: &[(usize, usize)]) -> Vec<u32> {
    let mut adj = vec![0u32; n];
    for &(u, v) in edges {
        adj[u - 1] |= 1 << (v - 1);
        adj[v - 1] |= 1 << (u - 1);
    }
    adj
}

pub fn adj_of(g: &Graph) -> Vec<u32> {
    adjacency(g.order(), &g.edges())
}

/// All vertex pairs in lexicographic order.
pub fn all_pairs(n: usize) -> Vec<(usize, usize)> {
    (1..=n)
        .flat_map(|u| (u + 1..=n).map(move |v| (u, v)))
        .collect()
}

/// Every labeled graph on `[n]`, indexed by subsets of [`all_pairs`].
pub fn all_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs = all_pairs(n);
    (0u64..1 << pairs.len()).map(move |m| {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|(i, _)| m >> i & 1 == 1)
            .map(|(_, &e)| e);
        Graph::new(n, edges).unwrap()
    })
}

fn subsets(n: usize) -> std::ops::Range<u32> {
    0..1u32 << n
}

pub fn alpha(adj: &[u32]) -> usize {
    subsets(adj.len())
        .filter(|&s| (0..adj.len()).all(|v| s >> v & 1 == 0 || adj[v] & s == 0))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn omega(adj: &[u32]) -> usize {
    subsets(adj.len())
        .filter(|&s| (0..adj.len()).all(|v| s >> v & 1 == 0 || (adj[v] | 1 << v) & s == s))
        .map(|s| s.count_ones() as usize)
        .max()
        .unwrap()
}

pub fn vertex_cover(adj: &[u32]) -> usize {
    let n = adj.len();
    subsets(n)
        .filter(|&s| (0..n).all(|v| s >> v & 1 == 1 || adj[v] & !s == 0))
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

pub fn gamma(adj: &[u32]) -> usize {
    let n = adj.len();
    let full = (1u32 << n) - 1;
    subsets(n)
        .filter(|&s| {
            let mut dom = s;
            for v in 0..n {
                if s >> v & 1 == 1 {
                    dom |= adj[v];
                }
            }
            dom == full
        })
        .map(|s| s.count_ones() as usize)
        .min()
        .unwrap()
}

/// μ by a DP over vertex sets: the lowest vertex is unmatched or matched.
pub fn mu(adj: &[u32]) -> usize {
    let n = adj.len();
    let mut best = vec![0usize; 1 << n];
    for s in 1..1usize << n {
        let v = s.trailing_zeros() as usize;
        let rest = s & !(1 << v);
        let mut b = best[rest];
        for u in 0..n {
            if rest >> u & 1 == 1 && adj[v] >> u & 1 == 1 {
                b = b.max(1 + best[rest & !(1 << u)]);
            }
        }
        best[s] = b;
    }
    best[(1 << n) - 1]
}

/// ε by a DP over the set of vertices still to be covered.
pub fn epsilon(adj: &[u32]) -> Option<usize> {
    let n = adj.len();
    if adj.iter().any(|&a| a == 0) {
        return None;
    }
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for s in 1..1usize << n {
        let v = s.trailing_zeros() as usize;
        for u in 0..n {
            if adj[v] >> u & 1 == 1 {
                let rest = s & !(1 << v) & !(1 << u);
                best[s] = best[s].min(best[rest] + 1);
            }
        }
    }
    Some(best[(1 << n) - 1])
}

/// π by subset DP: which vertex sets carry a Hamiltonian path, then a
/// minimum partition into such sets.
pub fn pi(adj: &[u32]) -> usize {
    let n = adj.len();
    if n == 0 {
        return 0;
    }
    let size = 1usize << n;
    // ends[s]: vertices where a Hamiltonian path of s can end
    let mut ends = vec![0u32; size];
    for v in 0..n {
        ends[1 << v] = 1 << v;
    }
    for s in 1..size {
        for v in 0..n {
            if ends[s] >> v & 1 == 0 {
                continue;
            }
            for u in 0..n {
                if s >> u & 1 == 0 && adj[v] >> u & 1 == 1 {
                    ends[s | 1 << u] |= 1 << u;
                }
            }
        }
    }
    let mut cover = vec![usize::MAX; size];
    cover[0] = 0;
    for s in 1..size {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut sub = rest;
        loop {
            let part = sub | low;
            if ends[part] != 0 && cover[s & !part] != usize::MAX {
                cover[s] = cover[s].min(cover[s & !part] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    cover[size - 1]
}

/// χ by partitioning into independent sets.
pub fn chi(adj: &[u32]) -> usize {
    let n = adj.len();
    let size = 1usize << n;
    let independent: Vec<bool> = (0..size)
        .map(|s| (0..n).all(|v| s >> v & 1 == 0 || adj[v] as usize & s == 0))
        .collect();
    let mut best = vec![usize::MAX; size];
    best[0] = 0;
    for s in 1..size {
        let low = s & s.wrapping_neg();
        let rest = s & !low;
        let mut sub = rest;
        loop {
            let part = sub | low;
            if independent[part] {
                best[s] = best[s].min(best[s & !part] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[size - 1]
}

pub fn kappa(n: usize, edges: &[(usize, usize)]) -> usize {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        if p[x] == x {
            x
        } else {
            let r = find(p, p[x]);
            p[x] = r;
            r
        }
    }
    let mut k = n;
    for &(u, v) in edges {
        let (a, b) = (find(&mut parent, u - 1), find(&mut parent, v - 1));
        if a != b {
            parent[a] = b;
            k -= 1;
        }
    }
    k
}

/// Rank over ℚ by Gaussian elimination on exact fractions.
pub fn rational_rank(adj: &[u32]) -> usize {
    let n = adj.len();
    let mut m: Vec<Vec<(i128, i128)>> = (0..n)
        .map(|i| (0..n).map(|j| ((adj[i] >> j & 1) as i128, 1)).collect())
        .collect();
    fn norm((a, b): (i128, i128)) -> (i128, i128) {
        fn gcd(a: i128, b: i128) -> i128 {
            if b == 0 {
                a.abs()
            } else {
                gcd(b, a % b)
            }
        }
        let g = gcd(a, b).max(1);
        let s = if b < 0 { -1 } else { 1 };
        (s * a / g, s * b / g)
    }
    let mut rank = 0;
    for col in 0..n {
        let Some(p) = (rank..n).find(|&r| m[r][col].0 != 0) else {
            continue;
        };
        m.swap(rank, p);
        let (pn, pd) = m[rank][col];
        for r in 0..n {
            if r == rank || m[r][col].0 == 0 {
                continue;
            }
            // factor = m[r][col] / pivot
            let (fn_, fd) = norm((m[r][col].0 * pd, m[r][col].1 * pn));
            for c in 0..n {
                let (an, ad) = m[r][c];
                let (bn, bd) = m[rank][c];
                m[r][c] = norm((an * bd * fd - bn * fn_ * ad, ad * bd * fd));
            }
        }
        rank += 1;
    }
    rank
}

pub fn is_forest(n: usize, edges: &[(usize, usize)]) -> bool {
    edges.len() + kappa(n, edges) == n
}

pub fn degrees(n: usize, edges: &[(usize, usize)]) -> Vec<usize> {
    let mut d = vec![0; n];
    for &(u, v) in edges {
        d[u - 1] += 1;
        d[v - 1] += 1;
    }
    d
}

pub fn is_bipartite(adj: &[u32]) -> bool {
    let n = adj.len();
    let mut color = vec![usize::MAX; n];
    for s in 0..n {
        if color[s] != usize::MAX {
            continue;
        }
        color[s] = 0;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for u in 0..n {
                if adj[v] >> u & 1 == 1 {
                    if color[u] == usize::MAX {
                        color[u] = 1 - color[v];
                        stack.push(u);
                    } else if color[u] == color[v] {
                        return false;
                    }
                }
            }
        }
    }
    true
}

/// Every labeled forest on `[n]`, by extending edge sets in pair order
/// while keeping them acyclic.
pub fn all_forests(n: usize) -> Vec<Vec<(usize, usize)>> {
    let pairs = all_pairs(n);
    let mut out = Vec::new();
    let mut current = Vec::new();
    fn go(
        n: usize,
        pairs: &[(usize, usize)],
        next: usize,
        current: &mut Vec<(usize, usize)>,
        out: &mut Vec<Vec<(usize, usize)>>,
    ) {
        out.push(current.clone());
        for i in next..pairs.len() {
            current.push(pairs[i]);
            if is_forest(n, current) {
                go(n, pairs, i + 1, current, out);
            }
            current.pop();
        }
    }
    go(n, &pairs, 0, &mut current, &mut out);
    out
}
