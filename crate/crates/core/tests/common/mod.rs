//! Oracles shared by the integration tests. They read only `n()` and
//! `edges()` and rebuild everything else from scratch.

#![allow(dead_code)]

use dompoly::{Graph, Polynomial};

pub fn adjacency(g: &Graph) -> Vec<Vec<bool>> {
    let mut adj = vec![vec![false; g.n()]; g.n()];
    for &(u, v) in g.edges() {
        adj[u][v] = true;
        adj[v][u] = true;
    }
    adj
}

/// Is `w` dominating, checked vertex by vertex on a boolean matrix.
pub fn dominates(adj: &[Vec<bool>], w: u64) -> bool {
    let n = adj.len();
    (0..n).all(|v| w >> v & 1 == 1 || (0..n).any(|u| w >> u & 1 == 1 && adj[u][v]))
}

/// Dominating sets counted by size.
pub fn oracle_coeffs(g: &Graph) -> Vec<i64> {
    let adj = adjacency(g);
    let mut c = vec![0i64; g.n() + 1];
    for w in 0..1u64 << g.n() {
        if dominates(&adj, w) {
            c[w.count_ones() as usize] += 1;
        }
    }
    c
}

pub fn oracle_poly(g: &Graph) -> Polynomial {
    Polynomial::from_coeffs(oracle_coeffs(g))
}

pub fn binomial(n: usize, k: usize) -> i64 {
    if k > n {
        return 0;
    }
    (0..k).fold(1i64, |acc, i| acc * (n - i) as i64 / (i as i64 + 1))
}

/// Whether some closed walk has odd length, by reachability over
/// (vertex, parity) states.
pub fn has_odd_closed_walk(g: &Graph) -> bool {
    let adj = adjacency(g);
    let n = g.n();
    (0..n).any(|s| {
        let mut seen = vec![[false; 2]; n];
        let mut stack = vec![(s, 0usize)];
        seen[s][0] = true;
        while let Some((v, p)) = stack.pop() {
            for u in (0..n).filter(|&u| adj[v][u]) {
                if !seen[u][1 - p] {
                    seen[u][1 - p] = true;
                    stack.push((u, 1 - p));
                }
            }
        }
        seen[s][1]
    })
}

/// Components of `G[w]` as bit masks, by flood fill on the matrix.
pub fn components_of(adj: &[Vec<bool>], w: u64) -> Vec<u64> {
    let mut left = w;
    let mut out = Vec::new();
    while left != 0 {
        let s = left.trailing_zeros() as usize;
        let mut comp = 1u64 << s;
        let mut stack = vec![s];
        while let Some(v) = stack.pop() {
            for (u, &edge) in adj[v].iter().enumerate() {
                if edge && w >> u & 1 == 1 && comp >> u & 1 == 0 {
                    comp |= 1 << u;
                    stack.push(u);
                }
            }
        }
        left &= !comp;
        out.push(comp);
    }
    out
}
