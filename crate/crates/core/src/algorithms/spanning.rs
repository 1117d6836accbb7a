//! The spanning-subgraph route: `D(G, x)` as a sum of h-values over edge
//! subsets `F` whose spanning subgraph `(V, F)` is bipartite.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::subsets::fold_subsets;
use super::AlgoConfig;
use crate::error::AlgoError;
use crate::graph::{EdgeSet, Graph};
use crate::poly::Polynomial;

/// `(-1)^{|E_i|} [(-1)^{|Y_i|} x^{|Z_i|} + (-1)^{|Z_i|} x^{|Y_i|}]`.
fn component_factor(y: usize, z: usize, edges: usize) -> Polynomial {
    let s = |k: usize| if k.is_multiple_of(2) { 1 } else { -1 };
    let bracket = &Polynomial::monomial(s(y), z) + &Polynomial::monomial(s(z), y);
    if edges.is_multiple_of(2) {
        bracket
    } else {
        -bracket
    }
}

/// h-value of the spanning subgraph `(V, F)`: zero if it has an odd cycle,
/// otherwise `x^l` times one signed bracket per edge-having component.
pub fn h_value(g: &Graph, f: &EdgeSet) -> Polynomial {
    let Some(bip) = g.spanning_subgraph(f).bipartition() else {
        return Polynomial::zero();
    };
    let mut acc = Polynomial::monomial(1, bip.isolated_count);
    for c in &bip.components {
        acc = &acc * &component_factor(c.y.len(), c.z.len(), c.edge_count);
    }
    acc
}

/// Shape of a bipartite `(V, F)` up to what its h-value depends on:
/// isolated vertex count and per component `(min side, max side, |E_i| odd)`.
type Shape = (usize, Vec<(usize, usize, bool)>);

/// Union-find with parity to the root, rebuilt per edge subset.
struct ParityForest {
    parent: Vec<usize>,
    parity: Vec<u8>,
}

impl ParityForest {
    fn new(n: usize) -> Self {
        ParityForest {
            parent: (0..n).collect(),
            parity: vec![0; n],
        }
    }

    fn find(&mut self, v: usize) -> (usize, u8) {
        let p = self.parent[v];
        if p == v {
            return (v, 0);
        }
        let (root, up) = self.find(p);
        self.parity[v] ^= up;
        self.parent[v] = root;
        (root, self.parity[v])
    }

    /// Joins `u` and `v` on opposite sides; false if they already share one.
    fn union_opposite(&mut self, u: usize, v: usize) -> bool {
        let (ru, pu) = self.find(u);
        let (rv, pv) = self.find(v);
        if ru == rv {
            return pu != pv;
        }
        self.parent[ru] = rv;
        self.parity[ru] = pu ^ pv ^ 1;
        true
    }
}

fn shape_of(n: usize, edges: &[(usize, usize)], mask: u64) -> Option<Shape> {
    let mut forest = ParityForest::new(n);
    let mut rest = mask;
    while rest != 0 {
        let (u, v) = edges[rest.trailing_zeros() as usize];
        rest &= rest - 1;
        if !forest.union_opposite(u, v) {
            return None;
        }
    }
    // Per root: (side-0 count, side-1 count, edge count).
    let mut tally = vec![(0usize, 0usize, 0usize); n];
    for v in 0..n {
        let (root, side) = forest.find(v);
        if side == 0 {
            tally[root].0 += 1;
        } else {
            tally[root].1 += 1;
        }
    }
    let mut rest = mask;
    while rest != 0 {
        let (u, _) = edges[rest.trailing_zeros() as usize];
        rest &= rest - 1;
        tally[forest.find(u).0].2 += 1;
    }
    let mut isolated = 0;
    let mut parts = Vec::new();
    for (a, b, e) in tally.into_iter().filter(|t| t.0 + t.1 > 0) {
        if e == 0 {
            isolated += 1;
        } else {
            parts.push((a.min(b), a.max(b), e % 2 == 1));
        }
    }
    parts.sort_unstable();
    Some((isolated, parts))
}

/// Number of components of `(V, F)` with at least one edge, or `None` when
/// `(V, F)` has an odd cycle. `mask` selects `F` from `edges`.
pub(crate) fn bipartite_edge_components(
    n: usize,
    edges: &[(usize, usize)],
    mask: u64,
) -> Option<usize> {
    shape_of(n, edges, mask).map(|(_, parts)| parts.len())
}

/// `sum_{F subset E, (V,F) bipartite} h(F)`.
pub fn dp_bipartite_spanning(g: &Graph, cfg: &AlgoConfig) -> Result<Polynomial, AlgoError> {
    cfg.check_edges(g.m())?;
    let n = g.n();
    let edges = g.edges();
    let counts = fold_subsets(
        g.m(),
        cfg.parallel,
        HashMap::<Shape, i128>::new,
        |acc, mask| {
            if let Some(shape) = shape_of(n, edges, mask) {
                *acc.entry(shape).or_default() += 1;
            }
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        },
    );
    let mut acc = Polynomial::zero();
    for ((isolated, parts), count) in counts {
        let mut h = Polynomial::monomial(1, isolated);
        for (y, z, odd) in parts {
            h = &h * &component_factor(y, z, usize::from(odd));
        }
        acc.add_scaled(&h, &BigInt::from(count));
    }
    Ok(acc)
}
