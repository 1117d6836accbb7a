//! Induced-subgraph routes: the type-weighted vertex sum, its recursive
//! decomposition through a pivot vertex, and the conformal count at `x = 1`.

use std::collections::HashMap;

use num_bigint::BigInt;

use super::subsets::fold_subsets;
use super::AlgoConfig;
use crate::error::AlgoError;
use crate::graph::{ConnectedSets, Graph, TypePartition, VertexSet};
use crate::poly::Polynomial;

/// `x^i + (-1)^i`.
fn part_factor(i: usize) -> Polynomial {
    let sign = if i.is_multiple_of(2) { 1 } else { -1 };
    &Polynomial::monomial(1, i) + &Polynomial::constant(sign)
}

/// `sum_W prod_{i in type(G[W])} (x^i + (-1)^i)`.
///
/// Subsets are grouped by the type of `G[W]` first, so each distinct
/// product is formed once.
pub fn dp_type_sum(g: &Graph, cfg: &AlgoConfig) -> Result<Polynomial, AlgoError> {
    cfg.check_vertices(g.n())?;
    let counts = fold_subsets(
        g.n(),
        cfg.parallel,
        HashMap::<TypePartition, i128>::new,
        |acc, w| {
            *acc.entry(g.type_partition_within(VertexSet(w)))
                .or_default() += 1
        },
        |mut a, b| {
            for (k, v) in b {
                *a.entry(k).or_default() += v;
            }
            a
        },
    );
    let mut acc = Polynomial::zero();
    for (ty, count) in counts {
        let term: Polynomial = ty.parts().iter().map(|&i| part_factor(i)).product();
        acc.add_scaled(&term, &BigInt::from(count));
    }
    Ok(acc)
}

/// Work done by [`dp_recursive_traced`].
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct RecursionStats {
    /// Distinct vertex sets memoized.
    pub states: usize,
    /// Connected-set terms summed across all states.
    pub terms: u64,
}

struct Recursion<'g> {
    graph: &'g Graph,
    memo: HashMap<VertexSet, Polynomial>,
    terms: u64,
}

impl Recursion<'_> {
    /// `D(G[alive], x)`.
    fn solve(&mut self, alive: VertexSet) -> Polynomial {
        if alive.is_empty() {
            return Polynomial::one();
        }
        if let Some(p) = self.memo.get(&alive) {
            return p.clone();
        }
        let g = self.graph;
        // Pivot: maximum degree inside G[alive], ties to the lowest index.
        let pivot = alive
            .iter()
            .max_by_key(|&v| ((g.neighbors(v) & alive).len(), std::cmp::Reverse(v)))
            .expect("alive is nonempty");
        let mut acc = self.solve(alive - VertexSet::singleton(pivot));
        for w in ConnectedSets::new(g, pivot, alive) {
            self.terms += 1;
            let rest = self.solve(alive - g.closed_neighborhood(w));
            if !rest.is_zero() {
                acc += &(&part_factor(w.len()) * &rest);
            }
        }
        self.memo.insert(alive, acc.clone());
        acc
    }
}

/// `D(G) = D(G - v) + sum_{W connected, v in W} (x^{|W|} + (-1)^{|W|}) D(G - N[W])`,
/// memoized on the surviving vertex set.
pub fn dp_recursive(g: &Graph, cfg: &AlgoConfig) -> Result<Polynomial, AlgoError> {
    dp_recursive_traced(g, cfg).map(|(p, _)| p)
}

/// [`dp_recursive`] together with the amount of work it did.
pub fn dp_recursive_traced(
    g: &Graph,
    cfg: &AlgoConfig,
) -> Result<(Polynomial, RecursionStats), AlgoError> {
    cfg.check_vertices(g.n())?;
    let mut rec = Recursion {
        graph: g,
        memo: HashMap::new(),
        terms: 0,
    };
    let p = rec.solve(g.vertices());
    let stats = RecursionStats {
        states: rec.memo.len(),
        terms: rec.terms,
    };
    Ok((p, stats))
}

/// Number of dominating sets as `sum_{H conformal} 2^{k(H)}`.
pub fn count_dominating_conformal(g: &Graph, cfg: &AlgoConfig) -> Result<BigInt, AlgoError> {
    cfg.check_vertices(g.n())?;
    Ok(g.conformal_sets().map(|(_, k)| BigInt::from(1) << k).sum())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> Polynomial {
        Polynomial::from_coeffs(c.iter().copied())
    }

    fn path(n: usize) -> Graph {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).unwrap()
    }

    const CFG: AlgoConfig = AlgoConfig {
        vertex_enum_cap: 24,
        edge_enum_cap: 20,
        parallel: false,
    };

    #[test]
    fn type_sum_examples() {
        assert_eq!(
            dp_type_sum(&Graph::edgeless(1).unwrap(), &CFG),
            Ok(Polynomial::x())
        );
        assert_eq!(dp_type_sum(&path(3), &CFG), Ok(p(&[0, 1, 3, 1])));
        assert_eq!(dp_type_sum(&path(4), &CFG), Ok(p(&[0, 0, 4, 4, 1])));
        assert_eq!(dp_type_sum(&Graph::null(), &CFG), Ok(Polynomial::one()));
    }

    #[test]
    fn recursive_examples() {
        assert_eq!(
            dp_recursive(&Graph::edgeless(1).unwrap(), &CFG),
            Ok(Polynomial::x())
        );
        assert_eq!(dp_recursive(&path(3), &CFG), Ok(p(&[0, 1, 3, 1])));
        assert_eq!(dp_recursive(&cycle(4), &CFG), Ok(p(&[0, 0, 6, 4, 1])));
        assert_eq!(dp_recursive(&Graph::null(), &CFG), Ok(Polynomial::one()));
    }

    #[test]
    fn recursive_p3_hand_expansion() {
        // Pivot is vertex 1 (degree 2). Terms: D(2K1) = x^2, then the
        // connected sets {1}, {0,1}, {1,2}, {0,1,2}, each with N[W] = V.
        let hand = &(&(&p(&[0, 0, 1]) + &p(&[-1, 1])) + &p(&[2, 0, 2])) + &p(&[-1, 0, 0, 1]);
        assert_eq!(hand, p(&[0, 1, 3, 1]));
        let (poly, stats) = dp_recursive_traced(&path(3), &CFG).unwrap();
        assert_eq!(poly, hand);
        // Top level contributes exactly the four connected sets through 1.
        assert!(stats.terms >= 4);
    }

    #[test]
    fn conformal_count_examples() {
        assert_eq!(
            count_dominating_conformal(&path(4), &CFG),
            Ok(BigInt::from(9))
        );
        assert_eq!(
            count_dominating_conformal(&cycle(4), &CFG),
            Ok(BigInt::from(11))
        );
        assert_eq!(
            count_dominating_conformal(&Graph::edgeless(1).unwrap(), &CFG),
            Ok(BigInt::from(1))
        );
    }
}
