//! Routes that sum over all vertex subsets with a per-subset statistic:
//! the defining sum, inclusion-exclusion, and the essential-set expansion.

use num_bigint::BigInt;
use num_traits::Zero;

use super::subsets::{histogram, sign};
use super::AlgoConfig;
use crate::error::AlgoError;
use crate::graph::{Graph, VertexSet};
use crate::poly::Polynomial;

/// `sum_k c_k (1+x)^k` for a histogram `c`.
fn binomial_combination(hist: &[i128]) -> Polynomial {
    let mut acc = Polynomial::zero();
    for (k, &c) in hist.iter().enumerate() {
        if c != 0 {
            acc.add_scaled(&Polynomial::binomial_power(k), &BigInt::from(c));
        }
    }
    acc
}

/// Closed neighbourhoods `N[v]` as raw masks.
fn closed_rows(g: &Graph) -> Vec<u64> {
    (0..g.n()).map(|v| g.closed_neighbor(v).bits()).collect()
}

#[inline]
fn closed_of(rows: &[u64], mut w: u64) -> u64 {
    let mut acc = 0;
    while w != 0 {
        acc |= rows[w.trailing_zeros() as usize];
        w &= w - 1;
    }
    acc
}

/// `D(G, x)` as the sum of `x^{|U|}` over dominating sets `U`.
pub fn dp_brute_force(g: &Graph, cfg: &AlgoConfig) -> Result<Polynomial, AlgoError> {
    cfg.check_vertices(g.n())?;
    let rows = closed_rows(g);
    let full = g.vertices().bits();
    let hist = histogram(g.n(), g.n() + 1, cfg.parallel, |h, w| {
        if closed_of(&rows, w) == full {
            h[w.count_ones() as usize] += 1;
        }
    });
    Ok(Polynomial::from_coeffs(hist))
}

/// Signed counts of `|V \ N[W]|` over all `W`.
fn uncovered_histogram(g: &Graph, cfg: &AlgoConfig) -> Vec<i128> {
    let rows = closed_rows(g);
    let n = g.n();
    histogram(n, n + 1, cfg.parallel, |h, w| {
        let covered = closed_of(&rows, w).count_ones() as usize;
        h[n - covered] += sign(w);
    })
}

/// `sum_W (-1)^{|W|} (1+x)^{|V \ N[W]|}`.
pub fn dp_inclusion_exclusion(g: &Graph, cfg: &AlgoConfig) -> Result<Polynomial, AlgoError> {
    cfg.check_vertices(g.n())?;
    Ok(binomial_combination(&uncovered_histogram(g, cfg)))
}

/// `(-1)^{|V|} sum_{U essential} (-1)^{|U|} [(1+x)^{|{u in U : N[u] in U}|} - 1]`.
pub fn dp_essential_sets(g: &Graph, cfg: &AlgoConfig) -> Result<Polynomial, AlgoError> {
    if g.n() == 0 {
        return Err(AlgoError::EmptyGraph);
    }
    cfg.check_vertices(g.n())?;
    let rows = closed_rows(g);
    let n = g.n();
    let outer = if n.is_multiple_of(2) { 1 } else { -1 };
    let hist = histogram(n, n + 1, cfg.parallel, |h, u| {
        let mut inner = 0usize;
        let mut rest = u;
        while rest != 0 {
            let v = rest.trailing_zeros() as usize;
            rest &= rest - 1;
            if rows[v] & !u == 0 {
                inner += 1;
            }
        }
        // U is essential iff some N[v] fits inside it; that v lies in U.
        if inner > 0 {
            h[inner] += outer * sign(u);
        }
    });
    let mut acc = Polynomial::zero();
    let one = Polynomial::one();
    for (k, &c) in hist.iter().enumerate().filter(|(_, &c)| c != 0) {
        let term = &Polynomial::binomial_power(k) - &one;
        acc.add_scaled(&term, &BigInt::from(c));
    }
    Ok(acc)
}

fn binomial(n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) as u128 / (i as u128 + 1))
}

fn binomial_coefficient_from(hist: &[i128], k: usize) -> BigInt {
    hist.iter()
        .enumerate()
        .skip(k)
        .filter(|(_, &c)| c != 0)
        .map(|(s, &c)| BigInt::from(c) * BigInt::from(binomial(s, k)))
        .sum()
}

/// `d_k(G) = sum_{W : |N[W]| <= n-k} (-1)^{|W|} C(n - |N[W]|, k)`.
///
/// Returns zero for `k > n`.
pub fn coefficient_by_binomial(g: &Graph, k: usize, cfg: &AlgoConfig) -> Result<BigInt, AlgoError> {
    cfg.check_vertices(g.n())?;
    Ok(binomial_coefficient_from(&uncovered_histogram(g, cfg), k))
}

/// Smallest `k` whose binomial coefficient sum is nonzero.
pub fn domination_number_by_vanishing(g: &Graph, cfg: &AlgoConfig) -> Result<usize, AlgoError> {
    cfg.check_vertices(g.n())?;
    let hist = uncovered_histogram(g, cfg);
    let gamma = (0..=g.n())
        .find(|&k| !binomial_coefficient_from(&hist, k).is_zero())
        .expect("V itself dominates, so d_n = 1");
    Ok(gamma)
}

/// Size of a smallest dominating set, by scanning all subsets.
pub fn domination_number_search(g: &Graph, cfg: &AlgoConfig) -> Result<usize, AlgoError> {
    cfg.check_vertices(g.n())?;
    let best = (0..1u64 << g.n())
        .map(VertexSet)
        .filter(|&w| g.is_dominating(w))
        .map(VertexSet::len)
        .min()
        .unwrap_or(0);
    Ok(best)
}
