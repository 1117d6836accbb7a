//! Six routes to the domination polynomial, plus the counting formulas
//! derived from them.
//!
//! Every `dp_*` function computes `D(G, x)` for the whole graph it is given.
//! [`domination_polynomial`] is the usual entry point: it splits the graph
//! into components, runs the chosen route on each and multiplies.

mod recursive;
pub(crate) mod spanning;
pub(crate) mod subsets;
mod vertex_sums;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{AlgoError, CapKind};
use crate::graph::Graph;
use crate::poly::Polynomial;

pub use recursive::{
    count_dominating_conformal, dp_recursive, dp_recursive_traced, dp_type_sum, RecursionStats,
};
pub use spanning::{dp_bipartite_spanning, h_value};
pub use vertex_sums::{
    coefficient_by_binomial, domination_number_by_vanishing, domination_number_search,
    dp_brute_force, dp_essential_sets, dp_inclusion_exclusion,
};

/// Enumeration limits and scheduling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgoConfig {
    /// Largest `n` allowed for loops over all `2^n` vertex subsets.
    pub vertex_enum_cap: usize,
    /// Largest `m` allowed for loops over all `2^m` edge subsets.
    pub edge_enum_cap: usize,
    pub parallel: bool,
}

impl Default for AlgoConfig {
    fn default() -> Self {
        AlgoConfig {
            vertex_enum_cap: 24,
            edge_enum_cap: 20,
            parallel: true,
        }
    }
}

impl AlgoConfig {
    pub fn sequential() -> Self {
        AlgoConfig {
            parallel: false,
            ..AlgoConfig::default()
        }
    }

    pub(crate) fn check_vertices(&self, n: usize) -> Result<(), AlgoError> {
        AlgoError::check_cap(CapKind::Vertex, self.vertex_enum_cap, n)
    }

    pub(crate) fn check_edges(&self, m: usize) -> Result<(), AlgoError> {
        AlgoError::check_cap(CapKind::Edge, self.edge_enum_cap, m)
    }
}

/// Selector for a representation of `D(G, x)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    /// Sum over dominating vertex subsets.
    Brute,
    /// Signed sum of `(1+x)^{|V \ N[W]|}`.
    InclExcl,
    /// Sum over induced subgraphs weighted by their component orders.
    TypeSum,
    /// Vertex deletion plus connected sets through a pivot vertex.
    Recursive,
    /// Sum of h-values over bipartite spanning subgraphs.
    BipartiteSpanning,
    /// Signed sum over essential sets.
    Essential,
}

impl Algorithm {
    pub const ALL: [Algorithm; 6] = [
        Algorithm::Brute,
        Algorithm::InclExcl,
        Algorithm::TypeSum,
        Algorithm::Recursive,
        Algorithm::BipartiteSpanning,
        Algorithm::Essential,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Algorithm::Brute => "brute",
            Algorithm::InclExcl => "inclexcl",
            Algorithm::TypeSum => "typesum",
            Algorithm::Recursive => "recursive",
            Algorithm::BipartiteSpanning => "bipartite-spanning",
            Algorithm::Essential => "essential",
        }
    }

    /// Runs this route on the whole graph, without component splitting.
    pub fn run(self, g: &Graph, cfg: &AlgoConfig) -> Result<Polynomial, AlgoError> {
        match self {
            Algorithm::Brute => dp_brute_force(g, cfg),
            Algorithm::InclExcl => dp_inclusion_exclusion(g, cfg),
            Algorithm::TypeSum => dp_type_sum(g, cfg),
            Algorithm::Recursive => dp_recursive(g, cfg),
            Algorithm::BipartiteSpanning => dp_bipartite_spanning(g, cfg),
            Algorithm::Essential => dp_essential_sets(g, cfg),
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
#[error("unknown algorithm {0:?}")]
pub struct UnknownAlgorithm(pub String);

impl FromStr for Algorithm {
    type Err = UnknownAlgorithm;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Algorithm::ALL
            .into_iter()
            .find(|a| a.name() == s)
            .ok_or_else(|| UnknownAlgorithm(s.to_owned()))
    }
}

/// Runs `algo` on each component and multiplies the results.
pub fn dp_product_of_components(
    g: &Graph,
    algo: Algorithm,
    cfg: &AlgoConfig,
) -> Result<Polynomial, AlgoError> {
    let mut acc = Polynomial::one();
    for comp in g.components() {
        let (h, _) = g.induced_subgraph(comp);
        acc = &acc * &algo.run(&h, cfg)?;
    }
    Ok(acc)
}

/// `D(G, x)` by `algo`, one component at a time.
pub fn domination_polynomial(
    g: &Graph,
    algo: Algorithm,
    cfg: &AlgoConfig,
) -> Result<Polynomial, AlgoError> {
    dp_product_of_components(g, algo, cfg)
}
