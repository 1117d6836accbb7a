//! Exact domination polynomials of small graphs.
//!
//! `D(G, x)` counts dominating sets by size. This crate computes it through
//! several independent subset-sum expansions (vertex subsets, induced
//! subgraphs, bipartite spanning subgraphs, essential sets), checks that
//! they agree, and verifies the identities and parity facts that relate
//! them on concrete graphs.
//!
//! ```
//! use dompoly::{domination_polynomial, AlgoConfig, Algorithm, Graph};
//!
//! let p4 = Graph::new(4, [(0, 1), (1, 2), (2, 3)]).unwrap();
//! let d = domination_polynomial(&p4, Algorithm::InclExcl, &AlgoConfig::default()).unwrap();
//! assert_eq!(d.to_string(), "x^4 + 4x^3 + 4x^2");
//! ```

pub mod algorithms;
pub mod error;
pub mod formats;
pub mod graph;
pub mod identities;
pub mod poly;

pub use algorithms::{domination_polynomial, AlgoConfig, Algorithm};
pub use error::{AlgoError, CapKind, FormatError, GraphError, PolyError};
pub use graph::{EdgeSet, Graph, TypePartition, VertexSet};
pub use poly::Polynomial;
