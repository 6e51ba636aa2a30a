//! Exact VC-dimension of a graph's closed-neighborhood set system.
//!
//! Every vertex `v` of a graph contributes the set `N[v]` (itself plus its
//! neighbors); the VC-dimension is the size of the largest vertex set `X`
//! shattered by that family, i.e. such that every subset of `X` can be
//! written as `N[v] ∩ X`. This crate computes it exactly with a pruned
//! depth-first search over shattered sets, plus the supporting cast:
//!
//! - [`graph`]: compact CSR graphs, edge-list I/O, bitset vertex sets.
//! - [`bounds`]: cheap upper bounds (logarithmic, degree, degeneracy,
//!   matching) and the candidate filter derived from them.
//! - [`engine`]: the exact search ([`compute_vcdim`], [`vc_dimension`])
//!   and a shattered-set census.
//! - [`lower_bound`]: a budgeted greedy probe that seeds the search.
//! - [`reduce`]: twin contraction that shrinks inputs without changing
//!   the answer.
//! - [`generators`]: seeded random graphs (uniform, power-law, perturbed
//!   grids) for experiments.
//! - [`hardness`]: a reduction from k-clique that produces split graphs
//!   whose VC-dimension reaches `k` exactly when the clique exists.
//! - [`oracle`]: small brute-force references used to validate everything
//!   else.
//! - [`sweep`]: a parallel experiment runner over parameter grids.
//!
//! ```
//! use vcdim::{vc_dimension, Graph, SearchConfig};
//!
//! let star = Graph::star(3);
//! let result = vc_dimension(&star, &SearchConfig::default()).unwrap();
//! assert_eq!(result.vcdim, 2);
//! ```

use thiserror::Error;

/// The VC-dimension of an empty set system is undefined; operations that
/// need at least one vertex return this.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("the graph has no vertices")]
pub struct EmptyGraphError;

pub mod bounds;
pub mod engine;
pub mod generators;
pub mod graph;
pub mod hardness;
pub mod lower_bound;
pub mod oracle;
pub mod reduce;
pub mod sweep;

pub use bounds::{degree_filter, upper_bounds, BoundReport};
pub use engine::{
    compute_vcdim, count_shattered_sets, vc_dimension, SearchConfig, SearchResult, SearchStats,
    VertexOrder,
};
pub use generators::{gen_gnp, gen_grid_perturbed, gen_powerlaw, grid};
pub use graph::{Graph, Vertex, VertexSet};
pub use hardness::{build_hardness_graph, has_k_clique, HardnessInstance};
pub use lower_bound::{heuristic_lower_bound, LowerBound};
pub use oracle::{brute_max_matching, brute_vcdim, enumerate_shattered, is_shattered};
pub use reduce::{reduce_graph, Reduction};
pub use sweep::{run_sweep, SweepModel, SweepRequest};
