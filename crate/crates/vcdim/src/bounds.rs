//! Cheap upper bounds on the VC-dimension of the closed-neighborhood set
//! system, plus the degree filter that restricts the exact search to
//! vertices that can still belong to a large shattered set.
//!
//! Why each bound holds, for a shattered set X with |X| = d:
//! - distinct traces need distinct realizing vertices, so 2^d <= n;
//! - every x in X lies in the closed neighborhood of each of the 2^{d-1}
//!   realizers of traces containing x, so its closed degree is at least
//!   2^{d-1}, giving d <= floor(log2 Delta) + 1;
//! - the subgraph induced by X and the realizers is dense enough that
//!   d <= degeneracy + 1;
//! - each edge of a maximal matching M covers at most two members of X,
//!   and every member of X with a realized co-member trace is covered,
//!   so d <= 2|M| whenever the graph has an edge.

use crate::graph::{greedy_maximal_matching, Graph, Vertex, VertexSet};
use crate::EmptyGraphError;

/// Upper-bound summary for one graph. `best` is the minimum of the
/// applicable bound terms and always dominates the true VC-dimension.
#[derive(Debug, Clone, PartialEq)]
pub struct BoundReport {
    pub n: usize,
    pub m: usize,
    pub max_closed_degree: usize,
    pub degeneracy: u32,
    pub matching_size: usize,
    /// floor(log2 n)
    pub log_n: u32,
    /// floor(log2 Delta) + 1, Delta the maximum closed degree
    pub log_maxdeg_plus1: u32,
    /// degeneracy + 1
    pub degeneracy_plus1: u32,
    /// 2|M| for a greedy maximal matching M; `None` when the graph has no
    /// edges (the bound needs at least one).
    pub matching_2m: Option<u32>,
    pub best: u32,
}

/// Computes every bound and their minimum. Requires at least one vertex.
pub fn upper_bounds(g: &Graph) -> Result<BoundReport, EmptyGraphError> {
    let n = g.n();
    if n == 0 {
        return Err(EmptyGraphError);
    }
    let m = g.edge_count();
    let delta = g.max_degree_closed();
    let (_, degeneracy) = g.kcore_ordering(&VertexSet::full(n));
    let matching = greedy_maximal_matching(g);
    let log_n = n.ilog2();
    let log_maxdeg_plus1 = delta.ilog2() + 1;
    let degeneracy_plus1 = degeneracy + 1;
    let matching_2m = if m > 0 { Some(2 * matching.len() as u32) } else { None };
    let best = [Some(log_n), Some(log_maxdeg_plus1), Some(degeneracy_plus1), matching_2m]
        .into_iter()
        .flatten()
        .min()
        .unwrap();
    Ok(BoundReport {
        n,
        m,
        max_closed_degree: delta,
        degeneracy,
        matching_size: matching.len(),
        log_n,
        log_maxdeg_plus1,
        degeneracy_plus1,
        matching_2m,
        best,
    })
}

/// Vertices whose closed degree is at least `2^lb`.
///
/// Only these can belong to a shattered set of size lb+1 or more: each
/// member of such a set needs 2^lb realizers inside its own closed
/// neighborhood.
pub fn degree_filter(g: &Graph, lb: u32) -> VertexSet {
    let mut h = VertexSet::new(g.n());
    let Some(threshold) = 1u64.checked_shl(lb) else {
        return h;
    };
    for v in 0..g.n() as Vertex {
        if g.degree_closed(v) as u64 >= threshold {
            h.insert(v);
        }
    }
    h
}

impl std::fmt::Display for BoundReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        writeln!(f, "n = {}, m = {}", self.n, self.m)?;
        writeln!(f, "floor(log2 n)         = {}", self.log_n)?;
        writeln!(
            f,
            "floor(log2 Delta) + 1 = {}  (max closed degree {})",
            self.log_maxdeg_plus1, self.max_closed_degree
        )?;
        writeln!(
            f,
            "degeneracy + 1        = {}  (degeneracy {})",
            self.degeneracy_plus1, self.degeneracy
        )?;
        match self.matching_2m {
            Some(b) => writeln!(
                f,
                "2 |maximal matching|  = {}  (matching size {})",
                b, self.matching_size
            )?,
            None => writeln!(f, "2 |maximal matching|  = -  (no edges)")?,
        }
        write!(f, "best upper bound      = {}", self.best)
    }
}
