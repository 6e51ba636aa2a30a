//! Budgeted lower bound on the VC-dimension.
//!
//! Runs the same shattered-set scan as the exact engine over all vertices
//! in non-increasing closed-degree order, but caps the work in two ways:
//! each vertex may be *added* to the current set at most `maxvisits`
//! times (the counter is never reset, which keeps the whole pass linear
//! in n + m up to the maxvisits constant), and each accepted set tries
//! only the first ⌊maxvisits/2⌋ of its remaining candidates. The scan
//! only ever reports sizes of sets it has verified shattered, so the
//! result is a true lower bound.

use crate::engine::{order_vertices, Search, VertexOrder};
use crate::graph::{Graph, VertexSet};

/// Result of [`heuristic_lower_bound`].
#[derive(Debug, Clone)]
pub struct LowerBound {
    /// Verified lower bound: 0 ≤ lb ≤ VC-dimension.
    pub lb: u32,
    /// A shattered set of size `lb` (empty when lb = 0).
    pub witness: VertexSet,
    /// Vertex-addition events performed; at most `maxvisits · n`.
    pub additions: u64,
}

/// Computes a lower bound with per-vertex visit budget `maxvisits`
/// (must be ≥ 1; 64 is the tuned default used by the search pipeline).
pub fn heuristic_lower_bound(g: &Graph, maxvisits: u32) -> LowerBound {
    assert!(maxvisits >= 1, "maxvisits must be at least 1");
    if g.n() == 0 {
        return LowerBound { lb: 0, witness: VertexSet::new(0), additions: 0 };
    }
    let all = VertexSet::full(g.n());
    let order = order_vertices(g, &all, VertexOrder::DegDec);
    let mut search = Search::new(g, 0, true);
    search.enable_visit_cap(maxvisits);
    search.child_cap = Some((maxvisits / 2) as usize);
    search.run(&order, false).unwrap_or_else(|_| unreachable!("no node budget set"));
    debug_assert!(search.additions <= maxvisits as u64 * g.n() as u64);
    LowerBound {
        lb: search.lb,
        witness: search.witness_set(g.n()),
        additions: search.additions,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle;

    #[test]
    fn complete_graph_gives_zero() {
        for n in [1, 2, 5] {
            let r = heuristic_lower_bound(&Graph::complete(n), 64);
            assert_eq!(r.lb, 0);
            assert!(r.witness.is_empty());
        }
    }

    #[test]
    fn star_finds_the_leaf_pair() {
        let g = Graph::star(3);
        let r = heuristic_lower_bound(&g, 64);
        assert_eq!(r.lb, 2);
        assert_eq!(r.witness.len(), 2);
        assert!(oracle::is_shattered(&g, &r.witness).unwrap());
    }

    #[test]
    fn empty_graph_is_zero() {
        assert_eq!(heuristic_lower_bound(&Graph::edgeless(0), 64).lb, 0);
    }

    #[test]
    fn sound_and_budgeted_across_maxvisits() {
        let g = Graph::from_edges(
            10,
            [(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 0), (7, 8), (8, 9), (2, 7)],
        );
        let exact = oracle::brute_vcdim(&g).unwrap();
        for maxvisits in [1, 2, 16, 32, 64, 128, 256] {
            let r = heuristic_lower_bound(&g, maxvisits);
            assert!(r.lb <= exact, "maxvisits={maxvisits}");
            assert!(r.additions <= maxvisits as u64 * 10);
            assert_eq!(r.witness.len() as u32, r.lb);
            if r.lb > 0 {
                assert!(oracle::is_shattered(&g, &r.witness).unwrap());
            }
        }
    }

    #[test]
    fn tiny_budget_still_sound() {
        // maxvisits = 1: each accepted node explores no children, so only
        // singletons can be found
        let r = heuristic_lower_bound(&Graph::star(3), 1);
        assert!(r.lb <= 1);
    }

    #[test]
    fn deterministic() {
        let g = Graph::cycle(9);
        let a = heuristic_lower_bound(&g, 64);
        let b = heuristic_lower_bound(&g, 64);
        assert_eq!(a.lb, b.lb);
        assert_eq!(a.additions, b.additions);
    }
}
