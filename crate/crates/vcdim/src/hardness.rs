//! Clique-to-VC-dimension reduction. From a graph G and a parameter k,
//! builds a host graph whose closed-neighborhood set system has
//! VC-dimension ≥ k exactly when G contains a k-clique — the construction
//! behind the problem's parameterized hardness, usable here both as a
//! test gadget and as a demonstration.
//!
//! The host is a split graph. One side is X = V(G) × {1..k}, made a
//! clique when k ≥ 3. The other side is an independent set of "range"
//! vertices, one per member set, each adjacent to exactly its members:
//! the empty range, one singleton per element of X, one pair
//! {(u,i),(v,j)} per edge uv of G and index pair (i,j), and one block
//! V × S per index subset S with |S| ≥ 3. A k-clique v₁…v_k yields the
//! shattered diagonal {(v₁,1),…,(v_k,k)}; conversely any k-shattered set
//! forces such a clique.

use std::collections::HashSet;

use thiserror::Error;

use crate::graph::{Graph, Vertex};

/// Practical ceiling on k: the block ranges grow as 2^k.
pub const K_CAP: usize = 16;
/// Ceiling for the brute-force clique check.
pub const CLIQUE_N_CAP: usize = 30;

#[derive(Debug, Error)]
pub enum HardnessError {
    #[error("k={k} exceeds the source graph's {n} vertices")]
    KExceedsN { k: usize, n: usize },
    #[error("k={0} exceeds the construction cap k<={K_CAP}")]
    KTooLarge(usize),
    #[error("clique check requires n<={CLIQUE_N_CAP}, got n={0}")]
    CliqueGraphTooLarge(usize),
}

/// Role of one host-graph vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Role {
    /// Element (v, i) of X, with v a source vertex and i ∈ 1..=k.
    Element { v: Vertex, i: usize },
    /// Range vertex adjacent to exactly `members` (element ids).
    Range { members: Vec<Vertex> },
}

/// Host graph plus bookkeeping from [`build_hardness_graph`].
pub struct HardnessInstance {
    pub host: Graph,
    pub k: usize,
    /// Ids of X = V × {1..k} in the host (0..k·n).
    pub x_vertices: Vec<Vertex>,
    /// Role of every host vertex, indexed by host id.
    pub roles: Vec<Role>,
}

impl HardnessInstance {
    /// Host id of element (v, i), i ∈ 1..=k.
    pub fn element_id(&self, v: Vertex, i: usize) -> Vertex {
        debug_assert!((1..=self.k).contains(&i));
        v * self.k as Vertex + (i as Vertex - 1)
    }
}

/// Builds the host graph for (g, k).
///
/// Vertex layout: elements (v,i) occupy ids v·k + (i−1); range vertices
/// follow in construction order (empty range, singletons by element id,
/// edge pairs by canonical edge then (i,j), blocks by ascending subset
/// encoding). Duplicate member sets collapse to one range vertex.
pub fn build_hardness_graph(g: &Graph, k: usize) -> Result<HardnessInstance, HardnessError> {
    let n = g.n();
    if k > n {
        return Err(HardnessError::KExceedsN { k, n });
    }
    if k > K_CAP {
        return Err(HardnessError::KTooLarge(k));
    }
    let xid = |v: Vertex, i: usize| v * k as Vertex + (i as Vertex - 1);
    let x_count = (k * n) as Vertex;
    let mut roles: Vec<Role> = Vec::new();
    for v in 0..n as Vertex {
        for i in 1..=k {
            roles.push(Role::Element { v, i });
        }
    }

    let mut ranges: Vec<Vec<Vertex>> = Vec::new();
    let mut seen: HashSet<Vec<Vertex>> = HashSet::new();
    let mut push_range = |members: Vec<Vertex>, ranges: &mut Vec<Vec<Vertex>>| {
        if seen.insert(members.clone()) {
            ranges.push(members);
        }
    };
    push_range(Vec::new(), &mut ranges);
    for x in 0..x_count {
        push_range(vec![x], &mut ranges);
    }
    for (u, v) in g.edges() {
        for i in 1..=k {
            for j in 1..=k {
                let mut pair = vec![xid(u, i), xid(v, j)];
                pair.sort_unstable();
                push_range(pair, &mut ranges);
            }
        }
    }
    if k >= 3 {
        for s in 0u32..1 << k {
            if s.count_ones() < 3 {
                continue;
            }
            let mut members = Vec::with_capacity(n * s.count_ones() as usize);
            for v in 0..n as Vertex {
                for i in 1..=k {
                    if s & (1 << (i - 1)) != 0 {
                        members.push(xid(v, i));
                    }
                }
            }
            members.sort_unstable();
            push_range(members, &mut ranges);
        }
    }

    let host_n = x_count as usize + ranges.len();
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    if k >= 3 {
        for a in 0..x_count {
            for b in a + 1..x_count {
                edges.push((a, b));
            }
        }
    }
    for (ri, members) in ranges.iter().enumerate() {
        let rid = x_count + ri as Vertex;
        for &x in members {
            edges.push((rid, x));
        }
        roles.push(Role::Range { members: members.clone() });
    }
    Ok(HardnessInstance {
        host: Graph::from_edges(host_n, edges),
        k,
        x_vertices: (0..x_count).collect(),
        roles,
    })
}

/// True iff `g` contains a clique of size k, by bitmask backtracking.
/// k = 0 is always true; k > n is always false.
pub fn has_k_clique(g: &Graph, k: usize) -> Result<bool, HardnessError> {
    let n = g.n();
    if n > CLIQUE_N_CAP {
        return Err(HardnessError::CliqueGraphTooLarge(n));
    }
    if k == 0 {
        return Ok(true);
    }
    if k > n {
        return Ok(false);
    }
    let mut adj = vec![0u32; n];
    for (u, v) in g.edges() {
        adj[u as usize] |= 1 << v;
        adj[v as usize] |= 1 << u;
    }
    let all = if n == 32 { u32::MAX } else { (1u32 << n) - 1 };
    Ok(clique_search(&adj, all, k as u32))
}

fn clique_search(adj: &[u32], candidates: u32, need: u32) -> bool {
    if need == 0 {
        return true;
    }
    if (candidates.count_ones()) < need {
        return false;
    }
    let v = candidates.trailing_zeros();
    let without_v = candidates & !(1 << v);
    // take v (peers must be its neighbors) or leave it
    clique_search(adj, without_v & adj[v as usize], need - 1)
        || clique_search(adj, without_v, need)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::engine::{vc_dimension, SearchConfig};
    use crate::oracle;

    #[test]
    fn clique_check_fixtures() {
        assert!(has_k_clique(&Graph::complete(4), 4).unwrap());
        assert!(!has_k_clique(&Graph::cycle(5), 3).unwrap());
        assert!(has_k_clique(&Graph::cycle(5), 2).unwrap());
        assert!(has_k_clique(&Graph::edgeless(1), 1).unwrap());
        assert!(has_k_clique(&Graph::edgeless(3), 0).unwrap());
        assert!(!has_k_clique(&Graph::edgeless(3), 4).unwrap());
        assert!(matches!(
            has_k_clique(&Graph::edgeless(31), 2),
            Err(HardnessError::CliqueGraphTooLarge(31))
        ));
    }

    #[test]
    fn k_zero_host_is_a_point() {
        let inst = build_hardness_graph(&Graph::path(3), 0).unwrap();
        assert_eq!(inst.host.n(), 1);
        assert_eq!(inst.host.edge_count(), 0);
        assert_eq!(oracle::brute_vcdim(&inst.host).unwrap(), 0);
    }

    #[test]
    fn k_one_edgeless_host_is_matching_plus_point() {
        let inst = build_hardness_graph(&Graph::edgeless(3), 1).unwrap();
        // 3 elements, the empty range, 3 singleton ranges
        assert_eq!(inst.host.n(), 7);
        assert_eq!(inst.host.edge_count(), 3);
        assert_eq!(oracle::brute_vcdim(&inst.host).unwrap(), 1);
    }

    #[test]
    fn size_formula_for_k_three() {
        // |V| = kn + 1 + kn + k²m + (2^k − 1 − k − C(k,2))
        let tri = build_hardness_graph(&Graph::complete(3), 3).unwrap();
        assert_eq!(tri.host.n(), 9 + 1 + 9 + 27 + 1);
        let p3 = build_hardness_graph(&Graph::path(3), 3).unwrap();
        assert_eq!(p3.host.n(), 9 + 1 + 9 + 18 + 1);
        let k4 = build_hardness_graph(&Graph::complete(4), 4).unwrap();
        assert_eq!(k4.host.n(), 16 + 1 + 16 + 96 + (16 - 1 - 4 - 6));
    }

    #[test]
    fn split_structure() {
        let inst = build_hardness_graph(&Graph::complete(3), 3).unwrap();
        let xn = inst.x_vertices.len() as Vertex;
        // X is a clique for k >= 3
        for &a in &inst.x_vertices {
            for &b in &inst.x_vertices {
                if a != b {
                    assert!(inst.host.has_edge(a, b));
                }
            }
        }
        // ranges form an independent set adjacent only to their members
        for r in xn..inst.host.n() as Vertex {
            for &w in inst.host.neighbors(r) {
                assert!(w < xn, "range vertices must not touch each other");
            }
            match &inst.roles[r as usize] {
                Role::Range { members } => {
                    assert_eq!(inst.host.neighbors(r), members.as_slice());
                }
                other => panic!("expected a range role, got {other:?}"),
            }
        }
    }

    #[test]
    fn equivalence_on_fixtures() {
        let config = SearchConfig::default();
        for (g, k, expect) in [
            (Graph::complete(3), 3usize, true),
            (Graph::path(3), 3, false),
            (Graph::complete(4), 4, true),
            (Graph::cycle(5), 3, false),
            (Graph::cycle(5), 2, true),
            (Graph::edgeless(4), 2, false),
        ] {
            assert_eq!(has_k_clique(&g, k).unwrap(), expect);
            let inst = build_hardness_graph(&g, k).unwrap();
            let vc = vc_dimension(&inst.host, &config).unwrap().vcdim;
            assert_eq!(vc >= k as u32, expect, "k={k}, host n={}", inst.host.n());
        }
    }

    #[test]
    fn caps_and_errors() {
        assert!(matches!(
            build_hardness_graph(&Graph::path(3), 4),
            Err(HardnessError::KExceedsN { k: 4, n: 3 })
        ));
        let big = Graph::edgeless(20);
        assert!(matches!(
            build_hardness_graph(&big, 17),
            Err(HardnessError::KTooLarge(17))
        ));
    }
}
