//! Brute-force ground truth for small instances: shattering tests,
//! exhaustive VC-dimension, shattered-set enumeration, and exact maximum
//! matching. These routines exist to certify the fast engine, so they are
//! written for obviousness, not speed, and refuse inputs above hard caps
//! rather than silently truncating.

use std::collections::{HashMap, HashSet};

use thiserror::Error;

use crate::graph::{Graph, Vertex, VertexSet};

/// Largest graph the exhaustive searches accept.
pub const BRUTE_N_CAP: usize = 20;
/// Largest edge count the edge-subset matching search accepts.
pub const BRUTE_M_CAP: usize = 32;

#[derive(Debug, Error)]
pub enum OracleError {
    #[error("set of size {0} exceeds the 63-element trace limit")]
    SetTooLarge(usize),
    #[error("graph with n={n} exceeds the brute-force cap n<={BRUTE_N_CAP}")]
    GraphTooLarge { n: usize },
    #[error("matching oracle requires n<={BRUTE_N_CAP} or m<={BRUTE_M_CAP} (got n={n}, m={m})")]
    MatchingTooLarge { n: usize, m: usize },
    #[error("enumeration budget {budget} exhausted after counting {counted} shattered sets")]
    BudgetExceeded { budget: u64, counted: u64 },
}

/// True iff every one of the 2^|X| subsets of `x` occurs as N[v] ∩ X for
/// some vertex v. Decided by collecting the realized traces and comparing
/// cardinalities. The empty set is shattered whenever the graph has a
/// vertex (any vertex realizes the empty trace).
pub fn is_shattered(g: &Graph, x: &VertexSet) -> Result<bool, OracleError> {
    if x.len() > 63 {
        return Err(OracleError::SetTooLarge(x.len()));
    }
    let members: Vec<Vertex> = x.iter().collect();
    let mut bit_of: HashMap<Vertex, u64> = HashMap::with_capacity(members.len());
    for (i, &v) in members.iter().enumerate() {
        bit_of.insert(v, 1u64 << i);
    }
    let want = 1u64 << members.len();
    let mut realized: HashSet<u64> = HashSet::new();
    for v in 0..g.n() as Vertex {
        let mut trace = 0u64;
        for w in g.closed_neighbors(v) {
            if let Some(&b) = bit_of.get(&w) {
                trace |= b;
            }
        }
        realized.insert(trace);
        if realized.len() as u64 == want {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Exhaustive VC-dimension: the largest |X| with `is_shattered(g, X)`.
///
/// Searches sizes increasingly and stops at the first size with no
/// shattered set — valid because shattered sets are downward closed — and
/// never looks past floor(log2 n), which no shattered set can exceed.
pub fn brute_vcdim(g: &Graph) -> Result<u32, OracleError> {
    let n = g.n();
    if n > BRUTE_N_CAP {
        return Err(OracleError::GraphTooLarge { n });
    }
    if n == 0 {
        return Ok(0);
    }
    let max_s = n.ilog2();
    let mut best = 0;
    'sizes: for s in 1..=max_s as usize {
        let mut found = false;
        for_each_combination(n, s, |combo| {
            if !found {
                let set = VertexSet::from_members(n, combo.iter().copied());
                found = is_shattered(g, &set).expect("size within cap");
            }
        });
        if !found {
            break 'sizes;
        }
        best = s as u32;
    }
    Ok(best)
}

/// Counts the non-empty shattered subsets of V with size at most
/// `max_size`. `budget` caps the number of candidate sets tested; running
/// out yields an error carrying the count so far.
///
/// The search extends sets by ascending vertex id and cuts a branch as
/// soon as the current set is not shattered, which is exact because every
/// subset of a shattered set is shattered.
pub fn enumerate_shattered(g: &Graph, max_size: usize, budget: u64) -> Result<u64, OracleError> {
    let max_size = max_size.min(g.n()).min(63);
    let mut state = EnumState { g, max_size, budget, tested: 0, counted: 0 };
    let mut current = VertexSet::new(g.n());
    match state.extend(&mut current, 0) {
        Ok(()) => Ok(state.counted),
        Err(()) => Err(OracleError::BudgetExceeded { budget, counted: state.counted }),
    }
}

struct EnumState<'g> {
    g: &'g Graph,
    max_size: usize,
    budget: u64,
    tested: u64,
    counted: u64,
}

impl EnumState<'_> {
    fn extend(&mut self, current: &mut VertexSet, from: Vertex) -> Result<(), ()> {
        if current.len() >= self.max_size {
            return Ok(());
        }
        for v in from..self.g.n() as Vertex {
            self.tested += 1;
            if self.tested > self.budget {
                return Err(());
            }
            current.insert(v);
            if is_shattered(self.g, current).expect("size within cap") {
                self.counted += 1;
                self.extend(current, v + 1)?;
            }
            current.remove(v);
        }
        Ok(())
    }
}

/// Exact maximum matching size, by bitmask dynamic programming over
/// vertices (n <= 20) or branching over the edge list (m <= 32).
pub fn brute_max_matching(g: &Graph) -> Result<u32, OracleError> {
    let (n, m) = (g.n(), g.edge_count());
    if n <= BRUTE_N_CAP {
        let mut memo: HashMap<u32, u32> = HashMap::new();
        return Ok(matching_over_vertices(g, 0, &mut memo));
    }
    if m <= BRUTE_M_CAP {
        let edges: Vec<(Vertex, Vertex)> = g.edges().collect();
        let mut used: HashSet<Vertex> = HashSet::new();
        let mut best = 0;
        matching_over_edges(&edges, 0, 0, &mut used, &mut best);
        return Ok(best);
    }
    Err(OracleError::MatchingTooLarge { n, m })
}

fn matching_over_vertices(g: &Graph, used: u32, memo: &mut HashMap<u32, u32>) -> u32 {
    let free = !used & ((1u32 << g.n()) - 1);
    if free == 0 {
        return 0;
    }
    if let Some(&b) = memo.get(&used) {
        return b;
    }
    let v = free.trailing_zeros();
    // either v stays unmatched...
    let mut best = matching_over_vertices(g, used | (1 << v), memo);
    // ...or it pairs with a free neighbor
    for &w in g.neighbors(v) {
        if used & (1 << w) == 0 {
            best = best.max(1 + matching_over_vertices(g, used | (1 << v) | (1 << w), memo));
        }
    }
    memo.insert(used, best);
    best
}

fn matching_over_edges(
    edges: &[(Vertex, Vertex)],
    idx: usize,
    size: u32,
    used: &mut HashSet<Vertex>,
    best: &mut u32,
) {
    *best = (*best).max(size);
    if idx == edges.len() || size + (edges.len() - idx) as u32 <= *best {
        return;
    }
    let (u, v) = edges[idx];
    if !used.contains(&u) && !used.contains(&v) {
        used.insert(u);
        used.insert(v);
        matching_over_edges(edges, idx + 1, size + 1, used, best);
        used.remove(&u);
        used.remove(&v);
    }
    matching_over_edges(edges, idx + 1, size, used, best);
}

/// Calls `f` with every size-`s` subset of 0..n, in lexicographic order.
fn for_each_combination(n: usize, s: usize, mut f: impl FnMut(&[Vertex])) {
    if s > n {
        return;
    }
    let mut combo: Vec<Vertex> = (0..s as Vertex).collect();
    loop {
        f(&combo);
        // advance: find the rightmost index that can still move up
        let mut i = s;
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            if combo[i] < (n - s + i) as Vertex {
                break;
            }
        }
        combo[i] += 1;
        for j in i + 1..s {
            combo[j] = combo[j - 1] + 1;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(n: usize, members: &[Vertex]) -> VertexSet {
        VertexSet::from_members(n, members.iter().copied())
    }

    #[test]
    fn empty_set_is_shattered() {
        assert!(is_shattered(&Graph::edgeless(1), &set(1, &[])).unwrap());
        assert!(is_shattered(&Graph::complete(3), &set(3, &[])).unwrap());
    }

    #[test]
    fn star_leaf_pair_is_shattered() {
        let g = Graph::star(3);
        assert!(is_shattered(&g, &set(4, &[1, 2])).unwrap());
        // the center singleton is not: every closed neighborhood contains
        // the center, so the empty trace is unrealizable
        assert!(!is_shattered(&g, &set(4, &[0])).unwrap());
    }

    #[test]
    fn complete_graph_singletons_not_shattered() {
        let g = Graph::complete(3);
        for v in 0..3 {
            assert!(!is_shattered(&g, &set(3, &[v])).unwrap());
        }
    }

    #[test]
    fn oversized_set_refused() {
        let g = Graph::edgeless(70);
        let all = VertexSet::full(70);
        assert!(matches!(is_shattered(&g, &all), Err(OracleError::SetTooLarge(70))));
    }

    #[test]
    fn brute_vcdim_fixtures() {
        assert_eq!(brute_vcdim(&Graph::path(3)).unwrap(), 1);
        assert_eq!(brute_vcdim(&Graph::star(3)).unwrap(), 2);
        assert_eq!(brute_vcdim(&Graph::complete(5)).unwrap(), 0);
        assert_eq!(brute_vcdim(&Graph::cycle(4)).unwrap(), 1);
        assert_eq!(brute_vcdim(&Graph::cycle(6)).unwrap(), 2);
        assert_eq!(brute_vcdim(&Graph::edgeless(2)).unwrap(), 1);
        assert_eq!(brute_vcdim(&Graph::edgeless(1)).unwrap(), 0);
        assert_eq!(brute_vcdim(&Graph::edgeless(0)).unwrap(), 0);
    }

    #[test]
    fn brute_vcdim_cap() {
        assert!(matches!(
            brute_vcdim(&Graph::edgeless(21)),
            Err(OracleError::GraphTooLarge { n: 21 })
        ));
    }

    #[test]
    fn enumerate_star() {
        // 3 leaf singletons + 3 leaf pairs; the center singleton misses
        // the empty trace, and no triple has all its pair traces
        let g = Graph::star(3);
        assert_eq!(enumerate_shattered(&g, 4, 1 << 20).unwrap(), 6);
    }

    #[test]
    fn enumerate_triangle_and_edgeless() {
        assert_eq!(enumerate_shattered(&Graph::complete(3), 3, 1 << 20).unwrap(), 0);
        // singletons only: with N[v] = {v} the full pair trace is unrealizable
        assert_eq!(enumerate_shattered(&Graph::edgeless(3), 3, 1 << 20).unwrap(), 3);
    }

    #[test]
    fn enumerate_budget_exhaustion() {
        let g = Graph::star(3);
        match enumerate_shattered(&g, 4, 3) {
            Err(OracleError::BudgetExceeded { budget: 3, counted }) => assert!(counted <= 3),
            other => panic!("expected budget error, got {other:?}"),
        }
    }

    #[test]
    fn enumerate_respects_max_size() {
        let g = Graph::star(3);
        assert_eq!(enumerate_shattered(&g, 1, 1 << 20).unwrap(), 3);
    }

    #[test]
    fn max_matching_fixtures() {
        assert_eq!(brute_max_matching(&Graph::star(3)).unwrap(), 1);
        assert_eq!(brute_max_matching(&Graph::path(4)).unwrap(), 2);
        assert_eq!(brute_max_matching(&Graph::cycle(6)).unwrap(), 3);
        assert_eq!(brute_max_matching(&Graph::edgeless(4)).unwrap(), 0);
    }

    #[test]
    fn max_matching_edge_branch_path() {
        // 25 vertices forces the m <= 32 edge-branching path
        let g = Graph::path(25);
        assert_eq!(brute_max_matching(&g).unwrap(), 12);
    }

    #[test]
    fn max_matching_cap() {
        let g = Graph::complete(21); // n=21, m=210: over both caps
        assert!(matches!(
            brute_max_matching(&g),
            Err(OracleError::MatchingTooLarge { n: 21, m: 210 })
        ));
    }

    #[test]
    fn downward_closure_on_star() {
        // every subset of a shattered pair is shattered
        let g = Graph::star(3);
        for pair in [[1, 2], [1, 3], [2, 3]] {
            assert!(is_shattered(&g, &set(4, &pair)).unwrap());
            for v in pair {
                assert!(is_shattered(&g, &set(4, &[v])).unwrap());
            }
        }
    }

    #[test]
    fn combinations_cover_all_pairs() {
        let mut seen = Vec::new();
        for_each_combination(4, 2, |c| seen.push((c[0], c[1])));
        assert_eq!(seen, vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    }
}
