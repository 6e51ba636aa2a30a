//! Exact VC-dimension search.
//!
//! The search walks subsets of the candidate set H in a fixed vertex
//! order, maintaining for every vertex v a bit-mask trace M[v] (which
//! members of the current set X lie in N[v]) and a table T where T[y]
//! counts the vertices whose trace equals y. X is shattered exactly when
//! all 2^|X| counts are positive. The pruning test is stronger: a
//! shattered superset Z ⊇ X of size lb+1 forces every trace class on X to
//! contain at least 2^{lb+1-|X|} vertices, so any table entry below that
//! threshold kills the branch without losing any set larger than the best
//! known lower bound lb.
//!
//! Two further restrictions keep the search small without affecting the
//! result: only vertices of closed degree ≥ 2^lb can belong to a set of
//! size lb+1 (the degree filter), and every shattered set lies inside the
//! radius-2 ball of each of its members, because some vertex's closed
//! neighborhood covers the whole set (the ball restriction, applied to
//! the start vertex of each top-level branch).

use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bounds::degree_filter;
use crate::graph::{Graph, Vertex, VertexSet};
use crate::lower_bound::heuristic_lower_bound;
use crate::reduce::reduce_graph;
use crate::EmptyGraphError;

/// Processing order for the candidate vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VertexOrder {
    /// Non-increasing closed degree, ties by ascending id.
    DegDec,
    /// Non-decreasing closed degree, ties by ascending id.
    DegInc,
    /// Removal order of the minimum-degree peeling of the subgraph
    /// induced by H.
    KCore,
    /// Seeded uniform shuffle; reproducible per seed.
    Random(u64),
}

/// Knobs for [`compute_vcdim`] and the [`vc_dimension`] pipeline.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub ordering: VertexOrder,
    /// Restrict each top-level branch to the radius-2 ball of its start.
    pub ball_restriction: bool,
    /// Collapse trace-equivalent vertices outside H before searching.
    pub graph_reduction: bool,
    /// Trusted lower bound to start from. Must not exceed the true
    /// VC-dimension, or the result may be wrong; when it does hold but no
    /// larger set exists, the returned witness is empty (the caller
    /// supplied the bound, so the caller holds its certificate).
    pub initial_lb: u32,
    /// Compute `avg_ball_size` into the stats (an extra pass).
    pub collect_stats: bool,
    /// Threshold pruning; disable only to enumerate exhaustively.
    pub prune: bool,
    /// Budget for the lower-bound heuristic run by [`vc_dimension`].
    pub maxvisits: u32,
}

impl Default for SearchConfig {
    /// K-core ordering with ball restriction and graph reduction on.
    fn default() -> Self {
        SearchConfig {
            ordering: VertexOrder::KCore,
            ball_restriction: true,
            graph_reduction: true,
            initial_lb: 0,
            collect_stats: false,
            prune: true,
            maxvisits: 64,
        }
    }
}

#[derive(Debug, Clone)]
pub struct SearchStats {
    /// Size of the degree-filtered candidate set H (before reduction).
    pub h_size: usize,
    /// Lower bound the search started from.
    pub initial_lb: u32,
    /// Sets accepted by the pruning test — each one genuinely shattered.
    pub visited_shattered: u64,
    /// Candidate extensions tested, accepted or not (exact count).
    pub tentative: u64,
    /// Mean |B[v,2] ∩ H| over v ∈ H, on the graph the search ran on;
    /// `None` unless `collect_stats` was set.
    pub avg_ball_size: Option<f64>,
    pub elapsed: Duration,
}

impl SearchStats {
    /// Work estimate `visited × avg_ball_size / 2` — a coarser stand-in
    /// for the exact `tentative` count, reported alongside it.
    pub fn tentative_estimate(&self) -> Option<f64> {
        self.avg_ball_size.map(|b| self.visited_shattered as f64 * b / 2.0)
    }
}

#[derive(Debug, Clone)]
pub struct SearchResult {
    pub vcdim: u32,
    /// A shattered set of size `vcdim` in original vertex ids. Empty when
    /// `vcdim` is 0, and also when a caller-supplied `initial_lb` was
    /// never improved upon (see [`SearchConfig::initial_lb`]).
    pub witness: VertexSet,
    pub stats: SearchStats,
}

/// Count and final lower bound from [`count_shattered_sets`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ShatterCount {
    /// Shattered sets accepted during the scan. With pruning off this is
    /// the number of distinct non-empty shattered subsets of H.
    pub count: u64,
    pub vcdim: u32,
}

#[derive(Debug, Error)]
pub enum CensusError {
    #[error("node budget {budget} exhausted after visiting {visited} shattered sets")]
    BudgetExceeded { budget: u64, visited: u64 },
}

/// Orders the members of `h` for processing.
pub fn order_vertices(g: &Graph, h: &VertexSet, strategy: VertexOrder) -> Vec<Vertex> {
    let mut order: Vec<Vertex> = h.iter().collect();
    match strategy {
        VertexOrder::DegDec => {
            order.sort_by_key(|&v| (std::cmp::Reverse(g.degree_closed(v)), v));
        }
        VertexOrder::DegInc => {
            order.sort_by_key(|&v| (g.degree_closed(v), v));
        }
        VertexOrder::KCore => {
            order = g.kcore_ordering(h).0;
        }
        VertexOrder::Random(seed) => {
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            order.shuffle(&mut rng);
        }
    }
    order
}

/// Trace-count table for X ∪ {x} from the table for X.
///
/// `t` has 2^{s-1} entries and `m = 2^{s-1}` is the bit the new vertex
/// contributes. Every v ∈ N[x] keeps its old trace plus the new bit, so
/// one count moves from `t[M[v]]` to `t[M[v] + m]`; everyone else lands in
/// the zero-extended lower half unchanged.
pub fn trace_count_add(t: &[u32], x: Vertex, m: u64, g: &Graph, masks: &[u64]) -> Vec<u32> {
    assert_eq!(t.len() as u64, m, "table size must equal the new trace bit");
    assert!(m.is_power_of_two(), "trace bit must be a power of two");
    let mut out = vec![0u32; t.len() * 2];
    out[..t.len()].copy_from_slice(t);
    apply_trace_add(&mut out, t.len(), x, g, masks);
    out
}

#[inline]
fn apply_trace_add(t: &mut [u32], m: usize, x: Vertex, g: &Graph, masks: &[u64]) {
    for v in g.closed_neighbors(x) {
        let y = masks[v as usize] as usize;
        t[y] -= 1;
        t[y + m] += 1;
    }
}

/// Branch abort signal: the census node budget ran out.
pub(crate) struct Aborted;

/// One in-flight search over a fixed working graph. Single-threaded: the
/// trace masks and tables are mutated in place along the DFS.
pub(crate) struct Search<'g> {
    g: &'g Graph,
    prune: bool,
    masks: Vec<u64>,
    /// tables[s] is the trace-count table at depth s (2^s entries),
    /// allocated once per depth and overwritten on every visit.
    tables: Vec<Vec<u32>>,
    chain: Vec<Vertex>,
    pub(crate) lb: u32,
    pub(crate) best_witness: Vec<Vertex>,
    pub(crate) visited: u64,
    pub(crate) tentative: u64,
    /// Per-vertex cap on how often a vertex may be the added `x`
    /// (heuristic mode); `None` disables the cap and the counters.
    pub(crate) visit_cap: Option<u32>,
    visits: Vec<u32>,
    /// Cap on iterations of each in-node extension loop (heuristic mode).
    pub(crate) child_cap: Option<usize>,
    /// Total additions performed under `visit_cap`, for budget asserts.
    pub(crate) additions: u64,
    /// Abort once `tentative` exceeds this (census mode).
    pub(crate) node_budget: Option<u64>,
}

impl<'g> Search<'g> {
    pub(crate) fn new(g: &'g Graph, initial_lb: u32, prune: bool) -> Self {
        Search {
            g,
            prune,
            masks: vec![0; g.n()],
            tables: vec![vec![g.n() as u32]],
            chain: Vec::new(),
            lb: initial_lb,
            best_witness: Vec::new(),
            visited: 0,
            tentative: 0,
            visit_cap: None,
            visits: Vec::new(),
            child_cap: None,
            additions: 0,
            node_budget: None,
        }
    }

    pub(crate) fn enable_visit_cap(&mut self, cap: u32) {
        self.visit_cap = Some(cap);
        self.visits = vec![0; self.g.n()];
    }

    /// Tries to extend the current set with `x`; on acceptance, recurses
    /// over `rest` (candidates after `x` in the processing order).
    fn try_vertex(&mut self, x: Vertex, rest: &[Vertex]) -> Result<(), Aborted> {
        if let Some(cap) = self.visit_cap {
            if self.visits[x as usize] >= cap {
                return Ok(());
            }
            self.visits[x as usize] += 1;
            self.additions += 1;
        }
        self.tentative += 1;
        if let Some(budget) = self.node_budget {
            if self.tentative > budget {
                return Err(Aborted);
            }
        }
        let s = self.chain.len() + 1;
        debug_assert!(self.lb as usize + 1 >= s, "threshold exponent must stay non-negative");
        let m = 1usize << (s - 1);
        if self.tables.len() == s {
            self.tables.push(vec![0u32; 2 * m]);
        }
        let g = self.g;
        {
            let (head, tail) = self.tables.split_at_mut(s);
            let parent = head[s - 1].as_slice();
            let t = tail[0].as_mut_slice();
            t[..m].copy_from_slice(parent);
            t[m..].fill(0);
            apply_trace_add(t, m, x, g, &self.masks);
            debug_assert_eq!(
                t.iter().map(|&c| c as u64).sum::<u64>(),
                g.n() as u64,
                "trace counts must conserve the vertex count"
            );
            let need: u64 = if self.prune { 1u64 << (self.lb as usize + 1 - s) } else { 1 };
            // ascending scan, first deficient trace class kills the branch
            if t.iter().any(|&c| (c as u64) < need) {
                return Ok(());
            }
        }
        // accepted: every trace class is inhabited, so X ∪ {x} is shattered
        self.visited += 1;
        for v in g.closed_neighbors(x) {
            self.masks[v as usize] += m as u64;
        }
        self.chain.push(x);
        if s as u32 > self.lb {
            self.lb = s as u32;
            self.best_witness.clear();
            self.best_witness.extend_from_slice(&self.chain);
        }
        let limit = self.child_cap.unwrap_or(usize::MAX);
        let mut outcome = Ok(());
        for (k, &y) in rest.iter().enumerate() {
            if k >= limit {
                break;
            }
            outcome = self.try_vertex(y, &rest[k + 1..]);
            if outcome.is_err() {
                break;
            }
        }
        for v in g.closed_neighbors(x) {
            self.masks[v as usize] -= m as u64;
        }
        self.chain.pop();
        outcome
    }

    /// Runs every top-level start in `order`, optionally restricting each
    /// start's candidate pool to its radius-2 ball.
    pub(crate) fn run(&mut self, order: &[Vertex], ball: bool) -> Result<(), Aborted> {
        if !ball {
            for i in 0..order.len() {
                self.try_vertex(order[i], &order[i + 1..])?;
            }
        } else {
            let n = self.g.n();
            let mut pos = vec![u32::MAX; n];
            for (i, &v) in order.iter().enumerate() {
                pos[v as usize] = i as u32;
            }
            let mut stamp = vec![0u32; n];
            let mut epoch = 0u32;
            let mut level1: Vec<Vertex> = Vec::new();
            let mut cand_pos: Vec<u32> = Vec::new();
            let mut cands: Vec<Vertex> = Vec::new();
            for i in 0..order.len() {
                let x = order[i];
                if epoch == u32::MAX {
                    stamp.fill(0);
                    epoch = 0;
                }
                epoch += 1;
                stamp[x as usize] = epoch;
                level1.clear();
                cand_pos.clear();
                for &w in self.g.neighbors(x) {
                    if stamp[w as usize] != epoch {
                        stamp[w as usize] = epoch;
                        level1.push(w);
                        if pos[w as usize] != u32::MAX && pos[w as usize] > i as u32 {
                            cand_pos.push(pos[w as usize]);
                        }
                    }
                }
                for &w in &level1 {
                    for &z in self.g.neighbors(w) {
                        if stamp[z as usize] != epoch {
                            stamp[z as usize] = epoch;
                            if pos[z as usize] != u32::MAX && pos[z as usize] > i as u32 {
                                cand_pos.push(pos[z as usize]);
                            }
                        }
                    }
                }
                // keep the global processing order within the ball
                cand_pos.sort_unstable();
                cands.clear();
                cands.extend(cand_pos.iter().map(|&p| order[p as usize]));
                self.try_vertex(x, &cands)?;
            }
        }
        debug_assert!(
            self.masks.iter().all(|&m| m == 0),
            "trace masks must be restored after the search"
        );
        Ok(())
    }

    pub(crate) fn witness_set(&self, domain: usize) -> VertexSet {
        VertexSet::from_members(domain, self.best_witness.iter().copied())
    }
}

/// Exact VC-dimension of `g` starting from a trusted lower bound.
///
/// Pipeline: degree filter at `initial_lb` → optional reduction → vertex
/// ordering → pruned DFS. The result is the same for every combination of
/// ordering, ball restriction, and reduction; the toggles only change how
/// much work it takes. Runs no lower-bound heuristic — see
/// [`vc_dimension`] for the full default pipeline.
pub fn compute_vcdim(g: &Graph, config: &SearchConfig) -> Result<SearchResult, EmptyGraphError> {
    let t0 = Instant::now();
    if g.n() == 0 {
        return Err(EmptyGraphError);
    }
    let h = degree_filter(g, config.initial_lb);
    let h_size = h.len();
    let reduction = if config.graph_reduction { Some(reduce_graph(g, &h)) } else { None };
    let (work, work_h) = match &reduction {
        Some(r) => {
            let mapped = VertexSet::from_members(
                r.graph.n(),
                h.iter().map(|v| r.map.to_new(v).expect("H is always kept")),
            );
            (&r.graph, mapped)
        }
        None => (g, h.clone()),
    };
    let order = order_vertices(work, &work_h, config.ordering);
    let mut search = Search::new(work, config.initial_lb, config.prune);
    search.run(&order, config.ball_restriction).unwrap_or_else(|_| unreachable!("no budget set"));

    let mut witness = VertexSet::new(g.n());
    for &v in &search.best_witness {
        witness.insert(match &reduction {
            Some(r) => r.map.to_old(v),
            None => v,
        });
    }
    let avg_ball_size = config.collect_stats.then(|| avg_ball_size(work, &work_h));
    Ok(SearchResult {
        vcdim: search.lb,
        witness,
        stats: SearchStats {
            h_size,
            initial_lb: config.initial_lb,
            visited_shattered: search.visited,
            tentative: search.tentative,
            avg_ball_size,
            elapsed: t0.elapsed(),
        },
    })
}

/// Default end-to-end pipeline: run the budgeted lower-bound heuristic,
/// then the exact search seeded with its result. The witness is always a
/// genuine shattered set of size `vcdim` (the heuristic's own witness is
/// used when the exact search cannot improve on it).
pub fn vc_dimension(g: &Graph, config: &SearchConfig) -> Result<SearchResult, EmptyGraphError> {
    let t0 = Instant::now();
    if g.n() == 0 {
        return Err(EmptyGraphError);
    }
    let heur = heuristic_lower_bound(g, config.maxvisits);
    let mut inner = *config;
    inner.initial_lb = config.initial_lb.max(heur.lb);
    let mut res = compute_vcdim(g, &inner)?;
    if res.witness.is_empty() && res.vcdim == heur.lb {
        res.witness = heur.witness;
    }
    res.stats.elapsed = t0.elapsed();
    Ok(res)
}

/// Scans the shattered subsets of `h` in ascending-id order (no ball
/// restriction) and counts the accepted sets. With `prune` off this is
/// exactly the number of distinct non-empty shattered subsets of `h`;
/// with `prune` on it is the number of sets surviving the threshold test
/// seeded with `initial_lb`. `budget` caps the candidate tests performed.
pub fn count_shattered_sets(
    g: &Graph,
    h: &VertexSet,
    prune: bool,
    initial_lb: u32,
    budget: Option<u64>,
) -> Result<ShatterCount, CensusError> {
    let order: Vec<Vertex> = h.iter().collect();
    let mut search = Search::new(g, initial_lb, prune);
    search.node_budget = budget;
    match search.run(&order, false) {
        Ok(()) => Ok(ShatterCount { count: search.visited, vcdim: search.lb }),
        Err(Aborted) => Err(CensusError::BudgetExceeded {
            budget: budget.expect("abort implies a budget"),
            visited: search.visited,
        }),
    }
}

/// Mean |B[v,2] ∩ H| over v ∈ H; 0 for empty H.
pub fn avg_ball_size(g: &Graph, h: &VertexSet) -> f64 {
    if h.is_empty() {
        return 0.0;
    }
    let mut total = 0usize;
    for v in h.iter() {
        total += g.ball(v, 2).iter().filter(|&w| h.contains(w)).count();
    }
    total as f64 / h.len() as f64
}
