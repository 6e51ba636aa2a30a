//! Reproducible random graphs: uniform G(n,p), a power-law configuration
//! model, and perturbed square grids. All generators draw from a ChaCha8
//! stream seeded explicitly, so a (parameters, seed) pair names one graph
//! forever, across platforms.

use rand::distributions::{Distribution, WeightedIndex};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::graph::{Graph, Vertex};

#[derive(Debug, Error)]
pub enum GenError {
    #[error("edge probability must lie in [0,1], got {0}")]
    InvalidProbability(f64),
    #[error("power-law exponent must exceed 1, got {0}")]
    InvalidExponent(f64),
    #[error("delete fraction must lie in [0,1], got {0}")]
    InvalidFraction(f64),
}

/// G(n,p): every one of the C(n,2) edges appears independently with
/// probability p. Uses geometric skip sampling, so the cost is
/// proportional to the number of edges generated, not to n².
pub fn gen_gnp(n: usize, p: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&p) || p.is_nan() {
        return Err(GenError::InvalidProbability(p));
    }
    if p == 0.0 || n < 2 {
        return Ok(Graph::edgeless(n));
    }
    if p == 1.0 {
        return Ok(Graph::complete(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let total = (n as u64) * (n as u64 - 1) / 2;
    let ln_q = (1.0 - p).ln(); // < 0
    let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
    // walk the linear index over all u<v pairs, jumping geometric gaps
    let mut idx = 0u64;
    let mut row = 0u64; // current u
    let mut before = 0u64; // pairs in rows above `row`
    loop {
        let u: f64 = rng.gen(); // [0,1)
        let skip = ((1.0 - u).ln() / ln_q).floor();
        if !skip.is_finite() || skip >= (total - idx) as f64 {
            break;
        }
        idx += skip as u64;
        if idx >= total {
            break;
        }
        while idx - before >= n as u64 - 1 - row {
            before += n as u64 - 1 - row;
            row += 1;
        }
        let v = row + 1 + (idx - before);
        edges.push((row as Vertex, v as Vertex));
        idx += 1;
        if idx >= total {
            break;
        }
    }
    Ok(Graph::from_edges(n, edges))
}

/// Power-law configuration model: each vertex draws a degree d ∈ {1,…,n−1}
/// with probability proportional to d^−beta; if the degree sum is odd, one
/// uniformly chosen vertex below the ceiling gets one more half-edge; the
/// half-edges are then paired by a random shuffle. Self-loops and
/// duplicate edges from the pairing are dropped.
pub fn gen_powerlaw(n: usize, beta: f64, seed: u64) -> Result<Graph, GenError> {
    if beta.is_nan() || beta <= 1.0 {
        return Err(GenError::InvalidExponent(beta));
    }
    if n <= 1 {
        return Ok(Graph::edgeless(n));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let weights: Vec<f64> = (1..n).map(|d| (d as f64).powf(-beta)).collect();
    let dist = WeightedIndex::new(&weights).expect("weights are positive");
    let mut degrees: Vec<usize> = (0..n).map(|_| dist.sample(&mut rng) + 1).collect();
    if degrees.iter().sum::<usize>() % 2 == 1 {
        loop {
            let v = rng.gen_range(0..n);
            if degrees[v] < n - 1 {
                degrees[v] += 1;
                break;
            }
        }
    }
    let mut stubs: Vec<Vertex> = Vec::with_capacity(degrees.iter().sum());
    for (v, &d) in degrees.iter().enumerate() {
        stubs.extend(std::iter::repeat_n(v as Vertex, d));
    }
    use rand::seq::SliceRandom;
    stubs.shuffle(&mut rng);
    let edges = stubs.chunks_exact(2).map(|pair| (pair[0], pair[1]));
    Ok(Graph::from_edges(n, edges))
}

/// side×side grid with 4-neighbor adjacency; vertex (r,c) has id r·side+c.
pub fn grid(side: usize) -> Graph {
    let id = |r: usize, c: usize| (r * side + c) as Vertex;
    let mut edges = Vec::with_capacity(2 * side * side.saturating_sub(1));
    for r in 0..side {
        for c in 0..side {
            if c + 1 < side {
                edges.push((id(r, c), id(r, c + 1)));
            }
            if r + 1 < side {
                edges.push((id(r, c), id(r + 1, c)));
            }
        }
    }
    Graph::from_edges(side * side, edges)
}

/// Square grid with exactly ⌊delete_fraction · m⌋ uniformly chosen edges
/// removed. All side² vertices are kept, so deletions can isolate them.
pub fn gen_grid_perturbed(side: usize, delete_fraction: f64, seed: u64) -> Result<Graph, GenError> {
    if !(0.0..=1.0).contains(&delete_fraction) || delete_fraction.is_nan() {
        return Err(GenError::InvalidFraction(delete_fraction));
    }
    let full = grid(side);
    let edges: Vec<(Vertex, Vertex)> = full.edges().collect();
    // nudge before flooring so exact products like 0.1·180600 don't land
    // a hair under the integer
    let k = ((delete_fraction * edges.len() as f64) + 1e-9).floor() as usize;
    let k = k.min(edges.len());
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut drop = vec![false; edges.len()];
    for i in rand::seq::index::sample(&mut rng, edges.len(), k) {
        drop[i] = true;
    }
    let kept = edges.iter().enumerate().filter(|&(i, _)| !drop[i]).map(|(_, &e)| e);
    Ok(Graph::from_edges(side * side, kept))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gnp_extremes() {
        let g = gen_gnp(5, 0.0, 1).unwrap();
        assert_eq!(g.edge_count(), 0);
        let g = gen_gnp(5, 1.0, 1).unwrap();
        assert_eq!(g.edge_count(), 10);
        assert!(gen_gnp(5, 1.5, 1).is_err());
        assert!(gen_gnp(5, -0.1, 1).is_err());
        assert_eq!(gen_gnp(0, 0.5, 1).unwrap().n(), 0);
        assert_eq!(gen_gnp(1, 0.5, 1).unwrap().n(), 1);
    }

    #[test]
    fn gnp_deterministic_per_seed() {
        let a = gen_gnp(40, 0.2, 9).unwrap();
        let b = gen_gnp(40, 0.2, 9).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
        let c = gen_gnp(40, 0.2, 10).unwrap();
        assert_ne!(a.edges().collect::<Vec<_>>(), c.edges().collect::<Vec<_>>());
    }

    #[test]
    fn gnp_edge_count_concentrates() {
        // expectation C(1000,2)·0.01 = 4995, sd ≈ 70; stay within 4 sd
        for seed in [1, 2, 3] {
            let g = gen_gnp(1000, 0.01, seed).unwrap();
            let m = g.edge_count() as f64;
            assert!((m - 4995.0).abs() < 280.0, "m={m} for seed {seed}");
        }
    }

    #[test]
    fn powerlaw_basics() {
        assert!(gen_powerlaw(10, 1.0, 1).is_err());
        assert!(gen_powerlaw(10, f64::NAN, 1).is_err());
        assert_eq!(gen_powerlaw(1, 2.5, 1).unwrap().n(), 1);
        let g = gen_powerlaw(200, 2.5, 5).unwrap();
        assert_eq!(g.n(), 200);
        assert!(g.edge_count() > 0);
        let h = gen_powerlaw(200, 2.5, 5).unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), h.edges().collect::<Vec<_>>());
    }

    #[test]
    fn powerlaw_huge_beta_is_matching_like() {
        // nearly all degrees are 1, so the pairing is close to a perfect
        // matching: max degree stays tiny and m ≈ n/2
        let g = gen_powerlaw(400, 50.0, 3).unwrap();
        assert!(g.max_degree_closed() <= 3);
        let m = g.edge_count();
        assert!((150..=200).contains(&m), "m={m}");
    }

    #[test]
    fn grid_shapes() {
        assert_eq!(grid(1).n(), 1);
        assert_eq!(grid(1).edge_count(), 0);
        let g = grid(3);
        assert_eq!(g.n(), 9);
        assert_eq!(g.edge_count(), 12);
        // 2x2 grid is a 4-cycle
        let c = grid(2);
        assert_eq!(c.n(), 4);
        assert_eq!(c.edge_count(), 4);
        assert!(c.degree_closed(0) == 3);
    }

    #[test]
    fn perturbed_grid_exact_deletion_count() {
        let g = gen_grid_perturbed(2, 0.0, 1).unwrap();
        assert_eq!(g.edge_count(), 4);
        let g = gen_grid_perturbed(5, 1.0, 1).unwrap();
        assert_eq!(g.edge_count(), 0);
        assert_eq!(g.n(), 25);
        // m = 2·10·9 = 180; delete exactly 18
        let g = gen_grid_perturbed(10, 0.1, 7).unwrap();
        assert_eq!(g.edge_count(), 162);
        assert!(gen_grid_perturbed(3, 1.2, 1).is_err());
    }

    #[test]
    fn perturbed_grid_deterministic() {
        let a = gen_grid_perturbed(8, 0.25, 11).unwrap();
        let b = gen_grid_perturbed(8, 0.25, 11).unwrap();
        assert_eq!(a.edges().collect::<Vec<_>>(), b.edges().collect::<Vec<_>>());
    }
}
