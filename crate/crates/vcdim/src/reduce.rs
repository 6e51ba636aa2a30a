//! Trace-preserving graph reduction. Vertices outside the candidate set H
//! only matter through their trace N[v] ∩ H: two such vertices with equal
//! traces realize exactly the same subsets of any X ⊆ H, so one of them
//! can stand in for the whole class. Searching the reduced graph finds
//! every shattered set contained in H that the original graph has.

use crate::graph::{Graph, IdMap, Vertex, VertexSet};

/// Output of [`reduce_graph`]: the induced subgraph on the kept vertices,
/// the id translation, and the kept set itself (original ids).
pub struct Reduction {
    pub graph: Graph,
    pub map: IdMap,
    pub kept: VertexSet,
}

#[derive(Clone, Copy)]
struct Part {
    start: usize,
    /// boundary of the pivot-member prefix while a pivot is being applied;
    /// reset to `start` between pivots
    mid: usize,
    end: usize,
}

/// Partition refinement by the closed neighborhoods of H's members.
///
/// Starting from the single part V ∖ H, each x ∈ H (ascending) splits
/// every part P into P ∩ N[x] and P ∖ N[x]. Afterwards two vertices share
/// a part iff they have the same closed trace on H. The kept set is H
/// plus the minimum-id representative of each final part, so at most one
/// vertex outside H survives per trace; every trace on H realized in `g`
/// is realized by some kept vertex.
pub fn reduce_graph(g: &Graph, h: &VertexSet) -> Reduction {
    let n = g.n();
    assert_eq!(h.domain_size(), n, "H must be over the graph's vertex domain");
    let mut elements: Vec<Vertex> = (0..n as Vertex).filter(|&v| !h.contains(v)).collect();
    let mut position: Vec<usize> = vec![usize::MAX; n];
    for (i, &v) in elements.iter().enumerate() {
        position[v as usize] = i;
    }
    let mut part_of: Vec<u32> = vec![0; n];
    let mut parts = vec![Part { start: 0, mid: 0, end: elements.len() }];
    let mut touched: Vec<usize> = Vec::new();

    for x in h.iter() {
        touched.clear();
        for v in g.closed_neighbors(x) {
            if h.contains(v) {
                continue;
            }
            let p = part_of[v as usize] as usize;
            if parts[p].mid == parts[p].start {
                touched.push(p);
            }
            // swap v into the pivot-member prefix of its part
            let from = position[v as usize];
            let to = parts[p].mid;
            elements.swap(from, to);
            position[elements[from] as usize] = from;
            position[elements[to] as usize] = to;
            parts[p].mid += 1;
        }
        for &p in &touched {
            let Part { start, mid, end } = parts[p];
            parts[p].mid = start;
            if mid < end {
                // genuine split: the prefix [start, mid) becomes a new part
                let q = parts.len() as u32;
                parts.push(Part { start, mid: start, end: mid });
                for i in start..mid {
                    part_of[elements[i] as usize] = q;
                }
                parts[p].start = mid;
                parts[p].mid = mid;
            }
        }
    }

    let mut kept = h.clone();
    for part in &parts {
        if let Some(&rep) = elements[part.start..part.end].iter().min() {
            kept.insert(rep);
        }
    }
    let (graph, map) = g.induced_subgraph(&kept);
    Reduction { graph, map, kept }
}
