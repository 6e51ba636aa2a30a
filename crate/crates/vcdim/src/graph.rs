//! Undirected simple graphs in compressed sparse row form, plus the
//! structural primitives the solver is built on: closed degrees, balls,
//! k-core orderings, maximal matchings and induced subgraphs.
//!
//! Vertices are dense ids `0..n`. The *closed* degree convention is used
//! throughout: `deg(v) = |N[v]|` counts `v` itself, so an isolated vertex
//! has degree 1.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};
use std::io::{self, BufRead, Write};

use thiserror::Error;

pub type Vertex = u32;

const NO_VERTEX: u32 = u32::MAX;

/// Error raised while reading edge-list text.
#[derive(Debug, Error)]
pub enum ParseError {
    #[error("line {line}: expected two integer vertex ids")]
    MissingField { line: usize },
    #[error("line {line}: invalid vertex id `{token}`")]
    InvalidToken { line: usize, token: String },
    #[error(transparent)]
    Io(#[from] io::Error),
}

/// Immutable undirected simple graph.
///
/// Adjacency lists are sorted, deduplicated and never contain the vertex
/// itself. Construction removes self-loops and duplicate edges.
#[derive(Clone, Debug)]
pub struct Graph {
    offsets: Vec<usize>,
    neighbors: Vec<Vertex>,
    /// Original input labels when the graph came from an edge list whose
    /// ids were remapped; `None` means labels coincide with the ids.
    labels: Option<Vec<u64>>,
}

impl Graph {
    /// Builds a graph on `n` vertices from an edge iterator. Self-loops and
    /// duplicate edges (in either orientation) are dropped.
    ///
    /// Panics if an endpoint is `>= n`.
    pub fn from_edges<I>(n: usize, edges: I) -> Self
    where
        I: IntoIterator<Item = (Vertex, Vertex)>,
    {
        let mut list: Vec<(Vertex, Vertex)> = edges
            .into_iter()
            .filter(|&(u, v)| u != v)
            .map(|(u, v)| if u < v { (u, v) } else { (v, u) })
            .collect();
        list.sort_unstable();
        list.dedup();
        if let Some(&(_, v)) = list.last() {
            assert!((v as usize) < n, "edge endpoint {v} out of range for n={n}");
        }
        let mut degree = vec![0usize; n];
        for &(u, v) in &list {
            degree[u as usize] += 1;
            degree[v as usize] += 1;
        }
        let mut offsets = Vec::with_capacity(n + 1);
        let mut acc = 0usize;
        offsets.push(0);
        for d in &degree {
            acc += d;
            offsets.push(acc);
        }
        let mut cursor: Vec<usize> = offsets[..n].to_vec();
        let mut neighbors = vec![0 as Vertex; acc];
        for &(u, v) in &list {
            neighbors[cursor[u as usize]] = v;
            cursor[u as usize] += 1;
            neighbors[cursor[v as usize]] = u;
            cursor[v as usize] += 1;
        }
        for v in 0..n {
            neighbors[offsets[v]..offsets[v + 1]].sort_unstable();
        }
        Graph { offsets, neighbors, labels: None }
    }

    /// Parses whitespace-separated edge-list text.
    ///
    /// Lines starting with `#` or `%` are comments; columns beyond the
    /// first two are ignored. Arbitrary non-negative integer labels are
    /// remapped to `0..n` in order of first appearance; the original
    /// labels are kept for output (see [`Graph::label`]).
    pub fn parse_edge_list<R: BufRead>(reader: R) -> Result<Self, ParseError> {
        let mut ids: HashMap<u64, Vertex> = HashMap::new();
        let mut labels: Vec<u64> = Vec::new();
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        for (idx, line) in reader.lines().enumerate() {
            let line = line?;
            let lineno = idx + 1;
            let trimmed = line.trim_start();
            if trimmed.starts_with('#') || trimmed.starts_with('%') {
                continue;
            }
            let mut tokens = trimmed.split_whitespace();
            let Some(first) = tokens.next() else { continue };
            let Some(second) = tokens.next() else {
                return Err(ParseError::MissingField { line: lineno });
            };
            let mut intern = |tok: &str| -> Result<Vertex, ParseError> {
                let raw: u64 = tok.parse().map_err(|_| ParseError::InvalidToken {
                    line: lineno,
                    token: tok.to_string(),
                })?;
                Ok(*ids.entry(raw).or_insert_with(|| {
                    labels.push(raw);
                    (labels.len() - 1) as Vertex
                }))
            };
            let u = intern(first)?;
            let v = intern(second)?;
            edges.push((u, v));
        }
        let n = labels.len();
        let mut g = Graph::from_edges(n, edges);
        if labels.iter().enumerate().any(|(i, &l)| l != i as u64) {
            g.labels = Some(labels);
        }
        Ok(g)
    }

    /// Canonical edge-list serialization: one `u v` line per edge with
    /// `u < v`, ascending, plus a `v v` line per isolated vertex so the
    /// vertex count survives a round trip (the parser interns the id and
    /// then discards the self-loop). Parsing the output reproduces this
    /// graph up to the parser's first-appearance renumbering.
    pub fn write_edge_list<W: Write>(&self, mut w: W) -> io::Result<()> {
        for (u, v) in self.edges() {
            writeln!(w, "{u} {v}")?;
        }
        for v in 0..self.n() as Vertex {
            if self.neighbors(v).is_empty() {
                writeln!(w, "{v} {v}")?;
            }
        }
        Ok(())
    }

    pub fn n(&self) -> usize {
        self.offsets.len() - 1
    }

    /// Number of undirected edges.
    pub fn edge_count(&self) -> usize {
        self.neighbors.len() / 2
    }

    /// Open neighborhood of `v` (sorted, without `v`).
    #[inline]
    pub fn neighbors(&self, v: Vertex) -> &[Vertex] {
        &self.neighbors[self.offsets[v as usize]..self.offsets[v as usize + 1]]
    }

    /// Closed neighborhood iterator: `v` first, then its neighbors.
    #[inline]
    pub fn closed_neighbors(&self, v: Vertex) -> impl Iterator<Item = Vertex> + '_ {
        std::iter::once(v).chain(self.neighbors(v).iter().copied())
    }

    /// Closed degree `|N[v]|`, counting `v` itself.
    #[inline]
    pub fn degree_closed(&self, v: Vertex) -> usize {
        assert!((v as usize) < self.n(), "vertex {v} out of range");
        self.neighbors(v).len() + 1
    }

    /// Largest closed degree, or 0 for the graph on no vertices.
    pub fn max_degree_closed(&self) -> usize {
        (0..self.n() as Vertex).map(|v| self.degree_closed(v)).max().unwrap_or(0)
    }

    pub fn has_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.neighbors(u).binary_search(&v).is_ok()
    }

    /// Edges as `(u, v)` pairs with `u < v`, ascending.
    pub fn edges(&self) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
        (0..self.n() as Vertex).flat_map(move |u| {
            self.neighbors(u)
                .iter()
                .copied()
                .filter(move |&v| v > u)
                .map(move |v| (u, v))
        })
    }

    /// Original input label of `v` (its own id unless the graph was parsed
    /// from a relabeled edge list).
    pub fn label(&self, v: Vertex) -> u64 {
        match &self.labels {
            Some(l) => l[v as usize],
            None => v as u64,
        }
    }

    /// Ball `B[x, r]`: vertices at distance at most `r` from `x`.
    pub fn ball(&self, x: Vertex, r: usize) -> VertexSet {
        assert!((x as usize) < self.n(), "vertex {x} out of range");
        let mut set = VertexSet::new(self.n());
        set.insert(x);
        let mut frontier = vec![x];
        for _ in 0..r {
            let mut next = Vec::new();
            for &u in &frontier {
                for &w in self.neighbors(u) {
                    if set.insert(w) {
                        next.push(w);
                    }
                }
            }
            if next.is_empty() {
                break;
            }
            frontier = next;
        }
        set
    }

    /// K-core ordering of the subgraph induced by `sub`: repeatedly remove
    /// a vertex of minimum remaining open degree (lowest id on ties),
    /// listing vertices in removal order. Also returns the degeneracy of
    /// the induced subgraph (the largest degree seen at removal time).
    pub fn kcore_ordering(&self, sub: &VertexSet) -> (Vec<Vertex>, u32) {
        let mut deg: HashMap<Vertex, u32> = HashMap::with_capacity(sub.len());
        for v in sub.iter() {
            let d = self.neighbors(v).iter().filter(|&&w| sub.contains(w)).count() as u32;
            deg.insert(v, d);
        }
        let mut heap: BinaryHeap<Reverse<(u32, Vertex)>> = deg
            .iter()
            .map(|(&v, &d)| Reverse((d, v)))
            .collect();
        let mut removed = VertexSet::new(self.n());
        let mut order = Vec::with_capacity(sub.len());
        let mut degeneracy = 0u32;
        while let Some(Reverse((d, v))) = heap.pop() {
            if removed.contains(v) || deg[&v] != d {
                continue; // stale entry
            }
            removed.insert(v);
            order.push(v);
            degeneracy = degeneracy.max(d);
            for &w in self.neighbors(v) {
                if sub.contains(w) && !removed.contains(w) {
                    let dw = deg.get_mut(&w).unwrap();
                    *dw -= 1;
                    heap.push(Reverse((*dw, w)));
                }
            }
        }
        (order, degeneracy)
    }

    /// Subgraph induced by `sub`, with vertices renumbered to `0..|sub|`
    /// in ascending id order. Labels carry over.
    pub fn induced_subgraph(&self, sub: &VertexSet) -> (Graph, IdMap) {
        let new_to_old: Vec<Vertex> = sub.iter().collect();
        let mut old_to_new = vec![NO_VERTEX; self.n()];
        for (new, &old) in new_to_old.iter().enumerate() {
            old_to_new[old as usize] = new as Vertex;
        }
        let mut edges: Vec<(Vertex, Vertex)> = Vec::new();
        for (new_u, &old_u) in new_to_old.iter().enumerate() {
            for &w in self.neighbors(old_u) {
                if w > old_u && sub.contains(w) {
                    edges.push((new_u as Vertex, old_to_new[w as usize]));
                }
            }
        }
        let mut g = Graph::from_edges(new_to_old.len(), edges);
        if self.labels.is_some() || new_to_old.iter().enumerate().any(|(i, &o)| i as Vertex != o) {
            g.labels = Some(new_to_old.iter().map(|&o| self.label(o)).collect());
        }
        (g, IdMap { old_to_new, new_to_old })
    }

    /// Complete graph on `n` vertices.
    pub fn complete(n: usize) -> Self {
        let edges = (0..n as Vertex)
            .flat_map(|u| (u + 1..n as Vertex).map(move |v| (u, v)));
        Graph::from_edges(n, edges)
    }

    /// Path on `n` vertices, edges `i — i+1`.
    pub fn path(n: usize) -> Self {
        Graph::from_edges(n, (1..n as Vertex).map(|v| (v - 1, v)))
    }

    /// Cycle on `n >= 3` vertices.
    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        let edges = (1..n as Vertex)
            .map(|v| (v - 1, v))
            .chain(std::iter::once((n as Vertex - 1, 0)));
        Graph::from_edges(n, edges)
    }

    /// Star: vertex 0 is the center, `1..=leaves` are leaves.
    pub fn star(leaves: usize) -> Self {
        Graph::from_edges(leaves + 1, (1..=leaves as Vertex).map(|v| (0, v)))
    }

    /// Graph with `n` vertices and no edges.
    pub fn edgeless(n: usize) -> Self {
        Graph::from_edges(n, std::iter::empty())
    }
}

/// Renumbering produced by [`Graph::induced_subgraph`].
pub struct IdMap {
    old_to_new: Vec<Vertex>,
    new_to_old: Vec<Vertex>,
}

impl IdMap {
    pub fn to_new(&self, old: Vertex) -> Option<Vertex> {
        match self.old_to_new[old as usize] {
            NO_VERTEX => None,
            v => Some(v),
        }
    }

    pub fn to_old(&self, new: Vertex) -> Vertex {
        self.new_to_old[new as usize]
    }

    pub fn kept(&self) -> usize {
        self.new_to_old.len()
    }
}

/// Set of vertices over the domain `0..n` with O(1) membership tests and
/// iteration in ascending order.
#[derive(Clone, PartialEq, Eq)]
pub struct VertexSet {
    words: Vec<u64>,
    domain: usize,
    len: usize,
}

impl VertexSet {
    pub fn new(domain: usize) -> Self {
        VertexSet { words: vec![0; domain.div_ceil(64)], domain, len: 0 }
    }

    pub fn full(domain: usize) -> Self {
        let mut s = VertexSet::new(domain);
        for v in 0..domain as Vertex {
            s.insert(v);
        }
        s
    }

    pub fn from_members<I: IntoIterator<Item = Vertex>>(domain: usize, members: I) -> Self {
        let mut s = VertexSet::new(domain);
        for v in members {
            s.insert(v);
        }
        s
    }

    /// Inserts `v`; returns true if it was absent.
    pub fn insert(&mut self, v: Vertex) -> bool {
        assert!((v as usize) < self.domain, "vertex {v} outside domain");
        let (w, b) = (v as usize / 64, v as usize % 64);
        let absent = self.words[w] & (1 << b) == 0;
        if absent {
            self.words[w] |= 1 << b;
            self.len += 1;
        }
        absent
    }

    pub fn remove(&mut self, v: Vertex) -> bool {
        let (w, b) = (v as usize / 64, v as usize % 64);
        let present = self.words[w] & (1 << b) != 0;
        if present {
            self.words[w] &= !(1 << b);
            self.len -= 1;
        }
        present
    }

    #[inline]
    pub fn contains(&self, v: Vertex) -> bool {
        let (w, b) = (v as usize / 64, v as usize % 64);
        w < self.words.len() && self.words[w] & (1 << b) != 0
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    pub fn domain_size(&self) -> usize {
        self.domain
    }

    pub fn is_subset_of(&self, other: &VertexSet) -> bool {
        self.iter().all(|v| other.contains(v))
    }

    /// Members in ascending order.
    pub fn iter(&self) -> impl Iterator<Item = Vertex> + '_ {
        self.words.iter().enumerate().flat_map(|(wi, &word)| {
            let mut rest = word;
            std::iter::from_fn(move || {
                if rest == 0 {
                    None
                } else {
                    let b = rest.trailing_zeros();
                    rest &= rest - 1;
                    Some((wi * 64) as Vertex + b as Vertex)
                }
            })
        })
    }
}

impl std::fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

/// Set of pairwise vertex-disjoint edges.
#[derive(Debug, Clone)]
pub struct Matching {
    edges: Vec<(Vertex, Vertex)>,
}

impl Matching {
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }
}

/// Scans edges in canonical order and keeps every edge whose endpoints are
/// still free. The result is maximal: every edge of `g` touches it.
pub fn greedy_maximal_matching(g: &Graph) -> Matching {
    let mut matched = vec![false; g.n()];
    let mut edges = Vec::new();
    for u in 0..g.n() as Vertex {
        if matched[u as usize] {
            continue;
        }
        for &v in g.neighbors(u) {
            if v > u && !matched[v as usize] {
                matched[u as usize] = true;
                matched[v as usize] = true;
                edges.push((u, v));
                break;
            }
        }
    }
    Matching { edges }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::io::Cursor;

    fn parse(text: &str) -> Graph {
        Graph::parse_edge_list(Cursor::new(text)).unwrap()
    }

    #[test]
    fn parse_path() {
        let g = parse("0 1\n1 2");
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn parse_drops_duplicates_and_loops() {
        let g = parse("0 1\n1 0\n0 0");
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_count(), 1);
    }

    #[test]
    fn parse_remaps_by_first_appearance() {
        let g = parse("7 9\n9 4");
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
        assert_eq!((g.label(0), g.label(1), g.label(2)), (7, 9, 4));
        assert!(g.has_edge(0, 1) && g.has_edge(1, 2) && !g.has_edge(0, 2));
    }

    #[test]
    fn parse_tolerates_comments_and_extra_columns() {
        let g = parse("# header\n% other comment\n0 1 0.5\n\n1 2 weight extra");
        assert_eq!(g.n(), 3);
        assert_eq!(g.edge_count(), 2);
    }

    #[test]
    fn parse_reports_line_numbers() {
        let err = Graph::parse_edge_list(Cursor::new("0 1\nx 2")).unwrap_err();
        match err {
            ParseError::InvalidToken { line, token } => {
                assert_eq!(line, 2);
                assert_eq!(token, "x");
            }
            other => panic!("unexpected error {other:?}"),
        }
        let err = Graph::parse_edge_list(Cursor::new("0 1\n3")).unwrap_err();
        assert!(matches!(err, ParseError::MissingField { line: 2 }));
    }

    #[test]
    fn parse_empty_input() {
        let g = parse("");
        assert_eq!(g.n(), 0);
        assert_eq!(g.edge_count(), 0);
    }

    #[test]
    fn closed_degrees() {
        assert_eq!(Graph::edgeless(3).degree_closed(1), 1);
        assert_eq!(Graph::star(3).degree_closed(0), 4);
        let k5 = Graph::complete(5);
        for v in 0..5 {
            assert_eq!(k5.degree_closed(v), 5);
        }
    }

    #[test]
    fn balls() {
        let p3 = Graph::path(3);
        assert_eq!(p3.ball(0, 2).iter().collect::<Vec<_>>(), vec![0, 1, 2]);
        assert_eq!(p3.ball(1, 0).iter().collect::<Vec<_>>(), vec![1]);
        let c6 = Graph::cycle(6);
        assert_eq!(c6.ball(0, 2).iter().collect::<Vec<_>>(), vec![0, 1, 2, 4, 5]);
    }

    #[test]
    fn ball_radius_one_is_closed_neighborhood() {
        let g = Graph::star(4);
        for v in 0..g.n() as Vertex {
            assert_eq!(g.ball(v, 1).len(), g.degree_closed(v));
        }
    }

    #[test]
    fn kcore_fixtures() {
        let all = |g: &Graph| VertexSet::full(g.n());
        let tree = Graph::star(5);
        assert_eq!(tree.kcore_ordering(&all(&tree)).1, 1);
        let k4 = Graph::complete(4);
        assert_eq!(k4.kcore_ordering(&all(&k4)).1, 3);
        let c5 = Graph::cycle(5);
        assert_eq!(c5.kcore_ordering(&all(&c5)).1, 2);
    }

    #[test]
    fn kcore_ordering_is_permutation_and_deterministic() {
        let g = Graph::from_edges(6, [(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]);
        let sub = VertexSet::full(g.n());
        let (o1, d1) = g.kcore_ordering(&sub);
        let (o2, d2) = g.kcore_ordering(&sub);
        assert_eq!(o1, o2);
        assert_eq!(d1, d2);
        let mut sorted = o1.clone();
        sorted.sort_unstable();
        assert_eq!(sorted, (0..6).collect::<Vec<_>>());
        // isolated vertex 5 and leaf 4 come out before the triangle
        assert_eq!(d1, 2);
    }

    #[test]
    fn kcore_on_subset() {
        // K_4 restricted to 3 vertices is a triangle: degeneracy 2.
        let k4 = Graph::complete(4);
        let sub = VertexSet::from_members(4, [0, 1, 2]);
        let (order, d) = k4.kcore_ordering(&sub);
        assert_eq!(order.len(), 3);
        assert_eq!(d, 2);
    }

    #[test]
    fn matching_fixtures() {
        assert_eq!(greedy_maximal_matching(&Graph::edgeless(0)).len(), 0);
        assert_eq!(greedy_maximal_matching(&Graph::star(3)).len(), 1);
        let p4 = Graph::path(4);
        let m = greedy_maximal_matching(&p4);
        assert!(m.len() == 1 || m.len() == 2);
    }

    #[test]
    fn matching_is_maximal_and_disjoint() {
        let g = Graph::from_edges(8, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0), (6, 7)]);
        let m = greedy_maximal_matching(&g);
        let mut covered = vec![false; g.n()];
        for &(u, v) in m.edges() {
            assert!(!covered[u as usize] && !covered[v as usize]);
            covered[u as usize] = true;
            covered[v as usize] = true;
        }
        for (u, v) in g.edges() {
            assert!(covered[u as usize] || covered[v as usize], "edge {u}-{v} unmatched");
        }
    }

    #[test]
    fn induced_subgraph_fixtures() {
        let k4 = Graph::complete(4);
        let (g, map) = k4.induced_subgraph(&VertexSet::full(4));
        assert_eq!(g.edge_count(), 6);
        assert_eq!(map.to_new(2), Some(2));

        let (tri, _) = k4.induced_subgraph(&VertexSet::from_members(4, [0, 2, 3]));
        assert_eq!(tri.n(), 3);
        assert_eq!(tri.edge_count(), 3);

        let star = Graph::star(3);
        let (leaves, map) = star.induced_subgraph(&VertexSet::from_members(4, [1, 2, 3]));
        assert_eq!(leaves.n(), 3);
        assert_eq!(leaves.edge_count(), 0);
        assert_eq!(map.to_old(0), 1);
    }

    #[test]
    fn serialization_round_trip() {
        let g = parse("5 3\n3 9\n9 5\n9 12");
        let mut out = Vec::new();
        g.write_edge_list(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text, "0 1\n0 2\n1 2\n2 3\n");
        let h = parse(&text);
        assert_eq!(h.n(), g.n());
        assert_eq!(h.edges().collect::<Vec<_>>(), g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn serialization_keeps_isolated_vertices() {
        let g = Graph::from_edges(4, vec![(1, 3)]);
        let mut out = Vec::new();
        g.write_edge_list(&mut out).unwrap();
        let text = String::from_utf8(out).unwrap();
        assert_eq!(text, "1 3\n0 0\n2 2\n");
        let h = parse(&text);
        assert_eq!(h.n(), 4);
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn vertex_set_basics() {
        let mut s = VertexSet::new(130);
        assert!(s.insert(0));
        assert!(s.insert(129));
        assert!(!s.insert(0));
        assert!(s.contains(129) && !s.contains(64));
        assert_eq!(s.iter().collect::<Vec<_>>(), vec![0, 129]);
        assert!(s.remove(0));
        assert_eq!(s.len(), 1);
    }
}
