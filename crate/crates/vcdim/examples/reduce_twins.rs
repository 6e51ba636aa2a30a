//! Trace-equivalence reduction: vertices outside the candidate set H that
//! see the same part of H are interchangeable as trace realizers, so all
//! but one per class can be dropped without changing the VC-dimension.

use vcdim::{compute_vcdim, degree_filter, reduce_graph, Graph, SearchConfig};

fn main() {
    // two hubs sharing 6 leaves: every leaf has the same trace {0, 1} on H
    let edges = (2..8).flat_map(|leaf| [(0, leaf), (1, leaf)]);
    let g = Graph::from_edges(8, edges);

    let h = degree_filter(&g, 1); // closed degree >= 2: everyone qualifies here
    let r = reduce_graph(&g, &h);
    println!("H = {:?}", h.iter().collect::<Vec<_>>());
    println!("kept {} of {} vertices", r.kept.len(), g.n());

    let h = degree_filter(&g, 2); // closed degree >= 4: only the hubs
    let r = reduce_graph(&g, &h);
    println!("H = {:?}", h.iter().collect::<Vec<_>>());
    println!(
        "kept {:?} -> reduced graph with n = {}, m = {}",
        r.kept.iter().collect::<Vec<_>>(),
        r.graph.n(),
        r.graph.edge_count()
    );

    let with = compute_vcdim(&g, &SearchConfig::default()).unwrap();
    let without =
        compute_vcdim(&g, &SearchConfig { graph_reduction: false, ..Default::default() }).unwrap();
    println!("vcdim with reduction = {}, without = {}", with.vcdim, without.vcdim);
    assert_eq!(with.vcdim, without.vcdim);
}
