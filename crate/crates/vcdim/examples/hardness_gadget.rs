//! The clique-to-VC-dimension reduction: a split graph built from (G, k)
//! whose VC-dimension reaches k exactly when G contains a k-clique. This
//! is the constructive half of the problem's W[1]-hardness.

use vcdim::{build_hardness_graph, has_k_clique, vc_dimension, Graph, SearchConfig};

fn main() {
    let graphs: Vec<(&str, Graph)> = vec![
        ("triangle K_3", Graph::complete(3)),
        ("path P_3", Graph::path(3)),
        ("cycle C_5", Graph::cycle(5)),
        ("complete K_4", Graph::complete(4)),
    ];
    for k in [2, 3, 4] {
        for (name, g) in &graphs {
            if k > g.n() {
                continue;
            }
            let inst = build_hardness_graph(g, k).unwrap();
            let host_vc = vc_dimension(&inst.host, &SearchConfig::default()).unwrap().vcdim;
            let clique = has_k_clique(g, k).unwrap();
            println!(
                "{name}, k={k}: host n={:>3} m={:>4}, vcdim(host)={host_vc} -> {} {k}-clique",
                inst.host.n(),
                inst.host.edge_count(),
                if clique { "has a" } else { "no" },
            );
            assert_eq!(host_vc >= k as u32, clique);
        }
    }
}
