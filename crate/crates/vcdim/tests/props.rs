//! Randomized property checks tying the search engine to the brute-force
//! oracle on small graphs, across the full configuration matrix.

use proptest::prelude::*;

use vcdim::engine::count_shattered_sets;
use vcdim::graph::greedy_maximal_matching;
use vcdim::{
    brute_max_matching, brute_vcdim, compute_vcdim, enumerate_shattered, gen_gnp,
    heuristic_lower_bound, is_shattered, upper_bounds, vc_dimension, Graph, SearchConfig,
    VertexOrder, VertexSet,
};

fn small_graph() -> impl Strategy<Value = Graph> {
    (1usize..=10, 0.0f64..=1.0, any::<u64>()).prop_map(|(n, p, seed)| {
        gen_gnp(n, p, seed).expect("valid p")
    })
}

fn any_config() -> impl Strategy<Value = SearchConfig> {
    (0usize..4, any::<bool>(), any::<bool>(), any::<u64>()).prop_map(
        |(ord, ball, reduce, seed)| SearchConfig {
            ordering: match ord {
                0 => VertexOrder::DegDec,
                1 => VertexOrder::DegInc,
                2 => VertexOrder::KCore,
                _ => VertexOrder::Random(seed),
            },
            ball_restriction: ball,
            graph_reduction: reduce,
            ..SearchConfig::default()
        },
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn engine_matches_oracle(g in small_graph(), config in any_config()) {
        let want = brute_vcdim(&g).unwrap();
        prop_assert_eq!(compute_vcdim(&g, &config).unwrap().vcdim, want);
        let piped = vc_dimension(&g, &config).unwrap();
        prop_assert_eq!(piped.vcdim, want);
        prop_assert_eq!(piped.witness.len() as u32, want);
        prop_assert!(is_shattered(&g, &piped.witness).unwrap());
    }

    #[test]
    fn bounds_dominate_oracle(g in small_graph()) {
        let vc = brute_vcdim(&g).unwrap();
        let b = upper_bounds(&g).unwrap();
        prop_assert!(vc <= b.best);
        prop_assert!(vc <= brute_max_matching(&g).unwrap() + 1);
        if g.edge_count() > 0 {
            prop_assert!(vc <= 2 * greedy_maximal_matching(&g).len() as u32);
        }
    }

    #[test]
    fn heuristic_is_sound(g in small_graph(), maxvisits in 1u32..=128) {
        let vc = brute_vcdim(&g).unwrap();
        let r = heuristic_lower_bound(&g, maxvisits);
        prop_assert!(r.lb <= vc);
        prop_assert!(r.additions <= maxvisits as u64 * g.n() as u64);
        prop_assert_eq!(r.witness.len() as u32, r.lb);
        prop_assert!(is_shattered(&g, &r.witness).unwrap());
    }

    #[test]
    fn census_equals_enumeration(g in small_graph()) {
        let all = VertexSet::full(g.n());
        let off = count_shattered_sets(&g, &all, false, 0, None).unwrap();
        prop_assert_eq!(off.count, enumerate_shattered(&g, g.n(), u64::MAX).unwrap());
        let on = count_shattered_sets(&g, &all, true, off.vcdim, None).unwrap();
        prop_assert!(on.count <= off.count);
        prop_assert_eq!(on.vcdim, off.vcdim);
    }

    #[test]
    fn serialization_roundtrip(g in small_graph()) {
        let mut out = Vec::new();
        g.write_edge_list(&mut out).unwrap();
        let h = Graph::parse_edge_list(&out[..]).unwrap();
        prop_assert_eq!(h.n(), g.n());
        prop_assert_eq!(h.edge_count(), g.edge_count());
        // parsing renumbers by first appearance; labels recover the originals
        let mut edges: Vec<(u32, u32)> = h
            .edges()
            .map(|(u, v)| {
                let (a, b) = (h.label(u) as u32, h.label(v) as u32);
                if a < b { (a, b) } else { (b, a) }
            })
            .collect();
        edges.sort_unstable();
        prop_assert_eq!(edges, g.edges().collect::<Vec<_>>());
    }

    #[test]
    fn trusted_lower_bound_is_honored(g in small_graph()) {
        let vc = brute_vcdim(&g).unwrap();
        for lb in 0..=vc {
            let config = SearchConfig { initial_lb: lb, ..SearchConfig::default() };
            prop_assert_eq!(compute_vcdim(&g, &config).unwrap().vcdim, vc);
        }
    }
}
