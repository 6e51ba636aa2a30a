//! The budgeted greedy probe: how the visit budget trades work for bound
//! quality. Every reported value is a true lower bound; larger budgets can
//! only help.

use vcdim::{gen_gnp, heuristic_lower_bound, vc_dimension, SearchConfig};

fn main() {
    let g = gen_gnp(400, 0.05, 11).unwrap();
    println!("G(400, 0.05), m = {}", g.edge_count());

    for maxvisits in [1, 4, 16, 64, 256] {
        let lb = heuristic_lower_bound(&g, maxvisits);
        println!(
            "maxvisits = {maxvisits:>3}: lb = {}, additions = {} (cap {})",
            lb.lb,
            lb.additions,
            maxvisits as u64 * g.n() as u64
        );
    }

    let exact = vc_dimension(&g, &SearchConfig::default()).unwrap();
    println!("exact vcdim = {}", exact.vcdim);
}
