//! Cheap upper bounds on the VC-dimension, and the degree filter they
//! justify: only vertices of closed degree >= 2^lb can sit in a shattered
//! set larger than lb, so a good lower bound shrinks the search space
//! before any search runs.

use vcdim::{degree_filter, heuristic_lower_bound, upper_bounds, Graph};

fn main() {
    let graphs: Vec<(&str, Graph)> = vec![
        ("star K_{1,3}", Graph::star(3)),
        ("cycle C_8", Graph::cycle(8)),
        ("complete K_16", Graph::complete(16)),
        ("grid 5x5", vcdim::grid(5)),
    ];
    for (name, g) in &graphs {
        println!("== {name} ==");
        println!("{}", upper_bounds(g).unwrap());
        let lb = heuristic_lower_bound(g, 64).lb;
        let h = degree_filter(g, lb);
        println!(
            "heuristic lb = {lb}; candidates with closed degree >= 2^lb: {} of {}\n",
            h.len(),
            g.n()
        );
    }
}
