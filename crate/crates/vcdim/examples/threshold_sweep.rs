//! Sweep the VC-dimension of G(n,p) across the p = n^{-0.55} threshold.
//! Below it the mean stays near 3; above it the mean climbs. Samples are
//! paired across parameter points (sample s always uses seed base+s).

use vcdim::{run_sweep, SearchConfig, SweepModel, SweepRequest};

fn main() {
    let n = 100usize;
    let pivot = (n as f64).powf(-0.55);
    let req = SweepRequest {
        model: SweepModel::Gnp,
        n,
        params: vec![0.25 * pivot, 0.5 * pivot, pivot, 2.0 * pivot, 4.0 * pivot],
        samples: 10,
        base_seed: 1,
        config: SearchConfig::default(),
    };
    let (_, summaries) = run_sweep(&req).unwrap();
    println!("G({n}, p) with pivot p0 = n^-0.55 = {pivot:.4}");
    for s in summaries {
        println!(
            "p = {:.4} ({}x pivot): mean vcdim = {:.2}",
            s.param,
            s.param / pivot,
            s.mean_vcdim
        );
    }
}
