//! Experiment runner: VC-dimension of random graphs across a parameter
//! grid, with paired seeds across parameter points so comparisons see the
//! same random stream. Samples run in parallel (one engine instance
//! each); the output order is fixed regardless of scheduling.

use rayon::prelude::*;
use thiserror::Error;

use crate::engine::{vc_dimension, SearchConfig};
use crate::generators::{gen_gnp, gen_powerlaw, GenError};
use crate::graph::Graph;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SweepModel {
    Gnp,
    PowerLaw,
}

impl SweepModel {
    pub fn name(self) -> &'static str {
        match self {
            SweepModel::Gnp => "gnp",
            SweepModel::PowerLaw => "powerlaw",
        }
    }
}

#[derive(Debug, Clone)]
pub struct SweepRequest {
    pub model: SweepModel,
    pub n: usize,
    /// Edge probabilities (gnp) or exponents (powerlaw).
    pub params: Vec<f64>,
    /// Samples per parameter point; sample s uses seed `base_seed + s`
    /// at every point.
    pub samples: usize,
    pub base_seed: u64,
    pub config: SearchConfig,
}

#[derive(Debug, Error)]
pub enum SweepError {
    #[error(transparent)]
    Gen(#[from] GenError),
    #[error("sweep requires n >= 1")]
    EmptyGraphs,
    #[error("sweep requires at least one sample")]
    NoSamples,
}

/// One computed sample.
#[derive(Debug, Clone)]
pub struct SweepRow {
    pub model: &'static str,
    pub n: usize,
    pub param: f64,
    pub seed: u64,
    pub vcdim: u32,
    pub elapsed_ms: u128,
}

/// Per-parameter-point aggregate.
#[derive(Debug, Clone)]
pub struct SweepSummary {
    pub model: &'static str,
    pub n: usize,
    pub param: f64,
    pub samples: usize,
    pub mean_vcdim: f64,
    pub mean_elapsed_ms: f64,
}

fn generate(model: SweepModel, n: usize, param: f64, seed: u64) -> Result<Graph, GenError> {
    match model {
        SweepModel::Gnp => gen_gnp(n, param, seed),
        SweepModel::PowerLaw => gen_powerlaw(n, param, seed),
    }
}

/// Runs the whole grid and returns (rows in grid order, one summary per
/// parameter point). Deterministic given the request, up to timings.
pub fn run_sweep(req: &SweepRequest) -> Result<(Vec<SweepRow>, Vec<SweepSummary>), SweepError> {
    if req.n == 0 {
        return Err(SweepError::EmptyGraphs);
    }
    if req.samples == 0 {
        return Err(SweepError::NoSamples);
    }
    // validate every parameter up front so workers cannot fail
    for &param in &req.params {
        generate(req.model, 1.min(req.n), param, 0)?;
    }
    let jobs: Vec<(usize, usize)> = (0..req.params.len())
        .flat_map(|p| (0..req.samples).map(move |s| (p, s)))
        .collect();
    let mut rows: Vec<(usize, usize, SweepRow)> = jobs
        .par_iter()
        .map(|&(p, s)| {
            let param = req.params[p];
            let seed = req.base_seed + s as u64;
            let g = generate(req.model, req.n, param, seed).expect("params validated");
            let t0 = std::time::Instant::now();
            let vcdim = vc_dimension(&g, &req.config).expect("n >= 1").vcdim;
            let row = SweepRow {
                model: req.model.name(),
                n: req.n,
                param,
                seed,
                vcdim,
                elapsed_ms: t0.elapsed().as_millis(),
            };
            (p, s, row)
        })
        .collect();
    rows.sort_by_key(|&(p, s, _)| (p, s));
    let rows: Vec<SweepRow> = rows.into_iter().map(|(_, _, r)| r).collect();

    let summaries = req
        .params
        .iter()
        .enumerate()
        .map(|(p, &param)| {
            let chunk = &rows[p * req.samples..(p + 1) * req.samples];
            SweepSummary {
                model: req.model.name(),
                n: req.n,
                param,
                samples: req.samples,
                mean_vcdim: chunk.iter().map(|r| r.vcdim as f64).sum::<f64>()
                    / req.samples as f64,
                mean_elapsed_ms: chunk.iter().map(|r| r.elapsed_ms as f64).sum::<f64>()
                    / req.samples as f64,
            }
        })
        .collect();
    Ok((rows, summaries))
}
