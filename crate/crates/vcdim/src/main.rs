//! Command-line front end for the VC-dimension engine.
//!
//! Exit codes: 0 success, 1 usage error, 2 input error, 3 refusal
//! (a hard size cap or work budget was hit).

use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::{Path, PathBuf};

use clap::error::ErrorKind;
use clap::{Args, Parser, Subcommand, ValueEnum};

use vcdim::hardness::{HardnessError, Role};
use vcdim::{
    brute_max_matching, brute_vcdim, build_hardness_graph, degree_filter, enumerate_shattered,
    gen_gnp, gen_grid_perturbed, gen_powerlaw, heuristic_lower_bound, is_shattered, reduce_graph,
    run_sweep, upper_bounds, vc_dimension, Graph, SearchConfig, SweepModel, SweepRequest, Vertex,
    VertexOrder, VertexSet,
};

#[derive(Parser)]
#[command(
    name = "vcdim",
    version,
    about = "Exact VC-dimension of a graph's closed-neighborhood set system"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Compute the VC-dimension exactly
    Compute(ComputeArgs),
    /// Print upper bounds (logarithmic, degree, degeneracy, matching)
    Bounds(BoundsArgs),
    /// Run only the budgeted greedy lower bound
    Lowerbound(LowerboundArgs),
    /// Emit a seeded random graph as edge-list text
    Generate(GenerateArgs),
    /// Contract trace-equivalent vertices and emit the reduced graph
    Reduce(ReduceArgs),
    /// Build the split graph whose VC-dimension encodes k-clique
    Hardness(HardnessArgs),
    /// Brute-force reference checks (small graphs only)
    Oracle(OracleArgs),
    /// VC-dimension across a parameter grid of random graphs
    Sweep(SweepArgs),
}

#[derive(Clone, Copy, ValueEnum)]
enum OrderArg {
    DegDec,
    DegInc,
    Kcore,
    Random,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Csv,
}

#[derive(Args)]
struct ComputeArgs {
    /// Edge-list file; stdin if omitted or "-"
    graph: Option<PathBuf>,
    /// Vertex processing order
    #[arg(long, value_enum, default_value_t = OrderArg::Kcore)]
    order: OrderArg,
    /// Restrict each top-level branch to the 2-ball of its start (default)
    #[arg(long, overrides_with = "no_ball")]
    ball: bool,
    /// Disable the 2-ball restriction
    #[arg(long, overrides_with = "ball")]
    no_ball: bool,
    /// Contract trace-equivalent vertices before searching (default)
    #[arg(long, overrides_with = "no_reduce")]
    reduce: bool,
    /// Disable the trace-equivalence reduction
    #[arg(long, overrides_with = "reduce")]
    no_reduce: bool,
    /// Trusted lower bound to seed the search; if it exceeds the true
    /// value the result is undefined
    #[arg(long, default_value_t = 0)]
    lb: u32,
    /// Seed for --order random
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Per-vertex visit budget for the lower-bound pass
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    maxvisits: u32,
    /// Print search statistics as key=value lines
    #[arg(long)]
    stats: bool,
    /// Print a maximum shattered set (original vertex labels)
    #[arg(long)]
    witness: bool,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct BoundsArgs {
    /// Edge-list file; stdin if omitted or "-"
    graph: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
}

#[derive(Args)]
struct LowerboundArgs {
    /// Edge-list file; stdin if omitted or "-"
    graph: Option<PathBuf>,
    /// Per-vertex visit budget
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    maxvisits: u32,
    /// Print the witness set (original vertex labels)
    #[arg(long)]
    witness: bool,
}

#[derive(Args)]
struct GenerateArgs {
    #[command(subcommand)]
    model: GenModel,
}

#[derive(Subcommand)]
enum GenModel {
    /// Uniform random graph: each edge present with probability p
    Gnp {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout if omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Configuration-model graph with power-law degree distribution
    Powerlaw {
        #[arg(long)]
        n: usize,
        /// Degree exponent; must exceed 1
        #[arg(long)]
        beta: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout if omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Square grid with a fraction of its edges deleted
    Grid {
        #[arg(long)]
        side: usize,
        #[arg(long, default_value_t = 0.0)]
        delete_fraction: f64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Output file (stdout if omitted)
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
struct ReduceArgs {
    /// Edge-list file; stdin if omitted or "-"
    graph: Option<PathBuf>,
    /// Lower bound defining the protected vertex set (closed degree >= 2^lb)
    #[arg(long, default_value_t = 0)]
    lb: u32,
    /// Write "reduced_id original_label" lines to this file
    #[arg(long)]
    map: Option<PathBuf>,
    /// Output file (stdout if omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct HardnessArgs {
    /// Edge-list file; stdin if omitted or "-"
    graph: Option<PathBuf>,
    /// Clique size to encode
    #[arg(short, long)]
    k: usize,
    /// Write one JSON object per host vertex describing its role
    #[arg(long)]
    roles: Option<PathBuf>,
    /// Output file (stdout if omitted)
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
#[command(group = clap::ArgGroup::new("check").required(true).multiple(true).args(["vcdim", "matching", "census", "shattered"]))]
struct OracleArgs {
    /// Edge-list file; stdin if omitted or "-"
    graph: Option<PathBuf>,
    /// Exhaustive VC-dimension (n <= 20)
    #[arg(long)]
    vcdim: bool,
    /// Exact maximum matching size (n <= 20 or m <= 32)
    #[arg(long)]
    matching: bool,
    /// Count non-empty shattered sets up to this size
    #[arg(long, value_name = "MAX_SIZE")]
    census: Option<usize>,
    /// Candidate budget for --census
    #[arg(long, default_value_t = 100_000_000)]
    budget: u64,
    /// Check whether these vertices (dense ids, comma-separated) are shattered
    #[arg(long, value_name = "IDS", value_delimiter = ',')]
    shattered: Option<Vec<Vertex>>,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Gnp,
    Powerlaw,
}

#[derive(Args)]
struct SweepArgs {
    /// Random-graph model
    #[arg(long, value_enum)]
    model: ModelArg,
    /// Vertices per sample
    #[arg(long)]
    n: usize,
    /// Parameter points: edge probabilities (gnp) or exponents (powerlaw)
    #[arg(long, value_delimiter = ',', required = true)]
    params: Vec<f64>,
    /// Samples per parameter point; sample s uses seed SEED+s
    #[arg(long, default_value_t = 20)]
    samples: usize,
    /// Base seed
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Worker threads (default: RAYON_NUM_THREADS or all cores)
    #[arg(long)]
    threads: Option<usize>,
    /// Per-vertex visit budget for the lower-bound pass
    #[arg(long, default_value_t = 64, value_parser = clap::value_parser!(u32).range(1..))]
    maxvisits: u32,
}

#[derive(Debug)]
enum AppError {
    /// Bad or unreadable input: exit 2.
    Input(String),
    /// A hard cap or budget refused the request: exit 3.
    Refusal(String),
}

impl AppError {
    fn exit_code(&self) -> i32 {
        match self {
            AppError::Input(_) => 2,
            AppError::Refusal(_) => 3,
        }
    }
}

impl std::fmt::Display for AppError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            AppError::Input(msg) | AppError::Refusal(msg) => f.write_str(msg),
        }
    }
}

impl From<io::Error> for AppError {
    fn from(e: io::Error) -> Self {
        AppError::Input(e.to_string())
    }
}

fn input<E: std::fmt::Display>(e: E) -> AppError {
    AppError::Input(e.to_string())
}

fn refuse<E: std::fmt::Display>(e: E) -> AppError {
    AppError::Refusal(e.to_string())
}

fn read_graph(path: Option<&Path>) -> Result<(Graph, String), AppError> {
    match path {
        Some(p) if p.as_os_str() != "-" => {
            let file =
                File::open(p).map_err(|e| input(format_args!("{}: {e}", p.display())))?;
            let g = Graph::parse_edge_list(BufReader::new(file))
                .map_err(|e| input(format_args!("{}: {e}", p.display())))?;
            Ok((g, p.display().to_string()))
        }
        _ => {
            let g = Graph::parse_edge_list(io::stdin().lock())
                .map_err(|e| input(format_args!("stdin: {e}")))?;
            Ok((g, "stdin".to_string()))
        }
    }
}

fn out_writer(path: Option<&Path>) -> Result<Box<dyn Write>, AppError> {
    match path {
        Some(p) => {
            let f = File::create(p).map_err(|e| input(format_args!("{}: {e}", p.display())))?;
            Ok(Box::new(BufWriter::new(f)))
        }
        None => Ok(Box::new(BufWriter::new(io::stdout()))),
    }
}

fn label_list(g: &Graph, set: &VertexSet) -> String {
    set.iter().map(|v| g.label(v).to_string()).collect::<Vec<_>>().join(",")
}

fn cmd_compute(a: ComputeArgs) -> Result<(), AppError> {
    let (g, name) = read_graph(a.graph.as_deref())?;
    let ordering = match a.order {
        OrderArg::DegDec => VertexOrder::DegDec,
        OrderArg::DegInc => VertexOrder::DegInc,
        OrderArg::Kcore => VertexOrder::KCore,
        OrderArg::Random => VertexOrder::Random(a.seed),
    };
    let config = SearchConfig {
        ordering,
        ball_restriction: !a.no_ball,
        graph_reduction: !a.no_reduce,
        initial_lb: a.lb,
        collect_stats: a.stats || matches!(a.format, Format::Csv),
        prune: true,
        maxvisits: a.maxvisits,
    };
    let result = vc_dimension(&g, &config).map_err(input)?;
    let s = &result.stats;
    match a.format {
        Format::Text => {
            println!("vcdim={}", result.vcdim);
            if a.witness {
                println!("witness={}", label_list(&g, &result.witness));
            }
            if a.stats {
                println!("n={}", g.n());
                println!("m={}", g.edge_count());
                println!("lb0={}", s.initial_lb);
                println!("h_size={}", s.h_size);
                println!("visited={}", s.visited_shattered);
                println!("tentative={}", s.tentative);
                println!("bsize={:.2}", s.avg_ball_size.unwrap_or(0.0));
                if let Some(est) = s.tentative_estimate() {
                    println!("tentative_estimate={est:.1}");
                }
                println!("elapsed_ms={}", s.elapsed.as_millis());
            }
        }
        Format::Csv => {
            println!("# vcdim-compute-csv-v1");
            println!("graph,n,m,vcdim,lb0,h_size,visited,tentative,bsize,elapsed_ms");
            println!(
                "{},{},{},{},{},{},{},{},{:.2},{}",
                name,
                g.n(),
                g.edge_count(),
                result.vcdim,
                s.initial_lb,
                s.h_size,
                s.visited_shattered,
                s.tentative,
                s.avg_ball_size.unwrap_or(0.0),
                s.elapsed.as_millis()
            );
        }
    }
    Ok(())
}

fn cmd_bounds(a: BoundsArgs) -> Result<(), AppError> {
    let (g, name) = read_graph(a.graph.as_deref())?;
    let r = upper_bounds(&g).map_err(input)?;
    match a.format {
        Format::Text => println!("{r}"),
        Format::Csv => {
            println!("# vcdim-bounds-csv-v1");
            println!("graph,n,m,log_n,log_maxdeg_plus1,degeneracy_plus1,matching_2m,best");
            let matching = r.matching_2m.map(|b| b.to_string()).unwrap_or_default();
            println!(
                "{},{},{},{},{},{},{},{}",
                name, r.n, r.m, r.log_n, r.log_maxdeg_plus1, r.degeneracy_plus1, matching, r.best
            );
        }
    }
    Ok(())
}

fn cmd_lowerbound(a: LowerboundArgs) -> Result<(), AppError> {
    let (g, _) = read_graph(a.graph.as_deref())?;
    let r = heuristic_lower_bound(&g, a.maxvisits);
    println!("lb={}", r.lb);
    println!("additions={}", r.additions);
    if a.witness {
        println!("witness={}", label_list(&g, &r.witness));
    }
    Ok(())
}

fn cmd_generate(a: GenerateArgs) -> Result<(), AppError> {
    let (g, header, output) = match a.model {
        GenModel::Gnp { n, p, seed, output } => (
            gen_gnp(n, p, seed).map_err(input)?,
            format!("# gnp n={n} p={p} seed={seed}"),
            output,
        ),
        GenModel::Powerlaw { n, beta, seed, output } => (
            gen_powerlaw(n, beta, seed).map_err(input)?,
            format!("# powerlaw n={n} beta={beta} seed={seed}"),
            output,
        ),
        GenModel::Grid { side, delete_fraction, seed, output } => (
            gen_grid_perturbed(side, delete_fraction, seed).map_err(input)?,
            format!("# grid side={side} delete_fraction={delete_fraction} seed={seed}"),
            output,
        ),
    };
    let mut w = out_writer(output.as_deref())?;
    writeln!(w, "{header}")?;
    g.write_edge_list(&mut w)?;
    w.flush()?;
    Ok(())
}

fn cmd_reduce(a: ReduceArgs) -> Result<(), AppError> {
    let (g, _) = read_graph(a.graph.as_deref())?;
    let h = degree_filter(&g, a.lb);
    let r = reduce_graph(&g, &h);
    let mut w = out_writer(a.output.as_deref())?;
    writeln!(
        w,
        "# reduced n={} m={} (from n={} m={}) lb={}",
        r.graph.n(),
        r.graph.edge_count(),
        g.n(),
        g.edge_count(),
        a.lb
    )?;
    r.graph.write_edge_list(&mut w)?;
    w.flush()?;
    if let Some(path) = &a.map {
        let f = File::create(path).map_err(|e| input(format_args!("{}: {e}", path.display())))?;
        let mut mw = BufWriter::new(f);
        for new_id in 0..r.graph.n() as Vertex {
            writeln!(mw, "{} {}", new_id, g.label(r.map.to_old(new_id)))?;
        }
        mw.flush()?;
    }
    Ok(())
}

fn cmd_hardness(a: HardnessArgs) -> Result<(), AppError> {
    let (g, _) = read_graph(a.graph.as_deref())?;
    let inst = build_hardness_graph(&g, a.k).map_err(|e| match e {
        HardnessError::KExceedsN { .. } => input(e),
        _ => refuse(e),
    })?;
    let mut w = out_writer(a.output.as_deref())?;
    writeln!(w, "# hardness k={} host_n={} host_m={}", inst.k, inst.host.n(), inst.host.edge_count())?;
    inst.host.write_edge_list(&mut w)?;
    w.flush()?;
    if let Some(path) = &a.roles {
        let f = File::create(path).map_err(|e| input(format_args!("{}: {e}", path.display())))?;
        let mut rw = BufWriter::new(f);
        for (id, role) in inst.roles.iter().enumerate() {
            let line = match role {
                Role::Element { v, i } => {
                    serde_json::json!({"id": id, "role": "element", "v": v, "i": i})
                }
                Role::Range { members } => {
                    serde_json::json!({"id": id, "role": "range", "members": members})
                }
            };
            writeln!(rw, "{line}")?;
        }
        rw.flush()?;
    }
    Ok(())
}

fn cmd_oracle(a: OracleArgs) -> Result<(), AppError> {
    let (g, _) = read_graph(a.graph.as_deref())?;
    if a.vcdim {
        println!("vcdim={}", brute_vcdim(&g).map_err(refuse)?);
    }
    if a.matching {
        println!("matching={}", brute_max_matching(&g).map_err(refuse)?);
    }
    if let Some(max_size) = a.census {
        println!("census={}", enumerate_shattered(&g, max_size, a.budget).map_err(refuse)?);
    }
    if let Some(ids) = &a.shattered {
        if let Some(&bad) = ids.iter().find(|&&v| v as usize >= g.n()) {
            return Err(input(format_args!(
                "vertex {bad} out of range for a graph with {} vertices",
                g.n()
            )));
        }
        let set = VertexSet::from_members(g.n(), ids.iter().copied());
        println!("shattered={}", is_shattered(&g, &set).map_err(refuse)?);
    }
    Ok(())
}

fn cmd_sweep(a: SweepArgs) -> Result<(), AppError> {
    if let Some(t) = a.threads {
        rayon::ThreadPoolBuilder::new().num_threads(t).build_global().ok();
    }
    let req = SweepRequest {
        model: match a.model {
            ModelArg::Gnp => SweepModel::Gnp,
            ModelArg::Powerlaw => SweepModel::PowerLaw,
        },
        n: a.n,
        params: a.params.clone(),
        samples: a.samples,
        base_seed: a.seed,
        config: SearchConfig { maxvisits: a.maxvisits, ..SearchConfig::default() },
    };
    let (rows, summaries) = run_sweep(&req).map_err(input)?;
    let stdout = io::stdout();
    let mut w = BufWriter::new(stdout.lock());
    writeln!(w, "# vcdim-sweep-csv-v1")?;
    writeln!(w, "model,n,param,seed,vcdim,elapsed_ms")?;
    for (p, summary) in summaries.iter().enumerate() {
        for r in &rows[p * a.samples..(p + 1) * a.samples] {
            writeln!(w, "{},{},{},{},{},{}", r.model, r.n, r.param, r.seed, r.vcdim, r.elapsed_ms)?;
        }
        writeln!(
            w,
            "{},{},{},mean,{:.2},{:.2}",
            summary.model, summary.n, summary.param, summary.mean_vcdim, summary.mean_elapsed_ms
        )?;
    }
    w.flush()?;
    Ok(())
}

fn run(cli: Cli) -> Result<(), AppError> {
    match cli.cmd {
        Cmd::Compute(a) => cmd_compute(a),
        Cmd::Bounds(a) => cmd_bounds(a),
        Cmd::Lowerbound(a) => cmd_lowerbound(a),
        Cmd::Generate(a) => cmd_generate(a),
        Cmd::Reduce(a) => cmd_reduce(a),
        Cmd::Hardness(a) => cmd_hardness(a),
        Cmd::Oracle(a) => cmd_oracle(a),
        Cmd::Sweep(a) => cmd_sweep(a),
    }
}

fn main() {
    // die quietly when the reader closes the pipe (e.g. `vcdim ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => 0,
                _ => 1,
            };
            let _ = e.print();
            std::process::exit(code);
        }
    };
    if let Err(e) = run(cli) {
        eprintln!("error: {e}");
        std::process::exit(e.exit_code());
    }
}
