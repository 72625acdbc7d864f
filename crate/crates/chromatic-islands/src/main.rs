//! Batch command-line front end. Every command prints one JSON document
//! (with a schema_version field) to stdout unless it exists to emit a
//! specific file format (DIMACS, SVG, solver output contract).

use anyhow::{bail, Context, Result};
use chromatic_islands::bounds::{self, BoundsLedger};
use chromatic_islands::colorsat::{self, CnfInstance, SolveStatus, INTERNAL_CAP};
use chromatic_islands::graphs::{
    attach_polychromatic, build_egraph, build_wgraph, max_clique, precolor_clique, BiPlacement,
    ColoringInstance, EGraphSpec, WGraphSpec,
};
use chromatic_islands::hunt::{frontier_text, hunt, HuntPlan, ProbeSpec};
use chromatic_islands::packing;
use chromatic_islands::store::ResultStore;
use chromatic_islands::tilings::{
    general_sublattice_distance, radial_optimum, radial_tiling_spec, regular_sublattice_distance,
    regular_sublattice_spec, sublattice_tiling_spec, verify_tiling_with_shell, TilingSpec,
};
use chromatic_islands::SCHEMA_VERSION;
use clap::{Args, Parser, Subcommand};
use serde_json::json;
use std::collections::HashMap;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Duration;

#[derive(Parser)]
#[command(
    name = "chi",
    about = "Bounds on the chromatic number of the plane \
with a forbidden distance interval [1, d]",
    version
)]
struct Cli {
    /// KEY=VALUE config file (solver, timeout_s, parallelism, store).
    /// Environment variables CHI_SOLVER, CHI_TIMEOUT_S, CHI_PARALLELISM
    /// and CHI_STORE override file values.
    #[arg(long, global = true)]
    config: Option<PathBuf>,
    /// Mirror SAT/UNSAT as process exit code 10/20 (solve commands only).
    #[arg(long, global = true)]
    exit_status: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand)]
enum Cmd {
    /// Finite graphs on the hexagonal lattice.
    Egraph {
        #[command(subcommand)]
        action: EgraphAction,
    },
    /// Finite graphs on concentric circles.
    Wgraph {
        #[command(subcommand)]
        action: WgraphAction,
    },
    /// Record search: shrink b at fixed a until SAT, then grow a.
    Hunt(HuntArgs),
    /// Plane and annulus colorings (lower bounds).
    Tiling {
        #[command(subcommand)]
        action: TilingAction,
    },
    /// Width-minimal point sets with pairwise distances >= 1.
    Pack {
        #[arg(long)]
        q: usize,
        #[arg(long, default_value_t = 64)]
        restarts: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Bound ledger: import, islands, extrapolation, plots.
    Ledger {
        /// Ledger JSONL file.
        #[arg(long, default_value = "ledger.jsonl")]
        file: PathBuf,
        #[command(subcommand)]
        action: LedgerAction,
    },
    /// Solve a DIMACS CNF file with the bundled backend, speaking the
    /// external-solver contract: s/v lines, exit 10 SAT / 20 UNSAT.
    SatSolve { file: PathBuf },
}

#[derive(Args, Clone)]
struct EgraphParams {
    #[arg(long)]
    m: i64,
    #[arg(long)]
    a: i64,
    #[arg(long)]
    b: i64,
    /// Attach the multiplicity-3 center vertex.
    #[arg(long)]
    tri: bool,
    /// Attach a multiplicity-2 vertex at squared lattice distance S2
    /// (defaults to the window top when given without a value).
    #[arg(long, num_args = 0..=1, default_missing_value = "-1")]
    bi_s2: Option<i64>,
    /// Alias for --bi-s2 without a value.
    #[arg(long)]
    bi: bool,
    /// Pre-color a maximum clique (found within a 2 s budget).
    #[arg(long)]
    clique: bool,
}

#[derive(Args, Clone)]
struct WgraphParams {
    #[arg(long)]
    p: usize,
    #[arg(long)]
    c: usize,
    #[arg(long)]
    d: f64,
    /// Comma-separated circle radii (default: evenly spaced in [1, d]).
    #[arg(long, value_delimiter = ',')]
    radii: Vec<f64>,
    /// Comma-separated angular offsets per circle, in degrees.
    #[arg(long, value_delimiter = ',')]
    offsets: Vec<f64>,
    #[arg(long)]
    tri: bool,
    /// Attach a multiplicity-2 vertex at distance S from the center.
    #[arg(long)]
    bi_s: Option<f64>,
    #[arg(long)]
    clique: bool,
}

#[derive(Args, Clone)]
struct SolveOpts {
    #[arg(long)]
    colors: usize,
    /// External solver command ("cmd arg ..."); the CNF path is appended.
    #[arg(long)]
    solver: Option<String>,
    #[arg(long)]
    timeout: Option<f64>,
    /// Force the internal exact colorer.
    #[arg(long)]
    internal: bool,
}

#[derive(Subcommand)]
enum EgraphAction {
    /// Emit the graph as JSON.
    Build(EgraphParams),
    /// Emit the K-coloring CNF in DIMACS format.
    Encode {
        #[command(flatten)]
        params: EgraphParams,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide K-colorability.
    Solve {
        #[command(flatten)]
        params: EgraphParams,
        #[command(flatten)]
        opts: SolveOpts,
    },
}

#[derive(Subcommand)]
enum WgraphAction {
    Build(WgraphParams),
    Encode {
        #[command(flatten)]
        params: WgraphParams,
        #[arg(long)]
        colors: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    Solve {
        #[command(flatten)]
        params: WgraphParams,
        #[command(flatten)]
        opts: SolveOpts,
    },
}

#[derive(Args)]
struct HuntArgs {
    #[arg(long)]
    colors: usize,
    #[arg(long)]
    m: i64,
    #[arg(long)]
    a: i64,
    #[arg(long)]
    b: i64,
    #[arg(long, default_value_t = 16)]
    max_probes: usize,
    #[arg(long)]
    store: Option<PathBuf>,
    #[arg(long)]
    solver: Option<String>,
    #[arg(long)]
    timeout: Option<f64>,
    #[arg(long)]
    internal: bool,
}

#[derive(Subcommand)]
enum TilingAction {
    /// Check a tiling spec JSON file: widths, gaps, coverage.
    Verify {
        spec: PathBuf,
        #[arg(long, default_value_t = 2)]
        shell: i64,
    },
    /// Best sublattice coloring with k colors.
    Sublattice {
        #[arg(long)]
        k: i64,
        /// Also search non-hexagonal sublattices and irregular tiles.
        #[arg(long)]
        irregular: bool,
        #[arg(long, default_value_t = 64)]
        restarts: usize,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Write the explicit tiling spec here.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Best annulus coloring with k colors and cyclic sectors.
    Radial {
        #[arg(long)]
        k: usize,
        #[arg(long, default_value_t = 36)]
        n_max: usize,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

#[derive(Subcommand)]
enum LedgerAction {
    /// Ingest bounds; --paper loads the bundled published records.
    Import {
        #[arg(long)]
        paper: bool,
    },
    /// Certainty intervals per chi.
    Islands,
    /// Fit d = intercept + slope * r over record points.
    Extrapolate {
        /// Use the bundled record rows for this color count,
        /// mapped to (r, d) = (1/sqrt(a), sqrt(b/a)).
        #[arg(long)]
        k: Option<u32>,
        /// CSV file of r,d points (no header).
        #[arg(long)]
        points: Option<PathBuf>,
        /// Fit only the lowest d per distinct r.
        #[arg(long)]
        envelope: bool,
    },
    /// Write an SVG: chi(d) islands or an extrapolation fit.
    Plot {
        #[arg(long, value_parser = ["islands", "fit"])]
        kind: String,
        #[arg(long)]
        k: Option<u32>,
        #[arg(long)]
        out: PathBuf,
    },
}

#[derive(Debug, Default, Clone)]
struct Config {
    solver: Option<String>,
    timeout_s: Option<f64>,
    parallelism: Option<usize>,
    store: Option<PathBuf>,
}

impl Config {
    fn load(path: Option<&PathBuf>) -> Result<Self> {
        let mut map = HashMap::new();
        if let Some(path) = path {
            let raw = fs::read_to_string(path)
                .with_context(|| format!("reading config {}", path.display()))?;
            for (i, line) in raw.lines().enumerate() {
                let line = line.trim();
                if line.is_empty() || line.starts_with('#') {
                    continue;
                }
                let (key, value) = line
                    .split_once('=')
                    .with_context(|| format!("{}:{}: expected KEY=VALUE", path.display(), i + 1))?;
                map.insert(key.trim().to_lowercase(), value.trim().to_string());
            }
        }
        for key in ["solver", "timeout_s", "parallelism", "store"] {
            if let Ok(v) = std::env::var(format!("CHI_{}", key.to_uppercase())) {
                map.insert(key.to_string(), v);
            }
        }
        let mut cfg = Config {
            solver: map.get("solver").cloned(),
            ..Default::default()
        };
        if let Some(t) = map.get("timeout_s") {
            cfg.timeout_s = Some(t.parse().context("timeout_s must be a number")?);
        }
        if let Some(p) = map.get("parallelism") {
            cfg.parallelism = Some(p.parse().context("parallelism must be an integer")?);
        }
        cfg.store = map.get("store").map(PathBuf::from);
        Ok(cfg)
    }
}

fn build_egraph_instance(params: &EgraphParams) -> Result<ColoringInstance> {
    let spec = EGraphSpec {
        m: params.m,
        a: params.a,
        b: params.b,
    };
    let mut g = build_egraph(&spec)?;
    let bi_s2 = match (params.bi, params.bi_s2) {
        (_, Some(-1)) | (true, None) => Some(params.b),
        (_, Some(s2)) => Some(s2),
        (false, None) => None,
    };
    if params.tri || bi_s2.is_some() {
        g = attach_polychromatic(&g, params.tri, bi_s2.map(BiPlacement::LatticeS2))?;
    }
    if params.clique {
        let found = max_clique(&g, Duration::from_secs(2));
        precolor_clique(&mut g, &found.vertices);
    }
    Ok(g)
}

fn build_wgraph_instance(params: &WgraphParams) -> Result<ColoringInstance> {
    let mut spec = WGraphSpec::new(params.p, params.c, params.d)?;
    if !params.radii.is_empty() {
        spec = spec.with_radii(params.radii.clone())?;
    }
    if !params.offsets.is_empty() {
        if params.offsets.len() != params.c {
            bail!("need one offset per circle");
        }
        spec.offsets = params.offsets.iter().map(|d| d.to_radians()).collect();
    }
    let mut g = build_wgraph(&spec)?;
    if params.tri || params.bi_s.is_some() {
        g = attach_polychromatic(&g, params.tri, params.bi_s.map(BiPlacement::CartesianS))?;
    }
    if params.clique {
        let found = max_clique(&g, Duration::from_secs(2));
        precolor_clique(&mut g, &found.vertices);
    }
    Ok(g)
}

fn solve_instance(
    g: &ColoringInstance,
    opts: &SolveOpts,
    cfg: &Config,
) -> Result<colorsat::SolveOutcome> {
    let timeout = Duration::from_secs_f64(opts.timeout.or(cfg.timeout_s).unwrap_or(300.0));
    let solver = if opts.internal {
        None
    } else {
        opts.solver.clone().or_else(|| cfg.solver.clone())
    };
    match solver {
        Some(cmd) => {
            let parts: Vec<String> = cmd.split_whitespace().map(String::from).collect();
            if parts.is_empty() {
                bail!("empty solver command");
            }
            Ok(colorsat::solve_external(g, opts.colors, &parts, timeout)?)
        }
        None => Ok(colorsat::exact_color(
            g,
            opts.colors,
            timeout,
            INTERNAL_CAP,
        )?),
    }
}

fn print_json(value: serde_json::Value) {
    println!(
        "{}",
        serde_json::to_string_pretty(&value).expect("json renders")
    );
}

fn solve_exit(outcome: &colorsat::SolveOutcome, mirror: bool) -> ExitCode {
    if !mirror {
        return ExitCode::SUCCESS;
    }
    match outcome.status {
        SolveStatus::Sat => ExitCode::from(10),
        SolveStatus::Unsat => ExitCode::from(20),
        SolveStatus::Unknown => ExitCode::SUCCESS,
    }
}

fn graph_json(g: &ColoringInstance) -> serde_json::Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "vertices": g.vertex_count(),
        "expanded_vertices": g.expanded_count(),
        "graph": g,
    })
}

fn emit_cnf(cnf: &CnfInstance, out: Option<&PathBuf>) -> Result<()> {
    let text = cnf.to_dimacs();
    match out {
        Some(path) => {
            fs::write(path, text).with_context(|| format!("writing {}", path.display()))?
        }
        None => print!("{text}"),
    }
    Ok(())
}

fn outcome_json(
    g: &ColoringInstance,
    colors: usize,
    outcome: &colorsat::SolveOutcome,
) -> serde_json::Value {
    json!({
        "schema_version": SCHEMA_VERSION,
        "colors": colors,
        "vertices": g.vertex_count(),
        "expanded_vertices": g.expanded_count(),
        "outcome": outcome,
    })
}

fn run(cli: Cli) -> Result<ExitCode> {
    let cfg = Config::load(cli.config.as_ref())?;
    if let Some(threads) = cfg.parallelism {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .ok();
    }
    match cli.cmd {
        Cmd::Egraph { action } => match action {
            EgraphAction::Build(params) => {
                print_json(graph_json(&build_egraph_instance(&params)?));
            }
            EgraphAction::Encode {
                params,
                colors,
                out,
            } => {
                let g = build_egraph_instance(&params)?;
                emit_cnf(&colorsat::encode(&g, colors)?, out.as_ref())?;
            }
            EgraphAction::Solve { params, opts } => {
                let g = build_egraph_instance(&params)?;
                let outcome = solve_instance(&g, &opts, &cfg)?;
                print_json(outcome_json(&g, opts.colors, &outcome));
                return Ok(solve_exit(&outcome, cli.exit_status));
            }
        },
        Cmd::Wgraph { action } => match action {
            WgraphAction::Build(params) => {
                print_json(graph_json(&build_wgraph_instance(&params)?));
            }
            WgraphAction::Encode {
                params,
                colors,
                out,
            } => {
                let g = build_wgraph_instance(&params)?;
                emit_cnf(&colorsat::encode(&g, colors)?, out.as_ref())?;
            }
            WgraphAction::Solve { params, opts } => {
                let g = build_wgraph_instance(&params)?;
                let outcome = solve_instance(&g, &opts, &cfg)?;
                print_json(outcome_json(&g, opts.colors, &outcome));
                return Ok(solve_exit(&outcome, cli.exit_status));
            }
        },
        Cmd::Hunt(args) => {
            let store_path = args
                .store
                .clone()
                .or_else(|| cfg.store.clone())
                .unwrap_or_else(|| PathBuf::from("hunt-store.jsonl"));
            let mut store = ResultStore::open(&store_path)?;
            let plan = HuntPlan {
                colors: args.colors,
                m: args.m,
                seed_a: args.a,
                seed_b: args.b,
                max_probes: args.max_probes,
                tri: true,
                bi: false,
            };
            let opts = SolveOpts {
                colors: args.colors,
                solver: args.solver.clone(),
                timeout: args.timeout,
                internal: args.internal,
            };
            let report = hunt(&plan, &mut store, |probe: &ProbeSpec| {
                let params = EgraphParams {
                    m: probe.m,
                    a: probe.a,
                    b: probe.b,
                    tri: probe.tri,
                    bi_s2: None,
                    bi: probe.bi,
                    clique: true,
                };
                let g = match build_egraph_instance(&params) {
                    Ok(g) => g,
                    Err(_) => {
                        return (
                            colorsat::SolveOutcome {
                                status: SolveStatus::Unknown,
                                model: None,
                                wall_time: 0.0,
                            },
                            0,
                        )
                    }
                };
                let q = g.precolored.len();
                let outcome = solve_instance(&g, &opts, &cfg).unwrap_or(colorsat::SolveOutcome {
                    status: SolveStatus::Unknown,
                    model: None,
                    wall_time: 0.0,
                });
                (outcome, q)
            })?;
            eprint!("{}", frontier_text(&report.frontier));
            print_json(json!({
                "schema_version": SCHEMA_VERSION,
                "report": report,
                "store": store_path,
            }));
        }
        Cmd::Tiling { action } => match action {
            TilingAction::Verify { spec, shell } => {
                let raw = fs::read_to_string(&spec)
                    .with_context(|| format!("reading {}", spec.display()))?;
                let spec: TilingSpec = serde_json::from_str(&raw).context("parsing tiling spec")?;
                let report = verify_tiling_with_shell(&spec, shell)?;
                print_json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "report": report,
                }));
            }
            TilingAction::Sublattice {
                k,
                irregular,
                restarts,
                seed,
                out,
            } => {
                let regular = regular_sublattice_distance(k).ok();
                let (d, spec_json) = if irregular {
                    let (d_gen, coloring) = general_sublattice_distance(k, restarts, seed);
                    let spec = sublattice_tiling_spec(&coloring);
                    match regular {
                        Some(r) if r >= d_gen => {
                            (r, serde_json::to_value(regular_sublattice_spec(k)?)?)
                        }
                        _ => (d_gen, serde_json::to_value(&spec)?),
                    }
                } else {
                    let r = regular_sublattice_distance(k)?;
                    (r, serde_json::to_value(regular_sublattice_spec(k)?)?)
                };
                if let Some(path) = &out {
                    fs::write(path, serde_json::to_string_pretty(&spec_json)?)?;
                }
                print_json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "k": k,
                    "d": d,
                    "regular": regular,
                }));
            }
            TilingAction::Radial { k, n_max, out } => {
                let (d, rc) = radial_optimum(k, n_max);
                if let Some(path) = &out {
                    let spec = radial_tiling_spec(&rc)?;
                    fs::write(path, serde_json::to_string_pretty(&spec)?)?;
                }
                print_json(json!({
                    "schema_version": SCHEMA_VERSION,
                    "k": k,
                    "d": d,
                    "sectors": rc.n,
                }));
            }
        },
        Cmd::Pack { q, restarts, seed } => {
            let result = packing::pack(q, restarts, seed);
            print_json(json!({
                "schema_version": SCHEMA_VERSION,
                "result": result,
                "chi_bound": packing::clique_chi_bound(q),
            }));
        }
        Cmd::Ledger { file, action } => {
            let mut ledger = if file.exists() {
                BoundsLedger::from_jsonl(&fs::read_to_string(&file)?)?
            } else {
                BoundsLedger::new()
            };
            match action {
                LedgerAction::Import { paper } => {
                    if !paper {
                        bail!("only --paper import is supported");
                    }
                    let added = ledger.import_published();
                    fs::write(&file, ledger.to_jsonl())?;
                    print_json(json!({
                        "schema_version": SCHEMA_VERSION,
                        "added": added,
                        "entries": ledger.entries().len(),
                        "flags": ledger.monotonicity_flags(),
                    }));
                }
                LedgerAction::Islands => {
                    let records = ledger.records();
                    let islands = bounds::compute_islands(&records);
                    eprint!("{}", bounds::summary_text(&records));
                    print_json(json!({
                        "schema_version": SCHEMA_VERSION,
                        "islands": islands,
                    }));
                }
                LedgerAction::Extrapolate {
                    k,
                    points,
                    envelope,
                } => {
                    let mut pts = gather_fit_points(k, points.as_ref())?;
                    if envelope {
                        pts = bounds::lower_envelope(&pts);
                    }
                    let fit = bounds::extrapolate(&pts)?;
                    print_json(json!({
                        "schema_version": SCHEMA_VERSION,
                        "fit": fit,
                    }));
                }
                LedgerAction::Plot { kind, k, out } => {
                    let svg = match kind.as_str() {
                        "islands" => bounds::islands_svg(&ledger.records()),
                        _ => {
                            let pts = gather_fit_points(k, None)?;
                            bounds::fit_svg(&bounds::extrapolate(&pts)?)
                        }
                    };
                    fs::write(&out, svg)?;
                    print_json(json!({
                        "schema_version": SCHEMA_VERSION,
                        "wrote": out,
                    }));
                }
            }
        }
        Cmd::SatSolve { file } => {
            use splr::SolveIF;
            let raw =
                fs::read_to_string(&file).with_context(|| format!("reading {}", file.display()))?;
            let cnf = CnfInstance::from_dimacs(&raw)?;
            let solved =
                match splr::Solver::try_from((splr::Config::default(), cnf.clauses.as_slice())) {
                    Ok(mut solver) => solver.solve().ok(),
                    // trivial formulas are settled while loading
                    Err(Ok(cert)) => Some(cert),
                    Err(Err(_)) => None,
                };
            match solved {
                Some(splr::Certificate::SAT(model)) => {
                    println!("s SATISFIABLE");
                    let lits: Vec<String> = model.iter().map(|l| l.to_string()).collect();
                    println!("v {} 0", lits.join(" "));
                    return Ok(ExitCode::from(10));
                }
                Some(splr::Certificate::UNSAT) => {
                    println!("s UNSATISFIABLE");
                    return Ok(ExitCode::from(20));
                }
                None => println!("s UNKNOWN"),
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

/// (r, d) points for extrapolation: the bundled record rows of one color
/// count mapped to (1/sqrt(a), sqrt(b/a)), or a CSV file of r,d pairs.
fn gather_fit_points(k: Option<u32>, file: Option<&PathBuf>) -> Result<Vec<(f64, f64)>> {
    if let Some(path) = file {
        let raw =
            fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
        let mut pts = Vec::new();
        for (i, line) in raw.lines().enumerate() {
            if line.trim().is_empty() {
                continue;
            }
            let (r, d) = line
                .split_once(',')
                .with_context(|| format!("{}:{}: expected r,d", path.display(), i + 1))?;
            pts.push((
                r.trim()
                    .parse()
                    .with_context(|| format!("{}:{}: bad r", path.display(), i + 1))?,
                d.trim()
                    .parse()
                    .with_context(|| format!("{}:{}: bad d", path.display(), i + 1))?,
            ));
        }
        return Ok(pts);
    }
    let k = k.context("need --k or --points")?;
    let pts: Vec<(f64, f64)> = chromatic_islands::data::egraph_records()
        .iter()
        .filter(|row| row.k == k)
        .map(|row| {
            (
                (1.0 / row.a as f64).sqrt(),
                (row.b as f64 / row.a as f64).sqrt(),
            )
        })
        .collect();
    if pts.is_empty() {
        bail!("no bundled record rows for k={k}");
    }
    Ok(pts)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            ExitCode::FAILURE
        }
    }
}
