//! Command-line interface.

use std::io::{Read, Write};
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand, ValueEnum};
use congestion_core::bounds::{bounds_report, SpectralSummary};
use congestion_core::contraction::{
    congestion, hsc, hybrid_sc_equipartition, oracle_optimal_tree, recursive_equipartition,
    ContractionTree, ORACLE_DEFAULT_LIMIT,
};
use congestion_core::generators::{Family, GenSpec};
use congestion_core::Graph;

use crate::error::{LabError, LabResult};
use crate::experiment::{
    fmt_digits, parse_float_list, parse_int_list, parse_terminals, run_sweep, summarize, write_csv,
    FamilyKind, RunConfig, Sweep, CONNECT_ATTEMPTS,
};
use crate::format::{parse_edge_list, parse_tree_for, serialize_edge_list, serialize_tree};

#[derive(Debug, Parser)]
#[command(
    name = "congestion-lab",
    version,
    about = "Spectral bounds and contraction trees for graph congestion"
)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Print Laplacian and normalized-Laplacian extreme eigenvalues.
    Spectrum {
        /// Edge-list file, or `-` for stdin.
        graph: PathBuf,
    },
    /// Print every spectral bound next to the heuristic congestions.
    Bounds {
        graph: PathBuf,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Build a contraction tree and report its congestion.
    Contract(ContractArgs),
    /// Generate a graph and print it as an edge list.
    Gen(GenArgs),
    /// Sweep a family over parameter ranges and write one CSV row per instance.
    Experiment(ExperimentArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Hsc,
    Hybrid,
    Equi,
    Oracle,
}

#[derive(Debug, Args)]
pub struct ContractArgs {
    pub graph: PathBuf,
    #[arg(long, value_enum, default_value_t = Method::Hsc)]
    pub method: Method,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Use the normalized Laplacian inside HSC and the hybrid.
    #[arg(long)]
    pub normalized: bool,
    #[arg(long, default_value_t = ORACLE_DEFAULT_LIMIT)]
    pub oracle_limit: usize,
    /// Evaluate this tree instead of building one.
    #[arg(long, conflicts_with = "method")]
    pub tree: Option<PathBuf>,
    /// Also write the tree to this file.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct GenArgs {
    #[arg(long)]
    pub family: String,
    #[arg(long)]
    pub d: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub p: Option<f64>,
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub depth: Option<usize>,
    #[arg(long)]
    pub k: Option<usize>,
    #[arg(long)]
    pub periodic: bool,
    #[arg(long, default_value = "per-qubit")]
    pub terminals: String,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Reseed until the sample is connected.
    #[arg(long)]
    pub connected: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExperimentArgs {
    #[arg(long)]
    pub family: String,
    /// Ranges are `a..b` (inclusive), `a`, or `a,b,c`.
    #[arg(long)]
    pub d: Option<String>,
    #[arg(long)]
    pub m: Option<String>,
    #[arg(long)]
    pub n: Option<String>,
    /// Comma-separated edge probabilities.
    #[arg(long)]
    pub p: Option<String>,
    #[arg(long)]
    pub q: Option<String>,
    #[arg(long)]
    pub depth: Option<String>,
    #[arg(long)]
    pub k: Option<String>,
    #[arg(long)]
    pub periodic: bool,
    #[arg(long, default_value = "per-qubit")]
    pub terminals: String,
    #[arg(long, default_value_t = 1)]
    pub trials: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Also run the exact oracle on graphs within `--oracle-limit` vertices.
    #[arg(long)]
    pub oracle: bool,
    #[arg(long, default_value_t = ORACLE_DEFAULT_LIMIT)]
    pub oracle_limit: usize,
    /// Fill the runtime_ms_* columns.
    #[arg(long)]
    pub timings: bool,
    #[arg(long)]
    pub csv: PathBuf,
}

fn read_input(path: &Path) -> LabResult<String> {
    if path == Path::new("-") {
        let mut s = String::new();
        std::io::stdin()
            .read_to_string(&mut s)
            .map_err(|e| LabError::io(path, e))?;
        Ok(s)
    } else {
        std::fs::read_to_string(path).map_err(|e| LabError::io(path, e))
    }
}

pub fn load_graph(path: &Path) -> LabResult<Graph> {
    parse_edge_list(&read_input(path)?)
}

fn write_file(path: &Path, text: &str) -> LabResult<()> {
    std::fs::write(path, text).map_err(|e| LabError::io(path, e))
}

fn num(x: f64) -> String {
    fmt_digits(x, 10)
}

fn stdout_err(e: std::io::Error) -> LabError {
    LabError::io("<stdout>", e)
}

pub fn run(cli: Cli, out: &mut dyn Write) -> LabResult<()> {
    match cli.command {
        Command::Spectrum { graph } => spectrum(&load_graph(&graph)?, out),
        Command::Bounds { graph, seed } => bounds(&load_graph(&graph)?, seed, out),
        Command::Contract(args) => contract(&args, out),
        Command::Gen(args) => gen(&args, out),
        Command::Experiment(args) => experiment(&args, out),
    }
}

fn spectrum(g: &Graph, out: &mut dyn Write) -> LabResult<()> {
    let s = SpectralSummary::of(g)?;
    let opt = |v: Option<f64>| v.map(num).unwrap_or_else(|| "n/a".into());
    let text = format!(
        "n {}\nm {}\nmax_degree {}\nlambda2 {}\nlambdan {}\nmu2 {}\nmun {}\n",
        s.n,
        num(s.m),
        num(s.max_degree),
        num(s.lambda2),
        num(s.lambda_n),
        opt(s.mu2),
        opt(s.mu_n)
    );
    out.write_all(text.as_bytes()).map_err(stdout_err)
}

fn bounds(g: &Graph, seed: u64, out: &mut dyn Write) -> LabResult<()> {
    let r = bounds_report(g, seed)?;
    let rows: [(&str, f64); 25] = [
        ("n", r.n as f64),
        ("m", r.m),
        ("max_degree", r.max_degree),
        ("lambda2", r.lambda2),
        ("lambdan", r.lambda_n),
        ("mu2", r.mu2),
        ("mun", r.mu_n),
        ("eps", r.eps),
        ("eps_prime", r.eps_prime),
        ("hybrid_root_balance", r.hybrid_root_balance),
        (
            "hybrid_root_balance_normalized",
            r.hybrid_root_balance_normalized,
        ),
        ("lower_thm1", r.lower_thm1),
        ("upper_trivial", r.upper_trivial),
        ("upper_equi", r.upper_equi),
        ("upper_hybrid", r.upper_hybrid),
        ("lower_thm2", r.lower_thm2),
        ("upper_thm2_trivial", r.upper_thm2_trivial),
        ("upper_thm2_equi", r.upper_thm2_equi),
        ("upper_thm2_hybrid", r.upper_thm2_hybrid),
        ("lower_gima", r.lower_gima),
        ("lower_markov_shi", r.lower_markov_shi),
        ("treewidth_upper", r.cor2_treewidth_upper),
        ("cng_hsc", r.cng_hsc),
        ("cng_hybrid", r.cng_hybrid),
        ("cng_equi", r.cng_equi),
    ];
    for (name, v) in rows {
        writeln!(out, "{name} {}", num(v)).map_err(stdout_err)?;
    }
    Ok(())
}

fn build_tree(g: &Graph, args: &ContractArgs) -> LabResult<ContractionTree> {
    if let Some(path) = &args.tree {
        return parse_tree_for(&read_input(path)?, g.n());
    }
    Ok(match args.method {
        Method::Hsc => hsc(g, args.seed, args.normalized)?,
        Method::Hybrid => hybrid_sc_equipartition(g, args.normalized)?,
        Method::Equi => recursive_equipartition(g)?,
        Method::Oracle => oracle_optimal_tree(g, args.oracle_limit)?.1,
    })
}

fn contract(args: &ContractArgs, out: &mut dyn Write) -> LabResult<()> {
    let g = load_graph(&args.graph)?;
    let tree = build_tree(&g, args)?;
    let cert = congestion(&g, &tree)?;
    let subset = &tree.nodes[cert.argmax_node].subset;
    let subset: Vec<String> = subset.iter().map(|v| v.to_string()).collect();
    let text = serialize_tree(&tree);
    writeln!(out, "congestion {}", num(cert.congestion)).map_err(stdout_err)?;
    writeln!(out, "argmax {{{}}}", subset.join(",")).map_err(stdout_err)?;
    writeln!(out, "tree {text}").map_err(stdout_err)?;
    if let Some(path) = &args.out {
        write_file(path, &format!("{text}\n"))?;
    }
    Ok(())
}

fn required<T: Copy>(v: Option<T>, flag: &str, family: &str) -> LabResult<T> {
    v.ok_or_else(|| LabError::Usage(format!("family {family} needs --{flag}")))
}

fn gen_family(a: &GenArgs) -> LabResult<Family> {
    let name = a.family.as_str();
    Ok(match name {
        "fig1" => Family::Fig1,
        _ => match FamilyKind::parse(name)? {
            FamilyKind::Hypercube => {
                let d = required(a.d, "d", name)?;
                let d = u32::try_from(d).map_err(|_| LabError::Usage("--d too large".into()))?;
                Family::Hypercube { d }
            }
            FamilyKind::Path => Family::Path {
                k: required(a.n, "n", name)?,
            },
            FamilyKind::Cycle => Family::Cycle {
                k: required(a.n, "n", name)?,
            },
            FamilyKind::Complete => Family::Complete {
                k: required(a.n, "n", name)?,
            },
            FamilyKind::Lattice => Family::Grid {
                m: required(a.m, "m", name)?,
                n: required(a.n, "n", name)?,
                periodic: a.periodic,
            },
            FamilyKind::Rrg => Family::RandomRegular {
                n: required(a.n, "n", name)?,
                d: required(a.d, "d", name)?,
            },
            FamilyKind::Gnp => Family::Gnp {
                n: required(a.n, "n", name)?,
                p: required(a.p, "p", name)?,
            },
            FamilyKind::Rqc => Family::Rqc {
                q: required(a.q, "q", name)?,
                depth: required(a.depth, "depth", name)?,
                k: required(a.k, "k", name)?,
                terminals: parse_terminals(&a.terminals)?,
            },
        },
    })
}

fn gen(args: &GenArgs, out: &mut dyn Write) -> LabResult<()> {
    let spec = GenSpec::new(gen_family(args)?, args.seed);
    let (g, attempt) = if args.connected {
        spec.generate_connected(CONNECT_ATTEMPTS)?
    } else {
        (spec.generate()?, 0)
    };
    let mut text = format!("# {}", spec.describe());
    if attempt > 0 {
        text.push_str(&format!(" attempt={attempt}"));
    }
    text.push('\n');
    text.push_str(&serialize_edge_list(&g));
    match &args.out {
        Some(path) => write_file(path, &text),
        None => out.write_all(text.as_bytes()).map_err(stdout_err),
    }
}

fn int_list(v: &Option<String>) -> LabResult<Vec<usize>> {
    v.as_deref()
        .map(parse_int_list)
        .transpose()
        .map(Option::unwrap_or_default)
}

pub fn sweep_from_args(a: &ExperimentArgs) -> LabResult<Sweep> {
    let mut s = Sweep::new(FamilyKind::parse(&a.family)?);
    s.d = int_list(&a.d)?;
    s.m = int_list(&a.m)?;
    s.n = int_list(&a.n)?;
    s.q = int_list(&a.q)?;
    s.depth = int_list(&a.depth)?;
    s.k = int_list(&a.k)?;
    s.p =
        a.p.as_deref()
            .map(parse_float_list)
            .transpose()?
            .unwrap_or_default();
    s.periodic = a.periodic;
    s.terminals = parse_terminals(&a.terminals)?;
    Ok(s)
}

fn experiment(args: &ExperimentArgs, out: &mut dyn Write) -> LabResult<()> {
    let sweep = sweep_from_args(args)?;
    let cfg = RunConfig {
        trials: args.trials,
        seed: args.seed,
        oracle: args.oracle,
        oracle_limit: args.oracle_limit,
        timings: args.timings,
    };
    let rows = run_sweep(&sweep, &cfg)?;
    write_csv(&args.csv, &rows)?;
    for s in summarize(&rows) {
        writeln!(out, "{s}").map_err(stdout_err)?;
    }
    writeln!(out, "wrote {} rows to {}", rows.len(), args.csv.display()).map_err(stdout_err)
}
