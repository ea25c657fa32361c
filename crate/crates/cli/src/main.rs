//! `rigidity`: batch front end for index analysis, random geometric graph
//! generation, sensing-radius sweeps, and oracle cross-checks.
//!
//! Exit codes: 0 success, 1 verification disagreement, 2 input error,
//! 3 requested order out of range.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};

use rigidity_core::formats::{
    self, edge_list::MAX_VERTICES, parse_deployment, parse_edge_list, render_machine, render_text,
    write_csv, write_deployment, write_edge_list,
};
use rigidity_core::indices::index_pair;
use rigidity_core::sweep::relative_change;
use rigidity_core::{
    analyze, generic_rank, geometric_graph, matroid_rank, sample_deployment, sweep_average,
    threshold_ratio, unit_grid, Deployment, Error, Graph, Which,
};

#[derive(Parser)]
#[command(
    name = "rigidity",
    version,
    about = "Rigidity and redundancy indices of planar graphs"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Report rank, K_r, K_u and rigidity verdicts for an edge-list file.
    Analyze {
        #[arg(long)]
        input: PathBuf,
        /// Also compute the order-k redundancy index.
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Sample a deployment, write it and its disk graph, print the indices.
    Rgg {
        #[arg(long, required_unless_present = "deployment")]
        nodes: Option<usize>,
        #[arg(long, required_unless_present = "deployment")]
        side: Option<f64>,
        #[arg(long, required_unless_present = "deployment")]
        seed: Option<u64>,
        #[arg(long)]
        radius: f64,
        /// Output stem: writes STEM.deployment and STEM.edges.
        #[arg(long)]
        out: PathBuf,
        /// Reload a deployment file instead of sampling one.
        #[arg(long, conflicts_with_all = ["nodes", "side", "seed"])]
        deployment: Option<PathBuf>,
    },
    /// Average K_r and K_u over seeded deployments on a grid of r_s/d.
    Sweep {
        #[arg(long)]
        nodes: usize,
        #[arg(long)]
        side: f64,
        #[arg(long)]
        trials: usize,
        #[arg(long)]
        step: f64,
        #[arg(long)]
        seed: u64,
        #[arg(long)]
        csv: PathBuf,
        #[arg(long)]
        svg: Option<PathBuf>,
        /// Add exact p/q columns for the means.
        #[arg(long)]
        exact: bool,
    },
    /// Compare the combinatorial rank with exact rigidity-matrix ranks.
    Verify {
        #[arg(long)]
        input: PathBuf,
        #[arg(long, default_value_t = 5)]
        seeds: u64,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Machine,
}

enum Failure {
    Verify(String),
    Input(String),
    Range(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Verify(_) => 1,
            Failure::Input(_) => 2,
            Failure::Range(_) => 3,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Verify(m) | Failure::Input(m) | Failure::Range(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::KOutOfRange { .. } => Failure::Range(e.to_string()),
            other => Failure::Input(other.to_string()),
        }
    }
}

type Outcome = Result<(), Failure>;

fn read(path: &Path) -> Result<String, Failure> {
    fs::read_to_string(path).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn write(path: &Path, contents: &str) -> Outcome {
    fs::write(path, contents).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn load_graph(path: &Path) -> Result<Graph, Failure> {
    parse_edge_list(&read(path)?).map_err(|e| Failure::Input(format!("{}: {e}", path.display())))
}

fn with_extension(stem: &Path, ext: &str) -> PathBuf {
    let mut s = stem.as_os_str().to_owned();
    s.push(".");
    s.push(ext);
    PathBuf::from(s)
}

fn decimal(x: Option<f64>) -> String {
    x.map_or_else(|| "none".to_string(), |v| format!("{v:.6}"))
}

fn cmd_analyze(input: &Path, k: Option<usize>, format: Format) -> Outcome {
    let g = load_graph(input)?;
    let report = analyze(&g, k);
    let doc = match format {
        Format::Text => render_text(&report),
        Format::Machine => render_machine(&report),
    };
    print!("{doc}");
    match report.higher_order {
        Some(Err(e)) => Err(e.into()),
        _ => Ok(()),
    }
}

fn cmd_rgg(
    nodes: Option<usize>,
    side: Option<f64>,
    seed: Option<u64>,
    radius: f64,
    out: &Path,
    reload: Option<&Path>,
) -> Outcome {
    let dep: Deployment = match reload {
        Some(path) => parse_deployment(&read(path)?)
            .map_err(|e| Failure::Input(format!("{}: {e}", path.display())))?,
        None => {
            let n = nodes.unwrap_or_default();
            if n > MAX_VERTICES {
                return Err(Failure::Input(format!(
                    "--nodes {n} exceeds {MAX_VERTICES}"
                )));
            }
            sample_deployment(n, side.unwrap_or_default(), seed.unwrap_or_default())?
        }
    };
    let g = geometric_graph(&dep, radius)?;
    let (k_r, k_u) = index_pair(&g);

    let dep_path = with_extension(out, "deployment");
    let edge_path = with_extension(out, "edges");
    write(&dep_path, &write_deployment(&dep))?;
    write(&edge_path, &write_edge_list(&g))?;

    println!("deployment={}", dep_path.display());
    println!("edges={}", edge_path.display());
    println!("n={}", g.vertex_count());
    println!("m={}", g.edge_count());
    println!("radius={radius}");
    println!("k_r={k_r}");
    println!("k_r_decimal={:.6}", k_r.to_f64());
    println!("k_u={k_u}");
    println!("k_u_decimal={:.6}", k_u.to_f64());
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    nodes: usize,
    side: f64,
    trials: usize,
    step: f64,
    seed: u64,
    csv: &Path,
    svg: Option<&Path>,
    exact: bool,
) -> Outcome {
    if nodes > MAX_VERTICES {
        return Err(Failure::Input(format!(
            "--nodes {nodes} exceeds {MAX_VERTICES}"
        )));
    }
    if trials == 0 {
        return Err(Failure::Input("--trials must be at least 1".into()));
    }
    let grid = unit_grid(step)?;
    let curve = sweep_average(nodes, side, trials, &grid, seed)?;
    write(csv, &write_csv(&curve, exact))?;
    if let Some(svg) = svg {
        write(svg, &formats::write_svg(&curve))?;
    }

    let rigid_at = threshold_ratio(&curve, Which::Rigidity);
    let redundant_at = threshold_ratio(&curve, Which::Redundancy);
    println!("csv={}", csv.display());
    if let Some(svg) = svg {
        println!("svg={}", svg.display());
    }
    println!("points={}", curve.len());
    println!("trials={trials}");
    println!("rigidity_threshold={}", decimal(rigid_at));
    println!("redundancy_threshold={}", decimal(redundant_at));
    println!(
        "relative_increase={}",
        decimal(
            rigid_at
                .zip(redundant_at)
                .and_then(|(a, b)| relative_change(a, b))
        )
    );
    Ok(())
}

fn cmd_verify(input: &Path, seeds: u64) -> Outcome {
    let g = load_graph(input)?;
    let rank = matroid_rank(&g);
    let mut disagreements = 0;
    for seed in 0..seeds {
        let numeric = generic_rank(&g, seed);
        let agree = numeric == rank;
        disagreements += usize::from(!agree);
        println!("seed={seed} matroid_rank={rank} generic_rank={numeric} agree={agree}");
    }
    if disagreements > 0 {
        return Err(Failure::Verify(format!(
            "matroid rank {rank} disagrees with the rigidity-matrix rank on {disagreements} of {seeds} seeds"
        )));
    }
    println!("result=agree");
    Ok(())
}

fn run(cli: Cli) -> Outcome {
    match cli.command {
        Command::Analyze { input, k, format } => cmd_analyze(&input, k, format),
        Command::Rgg {
            nodes,
            side,
            seed,
            radius,
            out,
            deployment,
        } => cmd_rgg(nodes, side, seed, radius, &out, deployment.as_deref()),
        Command::Sweep {
            nodes,
            side,
            trials,
            step,
            seed,
            csv,
            svg,
            exact,
        } => cmd_sweep(nodes, side, trials, step, seed, &csv, svg.as_deref(), exact),
        Command::Verify { input, seeds } => cmd_verify(&input, seeds),
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) if !e.use_stderr() => e.exit(),
        Err(e) => {
            let rendered = e.to_string();
            eprintln!(
                "{}",
                rendered.lines().next().unwrap_or("error: bad arguments")
            );
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message().replace('\n', " "));
            ExitCode::from(f.code())
        }
    }
}
