//! Command-line frontend: graph ingestion, index and stability reports,
//! determinant duality checks, Kuramoto ring tables and curve exports.
//!
//! Exit codes: 0 success, 2 parse/input error, 3 graph not connected,
//! 4 method disagreement, 5 singular cycle form, 6 not a fixed point,
//! 7 degenerate Jacobian weight.

use cycleform_cli::{render, report};

use std::f64::consts::FRAC_PI_2;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use sha2::{Digest, Sha256};

use cycleform::kuramoto::{
    classify_fixed_point, jacobian_graph, longest_stable_link_with_tol, ring_scan,
    PhaseConfiguration,
};
use cycleform::spectral::{
    detred_identity_check, index_bounds, index_via_cycles_with_tol, inertia, laplacian,
    DEFAULT_INERTIA_TOL,
};
use cycleform::{build_cover, load_graph, Error, WeightedGraph};

use report::{
    ClassifiedEdge, ClassifyResults, CoverEdge, CoverResults, DetredResults, IndexResults,
    Report, Results, RingScanResults, RingTableResults,
};

#[derive(Parser)]
#[command(name = "cycleform", version, about = "Signed-Laplacian spectral index via the cycle space")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Seed echoed into reports; reserved for randomized self-test modes.
    #[arg(long, global = true)]
    seed: Option<u64>,
    /// Tolerance override: inertia zero band for index, bisection width
    /// for ring-table.
    #[arg(long, global = true)]
    tol: Option<f64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
    Csv,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Method {
    Cycles,
    Direct,
    Both,
}

#[derive(Subcommand)]
enum Command {
    /// Spectral index of a graph Laplacian, via the cycle space and/or a
    /// dense eigensolve.
    Index {
        graph_file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Reduced-determinant duality check.
    Detred { graph_file: PathBuf },
    /// Longest stable wrap link on rings of the given sizes.
    RingTable {
        /// Comma-separated ring sizes.
        #[arg(long = "n-list", value_delimiter = ',', default_values_t = vec![3usize, 4, 5, 10, 20, 30, 40, 50])]
        n_list: Vec<usize>,
    },
    /// Sampled ring stability curves for external plotting.
    RingScan {
        #[arg(long)]
        n: usize,
        #[arg(long, default_value_t = 0.0)]
        zeta_min: f64,
        #[arg(long, default_value_t = FRAC_PI_2)]
        zeta_max: f64,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
    },
    /// Classify a phase configuration as a fixed point of the oscillator
    /// dynamics.
    Classify {
        #[arg(long)]
        graph_file: PathBuf,
        #[arg(long)]
        theta_file: PathBuf,
        #[arg(long)]
        omega_file: PathBuf,
        #[arg(long, default_value_t = 1e-8)]
        residual_tol: f64,
    },
    /// Print the covering-tree fundamental domain as an edge list.
    Cover {
        #[arg(long)]
        graph_file: PathBuf,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Self {
            code,
            message: message.into(),
        }
    }
}

fn main() -> ExitCode {
    env_logger::init();
    let cli = Cli::parse();
    let started = Instant::now();
    match run(&cli) {
        Ok(mut report) => {
            report.timing_ms = started.elapsed().as_secs_f64() * 1e3;
            let rendered = match cli.format {
                Format::Text => render::render_text(&report),
                Format::Csv => render::render_csv(&report),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&report)
                        .expect("report serialization cannot fail");
                    s.push('\n');
                    s
                }
            };
            print!("{rendered}");
            ExitCode::SUCCESS
        }
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(cli: &Cli) -> Result<Report, Failure> {
    let command_echo: String = std::env::args().skip(1).collect::<Vec<_>>().join(" ");
    let (input_digest, results) = match &cli.command {
        Command::Index { graph_file, method } => {
            let (digest, g) = load_connected_graph(graph_file)?;
            (digest, cmd_index(&g, *method, cli.tol)?)
        }
        Command::Detred { graph_file } => {
            let (digest, g) = load_connected_graph(graph_file)?;
            (digest, cmd_detred(&g)?)
        }
        Command::RingTable { n_list } => {
            (digest_of(command_echo.as_bytes()), cmd_ring_table(n_list, cli.tol)?)
        }
        Command::RingScan {
            n,
            zeta_min,
            zeta_max,
            steps,
        } => (
            digest_of(command_echo.as_bytes()),
            cmd_ring_scan(*n, *zeta_min, *zeta_max, *steps)?,
        ),
        Command::Classify {
            graph_file,
            theta_file,
            omega_file,
            residual_tol,
        } => cmd_classify(graph_file, theta_file, omega_file, *residual_tol)?,
        Command::Cover { graph_file } => {
            let (digest, g) = load_connected_graph(graph_file)?;
            (digest, cmd_cover(&g)?)
        }
    };
    Ok(Report {
        command: command_echo,
        input_digest,
        results,
        timing_ms: 0.0,
    })
}

fn digest_of(bytes: &[u8]) -> String {
    let digest = Sha256::digest(bytes);
    digest.iter().map(|b| format!("{b:02x}")).collect()
}

fn read_input(path: &Path) -> Result<String, Failure> {
    std::fs::read_to_string(path)
        .map_err(|e| Failure::new(2, format!("cannot read {}: {e}", path.display())))
}

fn load_connected_graph(path: &Path) -> Result<(String, WeightedGraph), Failure> {
    let source = read_input(path)?;
    let g = load_graph(&source).map_err(|e| Failure::new(2, e.to_string()))?;
    if !g.is_connected() {
        return Err(Failure::new(3, Error::NotConnected.to_string()));
    }
    Ok((digest_of(source.as_bytes()), g))
}

fn cmd_index(g: &WeightedGraph, method: Method, tol: Option<f64>) -> Result<Results, Failure> {
    let tol = tol.unwrap_or(DEFAULT_INERTIA_TOL);
    let cycles = match method {
        Method::Cycles | Method::Both => Some(
            index_via_cycles_with_tol(g, tol)
                .map_err(|e| Failure::new(3, e.to_string()))?,
        ),
        Method::Direct => None,
    };
    let direct = match method {
        Method::Direct | Method::Both => Some(
            inertia(&laplacian(g), tol).map_err(|e| Failure::new(2, e.to_string()))?,
        ),
        Method::Cycles => None,
    };
    if let (Some(a), Some(b)) = (&cycles, &direct) {
        if a.n_plus != b.n_plus {
            return Err(Failure::new(
                4,
                format!(
                    "method disagreement: cycles n+ = {}, direct n+ = {}",
                    a.n_plus, b.n_plus
                ),
            ));
        }
    }
    let (lower_bound, upper_bound) = index_bounds(g);
    let degenerate_kernel = cycles.map(|i| i.n_zero > 1).unwrap_or(false)
        || direct.map(|i| i.n_zero > 1).unwrap_or(false);
    Ok(Results::Index(IndexResults {
        method: match method {
            Method::Cycles => "cycles",
            Method::Direct => "direct",
            Method::Both => "both",
        }
        .to_string(),
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        cycle_rank: g.cycle_rank(),
        negative_edges: g.negative_edge_count(),
        lower_bound,
        upper_bound,
        cycles,
        direct,
        degenerate_kernel,
    }))
}

fn cmd_detred(g: &WeightedGraph) -> Result<Results, Failure> {
    let report = detred_identity_check(g).map_err(|e| match e {
        Error::SingularCycleForm | Error::DegenerateKernel { .. } => {
            Failure::new(5, e.to_string())
        }
        Error::NotConnected => Failure::new(3, e.to_string()),
        other => Failure::new(1, other.to_string()),
    })?;
    Ok(Results::Detred(DetredResults {
        vertices: g.vertex_count(),
        edges: g.edge_count(),
        lhs: report.lhs,
        rhs: report.rhs,
        ratio: report.ratio,
        sign_factor: report.sign_factor,
    }))
}

fn cmd_ring_table(n_list: &[usize], tol: Option<f64>) -> Result<Results, Failure> {
    let tol = tol.unwrap_or(1e-12);
    let mut rows = Vec::with_capacity(n_list.len());
    for &n in n_list {
        let analysis = longest_stable_link_with_tol(n, tol).map_err(|e| match e {
            Error::Spec(_) => Failure::new(2, e.to_string()),
            other => Failure::new(1, other.to_string()),
        })?;
        rows.push(analysis);
    }
    Ok(Results::RingTable(RingTableResults { rows }))
}

fn cmd_ring_scan(n: usize, zeta_min: f64, zeta_max: f64, steps: usize) -> Result<Results, Failure> {
    if n < 3 {
        return Err(Failure::new(2, format!("ring size must be >= 3, got {n}")));
    }
    if steps == 0 || !zeta_min.is_finite() || !zeta_max.is_finite() || zeta_min > zeta_max {
        return Err(Failure::new(2, "invalid scan range".to_string()));
    }
    Ok(Results::RingScan(RingScanResults {
        n,
        rows: ring_scan(n, zeta_min, zeta_max, steps),
    }))
}

fn parse_value_file(path: &Path) -> Result<Vec<f64>, Failure> {
    let source = read_input(path)?;
    let mut values = Vec::new();
    for (lineno, line) in source.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        let value: f64 = line.parse().map_err(|_| {
            Failure::new(
                2,
                format!("{}:{}: invalid number `{line}`", path.display(), lineno + 1),
            )
        })?;
        values.push(value);
    }
    Ok(values)
}

fn cmd_classify(
    graph_file: &Path,
    theta_file: &Path,
    omega_file: &Path,
    residual_tol: f64,
) -> Result<(String, Results), Failure> {
    let graph_source = read_input(graph_file)?;
    let g = load_graph(&graph_source).map_err(|e| Failure::new(2, e.to_string()))?;
    if !g.is_connected() {
        return Err(Failure::new(3, Error::NotConnected.to_string()));
    }
    let theta_source = read_input(theta_file)?;
    let omega_source = read_input(omega_file)?;
    let theta = parse_value_file(theta_file)?;
    let omega = parse_value_file(omega_file)?;
    let digest = digest_of(
        [
            graph_source.as_bytes(),
            theta_source.as_bytes(),
            omega_source.as_bytes(),
        ]
        .concat()
        .as_slice(),
    );

    let pc = PhaseConfiguration::new(theta, omega, g)
        .map_err(|e| Failure::new(2, e.to_string()))?;
    let classification = classify_fixed_point(&pc, residual_tol).map_err(|e| match e {
        Error::NotAFixedPoint { .. } => Failure::new(6, e.to_string()),
        Error::DegenerateWeight { .. } => Failure::new(7, e.to_string()),
        Error::NotConnected => Failure::new(3, e.to_string()),
        other => Failure::new(1, other.to_string()),
    })?;
    let jacobian = jacobian_graph(&pc).expect("classification already validated the weights");
    let edges: Vec<ClassifiedEdge> = jacobian
        .edges()
        .iter()
        .map(|e| ClassifiedEdge {
            tail: e.tail,
            head: e.head,
            weight: e.weight,
            long: e.weight < 0.0,
        })
        .collect();
    let long_links: Vec<(usize, usize)> = edges
        .iter()
        .filter(|e| e.long)
        .map(|e| (e.tail, e.head))
        .collect();
    Ok((
        digest,
        Results::Classify(ClassifyResults {
            unstable_dim: classification.unstable_dim,
            zero_modes: classification.zero_modes,
            edges,
            long_links,
        }),
    ))
}

fn cmd_cover(g: &WeightedGraph) -> Result<Results, Failure> {
    let tree = g
        .spanning_tree()
        .map_err(|e| Failure::new(3, e.to_string()))?;
    let cover = build_cover(g, &tree).map_err(|e| Failure::new(1, e.to_string()))?;
    let edges: Vec<CoverEdge> = cover
        .tree
        .edges()
        .iter()
        .map(|e| CoverEdge {
            tail: e.tail,
            head: e.head,
            weight: e.weight,
        })
        .collect();
    Ok(Results::Cover(CoverResults {
        vertices_g: g.vertex_count(),
        vertices_t: cover.tree.vertex_count(),
        cycle_rank: cover.tree.vertex_count() - g.vertex_count(),
        edges,
        phi: cover.phi,
    }))
}
