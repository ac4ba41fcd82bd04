use std::fs::File;
use std::io::{self, BufReader, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use ramsey_forge::algebra::FieldSpec;
use ramsey_forge::certify::{self, Certificate, Status, SweepConfig};
use ramsey_forge::exactmetrics::{metrics_report, MetricsReport};
use ramsey_forge::graphs::{build, export_graph, read_dimacs, ExportFormat};
use ramsey_forge::spectral::{cayley_spectrum_abelian, dense_spectrum, SpectralSummary};
use ramsey_forge::{FamilySpec, Limits};

#[derive(Parser)]
#[command(name = "ramsey-forge", version, about = "Finite-geometry graphs, their spectra, and certificates")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Largest graph to build; overrides RAMSEY_FORGE_MAX_N.
    #[arg(long, global = true)]
    max_n: Option<u64>,
    /// Node budget for exact independence.
    #[arg(long, global = true)]
    node_budget: Option<u64>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a graph and write it as DIMACS or edge JSONL.
    Build {
        #[command(flatten)]
        sel: Selectors,
        /// Output file (stdout if omitted).
        #[arg(long)]
        out: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t = Format::Dimacs)]
        format: Format,
    },
    /// Girth, diameter, triangles and components as JSON.
    Stats {
        #[command(flatten)]
        sel: Selectors,
    },
    /// Adjacency spectrum summary as JSON.
    Spectrum {
        #[command(flatten)]
        sel: Selectors,
        /// Defaults to character sums for Cayley families, dense otherwise.
        #[arg(long, value_enum)]
        method: Option<Method>,
    },
    /// Run a verification suite and print its certificate.
    Verify {
        #[arg(long, value_enum)]
        suite: Suite,
        #[command(flatten)]
        sel: Selectors,
    },
    /// Emit an R(3, t) > n certificate for a triangle-free graph.
    CertifyRamsey {
        #[command(flatten)]
        sel: Selectors,
        /// Read the graph from a DIMACS file instead of building a family.
        #[arg(long, conflicts_with_all = ["family", "q"])]
        dimacs: Option<PathBuf>,
    },
    /// Run a sweep from a JSON config; prints the summary CSV.
    Sweep {
        #[arg(long)]
        config: PathBuf,
        /// Directory for certificates and summary.csv.
        #[arg(long, default_value = "sweep-out")]
        out: PathBuf,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Dimacs,
    Jsonl,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Dense,
    Character,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Suite {
    Circles,
    GirthDiameter,
    Degree,
    Main,
    Mt1,
    Code,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Kind {
    Euclidean,
    Noneuclidean,
    Bch,
    Alon,
}

#[derive(Args, Clone)]
struct Selectors {
    #[arg(long, value_enum)]
    family: Option<Kind>,
    #[arg(long)]
    q: Option<u32>,
    /// Dimension of the Euclidean space.
    #[arg(long, default_value_t = 2)]
    m: u32,
    /// Quadrance or distance (default 1 for Euclidean, 2 sigma for non-Euclidean).
    #[arg(long)]
    a: Option<u32>,
    /// Non-square for the half-plane (default: smallest non-square).
    #[arg(long)]
    sigma: Option<u32>,
    #[arg(long)]
    k: Option<u32>,
}

/// Errors that map to exit code 2.
struct UsageError(String);

impl<E: std::fmt::Display> From<E> for UsageError {
    fn from(e: E) -> Self {
        UsageError(e.to_string())
    }
}

type CliResult<T> = Result<T, UsageError>;

fn need<T>(v: Option<T>, flag: &str) -> CliResult<T> {
    v.ok_or_else(|| UsageError(format!("--{flag} is required here")))
}

impl Selectors {
    fn family(&self) -> CliResult<(FamilySpec, Vec<String>)> {
        let mut defaults = Vec::new();
        let family = match need(self.family, "family")? {
            Kind::Euclidean => {
                let q = need(self.q, "q")?;
                let a = self.a.unwrap_or_else(|| {
                    defaults.push("a=1".into());
                    1
                });
                FamilySpec::euclidean(q, self.m, a % q.max(1))?
            }
            Kind::Noneuclidean => {
                let q = need(self.q, "q")?;
                let f = FieldSpec::new(q)?;
                let sigma = match self.sigma {
                    Some(s) => s % q,
                    None => {
                        defaults.push("sigma=smallest non-square".into());
                        f.find_nonsquare().value()
                    }
                };
                let a = match self.a {
                    Some(a) => a % q,
                    None => {
                        defaults.push("a=2 sigma".into());
                        2 * sigma % q
                    }
                };
                FamilySpec::non_euclidean(q, sigma, a)?
            }
            Kind::Bch => FamilySpec::bch(need(self.k, "k")?)?,
            Kind::Alon => FamilySpec::alon(need(self.k, "k")?)?,
        };
        Ok((family, defaults))
    }
}

fn print_json<T: Serialize>(value: &T) -> CliResult<()> {
    let mut out = io::stdout().lock();
    serde_json::to_writer_pretty(&mut out, value)?;
    writeln!(out)?;
    Ok(())
}

#[derive(Serialize)]
struct Described<'a, T: Serialize> {
    family: FamilySpec,
    label: String,
    #[serde(skip_serializing_if = "<[String]>::is_empty")]
    defaults: &'a [String],
    #[serde(flatten)]
    body: T,
}

fn status_code(failed: bool) -> ExitCode {
    if failed {
        ExitCode::from(1)
    } else {
        ExitCode::SUCCESS
    }
}

fn emit_certificate(mut cert: Certificate, defaults: Vec<String>) -> CliResult<ExitCode> {
    cert.defaults = defaults;
    print_json(&cert)?;
    for c in cert.failures() {
        eprintln!("fail: {} ({})", c.claim_id, c.statement);
    }
    Ok(status_code(cert.status == Status::Fail))
}

fn run(cli: Cli) -> CliResult<ExitCode> {
    let mut limits = Limits::from_env().map_err(UsageError)?;
    if let Some(n) = cli.max_n {
        limits.max_n = n;
    }
    if let Some(b) = cli.node_budget {
        limits.node_budget = b;
    }
    match cli.command {
        Command::Build { sel, out, format } => {
            let (family, _) = sel.family()?;
            let g = build(&family, limits.max_n)?;
            let fmt = match format {
                Format::Dimacs => ExportFormat::Dimacs,
                Format::Jsonl => ExportFormat::EdgeJsonl,
            };
            match out {
                Some(path) => export_graph(&g, fmt, BufWriter::new(File::create(path)?))?,
                None => export_graph(&g, fmt, BufWriter::new(io::stdout().lock()))?,
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Stats { sel } => {
            let (family, defaults) = sel.family()?;
            let g = build(&family, limits.max_n)?;
            let report: MetricsReport = metrics_report(&g);
            print_json(&Described { family, label: family.to_string(), defaults: &defaults, body: report })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Spectrum { sel, method } => {
            let (family, defaults) = sel.family()?;
            let cayley = !matches!(family, FamilySpec::NonEuclidean { .. });
            let summary: SpectralSummary = match method {
                Some(Method::Character) => cayley_spectrum_abelian(&family)?,
                None if cayley => cayley_spectrum_abelian(&family)?,
                _ => dense_spectrum(&build(&family, limits.max_n)?, limits.dense_max_n, limits.jacobi_max_sweeps)?,
            };
            print_json(&Described { family, label: family.to_string(), defaults: &defaults, body: summary })?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify { suite, sel } => {
            let (cert, defaults) = match suite {
                Suite::Circles => (certify::verify_circle_lemma(need(sel.q, "q")?)?, Vec::new()),
                Suite::Degree => (certify::verify_degree_formula(need(sel.q, "q")?, sel.m, &limits)?, Vec::new()),
                Suite::Mt1 => (certify::verify_mt1(need(sel.q, "q")?, &limits)?, Vec::new()),
                Suite::Main => {
                    let q = need(sel.q, "q")?;
                    let defaults = if sel.a.is_none() { vec!["a=1".to_string()] } else { Vec::new() };
                    (certify::verify_main_theorem(q, sel.a.unwrap_or(1), &limits)?, defaults)
                }
                Suite::GirthDiameter => {
                    let (family, defaults) = sel.family()?;
                    (certify::verify_girth_diameter(&family, &limits)?, defaults)
                }
                Suite::Code => {
                    let (family, defaults) = sel.family()?;
                    (certify::verify_code_graphs(&family, &limits)?, defaults)
                }
            };
            emit_certificate(cert, defaults)
        }
        Command::CertifyRamsey { sel, dimacs } => {
            let (graph, defaults) = match dimacs {
                Some(path) => (read_dimacs(BufReader::new(File::open(path)?))?, Vec::new()),
                None => {
                    let (family, defaults) = sel.family()?;
                    (build(&family, limits.max_n)?, defaults)
                }
            };
            emit_certificate(certify::ramsey_certificate(graph, &limits)?, defaults)
        }
        Command::Sweep { config, out } => {
            let mut cfg: SweepConfig = serde_json::from_reader(BufReader::new(File::open(&config)?))
                .map_err(|e| UsageError(format!("{}: {e}", config.display())))?;
            if let Some(n) = cli.max_n {
                cfg.limits.max_n = n;
            }
            if let Some(b) = cli.node_budget {
                cfg.limits.node_budget = b;
            }
            let report = certify::run_sweep(&cfg, &out)?;
            io::copy(&mut File::open(&report.summary_path)?, &mut io::stdout().lock())?;
            for e in report.entries.iter().filter(|e| e.certificate.status == Status::Fail) {
                eprintln!("fail: {}", e.stem);
            }
            Ok(status_code(report.any_failed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let pool = match cli.threads {
        Some(t) => rayon::ThreadPoolBuilder::new().num_threads(t).build(),
        None => rayon::ThreadPoolBuilder::new().build(),
    };
    let pool = match pool {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(2);
        }
    };
    match pool.install(|| run(cli)) {
        Ok(code) => code,
        Err(UsageError(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
