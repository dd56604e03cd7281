//! `randic`: spectra, characteristic polynomials, bound reports and
//! enumeration campaigns for the Randić matrix of mixed graphs.
//!
//! Exit codes: 0 success, 1 an asserted check failed (`check`), 2 input
//! could not be parsed, 3 a precondition failed, 4 output not writable.

pub mod campaign;
pub mod report;

use std::fs;
use std::io::{self, Write};
use std::path::{Path, PathBuf};

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use randic_core::bounds::GraphAnalysis;
use randic_core::matrix::{build_hermitian_adjacency, build_laplacian, build_normalized_laplacian};
use randic_core::numfmt::complex17;
use randic_core::spectral::{char_poly_combinatorial, char_poly_numeric, CharPoly};
use randic_core::{build_randic, eigen_decompose, parse_graph, run_theorem_suite, MixedGraph, Status};

use campaign::{run_campaign, CampaignConfig};
use report::{num, KeyedRecords, Num};

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Parse(String),
    #[error("{0}")]
    Precondition(String),
    #[error("{0}")]
    Output(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Parse(_) => 2,
            CliError::Precondition(_) => 3,
            CliError::Output(_) => 4,
        }
    }
}

impl From<randic_core::Error> for CliError {
    fn from(e: randic_core::Error) -> Self {
        match e {
            randic_core::Error::Parse { .. } => CliError::Parse(e.to_string()),
            _ => CliError::Precondition(e.to_string()),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum DumpKind {
    /// Hermitian adjacency matrix
    H,
    /// Randić matrix
    R,
    /// Laplacian D - H
    L,
    /// normalized Laplacian I - R
    Nl,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Method {
    Numeric,
    Combinatorial,
    Both,
}

#[derive(Debug, Parser)]
#[command(name = "randic", version, about = "Randić matrix spectra of mixed graphs")]
pub struct Cli {
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub format: OutputFormat,
    /// Write the payload here instead of stdout
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Eigenvalues, energy, ρ, σ and negative count of the Randić matrix
    Spectrum {
        file: PathBuf,
        /// Print a matrix instead of the spectrum
        #[arg(long, value_enum)]
        dump: Option<DumpKind>,
    },
    /// Characteristic polynomial coefficients a_0..a_n
    Charpoly {
        file: PathBuf,
        #[arg(long, value_enum, default_value_t = Method::Both)]
        method: Method,
    },
    /// Energy and the quantities the energy bounds use
    Energy { file: PathBuf },
    /// Eigenvalue and energy bounds
    Bounds { file: PathBuf },
    /// Interlacing after deleting one edge
    Interlace {
        file: PathBuf,
        #[arg(long, value_parser = parse_edge)]
        edge: (usize, usize),
    },
    /// Run every check; exit 1 if an asserted one fails
    Check { file: PathBuf },
    /// Run the checks over a population of small graphs
    Enumerate {
        config: PathBuf,
        #[arg(long)]
        threads: Option<usize>,
    },
}

fn parse_edge(s: &str) -> Result<(usize, usize), String> {
    let (a, b) = s.split_once(',').ok_or("expected u,v")?;
    let p = |x: &str| x.trim().parse::<usize>().map_err(|e| e.to_string());
    Ok((p(a)?, p(b)?))
}

fn read_graph(path: &Path) -> Result<MixedGraph, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    parse_graph(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))
}

fn to_json<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("serializable");
    s.push('\n');
    s
}

fn list(xs: &[f64]) -> String {
    xs.iter().map(|&x| num(x)).collect::<Vec<_>>().join(" ")
}

fn nums(xs: &[f64]) -> Vec<Num> {
    xs.iter().map(|&x| Num(x)).collect()
}

#[derive(Serialize)]
struct DumpJson {
    rows: Vec<Vec<String>>,
}

#[derive(Serialize)]
struct SpectrumJson {
    eigenvalues: Vec<Num>,
    energy: Num,
    rho: Num,
    sigma: Num,
    k: usize,
}

#[derive(Serialize)]
struct CharPolyJson {
    combinatorial: Option<Vec<String>>,
    numeric: Option<Vec<Num>>,
    max_discrepancy: Option<Num>,
}

#[derive(Serialize)]
struct EnergyJson {
    energy: Num,
    n: usize,
    m: usize,
    randic_inverse: Num,
    det: Num,
    rho: Num,
    sigma: Num,
    k: usize,
}

#[derive(Serialize)]
struct VerdictJson {
    k: usize,
    lower: Num,
    theta: Num,
    upper: Num,
    holds: bool,
}

#[derive(Serialize)]
struct InterlaceJson {
    edge: String,
    lambda: Vec<Num>,
    theta: Vec<Num>,
    verdicts: Vec<VerdictJson>,
    holds: bool,
}

fn spectrum(g: &MixedGraph, dump: Option<DumpKind>, fmt: OutputFormat) -> Result<String, CliError> {
    if let Some(kind) = dump {
        let m = match kind {
            DumpKind::H => build_hermitian_adjacency(g),
            DumpKind::R => build_randic(g)?,
            DumpKind::L => build_laplacian(g),
            DumpKind::Nl => build_normalized_laplacian(g)?,
        };
        return Ok(match fmt {
            OutputFormat::Text => m.dump(),
            OutputFormat::Json => {
                let rows: Vec<Vec<String>> = (0..m.dim())
                    .map(|i| m.row(i).iter().map(|&z| complex17(z)).collect())
                    .collect();
                to_json(&DumpJson { rows })
            }
        });
    }
    let s = eigen_decompose(&build_randic(g)?)?;
    Ok(match fmt {
        OutputFormat::Text => format!(
            "λ: {}\nε: {}\nρ: {}\nσ: {}\nk: {}\n",
            list(&s.eigenvalues),
            num(s.energy),
            num(s.rho),
            num(s.sigma),
            s.negative_count
        ),
        OutputFormat::Json => to_json(&SpectrumJson {
            eigenvalues: nums(&s.eigenvalues),
            energy: Num(s.energy),
            rho: Num(s.rho),
            sigma: Num(s.sigma),
            k: s.negative_count,
        }),
    })
}

fn coefficient_lines(p: &CharPoly) -> Vec<String> {
    match p {
        CharPoly::Exact(c) => c.iter().map(|q| q.to_string()).collect(),
        CharPoly::Numeric(c) => c.iter().map(|&x| num(x)).collect(),
    }
}

fn charpoly(g: &MixedGraph, method: Method, fmt: OutputFormat) -> Result<String, CliError> {
    let exact = match method {
        Method::Combinatorial | Method::Both => Some(char_poly_combinatorial(g)?),
        Method::Numeric => None,
    };
    let numeric = match method {
        Method::Numeric | Method::Both => Some(char_poly_numeric(&build_randic(g)?)?),
        Method::Combinatorial => None,
    };
    let gap = match (&exact, &numeric) {
        (Some(a), Some(b)) => Some(a.max_discrepancy(b)),
        _ => None,
    };
    Ok(match fmt {
        OutputFormat::Text => {
            let mut out = String::new();
            for (name, p) in [("combinatorial", &exact), ("numeric", &numeric)] {
                if let Some(p) = p {
                    out.push_str(&format!("{name}:\n"));
                    for (k, c) in coefficient_lines(p).iter().enumerate() {
                        out.push_str(&format!("a_{k} = {c}\n"));
                    }
                }
            }
            if let Some(d) = gap {
                out.push_str(&format!("max discrepancy: {}\n", num(d)));
            }
            out
        }
        OutputFormat::Json => to_json(&CharPolyJson {
            combinatorial: exact.as_ref().map(coefficient_lines),
            numeric: numeric.as_ref().map(|p| nums(&p.to_f64())),
            max_discrepancy: gap.map(Num),
        }),
    })
}

fn energy(g: &MixedGraph, fmt: OutputFormat) -> Result<String, CliError> {
    let m = GraphAnalysis::new(g)?.energy_bounds().meta;
    Ok(match fmt {
        OutputFormat::Text => format!(
            "ε: {}\nn: {}\nm: {}\nR^(-1): {}\ndet: {}\nρ: {}\nσ: {}\nk: {}\n",
            num(m.energy),
            m.n,
            m.m,
            num(m.randic_inverse),
            num(m.det),
            num(m.rho),
            num(m.sigma),
            m.k
        ),
        OutputFormat::Json => to_json(&EnergyJson {
            energy: Num(m.energy),
            n: m.n,
            m: m.m,
            randic_inverse: Num(m.randic_inverse),
            det: Num(m.det),
            rho: Num(m.rho),
            sigma: Num(m.sigma),
            k: m.k,
        }),
    })
}

const BOUND_IDS: [&str; 5] = ["gamma_lower", "gamma_order", "gamma_upper", "spread", "smallest_eigenvalue"];

fn table(records: &[&randic_core::TheoremRecord]) -> String {
    let mut out = format!(
        "{:<30} {:<10} {:>4} {:>24} {:>24} {:>24}  {}\n",
        "check", "status", "rel", "lhs", "rhs", "slack", "note"
    );
    for r in records {
        out.push_str(&format!(
            "{:<30} {:<10} {:>4} {:>24} {:>24} {:>24}  {}\n",
            r.id,
            r.status.as_str(),
            r.relation,
            num(r.lhs),
            num(r.rhs),
            num(r.slack),
            r.reason.as_deref().unwrap_or("")
        ));
    }
    out
}

fn bounds(g: &MixedGraph, fmt: OutputFormat) -> Result<String, CliError> {
    let report = run_theorem_suite(g)?;
    let picked: Vec<_> = report
        .records
        .iter()
        .filter(|r| BOUND_IDS.contains(&r.id.as_str()) || r.id.starts_with("energy_"))
        .cloned()
        .collect();
    Ok(match fmt {
        OutputFormat::Text => table(&picked.iter().collect::<Vec<_>>()),
        OutputFormat::Json => to_json(&KeyedRecords(&picked)),
    })
}

fn interlace(g: &MixedGraph, (u, v): (usize, usize), fmt: OutputFormat) -> Result<String, CliError> {
    let r = randic_core::bounds::interlacing_check(g, u, v)?;
    Ok(match fmt {
        OutputFormat::Text => {
            let mut out = format!("edge: {}\nλ: {}\nθ: {}\n", r.edge, list(&r.lambda), list(&r.theta));
            for v in &r.verdicts {
                out.push_str(&format!(
                    "k={}: {} <= {} <= {} {}\n",
                    v.k,
                    num(v.lower),
                    num(v.theta),
                    num(v.upper),
                    if v.holds { "ok" } else { "VIOLATED" }
                ));
            }
            out.push_str(if r.all_hold() { "interlacing: holds\n" } else { "interlacing: violated\n" });
            out
        }
        OutputFormat::Json => to_json(&InterlaceJson {
            edge: r.edge.to_string(),
            lambda: nums(&r.lambda),
            theta: nums(&r.theta),
            verdicts: r
                .verdicts
                .iter()
                .map(|v| VerdictJson {
                    k: v.k,
                    lower: Num(v.lower),
                    theta: Num(v.theta),
                    upper: Num(v.upper),
                    holds: v.holds,
                })
                .collect(),
            holds: r.all_hold(),
        }),
    })
}

fn check(g: &MixedGraph, fmt: OutputFormat) -> Result<(String, bool), CliError> {
    let report = run_theorem_suite(g)?;
    let passed = report.passed();
    let text = match fmt {
        OutputFormat::Text => {
            let mut out = table(&report.records.iter().collect::<Vec<_>>());
            for r in report.records.iter().filter(|r| r.status == Status::Divergence) {
                out.push_str(&format!(
                    "note: {} diverges (recorded, not asserted): {}\n",
                    r.id,
                    r.reason.as_deref().unwrap_or("")
                ));
            }
            let fails = report.failures().count();
            out.push_str(&format!(
                "result: {} ({} checks, {} failed)\n",
                if passed { "pass" } else { "FAIL" },
                report.records.len(),
                fails
            ));
            out
        }
        OutputFormat::Json => to_json(&KeyedRecords(&report.records)),
    };
    Ok((text, passed))
}

fn emit(payload: &str, output: Option<&Path>, stdout: &mut dyn Write) -> Result<(), CliError> {
    match output {
        Some(p) => fs::write(p, payload).map_err(|e| CliError::Output(format!("{}: {e}", p.display()))),
        None => stdout
            .write_all(payload.as_bytes())
            .map_err(|e| CliError::Output(e.to_string())),
    }
}

/// Execute a parsed command line. Returns the process exit code for
/// successful runs; errors carry their own code.
pub fn run(cli: Cli, stdout: &mut dyn Write) -> Result<i32, CliError> {
    let fmt = cli.format;
    let out = cli.output.as_deref();
    let payload = match cli.command {
        Command::Spectrum { file, dump } => spectrum(&read_graph(&file)?, dump, fmt)?,
        Command::Charpoly { file, method } => charpoly(&read_graph(&file)?, method, fmt)?,
        Command::Energy { file } => energy(&read_graph(&file)?, fmt)?,
        Command::Bounds { file } => bounds(&read_graph(&file)?, fmt)?,
        Command::Interlace { file, edge } => interlace(&read_graph(&file)?, edge, fmt)?,
        Command::Check { file } => {
            let (text, passed) = check(&read_graph(&file)?, fmt)?;
            emit(&text, out, stdout)?;
            return Ok(if passed { 0 } else { 1 });
        }
        Command::Enumerate { config, threads } => {
            let text = fs::read_to_string(&config)
                .map_err(|e| CliError::Parse(format!("{}: {e}", config.display())))?;
            let mut cfg = CampaignConfig::parse(&text)?;
            if threads.is_some() {
                cfg.threads = threads;
            }
            if let Some(p) = out {
                cfg.output = Some(p.to_path_buf());
            }
            return enumerate(&cfg, fmt, stdout);
        }
    };
    emit(&payload, out, stdout)?;
    Ok(0)
}

fn enumerate(cfg: &CampaignConfig, fmt: OutputFormat, stdout: &mut dyn Write) -> Result<i32, CliError> {
    match &cfg.output {
        Some(path) => {
            let file = fs::File::create(path)
                .map_err(|e| CliError::Output(format!("{}: {e}", path.display())))?;
            let summary = run_campaign(cfg, io::BufWriter::new(file))?;
            let text = match fmt {
                OutputFormat::Text => summary.render_text(),
                OutputFormat::Json => to_json(&summary),
            };
            emit(&text, None, stdout)?;
        }
        None => {
            run_campaign(cfg, io::BufWriter::new(stdout))?;
        }
    }
    Ok(0)
}

