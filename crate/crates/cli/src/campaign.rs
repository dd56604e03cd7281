//! Enumeration campaigns: run the theorem suite over every small mixed graph
//! (or a seeded sample) and stream one record per graph and check.
//!
//! Config files use the graph format's key-value style:
//!
//! ```text
//! campaign v1
//! n_range 2..5
//! connected_only true
//! min_degree 1
//! sample_limit 500     # optional; see `Population`
//! seed 7
//! format csv
//! output report.csv    # optional
//! threads 4            # optional
//! ```

use std::collections::BTreeMap;
use std::io::Write;
use std::path::PathBuf;

use rayon::prelude::*;
use serde::Serialize;

use randic_core::graph::{
    graph_from_state_index, mixed_graph_count, sample_mixed_graphs, state_index,
    EnumerationOptions,
};
use randic_core::{run_theorem_suite, MixedGraph, Status, TheoremRecord};

use crate::report::Num;
use crate::CliError;

/// Largest order enumerated exhaustively when no sample limit is set.
pub const EXHAUSTIVE_MAX_N: usize = 5;
pub const DEFAULT_SAMPLE_LIMIT: usize = 500;
/// Largest order accepted at all.
pub const MAX_CAMPAIGN_N: usize = 8;
const CHUNK: usize = 2048;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ReportFormat {
    Json,
    Csv,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CampaignConfig {
    pub n_min: usize,
    pub n_max: usize,
    pub connected_only: bool,
    pub min_degree: usize,
    /// Sample size per `n`. Without it, `n <= 5` is exhaustive and larger
    /// `n` draw 500 graphs; with it, every `n >= 5` is sampled.
    pub sample_limit: Option<usize>,
    pub seed: u64,
    pub format: ReportFormat,
    #[serde(skip)]
    pub output: Option<PathBuf>,
    #[serde(skip)]
    pub threads: Option<usize>,
}

impl Default for CampaignConfig {
    fn default() -> Self {
        CampaignConfig {
            n_min: 2,
            n_max: 4,
            connected_only: true,
            min_degree: 1,
            sample_limit: None,
            seed: 0,
            format: ReportFormat::Json,
            output: None,
            threads: None,
        }
    }
}

fn parse_bool(v: &str) -> Option<bool> {
    match v {
        "true" | "yes" | "1" => Some(true),
        "false" | "no" | "0" => Some(false),
        _ => None,
    }
}

impl CampaignConfig {
    pub fn parse(text: &str) -> Result<CampaignConfig, CliError> {
        let err = |line: usize, msg: String| CliError::Parse(format!("config line {line}: {msg}"));
        let mut cfg = CampaignConfig::default();
        let mut lines = text
            .lines()
            .enumerate()
            .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()));
        match lines.next() {
            Some((_, "campaign v1")) => {}
            _ => return Err(err(1, "expected header `campaign v1`".into())),
        }
        for (no, line) in lines {
            if line.is_empty() {
                continue;
            }
            let (key, value) = line
                .split_once(char::is_whitespace)
                .map(|(k, v)| (k, v.trim()))
                .ok_or_else(|| err(no, format!("expected `key value`, got `{line}`")))?;
            let bad = |what: &str| err(no, format!("invalid {what} `{value}`"));
            let int = |what: &str| value.parse::<usize>().map_err(|_| bad(what));
            match key {
                "n_range" => {
                    let (a, b) = value.split_once("..").ok_or_else(|| bad("range"))?;
                    let b = b.strip_prefix('=').unwrap_or(b);
                    cfg.n_min = a.trim().parse().map_err(|_| bad("range"))?;
                    cfg.n_max = b.trim().parse().map_err(|_| bad("range"))?;
                }
                "connected_only" => cfg.connected_only = parse_bool(value).ok_or_else(|| bad("bool"))?,
                "min_degree" => cfg.min_degree = int("min_degree")?,
                "sample_limit" => cfg.sample_limit = Some(int("sample_limit")?),
                "seed" => cfg.seed = value.parse().map_err(|_| bad("seed"))?,
                "format" => {
                    cfg.format = match value {
                        "json" => ReportFormat::Json,
                        "csv" => ReportFormat::Csv,
                        _ => return Err(bad("format")),
                    }
                }
                "output" => cfg.output = Some(PathBuf::from(value)),
                "threads" => cfg.threads = Some(int("threads")?.max(1)),
                _ => return Err(err(no, format!("unknown key `{key}`"))),
            }
        }
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<(), CliError> {
        if self.n_min < 1 || self.n_min > self.n_max || self.n_max > MAX_CAMPAIGN_N {
            return Err(CliError::Precondition(format!(
                "n_range {}..{} must lie within 1..{MAX_CAMPAIGN_N}",
                self.n_min, self.n_max
            )));
        }
        Ok(())
    }

    fn options(&self) -> EnumerationOptions {
        EnumerationOptions {
            connected_only: self.connected_only,
            min_degree: self.min_degree,
            cap: MAX_CAMPAIGN_N,
        }
    }

    /// How the graphs of order `n` are chosen.
    pub fn population(&self, n: usize) -> Population {
        match self.sample_limit {
            None if n <= EXHAUSTIVE_MAX_N => Population::Exhaustive,
            None => Population::Sampled(DEFAULT_SAMPLE_LIMIT),
            Some(_) if n < EXHAUSTIVE_MAX_N => Population::Exhaustive,
            Some(k) => Population::Sampled(k),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Population {
    Exhaustive,
    Sampled(usize),
}

/// One line of the report: a check on a graph.
#[derive(Debug, Clone, Serialize)]
pub struct Row {
    pub graph: u64,
    pub n: usize,
    pub state_index: u64,
    pub edges: String,
    pub theorem: String,
    pub relation: String,
    pub status: String,
    pub satisfied: bool,
    pub skipped: bool,
    pub asserted: bool,
    pub lhs: Num,
    pub rhs: Num,
    pub slack: Num,
    pub reason: Option<String>,
}

/// `1--2;2->3` with edges sorted by endpoint pair.
pub fn compact_edges(g: &MixedGraph) -> String {
    g.canonical_edges()
        .iter()
        .map(|e| e.to_string().replace(' ', ""))
        .collect::<Vec<_>>()
        .join(";")
}

fn rows_for(ordinal: u64, g: &MixedGraph) -> Vec<Row> {
    let base = |theorem: String, status: Status, reason: Option<String>| Row {
        graph: ordinal,
        n: g.order(),
        state_index: state_index(g),
        edges: compact_edges(g),
        theorem,
        relation: String::new(),
        status: status.as_str().into(),
        satisfied: matches!(status, Status::Pass | Status::Skip),
        skipped: status == Status::Skip,
        asserted: true,
        lhs: Num(f64::NAN),
        rhs: Num(f64::NAN),
        slack: Num(f64::NAN),
        reason,
    };
    match run_theorem_suite(g) {
        Ok(report) => report
            .records
            .iter()
            .map(|r: &TheoremRecord| Row {
                relation: r.relation.into(),
                asserted: r.asserted,
                lhs: Num(r.lhs),
                rhs: Num(r.rhs),
                slack: Num(r.slack),
                ..base(r.id.clone(), r.status, r.reason.clone())
            })
            .collect(),
        // graphs outside the suite's preconditions get one skip row
        Err(e) => vec![base("suite".into(), Status::Skip, Some(e.to_string()))],
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct TheoremSummary {
    pub checks: u64,
    pub failures: u64,
    pub skips: u64,
    pub divergences: u64,
    pub max_abs_slack: Num,
    pub min_slack: Num,
}

impl Default for Num {
    fn default() -> Self {
        Num(f64::NAN)
    }
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub graphs: u64,
    pub checks: u64,
    pub failures: u64,
    pub skips: u64,
    pub divergences: u64,
    /// keyed by theorem family (`interlacing:u-v` folds into `interlacing`)
    pub theorems: BTreeMap<String, TheoremSummary>,
}

impl Summary {
    fn add(&mut self, row: &Row) {
        self.checks += 1;
        let family = row.theorem.split(':').next().unwrap_or("").to_string();
        let t = self.theorems.entry(family).or_default();
        t.checks += 1;
        match row.status.as_str() {
            "fail" if row.asserted => {
                self.failures += 1;
                t.failures += 1;
            }
            "skip" => {
                self.skips += 1;
                t.skips += 1;
            }
            "divergence" => {
                self.divergences += 1;
                t.divergences += 1;
            }
            _ => {}
        }
        let s = row.slack.0;
        if s.is_finite() {
            let fold = |cur: f64, x: f64, pick: fn(f64, f64) -> f64| if cur.is_nan() { x } else { pick(cur, x) };
            t.max_abs_slack = Num(fold(t.max_abs_slack.0, s.abs(), f64::max));
            t.min_slack = Num(fold(t.min_slack.0, s, f64::min));
        }
    }

    pub fn render_text(&self) -> String {
        let mut out = format!(
            "graphs: {}\nchecks: {}\nfailures: {}\nskips: {}\ndivergences: {}\n",
            self.graphs, self.checks, self.failures, self.skips, self.divergences
        );
        out.push_str(&format!(
            "{:<28} {:>9} {:>9} {:>9} {:>11} {:>24} {:>24}\n",
            "theorem", "checks", "failures", "skips", "divergences", "max |slack|", "min slack"
        ));
        for (k, t) in &self.theorems {
            out.push_str(&format!(
                "{:<28} {:>9} {:>9} {:>9} {:>11} {:>24} {:>24}\n",
                k,
                t.checks,
                t.failures,
                t.skips,
                t.divergences,
                crate::report::num(t.max_abs_slack.0),
                crate::report::num(t.min_slack.0)
            ));
        }
        out
    }
}

/// Graphs of order `n` in report order: ascending state index.
fn graphs_of_order(cfg: &CampaignConfig, n: usize) -> Result<Box<dyn Iterator<Item = MixedGraph> + Send>, CliError> {
    let opts = cfg.options();
    match cfg.population(n) {
        Population::Exhaustive => {
            let total = mixed_graph_count(n).map_err(|e| CliError::Precondition(e.to_string()))?;
            Ok(Box::new((0..total).filter_map(move |idx| {
                let g = graph_from_state_index(n, idx).expect("index below total");
                opts.accepts(&g).then_some(g)
            })))
        }
        Population::Sampled(k) => {
            let seed = cfg.seed.wrapping_add(n as u64);
            let gs = sample_mixed_graphs(n, opts, k, seed).map_err(|e| CliError::Precondition(e.to_string()))?;
            Ok(Box::new(gs.into_iter()))
        }
    }
}

trait Sink {
    fn write_row(&mut self, row: &Row) -> Result<(), CliError>;
    fn finish(&mut self, summary: &Summary) -> Result<(), CliError>;
}

fn io_err(e: impl std::fmt::Display) -> CliError {
    CliError::Output(e.to_string())
}

struct JsonSink<W: Write> {
    out: W,
    first: bool,
}

impl<W: Write> JsonSink<W> {
    fn new(mut out: W, cfg: &CampaignConfig) -> Result<Self, CliError> {
        out.write_all(b"{\"config\":").map_err(io_err)?;
        serde_json::to_writer(&mut out, cfg).map_err(io_err)?;
        out.write_all(b",\"records\":[").map_err(io_err)?;
        Ok(JsonSink { out, first: true })
    }
}

impl<W: Write> Sink for JsonSink<W> {
    fn write_row(&mut self, row: &Row) -> Result<(), CliError> {
        self.out
            .write_all(if self.first { b"\n" } else { b",\n" })
            .map_err(io_err)?;
        self.first = false;
        serde_json::to_writer(&mut self.out, row).map_err(io_err)
    }

    fn finish(&mut self, summary: &Summary) -> Result<(), CliError> {
        self.out.write_all(b"\n],\"summary\":").map_err(io_err)?;
        serde_json::to_writer(&mut self.out, summary).map_err(io_err)?;
        self.out.write_all(b"}\n").map_err(io_err)?;
        self.out.flush().map_err(io_err)
    }
}

struct CsvSink<W: Write> {
    out: csv::Writer<W>,
}

impl<W: Write> Sink for CsvSink<W> {
    fn write_row(&mut self, row: &Row) -> Result<(), CliError> {
        self.out.serialize(CsvRow::from(row)).map_err(io_err)
    }

    fn finish(&mut self, _: &Summary) -> Result<(), CliError> {
        self.out.flush().map_err(io_err)
    }
}

/// The CSV form of [`Row`]: identical fields, numbers pre-rendered.
#[derive(Serialize)]
struct CsvRow<'a> {
    graph: u64,
    n: usize,
    state_index: u64,
    edges: &'a str,
    theorem: &'a str,
    relation: &'a str,
    status: &'a str,
    satisfied: bool,
    skipped: bool,
    asserted: bool,
    lhs: String,
    rhs: String,
    slack: String,
    reason: &'a str,
}

fn csv_num(x: Num) -> String {
    if x.0.is_finite() {
        randic_core::numfmt::g17(x.0)
    } else {
        String::new()
    }
}

impl<'a> From<&'a Row> for CsvRow<'a> {
    fn from(r: &'a Row) -> Self {
        CsvRow {
            graph: r.graph,
            n: r.n,
            state_index: r.state_index,
            edges: &r.edges,
            theorem: &r.theorem,
            relation: &r.relation,
            status: &r.status,
            satisfied: r.satisfied,
            skipped: r.skipped,
            asserted: r.asserted,
            lhs: csv_num(r.lhs),
            rhs: csv_num(r.rhs),
            slack: csv_num(r.slack),
            reason: r.reason.as_deref().unwrap_or(""),
        }
    }
}

/// Run the campaign, streaming the report into `out`. Output bytes depend
/// only on the config, not on the thread count.
pub fn run_campaign<W: Write>(cfg: &CampaignConfig, out: W) -> Result<Summary, CliError> {
    cfg.validate()?;
    let mut sink: Box<dyn Sink + '_> = match cfg.format {
        ReportFormat::Json => Box::new(JsonSink::new(out, cfg)?),
        ReportFormat::Csv => Box::new(CsvSink {
            out: csv::Writer::from_writer(out),
        }),
    };
    let mut builder = rayon::ThreadPoolBuilder::new();
    if let Some(t) = cfg.threads {
        builder = builder.num_threads(t);
    }
    let pool = builder.build().map_err(|e| CliError::Precondition(e.to_string()))?;

    let mut summary = Summary::default();
    let mut ordinal = 0u64;
    for n in cfg.n_min..=cfg.n_max {
        let mut graphs = graphs_of_order(cfg, n)?;
        loop {
            let chunk: Vec<MixedGraph> = graphs.by_ref().take(CHUNK).collect();
            if chunk.is_empty() {
                break;
            }
            let start = ordinal;
            let rows: Vec<Vec<Row>> = pool.install(|| {
                chunk
                    .par_iter()
                    .enumerate()
                    .map(|(i, g)| rows_for(start + i as u64, g))
                    .collect()
            });
            ordinal += chunk.len() as u64;
            for row in rows.iter().flatten() {
                summary.add(row);
                sink.write_row(row)?;
            }
        }
    }
    summary.graphs = ordinal;
    sink.finish(&summary)?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_config() {
        let cfg = CampaignConfig::parse(
            "campaign v1\nn_range 2..3\nconnected_only false # all of them\nmin_degree 1\nseed 9\nformat csv\nthreads 2\n",
        )
        .unwrap();
        assert_eq!((cfg.n_min, cfg.n_max, cfg.connected_only, cfg.min_degree), (2, 3, false, 1));
        assert_eq!((cfg.seed, cfg.format, cfg.threads), (9, ReportFormat::Csv, Some(2)));
        assert!(matches!(CampaignConfig::parse("n_range 2..3"), Err(CliError::Parse(_))));
        assert!(matches!(
            CampaignConfig::parse("campaign v1\ncolour blue"),
            Err(CliError::Parse(_))
        ));
        assert!(matches!(
            CampaignConfig::parse("campaign v1\nn_range 2..9"),
            Err(CliError::Precondition(_))
        ));
    }

    #[test]
    fn population_rule() {
        let mut cfg = CampaignConfig::default();
        assert_eq!(cfg.population(5), Population::Exhaustive);
        assert_eq!(cfg.population(6), Population::Sampled(500));
        cfg.sample_limit = Some(40);
        assert_eq!(cfg.population(4), Population::Exhaustive);
        assert_eq!(cfg.population(5), Population::Sampled(40));
    }

    #[test]
    fn two_vertex_campaign() {
        let cfg = CampaignConfig {
            n_min: 2,
            n_max: 2,
            ..Default::default()
        };
        let mut buf = Vec::new();
        let s = run_campaign(&cfg, &mut buf).unwrap();
        assert_eq!((s.graphs, s.failures), (3, 0));
        let v: serde_json::Value = serde_json::from_slice(&buf).unwrap();
        assert_eq!(v["summary"]["graphs"], 3);
    }
}
