//! Acceptance criteria, one PASS/FAIL line each. Runs as a plain binary so
//! the lines land in the test log; exits non-zero if any criterion fails.

use std::fs;
use std::process::{exit, Command};
use std::time::{Duration, Instant};

use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use randic_core::bounds::GraphAnalysis;
use randic_core::graph::{enumerate_mixed_graphs, sample_mixed_graphs, EnumerationOptions};
use randic_core::matrix::build_incidence;
use randic_core::spectral::{char_poly_combinatorial, char_poly_numeric, determinant_combinatorial};
use randic_core::{
    build_randic, eigen_decompose, parse_graph, run_theorem_suite, Error, MixedGraph, Status, SuiteReport,
};

const SEED: u64 = 20240601;

type Criterion<'a> = (&'static str, Box<dyn Fn() -> Outcome + 'a>);

struct Outcome {
    pass: bool,
    detail: String,
}

fn graph(text: &str) -> MixedGraph {
    parse_graph(&format!("mixedgraph v1\n{text}")).unwrap()
}

fn connected(n: usize) -> Vec<MixedGraph> {
    enumerate_mixed_graphs(n, EnumerationOptions::connected()).unwrap().collect()
}

/// Exhaustive connected graphs for `n <= 4`, 500 seeded samples for 5 and 6.
fn population() -> Vec<MixedGraph> {
    let mut out: Vec<MixedGraph> = (2..=4).flat_map(connected).collect();
    for n in 5..=6 {
        out.extend(sample_mixed_graphs(n, EnumerationOptions::connected(), 500, SEED + n as u64).unwrap());
    }
    out
}

fn ratio(p: i64, q: i64) -> BigRational {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

fn fmt_secs(d: Duration) -> String {
    format!("{:.2}s", d.as_secs_f64())
}

fn exact_spectra() -> Outcome {
    let t = Instant::now();
    let cases: [(&str, &str, Vec<f64>); 5] = [
        ("P2", "vertices 2\n1 -- 2", vec![-1.0, 1.0]),
        ("C3", "vertices 3\n1 -- 2\n2 -- 3\n1 -- 3", vec![-0.5, -0.5, 1.0]),
        ("directed C3", "vertices 3\n1 -> 2\n2 -> 3\n3 -> 1", vec![-1.0, 0.5, 0.5]),
        ("P3", "vertices 3\n1 -- 2\n2 -- 3", vec![-1.0, 0.0, 1.0]),
        ("C4", "vertices 4\n1 -- 2\n2 -- 3\n3 -- 4\n4 -- 1", vec![-1.0, 0.0, 0.0, 1.0]),
    ];
    let mut worst = 0.0f64;
    let mut bad = Vec::new();
    for (name, text, want) in &cases {
        let s = eigen_decompose(&build_randic(&graph(text)).unwrap()).unwrap();
        let err = s
            .eigenvalues
            .iter()
            .zip(want)
            .map(|(a, b)| (a - b).abs())
            .fold(0.0, f64::max);
        worst = worst.max(err);
        if s.len() != want.len() || err > 1e-10 {
            bad.push(*name);
        }
    }
    let elapsed = t.elapsed();
    Outcome {
        pass: bad.is_empty() && elapsed < Duration::from_secs(1),
        detail: format!("max error {worst:.1e}, mismatches {bad:?}, {}", fmt_secs(elapsed)),
    }
}

fn two_route_charpoly(pop: &[MixedGraph]) -> Outcome {
    let t = Instant::now();
    let mut worst = 0.0f64;
    let mut over = 0;
    for g in pop {
        let exact = char_poly_combinatorial(g).unwrap();
        let numeric = char_poly_numeric(&build_randic(g).unwrap()).unwrap();
        let d = exact.max_discrepancy(&numeric);
        worst = worst.max(d);
        if d > 1e-8 {
            over += 1;
        }
    }
    let elapsed = t.elapsed();
    Outcome {
        pass: over == 0 && elapsed < Duration::from_secs(300),
        detail: format!(
            "{} graphs, max discrepancy {worst:.1e}, {over} over 1e-8, {}",
            pop.len(),
            fmt_secs(elapsed)
        ),
    }
}

fn determinant_identity(pop: &[MixedGraph]) -> Outcome {
    use num_traits::ToPrimitive;
    let mut worst = 0.0f64;
    let mut over = 0;
    for g in pop {
        let det = determinant_combinatorial(g).unwrap().to_f64().unwrap();
        let prod = eigen_decompose(&build_randic(g).unwrap()).unwrap().product();
        let d = (det - prod).abs();
        worst = worst.max(d);
        if d > 1e-9 {
            over += 1;
        }
    }
    let exact = [
        ("P2", "vertices 2\n1 -- 2", ratio(-1, 1)),
        ("C3", "vertices 3\n1 -- 2\n2 -- 3\n1 -- 3", ratio(1, 4)),
        ("directed C3", "vertices 3\n1 -> 2\n2 -> 3\n3 -> 1", ratio(-1, 4)),
        ("one-arc C3", "vertices 3\n1 -> 2\n2 -- 3\n1 -- 3", ratio(1, 8)),
    ];
    let wrong: Vec<_> = exact
        .iter()
        .filter(|(_, text, want)| determinant_combinatorial(&graph(text)).unwrap() != *want)
        .map(|(name, _, _)| *name)
        .collect();
    Outcome {
        pass: over == 0 && wrong.is_empty(),
        detail: format!("max |det - Πλ| {worst:.1e}, {over} over 1e-9, exact mismatches {wrong:?}"),
    }
}

fn count(reports: &[SuiteReport], pred: impl Fn(&randic_core::TheoremRecord) -> bool, ids: &[&str]) -> usize {
    reports
        .iter()
        .flat_map(|r| r.records.iter())
        .filter(|r| ids.contains(&r.id.as_str()) && pred(r))
        .count()
}

fn range_and_traces(pop: &[MixedGraph]) -> Outcome {
    let mut bad = [0usize; 3];
    for g in pop {
        let a = GraphAnalysis::new(g).unwrap();
        let s = &a.spectrum;
        if s.eigenvalues.iter().any(|&l| !(-1.0 - 1e-9..=1.0 + 1e-9).contains(&l)) {
            bad[0] += 1;
        }
        if s.sum().abs() > 1e-9 {
            bad[1] += 1;
        }
        if (s.sum_of_squares() - 2.0 * a.randic_inverse).abs() > 1e-9 {
            bad[2] += 1;
        }
    }
    Outcome {
        pass: bad == [0, 0, 0],
        detail: format!(
            "{} graphs; violations: range {}, Σλ {}, Σλ² {}",
            pop.len(),
            bad[0],
            bad[1],
            bad[2]
        ),
    }
}

fn interlacing() -> Outcome {
    let t = Instant::now();
    let (mut graphs, mut edges, mut skipped, mut violations) = (0usize, 0usize, 0usize, 0usize);
    let mut worst = f64::INFINITY;
    for n in 2..=5 {
        for g in enumerate_mixed_graphs(n, EnumerationOptions::connected()).unwrap() {
            graphs += 1;
            let a = GraphAnalysis::new(&g).unwrap();
            for e in g.edges() {
                let (u, v) = e.pair();
                match a.interlacing(u, v) {
                    Ok(r) => {
                        edges += 1;
                        worst = worst.min(r.min_margin());
                        if !r.all_hold() {
                            violations += 1;
                        }
                    }
                    Err(Error::IsolatedVertex(_)) => skipped += 1,
                    Err(e) => panic!("{e}"),
                }
            }
        }
    }
    Outcome {
        pass: violations == 0 && edges > 0,
        detail: format!(
            "{graphs} graphs, {edges} deletable edges ({skipped} would isolate a vertex), \
             {violations} violations, min margin {worst:.1e}, {}",
            fmt_secs(t.elapsed())
        ),
    }
}

fn factorization() -> Outcome {
    let t = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(SEED);
    let (mut graphs, mut over) = (0usize, 0usize);
    let mut worst = 0.0f64;
    let opts = EnumerationOptions {
        min_degree: 1,
        ..Default::default()
    };
    for n in 2..=5 {
        for g in enumerate_mixed_graphs(n, opts).unwrap() {
            graphs += 1;
            let r = build_randic(&g).unwrap();
            let s = build_incidence(&g);
            let phases: Vec<Complex64> = (0..s.cols())
                .map(|_| Complex64::from_polar(1.0, rng.gen_range(0.0..std::f64::consts::TAU)))
                .collect();
            for inc in [s.clone(), s.regauge(&phases).unwrap()] {
                let d = inc.randic_factorization(&g).unwrap().max_abs_diff(&r);
                worst = worst.max(d);
                if d > 1e-12 {
                    over += 1;
                }
            }
        }
    }
    Outcome {
        pass: over == 0,
        detail: format!(
            "{graphs} graphs × 2 gauges, max entry error {worst:.1e}, {over} over 1e-12, {}",
            fmt_secs(t.elapsed())
        ),
    }
}

const STRUCTURAL: [&str; 4] = [
    "spectrum_matches_underlying",
    "eigenvalue_one_simple",
    "bipartite_symmetric",
    "minus_one_antibalanced",
];

fn structural(pop: &[MixedGraph], reports: &[SuiteReport]) -> Outcome {
    let per_id: Vec<String> = STRUCTURAL
        .iter()
        .map(|id| format!("{id} {}", count(reports, |r| r.status == Status::Fail, &[id])))
        .collect();
    let violations = count(reports, |r| r.status == Status::Fail, &STRUCTURAL);

    // the divergence shows up exactly when -1 ∈ spectrum and the graph is not
    // positive bipartite (or the reverse), once per such graph
    let mut divergences = 0;
    let mut misreported = 0;
    for (g, rep) in pop.iter().zip(reports) {
        let m1 = GraphAnalysis::new(g).unwrap().minus_one().unwrap();
        let expected = usize::from(m1.has_minus_one != m1.positive_bipartite);
        let seen = rep.records.iter().filter(|r| r.status == Status::Divergence).count();
        divergences += seen;
        if seen != expected {
            misreported += 1;
        }
    }
    let triangle = run_theorem_suite(&graph("vertices 3\n1 -> 2\n2 -> 3\n3 -> 1")).unwrap();
    let triangle_ok = triangle
        .records
        .iter()
        .filter(|r| r.status == Status::Divergence)
        .map(|r| r.id.as_str())
        .eq(["minus_one_positive_bipartite"]);
    Outcome {
        pass: violations == 0 && misreported == 0 && triangle_ok,
        detail: format!(
            "{} graphs; violations: {}; {divergences} divergences, {misreported} misreported, \
             directed triangle reproduced: {triangle_ok}",
            pop.len(),
            per_id.join(", ")
        ),
    }
}

fn tight(r: &SuiteReport, id: &str) -> bool {
    r.get(id)
        .map(|x| x.status == Status::Pass && x.slack.abs() <= 1e-9)
        .unwrap_or(false)
}

fn bound_suite(reports: &[SuiteReport]) -> Outcome {
    let is_bound = |id: &str| {
        matches!(id, "gamma_lower" | "gamma_order" | "gamma_upper" | "spread" | "smallest_eigenvalue")
            || id.starts_with("energy_")
    };
    let (mut checked, mut skipped, mut bad) = (0usize, 0usize, 0usize);
    let mut worst = f64::INFINITY;
    for r in reports.iter().flat_map(|r| r.records.iter()).filter(|r| is_bound(&r.id)) {
        if r.skipped() {
            skipped += 1;
            continue;
        }
        checked += 1;
        worst = worst.min(r.slack);
        if r.status != Status::Pass || r.slack < -1e-9 {
            bad += 1;
        }
    }

    let c3 = run_theorem_suite(&graph("vertices 3\n1 -- 2\n2 -- 3\n1 -- 3")).unwrap();
    let p2 = run_theorem_suite(&graph("vertices 2\n1 -- 2")).unwrap();
    let mut loose: Vec<String> = [
        "energy_negative_lower",
        "energy_sigma_lower",
        "energy_polya_szego_lower",
        "gamma_lower",
        "gamma_upper",
    ]
    .iter()
    .filter(|id| !tight(&c3, id))
    .map(|id| format!("C3 {id}"))
    .collect();
    loose.extend(
        ["energy_det_lower", "energy_randic_upper", "energy_polya_szego_lower", "energy_ozeki_lower"]
            .iter()
            .filter(|id| !tight(&p2, id))
            .map(|id| format!("P2 {id}")),
    );
    Outcome {
        pass: bad == 0 && loose.is_empty(),
        detail: format!(
            "{checked} bound checks ({skipped} skipped by rule), {bad} violations, \
             min slack {worst:.1e}, tightness misses {loose:?}"
        ),
    }
}

fn determinism() -> Outcome {
    let dir = tempfile::TempDir::new().unwrap();
    let mut outputs = Vec::new();
    let mut failures = Vec::new();
    for (format, threads) in [("json", "1"), ("json", "1"), ("json", "4"), ("csv", "1"), ("csv", "4")] {
        let out = dir.path().join(format!("report-{}.{format}", outputs.len()));
        let cfg = dir.path().join("campaign.cfg");
        fs::write(
            &cfg,
            format!(
                "campaign v1\nn_range 2..6\nconnected_only true\nmin_degree 1\nsample_limit 150\n\
                 seed 7\nformat {format}\noutput {}\n",
                out.display()
            ),
        )
        .unwrap();
        let status = Command::new(env!("CARGO_BIN_EXE_randic"))
            .args(["enumerate", cfg.to_str().unwrap(), "--threads", threads])
            .output()
            .unwrap()
            .status;
        if !status.success() {
            failures.push(format!("{format}/{threads}: exit {status}"));
        }
        outputs.push((format, threads, fs::read(&out).unwrap_or_default()));
    }
    let same = |a: usize, b: usize| !outputs[a].2.is_empty() && outputs[a].2 == outputs[b].2;
    let pairs = [(0, 1, "json run 1 vs run 2"), (0, 2, "json threads 1 vs 4"), (3, 4, "csv threads 1 vs 4")];
    for (a, b, what) in pairs {
        if !same(a, b) {
            failures.push(what.to_string());
        }
    }
    Outcome {
        pass: failures.is_empty(),
        detail: format!(
            "report sizes {:?} bytes, differences {failures:?}",
            outputs.iter().map(|o| o.2.len()).collect::<Vec<_>>()
        ),
    }
}

fn main() {
    let pop = population();
    let reports: Vec<SuiteReport> = pop.iter().map(|g| run_theorem_suite(g).unwrap()).collect();

    let criteria: Vec<Criterion> = vec![
        ("1 exact small-graph spectra", Box::new(exact_spectra)),
        ("2 two-route characteristic polynomial", Box::new(|| two_route_charpoly(&pop))),
        ("3 determinant identity", Box::new(|| determinant_identity(&pop))),
        ("4 eigenvalue range and trace identities", Box::new(|| range_and_traces(&pop))),
        ("5 edge-deletion interlacing, all connected n <= 5", Box::new(interlacing)),
        ("6 incidence factorization, all n <= 5", Box::new(factorization)),
        ("7 structural biconditionals", Box::new(|| structural(&pop, &reports))),
        ("8 bound suite and tightness", Box::new(|| bound_suite(&reports))),
        ("9 campaign determinism", Box::new(determinism)),
    ];
    let mut failed = 0;
    for (name, check) in &criteria {
        let o = check();
        println!("{} criterion {name}: {}", if o.pass { "PASS" } else { "FAIL" }, o.detail);
        failed += usize::from(!o.pass);
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed > 0 {
        exit(1);
    }
}
