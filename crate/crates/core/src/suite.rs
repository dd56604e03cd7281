//! The full battery of checks on one graph, as a flat list of records.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bounds::{le_holds, GraphAnalysis, INEQUALITY_TOL};
use crate::error::{Error, Result};
use crate::matrix::build_incidence;
use crate::spectral::{
    char_poly_combinatorial, char_poly_numeric, determinant_combinatorial, COMBINATORIAL_CAP,
};

/// Two-route characteristic polynomial agreement.
pub const CHARPOLY_TOL: f64 = 1e-8;
/// Entrywise agreement of the incidence factorization.
pub const FACTORIZATION_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Skip,
    /// Observed disagreement with a claim that is recorded, not asserted.
    Divergence,
}

impl Status {
    pub fn as_str(self) -> &'static str {
        match self {
            Status::Pass => "pass",
            Status::Fail => "fail",
            Status::Skip => "skip",
            Status::Divergence => "divergence",
        }
    }
}

/// One check. Booleans are encoded as `0`/`1`, so an implication `A => B`
/// reads `lhs <= rhs` and an equivalence reads `lhs == rhs`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct TheoremRecord {
    pub id: String,
    /// `<=`, `<`, `==`, `=>` or `<=>`
    pub relation: &'static str,
    pub status: Status,
    pub lhs: f64,
    pub rhs: f64,
    /// `rhs - lhs` for inequalities and implications, `-|lhs - rhs|` for
    /// equalities
    pub slack: f64,
    pub reason: Option<String>,
    /// whether a failure here counts against the graph
    pub asserted: bool,
}

impl TheoremRecord {
    pub fn satisfied(&self) -> bool {
        matches!(self.status, Status::Pass | Status::Skip)
    }

    pub fn skipped(&self) -> bool {
        self.status == Status::Skip
    }

    fn new(id: impl Into<String>, relation: &'static str, lhs: f64, rhs: f64, slack: f64, ok: bool) -> Self {
        TheoremRecord {
            id: id.into(),
            relation,
            status: if ok { Status::Pass } else { Status::Fail },
            lhs,
            rhs,
            slack,
            reason: None,
            asserted: true,
        }
    }

    fn le(id: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        TheoremRecord::new(id, "<=", lhs, rhs, rhs - lhs, le_holds(lhs, rhs))
    }

    fn eq(id: impl Into<String>, lhs: f64, rhs: f64, tol: f64) -> Self {
        let d = (lhs - rhs).abs();
        TheoremRecord::new(id, "==", lhs, rhs, -d, d <= tol)
    }

    fn implies(id: impl Into<String>, a: bool, b: bool) -> Self {
        let (l, r) = (a as u8 as f64, b as u8 as f64);
        TheoremRecord::new(id, "=>", l, r, r - l, !a || b)
    }

    fn iff(id: impl Into<String>, a: bool, b: bool) -> Self {
        let (l, r) = (a as u8 as f64, b as u8 as f64);
        TheoremRecord::new(id, "<=>", l, r, -(l - r).abs(), a == b)
    }

    fn skip(id: impl Into<String>, relation: &'static str, reason: String) -> Self {
        TheoremRecord {
            id: id.into(),
            relation,
            status: Status::Skip,
            lhs: f64::NAN,
            rhs: f64::NAN,
            slack: f64::NAN,
            reason: Some(reason),
            asserted: true,
        }
    }

    fn because(mut self, reason: impl Into<String>) -> Self {
        self.reason = Some(reason.into());
        self
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SuiteReport {
    pub records: Vec<TheoremRecord>,
}

impl SuiteReport {
    pub fn get(&self, id: &str) -> Option<&TheoremRecord> {
        self.records.iter().find(|r| r.id == id)
    }

    /// Asserted records that failed.
    pub fn failures(&self) -> impl Iterator<Item = &TheoremRecord> {
        self.records
            .iter()
            .filter(|r| r.asserted && r.status == Status::Fail)
    }

    pub fn passed(&self) -> bool {
        self.failures().next().is_none()
    }
}

/// Run every check on a connected graph with `n >= 2`. Checks relying on the
/// combinatorial route are skipped above its cap.
pub fn run_theorem_suite(g: &crate::graph::MixedGraph) -> Result<SuiteReport> {
    let a = GraphAnalysis::new(g)?;
    let s = &a.spectrum;
    let n = a.n();
    let mut out = Vec::new();

    out.push(TheoremRecord::le("eigenvalue_range", s.rho, 1.0));
    out.push(TheoremRecord::eq("trace_zero", s.sum(), 0.0, INEQUALITY_TOL));
    out.push(TheoremRecord::eq(
        "trace_square",
        s.sum_of_squares(),
        2.0 * a.randic_inverse,
        INEQUALITY_TOL,
    ));

    if n <= COMBINATORIAL_CAP {
        let exact = char_poly_combinatorial(g)?;
        let numeric = char_poly_numeric(&a.randic)?;
        out.push(TheoremRecord::eq(
            "charpoly_two_route",
            exact.max_discrepancy(&numeric),
            0.0,
            CHARPOLY_TOL,
        ));
        let det = determinant_combinatorial(g)?.to_f64().unwrap_or(f64::NAN);
        out.push(TheoremRecord::eq("determinant_two_route", det, s.product(), INEQUALITY_TOL));
    } else {
        let why = format!("n = {n} exceeds the combinatorial cap {COMBINATORIAL_CAP}");
        out.push(TheoremRecord::skip("charpoly_two_route", "==", why.clone()));
        out.push(TheoremRecord::skip("determinant_two_route", "==", why));
    }

    let factored = build_incidence(g).randic_factorization(g)?;
    out.push(TheoremRecord::eq(
        "incidence_factorization",
        factored.max_abs_diff(&a.randic),
        0.0,
        FACTORIZATION_TOL,
    ));

    for e in g.edges() {
        let (u, v) = e.pair();
        let id = format!("interlacing:{u}-{v}");
        match a.interlacing(u, v) {
            Ok(r) => {
                let m = r.min_margin();
                out.push(TheoremRecord::new(id, "<=", 0.0, m, m, r.all_hold()));
            }
            Err(Error::IsolatedVertex(w)) => out.push(TheoremRecord::skip(
                id,
                "<=",
                format!("deleting the edge isolates vertex {w}"),
            )),
            Err(err) => return Err(err),
        }
    }

    let one = a.eigenvalue_one();
    out.push(TheoremRecord::implies(
        "eigenvalue_one_simple",
        one.has_one,
        one.graph_positive && one.multiplicity == 1,
    ));

    let sym = a.spectral_symmetry();
    out.push(TheoremRecord::iff("bipartite_symmetric", sym.bipartite, sym.symmetric));

    let m1 = a.minus_one()?;
    out.push(TheoremRecord::iff(
        "minus_one_antibalanced",
        m1.has_minus_one,
        m1.antibalanced,
    ));
    let mut pb = TheoremRecord::iff(
        "minus_one_positive_bipartite",
        m1.has_minus_one,
        m1.positive_bipartite,
    );
    pb.asserted = false;
    if pb.status == Status::Fail {
        pb.status = Status::Divergence;
        pb.reason = Some(if m1.has_minus_one {
            "-1 is an eigenvalue but the graph is not positive bipartite".into()
        } else {
            "positive bipartite but -1 is not an eigenvalue".into()
        });
    }
    out.push(pb);

    let positive_bipartite = one.graph_positive && sym.bipartite;
    out.push(TheoremRecord::implies(
        "bipartite_positive_pm_one",
        positive_bipartite,
        one.has_one && m1.has_minus_one,
    ));

    let under = a.spectrum_vs_underlying()?;
    out.push(TheoremRecord::iff(
        "spectrum_matches_underlying",
        under.spectra_equal,
        under.switch_equiv_allones,
    ));

    let gamma = a.gamma();
    out.push(TheoremRecord::le("gamma_lower", gamma.lambda1, gamma.gamma1));
    out.push(TheoremRecord::le("gamma_order", gamma.gamma1, gamma.gamma2));
    out.push(TheoremRecord::le("gamma_upper", gamma.gamma2, gamma.lambda_n));
    out.push(TheoremRecord::le("spread", gamma.spread_bound, gamma.spread));

    let se = a.smallest_eigenvalue();
    out.push(TheoremRecord::le("smallest_eigenvalue", se.bound, se.lambda1_sq));

    for b in a.energy_bounds().bounds {
        let rec = if b.skipped {
            TheoremRecord::skip(b.name, b.relation, b.reason.unwrap_or_default())
        } else {
            let mut r = TheoremRecord::le(b.name, b.lhs, b.rhs);
            r.relation = b.relation;
            match b.reason {
                Some(why) => r.because(why),
                None => r,
            }
        };
        out.push(rec);
    }

    Ok(SuiteReport { records: out })
}
