//! Characteristic polynomial `x^n + a_1 x^{n-1} + ... + a_n` of the Randić
//! matrix, by two independent routes:
//!
//! * numeric: expand `prod (x - λ_i)` over the computed spectrum;
//! * combinatorial: exact rational sum over elementary subgraphs,
//!   `(-1)^k a_k = Σ (-1)^{r + l_n + l_sn} 2^{l_n + l_p} Q` over the
//!   order-`k` elementary subgraphs.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};

use super::eigen_decompose;
use crate::error::{Error, Result};
use crate::graph::{enumerate_elementary_subgraphs, for_each_elementary_subgraph, ElementarySubgraph, MixedGraph};
use crate::matrix::HermitianMatrix;

/// Largest order accepted by the combinatorial route.
pub const COMBINATORIAL_CAP: usize = 10;

#[derive(Debug, Clone, PartialEq)]
pub enum CharPoly {
    /// `a_0 = 1, a_1, ..., a_n` as exact rationals.
    Exact(Vec<BigRational>),
    /// `a_0 = 1, a_1, ..., a_n` as doubles.
    Numeric(Vec<f64>),
}

impl CharPoly {
    pub fn degree(&self) -> usize {
        match self {
            CharPoly::Exact(c) => c.len() - 1,
            CharPoly::Numeric(c) => c.len() - 1,
        }
    }

    pub fn to_f64(&self) -> Vec<f64> {
        match self {
            CharPoly::Exact(c) => c.iter().map(|q| q.to_f64().unwrap_or(f64::NAN)).collect(),
            CharPoly::Numeric(c) => c.clone(),
        }
    }

    pub fn exact(&self) -> Option<&[BigRational]> {
        match self {
            CharPoly::Exact(c) => Some(c),
            CharPoly::Numeric(_) => None,
        }
    }

    /// `max_k |a_k - b_k|`; infinite when the degrees differ.
    pub fn max_discrepancy(&self, other: &CharPoly) -> f64 {
        let (a, b) = (self.to_f64(), other.to_f64());
        if a.len() != b.len() {
            return f64::INFINITY;
        }
        a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
    }
}

fn two_sum(a: f64, b: f64) -> (f64, f64) {
    let s = a + b;
    let bb = s - a;
    (s, (a - (s - bb)) + (b - bb))
}

/// Coefficients of `prod (x - λ_i)` with error-free transformations carried
/// in a second array.
fn expand_roots(roots: &[f64]) -> Vec<f64> {
    let n = roots.len();
    let mut hi = vec![0.0; n + 1];
    let mut lo = vec![0.0; n + 1];
    hi[0] = 1.0;
    for (m, &lambda) in roots.iter().enumerate() {
        // multiply the degree-m polynomial by (x - lambda)
        for k in (1..=m + 1).rev() {
            let p = -lambda * hi[k - 1];
            let pe = (-lambda).mul_add(hi[k - 1], -p);
            let (s, se) = two_sum(hi[k], p);
            lo[k] = lo[k] - lambda * lo[k - 1] + pe + se;
            hi[k] = s;
        }
    }
    hi.iter().zip(&lo).map(|(h, l)| h + l).collect()
}

/// Numeric route: coefficients from the eigenvalues of `h`.
pub fn char_poly_numeric(h: &HermitianMatrix) -> Result<CharPoly> {
    let s = eigen_decompose(h)?;
    Ok(CharPoly::Numeric(expand_roots(&s.eigenvalues)))
}

fn signed_term(x: &ElementarySubgraph) -> BigRational {
    let mut t = x.q.clone() * BigRational::from_integer(BigInt::one() << (x.l_n + x.l_p));
    if (x.r + x.l_n + x.l_sn) % 2 == 1 {
        t = -t;
    }
    t
}

fn check_preconditions(g: &MixedGraph, cap: usize) -> Result<()> {
    if g.order() > cap {
        return Err(Error::CapExceeded {
            what: "combinatorial characteristic polynomial",
            n: g.order(),
            cap,
        });
    }
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(())
}

pub fn char_poly_combinatorial(g: &MixedGraph) -> Result<CharPoly> {
    char_poly_combinatorial_with_cap(g, COMBINATORIAL_CAP)
}

pub fn char_poly_combinatorial_with_cap(g: &MixedGraph, cap: usize) -> Result<CharPoly> {
    check_preconditions(g, cap)?;
    let n = g.order();
    let mut sums = vec![BigRational::zero(); n + 1];
    for_each_elementary_subgraph(g, |x| {
        sums[x.order] += signed_term(&x);
    });
    // sums[k] holds (-1)^k a_k; the empty subgraph gives a_0 = 1
    let coeffs = sums
        .into_iter()
        .enumerate()
        .map(|(k, s)| if k % 2 == 1 { -s } else { s })
        .collect();
    Ok(CharPoly::Exact(coeffs))
}

/// Sum over spanning elementary subgraphs only.
pub fn determinant_combinatorial(g: &MixedGraph) -> Result<BigRational> {
    check_preconditions(g, COMBINATORIAL_CAP)?;
    Ok(enumerate_elementary_subgraphs(g, g.order())
        .iter()
        .map(signed_term)
        .fold(BigRational::zero(), |acc, t| acc + t))
}
