//! Dense Hermitian matrices attached to a mixed graph: the Hermitian
//! adjacency matrix `H`, the Randić matrix `R = D^{-1/2} H D^{-1/2}`, the
//! Laplacians `L = D - H` and `I - R`, and the vertex-edge incidence matrix.
//!
//! Indices into matrices are 0-based (row `i` is vertex `i + 1`); graph-level
//! functions take 1-based vertex labels.

use std::fmt;
use std::ops::Index;

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::gain::{Gain, SixthRoot};
use crate::graph::{EdgeKind, MixedGraph};
use crate::numfmt::complex17;

#[derive(Clone, PartialEq)]
pub struct HermitianMatrix {
    n: usize,
    data: Vec<Complex64>,
}

impl HermitianMatrix {
    /// Build from the upper triangle. `f(i, j)` is called for `i <= j`; the
    /// lower triangle is its exact conjugate and the imaginary part of the
    /// diagonal is dropped.
    pub fn from_upper<F>(n: usize, mut f: F) -> HermitianMatrix
    where
        F: FnMut(usize, usize) -> Complex64,
    {
        let mut data = vec![Complex64::new(0.0, 0.0); n * n];
        for i in 0..n {
            data[i * n + i] = Complex64::new(f(i, i).re, 0.0);
            for j in i + 1..n {
                let z = f(i, j);
                data[i * n + j] = z;
                data[j * n + i] = z.conj();
            }
        }
        HermitianMatrix { n, data }
    }

    /// Accept a row-major dense matrix only if it is exactly Hermitian.
    pub fn try_from_dense(n: usize, data: Vec<Complex64>) -> Result<HermitianMatrix> {
        if data.len() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                actual: data.len(),
            });
        }
        for i in 0..n {
            for j in i..n {
                if data[i * n + j] != data[j * n + i].conj() {
                    return Err(Error::NotHermitian(i + 1, j + 1));
                }
            }
        }
        Ok(HermitianMatrix { n, data })
    }

    pub fn identity(n: usize) -> HermitianMatrix {
        HermitianMatrix::from_upper(n, |i, j| Complex64::new(if i == j { 1.0 } else { 0.0 }, 0.0))
    }

    pub fn dim(&self) -> usize {
        self.n
    }

    pub fn as_slice(&self) -> &[Complex64] {
        &self.data
    }

    pub fn row(&self, i: usize) -> &[Complex64] {
        &self.data[i * self.n..(i + 1) * self.n]
    }

    pub fn trace(&self) -> f64 {
        (0..self.n).map(|i| self.data[i * self.n + i].re).sum()
    }

    /// `trace(A^2) = sum |a_ij|^2` for Hermitian `A`.
    pub fn trace_of_square(&self) -> f64 {
        self.data.iter().map(|z| z.norm_sqr()).sum()
    }

    /// Maximum absolute row sum.
    pub fn inf_norm(&self) -> f64 {
        (0..self.n)
            .map(|i| self.row(i).iter().map(|z| z.norm()).sum::<f64>())
            .fold(0.0, f64::max)
    }

    pub fn max_abs_diff(&self, other: &HermitianMatrix) -> f64 {
        assert_eq!(self.n, other.n, "dimension mismatch");
        self.data
            .iter()
            .zip(&other.data)
            .map(|(a, b)| (a - b).norm())
            .fold(0.0, f64::max)
    }

    pub fn mul_vec(&self, y: &[Complex64]) -> Vec<Complex64> {
        (0..self.n)
            .map(|i| self.row(i).iter().zip(y).map(|(a, b)| a * b).sum())
            .collect()
    }

    /// `y* A y`, real for Hermitian `A`.
    pub fn sesquilinear(&self, y: &[Complex64]) -> Result<f64> {
        if y.len() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: y.len(),
            });
        }
        let ay = self.mul_vec(y);
        Ok(y.iter().zip(&ay).map(|(a, b)| (a.conj() * b).re).sum())
    }

    /// Tab-separated `a+bi` entries, one row per line.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for i in 0..self.n {
            let row: Vec<String> = self.row(i).iter().map(|&z| complex17(z)).collect();
            out.push_str(&row.join("\t"));
            out.push('\n');
        }
        out
    }
}

impl Index<(usize, usize)> for HermitianMatrix {
    type Output = Complex64;

    fn index(&self, (i, j): (usize, usize)) -> &Complex64 {
        &self.data[i * self.n + j]
    }
}

impl fmt::Debug for HermitianMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "HermitianMatrix({}x{})", self.n, self.n)?;
        f.write_str(&self.dump())
    }
}

fn czero() -> Complex64 {
    Complex64::new(0.0, 0.0)
}

fn inv_sqrt_degrees(g: &MixedGraph) -> Result<Vec<f64>> {
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(g.degrees()
        .as_slice()
        .iter()
        .map(|&d| 1.0 / (d as f64).sqrt())
        .collect())
}

fn gain_entry(g: &MixedGraph, i: usize, j: usize) -> Complex64 {
    match g.edge_between(i + 1, j + 1) {
        None => czero(),
        Some(e) => match e.kind {
            EdgeKind::Unoriented => SixthRoot::ONE.to_complex(),
            EdgeKind::Arc if e.tail == i + 1 => SixthRoot::OMEGA.to_complex(),
            EdgeKind::Arc => SixthRoot::OMEGA_BAR.to_complex(),
        },
    }
}

/// `h_ij = 1` for `i -- j`, `ω` for `i -> j`, `ω̄` for `j -> i`, else 0.
pub fn build_hermitian_adjacency(g: &MixedGraph) -> HermitianMatrix {
    HermitianMatrix::from_upper(g.order(), |i, j| gain_entry(g, i, j))
}

/// `R_ij = h_ij / sqrt(d_i d_j)`.
pub fn build_randic(g: &MixedGraph) -> Result<HermitianMatrix> {
    let s = inv_sqrt_degrees(g)?;
    Ok(HermitianMatrix::from_upper(g.order(), |i, j| {
        gain_entry(g, i, j) * (s[i] * s[j])
    }))
}

/// `L = D - H`. Defined for every graph.
pub fn build_laplacian(g: &MixedGraph) -> HermitianMatrix {
    let d = g.degrees();
    HermitianMatrix::from_upper(g.order(), |i, j| {
        if i == j {
            Complex64::new(d.as_slice()[i] as f64, 0.0)
        } else {
            -gain_entry(g, i, j)
        }
    })
}

/// `D^{-1/2} L D^{-1/2}`, which equals `I - R`.
pub fn build_normalized_laplacian(g: &MixedGraph) -> Result<HermitianMatrix> {
    let s = inv_sqrt_degrees(g)?;
    let l = build_laplacian(g);
    Ok(HermitianMatrix::from_upper(g.order(), |i, j| {
        l[(i, j)] * (s[i] * s[j])
    }))
}

pub fn build_laplacians(g: &MixedGraph) -> Result<(HermitianMatrix, HermitianMatrix)> {
    Ok((build_laplacian(g), build_normalized_laplacian(g)?))
}

/// Vertex-by-edge matrix, columns in the graph's edge order.
#[derive(Clone, Debug, PartialEq)]
pub struct IncidenceMatrix {
    n: usize,
    m: usize,
    data: Vec<Complex64>,
}

impl IncidenceMatrix {
    pub fn rows(&self) -> usize {
        self.n
    }

    pub fn cols(&self) -> usize {
        self.m
    }

    /// Entry for 0-based vertex row `k` and edge column `e`.
    pub fn get(&self, k: usize, e: usize) -> Complex64 {
        self.data[k * self.m + e]
    }

    /// Multiply column `e` by `phases[e]`. Unit phases leave the
    /// factorization unchanged.
    pub fn regauge(&self, phases: &[Complex64]) -> Result<IncidenceMatrix> {
        if phases.len() != self.m {
            return Err(Error::DimensionMismatch {
                expected: self.m,
                actual: phases.len(),
            });
        }
        let mut out = self.clone();
        for k in 0..self.n {
            for (e, p) in phases.iter().enumerate() {
                out.data[k * self.m + e] *= p;
            }
        }
        Ok(out)
    }

    /// `I - (D^{-1/2} S)(D^{-1/2} S)*` for the degree vector of the graph
    /// `S` was built from.
    pub fn randic_factorization(&self, g: &MixedGraph) -> Result<HermitianMatrix> {
        let s = inv_sqrt_degrees(g)?;
        if g.order() != self.n {
            return Err(Error::DimensionMismatch {
                expected: self.n,
                actual: g.order(),
            });
        }
        Ok(HermitianMatrix::from_upper(self.n, |i, j| {
            let mut acc = czero();
            for e in 0..self.m {
                acc += self.get(i, e) * self.get(j, e).conj();
            }
            let delta = if i == j { 1.0 } else { 0.0 };
            Complex64::new(delta, 0.0) - acc * (s[i] * s[j])
        }))
    }
}

/// The incidence matrix in the fixed gauge: `i -- j` (i < j) gives column
/// `s_i = 1, s_j = -1`; `k -> l` gives `s_k = -ω, s_l = 1`.
pub fn build_incidence(g: &MixedGraph) -> IncidenceMatrix {
    let (n, m) = (g.order(), g.size());
    let mut data = vec![czero(); n * m];
    let one = Complex64::new(1.0, 0.0);
    for (e, rec) in g.edges().iter().enumerate() {
        let (k, l) = (rec.tail - 1, rec.head - 1);
        match rec.kind {
            EdgeKind::Unoriented => {
                data[k * m + e] = one;
                data[l * m + e] = -one;
            }
            EdgeKind::Arc => {
                data[k * m + e] = -SixthRoot::OMEGA.to_complex();
                data[l * m + e] = one;
            }
        }
    }
    IncidenceMatrix { n, m, data }
}

/// Product of Randić entries along a walk.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct WalkValue(pub Complex64);

impl WalkValue {
    pub fn value(self) -> Complex64 {
        self.0
    }
}

/// `R_{i1 i2} R_{i2 i3} ...` along `walk` (1-based labels).
pub fn walk_value(g: &MixedGraph, walk: &[usize]) -> Result<WalkValue> {
    let s = inv_sqrt_degrees(g)?;
    let mut acc = Complex64::new(1.0, 0.0);
    for w in walk.windows(2) {
        let (a, b) = (w[0], w[1]);
        if !g.adjacent(a, b) {
            return Err(Error::NotAdjacent(a, b));
        }
        acc *= gain_entry(g, a - 1, b - 1) * (s[a - 1] * s[b - 1]);
    }
    Ok(WalkValue(acc))
}

/// `y* H y` through the edge sum
/// `sum_{i<j adjacent} |y_i + h_ij y_j|^2 - |y_i|^2 - |y_j|^2`.
pub fn quadratic_form(g: &MixedGraph, y: &[Complex64]) -> Result<f64> {
    if y.len() != g.order() {
        return Err(Error::DimensionMismatch {
            expected: g.order(),
            actual: y.len(),
        });
    }
    let mut total = 0.0;
    for e in g.edges() {
        let (i, j) = e.pair();
        let (yi, yj) = (y[i - 1], y[j - 1]);
        let h = gain_entry(g, i - 1, j - 1);
        total += (yi + h * yj).norm_sqr() - yi.norm_sqr() - yj.norm_sqr();
    }
    Ok(total)
}
