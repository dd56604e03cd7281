//! Eigenvalues of Hermitian matrices and the quantities derived from them.

mod charpoly;
mod jacobi;

use num_complex::Complex64;
use serde::Serialize;

use crate::error::Result;
use crate::matrix::HermitianMatrix;

pub use charpoly::{
    char_poly_combinatorial, char_poly_combinatorial_with_cap, char_poly_numeric,
    determinant_combinatorial, CharPoly, COMBINATORIAL_CAP,
};

/// Eigenvalues within this distance of zero count as zero.
pub const TOL_ZERO: f64 = 1e-9;

/// Sorted real spectrum with energy `ε = Σ|λ|`, `ρ = max|λ|`, `σ = min|λ|`
/// and `k`, the number of eigenvalues below `-TOL_ZERO`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Spectrum {
    pub eigenvalues: Vec<f64>,
    pub energy: f64,
    pub rho: f64,
    pub sigma: f64,
    pub negative_count: usize,
}

impl Spectrum {
    pub fn from_eigenvalues(mut eigenvalues: Vec<f64>) -> Spectrum {
        eigenvalues.sort_by(f64::total_cmp);
        let abs = eigenvalues.iter().map(|x| x.abs());
        let energy = abs.clone().sum();
        let rho = abs.clone().fold(0.0, f64::max);
        let sigma = abs.fold(f64::INFINITY, f64::min);
        let sigma = if sigma.is_finite() { sigma } else { 0.0 };
        let negative_count = eigenvalues.iter().filter(|&&x| x < -TOL_ZERO).count();
        Spectrum {
            eigenvalues,
            energy,
            rho,
            sigma,
            negative_count,
        }
    }

    pub fn len(&self) -> usize {
        self.eigenvalues.len()
    }

    pub fn is_empty(&self) -> bool {
        self.eigenvalues.is_empty()
    }

    pub fn smallest(&self) -> f64 {
        self.eigenvalues[0]
    }

    pub fn largest(&self) -> f64 {
        self.eigenvalues[self.eigenvalues.len() - 1]
    }

    pub fn sum(&self) -> f64 {
        self.eigenvalues.iter().sum()
    }

    pub fn sum_of_squares(&self) -> f64 {
        self.eigenvalues.iter().map(|x| x * x).sum()
    }

    pub fn product(&self) -> f64 {
        self.eigenvalues.iter().product()
    }

    /// Number of eigenvalues with `|λ - x| <= tol`.
    pub fn multiplicity(&self, x: f64, tol: f64) -> usize {
        self.eigenvalues.iter().filter(|&&l| (l - x).abs() <= tol).count()
    }

    /// `λ_i + λ_{n+1-i} = 0` within `tol` for every `i`.
    pub fn is_symmetric(&self, tol: f64) -> bool {
        let e = &self.eigenvalues;
        (0..e.len()).all(|i| (e[i] + e[e.len() - 1 - i]).abs() <= tol)
    }

    /// Sorted lists agree entrywise within `tol`.
    pub fn matches(&self, other: &Spectrum, tol: f64) -> bool {
        self.len() == other.len()
            && self
                .eigenvalues
                .iter()
                .zip(&other.eigenvalues)
                .all(|(a, b)| (a - b).abs() <= tol)
    }
}

pub fn eigen_decompose(h: &HermitianMatrix) -> Result<Spectrum> {
    Ok(Spectrum::from_eigenvalues(jacobi::jacobi(h)?.0))
}

/// Spectrum plus orthonormal eigenvectors; `vectors[i]` belongs to the
/// `i`-th smallest eigenvalue.
pub fn eigen_decompose_with_vectors(
    h: &HermitianMatrix,
) -> Result<(Spectrum, Vec<Vec<Complex64>>)> {
    let (values, vectors) = jacobi::jacobi(h)?;
    Ok((Spectrum::from_eigenvalues(values), vectors))
}

pub fn energy(s: &Spectrum) -> f64 {
    s.energy
}

pub fn spectral_radius(s: &Spectrum) -> f64 {
    s.rho
}
