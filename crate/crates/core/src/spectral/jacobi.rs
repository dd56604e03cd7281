//! Cyclic Jacobi eigensolver for dense complex Hermitian matrices.
//!
//! Each rotation first moves the phase of `a_pq` into column `q`, making the
//! pivot real and positive, then applies the classical real rotation. The
//! combined unitary is
//!
//! ```text
//! U_pp = c      U_pq = s
//! U_qp = -s ḡ   U_qq = c ḡ       with g = a_pq / |a_pq|
//! ```

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::HermitianMatrix;

const MAX_SWEEPS: usize = 100;

/// Eigenvalues (ascending) and the matching orthonormal eigenvectors.
pub(crate) fn jacobi(h: &HermitianMatrix) -> Result<(Vec<f64>, Vec<Vec<Complex64>>)> {
    let n = h.dim();
    let mut a = h.as_slice().to_vec();
    for i in 0..n {
        if a[i * n + i].im != 0.0 {
            return Err(Error::NotHermitian(i + 1, i + 1));
        }
        for j in i + 1..n {
            if a[i * n + j] != a[j * n + i].conj() {
                return Err(Error::NotHermitian(i + 1, j + 1));
            }
        }
    }
    let mut v = vec![Complex64::new(0.0, 0.0); n * n];
    for i in 0..n {
        v[i * n + i] = Complex64::new(1.0, 0.0);
    }

    let scale: f64 = a.iter().map(|z| z.norm_sqr()).sum();
    let mut converged = false;
    for _ in 0..MAX_SWEEPS {
        let off: f64 = (0..n)
            .flat_map(|i| (0..n).filter(move |&j| j != i).map(move |j| (i, j)))
            .map(|(i, j)| a[i * n + j].norm_sqr())
            .sum();
        if off <= f64::EPSILON * f64::EPSILON * scale * 1e-4 || off == 0.0 {
            converged = true;
            break;
        }
        for p in 0..n {
            for q in p + 1..n {
                rotate(&mut a, &mut v, n, p, q);
            }
        }
    }
    if !converged {
        return Err(Error::NoConvergence(MAX_SWEEPS));
    }

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[x * n + x].re.total_cmp(&a[y * n + y].re));
    let values = order.iter().map(|&k| a[k * n + k].re).collect();
    let vectors = order
        .iter()
        .map(|&k| (0..n).map(|i| v[i * n + k]).collect())
        .collect();
    Ok((values, vectors))
}

fn rotate(a: &mut [Complex64], v: &mut [Complex64], n: usize, p: usize, q: usize) {
    let apq = a[p * n + q];
    let mag = apq.norm();
    if mag == 0.0 {
        return;
    }
    let app = a[p * n + p].re;
    let aqq = a[q * n + q].re;
    let gbar = (apq / mag).conj();
    let theta = (aqq - app) / (2.0 * mag);
    let t = if theta.is_finite() {
        let sign = if theta >= 0.0 { 1.0 } else { -1.0 };
        sign / (theta.abs() + (theta * theta + 1.0).sqrt())
    } else {
        0.0
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    let u_pp = Complex64::new(c, 0.0);
    let u_pq = Complex64::new(s, 0.0);
    let u_qp = -gbar * s;
    let u_qq = gbar * c;

    // Off-pivot entries of U* A U; the pivot block is diagonal by construction.
    for k in (0..n).filter(|&k| k != p && k != q) {
        let (akp, akq) = (a[k * n + p], a[k * n + q]);
        let kp = akp * u_pp + akq * u_qp;
        let kq = akp * u_pq + akq * u_qq;
        a[k * n + p] = kp;
        a[k * n + q] = kq;
        a[p * n + k] = kp.conj();
        a[q * n + k] = kq.conj();
    }
    a[p * n + p] = Complex64::new(app - t * mag, 0.0);
    a[q * n + q] = Complex64::new(aqq + t * mag, 0.0);
    a[p * n + q] = Complex64::new(0.0, 0.0);
    a[q * n + p] = Complex64::new(0.0, 0.0);
    // V <- V U
    for k in 0..n {
        let (vkp, vkq) = (v[k * n + p], v[k * n + q]);
        v[k * n + p] = vkp * u_pp + vkq * u_qp;
        v[k * n + q] = vkp * u_pq + vkq * u_qq;
    }
}
