//! Dense complex linear algebra shared by the rest of the crate.
//!
//! Everything here operates on tiny matrices (block sizes rarely exceed
//! single digits), so clarity wins over asymptotics throughout.

use nalgebra::{DMatrix, DVector};
use num_complex::Complex64;

pub type CMat = DMatrix<Complex64>;
pub type RMat = DMatrix<f64>;
pub type RVec = DVector<f64>;

pub fn c(re: f64) -> Complex64 {
    Complex64::new(re, 0.0)
}

/// Frobenius distance between `a` and `b`, scaled by `max(1, ‖a‖, ‖b‖)`.
pub fn rel_dist(a: &CMat, b: &CMat) -> f64 {
    (a - b).norm() / a.norm().max(b.norm()).max(1.0)
}

pub fn hermitize(m: &CMat) -> CMat {
    (m + m.adjoint()) * c(0.5)
}

/// Eigendecomposition of a Hermitian matrix: eigenvalues plus an
/// orthonormal set of eigenvectors (as columns). The input is symmetrized
/// first, so callers may pass matrices that are Hermitian only up to
/// roundoff.
pub fn hermitian_eigen(m: &CMat) -> (Vec<f64>, CMat) {
    let eig = hermitize(m).symmetric_eigen();
    (eig.eigenvalues.iter().copied().collect(), eig.eigenvectors)
}

/// Smallest eigenvalue of a Hermitian matrix.
pub fn hermitian_min_eigenvalue(m: &CMat) -> f64 {
    let (vals, _) = hermitian_eigen(m);
    vals.iter().copied().fold(f64::INFINITY, f64::min)
}

/// Diagonal complex matrix from real entries.
pub fn real_diag(entries: &[f64]) -> CMat {
    let n = entries.len();
    CMat::from_fn(n, n, |i, j| if i == j { c(entries[i]) } else { c(0.0) })
}

/// Spectral radius of a real matrix through its full (complex) spectrum.
/// Used as an independent oracle against the power iteration.
pub fn dense_spectral_radius(m: &RMat) -> f64 {
    m.clone()
        .complex_eigenvalues()
        .iter()
        .map(|z| z.norm())
        .fold(0.0, f64::max)
}
