//! Algebro-geometric machinery for the SO(2) spinning top.
//!
//! The rotator with Hamiltonian `H = l²/2 − a² cos 2φ` admits a 2×2 Lax
//! representation whose spectral curve is the elliptic curve
//! `w² = λ⁴ − (2E/a²)λ² + 1`. This crate builds that curve numerically
//! (periods, Abel map, second-kind integrals), evaluates genus-1 theta
//! functions in the `θ(z) = Σ exp(½Bn² + zn)` normalization, assembles the
//! Baker-Akhiezer eigenfunctions, and from them the canonical factorization
//! `e^{tL(λ)} = g₊⁻¹(λ,t) g₋(λ,t)` together with the closed-form solutions
//! `sin²φ` and `sinh²q` (the non-compact extension, where the factorization
//! degenerates at a finite blow-up time).
//!
//! Every analytic step has an independent check: RK4 phase-space and Lax
//! integrators, AGM elliptic functions, contour-quadrature period and
//! residue identities. The [`verify`] module bundles those checks into a
//! machine-readable suite.

pub mod ba;
pub mod curve;
pub mod error;
pub mod fact;
pub mod integrals;
pub mod jacobi;
pub mod lax;
pub mod quad;
pub mod theta;
pub mod verify;
pub mod weierstrass;

pub use error::{Error, Result};

/// Complex scalar used throughout.
pub type C64 = num_complex::Complex64;

/// Which real form of the top is being solved: the compact rotator
/// (angle φ, potential −a²cos2φ) or its non-compact extension
/// (coordinate q, potential −a²cosh2q, trajectories blow up).
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Variant {
    Compact,
    Noncompact,
}

/// Shorthand constructor.
#[inline]
pub fn c64(re: f64, im: f64) -> C64 {
    C64::new(re, im)
}

/// Named numerical thresholds. Defaults follow the tolerances the test
/// suite pins; callers may override individual knobs.
#[derive(Debug, Clone)]
pub struct Tolerances {
    /// Theta series tail bound.
    pub eps_theta: f64,
    /// Distance at which an argument counts as sitting on a lattice point
    /// or marked point.
    pub eps_pole: f64,
    /// Minimal distance of quadrature paths to branch points.
    pub eps_branch: f64,
    /// `|θ₁(A₁ + Vt)|` below this flags the non-canonical regime.
    pub eps_canonical: f64,
    /// Maximal admissible relative factorization residual.
    pub tol_fact: f64,
    /// Condition-number cap for the eigenvector basis Φ±(λ, 0).
    pub cond_max: f64,
    /// Relative target for adaptive contour quadrature.
    pub quad_rel: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Tolerances {
            eps_theta: 1e-15,
            eps_pole: 1e-10,
            eps_branch: 1e-8,
            eps_canonical: 1e-6,
            tol_fact: 1e-5,
            cond_max: 1e8,
            quad_rel: 1e-12,
        }
    }
}
