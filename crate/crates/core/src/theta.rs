//! Genus-1 Riemann theta function in the `θ(z) = Σ_n exp(½Bn² + zn)`
//! normalization, its odd translate θ₁, and their z-derivatives.
//!
//! Quasi-periodicity:
//!   θ(z + 2πi) = θ(z),          θ(z + Bn) = exp(−½Bn² − zn) θ(z),
//! from which
//!   θ₁(z) = exp(B/8 + z/2) θ(z + πi + B/2)
//! is odd, vanishes exactly on the lattice (2πi, B), and satisfies
//!   θ₁(z + 2πi) = −θ₁(z),       θ₁(z + B) = −exp(−B/2 − z) θ₁(z).
//!
//! Arguments are always rebased into the fundamental cell before summing,
//! so the series stays overflow-free for the linearly growing arguments
//! `Vt + A₁` the flow produces.

use std::f64::consts::PI;

use crate::{C64, Error, Result, c64};

/// Period-matrix entry `B` together with `τ = B/(2πi)`.
///
/// Construction rejects `Im τ ≤ 0` (the series would diverge) and
/// ill-conditioned moduli where the truncation order explodes.
#[derive(Debug, Clone, Copy)]
pub struct ThetaModulus {
    pub b: C64,
    pub tau: C64,
    trunc: i64,
}

/// Minimal admissible Im τ; below this we reject instead of applying
/// modular transformations.
const IM_TAU_FLOOR: f64 = 0.02;

impl ThetaModulus {
    pub fn new(b: C64) -> Result<Self> {
        let tau = b / c64(0.0, 2.0 * PI);
        if !(tau.im > IM_TAU_FLOOR) {
            return Err(Error::ModulusInvalid { im_tau: tau.im });
        }
        // Tail bound: after rebasing, |term_n| <= exp(-|Re B| n(n-1)/2).
        // Choose N with a few guard terms for the n^3-weighted derivative sums.
        let re_b = -b.re; // positive
        let mut n = (0.5 + (2.0 * 40.0 / re_b).sqrt()).ceil() as i64;
        n += 5;
        ThetaModulus::ok_trunc(n, tau.im)?;
        Ok(ThetaModulus { b, tau, trunc: n })
    }

    pub fn from_tau(tau: C64) -> Result<Self> {
        ThetaModulus::new(tau * c64(0.0, 2.0 * PI))
    }

    fn ok_trunc(n: i64, im_tau: f64) -> Result<()> {
        if n > 128 {
            return Err(Error::ModulusInvalid { im_tau });
        }
        Ok(())
    }

    /// Series truncation order (|n| ≤ trunc).
    pub fn truncation(&self) -> i64 {
        self.trunc
    }
}

/// θ and its first three z-derivatives at the given representative.
///
/// The values refer to the *input* z, not the rebased one: the exponential
/// prefactor and the `n → n − n₁` shift from the lattice reduction are
/// propagated through the derivatives.
pub fn theta_derivs(z: C64, m: &ThetaModulus) -> Result<[C64; 4]> {
    let (zr, n1, pref_exp) = rebase(z, m);
    if pref_exp.re.abs() > 690.0 {
        return Err(Error::ThetaOverflow { exponent: pref_exp.re });
    }
    let pref = pref_exp.exp();
    // Raw series at the rebased argument.
    let mut s = [C64::new(0.0, 0.0); 4];
    for n in -m.trunc..=m.trunc {
        let nf = n as f64;
        let term = (m.b * (0.5 * nf * nf) + zr * nf).exp();
        s[0] += term;
        s[1] += term * nf;
        s[2] += term * (nf * nf);
        s[3] += term * (nf * nf * nf);
    }
    // θ(z) = pref · θ(zr) with z = zr + 2πi n₂ + B n₁ and
    // pref = exp(−½Bn₁² − zr n₁). Each d/dz hits both factors:
    //   θ⁽ᵏ⁾(z) = pref · Σ_m C(k,m) (−n₁)^{k−m} θ⁽ᵐ⁾(zr).
    let a = -(n1 as f64);
    let d0 = s[0];
    let d1 = s[1] + d0 * a;
    let d2 = s[2] + s[1] * (2.0 * a) + d0 * (a * a);
    let d3 = s[3] + s[2] * (3.0 * a) + s[1] * (3.0 * a * a) + d0 * (a * a * a);
    Ok([pref * d0, pref * d1, pref * d2, pref * d3])
}

/// Rebase z into the fundamental cell of the lattice (2πi, B).
/// Returns (z_red, n₁, log-prefactor) with z = z_red + 2πi n₂ + B n₁ and
/// θ(z) = exp(−½Bn₁² − z_red n₁) θ(z_red).
fn rebase(z: C64, m: &ThetaModulus) -> (C64, i64, C64) {
    // Solve z = x·(2πi) + y·B over the reals.
    let (e1, e2) = (c64(0.0, 2.0 * PI), m.b);
    let det = e1.re * e2.im - e1.im * e2.re;
    let x = (z.re * e2.im - z.im * e2.re) / det;
    let y = (e1.re * z.im - e1.im * z.re) / det;
    let n1 = y.round() as i64;
    let n2 = x.round() as i64;
    let zr = z - e2 * n1 as f64 - e1 * n2 as f64;
    let n1f = n1 as f64;
    let pref = -m.b * (0.5 * n1f * n1f) - zr * n1f;
    (zr, n1, pref)
}

/// θ(z).
pub fn theta(z: C64, m: &ThetaModulus) -> Result<C64> {
    Ok(theta_derivs(z, m)?[0])
}

/// Odd Jacobi theta θ₁(z) = exp(B/8 + z/2) θ(z + πi + B/2).
pub fn theta1(z: C64, m: &ThetaModulus) -> Result<C64> {
    Ok(theta1_derivs(z, m)?[0])
}

/// θ₁ and its first three derivatives.
pub fn theta1_derivs(z: C64, m: &ThetaModulus) -> Result<[C64; 4]> {
    let shift = c64(0.0, PI) + m.b * 0.5;
    let d = theta_derivs(z + shift, m)?;
    let pref = (m.b / 8.0 + z * 0.5).exp();
    // (d/dz + 1/2)^k applied to θ at the shifted argument.
    let t0 = d[0];
    let t1 = d[1] + d[0] * 0.5;
    let t2 = d[2] + d[1] + d[0] * 0.25;
    let t3 = d[3] + d[2] * 1.5 + d[1] * 0.75 + d[0] * 0.125;
    Ok([pref * t0, pref * t1, pref * t2, pref * t3])
}

/// Logarithmic derivatives of θ₁.
///
/// Order 1 returns θ₁′/θ₁, order 2 returns (log θ₁)″. Both are computed
/// from the analytically differentiated series; order 1 respects the input
/// representative (it shifts by an integer under z → z + Bn, which the
/// second-kind integral relies on), order 2 is fully lattice-periodic.
pub fn theta1_dlog(z: C64, m: &ThetaModulus, order: u8, eps_pole: f64) -> Result<C64> {
    assert!(order == 1 || order == 2, "order must be 1 or 2");
    let d = theta1_derivs(z, m)?;
    let scale = theta1_derivs(c64(0.0, 0.0), m)?[1].norm();
    if d[0].norm() < eps_pole * scale {
        return Err(Error::PoleAtLatticePoint {
            dist: d[0].norm() / scale,
        });
    }
    match order {
        1 => Ok(d[1] / d[0]),
        _ => Ok((d[2] * d[0] - d[1] * d[1]) / (d[0] * d[0])),
    }
}

/// θ₁‴(0)/(3 θ₁′(0)): the additive constant linking −(log θ₁)″ to the
/// Weierstrass function on the lattice (2πi, B).
pub fn wp_constant(m: &ThetaModulus) -> Result<C64> {
    let d = theta1_derivs(c64(0.0, 0.0), m)?;
    Ok(d[3] / (d[1] * 3.0))
}
