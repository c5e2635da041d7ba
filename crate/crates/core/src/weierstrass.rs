//! Weierstrass ℘ on an arbitrary complex lattice, evaluated through θ₁.
//!
//! For the lattice Λ = (2πi, B) the link is
//!   ℘(z) = −(log θ₁)″(z) + θ₁‴(0)/(3 θ₁′(0)),
//! the constant being forced by the absence of a z⁰ term in the Laurent
//! expansion of ℘. A general lattice is rescaled onto (2πi, B) first and
//! the scaling law ℘(σ⁻¹u | σ⁻¹Λ) = σ²℘(u | Λ) maps the value back.

use std::f64::consts::PI;

use crate::theta::{self, ThetaModulus};
use crate::{C64, Error, Result, c64};

/// Half-period pair (ω₁, ω₂) with the lattice generated by (2ω₁, 2ω₂),
/// plus the cached cubic invariants.
#[derive(Debug, Clone)]
pub struct WeierstrassLattice {
    pub omega1: C64,
    pub omega2: C64,
    pub g2: C64,
    pub g3: C64,
    modulus: ThetaModulus,
    /// Rescale factor σ with σ · 2ω₁ = 2πi.
    sigma: C64,
    /// θ₁‴(0)/(3θ₁′(0)) on the rescaled lattice.
    wp_const: C64,
    eps_pole: f64,
}

impl WeierstrassLattice {
    /// Build from half-periods; ω₂ is negated if needed so that
    /// Im(ω₂/ω₁) > 0.
    pub fn new(omega1: C64, omega2: C64) -> Result<Self> {
        let mut w2 = omega2;
        let ratio = w2 / omega1;
        if ratio.im == 0.0 {
            return Err(Error::ModulusInvalid { im_tau: 0.0 });
        }
        if ratio.im < 0.0 {
            w2 = -w2;
        }
        let sigma = c64(0.0, 2.0 * PI) / (omega1 * 2.0);
        let b = sigma * (w2 * 2.0);
        let modulus = ThetaModulus::new(b)?;
        let wp_const = theta::wp_constant(&modulus)?;
        let mut lat = WeierstrassLattice {
            omega1,
            omega2: w2,
            g2: c64(0.0, 0.0),
            g3: c64(0.0, 0.0),
            modulus,
            sigma,
            wp_const,
            eps_pole: 1e-10,
        };
        let [e1, e2, e3] = lat.critical_values()?;
        lat.g2 = -(e1 * e2 + e1 * e3 + e2 * e3) * 4.0;
        lat.g3 = e1 * e2 * e3 * 4.0;
        Ok(lat)
    }

    /// Build from the full lattice generators (w₁, w₂).
    pub fn from_generators(w1: C64, w2: C64) -> Result<Self> {
        WeierstrassLattice::new(w1 * 0.5, w2 * 0.5)
    }

    pub fn generators(&self) -> (C64, C64) {
        (self.omega1 * 2.0, self.omega2 * 2.0)
    }

    /// The three half-periods ω₁, ω₂, ω₁+ω₂.
    pub fn half_periods(&self) -> [C64; 3] {
        [self.omega1, self.omega2, self.omega1 + self.omega2]
    }

    /// ℘ at the half-periods (the roots e₁, e₂, e₃ of the cubic).
    pub fn critical_values(&self) -> Result<[C64; 3]> {
        let hp = self.half_periods();
        Ok([self.wp(hp[0])?, self.wp(hp[1])?, self.wp(hp[2])?])
    }

    /// Reduce u modulo the full lattice to the centered cell.
    pub fn reduce(&self, u: C64) -> C64 {
        let (w1, w2) = self.generators();
        let det = w1.re * w2.im - w1.im * w2.re;
        let x = (u.re * w2.im - u.im * w2.re) / det;
        let y = (w1.re * u.im - w1.im * u.re) / det;
        u - w1 * x.round() - w2 * y.round()
    }

    /// Distance from u to the nearest lattice point.
    pub fn dist_to_lattice(&self, u: C64) -> f64 {
        let r = self.reduce(u);
        let (w1, w2) = self.generators();
        let mut d = r.norm();
        for n1 in -1i32..=1 {
            for n2 in -1i32..=1 {
                d = d.min((r - w1 * n1 as f64 - w2 * n2 as f64).norm());
            }
        }
        d
    }

    /// ℘(u).
    pub fn wp(&self, u: C64) -> Result<C64> {
        let d = self.dist_to_lattice(u);
        if d < self.eps_pole {
            return Err(Error::PoleAtLatticePoint { dist: d });
        }
        let v = self.sigma * u;
        let log_dd = theta::theta1_dlog(v, &self.modulus, 2, 1e-14)?;
        Ok(self.sigma * self.sigma * (self.wp_const - log_dd))
    }

    /// ℘′(u), from the analytically differentiated series.
    pub fn wp_prime(&self, u: C64) -> Result<C64> {
        let d = self.dist_to_lattice(u);
        if d < self.eps_pole {
            return Err(Error::PoleAtLatticePoint { dist: d });
        }
        let v = self.sigma * u;
        let t = theta::theta1_derivs(v, &self.modulus)?;
        let l3 = (t[3] * t[0] * t[0] - t[2] * t[1] * t[0] * 3.0 + t[1] * t[1] * t[1] * 2.0)
            / (t[0] * t[0] * t[0]);
        Ok(-self.sigma.powu(3) * l3)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn square_lattice() -> WeierstrassLattice {
        WeierstrassLattice::new(c64(1.0, 0.0), c64(0.0, 1.0)).unwrap()
    }

    #[test]
    fn even_and_periodic() {
        let lat = square_lattice();
        let u = c64(0.31, 0.17);
        let a = lat.wp(u).unwrap();
        let b = lat.wp(-u).unwrap();
        assert!((a - b).norm() < 1e-12 * a.norm());
        let (w1, w2) = lat.generators();
        for p in [w1, w2, w1 + w2] {
            let c = lat.wp(u + p).unwrap();
            assert!((c - a).norm() < 1e-11 * a.norm().max(1.0), "period {p}");
        }
    }

    #[test]
    fn laurent_leading_term() {
        // ℘(u) → u⁻² near the origin, with no constant term.
        let lat = square_lattice();
        for &r in &[1e-3, 5e-4] {
            let u = c64(r, 0.4 * r);
            let v = lat.wp(u).unwrap();
            let lead = 1.0 / (u * u);
            // remainder is O(u²) via g2: |rest| ~ g2/20 |u|^2
            assert!((v - lead).norm() < 1e-4, "r={r}: {}", (v - lead).norm());
        }
    }

    #[test]
    fn differential_equation_holds() {
        // ℘′² = 4℘³ − g₂℘ − g₃ ties wp, wp_prime and the cached invariants.
        let lat = square_lattice();
        for &u in &[c64(0.31, 0.17), c64(-0.42, 0.55), c64(0.11, -0.63)] {
            let p = lat.wp(u).unwrap();
            let dp = lat.wp_prime(u).unwrap();
            let lhs = dp * dp;
            let rhs = p * p * p * 4.0 - lat.g2 * p - lat.g3;
            assert!(
                (lhs - rhs).norm() < 1e-9 * rhs.norm().max(1.0),
                "u={u}: {lhs} vs {rhs}"
            );
        }
    }

    #[test]
    fn scaling_law() {
        // ℘(σ⁻¹u | σ⁻¹ω₁, σ⁻¹ω₂) = σ²℘(u | ω₁, ω₂)
        let lat = square_lattice();
        let u = c64(0.37, 0.22);
        let base = lat.wp(u).unwrap();
        for &alpha in &[c64(0.7, 1.3), c64(-1.1, 0.4), c64(2.3, -0.9)] {
            let scaled = WeierstrassLattice::new(lat.omega1 / alpha, lat.omega2 / alpha).unwrap();
            let v = scaled.wp(u / alpha).unwrap();
            assert!(
                (v - alpha * alpha * base).norm() < 1e-9 * base.norm() * alpha.norm_sqr(),
                "alpha={alpha}"
            );
        }
    }

    #[test]
    fn critical_points_have_vanishing_derivative() {
        let lat = square_lattice();
        for h in lat.half_periods() {
            let dp = lat.wp_prime(h).unwrap();
            assert!(dp.norm() < 1e-10, "wp' at half-period {h} = {dp}");
        }
    }

    #[test]
    fn pole_rejected() {
        let lat = square_lattice();
        assert!(matches!(
            lat.wp(c64(2.0, 2.0)),
            Err(Error::PoleAtLatticePoint { .. })
        ));
    }
}
