//! AGM-based complete elliptic integral and Jacobi sn.

use std::f64::consts::PI;

use crate::{Error, Result};

/// Squared modulus k². The rotating compact regime keeps 0 < k² < 1;
/// other (real or complex) values appear only in quadrature paths.
#[derive(Debug, Clone, Copy)]
pub struct EllipticModulus {
    pub ksq: f64,
}

impl EllipticModulus {
    pub fn new(ksq: f64) -> Self {
        EllipticModulus { ksq }
    }

    fn check_open_unit(&self) -> Result<f64> {
        if self.ksq > 0.0 && self.ksq < 1.0 {
            Ok(self.ksq)
        } else {
            Err(Error::ModulusOutOfRange { ksq: self.ksq })
        }
    }
}

/// Complete elliptic integral K(k) = ∫₀^{π/2} dθ/√(1 − k² sin²θ),
/// via the arithmetic-geometric mean: K = π / (2 AGM(1, k′)).
pub fn elliptic_k(k: EllipticModulus) -> Result<f64> {
    if k.ksq == 0.0 {
        return Ok(PI / 2.0);
    }
    let ksq = k.check_open_unit()?;
    let kprime = (1.0 - ksq).sqrt();
    let mut a = 1.0f64;
    let mut b = kprime;
    for _ in 0..64 {
        let an = 0.5 * (a + b);
        let bn = (a * b).sqrt();
        a = an;
        b = bn;
        if (a - b).abs() < 1e-16 * a {
            break;
        }
    }
    Ok(PI / (2.0 * a))
}

/// Jacobi sn(u, k) for real u and 0 < k² < 1, by the descending
/// Landen/AGM ladder with the amplitude back-recursion.
pub fn jacobi_sn(u: f64, k: EllipticModulus) -> Result<f64> {
    if k.ksq == 0.0 {
        return Ok(u.sin());
    }
    let ksq = k.check_open_unit()?;
    let kprime = (1.0 - ksq).sqrt();
    let mut a = vec![1.0f64];
    let mut c = vec![ksq.sqrt()];
    let mut b = kprime;
    while c.last().unwrap().abs() > 1e-17 && a.len() < 64 {
        let an = 0.5 * (a.last().unwrap() + b);
        let cn = 0.5 * (a.last().unwrap() - b);
        let bn = (a.last().unwrap() * b).sqrt();
        a.push(an);
        c.push(cn);
        b = bn;
    }
    let n = a.len() - 1;
    let mut phi = (1u64 << n) as f64 * a[n] * u;
    for i in (1..=n).rev() {
        let s = (c[i] / a[i] * phi.sin()).asin();
        phi = 0.5 * (phi + s);
    }
    Ok(phi.sin())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k_limits_and_reference() {
        assert!((elliptic_k(EllipticModulus::new(0.0)).unwrap() - PI / 2.0).abs() < 1e-15);
        // frozen from adaptive quadrature of the defining integral
        let k_half = elliptic_k(EllipticModulus::new(0.5)).unwrap();
        assert!((k_half - 1.854074677301372).abs() < 1e-13, "{k_half}");
        assert!(matches!(
            elliptic_k(EllipticModulus::new(1.2)),
            Err(Error::ModulusOutOfRange { .. })
        ));
    }

    #[test]
    fn k_matches_quadrature_oracle() {
        // midpoint-rule oracle on the defining integral, refined twice
        let ksq = 0.37;
        let oracle = |n: usize| -> f64 {
            let h = PI / 2.0 / n as f64;
            (0..n)
                .map(|i| {
                    let t = (i as f64 + 0.5) * h;
                    h / (1.0 - ksq * t.sin().powi(2)).sqrt()
                })
                .sum()
        };
        let q = oracle(4000);
        let q2 = oracle(8000);
        assert!((q - q2).abs() < 1e-12);
        let v = elliptic_k(EllipticModulus::new(ksq)).unwrap();
        assert!((v - q2).abs() < 1e-11, "{v} vs {q2}");
    }

    #[test]
    fn k_monotone_in_ksq() {
        let mut prev = 0.0;
        for i in 1..20 {
            let ksq = i as f64 / 20.0;
            let v = elliptic_k(EllipticModulus::new(ksq)).unwrap();
            assert!(v > prev);
            prev = v;
        }
    }

    #[test]
    fn sn_special_values() {
        let k = EllipticModulus::new(0.5);
        assert_eq!(jacobi_sn(0.0, k).unwrap(), 0.0);
        let kk = elliptic_k(k).unwrap();
        assert!((jacobi_sn(kk, k).unwrap() - 1.0).abs() < 1e-12);
        // frozen reference value
        let v = jacobi_sn(0.7, k).unwrap();
        assert!((v - 0.6243400909662173).abs() < 1e-12, "{v}");
    }

    #[test]
    fn sn_bounded_and_periodic() {
        let k = EllipticModulus::new(0.73);
        let kk = elliptic_k(k).unwrap();
        for i in 0..200 {
            let u = -10.0 + 0.1 * i as f64;
            let s = jacobi_sn(u, k).unwrap();
            assert!(s.abs() <= 1.0 + 1e-12);
            let s4 = jacobi_sn(u + 4.0 * kk, k).unwrap();
            assert!((s - s4).abs() < 1e-9, "u={u}: {s} vs {s4}");
        }
    }
}
