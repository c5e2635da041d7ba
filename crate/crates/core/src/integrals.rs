//! The phase integral u₀ fixing the ℘-argument offset of the closed-form
//! solutions: the integral of dx/√(cubic) from the smallest finite root of
//! the motion to infinity. Compact variant: cubic 4x(1−x)(k⁻²−x) with a
//! complex detour around the real roots (Im u₀ ≠ 0). Non-compact variant:
//! cubic 4x(1+x)(k⁻²+x), all on the real axis (Im u₀ = 0).

use crate::quad::{self, GaussLegendre};
use crate::{C64, Result, Variant, c64};

/// u₀ for the given squared modulus. `ksq = 2a²/(E + a²)` in the compact
/// case and `ksq = 2a²/(E + a²)` with either sign allowed in the
/// non-compact case (negative below the potential barrier).
pub fn u0_integral(ksq: f64, variant: Variant) -> Result<C64> {
    let gl = GaussLegendre::new(32);
    match variant {
        Variant::Compact => u0_compact(ksq, &gl),
        Variant::Noncompact => u0_noncompact(ksq, &gl),
    }
}

fn u0_compact(ksq: f64, gl: &GaussLegendre) -> Result<C64> {
    let kinv2 = 1.0 / ksq;
    u0_compact_impl(ksq, 0.5, 2.0 * kinv2 + 2.0, gl)
}

fn u0_compact_impl(ksq: f64, h: f64, x_big: f64, gl: &GaussLegendre) -> Result<C64> {
    assert!(ksq > 0.0 && ksq < 1.0, "compact regime needs 0 < k^2 < 1");
    let kinv2 = 1.0 / ksq; // > 1; real roots at 0, 1, k⁻²
    let x_top = c64(0.0, h);
    let rel = 1e-13;

    // product root away from x = 0; both factors stay off their cuts for
    // Im x >= 0 approached from above
    let pfac = move |x: C64| ((c64(1.0, 0.0) - x).sqrt()) * ((c64(kinv2, 0.0) - x).sqrt());

    // leg 1: x = i h s², s in [0,1]; the 1/√x endpoint singularity cancels
    let sq_ih = c64(0.0, h).sqrt();
    let leg1 = quad::adaptive(
        || {
            move |s: f64| {
                let x = c64(0.0, h * s * s);
                sq_ih / pfac(x)
            }
        },
        0.0,
        1.0,
        gl,
        rel,
        12,
    )?;

    // legs 2+3: polyline i h -> x_big + i h -> x_big, integrand dx/(2√x P(x))
    let mut mid = c64(0.0, 0.0);
    for (za, zb) in [(x_top, c64(x_big, h)), (c64(x_big, h), c64(x_big, 0.0))] {
        let dz = zb - za;
        mid += quad::adaptive(
            || {
                move |s: f64| {
                    let x = za + dz * s;
                    dz / (x.sqrt() * 2.0 * pfac(x))
                }
            },
            0.0,
            1.0,
            gl,
            rel,
            12,
        )?;
    }

    // tail: x = x_big/σ². The root continued from above the real axis is
    // −2√x √((x−1)(x−k⁻²)) there, hence the overall minus sign.
    let tail = quad::adaptive(
        || {
            move |s: f64| {
                let q = ((1.0 - s * s / x_big) * (1.0 - kinv2 * s * s / x_big)).sqrt();
                c64(-1.0 / (x_big.sqrt() * q), 0.0)
            }
        },
        0.0,
        1.0,
        gl,
        rel,
        12,
    )?;

    Ok(leg1 + mid + tail)
}

fn u0_noncompact(ksq: f64, gl: &GaussLegendre) -> Result<C64> {
    assert!(ksq != 0.0, "non-compact u0 needs k^2 != 0");
    let kinv2 = 1.0 / ksq;
    let rel = 1e-13;
    let x_big = 2.0 * kinv2.abs() + 2.0;

    if ksq > 0.0 {
        // roots 0, −1, −k⁻²: integrate 0 → ∞ on the real axis
        let s_max = x_big.sqrt();
        let head = quad::adaptive(
            || {
                move |s: f64| {
                    let x = s * s;
                    c64(1.0 / ((1.0 + x) * (kinv2 + x)).sqrt(), 0.0)
                }
            },
            0.0,
            s_max,
            gl,
            rel,
            12,
        )?;
        let tail = quad::adaptive(
            || {
                move |s: f64| {
                    let q = ((1.0 + s * s / x_big) * (1.0 + kinv2 * s * s / x_big)).sqrt();
                    c64(1.0 / (x_big.sqrt() * q), 0.0)
                }
            },
            0.0,
            1.0,
            gl,
            rel,
            12,
        )?;
        Ok(head + tail)
    } else {
        // roots 0, −1, x₀ = −k⁻² > 0: integrate x₀ → ∞
        let x0 = -kinv2;
        let s_max = (x_big - x0).sqrt();
        let head = quad::adaptive(
            || {
                move |s: f64| {
                    let x = x0 + s * s;
                    c64(1.0 / (x * (1.0 + x)).sqrt(), 0.0)
                }
            },
            0.0,
            s_max,
            gl,
            rel,
            12,
        )?;
        let tail = quad::adaptive(
            || {
                move |s: f64| {
                    let q = ((1.0 + s * s / x_big) * (1.0 - x0 * s * s / x_big)).sqrt();
                    c64(1.0 / (x_big.sqrt() * q), 0.0)
                }
            },
            0.0,
            1.0,
            gl,
            rel,
            12,
        )?;
        Ok(head + tail)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn compact_has_imaginary_part() {
        let u0 = u0_integral(0.5, Variant::Compact).unwrap();
        assert!(u0.im.abs() > 0.1, "{u0}");
    }

    #[test]
    fn noncompact_is_real() {
        let u0 = u0_integral(0.5, Variant::Noncompact).unwrap();
        assert!(u0.im.abs() < 1e-10, "{u0}");
        assert!(u0.re > 0.0);
        let u0n = u0_integral(-0.5, Variant::Noncompact).unwrap();
        assert!(u0n.im.abs() < 1e-10, "{u0n}");
    }

    #[test]
    fn compact_path_deformation_invariance() {
        let gl = GaussLegendre::new(32);
        let ksq = 0.37;
        let a = u0_compact_impl(ksq, 0.3, 2.0 / ksq + 2.0, &gl).unwrap();
        let b = u0_compact_impl(ksq, 0.9, 4.0 / ksq + 5.0, &gl).unwrap();
        assert!((a - b).norm() < 1e-11, "{a} vs {b}");
    }
}
