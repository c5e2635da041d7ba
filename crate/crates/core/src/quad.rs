//! Composite Gauss-Legendre quadrature on parameterized complex paths,
//! with uniform panel doubling until self-consistency.

use crate::{C64, Error, Result};

/// Gauss-Legendre rule on [-1, 1].
#[derive(Debug, Clone)]
pub struct GaussLegendre {
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl GaussLegendre {
    /// Nodes and weights by Newton iteration on the Legendre recurrence.
    pub fn new(n: usize) -> Self {
        assert!(n >= 2);
        let mut nodes = vec![0.0; n];
        let mut weights = vec![0.0; n];
        let m = n.div_ceil(2);
        for i in 0..m {
            // Chebyshev-like initial guess.
            let mut x = (std::f64::consts::PI * (i as f64 + 0.75) / (n as f64 + 0.5)).cos();
            let mut dp = 0.0;
            for _ in 0..100 {
                let (p, d) = legendre_with_deriv(n, x);
                dp = d;
                let dx = p / d;
                x -= dx;
                if dx.abs() < 1e-16 {
                    break;
                }
            }
            let w = 2.0 / ((1.0 - x * x) * dp * dp);
            nodes[i] = -x;
            nodes[n - 1 - i] = x;
            weights[i] = w;
            weights[n - 1 - i] = w;
        }
        if n % 2 == 1 {
            nodes[n / 2] = 0.0;
            let (_, d) = legendre_with_deriv(n, 0.0);
            weights[n / 2] = 2.0 / (d * d);
        }
        GaussLegendre { nodes, weights }
    }
}

fn legendre_with_deriv(n: usize, x: f64) -> (f64, f64) {
    let mut p0 = 1.0;
    let mut p1 = x;
    for k in 2..=n {
        let kf = k as f64;
        let p2 = ((2.0 * kf - 1.0) * x * p1 - (kf - 1.0) * p0) / kf;
        p0 = p1;
        p1 = p2;
    }
    let d = n as f64 * (x * p1 - p0) / (x * x - 1.0);
    (p1, d)
}

/// Single fixed-panel pass: `P` uniform panels over `[s0, s1]`, nodes
/// visited in increasing order so the integrand may carry tracking state.
fn panel_pass<F: FnMut(f64) -> C64>(
    f: &mut F,
    s0: f64,
    s1: f64,
    panels: usize,
    gl: &GaussLegendre,
) -> C64 {
    let h = (s1 - s0) / panels as f64;
    let mut acc = C64::new(0.0, 0.0);
    for p in 0..panels {
        let a = s0 + p as f64 * h;
        let c = a + 0.5 * h;
        let half = 0.5 * h;
        let mut panel = C64::new(0.0, 0.0);
        for (x, w) in gl.nodes.iter().zip(gl.weights.iter()) {
            panel += f(c + half * x) * *w;
        }
        acc += panel * half;
    }
    acc
}

/// Adaptive panel doubling. `make` must hand out a fresh integrand (with
/// freshly seeded tracking state) for every pass.
pub fn adaptive<M, F>(
    make: M,
    s0: f64,
    s1: f64,
    gl: &GaussLegendre,
    rel: f64,
    max_doublings: u32,
) -> Result<C64>
where
    M: Fn() -> F,
    F: FnMut(f64) -> C64,
{
    let mut prev = {
        let mut f = make();
        panel_pass(&mut f, s0, s1, 4, gl)
    };
    let mut last_change = f64::INFINITY;
    for level in 3..=max_doublings {
        let panels = 1usize << level;
        let mut f = make();
        let cur = panel_pass(&mut f, s0, s1, panels, gl);
        last_change = (cur - prev).norm();
        let scale = cur.norm().max(1e-30);
        if last_change <= rel * scale + 1e-16 {
            return Ok(cur);
        }
        prev = cur;
    }
    Err(Error::QuadratureNonConvergence { last_change })
}

/// Continuation helper for the two-sheeted square root: keeps the running
/// value of `w` and resolves the +/- ambiguity by proximity.
#[derive(Debug, Clone)]
pub struct SheetTracker {
    pub w: C64,
}

impl SheetTracker {
    pub fn new(w0: C64) -> Self {
        SheetTracker { w: w0 }
    }

    /// Given the principal determination at the new point, pick the sign
    /// continuing the stored value and update.
    #[inline]
    pub fn pick(&mut self, w_principal: C64) -> C64 {
        let d_plus = (w_principal - self.w).norm_sqr();
        let d_minus = (w_principal + self.w).norm_sqr();
        let w = if d_plus <= d_minus { w_principal } else { -w_principal };
        self.w = w;
        w
    }
}

/// Polynomial extrapolation of `samples = f(h_m)` to `h = 0` (Neville).
/// Returns the extrapolated value and the spread of the last column.
pub fn neville_extrapolate(hs: &[f64], samples: &[C64]) -> (C64, f64) {
    let n = hs.len();
    assert_eq!(n, samples.len());
    assert!(n >= 2);
    let mut col: Vec<C64> = samples.to_vec();
    let mut prev_best = col[n - 1];
    let mut spread = f64::INFINITY;
    for j in 1..n {
        for i in (j..n).rev() {
            let num = col[i] * hs[i - j] - col[i - 1] * hs[i];
            col[i] = num / (hs[i - j] - hs[i]);
        }
        spread = (col[n - 1] - prev_best).norm();
        prev_best = col[n - 1];
    }
    (col[n - 1], spread)
}
