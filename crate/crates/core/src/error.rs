use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

/// Error conditions surfaced by the numerical pipeline.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("invalid theta modulus: Im tau = {im_tau} must be positive")]
    ModulusInvalid { im_tau: f64 },

    #[error("theta argument too large: rebased exponent {exponent} would overflow")]
    ThetaOverflow { exponent: f64 },

    #[error("argument within {dist} of a lattice point (pole)")]
    PoleAtLatticePoint { dist: f64 },

    #[error("elliptic modulus out of range: k^2 = {ksq} not in (0, 1)")]
    ModulusOutOfRange { ksq: f64 },

    #[error("quadrature did not converge: last refinement change {last_change}")]
    QuadratureNonConvergence { last_change: f64 },

    #[error("sheet tracking failed: |w| = {wmag} too close to a branch point mid-panel")]
    SheetTrackingFailure { wmag: f64 },

    #[error("regime unsupported for the theta pipeline: need |E| > a^2 with the right sign, got E = {energy}, a^2 = {asq}")]
    RegimeUnsupported { energy: f64, asq: f64 },

    #[error("evaluation at a marked point (lambda in {{0, infinity}})")]
    PoleAtMarkedPoint,

    #[error("path crosses a branch cut and rerouting failed")]
    PathCrossesCut,

    #[error("Richardson extrapolation did not converge: spread {spread}")]
    ExtrapolationNonConvergence { spread: f64 },

    #[error("degenerate divisor: a required theta value underflows ({value})")]
    DegenerateDivisor { value: f64 },

    #[error("outside the canonical window: |theta1(A1 + V t)| = {theta_mag} at t = {t}")]
    CanonicalWindowViolated { t: f64, theta_mag: f64 },

    #[error("the two sheets collide over lambda (branch point within {dist})")]
    BranchPointCollision { dist: f64 },

    #[error("eigenvector basis ill-conditioned: cond = {cond}")]
    IllConditionedBasis { cond: f64 },

    #[error("lambda = 0 is not admissible here")]
    LambdaZero,

    #[error("trajectory blow-up detected near t = {t_star}")]
    BlowUpDetected { t_star: f64 },

    #[error("Baker-Akhiezer pole: divisor point hit at distance {dist}")]
    BaPole { dist: f64 },

    #[error("velocity identity violated: relative mismatch {mismatch}")]
    IdentityViolation { mismatch: f64 },

    #[error("{0}")]
    InvalidInput(String),
}
