use rand::Rng;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

/// A fully decomposed control action, recorded for auditing and for the
/// actor's gradient step one day later.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ControlAction {
    /// Deterministic part `Fᵀ·θ`.
    pub p_a: f64,
    /// Supervisory part.
    pub p_s: f64,
    /// Weighted blend `h·p_a + (1−h)·p_s`.
    pub p_d: f64,
    /// Drawn exploration term.
    pub noise: f64,
    /// Final control action `p_d + noise`.
    pub p_e: f64,
    /// Standard deviation the noise was drawn with.
    pub sigma: f64,
}

impl ControlAction {
    /// An all-zero action (used for knockout runs and carried-over days).
    pub const ZERO: ControlAction = ControlAction {
        p_a: 0.0,
        p_s: 0.0,
        p_d: 0.0,
        noise: 0.0,
        p_e: 0.0,
        sigma: 0.0,
    };
}

/// Blend the deterministic and supervisory parts and add exploration noise.
///
/// `p_d = h·p_a + (1−h)·p_s`; the noise is `Normal(0, sigma)` with `sigma`
/// a standard deviation. With `sigma = 0` no sample is drawn (the generator
/// is not advanced) and the action is fully deterministic.
pub fn compose_action<R: Rng + ?Sized>(
    p_a: f64,
    p_s: f64,
    h: f64,
    sigma: f64,
    rng: &mut R,
) -> ControlAction {
    debug_assert!(sigma >= 0.0);
    let p_d = h * p_a + (1.0 - h) * p_s;
    let noise = if sigma > 0.0 {
        Normal::new(0.0, sigma).expect("sigma is finite and positive").sample(rng)
    } else {
        0.0
    };
    ControlAction {
        p_a,
        p_s,
        p_d,
        noise,
        p_e: p_d + noise,
        sigma,
    }
}
