use serde::{Deserialize, Serialize};

use crate::{ControlAction, FeatureVector};

/// Linear policy parameters and the fixed actor hyper-parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ActorState {
    /// Policy parameter pair multiplying `(f_hyper, f_hypo)`.
    pub theta: [f64; 2],
    /// Actor learning rate.
    pub beta: f64,
    /// Weight of the deterministic part against the supervisory part.
    pub h: f64,
    /// Exploration coefficient scaling `‖F‖²` into a noise std deviation.
    pub c_sigma: f64,
}

impl ActorState {
    pub fn new(theta: [f64; 2]) -> Self {
        Self {
            theta,
            beta: 0.5,
            h: 0.5,
            c_sigma: 0.05,
        }
    }
}

impl Default for ActorState {
    fn default() -> Self {
        Self::new([0.0, 0.0])
    }
}

/// Deterministic control part `P_a = Fᵀ·θ`.
pub fn deterministic_action(theta: &[f64; 2], features: &FeatureVector) -> f64 {
    features.dot(theta)
}

/// State-dependent exploration magnitude `σ = c_σ·‖F‖²`.
///
/// A converged policy (`F = 0`) explores nothing.
pub fn exploration_sigma(features: &FeatureVector, c_sigma: f64) -> f64 {
    debug_assert!(c_sigma >= 0.0);
    c_sigma * features.norm_sq()
}

/// Policy-gradient step `θ' = θ − β·d·((P_e − P_d)/σ²)·∇_θ P_d`.
///
/// The gradient of `P_d = h·Fᵀθ + (1−h)·P_s` with respect to `θ` is `h·F`
/// (the supervisory part does not depend on `θ`). When the action carried no
/// exploration (`σ = 0`) there is no gradient signal and the update is a
/// no-op rather than a failure.
pub fn actor_update(
    actor: &ActorState,
    d: f64,
    action: &ControlAction,
    features: &FeatureVector,
) -> ActorState {
    let mut next = actor.clone();
    if action.sigma == 0.0 {
        return next;
    }
    let likelihood_ratio = (action.p_e - action.p_d) / (action.sigma * action.sigma);
    let scale = actor.beta * d * likelihood_ratio * actor.h;
    next.theta[0] -= scale * features.f_hyper;
    next.theta[1] -= scale * features.f_hypo;
    next
}
