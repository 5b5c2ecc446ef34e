use serde::{Deserialize, Serialize};

use crate::{FeatureVector, RlError, BASIS_DIM};

/// Positive non-increasing learning-rate sequence `a_k = a0 / (1 + k/tau)`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LearningRateSchedule {
    pub a0: f64,
    pub tau: f64,
    pub k: u64,
}

impl LearningRateSchedule {
    pub fn new(a0: f64, tau: f64) -> Self {
        assert!(a0 > 0.0 && tau > 0.0);
        Self { a0, tau, k: 0 }
    }

    /// Learning rate for the current step.
    pub fn current(&self) -> f64 {
        self.a0 / (1.0 + self.k as f64 / self.tau)
    }

    pub fn advance(&mut self) {
        self.k += 1;
    }
}

impl Default for LearningRateSchedule {
    fn default() -> Self {
        Self::new(0.1, 50.0)
    }
}

/// Linear TD(λ) critic: value weights, eligibility trace, and the cached
/// value of the previously visited state.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CriticState {
    pub w: Vec<f64>,
    pub z: Vec<f64>,
    pub gamma: f64,
    pub lambda: f64,
    pub schedule: LearningRateSchedule,
    pub last_value: f64,
}

impl CriticState {
    pub fn new(gamma: f64, lambda: f64, schedule: LearningRateSchedule) -> Self {
        assert!(gamma > 0.0 && gamma < 1.0, "gamma must be in (0, 1)");
        assert!((0.0..=1.0).contains(&lambda), "lambda must be in [0, 1]");
        Self {
            w: vec![0.0; BASIS_DIM],
            z: vec![0.0; BASIS_DIM],
            gamma,
            lambda,
            schedule,
            last_value: 0.0,
        }
    }

    /// Approximate value of a feature state under the current weights.
    pub fn value_of(&self, features: &FeatureVector) -> f64 {
        value_approx(self, &features.basis()).expect("basis dimension is fixed")
    }
}

/// Linear value approximation `wᵀ·g(x)`.
pub fn value_approx(critic: &CriticState, basis: &[f64]) -> Result<f64, RlError> {
    if basis.len() != critic.w.len() {
        return Err(RlError::DimensionMismatch {
            expected: critic.w.len(),
            got: basis.len(),
        });
    }
    Ok(critic.w.iter().zip(basis).map(|(w, g)| w * g).sum())
}

/// Temporal-difference residual `d = cost + gamma·v_next − v_now`.
pub fn td_error(cost: f64, v_now: f64, v_next: f64, gamma: f64) -> f64 {
    debug_assert!(gamma > 0.0 && gamma < 1.0);
    cost + gamma * v_next - v_now
}

/// One critic step: `w += a_k·d·z` with the current trace, then
/// `z = λ·z + g(x_next)`, then the learning rate advances.
pub fn critic_update(
    critic: &CriticState,
    d: f64,
    basis_next: &[f64],
) -> Result<CriticState, RlError> {
    if basis_next.len() != critic.w.len() {
        return Err(RlError::DimensionMismatch {
            expected: critic.w.len(),
            got: basis_next.len(),
        });
    }
    let a = critic.schedule.current();
    let mut next = critic.clone();
    for i in 0..next.w.len() {
        next.w[i] += a * d * critic.z[i];
        next.z[i] = critic.lambda * critic.z[i] + basis_next[i];
    }
    next.schedule.advance();
    Ok(next)
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn critic_with(w: Vec<f64>) -> CriticState {
        let mut c = CriticState::new(0.9, 0.5, LearningRateSchedule::default());
        c.w = w.clone();
        c.z = vec![0.0; w.len()];
        c
    }

    #[test]
    fn value_zero_weights() {
        let c = critic_with(vec![0.0, 0.0, 0.0]);
        assert_eq!(value_approx(&c, &[0.4, 0.9, 1.0]).unwrap(), 0.0);
    }

    #[test]
    fn value_hand_dot_products() {
        let c = critic_with(vec![1.0, 1.0, 1.0]);
        assert_relative_eq!(value_approx(&c, &[0.5, 0.2, 1.0]).unwrap(), 1.7);
        let c = critic_with(vec![2.0, -1.0, 0.0]);
        assert_relative_eq!(value_approx(&c, &[0.3, 0.3, 0.0]).unwrap(), 0.3);
    }

    #[test]
    fn value_dimension_mismatch() {
        let c = critic_with(vec![1.0, 1.0, 1.0]);
        assert_eq!(
            value_approx(&c, &[1.0, 2.0]),
            Err(RlError::DimensionMismatch {
                expected: 3,
                got: 2
            })
        );
    }

    #[test]
    fn td_error_cases() {
        assert_eq!(td_error(0.0, 0.0, 0.0, 0.9), 0.0);
        assert_relative_eq!(td_error(2.0, 5.0, 4.0, 0.9), 0.6, epsilon = 1e-12);
        // stationary value of a constant cost stream: v = c / (1 - gamma)
        let v = 1.0 / (1.0 - 0.9);
        assert_relative_eq!(td_error(1.0, v, v, 0.9), 0.0, epsilon = 1e-12);
    }

    #[test]
    fn critic_update_zero_td_error_keeps_weights() {
        let mut c = critic_with(vec![0.3, -0.2, 0.1]);
        c.z = vec![1.0, 0.5, 0.25];
        let next = critic_update(&c, 0.0, &[0.1, 0.2, 1.0]).unwrap();
        assert_eq!(next.w, c.w);
        // trace still decays and accumulates
        assert_eq!(next.z, vec![0.5 + 0.1, 0.25 + 0.2, 0.125 + 1.0]);
    }

    #[test]
    fn critic_update_hand_arithmetic() {
        // w=(1,1), a=0.1, d=0.6, z=(0.5,0.2) -> w'=(1.03, 1.012)
        let mut c = CriticState::new(0.9, 0.5, LearningRateSchedule::new(0.1, 50.0));
        c.w = vec![1.0, 1.0];
        c.z = vec![0.5, 0.2];
        let next = critic_update(&c, 0.6, &[0.0, 0.0]).unwrap();
        assert_relative_eq!(next.w[0], 1.03, epsilon = 1e-12);
        assert_relative_eq!(next.w[1], 1.012, epsilon = 1e-12);
    }

    #[test]
    fn critic_update_lambda_zero_resets_trace() {
        let mut c = CriticState::new(0.9, 0.0, LearningRateSchedule::default());
        c.z = vec![9.0, 9.0, 9.0];
        let basis = [0.3, 0.7, 1.0];
        let next = critic_update(&c, 1.0, &basis).unwrap();
        assert_eq!(next.z, basis.to_vec());
    }

    #[test]
    fn schedule_is_positive_and_non_increasing() {
        let mut s = LearningRateSchedule::new(0.1, 50.0);
        let mut prev = f64::INFINITY;
        for _ in 0..500 {
            let a = s.current();
            assert!(a > 0.0 && a <= prev);
            prev = a;
            s.advance();
        }
    }
}
