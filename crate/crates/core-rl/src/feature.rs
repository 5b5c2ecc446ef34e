use serde::{Deserialize, Serialize};

use crate::BASIS_DIM;

/// Normalized daily glycaemic features for one controlled quantity.
///
/// Both components live in `[0, 1]`: `f_hyper` summarizes how far above the
/// tight target range the day's readings were, `f_hypo` how far below. A
/// component is exactly zero when no reading qualified.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct FeatureVector {
    pub f_hyper: f64,
    pub f_hypo: f64,
}

impl FeatureVector {
    pub const ZERO: FeatureVector = FeatureVector {
        f_hyper: 0.0,
        f_hypo: 0.0,
    };

    pub fn new(f_hyper: f64, f_hypo: f64) -> Self {
        debug_assert!(f_hyper.is_finite() && f_hypo.is_finite());
        debug_assert!((0.0..=1.0).contains(&f_hyper) && (0.0..=1.0).contains(&f_hypo));
        Self { f_hyper, f_hypo }
    }

    /// Squared Euclidean norm, `f_hyper² + f_hypo²`.
    pub fn norm_sq(&self) -> f64 {
        self.f_hyper * self.f_hyper + self.f_hypo * self.f_hypo
    }

    /// `true` when both components are exactly zero (day fully in range).
    pub fn is_zero(&self) -> bool {
        self.f_hyper == 0.0 && self.f_hypo == 0.0
    }

    /// Critic basis mapping: the features augmented with a constant bias.
    pub fn basis(&self) -> [f64; BASIS_DIM] {
        [self.f_hyper, self.f_hypo, 1.0]
    }

    /// Dot product with a policy parameter pair.
    pub fn dot(&self, theta: &[f64; 2]) -> f64 {
        self.f_hyper * theta[0] + self.f_hypo * theta[1]
    }
}
