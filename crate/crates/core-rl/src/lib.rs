//! Actor-critic building blocks for daily therapy adaptation.
//!
//! One [`ControllerUnit`] owns the learning state for a single controlled
//! quantity (a basal rate or one carbohydrate ratio). The critic is a linear
//! TD(λ) value estimator over a small feature basis; the actor is a linear
//! policy updated with a likelihood-ratio policy gradient driven by the
//! critic's TD error. Exploration is state-dependent Gaussian noise whose
//! magnitude shrinks to zero as the features approach their target.

mod action;
mod actor;
mod critic;
mod error;
mod feature;
mod unit;

pub use action::{compose_action, ControlAction};
pub use actor::{actor_update, deterministic_action, exploration_sigma, ActorState};
pub use critic::{critic_update, td_error, value_approx, CriticState, LearningRateSchedule};
pub use error::RlError;
pub use feature::FeatureVector;
pub use unit::{ControllerUnit, UnitStep};

/// Dimension of the critic basis: the two features plus a constant bias term.
pub const BASIS_DIM: usize = 3;
