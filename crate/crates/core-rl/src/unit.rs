use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::{
    actor_update, compose_action, critic_update, deterministic_action, exploration_sigma,
    td_error, ActorState, ControlAction, CriticState, FeatureVector, RlError,
};

/// Actor-critic pair for one controlled quantity, plus the previous day's
/// action kept around for the delayed policy-gradient step.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ControllerUnit {
    pub actor: ActorState,
    pub critic: CriticState,
    /// Action composed on the previous update together with the features it
    /// was composed from. The TD error observed today is the critique of
    /// exactly that action, so the actor step credits it one day late.
    pub pending: Option<(ControlAction, FeatureVector)>,
}

/// Everything one daily step produced, for recording.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct UnitStep {
    pub cost: f64,
    pub td: f64,
    pub action: ControlAction,
}

impl ControllerUnit {
    pub fn new(actor: ActorState, critic: CriticState) -> Self {
        Self {
            actor,
            critic,
            pending: None,
        }
    }

    /// One end-of-day learning step.
    ///
    /// Consumes the day's features and local cost plus the mode-specific
    /// supervisory action, returns the freshly composed control action. The
    /// critic is updated with today's TD error; the actor credits the action
    /// stored from the previous step (skipped when that action carried no
    /// exploration).
    pub fn daily_step<R: Rng + ?Sized>(
        &mut self,
        features: FeatureVector,
        cost: f64,
        p_s: f64,
        rng: &mut R,
    ) -> Result<UnitStep, RlError> {
        let basis = features.basis();
        let v_next = crate::value_approx(&self.critic, &basis)?;
        let d = td_error(cost, self.critic.last_value, v_next, self.critic.gamma);

        let p_a = deterministic_action(&self.actor.theta, &features);
        let sigma = exploration_sigma(&features, self.actor.c_sigma);
        let action = compose_action(p_a, p_s, self.actor.h, sigma, rng);

        self.critic = critic_update(&self.critic, d, &basis)?;
        self.critic.last_value = crate::value_approx(&self.critic, &basis)?;

        if let Some((prev_action, prev_features)) = self.pending.take() {
            self.actor = actor_update(&self.actor, d, &prev_action, &prev_features);
        }
        self.pending = Some((action, features));

        Ok(UnitStep {
            cost,
            td: d,
            action,
        })
    }
}
