//! Property suites for the actor-critic primitives.

use core_rl::{
    actor_update, compose_action, critic_update, exploration_sigma, td_error, ActorState,
    ControlAction, CriticState, FeatureVector, LearningRateSchedule,
};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn feature_strategy() -> impl Strategy<Value = FeatureVector> {
    (0.0f64..=1.0, 0.0f64..=1.0).prop_map(|(a, b)| FeatureVector::new(a, b))
}

/// Central finite differences of `p_d(θ) = h·Fᵀθ + (1−h)·p_s`.
fn fd_grad(h: f64, f: &FeatureVector, p_s: f64, theta: [f64; 2]) -> [f64; 2] {
    let p_d = |t: [f64; 2]| h * (f.f_hyper * t[0] + f.f_hypo * t[1]) + (1.0 - h) * p_s;
    let eps = 1e-6;
    let mut g = [0.0; 2];
    for i in 0..2 {
        let mut hi = theta;
        let mut lo = theta;
        hi[i] += eps;
        lo[i] -= eps;
        g[i] = (p_d(hi) - p_d(lo)) / (2.0 * eps);
    }
    g
}

proptest! {
    /// The analytic gradient used by `actor_update` (h·F) matches central
    /// finite differences of p_d to relative error <= 1e-6.
    #[test]
    fn actor_gradient_matches_finite_differences(
        f in feature_strategy(),
        theta0 in -1.0f64..1.0,
        theta1 in -1.0f64..1.0,
        p_s in -0.1f64..0.1,
    ) {
        let h = 0.5;
        let fd = fd_grad(h, &f, p_s, [theta0, theta1]);
        let analytic = [h * f.f_hyper, h * f.f_hypo];
        for i in 0..2 {
            let denom = analytic[i].abs().max(1e-9);
            prop_assert!((fd[i] - analytic[i]).abs() / denom <= 1e-6,
                "component {i}: fd={} analytic={}", fd[i], analytic[i]);
        }
    }

    /// The actor moves by exactly −β·d·((p_e−p_d)/σ²)·h·F.
    #[test]
    fn actor_update_matches_closed_form(
        f in feature_strategy(),
        d in -5.0f64..5.0,
        noise in -0.2f64..0.2,
        sigma in 1e-4f64..0.2,
    ) {
        let actor = ActorState::new([0.01, -0.05]);
        let action = ControlAction { p_a: 0.0, p_s: 0.0, p_d: 0.1, noise, p_e: 0.1 + noise, sigma };
        let next = actor_update(&actor, d, &action, &f);
        let scale = actor.beta * d * (noise / (sigma * sigma)) * actor.h;
        prop_assert!((next.theta[0] - (actor.theta[0] - scale * f.f_hyper)).abs() < 1e-12);
        prop_assert!((next.theta[1] - (actor.theta[1] - scale * f.f_hypo)).abs() < 1e-12);
    }

    /// σ is monotone nondecreasing in the magnitude of each component and
    /// exactly zero at F = 0.
    #[test]
    fn exploration_sigma_monotone(
        a in 0.0f64..=1.0,
        b in 0.0f64..=1.0,
        bump in 0.0f64..0.5,
    ) {
        let c = 0.05;
        prop_assert_eq!(exploration_sigma(&FeatureVector::ZERO, c), 0.0);
        let base = exploration_sigma(&FeatureVector::new(a, b), c);
        let up_hyper = exploration_sigma(&FeatureVector::new((a + bump).min(1.0), b), c);
        let up_hypo = exploration_sigma(&FeatureVector::new(a, (b + bump).min(1.0)), c);
        prop_assert!(up_hyper >= base);
        prop_assert!(up_hypo >= base);
    }

    /// Same seed, same action, bit for bit; σ = 0 means zero noise.
    #[test]
    fn compose_action_reproducible(seed in any::<u64>(), p_a in -0.2f64..0.2, p_s in -0.2f64..0.2) {
        let mut r1 = ChaCha8Rng::seed_from_u64(seed);
        let mut r2 = ChaCha8Rng::seed_from_u64(seed);
        let a1 = compose_action(p_a, p_s, 0.5, 0.05, &mut r1);
        let a2 = compose_action(p_a, p_s, 0.5, 0.05, &mut r2);
        prop_assert_eq!(a1.p_e.to_bits(), a2.p_e.to_bits());

        let silent = compose_action(p_a, p_s, 0.5, 0.0, &mut r1);
        prop_assert_eq!(silent.noise, 0.0);
        prop_assert_eq!(silent.p_e, silent.p_d);
    }

    /// d = 0 never changes w; λ = 0 resets the trace to the new basis.
    #[test]
    fn critic_invariants(
        z in prop::collection::vec(-2.0f64..2.0, 3),
        basis in prop::collection::vec(0.0f64..1.0, 3),
        w in prop::collection::vec(-3.0f64..3.0, 3),
    ) {
        let mut c = CriticState::new(0.9, 0.5, LearningRateSchedule::default());
        c.w = w.clone();
        c.z = z;
        let next = critic_update(&c, 0.0, &basis).unwrap();
        prop_assert_eq!(next.w, w.clone());

        let mut c0 = CriticState::new(0.9, 0.0, LearningRateSchedule::default());
        c0.w = w;
        let next = critic_update(&c0, 1.3, &basis).unwrap();
        prop_assert_eq!(next.z, basis);
    }

    /// A constant-cost, constant-value fixed point has zero TD error.
    #[test]
    fn td_fixed_point(cost in 0.0f64..10.0, gamma in 0.05f64..0.95) {
        let v = cost / (1.0 - gamma);
        prop_assert!(td_error(cost, v, v, gamma).abs() <= 1e-9 * v.abs().max(1.0));
    }
}
