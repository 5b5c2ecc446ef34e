//! Substitute virtual type-1-diabetes patient.
//!
//! A seven-state glucose-insulin ODE (plasma glucose, remote insulin
//! action, plasma insulin, two gut CHO compartments, two subcutaneous
//! insulin depots) with meal absorption, an insulin-sensitivity schedule
//! carrying inter-day variability and an early-morning drop, multiplicative
//! sensor noise models, and seeded cohort generation with an equilibrium
//! screen.

mod cohort;
mod error;
mod model;
mod params;
mod schedule;
mod sensors;
pub mod streams;

pub use cohort::{cohort_from_toml, cohort_to_toml, generate_cohort, CohortConfig, CohortFile};
pub use error::PatientSimError;
pub use model::{step, PatientState};
pub use params::{PatientParams, StandardTreatment};
pub use schedule::{effective_si, SiSchedule};
pub use sensors::{cgm_sample, smbg_sample, GlucoseSample, SensorConfig, CGM_PERIOD_MIN};
