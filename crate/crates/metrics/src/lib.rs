//! Glycaemic outcome metrics and the statistics used to compare trial arms.
//!
//! All functions operate on plain glucose traces (mg/dL) and insulin
//! delivery records; nothing here depends on how the data was produced.

mod bands;
mod error;
mod mage;
mod risk;
mod stats;
mod tdi;
mod weekly;
mod wilcoxon;

pub use bands::{band_percentages, BandReport};
pub use error::MetricsError;
pub use mage::{mage, MageResult};
pub use risk::{bg_risk_indices, risk_value};
pub use stats::{mean, median, population_std, quartiles};
pub use tdi::{tdi, BasalSegment, Bolus, DayInsulin};
pub use weekly::{
    patient_week_metrics, weekly_summary, AggregateRow, EvalWeek, PatientWeekRow, WeeklySummary,
};
pub use wilcoxon::{wilcoxon_signed_rank, WilcoxonResult};
