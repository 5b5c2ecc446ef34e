use serde::{Deserialize, Serialize};

use crate::{
    band_percentages, bg_risk_indices, mage, mean, population_std, tdi, BandReport, DayInsulin,
    MetricsError,
};

/// A labelled evaluation window of whole days.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EvalWeek {
    pub label: String,
    pub start_day: u32,
    pub end_day: u32,
}

impl EvalWeek {
    /// Build a window, rejecting any overlap with an excluded day.
    pub fn new(
        label: impl Into<String>,
        start_day: u32,
        end_day: u32,
        excluded_days: &[u32],
    ) -> Result<Self, MetricsError> {
        let label = label.into();
        if end_day < start_day {
            return Err(MetricsError::BadDayRange {
                start: start_day,
                end: end_day,
            });
        }
        for &day in excluded_days {
            if (start_day..=end_day).contains(&day) {
                return Err(MetricsError::ExcludedDayOverlap { label, day });
            }
        }
        Ok(Self {
            label,
            start_day,
            end_day,
        })
    }

    pub fn days(&self) -> impl Iterator<Item = u32> {
        self.start_day..=self.end_day
    }

    pub fn len_days(&self) -> usize {
        (self.end_day - self.start_day + 1) as usize
    }
}

/// One patient's metrics over one week.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PatientWeekRow {
    pub patient_id: String,
    pub band: BandReport,
    pub lbgi: f64,
    pub hbgi: f64,
    /// Mean of the per-day MAGE values.
    pub mage_mgdl: f64,
    /// Mean total daily insulin over the week's days.
    pub tdi_u: f64,
}

/// Cohort mean or standard deviation of the per-patient week metrics.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct AggregateRow {
    pub pct_target: f64,
    pub pct_hypo: f64,
    pub pct_severe_hypo: f64,
    pub pct_hyper: f64,
    pub pct_severe_hyper: f64,
    pub lbgi: f64,
    pub hbgi: f64,
    pub mage_mgdl: f64,
    pub tdi_u: f64,
}

/// Per-patient rows plus their cohort mean and standard deviation.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct WeeklySummary {
    pub week: String,
    pub rows: Vec<PatientWeekRow>,
    pub mean: AggregateRow,
    pub sd: AggregateRow,
}

/// Metrics for one patient over one week of daily traces and deliveries.
///
/// Band percentages and risk indices are computed over the concatenated
/// week trace; MAGE uses per-day standard deviations and TDI is the mean
/// daily total.
pub fn patient_week_metrics(
    patient_id: impl Into<String>,
    daily_traces: &[Vec<f64>],
    daily_insulin: &[DayInsulin],
) -> Result<PatientWeekRow, MetricsError> {
    if daily_traces.is_empty() || daily_traces.len() != daily_insulin.len() {
        return Err(MetricsError::Invalid(format!(
            "need matching non-empty day lists, got {} traces and {} insulin days",
            daily_traces.len(),
            daily_insulin.len()
        )));
    }
    let week_trace: Vec<f64> = daily_traces.iter().flatten().copied().collect();
    let band = band_percentages(&week_trace)?;
    let (lbgi, hbgi) = bg_risk_indices(&week_trace)?;
    let daily_mage: Vec<f64> = daily_traces.iter().map(|day| mage(day).value).collect();
    let daily_tdi: Vec<f64> = daily_insulin.iter().map(tdi).collect();
    Ok(PatientWeekRow {
        patient_id: patient_id.into(),
        band,
        lbgi,
        hbgi,
        mage_mgdl: mean(&daily_mage),
        tdi_u: mean(&daily_tdi),
    })
}

/// Aggregate per-patient rows into cohort mean ± SD for one week.
pub fn weekly_summary(rows: &[PatientWeekRow], week: &EvalWeek) -> WeeklySummary {
    let collect = |f: &dyn Fn(&PatientWeekRow) -> f64| -> Vec<f64> { rows.iter().map(f).collect() };
    let fields: [(&dyn Fn(&PatientWeekRow) -> f64, fn(&mut AggregateRow) -> &mut f64); 9] = [
        (&|r| r.band.pct_target, |a| &mut a.pct_target),
        (&|r| r.band.pct_hypo, |a| &mut a.pct_hypo),
        (&|r| r.band.pct_severe_hypo, |a| &mut a.pct_severe_hypo),
        (&|r| r.band.pct_hyper, |a| &mut a.pct_hyper),
        (&|r| r.band.pct_severe_hyper, |a| &mut a.pct_severe_hyper),
        (&|r| r.lbgi, |a| &mut a.lbgi),
        (&|r| r.hbgi, |a| &mut a.hbgi),
        (&|r| r.mage_mgdl, |a| &mut a.mage_mgdl),
        (&|r| r.tdi_u, |a| &mut a.tdi_u),
    ];
    let mut mean_row = AggregateRow::default();
    let mut sd_row = AggregateRow::default();
    for (getter, setter) in fields {
        let values = collect(getter);
        *setter(&mut mean_row) = mean(&values);
        *setter(&mut sd_row) = population_std(&values);
    }
    WeeklySummary {
        week: week.label.clone(),
        rows: rows.to_vec(),
        mean: mean_row,
        sd: sd_row,
    }
}
