use serde::{Deserialize, Serialize};

use crate::MetricsError;

/// Percent of samples falling into each glycaemic band.
///
/// Bands partition the glucose axis: `<50`, `[50,70)`, `[70,180]`,
/// `(180,300]`, `>300` mg/dL. The boundary values 70 and 180 belong to the
/// target band, 50 to hypo and 300 to hyper.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct BandReport {
    pub pct_target: f64,
    pub pct_hypo: f64,
    pub pct_severe_hypo: f64,
    pub pct_hyper: f64,
    pub pct_severe_hyper: f64,
}

impl BandReport {
    /// Fraction of time out of the `[70, 180]` target band.
    pub fn pct_out_of_target(&self) -> f64 {
        self.pct_hypo + self.pct_severe_hypo + self.pct_hyper + self.pct_severe_hyper
    }

    /// Fraction of time below 70 mg/dL.
    pub fn pct_below_70(&self) -> f64 {
        self.pct_hypo + self.pct_severe_hypo
    }
}

/// Classify every sample into exactly one band and report percentages.
pub fn band_percentages(trace: &[f64]) -> Result<BandReport, MetricsError> {
    if trace.is_empty() {
        return Err(MetricsError::EmptyTrace);
    }
    let mut counts = [0usize; 5];
    for &g in trace {
        let idx = if g < 50.0 {
            0
        } else if g < 70.0 {
            1
        } else if g <= 180.0 {
            2
        } else if g <= 300.0 {
            3
        } else {
            4
        };
        counts[idx] += 1;
    }
    let n = trace.len() as f64;
    Ok(BandReport {
        pct_severe_hypo: 100.0 * counts[0] as f64 / n,
        pct_hypo: 100.0 * counts[1] as f64 / n,
        pct_target: 100.0 * counts[2] as f64 / n,
        pct_hyper: 100.0 * counts[3] as f64 / n,
        pct_severe_hyper: 100.0 * counts[4] as f64 / n,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    #[test]
    fn constant_in_range_is_all_target() {
        let r = band_percentages(&[100.0; 32]).unwrap();
        assert_eq!(r.pct_target, 100.0);
        assert_eq!(r.pct_out_of_target(), 0.0);
    }

    #[test]
    fn hyper_fraction_counts() {
        let mut trace = vec![120.0; 288];
        for g in trace.iter_mut().take(36) {
            *g = 250.0;
        }
        let r = band_percentages(&trace).unwrap();
        assert_relative_eq!(r.pct_hyper, 12.5);
        assert_relative_eq!(r.pct_target, 87.5);
    }

    #[test]
    fn boundaries_resolve_as_documented() {
        let r = band_percentages(&[70.0]).unwrap();
        assert_eq!(r.pct_target, 100.0);
        let r = band_percentages(&[50.0]).unwrap();
        assert_eq!(r.pct_hypo, 100.0);
        let r = band_percentages(&[180.0]).unwrap();
        assert_eq!(r.pct_target, 100.0);
        let r = band_percentages(&[300.0]).unwrap();
        assert_eq!(r.pct_hyper, 100.0);
    }

    #[test]
    fn empty_trace_is_an_error() {
        assert_eq!(band_percentages(&[]), Err(MetricsError::EmptyTrace));
    }
}
