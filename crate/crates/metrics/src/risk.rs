use crate::MetricsError;

/// Symmetrized blood-glucose risk transform `f(g) = 1.509·((ln g)^1.084 − 5.381)`.
///
/// Negative values signal hypoglycaemic risk, positive values
/// hyperglycaemic risk; the zero sits near 112.5 mg/dL.
pub fn risk_value(g: f64) -> f64 {
    1.509 * (g.ln().powf(1.084) - 5.381)
}

/// Low and high blood-glucose risk indices of a trace.
///
/// Per-sample risk is `10·f(g)²`, attributed to the low index when
/// `f(g) < 0` and to the high index when `f(g) > 0`; each index is the mean
/// of its per-sample contributions over the whole trace.
pub fn bg_risk_indices(trace: &[f64]) -> Result<(f64, f64), MetricsError> {
    if trace.is_empty() {
        return Err(MetricsError::EmptyTrace);
    }
    let mut low_sum = 0.0;
    let mut high_sum = 0.0;
    for &g in trace {
        if g <= 0.0 {
            return Err(MetricsError::NonPositiveSample(g));
        }
        let f = risk_value(g);
        let r = 10.0 * f * f;
        if f < 0.0 {
            low_sum += r;
        } else if f > 0.0 {
            high_sum += r;
        }
    }
    let n = trace.len() as f64;
    Ok((low_sum / n, high_sum / n))
}
