use serde::{Deserialize, Serialize};

use crate::population_std;

/// Mean amplitude of glycaemic excursions plus bookkeeping about whether any
/// excursion qualified at all.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct MageResult {
    /// Mean counted excursion amplitude, mg/dL; 0 when none qualified.
    pub value: f64,
    /// Number of counted excursions.
    pub excursions: usize,
    /// Set when the trace produced no qualifying excursion.
    pub no_excursion: bool,
}

#[derive(Clone, Copy)]
enum Trend {
    Unknown,
    Up,
    Down,
}

/// Classical MAGE with a deterministic turning-point scan.
///
/// Turning points are local extremes confirmed by a reversal of at least one
/// standard deviation of the trace; consecutive confirmed turning points
/// alternate direction by construction, and MAGE is the mean absolute
/// difference between them. Segments before the first and after the last
/// confirmed turning point contribute no excursion.
pub fn mage(trace: &[f64]) -> MageResult {
    let none = MageResult {
        value: 0.0,
        excursions: 0,
        no_excursion: true,
    };
    if trace.len() < 3 {
        return none;
    }
    let sd = population_std(trace);
    if sd == 0.0 {
        return none;
    }

    let mut pivots: Vec<f64> = Vec::new();
    let mut trend = Trend::Unknown;
    let mut hi = trace[0];
    let mut lo = trace[0];
    let mut cand = trace[0];
    for &x in &trace[1..] {
        match trend {
            Trend::Unknown => {
                hi = hi.max(x);
                lo = lo.min(x);
                if x >= lo + sd {
                    trend = Trend::Up;
                    cand = x;
                } else if x <= hi - sd {
                    trend = Trend::Down;
                    cand = x;
                }
            }
            Trend::Up => {
                cand = cand.max(x);
                if x <= cand - sd {
                    pivots.push(cand);
                    trend = Trend::Down;
                    cand = x;
                }
            }
            Trend::Down => {
                cand = cand.min(x);
                if x >= cand + sd {
                    pivots.push(cand);
                    trend = Trend::Up;
                    cand = x;
                }
            }
        }
    }

    if pivots.len() < 2 {
        return none;
    }
    let swings: Vec<f64> = pivots.windows(2).map(|w| (w[1] - w[0]).abs()).collect();
    MageResult {
        value: swings.iter().sum::<f64>() / swings.len() as f64,
        excursions: swings.len(),
        no_excursion: false,
    }
}
