use serde::{Deserialize, Serialize};

/// One basal-rate segment; it runs until the next segment starts (or
/// midnight for the last one).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BasalSegment {
    pub start_min: u32,
    pub rate_u_per_h: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Bolus {
    pub t_min: u32,
    pub units: f64,
    /// 1..=3 for the main meals, 0 for anything else.
    pub meal_index: u8,
}

/// Insulin delivered over one day: basal segments covering 24 h plus boluses.
#[derive(Debug, Clone, PartialEq, Default, Serialize, Deserialize)]
pub struct DayInsulin {
    pub basal_segments: Vec<BasalSegment>,
    pub boluses: Vec<Bolus>,
}

impl DayInsulin {
    pub fn flat(rate_u_per_h: f64) -> Self {
        Self {
            basal_segments: vec![BasalSegment {
                start_min: 0,
                rate_u_per_h,
            }],
            boluses: Vec::new(),
        }
    }
}

/// Total daily insulin: the basal integral over 24 h plus all boluses.
pub fn tdi(day: &DayInsulin) -> f64 {
    let mut total = 0.0;
    for (i, seg) in day.basal_segments.iter().enumerate() {
        let end = day
            .basal_segments
            .get(i + 1)
            .map_or(1440, |next| next.start_min);
        debug_assert!(end >= seg.start_min);
        total += seg.rate_u_per_h * f64::from(end - seg.start_min) / 60.0;
    }
    total + day.boluses.iter().map(|b| b.units).sum::<f64>()
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn bolus(t_min: u32, units: f64) -> Bolus {
        Bolus {
            t_min,
            units,
            meal_index: 1,
        }
    }

    #[test]
    fn flat_basal_plus_boluses() {
        let mut day = DayInsulin::flat(1.0);
        day.boluses = vec![bolus(420, 5.0), bolus(720, 6.0), bolus(1110, 8.0)];
        assert_relative_eq!(tdi(&day), 43.0);
    }

    #[test]
    fn skipped_meal_removes_exactly_its_bolus() {
        let mut with_meal = DayInsulin::flat(0.8);
        with_meal.boluses = vec![bolus(420, 5.0), bolus(720, 6.0)];
        let mut without = with_meal.clone();
        without.boluses.remove(1);
        assert_relative_eq!(tdi(&with_meal) - tdi(&without), 6.0);
    }

    #[test]
    fn flat_rate_integrates_to_24_times_rate() {
        let day = DayInsulin::flat(1.35);
        assert_relative_eq!(tdi(&day), 24.0 * 1.35, epsilon = 1e-12);
    }

    #[test]
    fn split_day_integrates_piecewise() {
        let day = DayInsulin {
            basal_segments: vec![
                BasalSegment {
                    start_min: 0,
                    rate_u_per_h: 1.0,
                },
                BasalSegment {
                    start_min: 1380,
                    rate_u_per_h: 2.0,
                },
            ],
            boluses: vec![],
        };
        assert_relative_eq!(tdi(&day), 23.0 + 2.0, epsilon = 1e-12);
    }
}
