use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum MetricsError {
    #[error("empty glucose trace")]
    EmptyTrace,
    #[error("non-positive glucose sample {0} mg/dL")]
    NonPositiveSample(f64),
    #[error("paired samples must have equal length >= 6, got {x} and {y}")]
    BadPairing { x: usize, y: usize },
    #[error("week '{label}' overlaps excluded day {day}")]
    ExcludedDayOverlap { label: String, day: u32 },
    #[error("invalid day range {start}..={end}")]
    BadDayRange { start: u32, end: u32 },
    #[error("{0}")]
    Invalid(String),
}
