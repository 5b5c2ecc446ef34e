use thiserror::Error;

#[derive(Debug, Error)]
pub enum PatientSimError {
    #[error("simulation diverged for patient {patient}: non-finite state at day {day}, minute {t_min}")]
    NumericAbort {
        patient: String,
        day: u32,
        t_min: u32,
    },
    #[error("cohort generation exhausted {retries} redraws for patient slot {slot}")]
    RetriesExhausted { slot: usize, retries: usize },
    #[error("no basal rate can reach the fasting target: required insulin action is non-positive")]
    InfeasibleBasal,
    #[error("bolus probe failed to bracket the target response")]
    ProbeBracket,
    #[error("cohort file error: {0}")]
    CohortFile(String),
}
