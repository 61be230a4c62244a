use serde::{Deserialize, Serialize};

/// One disagreement, with exact values in canonical text form.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Failure {
    pub inputs: String,
    pub lhs: String,
    pub rhs: String,
    /// `|lhs − rhs|`, a relative residual, or a ratio spread, depending on the suite.
    pub delta: String,
}

impl Failure {
    pub fn new(inputs: impl Into<String>, lhs: impl ToString, rhs: impl ToString, delta: impl ToString) -> Self {
        Failure { inputs: inputs.into(), lhs: lhs.to_string(), rhs: rhs.to_string(), delta: delta.to_string() }
    }

    /// A case where one side could not be evaluated at all.
    pub fn error(inputs: impl Into<String>, err: impl ToString) -> Self {
        Failure::new(inputs, format!("error: {}", err.to_string()), "-", "-")
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub suite: String,
    pub pass: bool,
    pub cases_run: u64,
    pub failures: Vec<Failure>,
    pub wall_time_s: f64,
    pub notes: String,
}

impl IdentityReport {
    /// The report with timing removed; what determinism is defined over.
    pub fn payload(&self) -> IdentityReport {
        IdentityReport { wall_time_s: 0.0, ..self.clone() }
    }
}
