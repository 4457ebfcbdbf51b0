//! Error-to-exit-code mapping: 0 success, 2 validation, 3 infeasible or
//! cap exceeded, 4 estimator error (IO and internal problems exit 1).

use std::fmt;

#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Infeasible(String),
    Estimator(String),
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Infeasible(_) => 3,
            CliError::Estimator(_) => 4,
            CliError::Io(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Validation(m) => write!(f, "invalid arguments: {m}"),
            CliError::Infeasible(m) => write!(f, "infeasible: {m}"),
            CliError::Estimator(m) => write!(f, "estimator error: {m}"),
            CliError::Io(m) => write!(f, "io error: {m}"),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Io(e.to_string())
    }
}
