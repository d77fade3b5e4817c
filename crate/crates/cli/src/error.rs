//! Error-to-exit-code mapping for the binary.

use roegen_core::Error;

/// Exit code classes: 2 validation, 3 numerical failure, 4 domain
/// violation (0 is success).
#[derive(Debug)]
pub enum CliError {
    Validation(String),
    Numerical(String),
    Domain(String),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Validation(_) => 2,
            CliError::Numerical(_) => 3,
            CliError::Domain(_) => 4,
        }
    }

    pub fn message(&self) -> &str {
        match self {
            CliError::Validation(m) | CliError::Numerical(m) | CliError::Domain(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        let msg = e.to_string();
        match e {
            Error::NoConvergence { .. }
            | Error::SingularApproach { .. }
            | Error::DegenerateJacobian
            | Error::EmptyFeasibleSet => CliError::Numerical(msg),
            Error::DomainViolation { .. }
            | Error::SingularLocus
            | Error::NonpositiveEntropy
            | Error::EmptyDomainIntersection => CliError::Domain(msg),
            Error::DegenerateCurve
            | Error::StepRejected
            | Error::StepTooLarge { .. }
            | Error::IndexOutOfRange { .. }
            | Error::InvalidInput(_) => CliError::Validation(msg),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Validation(format!("i/o error: {e}"))
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.message())
    }
}
