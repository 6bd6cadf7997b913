use thiserror::Error;

/// Failure of a subcommand, mapped onto the process exit code.
#[derive(Debug, Error)]
pub enum CliError {
    /// Malformed or inconsistent input: exit code 2.
    #[error("{0}")]
    Invalid(String),
    /// The input was valid but a checked property does not hold: exit code 1.
    #[error("{0}")]
    Failed(String),
    #[error("i/o: {0}")]
    Io(#[from] std::io::Error),
}

impl CliError {
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Invalid(_) | CliError::Io(_) => 2,
            CliError::Failed(_) => 1,
        }
    }
}

impl From<equidist::GeomError> for CliError {
    fn from(e: equidist::GeomError) -> Self {
        CliError::Invalid(e.to_string())
    }
}
