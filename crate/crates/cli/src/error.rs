use thiserror::Error;

#[derive(Debug, Error)]
pub enum CliError {
    /// Bad flags, config file contents or parameter values.
    #[error("{0}")]
    Config(String),
    /// The computation itself failed.
    #[error("{0}")]
    Numeric(String),
    #[error("{0}")]
    Io(String),
    /// `verify` ran but at least one check failed.
    #[error("{0}")]
    Verify(String),
}

impl CliError {
    pub fn tag(&self) -> &'static str {
        match self {
            CliError::Config(_) => "config",
            CliError::Numeric(_) => "numeric",
            CliError::Io(_) => "io",
            CliError::Verify(_) => "verify",
        }
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Verify(_) => 1,
            CliError::Config(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Io(_) => 4,
        }
    }

    pub fn config(msg: impl Into<String>) -> Self {
        CliError::Config(msg.into())
    }
}

impl From<qgame_core::Error> for CliError {
    fn from(e: qgame_core::Error) -> Self {
        use qgame_core::Error as E;
        match e {
            E::NonFinitePayoff { .. } | E::NoEquilibrium(_) => CliError::Numeric(e.to_string()),
            _ => CliError::Config(e.to_string()),
        }
    }
}
