use frameness_core::Error as CoreError;

/// Exit status for a successful run.
pub const EXIT_OK: i32 = 0;
/// Invalid input or a failed check.
pub const EXIT_VALIDATION: i32 = 2;
/// A dimension or size cap was hit.
pub const EXIT_RESOURCE: i32 = 3;
/// Unparseable command line.
pub const EXIT_USAGE: i32 = 64;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Core(#[from] CoreError),
    #[error("invalid input: {0}")]
    Validation(String),
    #[error("{0}")]
    Usage(String),
    #[error("i/o error: {0}")]
    Io(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(e) if e.is_resource_limit() => EXIT_RESOURCE,
            CliError::Usage(_) => EXIT_USAGE,
            _ => EXIT_VALIDATION,
        }
    }
}

pub type CliResult<T> = Result<T, CliError>;
