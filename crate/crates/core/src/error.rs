use alloc::string::String;

/// Errors raised by the numerical core.
#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("invalid state: {0}")]
    InvalidState(String),
    #[error("invalid probability distribution: {0}")]
    InvalidDistribution(String),
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error("domain error: {0}")]
    Domain(String),
    #[error("resource limit: {what} needs dimension {needed}, cap is {cap}")]
    ResourceLimit {
        what: &'static str,
        needed: u128,
        cap: usize,
    },
    #[error("invalid channel: {0}")]
    InvalidChannel(String),
    #[error("invalid representation: {0}")]
    InvalidRepresentation(String),
    #[error("invalid POVM: {0}")]
    InvalidPovm(String),
    #[error("precondition failed: {0}")]
    Precondition(String),
    #[error("theorem inapplicable: {0}")]
    TheoremInapplicable(String),
    #[error("closed form inapplicable: {0}")]
    ClosedFormInapplicable(String),
}

impl Error {
    /// True for errors caused by exceeding a configured size cap.
    pub fn is_resource_limit(&self) -> bool {
        matches!(self, Error::ResourceLimit { .. })
    }
}

pub type Result<T> = core::result::Result<T, Error>;

macro_rules! bail {
    ($variant:ident, $($arg:tt)*) => {
        return Err($crate::error::Error::$variant(alloc::format!($($arg)*)))
    };
}
pub(crate) use bail;
