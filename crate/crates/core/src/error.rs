use alloc::string::String;
use core::fmt;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Input violates an operation's precondition.
    Parameter(String),
    /// An exhaustive enumeration would exceed its configured cap.
    CapExceeded {
        what: &'static str,
        needed: u128,
        cap: u128,
    },
}

impl Error {
    pub(crate) fn param(msg: impl Into<String>) -> Self {
        Error::Parameter(msg.into())
    }
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parameter(msg) => write!(f, "invalid parameter: {msg}"),
            Error::CapExceeded { what, needed, cap } => {
                write!(f, "{what} is {needed}, above the enumeration cap of {cap}")
            }
        }
    }
}

impl core::error::Error for Error {}
