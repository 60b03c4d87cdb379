use alloc::string::String;
use core::fmt;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two operands were built over different variable tables.
    TableMismatch,
    /// An exponent left the 16-bit range.
    ExponentOverflow,
    InvalidTable(String),
    Parse {
        position: usize,
        message: String,
    },
    UnknownVariable(String),
    MissingVariable(String),
    ZeroPolynomial,
    NonHomogeneous,
    /// Query above the sealed degree range of a quotient.
    NotSealed {
        degree: u32,
        sealed_to: u32,
    },
    InvalidParams(String),
    GeneratorDegreeMismatch(String),
    SourceMismatch,
    Assertion(String),
    UnknownClaim(String),
    UnsupportedT(u32),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::TableMismatch => f.write_str("operands use different variable tables"),
            Error::ExponentOverflow => f.write_str("exponent overflow (limit 65535)"),
            Error::InvalidTable(m) => write!(f, "invalid variable table: {m}"),
            Error::Parse { position, message } => {
                write!(f, "syntax error at position {position}: {message}")
            }
            Error::UnknownVariable(v) => write!(f, "unknown variable `{v}`"),
            Error::MissingVariable(v) => write!(f, "ring has no variable `{v}`"),
            Error::ZeroPolynomial => f.write_str("zero polynomial where a nonzero one is required"),
            Error::NonHomogeneous => f.write_str("generator is not homogeneous"),
            Error::NotSealed { degree, sealed_to } => {
                write!(
                    f,
                    "degree {degree} is above the sealed range 0..={sealed_to}"
                )
            }
            Error::InvalidParams(m) => write!(f, "invalid parameters: {m}"),
            Error::GeneratorDegreeMismatch(m) => write!(f, "generator degree mismatch: {m}"),
            Error::SourceMismatch => f.write_str("maps do not share a source ring"),
            Error::Assertion(m) => write!(f, "assertion failed: {m}"),
            Error::UnknownClaim(c) => write!(f, "unknown claim `{c}`"),
            Error::UnsupportedT(t) => write!(f, "t = {t} is outside the supported range 3..=8"),
        }
    }
}

impl core::error::Error for Error {}
