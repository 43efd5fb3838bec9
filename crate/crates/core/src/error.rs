use core::fmt;

/// Errors raised by the algebraic routines.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Argument lengths or variable counts do not match.
    InvalidArity(&'static str),
    /// An argument is outside the operation's domain.
    InvalidArgument(&'static str),
    /// A polynomial expected to be antisymmetric is not.
    NotAntisymmetric,
    /// A partition has more parts than there are variables.
    InvalidPartition,
    /// The pairing is degenerate below the requested degree.
    DegenerateMeasure,
    /// A formula dividing by a Vandermonde product received repeated coordinates.
    CoincidentPoints,
    /// A required denominator vanishes.
    SingularInput,
    /// The Gram matrix of two candidate bases is singular.
    DegenerateBasis,
    /// Measure construction rejected the points or weights.
    InvalidMeasure(&'static str),
    /// Text could not be parsed as a rational.
    Parse,
}

pub type Result<T> = core::result::Result<T, Error>;

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidArity(what) => write!(f, "arity mismatch: {what}"),
            Error::InvalidArgument(what) => write!(f, "invalid argument: {what}"),
            Error::NotAntisymmetric => f.write_str("polynomial is not antisymmetric"),
            Error::InvalidPartition => f.write_str("partition has too many parts"),
            Error::DegenerateMeasure => f.write_str("pairing is degenerate"),
            Error::CoincidentPoints => f.write_str("coincident coordinates"),
            Error::SingularInput => f.write_str("zero denominator"),
            Error::DegenerateBasis => f.write_str("bases have a singular Gram matrix"),
            Error::InvalidMeasure(what) => write!(f, "invalid measure: {what}"),
            Error::Parse => f.write_str("malformed rational literal"),
        }
    }
}

impl core::error::Error for Error {}
