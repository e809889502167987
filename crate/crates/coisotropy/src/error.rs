use std::fmt;

/// Errors shared across the whole crate.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Error {
    /// Operands live in different polynomial rings.
    RingMismatch,
    /// An operation required a homogeneous ideal or polynomial.
    NonHomogeneous,
    /// Saturation or division by the zero polynomial.
    ZeroDivisor,
    /// Requested minor size exceeds the matrix dimensions.
    MinorSize { size: usize, rows: usize, cols: usize },
    /// Index tuples do not partition {0..n} or are malformed.
    BadIndices(String),
    /// A polynomial was given in the wrong Plücker convention (primal vs dual).
    WrongConvention,
    /// Coisotropic index outside the admissible range of Cor. on hypersurface indices.
    IndexOutOfRange { i: isize, max: isize },
    /// Elimination produced a non-principal ideal where a single form was expected.
    NotPrincipal(usize),
    /// A linear system that should determine a Plücker form was inconsistent.
    Inconsistent(String),
    /// Cooperative deadline exceeded inside a long-running computation.
    DeadlineExceeded(&'static str),
    /// Generic random slices failed to become zero-dimensional after bounded retries.
    SliceFailure(String),
    /// Text input could not be parsed; byte position of the offending token.
    Parse { pos: usize, msg: String },
    /// Desk-scale guard tripped (ambient dimension too large).
    TooLarge(String),
    /// Precondition violated; message explains which one.
    Precondition(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::RingMismatch => write!(f, "operands belong to different rings"),
            Error::NonHomogeneous => write!(f, "input must be homogeneous"),
            Error::ZeroDivisor => write!(f, "zero polynomial not allowed here"),
            Error::MinorSize { size, rows, cols } => {
                write!(f, "minor size {size} out of range for {rows}x{cols} matrix")
            }
            Error::BadIndices(s) => write!(f, "bad index tuple: {s}"),
            Error::WrongConvention => write!(f, "polynomial is in the wrong Plücker convention"),
            Error::IndexOutOfRange { i, max } => write!(
                f,
                "coisotropic index {i} out of range: the admissible range is 0 <= i <= {max}"
            ),
            Error::NotPrincipal(k) => write!(
                f,
                "internal error: elimination returned {k} generators where a principal ideal was expected"
            ),
            Error::Inconsistent(s) => write!(f, "inconsistent linear system: {s}"),
            Error::DeadlineExceeded(stage) => write!(f, "deadline exceeded during {stage}"),
            Error::SliceFailure(s) => write!(f, "generic slice failure: {s}"),
            Error::Parse { pos, msg } => write!(f, "parse error at position {pos}: {msg}"),
            Error::TooLarge(s) => write!(f, "input beyond desk scale: {s}"),
            Error::Precondition(s) => write!(f, "precondition violated: {s}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
