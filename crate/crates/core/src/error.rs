//! Error type shared by the whole crate.

use alloc::string::String;
use core::fmt;

pub type Result<T> = core::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Two values (or containers) from different scalar systems were mixed.
    SystemMismatch,
    /// A scalar payload does not belong to the system it was used with.
    InvalidScalar,
    /// Vector lengths or matrix dimensions disagree.
    DimensionMismatch { expected: usize, found: usize },
    /// A square matrix was required.
    NotSquare { rows: usize, cols: usize },
    /// An exhaustive operation was asked to exceed its size cap.
    SizeCap {
        what: &'static str,
        limit: usize,
        found: usize,
    },
    /// The operation needs an explicit finite carrier.
    InfiniteCarrier,
    /// The operation is not defined for this kind of system.
    UnsupportedSystem(&'static str),
    /// The system is not (known to be) a dioid with a nonzero
    /// multiplicatively absorbing element.
    NotMcos,
    /// The characteristic Boolean morphism requires a zerosumfree and
    /// entire system.
    CharBoolUnavailable { zerosumfree: bool, entire: bool },
    /// A non-entire morphism cannot transport attachment certificates.
    NotEntire,
    /// A Boolean-only operation was called on another system.
    NotBoolean,
    /// An attachment certificate violates its invariants.
    InvalidCertificate(&'static str),
    /// A monoid description table is malformed.
    InvalidMonoid(&'static str),
    /// A set family is malformed (duplicate sets, out-of-range elements, ...).
    InvalidFamily(&'static str),
    /// A digraph arc refers to a node outside the node set.
    InvalidDigraph(&'static str),
    /// A stated hypothesis of the operation does not hold for this input.
    Hypothesis(&'static str),
    /// Failure to parse a scalar literal or a structured description.
    Parse(String),
    /// Internal cross-check failed; this is a defect, never a result.
    Internal(&'static str),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::SystemMismatch => write!(f, "values come from different scalar systems"),
            Error::InvalidScalar => write!(f, "scalar payload does not belong to the system"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected}, found {found}")
            }
            Error::NotSquare { rows, cols } => {
                write!(f, "square matrix required, got {rows}x{cols}")
            }
            Error::SizeCap { what, limit, found } => {
                write!(f, "size cap exceeded for {what}: limit {limit}, got {found}")
            }
            Error::InfiniteCarrier => write!(f, "operation requires an explicit finite carrier"),
            Error::UnsupportedSystem(what) => write!(f, "unsupported system: {what}"),
            Error::NotMcos => write!(
                f,
                "system has no verified nonzero multiplicatively absorbing element"
            ),
            Error::CharBoolUnavailable { zerosumfree, entire } => write!(
                f,
                "characteristic Boolean morphism unavailable (zerosumfree: {zerosumfree}, entire: {entire})"
            ),
            Error::NotEntire => write!(f, "morphism is not entire"),
            Error::NotBoolean => write!(f, "operation requires the Boolean system"),
            Error::InvalidCertificate(why) => write!(f, "invalid certificate: {why}"),
            Error::InvalidMonoid(why) => write!(f, "invalid monoid description: {why}"),
            Error::InvalidFamily(why) => write!(f, "invalid set family: {why}"),
            Error::InvalidDigraph(why) => write!(f, "invalid digraph: {why}"),
            Error::Hypothesis(why) => write!(f, "hypothesis violated: {why}"),
            Error::Parse(why) => write!(f, "parse error: {why}"),
            Error::Internal(why) => write!(f, "internal inconsistency: {why}"),
        }
    }
}
