use alloc::string::String;
use core::fmt;

/// Failure modes of the core library.
///
/// Every variant carries enough context to produce a one-line diagnostic
/// naming the offending value.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Text that does not parse as the expected value.
    Parse { what: &'static str, input: String },
    /// Image list that is not a bijection on `{1..k}`.
    InvalidPermutation(String),
    /// Operands built over different ground sets (`k`, `v`, or lattice).
    Mismatch { what: &'static str, left: String, right: String },
    /// An inversion set that is required to be clopen is not.
    NotClopen(String),
    /// A word whose letter counts do not match the multiplicity vector.
    Parikh { word: String, vector: String },
    /// Index outside its admissible range.
    Index { what: &'static str, value: usize, bound: usize },
    /// A configured size cap would be exceeded.
    Cap { what: &'static str, limit: usize, found: usize },
    /// A permutation outside the principal ideal that is the image of `L(v)`.
    NotInIdeal(String),
    /// A vector whose plan condition fails (it encodes bottom or top).
    Degenerate(String),
    /// A word with the wrong number of descents (or ascents).
    NotIrreducible { kind: &'static str, word: String },
    /// A precondition on a pair of irreducibles fails.
    Relation { what: &'static str, detail: String },
    /// A set of join irreducibles that is not closed under `D`.
    NotDClosed(String),
    /// A cover list that does not describe a finite lattice.
    NotALattice(String),
    /// A pair that is not a prime quotient.
    NotPrimeQuotient { upper: String, lower: String },
    /// A triple that is not an `SD_n(meet)` failure.
    NotSdFailure { n: usize },
    /// The lattice is not meet semidistributive.
    NotMeetSemidistributive,
    /// A construction that a theorem guarantees came up empty.
    Inconsistency(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::Parse { what, input } => write!(f, "cannot parse {what} from {input:?}"),
            Error::InvalidPermutation(s) => write!(f, "not a permutation: {s}"),
            Error::Mismatch { what, left, right } => {
                write!(f, "{what} mismatch: {left} vs {right}")
            }
            Error::NotClopen(s) => write!(f, "inversion set {s} is not clopen"),
            Error::Parikh { word, vector } => {
                write!(f, "word {word:?} does not have letter counts {vector}")
            }
            Error::Index { what, value, bound } => {
                write!(f, "{what} {value} out of range (bound {bound})")
            }
            Error::Cap { what, limit, found } => {
                write!(f, "{what} is {found}, exceeding the cap of {limit}")
            }
            Error::NotInIdeal(s) => {
                write!(f, "permutation {s} is not increasing on the fibers of the bottom word")
            }
            Error::Degenerate(s) => write!(f, "vector {s} is degenerate"),
            Error::NotIrreducible { kind, word } => {
                write!(f, "word {word:?} is not {kind} irreducible")
            }
            Error::Relation { what, detail } => write!(f, "{what}: {detail}"),
            Error::NotDClosed(s) => write!(f, "set not closed under D: {s}"),
            Error::NotALattice(s) => write!(f, "not a lattice: {s}"),
            Error::NotPrimeQuotient { upper, lower } => {
                write!(f, "{upper}/{lower} is not a prime quotient")
            }
            Error::NotSdFailure { n } => write!(f, "triple is not an SD_{n} failure"),
            Error::NotMeetSemidistributive => write!(f, "lattice is not meet semidistributive"),
            Error::Inconsistency(s) => write!(f, "internal inconsistency: {s}"),
        }
    }
}

impl core::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
