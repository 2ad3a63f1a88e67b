use core::fmt;

use crate::inversions::AxiomViolation;

/// Domain errors shared across the crate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// The empty signature indexes nothing.
    EmptySignature,
    /// Two arguments were built over different signatures.
    SignatureMismatch,
    /// Two multi inversion sets have different sizes.
    SizeMismatch { left: usize, right: usize },
    /// A label lies outside `1..=n` or a pair is not ordered `x < y`.
    InvalidLabelPair { y: usize, x: usize, n: usize },
    /// A multi inversion set failed one of the tree-inversion axioms.
    InvalidInversionSet(AxiomViolation),
    /// The given tree does not have the shape prescribed by its signature.
    MalformedTree(&'static str),
    /// The requested pair is not a tree-ascent of the tree.
    NotAnAscent { a: usize, c: usize },
    /// The requested pair is not a Tamari-ascent of the tree.
    NotATamariAscent { a: usize, c: usize },
    /// The operation is only defined on s-Tamari trees.
    NotTamari,
    /// The operation needs a signature without zero entries.
    ZeroSignature,
    /// Congruence and quotient machinery is undefined for this signature:
    /// with a zero entry after the first position the s-Tamari lattice is
    /// not a lattice quotient of the s-weak order (already for s = (0,0,1)
    /// the s-weak order is a square while the s-Tamari order is a 3-chain,
    /// and a square has no 3-chain quotient).
    QuotientUnsupported,
    /// An enumeration would exceed the configured element limit.
    ElementLimit { required: usize, limit: usize },
    /// Exact integer arithmetic overflowed.
    Overflow,
    /// The operation needs strictly positive integer arguments.
    NonPositiveInput,
    /// A point index or lattice point is outside the object.
    PointOutOfRange,
    /// A step word contains characters other than `N` and `E`.
    InvalidStepWord,
    /// The path does not share endpoints with nu or dips below it.
    NotANuPath,
    /// The indexed lattice point is not a valley of the path.
    NotAValley,
    /// The point is not an ascent point of the nu-tree.
    NotANuAscent,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptySignature => write!(f, "signature must have at least one entry"),
            Error::SignatureMismatch => write!(f, "arguments have different signatures"),
            Error::SizeMismatch { left, right } => {
                write!(f, "inversion sets have different sizes: {left} vs {right}")
            }
            Error::InvalidLabelPair { y, x, n } => {
                write!(f, "pair ({y},{x}) is not an ordered label pair in 1..={n}")
            }
            Error::InvalidInversionSet(v) => write!(f, "invalid inversion set: {v}"),
            Error::MalformedTree(msg) => write!(f, "malformed tree: {msg}"),
            Error::NotAnAscent { a, c } => write!(f, "({a},{c}) is not a tree-ascent"),
            Error::NotATamariAscent { a, c } => write!(f, "({a},{c}) is not a Tamari-ascent"),
            Error::NotTamari => write!(f, "tree is not an s-Tamari tree"),
            Error::ZeroSignature => {
                write!(f, "operation requires a signature without zero entries")
            }
            Error::QuotientUnsupported => write!(
                f,
                "signature has a zero entry after the first position; the s-Tamari \
                 lattice is not a quotient of the s-weak order there (for s=(0,0,1) \
                 the s-weak order is a square and the s-Tamari order a 3-chain, and \
                 a square has no 3-chain quotient)"
            ),
            Error::ElementLimit { required, limit } => write!(
                f,
                "enumeration needs {required} elements, above the configured limit {limit}"
            ),
            Error::Overflow => write!(f, "exact integer arithmetic overflowed"),
            Error::NonPositiveInput => write!(f, "arguments must be strictly positive"),
            Error::PointOutOfRange => write!(f, "point index out of range"),
            Error::InvalidStepWord => write!(f, "step words use only the letters N and E"),
            Error::NotANuPath => write!(f, "path must share endpoints with nu and stay weakly above it"),
            Error::NotAValley => write!(f, "indexed lattice point is not a valley"),
            Error::NotANuAscent => write!(f, "point is not an ascent point of the nu-tree"),
        }
    }
}

impl core::error::Error for Error {}
