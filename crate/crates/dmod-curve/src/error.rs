use std::fmt;

/// Errors produced across the crate. Mathematical precondition violations
/// carry enough context to be reported verbatim by the CLI.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Generator list for a numerical semigroup was empty.
    EmptyGenerators,
    /// A semigroup generator was zero or negative.
    NonPositiveGenerator(i64),
    /// The generators have a common factor, so the gap set is infinite.
    CommonFactor(u64),
    /// An operation stated only for `Γ ≠ ℕ₀` was requested for `Γ = ℕ₀`.
    FullSemigroup(&'static str),
    /// Division by the zero operator.
    DivisionByZero,
    /// An operation required a homogeneous operator.
    NotHomogeneous(String),
    /// An operation required a nonzero operator.
    ZeroOperator,
    /// An operator was expected to lie in `D` (or a bimodule) and does not.
    NotInRing(String),
    /// Bernstein degree requested for the zero operator.
    ZeroBernsteinDegree,
    /// An ideal generator failed the membership test for `D`.
    GeneratorNotInD(usize),
    /// Saturation did not stabilize within the configured window.
    NoStabilization { at_degree: i64, window: usize },
    /// Hilbert data too short to certify a quasi-polynomial fit.
    InsufficientData { have: usize, required: usize },
    /// The profile is not eventually quasi-polynomial within the caps tried.
    NotQuasiPolynomial,
    /// The zero module has no dimension or multiplicity.
    ZeroModule,
    /// A parameter `α` was outside the fundamental domain `[0, 1)`.
    AlphaOutOfRange(String),
    /// Alternating words need at least one letter.
    InvalidWordLength(i64),
    /// Two models cannot be compared (different ring or generator sets).
    IncompatibleModels,
    /// A window-truncated computation could not certify its answer.
    Inconclusive(String),
    /// Expression parser failure.
    Parse(String),
    /// Malformed CLI input that clap cannot catch (value syntax).
    Usage(String),
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::EmptyGenerators => write!(f, "generator list must be nonempty"),
            Error::NonPositiveGenerator(g) => {
                write!(f, "generators must be positive integers, got {}", g)
            }
            Error::CommonFactor(d) => {
                write!(f, "gcd must be 1: generators share the common factor {}", d)
            }
            Error::FullSemigroup(what) => {
                write!(f, "{} is not defined for the full semigroup N0", what)
            }
            Error::DivisionByZero => write!(f, "division by the zero operator"),
            Error::NotHomogeneous(p) => write!(f, "operator is not homogeneous: {}", p),
            Error::ZeroOperator => write!(f, "operator must be nonzero"),
            Error::NotInRing(p) => write!(f, "operator does not map the curve into itself: {}", p),
            Error::ZeroBernsteinDegree => {
                write!(f, "the zero operator has no Bernstein degree")
            }
            Error::GeneratorNotInD(i) => {
                write!(f, "ideal generator #{} does not lie in D", i)
            }
            Error::NoStabilization { at_degree, window } => write!(
                f,
                "saturation did not stabilize at filtration level {} within window {}",
                at_degree, window
            ),
            Error::InsufficientData { have, required } => write!(
                f,
                "profile too short to certify the fit: have {} values, need at least {}",
                have, required
            ),
            Error::NotQuasiPolynomial => {
                write!(f, "profile is not eventually quasi-polynomial within the tried periods")
            }
            Error::ZeroModule => write!(f, "the zero module has no dimension or multiplicity"),
            Error::AlphaOutOfRange(a) => {
                write!(f, "alpha must lie in [0, 1): got {}", a)
            }
            Error::InvalidWordLength(n) => {
                write!(f, "alternating words need n >= 1 letters, got {}", n)
            }
            Error::IncompatibleModels => {
                write!(f, "models are over different rings or generator sets")
            }
            Error::Inconclusive(what) => write!(f, "inconclusive within window: {}", what),
            Error::Parse(msg) => write!(f, "parse error: {}", msg),
            Error::Usage(msg) => write!(f, "usage error: {}", msg),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
