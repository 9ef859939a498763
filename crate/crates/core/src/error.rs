use core::fmt;

/// Errors reported by the algebra layer.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// Inverse of zero requested.
    DivisionByZero,
    /// Field modulus is not a prime.
    NotPrime(u32),
    /// Field modulus outside `(2, 2^31)`.
    ModulusOutOfRange(u64),
    /// Two monomials or polynomials live in rings of different dimension.
    DimensionMismatch { expected: usize, found: usize },
    /// An exponent left the 16-bit range.
    ExponentOverflow,
    /// Leading data of the zero polynomial requested.
    ZeroPolynomial,
    /// Dehomogenization asked of a ring without a homogenizing variable.
    NoHomogenizingVariable,
    /// An engine was called without any nonzero input polynomial.
    EmptyInput,
    /// Schreyer ordering needs one nonzero leading monomial per generator.
    InvalidSchreyerData,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::DivisionByZero => f.write_str("division by zero"),
            Error::NotPrime(p) => write!(f, "modulus {p} is not prime"),
            Error::ModulusOutOfRange(p) => write!(f, "modulus {p} outside (2, 2^31)"),
            Error::DimensionMismatch { expected, found } => {
                write!(f, "dimension mismatch: expected {expected} variables, found {found}")
            }
            Error::ExponentOverflow => f.write_str("exponent overflow"),
            Error::ZeroPolynomial => f.write_str("zero polynomial has no leading term"),
            Error::NoHomogenizingVariable => f.write_str("ring has no homogenizing variable"),
            Error::EmptyInput => f.write_str("no nonzero input polynomial"),
            Error::InvalidSchreyerData => {
                f.write_str("Schreyer ordering needs one leading monomial per generator")
            }
        }
    }
}

impl core::error::Error for Error {}
