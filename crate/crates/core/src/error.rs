//! Error type shared by all modules.

use core::fmt;

/// Errors produced by parameter validation and the numerical routines.
#[derive(Debug, Clone, PartialEq)]
pub enum Error {
    /// `alpha` must be finite and strictly positive.
    InvalidAlpha(f64),
    /// The operation requires `alpha` strictly inside (0, 1).
    AlphaNotInUnitInterval(f64),
    /// `theta` must lie strictly inside (0, pi).
    InvalidTheta(f64),
    /// Requested relative tolerance outside the accepted range.
    InvalidTolerance(f64),
    /// The degree is too large for this operation.
    DegreeTooLarge { degree: u32, max: u32 },
    /// The degree is too small for this operation.
    DegreeTooSmall { degree: u32, min: u32 },
    /// A scan range or grid was empty.
    EmptyRange,
    /// Adaptive quadrature could not reach the requested relative tolerance.
    QuadratureDidNotConverge { achieved: f64, requested: f64 },
    /// Newton polish failed to converge from an eigenvalue estimate.
    NewtonDidNotConverge { re: f64, im: f64 },
    /// The QR eigenvalue iteration stalled.
    EigenDidNotConverge { index: usize },
    /// Certified sign-change zero count exceeds the eigenvalue-based count.
    InconsistentZeroCounts { bisection: usize, eigenvalue: usize },
    /// No (K, M) witness pair is admissible on the scanned grid.
    NoAdmissibleWitness,
    /// Invalid argument for the gamma functions.
    InvalidGammaParameter { s: f64, x: f64 },
    /// A series or continued-fraction evaluation failed to converge.
    SpecialFunctionDivergence,
}

impl fmt::Display for Error {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Error::InvalidAlpha(a) => write!(f, "alpha must be finite and positive, got {a}"),
            Error::AlphaNotInUnitInterval(a) => {
                write!(f, "operation requires 0 < alpha < 1, got {a}")
            }
            Error::InvalidTheta(t) => write!(f, "theta must lie strictly in (0, pi), got {t}"),
            Error::InvalidTolerance(t) => write!(f, "invalid relative tolerance {t}"),
            Error::DegreeTooLarge { degree, max } => {
                write!(f, "degree {degree} exceeds the supported maximum {max}")
            }
            Error::DegreeTooSmall { degree, min } => {
                write!(f, "degree {degree} is below the required minimum {min}")
            }
            Error::EmptyRange => write!(f, "empty range or grid"),
            Error::QuadratureDidNotConverge { achieved, requested } => write!(
                f,
                "quadrature reached relative error {achieved:.3e}, requested {requested:.3e}"
            ),
            Error::NewtonDidNotConverge { re, im } => {
                write!(f, "Newton polish did not converge near {re} + {im}i")
            }
            Error::EigenDidNotConverge { index } => {
                write!(f, "QR iteration did not converge for eigenvalue {index}")
            }
            Error::InconsistentZeroCounts { bisection, eigenvalue } => write!(
                f,
                "bisection certifies {bisection} interval zeros but eigenvalues yield {eigenvalue}"
            ),
            Error::NoAdmissibleWitness => {
                write!(f, "no admissible (K, M) witness on the scanned grid")
            }
            Error::InvalidGammaParameter { s, x } => {
                write!(f, "invalid gamma argument: s = {s}, x = {x}")
            }
            Error::SpecialFunctionDivergence => {
                write!(f, "special-function series/continued fraction did not converge")
            }
        }
    }
}

#[cfg(feature = "std")]
impl std::error::Error for Error {}

pub type Result<T> = core::result::Result<T, Error>;
