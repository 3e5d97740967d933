//! Exact machinery for rectangular parallelepipeds with integer or rational
//! edges `x1, x2, x3`, face diagonals `d1, d2, d3`, and optional space
//! diagonal `L`.
//!
//! Everything revolves around four quadratic residuals
//!
//! ```text
//! p0 = x1^2 + x2^2 + x3^2 - L^2
//! p1 = x2^2 + x3^2 - d1^2
//! p2 = x3^2 + x1^2 - d2^2
//! p3 = x1^2 + x2^2 - d3^2
//! ```
//!
//! and eight symmetric combinations of them,
//!
//! ```text
//! tp1 = p0
//! tp2 =           p1 +           p2 +           p3
//! tp3 =        d1*p1 +        d2*p2 +        d3*p3
//! tp4 =        x1*p1 +        x2*p2 +        x3*p3
//! tp5 =     x1*d1*p1 +     x2*d2*p2 +     x3*d3*p3
//! tp6 =      x1^2*p1 +      x2^2*p2 +      x3^2*p3
//! tp7 =      d1^2*p1 +      d2^2*p2 +      d3^2*p3
//! tp8 = x1^2*d1^2*p1 + x2^2*d2^2*p2 + x3^2*d3^2*p3
//! ```
//!
//! which are invariant under the simultaneous permutation of the edge and
//! diagonal triples. A tuple is a *cuboid solution* when the residuals `p1,
//! p2, p3` (and `p0` for the space-diagonal system) vanish, and a *factor
//! solution* when `tp2..tp8` (and `tp1`) vanish. The interesting question is
//! whether the second, weaker-looking system admits solutions the first does
//! not; the tools here let you check that exactly, at desk scale, with no
//! floating point anywhere.
//!
//! Module map:
//!
//! - [`arith`]: integer square roots, perfect-square tests, rational parsing
//!   and formatting.
//! - [`perm`] and [`tuple`]: the symmetric group on three letters acting on
//!   variable tuples.
//! - [`residuals`]: fast exact evaluation of the residuals above.
//! - [`poly`]: sparse multivariate polynomials over the rationals, the
//!   residuals as symbolic templates, and cofactor certificates tying the two
//!   families together.
//! - [`rank`]: the 3x7 coefficient matrix attached to a tuple, exact rank,
//!   and the case classification driven by the ranks of its two 3x2
//!   submatrices.
//! - [`equivalence`]: exhaustive scans of rational boxes comparing cuboid and
//!   factor solution sets, plus the per-case structure checks.
//! - [`search`]: enumeration of Euler bricks (integer edges and face
//!   diagonals) and the perfect-cuboid absence check.
//! - [`detgen`]: deterministic pseudo-random tuple streams for reproducible
//!   property checks.
//!
//! Scalars are generic: anything implementing [`Scalar`] works where
//! exactness is preserved. The crate-level aliases fix the two instantiations
//! used by the public contracts:
//!
//! ```
//! use cuboid_core::{CuboidTuple, residuals::eval_factor};
//!
//! let brick: CuboidTuple = "44,117,240,267,244,125".parse().unwrap();
//! for k in 2..=8 {
//!     assert!(eval_factor(k, &brick).unwrap() == cuboid_core::rat(0));
//! }
//! ```

pub mod arith;
pub mod detgen;
pub mod equivalence;
mod parallel;
pub mod perm;
pub mod poly;
pub mod rank;
pub mod residuals;
pub mod search;
pub mod tuple;

use std::fmt;

use num_traits::{Num, Signed};

/// Arbitrary-precision signed integer used throughout the crate.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, always reduced, denominator always positive.
pub type Rat = num_rational::BigRational;

/// Tuple of edge/diagonal values over the rationals.
pub type CuboidTuple = tuple::Tuple<Rat>;

/// Exact rational matrix.
pub type ExactMatrix = rank::Matrix<Rat>;

/// Rational residual vector.
pub type ResidualVector = residuals::Residuals<Rat>;

/// Scalar types the evaluation and elimination code is generic over.
///
/// The bound set is what exact computation needs: ring operations, equality,
/// and a sign. Divisions performed by the elimination code are exact in the
/// mathematical sense, so integral domains (`Int`, `i64`) qualify alongside
/// fields (`Rat`).
pub trait Scalar: Clone + PartialEq + PartialOrd + Num + Signed + fmt::Debug + fmt::Display + Send + Sync {}

impl<T> Scalar for T where
    T: Clone + PartialEq + PartialOrd + Num + Signed + fmt::Debug + fmt::Display + Send + Sync
{
}

/// Shorthand for small rational constants, mostly in tests and docs.
pub fn rat(n: i64) -> Rat {
    Rat::from_integer(Int::from(n))
}

/// Errors reported by the library.
///
/// Domain errors (bad names, missing coordinates, out-of-range indices) are
/// distinguished from verification failures, which are reported as data, not
/// errors; see the report types in [`equivalence`] and [`search`].
#[derive(Debug, thiserror::Error)]
pub enum Error {
    #[error("integer square root of negative value {0}")]
    NegativeSqrt(Int),

    #[error("invalid rational literal {0:?}")]
    ParseRational(String),

    #[error("tuple literal must have 6 or 7 coordinates, found {0}")]
    TupleArity(usize),

    #[error("permutation images must be a bijection of 1..=3, got {0:?}")]
    BadPermutation([usize; 3]),

    #[error("{0} requires the space diagonal, but the tuple has none")]
    MissingSpaceDiagonal(&'static str),

    #[error("residual index {index} outside {family}")]
    IndexOutOfRange { family: &'static str, index: usize },

    #[error("unknown polynomial name {0:?}")]
    UnknownPoly(String),

    #[error("classification inconsistency: {0}")]
    Inconsistent(String),

    #[error("case assertion {assertion} violated at {tuple} (label {label})")]
    CaseViolation {
        assertion: &'static str,
        tuple: String,
        label: String,
    },

    #[error("max_edge {0} exceeds the 64-bit safe bound 1000000; use search_bricks_big")]
    EdgeBound(u64),

    #[error("certificate error: {0}")]
    Certificate(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
