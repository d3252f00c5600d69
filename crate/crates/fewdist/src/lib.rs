//! Exact upper bounds on the size of few-distance codes.
//!
//! A set of points in a metric space is an *s-distance code* when the
//! distances between distinct points take exactly `s` values.  This crate
//! computes upper bounds on the size of such sets in three spaces: the
//! Hamming space `H_q^n`, the binary Johnson space `J^{n,w}` (constant-weight
//! binary vectors), and the unit sphere `S^{n-1}`.
//!
//! Everything is computed in exact rational arithmetic — bound values, side
//! conditions, and linear-programming optima are all bit-exact.  Floating
//! point appears only when rendering reports.
//!
//! The crate is organised around the harmonic-analysis view of these spaces:
//! each carries a family of orthogonal polynomials (Krawtchouk, Hahn,
//! Gegenbauer) together with the dimensions `h_i` of the harmonic spaces, and
//! every bound is a statement about the expansion of an annihilator
//! polynomial in that basis.
//!
//! Modules:
//!
//! * [`exact`] — arbitrary-precision rationals, dense polynomials, binomials.
//! * [`spaces`] — space descriptors, polynomial families, measures.
//! * [`expansion`] — annihilators and expansion in the orthogonal basis.
//! * [`bounds`] — every closed-form bound, with side conditions recorded.
//! * [`lp`] — exact-rational simplex and the Delsarte linear program.
//! * [`oracle`] — brute-force maximum code sizes on tiny spaces.
//! * [`harness`] — sweep engine, report serialization, CLI support.

pub mod bounds;
pub mod exact;
pub mod expansion;
pub mod harness;
pub mod lp;
pub mod oracle;
pub mod spaces;

pub use exact::{BigInt, BigRational, Poly};
pub use expansion::DistanceSet;
pub use spaces::Space;

/// Library-wide error type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Error {
    /// A parameter is outside the domain of the requested operation.
    Domain(String),
    /// The operation is not defined for the given space.
    Unsupported(String),
    /// A computation was refused because it exceeds its resource budget.
    Budget(String),
}

impl std::fmt::Display for Error {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Error::Domain(msg) => write!(f, "domain error: {msg}"),
            Error::Unsupported(msg) => write!(f, "unsupported operation: {msg}"),
            Error::Budget(msg) => write!(f, "budget exceeded: {msg}"),
        }
    }
}

impl std::error::Error for Error {}

pub type Result<T> = std::result::Result<T, Error>;
