//! Exact arithmetic: scalar fields, sparse polynomials, the expression
//! parser, univariate root finding, resultants and linear algebra.

pub mod field;
pub mod linalg;
pub mod parse;
pub mod point;
pub mod poly;
pub mod resultant;
pub mod solve;
pub mod univariate;

pub use field::{Field, FieldElement, QuadElem, Scalar};
pub use linalg::{int_det, kernel_rank_det, Matrix, ScalarMatrix};
pub use parse::{parse_expression, parse_poly};
pub use point::{Ambient, ProjPoint};
pub use poly::{Monomial, MultiPoly, VarSet};
pub use resultant::{resultant, ternary_quadrics_resultant};
pub use solve::{plane_common_zeros, plane_points, Solutions};
pub use univariate::{rational_roots, RootReport, UniPoly};

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("{0} is not a prime below 2^31")]
    NotPrime(u64),
    #[error("unrecognised field '{0}' (expected 'rational' or 'fp:Q')")]
    BadField(String),
    #[error("{value} has no image in F_{modulus}")]
    BadReduction { value: String, modulus: u32 },
    #[error("cannot combine elements of {left} and {right}")]
    FieldMismatch { left: Field, right: Field },
    #[error("{0} is already a square; no extension needed")]
    SquareDiscriminant(String),
    #[error("expected {expected} coordinates, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    #[error("syntax error at column {pos}: {msg}")]
    Syntax { pos: usize, msg: String },
    #[error("polynomial is not homogeneous: {0}")]
    NotHomogeneous(String),
    #[error("resultant is degenerate: {0}")]
    DegenerateResultant(String),
    #[error("solution set is not finite: {0}")]
    PositiveDimensional(String),
    #[error("the zero vector is not a projective point")]
    ZeroPoint,
}
