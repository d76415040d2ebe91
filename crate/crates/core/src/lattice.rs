//! Intersection numbers of the plane classes in `NS₂(X)`.
//!
//! The sublattice is spanned by `P`, `P_{1,2}` and `P_{i,1}` for the `m`
//! couples; its Gram matrix has 3 on the diagonal, −1 against `P` and
//! between the two planes of the first couple, and 1 elsewhere.

use num_bigint::BigInt;
use thiserror::Error;

use crate::algebra::linalg::{int_det, int_rank};

/// Pairwise products of the classes involved.
pub mod products {
    /// `P·P`, and `P_{i,j}·P_{i,j}`.
    pub const SELF: i64 = 3;
    /// `Q·P` for `Q` the class of a general fiber quadric.
    pub const QUADRIC_PLANE: i64 = -2;
    /// `P_{i,j}·P`.
    pub const COUPLE_PLANE: i64 = -1;
    /// `P_{i,1}·P_{i,2}`.
    pub const WITHIN_COUPLE: i64 = -1;
    /// `P_{i,k}·P_{j,h}` for `i ≠ j`.
    pub const ACROSS_COUPLES: i64 = 1;
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LatticeError {
    #[error("need at least one couple of planes, got {0}")]
    NoCouples(usize),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Ns2Report {
    pub m: usize,
    /// `2m + 1` distinct plane classes.
    pub class_count: usize,
    pub gram: Vec<Vec<i64>>,
    pub det: BigInt,
    pub rank: usize,
    pub rank_lower_bound: usize,
}

pub fn ns2_gram(m: usize) -> Result<Ns2Report, LatticeError> {
    use products::*;
    if m < 1 {
        return Err(LatticeError::NoCouples(m));
    }
    let n = m + 2;
    // Order: P, P_{1,2}, P_{1,1}, …, P_{m,1}.
    let gram: Vec<Vec<i64>> = (0..n)
        .map(|i| {
            (0..n)
                .map(|j| match (i.min(j), i.max(j)) {
                    _ if i == j => SELF,
                    (0, _) => COUPLE_PLANE,
                    (1, 2) => WITHIN_COUPLE,
                    _ => ACROSS_COUPLES,
                })
                .collect()
        })
        .collect();
    let big: Vec<Vec<BigInt>> = gram.iter().map(|r| r.iter().map(|&x| BigInt::from(x)).collect()).collect();
    Ok(Ns2Report {
        m,
        class_count: 2 * m + 1,
        det: int_det(&big),
        rank: int_rank(&big),
        rank_lower_bound: m + 2,
        gram,
    })
}
