//! The fourfold `X = {F = 0}` containing `P = {x1 = x2 = x3 = 0}`: fiber
//! quadrics, the base locus of the net of conics, couples of planes,
//! `Sing(X)` assembled fiber by fiber, and a brute-force check over `F_q`.
//!
//! A point `p = (a:b:c)` of the plane spans with `P` the 3-space
//! `P³_p = {(t·a : t·b : t·c : u1 : u2 : u3)}`; restricted to it `F = t·Q_p`
//! where `Q_p` has Gram matrix `M(p)` in `(u1, u2, u3, t)`.

pub mod base;
pub mod couples;
pub mod fiber;
pub mod oracle;
pub mod singular;

pub use base::{base_locus, BaseLocus};
pub use couples::{couples_and_intersections, split_rank2_fiber, Couples, PlanePair};
pub use fiber::{fiber_analysis, FiberKind, FiberReport};
pub use oracle::{brute_force_oracle, OracleError};
pub use singular::{singular_locus_x, SingularLocusX, SingularPointCheck};

use thiserror::Error;

use crate::algebra::{AlgebraError, Ambient, FieldElement, MultiPoly, ProjPoint, Scalar};
use crate::curves::CurveError;
use crate::detrep::DetRepError;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FourfoldError {
    #[error("fiber over {point} has rank {rank}; this operation needs rank {needed}")]
    WrongRank {
        point: String,
        rank: usize,
        needed: usize,
    },
    #[error("det G vanishes identically: the conics Q_p ∩ P do not form a net and the base locus need not be finite")]
    DegenerateNet,
    #[error("the base locus of the net of conics is positive-dimensional ({0}): not a valid associated pair")]
    InfiniteBaseLocus(String),
    #[error("internal consistency failure: {0}")]
    Inconsistent(String),
    #[error(transparent)]
    Curve(#[from] CurveError),
    #[error(transparent)]
    Rep(#[from] DetRepError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// `(u1 : u2 : u3 : t) ↦ (t·p : u)` with `p` in canonical form.
pub fn embed_fiber_vector(p: &ProjPoint, w: &[Scalar]) -> Result<ProjPoint, AlgebraError> {
    let t = &w[3];
    let mut coords: Vec<Scalar> = p.coords().iter().map(|a| a * t).collect();
    coords.extend_from_slice(&w[..3]);
    ProjPoint::new(coords, Ambient::P5)
}

/// Whether a point of `P^5` lies on `P`.
pub fn in_plane_p(x: &ProjPoint) -> bool {
    x.coords()[..3].iter().all(Scalar::is_zero)
}

/// `F` and its six partials vanish at `x`.
pub fn is_singular_on(f: &MultiPoly, x: &ProjPoint) -> bool {
    f.eval(x.coords()).unwrap().is_zero()
        && f.gradient()
            .iter()
            .all(|g| g.eval(x.coords()).unwrap().is_zero())
}

/// Nonzero degree-2 part of the local expansion: `x` is (at worst) a double
/// point of `F`.
pub fn is_double_point(f: &MultiPoly, x: &ProjPoint) -> bool {
    !f.local_expansion(x.coords()).homogeneous_part(2).is_zero()
}

/// Whether a polynomial of degree `≤ deg` vanishes on the whole projective
/// subspace spanned by `basis`: checked on the grid `{0..=deg}^k` of
/// combination coefficients, which a nonzero polynomial of that degree cannot
/// vanish on.
pub(crate) fn vanishes_on_span<E: FieldElement>(
    f: &MultiPoly,
    basis: &[Vec<E>],
    deg: u32,
    lift: impl Fn(&Scalar) -> E + Copy,
) -> bool {
    let k = basis.len();
    let field = f.field();
    let total = (deg as usize + 1).pow(k as u32);
    (0..total).all(|mut idx| {
        let mut pt = vec![basis[0][0].zero_like(); basis[0].len()];
        for v in basis {
            let c = lift(&field.from_i64((idx % (deg as usize + 1)) as i64));
            idx /= deg as usize + 1;
            for (a, b) in pt.iter_mut().zip(v) {
                *a = a.clone() + c.clone() * b.clone();
            }
        }
        f.eval_in(&pt, lift).is_zero()
    })
}
