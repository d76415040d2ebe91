//! The residual quadric `Q_p` in the fiber over a point of the plane.

use crate::algebra::{ProjPoint, Scalar};
use crate::detrep::SymDetRep;

use super::{embed_fiber_vector, in_plane_p, FourfoldError};

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FiberKind {
    /// Rank 4: smooth quadric surface.
    Smooth,
    /// Rank 3: cone over a smooth conic.
    Cone,
    /// Rank 2: two planes meeting in a line.
    PlanePair,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberReport {
    pub point: ProjPoint,
    pub rank: usize,
    pub kind: FiberKind,
    /// Kernel of `M(p)` embedded in `P^5`: the vertex for a cone, two points
    /// spanning the singular line for a plane pair, empty when smooth.
    pub singular_locus: Vec<ProjPoint>,
    /// Rank of `G(p)`, the Gram matrix of the conic `Q_p ∩ P`.
    pub conic_rank: usize,
    /// Whether the whole singular locus of `Q_p` lies in `P`.
    pub singular_locus_in_p: bool,
}

impl FiberReport {
    pub fn vertex(&self) -> Option<&ProjPoint> {
        (self.kind == FiberKind::Cone).then(|| &self.singular_locus[0])
    }
}

pub fn fiber_analysis(rep: &SymDetRep, p: &ProjPoint) -> Result<FiberReport, FourfoldError> {
    let m = rep.fiber_gram(p)?;
    let rank = m.rank();
    let kind = match rank {
        4 => FiberKind::Smooth,
        3 => FiberKind::Cone,
        _ => FiberKind::PlanePair,
    };
    let singular_locus = m
        .kernel()
        .iter()
        .map(|w: &Vec<Scalar>| embed_fiber_vector(p, w))
        .collect::<Result<Vec<_>, _>>()?;
    let singular_locus_in_p = singular_locus.iter().all(in_plane_p);
    Ok(FiberReport {
        point: p.clone(),
        rank,
        kind,
        conic_rank: rep.conic_gram(p).rank(),
        singular_locus,
        singular_locus_in_p,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Ambient, Field, VarSet};

    fn rep(diag: [&str; 4]) -> SymDetRep {
        SymDetRep::diagonal(diag.map(|s| parse_poly(s, VarSet::Plane, Field::Rational).unwrap())).unwrap()
    }

    fn pt(c: &[i64]) -> ProjPoint {
        ProjPoint::from_ints(c, Ambient::Plane, Field::Rational).unwrap()
    }

    #[test]
    fn cone_over_six_line_node() {
        let r = rep(["x1", "x2", "x3", "(x1 + x2 + x3)*(x1 + 2*x2 + 3*x3)*(x1 + 3*x2 + 2*x3)"]);
        let f = fiber_analysis(&r, &pt(&[1, -2, 1])).unwrap();
        assert_eq!(f.rank, 3);
        assert_eq!(f.vertex().unwrap().to_string(), "(1:-2:1:0:0:0)");
        assert!(!f.singular_locus_in_p);
        assert_eq!(f.conic_rank, 3);
    }

    #[test]
    fn plane_pair_and_smooth_fibers() {
        let r = rep(["x1", "x2", "x3", "-x1^3 - x2^3 - x3^3"]);
        let f = fiber_analysis(&r, &pt(&[0, 0, 1])).unwrap();
        assert_eq!(f.kind, FiberKind::PlanePair);
        let names: Vec<String> = f.singular_locus.iter().map(|p| p.to_string()).collect();
        assert_eq!(names, vec!["(0:0:0:1:0:0)", "(0:0:0:0:1:0)"]);
        assert!(f.singular_locus_in_p);
        let g = fiber_analysis(&r, &pt(&[1, 1, 1])).unwrap();
        assert_eq!((g.rank, g.singular_locus.len()), (4, 0));
    }
}
