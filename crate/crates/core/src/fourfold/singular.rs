//! `Sing(X)` assembled from the cone vertices over `S_C` and the base locus,
//! then checked point by point against the partials of `F`.

use crate::algebra::{ProjPoint, Scalar};
use crate::curves::SingClassification;
use crate::detrep::SymDetRep;

use super::base::{base_locus, BaseLocus};
use super::fiber::{fiber_analysis, FiberKind};
use super::{in_plane_p, is_double_point, is_singular_on, vanishes_on_span, FourfoldError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPointCheck {
    pub point: ProjPoint,
    pub singular: bool,
    pub double: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularLocusX {
    /// One vertex of `Q_p` for each `p ∈ S_C`.
    pub cone_vertices: Vec<ProjPoint>,
    pub base: BaseLocus,
    /// The union, sorted, with its verification.
    pub checks: Vec<SingularPointCheck>,
    pub all_double: bool,
    /// No singular line of a rank-2 fiber lies in `Sing(X)`, and `B` is finite.
    pub zero_dimensional: bool,
    /// Both `Sing(C)` and `B` are known to be complete.
    pub complete: bool,
}

impl SingularLocusX {
    pub fn points(&self) -> Vec<ProjPoint> {
        self.checks.iter().map(|c| c.point.clone()).collect()
    }

    pub fn len(&self) -> usize {
        self.checks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.checks.is_empty()
    }

    /// `#S_C ≤ #Sing(X) ≤ #S_C + 3` and `#B ≤ 3`.
    pub fn bounds_ok(&self) -> bool {
        let s_c = self.cone_vertices.len();
        self.base.within_bound() && !self.base.net_degenerate && s_c <= self.len() && self.len() <= s_c + 3
    }

    pub fn smooth(&self) -> bool {
        self.is_empty()
    }
}

pub fn singular_locus_x(rep: &SymDetRep, cls: &SingClassification) -> Result<SingularLocusX, FourfoldError> {
    let f = rep.fourfold();
    let mut cone_vertices = Vec::new();
    for p in cls.s_c() {
        let fib = fiber_analysis(rep, &p)?;
        let Some(v) = fib.vertex() else {
            return Err(FourfoldError::Inconsistent(format!(
                "fiber over {p} ∈ S_C has rank {} instead of 3",
                fib.rank
            )));
        };
        if in_plane_p(v) {
            return Err(FourfoldError::Inconsistent(format!("vertex {v} over {p} ∈ S_C lies in P")));
        }
        cone_vertices.push(v.clone());
    }
    cone_vertices.sort();

    let base = base_locus(rep)?;

    let partials = f.gradient();
    let mut zero_dimensional = true;
    for p in cls.s_theta() {
        let fib = fiber_analysis(rep, &p)?;
        debug_assert_eq!(fib.kind, FiberKind::PlanePair);
        let line: Vec<Vec<Scalar>> = fib.singular_locus.iter().map(|x| x.coords().to_vec()).collect();
        if partials
            .iter()
            .all(|g| vanishes_on_span(g, &line, 2, |c: &Scalar| c.clone()))
        {
            zero_dimensional = false;
        }
    }

    let mut all: Vec<ProjPoint> = cone_vertices.iter().chain(&base.points).cloned().collect();
    all.sort();
    all.dedup();
    if all.len() != cone_vertices.len() + base.points.len() {
        return Err(FourfoldError::Inconsistent(
            "a cone vertex coincides with a base point".into(),
        ));
    }
    let checks: Vec<SingularPointCheck> = all
        .into_iter()
        .map(|x| SingularPointCheck {
            singular: is_singular_on(&f, &x),
            double: is_double_point(&f, &x),
            point: x,
        })
        .collect();
    if let Some(bad) = checks.iter().find(|c| !c.singular) {
        return Err(FourfoldError::Inconsistent(format!(
            "assembled point {} is not a singular point of X",
            bad.point
        )));
    }
    Ok(SingularLocusX {
        all_double: checks.iter().all(|c| c.double),
        complete: cls.complete && base.complete,
        cone_vertices,
        base,
        checks,
        zero_dimensional,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Field, VarSet};
    use crate::curves::classify_singularities;

    fn rep(diag: [&str; 4], field: Field) -> SymDetRep {
        SymDetRep::diagonal(diag.map(|s| parse_poly(s, VarSet::Plane, field).unwrap())).unwrap()
    }

    #[test]
    fn six_lines_have_three_cone_points() {
        let r = rep(
            ["x1", "x2", "x3", "(x1 + x2 + x3)*(x1 + 2*x2 + 3*x3)*(x1 + 3*x2 + 2*x3)"],
            Field::Rational,
        );
        let cls = classify_singularities(&r).unwrap();
        let s = singular_locus_x(&r, &cls).unwrap();
        let names: Vec<String> = s.points().iter().map(|p| p.to_string()).collect();
        assert_eq!(names, ["(1:-2:1:0:0:0)", "(1:-1/5:-1/5:0:0:0)", "(1:1:-2:0:0:0)"]);
        assert!(s.base.points.is_empty());
        assert!(s.all_double && s.zero_dimensional && s.complete && s.bounds_ok());
    }

    #[test]
    fn diagonal_fermat_is_smooth_mod_thirteen() {
        let r = rep(["x1", "x2", "x3", "-x1^3 - x2^3 - x3^3"], Field::Prime(13));
        let cls = classify_singularities(&r).unwrap();
        let s = singular_locus_x(&r, &cls).unwrap();
        assert!(s.smooth() && s.complete && s.zero_dimensional && s.bounds_ok());
    }
}
