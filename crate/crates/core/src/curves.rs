//! Singularities of the discriminant sextic and their classification by the
//! rank of `M(p)` and by membership in the cubic `D = {det G = 0}`.

use thiserror::Error;

use crate::algebra::solve::{plane_common_zeros, plane_points, Solutions};
use crate::algebra::{resultant, AlgebraError, Field, MultiPoly, ProjPoint, Scalar, VarSet};
use crate::detrep::{DetRepError, SymDetRep};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CurveError {
    #[error("curve is not reduced: it has a repeated component")]
    NonReduced,
    #[error("singular point {point} is not an ordinary double point (local quadratic part {quadratic})")]
    NotNodal { point: String, quadratic: String },
    #[error("{0} is not a singular point of the curve")]
    NotSingular(String),
    #[error("component of degree {degree} cannot have {nodes} nodes (genus would be {genus})")]
    NegativeGenus { degree: u32, nodes: u32, genus: i64 },
    #[error("components do not multiply to the curve equation")]
    BadFactorization,
    #[error("fiber rank {rank} at singular point {point}; expected 2 or 3")]
    UnexpectedRank { point: String, rank: usize },
    #[error(transparent)]
    Rep(#[from] DetRepError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A plane curve, optionally with its (reduced) factorization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlaneCurve {
    pub equation: MultiPoly,
    pub components: Option<Vec<MultiPoly>>,
}

impl PlaneCurve {
    pub fn new(equation: MultiPoly) -> Self {
        PlaneCurve {
            equation,
            components: None,
        }
    }

    /// Checks that the product of the components is a nonzero multiple of
    /// the equation.
    pub fn factored(equation: MultiPoly, components: Vec<MultiPoly>) -> Result<Self, CurveError> {
        let product = components
            .iter()
            .fold(MultiPoly::constant(equation.field().one(), VarSet::Plane), |a, b| &a * b);
        let (Some((_, a)), Some((_, b))) = (equation.leading(), product.leading()) else {
            return Err(CurveError::BadFactorization);
        };
        if product.scale(&(a / b)) != equation {
            return Err(CurveError::BadFactorization);
        }
        Ok(PlaneCurve {
            equation,
            components: Some(components),
        })
    }
}

/// Whether `h` has no repeated factor: after a shear making the coefficient
/// of `x1^d` nonzero, `h` is reduced exactly when its discriminant in `x1`
/// (the resultant with `∂h/∂x1`) is not identically zero. Needs
/// characteristic 0 or above the degree.
pub fn is_reduced(h: &MultiPoly) -> bool {
    let field = h.field();
    let Some(d) = h.degree() else {
        return false;
    };
    if d <= 1 {
        return true;
    }
    let Some((a, b)) = shear_off(h) else {
        // Vanishes on every point of an affine chart over a tiny field; fall
        // back to the undecidable-here verdict of "not reduced".
        return false;
    };
    let y = |i| MultiPoly::var(i, VarSet::Plane, field);
    let c = |s: &Scalar| MultiPoly::constant(s.clone(), VarSet::Plane);
    let moved = h.substitute(&[y(0), &(&c(&a) * &y(0)) + &y(1), &(&c(&b) * &y(0)) + &y(2)]);
    let disc = resultant(&moved, &moved.diff(0), 0).expect("leading term in x1");
    !disc.is_zero()
}

/// `(a, b)` with `h(1, a, b) != 0`, searched over small values.
fn shear_off(h: &MultiPoly) -> Option<(Scalar, Scalar)> {
    let field = h.field();
    let range: Vec<i64> = match field {
        Field::Rational => (-6..=6).collect(),
        Field::Prime(q) => (0..q as i64).collect(),
    };
    for &a in &range {
        for &b in &range {
            let (a, b) = (field.from_i64(a), field.from_i64(b));
            if !h.eval(&[field.one(), a.clone(), b.clone()]).unwrap().is_zero() {
                return Some((a, b));
            }
        }
    }
    None
}

/// Singular points: all of them over `F_q`; the rational ones over `Q`, with
/// a completeness flag.
pub fn singular_points(c: &PlaneCurve) -> Result<Solutions, CurveError> {
    if !is_reduced(&c.equation) {
        return Err(CurveError::NonReduced);
    }
    match &c.components {
        None => {
            let mut eqs = c.equation.gradient();
            eqs.push(c.equation.clone());
            Ok(plane_common_zeros(&eqs)?)
        }
        Some(parts) => {
            let mut points = Vec::new();
            let mut complete = true;
            for (i, a) in parts.iter().enumerate() {
                if a.degree() > Some(1) {
                    let mut eqs = a.gradient();
                    eqs.push(a.clone());
                    let s = plane_common_zeros(&eqs)?;
                    complete &= s.complete;
                    points.extend(s.points);
                }
                for b in &parts[i + 1..] {
                    let s = plane_common_zeros(&[a.clone(), b.clone()])?;
                    complete &= s.complete;
                    points.extend(s.points);
                }
            }
            points.sort();
            points.dedup();
            Ok(Solutions { points, complete })
        }
    }
}

/// Degree-2 part of the local expansion of `h` at `p`, as a binary form in
/// the two affine coordinates of the chart of `p`'s first nonzero coordinate.
pub fn local_quadratic_part(h: &MultiPoly, p: &ProjPoint) -> MultiPoly {
    h.local_expansion(p.coords()).homogeneous_part(2)
}

/// Ordinary double point test: the local quadratic part is a nondegenerate
/// binary form.
pub fn is_node(c: &PlaneCurve, p: &ProjPoint) -> Result<bool, CurveError> {
    let h = &c.equation;
    let at = |f: &MultiPoly| f.eval(p.coords()).unwrap();
    if !at(h).is_zero() || h.gradient().iter().any(|g| !at(g).is_zero()) {
        return Err(CurveError::NotSingular(p.to_string()));
    }
    let q = local_quadratic_part(h, p);
    Ok(binary_discriminant(&q, chart_vars(p)).is_some_and(|d| !d.is_zero()))
}

fn chart_vars(p: &ProjPoint) -> [usize; 2] {
    let k = p.coords().iter().position(|c| !c.is_zero()).unwrap();
    let v: Vec<usize> = (0..3).filter(|&i| i != k).collect();
    [v[0], v[1]]
}

/// `b² - 4ac` for `a·s² + b·s·t + c·t²`; `None` when the form is zero.
fn binary_discriminant(q: &MultiPoly, [s, t]: [usize; 2]) -> Option<Scalar> {
    if q.is_zero() {
        return None;
    }
    let mono = |i: usize, j: usize| {
        let mut m = crate::algebra::Monomial::one();
        m.0[i] += 1;
        m.0[j] += 1;
        q.coefficient(&m)
    };
    let (a, b, c) = (mono(s, s), mono(s, t), mono(t, t));
    let four = q.field().from_i64(4);
    Some(&(&b * &b) - &(&four * &(&a * &c)))
}

/// One singular point of the sextic with its classification data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingularPointInfo {
    pub point: ProjPoint,
    /// Rank of `M(p)`: 2 on `S_θ`, 3 elsewhere.
    pub rank: usize,
    /// `det G(p) = 0`, i.e. `p ∈ D`.
    pub on_d: bool,
    pub node: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SingClassification {
    pub field: Field,
    pub points: Vec<SingularPointInfo>,
    /// Whether `points` is all of `Sing(C)` (always over `F_q`).
    pub complete: bool,
    /// Points of `D ∩ C` over `F_q`; not computed over the rationals, where
    /// `D` and `C` typically share components.
    pub i_c_fq: Option<Vec<ProjPoint>>,
}

impl SingClassification {
    fn select(&self, keep: impl Fn(&SingularPointInfo) -> bool) -> Vec<ProjPoint> {
        self.points
            .iter()
            .filter(|i| keep(i))
            .map(|i| i.point.clone())
            .collect()
    }

    pub fn sing_c(&self) -> Vec<ProjPoint> {
        self.select(|_| true)
    }

    /// Rank-2 stratum.
    pub fn s_theta(&self) -> Vec<ProjPoint> {
        self.select(|i| i.rank == 2)
    }

    /// `Sing(C) ∩ D`.
    pub fn s_theta_tilde(&self) -> Vec<ProjPoint> {
        self.select(|i| i.on_d)
    }

    /// `Sing(C) - D`.
    pub fn s_c(&self) -> Vec<ProjPoint> {
        self.select(|i| !i.on_d)
    }

    /// Rank-3 singular points on `D`.
    pub fn tilde_minus_theta(&self) -> Vec<ProjPoint> {
        self.select(|i| i.on_d && i.rank == 3)
    }
}

/// Locates and classifies the singular points of `det M` over the field of
/// the representation. Rejects non-reduced and non-nodal sextics.
pub fn classify_singularities(rep: &SymDetRep) -> Result<SingClassification, CurveError> {
    let derived = rep.derived();
    let curve = PlaneCurve::new(derived.sextic.clone());
    let sols = singular_points(&curve)?;
    let mut points = Vec::with_capacity(sols.points.len());
    for p in sols.points {
        if !is_node(&curve, &p)? {
            return Err(CurveError::NotNodal {
                quadratic: local_quadratic_part(&curve.equation, &p).to_string(),
                point: p.to_string(),
            });
        }
        let rank = rep.fiber_gram(&p)?.rank();
        if !(2..=3).contains(&rank) {
            return Err(CurveError::UnexpectedRank {
                point: p.to_string(),
                rank,
            });
        }
        let on_d = derived.d_cubic.eval(p.coords()).unwrap().is_zero();
        points.push(SingularPointInfo {
            point: p,
            rank,
            on_d,
            node: true,
        });
    }
    let i_c_fq = match rep.field() {
        Field::Rational => None,
        f => Some(
            plane_points(f)
                .into_iter()
                .filter(|p| {
                    derived.sextic.eval(p.coords()).unwrap().is_zero()
                        && derived.d_cubic.eval(p.coords()).unwrap().is_zero()
                })
                .collect(),
        ),
    };
    Ok(SingClassification {
        field: rep.field(),
        points,
        complete: sols.complete,
        i_c_fq,
    })
}

/// `(degree, geometric genus)` for each `(degree, internal nodes)`.
pub fn component_genera(components: &[(u32, u32)]) -> Result<Vec<(u32, i64)>, CurveError> {
    components
        .iter()
        .map(|&(d, n)| {
            let d64 = d as i64;
            let genus = (d64 - 1) * (d64 - 2) / 2 - n as i64;
            if genus < 0 {
                Err(CurveError::NegativeGenus {
                    degree: d,
                    nodes: n,
                    genus,
                })
            } else {
                Ok((d, genus))
            }
        })
        .collect()
}

/// Rank of `M(p)` at every point of `P^2(F_q)`, sorted into the strata
/// off the curve, smooth on the curve, and singular.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct RankProfile {
    pub off_curve: [usize; 5],
    pub smooth: [usize; 5],
    pub singular: [usize; 5],
}

impl RankProfile {
    /// Rank 4 off `C`, 3 at smooth points, 2 or 3 at singular points.
    pub fn is_stratified(&self) -> bool {
        let only = |h: &[usize; 5], ok: &[usize]| (0..5).all(|r| ok.contains(&r) || h[r] == 0);
        only(&self.off_curve, &[4]) && only(&self.smooth, &[3]) && only(&self.singular, &[2, 3])
    }

    pub fn min_rank(&self) -> usize {
        (0..5)
            .find(|&r| self.off_curve[r] + self.smooth[r] + self.singular[r] > 0)
            .unwrap_or(4)
    }
}

pub fn rank_profile(rep: &SymDetRep) -> RankProfile {
    let h = rep.sextic();
    let grad = h.gradient();
    let mut prof = RankProfile::default();
    for p in plane_points(rep.field()) {
        let rank = rep.evaluate(&p).rank();
        let on = h.eval(p.coords()).unwrap().is_zero();
        let sing = on && grad.iter().all(|g| g.eval(p.coords()).unwrap().is_zero());
        let bucket = if !on {
            &mut prof.off_curve
        } else if sing {
            &mut prof.singular
        } else {
            &mut prof.smooth
        };
        bucket[rank] += 1;
    }
    prof
}
