//! Couples of planes: the rank-2 fibers `Q_p = P₊ ∪ P₋` for `p ∈ S_θ`, and
//! how planes from different couples meet.

use crate::algebra::{FieldElement, Matrix, MultiPoly, ProjPoint, QuadElem, Scalar};
use crate::detrep::SymDetRep;

use super::{vanishes_on_span, FourfoldError};

/// A linear form `re + √d·im` on `P^5`, coordinates `(x1, x2, x3, u1, u2, u3)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinForm {
    pub re: Vec<Scalar>,
    pub im: Vec<Scalar>,
}

impl LinForm {
    fn rational(re: Vec<Scalar>) -> LinForm {
        let im = vec![re[0].field().zero(); re.len()];
        LinForm { re, im }
    }

    fn conjugate(&self) -> LinForm {
        LinForm {
            re: self.re.clone(),
            im: self.im.iter().map(|c| -c).collect(),
        }
    }

    fn lifted(&self, d: &Scalar) -> Vec<QuadElem> {
        self.re
            .iter()
            .zip(&self.im)
            .map(|(r, i)| QuadElem {
                re: r.clone(),
                im: i.clone(),
                d: d.clone(),
            })
            .collect()
    }

    /// The restriction to `P`, as a form in `u1, u2, u3`.
    fn on_p(&self) -> LinForm {
        LinForm {
            re: self.re[3..].to_vec(),
            im: self.im[3..].to_vec(),
        }
    }

    fn is_zero(&self) -> bool {
        self.re.iter().chain(&self.im).all(Scalar::is_zero)
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PlanePair {
    pub point: ProjPoint,
    /// `None` when both planes are defined over the base field; otherwise the
    /// planes are conjugate over `K(√d)`.
    pub d: Option<Scalar>,
    /// Three independent linear forms cutting out each plane: the two
    /// equations of `P³_p` followed by the form that splits `Q_p`.
    pub planes: [[LinForm; 3]; 2],
}

impl PlanePair {
    fn forms_in<E: FieldElement>(&self, which: usize, lift: impl Fn(&LinForm) -> Vec<E>) -> Vec<Vec<E>> {
        self.planes[which].iter().map(lift).collect()
    }

    /// Whether one of the planes is `P` itself (its splitting form has no
    /// `u`-part).
    pub fn contains_p(&self) -> bool {
        self.planes.iter().any(|pl| pl[2].on_p().is_zero())
    }

    /// Projective dimension of `P₊ ∩ P₋` by exact linear algebra on the six
    /// forms.
    pub fn self_intersection_dim(&self) -> i32 {
        let rank = match &self.d {
            None => {
                let rows: Vec<Vec<Scalar>> = (0..2)
                    .flat_map(|k| self.forms_in(k, |l| l.re.clone()))
                    .collect();
                Matrix::from_rows(rows).rank()
            }
            Some(d) => {
                let rows: Vec<Vec<QuadElem>> = (0..2).flat_map(|k| self.forms_in(k, |l| l.lifted(d))).collect();
                Matrix::from_rows(rows).rank()
            }
        };
        5 - rank as i32
    }

    /// `F` vanishes identically on both planes.
    pub fn planes_lie_on(&self, f: &MultiPoly) -> bool {
        (0..2).all(|k| match &self.d {
            None => {
                let rows: Vec<Vec<Scalar>> = self.forms_in(k, |l| l.re.clone());
                vanishes_on_span(f, &Matrix::from_rows(rows).kernel(), 3, |c: &Scalar| c.clone())
            }
            Some(d) => {
                let rows: Vec<Vec<QuadElem>> = self.forms_in(k, |l| l.lifted(d));
                vanishes_on_span(f, &Matrix::from_rows(rows).kernel(), 3, |c: &Scalar| {
                    QuadElem::from_base(c.clone(), d)
                })
            }
        })
    }
}

/// The rank-2 form `wᵀ S w` as a product of two linear forms in `w`, over the
/// base field or over `K(√d)`.
fn factor_rank2(s: &Matrix<Scalar>) -> (Option<Scalar>, [LinForm; 2]) {
    let (i, j) = (0..4)
        .flat_map(|i| (i + 1..4).map(move |j| (i, j)))
        .find(|&(i, j)| !s.submatrix(&[i, j], &[i, j]).det().is_zero())
        .expect("a symmetric matrix of rank 2 has a nonzero principal 2×2 minor");
    // wᵀ S w = yᵀ N y with y = (S_i·w, S_j·w) and N the inverse of the minor.
    let det = s.submatrix(&[i, j], &[i, j]).det();
    let inv = det.inverse().unwrap();
    let alpha = s.get(j, j) * &inv;
    let beta = -&(s.get(i, j) * &inv);
    let gamma = s.get(i, i) * &inv;
    let (r1, r2) = (s.row(i).to_vec(), s.row(j).to_vec());
    let comb = |a: &Scalar, b: &Scalar| -> Vec<Scalar> {
        r1.iter().zip(&r2).map(|(x, y)| &(a * x) + &(b * y)).collect()
    };
    let zero = alpha.field().zero();
    if alpha.is_zero() {
        // y2·(2β·y1 + γ·y2)
        let two_beta = &beta + &beta;
        return (
            None,
            [
                LinForm::rational(comb(&zero, &alpha.field().one())),
                LinForm::rational(comb(&two_beta, &gamma)),
            ],
        );
    }
    // α·Q = (α·y1 + β·y2)² − Δ·y2²
    let delta = &(&beta * &beta) - &(&alpha * &gamma);
    match delta.sqrt() {
        Some(root) => (
            None,
            [
                LinForm::rational(comb(&alpha, &(&beta + &root))),
                LinForm::rational(comb(&alpha, &(&beta - &root))),
            ],
        ),
        None => {
            let plus = LinForm {
                re: comb(&alpha, &beta),
                im: r2.clone(),
            };
            let minus = plus.conjugate();
            (Some(delta), [plus, minus])
        }
    }
}

/// Moves a form in `(u1, u2, u3, t)` onto `P^5`, where `t = x_k` on `P³_p`
/// for `k` the leading coordinate of `p`.
fn onto_p5(p: &ProjPoint, w: &[Scalar]) -> Vec<Scalar> {
    let k = p.coords().iter().position(|c| !c.is_zero()).unwrap();
    let mut out = vec![p.field().zero(); 6];
    out[k] = w[3].clone();
    out[3..].clone_from_slice(&w[..3]);
    out
}

/// The two equations `x_j − p_j·x_k` of `P³_p`.
fn span_equations(p: &ProjPoint) -> [LinForm; 2] {
    let k = p.coords().iter().position(|c| !c.is_zero()).unwrap();
    let field = p.field();
    let mut eqs = (0..3).filter(|&j| j != k).map(|j| {
        let mut v = vec![field.zero(); 6];
        v[j] = field.one();
        v[k] = -&p.coords()[j];
        LinForm::rational(v)
    });
    [eqs.next().unwrap(), eqs.next().unwrap()]
}

pub fn split_rank2_fiber(rep: &SymDetRep, p: &ProjPoint) -> Result<PlanePair, FourfoldError> {
    let m = rep.fiber_gram(p)?;
    let rank = m.rank();
    if rank != 2 {
        return Err(FourfoldError::WrongRank {
            point: p.to_string(),
            rank,
            needed: 2,
        });
    }
    let (d, [a, b]) = factor_rank2(&m);
    let lift = |l: LinForm| LinForm {
        re: onto_p5(p, &l.re),
        im: onto_p5(p, &l.im),
    };
    let [e1, e2] = span_equations(p);
    let pair = PlanePair {
        point: p.clone(),
        d,
        planes: [
            [e1.clone(), e2.clone(), lift(a)],
            [e1, e2, lift(b)],
        ],
    };
    if !pair.planes_lie_on(&rep.fourfold()) {
        return Err(FourfoldError::Inconsistent(format!(
            "a plane of the couple over {p} is not contained in X"
        )));
    }
    Ok(pair)
}

/// Whether two forms in the same variables are proportional, the first over
/// `K(√d1)` and the second over `K(√d2)`.
fn proportional(a: &LinForm, d1: Option<&Scalar>, b: &LinForm, d2: Option<&Scalar>) -> bool {
    let n = a.re.len();
    // Each 2×2 minor a_i·b_j − a_j·b_i in the basis 1, √d1, √d2, √d1·√d2.
    let part = |i: usize, j: usize| -> [Scalar; 4] {
        [
            &a.re[i] * &b.re[j],
            &a.im[i] * &b.re[j],
            &a.re[i] * &b.im[j],
            &a.im[i] * &b.im[j],
        ]
    };
    let common = match (d1, d2) {
        (Some(x), Some(y)) => (x * y).sqrt().map(|s| (s, x.clone())),
        _ => None,
    };
    (0..n).all(|i| {
        (i + 1..n).all(|j| {
            let (p, q) = (part(i, j), part(j, i));
            let c: Vec<Scalar> = p.iter().zip(&q).map(|(x, y)| x - y).collect();
            match &common {
                // √d1·√d2 = s and √d2 = (s/d1)·√d1.
                Some((s, d1)) => {
                    let rat = &c[0] + &(&c[3] * s);
                    let irr = &c[1] + &(&c[2] * &(s / d1));
                    rat.is_zero() && irr.is_zero()
                }
                None => c.iter().all(Scalar::is_zero),
            }
        })
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Couples {
    pub pairs: Vec<PlanePair>,
    /// Projective dimension of `P₊ ∩ P₋` for each pair.
    pub within: Vec<i32>,
    /// For pairs `a < b`, the four dimensions `dim(P_a^± ∩ P_b^±)`.
    pub cross: Vec<(usize, usize, [[i32; 2]; 2])>,
}

impl Couples {
    pub fn within_are_lines(&self) -> bool {
        self.within.iter().all(|&d| d == 1)
    }

    pub fn cross_are_points(&self) -> bool {
        self.cross.iter().all(|(_, _, m)| m.iter().flatten().all(|&d| d == 0))
    }

    pub fn no_plane_is_p(&self) -> bool {
        self.pairs.iter().all(|p| !p.contains_p())
    }
}

/// Planes from different fibers lie in `P³_p ∩ P³_p' = P`, so they meet where
/// their traces on `P` do: a point, or a line when the traces coincide.
fn cross_dim(a: &PlanePair, i: usize, b: &PlanePair, j: usize) -> i32 {
    let same = proportional(
        &a.planes[i][2].on_p(),
        a.d.as_ref(),
        &b.planes[j][2].on_p(),
        b.d.as_ref(),
    );
    if same {
        1
    } else {
        0
    }
}

/// One couple per point of `S_θ`.
pub fn couples_and_intersections(rep: &SymDetRep, s_theta: &[ProjPoint]) -> Result<Couples, FourfoldError> {
    let pairs = s_theta
        .iter()
        .map(|p| split_rank2_fiber(rep, p))
        .collect::<Result<Vec<_>, _>>()?;
    let within = pairs.iter().map(PlanePair::self_intersection_dim).collect();
    let mut cross = Vec::new();
    for a in 0..pairs.len() {
        for b in a + 1..pairs.len() {
            let m = [0, 1].map(|i| [0, 1].map(|j| cross_dim(&pairs[a], i, &pairs[b], j)));
            cross.push((a, b, m));
        }
    }
    Ok(Couples { pairs, within, cross })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Ambient, Field, VarSet};

    fn rep(diag: [&str; 4], field: Field) -> SymDetRep {
        SymDetRep::diagonal(diag.map(|s| parse_poly(s, VarSet::Plane, field).unwrap())).unwrap()
    }

    fn pt(c: &[i64], field: Field) -> ProjPoint {
        ProjPoint::from_ints(c, Ambient::Plane, field).unwrap()
    }

    fn show(l: &LinForm) -> Vec<String> {
        l.re.iter().map(|c| c.to_string()).collect()
    }

    const IDENTITY: [&str; 4] = ["x1", "x2", "x3", "-x1^3 - x2^3 - x3^3"];

    #[test]
    fn difference_of_squares_at_a_coordinate_point() {
        let r = rep(IDENTITY, Field::Rational);
        let pair = split_rank2_fiber(&r, &pt(&[0, 0, 1], Field::Rational)).unwrap();
        assert_eq!(pair.d, None);
        assert_eq!(show(&pair.planes[0][0]), ["1", "0", "0", "0", "0", "0"]);
        assert_eq!(show(&pair.planes[0][1]), ["0", "1", "0", "0", "0", "0"]);
        assert_eq!(show(&pair.planes[0][2]), ["0", "0", "-1", "0", "0", "1"]);
        assert_eq!(show(&pair.planes[1][2]), ["0", "0", "1", "0", "0", "1"]);
        assert_eq!(pair.self_intersection_dim(), 1);
        assert!(!pair.contains_p());
    }

    #[test]
    fn sum_of_squares_needs_sqrt_minus_one() {
        let r = rep(["x1", "x2", "x3", "x1^3 - x2^3 + x3^3"], Field::Rational);
        let pair = split_rank2_fiber(&r, &pt(&[0, 0, 1], Field::Rational)).unwrap();
        assert_eq!(pair.d, Some(Field::Rational.from_i64(-1)));
        assert_eq!(pair.self_intersection_dim(), 1);
    }

    #[test]
    fn wrong_rank_is_rejected() {
        let r = rep(IDENTITY, Field::Rational);
        assert!(matches!(
            split_rank2_fiber(&r, &pt(&[1, 1, 1], Field::Rational)),
            Err(FourfoldError::WrongRank { rank: 4, .. })
        ));
    }

    #[test]
    fn twelve_couples_mod_thirteen() {
        let f = Field::Prime(13);
        let r = rep(IDENTITY, f);
        let cls = crate::curves::classify_singularities(&r).unwrap();
        let c = couples_and_intersections(&r, &cls.s_theta()).unwrap();
        assert_eq!(c.pairs.len(), 12);
        assert_eq!(c.cross.len(), 66);
        assert!(c.within_are_lines() && c.cross_are_points() && c.no_plane_is_p());
    }

    #[test]
    fn mixed_quadratic_fields_compare_exactly() {
        let q = Field::Rational;
        let s = |n| q.from_i64(n);
        // u1 + √2·u2 against u1 + √3·u2, and against 2·u1 + √8·u2.
        let a = LinForm { re: vec![s(1), s(0), s(0)], im: vec![s(0), s(1), s(0)] };
        let b = LinForm { re: vec![s(1), s(0), s(0)], im: vec![s(0), s(1), s(0)] };
        let c = LinForm { re: vec![s(2), s(0), s(0)], im: vec![s(0), s(1), s(0)] };
        assert!(!proportional(&a, Some(&s(2)), &b, Some(&s(3))));
        assert!(proportional(&a, Some(&s(2)), &c, Some(&s(8))));
        assert!(!proportional(&a, Some(&s(2)), &c.conjugate(), Some(&s(8))));
    }
}
