//! Common zeros of homogeneous polynomials in three variables.
//!
//! Over `F_q` the plane is scanned exhaustively. Over the rationals the system
//! is first moved by a unimodular shear so that every form has a constant
//! leading coefficient in the first variable; then two generic combinations
//! are eliminated against a third by resultants, rational roots of the gcd of
//! the eliminants are back-substituted, and whatever has no rational root is
//! counted against completeness.

use super::field::{Field, Scalar};
use super::point::{Ambient, ProjPoint};
use super::poly::{MultiPoly, VarSet};
use super::resultant::resultant;
use super::univariate::{rational_roots, UniPoly};
use super::AlgebraError;

/// Points found, and whether they are provably all of them (over the
/// algebraic closure for rational input, over `F_q` for finite fields).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solutions {
    pub points: Vec<ProjPoint>,
    pub complete: bool,
}

/// Every point of `P^2(F_q)` in canonical form, in sorted order.
pub fn plane_points(field: Field) -> Vec<ProjPoint> {
    let elems: Vec<Scalar> = field.elements().expect("finite field").collect();
    let (zero, one) = (field.zero(), field.one());
    let mut out = vec![ProjPoint::new(vec![zero.clone(), zero.clone(), one.clone()], Ambient::Plane).unwrap()];
    for b in &elems {
        out.push(ProjPoint::new(vec![zero.clone(), one.clone(), b.clone()], Ambient::Plane).unwrap());
    }
    for a in &elems {
        for b in &elems {
            out.push(ProjPoint::new(vec![one.clone(), a.clone(), b.clone()], Ambient::Plane).unwrap());
        }
    }
    out
}

/// Common projective zeros of plane forms (variables `x1, x2, x3`).
pub fn plane_common_zeros(polys: &[MultiPoly]) -> Result<Solutions, AlgebraError> {
    let polys: Vec<MultiPoly> = polys.iter().filter(|p| !p.is_zero()).cloned().collect();
    let Some(first) = polys.first() else {
        return Err(AlgebraError::PositiveDimensional("every equation is zero".into()));
    };
    let field = first.field();
    match field {
        Field::Prime(_) => {
            let points = plane_points(field)
                .into_iter()
                .filter(|p| polys.iter().all(|f| f.eval(p.coords()).unwrap().is_zero()))
                .collect();
            Ok(Solutions {
                points,
                complete: true,
            })
        }
        Field::Rational => rational_zeros(&polys),
    }
}

const COMBOS: [[i64; 3]; 6] = [
    [1, 2, -3],
    [2, -1, 5],
    [3, 4, 1],
    [-2, 3, 7],
    [5, -3, 2],
    [1, -4, -6],
];

fn rational_zeros(polys: &[MultiPoly]) -> Result<Solutions, AlgebraError> {
    let field = Field::Rational;
    let (a, b) = shear_for(polys);
    let fwd = shear(a, b);
    let moved: Vec<MultiPoly> = polys.iter().map(|p| p.substitute(&fwd)).collect();

    let mut found: Vec<[Scalar; 3]> = Vec::new();
    let mut complete = true;

    // Points with y3 = 0.
    let on_line: Vec<UniPoly> = moved
        .iter()
        .map(|p| restrict(p, &[None, Some(field.one()), Some(field.zero())]))
        .collect();
    if moved
        .iter()
        .all(|p| p.eval(&[field.one(), field.zero(), field.zero()]).unwrap().is_zero())
    {
        found.push([field.one(), field.zero(), field.zero()]);
    }
    let g = gcd_all(&on_line);
    if g.is_zero() {
        return Err(AlgebraError::PositiveDimensional("a whole line of solutions".into()));
    }
    if g.degree().unwrap() > 0 {
        let r = rational_roots(&g);
        complete &= r.is_complete();
        for t in r.distinct() {
            found.push([t, field.one(), field.zero()]);
        }
    }

    // Chart y3 = 1.
    let affine: Vec<MultiPoly> = moved.iter().map(dehomogenize).collect();
    let eliminant = eliminate(&affine)?;
    if eliminant.degree().unwrap_or(0) > 0 {
        let r = rational_roots(&eliminant);
        complete &= r.is_complete();
        for t in r.distinct() {
            let fibre: Vec<UniPoly> = moved
                .iter()
                .map(|p| restrict(p, &[None, Some(t.clone()), Some(field.one())]))
                .collect();
            let h = gcd_all(&fibre);
            if h.is_zero() {
                return Err(AlgebraError::PositiveDimensional("a whole line of solutions".into()));
            }
            if h.degree().unwrap() == 0 {
                continue;
            }
            let s = rational_roots(&h);
            complete &= s.is_complete();
            for x in s.distinct() {
                found.push([x, t.clone(), field.one()]);
            }
        }
    }

    // Back to the original coordinates: x1 = y1, x2 = a·y1 + y2, x3 = b·y1 + y3.
    let (a, b) = (field.from_i64(a), field.from_i64(b));
    let mut points: Vec<ProjPoint> = found
        .into_iter()
        .map(|[y1, y2, y3]| {
            let x2 = &(&a * &y1) + &y2;
            let x3 = &(&b * &y1) + &y3;
            ProjPoint::new(vec![y1, x2, x3], Ambient::Plane).unwrap()
        })
        .collect();
    points.sort();
    points.dedup();
    debug_assert!(points
        .iter()
        .all(|p| polys.iter().all(|f| f.eval(p.coords()).unwrap().is_zero())));
    Ok(Solutions { points, complete })
}

/// First shear `(a, b)` whose image of `(1:0:0)`, namely `(1:a:b)`, lies on
/// none of the curves.
fn shear_for(polys: &[MultiPoly]) -> (i64, i64) {
    let f = Field::Rational;
    for r in 0..50i64 {
        for a in -r..=r {
            for b in [-(r - a.abs()), r - a.abs()] {
                let c = [f.one(), f.from_i64(a), f.from_i64(b)];
                if polys.iter().all(|p| !p.eval(&c).unwrap().is_zero()) {
                    return (a, b);
                }
            }
        }
    }
    unreachable!("nonzero forms cannot vanish on every small integer point")
}

fn shear(a: i64, b: i64) -> Vec<MultiPoly> {
    let f = Field::Rational;
    let y = |i| MultiPoly::var(i, VarSet::Plane, f);
    let c = |n| MultiPoly::constant(f.from_i64(n), VarSet::Plane);
    vec![y(0), &(&c(a) * &y(0)) + &y(1), &(&c(b) * &y(0)) + &y(2)]
}

fn dehomogenize(p: &MultiPoly) -> MultiPoly {
    let f = p.field();
    p.substitute(&[
        MultiPoly::var(0, VarSet::Plane, f),
        MultiPoly::var(1, VarSet::Plane, f),
        MultiPoly::constant(f.one(), VarSet::Plane),
    ])
}

/// Univariate restriction: the `None` slot is the variable, the others are
/// fixed values.
fn restrict(p: &MultiPoly, slots: &[Option<Scalar>; 3]) -> UniPoly {
    let f = p.field();
    let free = slots.iter().position(Option::is_none).unwrap();
    let d = p.degree().unwrap_or(0) as usize;
    let mut coeffs = vec![f.zero(); d + 1];
    for (m, c) in p.terms() {
        let mut v = c.clone();
        for (i, s) in slots.iter().enumerate() {
            if let Some(s) = s {
                v = &v * &s.pow(m.0[i] as u32);
            }
        }
        let k = m.0[free] as usize;
        coeffs[k] = &coeffs[k] + &v;
    }
    UniPoly::new(f, coeffs)
}

fn gcd_all(polys: &[UniPoly]) -> UniPoly {
    polys
        .iter()
        .fold(UniPoly::zero(Field::Rational), |acc, p| acc.gcd(p))
}

fn combine(polys: &[MultiPoly], weights: &[i64; 3], shift: usize) -> MultiPoly {
    let f = polys[0].field();
    let mut acc = MultiPoly::zero(polys[0].vars(), f);
    for (i, p) in polys.iter().enumerate() {
        let w = weights[(i + shift) % 3] * (1 + (i / 3) as i64);
        acc = &acc + &p.scale(&f.from_i64(w));
    }
    acc
}

/// A univariate polynomial in `y2` whose roots contain the `y2`-coordinates of
/// all affine common zeros.
fn eliminate(affine: &[MultiPoly]) -> Result<UniPoly, AlgebraError> {
    let field = Field::Rational;
    let to_uni = |p: &MultiPoly| restrict(p, &[Some(field.zero()), None, Some(field.one())]);
    if affine.iter().all(|p| p.degree_in(0) == 0) {
        return Ok(gcd_all(&affine.iter().map(to_uni).collect::<Vec<_>>()));
    }
    if affine.len() == 1 {
        return Err(AlgebraError::PositiveDimensional("a single equation".into()));
    }
    for round in 0..COMBOS.len() - 2 {
        let a = combine(affine, &COMBOS[round], 0);
        let b = combine(affine, &COMBOS[round + 1], 1);
        let c = combine(affine, &COMBOS[round + 2], 2);
        if a.degree_in(0) == 0 {
            continue;
        }
        let mut g = UniPoly::zero(field);
        for other in [&b, &c] {
            let r = if other.degree_in(0) == 0 {
                other.clone()
            } else {
                resultant(&a, other, 0)?
            };
            g = g.gcd(&to_uni(&r));
        }
        if !g.is_zero() {
            return Ok(g);
        }
    }
    Err(AlgebraError::PositiveDimensional(
        "the equations share a common curve".into(),
    ))
}
