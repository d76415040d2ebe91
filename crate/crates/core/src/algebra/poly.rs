//! Sparse multivariate polynomials over an exact [`Field`].

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::field::{Field, FieldElement, Scalar};
use super::AlgebraError;

/// The two coordinate systems every polynomial lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum VarSet {
    /// `x1, x2, x3`: the plane carrying the sextic.
    Plane,
    /// `x1, x2, x3, u1, u2, u3`: the ambient `P^5` of the fourfold.
    Ambient,
}

const AMBIENT_NAMES: [&str; 6] = ["x1", "x2", "x3", "u1", "u2", "u3"];

impl VarSet {
    pub fn len(self) -> usize {
        match self {
            VarSet::Plane => 3,
            VarSet::Ambient => 6,
        }
    }

    pub fn names(self) -> &'static [&'static str] {
        &AMBIENT_NAMES[..self.len()]
    }

    pub fn index_of(self, name: &str) -> Option<usize> {
        self.names().iter().position(|n| *n == name)
    }
}

pub const MAX_VARS: usize = 6;

/// Exponent vector. Ordered graded-lexicographically: total degree first,
/// then `x1 > x2 > ... > u3`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Monomial(pub [u16; MAX_VARS]);

impl Monomial {
    pub fn one() -> Self {
        Monomial([0; MAX_VARS])
    }

    pub fn var(i: usize) -> Self {
        let mut e = [0; MAX_VARS];
        e[i] = 1;
        Monomial(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a += b;
        }
        Monomial(e)
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(other.0).all(|(a, b)| *a <= b)
    }

    fn div(&self, other: &Monomial) -> Monomial {
        let mut e = self.0;
        for (a, b) in e.iter_mut().zip(other.0) {
            *a -= b;
        }
        Monomial(e)
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial with no stored zero coefficients.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    vars: VarSet,
    field: Field,
    terms: BTreeMap<Monomial, Scalar>,
}

impl MultiPoly {
    pub fn zero(vars: VarSet, field: Field) -> Self {
        MultiPoly {
            vars,
            field,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: Scalar, vars: VarSet) -> Self {
        let mut p = MultiPoly::zero(vars, c.field());
        p.add_term(Monomial::one(), c);
        p
    }

    pub fn var(i: usize, vars: VarSet, field: Field) -> Self {
        assert!(i < vars.len(), "variable index {i} out of range");
        let mut p = MultiPoly::zero(vars, field);
        p.add_term(Monomial::var(i), field.one());
        p
    }

    /// Linear form `Σ cᵢ·varᵢ`.
    pub fn linear(coeffs: &[Scalar], vars: VarSet, field: Field) -> Self {
        let mut p = MultiPoly::zero(vars, field);
        for (i, c) in coeffs.iter().enumerate() {
            p.add_term(Monomial::var(i), c.clone());
        }
        p
    }

    pub fn from_terms(
        vars: VarSet,
        field: Field,
        terms: impl IntoIterator<Item = (Monomial, Scalar)>,
    ) -> Self {
        let mut p = MultiPoly::zero(vars, field);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn vars(&self) -> VarSet {
        self.vars
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coefficient(&self, m: &Monomial) -> Scalar {
        self.terms.get(m).cloned().unwrap_or_else(|| self.field.zero())
    }

    /// Leading term in graded-lex order.
    pub fn leading(&self) -> Option<(&Monomial, &Scalar)> {
        self.terms.iter().next_back()
    }

    pub fn add_term(&mut self, m: Monomial, c: Scalar) {
        debug_assert!(m.0[self.vars.len()..].iter().all(|&e| e == 0));
        if c.is_zero() {
            return;
        }
        let entry = self.terms.entry(m);
        match entry {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let s = o.get() + &c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    /// Maximum total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    /// True when every term has the same total degree (vacuously for 0).
    pub fn is_homogeneous(&self) -> bool {
        let mut degs = self.terms.keys().map(Monomial::degree);
        match degs.next() {
            None => true,
            Some(d) => degs.all(|e| e == d),
        }
    }

    /// Whether `self` is homogeneous of degree `d` (the zero polynomial
    /// qualifies for every `d`).
    pub fn is_homogeneous_of(&self, d: u32) -> bool {
        self.terms.keys().all(|m| m.degree() == d)
    }

    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly::from_terms(
            self.vars,
            self.field,
            self.terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .map(|(m, c)| (*m, c.clone())),
        )
    }

    pub fn scale(&self, c: &Scalar) -> MultiPoly {
        MultiPoly::from_terms(
            self.vars,
            self.field,
            self.terms.iter().map(|(m, a)| (*m, a * c)),
        )
    }

    pub fn mul_monomial(&self, m: &Monomial, c: &Scalar) -> MultiPoly {
        MultiPoly::from_terms(
            self.vars,
            self.field,
            self.terms.iter().map(|(n, a)| (n.mul(m), a * c)),
        )
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::constant(self.field.one(), self.vars);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Formal partial derivative with respect to variable `i`.
    pub fn diff(&self, i: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.vars, self.field);
        for (m, c) in &self.terms {
            let e = m.0[i];
            if e == 0 {
                continue;
            }
            let mut n = *m;
            n.0[i] -= 1;
            out.add_term(n, c * &self.field.from_i64(e as i64));
        }
        out
    }

    pub fn gradient(&self) -> Vec<MultiPoly> {
        (0..self.vars.len()).map(|i| self.diff(i)).collect()
    }

    /// Evaluates at a coordinate vector of the same length as the variable set.
    pub fn eval(&self, point: &[Scalar]) -> Result<Scalar, AlgebraError> {
        if point.len() != self.vars.len() {
            return Err(AlgebraError::DimensionMismatch {
                expected: self.vars.len(),
                got: point.len(),
            });
        }
        Ok(self.eval_in(point, Scalar::clone))
    }

    /// Evaluation in any field containing the coefficient field.
    pub fn eval_in<E: FieldElement>(&self, point: &[E], lift: impl Fn(&Scalar) -> E) -> E {
        let one = point[0].one_like();
        let mut acc = point[0].zero_like();
        // powers[i][k] = point[i]^k, built lazily up to the max exponent in use.
        let mut powers: Vec<Vec<E>> = point.iter().map(|_| vec![one.clone()]).collect();
        for (m, c) in &self.terms {
            let mut t = lift(c);
            for (i, &e) in m.0[..self.vars.len()].iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap().clone() * point[i].clone();
                    powers[i].push(next);
                }
                if e > 0 {
                    t = t * powers[i][e].clone();
                }
            }
            acc = acc + t;
        }
        acc
    }

    /// Composition: substitutes `images[i]` for variable `i`.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.vars.len());
        let target = images[0].vars;
        let mut out = MultiPoly::zero(target, self.field);
        let mut powers: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|_| vec![MultiPoly::constant(self.field.one(), target)])
            .collect();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(c.clone(), target);
            for (i, &e) in m.0[..self.vars.len()].iter().enumerate() {
                let e = e as usize;
                while powers[i].len() <= e {
                    let next = powers[i].last().unwrap() * &images[i];
                    powers[i].push(next);
                }
                if e > 0 {
                    t = &t * &powers[i][e];
                }
            }
            out = &out + &t;
        }
        out
    }

    /// Reinterprets a plane polynomial in the ambient variable set (or back,
    /// when no `u` variable occurs).
    pub fn with_vars(&self, vars: VarSet) -> Result<MultiPoly, AlgebraError> {
        if self
            .terms
            .keys()
            .any(|m| m.0[vars.len()..].iter().any(|&e| e > 0))
        {
            return Err(AlgebraError::UnknownVariable(
                "polynomial uses variables outside the target set".into(),
            ));
        }
        Ok(MultiPoly {
            vars,
            field: self.field,
            terms: self.terms.clone(),
        })
    }

    /// Coefficient reduction into another field (rationals to `F_q`).
    pub fn reduce(&self, target: Field) -> Result<MultiPoly, AlgebraError> {
        let mut out = MultiPoly::zero(self.vars, target);
        for (m, c) in &self.terms {
            out.add_term(*m, c.reduce(target)?);
        }
        Ok(out)
    }

    pub fn degree_in(&self, i: usize) -> u32 {
        self.terms.keys().map(|m| m.0[i] as u32).max().unwrap_or(0)
    }

    /// Coefficients of `var_i^k` for `k = 0..=degree_in(i)`, each free of `var_i`.
    pub fn coefficients_in(&self, i: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(i) as usize;
        let mut out = vec![MultiPoly::zero(self.vars, self.field); d + 1];
        for (m, c) in &self.terms {
            let mut n = *m;
            let k = n.0[i] as usize;
            n.0[i] = 0;
            out[k].add_term(n, c.clone());
        }
        out
    }

    /// Exact division; `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &MultiPoly) -> Option<MultiPoly> {
        let (lm, lc) = divisor.leading()?;
        let (lm, lc_inv) = (*lm, lc.inverse()?);
        let mut rem = self.clone();
        let mut quot = MultiPoly::zero(self.vars, self.field);
        while let Some((m, c)) = rem.leading() {
            if !lm.divides(m) {
                return None;
            }
            let qm = m.div(&lm);
            let qc = c * &lc_inv;
            rem = &rem - &divisor.mul_monomial(&qm, &qc);
            quot.add_term(qm, qc);
        }
        Some(quot)
    }

    /// Divides by the leading coefficient.
    pub fn monic(&self) -> MultiPoly {
        match self.leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.inverse().expect("nonzero leading coefficient")),
        }
    }

    /// Polynomial expansion about `center`: substitutes `xᵢ = centerᵢ + xᵢ`.
    pub fn translate(&self, center: &[Scalar]) -> MultiPoly {
        let images: Vec<MultiPoly> = center
            .iter()
            .enumerate()
            .map(|(i, c)| {
                &MultiPoly::var(i, self.vars, self.field) + &MultiPoly::constant(c.clone(), self.vars)
            })
            .collect();
        self.substitute(&images)
    }

    /// Expansion of a homogeneous polynomial about a projective point in the
    /// affine chart of the point's first nonzero coordinate `k`: `x_k` is held
    /// at `center[k]` and every other `xᵢ` becomes `centerᵢ + xᵢ`. The result
    /// does not involve `x_k`; its homogeneous parts are the local jets.
    pub fn local_expansion(&self, center: &[Scalar]) -> MultiPoly {
        let k = center
            .iter()
            .position(|c| !c.is_zero())
            .expect("projective point has a nonzero coordinate");
        let images: Vec<MultiPoly> = center
            .iter()
            .enumerate()
            .map(|(i, c)| {
                let shift = MultiPoly::constant(c.clone(), self.vars);
                if i == k {
                    shift
                } else {
                    &MultiPoly::var(i, self.vars, self.field) + &shift
                }
            })
            .collect();
        self.substitute(&images)
    }

    fn check_compatible(&self, other: &MultiPoly) {
        assert_eq!(self.vars, other.vars, "polynomial variable sets differ");
        assert_eq!(self.field, other.field, "polynomial fields differ");
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, c.clone());
        }
        out
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_compatible(rhs);
        let mut out = self.clone();
        for (m, c) in &rhs.terms {
            out.add_term(*m, -c);
        }
        out
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.check_compatible(rhs);
        let mut out = MultiPoly::zero(self.vars, self.field);
        for (m, a) in &self.terms {
            for (n, b) in &rhs.terms {
                out.add_term(m.mul(n), a * b);
            }
        }
        out
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        MultiPoly::from_terms(
            self.vars,
            self.field,
            self.terms.iter().map(|(m, c)| (*m, -c)),
        )
    }
}

macro_rules! owned_binop {
    ($trait:ident, $method:ident) => {
        impl $trait for MultiPoly {
            type Output = MultiPoly;
            fn $method(self, rhs: MultiPoly) -> MultiPoly {
                (&self).$method(&rhs)
            }
        }
    };
}
owned_binop!(Add, add);
owned_binop!(Sub, sub);
owned_binop!(Mul, mul);

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        -&self
    }
}

/// Prints in the rep-file grammar, leading term first, so that the output
/// parses back to the same polynomial.
impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let names = self.vars.names();
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = matches!(c, Scalar::Rat(r) if r < &num_rational::BigRational::from_integer(0.into()));
            let abs = if negative { -c } else { c.clone() };
            match (k, negative) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mut factors = Vec::new();
            if !abs.is_one() || m.degree() == 0 {
                factors.push(abs.to_string());
            }
            for (i, &e) in m.0[..self.vars.len()].iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(names[i].to_string()),
                    _ => factors.push(format!("{}^{}", names[i], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse_poly;

    fn p(s: &str) -> MultiPoly {
        crate::algebra::parse_expression(s, VarSet::Ambient, Field::Rational).unwrap()
    }

    #[test]
    fn derivatives() {
        assert_eq!(p("x1^3").diff(0), p("3*x1^2"));
        assert_eq!(p("x1*u1^2").diff(3), p("2*x1*u1"));
        assert!(p("x2^2").diff(0).is_zero());
    }

    #[test]
    fn exact_division() {
        let a = p("x1^2 - x2^2");
        let b = p("x1 - x2");
        assert_eq!(a.div_exact(&b).unwrap(), p("x1 + x2"));
        assert!(p("x1^2 + x2^2").div_exact(&b).is_none());
    }

    #[test]
    fn display_orders_terms_graded_lex() {
        let f = p("x3^3 + x1*x2*x3 - 1/2*x1^3 + 2*u1^3");
        assert_eq!(f.to_string(), "-1/2*x1^3 + x1*x2*x3 + x3^3 + 2*u1^3");
    }

    #[test]
    fn local_expansion_of_nodal_cubic() {
        // Node of x2^2 x3 - x1^3 + x1^2 x3 at (0:0:1).
        let fq = Field::Rational;
        let f = parse_poly("x2^2*x3 - x1^3 + x1^2*x3", VarSet::Plane, fq).unwrap();
        let local = f.local_expansion(&[fq.zero(), fq.zero(), fq.one()]);
        assert!(local.homogeneous_part(0).is_zero());
        assert!(local.homogeneous_part(1).is_zero());
        assert_eq!(
            local.homogeneous_part(2),
            parse_poly("x1^2 + x2^2", VarSet::Plane, fq).unwrap()
        );
        let shifted = f.translate(&[fq.one(), fq.zero(), fq.zero()]);
        let origin = [fq.zero(), fq.zero(), fq.zero()];
        let e1 = [fq.one(), fq.zero(), fq.zero()];
        assert_eq!(shifted.eval(&origin).unwrap(), f.eval(&e1).unwrap());
    }

    #[test]
    fn substitution_composes() {
        let f = p("x1^2 + x2");
        let g = f.substitute(&[
            p("x1 + u1"),
            p("u2"),
            p("x3"),
            p("u1"),
            p("u2"),
            p("u3"),
        ]);
        assert_eq!(g, p("x1^2 + 2*x1*u1 + u1^2 + u2"));
    }
}
