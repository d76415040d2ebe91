//! Dense univariate polynomials over a [`Field`], square-free decomposition
//! and rational root extraction.
//!
//! Rational roots are found p-adically: roots modulo a small good prime are
//! Newton-lifted until the modulus exceeds twice `|lc|·|constant term|`; every
//! rational root `a/b` of a primitive integer polynomial has `b | lc` and
//! `a | constant term`, so `lc·root` is recovered as a symmetric residue and
//! checked exactly.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::field::{is_prime, Field, Scalar};

/// Coefficients from low to high degree, no trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    field: Field,
    coeffs: Vec<Scalar>,
}

impl UniPoly {
    pub fn new(field: Field, mut coeffs: Vec<Scalar>) -> Self {
        while coeffs.last().is_some_and(Scalar::is_zero) {
            coeffs.pop();
        }
        UniPoly { field, coeffs }
    }

    pub fn from_ints(field: Field, coeffs: &[i64]) -> Self {
        UniPoly::new(field, coeffs.iter().map(|&c| field.from_i64(c)).collect())
    }

    pub fn zero(field: Field) -> Self {
        UniPoly::new(field, Vec::new())
    }

    pub fn one(field: Field) -> Self {
        UniPoly::new(field, vec![field.one()])
    }

    /// `t - a`.
    pub fn linear_root(a: &Scalar) -> Self {
        UniPoly::new(a.field(), vec![-a, a.field().one()])
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn coeffs(&self) -> &[Scalar] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading(&self) -> Option<&Scalar> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &Scalar) -> Scalar {
        let mut acc = self.field.zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * x) + c;
        }
        acc
    }

    pub fn scale(&self, c: &Scalar) -> Self {
        UniPoly::new(self.field, self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn monic(&self) -> Self {
        match self.leading() {
            None => self.clone(),
            Some(lc) => self.scale(&lc.inverse().expect("nonzero")),
        }
    }

    pub fn derivative(&self) -> Self {
        UniPoly::new(
            self.field,
            self.coeffs
                .iter()
                .enumerate()
                .skip(1)
                .map(|(i, c)| c * &self.field.from_i64(i as i64))
                .collect(),
        )
    }

    pub fn add(&self, other: &Self) -> Self {
        let n = self.coeffs.len().max(other.coeffs.len());
        let zero = self.field.zero();
        UniPoly::new(
            self.field,
            (0..n)
                .map(|i| self.coeffs.get(i).unwrap_or(&zero) + other.coeffs.get(i).unwrap_or(&zero))
                .collect(),
        )
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.scale(&-self.field.one()))
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return UniPoly::zero(self.field);
        }
        let mut out = vec![self.field.zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                out[i + j] = &out[i + j] + &(a * b);
            }
        }
        UniPoly::new(self.field, out)
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(UniPoly::one(self.field), |acc, _| acc.mul(self))
    }

    /// Quotient and remainder. Panics on division by zero.
    pub fn divrem(&self, divisor: &Self) -> (Self, Self) {
        let dd = divisor.degree().expect("division by the zero polynomial");
        let inv = divisor.leading().unwrap().inverse().unwrap();
        let mut rem = self.coeffs.clone();
        let n = self.coeffs.len();
        if n <= dd {
            return (UniPoly::zero(self.field), self.clone());
        }
        let mut quot = vec![self.field.zero(); n - dd];
        for k in (0..n - dd).rev() {
            let c = &rem[k + dd] * &inv;
            if c.is_zero() {
                continue;
            }
            for (j, d) in divisor.coeffs.iter().enumerate() {
                rem[k + j] = &rem[k + j] - &(&c * d);
            }
            quot[k] = c;
        }
        rem.truncate(dd);
        (UniPoly::new(self.field, quot), UniPoly::new(self.field, rem))
    }

    /// Monic greatest common divisor (zero only if both inputs are zero).
    pub fn gcd(&self, other: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.divrem(&b).1;
            a = b;
            b = r;
        }
        a.monic()
    }

    /// Yun's algorithm: `[(s_1, 1), (s_2, 2), ...]` with `self = lc·Π s_i^i`,
    /// each `s_i` monic square-free. Requires characteristic 0 or degree below
    /// the characteristic.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, u32)> {
        let mut out = Vec::new();
        if self.degree().unwrap_or(0) == 0 {
            return out;
        }
        let f = self.monic();
        let df = f.derivative();
        let a = f.gcd(&df);
        let mut b = f.divrem(&a).0;
        let c = df.divrem(&a).0;
        let mut d = c.sub(&b.derivative());
        let mut i = 1;
        loop {
            let s = b.gcd(&d);
            if s.degree().unwrap_or(0) > 0 {
                out.push((s.clone(), i));
            }
            b = b.divrem(&s).0;
            if b.degree().unwrap_or(0) == 0 {
                break;
            }
            let c = d.divrem(&s).0;
            d = c.sub(&b.derivative());
            i += 1;
        }
        out
    }

    pub fn is_squarefree(&self) -> bool {
        self.degree().unwrap_or(0) == 0 || self.gcd(&self.derivative()).degree() == Some(0)
    }

    /// All roots in the field by exhaustive search (small prime fields only).
    pub fn roots_fp(&self) -> Vec<Scalar> {
        let elements = self.field.elements().expect("roots_fp needs a prime field");
        elements.filter(|x| self.eval(x).is_zero()).collect()
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match i {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}*t")?,
                _ => write!(f, "{c}*t^{i}")?,
            }
        }
        Ok(())
    }
}

/// Rational roots with multiplicity, and the degree of what is left.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RootReport {
    /// Sorted by value.
    pub roots: Vec<(Scalar, u32)>,
    /// Degree of the cofactor with no rational roots.
    pub residual_degree: usize,
}

impl RootReport {
    pub fn distinct(&self) -> Vec<Scalar> {
        self.roots.iter().map(|(r, _)| r.clone()).collect()
    }

    pub fn is_complete(&self) -> bool {
        self.residual_degree == 0
    }
}

/// Rational roots of a nonzero polynomial over the rationals.
pub fn rational_roots(f: &UniPoly) -> RootReport {
    assert_eq!(f.field(), Field::Rational, "rational_roots needs rational coefficients");
    assert!(!f.is_zero(), "rational_roots of the zero polynomial");
    let mut roots = Vec::new();
    for (s, mult) in f.squarefree_decomposition() {
        for r in squarefree_rational_roots(&s) {
            roots.push((r, mult));
        }
    }
    roots.sort();
    let found: usize = roots.iter().map(|(_, m)| *m as usize).sum();
    RootReport {
        roots,
        residual_degree: f.degree().unwrap() - found,
    }
}

/// Primitive integer multiple of a rational polynomial.
pub fn primitive_integer_coeffs(f: &UniPoly) -> Vec<BigInt> {
    let rats: Vec<&BigRational> = f.coeffs.iter().map(|c| c.as_rational().unwrap()).collect();
    let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
    let ints: Vec<BigInt> = rats.iter().map(|r| r.numer() * (&lcm / r.denom())).collect();
    let g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
    ints.into_iter().map(|n| n / &g).collect()
}

fn squarefree_rational_roots(f: &UniPoly) -> Vec<Scalar> {
    let mut out = Vec::new();
    let mut g = primitive_integer_coeffs(f);
    if g[0].is_zero() {
        out.push(Field::Rational.zero());
        g.remove(0);
    }
    if g.len() <= 1 {
        return out;
    }
    let lc = g.last().unwrap().clone();
    let c0 = g[0].clone();
    let prime = good_prime(&g);
    let ell = BigInt::from(prime);
    let bound = BigInt::from(2) * lc.abs() * c0.abs();
    let small: Vec<u64> = g.iter().map(|c| c.mod_floor(&ell).to_u64().unwrap()).collect();
    for r0 in 0..prime {
        if eval_mod_u64(&small, r0, prime) != 0 {
            continue;
        }
        let (r, m) = hensel_lift(&g, BigInt::from(r0), &ell, &bound);
        let mut y = (&lc * &r).mod_floor(&m);
        if &y * 2 > m {
            y -= &m;
        }
        let candidate = BigRational::new(y, lc.clone());
        if eval_int_poly(&g, &candidate).is_zero() {
            out.push(Scalar::Rat(candidate));
        }
    }
    out
}

fn eval_mod_u64(coeffs: &[u64], x: u64, p: u64) -> u64 {
    coeffs.iter().rev().fold(0, |acc, &c| (acc * x + c) % p)
}

fn eval_int_poly(coeffs: &[BigInt], x: &BigRational) -> BigRational {
    coeffs.iter().rev().fold(BigRational::zero(), |acc, c| {
        acc * x + BigRational::from_integer(c.clone())
    })
}

/// Smallest odd prime not dividing the leading coefficient modulo which the
/// polynomial stays square-free.
fn good_prime(g: &[BigInt]) -> u64 {
    let mut p = 3u64;
    loop {
        if is_prime(p) {
            let field = Field::Prime(p as u32);
            let red = UniPoly::new(field, g.iter().map(|c| field.from_bigint(c)).collect());
            if red.degree() == Some(g.len() - 1) && red.is_squarefree() {
                return p;
            }
        }
        p += 2;
    }
}

/// Newton iteration from a simple root modulo `ell` until the modulus
/// exceeds `bound`. Returns the lifted root and the final modulus.
fn hensel_lift(g: &[BigInt], mut r: BigInt, ell: &BigInt, bound: &BigInt) -> (BigInt, BigInt) {
    let dg: Vec<BigInt> = g
        .iter()
        .enumerate()
        .skip(1)
        .map(|(i, c)| c * BigInt::from(i))
        .collect();
    let mut m = ell.clone();
    while &m <= bound {
        m = &m * &m;
        let val = horner_mod(g, &r, &m);
        let der = horner_mod(&dg, &r, &m);
        let inv = mod_inverse(&der, &m).expect("simple root has invertible derivative");
        r = (&r - val * inv).mod_floor(&m);
    }
    (r, m)
}

fn horner_mod(coeffs: &[BigInt], x: &BigInt, m: &BigInt) -> BigInt {
    coeffs
        .iter()
        .rev()
        .fold(BigInt::zero(), |acc, c| (acc * x + c).mod_floor(m))
}

fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.mod_floor(m).extended_gcd(m);
    e.gcd.is_one().then(|| e.x.mod_floor(m))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::rational;

    fn q(c: &[i64]) -> UniPoly {
        UniPoly::from_ints(Field::Rational, c)
    }

    #[test]
    fn cubic_with_three_roots() {
        let r = rational_roots(&q(&[0, -1, 0, 1]));
        assert_eq!(r.distinct(), vec![rational(-1, 1), rational(0, 1), rational(1, 1)]);
        assert!(r.is_complete());
    }

    #[test]
    fn irreducible_quadratic() {
        let r = rational_roots(&q(&[1, 0, 1]));
        assert!(r.roots.is_empty());
        assert_eq!(r.residual_degree, 2);
    }

    #[test]
    fn sum_of_cubes_factor() {
        let r = rational_roots(&q(&[1, 0, 0, 1]));
        assert_eq!(r.roots, vec![(rational(-1, 1), 1)]);
        assert_eq!(r.residual_degree, 2);
    }

    #[test]
    fn multiplicities_and_fractions() {
        // (5t + 1)^2 (3t - 7) (t^2 + 2)
        let f = q(&[1, 5]).pow(2).mul(&q(&[-7, 3])).mul(&q(&[2, 0, 1]));
        let r = rational_roots(&f);
        assert_eq!(r.roots, vec![(rational(-1, 5), 2), (rational(7, 3), 1)]);
        assert_eq!(r.residual_degree, 2);
    }

    #[test]
    fn large_roots_need_lifting() {
        // (1000003 t - 999983)(t + 123456789)
        let f = q(&[-999983, 1000003]).mul(&q(&[123456789, 1]));
        let r = rational_roots(&f);
        assert_eq!(r.distinct(), vec![rational(-123456789, 1), rational(999983, 1000003)]);
    }

    #[test]
    fn squarefree_decomposition_recovers_powers() {
        let a = q(&[1, 1]);
        let b = q(&[-2, 0, 1]);
        let f = a.pow(3).mul(&b);
        let dec = f.squarefree_decomposition();
        assert_eq!(dec, vec![(b.monic(), 1), (a.monic(), 3)]);
    }

    #[test]
    fn divrem_and_gcd() {
        let f = q(&[-1, 0, 1]);
        let g = q(&[1, 1]);
        let (quo, rem) = f.divrem(&g);
        assert_eq!(quo, q(&[-1, 1]));
        assert!(rem.is_zero());
        assert_eq!(f.gcd(&q(&[-1, 1]).mul(&q(&[3, 1]))), q(&[-1, 1]));
    }

    #[test]
    fn roots_over_prime_field() {
        let f = UniPoly::from_ints(Field::Prime(7), &[1, 0, 0, 1]);
        let roots: Vec<String> = f.roots_fp().iter().map(|r| r.to_string()).collect();
        assert_eq!(roots, vec!["3", "5", "6"]);
    }
}
