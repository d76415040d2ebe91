//! Exact scalar fields: the rationals, prime fields `F_q` with `q < 2^31`,
//! and quadratic extensions `K(√d)` adjoined on demand.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::AlgebraError;

/// The field every scalar of a computation lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Rational,
    Prime(u32),
}

impl Field {
    /// Builds `F_q`, checking that `q` is a prime below `2^31`.
    pub fn prime(q: u64) -> Result<Self, AlgebraError> {
        if q >= 1 << 31 || !is_prime(q) {
            return Err(AlgebraError::NotPrime(q));
        }
        Ok(Field::Prime(q as u32))
    }

    pub fn characteristic(self) -> u32 {
        match self {
            Field::Rational => 0,
            Field::Prime(q) => q,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Field::Prime(_))
    }

    pub fn zero(self) -> Scalar {
        self.from_i64(0)
    }

    pub fn one(self) -> Scalar {
        self.from_i64(1)
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(q) => Scalar::Fp {
                value: n.rem_euclid(q as i64) as u32,
                modulus: q,
            },
        }
    }

    pub fn from_bigint(self, n: &BigInt) -> Scalar {
        match self {
            Field::Rational => Scalar::Rat(BigRational::from_integer(n.clone())),
            Field::Prime(q) => Scalar::Fp {
                value: n.mod_floor(&BigInt::from(q)).to_u32().expect("residue fits"),
                modulus: q,
            },
        }
    }

    /// Maps a rational number into this field. Fails in `F_q` when `q`
    /// divides the denominator.
    pub fn from_rational(self, r: &BigRational) -> Result<Scalar, AlgebraError> {
        match self {
            Field::Rational => Ok(Scalar::Rat(r.clone())),
            Field::Prime(q) => {
                let den = self.from_bigint(r.denom());
                let inv = den.inverse().ok_or(AlgebraError::BadReduction {
                    value: r.to_string(),
                    modulus: q,
                })?;
                Ok(&self.from_bigint(r.numer()) * &inv)
            }
        }
    }

    /// Every element of a finite field, in increasing residue order.
    pub fn elements(self) -> Option<impl Iterator<Item = Scalar>> {
        match self {
            Field::Rational => None,
            Field::Prime(q) => Some((0..q).map(move |value| Scalar::Fp { value, modulus: q })),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Field::Rational => write!(f, "rational"),
            Field::Prime(q) => write!(f, "fp:{q}"),
        }
    }
}

impl std::str::FromStr for Field {
    type Err = AlgebraError;

    /// Accepts `rational`, `fp:Q` and `fp Q`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "rational" {
            return Ok(Field::Rational);
        }
        let rest = s
            .strip_prefix("fp")
            .map(|r| r.trim_start_matches([':', ' ']))
            .ok_or_else(|| AlgebraError::BadField(s.to_string()))?;
        let q: u64 = rest
            .trim()
            .parse()
            .map_err(|_| AlgebraError::BadField(s.to_string()))?;
        Field::prime(q)
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// An element of the rationals or of a prime field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Fp { value: u32, modulus: u32 },
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Rat(_) => Field::Rational,
            Scalar::Fp { modulus, .. } => Field::Prime(*modulus),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_zero(),
            Scalar::Fp { value, .. } => *value == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Rat(r) => r.is_one(),
            Scalar::Fp { value, .. } => *value == 1,
        }
    }

    pub fn inverse(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) if r.is_zero() => None,
            Scalar::Rat(r) => Some(Scalar::Rat(r.recip())),
            Scalar::Fp { value: 0, .. } => None,
            Scalar::Fp { value, modulus } => Some(Scalar::Fp {
                value: pow_mod(*value as u64, *modulus as u64 - 2, *modulus as u64) as u32,
                modulus: *modulus,
            }),
        }
    }

    pub fn pow(&self, mut e: u32) -> Scalar {
        let mut base = self.clone();
        let mut acc = self.field().one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            base = &base * &base;
            e >>= 1;
        }
        acc
    }

    pub fn as_rational(&self) -> Option<&BigRational> {
        match self {
            Scalar::Rat(r) => Some(r),
            Scalar::Fp { .. } => None,
        }
    }

    /// A square root in the same field, if one exists.
    pub fn sqrt(&self) -> Option<Scalar> {
        match self {
            Scalar::Rat(r) => {
                if r.is_negative() {
                    return None;
                }
                let n = exact_isqrt(r.numer())?;
                let d = exact_isqrt(r.denom())?;
                Some(Scalar::Rat(BigRational::new(n, d)))
            }
            Scalar::Fp { value, modulus } => {
                tonelli_shanks(*value as u64, *modulus as u64).map(|v| Scalar::Fp {
                    value: v as u32,
                    modulus: *modulus,
                })
            }
        }
    }

    pub fn is_square(&self) -> bool {
        self.sqrt().is_some()
    }

    /// Reduces a rational scalar into `F_q`.
    pub fn reduce(&self, target: Field) -> Result<Scalar, AlgebraError> {
        match self {
            Scalar::Rat(r) => target.from_rational(r),
            Scalar::Fp { .. } if self.field() == target => Ok(self.clone()),
            Scalar::Fp { modulus, .. } => Err(AlgebraError::FieldMismatch {
                left: Field::Prime(*modulus),
                right: target,
            }),
        }
    }

    fn check_same(&self, other: &Scalar) {
        if self.field() != other.field() {
            panic!(
                "scalar field mismatch: {} vs {}",
                self.field(),
                other.field()
            );
        }
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.sign() == Sign::Minus {
        return None;
    }
    let s = n.sqrt();
    (&s * &s == *n).then_some(s)
}

pub(crate) fn pow_mod(mut base: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = acc * base % m;
        }
        base = base * base % m;
        e >>= 1;
    }
    acc
}

fn tonelli_shanks(a: u64, p: u64) -> Option<u64> {
    let a = a % p;
    if a == 0 || p == 2 {
        return Some(a);
    }
    if pow_mod(a, (p - 1) / 2, p) != 1 {
        return None;
    }
    let (mut q, mut s) = (p - 1, 0);
    while q % 2 == 0 {
        q /= 2;
        s += 1;
    }
    let z = (2..p).find(|&z| pow_mod(z, (p - 1) / 2, p) == p - 1)?;
    let mut m = s;
    let mut c = pow_mod(z, q, p);
    let mut t = pow_mod(a, q, p);
    let mut r = pow_mod(a, q.div_ceil(2), p);
    while t != 1 {
        let mut i = 0;
        let mut tt = t;
        while tt != 1 {
            tt = tt * tt % p;
            i += 1;
        }
        let b = pow_mod(c, 1 << (m - i - 1), p);
        m = i;
        c = b * b % p;
        t = t * c % p;
        r = r * b % p;
    }
    // Smaller of the two roots, so results are deterministic.
    Some(r.min(p - r))
}

impl Ord for Scalar {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Scalar::Rat(a), Scalar::Rat(b)) => a.cmp(b),
            (Scalar::Fp { value: a, modulus: m }, Scalar::Fp { value: b, modulus: n }) => {
                (m, a).cmp(&(n, b))
            }
            (Scalar::Rat(_), Scalar::Fp { .. }) => Ordering::Less,
            (Scalar::Fp { .. }, Scalar::Rat(_)) => Ordering::Greater,
        }
    }
}

impl PartialOrd for Scalar {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Rat(r) => write!(f, "{r}"),
            Scalar::Fp { value, .. } => write!(f, "{value}"),
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $rat:expr, $fp:expr) => {
        impl<'a> $trait<&'a Scalar> for &'a Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &'a Scalar) -> Scalar {
                self.check_same(rhs);
                match (self, rhs) {
                    (Scalar::Rat(a), Scalar::Rat(b)) => Scalar::Rat($rat(a, b)),
                    (Scalar::Fp { value: a, modulus }, Scalar::Fp { value: b, .. }) => {
                        let m = *modulus as u64;
                        Scalar::Fp {
                            value: $fp(*a as u64, *b as u64, m) as u32,
                            modulus: *modulus,
                        }
                    }
                    _ => unreachable!(),
                }
            }
        }

        impl $trait for Scalar {
            type Output = Scalar;
            fn $method(self, rhs: Scalar) -> Scalar {
                (&self).$method(&rhs)
            }
        }
    };
}

scalar_binop!(
    Add,
    add,
    |a: &BigRational, b: &BigRational| a + b,
    |a: u64, b: u64, m: u64| (a + b) % m
);
scalar_binop!(
    Sub,
    sub,
    |a: &BigRational, b: &BigRational| a - b,
    |a: u64, b: u64, m: u64| (a + m - b) % m
);
scalar_binop!(
    Mul,
    mul,
    |a: &BigRational, b: &BigRational| a * b,
    |a: u64, b: u64, m: u64| a * b % m
);

impl<'a> Div<&'a Scalar> for &'a Scalar {
    type Output = Scalar;
    fn div(self, rhs: &'a Scalar) -> Scalar {
        self * &rhs.inverse().expect("division by zero scalar")
    }
}

impl Div for Scalar {
    type Output = Scalar;
    fn div(self, rhs: Scalar) -> Scalar {
        &self / &rhs
    }
}

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Rat(a) => Scalar::Rat(-a),
            Scalar::Fp { value, modulus } => Scalar::Fp {
                value: (modulus - value) % modulus,
                modulus: *modulus,
            },
        }
    }
}

impl Neg for Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        -&self
    }
}

/// The operations generic exact linear algebra needs.
pub trait FieldElement:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn inverse(&self) -> Option<Self>;
}

impl FieldElement for Scalar {
    fn zero_like(&self) -> Self {
        self.field().zero()
    }
    fn one_like(&self) -> Self {
        self.field().one()
    }
    fn is_zero(&self) -> bool {
        Scalar::is_zero(self)
    }
    fn inverse(&self) -> Option<Self> {
        Scalar::inverse(self)
    }
}

/// `re + im·√d` with `d` a fixed non-square of the base field.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct QuadElem {
    pub re: Scalar,
    pub im: Scalar,
    pub d: Scalar,
}

impl QuadElem {
    /// Errors if `d` is already a square in its field.
    pub fn adjoin(d: &Scalar) -> Result<QuadElem, AlgebraError> {
        if d.is_square() {
            return Err(AlgebraError::SquareDiscriminant(d.to_string()));
        }
        Ok(QuadElem {
            re: d.field().zero(),
            im: d.field().one(),
            d: d.clone(),
        })
    }

    pub fn from_base(x: Scalar, d: &Scalar) -> QuadElem {
        QuadElem {
            im: x.field().zero(),
            re: x,
            d: d.clone(),
        }
    }

    pub fn conjugate(&self) -> QuadElem {
        QuadElem {
            re: self.re.clone(),
            im: -&self.im,
            d: self.d.clone(),
        }
    }

    pub fn norm(&self) -> Scalar {
        &(&self.re * &self.re) - &(&self.d * &(&self.im * &self.im))
    }
}

impl fmt::Display for QuadElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else {
            write!(f, "{}+{}*sqrt({})", self.re, self.im, self.d)
        }
    }
}

impl Add for QuadElem {
    type Output = QuadElem;
    fn add(self, rhs: QuadElem) -> QuadElem {
        QuadElem {
            re: &self.re + &rhs.re,
            im: &self.im + &rhs.im,
            d: self.d,
        }
    }
}

impl Sub for QuadElem {
    type Output = QuadElem;
    fn sub(self, rhs: QuadElem) -> QuadElem {
        QuadElem {
            re: &self.re - &rhs.re,
            im: &self.im - &rhs.im,
            d: self.d,
        }
    }
}

impl Mul for QuadElem {
    type Output = QuadElem;
    fn mul(self, rhs: QuadElem) -> QuadElem {
        let re = &(&self.re * &rhs.re) + &(&self.d * &(&self.im * &rhs.im));
        let im = &(&self.re * &rhs.im) + &(&self.im * &rhs.re);
        QuadElem { re, im, d: self.d }
    }
}

impl Neg for QuadElem {
    type Output = QuadElem;
    fn neg(self) -> QuadElem {
        QuadElem {
            re: -&self.re,
            im: -&self.im,
            d: self.d,
        }
    }
}

impl FieldElement for QuadElem {
    fn zero_like(&self) -> Self {
        QuadElem::from_base(self.re.field().zero(), &self.d)
    }
    fn one_like(&self) -> Self {
        QuadElem::from_base(self.re.field().one(), &self.d)
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
    fn inverse(&self) -> Option<Self> {
        let n = self.norm().inverse()?;
        let c = self.conjugate();
        Some(QuadElem {
            re: &c.re * &n,
            im: &c.im * &n,
            d: self.d.clone(),
        })
    }
}

#[cfg(test)]
pub(crate) fn rational(n: i64, d: i64) -> Scalar {
    Scalar::Rat(BigRational::new(BigInt::from(n), BigInt::from(d)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_field_inverse_roundtrip() {
        let f = Field::prime(13).unwrap();
        for a in f.elements().unwrap().skip(1) {
            let b = f.from_i64(7);
            assert_eq!(&(&a * &b) * &a.inverse().unwrap(), b);
        }
    }

    #[test]
    fn rationals_stay_reduced() {
        let a = rational(6, -4);
        assert_eq!(a, rational(-3, 2));
        assert_eq!(a.as_rational().unwrap().denom(), &BigInt::from(2));
    }

    #[test]
    fn field_parsing() {
        assert_eq!("rational".parse::<Field>().unwrap(), Field::Rational);
        assert_eq!("fp:13".parse::<Field>().unwrap(), Field::Prime(13));
        assert_eq!("fp 7".parse::<Field>().unwrap(), Field::Prime(7));
        assert!("fp:12".parse::<Field>().is_err());
        assert!("reals".parse::<Field>().is_err());
    }

    #[test]
    fn square_roots() {
        assert_eq!(rational(9, 4).sqrt(), Some(rational(3, 2)));
        assert_eq!(rational(2, 1).sqrt(), None);
        assert_eq!(rational(-1, 1).sqrt(), None);
        let f = Field::Prime(13);
        for a in f.elements().unwrap() {
            if let Some(r) = a.sqrt() {
                assert_eq!(&r * &r, a);
            }
        }
        // -1 is a square mod 13 but not mod 7.
        assert!(f.from_i64(-1).is_square());
        assert!(!Field::Prime(7).from_i64(-1).is_square());
    }

    #[test]
    fn reduction_rejects_bad_denominator() {
        let half = rational(1, 2);
        assert!(half.reduce(Field::Prime(2)).is_err());
        assert_eq!(half.reduce(Field::Prime(7)).unwrap(), Field::Prime(7).from_i64(4));
    }

    #[test]
    fn quadratic_extension_is_a_field() {
        let f = Field::Prime(7);
        let d = f.from_i64(-1);
        let i = QuadElem::adjoin(&d).unwrap();
        assert_eq!(i.clone() * i.clone(), QuadElem::from_base(f.from_i64(-1), &d));
        let x = QuadElem {
            re: f.from_i64(3),
            im: f.from_i64(5),
            d: d.clone(),
        };
        let y = x.inverse().unwrap();
        assert!((x * y - i.one_like()).is_zero());
        assert!(QuadElem::adjoin(&f.from_i64(2)).is_err());
    }
}
