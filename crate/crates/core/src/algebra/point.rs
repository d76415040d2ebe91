//! Projective points in canonical form: the first nonzero coordinate is 1.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};

use super::field::{Field, Scalar};
use super::AlgebraError;

/// Which projective space a point lives in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Ambient {
    /// The plane `Π(C)` with coordinates `x1, x2, x3`.
    Plane,
    /// `P^5` with coordinates `x1, x2, x3, u1, u2, u3`.
    P5,
}

impl Ambient {
    pub fn dim(self) -> usize {
        match self {
            Ambient::Plane => 3,
            Ambient::P5 => 6,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ProjPoint {
    ambient: Ambient,
    coords: Vec<Scalar>,
}

impl ProjPoint {
    pub fn new(coords: Vec<Scalar>, ambient: Ambient) -> Result<Self, AlgebraError> {
        if coords.len() != ambient.dim() {
            return Err(AlgebraError::DimensionMismatch {
                expected: ambient.dim(),
                got: coords.len(),
            });
        }
        let lead = coords
            .iter()
            .find(|c| !c.is_zero())
            .ok_or(AlgebraError::ZeroPoint)?
            .inverse()
            .expect("nonzero");
        let coords = coords.iter().map(|c| c * &lead).collect();
        Ok(ProjPoint { ambient, coords })
    }

    pub fn from_ints(coords: &[i64], ambient: Ambient, field: Field) -> Result<Self, AlgebraError> {
        ProjPoint::new(coords.iter().map(|&c| field.from_i64(c)).collect(), ambient)
    }

    /// Parses `(a:b:c)` with integer or `p/q` entries.
    pub fn parse(text: &str, ambient: Ambient, field: Field) -> Result<Self, AlgebraError> {
        let inner = text
            .trim()
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| AlgebraError::Syntax {
                pos: 1,
                msg: format!("point must look like (a:b:c), got '{text}'"),
            })?;
        let mut coords = Vec::new();
        for part in inner.split(':') {
            let r: BigRational = part.trim().parse().map_err(|_| AlgebraError::Syntax {
                pos: 1,
                msg: format!("bad coordinate '{}'", part.trim()),
            })?;
            coords.push(field.from_rational(&r)?);
        }
        ProjPoint::new(coords, ambient)
    }

    pub fn ambient(&self) -> Ambient {
        self.ambient
    }

    pub fn coords(&self) -> &[Scalar] {
        &self.coords
    }

    pub fn field(&self) -> Field {
        self.coords[0].field()
    }

    /// Reduction mod `q` of a rational point, through its primitive integer
    /// representative.
    pub fn reduce(&self, target: Field) -> Result<ProjPoint, AlgebraError> {
        if self.field() == target {
            return Ok(self.clone());
        }
        let ints = self.primitive_integers().ok_or(AlgebraError::FieldMismatch {
            left: self.field(),
            right: target,
        })?;
        ProjPoint::new(ints.iter().map(|n| target.from_bigint(n)).collect(), self.ambient)
    }

    /// Coprime integer coordinates (rational points only).
    pub fn primitive_integers(&self) -> Option<Vec<BigInt>> {
        let rats: Vec<&BigRational> = self
            .coords
            .iter()
            .map(|c| c.as_rational())
            .collect::<Option<_>>()?;
        let lcm = rats.iter().fold(BigInt::one(), |acc, r| acc.lcm(r.denom()));
        let ints: Vec<BigInt> = rats
            .iter()
            .map(|r| r.numer() * (&lcm / r.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        Some(ints.into_iter().map(|n| n / &g).collect())
    }
}

impl fmt::Display for ProjPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.coords.iter().enumerate() {
            if i > 0 {
                write!(f, ":")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_form_scales_first_nonzero() {
        let p = ProjPoint::from_ints(&[0, -2, 4], Ambient::Plane, Field::Rational).unwrap();
        assert_eq!(p.to_string(), "(0:1:-2)");
        let q = ProjPoint::from_ints(&[-5, 1, 1], Ambient::Plane, Field::Rational).unwrap();
        assert_eq!(q.to_string(), "(1:-1/5:-1/5)");
        let r = ProjPoint::from_ints(&[2, 1, 1], Ambient::Plane, Field::Prime(7)).unwrap();
        assert_eq!(r.to_string(), "(1:4:4)");
    }

    #[test]
    fn parse_and_reduce() {
        let p = ProjPoint::parse("(1:-1/5:-1/5)", Ambient::Plane, Field::Rational).unwrap();
        let q = ProjPoint::from_ints(&[-5, 1, 1], Ambient::Plane, Field::Rational).unwrap();
        assert_eq!(p, q);
        let r = p.reduce(Field::Prime(7)).unwrap();
        assert_eq!(r, ProjPoint::from_ints(&[2, 1, 1], Ambient::Plane, Field::Prime(7)).unwrap());
        let s = p.reduce(Field::Prime(5)).unwrap();
        assert_eq!(s.to_string(), "(0:1:1)");
    }

    #[test]
    fn rejects_zero_and_wrong_length() {
        assert_eq!(
            ProjPoint::from_ints(&[0, 0, 0], Ambient::Plane, Field::Rational),
            Err(AlgebraError::ZeroPoint)
        );
        assert!(ProjPoint::from_ints(&[1, 0], Ambient::Plane, Field::Rational).is_err());
    }
}
