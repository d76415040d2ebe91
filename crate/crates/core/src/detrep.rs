//! Symmetric 4×4 determinantal representations
//!
//! ```text
//!     | l11 l12 l13 q1 |
//! M = | l12 l22 l23 q2 |      l: linear, q: quadratic, f: cubic in x1, x2, x3
//!     | l13 l23 l33 q3 |
//!     | q1  q2  q3  f  |
//! ```
//!
//! and what they determine: the sextic `det M`, the cubic `det G` of the
//! upper-left 3×3 block, the fourfold `F = Σ l_ij u_i u_j + 2 Σ q_k u_k + f`
//! containing the plane `P = {x = 0}`, and the Gram matrix of the residual
//! quadric in each fiber of the projection from `P`.

use thiserror::Error;

use crate::algebra::resultant::bareiss_det;
use crate::algebra::{
    AlgebraError, Field, Matrix, MultiPoly, ProjPoint, ScalarMatrix, VarSet,
};

/// Required homogeneous degree of entry `(i, j)` (0-based).
pub fn expected_degree(i: usize, j: usize) -> u32 {
    match (i == 3) as u32 + (j == 3) as u32 {
        0 => 1,
        1 => 2,
        _ => 3,
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetRepError {
    #[error("matrix must be 4x4, got {rows} rows")]
    Shape { rows: usize },
    #[error("matrix is not symmetric: entry ({i},{j}) = {a} but entry ({j},{i}) = {b}")]
    Asymmetric { i: usize, j: usize, a: String, b: String },
    #[error("entry ({i},{j}) must be homogeneous of degree {expected} (linear/quadratic/cubic profile), got {found}")]
    WrongDegree {
        i: usize,
        j: usize,
        expected: u32,
        found: String,
    },
    #[error("determinant vanishes identically: the matrix defines no plane sextic")]
    ZeroDeterminant,
    #[error("entries must use x1, x2, x3 over one field")]
    Mixed,
    #[error("fiber Gram matrix at {point} has rank {rank} <= 1, impossible for a determinantal representation of a reduced sextic")]
    RankTooLow { point: String, rank: usize },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}

/// A validated representation. Entry indices are 0-based here and 1-based in
/// every message and file.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymDetRep {
    field: Field,
    entries: [[MultiPoly; 4]; 4],
}

/// Equations derived from a representation.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DerivedEquations {
    pub sextic: MultiPoly,
    pub d_cubic: MultiPoly,
    pub fourfold: MultiPoly,
}

impl SymDetRep {
    pub fn validate(rows: Vec<Vec<MultiPoly>>) -> Result<SymDetRep, DetRepError> {
        if rows.len() != 4 || rows.iter().any(|r| r.len() != 4) {
            return Err(DetRepError::Shape { rows: rows.len() });
        }
        let field = rows[0][0].field();
        if rows
            .iter()
            .flatten()
            .any(|e| e.field() != field || e.vars() != VarSet::Plane)
        {
            return Err(DetRepError::Mixed);
        }
        for i in 0..4 {
            for j in i + 1..4 {
                if rows[i][j] != rows[j][i] {
                    return Err(DetRepError::Asymmetric {
                        i: i + 1,
                        j: j + 1,
                        a: rows[i][j].to_string(),
                        b: rows[j][i].to_string(),
                    });
                }
            }
        }
        for (i, row) in rows.iter().enumerate() {
            for (j, e) in row.iter().enumerate() {
                let d = expected_degree(i, j);
                if !e.is_homogeneous_of(d) {
                    let found = match e.degree() {
                        Some(k) if e.is_homogeneous() => format!("degree {k} ({e})"),
                        _ => format!("a non-homogeneous polynomial ({e})"),
                    };
                    return Err(DetRepError::WrongDegree {
                        i: i + 1,
                        j: j + 1,
                        expected: d,
                        found,
                    });
                }
            }
        }
        let entries: [[MultiPoly; 4]; 4] = rows
            .into_iter()
            .map(|r| <[MultiPoly; 4]>::try_from(r).unwrap())
            .collect::<Vec<_>>()
            .try_into()
            .unwrap();
        let rep = SymDetRep { field, entries };
        if rep.sextic().is_zero() {
            return Err(DetRepError::ZeroDeterminant);
        }
        Ok(rep)
    }

    /// Diagonal representation `diag(a, b, c, d)`.
    pub fn diagonal(diag: [MultiPoly; 4]) -> Result<SymDetRep, DetRepError> {
        let field = diag[0].field();
        let zero = MultiPoly::zero(VarSet::Plane, field);
        let rows = (0..4)
            .map(|i| {
                (0..4)
                    .map(|j| if i == j { diag[i].clone() } else { zero.clone() })
                    .collect()
            })
            .collect();
        SymDetRep::validate(rows)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i][j]
    }

    pub fn rows(&self) -> Vec<Vec<MultiPoly>> {
        self.entries.iter().map(|r| r.to_vec()).collect()
    }

    /// Coefficient reduction mod `q`, revalidated.
    pub fn reduce(&self, target: Field) -> Result<SymDetRep, DetRepError> {
        let rows = self
            .entries
            .iter()
            .map(|r| r.iter().map(|e| e.reduce(target)).collect::<Result<Vec<_>, _>>())
            .collect::<Result<Vec<_>, _>>()?;
        SymDetRep::validate(rows)
    }

    /// `det M`, the discriminant sextic.
    pub fn sextic(&self) -> MultiPoly {
        bareiss_det(self.rows())
    }

    /// `det G` for the linear block `G`, the cubic `D`.
    pub fn d_cubic(&self) -> MultiPoly {
        bareiss_det(self.entries[..3].iter().map(|r| r[..3].to_vec()).collect())
    }

    /// `F = Σ_{i,j} l_ij u_i u_j + 2 Σ_k q_k u_k + f` on `P^5`.
    pub fn fourfold(&self) -> MultiPoly {
        let lift = |p: &MultiPoly| p.with_vars(VarSet::Ambient).expect("plane entry");
        let u = |k: usize| MultiPoly::var(3 + k, VarSet::Ambient, self.field);
        let two = MultiPoly::constant(self.field.from_i64(2), VarSet::Ambient);
        let mut f = lift(&self.entries[3][3]);
        for i in 0..3 {
            for j in 0..3 {
                f = &f + &(&lift(&self.entries[i][j]) * &(&u(i) * &u(j)));
            }
            f = &f + &(&two * &(&lift(&self.entries[i][3]) * &u(i)));
        }
        f
    }

    pub fn derived(&self) -> DerivedEquations {
        DerivedEquations {
            sextic: self.sextic(),
            d_cubic: self.d_cubic(),
            fourfold: self.fourfold(),
        }
    }

    /// `M(p)`, without the rank check.
    pub fn evaluate(&self, p: &ProjPoint) -> ScalarMatrix {
        Matrix::from_fn(4, 4, |i, j| {
            self.entries[i][j].eval(p.coords()).expect("plane point")
        })
    }

    /// Gram matrix of the fiber quadric `Q_p` in coordinates `(u1, u2, u3, t)`.
    pub fn fiber_gram(&self, p: &ProjPoint) -> Result<ScalarMatrix, DetRepError> {
        let m = self.evaluate(p);
        let rank = m.rank();
        if rank <= 1 {
            return Err(DetRepError::RankTooLow {
                point: p.to_string(),
                rank,
            });
        }
        Ok(m)
    }

    /// `G(p)`: Gram matrix of the conic `Q_p ∩ P` in coordinates `(u1, u2, u3)`.
    pub fn conic_gram(&self, p: &ProjPoint) -> ScalarMatrix {
        Matrix::from_fn(3, 3, |i, j| {
            self.entries[i][j].eval(p.coords()).expect("plane point")
        })
    }

    /// `G(e_k)`: the coefficient matrix of `x_k` in the linear block. The
    /// three span the net of conics `W`.
    pub fn net_generator(&self, k: usize) -> ScalarMatrix {
        let mut e = vec![self.field.zero(); 3];
        e[k] = self.field.one();
        Matrix::from_fn(3, 3, |i, j| self.entries[i][j].eval(&e).unwrap())
    }

    /// The three conics `yᵀ G(e_k) y` written in the letters `x1, x2, x3`
    /// standing for `u1, u2, u3`.
    pub fn net_conics(&self) -> [MultiPoly; 3] {
        let y = |i| MultiPoly::var(i, VarSet::Plane, self.field);
        std::array::from_fn(|k| {
            let g = self.net_generator(k);
            let mut c = MultiPoly::zero(VarSet::Plane, self.field);
            for i in 0..3 {
                for j in 0..3 {
                    c = &c + &(&y(i) * &y(j)).scale(g.get(i, j));
                }
            }
            c
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::{parse_poly, Ambient};

    fn p(s: &str) -> MultiPoly {
        parse_poly(s, VarSet::Plane, Field::Rational).unwrap()
    }

    fn amb(s: &str) -> MultiPoly {
        parse_poly(s, VarSet::Ambient, Field::Rational).unwrap()
    }

    fn identity_family() -> SymDetRep {
        SymDetRep::diagonal([p("x1"), p("x2"), p("x3"), p("-x1^3 - x2^3 - x3^3")]).unwrap()
    }

    fn pt(c: &[i64]) -> ProjPoint {
        ProjPoint::from_ints(c, Ambient::Plane, Field::Rational).unwrap()
    }

    #[test]
    fn diagonal_family_equations() {
        let d = identity_family().derived();
        assert_eq!(d.sextic, p("-x1*x2*x3*(x1^3 + x2^3 + x3^3)"));
        assert_eq!(d.d_cubic, p("x1*x2*x3"));
        assert_eq!(
            d.fourfold,
            amb("x1*u1^2 + x2*u2^2 + x3*u3^2 - x1^3 - x2^3 - x3^3")
        );
    }

    #[test]
    fn off_diagonal_linear_block() {
        let z = p("0");
        let rep = SymDetRep::validate(vec![
            vec![z.clone(), p("x1"), p("x2"), z.clone()],
            vec![p("x1"), z.clone(), p("x3"), z.clone()],
            vec![p("x2"), p("x3"), z.clone(), z.clone()],
            vec![z.clone(), z.clone(), z.clone(), p("x1^3 + x2^3 + x3^3")],
        ])
        .unwrap();
        let d = rep.derived();
        assert_eq!(d.sextic, p("2*x1*x2*x3*(x1^3 + x2^3 + x3^3)"));
        assert_eq!(d.d_cubic, p("2*x1*x2*x3"));
        assert_eq!(
            d.fourfold,
            amb("2*x1*u1*u2 + 2*x2*u1*u3 + 2*x3*u2*u3 + x1^3 + x2^3 + x3^3")
        );
    }

    #[test]
    fn validation_errors() {
        let z = p("0");
        let mut rows = vec![vec![z.clone(); 4]; 4];
        rows[0][0] = p("x1");
        rows[1][1] = p("x2");
        rows[2][2] = p("x3");
        rows[3][3] = p("x1^3");
        rows[0][1] = p("x1");
        rows[1][0] = p("x2");
        assert!(matches!(
            SymDetRep::validate(rows.clone()),
            Err(DetRepError::Asymmetric { i: 1, j: 2, .. })
        ));
        rows[1][0] = p("x1");
        rows[3][3] = p("x1^2");
        assert!(matches!(
            SymDetRep::validate(rows.clone()),
            Err(DetRepError::WrongDegree { i: 4, j: 4, expected: 3, .. })
        ));
        assert_eq!(
            SymDetRep::diagonal([p("x1"), p("x2"), p("x3"), z]),
            Err(DetRepError::ZeroDeterminant)
        );
    }

    #[test]
    fn fiber_grams() {
        let rep = identity_family();
        let m = rep.fiber_gram(&pt(&[0, 0, 1])).unwrap();
        assert_eq!(m.rank(), 2);
        assert_eq!(m.to_string(), "[0, 0, 0, 0; 0, 0, 0, 0; 0, 0, 1, 0; 0, 0, 0, -1]");
        let m = rep.fiber_gram(&pt(&[1, 1, 1])).unwrap();
        assert_eq!(m.to_string(), "[1, 0, 0, 0; 0, 1, 0, 0; 0, 0, 1, 0; 0, 0, 0, -3]");
        assert_eq!(m.rank(), 4);
    }

    #[test]
    fn plane_lies_on_fourfold() {
        let rep = identity_family();
        let f = rep.fourfold();
        let q = Field::Rational;
        let on_p = [q.zero(), q.zero(), q.zero(), q.from_i64(3), q.from_i64(-7), q.one()];
        assert!(f.eval(&on_p).unwrap().is_zero());
    }
}
