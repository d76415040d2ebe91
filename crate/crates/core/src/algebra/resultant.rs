//! Sylvester resultants of multivariate polynomials, and the resultant of
//! three ternary quadrics.

use super::field::Scalar;
use super::linalg::Matrix;
use super::poly::{Monomial, MultiPoly};
use super::AlgebraError;

/// `res(f, g)` with respect to variable `var`, as the determinant of the
/// Sylvester matrix (rows of `f` first). Vanishes identically exactly when
/// `f` and `g` share a factor involving `var`.
pub fn resultant(f: &MultiPoly, g: &MultiPoly, var: usize) -> Result<MultiPoly, AlgebraError> {
    let name = f.vars().names()[var];
    for (label, p) in [("first", f), ("second", g)] {
        if p.is_zero() {
            return Err(AlgebraError::DegenerateResultant(format!("{label} polynomial is zero")));
        }
        if p.degree_in(var) == 0 {
            return Err(AlgebraError::DegenerateResultant(format!(
                "{label} polynomial does not involve {name}"
            )));
        }
    }
    let a = f.coefficients_in(var);
    let b = g.coefficients_in(var);
    let (m, n) = (a.len() - 1, b.len() - 1);
    let size = m + n;
    let zero = MultiPoly::zero(f.vars(), f.field());
    let mut rows = vec![vec![zero.clone(); size]; size];
    for i in 0..n {
        for (k, c) in a.iter().rev().enumerate() {
            rows[i][i + k] = c.clone();
        }
    }
    for i in 0..m {
        for (k, c) in b.iter().rev().enumerate() {
            rows[n + i][i + k] = c.clone();
        }
    }
    Ok(bareiss_det(rows))
}

/// Fraction-free determinant over a polynomial ring.
pub fn bareiss_det(mut a: Vec<Vec<MultiPoly>>) -> MultiPoly {
    let n = a.len();
    let vars = a[0][0].vars();
    let field = a[0][0].field();
    let mut negate = false;
    let mut prev = MultiPoly::constant(field.one(), vars);
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    negate = !negate;
                }
                None => return MultiPoly::zero(vars, field),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let num = &(&a[i][j] * &a[k][k]) - &(&a[i][k] * &a[k][j]);
                a[i][j] = num.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = a[k][k].clone();
    }
    let det = a[n - 1][n - 1].clone();
    if negate {
        -det
    } else {
        det
    }
}

/// Resultant of three quadratic forms in three variables, up to the
/// constant factor `-1/512`: the 6×6 determinant of the coefficients of
/// `g1, g2, g3` and of the partials of their Jacobian determinant. Zero
/// exactly when the three conics share a point over the algebraic closure
/// (characteristic 0 or large enough).
pub fn ternary_quadrics_resultant(g: [&MultiPoly; 3]) -> Scalar {
    let field = g[0].field();
    let jac = bareiss_det(
        g.iter()
            .map(|gi| (0..3).map(|j| gi.diff(j)).collect())
            .collect(),
    );
    let monomials: Vec<Monomial> = (0..3)
        .flat_map(|i| (i..3).map(move |j| Monomial::var(i).mul(&Monomial::var(j))))
        .collect();
    let row = |p: &MultiPoly| -> Vec<Scalar> { monomials.iter().map(|m| p.coefficient(m)).collect() };
    let mut rows: Vec<Vec<Scalar>> = g.iter().map(|gi| row(gi)).collect();
    rows.extend((0..3).map(|j| row(&jac.diff(j))));
    if rows.iter().all(|r| r.iter().all(Scalar::is_zero)) {
        return field.zero();
    }
    Matrix::from_rows(rows).det()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::Field;
    use crate::algebra::parse_expression;
    use crate::algebra::poly::VarSet;

    fn p(s: &str) -> MultiPoly {
        parse_expression(s, VarSet::Plane, Field::Rational).unwrap()
    }

    #[test]
    fn common_factor_gives_zero() {
        assert!(resultant(&p("x1^2 - x2^2"), &p("x1 - x2"), 0).unwrap().is_zero());
    }

    #[test]
    fn small_sylvester_determinants() {
        assert_eq!(resultant(&p("x1^2 + x2^2"), &p("x1 - x2"), 0).unwrap(), p("2*x2^2"));
        assert_eq!(resultant(&p("x1*x2"), &p("x1 + x2"), 0).unwrap(), p("x2^2"));
        assert_eq!(resultant(&p("x1 + x2"), &p("x1*x2"), 0).unwrap(), p("-x2^2"));
    }

    #[test]
    fn degenerate_inputs_are_signalled() {
        assert!(matches!(
            resultant(&p("x2^2"), &p("x1 - x2"), 0),
            Err(AlgebraError::DegenerateResultant(_))
        ));
        assert!(resultant(&p("0"), &p("x1"), 0).is_err());
    }

    #[test]
    fn bivariate_elimination() {
        // Circle and line meet where x2^2 = 1/2.
        let r = resultant(&p("x1^2 + x2^2 - 1"), &p("x1 - x2"), 0).unwrap();
        assert_eq!(r, p("2*x2^2 - 1"));
    }

    #[test]
    fn quadrics_resultant_detects_common_points() {
        let fermat = p("x1^3 + x2^3 + x3^3");
        let g = fermat.gradient();
        assert!(!ternary_quadrics_resultant([&g[0], &g[1], &g[2]]).is_zero());
        let nodal = p("x2^2*x3 - x1^3 - x1^2*x3");
        let g = nodal.gradient();
        assert!(ternary_quadrics_resultant([&g[0], &g[1], &g[2]]).is_zero());
        // Three conics through (1:2:3).
        let a = p("x1^2 - x2*x3 + 5/9*x3^2");
        let b = p("x1*x2 + x2^2 - 2/3*x3^2");
        let c = p("3*x1*x3 - x2^2 - 5/9*x3^2");
        assert!(ternary_quadrics_resultant([&a, &b, &c]).is_zero());
        let d = p("3*x1*x3 - x2^2");
        assert!(!ternary_quadrics_resultant([&a, &b, &d]).is_zero());
    }
}
