//! Dense exact linear algebra over any [`FieldElement`], and fraction-free
//! integer determinants.

use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::field::{FieldElement, Scalar};

/// A dense `rows × cols` matrix. Must be nonempty.
#[derive(Clone, Debug, PartialEq)]
pub struct Matrix<E> {
    rows: usize,
    cols: usize,
    data: Vec<E>,
}

pub type ScalarMatrix = Matrix<Scalar>;

impl<E: FieldElement> Matrix<E> {
    pub fn from_rows(rows: Vec<Vec<E>>) -> Self {
        let r = rows.len();
        assert!(r > 0, "empty matrix");
        let c = rows[0].len();
        assert!(c > 0 && rows.iter().all(|row| row.len() == c), "ragged matrix");
        Matrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> E) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &E {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: E) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[E] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn is_symmetric(&self) -> bool {
        self.rows == self.cols
            && (0..self.rows).all(|i| (0..i).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn submatrix(&self, rows: &[usize], cols: &[usize]) -> Self {
        Matrix::from_fn(rows.len(), cols.len(), |i, j| self.get(rows[i], cols[j]).clone())
    }

    pub fn mul_vec(&self, v: &[E]) -> Vec<E> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut acc = v[0].zero_like();
                for (a, x) in self.row(i).iter().zip(v) {
                    acc = acc + a.clone() * x.clone();
                }
                acc
            })
            .collect()
    }

    /// `vᵀ·A·w`.
    pub fn bilinear(&self, v: &[E], w: &[E]) -> E {
        let aw = self.mul_vec(w);
        let mut acc = v[0].zero_like();
        for (a, b) in v.iter().zip(aw) {
            acc = acc + a.clone() * b;
        }
        acc
    }

    /// Reduced row echelon form, pivot columns and the determinant of the
    /// square part eliminated so far (meaningful only for square input).
    pub fn rref(&self) -> (Matrix<E>, Vec<usize>, E) {
        let mut m = self.clone();
        let zero = self.data[0].zero_like();
        let mut det = self.data[0].one_like();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let Some(p) = (r..m.rows).find(|&i| !m.get(i, c).is_zero()) else {
                det = zero.clone();
                continue;
            };
            if p != r {
                for j in 0..m.cols {
                    m.data.swap(p * m.cols + j, r * m.cols + j);
                }
                det = -det;
            }
            let pv = m.get(r, c).clone();
            det = det * pv.clone();
            let inv = pv.inverse().expect("nonzero pivot");
            for j in 0..m.cols {
                let v = m.get(r, j).clone() * inv.clone();
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i == r || m.get(i, c).is_zero() {
                    continue;
                }
                let factor = m.get(i, c).clone();
                for j in 0..m.cols {
                    let v = m.get(i, j).clone() - factor.clone() * m.get(r, j).clone();
                    m.set(i, j, v);
                }
            }
            pivots.push(c);
            r += 1;
        }
        if pivots.len() < m.rows.min(m.cols) {
            det = zero;
        }
        (m, pivots, det)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    pub fn det(&self) -> E {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        self.rref().2
    }

    /// Kernel basis, itself in reduced echelon form: vector `k` has a 1 in
    /// the `k`-th free column and 0 in every other free column.
    pub fn kernel(&self) -> Vec<Vec<E>> {
        let (r, pivots, _) = self.rref();
        let zero = self.data[0].zero_like();
        let one = self.data[0].one_like();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis: Vec<Vec<E>> = free
            .iter()
            .map(|&f| {
                let mut v = vec![zero.clone(); self.cols];
                v[f] = one.clone();
                for (i, &p) in pivots.iter().enumerate() {
                    v[p] = -r.get(i, f).clone();
                }
                v
            })
            .collect();
        // Order so the leading (first nonzero) positions increase.
        basis.sort_by_key(|v| v.iter().position(|x| !x.is_zero()));
        basis
    }
}

impl<E: fmt::Display> fmt::Display for Matrix<E> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.rows {
            if i > 0 {
                write!(f, "; ")?;
            }
            for j in 0..self.cols {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.data[i * self.cols + j])?;
            }
        }
        write!(f, "]")
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct KernelRankDet<E> {
    pub rank: usize,
    pub det: E,
    pub kernel: Vec<Vec<E>>,
}

pub fn kernel_rank_det<E: FieldElement>(m: &Matrix<E>) -> KernelRankDet<E> {
    KernelRankDet {
        rank: m.rank(),
        det: m.det(),
        kernel: m.kernel(),
    }
}

/// Determinant of an integer matrix by Bareiss fraction-free elimination.
pub fn int_det(rows: &[Vec<BigInt>]) -> BigInt {
    let n = rows.len();
    let mut a: Vec<Vec<BigInt>> = rows.to_vec();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&i| !a[i][k].is_zero()) {
                Some(p) => {
                    a.swap(k, p);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = (&a[i][j] * &a[k][k] - &a[i][k] * &a[k][j]) / &prev;
                a[i][j] = v;
            }
            a[i][k] = BigInt::zero();
        }
        prev = a[k][k].clone();
    }
    if n == 0 {
        return BigInt::one();
    }
    sign * &a[n - 1][n - 1]
}

/// Rank of an integer matrix (computed over the rationals).
pub fn int_rank(rows: &[Vec<BigInt>]) -> usize {
    let m = Matrix::from_rows(
        rows.iter()
            .map(|r| {
                r.iter()
                    .map(|x| super::field::Field::Rational.from_bigint(x))
                    .collect()
            })
            .collect(),
    );
    m.rank()
}
