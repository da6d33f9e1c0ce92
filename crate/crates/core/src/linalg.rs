//! Small dense exact linear algebra: square matrices, vectors, and a
//! row-reduction based solver for affine systems.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Vector {
    entries: Vec<Scalar>,
}

impl Vector {
    pub fn new(entries: Vec<Scalar>) -> Self {
        Vector { entries }
    }

    pub fn zeros(dim: usize) -> Self {
        Vector {
            entries: vec![Scalar::zero(); dim],
        }
    }

    /// The `i`-th standard basis vector.
    pub fn unit(dim: usize, i: usize) -> Self {
        let mut v = Vector::zeros(dim);
        v.entries[i] = Scalar::one();
        v
    }

    pub fn from_ints(xs: &[i64]) -> Self {
        Vector::new(xs.iter().map(|&x| Scalar::from_int(x)).collect())
    }

    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn into_entries(self) -> Vec<Scalar> {
        self.entries
    }

    pub fn get(&self, i: usize) -> &Scalar {
        &self.entries[i]
    }

    pub fn set(&mut self, i: usize, value: Scalar) {
        self.entries[i] = value;
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn dot(&self, other: &Vector) -> Scalar {
        self.entries
            .iter()
            .zip(&other.entries)
            .map(|(a, b)| a * b)
            .sum()
    }

    pub fn scale(&self, s: &Scalar) -> Vector {
        Vector::new(self.entries.iter().map(|x| x * s).collect())
    }

    /// Largest absolute entry (zero for the empty vector).
    pub fn max_abs(&self) -> Scalar {
        self.entries
            .iter()
            .map(Scalar::abs)
            .max()
            .unwrap_or_else(Scalar::zero)
    }
}

impl fmt::Debug for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(&self.entries).finish()
    }
}

impl fmt::Display for Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, x) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{x}")?;
        }
        write!(f, ")")
    }
}

impl Add for &Vector {
    type Output = Vector;
    fn add(self, rhs: &Vector) -> Vector {
        Vector::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        )
    }
}

impl Sub for &Vector {
    type Output = Vector;
    fn sub(self, rhs: &Vector) -> Vector {
        Vector::new(
            self.entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        )
    }
}

impl Neg for &Vector {
    type Output = Vector;
    fn neg(self) -> Vector {
        Vector::new(self.entries.iter().map(|x| -x).collect())
    }
}

/// A square `dim x dim` matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    dim: usize,
    entries: Vec<Scalar>,
}

impl Matrix {
    pub fn zeros(dim: usize) -> Self {
        Matrix {
            dim,
            entries: vec![Scalar::zero(); dim * dim],
        }
    }

    pub fn identity(dim: usize) -> Self {
        let mut m = Matrix::zeros(dim);
        for i in 0..dim {
            m.set(i, i, Scalar::one());
        }
        m
    }

    pub fn from_fn(dim: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut entries = Vec::with_capacity(dim * dim);
        for i in 0..dim {
            for j in 0..dim {
                entries.push(f(i, j));
            }
        }
        Matrix { dim, entries }
    }

    pub fn from_rows(rows: Vec<Vec<Scalar>>) -> Result<Self> {
        let dim = rows.len();
        let mut entries = Vec::with_capacity(dim * dim);
        for row in rows {
            if row.len() != dim {
                return Err(Error::DimensionMismatch {
                    expected: dim,
                    found: row.len(),
                });
            }
            entries.extend(row);
        }
        Ok(Matrix { dim, entries })
    }

    pub fn from_int_rows(rows: &[&[i64]]) -> Result<Self> {
        Matrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&x| Scalar::from_int(x)).collect())
                .collect(),
        )
    }

    /// Builds a matrix whose rows are the given vectors.
    pub fn from_row_vectors(rows: &[Vector]) -> Result<Self> {
        Matrix::from_rows(rows.iter().map(|v| v.entries().to_vec()).collect())
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize) -> &Scalar {
        &self.entries[i * self.dim + j]
    }

    pub fn set(&mut self, i: usize, j: usize, value: Scalar) {
        self.entries[i * self.dim + j] = value;
    }

    pub fn row(&self, i: usize) -> Vector {
        Vector::new(self.entries[i * self.dim..(i + 1) * self.dim].to_vec())
    }

    pub fn col(&self, j: usize) -> Vector {
        Vector::new((0..self.dim).map(|i| self.get(i, j).clone()).collect())
    }

    pub fn rows(&self) -> Vec<Vec<Scalar>> {
        (0..self.dim).map(|i| self.row(i).into_entries()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn is_identity(&self) -> bool {
        *self == Matrix::identity(self.dim)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.dim, |i, j| self.get(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self.entries.iter().map(|x| x * s).collect(),
        }
    }

    pub fn trace(&self) -> Scalar {
        (0..self.dim).map(|i| self.get(i, i).clone()).sum()
    }

    /// `M v` with `v` a column.
    pub fn mul_vec(&self, v: &Vector) -> Vector {
        Vector::new(
            (0..self.dim)
                .map(|i| (0..self.dim).map(|j| self.get(i, j) * v.get(j)).sum())
                .collect(),
        )
    }

    /// Largest absolute entry.
    pub fn max_abs(&self) -> Scalar {
        self.entries
            .iter()
            .map(Scalar::abs)
            .max()
            .unwrap_or_else(Scalar::zero)
    }

    pub fn determinant(&self) -> Scalar {
        match self.dim {
            0 => Scalar::one(),
            1 => self.get(0, 0).clone(),
            2 => self.get(0, 0) * self.get(1, 1) - self.get(0, 1) * self.get(1, 0),
            3 => {
                let m = |i, j| self.get(i, j);
                m(0, 0) * (m(1, 1) * m(2, 2) - m(1, 2) * m(2, 1))
                    - m(0, 1) * (m(1, 0) * m(2, 2) - m(1, 2) * m(2, 0))
                    + m(0, 2) * (m(1, 0) * m(2, 1) - m(1, 1) * m(2, 0))
            }
            _ => self.determinant_elimination(),
        }
    }

    fn determinant_elimination(&self) -> Scalar {
        let n = self.dim;
        let mut a = self.rows();
        let mut det = Scalar::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&r| !a[r][c].is_zero()) else {
                return Scalar::zero();
            };
            if p != c {
                a.swap(p, c);
                det = -det;
            }
            let pivot = a[c][c].clone();
            det = det * &pivot;
            for r in c + 1..n {
                if a[r][c].is_zero() {
                    continue;
                }
                let factor = &a[r][c] / &pivot;
                for k in c..n {
                    let v = &a[c][k] * &factor;
                    a[r][k] -= v;
                }
            }
        }
        det
    }

    pub fn is_invertible(&self) -> bool {
        !self.determinant().is_zero()
    }

    /// Exact inverse by Gauss-Jordan elimination.
    pub fn inverse(&self) -> Result<Matrix> {
        let n = self.dim;
        let mut a = self.rows();
        let mut inv = Matrix::identity(n).rows();
        for c in 0..n {
            let p = (c..n)
                .find(|&r| !a[r][c].is_zero())
                .ok_or(Error::SingularMatrix)?;
            a.swap(p, c);
            inv.swap(p, c);
            let pivot = a[c][c].recip().ok_or(Error::SingularMatrix)?;
            for k in 0..n {
                a[c][k] = &a[c][k] * &pivot;
                inv[c][k] = &inv[c][k] * &pivot;
            }
            for r in 0..n {
                if r == c || a[r][c].is_zero() {
                    continue;
                }
                let factor = a[r][c].clone();
                for k in 0..n {
                    let x = &a[c][k] * &factor;
                    a[r][k] -= x;
                    let y = &inv[c][k] * &factor;
                    inv[r][k] -= y;
                }
            }
        }
        Matrix::from_rows(inv)
    }

    /// Inverse transpose, `A^{-t}`.
    pub fn inverse_transpose(&self) -> Result<Matrix> {
        Ok(self.inverse()?.transpose())
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.rows()).finish()
    }
}

impl fmt::Display for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for i in 0..self.dim {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "[")?;
            for j in 0..self.dim {
                if j > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", self.get(i, j))?;
            }
            write!(f, "]")?;
        }
        write!(f, "]")
    }
}

impl Mul for &Matrix {
    type Output = Matrix;
    fn mul(self, rhs: &Matrix) -> Matrix {
        let n = self.dim;
        Matrix::from_fn(n, |i, j| (0..n).map(|k| self.get(i, k) * rhs.get(k, j)).sum())
    }
}

impl Add for &Matrix {
    type Output = Matrix;
    fn add(self, rhs: &Matrix) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }
}

impl Sub for &Matrix {
    type Output = Matrix;
    fn sub(self, rhs: &Matrix) -> Matrix {
        Matrix {
            dim: self.dim,
            entries: self
                .entries
                .iter()
                .zip(&rhs.entries)
                .map(|(a, b)| a - b)
                .collect(),
        }
    }
}

/// Rank of a list of equal-length row vectors.
pub fn rank(rows: &[Vec<Scalar>]) -> usize {
    let mut a = rows.to_vec();
    row_reduce(&mut a).len()
}

/// Reduces `a` to reduced row echelon form in place and returns the pivot
/// columns.
pub fn row_reduce(a: &mut Vec<Vec<Scalar>>) -> Vec<usize> {
    let ncols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == a.len() {
            break;
        }
        let Some(p) = (r..a.len()).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(p, r);
        let inv = a[r][c].recip().expect("pivot is nonzero");
        for k in c..ncols {
            a[r][k] = &a[r][k] * &inv;
        }
        for i in 0..a.len() {
            if i == r || a[i][c].is_zero() {
                continue;
            }
            let factor = a[i][c].clone();
            for k in c..ncols {
                let x = &a[r][k] * &factor;
                a[i][k] -= x;
            }
        }
        pivots.push(c);
        r += 1;
    }
    a.truncate(r.max(0));
    // Rows below the last pivot are zero after elimination; keep only the
    // pivot rows so callers can read the rank off the length.
    pivots
}

/// Solution set `{ particular + sum_k c_k kernel[k] }` of an affine system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AffineSolution {
    pub particular: Vec<Scalar>,
    pub kernel: Vec<Vec<Scalar>>,
    /// Unknown indices that are free parameters, one per kernel vector.
    pub free: Vec<usize>,
}

/// Solves `M x = b` exactly. Returns `None` when the system is inconsistent.
pub fn solve_affine(m: &[Vec<Scalar>], b: &[Scalar], nvars: usize) -> Option<AffineSolution> {
    let mut aug: Vec<Vec<Scalar>> = m
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let pivots = row_reduce(&mut aug);
    if pivots.contains(&nvars) {
        return None;
    }
    let free: Vec<usize> = (0..nvars).filter(|c| !pivots.contains(c)).collect();
    let mut particular = vec![Scalar::zero(); nvars];
    for (r, &c) in pivots.iter().enumerate() {
        particular[c] = aug[r][nvars].clone();
    }
    let kernel = free
        .iter()
        .map(|&f| {
            let mut v = vec![Scalar::zero(); nvars];
            v[f] = Scalar::one();
            for (r, &c) in pivots.iter().enumerate() {
                v[c] = -&aug[r][f];
            }
            v
        })
        .collect();
    Some(AffineSolution {
        particular,
        kernel,
        free,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{int, q};

    #[test]
    fn determinant_and_inverse_3x3() {
        let a = Matrix::from_int_rows(&[&[1, 1, 0], &[0, 2, 1], &[0, 1, 2]]).unwrap();
        assert_eq!(a.determinant(), int(3));
        let inv = a.inverse().unwrap();
        assert!((&a * &inv).is_identity());
        assert_eq!(a.determinant_elimination(), int(3));
    }

    #[test]
    fn singular_inverse_is_an_error() {
        let a = Matrix::from_int_rows(&[&[1, 2], &[2, 4]]).unwrap();
        assert_eq!(a.determinant(), int(0));
        assert_eq!(a.inverse(), Err(Error::SingularMatrix));
    }

    #[test]
    fn ragged_rows_rejected() {
        assert!(Matrix::from_rows(vec![vec![int(1)], vec![int(1), int(2)]]).is_err());
    }

    #[test]
    fn affine_solution_with_kernel() {
        // x + y = 1, 2x + 2y = 2
        let m = vec![vec![int(1), int(1)], vec![int(2), int(2)]];
        let sol = solve_affine(&m, &[int(1), int(2)], 2).unwrap();
        assert_eq!(sol.free, vec![1]);
        assert_eq!(sol.particular, vec![int(1), int(0)]);
        assert_eq!(sol.kernel, vec![vec![int(-1), int(1)]]);
        assert!(solve_affine(&m, &[int(1), int(3)], 2).is_none());
    }

    #[test]
    fn rank_counts_independent_rows() {
        let rows = vec![
            vec![int(1), q(1, 2), int(0)],
            vec![int(2), int(1), int(0)],
            vec![int(0), int(0), int(5)],
        ];
        assert_eq!(rank(&rows), 2);
    }
}
