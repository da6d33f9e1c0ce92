//! Structure tensors and their adjoint matrices.
//!
//! A [`StructureTensor`] holds `f_ij^k` for an algebra `g` with basis
//! `X_1..X_d`, meaning `[X_i, X_j] = f_ij^k X_k`. The same type holds the
//! dual constants `f~^ij_k` when used in the dual role.
//!
//! Adjoint matrices carry a minus sign: `(X_i)_j^k = -f_ij^k` and
//! `(Y^k)_ij = -f_ij^k`. All matrix-form identities in this crate assume it.

use std::fmt;

use crate::error::{Error, Result};
use crate::kernels::{self, idx3};
use crate::linalg::Matrix;
use crate::scalar::Scalar;

/// Antisymmetric `d x d x d` array of exact rationals.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct StructureTensor {
    dim: usize,
    entries: Vec<Scalar>,
}

impl StructureTensor {
    pub fn zero(dim: usize) -> Self {
        StructureTensor {
            dim,
            entries: vec![Scalar::zero(); dim * dim * dim],
        }
    }

    /// Builds a tensor from arbitrary raw entries by antisymmetrizing in the
    /// first two indices: `(f_ij^k - f_ji^k) / 2`.
    pub fn from_raw(dim: usize, raw: Vec<Scalar>) -> Result<Self> {
        if raw.len() != dim * dim * dim {
            return Err(Error::DimensionMismatch {
                expected: dim * dim * dim,
                found: raw.len(),
            });
        }
        let half = crate::scalar::q(1, 2);
        let mut entries = vec![Scalar::zero(); raw.len()];
        for i in 0..dim {
            for j in 0..dim {
                for k in 0..dim {
                    entries[idx3(dim, i, j, k)] =
                        (&raw[idx3(dim, i, j, k)] - &raw[idx3(dim, j, i, k)]) * &half;
                }
            }
        }
        Ok(StructureTensor { dim, entries })
    }

    /// Builds a tensor from entries that are already antisymmetric.
    pub fn from_antisymmetric(dim: usize, entries: Vec<Scalar>) -> Result<Self> {
        let t = StructureTensor::from_raw(dim, entries.clone())?;
        if t.entries != entries {
            return Err(Error::Parse(
                "structure constants are not antisymmetric in the first two indices".into(),
            ));
        }
        Ok(t)
    }

    /// Builds a tensor from `(i, j, k, value)` entries, zero-based. The
    /// `(j, i, k)` entry is filled in with the opposite sign. Listing the
    /// same slot twice, or an `i == j` entry, is an error.
    pub fn from_entries(dim: usize, list: &[(usize, usize, usize, Scalar)]) -> Result<Self> {
        let mut t = StructureTensor::zero(dim);
        let mut seen = std::collections::BTreeSet::new();
        for (i, j, k, v) in list {
            let (i, j, k) = (*i, *j, *k);
            if i >= dim || j >= dim || k >= dim {
                return Err(Error::Parse(format!(
                    "index ({}, {}, {}) out of range for dimension {dim}",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            if i == j {
                if v.is_zero() {
                    continue;
                }
                return Err(Error::Parse(format!(
                    "diagonal structure constant ({}, {}, {}) must vanish",
                    i + 1,
                    j + 1,
                    k + 1
                )));
            }
            let (a, b, s) = if i < j { (i, j, v.clone()) } else { (j, i, -v) };
            if !seen.insert((a, b, k)) {
                return Err(Error::Parse(format!(
                    "structure constant ({}, {}, {}) given twice",
                    a + 1,
                    b + 1,
                    k + 1
                )));
            }
            t.entries[idx3(dim, a, b, k)] = s.clone();
            t.entries[idx3(dim, b, a, k)] = -s;
        }
        Ok(t)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn get(&self, i: usize, j: usize, k: usize) -> &Scalar {
        &self.entries[idx3(self.dim, i, j, k)]
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    /// Nonzero entries with `i < j`, zero-based.
    pub fn upper_entries(&self) -> Vec<(usize, usize, usize, Scalar)> {
        let d = self.dim;
        let mut out = Vec::new();
        for i in 0..d {
            for j in i + 1..d {
                for k in 0..d {
                    let v = self.get(i, j, k);
                    if !v.is_zero() {
                        out.push((i, j, k, v.clone()));
                    }
                }
            }
        }
        out
    }

    pub fn is_antisymmetric(&self) -> bool {
        let d = self.dim;
        (0..d).all(|i| {
            (0..d).all(|j| (0..d).all(|k| *self.get(i, j, k) == -self.get(j, i, k)))
        })
    }

    /// `(X_i)_j^k = -f_ij^k`, one matrix per `i`.
    pub fn adjoint_x(&self) -> Vec<Matrix> {
        let d = self.dim;
        (0..d)
            .map(|i| Matrix::from_fn(d, |j, k| -self.get(i, j, k)))
            .collect()
    }

    /// `(Y^k)_ij = -f_ij^k`, one matrix per `k`.
    pub fn adjoint_y(&self) -> Vec<Matrix> {
        let d = self.dim;
        (0..d)
            .map(|k| Matrix::from_fn(d, |i, j| -self.get(i, j, k)))
            .collect()
    }

    /// Jacobi residual from the index loops, indexed `(i, j, m, n)`.
    pub fn jacobi_residual(&self) -> ResidualGrid {
        ResidualGrid::new(self.dim, 4, kernels::jacobi(&self.entries, self.dim))
    }

    /// The same residual assembled from adjoint matrices:
    /// entry `(i, j, m, n)` of `(X_i)_j^k X_k + X_i X_j - X_j X_i`.
    pub fn jacobi_residual_matrix(&self) -> ResidualGrid {
        let d = self.dim;
        let x = self.adjoint_x();
        let mut out = Vec::with_capacity(d * d * d * d);
        for i in 0..d {
            for j in 0..d {
                let mut m = &(&x[i] * &x[j]) - &(&x[j] * &x[i]);
                for (k, xk) in x.iter().enumerate() {
                    let c = x[i].get(j, k);
                    if !c.is_zero() {
                        m = &m + &xk.scale(c);
                    }
                }
                for a in 0..d {
                    for b in 0..d {
                        out.push(m.get(a, b).clone());
                    }
                }
            }
        }
        ResidualGrid::new(d, 4, out)
    }

    /// Killing form `K_ij = f_ik^l f_jl^k`.
    pub fn killing_form(&self) -> Matrix {
        let d = self.dim;
        Matrix::from_fn(d, |i, j| {
            let mut s = Scalar::zero();
            for k in 0..d {
                for l in 0..d {
                    let a = self.get(i, k, l);
                    if !a.is_zero() {
                        s += a * self.get(j, l, k);
                    }
                }
            }
            s
        })
    }

    pub fn is_lie_algebra(&self) -> bool {
        self.jacobi_residual().is_zero()
    }

    /// Structure constants in a new basis `X'_i = P_i^k X_k` (rows of `P`):
    /// `f'_ij^n = P_i^k P_j^l f_kl^m (P^{-1})_m^n`.
    pub fn change_basis(&self, p: &Matrix) -> Result<StructureTensor> {
        let d = self.dim;
        if p.dim() != d {
            return Err(Error::DimensionMismatch {
                expected: d,
                found: p.dim(),
            });
        }
        let pinv = p.inverse()?;
        // h[k][l][n] = f_kl^m (P^{-1})_m^n
        let mut h = vec![Scalar::zero(); d * d * d];
        for k in 0..d {
            for l in 0..d {
                for n in 0..d {
                    h[idx3(d, k, l, n)] = (0..d).map(|m| self.get(k, l, m) * pinv.get(m, n)).sum();
                }
            }
        }
        // g[i][l][n] = P_i^k h[k][l][n]
        let mut g = vec![Scalar::zero(); d * d * d];
        for i in 0..d {
            for l in 0..d {
                for n in 0..d {
                    g[idx3(d, i, l, n)] = (0..d).map(|k| p.get(i, k) * &h[idx3(d, k, l, n)]).sum();
                }
            }
        }
        let mut out = vec![Scalar::zero(); d * d * d];
        for i in 0..d {
            for j in 0..d {
                for n in 0..d {
                    out[idx3(d, i, j, n)] = (0..d).map(|l| p.get(j, l) * &g[idx3(d, i, l, n)]).sum();
                }
            }
        }
        Ok(StructureTensor { dim: d, entries: out })
    }

    pub fn max_abs(&self) -> Scalar {
        self.entries
            .iter()
            .map(Scalar::abs)
            .max()
            .unwrap_or_else(Scalar::zero)
    }
}

impl fmt::Debug for StructureTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "StructureTensor(dim={}, {})", self.dim, self)
    }
}

/// Lists nonzero brackets as `[1,2]=-1*2 + 1*3`, using one-based indices.
impl fmt::Display for StructureTensor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim;
        let mut first = true;
        for i in 0..d {
            for j in i + 1..d {
                let terms: Vec<String> = (0..d)
                    .filter(|&k| !self.get(i, j, k).is_zero())
                    .map(|k| format!("{}*{}", self.get(i, j, k), k + 1))
                    .collect();
                if terms.is_empty() {
                    continue;
                }
                if !first {
                    write!(f, ", ")?;
                }
                first = false;
                write!(f, "[{},{}]={}", i + 1, j + 1, terms.join(" + "))?;
            }
        }
        if first {
            write!(f, "abelian")?;
        }
        Ok(())
    }
}

/// A rank-2 or rank-4 residual array over `0..dim` per index.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ResidualGrid {
    dim: usize,
    rank: usize,
    entries: Vec<Scalar>,
}

impl ResidualGrid {
    pub fn new(dim: usize, rank: usize, entries: Vec<Scalar>) -> Self {
        debug_assert_eq!(entries.len(), dim.pow(rank as u32));
        ResidualGrid { dim, rank, entries }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn entries(&self) -> &[Scalar] {
        &self.entries
    }

    pub fn get(&self, index: &[usize]) -> &Scalar {
        assert_eq!(index.len(), self.rank);
        let flat = index.iter().fold(0, |acc, &x| acc * self.dim + x);
        &self.entries[flat]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Scalar::is_zero)
    }

    pub fn max_abs(&self) -> Scalar {
        self.entries
            .iter()
            .map(Scalar::abs)
            .max()
            .unwrap_or_else(Scalar::zero)
    }

    /// First nonzero entry as a multi-index, if any.
    pub fn first_nonzero(&self) -> Option<Vec<usize>> {
        let pos = self.entries.iter().position(|x| !x.is_zero())?;
        let mut idx = vec![0; self.rank];
        let mut rest = pos;
        for slot in idx.iter_mut().rev() {
            *slot = rest % self.dim;
            rest /= self.dim;
        }
        Some(idx)
    }
}
