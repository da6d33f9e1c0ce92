//! Index-loop residual kernels, generic over the coefficient ring.
//!
//! Tensors are flat `d^3` slices indexed `(i * d + j) * d + k`. For `g`
//! the entry is `f_ij^k`; for the dual algebra it is `f~^ij_k`. Rank-4
//! residuals are flat `d^4` slices indexed `(i, j, m, n)`; rank-2 residuals
//! are `d^2` slices.

use crate::ring::Ring;

#[inline]
pub fn idx3(d: usize, i: usize, j: usize, k: usize) -> usize {
    (i * d + j) * d + k
}

#[inline]
pub fn idx4(d: usize, i: usize, j: usize, m: usize, n: usize) -> usize {
    ((i * d + j) * d + m) * d + n
}

fn delta<T: Ring>(a: usize, b: usize) -> T {
    if a == b {
        T::one()
    } else {
        T::zero()
    }
}

/// `f_ij^k f_km^n + f_ik^n f_mj^k + f_jk^n f_im^k`.
pub fn jacobi<T: Ring>(f: &[T], d: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(d * d * d * d);
    for i in 0..d {
        for j in 0..d {
            for m in 0..d {
                for n in 0..d {
                    let mut acc = T::zero();
                    for k in 0..d {
                        acc = acc
                            .plus(&f[idx3(d, i, j, k)].times(&f[idx3(d, k, m, n)]))
                            .plus(&f[idx3(d, i, k, n)].times(&f[idx3(d, m, j, k)]))
                            .plus(&f[idx3(d, j, k, n)].times(&f[idx3(d, i, m, k)]));
                    }
                    out.push(acc);
                }
            }
        }
    }
    out
}

/// Dual-role Jacobi identity written with upper pairs:
/// `f~^ij_k f~^km_n + f~^im_k f~^jk_n + f~^jm_k f~^ki_n`.
pub fn jacobi_dual<T: Ring>(ft: &[T], d: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(d * d * d * d);
    for i in 0..d {
        for j in 0..d {
            for m in 0..d {
                for n in 0..d {
                    let mut acc = T::zero();
                    for k in 0..d {
                        acc = acc
                            .plus(&ft[idx3(d, i, j, k)].times(&ft[idx3(d, k, m, n)]))
                            .plus(&ft[idx3(d, i, m, k)].times(&ft[idx3(d, j, k, n)]))
                            .plus(&ft[idx3(d, j, m, k)].times(&ft[idx3(d, k, i, n)]));
                    }
                    out.push(acc);
                }
            }
        }
    }
    out
}

/// Mixed condition between `g` and its dual in the presence of the
/// cocycles `alpha` (components of X0) and `beta` (components of phi0).
/// With `alpha = beta = 0` it is the classical mixed-Jacobi identity.
pub fn mixed<T: Ring>(f: &[T], ft: &[T], alpha: &[T], beta: &[T], d: usize) -> Vec<T> {
    // s[i][m] = alpha^k f_ik^m - alpha^m beta_i
    let mut s = Vec::with_capacity(d * d);
    for i in 0..d {
        for m in 0..d {
            let mut acc = T::zero();
            for k in 0..d {
                acc = acc.plus(&alpha[k].times(&f[idx3(d, i, k, m)]));
            }
            s.push(acc.minus(&alpha[m].times(&beta[i])));
        }
    }
    let mut out = Vec::with_capacity(d * d * d * d);
    for i in 0..d {
        for j in 0..d {
            for m in 0..d {
                for n in 0..d {
                    let mut acc = T::zero();
                    for k in 0..d {
                        acc = acc
                            .plus(&f[idx3(d, i, j, k)].times(&ft[idx3(d, m, n, k)]))
                            .minus(&f[idx3(d, i, k, m)].times(&ft[idx3(d, k, n, j)]))
                            .minus(&f[idx3(d, i, k, n)].times(&ft[idx3(d, m, k, j)]))
                            .minus(&f[idx3(d, k, j, m)].times(&ft[idx3(d, k, n, i)]))
                            .minus(&f[idx3(d, k, j, n)].times(&ft[idx3(d, m, k, i)]));
                    }
                    acc = acc
                        .plus(&beta[i].times(&ft[idx3(d, m, n, j)]))
                        .minus(&beta[j].times(&ft[idx3(d, m, n, i)]))
                        .plus(&alpha[m].times(&f[idx3(d, i, j, n)]))
                        .minus(&alpha[n].times(&f[idx3(d, i, j, m)]))
                        .plus(&s[i * d + m].times(&delta(j, n)))
                        .minus(&s[j * d + m].times(&delta(i, n)))
                        .minus(&s[i * d + n].times(&delta(j, m)))
                        .plus(&s[j * d + n].times(&delta(i, m)));
                    out.push(acc);
                }
            }
        }
    }
    out
}

/// `alpha^i beta_i`.
pub fn orthogonality<T: Ring>(alpha: &[T], beta: &[T]) -> T {
    alpha
        .iter()
        .zip(beta)
        .fold(T::zero(), |acc, (a, b)| acc.plus(&a.times(b)))
}

/// `alpha^n f_ni^m - beta_n f~^nm_i`, indexed `(i, m)`.
pub fn compatibility<T: Ring>(f: &[T], ft: &[T], alpha: &[T], beta: &[T], d: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(d * d);
    for i in 0..d {
        for m in 0..d {
            let mut acc = T::zero();
            for n in 0..d {
                acc = acc
                    .plus(&alpha[n].times(&f[idx3(d, n, i, m)]))
                    .minus(&beta[n].times(&ft[idx3(d, n, m, i)]));
            }
            out.push(acc);
        }
    }
    out
}

/// Contraction of the last tensor index with a vector, indexed `(m, n)`.
/// With the dual tensor and `alpha` this is the X0 cocycle condition; with
/// `g` and `beta` it is the phi0 cocycle condition.
pub fn cocycle<T: Ring>(t: &[T], v: &[T], d: usize) -> Vec<T> {
    let mut out = Vec::with_capacity(d * d);
    for m in 0..d {
        for n in 0..d {
            let mut acc = T::zero();
            for i in 0..d {
                acc = acc.plus(&v[i].times(&t[idx3(d, m, n, i)]));
            }
            out.push(acc);
        }
    }
    out
}

/// Coefficients of `[X_i, X~^j]` on the direct sum: the first vector holds
/// the `X_k` components and the second the `X~^k` components.
pub fn mixed_bracket<T: Ring>(
    f: &[T],
    ft: &[T],
    alpha: &[T],
    beta: &[T],
    d: usize,
    i: usize,
    j: usize,
) -> (Vec<T>, Vec<T>) {
    let dij: T = delta(i, j);
    let x = (0..d)
        .map(|k| {
            ft[idx3(d, j, k, i)]
                .plus(&alpha[k].times(&dij).half())
                .minus(&alpha[j].times(&delta(i, k)))
        })
        .collect();
    let xt = (0..d)
        .map(|k| {
            f[idx3(d, k, i, j)]
                .minus(&beta[k].times(&dij).half())
                .plus(&beta[i].times(&delta(k, j)))
        })
        .collect();
    (x, xt)
}
