//! Independent reference implementations for the integration tests. They
//! work on nested `Vec`s with the index formulas written out directly and
//! share no code with the library kernels.
#![allow(dead_code)]

use jlb_core::bialgebra::JacobiLieBialgebra;
use jlb_core::equivalence::catalog_match;
use jlb_core::scalar::{int, q};
use jlb_core::tables::{SamplePolicy, Table};
use jlb_core::{Scalar, StructureTensor};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub type T3 = Vec<Vec<Vec<Scalar>>>;
pub type T4 = Vec<Vec<Vec<Vec<Scalar>>>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Small rational, zero about a third of the time.
pub fn small_rational(r: &mut ChaCha8Rng) -> Scalar {
    if r.random_range(0..3) == 0 {
        return Scalar::zero();
    }
    q(r.random_range(-4..=4), r.random_range(1..=3))
}

pub fn random_antisymmetric(r: &mut ChaCha8Rng, d: usize) -> T3 {
    let mut t = vec![vec![vec![Scalar::zero(); d]; d]; d];
    for i in 0..d {
        for j in i + 1..d {
            for k in 0..d {
                let v = small_rational(r);
                t[j][i][k] = -&v;
                t[i][j][k] = v;
            }
        }
    }
    t
}

pub fn random_vector(r: &mut ChaCha8Rng, d: usize) -> Vec<Scalar> {
    (0..d).map(|_| small_rational(r)).collect()
}

pub fn to_tensor(t: &T3) -> StructureTensor {
    let d = t.len();
    let flat: Vec<Scalar> = t.iter().flatten().flatten().cloned().collect();
    StructureTensor::from_antisymmetric(d, flat).expect("antisymmetric input")
}

pub fn from_tensor(t: &StructureTensor) -> T3 {
    let d = t.dim();
    (0..d)
        .map(|i| (0..d).map(|j| (0..d).map(|k| t.get(i, j, k).clone()).collect()).collect())
        .collect()
}

fn sum(d: usize, f: impl Fn(usize) -> Scalar) -> Scalar {
    (0..d).fold(Scalar::zero(), |acc, k| acc + f(k))
}

/// `f_ij^k f_km^n + f_ik^n f_mj^k + f_jk^n f_im^k`, indexed `[i][j][m][n]`.
pub fn jacobi_oracle(f: &T3) -> T4 {
    let d = f.len();
    let mut out = vec![vec![vec![vec![Scalar::zero(); d]; d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            for m in 0..d {
                for n in 0..d {
                    out[i][j][m][n] = sum(d, |k| {
                        &f[i][j][k] * &f[k][m][n]
                            + &f[i][k][n] * &f[m][j][k]
                            + &f[j][k][n] * &f[i][m][k]
                    });
                }
            }
        }
    }
    out
}

/// Classical mixed-Jacobi identity, left side minus right side,
/// indexed `[i][j][m][n]`; `ft[m][n][k]` holds `f~^mn_k`.
pub fn classical_mixed_oracle(f: &T3, ft: &T3) -> T4 {
    let d = f.len();
    let mut out = vec![vec![vec![vec![Scalar::zero(); d]; d]; d]; d];
    for i in 0..d {
        for j in 0..d {
            for m in 0..d {
                for n in 0..d {
                    let lhs = sum(d, |k| &f[i][j][k] * &ft[m][n][k]);
                    let rhs = sum(d, |k| {
                        &f[i][k][m] * &ft[k][n][j]
                            + &f[i][k][n] * &ft[m][k][j]
                            + &f[k][j][m] * &ft[k][n][i]
                            + &f[k][j][n] * &ft[m][k][i]
                    });
                    out[i][j][m][n] = lhs - rhs;
                }
            }
        }
    }
    out
}

/// Classical `[X_i, X~^j] = f~^jk_i X_k + f_ki^j X~^k` as `2d` coefficients.
pub fn classical_bracket_oracle(f: &T3, ft: &T3, i: usize, j: usize) -> Vec<Scalar> {
    let d = f.len();
    let mut out: Vec<Scalar> = (0..d).map(|k| ft[j][k][i].clone()).collect();
    out.extend((0..d).map(|k| f[k][i][j].clone()));
    out
}

pub fn grid4_equals(grid: &jlb_core::ResidualGrid, oracle: &T4) -> bool {
    let d = oracle.len();
    (0..d).all(|i| {
        (0..d).all(|j| {
            (0..d).all(|m| (0..d).all(|n| *grid.get(&[i, j, m, n]) == oracle[i][j][m][n]))
        })
    })
}

/// A random Lie algebra: a catalog tensor in a random basis.
pub fn random_lie_algebra(r: &mut ChaCha8Rng, d: usize) -> StructureTensor {
    use jlb_core::catalog::{lookup, AlgebraName};
    let names: Vec<AlgebraName> = AlgebraName::of_dim(d).collect();
    let name = names[r.random_range(0..names.len())];
    let g = lookup(name, name.has_param().then(|| int(2))).unwrap();
    loop {
        let p = jlb_core::Matrix::from_fn(d, |_, _| int(r.random_range(-2..=2)));
        if p.is_invertible() {
            return g.tensor.change_basis(&p).unwrap();
        }
    }
}

/// Every shipped table row at every default sample, as
/// `(label, bialgebra)`. Rows whose sample is inadmissible are left out.
pub fn table_instances() -> Vec<(String, JacobiLieBialgebra)> {
    let policy = SamplePolicy::default();
    let mut out = Vec::new();
    for t in Table::all_builtin() {
        for row in &t.rows {
            for env in row.samples(&policy).unwrap() {
                if let Ok(b) = row.instantiate(&env) {
                    out.push((format!("table {} {} {env:?}", t.table, row.label), b));
                }
            }
        }
    }
    out
}

/// Catalog entry of `b.g`; every table row is written over one.
pub fn catalog_of(b: &JacobiLieBialgebra) -> jlb_core::catalog::LieAlgebra {
    catalog_match(&b.g).expect("table rows use catalog presentations")
}
