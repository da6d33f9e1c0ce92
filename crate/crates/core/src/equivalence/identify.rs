//! Identification of a Lie algebra with a catalog entry.
//!
//! The isomorphism type is read off exact invariants first (derived
//! algebra, center, Killing form, and for three-dimensional solvable
//! algebras the action of an outside element on the derived algebra; the
//! VI_a / VII_a parameter comes from `tr^2 / det` of that action). Only
//! then is a matrix `C` searched with `C^i_k C^j_l f~^kl_m = f'^ij_n C^n_m`.

use crate::catalog::{self, AlgebraName, LieAlgebra};
use crate::error::{Error, Result};
use crate::linalg::{rank, solve_affine, Matrix};
use crate::scalar::{int, Scalar};
use crate::tensor::StructureTensor;

use super::basis::BasisSearch;
use super::region::SearchRegion;

/// Isomorphism invariants of a Lie algebra given by structure constants.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Invariants {
    pub dim: usize,
    pub derived_dim: usize,
    pub center_dim: usize,
    /// `tr ad_x = 0` for all `x`.
    pub unimodular: bool,
    /// Signature `(positive, negative)` of the Killing form.
    pub killing_signature: (usize, usize),
    /// `[g, [g, g]] = 0`.
    pub derived_central: bool,
    /// Trace and determinant of `ad_x` restricted to a two-dimensional
    /// derived algebra, for some `x` outside it. Defined up to scaling
    /// `(tr, det) -> (c tr, c^2 det)`.
    pub derived_action: Option<(Scalar, Scalar, bool)>,
}

fn brackets(t: &StructureTensor) -> Vec<Vec<Scalar>> {
    let d = t.dim();
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            out.push((0..d).map(|k| t.get(i, j, k).clone()).collect());
        }
    }
    out
}

fn bracket(t: &StructureTensor, x: &[Scalar], y: &[Scalar]) -> Vec<Scalar> {
    let d = t.dim();
    (0..d)
        .map(|m| {
            let mut s = Scalar::zero();
            for k in 0..d {
                for l in 0..d {
                    if !x[k].is_zero() && !y[l].is_zero() {
                        s += &x[k] * &y[l] * t.get(k, l, m);
                    }
                }
            }
            s
        })
        .collect()
}

/// Signature of a symmetric rational matrix by congruence diagonalization.
pub fn signature(m: &Matrix) -> (usize, usize) {
    let n = m.dim();
    let mut a = m.rows();
    let mut diag = Vec::new();
    let mut active: Vec<usize> = (0..n).collect();
    while let Some(&first) = active.first() {
        let pivot = active.iter().copied().find(|&i| !a[i][i].is_zero());
        let p = match pivot {
            Some(p) => p,
            None => {
                // No nonzero diagonal: use a nonzero off-diagonal entry.
                let Some((i, j)) = active
                    .iter()
                    .flat_map(|&i| active.iter().map(move |&j| (i, j)))
                    .find(|&(i, j)| i != j && !a[i][j].is_zero())
                else {
                    let _ = first;
                    break;
                };
                // Row/column i += row/column j gives a[i][i] = 2 a[i][j].
                for k in 0..n {
                    let v = a[j][k].clone();
                    a[i][k] += v;
                }
                for k in 0..n {
                    let v = a[k][j].clone();
                    a[k][i] += v;
                }
                i
            }
        };
        let piv = a[p][p].clone();
        diag.push(piv.clone());
        active.retain(|&x| x != p);
        for &i in &active {
            let f = &a[i][p] / &piv;
            if f.is_zero() {
                continue;
            }
            for &k in active.iter().chain(std::iter::once(&p)) {
                let v = &f * &a[p][k];
                a[i][k] -= v;
            }
        }
        for &i in &active {
            for &k in &active {
                a[k][i] = a[i][k].clone();
            }
            a[i][p] = Scalar::zero();
            a[p][i] = Scalar::zero();
        }
    }
    (
        diag.iter().filter(|x| x.is_positive()).count(),
        diag.iter().filter(|x| x.is_negative()).count(),
    )
}

impl Invariants {
    pub fn of(t: &StructureTensor) -> Invariants {
        let d = t.dim();
        let br = brackets(t);
        let derived_dim = rank(&br);
        // center: x with sum_i x^i f_ij^k = 0 for all j, k
        let center_rows: Vec<Vec<Scalar>> = (0..d)
            .flat_map(|j| (0..d).map(move |k| (j, k)))
            .map(|(j, k)| (0..d).map(|i| t.get(i, j, k).clone()).collect())
            .collect();
        let center_dim = d - rank(&center_rows);
        let unimodular = (0..d).all(|i| (0..d).map(|k| t.get(i, k, k)).sum::<Scalar>().is_zero());
        let killing = t.killing_form();
        let killing_signature = signature(&killing);
        let unit = |i: usize| -> Vec<Scalar> {
            (0..d)
                .map(|k| if k == i { Scalar::one() } else { Scalar::zero() })
                .collect()
        };
        let derived_central = br
            .iter()
            .all(|v| (0..d).all(|i| bracket(t, &unit(i), v).iter().all(Scalar::is_zero)));
        let derived_action = if d == 3 && derived_dim == 2 {
            restricted_action(t, &br)
        } else {
            None
        };
        Invariants {
            dim: d,
            derived_dim,
            center_dim,
            unimodular,
            killing_signature,
            derived_central,
            derived_action,
        }
    }

    /// The catalog type and parameter these invariants determine.
    pub fn catalog_type(&self) -> Result<(AlgebraName, Option<Scalar>)> {
        use AlgebraName::*;
        let unsupported = || {
            Error::NoCatalogMatch(format!("no catalog type for invariants {self:?}"))
        };
        match (self.dim, self.derived_dim) {
            (2, 0) => Ok((A1, None)),
            (2, 1) => Ok((A2, None)),
            (3, 0) => Ok((I, None)),
            (3, 1) => Ok((if self.derived_central { II } else { III }, None)),
            (3, 3) => match self.killing_signature {
                (0, 3) | (3, 0) => Ok((IX, None)),
                _ => Ok((VIII, None)),
            },
            (3, 2) => {
                let (tr, det, scalar) = self.derived_action.clone().ok_or_else(unsupported)?;
                if scalar {
                    return Ok((V, None));
                }
                if tr.is_zero() {
                    return Ok((if det.is_negative() { VI0 } else { VII0 }, None));
                }
                let disc = &tr * &tr - int(4) * &det;
                if disc.is_zero() {
                    return Ok((IV, None));
                }
                let r = &tr * &tr / &det;
                let (name, a2) = if disc.is_positive() {
                    (VIa, &r / &(&r - int(4)))
                } else {
                    (VIIa, &r / &(int(4) - &r))
                };
                let a = a2.sqrt_exact().ok_or_else(|| {
                    Error::NoCatalogMatch(format!(
                        "{name} with irrational parameter a^2 = {a2}"
                    ))
                })?;
                Ok((name, Some(a)))
            }
            _ => Err(unsupported()),
        }
    }
}

/// `(tr, det, is_scalar)` of `ad_x` on the derived algebra, for the first
/// basis vector `x` outside it.
fn restricted_action(t: &StructureTensor, br: &[Vec<Scalar>]) -> Option<(Scalar, Scalar, bool)> {
    let d = t.dim();
    let mut basis: Vec<Vec<Scalar>> = Vec::new();
    for v in br {
        let mut trial = basis.clone();
        trial.push(v.clone());
        if rank(&trial) == trial.len() {
            basis = trial;
        }
    }
    if basis.len() != 2 {
        return None;
    }
    let x = (0..d)
        .map(|i| {
            (0..d)
                .map(|k| if k == i { Scalar::one() } else { Scalar::zero() })
                .collect::<Vec<_>>()
        })
        .find(|e| {
            let mut trial = basis.clone();
            trial.push(e.clone());
            rank(&trial) == 3
        })?;
    // Coordinates of [x, b_k] in the basis b_1, b_2.
    let cols: Vec<Vec<Scalar>> = (0..d)
        .map(|m| vec![basis[0][m].clone(), basis[1][m].clone()])
        .collect();
    let mut m = Vec::new();
    for b in &basis {
        let img = bracket(t, &x, b);
        let sol = solve_affine(&cols, &img, 2)?;
        m.push(sol.particular);
    }
    let tr = &m[0][0] + &m[1][1];
    let det = &m[0][0] * &m[1][1] - &m[0][1] * &m[1][0];
    let scalar = m[0][1].is_zero() && m[1][0].is_zero() && m[0][0] == m[1][1];
    Some((tr, det, scalar))
}

/// A catalog algebra isomorphic to the input and the matrix `C` realising
/// the isomorphism.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Identification {
    pub algebra: LieAlgebra,
    pub c: Matrix,
}

/// Matrix form of the isomorphism condition:
/// `C (C^i_k X~^k) = X'^i C` for every `i`, with `X~^k` the adjoint
/// matrices of `gstar` and `X'^i` those of the catalog algebra.
pub fn satisfies_isomorphism(gstar: &StructureTensor, target: &StructureTensor, c: &Matrix) -> bool {
    let d = gstar.dim();
    let xs = gstar.adjoint_x();
    let xt = target.adjoint_x();
    (0..d).all(|i| {
        let mut comb = Matrix::zeros(d);
        for (k, xk) in xs.iter().enumerate() {
            let cik = c.get(i, k);
            if !cik.is_zero() {
                comb = &comb + &xk.scale(cik);
            }
        }
        &(c * &comb) == &(&xt[i] * c)
    })
}

/// Identifies `gstar` with a catalog algebra over the default grid.
pub fn identify_dual(gstar: &StructureTensor) -> Result<Identification> {
    identify_dual_in(gstar, &SearchRegion::default())
}

pub fn identify_dual_in(gstar: &StructureTensor, region: &SearchRegion) -> Result<Identification> {
    if !gstar.is_lie_algebra() {
        return Err(Error::NoCatalogMatch(
            "structure constants violate the Jacobi identity".into(),
        ));
    }
    let (name, param) = Invariants::of(gstar).catalog_type()?;
    let algebra = catalog::lookup(name, param)?;
    let id = Matrix::identity(gstar.dim());
    let c = if *gstar == algebra.tensor {
        id
    } else {
        BasisSearch::new(gstar, &algebra.tensor, region.values())
            .find(&|c| satisfies_isomorphism(gstar, &algebra.tensor, c))
            .ok_or_else(|| {
                Error::NoCatalogMatch(format!(
                    "invariants give {}, but no C was found over {region}",
                    algebra.label()
                ))
            })?
    };
    let tensor_form = gstar.change_basis(&c)? == algebra.tensor;
    assert!(
        tensor_form && satisfies_isomorphism(gstar, &algebra.tensor, &c),
        "isomorphism forms disagree"
    );
    Ok(Identification { algebra, c })
}
