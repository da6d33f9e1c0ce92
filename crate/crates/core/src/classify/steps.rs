//! Steps 2 and 3 of the classification.
//!
//! Step 2 carries an identified dual onto the transformed dual `g'.i` by
//! `B = A^{-t} C^{-1}`, where `C` maps the dual onto its catalog algebra
//! `g'` and `A` is an automorphism of `g`. Step 3 groups candidates that
//! an automorphism of `g` maps onto each other.

use crate::bialgebra::JacobiLieBialgebra;
use crate::catalog::LieAlgebra;
use crate::equivalence::identify::{identify_dual_in, satisfies_isomorphism, Identification};
use crate::equivalence::{search_witness, transform, SearchRegion, Status};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalar::Scalar;
use crate::tensor::StructureTensor;

/// `sum_k M^i_k Y_k^t` for the adjoint matrices `Y_k` of `t`.
fn combined_transposed(t: &StructureTensor, m: &Matrix, i: usize) -> Matrix {
    let d = t.dim();
    let mut out = Matrix::zeros(d);
    for (k, y) in t.adjoint_x().iter().enumerate() {
        let c = m.get(i, k);
        if !c.is_zero() {
            out = &out + &y.transpose().scale(c);
        }
    }
    out
}

/// Matrix equation tying `B` to `A`:
/// `(A^{-t})^i_m X~^{m t} A^{-1} = (B^t A)^{-1} (B^i_k X'^{k t}) B^t`
/// for every `i`, with `X~` the adjoint matrices of the dual and `X'`
/// those of the catalog algebra.
pub fn satisfies_b_equation(
    gstar: &StructureTensor,
    catalog: &StructureTensor,
    a: &Matrix,
    b: &Matrix,
) -> Result<bool> {
    let p = a.inverse_transpose()?;
    let a_inv = a.inverse()?;
    let bta_inv = (&b.transpose() * a).inverse()?;
    let bt = b.transpose();
    Ok((0..gstar.dim()).all(|i| {
        let lhs = &combined_transposed(gstar, &p, i) * &a_inv;
        let rhs = &(&bta_inv * &combined_transposed(catalog, b, i)) * &bt;
        lhs == rhs
    }))
}

/// One automorphism sample of Step 2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Step2Sample {
    pub a: Matrix,
    pub b: Matrix,
    /// The transformed bialgebra, whose dual is `change_basis(B)(g')`.
    pub bialgebra: JacobiLieBialgebra,
}

#[derive(Clone, Debug)]
pub struct Step2 {
    pub identification: Identification,
    pub samples: Vec<Step2Sample>,
    /// Automorphism samples that were dropped, with the reason.
    pub rejected: Vec<String>,
}

/// Identifies the dual of `solution` and runs [`step2_with`].
pub fn step2_matrix_b(
    g: &LieAlgebra,
    solution: &JacobiLieBialgebra,
    automorphisms: &[Matrix],
    region: &SearchRegion,
) -> Result<Step2> {
    let id = identify_dual_in(&solution.gstar, region)?;
    step2_with(g, solution, id, automorphisms)
}

/// Step 2 with a given identification, e.g. one member of a family of
/// isomorphisms. Every accepted sample is checked against both the
/// tensor form and the matrix equation for `B`.
pub fn step2_with(
    g: &LieAlgebra,
    solution: &JacobiLieBialgebra,
    identification: Identification,
    automorphisms: &[Matrix],
) -> Result<Step2> {
    if solution.g != g.tensor {
        return Err(Error::NoCatalogMatch(format!(
            "solution is not over {}",
            g.label()
        )));
    }
    let target = &identification.algebra.tensor;
    let c = &identification.c;
    if !c.is_invertible() || !satisfies_isomorphism(&solution.gstar, target, c) {
        return Err(Error::NoCatalogMatch(format!(
            "C does not map the dual onto {}",
            identification.algebra.label()
        )));
    }
    let c_inv = c.inverse()?;
    let mut samples = Vec::new();
    let mut rejected = Vec::new();
    for a in automorphisms {
        let moved = match transform(solution, a) {
            Ok(m) => m,
            Err(e) => {
                rejected.push(format!("{a:?}: {e}"));
                continue;
            }
        };
        let b = &a.inverse_transpose()? * &c_inv;
        if b.determinant().is_zero() {
            rejected.push(format!("{a:?}: det B = 0"));
            continue;
        }
        let tensor_form = target.change_basis(&b)? == moved.gstar;
        let matrix_form = satisfies_b_equation(&solution.gstar, target, a, &b)?;
        assert!(tensor_form && matrix_form, "B fails its defining equations");
        samples.push(Step2Sample {
            a: a.clone(),
            b,
            bialgebra: moved,
        });
    }
    if samples.is_empty() {
        return Err(Error::ConstraintViolation(format!(
            "no automorphism sample gives an invertible B: {}",
            rejected.join("; ")
        )));
    }
    Ok(Step2 {
        identification,
        samples,
        rejected,
    })
}

/// One equivalence class found by [`step3_reduce`].
#[derive(Clone, Debug)]
pub struct Step3Class {
    pub representative: JacobiLieBialgebra,
    /// Candidate indices in the class with `A` mapping each onto the
    /// representative.
    pub members: Vec<(usize, Matrix)>,
}

/// How far a bialgebra is from a normal form: entries outside
/// `{0, 1, -1, 2, -2}` count most, then nonzero entries.
fn roughness(b: &JacobiLieBialgebra) -> (usize, usize) {
    let entries = b
        .gstar
        .entries()
        .iter()
        .chain(b.alpha.entries())
        .chain(b.beta.entries());
    let (mut odd, mut nonzero) = (0, 0);
    for v in entries {
        if !v.is_zero() {
            nonzero += 1;
            let simple = (1..=2).any(|k| *v == Scalar::from(k) || *v == -Scalar::from(k));
            if !simple {
                odd += 1;
            }
        }
    }
    (odd, nonzero)
}

/// Partitions candidates over `g` by the automorphism search. Each class
/// is represented by its simplest member. Candidates with no witness
/// found against an existing class start a new class, so classes are
/// distinct up to the search region.
pub fn step3_reduce(
    g: &LieAlgebra,
    candidates: &[JacobiLieBialgebra],
    region: &SearchRegion,
) -> Result<Vec<Step3Class>> {
    let mut order: Vec<usize> = (0..candidates.len()).collect();
    order.sort_by_key(|&i| roughness(&candidates[i]));
    let mut classes: Vec<Step3Class> = Vec::new();
    'next: for i in order {
        let b = &candidates[i];
        for class in &mut classes {
            let verdict = search_witness(g, b, &class.representative, region)?;
            if let Status::Equivalent(a) = verdict.status {
                class.members.push((i, a));
                continue 'next;
            }
        }
        classes.push(Step3Class {
            representative: b.clone(),
            members: vec![(i, Matrix::identity(g.dim()))],
        });
    }
    Ok(classes)
}
