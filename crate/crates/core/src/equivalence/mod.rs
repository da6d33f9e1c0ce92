//! Equivalence of Jacobi-Lie bialgebras under automorphisms of `g`.
//!
//! An automorphism `A` (rows give the new basis `X'_i = A_i^j X_j`) acts by
//! `f~' = f~` rewritten in the dual basis `A^{-t}`, `alpha' = A^{-t} alpha`
//! and `beta' = A beta`; `g` is unchanged. Composition follows
//! `transform(transform(b, A1), A2) = transform(b, A2 A1)`.
//!
//! Searches are sound but incomplete: a witness is always checked exactly,
//! and a failed search only ever reports `Unknown`.

pub mod basis;
pub mod identify;
pub mod region;

use std::fmt;

use crate::bialgebra::JacobiLieBialgebra;
use crate::catalog::{self, AlgebraName, AutomorphismBranch, AutomorphismFamily, LieAlgebra};
use crate::error::{Error, Result};
use crate::exec;
use crate::linalg::{Matrix, Vector};
use crate::scalar::Scalar;
use crate::tensor::StructureTensor;

pub use basis::{BasisSearch, Combination, RowFilter};
pub use identify::{identify_dual, Identification, Invariants};
pub use region::SearchRegion;

/// Applies an automorphism of `g`. Fails when `a` is singular or does not
/// preserve the bracket of `g`.
pub fn transform(b: &JacobiLieBialgebra, a: &Matrix) -> Result<JacobiLieBialgebra> {
    if !catalog::is_automorphism(&b.g, a)? {
        return Err(Error::NotAutomorphism(b.g.to_string()));
    }
    transform_unchecked(b, a)
}

/// [`transform`] without the automorphism check; still fails on a
/// singular matrix.
pub fn transform_unchecked(b: &JacobiLieBialgebra, a: &Matrix) -> Result<JacobiLieBialgebra> {
    let p = a.inverse_transpose()?;
    Ok(JacobiLieBialgebra {
        g: b.g.clone(),
        gstar: b.gstar.change_basis(&p)?,
        alpha: p.mul_vec(&b.alpha),
        beta: a.mul_vec(&b.beta),
    })
}

/// Does `a` carry `b1` exactly onto `b2`?
pub fn is_equivalent_witness(
    b1: &JacobiLieBialgebra,
    b2: &JacobiLieBialgebra,
    a: &Matrix,
) -> Result<bool> {
    if b1.dim() != b2.dim() || a.dim() != b1.dim() {
        return Err(Error::DimensionMismatch {
            expected: b1.dim(),
            found: if b1.dim() != b2.dim() { b2.dim() } else { a.dim() },
        });
    }
    if b1.g != b2.g || !a.is_invertible() {
        return Ok(false);
    }
    if !catalog::is_automorphism(&b1.g, a)? {
        return Ok(false);
    }
    Ok(transform_unchecked(b1, a)? == *b2)
}

/// Finds the catalog algebra whose tensor equals `t` exactly.
pub fn catalog_match(t: &StructureTensor) -> Option<LieAlgebra> {
    AlgebraName::of_dim(t.dim()).find_map(|name| {
        let param = if name.has_param() {
            Some(-t.get(0, 1, 1))
        } else {
            None
        };
        catalog::lookup(name, param)
            .ok()
            .filter(|g| g.tensor == *t)
    })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Status {
    Equivalent(Matrix),
    Unknown,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivalenceVerdict {
    pub status: Status,
    /// What was searched, for the record.
    pub searched: String,
}

impl EquivalenceVerdict {
    pub fn witness(&self) -> Option<&Matrix> {
        match &self.status {
            Status::Equivalent(a) => Some(a),
            Status::Unknown => None,
        }
    }

    pub fn is_equivalent(&self) -> bool {
        self.witness().is_some()
    }
}

impl fmt::Display for EquivalenceVerdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.status {
            Status::Equivalent(a) => write!(f, "equivalent, witness A = {a}")?,
            Status::Unknown => write!(f, "unknown (no witness found)")?,
        }
        write!(f, "\nsearched: {}", self.searched)
    }
}

type Predicate<'a> = &'a (dyn Fn(&JacobiLieBialgebra) -> bool + Sync);

/// What a transformed bialgebra must look like. Known parts are used to
/// prune the search; `accept` is checked last.
#[derive(Clone)]
pub struct Target<'a> {
    pub gstar: Option<StructureTensor>,
    pub alpha: Vec<Option<Scalar>>,
    pub beta: Vec<Option<Scalar>>,
    pub accept: Option<Predicate<'a>>,
}

impl<'a> Target<'a> {
    pub fn exact(b: &JacobiLieBialgebra) -> Target<'a> {
        Target {
            gstar: Some(b.gstar.clone()),
            alpha: b.alpha.entries().iter().cloned().map(Some).collect(),
            beta: b.beta.entries().iter().cloned().map(Some).collect(),
            accept: None,
        }
    }

    pub fn predicate(dim: usize, accept: Predicate<'a>) -> Target<'a> {
        Target {
            gstar: None,
            alpha: vec![None; dim],
            beta: vec![None; dim],
            accept: Some(accept),
        }
    }

    pub fn matches(&self, b: &JacobiLieBialgebra) -> bool {
        let comp = |v: &Vector, t: &[Option<Scalar>]| {
            v.entries()
                .iter()
                .zip(t)
                .all(|(x, y)| y.as_ref().is_none_or(|y| x == y))
        };
        self.gstar.as_ref().is_none_or(|t| *t == b.gstar)
            && comp(&b.alpha, &self.alpha)
            && comp(&b.beta, &self.beta)
            && self.accept.is_none_or(|f| f(b))
    }

    fn full_alpha(&self) -> Option<Vector> {
        self.alpha.iter().cloned().collect::<Option<Vec<_>>>().map(Vector::new)
    }

    fn full_beta(&self) -> Option<Vector> {
        self.beta.iter().cloned().collect::<Option<Vec<_>>>().map(Vector::new)
    }
}

/// Result of [`search_transform`].
#[derive(Clone, Debug)]
pub struct SearchOutcome {
    pub found: Option<(Matrix, JacobiLieBialgebra)>,
    pub searched: String,
}

/// Looks for an automorphism `A` of `g` such that `transform(b, A)`
/// satisfies `target`. The identity is tried first; template families are
/// enumerated over the grid per branch, GL(d) and the groups given only by
/// the predicate use the row-by-row basis search.
pub fn search_transform(
    g: &LieAlgebra,
    b: &JacobiLieBialgebra,
    target: &Target<'_>,
    region: &SearchRegion,
) -> Result<SearchOutcome> {
    if b.g != g.tensor {
        return Err(Error::NoCatalogMatch(format!(
            "bialgebra is not over {}",
            g.label()
        )));
    }
    let d = g.dim();
    if target.matches(b) {
        return Ok(SearchOutcome {
            found: Some((Matrix::identity(d), b.clone())),
            searched: "identity".into(),
        });
    }
    let family = g.automorphisms();
    let check = |a: &Matrix| -> Option<(Matrix, JacobiLieBialgebra)> {
        let t = transform_unchecked(b, a).ok()?;
        target.matches(&t).then(|| (a.clone(), t))
    };
    let (found, searched) = match &family {
        AutomorphismFamily::Templates(branches)
            if branches.len() == 1 && branches[0].template.starts_with("GL") =>
        {
            if let Some(dst) = &target.gstar {
                let found = gl_search(b, dst, target, region, &check);
                (found, format!("{}: basis search over {region}", branches[0].template))
            } else if d == 2 {
                let found = template_search(&branches[0], b, target, region, &check);
                (found, format!("{}: all entries over {region}", branches[0].template))
            } else {
                (
                    None,
                    format!("{}: not searched without a target tensor", branches[0].template),
                )
            }
        }
        AutomorphismFamily::Templates(branches) => {
            let found = branches
                .iter()
                .find_map(|br| template_search(br, b, target, region, &check));
            let desc = branches
                .iter()
                .map(|br| br.template)
                .collect::<Vec<_>>()
                .join(" and ");
            (found, format!("{desc}: parameters over {region}"))
        }
        AutomorphismFamily::Predicate { group } => {
            let found = predicate_search(b, target, region, &check);
            (
                found,
                format!("{group}: automorphism rows by basis search over {region}"),
            )
        }
    };
    Ok(SearchOutcome { found, searched })
}

type Check<'a> = &'a (dyn Fn(&Matrix) -> Option<(Matrix, JacobiLieBialgebra)> + Sync);

fn template_search(
    br: &AutomorphismBranch,
    b: &JacobiLieBialgebra,
    target: &Target<'_>,
    region: &SearchRegion,
    check: Check<'_>,
) -> Option<(Matrix, JacobiLieBialgebra)> {
    let k = br.arity();
    let grid = region.values();
    let beta_ok = |a: &Matrix| {
        let bp = a.mul_vec(&b.beta);
        bp.entries()
            .iter()
            .zip(&target.beta)
            .all(|(x, t)| t.as_ref().is_none_or(|t| x == t))
    };
    // A^t alpha' = alpha is linear in A when alpha' is fully known.
    let full_alpha = target.full_alpha();
    let alpha_ok = |a: &Matrix| {
        full_alpha
            .as_ref()
            .is_none_or(|al| a.transpose().mul_vec(al) == b.alpha)
    };
    let try_values = |vals: &[Scalar]| -> Option<(Matrix, JacobiLieBialgebra)> {
        if !br.is_admissible(vals) {
            return None;
        }
        let a = br.instantiate(vals);
        if !beta_ok(&a) || !alpha_ok(&a) || !a.is_invertible() {
            return None;
        }
        check(&a)
    };
    if k == 0 {
        return try_values(&[]);
    }
    exec::find_map_first(grid, |first| {
        region::for_each_tuple(grid, k - 1, |rest| {
            let mut vals = Vec::with_capacity(k);
            vals.push(first.clone());
            vals.extend_from_slice(rest);
            try_values(&vals)
        })
    })
}

/// GL(d): search the dual basis `P = A^{-t}` directly, so the target tensor
/// and `alpha' = P alpha` become row conditions.
fn gl_search(
    b: &JacobiLieBialgebra,
    dst: &StructureTensor,
    target: &Target<'_>,
    region: &SearchRegion,
    check: Check<'_>,
) -> Option<(Matrix, JacobiLieBialgebra)> {
    let mut search = BasisSearch::new(&b.gstar, dst, region.values()).row_filter(RowFilter {
        v: b.alpha.clone(),
        targets: target.alpha.clone(),
    });
    // beta' = P^{-t} beta, i.e. sum_i beta'_i p_i = beta.
    if let Some(bt) = target.full_beta() {
        search = search.combination(Combination {
            coeffs: bt.into_entries(),
            target: b.beta.clone(),
        });
    }
    let p = search.find(&|p: &Matrix| {
        p.inverse_transpose()
            .ok()
            .is_some_and(|a| check(&a).is_some())
    })?;
    check(&p.inverse_transpose().ok()?)
}

/// Groups known only through the predicate: search automorphism rows
/// directly, with `beta' = A beta` as a row condition.
fn predicate_search(
    b: &JacobiLieBialgebra,
    target: &Target<'_>,
    region: &SearchRegion,
    check: Check<'_>,
) -> Option<(Matrix, JacobiLieBialgebra)> {
    let mut search = BasisSearch::new(&b.g, &b.g, region.values()).row_filter(RowFilter {
        v: b.beta.clone(),
        targets: target.beta.clone(),
    });
    // alpha' = A^{-t} alpha, i.e. sum_i alpha'_i a_i = alpha.
    if let Some(al) = target.full_alpha() {
        search = search.combination(Combination {
            coeffs: al.into_entries(),
            target: b.alpha.clone(),
        });
    }
    let a = search.find(&|a: &Matrix| check(a).is_some())?;
    check(&a)
}

/// Searches for `A` in Aut(g) with `transform(b1, A) = b2`.
pub fn search_witness(
    g: &LieAlgebra,
    b1: &JacobiLieBialgebra,
    b2: &JacobiLieBialgebra,
    region: &SearchRegion,
) -> Result<EquivalenceVerdict> {
    if b2.g != g.tensor {
        return Err(Error::NoCatalogMatch(format!(
            "second bialgebra is not over {}",
            g.label()
        )));
    }
    let outcome = search_transform(g, b1, &Target::exact(b2), region)?;
    let status = match outcome.found {
        Some((a, _)) => {
            assert!(
                is_equivalent_witness(b1, b2, &a)?,
                "search returned an invalid witness"
            );
            Status::Equivalent(a)
        }
        None => Status::Unknown,
    };
    Ok(EquivalenceVerdict {
        status,
        searched: format!("{} over {}", outcome.searched, g.label()),
    })
}

/// [`search_witness`] with `g` identified from the catalog.
pub fn search_witness_auto(
    b1: &JacobiLieBialgebra,
    b2: &JacobiLieBialgebra,
    region: &SearchRegion,
) -> Result<EquivalenceVerdict> {
    let g = catalog_match(&b1.g).ok_or_else(|| {
        Error::NoCatalogMatch(format!("g = {} is not a catalog presentation", b1.g))
    })?;
    search_witness(&g, b1, b2, region)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::lookup;
    use crate::scalar::int;

    fn a2_row(alpha: i64) -> JacobiLieBialgebra {
        let g = lookup(AlgebraName::A2, None).unwrap();
        JacobiLieBialgebra::new(
            g.tensor,
            StructureTensor::from_entries(2, &[(0, 1, 1, int(1))]).unwrap(),
            Vector::from_ints(&[-alpha, 0]),
            Vector::from_ints(&[0, alpha]),
        )
        .unwrap()
    }

    #[test]
    fn identity_transform_is_trivial() {
        let b = a2_row(1);
        assert_eq!(transform(&b, &Matrix::identity(2)).unwrap(), b);
        assert!(is_equivalent_witness(&b, &b, &Matrix::identity(2)).unwrap());
    }

    #[test]
    fn non_automorphism_is_rejected() {
        let b = a2_row(1);
        let swap = Matrix::from_int_rows(&[&[0, 1], &[1, 0]]).unwrap();
        assert!(matches!(transform(&b, &swap), Err(Error::NotAutomorphism(_))));
    }

    #[test]
    fn planted_witness_is_recovered() {
        let g = lookup(AlgebraName::A2, None).unwrap();
        let b = a2_row(2);
        let a0 = Matrix::from_int_rows(&[&[2, 0], &[3, 1]]).unwrap();
        let b2 = transform(&b, &a0).unwrap();
        let v = search_witness(&g, &b, &b2, &SearchRegion::default()).unwrap();
        let w = v.witness().expect("planted witness is on the grid");
        assert!(is_equivalent_witness(&b, &b2, w).unwrap());
        let same = search_witness(&g, &b, &b, &SearchRegion::default()).unwrap();
        assert_eq!(same.witness(), Some(&Matrix::identity(2)));
    }

    #[test]
    fn catalog_match_finds_parametrized_entries() {
        let g = lookup(AlgebraName::VIIa, Some(int(3))).unwrap();
        assert_eq!(catalog_match(&g.tensor), Some(g));
        let g = lookup(AlgebraName::II, None).unwrap();
        assert_eq!(catalog_match(&g.tensor).unwrap().name, AlgebraName::II);
    }
}
