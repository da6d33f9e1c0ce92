//! The three-step classification driver.
//!
//! Step 1 solves the bialgebra conditions for the dual structure constants
//! and the cocycles, with `g` fixed. It is solved symbolically for
//! dimension 2 ([`d2`]). In dimension 3 candidates come from the shipped
//! tables and are confirmed exactly. Step 2 ([`steps::step2_matrix_b`])
//! builds the matrix `B` carrying a catalog algebra onto a transformed
//! dual. Step 3 ([`steps::step3_reduce`]) partitions candidates up to
//! automorphisms of `g`.

pub mod d2;
pub mod polysys;
pub mod steps;

use crate::bialgebra::JacobiLieBialgebra;
use crate::catalog::LieAlgebra;
use crate::error::{Error, Result};
use crate::kernels;
use crate::linalg::Vector;
use crate::ring::{Poly, Ring};
use crate::scalar::Scalar;
use crate::tensor::StructureTensor;

/// Values of the Step-1 unknowns: the independent dual structure constants
/// `f~^ij_k` (`i < j`, in row-major order), `alpha` and `beta`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct UnknownAssignment {
    pub dim: usize,
    pub gstar: Vec<Scalar>,
    pub alpha: Vec<Scalar>,
    pub beta: Vec<Scalar>,
}

/// `(i, j, k)` of each independent dual structure constant, in order.
pub fn gstar_slots(d: usize) -> Vec<(usize, usize, usize)> {
    let mut out = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            for k in 0..d {
                out.push((i, j, k));
            }
        }
    }
    out
}

/// Number of Step-1 unknowns, `d^2 (d - 1) / 2 + 2 d`.
pub fn unknown_count(d: usize) -> usize {
    d * d * (d - 1) / 2 + 2 * d
}

/// Display names of the unknowns: `f12_1`, ..., `alpha1`, ..., `beta1`, ...
pub fn unknown_names(d: usize) -> Vec<String> {
    let mut names: Vec<String> = gstar_slots(d)
        .into_iter()
        .map(|(i, j, k)| format!("f{}{}_{}", i + 1, j + 1, k + 1))
        .collect();
    names.extend((1..=d).map(|i| format!("alpha{i}")));
    names.extend((1..=d).map(|i| format!("beta{i}")));
    names
}

impl UnknownAssignment {
    pub fn zeros(d: usize) -> Self {
        UnknownAssignment {
            dim: d,
            gstar: vec![Scalar::zero(); d * d * (d - 1) / 2],
            alpha: vec![Scalar::zero(); d],
            beta: vec![Scalar::zero(); d],
        }
    }

    /// Splits a flat vector laid out as in [`unknown_names`].
    pub fn from_flat(d: usize, values: &[Scalar]) -> Result<Self> {
        if values.len() != unknown_count(d) {
            return Err(Error::DimensionMismatch {
                expected: unknown_count(d),
                found: values.len(),
            });
        }
        let n = d * d * (d - 1) / 2;
        Ok(UnknownAssignment {
            dim: d,
            gstar: values[..n].to_vec(),
            alpha: values[n..n + d].to_vec(),
            beta: values[n + d..].to_vec(),
        })
    }

    pub fn to_flat(&self) -> Vec<Scalar> {
        let mut v = self.gstar.clone();
        v.extend(self.alpha.iter().cloned());
        v.extend(self.beta.iter().cloned());
        v
    }

    pub fn of(b: &JacobiLieBialgebra) -> Self {
        let d = b.dim();
        UnknownAssignment {
            dim: d,
            gstar: gstar_slots(d)
                .into_iter()
                .map(|(i, j, k)| b.gstar.get(i, j, k).clone())
                .collect(),
            alpha: b.alpha.entries().to_vec(),
            beta: b.beta.entries().to_vec(),
        }
    }

    pub fn gstar_tensor(&self) -> StructureTensor {
        let entries: Vec<(usize, usize, usize, Scalar)> = gstar_slots(self.dim)
            .into_iter()
            .zip(&self.gstar)
            .filter(|(_, v)| !v.is_zero())
            .map(|((i, j, k), v)| (i, j, k, v.clone()))
            .collect();
        StructureTensor::from_entries(self.dim, &entries).expect("slots are valid")
    }

    pub fn bialgebra(&self, g: &LieAlgebra) -> Result<JacobiLieBialgebra> {
        JacobiLieBialgebra::new(
            g.tensor.clone(),
            self.gstar_tensor(),
            Vector::new(self.alpha.clone()),
            Vector::new(self.beta.clone()),
        )
    }
}

/// Residuals of the dual Jacobi identity, the mixed condition,
/// orthogonality, compatibility and the two cocycle conditions, in that
/// order, for any coefficient ring.
pub fn residual_terms<T: Ring>(f: &[T], ft: &[T], alpha: &[T], beta: &[T], d: usize) -> Vec<T> {
    let mut out = kernels::jacobi_dual(ft, d);
    out.extend(kernels::mixed(f, ft, alpha, beta, d));
    out.push(kernels::orthogonality(alpha, beta));
    out.extend(kernels::compatibility(f, ft, alpha, beta, d));
    out.extend(kernels::cocycle(ft, alpha, d));
    out.extend(kernels::cocycle(f, beta, d));
    out
}

fn full_tensor<T: Ring>(d: usize, upper: &[T]) -> Vec<T> {
    let mut t = vec![T::zero(); d * d * d];
    for ((i, j, k), v) in gstar_slots(d).into_iter().zip(upper) {
        t[kernels::idx3(d, i, j, k)] = v.clone();
        t[kernels::idx3(d, j, i, k)] = v.negated();
    }
    t
}

/// Step-1 residual vector at `u`; all zero exactly when `u` solves Step 1.
pub fn residual_system(g: &LieAlgebra, u: &UnknownAssignment) -> Vec<Scalar> {
    let d = g.dim();
    assert_eq!(u.dim, d, "assignment dimension");
    let ft = full_tensor(d, &u.gstar);
    residual_terms(g.tensor.entries(), &ft, &u.alpha, &u.beta, d)
}

/// The Step-1 equations as polynomials in the unknowns (variables laid
/// out as in [`unknown_names`]), deduplicated and with zeros removed.
pub fn symbolic_system(g: &LieAlgebra) -> Vec<Poly> {
    let d = g.dim();
    let n = unknown_count(d);
    let vars: Vec<Poly> = (0..n).map(|v| Poly::var(n, v)).collect();
    let m = d * d * (d - 1) / 2;
    let f: Vec<Poly> = g
        .tensor
        .entries()
        .iter()
        .map(|c| Poly::constant(n, c.clone()))
        .collect();
    let ft = full_tensor(d, &vars[..m]);
    let mut eqs: Vec<Poly> = residual_terms(&f, &ft, &vars[m..m + d], &vars[m + d..], d)
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| {
            let lead = p.terms().last().map(|(_, c)| c.clone()).expect("nonzero");
            p.scale(&lead.recip().expect("nonzero"))
        })
        .collect();
    eqs.sort();
    eqs.dedup();
    eqs
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{lookup, AlgebraName};
    use crate::scalar::int;

    #[test]
    fn zero_assignment_solves_everything() {
        for name in AlgebraName::ALL {
            let g = lookup(name, name.has_param().then(|| int(2))).unwrap();
            let r = residual_system(&g, &UnknownAssignment::zeros(g.dim()));
            assert!(r.iter().all(Scalar::is_zero), "{name}");
        }
    }

    #[test]
    fn a2_table_row_is_a_solution() {
        let g = lookup(AlgebraName::A2, None).unwrap();
        let u = UnknownAssignment {
            dim: 2,
            gstar: vec![int(0), int(1)],
            alpha: vec![int(-1), int(0)],
            beta: vec![int(0), int(1)],
        };
        assert!(residual_system(&g, &u).iter().all(Scalar::is_zero));
        let mut bad = u.clone();
        bad.beta = vec![int(1), int(1)];
        assert!(!residual_system(&g, &bad).iter().all(Scalar::is_zero));
    }

    #[test]
    fn iii_example_shape_is_a_solution() {
        // f~^12_1 = f~^13_1 = alpha, f~^23_2 = -f~^23_3 = gamma, alpha = gamma
        let g = lookup(AlgebraName::III, None).unwrap();
        let mut u = UnknownAssignment::zeros(3);
        let slots = gstar_slots(3);
        let set = |u: &mut UnknownAssignment, s: (usize, usize, usize), v: i64| {
            let pos = slots.iter().position(|x| *x == s).unwrap();
            u.gstar[pos] = int(v);
        };
        set(&mut u, (0, 1, 0), 1);
        set(&mut u, (0, 2, 0), 1);
        set(&mut u, (1, 2, 1), 1);
        set(&mut u, (1, 2, 2), -1);
        u.alpha = vec![int(0), int(-1), int(-1)];
        u.beta = vec![int(-2), int(0), int(0)];
        assert!(residual_system(&g, &u).iter().all(Scalar::is_zero));
    }

    #[test]
    fn flat_layout_round_trips() {
        let names = unknown_names(2);
        assert_eq!(names, ["f12_1", "f12_2", "alpha1", "alpha2", "beta1", "beta2"]);
        let v: Vec<Scalar> = (1..=6).map(int).collect();
        let u = UnknownAssignment::from_flat(2, &v).unwrap();
        assert_eq!(u.to_flat(), v);
        assert!(UnknownAssignment::from_flat(3, &v).is_err());
    }

    #[test]
    fn symbolic_system_matches_numeric_residuals() {
        let g = lookup(AlgebraName::A2, None).unwrap();
        let eqs = symbolic_system(&g);
        let point: Vec<Scalar> = [2, -1, 3, 1, -2, 5].into_iter().map(int).collect();
        let u = UnknownAssignment::from_flat(2, &point).unwrap();
        let numeric_zero = residual_system(&g, &u).iter().all(Scalar::is_zero);
        let symbolic_zero = eqs.iter().all(|p| p.eval(&point).unwrap().is_zero());
        assert_eq!(numeric_zero, symbolic_zero);
    }
}
