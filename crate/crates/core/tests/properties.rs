mod common;

use std::sync::OnceLock;

use common::*;
use jlb_core::bialgebra::JacobiLieBialgebra;
use jlb_core::catalog::{automorphism_samples, lookup, AlgebraName};
use jlb_core::classify::{residual_system, UnknownAssignment};
use jlb_core::equivalence::identify::satisfies_isomorphism;
use jlb_core::equivalence::{identify_dual, is_equivalent_witness, transform};
use jlb_core::scalar::{int, q};
use jlb_core::{Matrix, Scalar, StructureTensor, Vector};
use proptest::prelude::*;

fn scalar() -> impl Strategy<Value = Scalar> {
    prop_oneof![
        Just(Scalar::zero()),
        (-4i64..=4, 1i64..=3).prop_map(|(n, d)| q(n, d)),
    ]
}

fn raw_tensor(d: usize) -> impl Strategy<Value = Vec<Scalar>> {
    proptest::collection::vec(scalar(), d * d * d)
}

fn vector(d: usize) -> impl Strategy<Value = Vector> {
    proptest::collection::vec(scalar(), d).prop_map(Vector::new)
}

fn bialgebra(d: usize) -> impl Strategy<Value = JacobiLieBialgebra> {
    (raw_tensor(d), raw_tensor(d), vector(d), vector(d)).prop_map(move |(f, ft, a, b)| {
        JacobiLieBialgebra::new(
            StructureTensor::from_raw(d, f).unwrap(),
            StructureTensor::from_raw(d, ft).unwrap(),
            a,
            b,
        )
        .unwrap()
    })
}

/// Table rows with a spread of automorphisms of their `g`.
fn rows_with_automorphisms() -> &'static [(String, JacobiLieBialgebra, Vec<Matrix>)] {
    static CELL: OnceLock<Vec<(String, JacobiLieBialgebra, Vec<Matrix>)>> = OnceLock::new();
    CELL.get_or_init(|| {
        let values = [int(1), int(-1), int(2), q(1, 2), int(0), int(3)];
        table_instances()
            .into_iter()
            .map(|(label, b)| {
                let autos = automorphism_samples(&catalog_of(&b), &values, 4);
                (label, b, autos)
            })
            .collect()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn antisymmetrization_is_idempotent(d in 2usize..=4, raw in raw_tensor(4)) {
        let raw = raw[..d * d * d].to_vec();
        let t = StructureTensor::from_raw(d, raw).unwrap();
        prop_assert!(t.is_antisymmetric());
        prop_assert_eq!(StructureTensor::from_raw(d, t.entries().to_vec()).unwrap(), t.clone());
        prop_assert_eq!(StructureTensor::from_antisymmetric(d, t.entries().to_vec()).unwrap(), t);
    }

    #[test]
    fn jacobi_forms_agree(raw in raw_tensor(3)) {
        let t = StructureTensor::from_raw(3, raw).unwrap();
        prop_assert_eq!(t.jacobi_residual(), t.jacobi_residual_matrix());
    }

    #[test]
    fn mixed_forms_agree(b in bialgebra(3)) {
        prop_assert_eq!(b.mixed_residual(), b.mixed_residual_matrix());
    }

    #[test]
    fn zero_tensor_has_zero_adjoints(d in 1usize..=4) {
        let t = StructureTensor::zero(d);
        prop_assert!(t.adjoint_x().iter().chain(t.adjoint_y().iter()).all(|m| m.is_zero()));
    }

    #[test]
    fn swapping_preserves_verification(b in bialgebra(2)) {
        prop_assert_eq!(b.verify().passed(), b.swapped().verify().passed());
    }

    #[test]
    fn step_one_residuals_vanish_exactly_on_valid_bialgebras(
        name in prop::sample::select(vec![AlgebraName::A1, AlgebraName::A2, AlgebraName::III, AlgebraName::V]),
        values in proptest::collection::vec(prop::sample::select(vec![0i64, 0, 1, -1, 2]), 15),
    ) {
        let g = lookup(name, None).unwrap();
        let d = g.dim();
        let n = jlb_core::classify::unknown_count(d);
        let flat: Vec<Scalar> = values[..n].iter().map(|&v| int(v)).collect();
        let u = UnknownAssignment::from_flat(d, &flat).unwrap();
        let b = u.bialgebra(&g).unwrap();
        let zero = residual_system(&g, &u).iter().all(Scalar::is_zero);
        prop_assert_eq!(zero, b.verify().passed());
    }

    #[test]
    fn automorphisms_preserve_bialgebras(row in any::<prop::sample::Index>(), pick in any::<prop::sample::Index>()) {
        let rows = rows_with_automorphisms();
        let (label, b, autos) = &rows[row.index(rows.len())];
        let a = &autos[pick.index(autos.len())];
        let moved = transform(b, a).unwrap();
        prop_assert!(moved.verify().passed(), "{} under {}", label, a);
        prop_assert!(is_equivalent_witness(b, &moved, a).unwrap());
        let back = transform(&moved, &a.inverse().unwrap()).unwrap();
        prop_assert_eq!(&back, b);
    }

    #[test]
    fn transform_composes(row in any::<prop::sample::Index>(), i in any::<prop::sample::Index>(), j in any::<prop::sample::Index>()) {
        let rows = rows_with_automorphisms();
        let (_, b, autos) = &rows[row.index(rows.len())];
        let (a1, a2) = (&autos[i.index(autos.len())], &autos[j.index(autos.len())]);
        let stepwise = transform(&transform(b, a1).unwrap(), a2).unwrap();
        prop_assert_eq!(stepwise, transform(b, &(a2 * a1)).unwrap());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn identified_duals_come_with_an_isomorphism(row in any::<prop::sample::Index>()) {
        let rows = rows_with_automorphisms();
        let (label, b, _) = &rows[row.index(rows.len())];
        if let Ok(id) = identify_dual(&b.gstar) {
            prop_assert!(id.c.is_invertible(), "{}", label);
            prop_assert!(satisfies_isomorphism(&b.gstar, &id.algebra.tensor, &id.c), "{}", label);
        }
    }
}
