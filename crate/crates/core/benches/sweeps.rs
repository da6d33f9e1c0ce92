//! Sequential against rayon-parallel execution of the three sweeps that
//! go through `exec`: table verification, the witness search and the
//! basis search behind dual identification.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use jlb_core::catalog::{lookup, AlgebraName};
use jlb_core::equivalence::{identify_dual, search_witness, SearchRegion};
use jlb_core::exec::{self, Mode};
use jlb_core::tables::{verify_tables, SamplePolicy, Table};
use jlb_core::JacobiLieBialgebra;

const MODES: [(Mode, &str); 2] = [(Mode::Sequential, "sequential"), (Mode::Parallel, "parallel")];

fn row(table: u32, label: &str) -> JacobiLieBialgebra {
    let t = Table::builtin(table).unwrap();
    let r = t.rows.iter().find(|r| r.label == label).unwrap();
    let env = r.samples(&SamplePolicy::default()).unwrap().remove(0);
    r.instantiate(&env).unwrap()
}

fn tables(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_tables");
    group.sample_size(10);
    let policy = SamplePolicy::default();
    for (mode, name) in MODES {
        group.bench_function(BenchmarkId::new(name, "6+7"), |b| {
            exec::set_mode(mode);
            b.iter(|| black_box(verify_tables(&[6, 7], &policy).unwrap()))
        });
    }
    group.finish();
}

fn witness(c: &mut Criterion) {
    let g = lookup(AlgebraName::III, None).unwrap();
    let b1 = row(6, "III / V.i");
    // no witness onto a different row, so the whole grid is swept
    let b2 = row(6, "III / III.i");
    let region = SearchRegion::new(2, 1);
    let mut group = c.benchmark_group("search_witness");
    group.sample_size(10);
    for (mode, name) in MODES {
        group.bench_function(BenchmarkId::new(name, "III exhaustive"), |b| {
            exec::set_mode(mode);
            b.iter(|| black_box(search_witness(&g, &b1, &b2, &region).unwrap()))
        });
    }
    group.finish();
}

fn identify(c: &mut Criterion) {
    let gstar = row(6, "III / V.i").gstar;
    let mut group = c.benchmark_group("identify_dual");
    group.sample_size(10);
    for (mode, name) in MODES {
        group.bench_function(BenchmarkId::new(name, "V"), |b| {
            exec::set_mode(mode);
            b.iter(|| black_box(identify_dual(&gstar).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, tables, witness, identify);
criterion_main!(benches);
