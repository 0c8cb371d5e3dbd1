use std::hint::black_box;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use gpw::classify::census;
use gpw::complexes::build_z0;
use gpw::embeddings::co_contraction_embedding;
use gpw::graphs::{catalog, named};
use gpw::words::{GroupSpec, Order};
use gpw::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn census_six(c: &mut Criterion) {
    let mut group = c.benchmark_group("census_n6");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| census(black_box(6), exec).unwrap()));
    }
    group.finish();
}

fn special_map(c: &mut Criterion) {
    let spec = Arc::new(GroupSpec::new(catalog::cycle(6).unwrap(), vec![Order::Finite(3); 6]).unwrap());
    let z = build_z0(&spec, None).unwrap();
    let mut group = c.benchmark_group("special_c6_order3");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| z.check_special_map(exec).unwrap()));
    }
    group.finish();
}

fn relators(c: &mut Criterion) {
    let g = named("C8opp").unwrap();
    let h = co_contraction_embedding(&g, "a", "b", &[Order::Infinite; 8], None, false).unwrap();
    let mut group = c.benchmark_group("relators_c8opp");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::from_parameter(name), |b| b.iter(|| h.clone().relator_check(exec)));
    }
    group.finish();
}

criterion_group!(benches, census_six, special_map, relators);
criterion_main!(benches);
