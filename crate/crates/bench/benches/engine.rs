use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use condensa::morita::center_rank;
use condensa::reltensor::relative_tensor;
use condensa::separability::is_separable;
use condensa::structures::{catalog, check_algebra};
use condensa_bench::{load, pointed};

fn axioms(c: &mut Criterion) {
    let mut group = c.benchmark_group("check_algebra");
    for data in catalog::all_fusion() {
        let alg = load(&data);
        group.bench_with_input(BenchmarkId::from_parameter(&data.name), &alg, |b, a| b.iter(|| check_algebra(a)));
    }
    group.finish();
}

fn separability(c: &mut Criterion) {
    let mut group = c.benchmark_group("is_separable");
    for data in catalog::all_fusion() {
        let alg = load(&data);
        group.bench_with_input(BenchmarkId::from_parameter(&data.name), &alg, |b, a| b.iter(|| is_separable(a)));
    }
    group.finish();
}

fn tensor(c: &mut Criterion) {
    let mut group = c.benchmark_group("relative_tensor_vec");
    group.sample_size(20);
    for (alg, sep) in pointed() {
        let r = catalog::vec_right_module(&alg).unwrap();
        let l = catalog::vec_left_module(&alg).unwrap();
        group.bench_function(BenchmarkId::from_parameter(&alg.name), |b| {
            b.iter(|| relative_tensor(&alg, &r, &l, &sep, "T").unwrap())
        });
    }
    group.finish();
}

fn center(c: &mut Criterion) {
    let mut group = c.benchmark_group("center_rank");
    group.sample_size(10);
    for (alg, _) in pointed() {
        group.bench_function(BenchmarkId::from_parameter(&alg.name), |b| b.iter(|| center_rank(&alg).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, axioms, separability, tensor, center);
criterion_main!(benches);
