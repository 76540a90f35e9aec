use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use wplab::corpus::generate;
use wplab::harness::{self, TheoremId};
use wplab::Execution;

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("generate");
    group.sample_size(10);
    for n in [6, 7] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| generate::classes(n, false, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn verify(c: &mut Criterion) {
    let graphs = generate::classes_in_range(1, 7, false, Execution::Parallel).unwrap();
    let suites = [
        ("T3.2", vec![TheoremId::T3_2]),
        ("L4.3", vec![TheoremId::L4_3]),
        ("all", TheoremId::ALL.to_vec()),
    ];
    let mut group = c.benchmark_group("verify_n7");
    group.sample_size(10);
    for (label, ids) in &suites {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, label), ids, |b, ids| {
                b.iter(|| harness::verify("bench", &graphs, ids, 1..=3, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, generation, verify);
criterion_main!(benches);
