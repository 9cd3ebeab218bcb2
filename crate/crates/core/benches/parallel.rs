use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tautcalc::chern::{chern_f, Signature};
use tautcalc::pushforward::pushforward_last_with;
use tautcalc::{Execution, TautExpr};

const MODES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn inputs() -> Vec<(&'static str, TautExpr)> {
    ["6;-2", "4,2;-2,-2"]
        .into_iter()
        .map(|s| {
            let sig: Signature = s.parse().unwrap();
            (s, chern_f(&sig).unwrap().truncate(4))
        })
        .collect()
}

fn multiply(c: &mut Criterion) {
    let mut group = c.benchmark_group("mul");
    for (name, x) in inputs() {
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &x, |b, x| {
                b.iter(|| x.mul_with(x, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn reduce(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce");
    for (name, x) in inputs() {
        let square = x.mul(&x).unwrap();
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &square, |b, x| {
                b.iter(|| x.reduce_with(exec))
            });
        }
    }
    group.finish();
}

fn pushforward(c: &mut Criterion) {
    let mut group = c.benchmark_group("pushforward");
    for (name, x) in inputs() {
        let reduced = x.mul(&x).unwrap().reduce();
        for (mode, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(mode, name), &reduced, |b, x| {
                b.iter(|| pushforward_last_with(x, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = multiply, reduce, pushforward
}
criterion_main!(benches);
