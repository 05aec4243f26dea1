//! Sequential against rayon-parallel execution of the data-parallel kernels.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use multint::approx::{approx_clique_t_with, exact_clique_2track_with};
use multint::constructions::Constructor;
use multint::corpus::{random_graph, random_representation, random_weights, rng};
use multint::exec::Execution;
use multint::representation::{intersection_graph_with, verify_representation_with, RepKind};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn t_approximation(c: &mut Criterion) {
    let mut group = c.benchmark_group("approx_clique_t");
    group.sample_size(10);
    for n in [40, 80] {
        let mut r = rng(n as u64);
        let rep = random_representation(&mut r, RepKind::Interval, 3, n);
        let w = random_weights(&mut r, rep.labels(), 10);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, _| {
                b.iter(|| approx_clique_t_with(&rep, &w, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn exact_two_track(c: &mut Criterion) {
    let mut group = c.benchmark_group("exact_clique_2track");
    group.sample_size(10);
    for n in [20, 40] {
        let mut r = rng(100 + n as u64);
        let rep = random_representation(&mut r, RepKind::Track, 2, n);
        let w = random_weights(&mut r, rep.labels(), 10);
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, _| {
                b.iter(|| exact_clique_2track_with(&rep, &w, exec).unwrap())
            });
        }
    }
    group.finish();
}

fn intersection_and_verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("intersection_graph");
    group.sample_size(10);
    let mut r = rng(7);
    let g = random_graph(&mut r, 40, 0.3);
    let reps: Vec<_> = Constructor::ALL
        .iter()
        .map(|c| (c.build(&g).unwrap(), c.target(&g).unwrap()))
        .collect();
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "all-constructors"), |b| {
            b.iter(|| {
                reps.iter()
                    .map(|(rep, _)| intersection_graph_with(rep, exec).m())
                    .sum::<usize>()
            })
        });
        group.bench_function(
            BenchmarkId::new(format!("verify-{name}"), "all-constructors"),
            |b| {
                b.iter(|| {
                    reps.iter().all(|(rep, target)| {
                        verify_representation_with(rep, target, exec).unwrap().ok
                    })
                })
            },
        );
    }
    group.finish();
}

criterion_group!(
    benches,
    t_approximation,
    exact_two_track,
    intersection_and_verification
);
criterion_main!(benches);
