use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use superyang::drinfeld;
use superyang::field::{Poly, Rational};
use superyang::space::SuperSpace;
use superyang::symgroup::{fusion_idempotents, murphy_idempotent};
use superyang::yangian::{osp, rtt_check, RMatrix};
use superyang_bench::{descending_shifts, row_tableaux, spaces};

fn ybe(c: &mut Criterion) {
    let mut g = c.benchmark_group("ybe_residual");
    g.sample_size(10);
    for (name, s) in spaces() {
        let r = RMatrix::for_space(&s).unwrap();
        g.bench_function(name, |b| b.iter(|| black_box(r.ybe_residual().unwrap())));
    }
    g.finish();
}

fn rtt(c: &mut Criterion) {
    let mut g = c.benchmark_group("rtt_osp_tensor");
    g.sample_size(10);
    for n in 1..=2 {
        let s = SuperSpace::osp(n);
        let rep = osp::tensor_module(&s, &descending_shifts(2)).unwrap();
        let r = RMatrix::osp(&s).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, _| b.iter(|| rtt_check(&rep, &r).unwrap()));
    }
    g.finish();
}

fn idempotents(c: &mut Criterion) {
    let mut g = c.benchmark_group("idempotents");
    g.sample_size(10);
    for d in 2..=4 {
        let ts = row_tableaux(d);
        g.bench_with_input(BenchmarkId::new("murphy", d), &ts, |b, ts| {
            b.iter(|| ts.iter().map(murphy_idempotent).count())
        });
        g.bench_with_input(BenchmarkId::new("fusion", d), &ts, |b, ts| {
            b.iter(|| fusion_idempotents(ts, 4).unwrap())
        });
    }
    g.finish();
}

fn xi(c: &mut Criterion) {
    let mut g = c.benchmark_group("xi_module");
    g.sample_size(10);
    for d in 1..=2 {
        g.bench_with_input(BenchmarkId::new("n2", d), &d, |b, &d| b.iter(|| osp::xi_module(2, d).unwrap()));
    }
    g.finish();
}

fn solver(c: &mut Criterion) {
    let roots: Vec<Rational> = (0..8).map(|i| Rational::new(i * 3 - 7, 2).unwrap()).collect();
    let p = Poly::from_roots(&roots);
    let step = Rational::from_int(1);
    let ratio = drinfeld::shift_ratio(&p, &step).unwrap();
    c.bench_function("solve_shift_deg8", |b| b.iter(|| drinfeld::solve_shift(black_box(&ratio), &step).unwrap()));
    let corpus = drinfeld::transition_corpus();
    c.bench_function("transition_corpus", |b| {
        b.iter(|| corpus.iter().map(|(x, y)| drinfeld::tensor_transition(x, y).unwrap()).count())
    });
}

criterion_group!(benches, ybe, rtt, idempotents, xi, solver);
criterion_main!(benches);
