use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use ftlb_bench::{letters, word, WORDS};
use ftlb_core::coeff::parse_scalar;
use ftlb_core::cyclic::{build_solution, verify_functional_system, CyclicFunction, SupportProfile};
use ftlb_core::invariants::{Evaluator, InvariantSpec};
use ftlb_core::markov::{trace_of_word, IdealChecker, TraceParams, TraceQuotient};
use ftlb_core::ybalgebra::{ideal_generator, AlgebraElement, IdealKind};

fn scalars(c: &mut Criterion) {
    let a = parse_scalar("(u^2*z + v*y0 - 1)/(u*(1+u^2))").unwrap();
    let b = parse_scalar("(v^2-1)/((1+u^2)*v) + z^2*u").unwrap();
    c.bench_function("scalar add", |bn| bn.iter(|| black_box(&a).add(black_box(&b))));
    c.bench_function("scalar mul", |bn| bn.iter(|| black_box(&a).mul(black_box(&b))));
    c.bench_function("scalar equals", |bn| bn.iter(|| black_box(&a).add(&b).equals(&b.add(&a))));
}

fn products(c: &mut Criterion) {
    let mut g = c.benchmark_group("ideal generator product");
    for d in 1..=3u32 {
        let r12 = ideal_generator(IdealKind::R12, 3, d).unwrap();
        let rb = ideal_generator(IdealKind::RB, 3, d).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(d), &d, |bn, _| bn.iter(|| r12.mul(black_box(&rb)).unwrap()));
    }
    g.finish();
    let (d, w) = letters(3);
    c.bench_function("word to normal form", |bn| bn.iter(|| AlgebraElement::from_word(3, d, black_box(&w)).unwrap()));
}

fn traces(c: &mut Criterion) {
    let mut g = c.benchmark_group("symbolic trace");
    for i in 0..WORDS.len() {
        let (d, w) = letters(i);
        let p = TraceParams::symbolic(d);
        g.bench_with_input(BenchmarkId::from_parameter(i), &i, |bn, _| bn.iter(|| trace_of_word(black_box(&w), 3, d, &p).unwrap()));
    }
    g.finish();
}

fn invariants(c: &mut Criterion) {
    let (d, text) = WORDS[2];
    let w = word(d, text);
    let xb = InvariantSpec::xb(d, &[0, 2]).unwrap();
    let rhob = InvariantSpec::rhob(d, &[0, 2]).unwrap();
    c.bench_function("X_S on 3 strands", |bn| bn.iter(|| Evaluator::new(xb.clone()).evaluate(black_box(&w)).unwrap()));
    c.bench_function("rho_S on 3 strands", |bn| bn.iter(|| Evaluator::new(rhob.clone()).evaluate(black_box(&w)).unwrap()));
}

fn quotients(c: &mut Criterion) {
    let mut g = c.benchmark_group("quotient checks");
    g.sample_size(10);
    let tlb = IdealChecker::new(TraceQuotient::Tlb, 3, 1).unwrap();
    let classical = TraceParams::classical(parse_scalar("-1/u").unwrap(), parse_scalar("v").unwrap());
    g.bench_function("classical ideal check", |bn| bn.iter(|| tlb.check(black_box(&classical)).unwrap()));
    let ftlb = IdealChecker::new(TraceQuotient::Ftlb, 3, 2).unwrap();
    let profile = SupportProfile::parse("sup1=0;sup2=1;y1=;y2=;y3=;y4=", 2).unwrap();
    let sol = build_solution(&profile, 2).unwrap();
    let p = sol.params().unwrap();
    g.bench_function("framed ideal check d=2", |bn| bn.iter(|| ftlb.check(black_box(&p)).unwrap()));
    g.bench_function("functional system d=2", |bn| bn.iter(|| verify_functional_system(&sol.x, &sol.y, &sol.z).unwrap()));
    g.finish();
}

fn fourier(c: &mut Criterion) {
    let p = TraceParams::symbolic(3);
    let x = CyclicFunction::new(p.x.clone());
    let y = CyclicFunction::new(p.y.clone());
    c.bench_function("convolution d=3", |bn| bn.iter(|| black_box(&x).convolve(black_box(&y)).unwrap()));
    c.bench_function("fourier d=3", |bn| bn.iter(|| black_box(&y).fourier()));
}

criterion_group!(benches, scalars, products, traces, invariants, quotients, fourier);
criterion_main!(benches);
