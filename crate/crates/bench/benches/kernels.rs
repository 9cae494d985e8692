use criterion::{criterion_group, criterion_main, Criterion};
use square7_core::catalog::build_config;
use square7_core::listcolor::{
    adjacency_masks, enumerate_canonical_lists, solve_masks,
};
use square7_core::localcases::local_case_report;
use square7_core::nullstellensatz::{coefficient, identity_order};
use square7_core::poly::Monomial;

fn bench_coefficient(c: &mut Criterion) {
    let sq = build_config("H3").unwrap().pattern.square();
    let order = identity_order(sq.n());
    let target = Monomial(vec![2, 1, 2, 4, 4, 5, 2, 3, 4, 2, 1]);
    c.bench_function("coefficient/H3-square-target", |b| {
        b.iter(|| coefficient(&sq, &order, &target).unwrap())
    });
}

fn bench_solver(c: &mut Criterion) {
    let sq = build_config("J1").unwrap().pattern.square();
    let adj = adjacency_masks(&sq);
    // a middling assignment: three 3-lists, two 2-lists, one 3-list
    let lists: Vec<u32> = vec![0b111, 0b1011, 0b110, 0b101, 0b1110, 0b10011];
    c.bench_function("solver/six-cycle-square", |b| {
        b.iter(|| solve_masks(&adj, &lists))
    });
}

fn bench_enumeration(c: &mut Criterion) {
    c.bench_function("canonical-enumeration/sizes-2-2-2-2", |b| {
        b.iter(|| enumerate_canonical_lists(&[2, 2, 2, 2], &[], |_| true))
    });
}

fn bench_local_cases(c: &mut Criterion) {
    c.bench_function("local-cases/d10", |b| b.iter(|| local_case_report(10)));
}

criterion_group!(
    benches,
    bench_coefficient,
    bench_solver,
    bench_enumeration,
    bench_local_cases
);
criterion_main!(benches);
