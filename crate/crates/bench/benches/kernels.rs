use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use hypercenter::finitegrp::{direct_product, dihedral, symmetric};
use hypercenter::verify::{example1, mu_chain};
use hypercenter::zlattice::{
    chain_limit, hermite_normal_form, smith_normal_form, IntMatrix, LatticeEndo, StepOperator,
};
use hypercenter::{FgAbelian, SubgroupOfFgA, UcsOptions};

/// A dense matrix with small entries and no special structure.
fn scrambled(n: usize) -> IntMatrix {
    let mut state: i64 = 12345;
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|_| {
            (0..n)
                .map(|_| {
                    state = (state * 1103515245 + 12345) % 2147483648;
                    state % 19 - 9
                })
                .collect()
        })
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(Vec::as_slice).collect();
    IntMatrix::from_i64_rows(&refs)
}

fn bench_normal_forms(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_form");
    for n in [4, 8, 12] {
        let a = scrambled(n);
        group.bench_with_input(BenchmarkId::new("smith", n), &a, |b, a| {
            b.iter(|| smith_normal_form(black_box(a)))
        });
        group.bench_with_input(BenchmarkId::new("hermite", n), &a, |b, a| {
            b.iter(|| hermite_normal_form(black_box(a)))
        });
    }
    group.finish();
}

fn bench_chain_limit(c: &mut Criterion) {
    // Y -> 2Y on Z^n: the chain descends forever and the limit is 0.
    let mut group = c.benchmark_group("chain_limit");
    for n in [1, 2, 3] {
        let x = FgAbelian::free(n);
        let doubling = IntMatrix::diagonal(&vec![2.into(); n]);
        let op = StepOperator::new(
            SubgroupOfFgA::trivial(x.clone()),
            vec![LatticeEndo::endo(x.clone(), doubling).expect("endomorphism")],
        );
        let start = SubgroupOfFgA::whole(x);
        group.bench_function(BenchmarkId::new("doubling", n), |b| {
            b.iter(|| chain_limit(black_box(&start), &op, 32).expect("computes"))
        });
    }
    group.finish();
}

fn bench_ucs(c: &mut Criterion) {
    let mut group = c.benchmark_group("ucs");
    group.sample_size(20);
    let opts = UcsOptions::default();
    let g = example1(3);
    group.bench_function("example1", |b| b.iter(|| g.ucs(black_box(&opts)).expect("runs")));
    let m = mu_chain(3, 0);
    group.bench_function("mu_chain_3", |b| b.iter(|| m.ucs(black_box(&opts)).expect("runs")));
    group.finish();
}

fn bench_normal_subgroups(c: &mut Criterion) {
    let mut group = c.benchmark_group("normal_subgroups");
    for (name, g) in [
        ("S4", symmetric(4)),
        ("D16", dihedral(8)),
        ("D8xS3", direct_product(&dihedral(4), &symmetric(3))),
    ] {
        group.bench_function(name, |b| b.iter(|| black_box(&g).normal_subgroups()));
    }
    group.finish();
}

criterion_group!(benches, bench_normal_forms, bench_chain_limit, bench_ucs, bench_normal_subgroups);
criterion_main!(benches);
