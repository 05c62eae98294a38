use std::collections::BTreeSet;
use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use uqplus::monomial::Monomials;
use uqplus::par::Mode;
use uqplus::pbw::{PathChoice, Pbw};
use uqplus::rootdata::{compositions, LieType};
use uqplus::ualgebra::UAlgebra;

// fresh caches every iteration, otherwise the second pass is a lookup
fn monomials(t: LieType, mode: Mode) -> Monomials {
    let pbw = Pbw::with_options(Arc::new(UAlgebra::new(t)), mode, PathChoice::Shortest).unwrap();
    Monomials::new(Arc::new(pbw)).unwrap()
}

fn basis_sweep(t: LieType, mode: Mode, max_total: u32) -> usize {
    let m = monomials(t, mode);
    let weights: BTreeSet<_> = (1..=max_total)
        .flat_map(|s| compositions(m.pbw.len(), s))
        .map(|c| m.pbw.weight_of(&c).unwrap())
        .collect();
    weights.iter().map(|nu| m.monomial_basis_matrix(nu).unwrap().labels.len()).sum()
}

fn oracle_sweep(t: LieType, mode: Mode) -> usize {
    let m = monomials(t, mode);
    let r = m.pbw.len();
    compositions(r, 2).iter().map(|c| m.f_search(c).unwrap().len()).sum()
}

fn c_sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("basis_matrices");
    g.sample_size(10);
    for (name, total) in [("A3", 3), ("B3", 2), ("G2", 3)] {
        let t = LieType::parse(name).unwrap();
        for mode in [Mode::Sequential, Mode::Parallel] {
            g.bench_with_input(BenchmarkId::new(format!("{mode:?}"), name), &total, |b, &total| {
                b.iter(|| basis_sweep(t, mode, total))
            });
        }
    }
    g.finish();

    let mut g = c.benchmark_group("f_search");
    g.sample_size(10);
    for name in ["A3", "B3", "C3"] {
        let t = LieType::parse(name).unwrap();
        for mode in [Mode::Sequential, Mode::Parallel] {
            g.bench_with_input(BenchmarkId::new(format!("{mode:?}"), name), &t, |b, &t| b.iter(|| oracle_sweep(t, mode)));
        }
    }
    g.finish();
}

criterion_group!(benches, c_sweeps);
criterion_main!(benches);
