//! Condition-5 sweep timings. With the `parallel` feature each sweep runs
//! once on the default worker pool and once pinned to a single worker, so
//! the speedup of the data-parallel cell map is visible directly; without
//! the feature the same sweeps run on the sequential fallback.

use criterion::{criterion_group, criterion_main, Criterion};
use towers_core::framework::checks::{check_condition5, Group};
use towers_core::hecke0::HeckeTower;
use towers_core::hopf::report::Report;
use towers_core::sym::{sym_condition5_characters, SymTower};
use towers_core::z2::Z2Tower;

#[cfg(feature = "parallel")]
fn run_group<F>(c: &mut Criterion, name: &str, f: F)
where
    F: Fn() -> Report + Sync + Send,
{
    let mut g = c.benchmark_group(name);
    g.sample_size(10);
    g.bench_function("parallel", |b| b.iter(&f));
    let one = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap();
    g.bench_function("one_thread", |b| b.iter(|| one.install(&f)));
    g.finish();
}

#[cfg(not(feature = "parallel"))]
fn run_group<F>(c: &mut Criterion, name: &str, f: F)
where
    F: Fn() -> Report,
{
    let mut g = c.benchmark_group(name);
    g.sample_size(10);
    g.bench_function("sequential", |b| b.iter(&f));
    g.finish();
}

fn bench_sweeps(c: &mut Criterion) {
    let z2 = Z2Tower::new();
    let sym = SymTower::new();
    let hecke = HeckeTower::new();
    // Warm the algebra and table caches so iterations time the sweeps.
    check_condition5(&z2, Group::G0, 5).unwrap();
    sym_condition5_characters(&sym, Group::G0, 5).unwrap();
    check_condition5(&hecke, Group::G0, 4).unwrap();

    run_group(c, "z2_condition5_degree5", || {
        check_condition5(&z2, Group::G0, 5).unwrap()
    });
    run_group(c, "sym_condition5_characters_degree5", || {
        sym_condition5_characters(&sym, Group::G0, 5).unwrap()
    });
    run_group(c, "hecke_condition5_degree4", || {
        check_condition5(&hecke, Group::G0, 4).unwrap()
    });
}

criterion_group!(sweeps, bench_sweeps);
criterion_main!(sweeps);
