use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use combinv::brick::obt_system;
use combinv::framework::{build_b_with, verify_inversion_with, verify_local_with};
use combinv::involutions::{verify_pairing_with, PairingApp};
use combinv::kostka::kostka_system;
use combinv::rimhook::rimhook_system;
use combinv::shapes::Partition;
use combinv::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn inversion(c: &mut Criterion) {
    let mut g = c.benchmark_group("inversion_n8");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new("rimhook", name), &exec, |b, &e| {
            b.iter(|| verify_inversion_with(&rimhook_system(), 8, e))
        });
        g.bench_with_input(BenchmarkId::new("kostka", name), &exec, |b, &e| {
            b.iter(|| verify_inversion_with(&kostka_system(), 8, e))
        });
    }
    g.finish();
}

fn local(c: &mut Criterion) {
    let mut g = c.benchmark_group("local_n8");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::new("brick", name), &exec, |b, &e| {
            b.iter(|| verify_local_with(&obt_system(), 8, e))
        });
        g.bench_with_input(BenchmarkId::new("brick_b", name), &exec, |b, &e| {
            b.iter(|| build_b_with(&obt_system(), 8, e))
        });
    }
    g.finish();
}

fn pairing(c: &mut Criterion) {
    let lambda = Partition::new(vec![3, 2]).unwrap();
    let mu = Partition::new(vec![2, 2, 1]).unwrap();
    let mut g = c.benchmark_group("rimhook_pairing_n5");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_with_input(BenchmarkId::from_parameter(name), &exec, |b, &e| {
            b.iter(|| verify_pairing_with(PairingApp::Rimhook, &lambda, &mu, e).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, inversion, local, pairing);
criterion_main!(benches);
