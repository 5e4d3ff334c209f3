use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use berger_lens::algebra::canonicalize;
use berger_lens::diameter::cut_time_max_numeric;
use berger_lens::locus::sample_cut_locus;
use berger_lens::oracle::{brute_distance, OracleConfig};
use berger_lens::parallel::{map_indexed, Execution};
use berger_lens::times::cut_time;
use berger_lens::{MetricParams, SpherePoint};

const MODES: [(&str, Execution); 2] =
    [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn cut_time_sweep(c: &mut Criterion) {
    let m = MetricParams::with_eta(3, 1, 1.0, -0.8).unwrap();
    let mut g = c.benchmark_group("cut_time_sweep_2001");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| {
                map_indexed(exec, 2001, |i| {
                    cut_time(-1.0 + i as f64 / 1000.0, black_box(&m)).unwrap().t_cut
                })
            })
        });
    }
    g.finish();
}

fn locus_grid(c: &mut Criterion) {
    let m = MetricParams::with_eta(5, 2, 1.0, -0.9).unwrap();
    let mut g = c.benchmark_group("sample_cut_locus_101x64");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| sample_cut_locus(black_box(&m), 101, 64, exec).unwrap())
        });
    }
    g.finish();
}

fn diameter_max(c: &mut Criterion) {
    let m = MetricParams::with_eta(1, 1, 1.0, 2.0).unwrap();
    let mut g = c.benchmark_group("cut_time_max_numeric_1000");
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| cut_time_max_numeric(black_box(&m), 1000, exec).unwrap())
        });
    }
    g.finish();
}

fn oracle_distance(c: &mut Criterion) {
    let m = MetricParams::new(2, 1, 1.0, 1.0).unwrap();
    let target = canonicalize(&SpherePoint::new(0.0, 1.0, 0.0, 0.0), 2, 1);
    let cfg = OracleConfig { n_h3: 41, n_phi: 64, n_t: 256, eps_match: 1e-3, t_horizon: 4.0 };
    let mut g = c.benchmark_group("brute_distance_41x64");
    g.sample_size(10);
    for (name, exec) in MODES {
        g.bench_function(BenchmarkId::from_parameter(name), |b| {
            b.iter(|| brute_distance(black_box(&target), &m, &cfg, exec).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, cut_time_sweep, locus_grid, diameter_max, oracle_distance);
criterion_main!(benches);
