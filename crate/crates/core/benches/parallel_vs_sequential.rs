use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use taiji_core::analysis::region_areas_of;
use taiji_core::curve::{sample_curve_with, StandardCurve};
use taiji_core::raster::rasterize_region;
use taiji_core::render::{render_diagram, DiagramSpec};
use taiji_core::verify::curve_checks;
use taiji_core::{Execution, Tolerance};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn sampling(c: &mut Criterion) {
    let mut group = c.benchmark_group("sample_curve");
    for n in [10_000usize, 1_000_000] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, n), &n, |b, &n| {
                b.iter(|| sample_curve_with(black_box(n), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn raster(c: &mut Criterion) {
    let svg = String::from_utf8(render_diagram(&DiagramSpec::default()).unwrap()).unwrap();
    let mut group = c.benchmark_group("rasterize_dark_fish");
    for grid in [256usize, 1024] {
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, grid), &grid, |b, &grid| {
                b.iter(|| {
                    rasterize_region(&svg, "fish-dark", "circle", black_box(grid), exec).unwrap()
                })
            });
        }
    }
    group.finish();
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("curve_checks");
    for (name, exec) in MODES {
        group.bench_function(name, |b| b.iter(|| curve_checks(&StandardCurve, exec)));
    }
    group.finish();

    let mut group = c.benchmark_group("region_areas");
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| region_areas_of(&StandardCurve, Tolerance::default(), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20).measurement_time(Duration::from_secs(3));
    targets = sampling, raster, sweeps
}
criterion_main!(benches);
