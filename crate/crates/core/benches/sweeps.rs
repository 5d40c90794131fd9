//! Parallel against sequential sweeps over connected correlators.

use criterion::{criterion_group, criterion_main, Criterion};
use knotfermion::algebra::qf;
use knotfermion::fermion::connected_k;
use knotfermion::knot::{KnotParams, Point};
use knotfermion::par::map_collect;
use knotfermion::partitions::{partitions_of, Partition};

fn sweep(c: &mut Criterion) {
    let knot = KnotParams::new(2, 3).unwrap();
    let pt = Point::at(&knot, qf(3, 11));
    let mus: Vec<Partition> = (1..=6).flat_map(partitions_of).collect();
    let mut g = c.benchmark_group("connected_k_weight_le_6");
    g.sample_size(10);
    g.bench_function("map_collect", |b| b.iter(|| map_collect(&mus, |mu| connected_k(&pt, mu, 3).value)));
    g.bench_function("sequential", |b| b.iter(|| mus.iter().map(|mu| connected_k(&pt, mu, 3).value).collect::<Vec<_>>()));
    g.finish();
}

criterion_group!(benches, sweep);
criterion_main!(benches);
