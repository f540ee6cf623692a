use criterion::{criterion_group, criterion_main, Criterion};
use leibniz_core::algebra::{catalog, Pair};
use leibniz_core::homology::{hl2_cone, hl2_exterior, DEFAULT_CONE_CAP};
use leibniz_core::{Field, Matrix};

fn bench_rref(c: &mut Criterion) {
    let n = 40;
    let rows: Vec<Vec<i64>> = (0..n)
        .map(|i| (0..n).map(|j| ((i * 7 + j * 13) % 11) as i64 - 5).collect())
        .collect();
    let refs: Vec<&[i64]> = rows.iter().map(|r| r.as_slice()).collect();
    let m = Matrix::from_ints(Field::Q, &refs);
    c.bench_function("rref 40x40 over Q", |b| b.iter(|| m.rref()));
}

fn bench_hl2(c: &mut Criterion) {
    let g = catalog::heisenberg(Field::Q, 2).unwrap();
    let p = Pair::full(g);
    c.bench_function("hl2 exterior heisenberg(2)", |b| {
        b.iter(|| hl2_exterior(&p).unwrap().dim)
    });
    let g = catalog::j1(Field::Q)
        .direct_sum(&catalog::abelian(Field::Q, 2))
        .unwrap();
    let p = Pair::full(g);
    c.bench_function("hl2 cone j1+a(2)", |b| {
        b.iter(|| hl2_cone(&p, DEFAULT_CONE_CAP).unwrap().dim)
    });
}

criterion_group!(benches, bench_rref, bench_hl2);
criterion_main!(benches);
