use aeppli_bench::{equations, form_pair, metric};
use aeppli_core::random::{random_form, rng};
use aeppli_core::{aeppli_class_vanishes, Cohomology, HermitianMetric};
use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

fn exterior(c: &mut Criterion) {
    let (a, b) = form_pair(4, 1);
    c.bench_function("wedge n=4 (1,1)^(1,0)", |bench| {
        bench.iter(|| black_box(&a).wedge(black_box(&b)))
    });
    let s = equations("calabi-eckmann");
    let (a, _) = form_pair(3, 2);
    c.bench_function("d calabi-eckmann (1,1)", |bench| bench.iter(|| s.d(black_box(&a))));
}

fn hodge(c: &mut Criterion) {
    let h = metric(3, 3);
    let a = random_form(&mut rng(4), 3, 2, 1);
    // first call builds the cached tables
    h.star(&a).unwrap();
    c.bench_function("star n=3 (2,1) random metric", |bench| {
        bench.iter(|| h.star(black_box(&a)))
    });
}

fn cohomology(c: &mut Criterion) {
    let s = equations("calabi-eckmann");
    c.bench_function("bott-chern table calabi-eckmann", |bench| {
        bench.iter(|| {
            let engine = Cohomology::new(&s, None).unwrap();
            (0..=3)
                .flat_map(|p| (0..=3).map(move |q| (p, q)))
                .map(|(p, q)| engine.bott_chern(p, q).unwrap().dim)
                .sum::<usize>()
        })
    });
    let sl2c = equations("sl2c");
    let h = HermitianMetric::identity(3);
    c.bench_function("aeppli decision sl2c p=1", |bench| {
        bench.iter(|| aeppli_class_vanishes(&sl2c, &h, 1))
    });
}

criterion_group!(benches, exterior, hodge, cohomology);
criterion_main!(benches);
