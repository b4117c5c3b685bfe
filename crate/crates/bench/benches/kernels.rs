use criterion::{black_box, criterion_group, criterion_main, Criterion};

use hopflab::families::{drinfeld_double, en_algebra, sigma_t, sweedler};
use hopflab::lazy::cocycle_report;
use hopflab::oracle::{enumerate_z2l, OracleConfig};
use hopflab::{conv_inverse, convolve, BiForm, Field, HopfAlgebra, Scalar};

fn cocycle_on_e2(h: &HopfAlgebra) -> BiForm {
    // a dense-ish normalized form; only used as a workload
    let f = h.field().clone();
    BiForm::from_fn(h, |i, j| {
        if i == 0 || j == 0 {
            if i == j || h.counit()[i.max(j)].is_zero() { Scalar::zero(&f) } else { h.counit()[i.max(j)].clone() }
        } else {
            Scalar::from_frac(&f, (i * 3 + j) as i64 % 7 - 3, 1 + (i + j) as i64 % 4).unwrap()
        }
    })
}

fn convolution(c: &mut Criterion) {
    let q = Field::Rational;
    let e2 = en_algebra(2, &q).unwrap();
    let s = cocycle_on_e2(&e2);
    c.bench_function("convolve bilinear E(2)", |b| b.iter(|| convolve(&e2, black_box(&s), black_box(&s)).unwrap()));

    let h4 = sweedler(&q).unwrap();
    let st = sigma_t(&h4, &Scalar::from_i64(&q, 3)).unwrap();
    c.bench_function("conv inverse sigma_t H4", |b| b.iter(|| conv_inverse(&h4, black_box(&st)).unwrap()));

    let d = drinfeld_double(&h4).unwrap();
    let eps = BiForm::counit(&d);
    c.bench_function("cocycle report D(H4)", |b| b.iter(|| cocycle_report(black_box(&eps), &d)));
}

fn oracle(c: &mut Criterion) {
    let cfg = OracleConfig::default();
    let mut g = c.benchmark_group("oracle");
    g.sample_size(10);
    for p in [3u64, 5] {
        let h = sweedler(&Field::Prime(p)).unwrap();
        g.bench_function(format!("z2l H4 F{p}"), |b| b.iter(|| enumerate_z2l(&h, &cfg).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, convolution, oracle);
criterion_main!(benches);
