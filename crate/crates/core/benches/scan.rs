use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use galois_locus::algebra::parse::parse_poly;
use galois_locus::classify::scan_density;
use galois_locus::galois::GaloisOptions;
use galois_locus::geometry::Hypersurface;
use galois_locus::par::Mode;

fn scan(c: &mut Criterion) {
    let mut g = c.benchmark_group("scan_density");
    g.sample_size(10);
    for (name, src, m) in [
        ("cubic_gf9", "X0^2*X1 - X2^3 over GF(3)", 2),
        ("quartic_gf16", "X0^3*X1 - X2^4 over GF(4)", 2),
    ] {
        let x = Hypersurface::new(parse_poly(src, None).unwrap().poly).unwrap();
        let opts = GaloisOptions::default();
        for mode in [Mode::Sequential, Mode::Parallel] {
            g.bench_with_input(
                BenchmarkId::new(name, format!("{mode:?}")),
                &mode,
                |b, &mode| b.iter(|| scan_density(&x, m, 0, 0, &opts, mode).unwrap()),
            );
        }
    }
    g.finish();
}

criterion_group!(benches, scan);
criterion_main!(benches);
