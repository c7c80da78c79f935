use galois_locus::algebra::factor::{absolutely_irreducible, expand_factors, factor_multivariate};
use galois_locus::algebra::{make_field, FieldDesc, Mono, MultiPoly};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_poly(
    f: &FieldDesc,
    nvars: usize,
    maxdeg: u32,
    terms: usize,
    rng: &mut ChaCha8Rng,
) -> MultiPoly {
    let ts = (0..terms).map(|_| {
        let mut m = Mono::one();
        let mut budget = rng.gen_range(0..=maxdeg);
        for i in 0..nvars {
            let e = rng.gen_range(0..=budget);
            m.0[i] = e as u16;
            budget -= e;
        }
        (m, f.random(rng))
    });
    MultiPoly::from_terms(f, nvars, ts)
}

fn field_for(code: u8) -> FieldDesc {
    match code % 4 {
        0 => make_field(2, 1, None).unwrap(),
        1 => make_field(3, 1, None).unwrap(),
        2 => make_field(2, 2, None).unwrap(),
        _ => make_field(5, 1, None).unwrap(),
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 500, .. ProptestConfig::default() })]

    #[test]
    fn factors_multiply_back(fc in 0u8..4, nvars in 1usize..4, parts in 1usize..4, seed in any::<u64>()) {
        let f = field_for(fc);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut g = MultiPoly::one(&f, nvars);
        for _ in 0..parts {
            let h = random_poly(&f, nvars, 3, 3, &mut rng);
            if !h.is_zero() {
                g = g.mul(&h);
            }
        }
        let fs = factor_multivariate(&g, seed).unwrap();
        let unit = MultiPoly::constant(&f, nvars, g.lc());
        prop_assert_eq!(expand_factors(&fs, &unit), g);
        for (h, _) in &fs {
            prop_assert_eq!(h.lc(), 1);
            prop_assert!(!h.is_constant());
        }
    }
}

#[test]
fn factor_count_at_least_parts() {
    let f = make_field(3, 1, None).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..60 {
        let parts: Vec<MultiPoly> = (0..3)
            .map(|_| loop {
                let h = random_poly(&f, 3, 3, 4, &mut rng);
                if !h.is_constant() {
                    break h;
                }
            })
            .collect();
        let g = parts.iter().fold(MultiPoly::one(&f, 3), |a, b| a.mul(b));
        let fs = factor_multivariate(&g, 3).unwrap();
        let total: usize = fs.iter().map(|(_, m)| m).sum();
        assert!(total >= 3, "{g} gave {fs:?}");
    }
}

#[test]
fn absolute_irreducibility_under_linear_change() {
    let f = make_field(3, 1, None).unwrap();
    let x: Vec<MultiPoly> = (0..3).map(|i| MultiPoly::var(&f, 3, i)).collect();
    let cusp = x[0].pow(2).mul(&x[1]).sub(&x[2].pow(3));
    let split = x[1].pow(2).add(&x[2].pow(2));
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    for _ in 0..10 {
        let m: Vec<Vec<u64>> = loop {
            let m: Vec<Vec<u64>> = (0..3)
                .map(|_| (0..3).map(|_| f.random(&mut rng)).collect())
                .collect();
            if galois_locus::algebra::linalg::determinant(&f, &m) != 0 {
                break m;
            }
        };
        let images: Vec<MultiPoly> = (0..3)
            .map(|i| {
                (0..3).fold(MultiPoly::zero(&f, 3), |acc, j| {
                    acc.add(&x[j].scale(m[i][j]))
                })
            })
            .collect();
        assert!(absolutely_irreducible(&cusp.substitute(&images), 1).unwrap());
        assert!(!absolutely_irreducible(&split.substitute(&images), 1).unwrap());
    }
}

fn merged(mut a: Vec<(MultiPoly, usize)>, b: Vec<(MultiPoly, usize)>) -> Vec<(MultiPoly, usize)> {
    for (h, m) in b {
        match a.iter_mut().find(|(g, _)| *g == h) {
            Some(e) => e.1 += m,
            None => a.push((h, m)),
        }
    }
    a.sort_by(|x, y| galois_locus::algebra::factor::cmp_canonical(&x.0, &y.0).then(x.1.cmp(&y.1)));
    a
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 200, .. ProptestConfig::default() })]

    #[test]
    fn unique_factorization_consistency(fc in 0u8..4, nvars in 2usize..4, seed in any::<u64>()) {
        let f = field_for(fc);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let h1 = random_poly(&f, nvars, 4, 4, &mut rng);
        let h2 = random_poly(&f, nvars, 4, 4, &mut rng);
        prop_assume!(!h1.is_zero() && !h2.is_zero());
        let lhs = factor_multivariate(&h1.mul(&h2), seed).unwrap();
        let rhs = merged(factor_multivariate(&h1, seed ^ 1).unwrap(), factor_multivariate(&h2, seed ^ 2).unwrap());
        prop_assert_eq!(lhs, rhs);
    }
}
