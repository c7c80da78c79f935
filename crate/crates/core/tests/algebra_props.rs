use galois_locus::algebra::{make_field, FieldDesc, Mono, MultiPoly};
use galois_locus::geometry::{substitute_linear, ProjTransform};
use proptest::prelude::*;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn field_for(code: u8) -> FieldDesc {
    let (p, k) = [(2, 1), (2, 3), (3, 1), (3, 2), (5, 1), (7, 2), (2, 8)][code as usize % 7];
    make_field(p, k, None).unwrap()
}

fn random_poly(
    f: &FieldDesc,
    nvars: usize,
    maxdeg: u32,
    terms: usize,
    rng: &mut ChaCha8Rng,
) -> MultiPoly {
    let ts = (0..terms).map(|_| {
        let mut m = Mono::one();
        for i in 0..nvars {
            m = m.with(i, rng.gen_range(0..=maxdeg));
        }
        (m, f.random(rng))
    });
    MultiPoly::from_terms(f, nvars, ts)
}

/// Homogeneous of degree `d`; matrices are only defined up to scalars.
fn random_form(
    f: &FieldDesc,
    nvars: usize,
    d: u32,
    terms: usize,
    rng: &mut ChaCha8Rng,
) -> MultiPoly {
    let ts = (0..terms).map(|_| {
        let mut m = Mono::one();
        let mut left = d;
        for i in 0..nvars - 1 {
            let e = rng.gen_range(0..=left);
            m = m.with(i, e);
            left -= e;
        }
        (m.with(nvars - 1, left), f.random(rng))
    });
    MultiPoly::from_terms(f, nvars, ts)
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 300, .. ProptestConfig::default() })]

    #[test]
    fn field_axioms(fc in 0u8..7, seed in any::<u64>()) {
        let f = field_for(fc);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
        prop_assert_eq!(f.add(a, f.add(b, c)), f.add(f.add(a, b), c));
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.sub(a, b), f.add(a, f.neg(b)));
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            prop_assert_eq!(f.div(b, a).unwrap(), f.mul(b, f.inv(a).unwrap()));
        }
        prop_assert_eq!(f.from_digits(&f.digits(a)), a);
    }

    #[test]
    fn frobenius(fc in 0u8..7, seed in any::<u64>()) {
        let f = field_for(fc);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let (a, b) = (f.random(&mut rng), f.random(&mut rng));
        let p = f.characteristic();
        prop_assert_eq!(f.frobenius_power(a, 1), f.pow(a, p));
        prop_assert_eq!(f.frobenius_power(f.add(a, b), 1), f.add(f.frobenius_power(a, 1), f.frobenius_power(b, 1)));
        prop_assert_eq!(f.frobenius_root(f.frobenius_power(a, 1), 1), a);
        prop_assert_eq!(f.frobenius_power(a, f.degree()), a);
    }

    #[test]
    fn hasse_product_rule(fc in 0u8..7, k in 0u32..6, seed in any::<u64>()) {
        let f = field_for(fc);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_poly(&f, 2, 4, 4, &mut rng);
        let h = random_poly(&f, 2, 4, 4, &mut rng);
        let lhs = g.mul(&h).hasse_derivative(0, k);
        let rhs = (0..=k).fold(MultiPoly::zero(&f, 2), |acc, i| {
            acc.add(&g.hasse_derivative(0, i).mul(&h.hasse_derivative(0, k - i)))
        });
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn substitution_round_trip(fc in 0u8..7, seed in any::<u64>()) {
        let f = field_for(fc);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_form(&f, 3, 3, 5, &mut rng);
        prop_assume!(!g.is_zero());
        let m = ProjTransform::random(&f, 3, &mut rng);
        let n = ProjTransform::random(&f, 3, &mut rng);
        let back = substitute_linear(&substitute_linear(&g, &m).unwrap(), &m.inverse()).unwrap();
        prop_assert_eq!(back.monic(), g.monic());
        let two = substitute_linear(&substitute_linear(&g, &m).unwrap(), &n).unwrap();
        prop_assert_eq!(two.monic(), substitute_linear(&g, &m.compose(&n)).unwrap().monic());
    }
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 150, .. ProptestConfig::default() })]

    #[test]
    fn gcd_properties(fc in 0u8..5, nvars in 1usize..4, seed in any::<u64>()) {
        let f = field_for(fc);
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let g = random_poly(&f, nvars, 2, 3, &mut rng);
        let a = random_poly(&f, nvars, 2, 3, &mut rng).mul(&g);
        let b = random_poly(&f, nvars, 2, 3, &mut rng).mul(&g);
        let h = a.gcd(&b);
        prop_assert_eq!(&h, &b.gcd(&a));
        if a.is_zero() && b.is_zero() {
            return Ok(());
        }
        prop_assert_eq!(h.lc(), 1);
        prop_assert!(a.div_exact(&h).is_some() && b.div_exact(&h).is_some());
        if !g.is_zero() {
            prop_assert!(h.div_exact(&g.monic()).is_some());
        }
        prop_assert_eq!(&h, &a.gcd_prs(&b));
    }
}
