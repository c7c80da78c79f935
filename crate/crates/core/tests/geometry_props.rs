use galois_locus::algebra::parse::{parse_point, parse_poly};
use galois_locus::galois::{is_galois, GaloisOptions};
use galois_locus::geometry::{Hypersurface, ProjPoint, ProjTransform};
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

const CURVES: [(&str, [&str; 3]); 3] = [
    ("X0^2*X1 - X2^3 over GF(3)", ["1:1:1", "0:1:2", "1:2:1"]),
    ("X0^3*X1 - X2^4 over GF(4)", ["1:t:1", "0:1:1", "0:1:0"]),
    (
        "X0^3*X1 + X1^3*X2 + X2^3*X0 over GF(3)",
        ["1:1:1", "1:0:0", "1:1:0"],
    ),
];

const SOLIDS: [&str; 3] = [
    "X0^2*X1 - X2^3 over GF(3) in P^3",
    "X0^3*X1 - X2^4 over GF(2) in P^3",
    "X0^3*X1 + X0^2*X2^2 + X3^4 over GF(2) in P^3",
];

fn hs(s: &str) -> Hypersurface {
    Hypersurface::new(parse_poly(s, None).unwrap().poly).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig { cases: 60, .. ProptestConfig::default() })]

    #[test]
    fn galois_verdict_is_projectively_invariant(c in 0usize..3, k in 0usize..3, seed in any::<u64>()) {
        let (src, pts) = CURVES[c];
        let x = hs(src);
        let p = ProjPoint::new(x.field(), parse_point(pts[k], x.field()).unwrap()).unwrap();
        let m = ProjTransform::random(x.field(), 3, &mut ChaCha8Rng::seed_from_u64(seed));
        let y = x.transform(&m).unwrap();
        let q = m.inverse().apply(&p);
        prop_assert_eq!(y.contains(&q).unwrap(), x.contains(&p).unwrap());
        let opts = GaloisOptions::default();
        match (is_galois(&x, &p, &opts), is_galois(&y, &q, &opts)) {
            (Ok(a), Ok(b)) => {
                prop_assert_eq!(a.status, b.status);
                prop_assert_eq!(a.kind, b.kind);
                prop_assert_eq!(a.group, b.group);
            }
            (Err(a), Err(b)) => prop_assert_eq!(a.code(), b.code()),
            (a, b) => prop_assert!(false, "{:?} vs {:?}", a.map(|r| r.status), b.map(|r| r.status)),
        }
    }

    #[test]
    fn special_loci_are_equivariant(s in 0usize..3, seed in any::<u64>()) {
        let x = hs(SOLIDS[s]);
        let m = ProjTransform::random(x.field(), 4, &mut ChaCha8Rng::seed_from_u64(seed));
        let y = x.transform(&m).unwrap();
        let minv = m.inverse();
        prop_assert_eq!(y.strange_center().unwrap(), x.strange_center().unwrap().transform(&minv));
        prop_assert_eq!(y.cone_vertex().unwrap(), x.cone_vertex().unwrap().transform(&minv));
        let v = y.cone_vertex().unwrap();
        prop_assert!(y.strange_center().unwrap().contains_subspace(&v));
    }
}

#[test]
fn strange_center_and_vertex_of_the_families() {
    let cone = hs(SOLIDS[1]);
    assert_eq!(cone.strange_center().unwrap().dim(), 1);
    assert_eq!(cone.cone_vertex().unwrap().dim(), 0);
    let solid = hs(SOLIDS[2]);
    assert!(solid.cone_vertex().unwrap().is_empty());
}
