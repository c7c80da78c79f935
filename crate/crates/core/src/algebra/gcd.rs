//! Dense modular gcd: evaluate one variable, recurse, interpolate.

use crate::algebra::field::embed;
use crate::algebra::multipoly::{Mono, MultiPoly};

/// Monic gcd. Small fields are lifted to an extension with enough
/// evaluation points; the monic gcd of polynomials over `K` lies over `K`.
pub fn gcd(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if let Some(g) = trivial(a, b) {
        return g;
    }
    let f = a.field();
    let need = 2 * a.total_degree().max(b.total_degree()).max(1) as u64 + 16;
    if f.size() >= need {
        return rec(a, b).monic();
    }
    let mut s = 2;
    while (f.size() as u128).pow(s) < need as u128 {
        s += 1;
    }
    let lifted = f.extension(s).and_then(|big| Ok((embed(f, &big)?, big)));
    match lifted {
        Ok((e, _)) => rec(&a.embed(&e), &b.embed(&e))
            .monic()
            .preimage(&e)
            .expect("monic gcd of polynomials over the base field is defined over it"),
        Err(_) => a.gcd_prs(b),
    }
}

fn trivial(a: &MultiPoly, b: &MultiPoly) -> Option<MultiPoly> {
    let one = MultiPoly::one(a.field(), a.nvars());
    if a.is_zero() {
        return Some(b.monic());
    }
    if b.is_zero() {
        return Some(a.monic());
    }
    if a.is_constant() || b.is_constant() {
        return Some(one);
    }
    if a.terms().len() == 1 || b.terms().len() == 1 {
        let mono = a
            .terms()
            .iter()
            .chain(b.terms())
            .map(|t| t.0)
            .reduce(|x, y| Mono::min(&x, &y))
            .unwrap();
        return Some(MultiPoly::term(a.field(), a.nvars(), mono, 1));
    }
    let (va, vb) = (a.vars_present(), b.vars_present());
    if va.len() == 1 && va == vb {
        let v = va[0];
        let g = a.to_unipoly(v).unwrap().gcd(&b.to_unipoly(v).unwrap());
        return Some(MultiPoly::from_unipoly(&g, a.nvars(), v));
    }
    None
}

/// Gcd up to a unit.
fn rec(a: &MultiPoly, b: &MultiPoly) -> MultiPoly {
    if let Some(g) = trivial(a, b) {
        return g;
    }
    let mut vars = a.vars_present();
    vars.extend(b.vars_present());
    let v = *vars.iter().max().unwrap();
    if a.degree_in(v) == 0 {
        return rec(a, &content(b, v));
    }
    if b.degree_in(v) == 0 {
        return rec(&content(a, v), b);
    }
    let (ca, cb) = (content(a, v), content(b, v));
    let c = rec(&ca, &cb);
    let pa = a.div_exact(&ca).expect("content divides");
    let pb = b.div_exact(&cb).expect("content divides");
    c.mul(&primitive(&pa, &pb, v))
}

fn content(a: &MultiPoly, v: usize) -> MultiPoly {
    let mut g = MultiPoly::zero(a.field(), a.nvars());
    for c in a.coeffs_in(v) {
        if c.is_zero() {
            continue;
        }
        g = rec(&g, &c);
        if g.is_constant() {
            return MultiPoly::one(a.field(), a.nvars());
        }
    }
    g
}

/// Gcd of two polynomials primitive in `v`, both of positive degree in `v`.
fn primitive(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    let f = a.field().clone();
    let n = a.nvars();
    let mut others: Vec<usize> = a
        .vars_present()
        .into_iter()
        .chain(b.vars_present())
        .filter(|&w| w != v)
        .collect();
    others.sort_unstable();
    others.dedup();
    let Some(&z) = others.first() else {
        return trivial(a, b).expect("univariate case");
    };
    let lca = a.coeffs_in(v).pop().unwrap();
    let lcb = b.coeffs_in(v).pop().unwrap();
    let gamma = rec(&lca, &lcb);
    let bound = gamma.degree_in(z) + a.degree_in(z).min(b.degree_in(z));
    let zv = MultiPoly::var(&f, n, z);
    let mut interp: Option<MultiPoly> = None;
    let mut modulus = MultiPoly::one(&f, n);
    let mut used = 0i64;
    let mut dv = i64::MAX;
    for alpha in f.elements() {
        let ga = gamma.eval_var(z, alpha);
        if ga.is_zero() {
            continue;
        }
        let img = rec(&a.eval_var(z, alpha), &b.eval_var(z, alpha));
        let d = img.degree_in(v);
        if d == 0 {
            return MultiPoly::one(&f, n);
        }
        if d > dv {
            continue;
        }
        if d < dv {
            dv = d;
            interp = None;
            modulus = MultiPoly::one(&f, n);
            used = 0;
        }
        let lc = img.coeffs_in(v).pop().unwrap();
        let Some(scale) = ga.div_exact(&lc) else {
            continue;
        };
        let img = img.mul(&scale);
        let (next, stable) = match &interp {
            None => (img, false),
            Some(g) => {
                let diff = img.sub(&g.eval_var(z, alpha));
                if diff.is_zero() {
                    (g.clone(), true)
                } else {
                    let m_at = modulus.eval_var(z, alpha).lc();
                    let step = diff.mul(&modulus).scale(f.inv(m_at).unwrap());
                    (g.add(&step), false)
                }
            }
        };
        modulus = modulus.mul(&zv.sub(&MultiPoly::constant(&f, n, alpha)));
        used += 1;
        if stable || used > bound {
            let h = next.primitive_part_in(v);
            if a.div_exact(&h).is_some() && b.div_exact(&h).is_some() {
                return h;
            }
        }
        interp = Some(next);
    }
    a.gcd_prs(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::make_field;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random(
        f: &crate::algebra::field::FieldDesc,
        n: usize,
        d: u32,
        rng: &mut ChaCha8Rng,
    ) -> MultiPoly {
        let terms = (0..6).map(|_| {
            let mut m = Mono::one();
            for v in 0..n {
                m = m.with(v, rng.gen_range(0..=d));
            }
            (m, f.random(rng))
        });
        MultiPoly::from_terms(f, n, terms)
    }

    #[test]
    fn matches_known_factors() {
        for (p, k) in [(2, 1), (3, 1), (2, 2), (101, 1)] {
            let f = make_field(p, k, None).unwrap();
            let mut rng = ChaCha8Rng::seed_from_u64(p);
            for _ in 0..10 {
                let g = random(&f, 3, 2, &mut rng);
                let a = random(&f, 3, 2, &mut rng);
                let b = random(&f, 3, 2, &mut rng);
                if g.is_zero() || a.is_zero() || b.is_zero() {
                    continue;
                }
                let x = a.mul(&g);
                let y = b.mul(&g);
                let h = gcd(&x, &y);
                assert!(x.div_exact(&h).is_some() && y.div_exact(&h).is_some());
                assert!(h.div_exact(&g.monic()).is_some());
                assert_eq!(h, x.gcd_prs(&y));
            }
        }
    }
}
