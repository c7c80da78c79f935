//! Multivariate factorization over finite fields.
//!
//! Squarefree decomposition, then for each squarefree part: specialization
//! to a univariate image, linear multifactor Hensel lifting in the
//! translated variables with total-degree truncation, and subset
//! recombination. When the field is too small for a good specialization the
//! polynomial is factored over an extension and conjugate factors are merged
//! back along Frobenius orbits.

use std::cmp::Ordering;
use std::collections::btree_map::Entry;
use std::collections::BTreeMap;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::field::{embed, Elem, FieldDesc};
use crate::algebra::multipoly::{Mono, MultiPoly};
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Extra lifting precision used by the trace filter during recombination.
const EXTRA_PRECISION: usize = 3;
/// Good evaluation points compared before lifting.
const GOOD_POINTS: usize = 6;
const POINT_TRIES: usize = 96;
const MAX_EXT_SIZE: u64 = 1 << 40;

pub fn cmp_canonical(a: &MultiPoly, b: &MultiPoly) -> Ordering {
    a.total_degree()
        .cmp(&b.total_degree())
        .then(a.num_terms().cmp(&b.num_terms()))
        .then_with(|| a.terms().iter().cmp(b.terms().iter()))
}

/// Univariate image `g(v; w = a)` (the `v` entry of `a` is ignored).
pub fn specialize(g: &MultiPoly, v: usize, a: &[Elem]) -> UniPoly {
    let f = g.field();
    let d = g.degree_in(v).max(0) as usize;
    let mut c = vec![0; d + 1];
    for &(m, coef) in g.terms() {
        let mut t = coef;
        for (i, &x) in a.iter().enumerate().take(g.nvars()) {
            if i != v && m.get(i) > 0 {
                t = f.mul(t, f.pow(x, m.get(i) as u64));
            }
        }
        let e = m.get(v) as usize;
        c[e] = f.add(c[e], t);
    }
    UniPoly::new(f, c)
}

fn pth_root(g: &MultiPoly) -> MultiPoly {
    let f = g.field();
    let p = f.characteristic() as u16;
    MultiPoly::from_terms(
        f,
        g.nvars(),
        g.terms().iter().map(|&(m, c)| {
            let mut r = m;
            for e in r.0.iter_mut() {
                debug_assert_eq!(*e % p, 0);
                *e /= p;
            }
            (r, f.frobenius_root(c, 1))
        }),
    )
}

/// Deterministic stream of candidate points in `K^nvars`: exhaustive when
/// the space is small, seeded random otherwise.
fn candidate_points(
    f: &FieldDesc,
    nvars: usize,
    tries: usize,
    rng: &mut ChaCha8Rng,
) -> Vec<Vec<Elem>> {
    let q = f.size();
    let total = (q as u128).checked_pow(nvars as u32).unwrap_or(u128::MAX);
    if total <= tries as u128 {
        let mut out = Vec::with_capacity(total as usize);
        for mut code in 0..total as u64 {
            let mut pt = vec![0; nvars];
            for x in pt.iter_mut() {
                *x = code % q;
                code /= q;
            }
            out.push(pt);
        }
        return out;
    }
    let mut out = vec![vec![0; nvars]];
    while out.len() < tries {
        out.push((0..nvars).map(|_| f.random(rng)).collect());
    }
    out
}

/// Squarefree certificate: `lc_v` constant and some specialization squarefree
/// of full degree.
fn squarefree_certificate(g: &MultiPoly, v: usize, rng: &mut ChaCha8Rng) -> bool {
    let cs = g.coeffs_in(v);
    let d = cs.len().saturating_sub(1);
    if d == 0 || !cs[d].is_constant() {
        return false;
    }
    for pt in candidate_points(g.field(), g.nvars(), 8, rng) {
        let u = specialize(g, v, &pt);
        if u.deg() == d as isize && u.is_squarefree() {
            return true;
        }
    }
    let f = g.field();
    let q = f.size();
    if q >= 64 {
        return false;
    }
    let mut s = 2;
    while q.pow(s) < 64 {
        s += 1;
    }
    let Ok(big) = f.extension(s) else {
        return false;
    };
    let Ok(e) = embed(f, &big) else { return false };
    let gb = g.embed(&e);
    (0..8).any(|_| {
        let pt: Vec<Elem> = (0..g.nvars()).map(|_| big.random(rng)).collect();
        let u = specialize(&gb, v, &pt);
        u.deg() == d as isize && u.is_squarefree()
    })
}

/// Pairwise coprime squarefree parts with multiplicities (monic, grlex).
pub fn squarefree_decomposition(g: &MultiPoly) -> Vec<(MultiPoly, usize)> {
    let mut rng = ChaCha8Rng::seed_from_u64(0x5f);
    let mut out = sqf(g, &mut rng);
    out.retain(|(h, _)| !h.is_constant());
    out.sort_by(|a, b| a.1.cmp(&b.1).then_with(|| cmp_canonical(&a.0, &b.0)));
    out
}

fn sqf(g: &MultiPoly, rng: &mut ChaCha8Rng) -> Vec<(MultiPoly, usize)> {
    if g.is_constant() {
        return Vec::new();
    }
    let p = g.field().characteristic() as usize;
    let sep: Vec<usize> = g
        .vars_present()
        .into_iter()
        .filter(|&v| !g.partial(v).is_zero())
        .collect();
    // a constant leading coefficient makes the content trivial
    for &v in &sep {
        if g.coeffs_in(v).last().unwrap().is_constant() && squarefree_certificate(g, v, rng) {
            return vec![(g.monic(), 1)];
        }
    }
    let v = sep.first().copied();
    let Some(v) = v else {
        return sqf(&pth_root(g), rng)
            .into_iter()
            .map(|(h, m)| (h, m * p))
            .collect();
    };
    let c = g.content_in(v);
    let mut out = sqf(&c, rng);
    let pp = g.div_exact(&c).expect("content divides");
    if squarefree_certificate(&pp, v, rng) {
        out.push((pp.monic(), 1));
        return out;
    }
    let mut a = pp.gcd(&pp.partial(v));
    let mut w = pp.div_exact(&a).expect("gcd divides");
    let mut i = 1;
    while !w.is_constant() {
        let y = w.gcd(&a);
        let z = w.div_exact(&y).unwrap();
        if !z.is_constant() {
            out.push((z.monic(), i));
        }
        i += 1;
        a = a.div_exact(&y).unwrap();
        w = y;
    }
    if !a.is_constant() {
        out.extend(sqf(&a, rng));
    }
    out
}

pub fn is_squarefree(g: &MultiPoly) -> bool {
    !g.is_zero() && squarefree_decomposition(g).iter().all(|(_, m)| *m == 1)
}

/// Complete factorization into monic (grlex) irreducible factors over the
/// coefficient field, with multiplicities. `g = lc(g) * prod h^m`.
pub fn factor_multivariate(g: &MultiPoly, seed: u64) -> Result<Vec<(MultiPoly, usize)>> {
    assert!(!g.is_zero(), "factorization of the zero polynomial");
    let mut out: Vec<(MultiPoly, usize)> = Vec::new();
    if g.is_constant() {
        return Ok(out);
    }
    let f = g.field();
    let mono = g
        .terms()
        .iter()
        .map(|t| t.0)
        .reduce(|a, b| Mono::min(&a, &b))
        .unwrap();
    for v in 0..g.nvars() {
        if mono.get(v) > 0 {
            out.push((MultiPoly::var(f, g.nvars(), v), mono.get(v) as usize));
        }
    }
    let rest = g
        .div_exact(&MultiPoly::term(f, g.nvars(), mono, 1))
        .unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for (h, m) in sqf(&rest, &mut rng) {
        for irr in factor_squarefree(&h, &mut rng, 0)? {
            out.push((irr.monic(), m));
        }
    }
    out.sort_by(|a, b| cmp_canonical(&a.0, &b.0).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// Product of factors with multiplicities, times `unit`.
pub fn expand_factors(factors: &[(MultiPoly, usize)], unit: &MultiPoly) -> MultiPoly {
    factors
        .iter()
        .fold(unit.clone(), |acc, (h, m)| acc.mul(&h.pow(*m as u32)))
}

fn factor_squarefree(g: &MultiPoly, rng: &mut ChaCha8Rng, depth: u32) -> Result<Vec<MultiPoly>> {
    if g.is_constant() {
        return Ok(Vec::new());
    }
    let vars = g.vars_present();
    if vars.len() == 1 {
        let v = vars[0];
        let u = g.to_unipoly(v).unwrap();
        let seed = rand::Rng::gen::<u64>(rng);
        return Ok(u
            .factor(seed)
            .into_iter()
            .map(|(h, _)| MultiPoly::from_unipoly(&h, g.nvars(), v))
            .collect());
    }
    let sep: Vec<usize> = vars
        .iter()
        .copied()
        .filter(|&v| !g.partial(v).is_zero())
        .collect();
    debug_assert!(!sep.is_empty());
    // prefer a main variable with constant leading coefficient, then small degree
    let v = *sep
        .iter()
        .min_by_key(|&&v| {
            let lc_const = g.coeffs_in(v).last().unwrap().is_constant();
            (!lc_const, g.degree_in(v))
        })
        .unwrap();
    if !squarefree_certificate(g, v, rng) {
        let g1 = g.gcd(&g.partial(v));
        if !g1.is_constant() {
            let mut out = factor_squarefree(&g1, rng, depth)?;
            out.extend(factor_squarefree(&g.div_exact(&g1).unwrap(), rng, depth)?);
            return Ok(out);
        }
        let c = g.content_in(v);
        if !c.is_constant() {
            let mut out = factor_squarefree(&c, rng, depth)?;
            out.extend(factor_squarefree(&g.div_exact(&c).unwrap(), rng, depth)?);
            return Ok(out);
        }
    }
    if g.coeffs_in(v).last().unwrap().is_constant() {
        return match hensel_factor(g, v, rng)? {
            Some(fs) => Ok(fs),
            None => factor_via_extension(g, rng, depth),
        };
    }
    // shear x_i -> x_i + c_i x_v so that the leading coefficient in v is constant
    let top = g.homogeneous_part(g.total_degree() as u32);
    let others: Vec<usize> = vars.iter().copied().filter(|&w| w != v).collect();
    let f = g.field();
    for pt in candidate_points(f, others.len(), POINT_TRIES, rng) {
        let mut full = vec![0; g.nvars()];
        for (k, &w) in others.iter().enumerate() {
            full[w] = pt[k];
        }
        full[v] = 1;
        if top.eval(&full) == 0 {
            continue;
        }
        let shear = |sign: i64| -> Vec<MultiPoly> {
            (0..g.nvars())
                .map(|i| {
                    let xi = MultiPoly::var(f, g.nvars(), i);
                    if others.contains(&i) {
                        let c = f.mul(full[i], f.from_int(sign));
                        xi.add(&MultiPoly::var(f, g.nvars(), v).scale(c))
                    } else {
                        xi
                    }
                })
                .collect()
        };
        let gs = g.substitute(&shear(1));
        let back = shear(-1);
        let fs = match hensel_factor(&gs, v, rng)? {
            Some(fs) => fs,
            None => return factor_via_extension(g, rng, depth),
        };
        return Ok(fs.iter().map(|h| h.substitute(&back).monic()).collect());
    }
    factor_via_extension(g, rng, depth)
}

fn factor_via_extension(g: &MultiPoly, rng: &mut ChaCha8Rng, depth: u32) -> Result<Vec<MultiPoly>> {
    let f = g.field();
    let q = f.size();
    let need = (4 * (g.total_degree().max(1) as u64).pow(2)).max(32);
    let mut s = 2u32;
    while (q as u128).pow(s) < need as u128 {
        s += 1;
    }
    if depth > 2 || (q as u128).pow(s) > MAX_EXT_SIZE as u128 {
        return Err(Error::Cap(format!(
            "no usable specialization for {g} over {f}"
        )));
    }
    let big = f.extension(s)?;
    let e = embed(f, &big)?;
    let gb = g.embed(&e);
    let local = factor_squarefree(&gb, rng, depth + 1)?;
    let k = f.degree();
    let frob = |h: &MultiPoly| h.map_coeffs(&big, |c| big.frobenius_power(c, k));
    let mut used = vec![false; local.len()];
    let mut out = Vec::new();
    let local: Vec<MultiPoly> = local.into_iter().map(|h| h.monic()).collect();
    for i in 0..local.len() {
        if used[i] {
            continue;
        }
        used[i] = true;
        let mut prod = local[i].clone();
        let mut cur = frob(&local[i]);
        while cur != local[i] {
            let j = (0..local.len())
                .find(|&j| !used[j] && local[j] == cur)
                .ok_or_else(|| Error::Internal("Frobenius orbit left the factor set".into()))?;
            used[j] = true;
            prod = prod.mul(&cur);
            cur = frob(&cur);
        }
        let down = prod.preimage(&e).ok_or_else(|| {
            Error::Internal("orbit product not defined over the base field".into())
        })?;
        out.push(down);
    }
    Ok(out)
}

type Comp = BTreeMap<Mono, UniPoly>;

fn comp_add_mul(acc: &mut Comp, a: &Comp, b: &Comp) {
    for (ma, pa) in a {
        for (mb, pb) in b {
            let prod = pa.mul(pb);
            match acc.entry(ma.mul(mb)) {
                Entry::Vacant(e) => {
                    e.insert(prod);
                }
                Entry::Occupied(mut e) => {
                    let s = e.get().add(&prod);
                    *e.get_mut() = s;
                }
            }
        }
    }
}

fn comp_clean(c: &mut Comp) {
    c.retain(|_, p| !p.is_zero());
}

/// Degree of `g` in all variables except `v`.
fn weighted_degree(g: &MultiPoly, v: usize) -> usize {
    g.terms()
        .iter()
        .map(|(m, _)| (m.degree() - m.get(v)) as usize)
        .max()
        .unwrap_or(0)
}

fn translate(g: &MultiPoly, v: usize, a: &[Elem], sign: i64) -> MultiPoly {
    let f = g.field();
    let images: Vec<MultiPoly> = (0..g.nvars())
        .map(|i| {
            let xi = MultiPoly::var(f, g.nvars(), i);
            if i == v || a[i] == 0 {
                xi
            } else {
                xi.add(&MultiPoly::constant(
                    f,
                    g.nvars(),
                    f.mul(a[i], f.from_int(sign)),
                ))
            }
        })
        .collect();
    if a.iter().enumerate().all(|(i, &x)| i == v || x == 0) {
        return g.clone();
    }
    g.substitute(&images)
}

fn graded(g: &MultiPoly, v: usize, len: usize) -> Vec<Comp> {
    let f = g.field();
    let mut comps: Vec<Comp> = vec![Comp::new(); len];
    for &(m, c) in g.terms() {
        let k = (m.degree() - m.get(v)) as usize;
        if k >= len {
            continue;
        }
        let e = m.get(v) as usize;
        let t = UniPoly::monomial(f, c, e);
        match comps[k].entry(m.with(v, 0)) {
            Entry::Vacant(en) => {
                en.insert(t);
            }
            Entry::Occupied(mut en) => {
                let s = en.get().add(&t);
                *en.get_mut() = s;
            }
        }
    }
    for c in comps.iter_mut() {
        comp_clean(c);
    }
    comps
}

fn ungraded(comps: &[Comp], v: usize, field: &FieldDesc, nvars: usize) -> MultiPoly {
    MultiPoly::from_terms(
        field,
        nvars,
        comps.iter().flat_map(|c| {
            c.iter().flat_map(move |(m, u)| {
                u.coeffs()
                    .iter()
                    .enumerate()
                    .filter(|(_, &x)| x != 0)
                    .map(move |(e, &x)| (m.with(v, e as u32), x))
            })
        }),
    )
}

/// Multifactor Hensel lifting of `G = prod u_i` (mod the ideal of the
/// translated variables) up to total degree `< prec`.
fn hensel_lift(g: &[Comp], u: &[UniPoly], prec: usize) -> Vec<Vec<Comp>> {
    let s = u.len();
    let inv: Vec<UniPoly> = (0..s)
        .map(|i| {
            let mut others = UniPoly::one(u[i].field());
            for (j, uj) in u.iter().enumerate() {
                if j != i {
                    others = others.mulmod(uj, &u[i]);
                }
            }
            others.inv_mod(&u[i]).expect("coprime local factors")
        })
        .collect();
    let one = Mono::one();
    let mut lifted: Vec<Vec<Comp>> = u
        .iter()
        .map(|ui| vec![Comp::from([(one, ui.clone())])])
        .collect();
    let mut prefix: Vec<Vec<Comp>> = Vec::with_capacity(s);
    let mut acc = u[0].clone();
    prefix.push(vec![Comp::from([(one, acc.clone())])]);
    for ui in &u[1..] {
        acc = acc.mul(ui);
        prefix.push(vec![Comp::from([(one, acc.clone())])]);
    }
    let empty = Comp::new();
    let recompute = |lifted: &Vec<Vec<Comp>>, prefix: &mut Vec<Vec<Comp>>, k: usize| {
        prefix[0][k] = lifted[0][k].clone();
        for j in 1..s {
            let mut c = Comp::new();
            for i in 0..=k {
                comp_add_mul(&mut c, &prefix[j - 1][i], &lifted[j][k - i]);
            }
            comp_clean(&mut c);
            prefix[j][k] = c;
        }
    };
    for k in 1..prec {
        for j in 0..s {
            lifted[j].push(Comp::new());
            prefix[j].push(Comp::new());
        }
        recompute(&lifted, &mut prefix, k);
        let gk = g.get(k).unwrap_or(&empty);
        let mut err = gk.clone();
        for (m, p) in &prefix[s - 1][k] {
            let cur = err
                .get(m)
                .cloned()
                .unwrap_or_else(|| UniPoly::zero(p.field()));
            err.insert(*m, cur.sub(p));
        }
        comp_clean(&mut err);
        if err.is_empty() {
            continue;
        }
        for (m, e) in &err {
            for i in 0..s {
                let d = e.mul(&inv[i]).rem(&u[i]);
                if !d.is_zero() {
                    lifted[i][k].insert(*m, d);
                }
            }
        }
        recompute(&lifted, &mut prefix, k);
    }
    lifted
}

/// Coefficient of `v^(deg-1)` in each graded component.
fn trace_series(lifted: &[Comp], deg: usize) -> Vec<BTreeMap<Mono, Elem>> {
    lifted
        .iter()
        .map(|c| {
            c.iter()
                .filter_map(|(m, u)| {
                    let x = if deg == 0 { 0 } else { u.coeff(deg - 1) };
                    (x != 0).then_some((*m, x))
                })
                .collect()
        })
        .collect()
}

/// Factor a squarefree polynomial with constant leading coefficient in `v`,
/// separable in `v`, primitive. `Ok(None)` asks for an extension field.
fn hensel_factor(g: &MultiPoly, v: usize, rng: &mut ChaCha8Rng) -> Result<Option<Vec<MultiPoly>>> {
    let f = g.field().clone();
    let nv = g.nvars();
    let g = g.scale(f.inv(g.coeffs_in(v).last().unwrap().lc()).unwrap());
    let n = g.degree_in(v) as usize;
    if n == 0 {
        return Ok(Some(Vec::new()));
    }
    if n == 1 {
        return Ok(Some(vec![g]));
    }
    let others: Vec<usize> = (0..nv).filter(|&w| w != v && g.degree_in(w) > 0).collect();
    let mut best: Option<(Vec<Elem>, Vec<UniPoly>)> = None;
    let mut good = 0;
    for pt in candidate_points(&f, others.len(), POINT_TRIES, rng) {
        let mut full = vec![0; nv];
        for (k, &w) in others.iter().enumerate() {
            full[w] = pt[k];
        }
        let u = specialize(&g, v, &full);
        if u.deg() != n as isize || !u.is_squarefree() {
            continue;
        }
        let seed = rand::Rng::gen::<u64>(rng);
        let fac: Vec<UniPoly> = u.factor(seed).into_iter().map(|(h, _)| h).collect();
        if fac.len() == 1 {
            return Ok(Some(vec![g]));
        }
        if best.as_ref().is_none_or(|b| fac.len() < b.1.len()) {
            best = Some((full, fac));
        }
        good += 1;
        if good >= GOOD_POINTS {
            break;
        }
    }
    let Some((a, local)) = best else {
        return Ok(None);
    };
    let bound = weighted_degree(&g, v);
    let prec = bound + 1 + EXTRA_PRECISION;
    let gt = translate(&g, v, &a, 1);
    let comps = graded(&gt, v, prec);
    let lifted = hensel_lift(&comps, &local, prec);
    let traces: Vec<_> = lifted
        .iter()
        .zip(&local)
        .map(|(l, u)| trace_series(l, u.deg() as usize))
        .collect();

    let mut remaining: Vec<usize> = (0..local.len()).collect();
    let mut rest = g.clone();
    let mut found = Vec::new();
    let mut t = 1;
    'outer: while 2 * t <= remaining.len() {
        let rbound = weighted_degree(&rest, v);
        let mut idx: Vec<usize> = (0..t).collect();
        loop {
            let subset: Vec<usize> = idx.iter().map(|&i| remaining[i]).collect();
            if let Some(h) = try_subset(
                &subset, &lifted, &traces, rbound, prec, v, &a, &rest, nv, &f,
            ) {
                if let Some(q) = rest.div_exact(&h) {
                    found.push(h);
                    rest = q;
                    remaining.retain(|i| !subset.contains(i));
                    continue 'outer;
                }
            }
            // next combination
            let mut i = t;
            loop {
                if i == 0 {
                    t += 1;
                    continue 'outer;
                }
                i -= 1;
                if idx[i] < remaining.len() - t + i {
                    idx[i] += 1;
                    for j in i + 1..t {
                        idx[j] = idx[j - 1] + 1;
                    }
                    break;
                }
            }
        }
    }
    if !rest.is_constant() {
        found.push(rest);
    }
    Ok(Some(found))
}

#[allow(clippy::too_many_arguments)]
fn try_subset(
    subset: &[usize],
    lifted: &[Vec<Comp>],
    traces: &[Vec<BTreeMap<Mono, Elem>>],
    rbound: usize,
    prec: usize,
    v: usize,
    a: &[Elem],
    rest: &MultiPoly,
    nv: usize,
    f: &FieldDesc,
) -> Option<MultiPoly> {
    for k in rbound + 1..prec {
        let mut sum: BTreeMap<Mono, Elem> = BTreeMap::new();
        for &i in subset {
            for (m, x) in &traces[i][k] {
                let e = sum.entry(*m).or_insert(0);
                *e = f.add(*e, *x);
            }
        }
        if sum.values().any(|&x| x != 0) {
            return None;
        }
    }
    let len = rbound + 1;
    let mut prod: Vec<Comp> = lifted[subset[0]][..len].to_vec();
    for &i in &subset[1..] {
        let mut next = vec![Comp::new(); len];
        for (k, slot) in next.iter_mut().enumerate() {
            for j in 0..=k {
                comp_add_mul(slot, &prod[j], &lifted[i][k - j]);
            }
            comp_clean(slot);
        }
        prod = next;
    }
    let h = ungraded(&prod, v, f, nv);
    let h = translate(&h, v, a, -1);
    (rest.degree_in(v) >= h.degree_in(v)).then_some(h)
}

/// Factorization over `GF(q^m)` of a polynomial given over `GF(q)`.
pub fn factor_over_extension(g: &MultiPoly, m: u32, seed: u64) -> Result<Vec<(MultiPoly, usize)>> {
    let f = g.field();
    if m == 1 {
        return factor_multivariate(g, seed);
    }
    let big = f.extension(m)?;
    let e = embed(f, &big)?;
    factor_multivariate(&g.embed(&e), seed)
}

fn prime_divisors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2;
    while d * d <= n {
        if n.is_multiple_of(d) {
            out.push(d);
            while n.is_multiple_of(d) {
                n /= d;
            }
        }
        d += 1;
    }
    if n > 1 {
        out.push(n);
    }
    out
}

/// Irreducible over the algebraic closure (and squarefree).
///
/// If an irreducible `g` splits over the closure, its absolute factors are
/// conjugate, `s` of them with `s | deg g`, and `g` already splits over
/// `GF(q^l)` for any prime `l | s`. Checking the prime divisors of the total
/// degree therefore suffices.
pub fn absolutely_irreducible(g: &MultiPoly, seed: u64) -> Result<bool> {
    if g.is_zero() || g.is_constant() {
        return Ok(false);
    }
    let base = factor_multivariate(g, seed)?;
    if base.len() != 1 || base[0].1 != 1 {
        return Ok(false);
    }
    let d = g.total_degree() as u64;
    for l in prime_divisors(d) {
        if factor_over_extension(g, l as u32, seed)?.len() > 1 {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::make_field;

    fn vars(f: &FieldDesc, n: usize) -> Vec<MultiPoly> {
        (0..n).map(|i| MultiPoly::var(f, n, i)).collect()
    }

    fn check_product(g: &MultiPoly, fs: &[(MultiPoly, usize)]) {
        let unit = MultiPoly::constant(g.field(), g.nvars(), g.lc());
        assert_eq!(&expand_factors(fs, &unit), g);
    }

    #[test]
    fn frobenius_square() {
        let f = make_field(2, 1, None).unwrap();
        let x = vars(&f, 3);
        let g = x[1].pow(2).add(&x[2].pow(2));
        let fs = factor_multivariate(&g, 0).unwrap();
        assert_eq!(fs, vec![(x[1].add(&x[2]), 2)]);
    }

    #[test]
    fn irreducible_examples() {
        let f2 = make_field(2, 1, None).unwrap();
        let x = vars(&f2, 3);
        let g = x[0].pow(3).mul(&x[1]).sub(&x[2].pow(4));
        assert_eq!(factor_multivariate(&g, 0).unwrap().len(), 1);
        let f3 = make_field(3, 1, None).unwrap();
        let y = vars(&f3, 3);
        let h = y[0].mul(&y[1]).sub(&y[2].pow(2));
        assert_eq!(factor_multivariate(&h, 0).unwrap(), vec![(h.clone(), 1)]);
    }

    #[test]
    fn splits_products() {
        let f = make_field(3, 1, None).unwrap();
        let x = vars(&f, 3);
        let one = MultiPoly::one(&f, 3);
        let a = x[0].mul(&x[1]).add(&x[2].pow(2)).add(&one);
        let b = x[0].add(&x[1]).add(&x[2]);
        let c = x[1].pow(3).sub(&x[0]).add(&x[2].mul(&x[0]));
        let g = a.mul(&b).mul(&b).mul(&c);
        let fs = factor_multivariate(&g, 7).unwrap();
        check_product(&g, &fs);
        assert_eq!(fs.len(), 3);
    }

    #[test]
    fn absolute_irreducibility() {
        let f3 = make_field(3, 1, None).unwrap();
        let x = vars(&f3, 3);
        assert!(!absolutely_irreducible(&x[1].pow(2).add(&x[2].pow(2)), 0).unwrap());
        let cusp = x[0].pow(2).mul(&x[1]).sub(&x[2].pow(3));
        assert!(absolutely_irreducible(&cusp, 0).unwrap());
        let sq = x[1].add(&x[2]).pow(2);
        assert!(!absolutely_irreducible(&sq, 0).unwrap());
    }

    #[test]
    fn small_field_needs_extension() {
        // every F_2 specialization of x0 is a square mod stuff: x1^2 + x1 + x0^2 + x0
        // = (x1 + x0)(x1 + x0 + 1)
        let f = make_field(2, 1, None).unwrap();
        let x = vars(&f, 2);
        let one = MultiPoly::one(&f, 2);
        let g = x[1].add(&x[0]).mul(&x[1].add(&x[0]).add(&one));
        let fs = factor_multivariate(&g, 1).unwrap();
        check_product(&g, &fs);
        assert_eq!(fs.len(), 2);
    }
}
