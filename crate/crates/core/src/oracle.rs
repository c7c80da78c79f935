//! Brute-force verifiers: linear automorphism enumeration and splitting towers.

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::factor::factor_multivariate;
use crate::algebra::field::{embed, Elem, FieldDesc};
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::unipoly::UniPoly;
use crate::algebra::upoly::resultant_sylvester_in;
use crate::error::{Error, Result};
use crate::galois::{project, GaloisReport, PointKind, Status};
use crate::geometry::{substitute_linear, Hypersurface, ProjPoint, ProjTransform};
use crate::par::{self, Mode};

pub const DEFAULT_BUDGET: u64 = 100_000_000;
/// Largest intermediate field degree the cross-check tower builds; beyond it
/// only a lower bound is reported, which already decides the Galois bit.
pub const TOWER_EXACT_CAP: usize = 6;

/// `M` with `F∘M = c·F`, `M·P = P`, acting trivially on `X_0..X_n` in adapted
/// coordinates.
#[derive(Clone, Debug)]
pub struct LinearAutomorphism {
    pub matrix: ProjTransform,
    pub scalar: Elem,
}

#[derive(Clone, Debug)]
pub struct PglSearch {
    pub automorphisms: Vec<LinearAutomorphism>,
    pub degree: usize,
    /// `|automorphisms| = degree`, which proves the point Galois.
    pub full_group: bool,
    pub searched: u64,
    pub field: FieldDesc,
}

/// Enumerate `[[I, 0], [r, κ]]` in adapted coordinates over `GF(q^m)`.
pub fn pgl_automorphism_search(
    x: &Hypersurface,
    p: &ProjPoint,
    m: u32,
    budget: u64,
    mode: Mode,
) -> Result<PglSearch> {
    let (xm, e) = x.extend(m)?;
    let pm = p.embed(&e);
    let proj = project(&xm, &pm)?;
    let fld = xm.field().clone();
    let n2 = xm.nvars();
    let q = fld.size();
    let total = q
        .checked_pow(n2 as u32 - 1)
        .and_then(|a| a.checked_mul(q - 1))
        .filter(|&t| t <= budget)
        .ok_or_else(|| {
            Error::Cap(format!(
                "linear automorphism search over {fld} exceeds budget {budget}"
            ))
        })?;
    let fp = substitute_linear(xm.poly(), &proj.adapted)?;
    let d = xm.degree() as u64;
    let top = match proj.kind {
        PointKind::Outer => d,
        PointKind::Inner => d - 1,
    };
    let mut rng = ChaCha8Rng::seed_from_u64(0x5eed);
    let probes: Vec<(Vec<Elem>, UniPoly)> = (0..3)
        .map(|_| {
            let v: Vec<Elem> = (0..n2).map(|_| fld.random(&mut rng)).collect();
            let mut g = fp.clone();
            for (i, &c) in v[..n2 - 1].iter().enumerate() {
                g = g.eval_var(i, c);
            }
            let u = g.to_unipoly(n2 - 1).unwrap_or_else(|| UniPoly::zero(&fld));
            (v, u)
        })
        .collect();
    let decode = |idx: u64| -> (Vec<Elem>, Elem) {
        let mut c = idx;
        let kappa = c % (q - 1) + 1;
        c /= q - 1;
        let r: Vec<Elem> = (0..n2 - 1)
            .map(|_| {
                let a = c % q;
                c /= q;
                a
            })
            .collect();
        (r, kappa)
    };
    let hits: Vec<(ProjTransform, Elem)> = par::filter_map_range(mode, total, |idx| {
        let (r, kappa) = decode(idx);
        let c = fld.pow(kappa, top);
        for (v, u) in &probes {
            let last = r
                .iter()
                .zip(v)
                .fold(fld.mul(kappa, v[n2 - 1]), |acc, (&a, &b)| {
                    fld.add(acc, fld.mul(a, b))
                });
            if u.eval(last) != fld.mul(c, u.eval(v[n2 - 1])) {
                return None;
            }
        }
        let mut mat = crate::algebra::linalg::identity(n2);
        mat[n2 - 1] = r.clone();
        mat[n2 - 1].push(kappa);
        let nm = ProjTransform::new(&fld, mat).ok()?;
        let lhs = substitute_linear(&fp, &nm).ok()?;
        (lhs == fp.scale(c)).then_some((nm, c))
    });
    let ainv = proj.adapted.inverse();
    let automorphisms: Vec<LinearAutomorphism> = hits
        .into_iter()
        .map(|(nm, _)| {
            let mm = proj.adapted.compose(&nm).compose(&ainv);
            let g = substitute_linear(xm.poly(), &mm).unwrap();
            let (mono, a) = xm.poly().leading().unwrap();
            let c = fld.div(g.coeff(&mono), a).unwrap();
            LinearAutomorphism {
                matrix: mm,
                scalar: c,
            }
        })
        .collect();
    for a in &automorphisms {
        if substitute_linear(xm.poly(), &a.matrix)? != xm.poly().scale(a.scalar)
            || a.matrix.apply(&pm) != pm
        {
            return Err(Error::Internal(
                "linear automorphism failed verification".into(),
            ));
        }
        for b in &automorphisms {
            let c = a.matrix.compose(&b.matrix);
            if !automorphisms.iter().any(|z| z.matrix == c) {
                return Err(Error::Internal(
                    "linear automorphisms not closed under composition".into(),
                ));
            }
        }
    }
    let degree = proj.degree;
    Ok(PglSearch {
        full_group: automorphisms.len() == degree,
        automorphisms,
        degree,
        searched: total,
        field: fld,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct TowerReport {
    /// Splitting degree, or a lower bound when `exact` is false.
    pub degree: usize,
    pub exact: bool,
    /// Field degree after each step.
    pub steps: Vec<usize>,
    pub galois: bool,
    pub constants: String,
}

/// Splitting field degree of `f(x_1..x_n, y)` in `y` over `GF(q^m)(x)`, by
/// adjoining one root at a time. Each field is presented by a primitive
/// element `w` with minimal polynomial `h(x, w)`, and `f` is factored over it
/// through `res_w(h(w), f^(T - λw))`. `cap` bounds the field degree explored.
pub fn splitting_tower_degree(f: &MultiPoly, m: u32, cap: usize, seed: u64) -> Result<TowerReport> {
    let big = f.field().extension(m)?;
    let e = embed(f.field(), &big)?;
    let f = f.embed(&e);
    let nv = f.nvars();
    let n = nv - 1;
    if n + 2 > crate::algebra::multipoly::MAX_VARS {
        return Err(Error::Cap("too many variables for the tower".into()));
    }
    let dd = f.degree_in(n) as usize;
    let (t, w) = (n, n + 1);
    let nb = n + 2;
    // monic version of f in (x, T)
    let cs = f.coeffs_in(n);
    let lead = cs[dd].clone();
    let lift = |p: &MultiPoly| p.remap_vars(nb, &(0..nv).collect::<Vec<_>>());
    let mut terms = MultiPoly::zero(&big, nb);
    for (i, c) in cs.iter().enumerate() {
        let coef = if i == dd {
            MultiPoly::one(&big, nb)
        } else {
            lift(&c.mul(&lead.pow((dd - 1 - i) as u32)))
        };
        terms = terms.add(&coef.mul(&MultiPoly::var(&big, nb, t).pow(i as u32)));
    }
    let fhat = terms;
    let tv = MultiPoly::var(&big, nb, t);
    let wv = MultiPoly::var(&big, nb, w);
    let ident: Vec<MultiPoly> = (0..nb).map(|i| MultiPoly::var(&big, nb, i)).collect();
    // start with E = K(x), presented by h(w) = w
    let mut h = wv.clone();
    let mut deg_e = 1usize;
    let mut steps = Vec::new();
    loop {
        let mut found = None;
        for lam in tower_shifts(&big, nb, n, deg_e) {
            let mut sub = ident.clone();
            sub[t] = tv.sub(&lam.mul(&wv));
            let shifted = fhat.substitute(&sub);
            let norm = resultant_sylvester_in(&h, &shifted, w);
            let facs = factor_multivariate(&norm, seed)?;
            let facs: Vec<(MultiPoly, usize)> = facs
                .into_iter()
                .filter(|(g, _)| g.degree_in(t) > 0)
                .collect();
            if facs.iter().all(|(_, k)| *k == 1) {
                found = Some(facs);
                break;
            }
        }
        let Some(facs) = found else {
            return Err(Error::Inconclusive(
                "no squarefree norm in the tower".into(),
            ));
        };
        let degs: Vec<usize> = facs
            .iter()
            .map(|(g, _)| g.degree_in(t) as usize / deg_e)
            .collect();
        steps.push(deg_e);
        if degs.iter().all(|&k| k == 1) {
            return Ok(TowerReport {
                degree: deg_e,
                exact: true,
                steps,
                galois: deg_e == dd,
                constants: big.to_string(),
            });
        }
        let (g, k) = facs
            .iter()
            .zip(&degs)
            .filter(|(_, &k)| k > 1)
            .min_by_key(|(_, &k)| k)
            .map(|((g, _), &k)| (g.clone(), k))
            .unwrap();
        let next = deg_e * k;
        if next > cap {
            let bound = next.max(deg_e + 1);
            steps.push(bound);
            return Ok(TowerReport {
                degree: bound,
                exact: false,
                steps,
                galois: false,
                constants: big.to_string(),
            });
        }
        // the new primitive element is T, renamed to w
        let lc = g.coeffs_in(t).last().unwrap().lc();
        let g = g.scale(big.inv(lc).unwrap());
        let mut sub = ident.clone();
        sub[t] = wv.clone();
        sub[w] = tv.clone();
        h = g.substitute(&sub);
        deg_e = next;
    }
}

/// Shifts for the tower norm: `x_1 + c` first, then constants.
fn tower_shifts(f: &FieldDesc, nb: usize, n: usize, deg_e: usize) -> Vec<MultiPoly> {
    let consts: Vec<Elem> = f.elements().take(32).collect();
    let mut out = Vec::new();
    if deg_e == 1 {
        out.push(MultiPoly::zero(f, nb));
    }
    for i in 0..n {
        for &c in consts.iter().take(8) {
            out.push(MultiPoly::var(f, nb, i).add(&MultiPoly::constant(f, nb, c)));
        }
    }
    out.extend(consts.iter().map(|&c| MultiPoly::constant(f, nb, c)));
    out
}

/// Both oracles run against a finished verdict.
#[derive(Clone, Debug)]
pub struct CrossCheck {
    pub pgl: std::result::Result<PglSearch, Error>,
    pub tower: std::result::Result<TowerReport, Error>,
    /// The tower runs over `GF(q^tower_level)`.
    pub tower_level: u32,
    pub linear_level: u32,
    pub agrees: bool,
}

/// Constant level at which a geometrically Galois fiber already splits: the
/// Frobenius permutes the `D - 1` nontrivial automorphisms, so its order
/// divides `lcm(1..D-1)`. Falls back to 1 past `limit`.
pub fn visibility_level(q: u64, d: usize, limit: u64) -> u32 {
    let l = (1..d.max(2) as u64).fold(1u64, |a, k| a / gcd(a, k) * k);
    match u32::try_from(l) {
        Ok(l) if q.checked_pow(l).is_some_and(|v| v <= limit) => l,
        _ => 1,
    }
}

fn gcd(a: u64, b: u64) -> u64 {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

/// Compare a verdict from `is_galois` with both oracles. A partial linear
/// group proves nothing, so only a full one is compared.
pub fn cross_check(
    x: &Hypersurface,
    p: &ProjPoint,
    report: &GaloisReport,
    budget: u64,
    mode: Mode,
) -> Result<CrossCheck> {
    let claims = report.status == Status::Galois;
    let tower_level = if claims {
        report.m_used
    } else {
        visibility_level(x.field().size(), report.degree, 1 << 32)
    };
    let linear_level = if claims { report.m_used } else { 1 };
    let tower = if report.reason.as_deref() == Some("inseparable") {
        Err(Error::precondition(
            "inseparable",
            "the tower needs a separable fiber polynomial",
        ))
    } else {
        let f = project(x, p)?.dehomogenized();
        let cap = report.degree.max(TOWER_EXACT_CAP);
        splitting_tower_degree(&f, tower_level, cap, report.seed)
    };
    let pgl = pgl_automorphism_search(x, p, linear_level, budget, mode);
    let mut agrees = report.status != Status::Inconclusive;
    if let Ok(t) = &tower {
        agrees &= t.galois == claims;
    }
    if let Ok(s) = &pgl {
        agrees &= !s.full_group || claims;
    }
    Ok(CrossCheck {
        pgl,
        tower,
        tower_level,
        linear_level,
        agrees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::make_field;
    use crate::algebra::parse::{parse_point, parse_poly};

    #[test]
    fn artin_schreier_tower() {
        let k = make_field(3, 1, None).unwrap();
        let x = MultiPoly::var(&k, 2, 0);
        let y = MultiPoly::var(&k, 2, 1);
        let f = y.pow(3).sub(&y).sub(&x);
        let r = splitting_tower_degree(&f, 1, 24, 0).unwrap();
        assert_eq!(r.degree, 3);
        assert!(r.galois);
        let split = y.sub(&x).mul(&y.sub(&x).sub(&MultiPoly::one(&k, 2)));
        assert_eq!(splitting_tower_degree(&split, 1, 24, 0).unwrap().degree, 1);
        let k2 = make_field(2, 1, None).unwrap();
        let x2 = MultiPoly::var(&k2, 2, 0);
        let y2 = MultiPoly::var(&k2, 2, 1);
        let r = splitting_tower_degree(&y2.pow(3).sub(&x2), 1, 24, 0).unwrap();
        assert_eq!(r.degree, 6);
        assert!(!r.galois);
        assert_eq!(
            splitting_tower_degree(&y2.pow(3).sub(&x2), 2, 24, 0)
                .unwrap()
                .degree,
            3
        );
    }

    #[test]
    fn cusp_translations() {
        let pp = parse_poly("X0^2*X1 - X2^3 over GF(3)", None).unwrap();
        let x = Hypersurface::new(pp.poly).unwrap();
        let p = ProjPoint::new(x.field(), parse_point("0:1:1", x.field()).unwrap()).unwrap();
        let s = pgl_automorphism_search(&x, &p, 1, DEFAULT_BUDGET, Mode::default()).unwrap();
        assert_eq!(s.automorphisms.len(), 3);
        assert!(s.full_group);
        assert!(s.automorphisms.iter().any(|a| a.matrix.is_identity()));
    }
}
