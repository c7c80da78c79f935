//! Projection from a point, the Galois decision, and the induced group.

use std::collections::BTreeMap;
use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::field::{embed, Elem, FieldDesc};
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::ratfunc::RationalFunc;
use crate::algebra::unipoly::UniPoly;
use crate::algebra::upoly::{FieldOps, Ring};
use crate::error::{Error, Result};
use crate::funcfield::{FFElem, FunctionField};
use crate::geometry::{Hypersurface, LinearSubspace, ProjPoint, ProjTransform};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum PointKind {
    Inner,
    Outer,
}

impl fmt::Display for PointKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            PointKind::Inner => "inner",
            PointKind::Outer => "outer",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Galois,
    NotGalois,
    Inconclusive,
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Status::Galois => "galois",
            Status::NotGalois => "not_galois",
            Status::Inconclusive => "inconclusive",
        })
    }
}

/// `X` seen from `P` in coordinates where `P = (0:...:0:1)`.
#[derive(Clone, Debug)]
pub struct ProjectionData {
    pub x: Hypersurface,
    pub point: ProjPoint,
    /// `M` with `M·(0:...:0:1) = P`; `F∘M = Σ A_i X_{n+1}^i`.
    pub adapted: ProjTransform,
    /// `A_0, ..., A_d` in `X_0, ..., X_n`.
    pub fiber: Vec<MultiPoly>,
    pub kind: PointKind,
    pub degree: usize,
}

impl ProjectionData {
    /// `a_i = A_i(1, x_1, ..., x_n)`, for `i = 0..=D`.
    pub fn affine_coeffs(&self) -> Vec<MultiPoly> {
        let n1 = self.fiber[0].nvars();
        let map: Vec<usize> = (0..n1).map(|i| i.saturating_sub(1)).collect();
        self.fiber[..=self.degree]
            .iter()
            .map(|a| a.eval_var(0, 1).remap_vars(n1 - 1, &map))
            .collect()
    }

    /// `f(x_1, ..., x_n, y) = Σ a_i y^i`, with `y` the last variable.
    pub fn dehomogenized(&self) -> MultiPoly {
        let a = self.affine_coeffs();
        let n = a[0].nvars();
        let map: Vec<usize> = (0..n).collect();
        let lifted: Vec<MultiPoly> = a.iter().map(|c| c.remap_vars(n + 1, &map)).collect();
        MultiPoly::from_coeffs_in(self.x.field(), n + 1, n, &lifted)
    }
}

/// Move `P` to `(0:...:0:1)` and read off the fiber polynomial.
pub fn project(x: &Hypersurface, p: &ProjPoint) -> Result<ProjectionData> {
    x.require_integral()?;
    let kind = if x.contains(p)? {
        if x.singular_at(p)? {
            return Err(Error::precondition(
                "singular_point",
                format!("{p} is a singular point of X"),
            ));
        }
        PointKind::Inner
    } else {
        PointKind::Outer
    };
    let fld = x.field();
    let n2 = x.nvars();
    let j = (0..n2).rev().find(|&i| p.coords()[i] != 0).unwrap();
    let mut m = vec![vec![0; n2]; n2];
    for (col, i) in (0..n2).filter(|&i| i != j).enumerate() {
        m[i][col] = 1;
    }
    for (i, row) in m.iter_mut().enumerate() {
        row[n2 - 1] = p.coords()[i];
    }
    let adapted = ProjTransform::new(fld, m)?;
    let fp = crate::geometry::substitute_linear(x.poly(), &adapted)?;
    let map: Vec<usize> = (0..n2).map(|i| i.min(n2 - 2)).collect();
    let fiber: Vec<MultiPoly> = fp
        .coeffs_in(n2 - 1)
        .iter()
        .map(|c| c.remap_vars(n2 - 1, &map))
        .collect();
    let degree = fiber.len() - 1;
    let d = x.degree();
    let expected = match kind {
        PointKind::Inner => d - 1,
        PointKind::Outer => d,
    };
    if degree == 0 || degree != expected {
        return Err(Error::precondition(
            "degenerate_fiber",
            format!("fiber polynomial has degree {degree}"),
        ));
    }
    Ok(ProjectionData {
        x: x.clone(),
        point: p.clone(),
        adapted,
        fiber,
        kind,
        degree,
    })
}

#[derive(Clone, Copy, Debug)]
pub struct GaloisOptions {
    pub m_max: u32,
    pub seed: u64,
}

impl Default for GaloisOptions {
    fn default() -> Self {
        GaloisOptions { m_max: 12, seed: 0 }
    }
}

/// Abstract identification of a finite group.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GroupId {
    pub order: usize,
    pub abelian: bool,
    pub exponent: usize,
    /// `d_1 | d_2 | ...`, present for abelian groups.
    pub invariant_factors: Option<Vec<usize>>,
    pub element_orders: Vec<usize>,
}

impl fmt::Display for GroupId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.invariant_factors {
            Some(v) if v.is_empty() => write!(f, "trivial"),
            Some(v) => {
                let mut parts: Vec<String> = Vec::new();
                let mut i = 0;
                while i < v.len() {
                    let mut j = i;
                    while j < v.len() && v[j] == v[i] {
                        j += 1;
                    }
                    parts.push(if j - i == 1 {
                        format!("Z/{}", v[i])
                    } else {
                        format!("(Z/{})^{}", v[i], j - i)
                    });
                    i = j;
                }
                write!(f, "{}", parts.join(" x "))
            }
            None => write!(
                f,
                "nonabelian of order {} and exponent {}",
                self.order, self.exponent
            ),
        }
    }
}

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn prime_factors(mut n: usize) -> Vec<(usize, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        let mut e = 0;
        while n.is_multiple_of(p) {
            n /= p;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// Validates a multiplication table (`table[i][j] = i·j`) and identifies the group.
pub fn group_id(table: &[Vec<usize>]) -> Result<GroupId> {
    let n = table.len();
    if n == 0
        || table
            .iter()
            .any(|r| r.len() != n || r.iter().any(|&k| k >= n))
    {
        return Err(Error::Internal("group table not closed".into()));
    }
    let e = (0..n)
        .find(|&i| (0..n).all(|j| table[i][j] == j && table[j][i] == j))
        .ok_or_else(|| Error::Internal("group table has no identity".into()))?;
    for i in 0..n {
        if !(0..n).any(|j| table[i][j] == e && table[j][i] == e) {
            return Err(Error::Internal("group table lacks inverses".into()));
        }
        for j in 0..n {
            for k in 0..n {
                if table[table[i][j]][k] != table[i][table[j][k]] {
                    return Err(Error::Internal("group table not associative".into()));
                }
            }
        }
    }
    let abelian = (0..n).all(|i| (0..n).all(|j| table[i][j] == table[j][i]));
    let mut orders: Vec<usize> = (0..n)
        .map(|i| {
            let (mut x, mut k) = (i, 1);
            while x != e {
                x = table[x][i];
                k += 1;
            }
            k
        })
        .collect();
    orders.sort_unstable();
    let exponent = orders.iter().fold(1, |a, &b| a / gcd(a, b) * b);
    let invariant_factors = abelian.then(|| {
        let mut by_rank: Vec<usize> = Vec::new();
        for (p, a) in prime_factors(n) {
            let mut logs = vec![0u32];
            let mut pj = 1;
            for _ in 1..=a {
                pj *= p;
                let cnt = orders.iter().filter(|&&o| pj % o == 0).count();
                logs.push((cnt as f64).log(p as f64).round() as u32);
            }
            // number of cyclic p-parts of exponent >= j
            let ge: Vec<u32> = (1..logs.len()).map(|j| logs[j] - logs[j - 1]).collect();
            let parts = ge.first().copied().unwrap_or(0) as usize;
            if by_rank.len() < parts {
                by_rank.resize(parts, 1);
            }
            for (i, slot) in by_rank.iter_mut().enumerate().take(parts) {
                let ex = ge.iter().filter(|&&c| c as usize > i).count() as u32;
                *slot *= p.pow(ex);
            }
        }
        by_rank.sort_unstable();
        by_rank
    });
    Ok(GroupId {
        order: n,
        abelian,
        exponent,
        invariant_factors,
        element_orders: orders,
    })
}

/// Everything needed to act with the automorphisms.
#[derive(Clone, Debug)]
pub struct GaloisData {
    pub projection: ProjectionData,
    /// `L` over the constant field where all roots live.
    pub field: FunctionField,
    /// `σ_i(Y)` for `Y = a_D y`; index 0 is the identity.
    pub images: Vec<FFElem>,
    pub table: Vec<Vec<usize>>,
}

impl GaloisData {
    /// `σ_i(y)`.
    pub fn image_of_y(&self, i: usize) -> FFElem {
        let inv = RationalFunc::from_poly(self.field.lead().clone())
            .inv()
            .unwrap();
        self.images[i].scale(&inv)
    }
}

#[derive(Clone, Debug)]
pub struct GaloisReport {
    pub status: Status,
    pub kind: PointKind,
    pub degree: usize,
    pub roots_found: usize,
    /// `σ(y)` for each automorphism, identity first.
    pub automorphisms: Vec<String>,
    pub group: Option<GroupId>,
    pub m_used: u32,
    pub seed: u64,
    pub hypothesis_log: Vec<String>,
    /// Degrees of the irreducible factors of the fiber polynomial over `L`.
    pub factor_degrees: Vec<usize>,
    pub reason: Option<String>,
    pub data: Option<GaloisData>,
}

/// Decide whether `P` is a Galois point of `X`.
pub fn is_galois(x: &Hypersurface, p: &ProjPoint, opts: &GaloisOptions) -> Result<GaloisReport> {
    let proj = project(x, p)?;
    let mut log = vec![
        "X is reduced and absolutely irreducible".to_string(),
        match proj.kind {
            PointKind::Inner => format!("{p} is a smooth point of X"),
            PointKind::Outer => format!("{p} is not on X"),
        },
    ];
    let d = proj.degree;
    let mut report = GaloisReport {
        status: Status::NotGalois,
        kind: proj.kind,
        degree: d,
        roots_found: 0,
        automorphisms: vec![],
        group: None,
        m_used: 1,
        seed: opts.seed,
        hypothesis_log: vec![],
        factor_degrees: vec![],
        reason: None,
        data: None,
    };
    let f = proj.dehomogenized();
    let y = f.nvars() - 1;
    if f.partial(y).is_zero() {
        log.push("fiber polynomial is inseparable in T; the extension is not separable".into());
        report.reason = Some("inseparable".into());
        report.roots_found = 1;
        report.hypothesis_log = log;
        return Ok(report);
    }
    log.push("fiber polynomial is separable in T".into());
    let l = FunctionField::new_unchecked(&f, y)?;
    let gr = match l.geometric_roots(opts.m_max, opts.seed) {
        Ok(g) => g,
        Err(e @ (Error::Inconclusive(_) | Error::Cap(_) | Error::FieldTooLarge(..))) => {
            log.push(format!("inconclusive: {e}"));
            report.status = Status::Inconclusive;
            report.reason = Some(e.code().to_string());
            report.hypothesis_log = log;
            return Ok(report);
        }
        Err(e) => return Err(e),
    };
    report.factor_degrees = gr.factor_degrees.clone();
    report.roots_found = gr.count;
    log.push(format!(
        "norm shift lambda = {}",
        gr.lambda.format_with(&|i| format!("x{}", i + 1))
    ));
    if !gr.split_degrees.is_empty() {
        log.push(format!(
            "factors of degree {:?} over L split after constant extension",
            gr.split_degrees
        ));
    }
    log.push(format!(
        "root count over L with algebraically closed constants: {} of {} (certified by absolute factor counts)",
        gr.count, d
    ));
    if gr.count < d {
        report.hypothesis_log = log;
        return Ok(report);
    }
    report.m_used = gr.m_used;
    let lm = gr.field.clone();
    let yhat = lm.yhat();
    let mut images = gr.roots.clone();
    let id = images
        .iter()
        .position(|r| *r == yhat)
        .ok_or_else(|| Error::Internal("identity root missing".into()))?;
    let ident = images.remove(id);
    images.sort_by_cached_key(|r| r.to_string());
    images.insert(0, ident);
    let mut table = vec![vec![0; d]; d];
    for i in 0..d {
        for j in 0..d {
            let c = images[j].substitute_generator(&images[i]);
            table[i][j] = images.iter().position(|r| *r == c).ok_or_else(|| {
                Error::Internal("composition of automorphisms is not an automorphism".into())
            })?;
        }
    }
    let group = group_id(&table)?;
    log.push(format!("automorphism group verified: {group}"));
    let data = GaloisData {
        projection: proj,
        field: lm,
        images,
        table,
    };
    report.automorphisms = (0..d).map(|i| data.image_of_y(i).to_string()).collect();
    report.status = Status::Galois;
    report.group = Some(group);
    report.hypothesis_log = log;
    report.data = Some(data);
    Ok(report)
}

/// The automorphisms of a Galois point, as images of `y`.
pub fn automorphisms(x: &Hypersurface, p: &ProjPoint, opts: &GaloisOptions) -> Result<Vec<FFElem>> {
    let r = is_galois(x, p, opts)?;
    match &r.data {
        Some(d) => Ok((0..d.images.len()).map(|i| d.image_of_y(i)).collect()),
        None => Err(Error::precondition(
            "not_galois",
            format!("status is {}", r.status),
        )),
    }
}

/// `Π σ(y) = (-1)^D a_0 / a_D` in `L`.
pub fn product_formula_check(report: &GaloisReport) -> Result<bool> {
    let Some(data) = &report.data else {
        return Err(Error::precondition(
            "not_galois",
            "product formula needs a Galois point",
        ));
    };
    let l = &data.field;
    let lhs = (0..data.images.len()).fold(l.one(), |acc, i| acc.mul(&data.image_of_y(i)));
    let a = l.minpoly_coeffs();
    let dd = l.degree();
    let a0 = if dd % 2 == 1 {
        a[0].neg()
    } else {
        a[0].clone()
    };
    let rhs = l.from_base(RationalFunc::new(a0, a[dd].clone()).unwrap());
    Ok(lhs == rhs)
}

#[derive(Clone, Debug, Serialize)]
pub struct OrbitReport {
    pub lines_checked: usize,
    pub lines_skipped: usize,
    pub transitive: bool,
}

/// On sampled lines through `P` meeting `X` in `D` distinct points off `P`,
/// the automorphisms permute those points transitively.
pub fn orbit_transitivity_check(
    report: &GaloisReport,
    trials: usize,
    seed: u64,
) -> Result<OrbitReport> {
    let Some(data) = &report.data else {
        return Err(Error::precondition(
            "not_galois",
            "orbit check needs a Galois point",
        ));
    };
    let l = &data.field;
    let base = l.base().clone();
    let n = l.nvars();
    let dd = l.degree();
    let mut r = 1;
    while base.size().saturating_pow(r) < 16 {
        r += 1;
    }
    let fa = base.extension(r)?;
    let ea = embed(&base, &fa)?;
    let coeffs: Vec<MultiPoly> = l.minpoly_coeffs().iter().map(|c| c.embed(&ea)).collect();
    let images: Vec<Vec<RationalFunc>> = data
        .images
        .iter()
        .map(|e| {
            e.coeffs()
                .iter()
                .map(|c| c.map_coeffs(&fa, |a| ea.map(a)))
                .collect()
        })
        .collect();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (mut checked, mut skipped) = (0, 0);
    let mut attempts = 0;
    while checked < trials {
        attempts += 1;
        if attempts > 100 * trials + 100 {
            return Err(Error::Cap(format!("only {checked} usable lines found")));
        }
        let a: Vec<Elem> = (0..n).map(|_| fa.random(&mut rng)).collect();
        let u = UniPoly::new(&fa, coeffs.iter().map(|c| c.eval(&a)).collect());
        let vals: Option<Vec<Vec<Elem>>> = images
            .iter()
            .map(|im| im.iter().map(|c| c.eval(&a)).collect::<Option<Vec<_>>>())
            .collect();
        let Some(vals) = vals else {
            skipped += 1;
            continue;
        };
        if u.deg() != dd as isize || !u.is_squarefree() {
            skipped += 1;
            continue;
        }
        let s = u.factor(rng.gen()).iter().fold(1u32, |acc, (h, _)| {
            let k = h.deg() as u32;
            acc / gcd(acc as usize, k as usize) as u32 * k
        });
        if fa.size().checked_pow(s).is_none_or(|v| v > 1 << 24) {
            skipped += 1;
            continue;
        }
        let fs = fa.extension(s)?;
        let es = embed(&fa, &fs)?;
        let us = u.map_coeffs(&fs, |c| es.map(c));
        let mut roots = us.roots(rng.gen());
        roots.sort_unstable();
        let lead = es.map(u.lc());
        let t0 = roots[0];
        let y0 = fs.mul(lead, t0);
        let mut orbit: Vec<Elem> = vals
            .iter()
            .map(|cs| {
                let img = cs
                    .iter()
                    .rev()
                    .fold(0, |acc, &c| fs.add(fs.mul(acc, y0), es.map(c)));
                fs.mul(img, fs.inv(lead).unwrap())
            })
            .collect();
        orbit.sort_unstable();
        orbit.dedup();
        checked += 1;
        if orbit != roots {
            return Ok(OrbitReport {
                lines_checked: checked,
                lines_skipped: skipped,
                transitive: false,
            });
        }
    }
    Ok(OrbitReport {
        lines_checked: checked,
        lines_skipped: skipped,
        transitive: true,
    })
}

#[derive(Clone, Debug, Serialize)]
pub struct SliceReport {
    pub hyperplane: String,
    pub section: String,
    pub point_in_section: String,
    pub candidates_tried: usize,
    pub status_x: Status,
    pub status_section: Status,
    pub group_x: Option<GroupId>,
    pub group_section: Option<GroupId>,
    pub groups_match: bool,
    pub hypothesis_log: Vec<String>,
}

/// Compare `G_P(X)` with `G_P(X ∩ H)` for a hyperplane `H ∋ P` drawn over
/// `GF(q^2)` that satisfies the section hypotheses.
pub fn slice_check(x: &Hypersurface, p: &ProjPoint, opts: &GaloisOptions) -> Result<SliceReport> {
    if x.dim() < 2 {
        return Err(Error::precondition(
            "dimension_too_small",
            "slice check needs n >= 2",
        ));
    }
    let rx = is_galois(x, p, opts)?;
    let (x2, e) = x.extend(2)?;
    let fld: FieldDesc = x2.field().clone();
    let p2 = p.embed(&e);
    let n2 = x.nvars();
    let j = (0..n2).rev().find(|&i| p2.coords()[i] != 0).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut log = Vec::new();
    for cand in 1..=200 {
        let mut h: Vec<Elem> = (0..n2).map(|_| fld.random(&mut rng)).collect();
        h[j] = 0;
        let s = h
            .iter()
            .zip(p2.coords())
            .fold(0, |acc, (&a, &b)| fld.add(acc, fld.mul(a, b)));
        h[j] = fld.neg(fld.mul(s, fld.inv(p2.coords()[j]).unwrap()));
        if h.iter().all(|&c| c == 0) {
            continue;
        }
        let hs = LinearSubspace::from_equations(&fld, n2, &[h.clone()]);
        let (xh, chart) = match x2.hyperplane_section(&hs) {
            Ok(v) => v,
            Err(err) => {
                log.push(format!("H{cand}: {err}"));
                continue;
            }
        };
        let local = chart.inverse().apply(&p2);
        let ph = ProjPoint::new(&fld, local.coords()[..n2 - 1].to_vec())?;
        if !xh.is_integral()? {
            log.push(format!("H{cand}: section not integral"));
            continue;
        }
        if rx.kind == PointKind::Inner && xh.singular_at(&ph)? {
            log.push(format!("H{cand}: P singular on the section"));
            continue;
        }
        if xh.strange_center()?.contains(&ph) {
            log.push(format!("H{cand}: P on the strange center of the section"));
            continue;
        }
        log.push(format!("H{cand}: section integral, P admissible"));
        let rh = is_galois(&xh, &ph, opts)?;
        if rh.status == Status::Inconclusive {
            log.push(format!("H{cand}: section verdict inconclusive"));
            continue;
        }
        return Ok(SliceReport {
            hyperplane: crate::geometry::linear_form(&fld, &h).to_string(),
            section: xh.to_string(),
            point_in_section: ph.to_string(),
            candidates_tried: cand,
            status_x: rx.status,
            status_section: rh.status,
            groups_match: rx.group == rh.group,
            group_x: rx.group,
            group_section: rh.group,
            hypothesis_log: log,
        });
    }
    Err(Error::Cap(
        "no admissible hyperplane among 200 candidates".into(),
    ))
}

/// Group table of a list of permutations of `0..k` closed under composition.
pub fn table_from_permutations(perms: &[Vec<usize>]) -> Result<Vec<Vec<usize>>> {
    let index: BTreeMap<&Vec<usize>, usize> =
        perms.iter().enumerate().map(|(i, p)| (p, i)).collect();
    perms
        .iter()
        .map(|a| {
            perms
                .iter()
                .map(|b| {
                    let c: Vec<usize> = b.iter().map(|&i| a[i]).collect();
                    index
                        .get(&c)
                        .copied()
                        .ok_or_else(|| Error::Internal("permutations not closed".into()))
                })
                .collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::{parse_point, parse_poly};

    fn setup(s: &str, pt: &str) -> (Hypersurface, ProjPoint) {
        let pp = parse_poly(s, None).unwrap();
        let x = Hypersurface::new(pp.poly).unwrap();
        let p = ProjPoint::new(x.field(), parse_point(pt, x.field()).unwrap()).unwrap();
        (x, p)
    }

    #[test]
    fn cusp_points() {
        let o = GaloisOptions::default();
        let (x, p) = setup("X0^2*X1 - X2^3 over GF(3)", "1:1:1");
        let r = is_galois(&x, &p, &o).unwrap();
        assert_eq!(r.status, Status::Galois);
        assert_eq!(r.group.as_ref().unwrap().to_string(), "Z/2");
        assert!(product_formula_check(&r).unwrap());
        assert!(orbit_transitivity_check(&r, 5, 1).unwrap().transitive);
        let (x, p) = setup("X0^2*X1 - X2^3 over GF(3)", "0:1:1");
        let r = is_galois(&x, &p, &o).unwrap();
        assert_eq!(r.status, Status::Galois);
        assert_eq!(r.group.as_ref().unwrap().to_string(), "Z/3");
        assert!(product_formula_check(&r).unwrap());
        assert!(orbit_transitivity_check(&r, 5, 1).unwrap().transitive);
        let (x, p) = setup("X0^2*X1 - X2^3 over GF(3)", "1:0:1");
        assert_eq!(is_galois(&x, &p, &o).unwrap().status, Status::NotGalois);
        let (x, p) = setup("X0^2*X1 - X2^3 over GF(3)", "0:1:0");
        assert_eq!(is_galois(&x, &p, &o).unwrap_err().code(), "singular_point");
        let (x, p) = setup("X0^2*X1 - X2^3 over GF(3)", "0:0:1");
        let r = is_galois(&x, &p, &o).unwrap();
        assert_eq!(r.reason.as_deref(), Some("inseparable"));
    }

    #[test]
    fn group_identification() {
        let klein = table_from_permutations(&[
            vec![0, 1, 2, 3],
            vec![1, 0, 3, 2],
            vec![2, 3, 0, 1],
            vec![3, 2, 1, 0],
        ])
        .unwrap();
        assert_eq!(group_id(&klein).unwrap().to_string(), "(Z/2)^2");
        let c3 = table_from_permutations(&[vec![0, 1, 2], vec![1, 2, 0], vec![2, 0, 1]]).unwrap();
        assert_eq!(group_id(&c3).unwrap().invariant_factors, Some(vec![3]));
        let s3 = table_from_permutations(&[
            vec![0, 1, 2],
            vec![1, 2, 0],
            vec![2, 0, 1],
            vec![1, 0, 2],
            vec![0, 2, 1],
            vec![2, 1, 0],
        ])
        .unwrap();
        let g = group_id(&s3).unwrap();
        assert!(!g.abelian);
        assert_eq!(g.exponent, 6);
        let c2c4: Vec<Vec<usize>> = (0..8)
            .map(|i| {
                (0..8)
                    .map(|j| ((i % 2 + j % 2) % 2) + 2 * ((i / 2 + j / 2) % 4))
                    .collect()
            })
            .collect();
        assert_eq!(group_id(&c2c4).unwrap().invariant_factors, Some(vec![2, 4]));
    }
}
