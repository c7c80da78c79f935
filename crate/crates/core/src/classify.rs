//! Normal-form certificates for dense inner and outer Galois loci.

use serde::Serialize;

use crate::algebra::field::{Elem, FieldDesc};
use crate::algebra::linalg;
use crate::algebra::multipoly::{Mono, MultiPoly};
use crate::error::{Error, Result};
use crate::galois::{is_galois, GaloisOptions, GroupId, PointKind, Status};
use crate::geometry::{substitute_linear, Hypersurface, LinearSubspace, ProjPoint, ProjTransform};
use crate::par::{self, Mode};

/// `F∘M = c·(X_0^(d-1) X_1 - X_2^d)`.
#[derive(Clone, Debug)]
pub struct InnerCertificate {
    pub matrix: ProjTransform,
    pub p: u64,
    pub e: u32,
    pub scalar: Elem,
    /// `F∘M - c·model`; always zero.
    pub residual: MultiPoly,
    /// `d < 4`.
    pub degree_below_four: bool,
}

/// `F∘M = Σ_j Σ_i α_ij X_0^(p^e - p^j) X_i^(p^j)`.
#[derive(Clone, Debug)]
pub struct OuterCertificate {
    pub matrix: ProjTransform,
    pub p: u64,
    pub e: u32,
    /// Rows `i = 1..=n+1`, columns `j = 0..=e`.
    pub alpha: Vec<Vec<Elem>>,
    pub residual: MultiPoly,
}

#[derive(Clone, Debug)]
pub enum Detection<C> {
    Found(C),
    NotFound {
        reason: &'static str,
        detail: String,
    },
}

impl<C> Detection<C> {
    pub fn found(&self) -> Option<&C> {
        match self {
            Detection::Found(c) => Some(c),
            _ => None,
        }
    }

    pub fn reason(&self) -> Option<&'static str> {
        match self {
            Detection::NotFound { reason, .. } => Some(reason),
            _ => None,
        }
    }
}

fn none<C>(reason: &'static str, detail: impl Into<String>) -> Result<Detection<C>> {
    Ok(Detection::NotFound {
        reason,
        detail: detail.into(),
    })
}

/// `e` with `d = p^e`.
fn p_power(p: u64, d: usize) -> Option<u32> {
    let mut v = 1u64;
    let mut e = 0;
    while v < d as u64 {
        v *= p;
        e += 1;
    }
    (v == d as u64 && e > 0).then_some(e)
}

/// `X_0^(d-1) X_1 - X_2^d` in `nvars` variables.
pub fn inner_model(f: &FieldDesc, nvars: usize, d: usize) -> MultiPoly {
    let x = |i| MultiPoly::var(f, nvars, i);
    x(0).pow(d as u32 - 1).mul(&x(1)).sub(&x(2).pow(d as u32))
}

/// `Σ α_ij X_0^(p^e - p^j) X_i^(p^j)`.
pub fn outer_model(f: &FieldDesc, nvars: usize, p: u64, e: u32, alpha: &[Vec<Elem>]) -> MultiPoly {
    let q = p.pow(e) as u32;
    let mut terms = Vec::new();
    for (i, row) in alpha.iter().enumerate() {
        for (j, &a) in row.iter().enumerate() {
            let pj = p.pow(j as u32) as u32;
            let m = Mono::one().with(0, q - pj).with(i + 1, pj);
            terms.push((m, a));
        }
    }
    MultiPoly::from_terms(f, nvars, terms)
}

/// Matrix whose first columns complete `basis` to a basis, followed by `basis`.
fn complete_basis(f: &FieldDesc, n: usize, basis: &[Vec<Elem>]) -> Vec<Vec<Elem>> {
    let mut cols: Vec<Vec<Elem>> = Vec::new();
    let mut current: Vec<Vec<Elem>> = basis.to_vec();
    for i in 0..n {
        let e: Vec<Elem> = (0..n).map(|k| (k == i) as Elem).collect();
        let mut trial = current.clone();
        trial.push(e.clone());
        if linalg::rank(f, &trial) == trial.len() {
            current = trial;
            cols.push(e);
        }
    }
    cols.extend(basis.iter().cloned());
    linalg::transpose(&cols)
}

/// Detects `F = c·(X_0^(d-1) X_1 - X_2^d)` after a linear change of coordinates.
pub fn detect_inner_dense(x: &Hypersurface) -> Result<Detection<InnerCertificate>> {
    let fld = x.field().clone();
    let p = fld.characteristic();
    let d = x.degree();
    let Some(e) = p_power(p, d) else {
        return none(
            "degree_not_p_power",
            format!("d = {d} is not a power of p = {p}"),
        );
    };
    if d < 3 {
        return none("degree_too_small", format!("d = {d}"));
    }
    if !x.is_integral()? {
        return none(
            "not_integral",
            "X is not reduced and absolutely irreducible",
        );
    }
    let n = x.dim();
    let n2 = x.nvars();
    let v = x.cone_vertex()?;
    if v.dim() != n as isize - 2 {
        let reason = if v.is_empty() {
            "no_vertex"
        } else {
            "vertex_dimension"
        };
        return none(
            reason,
            format!(
                "cone vertex has dimension {}, need {}",
                v.dim(),
                n as isize - 2
            ),
        );
    }
    let m1 = ProjTransform::new(&fld, complete_basis(&fld, n2, v.basis()))?;
    let f1 = substitute_linear(x.poly(), &m1)?;
    if (3..n2).any(|i| f1.degree_in(i) > 0) {
        return Err(Error::Internal("vertex coordinates still present".into()));
    }
    let g = f1.remap_vars(3, &(0..n2).map(|i| i.min(2)).collect::<Vec<_>>());
    let curve = Hypersurface::new(g.clone())?;
    let sing: Vec<ProjPoint> = curve
        .rational_points()?
        .into_iter()
        .filter(|q| curve.singular_at(q).unwrap_or(false))
        .collect();
    if sing.len() != 1 {
        return none(
            "no_singular_point",
            format!("plane model has {} rational singular points", sing.len()),
        );
    }
    let t = curve.strange_center()?;
    if t.dim() != 0 {
        return none(
            "no_strange_center",
            format!("plane model strange center has dimension {}", t.dim()),
        );
    }
    let s = &sing[0];
    if t.contains(s) {
        return none("no_normal_form", "singular point equals the strange center");
    }
    let line = LinearSubspace::from_points(&fld, 3, std::slice::from_ref(s)).span(&t);
    let r0 = line.equations()[0].clone();
    let j = (0..3).rev().find(|&i| r0[i] != 0).unwrap();
    let inv = fld.inv(r0[j]).unwrap();
    let subs: Vec<MultiPoly> = (0..3)
        .map(|i| {
            if i == j {
                let terms = (0..3)
                    .filter(|&k| k != j)
                    .map(|k| (Mono::var(k), fld.neg(fld.mul(r0[k], inv))));
                MultiPoly::from_terms(&fld, 3, terms)
            } else {
                MultiPoly::var(&fld, 3, i)
            }
        })
        .collect();
    let restricted = g.substitute(&subs);
    let mut r2 = vec![0; 3];
    for &(m, c) in restricted.terms() {
        let Some(k) = (0..3).find(|&k| m.get(k) as usize == d) else {
            return none(
                "no_normal_form",
                "restriction to the special line is not a p^e-th power",
            );
        };
        r2[k] = frob_root(&fld, fld.neg(c), e);
    }
    let lf = |c: &[Elem]| MultiPoly::from_terms(&fld, 3, (0..3).map(|k| (Mono::var(k), c[k])));
    let (l0, l2) = (lf(&r0), lf(&r2));
    let Some(l1) = g.add(&l2.pow(d as u32)).div_exact(&l0.pow(d as u32 - 1)) else {
        return none(
            "no_normal_form",
            "residual is not divisible by the special line",
        );
    };
    if l1.total_degree() != 1 || !l1.is_homogeneous() {
        return none("no_normal_form", "cofactor is not linear");
    }
    let r1: Vec<Elem> = (0..3).map(|k| l1.coeff(&Mono::var(k))).collect();
    let rows = vec![r0, r1, r2];
    let Ok(m2) = linalg::inverse(&fld, &rows) else {
        return none("no_normal_form", "normal-form coordinates are dependent");
    };
    let mut block = linalg::identity(n2);
    for a in 0..3 {
        for b in 0..3 {
            block[a][b] = m2[a][b];
        }
    }
    let m = ProjTransform::new(&fld, linalg::mat_mul(&fld, m1.matrix(), &block))?;
    let fm = substitute_linear(x.poly(), &m)?;
    let model = inner_model(&fld, n2, d);
    let c = fm.coeff(&Mono::one().with(0, d as u32 - 1).with(1, 1));
    let residual = fm.sub(&model.scale(c));
    if c == 0 || !residual.is_zero() {
        return Err(Error::Internal(
            "inner certificate failed verification".into(),
        ));
    }
    Ok(Detection::Found(InnerCertificate {
        matrix: m,
        p,
        e,
        scalar: c,
        residual,
        degree_below_four: d < 4,
    }))
}

/// `a^(1/p^e)`.
fn frob_root(f: &FieldDesc, a: Elem, e: u32) -> Elem {
    f.frobenius_root(a, e)
}

/// Detects the additive outer normal form after a linear change of coordinates.
pub fn detect_outer_dense(x: &Hypersurface) -> Result<Detection<OuterCertificate>> {
    let fld = x.field().clone();
    let p = fld.characteristic();
    let d = x.degree();
    let Some(e) = p_power(p, d) else {
        return none(
            "degree_not_p_power",
            format!("d = {d} is not a power of p = {p}"),
        );
    };
    if d < 3 {
        return none("degree_too_small", format!("d = {d}"));
    }
    if !x.is_integral()? {
        return none(
            "not_integral",
            "X is not reduced and absolutely irreducible",
        );
    }
    let n2 = x.nvars();
    let t = x.strange_center()?;
    let sing: Vec<ProjPoint> = x
        .rational_points()?
        .into_iter()
        .filter(|q| x.singular_at(q).unwrap_or(false))
        .collect();
    let s = LinearSubspace::from_points(&fld, n2, &sing);
    let mut candidates: Vec<Vec<Elem>> = Vec::new();
    let st = s.span(&t);
    if st.dim() == n2 as isize - 2 {
        candidates.push(st.equations()[0].clone());
    }
    let dual = LinearSubspace::from_equations(&fld, n2, t.basis());
    let pencil = dual
        .points()
        .map_err(|_| Error::Inconclusive("too many hyperplanes through T_X".into()))?;
    candidates.extend(pencil.into_iter().map(|h| h.coords().to_vec()));
    let mut seen = std::collections::BTreeSet::new();
    let mut last_reason = "additivity_failure";
    for h in candidates {
        let h = ProjPoint::new(&fld, h)?.coords().to_vec();
        if !seen.insert(h.clone()) {
            continue;
        }
        match try_outer_form(x, &h, p, e)? {
            Ok(c) => return Ok(Detection::Found(c)),
            Err(r) => {
                if r != "additivity_failure" {
                    last_reason = r;
                }
            }
        }
    }
    none(
        last_reason,
        "no hyperplane through the strange center gives an additive form",
    )
}

fn try_outer_form(
    x: &Hypersurface,
    h: &[Elem],
    p: u64,
    e: u32,
) -> Result<std::result::Result<OuterCertificate, &'static str>> {
    let fld = x.field().clone();
    let n2 = x.nvars();
    let j = (0..n2).rev().find(|&i| h[i] != 0).unwrap();
    let mut rows = vec![h.to_vec()];
    for i in (0..n2).filter(|&i| i != j) {
        rows.push((0..n2).map(|k| (k == i) as Elem).collect());
    }
    let m = ProjTransform::new(&fld, linalg::inverse(&fld, &rows)?)?;
    let fm = substitute_linear(x.poly(), &m)?;
    let f = fm.eval_var(0, 1);
    let f0 = f.constant_coeff();
    let g = f.sub(&MultiPoly::constant(&fld, n2, f0));
    if !additive(&g) {
        return Ok(Err("additivity_failure"));
    }
    let mut m = m;
    let mut fm = fm;
    if f0 != 0 {
        let Some(w) = solve_additive(&g, fld.neg(f0))? else {
            return Ok(Err("constant_term"));
        };
        let mut tw = linalg::identity(n2);
        for i in 1..n2 {
            tw[i][0] = w[i];
        }
        let tr = ProjTransform::new(&fld, tw)?;
        m = m.compose(&tr);
        fm = substitute_linear(x.poly(), &m)?;
    }
    let q = p.pow(e) as u32;
    let alpha: Vec<Vec<Elem>> = (1..n2)
        .map(|i| {
            (0..=e)
                .map(|jj| {
                    let pj = p.pow(jj) as u32;
                    fm.coeff(&Mono::one().with(0, q - pj).with(i, pj))
                })
                .collect()
        })
        .collect();
    let residual = fm.sub(&outer_model(&fld, n2, p, e, &alpha));
    if !residual.is_zero() {
        return Err(Error::Internal(
            "outer certificate failed verification".into(),
        ));
    }
    Ok(Ok(OuterCertificate {
        matrix: m,
        p,
        e,
        alpha,
        residual,
    }))
}

/// `g(u + v) = g(u) + g(v)` as polynomials, `g` in variables `1..nvars`.
fn additive(g: &MultiPoly) -> bool {
    let fld = g.field();
    let n2 = g.nvars();
    let k = n2 - 1;
    if 2 * k > crate::algebra::multipoly::MAX_VARS {
        // same criterion read off the support
        let p = fld.characteristic();
        return g.terms().iter().all(|(m, _)| {
            let vars: Vec<usize> = (1..n2).filter(|&i| m.get(i) > 0).collect();
            vars.len() == 1
                && (m.get(vars[0]) == 1 || p_power(p, m.get(vars[0]) as usize).is_some())
        });
    }
    let u = |i: usize| MultiPoly::var(fld, 2 * k, i - 1);
    let v = |i: usize| MultiPoly::var(fld, 2 * k, k + i - 1);
    let zero = MultiPoly::zero(fld, 2 * k);
    let su: Vec<MultiPoly> = (0..n2)
        .map(|i| if i == 0 { zero.clone() } else { u(i) })
        .collect();
    let sv: Vec<MultiPoly> = (0..n2)
        .map(|i| if i == 0 { zero.clone() } else { v(i) })
        .collect();
    let suv: Vec<MultiPoly> = (0..n2)
        .map(|i| {
            if i == 0 {
                zero.clone()
            } else {
                u(i).add(&v(i))
            }
        })
        .collect();
    g.substitute(&suv) == g.substitute(&su).add(&g.substitute(&sv))
}

/// Some `w` over the base field with `g(w) = target`.
fn solve_additive(g: &MultiPoly, target: Elem) -> Result<Option<Vec<Elem>>> {
    let fld = g.field();
    let n2 = g.nvars();
    let q = fld.size();
    let total = q
        .checked_pow(n2 as u32 - 1)
        .filter(|&t| t <= 1 << 22)
        .ok_or_else(|| Error::Cap("translation search".into()))?;
    for code in 0..total {
        let mut w = vec![0; n2];
        let mut c = code;
        for wi in w.iter_mut().skip(1) {
            *wi = c % q;
            c /= q;
        }
        if g.eval(&w) == target {
            return Ok(Some(w));
        }
    }
    Ok(None)
}

/// Exact loci pulled back through a certificate.
#[derive(Clone, Debug)]
pub enum DeltaDescription {
    /// `Δ(X) = X ∖ excluded`.
    Inner { excluded: LinearSubspace },
    /// `Δ'(X) = h0 ∖ (s ∪ t)`.
    Outer {
        h0: LinearSubspace,
        s: LinearSubspace,
        t: LinearSubspace,
    },
}

pub fn delta_inner(cert: &InnerCertificate) -> DeltaDescription {
    let f = cert.matrix.field();
    let n2 = cert.matrix.size();
    let z = LinearSubspace::from_equations(f, n2, &[unit(n2, 0), unit(n2, 2)]);
    DeltaDescription::Inner {
        excluded: z.transform(&cert.matrix),
    }
}

pub fn delta_outer(cert: &OuterCertificate) -> DeltaDescription {
    let f = cert.matrix.field();
    let n2 = cert.matrix.size();
    let e = cert.e as usize;
    let mut s_eq = vec![0; n2];
    let mut t_eq = vec![0; n2];
    for (i, row) in cert.alpha.iter().enumerate() {
        s_eq[i + 1] = frob_root(f, row[e], cert.e);
        t_eq[i + 1] = row[0];
    }
    let h0 = LinearSubspace::from_equations(f, n2, &[unit(n2, 0)]);
    let s = LinearSubspace::from_equations(f, n2, &[unit(n2, 0), s_eq]);
    let t = LinearSubspace::from_equations(f, n2, &[unit(n2, 0), t_eq]);
    let m = &cert.matrix;
    DeltaDescription::Outer {
        h0: h0.transform(m),
        s: s.transform(m),
        t: t.transform(m),
    }
}

fn unit(n: usize, i: usize) -> Vec<Elem> {
    (0..n).map(|k| (k == i) as Elem).collect()
}

impl DeltaDescription {
    pub fn base_change(&self, e: &crate::algebra::field::Embedding) -> DeltaDescription {
        match self {
            DeltaDescription::Inner { excluded } => DeltaDescription::Inner {
                excluded: excluded.embed(e),
            },
            DeltaDescription::Outer { h0, s, t } => DeltaDescription::Outer {
                h0: h0.embed(e),
                s: s.embed(e),
                t: t.embed(e),
            },
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct PointVerdict {
    pub point: String,
    pub coords: Vec<Vec<u64>>,
    pub kind: String,
    pub status: String,
    pub group: Option<GroupId>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ScanReport {
    pub field: String,
    pub smooth_points_scanned: usize,
    pub inner_galois: usize,
    pub inner_fraction: Option<f64>,
    pub hyperplanes: Vec<String>,
    pub outer_points_scanned: usize,
    pub outer_galois: usize,
    pub outer_fraction: Option<f64>,
    pub verdicts: Vec<PointVerdict>,
}

fn verdict(x: &Hypersurface, p: &ProjPoint, opts: &GaloisOptions) -> PointVerdict {
    let point = p.to_string();
    let coords = crate::report::point_coeffs(p);
    match is_galois(x, p, opts) {
        Ok(r) => PointVerdict {
            point,
            coords,
            kind: r.kind.to_string(),
            status: match &r.reason {
                Some(why) if r.status == Status::NotGalois => format!("not_galois ({why})"),
                _ => r.status.to_string(),
            },
            group: r.group,
        },
        Err(e) => PointVerdict {
            point,
            coords,
            kind: if x.contains(p).unwrap_or(false) {
                "singular".into()
            } else {
                "outer".into()
            },
            status: e.code().to_string(),
            group: None,
        },
    }
}

/// Empirical Galois densities over `GF(q^m)`: inner over smooth points of `X`
/// and outer over the points of the candidate hyperplanes. `samples = 0`
/// scans exhaustively.
pub fn scan_density(
    x: &Hypersurface,
    m: u32,
    samples: usize,
    seed: u64,
    opts: &GaloisOptions,
    mode: Mode,
) -> Result<ScanReport> {
    x.require_integral()?;
    let (xm, emb) = x.extend(m)?;
    let smooth: Vec<ProjPoint> = if samples == 0 {
        xm.rational_points()?
            .into_iter()
            .filter(|q| !xm.singular_at(q).unwrap_or(true))
            .collect()
    } else {
        let (_, s) = x.sample_points(m, samples, seed)?;
        s.into_iter()
            .filter(|sp| sp.smooth)
            .map(|sp| sp.point)
            .collect()
    };
    let inner = par::map(mode, &smooth, |q| verdict(&xm, q, opts));
    let inner_galois = inner.iter().filter(|v| v.status == "galois").count();
    let mut hyperplanes = Vec::new();
    if let Detection::Found(c) = detect_outer_dense(x)? {
        if let DeltaDescription::Outer { h0, .. } = delta_outer(&c) {
            hyperplanes.push(h0.embed(&emb));
        }
    } else {
        let t = x.strange_center()?;
        if t.dim() == x.dim() as isize - 1 {
            let dual = LinearSubspace::from_equations(x.field(), x.nvars(), t.basis());
            for h in dual.points()? {
                hyperplanes.push(
                    LinearSubspace::from_equations(x.field(), x.nvars(), &[h.coords().to_vec()])
                        .embed(&emb),
                );
            }
        }
    }
    let mut outer_pts: Vec<ProjPoint> = Vec::new();
    for h in &hyperplanes {
        let pts = h.points()?;
        if samples == 0 || pts.len() <= samples {
            outer_pts.extend(pts);
        } else {
            let step = pts.len() / samples;
            outer_pts.extend(pts.into_iter().step_by(step.max(1)).take(samples));
        }
    }
    let outer = par::map(mode, &outer_pts, |q| {
        if xm.contains(q).unwrap_or(false) {
            PointVerdict {
                point: q.to_string(),
                coords: crate::report::point_coeffs(q),
                kind: "on_x".into(),
                status: "not_outer".into(),
                group: None,
            }
        } else {
            verdict(&xm, q, opts)
        }
    });
    let outer_galois = outer.iter().filter(|v| v.status == "galois").count();
    let frac = |a: usize, b: usize| (b > 0).then(|| a as f64 / b as f64);
    let mut verdicts = inner;
    verdicts.extend(outer);
    Ok(ScanReport {
        field: xm.field().to_string(),
        smooth_points_scanned: smooth.len(),
        inner_galois,
        inner_fraction: frac(inner_galois, smooth.len()),
        hyperplanes: hyperplanes.iter().map(|h| h.to_string()).collect(),
        outer_points_scanned: outer_pts.len(),
        outer_galois,
        outer_fraction: frac(outer_galois, outer_pts.len()),
        verdicts,
    })
}

/// Kind of a query point, or `None` for singular points.
pub fn point_kind(x: &Hypersurface, p: &ProjPoint) -> Result<Option<PointKind>> {
    if !x.contains(p)? {
        return Ok(Some(PointKind::Outer));
    }
    Ok((!x.singular_at(p)?).then_some(PointKind::Inner))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::parse::parse_poly;

    fn hs(s: &str) -> Hypersurface {
        Hypersurface::new(parse_poly(s, None).unwrap().poly).unwrap()
    }

    #[test]
    fn cusp_certificates() {
        let x = hs("X0^2*X1 - X2^3 over GF(3)");
        let c = detect_inner_dense(&x).unwrap();
        let c = c.found().unwrap();
        assert!(c.matrix.is_identity());
        assert_eq!(c.e, 1);
        let o = detect_outer_dense(&x).unwrap();
        let o = o.found().unwrap();
        assert_eq!(o.alpha, vec![vec![1, 0], vec![0, 2]]);
        let DeltaDescription::Outer { h0, s, t } = delta_outer(o) else {
            panic!()
        };
        let f = x.field();
        assert_eq!(h0.equations(), vec![vec![1, 0, 0]]);
        assert_eq!(
            s.points().unwrap(),
            vec![ProjPoint::new(f, vec![0, 1, 0]).unwrap()]
        );
        assert_eq!(
            t.points().unwrap(),
            vec![ProjPoint::new(f, vec![0, 0, 1]).unwrap()]
        );
    }

    #[test]
    fn negative_controls() {
        let x = hs("X0^2*X1 - X2^3 + X1^2*X2 over GF(3)");
        assert_eq!(
            detect_outer_dense(&x).unwrap().reason(),
            Some("additivity_failure")
        );
        let k = hs("X0^3*X1 + X1^3*X2 + X2^3*X0 over GF(2)");
        assert!(detect_inner_dense(&k).unwrap().reason().is_some());
        let q = hs("X0^3*X1 + X0^2*X2^2 + X3^4 over GF(2) in P^3");
        assert_eq!(detect_inner_dense(&q).unwrap().reason(), Some("no_vertex"));
        assert!(detect_outer_dense(&q).unwrap().found().is_some());
        let g = hs("X0^4 + X1^4 + X2^4 + X0*X1*X2^2 over GF(5)");
        assert_eq!(
            detect_inner_dense(&g).unwrap().reason(),
            Some("degree_not_p_power")
        );
    }

    #[test]
    fn twisted_normal_form() {
        let x = hs("X0^3*X1 - X2^4 over GF(2) in P^3");
        let mut rng = <rand_chacha::ChaCha8Rng as rand::SeedableRng>::seed_from_u64(3);
        for _ in 0..5 {
            let m = ProjTransform::random(x.field(), 4, &mut rng);
            let y = x.transform(&m).unwrap();
            let c = detect_inner_dense(&y).unwrap();
            assert!(c.found().unwrap().residual.is_zero());
            let o = detect_outer_dense(&y).unwrap();
            assert!(o.found().unwrap().residual.is_zero());
        }
    }
}
