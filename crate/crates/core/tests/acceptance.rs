//! End-to-end acceptance suite. Each criterion prints one PASS/FAIL line; the
//! process exits nonzero if any criterion fails or overruns its time limit.

use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use galois_locus::algebra::factor::{expand_factors, factor_multivariate};
use galois_locus::algebra::parse::{parse_point, parse_poly};
use galois_locus::algebra::{make_field, Elem, FieldDesc, Mono, MultiPoly};
use galois_locus::classify::{
    delta_outer, detect_inner_dense, detect_outer_dense, inner_model, outer_model, DeltaDescription,
};
use galois_locus::galois::{
    is_galois, orbit_transitivity_check, product_formula_check, slice_check, GaloisOptions,
    GaloisReport, PointKind, Status,
};
use galois_locus::geometry::{
    projective_points, substitute_linear, Hypersurface, LinearSubspace, ProjPoint, ProjTransform,
};
use galois_locus::oracle::{cross_check, DEFAULT_BUDGET};
use galois_locus::par::Mode;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Fail(String);

impl From<galois_locus::Error> for Fail {
    fn from(e: galois_locus::Error) -> Self {
        Fail(e.to_string())
    }
}

impl From<String> for Fail {
    fn from(s: String) -> Self {
        Fail(s)
    }
}

impl From<&str> for Fail {
    fn from(s: &str) -> Self {
        Fail(s.to_string())
    }
}

type Check = Result<String, Fail>;

const CUBIC: &str = "X0^2*X1 - X2^3 over GF(3)";
const QUARTIC: &str = "X0^3*X1 - X2^4 over GF(4)";

fn hs(s: &str) -> Hypersurface {
    Hypersurface::new(parse_poly(s, None).unwrap().poly).unwrap()
}

fn pt(x: &Hypersurface, s: &str) -> ProjPoint {
    ProjPoint::new(x.field(), parse_point(s, x.field()).unwrap()).unwrap()
}

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), Fail> {
    if ok {
        Ok(())
    } else {
        Err(Fail(msg()))
    }
}

fn opts() -> GaloisOptions {
    GaloisOptions::default()
}

fn cyclic(r: &GaloisReport, n: usize) -> bool {
    r.group.as_ref().and_then(|g| g.invariant_factors.clone()) == Some(vec![n])
}

fn elementary(r: &GaloisReport, p: usize, e: usize) -> bool {
    r.group.as_ref().and_then(|g| g.invariant_factors.clone()) == Some(vec![p; e])
}

/// `F = X0^(d-1) X1 - X2^d` evaluated directly, for counting points without
/// going through the hypersurface code.
fn family_value(f: &FieldDesc, d: u64, c: &[Elem]) -> Elem {
    f.sub(f.mul(f.pow(c[0], d - 1), c[1]), f.pow(c[2], d))
}

/// The singular points of the family are exactly those with `X0 = 0`.
fn family_points(f: &FieldDesc, d: u64) -> (Vec<ProjPoint>, Vec<ProjPoint>) {
    projective_points(f, 3)
        .unwrap()
        .into_iter()
        .filter(|p| family_value(f, d, p.coords()) == 0)
        .partition(|p| p.coords()[0] != 0)
}

/// Criterion 1.
fn inner_cubic(galois: &mut Vec<GaloisReport>) -> Check {
    let (x, _) = hs(CUBIC).extend(2)?;
    let f = x.field().clone();
    let (smooth, singular) = family_points(&f, 3);
    let listed = x.rational_points()?;
    ensure(listed.len() == smooth.len() + singular.len(), || {
        format!(
            "rational_points found {}, brute force {}",
            listed.len(),
            smooth.len() + singular.len()
        )
    })?;
    for p in &listed {
        let r = is_galois(&x, p, &opts());
        let on_smooth = smooth.contains(p);
        match r {
            Ok(r)
                if on_smooth
                    && r.status == Status::Galois
                    && r.kind == PointKind::Inner
                    && cyclic(&r, 2) =>
            {
                galois.push(r)
            }
            Err(e) if !on_smooth && e.code() == "singular_point" => {}
            Ok(r) => return Err(format!("{p}: {} {:?}", r.status, r.group).into()),
            Err(e) => return Err(format!("{p}: {e}").into()),
        }
    }
    Ok(format!(
        "X(GF(9)) has {} points: {} smooth all galois Z/2, singular {:?} rejected",
        listed.len(),
        smooth.len(),
        singular
    ))
}

/// Criterion 2.
fn inner_quartic(galois: &mut Vec<GaloisReport>) -> Check {
    let x4 = hs(QUARTIC);
    let (x, _) = x4.extend(2)?;
    let f = x.field().clone();
    let (smooth, singular) = family_points(&f, 4);
    ensure(
        x.rational_points()?.len() == smooth.len() + singular.len(),
        || "point count mismatch".into(),
    )?;
    let (x256, sampled) = x4.sample_points(4, 12, 7)?;
    let mut checked = 0;
    for (xx, p) in smooth.iter().map(|p| (&x, p)).chain(
        sampled
            .iter()
            .filter(|s| s.smooth)
            .map(|s| (&x256, &s.point)),
    ) {
        ensure(xx.contains(p)? && !xx.singular_at(p)?, || {
            format!("{p} is not a smooth point")
        })?;
        let r = is_galois(xx, p, &opts()).map_err(|e| format!("{p}: {e}"))?;
        ensure(r.status == Status::Galois && cyclic(&r, 3), || {
            format!("{p}: {} {:?}", r.status, r.group)
        })?;
        if xx.field().same(&f) {
            galois.push(r);
        }
        checked += 1;
    }
    ensure(checked >= 20, || format!("only {checked} smooth points"))?;
    let mut rejected = 0;
    for xx in [&x, &x256] {
        let line = LinearSubspace::from_equations(xx.field(), 3, &[vec![1, 0, 0], vec![0, 0, 1]]);
        for p in line.points()? {
            ensure(xx.contains(&p)?, || format!("{p} should lie on X"))?;
            match is_galois(xx, &p, &opts()) {
                Err(e) if e.code() == "singular_point" => rejected += 1,
                other => return Err(format!("{p}: expected singular_point, got {other:?}").into()),
            }
        }
    }
    Ok(format!(
        "{} smooth points of X(GF(16)) and {} sampled over GF(256), all galois Z/3; {rejected} points of X0=X2=0 rejected",
        smooth.len(),
        checked - smooth.len()
    ))
}

/// Criterion 3.
fn outer_suite(galois: &mut Vec<GaloisReport>) -> Check {
    let mut summary = Vec::new();
    for (src, p, e) in [(CUBIC, 3, 1), (QUARTIC, 2, 2)] {
        let base = hs(src);
        let cert = detect_outer_dense(&base)?;
        let cert = cert.found().ok_or("outer certificate missing")?;
        let DeltaDescription::Outer { h0, s, t } = delta_outer(cert) else {
            unreachable!()
        };
        let (x, emb) = base.extend(2)?;
        let f = x.field().clone();
        let expect_h0 = LinearSubspace::from_equations(&f, 3, &[vec![1, 0, 0]]);
        let sp = pt(&x, "0:1:0");
        let tp = pt(&x, "0:0:1");
        ensure(h0.embed(&emb) == expect_h0, || format!("H0 = {h0}"))?;
        ensure(s.embed(&emb).points()? == vec![sp.clone()], || {
            format!("S = {s}")
        })?;
        ensure(t.embed(&emb).points()? == vec![tp.clone()], || {
            format!("T = {t}")
        })?;
        let mut found = 0;
        for q in expect_h0.points()? {
            let r = is_galois(&x, &q, &opts());
            let exceptional = q == sp || q == tp;
            match r {
                Ok(r)
                    if !exceptional
                        && r.status == Status::Galois
                        && r.kind == PointKind::Outer
                        && elementary(&r, p, e) =>
                {
                    found += 1;
                    galois.push(r);
                }
                Ok(r) if exceptional && r.status == Status::NotGalois => {}
                Err(_) if exceptional => {}
                Ok(r) => return Err(format!("{src} at {q}: {} {:?}", r.status, r.group).into()),
                Err(err) => return Err(format!("{src} at {q}: {err}").into()),
            }
        }
        let mut off = 0;
        for q in projective_points(base.field(), 3)? {
            if q.coords()[0] == 0 || base.contains(&q)? {
                continue;
            }
            let r = is_galois(&base, &q, &opts()).map_err(|err| format!("{src} at {q}: {err}"))?;
            ensure(r.status == Status::NotGalois, || {
                format!("{src} at {q}: {}", r.status)
            })?;
            off += 1;
        }
        summary.push(format!(
            "{src}: {found} outer galois on H0(GF(q^2)), 0 of {off} off H0 over GF(q)"
        ));
    }
    Ok(summary.join("; "))
}

/// Criterion 4.
fn slice_suite() -> Check {
    let mut summary = Vec::new();
    for src in [
        "X0^2*X1 - X2^3 over GF(3) in P^3",
        "X0^3*X1 - X2^4 over GF(2) in P^3",
        "X0^3*X1 + X0^2*X2^2 + X3^4 over GF(2) in P^3",
    ] {
        let (x, _) = hs(src).extend(2)?;
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        let f = x.field().clone();
        let mut inner = Vec::new();
        while inner.len() < 8 {
            let p = ProjPoint::new(&f, (0..4).map(|_| f.random(&mut rng)).collect());
            let Ok(p) = p else { continue };
            if x.contains(&p)? && !x.singular_at(&p)? && !inner.contains(&p) {
                inner.push(p);
            }
        }
        let h0 = LinearSubspace::from_equations(&f, 4, &[vec![1, 0, 0, 0]]);
        let t = x.strange_center()?;
        let outer: Vec<ProjPoint> = h0
            .points()?
            .into_iter()
            .filter(|p| !x.contains(p).unwrap() && !t.contains(p))
            .take(16)
            .collect();
        let (mut good, mut tried) = (0, 0);
        for p in inner.iter().chain(&outer) {
            tried += 1;
            if is_galois(&x, p, &opts())?.status != Status::Galois {
                continue;
            }
            let s = slice_check(&x, p, &opts()).map_err(|e| format!("{src} at {p}: {e}"))?;
            ensure(s.status_x == Status::Galois, || {
                format!("{src} at {p}: slice check disagrees with is_galois")
            })?;
            ensure(
                s.status_section == Status::Galois
                    && s.groups_match
                    && !s.hypothesis_log.is_empty(),
                || {
                    format!(
                        "{src} at {p}: section {} {:?} vs {:?}",
                        s.status_section, s.group_section, s.group_x
                    )
                },
            )?;
            good += 1;
        }
        ensure(good >= 10, || {
            format!("{src}: only {good} of {tried} points galois")
        })?;
        summary.push(format!("{good} galois points"));
    }
    Ok(format!(
        "groups match on every section ({})",
        summary.join(", ")
    ))
}

fn twist(x: &Hypersurface, p: &ProjPoint, rng: &mut ChaCha8Rng) -> (Hypersurface, ProjPoint) {
    let m = ProjTransform::random(x.field(), x.nvars(), rng);
    (x.transform(&m).unwrap(), m.inverse().apply(p))
}

/// Criterion 5.
fn oracle_corpus() -> Check {
    let mut corpus: Vec<(String, Hypersurface, ProjPoint)> = Vec::new();
    let mut add = |src: &str, pts: &[&str]| {
        let x = hs(src);
        for s in pts {
            corpus.push((src.to_string(), x.clone(), pt(&x, s)));
        }
    };
    add(
        CUBIC,
        &["1:0:0", "1:1:1", "0:1:1", "0:1:2", "1:2:1", "1:1:0"],
    );
    add(
        "X0^3*X1 - X2^4 over GF(2)",
        &["1:1:1", "1:0:0", "0:1:1", "1:1:0"],
    );
    add(QUARTIC, &["1:t:1", "0:1:t", "1:t:0"]);
    add(
        "X0^3*X1 + X1^3*X2 + X2^3*X0 over GF(2)",
        &["1:1:1", "1:0:0"],
    );
    add(
        "X0^3*X1 + X1^3*X2 + X2^3*X0 over GF(3)",
        &["1:1:1", "1:0:0"],
    );
    add("X0^4*X1 - X2^5 over GF(5)", &["1:0:0", "0:1:1", "1:2:1"]);
    let mut rng = ChaCha8Rng::seed_from_u64(5);
    let base: Vec<(String, Hypersurface, ProjPoint)> = corpus.iter().take(10).cloned().collect();
    for (src, x, p) in base.iter().step_by(2) {
        let (y, q) = twist(x, p, &mut rng);
        corpus.push((format!("twist of {src}"), y, q));
    }
    let f5 = make_field(5, 1, None)?;
    while corpus.iter().filter(|c| c.0.starts_with("random")).count() < 5 {
        let g = random_poly(&f5, 3, 4, 8, &mut rng);
        let Ok(x) = Hypersurface::new(g) else {
            continue;
        };
        if !x.is_integral()? {
            continue;
        }
        let p = ProjPoint::new(&f5, (0..3).map(|_| f5.random(&mut rng)).collect());
        let Ok(p) = p else { continue };
        if x.contains(&p)? && x.singular_at(&p)? {
            continue;
        }
        corpus.push((format!("random quartic {}", x.poly()), x, p));
    }
    let (mut galois, mut full) = (0, 0);
    for (src, x, p) in &corpus {
        let r = is_galois(x, p, &opts()).map_err(|e| format!("{src} at {p}: {e}"))?;
        let cc = cross_check(x, p, &r, DEFAULT_BUDGET, Mode::default())
            .map_err(|e| format!("{src} at {p}: {e}"))?;
        let tower = cc
            .tower
            .as_ref()
            .map_err(|e| format!("{src} at {p}: tower {e}"))?;
        let claims = r.status == Status::Galois;
        ensure(r.status != Status::Inconclusive, || {
            format!("{src} at {p}: inconclusive")
        })?;
        ensure(tower.galois == claims, || {
            format!(
                "{src} at {p}: is_galois {} but tower {}",
                r.status, tower.galois
            )
        })?;
        if let Ok(s) = &cc.pgl {
            ensure(!s.full_group || claims, || {
                format!("{src} at {p}: full linear group but {}", r.status)
            })?;
            full += s.full_group as usize;
        }
        ensure(cc.agrees, || format!("{src} at {p}: disagreement"))?;
        galois += claims as usize;
    }
    ensure(corpus.len() >= 30, || {
        format!("corpus has {} instances", corpus.len())
    })?;
    Ok(format!(
        "{} instances ({galois} galois), tower agrees on all, full linear group on {full}",
        corpus.len()
    ))
}

fn random_poly(
    f: &FieldDesc,
    nvars: usize,
    deg: u32,
    terms: usize,
    rng: &mut ChaCha8Rng,
) -> MultiPoly {
    let ts: Vec<(Mono, Elem)> = (0..terms)
        .map(|_| {
            let mut m = Mono::one();
            let mut left = deg;
            for i in 0..nvars - 1 {
                let e = rng.gen_range(0..=left);
                m = m.with(i, e);
                left -= e;
            }
            (m.with(nvars - 1, left), f.random(rng))
        })
        .collect();
    MultiPoly::from_terms(f, nvars, ts)
}

/// Criterion 6.
fn classification() -> Check {
    let families = [
        ("X0^3*X1 - X2^4 over GF(2)", true),
        ("X0^2*X1 - X2^3 over GF(3)", true),
        ("X0^3*X1 - X2^4 over GF(4)", true),
        ("X0^3*X1 + X0^2*X2^2 + X2^4 over GF(2)", false),
        ("X0^2*X1 + X0^2*X2 + X2^3 over GF(3)", false),
        ("X0^3*X1 + t*X0^2*X2^2 + X2^4 over GF(4)", false),
    ];
    let mut certified = 0;
    for (i, (src, inner)) in families.iter().enumerate() {
        let x = hs(src);
        let f = x.field().clone();
        let mut rng = ChaCha8Rng::seed_from_u64(100 + i as u64);
        for k in 0..25 {
            let m = ProjTransform::random(&f, 3, &mut rng);
            let y = x.transform(&m)?;
            let ok = if *inner {
                let d = detect_inner_dense(&y)?;
                let c = d
                    .found()
                    .ok_or_else(|| format!("{src} twist {k}: {:?}", d.reason()))?;
                let model = inner_model(&f, 3, x.degree()).scale(c.scalar);
                c.residual.is_zero() && substitute_linear(y.poly(), &c.matrix)? == model
            } else {
                let d = detect_outer_dense(&y)?;
                let c = d
                    .found()
                    .ok_or_else(|| format!("{src} twist {k}: {:?}", d.reason()))?;
                let model = outer_model(&f, 3, c.p, c.e, &c.alpha);
                c.residual.is_zero() && substitute_linear(y.poly(), &c.matrix)? == model
            };
            ensure(ok, || {
                format!("{src} twist {k}: certificate does not verify")
            })?;
            certified += 1;
        }
    }
    let controls = [
        (
            "X0^4 + X1^4 + X2^4 + X0*X1*X2^2 over GF(5)",
            true,
            "degree_not_p_power",
        ),
        (
            "X0^4 + X1^4 + X2^4 + X0*X1*X2^2 over GF(5)",
            false,
            "degree_not_p_power",
        ),
        (
            "X0^3*X1 + X0^2*X2^2 + X3^4 over GF(2) in P^3",
            true,
            "no_vertex",
        ),
        (
            "X0^3*X1 + X1^3*X2 + X2^3*X0 over GF(2)",
            false,
            "additivity_failure",
        ),
    ];
    for (src, inner, want) in controls {
        let x = hs(src);
        let got = if inner {
            detect_inner_dense(&x)?.reason()
        } else {
            detect_outer_dense(&x)?.reason()
        };
        ensure(got == Some(want), || {
            format!("{src}: expected {want}, got {got:?}")
        })?;
    }
    Ok(format!(
        "{certified} twisted certificates verified, {} negative controls rejected",
        controls.len()
    ))
}

/// Criterion 7.
fn invariants(galois: &[GaloisReport]) -> Check {
    for r in galois {
        ensure(product_formula_check(r)?, || {
            format!("product formula fails at {}", r.automorphisms.join(", "))
        })?;
    }
    let mut lines = Vec::new();
    for (src, p) in [
        (CUBIC, "1:1:1"),
        (CUBIC, "0:1:1"),
        (QUARTIC, "1:1:1"),
        (QUARTIC, "0:1:t"),
    ] {
        let x = hs(src);
        let r = is_galois(&x, &pt(&x, p), &opts())?;
        let o = orbit_transitivity_check(&r, 10, 1)?;
        ensure(o.transitive && o.lines_checked >= 10, || {
            format!("{src} at {p}: {o:?}")
        })?;
        lines.push(o.lines_checked);
    }
    Ok(format!(
        "product formula holds at {} galois points; orbits transitive on {lines:?} lines",
        galois.len()
    ))
}

fn same_verdict(
    a: &galois_locus::Result<GaloisReport>,
    b: &galois_locus::Result<GaloisReport>,
) -> bool {
    match (a, b) {
        (Ok(a), Ok(b)) => {
            a.status == b.status && a.kind == b.kind && a.group == b.group && a.degree == b.degree
        }
        (Err(a), Err(b)) => a.code() == b.code(),
        _ => false,
    }
}

/// Criterion 8.
fn properties() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let cases = [
        (CUBIC, vec!["1:1:1", "0:1:1", "1:2:1", "0:1:0"]),
        (QUARTIC, vec!["1:1:1", "0:1:t", "1:t:0"]),
        (
            "X0^3*X1 + X1^3*X2 + X2^3*X0 over GF(3)",
            vec!["1:1:1", "1:0:0"],
        ),
    ];
    let mut pairs = 0;
    for k in 0..100 {
        let (src, pts) = &cases[k % cases.len()];
        let x = hs(src);
        let m = ProjTransform::random(x.field(), 3, &mut rng);
        let y = x.transform(&m)?;
        let minv = m.inverse();
        let p = pt(&x, pts[k / cases.len() % pts.len()]);
        let (a, b) = (
            is_galois(&x, &p, &opts()),
            is_galois(&y, &minv.apply(&p), &opts()),
        );
        ensure(same_verdict(&a, &b), || {
            format!("{src} at {p} under {m}: {a:?} vs {b:?}")
        })?;
        ensure(
            y.strange_center()? == x.strange_center()?.transform(&minv),
            || format!("{src}: strange center under {m}"),
        )?;
        pairs += 1;
    }
    let cone = hs("X0^3*X1 - X2^4 over GF(2) in P^3");
    let solid = hs("X0^3*X1 + X0^2*X2^2 + X3^4 over GF(2) in P^3");
    for _ in 0..100 {
        let x = if rng.gen() { &cone } else { &solid };
        let m = ProjTransform::random(x.field(), 4, &mut rng);
        let y = x.transform(&m)?;
        let minv = m.inverse();
        ensure(
            y.cone_vertex()? == x.cone_vertex()?.transform(&minv),
            || format!("cone vertex under {m}"),
        )?;
        ensure(
            y.strange_center()? == x.strange_center()?.transform(&minv),
            || format!("strange center under {m}"),
        )?;
    }
    for k in 0..500u64 {
        let f = make_field(
            [2, 3, 5, 2][k as usize % 4],
            [1, 1, 1, 2][k as usize % 4],
            None,
        )?;
        let nvars = 1 + (k as usize % 3);
        let mut g = MultiPoly::one(&f, nvars);
        for _ in 0..rng.gen_range(1..4) {
            let h = random_poly(&f, nvars, rng.gen_range(1..4), 3, &mut rng);
            if !h.is_zero() {
                g = g.mul(&h);
            }
        }
        let fs = factor_multivariate(&g, k)?;
        let unit = MultiPoly::constant(&f, nvars, g.lc());
        ensure(expand_factors(&fs, &unit) == g, || {
            format!("factorization of {g} does not multiply back")
        })?;
    }
    let mut fields = 0;
    for (p, k) in [
        (2, 1),
        (2, 4),
        (2, 8),
        (3, 1),
        (3, 2),
        (3, 3),
        (5, 1),
        (5, 2),
        (7, 2),
    ] {
        let f = make_field(p, k, None)?;
        let q = f.size();
        for _ in 0..200 {
            let (a, b, c) = (f.random(&mut rng), f.random(&mut rng), f.random(&mut rng));
            ensure(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c), || {
                "addition not associative".into()
            })?;
            ensure(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c), || {
                "multiplication not associative".into()
            })?;
            ensure(
                f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)),
                || "not distributive".into(),
            )?;
            ensure(
                f.add(a, b) == f.add(b, a) && f.mul(a, b) == f.mul(b, a),
                || "not commutative".into(),
            )?;
            ensure(f.add(a, f.neg(a)) == 0 && f.mul(a, 1) == a, || {
                "bad identities".into()
            })?;
            ensure(a == 0 || f.mul(a, f.inv(a).unwrap()) == 1, || {
                format!("bad inverse in GF({q})")
            })?;
            ensure(f.pow(a, q) == a, || format!("a^q != a in GF({q})"))?;
            let fr = |x| f.frobenius_power(x, 1);
            ensure(
                fr(f.add(a, b)) == f.add(fr(a), fr(b)) && fr(f.mul(a, b)) == f.mul(fr(a), fr(b)),
                || "Frobenius is not a ring map".into(),
            )?;
        }
        fields += 1;
    }
    Ok(format!(
        "{pairs} transformed galois verdicts and strange centers, 100 cone vertices, 500 factorizations, {fields} fields"
    ))
}

fn criterion(n: u32, limit: Duration, f: impl FnOnce() -> Check) -> bool {
    let t = Instant::now();
    let r = catch_unwind(AssertUnwindSafe(f));
    let el = t.elapsed();
    let (ok, detail) = match r {
        Ok(Ok(d)) => (el <= limit, d),
        Ok(Err(Fail(e))) => (false, e),
        Err(_) => (false, "panicked".to_string()),
    };
    let verdict = if ok { "PASS" } else { "FAIL" };
    println!(
        "criterion {n}: {verdict} [{:.1}s of {}s] {detail}",
        el.as_secs_f64(),
        limit.as_secs()
    );
    ok
}

fn main() -> ExitCode {
    galois_locus::par::init_threads();
    let min = |m: u64| Duration::from_secs(60 * m);
    let mut galois = Vec::new();
    let results = [
        criterion(1, min(1), || inner_cubic(&mut galois)),
        criterion(2, min(2), || inner_quartic(&mut galois)),
        criterion(3, min(5), || outer_suite(&mut galois)),
        criterion(4, min(10), slice_suite),
        criterion(5, min(15), oracle_corpus),
        criterion(6, min(10), classification),
        criterion(7, min(10), || invariants(&galois)),
        criterion(8, min(10), properties),
    ];
    let failed = results.iter().filter(|&&ok| !ok).count();
    println!(
        "acceptance: {} of {} criteria passed",
        results.len() - failed,
        results.len()
    );
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
