//! The function field `L = K(x_1..x_n)[y]/(f)` and factorization of
//! univariate polynomials over it by the norm method.
//!
//! Internally the generator is `Y = a_D * y` where `a_D` is the leading
//! coefficient of `f` in `y`, so that its minimal polynomial
//! `f^(Y) = a_D^(D-1) f(Y / a_D)` is monic with polynomial coefficients.

use std::fmt;
use std::sync::Arc;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::factor::factor_multivariate;
use crate::algebra::field::{embed, Elem, Embedding, FieldDesc};
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::ratfunc::RationalFunc;
use crate::algebra::upoly::{resultant_in, FieldOps, Ring, UPoly};
use crate::error::{Error, Result};

struct Inner {
    base: FieldDesc,
    n: usize,
    degree: usize,
    /// `f` in `n + 1` variables, `y` last.
    original: MultiPoly,
    /// `a_D`, in `n` variables.
    lead: MultiPoly,
    /// Coefficients of the monic `f^`, in `n` variables.
    monic: Vec<MultiPoly>,
    monic_rf: Vec<RationalFunc>,
}

/// `K(x_1..x_n)[y]/(f)`.
#[derive(Clone)]
pub struct FunctionField(Arc<Inner>);

impl PartialEq for FunctionField {
    fn eq(&self, o: &Self) -> bool {
        Arc::ptr_eq(&self.0, &o.0) || (self.0.base == o.0.base && self.0.original == o.0.original)
    }
}

impl fmt::Debug for FunctionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for FunctionField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let n = self.0.n;
        let name = |i: usize| {
            if i == n {
                "y".to_string()
            } else {
                format!("x{}", i + 1)
            }
        };
        write!(
            f,
            "{}(x)[y]/({})",
            self.0.base,
            self.0.original.format_with(&name)
        )
    }
}

/// Move variable `yvar` to the last position.
fn y_last(f: &MultiPoly, yvar: usize) -> MultiPoly {
    let nv = f.nvars();
    let map: Vec<usize> = (0..nv)
        .map(|i| match i.cmp(&yvar) {
            std::cmp::Ordering::Less => i,
            std::cmp::Ordering::Equal => nv - 1,
            std::cmp::Ordering::Greater => i - 1,
        })
        .collect();
    f.remap_vars(nv, &map)
}

fn drop_last(p: &MultiPoly, n: usize) -> MultiPoly {
    let map: Vec<usize> = (0..p.nvars()).map(|i| if i < n { i } else { 0 }).collect();
    p.remap_vars(n, &map)
}

impl FunctionField {
    /// Build `L` from `f` with distinguished variable `yvar`; irreducibility
    /// over `K(x)` is certified by factoring.
    pub fn new(f: &MultiPoly, yvar: usize, seed: u64) -> Result<Self> {
        let ff = Self::new_unchecked(f, yvar)?;
        let with_y: Vec<(MultiPoly, usize)> = factor_multivariate(&ff.0.original, seed)?
            .into_iter()
            .filter(|(h, _)| h.degree_in(ff.0.n) > 0)
            .collect();
        if with_y.len() != 1 || with_y[0].1 != 1 {
            return Err(Error::precondition(
                "reducible_minpoly",
                format!("{} is reducible over K(x)", f),
            ));
        }
        Ok(ff)
    }

    /// Same as [`FunctionField::new`] without the irreducibility certificate.
    pub fn new_unchecked(f: &MultiPoly, yvar: usize) -> Result<Self> {
        if yvar >= f.nvars() {
            return Err(Error::precondition(
                "bad_variable",
                "distinguished variable outside the ring",
            ));
        }
        let d = f.degree_in(yvar);
        if d < 1 {
            return Err(Error::precondition(
                "independent_of_y",
                "minimal polynomial does not involve y",
            ));
        }
        let n = f.nvars() - 1;
        if n + 2 > crate::algebra::multipoly::MAX_VARS {
            return Err(Error::Cap("too many base variables".into()));
        }
        let original = y_last(f, yvar);
        let d = d as usize;
        let cs: Vec<MultiPoly> = original
            .coeffs_in(n)
            .iter()
            .map(|c| drop_last(c, n))
            .collect();
        let lead = cs[d].clone();
        let mut monic = Vec::with_capacity(d + 1);
        for (i, c) in cs.iter().enumerate() {
            monic.push(if i == d {
                MultiPoly::one(f.field(), n)
            } else {
                c.mul(&lead.pow((d - 1 - i) as u32))
            });
        }
        let monic_rf = monic
            .iter()
            .map(|c| RationalFunc::from_poly(c.clone()))
            .collect();
        Ok(FunctionField(Arc::new(Inner {
            base: f.field().clone(),
            n,
            degree: d,
            original,
            lead,
            monic,
            monic_rf,
        })))
    }

    pub fn base(&self) -> &FieldDesc {
        &self.0.base
    }

    /// Number of base variables.
    pub fn nvars(&self) -> usize {
        self.0.n
    }

    pub fn degree(&self) -> usize {
        self.0.degree
    }

    /// `f` with `y` as the last variable.
    pub fn minpoly(&self) -> &MultiPoly {
        &self.0.original
    }

    /// Coefficients `a_0, ..., a_D` of `f` in `y`.
    pub fn minpoly_coeffs(&self) -> Vec<MultiPoly> {
        self.0
            .original
            .coeffs_in(self.0.n)
            .iter()
            .map(|c| drop_last(c, self.0.n))
            .collect()
    }

    /// Leading coefficient `a_D` of `f` in `y`.
    pub fn lead(&self) -> &MultiPoly {
        &self.0.lead
    }

    /// Coefficients of the monic minimal polynomial of `Y = a_D y`.
    pub fn monic_minpoly(&self) -> &[MultiPoly] {
        &self.0.monic
    }

    pub fn zero(&self) -> FFElem {
        FFElem {
            parent: self.clone(),
            c: vec![RationalFunc::zero(&self.0.base, self.0.n); self.0.degree],
        }
    }

    pub fn one(&self) -> FFElem {
        self.from_base(RationalFunc::one(&self.0.base, self.0.n))
    }

    pub fn from_base(&self, r: RationalFunc) -> FFElem {
        let mut e = self.zero();
        e.c[0] = r;
        e
    }

    pub fn from_poly(&self, p: &MultiPoly) -> FFElem {
        self.from_base(RationalFunc::from_poly(p.clone()))
    }

    /// The internal generator `Y = a_D y`.
    pub fn yhat(&self) -> FFElem {
        let mut c = vec![RationalFunc::zero(&self.0.base, self.0.n); self.0.degree + 1];
        c[1] = RationalFunc::one(&self.0.base, self.0.n);
        self.reduce(c)
    }

    /// The class of `y`.
    pub fn y(&self) -> FFElem {
        let inv = RationalFunc::from_poly(self.0.lead.clone()).inv().unwrap();
        self.yhat().scale(&inv)
    }

    /// Element from coefficients in the `y` basis.
    pub fn from_y_coeffs(&self, c: &[RationalFunc]) -> FFElem {
        let y = self.y();
        let mut acc = self.zero();
        for r in c.iter().rev() {
            acc = acc.mul(&y).add(&self.from_base(r.clone()));
        }
        acc
    }

    fn reduce(&self, mut c: Vec<RationalFunc>) -> FFElem {
        let d = self.0.degree;
        for k in (d..c.len()).rev() {
            if c[k].is_zero() {
                continue;
            }
            let t = c[k].clone();
            for i in 0..d {
                let m = &self.0.monic_rf[i];
                if !m.is_zero() {
                    c[k - d + i] = c[k - d + i].sub(&t.mul(m));
                }
            }
            c[k] = t.zero_like();
        }
        c.resize(d, RationalFunc::zero(&self.0.base, self.0.n));
        FFElem {
            parent: self.clone(),
            c,
        }
    }

    /// Same minimal polynomial over `GF(q^m)`. Returns the field(s) of the
    /// factors over the larger constant field and whether `f` stayed
    /// irreducible (geometric integrality at that level).
    pub fn extend_constants(&self, m: u32, seed: u64) -> Result<ConstantExtension> {
        let big = self.0.base.extension(m)?;
        let e = embed(&self.0.base, &big)?;
        let fb = self.0.original.embed(&e);
        if m == 1 {
            return Ok(ConstantExtension {
                fields: vec![self.clone()],
                integral: true,
                embedding: e,
            });
        }
        let n = self.0.n;
        let parts: Vec<(MultiPoly, usize)> = factor_multivariate(&fb, seed)?
            .into_iter()
            .filter(|(h, _)| h.degree_in(n) > 0)
            .collect();
        let integral = parts.len() == 1 && parts[0].1 == 1;
        let fields = if integral {
            vec![FunctionField::new_unchecked(&fb, n)?]
        } else {
            parts
                .iter()
                .map(|(h, _)| FunctionField::new_unchecked(h, n))
                .collect::<Result<_>>()?
        };
        Ok(ConstantExtension {
            fields,
            integral,
            embedding: e,
        })
    }

    /// Base change along an embedding of constant fields, without re-certifying.
    pub fn base_change(&self, e: &Embedding) -> Result<FunctionField> {
        FunctionField::new_unchecked(&self.0.original.embed(e), self.0.n)
    }

    /// Map an element along an embedding into the base-changed field.
    pub fn map_elem(&self, x: &FFElem, target: &FunctionField, e: &Embedding) -> FFElem {
        let dst = e.dst().clone();
        FFElem {
            parent: target.clone(),
            c: x.c
                .iter()
                .map(|r| r.map_coeffs(&dst, |a| e.map(a)))
                .collect(),
        }
    }

    /// Embed `K[x]` polynomials into the `n + 2` variable ring `(x, T, Y)`.
    fn lift_base(&self, p: &MultiPoly) -> MultiPoly {
        let map: Vec<usize> = (0..self.0.n).collect();
        p.remap_vars(self.0.n + 2, &map)
    }

    fn t_var(&self) -> usize {
        self.0.n
    }

    fn y_var(&self) -> usize {
        self.0.n + 1
    }

    /// Monic `f^(Y)` in the `(x, T, Y)` ring.
    fn monic_big(&self) -> MultiPoly {
        let y = self.y_var();
        let f = &self.0.base;
        MultiPoly::from_coeffs_in(
            f,
            self.0.n + 2,
            y,
            &self
                .0
                .monic
                .iter()
                .map(|c| self.lift_base(c))
                .collect::<Vec<_>>(),
        )
    }

    /// Clear denominators of a polynomial over `L`: returns `P(x, T, Y)` equal
    /// to `g` times a nonzero element of `K[x]`.
    fn clear_denominators(&self, g: &UPoly<FFElem>) -> MultiPoly {
        let f = &self.0.base;
        let mut den = MultiPoly::one(f, self.0.n);
        for c in g.coeffs() {
            for r in &c.c {
                if !r.is_poly() {
                    let gg = den.gcd(r.den());
                    den = den.mul(&r.den().div_exact(&gg).unwrap());
                }
            }
        }
        let den_rf = RationalFunc::from_poly(den);
        let mut terms = Vec::new();
        for (j, c) in g.coeffs().iter().enumerate() {
            for (k, r) in c.c.iter().enumerate() {
                let num = r.mul(&den_rf);
                let p = self.lift_base(num.as_poly().expect("denominator cleared"));
                for &(m, a) in p.terms() {
                    terms.push((
                        m.with(self.t_var(), j as u32).with(self.y_var(), k as u32),
                        a,
                    ));
                }
            }
        }
        MultiPoly::from_terms(f, self.0.n + 2, terms)
    }

    /// Polynomial in `(x, T, Y)` to a polynomial in `T` over `L`.
    fn to_l_poly(&self, p: &MultiPoly) -> UPoly<FFElem> {
        let n = self.0.n;
        let cs = p.coeffs_in(self.t_var());
        let elems: Vec<FFElem> = cs
            .iter()
            .map(|c| {
                let ys: Vec<RationalFunc> = c
                    .coeffs_in(self.y_var())
                    .iter()
                    .map(|a| RationalFunc::from_poly(drop_last(a, n)))
                    .collect();
                if ys.is_empty() {
                    self.zero()
                } else {
                    self.reduce(ys)
                }
            })
            .collect();
        UPoly::new(&self.zero(), elems)
    }

    /// Shift candidates in a frozen order: constants of `K` by encoding, then
    /// `x_i + c`, then `x_i * x_j + x_k + c`.
    fn lambda_candidates(&self) -> Vec<MultiPoly> {
        let f = &self.0.base;
        let nb = self.0.n + 2;
        let consts: Vec<Elem> = f.elements().take(64).collect();
        let mut out: Vec<MultiPoly> = consts
            .iter()
            .map(|&c| MultiPoly::constant(f, nb, c))
            .collect();
        for i in 0..self.0.n {
            for &c in consts.iter().take(16) {
                out.push(MultiPoly::var(f, nb, i).add(&MultiPoly::constant(f, nb, c)));
            }
        }
        for i in 0..self.0.n {
            for j in i..self.0.n {
                for k in 0..self.0.n {
                    for &c in consts.iter().take(4) {
                        let xi = MultiPoly::var(f, nb, i);
                        let xj = MultiPoly::var(f, nb, j);
                        out.push(
                            xi.mul(&xj)
                                .add(&MultiPoly::var(f, nb, k))
                                .add(&MultiPoly::constant(f, nb, c)),
                        );
                    }
                }
            }
        }
        out
    }

    /// Factor a squarefree polynomial over `L` by the norm method.
    pub fn trager_factor(&self, g: &UPoly<FFElem>, seed: u64) -> Result<TragerFactorization> {
        self.trager(g, seed, false)
    }

    fn trager(
        &self,
        g: &UPoly<FFElem>,
        seed: u64,
        linear_only: bool,
    ) -> Result<TragerFactorization> {
        let deg = g.deg();
        if deg < 0 {
            return Err(Error::precondition("zero_polynomial", "cannot factor zero"));
        }
        let g = g.monic();
        if deg <= 1 {
            let factors = if deg == 1 { vec![g.clone()] } else { vec![] };
            return Ok(TragerFactorization {
                factors,
                norm_factor_degrees: vec![],
                norm_factors: vec![],
                lambda: MultiPoly::zero(&self.0.base, self.0.n),
                complete: true,
            });
        }
        let fy = self.monic_big();
        let p0 = self.clear_denominators(&g);
        let t = self.t_var();
        let y = self.y_var();
        let nb = self.0.n + 2;
        let f = &self.0.base;
        let tv = MultiPoly::var(f, nb, t);
        let yv = MultiPoly::var(f, nb, y);
        let ident: Vec<MultiPoly> = (0..nb).map(|i| MultiPoly::var(f, nb, i)).collect();
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut chosen = None;
        for lam in self.lambda_candidates() {
            let mut sub = ident.clone();
            sub[t] = tv.sub(&lam.mul(&yv));
            let shifted = p0.substitute(&sub);
            if norm_squarefree_screen(&fy, &shifted, self.0.n, &mut rng)? {
                chosen = Some((lam, shifted));
                break;
            }
        }
        let Some((lam, shifted)) = chosen else {
            return Err(Error::Inconclusive(
                "no admissible shift for the norm".into(),
            ));
        };
        let norm = resultant_in(&fy, &shifted, y);
        let nfac: Vec<(MultiPoly, usize)> = factor_multivariate(&norm, seed)?
            .into_iter()
            .filter(|(h, _)| h.degree_in(t) > 0)
            .collect();
        if nfac.iter().any(|(_, m)| *m > 1) {
            return Err(Error::Internal(
                "norm not squarefree after screening".into(),
            ));
        }
        let dd = self.0.degree as i64;
        let mut back = ident.clone();
        back[t] = tv.add(&lam.mul(&yv));
        let mut factors = Vec::new();
        let mut degs = Vec::new();
        let mut norm_factors = Vec::new();
        for (h, _) in &nfac {
            let k = h.degree_in(t) / dd;
            degs.push(k as usize);
            norm_factors.push(h.clone());
            if linear_only && k != 1 {
                continue;
            }
            let hl = self.to_l_poly(&h.substitute(&back));
            let d = g.gcd(&hl);
            if d.deg() < 1 {
                return Err(Error::Internal("norm factor maps to a unit".into()));
            }
            factors.push(d);
        }
        degs.sort_unstable();
        let complete = !linear_only || degs.iter().all(|&k| k == 1);
        if complete {
            let prod = factors
                .iter()
                .fold(UPoly::constant(self.one()), |a, b| a.mul(b));
            if prod != g {
                return Err(Error::Internal(
                    "factors do not multiply back to the input".into(),
                ));
            }
        }
        Ok(TragerFactorization {
            factors,
            norm_factor_degrees: degs,
            norm_factors,
            lambda: drop_last(&lam, self.0.n),
            complete,
        })
    }

    /// Roots in `L` of a polynomial, each verified by substitution.
    pub fn count_roots_in_l(&self, g: &UPoly<FFElem>, seed: u64) -> Result<RootCount> {
        let tf = self.trager(g, seed, true)?;
        let mut roots = Vec::new();
        for h in &tf.factors {
            if h.deg() == 1 {
                let r = h.coeff(0).neg();
                if !g.eval(&r).is_zero() {
                    return Err(Error::Internal(
                        "reported root does not satisfy the polynomial".into(),
                    ));
                }
                roots.push(r);
            }
        }
        Ok(RootCount {
            count: roots.len(),
            roots,
            factor_degrees: tf.norm_factor_degrees,
            lambda: tf.lambda,
        })
    }

    /// Roots of the minimal polynomial of `y` over `L·F̄_q`.
    ///
    /// An irreducible factor of degree `k` over `L` splits over `L·F̄_q` into
    /// `s | k` conjugate pieces, and its norm factor splits over `GF(q^k)` into
    /// exactly `s` pieces; it contributes `k` linear factors iff `s = k`. When
    /// the count reaches `D`, all roots are materialized over `GF(q^M)`, `M` the
    /// lcm of the contributing `k`.
    pub fn geometric_roots(&self, m_max: u32, seed: u64) -> Result<GeometricRoots> {
        let g = self.monic_minpoly_over_l();
        let tf = self.trager(&g, seed, true)?;
        let d = self.0.degree;
        let t = self.t_var();
        let mut roots = Vec::new();
        for h in &tf.factors {
            let r = h.coeff(0).neg();
            if !g.eval(&r).is_zero() {
                return Err(Error::Internal(
                    "reported root does not satisfy the polynomial".into(),
                ));
            }
            roots.push(r);
        }
        let mut count = roots.len();
        let mut split = Vec::new();
        for h in &tf.norm_factors {
            let k = h.degree_in(t) as usize / d;
            if k < 2 {
                continue;
            }
            let big = self
                .0
                .base
                .extension(k as u32)
                .map_err(|e| Error::Inconclusive(e.to_string()))?;
            let e = embed(&self.0.base, &big)?;
            let pieces = factor_multivariate(&h.embed(&e), seed)?;
            if pieces.len() == k && pieces.iter().all(|(p, _)| p.degree_in(t) as usize == d) {
                count += k;
                split.push(k);
            }
        }
        let m_used = split.iter().fold(1usize, |a, &k| lcm(a, k)) as u32;
        let mut out = GeometricRoots {
            count,
            roots,
            field: self.clone(),
            m_used: 1,
            factor_degrees: tf.norm_factor_degrees.clone(),
            split_degrees: split,
            lambda: tf.lambda.clone(),
        };
        if count < d || m_used == 1 {
            return Ok(out);
        }
        if m_used > m_max {
            return Err(Error::Inconclusive(format!(
                "all {d} roots exist geometrically but need constants of degree {m_used} > m_max = {m_max}"
            )));
        }
        let big = self
            .0
            .base
            .extension(m_used)
            .map_err(|e| Error::Inconclusive(e.to_string()))?;
        let lm = self.base_change(&embed(&self.0.base, &big)?)?;
        let rc = lm.count_roots_in_l(&lm.monic_minpoly_over_l(), seed)?;
        if rc.count != d {
            return Err(Error::Internal(format!(
                "expected {d} roots at level {m_used}, found {}",
                rc.count
            )));
        }
        out.roots = rc.roots;
        out.field = lm;
        out.m_used = m_used;
        Ok(out)
    }

    /// Polynomial over `L` from polynomial coefficients in `x` (T-degree order).
    pub fn poly_from_base(&self, coeffs: &[MultiPoly]) -> UPoly<FFElem> {
        UPoly::new(
            &self.zero(),
            coeffs.iter().map(|c| self.from_poly(c)).collect(),
        )
    }

    /// The monic minimal polynomial of `Y` as a polynomial over `L`.
    pub fn monic_minpoly_over_l(&self) -> UPoly<FFElem> {
        self.poly_from_base(&self.0.monic)
    }
}

/// Certify that `res_Y(fy, shifted)` is squarefree in `T` by one good
/// specialization of the base variables (over `K`, then over an extension).
fn norm_squarefree_screen(
    fy: &MultiPoly,
    shifted: &MultiPoly,
    n: usize,
    rng: &mut ChaCha8Rng,
) -> Result<bool> {
    let f = fy.field().clone();
    let t = n;
    let y = n + 1;
    let full_deg = {
        let dy = fy.degree_in(y);
        dy * shifted.degree_in(t)
    };
    let try_at = |fy: &MultiPoly, sh: &MultiPoly, pt: &[Elem]| -> bool {
        let mut a = fy.clone();
        let mut b = sh.clone();
        for (i, &c) in pt.iter().enumerate() {
            a = a.eval_var(i, c);
            b = b.eval_var(i, c);
        }
        let r = resultant_in(&a, &b, y);
        match r.to_unipoly(t) {
            Some(u) => u.deg() == full_deg as isize && u.is_squarefree(),
            None => false,
        }
    };
    let q = f.size();
    let total = (q as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    let tries = 6usize;
    if total <= tries as u128 {
        for mut code in 0..total as u64 {
            let pt: Vec<Elem> = (0..n)
                .map(|_| {
                    let c = code % q;
                    code /= q;
                    c
                })
                .collect();
            if try_at(fy, shifted, &pt) {
                return Ok(true);
            }
        }
    } else {
        for _ in 0..tries {
            let pt: Vec<Elem> = (0..n).map(|_| f.random(rng)).collect();
            if try_at(fy, shifted, &pt) {
                return Ok(true);
            }
        }
    }
    if q >= 64 {
        return Ok(false);
    }
    let mut s = 2;
    while q.pow(s) < 64 {
        s += 1;
    }
    let big = f.extension(s)?;
    let e = embed(&f, &big)?;
    let (fb, sb) = (fy.embed(&e), shifted.embed(&e));
    for _ in 0..tries {
        let pt: Vec<Elem> = (0..n).map(|_| big.random(rng)).collect();
        if try_at(&fb, &sb, &pt) {
            return Ok(true);
        }
    }
    Ok(false)
}

/// Output of the norm method.
#[derive(Clone, Debug)]
pub struct TragerFactorization {
    /// Monic factors over `L` (only the linear ones when roots were requested).
    pub factors: Vec<UPoly<FFElem>>,
    /// Degrees over `L` of all irreducible factors, ascending.
    pub norm_factor_degrees: Vec<usize>,
    /// Irreducible factors of the norm, in variables `(x, T)` plus an unused slot.
    pub norm_factors: Vec<MultiPoly>,
    /// Shift used, as a polynomial in the base variables.
    pub lambda: MultiPoly,
    pub complete: bool,
}

/// Roots of the minimal polynomial after constant extension.
#[derive(Clone, Debug)]
pub struct GeometricRoots {
    /// Number of roots over `L·F̄_q`.
    pub count: usize,
    /// Roots (images of `Y`) in `field`; all of them when `count = D`.
    pub roots: Vec<FFElem>,
    pub field: FunctionField,
    pub m_used: u32,
    /// Degrees of the irreducible factors over `L` itself.
    pub factor_degrees: Vec<usize>,
    /// Degrees of the factors that split into linear pieces after extension.
    pub split_degrees: Vec<usize>,
    pub lambda: MultiPoly,
}

fn lcm(a: usize, b: usize) -> usize {
    let (mut x, mut y) = (a, b);
    while y != 0 {
        (x, y) = (y, x % y);
    }
    a / x * b
}

#[derive(Clone, Debug)]
pub struct RootCount {
    pub count: usize,
    pub roots: Vec<FFElem>,
    pub factor_degrees: Vec<usize>,
    pub lambda: MultiPoly,
}

#[derive(Clone, Debug)]
pub struct ConstantExtension {
    pub fields: Vec<FunctionField>,
    pub integral: bool,
    pub embedding: Embedding,
}

/// Element of `L`, stored as coefficients of `1, Y, ..., Y^(D-1)`.
#[derive(Clone)]
pub struct FFElem {
    parent: FunctionField,
    c: Vec<RationalFunc>,
}

impl PartialEq for FFElem {
    fn eq(&self, o: &Self) -> bool {
        self.c == o.c
    }
}

impl fmt::Debug for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FFElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .y_coeffs()
            .iter()
            .enumerate()
            .filter(|(_, r)| !r.is_zero())
            .map(|(k, r)| {
                let rs = if r.is_poly() && r.num().num_terms() == 1 {
                    r.to_string()
                } else {
                    format!("({r})")
                };
                match k {
                    0 => rs,
                    1 if r.is_one() => "y".into(),
                    1 => format!("{rs}*y"),
                    _ if r.is_one() => format!("y^{k}"),
                    _ => format!("{rs}*y^{k}"),
                }
            })
            .collect();
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}

impl FFElem {
    pub fn parent(&self) -> &FunctionField {
        &self.parent
    }

    /// Coefficients in the internal basis `1, Y, ...`.
    pub fn coeffs(&self) -> &[RationalFunc] {
        &self.c
    }

    /// Coefficients in the basis `1, y, ..., y^(D-1)`.
    pub fn y_coeffs(&self) -> Vec<RationalFunc> {
        let lead = RationalFunc::from_poly(self.parent.0.lead.clone());
        let mut pw = RationalFunc::one(self.parent.base(), self.parent.nvars());
        self.c
            .iter()
            .map(|r| {
                let out = r.mul(&pw);
                pw = pw.mul(&lead);
                out
            })
            .collect()
    }

    pub fn scale(&self, r: &RationalFunc) -> FFElem {
        FFElem {
            parent: self.parent.clone(),
            c: self.c.iter().map(|a| a.mul(r)).collect(),
        }
    }

    /// Whether the element lies in `K(x)`.
    pub fn in_base(&self) -> Option<RationalFunc> {
        self.c[1..]
            .iter()
            .all(|r| r.is_zero())
            .then(|| self.c[0].clone())
    }

    /// Evaluate this element, viewed as a polynomial in `Y`, at another element.
    /// For `s` a root of the minimal polynomial this is the image under `Y -> s`.
    pub fn substitute_generator(&self, s: &FFElem) -> FFElem {
        let mut acc = self.parent.zero();
        for r in self.c.iter().rev() {
            acc = acc.mul(s).add(&self.parent.from_base(r.clone()));
        }
        acc
    }
}

impl Ring for FFElem {
    fn zero_like(&self) -> Self {
        self.parent.zero()
    }

    fn one_like(&self) -> Self {
        self.parent.one()
    }

    fn is_zero(&self) -> bool {
        self.c.iter().all(|r| r.is_zero())
    }

    fn add(&self, o: &Self) -> Self {
        FFElem {
            parent: self.parent.clone(),
            c: self.c.iter().zip(&o.c).map(|(a, b)| a.add(b)).collect(),
        }
    }

    fn sub(&self, o: &Self) -> Self {
        FFElem {
            parent: self.parent.clone(),
            c: self.c.iter().zip(&o.c).map(|(a, b)| a.sub(b)).collect(),
        }
    }

    fn neg(&self) -> Self {
        FFElem {
            parent: self.parent.clone(),
            c: self.c.iter().map(|a| a.neg()).collect(),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        let d = self.c.len();
        let z = RationalFunc::zero(self.parent.base(), self.parent.nvars());
        let mut out = vec![z; 2 * d - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    out[i + j] = out[i + j].add(&a.mul(b));
                }
            }
        }
        self.parent.reduce(out)
    }

    fn div_exact(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    fn scale_int(&self, k: u64) -> Self {
        let f = self.parent.base();
        let r = RationalFunc::constant(
            f,
            self.parent.nvars(),
            f.from_int((k % f.characteristic()) as i64),
        );
        self.scale(&r)
    }
}

impl FieldOps for FFElem {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        if let Some(r) = self.in_base() {
            return Some(self.parent.from_base(r.inv()?));
        }
        let z = RationalFunc::zero(self.parent.base(), self.parent.nvars());
        let a = UPoly::new(&z, self.c.clone());
        let m = UPoly::new(&z, self.parent.0.monic_rf.clone());
        let (g, s, _) = a.xgcd(&m);
        if g.deg() != 0 {
            return None;
        }
        let mut c = s.into_coeffs();
        c.resize(self.c.len(), z);
        Some(FFElem {
            parent: self.parent.clone(),
            c,
        })
    }
}

/// Convenience: polynomial in `T` over `L` whose coefficients are base polynomials.
pub fn base_poly_in_t(l: &FunctionField, p: &MultiPoly, tvar: usize) -> UPoly<FFElem> {
    let n = l.nvars();
    let cs: Vec<MultiPoly> = p
        .coeffs_in(tvar)
        .iter()
        .map(|c| drop_last(&y_last(c, tvar), n))
        .collect();
    l.poly_from_base(&cs)
}
