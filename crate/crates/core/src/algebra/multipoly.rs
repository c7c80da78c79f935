//! Sparse multivariate polynomials over a finite field.
//!
//! Terms are kept sorted in descending graded-lexicographic order
//! (`X0 > X1 > ...`), never with a zero coefficient.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;

use crate::algebra::field::{Elem, Embedding, FieldDesc};
use crate::algebra::unipoly::UniPoly;

pub const MAX_VARS: usize = 8;

/// Exponent vector.
#[derive(Copy, Clone, PartialEq, Eq, Hash, Default)]
pub struct Mono(pub [u16; MAX_VARS]);

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl Mono {
    pub fn one() -> Mono {
        Mono([0; MAX_VARS])
    }

    pub fn var(i: usize) -> Mono {
        let mut m = Mono::one();
        m.0[i] = 1;
        m
    }

    pub fn from_slice(e: &[u32]) -> Mono {
        let mut m = Mono::one();
        for (i, &x) in e.iter().enumerate() {
            m.0[i] = x as u16;
        }
        m
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    #[inline]
    pub fn get(&self, i: usize) -> u32 {
        self.0[i] as u32
    }

    #[inline]
    pub fn with(&self, i: usize, e: u32) -> Mono {
        let mut m = *self;
        m.0[i] = e as u16;
        m
    }

    #[inline]
    pub fn mul(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.0[i] += o.0[i];
        }
        m
    }

    #[inline]
    pub fn divides(&self, o: &Mono) -> bool {
        (0..MAX_VARS).all(|i| self.0[i] <= o.0[i])
    }

    #[inline]
    pub fn div(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.0[i] -= o.0[i];
        }
        m
    }

    pub fn min(&self, o: &Mono) -> Mono {
        let mut m = *self;
        for i in 0..MAX_VARS {
            m.0[i] = m.0[i].min(o.0[i]);
        }
        m
    }
}

impl Ord for Mono {
    fn cmp(&self, o: &Self) -> Ordering {
        self.degree()
            .cmp(&o.degree())
            .then_with(|| self.0.cmp(&o.0))
    }
}

impl PartialOrd for Mono {
    fn partial_cmp(&self, o: &Self) -> Option<Ordering> {
        Some(self.cmp(o))
    }
}

fn binom_small(n: u64, k: u64, p: u64, f: &FieldDesc) -> Elem {
    if k > n {
        return 0;
    }
    let mut num = 1;
    let mut den = 1;
    for i in 0..k {
        num = f.mul(num, (n - i) % p);
        den = f.mul(den, (i + 1) % p);
    }
    f.mul(num, f.inv(den).unwrap())
}

/// `C(n, k)` reduced into the prime subfield (Lucas).
pub fn binom_mod(n: u64, k: u64, f: &FieldDesc) -> Elem {
    let p = f.characteristic();
    let (mut n, mut k) = (n, k);
    let mut acc = 1;
    while k > 0 || n > 0 {
        let b = binom_small(n % p, k % p, p, f);
        if b == 0 {
            return 0;
        }
        acc = f.mul(acc, b);
        n /= p;
        k /= p;
    }
    acc
}

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    field: FieldDesc,
    nvars: usize,
    terms: Vec<(Mono, Elem)>,
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&|i| format!("X{i}")))
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.format_with(&|i| format!("X{i}")))
    }
}

impl MultiPoly {
    pub fn zero(field: &FieldDesc, nvars: usize) -> Self {
        assert!(nvars <= MAX_VARS, "at most {MAX_VARS} variables supported");
        MultiPoly {
            field: field.clone(),
            nvars,
            terms: Vec::new(),
        }
    }

    pub fn constant(field: &FieldDesc, nvars: usize, c: Elem) -> Self {
        let mut p = MultiPoly::zero(field, nvars);
        if c != 0 {
            p.terms.push((Mono::one(), c));
        }
        p
    }

    pub fn one(field: &FieldDesc, nvars: usize) -> Self {
        MultiPoly::constant(field, nvars, 1)
    }

    pub fn var(field: &FieldDesc, nvars: usize, i: usize) -> Self {
        assert!(i < nvars);
        MultiPoly::term(field, nvars, Mono::var(i), 1)
    }

    pub fn term(field: &FieldDesc, nvars: usize, m: Mono, c: Elem) -> Self {
        let mut p = MultiPoly::zero(field, nvars);
        if c != 0 {
            p.terms.push((m, c));
        }
        p
    }

    /// Builds from arbitrary terms, combining duplicates.
    pub fn from_terms(
        field: &FieldDesc,
        nvars: usize,
        terms: impl IntoIterator<Item = (Mono, Elem)>,
    ) -> Self {
        let mut acc: BTreeMap<Mono, Elem> = BTreeMap::new();
        for (m, c) in terms {
            let e = acc.entry(m).or_insert(0);
            *e = field.add(*e, c);
        }
        Self::from_map(field, nvars, acc)
    }

    fn from_map(field: &FieldDesc, nvars: usize, acc: BTreeMap<Mono, Elem>) -> Self {
        let terms = acc.into_iter().rev().filter(|(_, c)| *c != 0).collect();
        MultiPoly {
            field: field.clone(),
            nvars,
            terms,
        }
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn terms(&self) -> &[(Mono, Elem)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0 == Mono::one())
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1 && self.terms[0] == (Mono::one(), 1)
    }

    /// Constant term.
    pub fn constant_coeff(&self) -> Elem {
        match self.terms.last() {
            Some((m, c)) if *m == Mono::one() => *c,
            _ => 0,
        }
    }

    pub fn coeff(&self, m: &Mono) -> Elem {
        self.terms
            .binary_search_by(|(t, _)| m.cmp(t))
            .map(|i| self.terms[i].1)
            .unwrap_or(0)
    }

    /// Leading term under grlex.
    pub fn leading(&self) -> Option<(Mono, Elem)> {
        self.terms.first().copied()
    }

    pub fn lc(&self) -> Elem {
        self.terms.first().map_or(0, |t| t.1)
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .iter()
            .map(|(m, _)| m.degree() as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn degree_in(&self, v: usize) -> i64 {
        self.terms
            .iter()
            .map(|(m, _)| m.get(v) as i64)
            .max()
            .unwrap_or(-1)
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m0, _)) => self.terms.iter().all(|(m, _)| m.degree() == m0.degree()),
        }
    }

    /// Variables occurring with positive exponent.
    pub fn vars_present(&self) -> Vec<usize> {
        (0..self.nvars)
            .filter(|&v| self.terms.iter().any(|(m, _)| m.get(v) > 0))
            .collect()
    }

    pub fn add(&self, o: &MultiPoly) -> MultiPoly {
        debug_assert_eq!(self.nvars, o.nvars);
        let f = &self.field;
        let mut out = Vec::with_capacity(self.terms.len() + o.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < o.terms.len() {
            let (ma, ca) = self.terms[i];
            let (mb, cb) = o.terms[j];
            match ma.cmp(&mb) {
                Ordering::Greater => {
                    out.push((ma, ca));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((mb, cb));
                    j += 1;
                }
                Ordering::Equal => {
                    let c = f.add(ca, cb);
                    if c != 0 {
                        out.push((ma, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&o.terms[j..]);
        MultiPoly {
            field: f.clone(),
            nvars: self.nvars,
            terms: out,
        }
    }

    pub fn neg(&self) -> MultiPoly {
        let f = &self.field;
        MultiPoly {
            field: f.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|&(m, c)| (m, f.neg(c))).collect(),
        }
    }

    pub fn sub(&self, o: &MultiPoly) -> MultiPoly {
        self.add(&o.neg())
    }

    pub fn scale(&self, a: Elem) -> MultiPoly {
        if a == 0 {
            return MultiPoly::zero(&self.field, self.nvars);
        }
        let f = &self.field;
        MultiPoly {
            field: f.clone(),
            nvars: self.nvars,
            terms: self.terms.iter().map(|&(m, c)| (m, f.mul(c, a))).collect(),
        }
    }

    pub fn mul_term(&self, mono: &Mono, a: Elem) -> MultiPoly {
        if a == 0 {
            return MultiPoly::zero(&self.field, self.nvars);
        }
        let f = &self.field;
        MultiPoly {
            field: f.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|&(m, c)| (m.mul(mono), f.mul(c, a)))
                .collect(),
        }
    }

    pub fn mul(&self, o: &MultiPoly) -> MultiPoly {
        if self.is_zero() || o.is_zero() {
            return MultiPoly::zero(&self.field, self.nvars);
        }
        if o.terms.len() == 1 {
            return self.mul_term(&o.terms[0].0, o.terms[0].1);
        }
        if self.terms.len() == 1 {
            return o.mul_term(&self.terms[0].0, self.terms[0].1);
        }
        let f = &self.field;
        let mut acc: BTreeMap<Mono, Elem> = BTreeMap::new();
        for &(ma, ca) in &self.terms {
            for &(mb, cb) in &o.terms {
                let e = acc.entry(ma.mul(&mb)).or_insert(0);
                *e = f.add(*e, f.mul(ca, cb));
            }
        }
        MultiPoly::from_map(f, self.nvars, acc)
    }

    pub fn pow(&self, mut e: u32) -> MultiPoly {
        let mut base = self.clone();
        let mut acc = MultiPoly::one(&self.field, self.nvars);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base);
            }
        }
        acc
    }

    /// Makes the grlex-leading coefficient 1.
    pub fn monic(&self) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        self.scale(self.field.inv(self.lc()).unwrap())
    }

    pub fn eval(&self, pt: &[Elem]) -> Elem {
        let f = &self.field;
        let mut acc = 0;
        for (m, c) in &self.terms {
            let mut t = *c;
            for (i, &x) in pt.iter().enumerate().take(self.nvars) {
                let e = m.get(i);
                if e > 0 {
                    t = f.mul(t, f.pow(x, e as u64));
                }
            }
            acc = f.add(acc, t);
        }
        acc
    }

    /// Substitute a constant for one variable (the variable stays in the ring).
    pub fn eval_var(&self, v: usize, x: Elem) -> MultiPoly {
        let f = &self.field;
        MultiPoly::from_terms(
            f,
            self.nvars,
            self.terms
                .iter()
                .map(|&(m, c)| (m.with(v, 0), f.mul(c, f.pow(x, m.get(v) as u64)))),
        )
    }

    /// `self(images[0], ..., images[nvars-1])`; all images share a ring.
    pub fn substitute(&self, images: &[MultiPoly]) -> MultiPoly {
        assert_eq!(images.len(), self.nvars);
        let target = &images[0];
        let (tf, tn) = (target.field.clone(), target.nvars);
        let mut pows: Vec<Vec<MultiPoly>> = images
            .iter()
            .map(|p| vec![MultiPoly::one(&tf, tn), p.clone()])
            .collect();
        let mut acc: BTreeMap<Mono, Elem> = BTreeMap::new();
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(&tf, tn, *c);
            for i in 0..self.nvars {
                let e = m.get(i) as usize;
                if e == 0 {
                    continue;
                }
                while pows[i].len() <= e {
                    let next = pows[i].last().unwrap().mul(&images[i]);
                    pows[i].push(next);
                }
                t = t.mul(&pows[i][e]);
            }
            for (mm, cc) in t.terms {
                let e = acc.entry(mm).or_insert(0);
                *e = tf.add(*e, cc);
            }
        }
        MultiPoly::from_map(&tf, tn, acc)
    }

    /// Divided-power derivative `D^(m)` in variable `v`.
    pub fn hasse_derivative(&self, v: usize, order: u32) -> MultiPoly {
        let f = &self.field;
        MultiPoly::from_terms(
            f,
            self.nvars,
            self.terms
                .iter()
                .filter(|(m, _)| m.get(v) >= order)
                .map(|&(m, c)| {
                    let e = m.get(v);
                    (
                        m.with(v, e - order),
                        f.mul(c, binom_mod(e as u64, order as u64, f)),
                    )
                }),
        )
    }

    pub fn partial(&self, v: usize) -> MultiPoly {
        self.hasse_derivative(v, 1)
    }

    /// Coefficients with respect to `v` (index = power of `v`); `v` removed.
    pub fn coeffs_in(&self, v: usize) -> Vec<MultiPoly> {
        let d = self.degree_in(v);
        if d < 0 {
            return Vec::new();
        }
        let mut buckets: Vec<Vec<(Mono, Elem)>> = vec![Vec::new(); d as usize + 1];
        for &(m, c) in &self.terms {
            buckets[m.get(v) as usize].push((m.with(v, 0), c));
        }
        buckets
            .into_iter()
            .map(|mut t| {
                t.sort_by(|a, b| b.0.cmp(&a.0));
                MultiPoly {
                    field: self.field.clone(),
                    nvars: self.nvars,
                    terms: t,
                }
            })
            .collect()
    }

    pub fn from_coeffs_in(
        field: &FieldDesc,
        nvars: usize,
        v: usize,
        coeffs: &[MultiPoly],
    ) -> MultiPoly {
        MultiPoly::from_terms(
            field,
            nvars,
            coeffs
                .iter()
                .enumerate()
                .flat_map(|(i, c)| c.terms.iter().map(move |&(m, a)| (m.with(v, i as u32), a))),
        )
    }

    /// View as a univariate polynomial in `v`; `None` if other variables occur.
    pub fn to_unipoly(&self, v: usize) -> Option<UniPoly> {
        let d = self.degree_in(v);
        let mut c = vec![0; (d + 1).max(0) as usize];
        for &(m, a) in &self.terms {
            if m.with(v, 0) != Mono::one() {
                return None;
            }
            c[m.get(v) as usize] = a;
        }
        Some(UniPoly::new(&self.field, c))
    }

    pub fn from_unipoly(u: &UniPoly, nvars: usize, v: usize) -> MultiPoly {
        MultiPoly::from_terms(
            u.field(),
            nvars,
            u.coeffs()
                .iter()
                .enumerate()
                .map(|(i, &c)| (Mono::var(v).with(v, i as u32), c)),
        )
    }

    pub fn map_coeffs(&self, dst: &FieldDesc, g: impl Fn(Elem) -> Elem) -> MultiPoly {
        MultiPoly::from_terms(dst, self.nvars, self.terms.iter().map(|&(m, c)| (m, g(c))))
    }

    pub fn embed(&self, e: &Embedding) -> MultiPoly {
        self.map_coeffs(e.dst(), |c| e.map(c))
    }

    /// Pull coefficients back along an embedding; `None` if some coefficient is outside.
    pub fn preimage(&self, e: &Embedding) -> Option<MultiPoly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for &(m, c) in &self.terms {
            terms.push((m, e.preimage(c)?));
        }
        Some(MultiPoly {
            field: e.src().clone(),
            nvars: self.nvars,
            terms,
        })
    }

    /// Re-index variables: variable `i` becomes `map[i]` in a ring with `nvars` variables.
    pub fn remap_vars(&self, nvars: usize, map: &[usize]) -> MultiPoly {
        MultiPoly::from_terms(
            &self.field,
            nvars,
            self.terms.iter().map(|&(m, c)| {
                let mut out = Mono::one();
                for (i, &t) in map.iter().enumerate() {
                    out.0[t] += m.0[i];
                }
                (out, c)
            }),
        )
    }

    pub fn with_nvars(&self, nvars: usize) -> MultiPoly {
        assert!(self.vars_present().iter().all(|&v| v < nvars));
        MultiPoly {
            field: self.field.clone(),
            nvars,
            terms: self.terms.clone(),
        }
    }

    /// Exact quotient, `None` if `d` does not divide `self`.
    pub fn div_exact(&self, d: &MultiPoly) -> Option<MultiPoly> {
        assert!(!d.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(self.clone());
        }
        let f = &self.field;
        if d.is_constant() {
            return Some(self.scale(f.inv(d.lc()).unwrap()));
        }
        let (lm, lc) = d.terms[0];
        let inv = f.inv(lc).unwrap();
        let mut r = self.clone();
        let mut q: Vec<(Mono, Elem)> = Vec::new();
        while let Some((m, c)) = r.leading() {
            if !lm.divides(&m) {
                return None;
            }
            let tm = m.div(&lm);
            let tc = f.mul(c, inv);
            q.push((tm, tc));
            r = r.sub(&d.mul_term(&tm, tc));
        }
        Some(MultiPoly::from_terms(f, self.nvars, q))
    }

    /// Monic gcd of the coefficients in `v`.
    pub fn content_in(&self, v: usize) -> MultiPoly {
        let mut g = MultiPoly::zero(&self.field, self.nvars);
        for c in self.coeffs_in(v) {
            if c.is_zero() {
                continue;
            }
            g = g.gcd(&c);
            if g.is_constant() {
                return MultiPoly::one(&self.field, self.nvars);
            }
        }
        g
    }

    pub fn primitive_part_in(&self, v: usize) -> MultiPoly {
        if self.is_zero() {
            return self.clone();
        }
        let c = self.content_in(v);
        self.div_exact(&c).expect("content divides")
    }

    /// Pseudo-remainder of `self` by `b` with respect to `v`.
    pub fn prem_in(&self, b: &MultiPoly, v: usize) -> MultiPoly {
        let db = b.degree_in(v);
        assert!(db >= 0);
        let bc = b.coeffs_in(v);
        let lcb = bc[db as usize].clone();
        let mut r = self.clone();
        let mut e = self.degree_in(v) - db + 1;
        while !r.is_zero() && r.degree_in(v) >= db {
            let dr = r.degree_in(v);
            let lcr = r.coeffs_in(v).pop().unwrap();
            let s = lcr.mul_term(&Mono::one().with(v, (dr - db) as u32), 1);
            r = r.mul(&lcb).sub(&s.mul(b));
            e -= 1;
        }
        if e > 0 {
            r = r.mul(&lcb.pow(e as u32));
        }
        r
    }

    /// Monic greatest common divisor.
    pub fn gcd(&self, o: &MultiPoly) -> MultiPoly {
        crate::algebra::gcd::gcd(self, o)
    }

    /// Monic gcd by recursive primitive remainder sequences.
    pub fn gcd_prs(&self, o: &MultiPoly) -> MultiPoly {
        if self.is_zero() {
            return o.monic();
        }
        if o.is_zero() {
            return self.monic();
        }
        let one = MultiPoly::one(&self.field, self.nvars);
        if self.is_constant() || o.is_constant() {
            return one;
        }
        if self.terms.len() == 1 || o.terms.len() == 1 {
            let mono = self
                .terms
                .iter()
                .chain(&o.terms)
                .map(|t| t.0)
                .reduce(|a, b| Mono::min(&a, &b))
                .unwrap();
            return MultiPoly::term(&self.field, self.nvars, mono, 1);
        }
        let (va, vb) = (self.vars_present(), o.vars_present());
        if va.len() == 1 && va == vb {
            let v = va[0];
            let g = self.to_unipoly(v).unwrap().gcd(&o.to_unipoly(v).unwrap());
            return MultiPoly::from_unipoly(&g, self.nvars, v);
        }
        let v = *va.iter().chain(vb.iter()).max().unwrap();
        let (da, db) = (self.degree_in(v), o.degree_in(v));
        if da == 0 {
            return self.gcd(&o.content_in(v));
        }
        if db == 0 {
            return self.content_in(v).gcd(o);
        }
        let ca = self.content_in(v);
        let cb = o.content_in(v);
        let c = ca.gcd(&cb);
        let pa = self.div_exact(&ca).unwrap();
        let pb = o.div_exact(&cb).unwrap();
        let (mut a, mut b) = if da >= db { (pa, pb) } else { (pb, pa) };
        loop {
            let r = a.prem_in(&b, v);
            if r.is_zero() {
                break;
            }
            if r.degree_in(v) == 0 {
                b = one.clone();
                break;
            }
            a = b;
            b = r.primitive_part_in(v);
        }
        c.mul(&b.primitive_part_in(v)).monic()
    }

    /// Homogenize using a new variable placed at index `at` (ring grows by one).
    pub fn homogenize(&self, at: usize) -> MultiPoly {
        let d = self.total_degree().max(0) as u32;
        let map: Vec<usize> = (0..self.nvars)
            .map(|i| if i < at { i } else { i + 1 })
            .collect();
        let shifted = self.remap_vars(self.nvars + 1, &map);
        MultiPoly::from_terms(
            &self.field,
            self.nvars + 1,
            shifted
                .terms
                .iter()
                .map(|&(m, c)| (m.with(at, d - m.degree()), c)),
        )
    }

    /// Set variable `v` to 1 and drop it from the ring.
    pub fn dehomogenize(&self, v: usize) -> MultiPoly {
        let map: Vec<usize> = (0..self.nvars)
            .map(|i| if i < v { i } else { i.saturating_sub(1) })
            .collect();
        MultiPoly::from_terms(
            &self.field,
            self.nvars - 1,
            self.terms.iter().map(|&(m, c)| {
                let mut out = Mono::one();
                for i in 0..self.nvars {
                    if i != v {
                        out.0[map[i]] += m.0[i];
                    }
                }
                (out, c)
            }),
        )
    }

    /// Homogeneous component of total degree `d`.
    pub fn homogeneous_part(&self, d: u32) -> MultiPoly {
        MultiPoly {
            field: self.field.clone(),
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.degree() == d)
                .copied()
                .collect(),
        }
    }

    pub fn format_with(&self, name: &dyn Fn(usize) -> String) -> String {
        if self.terms.is_empty() {
            return "0".into();
        }
        let f = &self.field;
        let mut s = String::new();
        for (idx, &(m, c)) in self.terms.iter().enumerate() {
            if idx > 0 {
                s.push_str(" + ");
            }
            let mut factors: Vec<String> = Vec::new();
            for i in 0..self.nvars {
                match m.get(i) {
                    0 => {}
                    1 => factors.push(name(i)),
                    e => factors.push(format!("{}^{e}", name(i))),
                }
            }
            let cs = f.format(c);
            let cs = if f.is_compound(c) {
                format!("({cs})")
            } else {
                cs
            };
            if factors.is_empty() {
                s.push_str(&cs);
            } else if c == 1 {
                s.push_str(&factors.join("*"));
            } else {
                s.push_str(&cs);
                s.push('*');
                s.push_str(&factors.join("*"));
            }
        }
        s
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::make_field;

    fn x(f: &FieldDesc, n: usize, i: usize) -> MultiPoly {
        MultiPoly::var(f, n, i)
    }

    #[test]
    fn hasse_examples() {
        let f2 = make_field(2, 1, None).unwrap();
        let x2_4 = x(&f2, 3, 2).pow(4);
        assert!(x2_4.hasse_derivative(2, 1).is_zero());
        assert!(x2_4.hasse_derivative(2, 4).is_one());
        let g = x(&f2, 3, 0).pow(3).mul(&x(&f2, 3, 1));
        assert_eq!(
            g.hasse_derivative(0, 1),
            x(&f2, 3, 0).pow(2).mul(&x(&f2, 3, 1))
        );
    }

    #[test]
    fn gcd_bivariate() {
        let f = make_field(3, 1, None).unwrap();
        let a = x(&f, 2, 0).add(&x(&f, 2, 1)); // X0 + X1
        let b = x(&f, 2, 0).sub(&x(&f, 2, 1).pow(2)); // X0 - X1^2
        let c = x(&f, 2, 1).add(&MultiPoly::one(&f, 2));
        let g = a.mul(&b).gcd(&a.mul(&c));
        assert_eq!(g, a.monic());
        let h = a.mul(&b).mul(&b).gcd(&b.mul(&c).mul(&b));
        assert_eq!(h, b.mul(&b).monic());
    }

    #[test]
    fn exact_division() {
        let f = make_field(5, 1, None).unwrap();
        let a = x(&f, 3, 0).mul(&x(&f, 3, 1)).sub(&x(&f, 3, 2).pow(2));
        let b = x(&f, 3, 0).add(&MultiPoly::constant(&f, 3, 3));
        let p = a.mul(&b);
        assert_eq!(p.div_exact(&b), Some(a.clone()));
        assert_eq!(p.add(&MultiPoly::one(&f, 3)).div_exact(&b), None);
    }
}
