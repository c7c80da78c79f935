//! Finite fields `GF(p^k)`.
//!
//! An element is stored as the integer `c_0 + c_1 p + ... + c_{k-1} p^{k-1}`
//! where `c_0 + c_1 t + ... + c_{k-1} t^{k-1}` is its residue modulo the
//! defining polynomial. In every field the prime subfield is `0..p`.
//! Fields up to [`TABLE_LIMIT`] elements carry exp/log tables; larger ones
//! fall back to polynomial arithmetic on the digits.

use std::collections::HashMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::{Arc, Mutex, OnceLock};

use rand::Rng;

use crate::algebra::linalg;
use crate::algebra::unipoly::UniPoly;
use crate::error::{Error, Result};

/// Raw element encoding; only meaningful together with its [`FieldDesc`].
pub type Elem = u64;

const TABLE_LIMIT: u64 = 1 << 18;
const SIZE_LIMIT: u64 = 1 << 62;

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

struct Inner {
    p: u64,
    k: u32,
    size: u64,
    /// Monic modulus, low degree first, length `k + 1`.
    modulus: Vec<u64>,
    pows: Vec<u64>,
    tables: Option<Tables>,
}

/// A finite field `GF(p^k)` together with its defining modulus.
#[derive(Clone)]
pub struct FieldDesc(Arc<Inner>);

impl PartialEq for FieldDesc {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.p == other.0.p && self.0.modulus == other.0.modulus)
    }
}
impl Eq for FieldDesc {}

impl fmt::Debug for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for FieldDesc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.k == 1 {
            write!(f, "GF({})", self.0.p)
        } else {
            write!(
                f,
                "GF({}^{}; {})",
                self.0.p,
                self.0.k,
                self.modulus_string()
            )
        }
    }
}

pub(crate) fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

pub(crate) fn prime_factors(mut n: u64) -> Vec<u64> {
    let mut out = Vec::new();
    let mut d = 2u64;
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

fn cache() -> &'static Mutex<HashMap<(u64, u32), FieldDesc>> {
    static CACHE: OnceLock<Mutex<HashMap<(u64, u32), FieldDesc>>> = OnceLock::new();
    CACHE.get_or_init(|| Mutex::new(HashMap::new()))
}

/// Builds `GF(p^k)`.
///
/// Without an explicit modulus the lexicographically first monic irreducible
/// of degree `k` is used (coefficients compared from `t^{k-1}` down to `t^0`),
/// and the resulting field is memoized.
pub fn make_field(p: u64, k: u32, modulus: Option<Vec<u64>>) -> Result<FieldDesc> {
    if !is_prime(p) || p >= (1 << 31) {
        return Err(Error::NotPrime(p));
    }
    if k == 0 {
        return Err(Error::BadModulus(0));
    }
    let size = p
        .checked_pow(k)
        .filter(|s| *s <= SIZE_LIMIT)
        .ok_or(Error::FieldTooLarge(p, k))?;
    match modulus {
        Some(m) => {
            let m: Vec<u64> = m.into_iter().map(|c| c % p).collect();
            if m.len() != k as usize + 1 || m[k as usize] != 1 {
                return Err(Error::BadModulus(k));
            }
            if k > 1 && !modulus_irreducible(p, &m) {
                return Err(Error::BadModulus(k));
            }
            let default = default_field(p, k, size)?;
            if default.0.modulus == m {
                return Ok(default);
            }
            Ok(FieldDesc::build(p, k, size, m))
        }
        None => default_field(p, k, size),
    }
}

fn default_field(p: u64, k: u32, size: u64) -> Result<FieldDesc> {
    if let Some(f) = cache().lock().unwrap().get(&(p, k)) {
        return Ok(f.clone());
    }
    let modulus = if k == 1 {
        vec![0, 1]
    } else {
        let mut found = None;
        for code in 0..size {
            let mut m = digits_of(code, p, k);
            m.push(1);
            if modulus_irreducible(p, &m) {
                found = Some(m);
                break;
            }
        }
        found.ok_or(Error::BadModulus(k))?
    };
    let f = FieldDesc::build(p, k, size, modulus);
    cache().lock().unwrap().entry((p, k)).or_insert(f.clone());
    Ok(f)
}

fn digits_of(mut a: u64, p: u64, k: u32) -> Vec<u64> {
    let mut d = Vec::with_capacity(k as usize);
    for _ in 0..k {
        d.push(a % p);
        a /= p;
    }
    d
}

fn modulus_irreducible(p: u64, m: &[u64]) -> bool {
    let fp = FieldDesc::prime_unchecked(p);
    UniPoly::new(&fp, m.to_vec()).is_irreducible()
}

impl FieldDesc {
    fn prime_unchecked(p: u64) -> FieldDesc {
        if let Some(f) = cache().lock().unwrap().get(&(p, 1)) {
            return f.clone();
        }
        let f = FieldDesc::build(p, 1, p, vec![0, 1]);
        cache().lock().unwrap().entry((p, 1)).or_insert(f.clone());
        f
    }

    fn build(p: u64, k: u32, size: u64, modulus: Vec<u64>) -> FieldDesc {
        let pows = (0..=k).map(|i| p.pow(i)).collect();
        let mut inner = Inner {
            p,
            k,
            size,
            modulus,
            pows,
            tables: None,
        };
        if k > 1 && size <= TABLE_LIMIT {
            let tmp = FieldDesc(Arc::new(Inner {
                tables: None,
                ..inner_clone(&inner)
            }));
            inner.tables = Some(tmp.build_tables());
        }
        FieldDesc(Arc::new(inner))
    }

    fn build_tables(&self) -> Tables {
        let n = self.size() - 1;
        let factors = prime_factors(n);
        let gen = (2..self.size())
            .find(|&g| factors.iter().all(|&r| self.pow(g, n / r) != 1))
            .unwrap_or(1);
        let mut exp = vec![0u32; 2 * n as usize];
        let mut log = vec![0u32; self.size() as usize];
        let mut x: Elem = 1;
        for i in 0..n as usize {
            exp[i] = x as u32;
            exp[i + n as usize] = x as u32;
            log[x as usize] = i as u32;
            x = self.mul_generic(x, gen);
        }
        Tables { exp, log }
    }

    /// The prime field `GF(p)`.
    pub fn prime(p: u64) -> Result<FieldDesc> {
        make_field(p, 1, None)
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    /// Extension degree over the prime field.
    pub fn degree(&self) -> u32 {
        self.0.k
    }

    pub fn size(&self) -> u64 {
        self.0.size
    }

    /// Modulus coefficients, low degree first (monic, length `k + 1`).
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn modulus_string(&self) -> String {
        let m = &self.0.modulus;
        let mut parts = Vec::new();
        for i in (0..m.len()).rev() {
            let c = m[i];
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        parts.join("+")
    }

    pub fn same(&self, other: &FieldDesc) -> bool {
        self == other
    }

    pub fn is_prime_field(&self) -> bool {
        self.0.k == 1
    }

    /// The prime subfield `GF(p)`.
    pub fn prime_field(&self) -> FieldDesc {
        FieldDesc::prime_unchecked(self.0.p)
    }

    /// `GF(q^m)` for this field's `q`, with its default modulus.
    pub fn extension(&self, m: u32) -> Result<FieldDesc> {
        make_field(self.0.p, self.0.k * m, None)
    }

    #[inline]
    pub fn zero(&self) -> Elem {
        0
    }

    #[inline]
    pub fn one(&self) -> Elem {
        1
    }

    /// The class of `t`; only meaningful when `k > 1`.
    pub fn generator(&self) -> Elem {
        if self.0.k == 1 {
            0
        } else {
            self.0.p
        }
    }

    pub fn from_int(&self, n: i64) -> Elem {
        (n.rem_euclid(self.0.p as i64)) as u64
    }

    pub fn digits(&self, a: Elem) -> Vec<u64> {
        digits_of(a, self.0.p, self.0.k)
    }

    pub fn from_digits(&self, d: &[u64]) -> Elem {
        let mut a = 0u64;
        for (i, &c) in d.iter().enumerate().take(self.0.k as usize) {
            a += (c % self.0.p) * self.0.pows[i];
        }
        a
    }

    pub fn is_valid(&self, a: Elem) -> bool {
        a < self.0.size
    }

    /// True when `a` lies in the prime subfield.
    pub fn in_prime_field(&self, a: Elem) -> bool {
        a < self.0.p
    }

    pub fn elements(&self) -> impl Iterator<Item = Elem> {
        0..self.0.size
    }

    pub fn random<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        rng.gen_range(0..self.0.size)
    }

    pub fn random_nonzero<R: Rng + ?Sized>(&self, rng: &mut R) -> Elem {
        rng.gen_range(1..self.0.size)
    }

    #[inline]
    pub fn add(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return a ^ b;
        }
        if self.0.k == 1 {
            let s = a + b;
            return if s >= p { s - p } else { s };
        }
        let (mut a, mut b) = (a, b);
        let mut out = 0;
        let mut w = 1;
        while a != 0 || b != 0 {
            let s = a % p + b % p;
            out += if s >= p { s - p } else { s } * w;
            a /= p;
            b /= p;
            w *= p;
        }
        out
    }

    #[inline]
    pub fn neg(&self, a: Elem) -> Elem {
        let p = self.0.p;
        if p == 2 {
            return a;
        }
        if self.0.k == 1 {
            return if a == 0 { 0 } else { p - a };
        }
        let mut a = a;
        let mut out = 0;
        let mut w = 1;
        while a != 0 {
            let d = a % p;
            if d != 0 {
                out += (p - d) * w;
            }
            a /= p;
            w *= p;
        }
        out
    }

    #[inline]
    pub fn sub(&self, a: Elem, b: Elem) -> Elem {
        if self.0.p == 2 {
            return a ^ b;
        }
        self.add(a, self.neg(b))
    }

    #[inline]
    pub fn mul(&self, a: Elem, b: Elem) -> Elem {
        if a == 0 || b == 0 {
            return 0;
        }
        if self.0.k == 1 {
            return a * b % self.0.p;
        }
        if let Some(t) = &self.0.tables {
            let i = t.log[a as usize] + t.log[b as usize];
            return t.exp[i as usize] as Elem;
        }
        self.mul_generic(a, b)
    }

    fn mul_generic(&self, a: Elem, b: Elem) -> Elem {
        let p = self.0.p;
        let k = self.0.k as usize;
        if k == 1 {
            return a * b % p;
        }
        if p == 2 {
            let mut prod: u128 = 0;
            let (a, b) = (a as u128, b as u128);
            for i in 0..k {
                if (b >> i) & 1 == 1 {
                    prod ^= a << i;
                }
            }
            let mut modmask: u128 = 0;
            for (i, &c) in self.0.modulus.iter().enumerate() {
                if c == 1 {
                    modmask |= 1 << i;
                }
            }
            for i in (k..2 * k - 1).rev() {
                if (prod >> i) & 1 == 1 {
                    prod ^= modmask << (i - k);
                }
            }
            return prod as Elem;
        }
        let da = self.digits(a);
        let db = self.digits(b);
        let mut prod = vec![0u64; 2 * k - 1];
        for i in 0..k {
            if da[i] == 0 {
                continue;
            }
            for j in 0..k {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        let m = &self.0.modulus;
        for i in (k..2 * k - 1).rev() {
            let c = prod[i];
            if c == 0 {
                continue;
            }
            for j in 0..k {
                prod[i - k + j] = (prod[i - k + j] + (p - c) * m[j]) % p;
            }
            prod[i] = 0;
        }
        self.from_digits(&prod[..k])
    }

    pub fn pow(&self, a: Elem, mut e: u64) -> Elem {
        if e == 0 {
            return 1;
        }
        if a == 0 {
            return 0;
        }
        if let Some(t) = &self.0.tables {
            let n = self.0.size - 1;
            let l = (t.log[a as usize] as u128 * (e % n) as u128 % n as u128) as usize;
            return t.exp[l] as Elem;
        }
        let mut base = a;
        let mut acc = 1;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_generic(acc, base);
            }
            base = self.mul_generic(base, base);
            e >>= 1;
        }
        acc
    }

    pub fn inv(&self, a: Elem) -> Option<Elem> {
        if a == 0 {
            return None;
        }
        if let Some(t) = &self.0.tables {
            let n = (self.0.size - 1) as u32;
            let l = t.log[a as usize];
            return Some(t.exp[((n - l) % n) as usize] as Elem);
        }
        Some(self.pow(a, self.0.size - 2))
    }

    pub fn div(&self, a: Elem, b: Elem) -> Result<Elem> {
        Ok(self.mul(a, self.inv(b).ok_or(Error::DivisionByZero)?))
    }

    /// `a^(p^j)`.
    pub fn frobenius_power(&self, a: Elem, j: u32) -> Elem {
        let j = j % self.0.k;
        let mut x = a;
        for _ in 0..j {
            x = self.pow(x, self.0.p);
        }
        x
    }

    /// Inverse of `a ↦ a^(p^j)`.
    pub fn frobenius_root(&self, a: Elem, j: u32) -> Elem {
        let k = self.0.k;
        self.frobenius_power(a, (k - j % k) % k)
    }

    /// Multiply by an integer.
    pub fn scale_int(&self, a: Elem, n: u64) -> Elem {
        self.mul(a, n % self.0.p)
    }

    pub fn format(&self, a: Elem) -> String {
        if self.0.k == 1 {
            return a.to_string();
        }
        if a == 0 {
            return "0".into();
        }
        let d = self.digits(a);
        let mut parts = Vec::new();
        for i in (0..d.len()).rev() {
            let c = d[i];
            if c == 0 {
                continue;
            }
            let mono = match i {
                0 => String::new(),
                1 => "t".to_string(),
                _ => format!("t^{i}"),
            };
            parts.push(match (c, i) {
                (_, 0) => c.to_string(),
                (1, _) => mono,
                _ => format!("{c}*{mono}"),
            });
        }
        parts.join("+")
    }

    /// Whether the element needs parentheses when used as a coefficient.
    pub fn is_compound(&self, a: Elem) -> bool {
        self.0.k > 1 && self.format(a).contains('+')
    }
}

fn inner_clone(i: &Inner) -> Inner {
    Inner {
        p: i.p,
        k: i.k,
        size: i.size,
        modulus: i.modulus.clone(),
        pows: i.pows.clone(),
        tables: None,
    }
}

/// Field element bundled with its field; convenient for tests and user code.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElem {
    pub field: FieldDesc,
    pub value: Elem,
}

impl FieldElem {
    pub fn new(field: &FieldDesc, value: Elem) -> Self {
        FieldElem {
            field: field.clone(),
            value,
        }
    }

    pub fn coefficients(&self) -> Vec<u64> {
        self.field.digits(self.value)
    }

    pub fn inv(&self) -> Option<FieldElem> {
        self.field
            .inv(self.value)
            .map(|v| FieldElem::new(&self.field, v))
    }

    pub fn pow(&self, e: u64) -> FieldElem {
        FieldElem::new(&self.field, self.field.pow(self.value, e))
    }

    pub fn frobenius_power(&self, j: u32) -> FieldElem {
        FieldElem::new(&self.field, self.field.frobenius_power(self.value, j))
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }
}

impl fmt::Debug for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(self.value))
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.field.format(self.value))
    }
}

impl Add for &FieldElem {
    type Output = FieldElem;
    fn add(self, o: &FieldElem) -> FieldElem {
        FieldElem::new(&self.field, self.field.add(self.value, o.value))
    }
}
impl Sub for &FieldElem {
    type Output = FieldElem;
    fn sub(self, o: &FieldElem) -> FieldElem {
        FieldElem::new(&self.field, self.field.sub(self.value, o.value))
    }
}
impl Mul for &FieldElem {
    type Output = FieldElem;
    fn mul(self, o: &FieldElem) -> FieldElem {
        FieldElem::new(&self.field, self.field.mul(self.value, o.value))
    }
}
impl Neg for &FieldElem {
    type Output = FieldElem;
    fn neg(self) -> FieldElem {
        FieldElem::new(&self.field, self.field.neg(self.value))
    }
}

/// An injective homomorphism `GF(p^k) → GF(p^{km})`, fixed by the image of `t`.
#[derive(Clone)]
pub struct Embedding {
    src: FieldDesc,
    dst: FieldDesc,
    /// Images of `1, t, t^2, ..., t^{k-1}`.
    images: Vec<Elem>,
    /// Rows of `dst` digits that determine a preimage, with the inverse of that block.
    pivot_rows: Vec<usize>,
    block_inverse: Vec<Vec<Elem>>,
}

impl fmt::Debug for Embedding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "Embedding({} -> {}, t -> {})",
            self.src,
            self.dst,
            self.dst.format(self.image_of_t())
        )
    }
}

/// Builds the embedding that sends `t` to the smallest-encoded root of the
/// source modulus in the destination field.
pub fn embed(src: &FieldDesc, dst: &FieldDesc) -> Result<Embedding> {
    let err = || Error::NoEmbedding {
        p: src.characteristic(),
        src: src.degree(),
        dst_p: dst.characteristic(),
        dst: dst.degree(),
    };
    if src.characteristic() != dst.characteristic() || !dst.degree().is_multiple_of(src.degree()) {
        return Err(err());
    }
    let image_of_t = if src.degree() == 1 {
        0
    } else {
        let m = UniPoly::new(dst, src.modulus().to_vec());
        let mut roots = m.roots(0);
        roots.sort_unstable();
        *roots.first().ok_or_else(err)?
    };
    Embedding::from_image(src, dst, image_of_t)
}

impl Embedding {
    fn from_image(src: &FieldDesc, dst: &FieldDesc, image_of_t: Elem) -> Result<Embedding> {
        let k = src.degree() as usize;
        let mut images = Vec::with_capacity(k);
        let mut x = 1;
        for _ in 0..k {
            images.push(x);
            x = dst.mul(x, image_of_t);
        }
        // Column i of the digit matrix is images[i] in dst coordinates.
        let fp = src.prime_field();
        let rows = dst.degree() as usize;
        let mat: Vec<Vec<Elem>> = (0..rows)
            .map(|r| images.iter().map(|&im| dst.digits(im)[r]).collect())
            .collect();
        let pivot_rows = linalg::independent_rows(&fp, &mat);
        if pivot_rows.len() != k {
            return Err(Error::Internal("embedding images are dependent".into()));
        }
        let block: Vec<Vec<Elem>> = pivot_rows.iter().map(|&r| mat[r].clone()).collect();
        let block_inverse = linalg::inverse(&fp, &block)?;
        Ok(Embedding {
            src: src.clone(),
            dst: dst.clone(),
            images,
            pivot_rows,
            block_inverse,
        })
    }

    pub fn identity(f: &FieldDesc) -> Embedding {
        embed(f, f).expect("identity embedding")
    }

    pub fn src(&self) -> &FieldDesc {
        &self.src
    }

    pub fn dst(&self) -> &FieldDesc {
        &self.dst
    }

    pub fn image_of_t(&self) -> Elem {
        if self.images.len() > 1 {
            self.images[1]
        } else {
            0
        }
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.dst
            && (self.src.degree() == 1 || self.image_of_t() == self.src.generator())
    }

    pub fn map(&self, a: Elem) -> Elem {
        if self.src.degree() == 1 {
            return a;
        }
        let d = self.src.digits(a);
        let mut out = 0;
        for (i, &c) in d.iter().enumerate() {
            if c != 0 {
                out = self.dst.add(out, self.dst.scale_int(self.images[i], c));
            }
        }
        out
    }

    /// Inverse image, or `None` if `b` is not in the image.
    pub fn preimage(&self, b: Elem) -> Option<Elem> {
        if self.src.degree() == 1 {
            return self.dst.in_prime_field(b).then_some(b);
        }
        let p = self.src.characteristic();
        let bd = self.dst.digits(b);
        let rhs: Vec<u64> = self.pivot_rows.iter().map(|&r| bd[r]).collect();
        let coeffs: Vec<u64> = self
            .block_inverse
            .iter()
            .map(|row| row.iter().zip(&rhs).map(|(x, y)| x * y % p).sum::<u64>() % p)
            .collect();
        let a = self.src.from_digits(&coeffs);
        (self.map(a) == b).then_some(a)
    }

    /// `other ∘ self` (first `self`, then `other`).
    pub fn then(&self, other: &Embedding) -> Result<Embedding> {
        if self.dst != other.src {
            return Err(Error::FieldMismatch);
        }
        Embedding::from_image(&self.src, &other.dst, other.map(self.image_of_t()))
    }
}
