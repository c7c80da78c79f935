//! Dense univariate polynomials over an abstract coefficient ring, plus
//! the two resultant routines (subresultant sequence, Sylvester/Bareiss).

use std::fmt;

use crate::algebra::multipoly::MultiPoly;

/// Commutative ring with exact division where defined.
pub trait Ring: Clone + PartialEq + fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn sub(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    /// `Some(q)` with `q * o == self`, or `None`.
    fn div_exact(&self, o: &Self) -> Option<Self>;

    fn is_one(&self) -> bool {
        *self == self.one_like()
    }

    fn pow(&self, mut e: u64) -> Self {
        let mut base = self.clone();
        let mut acc = self.one_like();
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

    /// `k * self` for a non-negative integer `k`.
    fn scale_int(&self, k: u64) -> Self {
        let mut acc = self.zero_like();
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                acc = acc.add(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.add(&base);
            }
        }
        acc
    }
}

pub trait FieldOps: Ring {
    fn inv(&self) -> Option<Self>;
}

impl Ring for MultiPoly {
    fn zero_like(&self) -> Self {
        MultiPoly::zero(self.field(), self.nvars())
    }
    fn one_like(&self) -> Self {
        MultiPoly::one(self.field(), self.nvars())
    }
    fn is_zero(&self) -> bool {
        MultiPoly::is_zero(self)
    }
    fn add(&self, o: &Self) -> Self {
        MultiPoly::add(self, o)
    }
    fn sub(&self, o: &Self) -> Self {
        MultiPoly::sub(self, o)
    }
    fn neg(&self) -> Self {
        MultiPoly::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        MultiPoly::mul(self, o)
    }
    fn div_exact(&self, o: &Self) -> Option<Self> {
        if MultiPoly::is_zero(o) {
            return None;
        }
        MultiPoly::div_exact(self, o)
    }
    fn is_one(&self) -> bool {
        MultiPoly::is_one(self)
    }
    fn scale_int(&self, k: u64) -> Self {
        let f = self.field();
        self.scale(f.from_int((k % f.characteristic()) as i64))
    }
}

/// Polynomial `c[0] + c[1] T + ...` over `R`; never has a zero leading coefficient.
#[derive(Clone, PartialEq)]
pub struct UPoly<R: Ring> {
    c: Vec<R>,
    zero: R,
}

impl<R: Ring> fmt::Debug for UPoly<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_list().entries(self.c.iter()).finish()
    }
}

impl<R: Ring> UPoly<R> {
    pub fn new(zero: &R, mut c: Vec<R>) -> Self {
        while c.last().is_some_and(|x| x.is_zero()) {
            c.pop();
        }
        UPoly {
            c,
            zero: zero.zero_like(),
        }
    }

    pub fn zero(zero: &R) -> Self {
        UPoly {
            c: Vec::new(),
            zero: zero.zero_like(),
        }
    }

    pub fn constant(a: R) -> Self {
        let z = a.zero_like();
        UPoly::new(&z, vec![a])
    }

    /// The polynomial `T`.
    pub fn x(like: &R) -> Self {
        UPoly::new(like, vec![like.zero_like(), like.one_like()])
    }

    pub fn coeffs(&self) -> &[R] {
        &self.c
    }

    pub fn into_coeffs(self) -> Vec<R> {
        self.c
    }

    pub fn coeff(&self, i: usize) -> R {
        self.c.get(i).cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn zero_elem(&self) -> &R {
        &self.zero
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    pub fn deg(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn lc(&self) -> R {
        self.c.last().cloned().unwrap_or_else(|| self.zero.clone())
    }

    pub fn add(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| self.coeff(i).add(&o.coeff(i))).collect();
        UPoly::new(&self.zero, c)
    }

    pub fn sub(&self, o: &Self) -> Self {
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| self.coeff(i).sub(&o.coeff(i))).collect();
        UPoly::new(&self.zero, c)
    }

    pub fn neg(&self) -> Self {
        UPoly {
            c: self.c.iter().map(|a| a.neg()).collect(),
            zero: self.zero.clone(),
        }
    }

    pub fn scale(&self, a: &R) -> Self {
        UPoly::new(&self.zero, self.c.iter().map(|x| x.mul(a)).collect())
    }

    pub fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return UPoly::zero(&self.zero);
        }
        let mut c = vec![self.zero.clone(); self.c.len() + o.c.len() - 1];
        for (i, a) in self.c.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in o.c.iter().enumerate() {
                if !b.is_zero() {
                    c[i + j] = c[i + j].add(&a.mul(b));
                }
            }
        }
        UPoly::new(&self.zero, c)
    }

    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = vec![self.zero.clone(); k];
        c.extend(self.c.iter().cloned());
        UPoly {
            c,
            zero: self.zero.clone(),
        }
    }

    pub fn derivative(&self) -> Self {
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, a)| a.scale_int(i as u64))
            .collect();
        UPoly::new(&self.zero, c)
    }

    /// Horner evaluation at a ring element.
    pub fn eval(&self, x: &R) -> R {
        let mut acc = self.zero.clone();
        for a in self.c.iter().rev() {
            acc = acc.mul(x).add(a);
        }
        acc
    }

    /// `self(p(T))`.
    pub fn compose(&self, p: &UPoly<R>) -> UPoly<R> {
        let mut acc = UPoly::zero(&self.zero);
        for a in self.c.iter().rev() {
            acc = acc.mul(p).add(&UPoly::constant(a.clone()));
        }
        acc
    }

    pub fn map<S: Ring>(&self, zero: &S, g: impl Fn(&R) -> S) -> UPoly<S> {
        UPoly::new(zero, self.c.iter().map(g).collect())
    }

    /// Pseudo-remainder `lc(b)^(deg a - deg b + 1) * a mod b`.
    pub fn prem(&self, b: &Self) -> Self {
        let db = b.deg();
        assert!(db >= 0, "pseudo-division by zero polynomial");
        let mut r = self.clone();
        if r.deg() < db {
            return r;
        }
        let lb = b.lc();
        let mut e = r.deg() - db + 1;
        while !r.is_zero() && r.deg() >= db {
            let k = (r.deg() - db) as usize;
            let lr = r.lc();
            r = r.scale(&lb).sub(&b.scale(&lr).shift(k));
            e -= 1;
        }
        if e > 0 {
            r = r.scale(&lb.pow(e as u64));
        }
        r
    }

    /// Divide every coefficient exactly by `d`.
    pub fn div_exact_scalar(&self, d: &R) -> Option<Self> {
        let mut c = Vec::with_capacity(self.c.len());
        for a in &self.c {
            c.push(a.div_exact(d)?);
        }
        Some(UPoly::new(&self.zero, c))
    }
}

impl<R: FieldOps> UPoly<R> {
    pub fn monic(&self) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self
            .lc()
            .inv()
            .expect("nonzero leading coefficient is a unit");
        self.scale(&inv)
    }

    pub fn divrem(&self, b: &Self) -> (Self, Self) {
        let db = b.deg();
        assert!(db >= 0, "division by zero polynomial");
        let inv = b.lc().inv().expect("leading coefficient invertible");
        let mut r = self.clone();
        if r.deg() < db {
            return (UPoly::zero(&self.zero), r);
        }
        let mut q = vec![self.zero.clone(); (r.deg() - db + 1) as usize];
        while !r.is_zero() && r.deg() >= db {
            let k = (r.deg() - db) as usize;
            let t = r.lc().mul(&inv);
            r = r.sub(&b.scale(&t).shift(k));
            q[k] = t;
        }
        (UPoly::new(&self.zero, q), r)
    }

    pub fn rem(&self, b: &Self) -> Self {
        self.divrem(b).1
    }

    pub fn gcd(&self, o: &Self) -> Self {
        let (mut a, mut b) = (self.clone(), o.clone());
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s*self + t*o = g`, `g` monic.
    pub fn xgcd(&self, o: &Self) -> (Self, Self, Self) {
        let zero = UPoly::zero(&self.zero);
        let one = UPoly::constant(self.zero.one_like());
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (one.clone(), zero.clone());
        let (mut t0, mut t1) = (zero, one);
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let s2 = s0.sub(&q.mul(&s1));
            let t2 = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = s2;
            t0 = t1;
            t1 = t2;
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = r0.lc().inv().unwrap();
        (r0.scale(&inv), s0.scale(&inv), t0.scale(&inv))
    }
}

fn sign_flip<R: Ring>(x: R, neg: bool) -> R {
    if neg {
        x.neg()
    } else {
        x
    }
}

/// Resultant by the subresultant algorithm.
///
/// Convention: equal to the determinant of the Sylvester matrix whose first
/// `deg b` rows carry the coefficients of `a`.
pub fn resultant<R: Ring>(a: &UPoly<R>, b: &UPoly<R>) -> R {
    let zero = a.zero.clone();
    if a.is_zero() || b.is_zero() {
        return zero;
    }
    let (mut a, mut b, mut neg) = (a.clone(), b.clone(), false);
    if a.deg() < b.deg() {
        neg = (a.deg() * b.deg()) % 2 == 1;
        std::mem::swap(&mut a, &mut b);
    }
    if b.deg() == 0 {
        return sign_flip(b.lc().pow(a.deg() as u64), neg);
    }
    let one = zero.one_like();
    let (mut g, mut h) = (one.clone(), one);
    loop {
        let da = a.deg();
        let db = b.deg();
        let delta = (da - db) as u64;
        if da % 2 == 1 && db % 2 == 1 {
            neg = !neg;
        }
        let r = a.prem(&b);
        a = b;
        let div = g.mul(&h.pow(delta));
        b = r
            .div_exact_scalar(&div)
            .expect("subresultant division is exact");
        g = a.lc();
        h = if delta == 0 {
            h
        } else {
            g.pow(delta)
                .div_exact(&h.pow(delta - 1))
                .expect("exact h update")
        };
        if b.is_zero() {
            return zero;
        }
        if b.deg() == 0 {
            let da = a.deg() as u64;
            let num = b.lc().pow(da);
            let res = num.div_exact(&h.pow(da - 1)).expect("exact final division");
            return sign_flip(res, neg);
        }
    }
}

/// Sylvester matrix with `a`'s coefficients (highest first) in the top `deg b` rows.
pub fn sylvester_matrix<R: Ring>(a: &UPoly<R>, b: &UPoly<R>) -> Vec<Vec<R>> {
    let (m, n) = (a.deg().max(0) as usize, b.deg().max(0) as usize);
    let size = m + n;
    let zero = a.zero.clone();
    let mut rows = Vec::with_capacity(size);
    for i in 0..n {
        let mut row = vec![zero.clone(); size];
        for j in 0..=m {
            row[i + j] = a.coeff(m - j);
        }
        rows.push(row);
    }
    for i in 0..m {
        let mut row = vec![zero.clone(); size];
        for j in 0..=n {
            row[i + j] = b.coeff(n - j);
        }
        rows.push(row);
    }
    rows
}

/// Fraction-free determinant (Bareiss) over an integral domain.
pub fn bareiss_det<R: Ring>(mut m: Vec<Vec<R>>, zero: &R) -> R {
    let n = m.len();
    if n == 0 {
        return zero.one_like();
    }
    let mut neg = false;
    let mut prev = zero.one_like();
    for k in 0..n - 1 {
        if m[k][k].is_zero() {
            match (k + 1..n).find(|&i| !m[i][k].is_zero()) {
                Some(i) => {
                    m.swap(i, k);
                    neg = !neg;
                }
                None => return zero.zero_like(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = m[i][j].mul(&m[k][k]).sub(&m[i][k].mul(&m[k][j]));
                m[i][j] = v.div_exact(&prev).expect("Bareiss division is exact");
            }
        }
        prev = m[k][k].clone();
    }
    sign_flip(m[n - 1][n - 1].clone(), neg)
}

/// Resultant as the Sylvester determinant.
pub fn resultant_sylvester<R: Ring>(a: &UPoly<R>, b: &UPoly<R>) -> R {
    if a.is_zero() || b.is_zero() {
        return a.zero.clone();
    }
    if a.deg() == 0 && b.deg() == 0 {
        return a.zero.one_like();
    }
    bareiss_det(sylvester_matrix(a, b), &a.zero)
}

/// View a multivariate polynomial as univariate in `v` with coefficients in the same ring.
pub fn to_upoly(p: &MultiPoly, v: usize) -> UPoly<MultiPoly> {
    let zero = MultiPoly::zero(p.field(), p.nvars());
    UPoly::new(&zero, p.coeffs_in(v))
}

pub fn from_upoly(u: &UPoly<MultiPoly>, v: usize) -> MultiPoly {
    let z = u.zero_elem();
    MultiPoly::from_coeffs_in(z.field(), z.nvars(), v, u.coeffs())
}

/// `res_v(a, b)` by subresultants; the result does not involve `v`.
pub fn resultant_in(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    resultant(&to_upoly(a, v), &to_upoly(b, v))
}

/// `res_v(a, b)` by the Sylvester determinant.
pub fn resultant_sylvester_in(a: &MultiPoly, b: &MultiPoly, v: usize) -> MultiPoly {
    resultant_sylvester(&to_upoly(a, v), &to_upoly(b, v))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::make_field;

    #[test]
    fn resultant_linear_factors() {
        let f = make_field(7, 1, None).unwrap();
        // ring F_7[a, b, T]
        let a = MultiPoly::var(&f, 3, 0);
        let b = MultiPoly::var(&f, 3, 1);
        let t = MultiPoly::var(&f, 3, 2);
        let r = resultant_in(&t.sub(&a), &t.sub(&b), 2);
        assert_eq!(r, a.sub(&b));
        assert_eq!(resultant_sylvester_in(&t.sub(&a), &t.sub(&b), 2), r);
    }

    #[test]
    fn resultant_shared_root_vanishes() {
        let f = make_field(2, 1, None).unwrap();
        let t = MultiPoly::var(&f, 1, 0);
        let one = MultiPoly::one(&f, 1);
        let r = resultant_in(&t.pow(2).add(&one), &t.add(&one), 0);
        assert!(r.is_zero());
    }

    #[test]
    fn discriminant_like_example() {
        // y^2 - x^3 and its y-derivative 2y over F_5: Sylvester det = -4 x^3
        let f = make_field(5, 1, None).unwrap();
        let x = MultiPoly::var(&f, 2, 0);
        let y = MultiPoly::var(&f, 2, 1);
        let g = y.pow(2).sub(&x.pow(3));
        let dg = g.partial(1);
        let expect = x.pow(3).scale(f.from_int(-4));
        assert_eq!(resultant_in(&g, &dg, 1), expect);
        assert_eq!(resultant_sylvester_in(&g, &dg, 1), expect);
    }
}
