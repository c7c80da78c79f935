//! Dense univariate polynomials over a finite field, with Cantor–Zassenhaus
//! factorization.

use std::cmp::Ordering;
use std::fmt;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::algebra::field::{prime_factors, Elem, FieldDesc};

/// Polynomial `c[0] + c[1] T + ...` with no trailing zero coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    field: FieldDesc,
    c: Vec<Elem>,
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.c.is_empty() {
            return write!(f, "0");
        }
        let mut first = true;
        for i in (0..self.c.len()).rev() {
            if self.c[i] == 0 {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let cs = self.field.format(self.c[i]);
            match i {
                0 => write!(f, "{cs}")?,
                1 => write!(f, "({cs})*T")?,
                _ => write!(f, "({cs})*T^{i}")?,
            }
        }
        Ok(())
    }
}

impl UniPoly {
    pub fn new(field: &FieldDesc, mut c: Vec<Elem>) -> Self {
        while c.last() == Some(&0) {
            c.pop();
        }
        UniPoly {
            field: field.clone(),
            c,
        }
    }

    pub fn zero(field: &FieldDesc) -> Self {
        UniPoly {
            field: field.clone(),
            c: Vec::new(),
        }
    }

    pub fn one(field: &FieldDesc) -> Self {
        UniPoly::constant(field, 1)
    }

    pub fn constant(field: &FieldDesc, a: Elem) -> Self {
        UniPoly::new(field, vec![a])
    }

    /// The indeterminate `T`.
    pub fn x(field: &FieldDesc) -> Self {
        UniPoly::new(field, vec![0, 1])
    }

    pub fn monomial(field: &FieldDesc, a: Elem, deg: usize) -> Self {
        let mut c = vec![0; deg + 1];
        c[deg] = a;
        UniPoly::new(field, c)
    }

    pub fn field(&self) -> &FieldDesc {
        &self.field
    }

    pub fn coeffs(&self) -> &[Elem] {
        &self.c
    }

    pub fn coeff(&self, i: usize) -> Elem {
        self.c.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.c.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.c.len() == 1 && self.c[0] == 1
    }

    pub fn degree(&self) -> Option<usize> {
        self.c.len().checked_sub(1)
    }

    /// Degree with `-1` for the zero polynomial.
    pub fn deg(&self) -> isize {
        self.c.len() as isize - 1
    }

    pub fn lc(&self) -> Elem {
        self.c.last().copied().unwrap_or(0)
    }

    pub fn add(&self, o: &UniPoly) -> UniPoly {
        let f = &self.field;
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| f.add(self.coeff(i), o.coeff(i))).collect();
        UniPoly::new(f, c)
    }

    pub fn sub(&self, o: &UniPoly) -> UniPoly {
        let f = &self.field;
        let n = self.c.len().max(o.c.len());
        let c = (0..n).map(|i| f.sub(self.coeff(i), o.coeff(i))).collect();
        UniPoly::new(f, c)
    }

    pub fn neg(&self) -> UniPoly {
        UniPoly::new(
            &self.field,
            self.c.iter().map(|&a| self.field.neg(a)).collect(),
        )
    }

    pub fn scale(&self, a: Elem) -> UniPoly {
        if a == 0 {
            return UniPoly::zero(&self.field);
        }
        UniPoly::new(
            &self.field,
            self.c.iter().map(|&x| self.field.mul(x, a)).collect(),
        )
    }

    pub fn mul(&self, o: &UniPoly) -> UniPoly {
        if self.is_zero() || o.is_zero() {
            return UniPoly::zero(&self.field);
        }
        let f = &self.field;
        let mut c = vec![0; self.c.len() + o.c.len() - 1];
        for (i, &a) in self.c.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in o.c.iter().enumerate() {
                if b != 0 {
                    c[i + j] = f.add(c[i + j], f.mul(a, b));
                }
            }
        }
        UniPoly::new(f, c)
    }

    pub fn monic(&self) -> UniPoly {
        if self.is_zero() {
            return self.clone();
        }
        let inv = self.field.inv(self.lc()).unwrap();
        self.scale(inv)
    }

    /// Quotient and remainder; panics on division by zero.
    pub fn divrem(&self, d: &UniPoly) -> (UniPoly, UniPoly) {
        assert!(!d.is_zero(), "polynomial division by zero");
        let f = &self.field;
        if self.c.len() < d.c.len() {
            return (UniPoly::zero(f), self.clone());
        }
        let inv = f.inv(d.lc()).unwrap();
        let mut r = self.c.clone();
        let dl = d.c.len();
        let mut q = vec![0; r.len() - dl + 1];
        for i in (0..q.len()).rev() {
            let coef = f.mul(r[i + dl - 1], inv);
            q[i] = coef;
            if coef == 0 {
                continue;
            }
            for j in 0..dl {
                r[i + j] = f.sub(r[i + j], f.mul(coef, d.c[j]));
            }
        }
        r.truncate(dl - 1);
        (UniPoly::new(f, q), UniPoly::new(f, r))
    }

    pub fn rem(&self, d: &UniPoly) -> UniPoly {
        self.divrem(d).1
    }

    /// Exact quotient, or `None` when `d` does not divide `self`.
    pub fn div_exact(&self, d: &UniPoly) -> Option<UniPoly> {
        let (q, r) = self.divrem(d);
        r.is_zero().then_some(q)
    }

    /// Monic gcd (zero only if both inputs are zero).
    pub fn gcd(&self, o: &UniPoly) -> UniPoly {
        let mut a = self.clone();
        let mut b = o.clone();
        while !b.is_zero() {
            let r = a.rem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    /// `(g, s, t)` with `s·self + t·o = g`, `g` monic.
    pub fn xgcd(&self, o: &UniPoly) -> (UniPoly, UniPoly, UniPoly) {
        let f = &self.field;
        let (mut r0, mut r1) = (self.clone(), o.clone());
        let (mut s0, mut s1) = (UniPoly::one(f), UniPoly::zero(f));
        let (mut t0, mut t1) = (UniPoly::zero(f), UniPoly::one(f));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            r0 = std::mem::replace(&mut r1, r);
            let s = s0.sub(&q.mul(&s1));
            s0 = std::mem::replace(&mut s1, s);
            let t = t0.sub(&q.mul(&t1));
            t0 = std::mem::replace(&mut t1, t);
        }
        if r0.is_zero() {
            return (r0, s0, t0);
        }
        let inv = f.inv(r0.lc()).unwrap();
        (r0.scale(inv), s0.scale(inv), t0.scale(inv))
    }

    /// Inverse modulo `m`, if it exists.
    pub fn inv_mod(&self, m: &UniPoly) -> Option<UniPoly> {
        let (g, s, _) = self.rem(m).xgcd(m);
        g.is_one().then(|| s.rem(m))
    }

    pub fn mulmod(&self, o: &UniPoly, m: &UniPoly) -> UniPoly {
        self.mul(o).rem(m)
    }

    pub fn powmod(&self, mut e: u64, m: &UniPoly) -> UniPoly {
        let mut base = self.rem(m);
        let mut acc = UniPoly::one(&self.field).rem(m);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mulmod(&base, m);
            }
            e >>= 1;
            if e > 0 {
                base = base.mulmod(&base, m);
            }
        }
        acc
    }

    pub fn derivative(&self) -> UniPoly {
        let f = &self.field;
        let c = self
            .c
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, &a)| f.scale_int(a, i as u64))
            .collect();
        UniPoly::new(f, c)
    }

    pub fn eval(&self, x: Elem) -> Elem {
        let f = &self.field;
        self.c
            .iter()
            .rev()
            .fold(0, |acc, &a| f.add(f.mul(acc, x), a))
    }

    /// `self(other(T))`.
    pub fn compose(&self, other: &UniPoly) -> UniPoly {
        let mut acc = UniPoly::zero(&self.field);
        for &a in self.c.iter().rev() {
            acc = acc.mul(other).add(&UniPoly::constant(&self.field, a));
        }
        acc
    }

    /// Coefficient-wise map (e.g. Frobenius or an embedding).
    pub fn map_coeffs(&self, dst: &FieldDesc, g: impl Fn(Elem) -> Elem) -> UniPoly {
        UniPoly::new(dst, self.c.iter().map(|&a| g(a)).collect())
    }

    fn pth_root(&self) -> UniPoly {
        let f = &self.field;
        let p = f.characteristic() as usize;
        let c = self
            .c
            .iter()
            .step_by(p)
            .map(|&a| f.frobenius_root(a, 1))
            .collect();
        UniPoly::new(f, c)
    }

    /// Square-free decomposition of a monic polynomial: pairs `(g, i)` with
    /// `self = Π g^i`, each `g` squarefree and pairwise coprime.
    pub fn squarefree_decomposition(&self) -> Vec<(UniPoly, usize)> {
        let f = self.monic();
        let mut out = Vec::new();
        if f.deg() < 1 {
            return out;
        }
        let mut c = f.gcd(&f.derivative());
        let mut w = f.div_exact(&c).unwrap();
        let mut i = 1;
        while !w.is_one() {
            let y = w.gcd(&c);
            let fac = w.div_exact(&y).unwrap();
            if !fac.is_one() {
                out.push((fac, i));
            }
            w = y;
            c = c.div_exact(&w).unwrap();
            i += 1;
        }
        if !c.is_one() {
            let p = self.field.characteristic() as usize;
            for (g, m) in c.pth_root().squarefree_decomposition() {
                out.push((g, m * p));
            }
        }
        out
    }

    /// Distinct-degree split of a monic squarefree polynomial.
    pub fn distinct_degree(&self) -> Vec<(UniPoly, usize)> {
        let q = self.field.size();
        let x = UniPoly::x(&self.field);
        let mut rest = self.clone();
        let mut h = x.rem(&rest);
        let mut out = Vec::new();
        let mut i = 1;
        while rest.deg() >= 2 * i as isize {
            h = h.powmod(q, &rest);
            let g = rest.gcd(&h.sub(&x));
            if !g.is_one() {
                rest = rest.div_exact(&g).unwrap();
                h = h.rem(&rest);
                out.push((g, i));
            }
            i += 1;
        }
        if rest.deg() > 0 {
            let d = rest.deg() as usize;
            out.push((rest, d));
        }
        out
    }

    /// Equal-degree split of a monic squarefree polynomial all of whose
    /// irreducible factors have degree `d`.
    pub fn equal_degree(&self, d: usize, rng: &mut ChaCha8Rng) -> Vec<UniPoly> {
        let n = self.deg() as usize;
        if n == d {
            return vec![self.clone()];
        }
        if n == 0 {
            return Vec::new();
        }
        let f = &self.field;
        let q = f.size();
        loop {
            let a = UniPoly::new(f, (0..n).map(|_| f.random(rng)).collect());
            if a.deg() < 1 {
                continue;
            }
            let b = if f.characteristic() == 2 {
                let steps = f.degree() as usize * d;
                let mut t = a.clone();
                let mut acc = a.clone();
                for _ in 1..steps {
                    t = t.mulmod(&t, self);
                    acc = acc.add(&t);
                }
                acc
            } else {
                let mut t = a.rem(self);
                let mut acc = t.clone();
                for _ in 1..d {
                    t = t.powmod(q, self);
                    acc = acc.mulmod(&t, self);
                }
                acc.powmod((q - 1) / 2, self).sub(&UniPoly::one(f))
            };
            let g = self.gcd(&b);
            if g.deg() > 0 && g.deg() < n as isize {
                let h = self.div_exact(&g).unwrap();
                let mut out = g.equal_degree(d, rng);
                out.extend(h.equal_degree(d, rng));
                return out;
            }
        }
    }

    /// Complete factorization into monic irreducibles with multiplicities,
    /// sorted by degree then coefficients. The leading coefficient is dropped.
    pub fn factor(&self, seed: u64) -> Vec<(UniPoly, usize)> {
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut out = Vec::new();
        for (g, m) in self.squarefree_decomposition() {
            for (h, d) in g.distinct_degree() {
                for irr in h.equal_degree(d, &mut rng) {
                    out.push((irr, m));
                }
            }
        }
        out.sort_by(|a, b| a.0.cmp_canonical(&b.0).then(a.1.cmp(&b.1)));
        out
    }

    /// Roots in the coefficient field, ascending by encoding.
    pub fn roots(&self, seed: u64) -> Vec<Elem> {
        if self.deg() < 1 {
            return Vec::new();
        }
        let f = self.monic();
        let x = UniPoly::x(&self.field);
        let xq = x.powmod(self.field.size(), &f);
        let g = f.gcd(&xq.sub(&x));
        if g.deg() < 1 {
            return Vec::new();
        }
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let mut r: Vec<Elem> = g
            .equal_degree(1, &mut rng)
            .into_iter()
            .map(|l| self.field.neg(l.coeff(0)))
            .collect();
        r.sort_unstable();
        r
    }

    pub fn is_squarefree(&self) -> bool {
        !self.is_zero() && self.gcd(&self.derivative()).deg() == 0
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let n = match self.degree() {
            Some(n) if n >= 1 => n,
            _ => return false,
        };
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let q = self.field.size();
        let x = UniPoly::x(&self.field);
        let frob = |times: usize| {
            let mut h = x.rem(&f);
            for _ in 0..times {
                h = h.powmod(q, &f);
            }
            h
        };
        if !frob(n).sub(&x).rem(&f).is_zero() {
            return false;
        }
        for r in prime_factors(n as u64) {
            let h = frob(n / r as usize);
            if f.gcd(&h.sub(&x)).deg() != 0 {
                return false;
            }
        }
        true
    }

    pub fn cmp_canonical(&self, o: &UniPoly) -> Ordering {
        self.c
            .len()
            .cmp(&o.c.len())
            .then_with(|| self.c.iter().rev().cmp(o.c.iter().rev()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::make_field;

    fn poly(f: &FieldDesc, c: &[Elem]) -> UniPoly {
        UniPoly::new(f, c.to_vec())
    }

    #[test]
    fn t2_plus_1_over_f2_is_a_square() {
        let f2 = make_field(2, 1, None).unwrap();
        let fac = poly(&f2, &[1, 0, 1]).factor(0);
        assert_eq!(fac, vec![(poly(&f2, &[1, 1]), 2)]);
    }

    #[test]
    fn t2_t_1_irreducible_over_f2_splits_over_f4() {
        let f2 = make_field(2, 1, None).unwrap();
        let g = poly(&f2, &[1, 1, 1]);
        assert!(g.is_irreducible());
        assert_eq!(g.factor(0).len(), 1);
        let f4 = make_field(2, 2, None).unwrap();
        let g4 = poly(&f4, &[1, 1, 1]);
        let fac = g4.factor(0);
        // exhaustive oracle: roots in GF(4) by evaluation
        let roots: Vec<Elem> = f4.elements().filter(|&a| g4.eval(a) == 0).collect();
        assert_eq!(roots, vec![2, 3]);
        let t = f4.generator();
        assert_eq!(
            fac,
            vec![(poly(&f4, &[t, 1]), 1), (poly(&f4, &[f4.add(t, 1), 1]), 1)]
        );
    }

    #[test]
    fn factors_multiply_back() {
        let f = make_field(3, 2, None).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..50 {
            let deg = 1 + (f.random(&mut rng) % 9) as usize;
            let mut c: Vec<Elem> = (0..deg).map(|_| f.random(&mut rng)).collect();
            c.push(1);
            let g = UniPoly::new(&f, c);
            let fac = g.factor(3);
            let mut prod = UniPoly::one(&f);
            for (h, m) in &fac {
                assert!(h.is_irreducible());
                for _ in 0..*m {
                    prod = prod.mul(h);
                }
            }
            assert_eq!(prod, g);
        }
    }

    #[test]
    fn xgcd_bezout() {
        let f = make_field(5, 1, None).unwrap();
        let a = poly(&f, &[1, 2, 3, 1]);
        let b = poly(&f, &[4, 0, 1]);
        let (g, s, t) = a.xgcd(&b);
        assert_eq!(s.mul(&a).add(&t.mul(&b)), g);
    }
}
