//! Rational functions `num/den` over a finite field, kept canonical.

use std::fmt;

use crate::algebra::field::{Elem, FieldDesc};
use crate::algebra::multipoly::MultiPoly;
use crate::algebra::upoly::{FieldOps, Ring};

/// Canonical quotient: `gcd(num, den) = 1` and `den` has grlex-leading coefficient 1.
#[derive(Clone, PartialEq, Eq)]
pub struct RationalFunc {
    num: MultiPoly,
    den: MultiPoly,
}

impl fmt::Debug for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for RationalFunc {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |i: usize| format!("x{}", i + 1);
        if self.den.is_one() {
            write!(f, "{}", self.num.format_with(&name))
        } else {
            write!(
                f,
                "({})/({})",
                self.num.format_with(&name),
                self.den.format_with(&name)
            )
        }
    }
}

impl RationalFunc {
    pub fn new(num: MultiPoly, den: MultiPoly) -> Option<Self> {
        if den.is_zero() {
            return None;
        }
        Some(Self::reduce(num, den))
    }

    fn reduce(num: MultiPoly, den: MultiPoly) -> Self {
        if num.is_zero() {
            return RationalFunc {
                den: MultiPoly::one(num.field(), num.nvars()),
                num,
            };
        }
        if den.is_constant() {
            let inv = num.field().inv(den.lc()).unwrap();
            return RationalFunc {
                num: num.scale(inv),
                den: MultiPoly::one(den.field(), den.nvars()),
            };
        }
        let g = num.gcd(&den);
        let (n, d) = if g.is_one() {
            (num, den)
        } else {
            (num.div_exact(&g).unwrap(), den.div_exact(&g).unwrap())
        };
        let inv = n.field().inv(d.lc()).unwrap();
        RationalFunc {
            num: n.scale(inv),
            den: d.scale(inv),
        }
    }

    pub fn from_poly(p: MultiPoly) -> Self {
        let den = MultiPoly::one(p.field(), p.nvars());
        RationalFunc { num: p, den }
    }

    pub fn constant(f: &FieldDesc, nvars: usize, c: Elem) -> Self {
        Self::from_poly(MultiPoly::constant(f, nvars, c))
    }

    pub fn zero(f: &FieldDesc, nvars: usize) -> Self {
        Self::constant(f, nvars, 0)
    }

    pub fn one(f: &FieldDesc, nvars: usize) -> Self {
        Self::constant(f, nvars, 1)
    }

    pub fn num(&self) -> &MultiPoly {
        &self.num
    }

    pub fn den(&self) -> &MultiPoly {
        &self.den
    }

    pub fn field(&self) -> &FieldDesc {
        self.num.field()
    }

    pub fn nvars(&self) -> usize {
        self.num.nvars()
    }

    pub fn is_poly(&self) -> bool {
        self.den.is_one()
    }

    pub fn as_poly(&self) -> Option<&MultiPoly> {
        self.is_poly().then_some(&self.num)
    }

    pub fn is_constant(&self) -> bool {
        self.is_poly() && self.num.is_constant()
    }

    pub fn scale(&self, a: Elem) -> Self {
        if a == 0 {
            return Self::zero(self.field(), self.nvars());
        }
        RationalFunc {
            num: self.num.scale(a),
            den: self.den.clone(),
        }
    }

    pub fn eval(&self, pt: &[Elem]) -> Option<Elem> {
        let d = self.den.eval(pt);
        let f = self.field();
        f.inv(d).map(|di| f.mul(self.num.eval(pt), di))
    }

    pub fn map_coeffs(&self, dst: &FieldDesc, g: impl Fn(Elem) -> Elem + Copy) -> Self {
        Self::reduce(self.num.map_coeffs(dst, g), self.den.map_coeffs(dst, g))
    }
}

impl Ring for RationalFunc {
    fn zero_like(&self) -> Self {
        Self::zero(self.field(), self.nvars())
    }

    fn one_like(&self) -> Self {
        Self::one(self.field(), self.nvars())
    }

    fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn is_one(&self) -> bool {
        self.den.is_one() && self.num.is_one()
    }

    fn add(&self, o: &Self) -> Self {
        if self.is_zero() {
            return o.clone();
        }
        if o.is_zero() {
            return self.clone();
        }
        if self.den == o.den {
            if self.den.is_one() {
                return Self::from_poly(self.num.add(&o.num));
            }
            return Self::reduce(self.num.add(&o.num), self.den.clone());
        }
        let g = self.den.gcd(&o.den);
        let a = self.den.div_exact(&g).unwrap();
        let b = o.den.div_exact(&g).unwrap();
        let num = self.num.mul(&b).add(&o.num.mul(&a));
        Self::reduce(num, a.mul(&o.den))
    }

    fn sub(&self, o: &Self) -> Self {
        self.add(&o.neg())
    }

    fn neg(&self) -> Self {
        RationalFunc {
            num: self.num.neg(),
            den: self.den.clone(),
        }
    }

    fn mul(&self, o: &Self) -> Self {
        if self.is_zero() || o.is_zero() {
            return self.zero_like();
        }
        if self.den.is_one() && o.den.is_one() {
            return Self::from_poly(self.num.mul(&o.num));
        }
        let g1 = self.num.gcd(&o.den);
        let g2 = o.num.gcd(&self.den);
        let n = self
            .num
            .div_exact(&g1)
            .unwrap()
            .mul(&o.num.div_exact(&g2).unwrap());
        let d = self
            .den
            .div_exact(&g2)
            .unwrap()
            .mul(&o.den.div_exact(&g1).unwrap());
        let inv = n.field().inv(d.lc()).unwrap();
        RationalFunc {
            num: n.scale(inv),
            den: d.scale(inv),
        }
    }

    fn div_exact(&self, o: &Self) -> Option<Self> {
        o.inv().map(|i| self.mul(&i))
    }

    fn scale_int(&self, k: u64) -> Self {
        let f = self.field();
        self.scale(f.from_int((k % f.characteristic()) as i64))
    }
}

impl FieldOps for RationalFunc {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let inv = self.field().inv(self.num.lc()).unwrap();
        Some(RationalFunc {
            num: self.den.scale(inv),
            den: self.num.scale(inv),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::field::make_field;

    #[test]
    fn canonical_form() {
        let f = make_field(5, 1, None).unwrap();
        let x = MultiPoly::var(&f, 2, 0);
        let y = MultiPoly::var(&f, 2, 1);
        let a = x.mul(&y).scale(3);
        let b = x.scale(2);
        let r = RationalFunc::new(a, b).unwrap();
        assert!(r.is_poly());
        assert_eq!(r.num(), &y.scale(f.div(3, 2).unwrap()));
        let s = RationalFunc::new(y.clone(), x.add(&y)).unwrap();
        let t = s.inv().unwrap().mul(&s);
        assert!(t.is_one());
        let u = s.add(&s.neg());
        assert!(u.is_zero());
    }
}
