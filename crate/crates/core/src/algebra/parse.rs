//! Text grammar for polynomials, field elements, fields and points.
//!
//! ```text
//! X0^2*X1 - X2^3 over GF(3)
//! X0^3*X1 + t*X2^4 over GF(2^2; t^2+t+1)
//! x1^2 - x2 over GF(9) in P^3
//! ```
//! Variables are `X0..X9` (homogeneous) or `x1..x9` (affine), never mixed.
//! `t` denotes the class of the modulus variable in an extension field.

use crate::algebra::field::{make_field, Elem, FieldDesc};
use crate::algebra::multipoly::MultiPoly;
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(u128),
    T,
    Var(char, usize),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn perr(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

fn tokenize(s: &str) -> Result<Vec<Tok>> {
    let b: Vec<char> = s.chars().collect();
    let mut i = 0;
    let mut out = Vec::new();
    while i < b.len() {
        let c = b[i];
        match c {
            ' ' | '\t' => i += 1,
            '+' => {
                out.push(Tok::Plus);
                i += 1
            }
            '-' => {
                out.push(Tok::Minus);
                i += 1
            }
            '*' => {
                out.push(Tok::Star);
                i += 1
            }
            '^' => {
                out.push(Tok::Caret);
                i += 1
            }
            '(' => {
                out.push(Tok::LParen);
                i += 1
            }
            ')' => {
                out.push(Tok::RParen);
                i += 1
            }
            '0'..='9' => {
                let st = i;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                let txt: String = b[st..i].iter().collect();
                out.push(Tok::Int(
                    txt.parse()
                        .map_err(|_| perr(format!("integer too large: {txt}")))?,
                ));
            }
            't' => {
                out.push(Tok::T);
                i += 1
            }
            'X' | 'x' => {
                let st = i + 1;
                i += 1;
                while i < b.len() && b[i].is_ascii_digit() {
                    i += 1;
                }
                if st == i {
                    return Err(perr(format!("variable `{c}` needs an index")));
                }
                let idx: usize = b[st..i]
                    .iter()
                    .collect::<String>()
                    .parse()
                    .map_err(|_| perr("bad variable index"))?;
                out.push(Tok::Var(c, idx));
            }
            _ => return Err(perr(format!("unexpected character `{c}`"))),
        }
    }
    Ok(out)
}

struct Parser<'a> {
    toks: &'a [Tok],
    pos: usize,
    field: &'a FieldDesc,
    nvars: usize,
    var_of: &'a dyn Fn(char, usize) -> Result<usize>,
}

impl Parser<'_> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn expr(&mut self) -> Result<MultiPoly> {
        let mut acc = self.term()?;
        while let Some(t) = self.peek() {
            match t {
                Tok::Plus => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Tok::Minus => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => break,
            }
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<MultiPoly> {
        let mut acc = self.unary()?;
        while let Some(Tok::Star) = self.peek() {
            self.pos += 1;
            acc = acc.mul(&self.unary()?);
        }
        Ok(acc)
    }

    fn unary(&mut self) -> Result<MultiPoly> {
        if let Some(Tok::Minus) = self.peek() {
            self.pos += 1;
            return Ok(self.unary()?.neg());
        }
        if let Some(Tok::Plus) = self.peek() {
            self.pos += 1;
            return self.unary();
        }
        self.power()
    }

    fn power(&mut self) -> Result<MultiPoly> {
        let base = self.atom()?;
        if let Some(Tok::Caret) = self.peek() {
            self.pos += 1;
            match self.peek() {
                Some(Tok::Int(e)) if *e <= u32::MAX as u128 => {
                    let e = *e as u32;
                    self.pos += 1;
                    if e > 4096 {
                        return Err(perr("exponent too large"));
                    }
                    return Ok(base.pow(e));
                }
                _ => return Err(perr("expected a non-negative integer exponent")),
            }
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<MultiPoly> {
        let f = self.field;
        let tok = self
            .peek()
            .cloned()
            .ok_or_else(|| perr("unexpected end of input"))?;
        self.pos += 1;
        match tok {
            Tok::Int(n) => {
                let r = (n % f.characteristic() as u128) as i64;
                Ok(MultiPoly::constant(f, self.nvars, f.from_int(r)))
            }
            Tok::T => {
                if f.is_prime_field() {
                    return Err(perr("`t` is only meaningful over an extension field"));
                }
                Ok(MultiPoly::constant(f, self.nvars, f.generator()))
            }
            Tok::Var(c, i) => {
                let v = (self.var_of)(c, i)?;
                Ok(MultiPoly::var(f, self.nvars, v))
            }
            Tok::LParen => {
                let e = self.expr()?;
                match self.peek() {
                    Some(Tok::RParen) => {
                        self.pos += 1;
                        Ok(e)
                    }
                    _ => Err(perr("missing `)`")),
                }
            }
            other => Err(perr(format!("unexpected token {other:?}"))),
        }
    }
}

fn parse_tokens(
    toks: &[Tok],
    field: &FieldDesc,
    nvars: usize,
    var_of: &dyn Fn(char, usize) -> Result<usize>,
) -> Result<MultiPoly> {
    if toks.is_empty() {
        return Err(perr("empty expression"));
    }
    let mut p = Parser {
        toks,
        pos: 0,
        field,
        nvars,
        var_of,
    };
    let e = p.expr()?;
    if p.pos != toks.len() {
        return Err(perr(format!("trailing input at token {}", p.pos)));
    }
    Ok(e)
}

/// A field element: integer or `t`-expression.
pub fn parse_elem(s: &str, field: &FieldDesc) -> Result<Elem> {
    let toks = tokenize(s)?;
    if toks.iter().any(|t| matches!(t, Tok::Var(..))) {
        return Err(perr(format!("`{s}` is not a field element")));
    }
    let p = parse_tokens(&toks, field, 0, &|_, _| Err(perr("no variables allowed")))?;
    Ok(p.constant_coeff())
}

/// `GF(p)`, `GF(q)` with `q = p^k`, `GF(p^k)` or `GF(p^k; modulus-in-t)`.
pub fn parse_field(s: &str) -> Result<FieldDesc> {
    let s = s.trim();
    let inner = s
        .strip_prefix("GF(")
        .and_then(|r| r.strip_suffix(')'))
        .ok_or_else(|| perr(format!("field must look like GF(...), got `{s}`")))?;
    let (size, modulus) = match inner.split_once(';') {
        Some((a, b)) => (a.trim(), Some(b.trim())),
        None => (inner.trim(), None),
    };
    let (p, k) = match size.split_once('^') {
        Some((p, k)) => (
            p.trim()
                .parse::<u64>()
                .map_err(|_| perr("bad characteristic"))?,
            k.trim()
                .parse::<u32>()
                .map_err(|_| perr("bad extension degree"))?,
        ),
        None => {
            let q: u64 = size
                .parse()
                .map_err(|_| perr(format!("bad field size `{size}`")))?;
            prime_power(q).ok_or(Error::NotPrime(q))?
        }
    };
    if k == 0 {
        return Err(perr("extension degree must be positive"));
    }
    let modulus = match modulus {
        None => None,
        Some(m) => {
            let prime = make_field(p, 1, None)?;
            let toks = tokenize(m)?;
            let poly = parse_tokens(
                &toks
                    .iter()
                    .map(|t| {
                        if *t == Tok::T {
                            Tok::Var('x', 1)
                        } else {
                            t.clone()
                        }
                    })
                    .collect::<Vec<_>>(),
                &prime,
                1,
                &|c, i| {
                    if c == 'x' && i == 1 {
                        Ok(0)
                    } else {
                        Err(perr("modulus may only use t"))
                    }
                },
            )?;
            let u = poly.to_unipoly(0).unwrap();
            Some(u.coeffs().to_vec())
        }
    };
    make_field(p, k, modulus)
}

fn prime_power(q: u64) -> Option<(u64, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while p * p <= q && !q.is_multiple_of(p) {
        p += 1;
    }
    if !q.is_multiple_of(p) {
        p = q;
    }
    let (mut r, mut k) = (q, 0);
    while r % p == 0 {
        r /= p;
        k += 1;
    }
    (r == 1).then_some((p, k))
}

/// Result of parsing a polynomial with its trailing clauses.
#[derive(Clone, Debug)]
pub struct ParsedPoly {
    pub poly: MultiPoly,
    pub field: FieldDesc,
    /// `true` for `X0..`, `false` for `x1..`.
    pub homogeneous_names: bool,
}

/// Parse `<poly> [over <field>] [in P^N]`.
pub fn parse_poly(s: &str, default_field: Option<&FieldDesc>) -> Result<ParsedPoly> {
    let mut body = s.trim().to_string();
    let mut ambient: Option<usize> = None;
    if let Some(pos) = body.rfind(" in P^") {
        let n: usize = body[pos + 6..]
            .trim()
            .parse()
            .map_err(|_| perr("bad `in P^N` clause"))?;
        ambient = Some(n);
        body.truncate(pos);
    }
    let field = match body.rfind(" over ") {
        Some(pos) => {
            let f = parse_field(&body[pos + 6..])?;
            body.truncate(pos);
            f
        }
        None => default_field
            .cloned()
            .ok_or_else(|| perr("no field given (use `over GF(q)` or --field)"))?,
    };
    let toks = tokenize(&body)?;
    let mut kinds = toks.iter().filter_map(|t| {
        if let Tok::Var(c, i) = t {
            Some((*c, *i))
        } else {
            None
        }
    });
    let first = kinds.clone().next();
    let homogeneous = first.is_none_or(|(c, _)| c == 'X');
    if kinds.any(|(c, _)| (c == 'X') != homogeneous) {
        return Err(perr("cannot mix X (homogeneous) and x (affine) variables"));
    }
    let max_idx = toks
        .iter()
        .filter_map(|t| {
            if let Tok::Var(_, i) = t {
                Some(*i)
            } else {
                None
            }
        })
        .max();
    let mut nvars = match (homogeneous, max_idx) {
        (_, None) => 0,
        (true, Some(i)) => i + 1,
        (false, Some(0)) => return Err(perr("affine variables start at x1")),
        (false, Some(i)) => i,
    };
    if let Some(n) = ambient {
        let want = if homogeneous { n + 1 } else { n };
        if want < nvars {
            return Err(perr(format!(
                "polynomial uses more variables than P^{n} allows"
            )));
        }
        nvars = want;
    }
    if nvars > crate::algebra::multipoly::MAX_VARS {
        return Err(perr("too many variables"));
    }
    let var_of = move |c: char, i: usize| -> Result<usize> {
        if c == 'X' {
            Ok(i)
        } else if i == 0 {
            Err(perr("affine variables start at x1"))
        } else {
            Ok(i - 1)
        }
    };
    let poly = parse_tokens(&toks, &field, nvars, &var_of)?;
    Ok(ParsedPoly {
        poly,
        field,
        homogeneous_names: homogeneous,
    })
}

/// Parse an expression in a fixed ring of `nvars` homogeneous variables.
pub fn parse_poly_in(s: &str, field: &FieldDesc, nvars: usize) -> Result<MultiPoly> {
    let toks = tokenize(s)?;
    parse_tokens(&toks, field, nvars, &|c, i| {
        let v = if c == 'X' { Some(i) } else { i.checked_sub(1) };
        match v {
            Some(v) if v < nvars => Ok(v),
            _ => Err(perr(format!("variable {c}{i} outside the ring"))),
        }
    })
}

/// Projective point `a0:a1:...`, coordinates as field elements.
pub fn parse_point(s: &str, field: &FieldDesc) -> Result<Vec<Elem>> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let coords: Vec<Elem> = s
        .split(':')
        .map(|c| parse_elem(c, field))
        .collect::<Result<_>>()?;
    if coords.len() < 2 {
        return Err(perr("a projective point needs at least two coordinates"));
    }
    if coords.iter().all(|&c| c == 0) {
        return Err(perr("the zero vector is not a projective point"));
    }
    Ok(coords)
}

/// Homogeneous text form that parses back to the same polynomial.
pub fn format_poly(p: &MultiPoly) -> String {
    format!(
        "{} over {} in P^{}",
        p,
        p.field(),
        p.nvars().saturating_sub(1)
    )
}

pub fn format_point(field: &FieldDesc, coords: &[Elem]) -> String {
    coords
        .iter()
        .map(|&c| {
            if field.is_compound(c) {
                format!("({})", field.format(c))
            } else {
                field.format(c)
            }
        })
        .collect::<Vec<_>>()
        .join(":")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples_parse() {
        let p = parse_poly("X0^2*X1 - X2^3 over GF(3)", None).unwrap();
        assert_eq!(p.poly.nvars(), 3);
        assert_eq!(p.poly.to_string(), "X0^2*X1 + 2*X2^3");
        let q = parse_poly("X0^3*X1 + t*X2^4 over GF(2^2; t^2+t+1)", None).unwrap();
        assert_eq!(q.field.size(), 4);
        let back = parse_poly(&format_poly(&q.poly), None).unwrap();
        assert_eq!(back.poly, q.poly);
        assert!(parse_poly("X0^2 + ", Some(&q.field)).is_err());
        assert!(parse_field("GF(4; t^2+1)").is_err());
        assert!(parse_field("GF(6)").is_err());
    }

    #[test]
    fn ambient_and_points() {
        let p = parse_poly("X0*X1 - X2^2 over GF(9) in P^3", None).unwrap();
        assert_eq!(p.poly.nvars(), 4);
        let pt = parse_point("1:t:(t+1):0", &p.field).unwrap();
        assert_eq!(pt.len(), 4);
        assert_eq!(format_point(&p.field, &pt), "1:t:(t+1):0");
        assert!(parse_point("0:0", &p.field).is_err());
    }
}
