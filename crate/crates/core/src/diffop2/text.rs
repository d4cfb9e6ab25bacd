//! Canonical text form of operators.
//!
//! ```text
//! op     := "0" | term (" + " term)*
//! term   := "(" poly2 ") d1^" a " d2^" b
//! poly2  := pterm (" + " pterm)*
//! pterm  := "(" parampoly ") s1^" p " s2^" q
//! ```
//!
//! `parampoly` is the [`ParamPoly`] display form. Derivative indices are
//! written in descending graded-lex order of `(a, b)`, and monomials in
//! descending graded-lex order of `(p, q)`, so equal operators print
//! identically.

use std::cmp::Ordering;
use std::fmt::Write;

use super::poly2::{Mono, Poly2};
use super::DiffOp;
use crate::error::Error;
use crate::exactcoeff::ParamPoly;

/// Descending graded-lex comparison of exponent pairs.
pub fn graded_desc(x: &(u32, u32), y: &(u32, u32)) -> Ordering {
    (y.0 + y.1, y.0, y.1).cmp(&(x.0 + x.1, x.0, x.1))
}

pub(crate) fn sorted_poly_terms(p: &Poly2) -> Vec<(Mono, &ParamPoly)> {
    let mut v: Vec<_> = p.terms().collect();
    v.sort_by(|a, b| graded_desc(&a.0, &b.0));
    v
}

pub(crate) fn sorted_op_terms(d: &DiffOp) -> Vec<((u32, u32), &Poly2)> {
    let mut v: Vec<_> = d.terms().collect();
    v.sort_by(|a, b| graded_desc(&a.0, &b.0));
    v
}

pub fn serialize_poly2(p: &Poly2) -> String {
    if p.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, ((pe, qe), c)) in sorted_poly_terms(p).into_iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        write!(out, "({c}) s1^{pe} s2^{qe}").unwrap();
    }
    out
}

pub fn serialize(d: &DiffOp) -> String {
    if d.is_zero() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (i, ((a, b), c)) in sorted_op_terms(d).into_iter().enumerate() {
        if i > 0 {
            out.push_str(" + ");
        }
        write!(out, "({}) d1^{a} d2^{b}", serialize_poly2(c)).unwrap();
    }
    out
}

struct Cursor<'a> {
    src: &'a str,
    pos: usize,
}

impl<'a> Cursor<'a> {
    fn err_at(&self, pos: usize, msg: impl Into<String>) -> Error {
        let before = &self.src[..pos.min(self.src.len())];
        let line = before.matches('\n').count() + 1;
        let col = before.chars().rev().take_while(|&c| c != '\n').count() + 1;
        Error::Parse { line, col, msg: msg.into() }
    }

    fn err(&self, msg: impl Into<String>) -> Error {
        self.err_at(self.pos, msg)
    }

    fn skip_ws(&mut self) {
        let rest = &self.src[self.pos..];
        self.pos += rest.len() - rest.trim_start().len();
    }

    fn at_end(&mut self) -> bool {
        self.skip_ws();
        self.pos == self.src.len()
    }

    fn eat(&mut self, tok: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(tok) {
            self.pos += tok.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, tok: &str) -> Result<(), Error> {
        if self.eat(tok) {
            Ok(())
        } else {
            Err(self.err(format!("expected {tok:?}")))
        }
    }

    fn uint(&mut self) -> Result<u32, Error> {
        self.skip_ws();
        let rest = &self.src[self.pos..];
        let len = rest.bytes().take_while(u8::is_ascii_digit).count();
        let v = rest[..len].parse().map_err(|_| self.err("expected exponent"))?;
        self.pos += len;
        Ok(v)
    }

    /// Text up to the next `)` (parameter polynomials contain no parentheses).
    fn until_close(&mut self) -> Result<(usize, &'a str), Error> {
        let start = self.pos;
        match self.src[start..].find(')') {
            Some(off) => {
                self.pos = start + off;
                Ok((start, &self.src[start..start + off]))
            }
            None => Err(self.err("unclosed '('")),
        }
    }

    fn poly2(&mut self) -> Result<Poly2, Error> {
        let mut out = Poly2::zero();
        loop {
            self.expect("(")?;
            let (start, text) = self.until_close()?;
            let c: ParamPoly = text
                .parse()
                .map_err(|e: Error| self.err_at(start, e.to_string()))?;
            self.expect(")")?;
            self.expect("s1^")?;
            let p = self.uint()?;
            self.expect("s2^")?;
            let q = self.uint()?;
            out.add_term((p, q), &c);
            self.skip_ws();
            if self.src[self.pos..].starts_with(')') {
                return Ok(out);
            }
            self.expect("+")?;
        }
    }
}

/// Parses the canonical text form. Looser spacing is accepted and repeated
/// indices are summed.
pub fn parse(src: &str) -> Result<DiffOp, Error> {
    let mut cur = Cursor { src, pos: 0 };
    if cur.eat("0") && cur.at_end() {
        return Ok(DiffOp::zero());
    }
    cur.pos = 0;
    let mut out = DiffOp::zero();
    loop {
        cur.expect("(")?;
        let coeff = cur.poly2()?;
        cur.expect(")")?;
        cur.expect("d1^")?;
        let a = cur.uint()?;
        cur.expect("d2^")?;
        let b = cur.uint()?;
        out.add_term((a, b), &coeff);
        if cur.at_end() {
            return Ok(out);
        }
        cur.expect("+")?;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffop2::expr::parse_poly2;
    use crate::diffop2::VarNames;

    #[test]
    fn zero_and_single_derivative() {
        assert_eq!(serialize(&DiffOp::zero()), "0");
        assert_eq!(serialize(&DiffOp::partial(1, 0)), "((1) s1^0 s2^0) d1^1 d2^0");
        assert!(parse("0").unwrap().is_zero());
    }

    #[test]
    fn round_trip_with_parameters() {
        let c = parse_poly2("-4/3*u^2*v + (1+3*n)*u - l*w", VarNames::Uv).unwrap();
        let d = DiffOp::from_terms([((0, 2), c), ((1, 0), parse_poly2("6", VarNames::Uv).unwrap())]);
        let text = serialize(&d);
        assert_eq!(
            text,
            "((-4/3) s1^2 s2^1 + (3*n + 1) s1^1 s2^0 + (-l*w) s1^0 s2^0) d1^0 d2^2 + ((6) s1^0 s2^0) d1^1 d2^0"
        );
        assert_eq!(parse(&text).unwrap(), d);
    }

    #[test]
    fn errors_report_line_and_column() {
        match parse("((1) s1^0 s2^0) d1^1\n  d3^0") {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        match parse("((1 + q) s1^0 s2^0) d1^0 d2^0") {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (1, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse("").is_err());
        assert!(parse("((1) s1^0 s2^0) d1^0 d2^0 +").is_err());
    }
}
