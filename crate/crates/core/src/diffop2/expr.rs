//! Small infix reader for polynomial expressions such as
//! `8/9*u*v*(2*u^3 - 9*v)`. Used to transcribe model operators in the same
//! shape they are usually written down. Numbers are exact; `p/q` directly
//! after a digit run is a fraction literal, any other `/` is rejected.
//! Parameters are `l`, `n`, `w` (lambda, nu, omega).

use super::poly2::Poly2;
use super::VarNames;
use crate::error::Error;
use crate::exactcoeff::{parse_rational, Param, ParamPoly};

struct Reader<'a> {
    src: &'a [u8],
    pos: usize,
    names: VarNames,
}

pub fn parse_poly2(src: &str, names: VarNames) -> Result<Poly2, Error> {
    let mut r = Reader { src: src.as_bytes(), pos: 0, names };
    let out = r.expr()?;
    r.skip_ws();
    if r.pos != r.src.len() {
        return Err(r.err("trailing input"));
    }
    Ok(out)
}

impl Reader<'_> {
    fn err(&self, msg: &str) -> Error {
        let before = &self.src[..self.pos.min(self.src.len())];
        let line = before.iter().filter(|&&b| b == b'\n').count() + 1;
        let col = before.iter().rev().take_while(|&&b| b != b'\n').count() + 1;
        Error::Parse { line, col, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn expr(&mut self) -> Result<Poly2, Error> {
        let mut acc = match self.peek() {
            Some(b'-') => {
                self.pos += 1;
                -&self.term()?
            }
            Some(b'+') => {
                self.pos += 1;
                self.term()?
            }
            _ => self.term()?,
        };
        while let Some(op @ (b'+' | b'-')) = self.peek() {
            self.pos += 1;
            let t = self.term()?;
            acc = if op == b'+' { &acc + &t } else { &acc - &t };
        }
        Ok(acc)
    }

    fn term(&mut self) -> Result<Poly2, Error> {
        let mut acc = self.power()?;
        while let Some(b'*') = self.peek() {
            self.pos += 1;
            let f = self.power()?;
            acc = &acc * &f;
        }
        Ok(acc)
    }

    fn power(&mut self) -> Result<Poly2, Error> {
        let base = self.atom()?;
        if let Some(b'^') = self.peek() {
            self.pos += 1;
            self.skip_ws();
            let start = self.pos;
            while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                self.pos += 1;
            }
            let k: u32 = std::str::from_utf8(&self.src[start..self.pos])
                .unwrap()
                .parse()
                .map_err(|_| self.err("expected integer exponent"))?;
            let mut out = Poly2::one();
            for _ in 0..k {
                out = &out * &base;
            }
            return Ok(out);
        }
        Ok(base)
    }

    fn atom(&mut self) -> Result<Poly2, Error> {
        match self.peek() {
            Some(b'(') => {
                self.pos += 1;
                let e = self.expr()?;
                if self.peek() != Some(b')') {
                    return Err(self.err("expected ')'"));
                }
                self.pos += 1;
                Ok(e)
            }
            Some(b'-') => {
                self.pos += 1;
                Ok(-&self.power()?)
            }
            Some(c) if c.is_ascii_digit() => {
                let start = self.pos;
                let digits = |r: &mut Self| {
                    while r.pos < r.src.len() && r.src[r.pos].is_ascii_digit() {
                        r.pos += 1;
                    }
                };
                digits(self);
                if self.src.get(self.pos) == Some(&b'/') {
                    self.pos += 1;
                    let den_start = self.pos;
                    digits(self);
                    if den_start == self.pos {
                        return Err(self.err("expected denominator"));
                    }
                }
                let lit = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let r = parse_rational(lit).map_err(|_| self.err("bad number"))?;
                Ok(Poly2::constant(ParamPoly::constant(r)))
            }
            Some(c) if c.is_ascii_alphabetic() => {
                let start = self.pos;
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_alphanumeric() {
                    self.pos += 1;
                }
                let id = std::str::from_utf8(&self.src[start..self.pos]).unwrap();
                let (s1, s2) = self.names.symbols();
                let one = ParamPoly::one();
                match id {
                    "l" => Ok(Poly2::constant(ParamPoly::param(Param::Lambda))),
                    "n" => Ok(Poly2::constant(ParamPoly::param(Param::Nu))),
                    "w" => Ok(Poly2::constant(ParamPoly::param(Param::Omega))),
                    _ if id == s1 => Ok(Poly2::monomial(1, 0, one)),
                    _ if id == s2 => Ok(Poly2::monomial(0, 1, one)),
                    _ => {
                        self.pos = start;
                        Err(self.err(&format!("unknown symbol {id:?}")))
                    }
                }
            }
            Some(_) => Err(self.err("unexpected character")),
            None => Err(self.err("unexpected end of input")),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcoeff::rat;

    #[test]
    fn reads_appendix_style_coefficients() {
        let p = parse_poly2("8/9*u*v*(2*u^3-9*v)", VarNames::Uv).unwrap();
        assert_eq!(p.coeff(4, 1), ParamPoly::constant(rat(16, 9)));
        assert_eq!(p.coeff(1, 2), ParamPoly::constant(rat(-8, 1)));
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn parameters_and_unary_minus() {
        let p = parse_poly2("-(2/9)*(2+3*n)*(1+3*n)", VarNames::Xy).unwrap();
        assert_eq!(p.coeff(0, 0), "-2*n^2 - 2*n - 4/9".parse().unwrap());
    }

    #[test]
    fn errors_carry_position() {
        match parse_poly2("u +\n  z", VarNames::Uv) {
            Err(Error::Parse { line, col, .. }) => assert_eq!((line, col), (2, 3)),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_poly2("x", VarNames::Uv).is_err());
        assert!(parse_poly2("u/2", VarNames::Uv).is_err());
        assert!(parse_poly2("(u", VarNames::Uv).is_err());
    }
}
