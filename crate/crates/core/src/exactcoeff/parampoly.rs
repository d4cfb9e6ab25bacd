use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use super::rational::{parse_rational, Rational};
use crate::error::Error;

/// The three model parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Param {
    Lambda,
    Nu,
    Omega,
}

impl Param {
    pub fn symbol(self) -> &'static str {
        match self {
            Param::Lambda => "l",
            Param::Nu => "n",
            Param::Omega => "w",
        }
    }
}

/// Exponent triple `(e_lambda, e_nu, e_omega)`, ordered graded-lexicographically.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PExp {
    pub l: u16,
    pub n: u16,
    pub w: u16,
}

impl PExp {
    pub const ZERO: PExp = PExp { l: 0, n: 0, w: 0 };

    pub fn new(l: u16, n: u16, w: u16) -> Self {
        PExp { l, n, w }
    }

    pub fn degree(self) -> u32 {
        self.l as u32 + self.n as u32 + self.w as u32
    }

    fn get(self, p: Param) -> u16 {
        match p {
            Param::Lambda => self.l,
            Param::Nu => self.n,
            Param::Omega => self.w,
        }
    }
}

impl Add for PExp {
    type Output = PExp;
    fn add(self, o: PExp) -> PExp {
        PExp::new(self.l + o.l, self.n + o.n, self.w + o.w)
    }
}

impl Ord for PExp {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| (self.l, self.n, self.w).cmp(&(other.l, other.n, other.w)))
    }
}

impl PartialOrd for PExp {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Polynomial in `lambda, nu, omega` with rational coefficients.
///
/// Terms are kept sorted ascending in graded-lex order with no zero
/// coefficients, so structural equality is mathematical equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct ParamPoly {
    terms: Vec<(PExp, Rational)>,
}

impl ParamPoly {
    pub fn zero() -> Self {
        ParamPoly { terms: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        Self::monomial(PExp::ZERO, c)
    }

    pub fn int(c: i64) -> Self {
        Self::constant(super::rat_int(c))
    }

    pub fn param(p: Param) -> Self {
        let e = match p {
            Param::Lambda => PExp::new(1, 0, 0),
            Param::Nu => PExp::new(0, 1, 0),
            Param::Omega => PExp::new(0, 0, 1),
        };
        Self::monomial(e, Rational::one())
    }

    pub fn monomial(e: PExp, c: Rational) -> Self {
        if c.is_zero() {
            Self::zero()
        } else {
            ParamPoly { terms: vec![(e, c)] }
        }
    }

    /// Builds a canonical polynomial from arbitrary (possibly repeated) terms.
    pub fn from_terms(mut terms: Vec<(PExp, Rational)>) -> Self {
        terms.sort_by_key(|a| a.0);
        let mut out: Vec<(PExp, Rational)> = Vec::with_capacity(terms.len());
        for (e, c) in terms {
            match out.last_mut() {
                Some((le, lc)) if *le == e => *lc += c,
                _ => out.push((e, c)),
            }
        }
        out.retain(|(_, c)| !c.is_zero());
        ParamPoly { terms: out }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> &[(PExp, Rational)] {
        &self.terms
    }

    /// The value if this is a constant (including zero).
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.as_slice() {
            [] => Some(Rational::zero()),
            [(e, c)] if *e == PExp::ZERO => Some(c.clone()),
            _ => None,
        }
    }

    pub fn degree_in(&self, p: Param) -> u16 {
        self.terms.iter().map(|(e, _)| e.get(p)).max().unwrap_or(0)
    }

    pub fn scale(&self, k: &Rational) -> ParamPoly {
        if k.is_zero() {
            return ParamPoly::zero();
        }
        ParamPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, c * k)).collect(),
        }
    }

    /// `self += k * other`.
    pub fn add_scaled(&mut self, other: &ParamPoly, k: &Rational) {
        if k.is_zero() || other.is_zero() {
            return;
        }
        self.merge(other.terms.iter().map(|(e, c)| (*e, c * k)));
    }

    fn merge(&mut self, other: impl Iterator<Item = (PExp, Rational)>) {
        let lhs = std::mem::take(&mut self.terms);
        let mut out = Vec::with_capacity(lhs.len() + 4);
        let mut a = lhs.into_iter().peekable();
        let mut b = other.peekable();
        loop {
            let ord = match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => x.0.cmp(&y.0),
                (Some(_), None) => Ordering::Less,
                (None, Some(_)) => Ordering::Greater,
                (None, None) => break,
            };
            match ord {
                Ordering::Less => out.push(a.next().unwrap()),
                Ordering::Greater => out.push(b.next().unwrap()),
                Ordering::Equal => {
                    let (e, x) = a.next().unwrap();
                    let (_, y) = b.next().unwrap();
                    let s = x + y;
                    if !s.is_zero() {
                        out.push((e, s));
                    }
                }
            }
        }
        self.terms = out;
    }

    /// Exact value at the given parameter point.
    pub fn eval(&self, lambda: &Rational, nu: &Rational, omega: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (e, c) in &self.terms {
            acc += c * pow(lambda, e.l) * pow(nu, e.n) * pow(omega, e.w);
        }
        acc
    }

    /// Substitutes the given parameters and leaves the others symbolic.
    pub fn substitute(
        &self,
        lambda: Option<&Rational>,
        nu: Option<&Rational>,
        omega: Option<&Rational>,
    ) -> ParamPoly {
        if lambda.is_none() && nu.is_none() && omega.is_none() {
            return self.clone();
        }
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut k = c.clone();
                let mut out = *e;
                if let Some(x) = lambda {
                    k *= pow(x, e.l);
                    out.l = 0;
                }
                if let Some(x) = nu {
                    k *= pow(x, e.n);
                    out.n = 0;
                }
                if let Some(x) = omega {
                    k *= pow(x, e.w);
                    out.w = 0;
                }
                (out, k)
            })
            .collect();
        ParamPoly::from_terms(terms)
    }

    /// Splits into `(monomial, rational coefficient)` pairs; used to separate a
    /// parameter-dependent linear system into rational ones.
    pub fn split(&self) -> impl Iterator<Item = (PExp, &Rational)> {
        self.terms.iter().map(|(e, c)| (*e, c))
    }
}

fn pow(x: &Rational, k: u16) -> Rational {
    num_traits::pow(x.clone(), k as usize)
}

impl<'a> Add<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn add(self, o: &ParamPoly) -> ParamPoly {
        let mut r = self.clone();
        r += o;
        r
    }
}

impl AddAssign<&ParamPoly> for ParamPoly {
    fn add_assign(&mut self, o: &ParamPoly) {
        self.merge(o.terms.iter().cloned());
    }
}

impl SubAssign<&ParamPoly> for ParamPoly {
    fn sub_assign(&mut self, o: &ParamPoly) {
        self.merge(o.terms.iter().map(|(e, c)| (*e, -c)));
    }
}

impl<'a> Sub<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn sub(self, o: &ParamPoly) -> ParamPoly {
        let mut r = self.clone();
        r -= o;
        r
    }
}

impl Neg for &ParamPoly {
    type Output = ParamPoly;
    fn neg(self) -> ParamPoly {
        ParamPoly {
            terms: self.terms.iter().map(|(e, c)| (*e, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a ParamPoly> for &'a ParamPoly {
    type Output = ParamPoly;
    fn mul(self, o: &ParamPoly) -> ParamPoly {
        if self.is_zero() || o.is_zero() {
            return ParamPoly::zero();
        }
        if let [(e, c)] = self.terms.as_slice() {
            if *e == PExp::ZERO {
                return o.scale(c);
            }
        }
        if let [(e, c)] = o.terms.as_slice() {
            if *e == PExp::ZERO {
                return self.scale(c);
            }
        }
        let mut prod = Vec::with_capacity(self.terms.len() * o.terms.len());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &o.terms {
                prod.push((*ea + *eb, ca * cb));
            }
        }
        ParamPoly::from_terms(prod)
    }
}

impl From<Rational> for ParamPoly {
    fn from(c: Rational) -> Self {
        ParamPoly::constant(c)
    }
}

impl fmt::Display for ParamPoly {
    /// Descending graded-lex: `-4/3*l^2*n + 5`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().rev().enumerate() {
            let mag = c.abs();
            if i == 0 {
                if c.is_negative() {
                    f.write_str("-")?;
                }
            } else if c.is_negative() {
                f.write_str(" - ")?;
            } else {
                f.write_str(" + ")?;
            }
            let mut first = true;
            if !mag.is_one() || *e == PExp::ZERO {
                write!(f, "{mag}")?;
                first = false;
            }
            for (sym, k) in [("l", e.l), ("n", e.n), ("w", e.w)] {
                if k == 0 {
                    continue;
                }
                if !first {
                    f.write_str("*")?;
                }
                first = false;
                match k {
                    1 => write!(f, "{sym}")?,
                    _ => write!(f, "{sym}^{k}")?,
                }
            }
        }
        Ok(())
    }
}

impl FromStr for ParamPoly {
    type Err = Error;

    /// Accepts the [`Display`](fmt::Display) form and anything looser in
    /// spacing, factor order, or repetition (`l*l` is `l^2`).
    fn from_str(s: &str) -> Result<Self, Error> {
        let bad = |msg: &str| Error::BadParamPoly(format!("{msg} in {s:?}"));
        let compact: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if compact.is_empty() {
            return Err(bad("empty"));
        }
        // Split into signed terms at top-level '+'/'-' not following '/'.
        let mut pieces: Vec<(bool, String)> = Vec::new();
        let mut cur = String::new();
        let mut neg = false;
        for (i, ch) in compact.chars().enumerate() {
            if (ch == '+' || ch == '-') && !(cur.ends_with('/') || cur.ends_with('^') || cur.ends_with('*')) {
                if i > 0 {
                    if cur.is_empty() {
                        return Err(bad("dangling sign"));
                    }
                    pieces.push((neg, std::mem::take(&mut cur)));
                }
                neg = ch == '-';
            } else {
                cur.push(ch);
            }
        }
        if cur.is_empty() {
            return Err(bad("dangling sign"));
        }
        pieces.push((neg, cur));

        let mut terms = Vec::new();
        for (neg, body) in pieces {
            let mut coeff = Rational::one();
            let mut e = PExp::ZERO;
            for factor in body.split('*') {
                let (base, exp) = match factor.split_once('^') {
                    Some((b, x)) => (b, x.parse::<u16>().map_err(|_| bad("bad exponent"))?),
                    None => (factor, 1),
                };
                match base {
                    "l" => e.l += exp,
                    "n" => e.n += exp,
                    "w" => e.w += exp,
                    _ => {
                        if factor.contains('^') {
                            return Err(bad("exponent on a number"));
                        }
                        coeff *= parse_rational(base).map_err(|_| bad("bad factor"))?;
                    }
                }
            }
            if neg {
                coeff = -coeff;
            }
            terms.push((e, coeff));
        }
        Ok(ParamPoly::from_terms(terms))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcoeff::{rat, rat_int};

    fn pp(s: &str) -> ParamPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_examples() {
        assert!((&pp("l") + &pp("-l")).is_zero());
        assert_eq!(&pp("2*l + n") + &pp("n"), pp("2*l + 2*n"));
        assert_eq!(&pp("1 - 4*n^2") + &pp("4*n^2"), ParamPoly::one());
    }

    #[test]
    fn mul_examples() {
        assert_eq!(&pp("1 - 2*n") * &pp("1 + 2*n"), pp("1 - 4*n^2"));
        assert!((&pp("3*l*w + 7") * &ParamPoly::zero()).is_zero());
        assert_eq!(
            &pp("2*l + n - 1") * &pp("6*l + 1"),
            pp("12*l^2 + 6*l*n - 4*l + n - 1")
        );
    }

    #[test]
    fn eval_examples() {
        let z = rat_int(0);
        assert_eq!(pp("2*l + n + 1").eval(&z, &z, &z), rat_int(1));
        assert_eq!(pp("1 - 4*n^2").eval(&z, &rat(1, 2), &z), rat_int(0));
        assert_eq!(pp("w").eval(&z, &z, &rat_int(1)), rat_int(1));
    }

    #[test]
    fn substitute_keeps_other_symbols() {
        let p = pp("3*l^2*n + l*w - 2");
        assert_eq!(p.substitute(Some(&rat_int(0)), None, None), pp("-2"));
        assert_eq!(p.substitute(None, Some(&rat_int(2)), None), pp("6*l^2 + l*w - 2"));
        assert_eq!(p.substitute(None, None, None), p);
    }

    #[test]
    fn display_is_descending_graded_lex() {
        assert_eq!(pp("n + 5 - 4/3*l^2*n + l").to_string(), "-4/3*l^2*n + l + n + 5");
        assert_eq!(ParamPoly::zero().to_string(), "0");
        assert_eq!(pp("-1/2").to_string(), "-1/2");
    }

    #[test]
    fn parse_errors() {
        for bad in ["", "l +", "x", "2^3", "l^-1", "1/0", "0.5*l"] {
            assert!(bad.parse::<ParamPoly>().is_err(), "{bad:?} should fail");
        }
        // a negative rational factor after a product sign is fine
        assert_eq!(pp("l*-3/2"), pp("-3/2*l"));
    }

    #[test]
    fn degree_queries() {
        let p = pp("l^5 + n^3*w + 2");
        assert_eq!(p.degree_in(Param::Lambda), 5);
        assert_eq!(p.degree_in(Param::Nu), 3);
        assert_eq!(p.degree_in(Param::Omega), 1);
        assert_eq!(p.as_constant(), None);
        assert_eq!(pp("7/3").as_constant(), Some(rat(7, 3)));
    }
}
