use std::collections::BTreeMap;
use std::ops::{Add, Mul, Neg, Sub};

use num_traits::Zero;

use crate::exactcoeff::{ParamPoly, Rational};

/// Exponent pair `(p, q)` of the monomial `slot1^p slot2^q`.
pub type Mono = (u32, u32);

/// Weight `p + s*q` of a monomial in the flag `P^(s)`.
pub fn grading(m: Mono, s: u32) -> u64 {
    m.0 as u64 + s as u64 * m.1 as u64
}

/// Falling factorial `n (n-1) ... (n-k+1)`.
pub(crate) fn falling(n: u32, k: u32) -> i128 {
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128)
}

pub(crate) fn binom(n: u32, k: u32) -> i128 {
    let k = k.min(n - k);
    (0..k).fold(1i128, |acc, i| acc * (n - i) as i128 / (i + 1) as i128)
}

/// Sparse polynomial in the two spatial slots with `ParamPoly` coefficients.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Poly2 {
    terms: BTreeMap<Mono, ParamPoly>,
}

impl Poly2 {
    pub fn zero() -> Self {
        Poly2 { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(0, 0, ParamPoly::one())
    }

    pub fn monomial(p: u32, q: u32, c: ParamPoly) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert((p, q), c);
        }
        Poly2 { terms }
    }

    pub fn constant(c: ParamPoly) -> Self {
        Self::monomial(0, 0, c)
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (Mono, ParamPoly)>) -> Self {
        let mut out = Poly2::zero();
        for (m, c) in terms {
            out.add_term(m, &c);
        }
        out
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

    /// Terms in lexicographic `(p, q)` order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (Mono, &ParamPoly)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    pub fn coeff(&self, p: u32, q: u32) -> ParamPoly {
        self.terms.get(&(p, q)).cloned().unwrap_or_default()
    }

    pub fn add_term(&mut self, m: Mono, c: &ParamPoly) {
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&m) {
            Some(x) => {
                *x += c;
                if x.is_zero() {
                    self.terms.remove(&m);
                }
            }
            None => {
                self.terms.insert(m, c.clone());
            }
        }
    }

    pub fn scale(&self, k: &ParamPoly) -> Poly2 {
        if k.is_zero() {
            return Poly2::zero();
        }
        Poly2::from_terms(self.terms.iter().map(|(m, c)| (*m, c * k)))
    }

    pub fn scale_rational(&self, k: &Rational) -> Poly2 {
        if k.is_zero() {
            return Poly2::zero();
        }
        Poly2 {
            terms: self.terms.iter().map(|(m, c)| (*m, c.scale(k))).collect(),
        }
    }

    /// `d^i/d slot1^i d^j/d slot2^j` of this polynomial.
    pub fn derivative(&self, i: u32, j: u32) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(p, q), c) in &self.terms {
            if p < i || q < j {
                continue;
            }
            let k = Rational::from_integer((falling(p, i) * falling(q, j)).into());
            out.terms.insert((p - i, q - j), c.scale(&k));
        }
        out
    }

    pub fn substitute(
        &self,
        lambda: Option<&Rational>,
        nu: Option<&Rational>,
        omega: Option<&Rational>,
    ) -> Poly2 {
        Poly2::from_terms(
            self.terms
                .iter()
                .map(|(m, c)| (*m, c.substitute(lambda, nu, omega))),
        )
    }

    /// Largest `p + s q` among the terms, `None` for zero.
    pub fn max_grading(&self, s: u32) -> Option<u64> {
        self.terms.keys().map(|&m| grading(m, s)).max()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|&(p, q)| p + q).max()
    }

    /// Polynomial in `(x, y)` even in `y` rewritten in `(u, v) = (x, y^2)`;
    /// `None` when an odd power of `y` is present.
    pub fn even_in_slot2_to_half(&self) -> Option<Poly2> {
        let mut out = Poly2::zero();
        for (&(p, q), c) in &self.terms {
            if q % 2 == 1 {
                return None;
            }
            out.terms.insert((p, q / 2), c.clone());
        }
        Some(out)
    }

    /// Inverse of [`Poly2::even_in_slot2_to_half`]: `v -> y^2`.
    pub fn slot2_squared(&self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(&(p, q), c)| ((p, 2 * q), c.clone())).collect(),
        }
    }

    /// Exact evaluation with numeric parameters and slot values.
    pub fn eval(&self, params: [&Rational; 3], x: &Rational, y: &Rational) -> Rational {
        let mut acc = Rational::zero();
        for (&(p, q), c) in &self.terms {
            acc += c.eval(params[0], params[1], params[2])
                * num_traits::pow(x.clone(), p as usize)
                * num_traits::pow(y.clone(), q as usize);
        }
        acc
    }
}

impl Add for &Poly2 {
    type Output = Poly2;
    fn add(self, o: &Poly2) -> Poly2 {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, c);
        }
        r
    }
}

impl Sub for &Poly2 {
    type Output = Poly2;
    fn sub(self, o: &Poly2) -> Poly2 {
        let mut r = self.clone();
        for (m, c) in &o.terms {
            r.add_term(*m, &-c);
        }
        r
    }
}

impl Neg for &Poly2 {
    type Output = Poly2;
    fn neg(self) -> Poly2 {
        Poly2 {
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl Mul for &Poly2 {
    type Output = Poly2;
    fn mul(self, o: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(p1, q1), c1) in &self.terms {
            for (&(p2, q2), c2) in &o.terms {
                out.add_term((p1 + p2, q1 + q2), &(c1 * c2));
            }
        }
        out
    }
}

impl From<ParamPoly> for Poly2 {
    fn from(c: ParamPoly) -> Self {
        Poly2::constant(c)
    }
}
