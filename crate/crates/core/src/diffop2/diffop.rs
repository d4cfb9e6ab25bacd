use std::collections::{BTreeMap, HashMap};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use rayon::prelude::*;

use super::poly2::{binom, falling, Mono, Poly2};
use super::VarNames;
use crate::exactcoeff::{ParamPoly, Rational};

/// Derivative multi-index `(a, b)` for `d^a/d slot1^a d^b/d slot2^b`.
pub type DerivIndex = (u32, u32);

/// Normal-ordered linear differential operator
/// `sum f_{a,b}(slot1, slot2) d^a/d slot1^a d^b/d slot2^b`.
///
/// Coefficients stand to the left of the derivatives. The display tag only
/// affects printing; equality ignores it.
#[derive(Clone, Debug, Default)]
pub struct DiffOp {
    terms: BTreeMap<DerivIndex, Poly2>,
    names: VarNames,
}

impl PartialEq for DiffOp {
    fn eq(&self, other: &Self) -> bool {
        self.terms == other.terms
    }
}

impl Eq for DiffOp {}

/// Work counters from a composition or commutator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct ComposeStats {
    /// Distinct `(a, b, p, q)` keys held by the accumulator before zero
    /// entries were dropped.
    pub peak_terms: usize,
}

type Key = u64;

fn pack(a: u32, b: u32, p: u32, q: u32) -> Key {
    debug_assert!(a < 1 << 16 && b < 1 << 16 && p < 1 << 16 && q < 1 << 16);
    ((a as u64) << 48) | ((b as u64) << 32) | ((p as u64) << 16) | q as u64
}

fn unpack(k: Key) -> (u32, u32, u32, u32) {
    (
        (k >> 48) as u32,
        ((k >> 32) & 0xffff) as u32,
        ((k >> 16) & 0xffff) as u32,
        (k & 0xffff) as u32,
    )
}

struct FlatTerm<'a> {
    a: u32,
    b: u32,
    p: u32,
    q: u32,
    c: &'a ParamPoly,
}

/// Left terms per parallel work unit.
const CHUNK: usize = 8;

impl DiffOp {
    pub fn zero() -> Self {
        DiffOp::default()
    }

    pub fn identity() -> Self {
        DiffOp::from_term((0, 0), Poly2::one())
    }

    pub fn from_term(d: DerivIndex, coeff: Poly2) -> Self {
        let mut op = DiffOp::zero();
        op.add_term(d, &coeff);
        op
    }

    /// Multiplication operator by a polynomial.
    pub fn multiplication(f: Poly2) -> Self {
        DiffOp::from_term((0, 0), f)
    }

    /// `d^a/d slot1^a d^b/d slot2^b` with unit coefficient.
    pub fn partial(a: u32, b: u32) -> Self {
        DiffOp::from_term((a, b), Poly2::one())
    }

    pub fn from_terms(terms: impl IntoIterator<Item = (DerivIndex, Poly2)>) -> Self {
        let mut op = DiffOp::zero();
        for (d, c) in terms {
            op.add_term(d, &c);
        }
        op
    }

    pub fn names(&self) -> VarNames {
        self.names
    }

    pub fn with_names(mut self, names: VarNames) -> Self {
        self.names = names;
        self
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Highest derivative order `a + b`; zero for the zero operator.
    pub fn order(&self) -> u32 {
        self.terms.keys().map(|&(a, b)| a + b).max().unwrap_or(0)
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (DerivIndex, &Poly2)> {
        self.terms.iter().map(|(d, c)| (*d, c))
    }

    pub fn coeff(&self, a: u32, b: u32) -> Poly2 {
        self.terms.get(&(a, b)).cloned().unwrap_or_default()
    }

    /// Number of `(a, b, p, q)` terms.
    pub fn term_count(&self) -> usize {
        self.terms.values().map(Poly2::len).sum()
    }

    pub fn add_term(&mut self, d: DerivIndex, c: &Poly2) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(d).or_default();
        *slot = &*slot + c;
        if slot.is_zero() {
            self.terms.remove(&d);
        }
    }

    pub fn scale(&self, k: &ParamPoly) -> DiffOp {
        DiffOp {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (*d, c.scale(k)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
            names: self.names,
        }
    }

    pub fn scale_rational(&self, k: &Rational) -> DiffOp {
        self.scale(&ParamPoly::constant(k.clone()))
    }

    /// Exact linear combination `sum k_i D_i`.
    pub fn linear(parts: &[(ParamPoly, &DiffOp)]) -> DiffOp {
        let mut out = DiffOp::zero();
        for (k, op) in parts {
            for (d, c) in &op.terms {
                out.add_term(*d, &c.scale(k));
            }
        }
        if let Some((_, op)) = parts.first() {
            out.names = op.names;
        }
        out
    }

    pub fn substitute(
        &self,
        lambda: Option<&Rational>,
        nu: Option<&Rational>,
        omega: Option<&Rational>,
    ) -> DiffOp {
        DiffOp {
            terms: self
                .terms
                .iter()
                .map(|(d, c)| (*d, c.substitute(lambda, nu, omega)))
                .filter(|(_, c)| !c.is_zero())
                .collect(),
            names: self.names,
        }
    }

    /// Image of `f` under this operator.
    pub fn apply(&self, f: &Poly2) -> Poly2 {
        let mut out = Poly2::zero();
        for (&(a, b), coeff) in &self.terms {
            let df = f.derivative(a, b);
            if !df.is_zero() {
                out = &out + &(coeff * &df);
            }
        }
        out
    }

    fn flat(&self) -> Vec<FlatTerm<'_>> {
        let mut v = Vec::with_capacity(self.term_count());
        for (&(a, b), poly) in &self.terms {
            for ((p, q), c) in poly.terms() {
                v.push(FlatTerm { a, b, p, q, c });
            }
        }
        v
    }

    /// Normal-ordered product `self ∘ other`.
    pub fn compose(&self, other: &DiffOp) -> DiffOp {
        self.compose_with_stats(other).0
    }

    pub fn compose_with_stats(&self, other: &DiffOp) -> (DiffOp, ComposeStats) {
        let acc = accumulate(&[(self, other, false)]);
        finish(acc, self.names)
    }

    /// `self ∘ other - other ∘ self`, merged in one accumulator so neither
    /// product is materialized on its own.
    pub fn commutator(&self, other: &DiffOp) -> DiffOp {
        self.commutator_with_stats(other).0
    }

    pub fn commutator_with_stats(&self, other: &DiffOp) -> (DiffOp, ComposeStats) {
        let acc = accumulate(&[(self, other, false), (other, self, true)]);
        finish(acc, self.names)
    }

    /// `self^k` by repeated composition (`k = 0` gives the identity).
    pub fn pow(&self, k: u32) -> DiffOp {
        let mut out = DiffOp::identity().with_names(self.names);
        for _ in 0..k {
            out = out.compose(self);
        }
        out
    }

    /// Ordered product `ops[0] ∘ ops[1] ∘ ...`; identity when empty.
    pub fn product(ops: &[&DiffOp]) -> DiffOp {
        let names = ops.first().map(|o| o.names).unwrap_or_default();
        let mut it = ops.iter();
        let mut out = match it.next() {
            Some(first) => (*first).clone(),
            None => return DiffOp::identity(),
        };
        for op in it {
            out = out.compose(op);
        }
        out.with_names(names)
    }

    /// Flattened `((a, b), (p, q), coefficient)` view.
    pub fn flat_terms(&self) -> impl Iterator<Item = (DerivIndex, Mono, &ParamPoly)> {
        self.terms
            .iter()
            .flat_map(|(d, poly)| poly.terms().map(move |(m, c)| (*d, m, c)))
    }
}

/// Streams every pair product of the listed compositions into one hash map.
/// Work is split over chunks of left-hand terms; the per-chunk maps are merged
/// with exact addition, so the result does not depend on scheduling.
fn accumulate(jobs: &[(&DiffOp, &DiffOp, bool)]) -> HashMap<Key, ParamPoly> {
    let flats: Vec<(Vec<FlatTerm<'_>>, Vec<FlatTerm<'_>>, bool)> = jobs
        .iter()
        .map(|(l, r, neg)| (l.flat(), r.flat(), *neg))
        .collect();
    let units: Vec<(usize, usize)> = flats
        .iter()
        .enumerate()
        .flat_map(|(j, (l, _, _))| (0..l.len()).step_by(CHUNK).map(move |s| (j, s)))
        .collect();
    units
        .par_iter()
        .map(|&(j, start)| {
            let (left, right, neg) = &flats[j];
            let mut acc: HashMap<Key, ParamPoly> = HashMap::new();
            for lt in &left[start..(start + CHUNK).min(left.len())] {
                for rt in right {
                    pair_product(lt, rt, *neg, &mut acc);
                }
            }
            acc
        })
        .reduce(HashMap::new, merge_maps)
}

fn merge_maps(
    mut a: HashMap<Key, ParamPoly>,
    mut b: HashMap<Key, ParamPoly>,
) -> HashMap<Key, ParamPoly> {
    if a.len() < b.len() {
        std::mem::swap(&mut a, &mut b);
    }
    for (k, v) in b {
        match a.get_mut(&k) {
            Some(x) => *x += &v,
            None => {
                a.insert(k, v);
            }
        }
    }
    a
}

/// `(c1 x^p1 d^a1)(c2 x^p2 d^a2)` per axis:
/// `sum_i C(a1,i) p2^(i falling) c1 c2 x^(p1+p2-i) d^(a1-i+a2)`.
fn pair_product(l: &FlatTerm<'_>, r: &FlatTerm<'_>, neg: bool, acc: &mut HashMap<Key, ParamPoly>) {
    let c = l.c * r.c;
    let imax = l.a.min(r.p);
    let jmax = l.b.min(r.q);
    for i in 0..=imax {
        let ki = binom(l.a, i) * falling(r.p, i);
        for j in 0..=jmax {
            let mut k = ki * binom(l.b, j) * falling(r.q, j);
            if neg {
                k = -k;
            }
            let key = pack(l.a - i + r.a, l.b - j + r.b, l.p + r.p - i, l.q + r.q - j);
            let factor = Rational::from_integer(BigInt::from(k));
            match acc.get_mut(&key) {
                Some(x) => x.add_scaled(&c, &factor),
                None => {
                    acc.insert(key, c.scale(&factor));
                }
            }
        }
    }
}

fn finish(acc: HashMap<Key, ParamPoly>, names: VarNames) -> (DiffOp, ComposeStats) {
    let stats = ComposeStats { peak_terms: acc.len() };
    let mut terms: BTreeMap<DerivIndex, Vec<(Mono, ParamPoly)>> = BTreeMap::new();
    for (k, c) in acc {
        if c.is_zero() {
            continue;
        }
        let (a, b, p, q) = unpack(k);
        terms.entry((a, b)).or_default().push(((p, q), c));
    }
    let terms = terms
        .into_iter()
        .map(|(d, v)| (d, Poly2::from_terms(v)))
        .collect();
    (DiffOp { terms, names }, stats)
}

impl Add for &DiffOp {
    type Output = DiffOp;
    fn add(self, o: &DiffOp) -> DiffOp {
        let mut r = self.clone();
        for (d, c) in &o.terms {
            r.add_term(*d, c);
        }
        r
    }
}

impl Sub for &DiffOp {
    type Output = DiffOp;
    fn sub(self, o: &DiffOp) -> DiffOp {
        let mut r = self.clone();
        for (d, c) in &o.terms {
            r.add_term(*d, &-c);
        }
        r
    }
}

impl Neg for &DiffOp {
    type Output = DiffOp;
    fn neg(self) -> DiffOp {
        DiffOp {
            terms: self.terms.iter().map(|(d, c)| (*d, -c)).collect(),
            names: self.names,
        }
    }
}

impl Mul for &DiffOp {
    type Output = DiffOp;
    fn mul(self, o: &DiffOp) -> DiffOp {
        self.compose(o)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffop2::expr::parse_poly2;
    use crate::exactcoeff::rat_int;

    fn p(s: &str) -> Poly2 {
        parse_poly2(s, VarNames::Uv).unwrap()
    }

    #[test]
    fn weyl_relation() {
        let du = DiffOp::partial(1, 0);
        let u = DiffOp::multiplication(p("u"));
        let lhs = du.compose(&u);
        let expected = DiffOp::from_terms([((1, 0), p("u")), ((0, 0), p("1"))]);
        assert_eq!(lhs, expected);
        assert_eq!(du.commutator(&u), DiffOp::identity());
    }

    #[test]
    fn euler_square() {
        let e = DiffOp::from_term((1, 0), p("u"));
        let expected = DiffOp::from_terms([((2, 0), p("u^2")), ((1, 0), p("u"))]);
        assert_eq!(e.compose(&e), expected);
    }

    #[test]
    fn self_commutator_vanishes() {
        let d = DiffOp::from_terms([((2, 1), p("u*v + l")), ((0, 1), p("3*v^2"))]);
        assert!(d.commutator(&d).is_zero());
    }

    #[test]
    fn linear_combination_cancels() {
        let d = DiffOp::from_terms([((1, 1), p("u^2")), ((0, 0), p("n"))]);
        let z = DiffOp::linear(&[(ParamPoly::one(), &d), (ParamPoly::int(-1), &d)]);
        assert!(z.is_zero());
        assert_eq!(z.order(), 0);
    }

    #[test]
    fn apply_matches_hand_computation() {
        // (u^2 d_u^2 + v d_v) applied to u^3 v = 6 u^3 v + u^3 v
        let d = DiffOp::from_terms([((2, 0), p("u^2")), ((0, 1), p("v"))]);
        assert_eq!(d.apply(&p("u^3*v")), p("7*u^3*v"));
        assert!(DiffOp::zero().apply(&p("u")).is_zero());
    }

    #[test]
    fn substitution() {
        let d = DiffOp::from_terms([((1, 0), p("l*u + n")), ((0, 1), p("w*v"))]);
        let s = d.substitute(None, None, Some(&rat_int(0)));
        assert_eq!(s, DiffOp::from_term((1, 0), p("l*u + n")));
        assert_eq!(d.substitute(None, None, None), d);
    }

    #[test]
    fn pow_and_product() {
        let du = DiffOp::partial(1, 0);
        assert_eq!(du.pow(3), DiffOp::partial(3, 0));
        assert_eq!(du.pow(0), DiffOp::identity());
        assert_eq!(DiffOp::product(&[]), DiffOp::identity());
    }

    #[test]
    fn pack_round_trip() {
        assert_eq!(unpack(pack(7, 0, 65535, 12)), (7, 0, 65535, 12));
    }
}
