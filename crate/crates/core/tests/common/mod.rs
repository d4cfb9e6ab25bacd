#![allow(dead_code)]

use proptest::prelude::*;

use wolfes_core::diffop2::{DiffOp, Poly2, VarNames};
use wolfes_core::exactcoeff::{rat, PExp, ParamPoly, Rational};
use wolfes_core::verifysuite::ShiftSample;

pub fn small_rational() -> impl Strategy<Value = Rational> {
    (-9i64..=9, 1i64..=5).prop_map(|(n, d)| rat(n, d))
}

pub fn param_poly() -> impl Strategy<Value = ParamPoly> {
    prop::collection::vec(((0u16..=1, 0u16..=1, 0u16..=1), small_rational()), 0..=2).prop_map(|ts| {
        ParamPoly::from_terms(ts.into_iter().map(|((l, n, w), c)| (PExp { l, n, w }, c)).collect())
    })
}

pub fn poly2() -> impl Strategy<Value = Poly2> {
    prop::collection::vec(((0u32..=3, 0u32..=2), param_poly()), 0..=3)
        .prop_map(Poly2::from_terms)
}

pub fn diffop() -> impl Strategy<Value = DiffOp> {
    (prop::collection::vec(((0u32..=2, 0u32..=2), poly2()), 0..=3), names())
        .prop_map(|(ts, n)| DiffOp::from_terms(ts).with_names(n))
}

pub fn names() -> impl Strategy<Value = VarNames> {
    prop_oneof![Just(VarNames::Uv), Just(VarNames::Xy), Just(VarNames::Ru)]
}

pub fn shift_sample() -> impl Strategy<Value = ShiftSample> {
    let r = small_rational;
    (r(), [r(), r(), r(), r()], [r(), r(), r()], [r(), r()])
        .prop_map(|(a, b, c, d)| ShiftSample { a, b, c, d })
}

/// `[a,[b,c]] + [b,[c,a]] + [c,[a,b]] = 0`.
pub fn jacobi_holds(a: &DiffOp, b: &DiffOp, c: &DiffOp) -> bool {
    let t1 = a.commutator(&b.commutator(c));
    let t2 = b.commutator(&c.commutator(a));
    let t3 = c.commutator(&a.commutator(b));
    (&(&t1 + &t2) + &t3).is_zero()
}

pub fn compose_matches_apply(a: &DiffOp, b: &DiffOp, f: &Poly2) -> bool {
    a.compose(b).apply(f) == a.apply(&b.apply(f))
}

pub fn round_trips(d: &DiffOp) -> bool {
    let text_ok = d.to_text().parse::<DiffOp>().map(|e| e == *d).unwrap_or(false);
    let json_ok = wolfes_core::diffop2::json::from_json_str(&d.to_json_string()).map(|e| e == *d).unwrap_or(false);
    text_ok && json_ok
}
