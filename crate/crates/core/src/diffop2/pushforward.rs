//! Transport of an `(x, y)` operator that preserves even-in-`y` polynomials
//! to an operator in `(u, v) = (x, y^2)`.

use num_bigint::BigInt;

use super::poly2::binom;
use super::{DiffOp, Poly2, VarNames};
use crate::error::Error;
use crate::exactcoeff::{rat_int, ParamPoly, Rational};

/// `D(x^p y^(2q))` rewritten in `(u, v)`.
pub fn pushforward_action(d: &DiffOp, p: u32, q: u32) -> Result<Poly2, Error> {
    let image = d.apply(&Poly2::monomial(p, 2 * q, ParamPoly::one()));
    image.even_in_slot2_to_half().ok_or_else(|| {
        Error::InvalidArgument(format!("image of x^{p} y^{} is not even in y", 2 * q))
    })
}

fn factorial(k: u32) -> Rational {
    Rational::from_integer((1..=k).map(BigInt::from).product())
}

fn neg_power(slot: usize, k: u32) -> Poly2 {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let (p, q) = if slot == 0 { (k, 0) } else { (0, k) };
    Poly2::monomial(p, q, ParamPoly::int(sign))
}

/// The `(u, v)` operator of order at most `max_order` agreeing with `d` on
/// even-in-`y` polynomials. Coefficients come from
/// `c_ab = 1/(a! b!) sum_ij C(a,i) C(b,j) (-u)^(a-i) (-v)^(b-j) D(u^i v^j)`.
pub fn pushforward(d: &DiffOp, max_order: u32) -> Result<DiffOp, Error> {
    let mut out = DiffOp::zero().with_names(VarNames::Uv);
    for a in 0..=max_order {
        for b in 0..=(max_order - a) {
            let mut c = Poly2::zero();
            for i in 0..=a {
                for j in 0..=b {
                    let w = Rational::from_integer(BigInt::from(binom(a, i) * binom(b, j)));
                    let term = &(&neg_power(0, a - i) * &neg_power(1, b - j)) * &pushforward_action(d, i, j)?;
                    c = &c + &term.scale_rational(&w);
                }
            }
            let norm = rat_int(1) / (factorial(a) * factorial(b));
            out.add_term((a, b), &c.scale_rational(&norm));
        }
    }
    Ok(out)
}
