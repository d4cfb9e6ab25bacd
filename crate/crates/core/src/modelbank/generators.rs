//! Generators of the hidden algebra `g^(s)` acting on polynomials in
//! `(r, u)`, identified with `(slot1, slot2)`. The mark `n` selects the
//! invariant space `P^(s)_n`.

use std::fmt;

use crate::diffop2::{DiffOp, Poly2, VarNames};
use crate::error::Error;
use crate::exactcoeff::{rat_int, ParamPoly, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    /// Euler-Cartan generator `r d_r + s u d_u - n`.
    J0Tilde,
    J1,
    J2,
    J3,
    /// `r * J0Tilde`, the positive-root (raising) generator.
    J4,
    /// `r^i d_u`, `0 <= i <= s`.
    R(u32),
    /// `u d_r^(s-i) J0(J0+1)...(J0+i-1)`, `0 <= i <= s`.
    T(u32),
}

impl Family {
    pub fn tag(self) -> &'static str {
        match self {
            Family::J0Tilde => "J0",
            Family::J1 => "J1",
            Family::J2 => "J2",
            Family::J3 => "J3",
            Family::J4 => "J4",
            Family::R(_) => "R",
            Family::T(_) => "T",
        }
    }

    pub fn index(self) -> u32 {
        match self {
            Family::R(i) | Family::T(i) => i,
            _ => 0,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GeneratorId {
    pub family: Family,
    pub s: u32,
    pub n: Rational,
}

impl GeneratorId {
    pub fn new(family: Family, s: u32, n: Rational) -> Result<Self, Error> {
        if s == 0 {
            return Err(Error::BadGenerator("s must be at least 1".into()));
        }
        if let Family::R(i) | Family::T(i) = family {
            if i > s {
                return Err(Error::BadGenerator(format!("index {i} exceeds s = {s}")));
            }
        }
        Ok(GeneratorId { family, s, n })
    }

    /// Grading-raising generators excluded from decompositions: `J4` always,
    /// and for `s = 1` also `T_1 = u J0`, the second positive root of `gl(3)`.
    pub fn is_raising(&self) -> bool {
        match self.family {
            Family::J4 => true,
            Family::T(i) => self.s == 1 && i == 1,
            _ => false,
        }
    }

    /// All generators of `g^(s)` at mark `n` in the canonical order
    /// `J0, J1, J2, J3, J4, R_0..R_s, T_0..T_s`.
    pub fn all(s: u32, n: &Rational) -> Vec<GeneratorId> {
        let mut fams = vec![Family::J0Tilde, Family::J1, Family::J2, Family::J3, Family::J4];
        fams.extend((0..=s).map(Family::R));
        fams.extend((0..=s).map(Family::T));
        fams.into_iter()
            .map(|f| GeneratorId { family: f, s, n: n.clone() })
            .collect()
    }
}

impl fmt::Display for GeneratorId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::R(i) | Family::T(i) => write!(f, "{}{}", self.family.tag(), i),
            _ => f.write_str(self.family.tag()),
        }
    }
}

fn mono(p: u32, q: u32, c: Rational) -> Poly2 {
    Poly2::monomial(p, q, ParamPoly::constant(c))
}

/// `r d_r + s u d_u - n`.
pub fn euler_cartan(s: u32, n: &Rational) -> DiffOp {
    DiffOp::from_terms([
        ((1, 0), mono(1, 0, rat_int(1))),
        ((0, 1), mono(0, 1, rat_int(s as i64))),
        ((0, 0), mono(0, 0, -n.clone())),
    ])
    .with_names(VarNames::Ru)
}

pub fn make_generator(id: &GeneratorId) -> DiffOp {
    let s = id.s;
    let n = &id.n;
    let third = n / rat_int(3);
    let op = match id.family {
        Family::J0Tilde => euler_cartan(s, n),
        Family::J1 => DiffOp::partial(1, 0),
        Family::J2 => DiffOp::from_terms([
            ((1, 0), mono(1, 0, rat_int(1))),
            ((0, 0), mono(0, 0, -third)),
        ]),
        Family::J3 => DiffOp::from_terms([
            ((0, 1), mono(0, 1, rat_int(s as i64))),
            ((0, 0), mono(0, 0, -third)),
        ]),
        Family::J4 => DiffOp::multiplication(mono(1, 0, rat_int(1))).compose(&euler_cartan(s, n)),
        Family::R(i) => DiffOp::from_term((0, 1), mono(i, 0, rat_int(1))),
        Family::T(i) => {
            let head = DiffOp::from_term((s - i, 0), mono(0, 1, rat_int(1)));
            let j0 = euler_cartan(s, n);
            let mut out = head;
            for j in 0..i {
                let shifted = &j0 + &DiffOp::multiplication(mono(0, 0, rat_int(j as i64)));
                out = out.compose(&shifted);
            }
            out
        }
    };
    op.with_names(VarNames::Ru)
}

/// `T_s` in the descending form `u J0(n) J0(n-1) ... J0(n-s+1)`.
pub fn t_top_descending(s: u32, n: &Rational) -> DiffOp {
    let mut out = DiffOp::multiplication(mono(0, 1, rat_int(1)));
    for j in 0..s {
        out = out.compose(&euler_cartan(s, &(n - rat_int(j as i64))));
    }
    out.with_names(VarNames::Ru)
}

/// Parses `<family>.<s>[.<i>]`, e.g. `J1.3`, `R.3.2`, `T.3.0`.
pub fn parse_generator(spec: &str, n: Rational) -> Result<GeneratorId, Error> {
    let bad = || Error::BadGenerator(spec.to_string());
    let parts: Vec<&str> = spec.split('.').collect();
    let (fam, s, i) = match parts.as_slice() {
        [f, s] => (*f, *s, "0"),
        [f, s, i] => (*f, *s, *i),
        _ => return Err(bad()),
    };
    let s: u32 = s.parse().map_err(|_| bad())?;
    let i: u32 = i.parse().map_err(|_| bad())?;
    let family = match fam {
        "J0" | "J0tilde" => Family::J0Tilde,
        "J1" => Family::J1,
        "J2" => Family::J2,
        "J3" => Family::J3,
        "J4" => Family::J4,
        "R" => Family::R(i),
        "T" => Family::T(i),
        _ => return Err(bad()),
    };
    if !matches!(family, Family::R(_) | Family::T(_)) && i != 0 {
        return Err(bad());
    }
    GeneratorId::new(family, s, n)
}
