//! LaTeX rendering with coefficients to the left of the derivatives, one
//! summand per derivative index in canonical order.

use num_traits::{One, Signed};

use super::poly2::Poly2;
use super::text::{sorted_op_terms, sorted_poly_terms};
use super::{DiffOp, VarNames};
use crate::exactcoeff::{PExp, ParamPoly, Rational};

fn rational_body(r: &Rational) -> String {
    let r = r.abs();
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("\\frac{{{}}}{{{}}}", r.numer(), r.denom())
    }
}

fn power(sym: &str, k: u32) -> String {
    match k {
        0 => String::new(),
        1 => sym.to_string(),
        _ => format!("{sym}^{{{k}}}"),
    }
}

fn param_monomial(e: PExp) -> String {
    [("\\lambda", e.l), ("\\nu", e.n), ("\\omega", e.w)]
        .iter()
        .map(|(s, k)| power(s, *k as u32))
        .filter(|s| !s.is_empty())
        .collect::<Vec<_>>()
        .join(" ")
}

/// Joins a scalar with a symbol string, dropping a unit scalar.
fn with_scalar(r: &Rational, sym: &str) -> String {
    let body = rational_body(r);
    match (sym.is_empty(), r.abs().is_one()) {
        (true, _) => body,
        (false, true) => sym.to_string(),
        (false, false) => format!("{body} {sym}"),
    }
}

fn join_signed(parts: Vec<(bool, String)>) -> String {
    let mut out = String::new();
    for (i, (neg, body)) in parts.into_iter().enumerate() {
        match (i, neg) {
            (0, true) => out.push('-'),
            (0, false) => {}
            (_, true) => out.push_str(" - "),
            (_, false) => out.push_str(" + "),
        }
        out.push_str(&body);
    }
    out
}

pub fn parampoly_latex(c: &ParamPoly) -> String {
    if c.is_zero() {
        return "0".into();
    }
    join_signed(
        c.terms()
            .iter()
            .rev()
            .map(|(e, r)| (r.is_negative(), with_scalar(r, &param_monomial(*e))))
            .collect(),
    )
}

fn poly_parts(p: &Poly2, names: VarNames) -> Vec<(bool, String)> {
    let (s1, s2) = names.symbols();
    sorted_poly_terms(p)
        .into_iter()
        .map(|((pe, qe), c)| {
            let mono = [power(s1, pe), power(s2, qe)]
                .into_iter()
                .filter(|s| !s.is_empty())
                .collect::<Vec<_>>()
                .join(" ");
            match c.terms() {
                [(e, r)] => {
                    let sym = [param_monomial(*e), mono]
                        .into_iter()
                        .filter(|s| !s.is_empty())
                        .collect::<Vec<_>>()
                        .join(" ");
                    (r.is_negative(), with_scalar(r, &sym))
                }
                _ if mono.is_empty() => (false, format!("\\left({}\\right)", parampoly_latex(c))),
                _ => (false, format!("\\left({}\\right) {mono}", parampoly_latex(c))),
            }
        })
        .collect()
}

pub fn poly2_latex(p: &Poly2, names: VarNames) -> String {
    if p.is_zero() {
        return "0".into();
    }
    join_signed(poly_parts(p, names))
}

fn derivative(a: u32, b: u32, names: VarNames) -> String {
    let (s1, s2) = names.symbols();
    let denom = [(s1, a), (s2, b)]
        .iter()
        .filter(|(_, k)| *k > 0)
        .map(|(s, k)| format!("\\partial {}", power(s, *k)))
        .collect::<Vec<_>>()
        .join(" ");
    match a + b {
        1 => format!("\\frac{{\\partial}}{{{denom}}}"),
        k => format!("\\frac{{\\partial^{{{k}}}}}{{{denom}}}"),
    }
}

pub fn to_latex(d: &DiffOp) -> String {
    if d.is_zero() {
        return "0".into();
    }
    let names = d.names();
    let mut parts = Vec::new();
    for ((a, b), c) in sorted_op_terms(d) {
        let mut cp = poly_parts(c, names);
        let (neg, coeff) = if cp.len() == 1 {
            cp.pop().unwrap()
        } else {
            (false, format!("\\left({}\\right)", join_signed(cp)))
        };
        let body = match ((a, b), coeff.as_str()) {
            ((0, 0), _) => coeff,
            (_, "1") => derivative(a, b, names),
            _ => format!("{coeff} {}", derivative(a, b, names)),
        };
        parts.push((neg, body));
    }
    join_signed(parts)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffop2::expr::parse_poly2;

    #[test]
    fn renders_coefficients_left_of_derivatives() {
        let names = VarNames::Uv;
        let d = DiffOp::from_terms([
            ((0, 2), parse_poly2("-4/3*u^2*v", names).unwrap()),
            ((1, 0), parse_poly2("1 + 3*n + 6*l", names).unwrap()),
            ((2, 0), parse_poly2("u", names).unwrap()),
        ])
        .with_names(names);
        assert_eq!(
            to_latex(&d),
            "u \\frac{\\partial^{2}}{\\partial u^{2}} - \\frac{4}{3} u^{2} v \\frac{\\partial^{2}}{\\partial v^{2}} + \\left(6 \\lambda + 3 \\nu + 1\\right) \\frac{\\partial}{\\partial u}"
        );
    }

    #[test]
    fn zero_and_identity() {
        assert_eq!(to_latex(&DiffOp::zero()), "0");
        assert_eq!(to_latex(&DiffOp::identity()), "1");
        assert_eq!(parampoly_latex(&"-1/2*l^2*w".parse().unwrap()), "-\\frac{1}{2} \\lambda^{2} \\omega");
    }
}
