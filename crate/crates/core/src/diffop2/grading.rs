use serde::Serialize;

use super::poly2::{grading, Mono, Poly2};
use super::DiffOp;
use crate::error::Error;
use crate::exactcoeff::ParamPoly;

/// Outcome of a flag-preservation scan over `P^(s)_n`, `n <= n_max`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GradingReport {
    pub s: u32,
    pub n_max: u32,
    pub preserved: bool,
    /// `(input monomial, offending output monomial)` when not preserved.
    pub witness: Option<(Mono, Mono)>,
}

/// Monomials `(p, q)` with `p + s q <= n`, grading-major then `q` ascending.
pub fn flag_monomials(s: u32, n: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    for g in 0..=n {
        for q in 0..=g / s {
            out.push((g - s * q, q));
        }
    }
    out
}

/// Checks `D: P^(s)_n -> P^(s)_n` for every `n <= n_max`. Since the flag is
/// nested it suffices that each monomial of weight `g` maps into `P^(s)_g`.
/// With symbolic parameters a coefficient counts as nonzero unless it is the
/// zero polynomial.
pub fn check_flag_preservation(d: &DiffOp, s: u32, n_max: u32) -> Result<GradingReport, Error> {
    if s < 1 {
        return Err(Error::InvalidArgument(format!("grading weight s must be positive, got {s}")));
    }
    for m in flag_monomials(s, n_max) {
        let g = grading(m, s);
        let image = d.apply(&Poly2::monomial(m.0, m.1, ParamPoly::one()));
        // report the highest offending monomial for a stable witness
        let worst = image
            .terms()
            .filter(|(out, _)| grading(*out, s) > g)
            .max_by_key(|(out, _)| (grading(*out, s), out.1));
        if let Some((out, _)) = worst {
            return Ok(GradingReport { s, n_max, preserved: false, witness: Some((m, out)) });
        }
    }
    Ok(GradingReport { s, n_max, preserved: true, witness: None })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::diffop2::expr::parse_poly2;
    use crate::diffop2::VarNames;

    #[test]
    fn flag_monomial_order() {
        assert_eq!(flag_monomials(3, 3), vec![(0, 0), (1, 0), (2, 0), (3, 0), (0, 1)]);
        assert_eq!(flag_monomials(2, 4).len(), 9);
        assert_eq!(flag_monomials(3, 0), vec![(0, 0)]);
    }

    #[test]
    fn raising_operator_has_witness() {
        // u^3 d_v raises the 2-grading of v from 2 to 3
        let d = DiffOp::from_term((0, 1), parse_poly2("u^3", VarNames::Uv).unwrap());
        let r = check_flag_preservation(&d, 2, 4).unwrap();
        assert!(!r.preserved);
        assert_eq!(r.witness, Some(((0, 1), (3, 0))));
        assert!(check_flag_preservation(&d, 3, 6).unwrap().preserved);
    }
}
