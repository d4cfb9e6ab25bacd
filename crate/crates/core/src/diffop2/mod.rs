//! Sparse polynomials in two variables and normal-ordered differential
//! operators: composition by the Leibniz rule, commutators, application to
//! polynomials, flag checks, and the text/JSON/LaTeX forms.

mod diffop;
pub mod expr;
mod grading;
pub mod json;
pub mod latex;
mod poly2;
pub mod pushforward;
pub mod text;

pub use diffop::{ComposeStats, DerivIndex, DiffOp};
pub use grading::{check_flag_preservation, flag_monomials, GradingReport};
pub use poly2::{grading, Mono, Poly2};
pub use pushforward::{pushforward, pushforward_action};

use serde::{Deserialize, Serialize};

/// Printed names of the two slots. Purely cosmetic.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum VarNames {
    #[default]
    Uv,
    Xy,
    Ru,
}

impl VarNames {
    pub fn symbols(self) -> (&'static str, &'static str) {
        match self {
            VarNames::Uv => ("u", "v"),
            VarNames::Xy => ("x", "y"),
            VarNames::Ru => ("r", "u"),
        }
    }
}

impl DiffOp {
    /// Builds an operator from `(coefficient expression, a, b)` rows, e.g.
    /// `("-4/3*u^2*v", 0, 2)`. Rows with the same index are summed.
    pub fn from_exprs(names: VarNames, rows: &[(&str, u32, u32)]) -> crate::Result<DiffOp> {
        let mut op = DiffOp::zero().with_names(names);
        for (src, a, b) in rows {
            op.add_term((*a, *b), &expr::parse_poly2(src, names)?);
        }
        Ok(op)
    }

    pub fn to_text(&self) -> String {
        text::serialize(self)
    }

    pub fn to_latex(&self) -> String {
        latex::to_latex(self)
    }

    pub fn to_json_string(&self) -> String {
        json::to_json_string(self)
    }
}

impl std::str::FromStr for DiffOp {
    type Err = crate::Error;
    fn from_str(s: &str) -> crate::Result<DiffOp> {
        text::parse(s)
    }
}
