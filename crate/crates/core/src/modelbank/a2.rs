//! A2 rational (3-body Calogero) model in `(x, y)`.

use crate::diffop2::{DiffOp, VarNames};

fn build(rows: &[(&str, u32, u32)]) -> DiffOp {
    DiffOp::from_exprs(VarNames::Xy, rows).expect("model transcription parses")
}

pub fn make_h_a2() -> DiffOp {
    build(&[
        ("x", 2, 0),
        ("3*y", 1, 1),
        ("-1/3*x^2", 0, 2),
        ("1 + 3*n", 1, 0),
    ])
}

/// Second-order integral.
pub fn make_x_a2() -> DiffOp {
    build(&[
        ("1/3*(4*x^3 + 27*y^2)", 0, 2),
        ("9*y*(1 + 2*n)", 0, 1),
    ])
}

/// Third-order integral.
pub fn make_k_a2() -> DiffOp {
    build(&[
        ("y", 3, 0),
        ("-2/3*x^2", 2, 1),
        ("-x*y", 1, 2),
        ("-(y^2 + 2/27*x^3)", 0, 3),
        ("-2/3*x*(2 + 3*n)", 1, 1),
        ("-y*(2 + 3*n)", 0, 2),
        ("-2/9*(2 + 3*n)*(1 + 3*n)", 0, 1),
    ])
}
