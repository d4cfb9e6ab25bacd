//! G2/I6 rational model in `(u, v) = (x, y^2)`.

use crate::diffop2::{DiffOp, VarNames};
use crate::exactcoeff::{Param, ParamPoly, Rational};

fn build(rows: &[(&str, u32, u32)]) -> DiffOp {
    DiffOp::from_exprs(VarNames::Uv, rows).expect("model transcription parses")
}

/// Algebraic Hamiltonian `h_a` with `lambda, nu, omega` symbolic.
pub fn make_h_g2() -> DiffOp {
    build(&[
        ("u", 2, 0),
        ("6*v", 1, 1),
        ("-4/3*u^2*v", 0, 2),
        ("1 + 3*n", 1, 0),
        ("-2/3*u^2", 0, 1),
        // lambda part
        ("6*l", 1, 0),
        ("-4*l*u^2", 0, 1),
        // oscillator part
        ("-4*w*u", 1, 0),
        ("-12*w*v", 0, 1),
    ])
}

/// `h_a` at `omega = 0`, the form used in the algebra of integrals.
pub fn make_h_g2_static() -> DiffOp {
    make_h_g2().substitute(None, None, Some(&Rational::from_integer(0.into())))
}

/// Second-order integral; independent of `omega`.
pub fn make_x_g2() -> DiffOp {
    build(&[
        ("4/3*v*(4*u^3 + 27*v)", 0, 2),
        ("4/3*(2*(6*l + 1)*u^3 + 27*(2*l + n + 1)*v)", 0, 1),
    ])
}

/// The six lambda-graded blocks of the sixth-order integral at `omega = 0`:
/// index 0 is the squared A2 cubic integral in `(u, v)`, index `p` is the
/// coefficient operator of `lambda^p`.
pub fn k_g2_blocks() -> [DiffOp; 6] {
    [
        build(super::appendix::K_A2_SQUARED),
        build(super::appendix::K1),
        build(super::appendix::K2),
        build(super::appendix::K3),
        build(super::appendix::K4),
        build(super::appendix::K5),
    ]
}

/// Sixth-order integral `sum_p lambda^p k^(p)` at `omega = 0`.
pub fn make_k_g2() -> DiffOp {
    let blocks = k_g2_blocks();
    let lambda = ParamPoly::param(Param::Lambda);
    let mut weight = ParamPoly::one();
    let mut parts = Vec::with_capacity(6);
    for b in &blocks {
        parts.push((weight.clone(), b));
        weight = &weight * &lambda;
    }
    DiffOp::linear(&parts).with_names(VarNames::Uv)
}
