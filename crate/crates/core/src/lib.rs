//! Exact symbolic engine for normal-ordered linear differential operators in
//! two variables with polynomial coefficients, together with the operators of
//! the rational G2/I6 (Wolfes) and A2 (Calogero) integrable models.
//!
//! Everything is exact: coefficients live in `Q[lambda, nu, omega]` and no
//! floating point is used anywhere in the algebra.

pub mod diffop2;
pub mod envelope;
pub mod error;
pub mod exactcoeff;
pub mod linsolve;
pub mod modelbank;
pub mod repspace;
pub mod verifysuite;

pub use diffop2::{DiffOp, Poly2, VarNames};
pub use error::{Error, Result};
pub use exactcoeff::{ParamPoly, Rational};
