//! Exact coefficients: arbitrary-precision rationals and the parameter ring
//! `Q[lambda, nu, omega]` in which every operator coefficient lives.

mod parampoly;
mod rational;

pub use parampoly::{PExp, ParamPoly, Param};
pub use rational::{parse_rational, rat, rat_int, Rational};
