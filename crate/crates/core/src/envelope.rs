//! Decomposition of operators into polynomials in the `g^(s)` generators by
//! exact linear solve over ordered generator products.

use std::collections::BTreeMap;
use std::fmt::Write;

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;

use crate::diffop2::{DiffOp, Mono, VarNames};
use crate::error::Error;
use crate::exactcoeff::{PExp, ParamPoly, Rational};
use crate::linsolve;
use crate::modelbank::GeneratorId;

/// Largest basis [`decompose`] accepts unless the caller raises the limit.
pub const DEFAULT_MAX_BASIS: usize = 4000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EnvBasis {
    pub s: u32,
    pub n: Rational,
    pub max_degree: u32,
    pub exclude_raising: bool,
    /// Generators in canonical order; sequences index into this list.
    pub generators: Vec<GeneratorId>,
    /// Non-decreasing index sequences, by length then lexicographically.
    /// The empty sequence is the identity.
    pub monomials: Vec<Vec<usize>>,
}

impl EnvBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    /// `J1*R2`, `1` for the empty product.
    pub fn label(&self, seq: &[usize]) -> String {
        if seq.is_empty() {
            return "1".into();
        }
        seq.iter()
            .map(|&i| self.generators[i].to_string())
            .collect::<Vec<_>>()
            .join("*")
    }

    /// Composition of the generators of `seq`, leftmost applied last.
    pub fn operator(&self, seq: &[usize], names: VarNames) -> DiffOp {
        let ops: Vec<DiffOp> = seq.iter().map(|&i| crate::modelbank::make_generator(&self.generators[i])).collect();
        let refs: Vec<&DiffOp> = ops.iter().collect();
        DiffOp::product(&refs).with_names(names)
    }
}

/// All non-decreasing products of at most `max_degree` generators of
/// `g^(s)` at mark `n`, with the identity first.
pub fn enumerate_env_basis(s: u32, n: Rational, max_degree: u32, exclude_raising: bool) -> Result<EnvBasis, Error> {
    if s == 0 {
        return Err(Error::InvalidArgument("s must be positive".into()));
    }
    let generators: Vec<GeneratorId> = GeneratorId::all(s, &n)
        .into_iter()
        .filter(|g| !(exclude_raising && g.is_raising()))
        .collect();
    let mut monomials = vec![vec![]];
    let mut layer: Vec<Vec<usize>> = vec![vec![]];
    for _ in 0..max_degree {
        let mut next = Vec::new();
        for seq in &layer {
            let start = seq.last().copied().unwrap_or(0);
            for g in start..generators.len() {
                let mut longer = seq.clone();
                longer.push(g);
                next.push(longer);
            }
        }
        monomials.extend(next.iter().cloned());
        layer = next;
    }
    Ok(EnvBasis { s, n, max_degree, exclude_raising, generators, monomials })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Decomposition {
    pub target_name: String,
    pub target: DiffOp,
    pub basis: EnvBasis,
    /// Nonzero coefficients in basis order.
    pub coefficients: Vec<(Vec<usize>, ParamPoly)>,
    pub residual: DiffOp,
}

impl Decomposition {
    pub fn is_exact(&self) -> bool {
        self.residual.is_zero()
    }

    /// `sum coeff * product`.
    pub fn recompose(&self) -> DiffOp {
        let names = self.target.names();
        let ops: Vec<(ParamPoly, DiffOp)> = self
            .coefficients
            .iter()
            .map(|(seq, c)| (c.clone(), self.basis.operator(seq, names)))
            .collect();
        let parts: Vec<(ParamPoly, &DiffOp)> = ops.iter().map(|(c, d)| (c.clone(), d)).collect();
        DiffOp::linear(&parts).with_names(names)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(
            out,
            "target {} in g^({}) products up to degree {}{}",
            self.target_name,
            self.basis.s,
            self.basis.max_degree,
            if self.basis.exclude_raising { ", raising generators excluded" } else { "" }
        )
        .unwrap();
        for (seq, c) in &self.coefficients {
            writeln!(out, "  ({c}) {}", self.basis.label(seq)).unwrap();
        }
        writeln!(out, "residual: {}", if self.is_exact() { "0".to_string() } else { self.residual.to_text() }).unwrap();
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        #[derive(Serialize)]
        struct Term {
            product: Vec<String>,
            coeff: String,
        }
        let terms: Vec<Term> = self
            .coefficients
            .iter()
            .map(|(seq, c)| Term {
                product: seq.iter().map(|&i| self.basis.generators[i].to_string()).collect(),
                coeff: c.to_string(),
            })
            .collect();
        serde_json::json!({
            "target": self.target_name,
            "s": self.basis.s,
            "max_degree": self.basis.max_degree,
            "exclude_raising": self.basis.exclude_raising,
            "basis_size": self.basis.len(),
            "exact": self.is_exact(),
            "terms": terms,
            "residual_terms": self.residual.term_count(),
        })
    }
}

/// Solves `target = sum c_k * basis_k` with `c_k` polynomial in the
/// parameters. Each parameter monomial of the target is solved separately
/// over the rationals. Fails with [`Error::TooLarge`] above `max_basis`.
pub fn decompose(target_name: &str, target: &DiffOp, basis: &EnvBasis, max_basis: usize) -> Result<Decomposition, Error> {
    if basis.len() > max_basis {
        return Err(Error::TooLarge(format!(
            "basis of {} products exceeds the limit of {max_basis}",
            basis.len()
        )));
    }
    let names = target.names();
    let ops: Vec<DiffOp> = basis.monomials.par_iter().map(|seq| basis.operator(seq, names)).collect();

    let mut keys: BTreeMap<((u32, u32), Mono), usize> = BTreeMap::new();
    for op in ops.iter().chain(std::iter::once(target)) {
        for (d, m, _) in op.flat_terms() {
            let next = keys.len();
            keys.entry((d, m)).or_insert(next);
        }
    }
    let nrows = keys.len();
    let mut rows = vec![vec![Rational::zero(); ops.len()]; nrows];
    for (j, op) in ops.iter().enumerate() {
        for (d, m, c) in op.flat_terms() {
            rows[keys[&(d, m)]][j] = c.as_constant().expect("generators at a rational mark are parameter-free");
        }
    }

    let mut by_param: BTreeMap<PExp, Vec<Rational>> = BTreeMap::new();
    for (d, m, c) in target.flat_terms() {
        for (e, r) in c.split() {
            by_param.entry(e).or_insert_with(|| vec![Rational::zero(); nrows])[keys[&(d, m)]] = r.clone();
        }
    }

    let mut coeffs = vec![ParamPoly::zero(); ops.len()];
    for (e, rhs) in &by_param {
        let sol = linsolve::solve(&rows, rhs, ops.len());
        for (k, x) in sol.x.iter().enumerate() {
            if !x.is_zero() {
                coeffs[k] += &ParamPoly::monomial(*e, x.clone());
            }
        }
    }
    let coefficients: Vec<(Vec<usize>, ParamPoly)> = basis
        .monomials
        .iter()
        .cloned()
        .zip(coeffs)
        .filter(|(_, c)| !c.is_zero())
        .collect();
    let mut dec = Decomposition {
        target_name: target_name.to_string(),
        target: target.clone(),
        basis: basis.clone(),
        coefficients,
        residual: DiffOp::zero(),
    };
    dec.residual = (target - &dec.recompose()).with_names(names);
    Ok(dec)
}

/// Recomposes and compares with the target.
pub fn verify_decomposition(d: &Decomposition) -> bool {
    d.recompose() == d.target
}
