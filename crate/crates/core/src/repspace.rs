//! Finite-dimensional representations on `P^(s)_n`: monomial bases, exact
//! operator matrices, triangular spectra and eigenpolynomials.
//!
//! Matrix convention: column `j` holds the coordinates of the image of basis
//! monomial `j`. An operator that never raises the basis position (grading
//! first, then `q`) therefore has all entries on or above the diagonal, and
//! its diagonal is its spectrum.

use std::collections::HashMap;
use std::fmt::Write;

use num_traits::Zero;
use serde::Serialize;

use crate::diffop2::{flag_monomials, grading, DiffOp, Mono, Poly2};
use crate::error::Error;
use crate::exactcoeff::{ParamPoly, Rational};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FlagBasis {
    pub s: u32,
    pub n: u32,
    /// Sorted by grading `p + s q`, then by `q`.
    pub monomials: Vec<Mono>,
}

impl FlagBasis {
    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn index_of(&self, m: Mono) -> Option<usize> {
        self.monomials.iter().position(|&x| x == m)
    }
}

pub fn basis(s: u32, n: u32) -> Result<FlagBasis, Error> {
    if s < 1 {
        return Err(Error::InvalidArgument("s must be positive".into()));
    }
    Ok(FlagBasis { s, n, monomials: flag_monomials(s, n) })
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OpMatrix {
    pub basis: FlagBasis,
    /// `entries[row][col]`.
    pub entries: Vec<Vec<Rational>>,
}

/// Exact matrix of `d` on `fb` after substituting all three parameters.
pub fn matrix(
    d: &DiffOp,
    fb: &FlagBasis,
    lambda: &Rational,
    nu: &Rational,
    omega: &Rational,
) -> Result<OpMatrix, Error> {
    let op = d.substitute(Some(lambda), Some(nu), Some(omega));
    let index: HashMap<Mono, usize> = fb.monomials.iter().enumerate().map(|(i, &m)| (m, i)).collect();
    let dim = fb.len();
    let mut entries = vec![vec![Rational::zero(); dim]; dim];
    for (j, &m) in fb.monomials.iter().enumerate() {
        let image = op.apply(&Poly2::monomial(m.0, m.1, ParamPoly::one()));
        for (out, c) in image.terms() {
            let Some(&i) = index.get(&out) else {
                return Err(Error::NotInvariant { p: m.0, q: m.1, out_p: out.0, out_q: out.1 });
            };
            entries[i][j] = c.as_constant().expect("all parameters substituted");
        }
    }
    Ok(OpMatrix { basis: fb.clone(), entries })
}

impl OpMatrix {
    pub fn dim(&self) -> usize {
        self.entries.len()
    }

    pub fn diagonal(&self) -> Vec<Rational> {
        (0..self.dim()).map(|i| self.entries[i][i].clone()).collect()
    }

    /// First entry below the diagonal that is nonzero, scanning columns in
    /// basis order.
    pub fn first_subdiagonal(&self) -> Option<(usize, usize)> {
        (0..self.dim()).find_map(|j| {
            ((j + 1)..self.dim())
                .find(|&i| !self.entries[i][j].is_zero())
                .map(|i| (i, j))
        })
    }

    /// Whether no basis monomial is sent to a higher grading.
    pub fn is_grading_nonraising(&self) -> bool {
        let s = self.basis.s;
        (0..self.dim()).all(|j| {
            (0..self.dim()).all(|i| {
                self.entries[i][j].is_zero()
                    || grading(self.basis.monomials[i], s) <= grading(self.basis.monomials[j], s)
            })
        })
    }

    pub fn commutes_with(&self, other: &OpMatrix) -> bool {
        let ab = mat_mul(&self.entries, &other.entries);
        let ba = mat_mul(&other.entries, &self.entries);
        ab == ba
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let cells: Vec<String> = row.iter().map(|r| r.to_string()).collect();
            writeln!(out, "{}", cells.join(",")).unwrap();
        }
        out
    }

    pub fn to_json(&self) -> serde_json::Value {
        serde_json::json!({
            "s": self.basis.s,
            "n": self.basis.n,
            "basis": self.basis.monomials.iter().map(|(p, q)| [p, q]).collect::<Vec<_>>(),
            "entries": self.entries.iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect::<Vec<_>>())
                .collect::<Vec<_>>(),
        })
    }
}

fn mat_mul(a: &[Vec<Rational>], b: &[Vec<Rational>]) -> Vec<Vec<Rational>> {
    let n = a.len();
    let mut out = vec![vec![Rational::zero(); n]; n];
    for i in 0..n {
        for k in 0..n {
            if a[i][k].is_zero() {
                continue;
            }
            for j in 0..n {
                if !b[k][j].is_zero() {
                    out[i][j] += &a[i][k] * &b[k][j];
                }
            }
        }
    }
    out
}

/// Diagonal of a triangular matrix, i.e. its eigenvalues with multiplicity,
/// in basis order.
pub fn spectrum(m: &OpMatrix) -> Result<Vec<Rational>, Error> {
    if let Some((row, col)) = m.first_subdiagonal() {
        return Err(Error::NotTriangular { row, col });
    }
    Ok(m.diagonal())
}

/// Sorted multiset form of a spectrum, `(value, multiplicity)`.
pub fn multiset(values: &[Rational]) -> Vec<(Rational, usize)> {
    let mut v = values.to_vec();
    v.sort();
    let mut out: Vec<(Rational, usize)> = Vec::new();
    for x in v {
        match out.last_mut() {
            Some((y, k)) if *y == x => *k += 1,
            _ => out.push((x, 1)),
        }
    }
    out
}

/// One eigenpolynomial per basis monomial, by back-substitution: the
/// polynomial for column `j` has leading monomial `j` with coefficient 1.
/// Fails when a repeated diagonal value meets a nonzero coupling.
pub fn eigenpolynomials(m: &OpMatrix) -> Result<Vec<(Rational, Poly2)>, Error> {
    spectrum(m)?;
    let a = &m.entries;
    let mut out = Vec::with_capacity(m.dim());
    for j in 0..m.dim() {
        let d = &a[j][j];
        let mut x = vec![Rational::zero(); j + 1];
        x[j] = Rational::from_integer(1.into());
        for i in (0..j).rev() {
            let mut acc = Rational::zero();
            for k in (i + 1)..=j {
                if !a[i][k].is_zero() && !x[k].is_zero() {
                    acc += &a[i][k] * &x[k];
                }
            }
            let gap = d - &a[i][i];
            if gap.is_zero() {
                if !acc.is_zero() {
                    return Err(Error::DegenerateChain { index: j });
                }
            } else {
                x[i] = acc / gap;
            }
        }
        let poly = Poly2::from_terms(
            x.into_iter()
                .enumerate()
                .map(|(i, c)| (m.basis.monomials[i], ParamPoly::constant(c))),
        );
        out.push((d.clone(), poly));
    }
    Ok(out)
}

/// Number of `(n1, n2) >= 0` with `n1 + 3 n2 = m`, for `0 <= m <= n`.
pub fn degeneracy(m: u32, n: u32) -> Result<u32, Error> {
    if m > n {
        return Err(Error::InvalidArgument(format!("level {m} exceeds cutoff {n}")));
    }
    Ok(m / 3 + 1)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcoeff::{rat, rat_int};
    use crate::modelbank::{make_h_g2, make_x_g2};

    #[test]
    fn bases() {
        assert_eq!(basis(3, 0).unwrap().monomials, vec![(0, 0)]);
        assert_eq!(
            basis(3, 3).unwrap().monomials,
            vec![(0, 0), (1, 0), (2, 0), (3, 0), (0, 1)]
        );
        assert_eq!(basis(2, 4).unwrap().len(), 9);
    }

    #[test]
    fn small_hamiltonian_matrix() {
        let m = matrix(&make_h_g2(), &basis(3, 1).unwrap(), &rat(1, 3), &rat_int(1), &rat_int(1)).unwrap();
        assert_eq!(m.diagonal(), vec![rat_int(0), rat_int(-4)]);
        // h(u) = (1 + 3 nu + 6 lambda) - 4 omega u
        assert_eq!(m.entries[0][1], rat_int(6));
    }

    #[test]
    fn not_invariant_witness() {
        let err = matrix(&make_x_g2(), &basis(2, 2).unwrap(), &rat_int(0), &rat_int(0), &rat_int(0));
        assert!(matches!(err, Err(Error::NotInvariant { p: 0, q: 1, out_p: 3, out_q: 0 })));
    }

    #[test]
    fn eigenvector_of_first_excited_level() {
        let (l, n, w) = (rat(1, 3), rat_int(1), rat_int(1));
        let m = matrix(&make_h_g2(), &basis(3, 1).unwrap(), &l, &n, &w).unwrap();
        let eig = eigenpolynomials(&m).unwrap();
        assert_eq!(eig[0].1, Poly2::one());
        // u - (1 + 3 nu + 6 lambda) / (4 omega) = u - 3/2
        let expect = Poly2::from_terms([((1, 0), ParamPoly::one()), ((0, 0), ParamPoly::constant(rat(-3, 2)))]);
        assert_eq!(eig[1], (rat_int(-4), expect));
    }

    #[test]
    fn omega_zero_is_degenerate() {
        let m = matrix(&make_h_g2(), &basis(3, 2).unwrap(), &rat_int(0), &rat_int(1), &rat_int(0)).unwrap();
        assert!(spectrum(&m).unwrap().iter().all(Zero::is_zero));
        assert!(matches!(eigenpolynomials(&m), Err(Error::DegenerateChain { .. })));
    }

    #[test]
    fn triangularity_is_enforced() {
        let m = OpMatrix {
            basis: basis(3, 1).unwrap(),
            entries: vec![vec![rat_int(1), rat_int(0)], vec![rat_int(2), rat_int(1)]],
        };
        assert!(matches!(spectrum(&m), Err(Error::NotTriangular { row: 1, col: 0 })));
    }

    #[test]
    fn degeneracy_counts() {
        let brute = |m: u32| (0..=m).filter(|n2| 3 * n2 <= m).count() as u32;
        for m in 0..30 {
            assert_eq!(degeneracy(m, 30).unwrap(), brute(m));
        }
        assert_eq!(degeneracy(0, 0).unwrap(), 1);
        assert_eq!(degeneracy(3, 3).unwrap(), 2);
        assert_eq!(degeneracy(7, 8).unwrap(), 3);
        assert!(degeneracy(5, 4).is_err());
    }
}
