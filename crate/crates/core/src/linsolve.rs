//! Exact Gaussian elimination over the rationals.

use num_traits::{Signed, Zero};

use crate::exactcoeff::Rational;

/// Result of solving `A x = b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Solution {
    /// A particular solution; free unknowns are zero. When the system is
    /// inconsistent this solves the consistent part only.
    pub x: Vec<Rational>,
    pub rank: usize,
    pub consistent: bool,
    /// Pivot column indices in increasing order.
    pub pivots: Vec<usize>,
}

/// Solves `A x = b` for `A` given as rows of length `ncols`.
///
/// Columns are eliminated left to right, so when the system is
/// underdetermined the later columns are the free ones and get zero. Within a
/// column the pivot is the remaining row with the largest absolute value,
/// lowest row index on ties, which makes the result deterministic.
pub fn solve(rows: &[Vec<Rational>], rhs: &[Rational], ncols: usize) -> Solution {
    assert_eq!(rows.len(), rhs.len(), "row count mismatch");
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            assert_eq!(r.len(), ncols, "ragged matrix");
            let mut v = r.clone();
            v.push(b.clone());
            v
        })
        .collect();
    let nrows = m.len();
    let mut pivots = Vec::new();
    let mut row = 0;
    for col in 0..ncols {
        if row == nrows {
            break;
        }
        let best = (row..nrows)
            .filter(|&r| !m[r][col].is_zero())
            .fold(None::<usize>, |acc, r| match acc {
                Some(b) if m[b][col].abs() >= m[r][col].abs() => Some(b),
                _ => Some(r),
            });
        let Some(p) = best else { continue };
        m.swap(row, p);
        let inv = m[row][col].recip();
        for v in m[row][col..].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = m[row].clone();
        for (r, other) in m.iter_mut().enumerate() {
            if r == row || other[col].is_zero() {
                continue;
            }
            let f = other[col].clone();
            for (c, pv) in pivot_row.iter().enumerate().skip(col) {
                if !pv.is_zero() {
                    other[c] -= &f * pv;
                }
            }
        }
        pivots.push(col);
        row += 1;
    }
    let consistent = m[row..].iter().all(|r| r[ncols].is_zero());
    let mut x = vec![Rational::zero(); ncols];
    for (r, &c) in pivots.iter().enumerate() {
        x[c] = m[r][ncols].clone();
    }
    Solution { x, rank: pivots.len(), consistent, pivots }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactcoeff::{rat, rat_int};

    fn ints(rows: &[&[i64]]) -> Vec<Vec<Rational>> {
        rows.iter().map(|r| r.iter().map(|&v| rat_int(v)).collect()).collect()
    }

    #[test]
    fn unique_solution() {
        let a = ints(&[&[2, 1], &[1, 3]]);
        let b = vec![rat_int(3), rat_int(5)];
        let s = solve(&a, &b, 2);
        assert!(s.consistent);
        assert_eq!(s.x, vec![rat(4, 5), rat(7, 5)]);
    }

    #[test]
    fn later_columns_are_free() {
        // x + y = 2 with y free -> y = 0
        let a = ints(&[&[1, 1]]);
        let s = solve(&a, &[rat_int(2)], 2);
        assert_eq!(s.x, vec![rat_int(2), rat_int(0)]);
        assert_eq!(s.rank, 1);
    }

    #[test]
    fn inconsistent_system() {
        let a = ints(&[&[1, 1], &[2, 2]]);
        let s = solve(&a, &[rat_int(1), rat_int(3)], 2);
        assert!(!s.consistent);
    }

    #[test]
    fn empty_columns() {
        let s = solve(&ints(&[&[], &[]]), &[rat_int(0), rat_int(1)], 0);
        assert!(!s.consistent);
        assert!(s.x.is_empty());
    }
}
