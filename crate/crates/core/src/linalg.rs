//! Dense Gaussian elimination over any [`Scalar`] backend.

use crate::padic::{Scalar, Valuation};

/// Reduced row echelon form of an augmented system `[A | rhs]`.
#[derive(Clone, Debug)]
pub struct Rref<S> {
    pub rows: Vec<Vec<S>>,
    /// `(row, column)` of each pivot.
    pub pivots: Vec<(usize, usize)>,
    pub ncols: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Inconsistent {
    pub row: usize,
}

fn pivot_key(v: &Valuation) -> (u8, num_rational::Rational64) {
    match v {
        Valuation::Finite(x) => (0, *x),
        Valuation::AtLeast(x) => (1, *x),
        Valuation::Infinite => (2, num_rational::Rational64::from_integer(0)),
    }
}

/// Row-reduce `rows` (each of length `ncols + 1`, last entry the right-hand
/// side). Pivots are chosen with minimal valuation in each column.
pub fn rref<S: Scalar>(mut rows: Vec<Vec<S>>, ncols: usize) -> Result<Rref<S>, Inconsistent> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        if r == rows.len() {
            break;
        }
        let Some(best) = (r..rows.len())
            .filter(|&i| !rows[i][c].is_zero())
            .min_by_key(|&i| pivot_key(&rows[i][c].valuation()))
        else {
            continue;
        };
        rows.swap(r, best);
        let field = rows[r][c].field().clone();
        let inv = S::one_in(&field)
            .try_div(&rows[r][c])
            .expect("pivot is nonzero");
        for x in rows[r].iter_mut() {
            if !x.is_exact_zero() {
                *x = std::mem::replace(x, S::zero_in(&field)) * &inv;
            }
        }
        let pivot_row = rows[r].clone();
        for i in 0..rows.len() {
            if i == r || rows[i][c].is_exact_zero() {
                continue;
            }
            let f = rows[i][c].clone();
            for (x, y) in rows[i].iter_mut().zip(&pivot_row) {
                if !y.is_exact_zero() {
                    *x = std::mem::replace(x, S::zero_in(&field)) - &(y.clone() * &f);
                }
            }
            rows[i][c] = S::zero_in(&field);
        }
        pivots.push((r, c));
        r += 1;
    }
    for (i, row) in rows.iter().enumerate().skip(r) {
        if !row[ncols].is_zero() {
            return Err(Inconsistent { row: i });
        }
    }
    Ok(Rref {
        rows,
        pivots,
        ncols,
    })
}

impl<S: Scalar> Rref<S> {
    pub fn free_columns(&self) -> Vec<usize> {
        (0..self.ncols)
            .filter(|c| !self.pivots.iter().any(|(_, pc)| pc == c))
            .collect()
    }

    /// Unknowns fixed by the system regardless of the free parameters.
    pub fn determined(&self) -> Vec<Option<S>> {
        let free = self.free_columns();
        let mut out = vec![None; self.ncols];
        for &(r, c) in &self.pivots {
            if free.iter().all(|&fc| self.rows[r][fc].is_zero()) {
                out[c] = Some(self.rows[r][self.ncols].clone());
            }
        }
        out
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}
