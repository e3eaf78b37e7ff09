//! Exact linear algebra over `Q`: reduced row echelon form, rank, kernel
//! and image bases, solving, determinants and inverses.
//!
//! Pivots are chosen lexicographically (first usable column, first nonzero
//! row), never by magnitude, so every derived basis is deterministic.

use num_traits::{One, Zero};

use crate::error::NambuError;
use crate::scalar::Rational;

/// Dense matrix of exact rationals, row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RationalMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Rational>,
}

impl RationalMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        RationalMatrix {
            rows,
            cols,
            data: vec![Rational::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = RationalMatrix::zeros(n, n);
        for i in 0..n {
            *m.get_mut(i, i) = Rational::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Rational>>) -> Self {
        let r = rows.len();
        let c = rows.first().map(|row| row.len()).unwrap_or(0);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        RationalMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &Rational {
        &self.data[r * self.cols + c]
    }

    pub fn get_mut(&mut self, r: usize, c: usize) -> &mut Rational {
        &mut self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Rational] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (RationalMatrix, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..m.cols {
            if row == m.rows {
                break;
            }
            let Some(p) = (row..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                continue;
            };
            m.swap_rows(row, p);
            let inv = m.get(row, col).clone();
            for c in col..m.cols {
                let v = m.get(row, c).clone() / &inv;
                *m.get_mut(row, c) = v;
            }
            for r in 0..m.rows {
                if r != row && !m.get(r, col).is_zero() {
                    let factor = m.get(r, col).clone();
                    for c in col..m.cols {
                        let v = m.get(r, c).clone() - &factor * m.get(row, c);
                        *m.get_mut(r, c) = v;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{v : Av = 0}`, one vector per free column,
    /// in ascending free-column order.
    pub fn kernel_basis(&self) -> Vec<Vec<Rational>> {
        let (r, pivots) = self.rref();
        let mut basis = Vec::new();
        let pivot_set: Vec<Option<usize>> = {
            let mut v = vec![None; self.cols];
            for (row, &col) in pivots.iter().enumerate() {
                v[col] = Some(row);
            }
            v
        };
        for free in 0..self.cols {
            if pivot_set[free].is_some() {
                continue;
            }
            let mut vec = vec![Rational::zero(); self.cols];
            vec[free] = Rational::one();
            for (col, slot) in pivot_set.iter().enumerate() {
                if let Some(prow) = slot {
                    vec[col] = -r.get(*prow, free).clone();
                }
            }
            basis.push(vec);
        }
        basis
    }

    /// Indices of a deterministic maximal independent subset of the rows
    /// (greedy, scanning rows in order).
    pub fn independent_rows(&self) -> Vec<usize> {
        let mut chosen: Vec<usize> = Vec::new();
        let mut staged: Vec<Vec<Rational>> = Vec::new();
        for r in 0..self.rows {
            let mut candidate = staged.clone();
            candidate.push(self.row(r).to_vec());
            if RationalMatrix::from_rows(candidate.clone()).rank() > staged.len() {
                staged = candidate;
                chosen.push(r);
            }
        }
        chosen
    }

    /// One solution of `Ax = b`, if the system is consistent.
    pub fn solve(&self, b: &[Rational]) -> Option<Vec<Rational>> {
        assert_eq!(b.len(), self.rows, "right-hand side length mismatch");
        let mut aug = RationalMatrix::zeros(self.rows, self.cols + 1);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *aug.get_mut(r, c) = self.get(r, c).clone();
            }
            *aug.get_mut(r, self.cols) = b[r].clone();
        }
        let (rr, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // inconsistent: pivot in the augmented column
        }
        let mut x = vec![Rational::zero(); self.cols];
        for (row, &col) in pivots.iter().enumerate() {
            x[col] = rr.get(row, self.cols).clone();
        }
        Some(x)
    }

    /// Exact determinant of a square matrix.
    pub fn det(&self) -> Rational {
        assert_eq!(self.rows, self.cols, "determinant needs a square matrix");
        let mut m = self.clone();
        let mut det = Rational::one();
        for col in 0..m.cols {
            let Some(p) = (col..m.rows).find(|&r| !m.get(r, col).is_zero()) else {
                return Rational::zero();
            };
            if p != col {
                m.swap_rows(col, p);
                det = -det;
            }
            let pivot = m.get(col, col).clone();
            det *= &pivot;
            for r in col + 1..m.rows {
                if m.get(r, col).is_zero() {
                    continue;
                }
                let factor = m.get(r, col).clone() / &pivot;
                for c in col..m.cols {
                    let v = m.get(r, c).clone() - &factor * m.get(col, c);
                    *m.get_mut(r, c) = v;
                }
            }
        }
        det
    }

    /// Exact inverse of a square matrix.
    pub fn inverse(&self) -> Result<RationalMatrix, NambuError> {
        assert_eq!(self.rows, self.cols, "inverse needs a square matrix");
        let n = self.rows;
        let mut aug = RationalMatrix::zeros(n, 2 * n);
        for r in 0..n {
            for c in 0..n {
                *aug.get_mut(r, c) = self.get(r, c).clone();
            }
            *aug.get_mut(r, n + r) = Rational::one();
        }
        let (rr, pivots) = aug.rref();
        if pivots.len() < n || pivots.iter().enumerate().any(|(i, &c)| c != i) {
            return Err(NambuError::SingularMatrix);
        }
        let mut inv = RationalMatrix::zeros(n, n);
        for r in 0..n {
            for c in 0..n {
                *inv.get_mut(r, c) = rr.get(r, n + c).clone();
            }
        }
        Ok(inv)
    }

    pub fn transpose(&self) -> RationalMatrix {
        let mut out = RationalMatrix::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                *out.get_mut(c, r) = self.get(r, c).clone();
            }
        }
        out
    }

    /// Matrix product.
    pub fn mul(&self, rhs: &RationalMatrix) -> RationalMatrix {
        assert_eq!(self.cols, rhs.rows, "matrix product shape mismatch");
        let mut out = RationalMatrix::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for c in 0..rhs.cols {
                let mut acc = Rational::zero();
                for k in 0..self.cols {
                    acc += self.get(r, k) * rhs.get(k, c);
                }
                *out.get_mut(r, c) = acc;
            }
        }
        out
    }

    /// Applies the matrix to a column vector.
    pub fn apply(&self, v: &[Rational]) -> Vec<Rational> {
        assert_eq!(v.len(), self.cols, "vector length mismatch");
        (0..self.rows)
            .map(|r| {
                let mut acc = Rational::zero();
                for c in 0..self.cols {
                    acc += self.get(r, c) * &v[c];
                }
                acc
            })
            .collect()
    }
}
