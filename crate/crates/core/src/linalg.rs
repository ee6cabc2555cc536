//! Dense linear algebra over `F_{q^2}`.

use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{Fe, Field};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Matrix {
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

impl Matrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix {
            rows,
            cols,
            data: vec![Fe::ZERO; rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Matrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Fe::ONE;
        }
        m
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn mul_vec(&self, f: &Field, v: &[Fe]) -> Vec<Fe> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|r| {
                self.row(r)
                    .iter()
                    .zip(v)
                    .fold(Fe::ZERO, |acc, (&a, &b)| f.add(acc, f.mul(a, b)))
            })
            .collect()
    }

    /// Reduces to reduced row echelon form in place, returning pivot columns.
    /// Pivots are chosen left to right.
    pub fn rref(&mut self, f: &Field) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(pr) = (row..self.rows).find(|&r| !self[(r, col)].is_zero()) else {
                continue;
            };
            self.swap_rows(row, pr);
            let inv = f.inv(self[(row, col)]).expect("pivot is nonzero");
            for c in col..self.cols {
                self[(row, c)] = f.mul(self[(row, c)], inv);
            }
            for r in 0..self.rows {
                let factor = self[(r, col)];
                if r != row && !factor.is_zero() {
                    self.sub_scaled_row(f, r, row, factor, col);
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(&self, f: &Field) -> usize {
        self.clone().rref(f).len()
    }

    /// One solution of `self * x = rhs` with every free variable zero, or
    /// `None` if the system is inconsistent.
    pub fn solve(&self, f: &Field, rhs: &[Fe]) -> Option<Vec<Fe>> {
        LinearSolver::new(f, self).solve(f, rhs)
    }

    /// A basis of the right kernel, one vector per free column (the free
    /// variable set to 1, the others to 0).
    pub fn nullspace(&self, f: &Field) -> Vec<Vec<Fe>> {
        let mut m = self.clone();
        let pivots = m.rref(f);
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&fc| {
                let mut v = vec![Fe::ZERO; self.cols];
                v[fc] = Fe::ONE;
                for (r, &pc) in pivots.iter().enumerate() {
                    v[pc] = f.neg(m[(r, fc)]);
                }
                v
            })
            .collect()
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a != b {
            for c in 0..self.cols {
                self.data.swap(a * self.cols + c, b * self.cols + c);
            }
        }
    }

    /// `row[target] -= factor * row[source]`, columns `from..`.
    fn sub_scaled_row(&mut self, f: &Field, target: usize, source: usize, factor: Fe, from: usize) {
        for c in from..self.cols {
            let s = self[(source, c)];
            if !s.is_zero() {
                self[(target, c)] = f.sub(self[(target, c)], f.mul(factor, s));
            }
        }
    }
}

impl core::ops::Index<(usize, usize)> for Matrix {
    type Output = Fe;

    fn index(&self, (r, c): (usize, usize)) -> &Fe {
        &self.data[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for Matrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Fe {
        &mut self.data[r * self.cols + c]
    }
}

/// A factorization `T * A = E` (`E` in reduced row echelon form) kept around
/// to solve `A x = b` for many right-hand sides.
#[derive(Clone, Debug)]
pub struct LinearSolver {
    cols: usize,
    pivots: Vec<usize>,
    transform: Matrix,
}

impl LinearSolver {
    pub fn new(f: &Field, a: &Matrix) -> Self {
        let (rows, cols) = (a.rows, a.cols);
        let mut aug = Matrix::zeros(rows, cols + rows);
        for r in 0..rows {
            aug.data[r * (cols + rows)..r * (cols + rows) + cols].copy_from_slice(a.row(r));
            aug[(r, cols + r)] = Fe::ONE;
        }
        // Pivots never land in the identity block before the A block is
        // exhausted, so truncating at `cols` is safe.
        let pivots: Vec<usize> = aug.rref(f).into_iter().filter(|&c| c < cols).collect();
        let mut transform = Matrix::zeros(rows, rows);
        for r in 0..rows {
            for c in 0..rows {
                transform[(r, c)] = aug[(r, cols + c)];
            }
        }
        LinearSolver {
            cols,
            pivots,
            transform,
        }
    }

    pub fn rank(&self) -> usize {
        self.pivots.len()
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    pub fn solve(&self, f: &Field, rhs: &[Fe]) -> Option<Vec<Fe>> {
        let y = self.transform.mul_vec(f, rhs);
        if y[self.pivots.len()..].iter().any(|v| !v.is_zero()) {
            return None;
        }
        let mut x = vec![Fe::ZERO; self.cols];
        for (r, &pc) in self.pivots.iter().enumerate() {
            x[pc] = y[r];
        }
        Some(x)
    }
}
