//! Interpolation of received rows: `R` with `deg_H R < n + 2g` and
//! `R(P_j) = r_j` at every affine point.

use alloc::vec::Vec;

use crate::code::Code;
use crate::gf::Fe;
use crate::hermitian::RingElement;
use crate::linalg::{LinearSolver, Matrix};
use crate::Error;

/// Evaluation matrix of the monomials of order below `n + 2g`, factored once
/// per code.
#[derive(Clone, Debug)]
pub struct InterpolationBasis {
    monomials: Vec<(usize, usize)>,
    eval_matrix: Matrix,
    solver: LinearSolver,
}

impl InterpolationBasis {
    pub fn new(code: &Code) -> Result<Self, Error> {
        let curve = code.curve();
        let f = curve.field();
        let n = curve.n();
        let monomials = curve.monomials_below(n + 2 * curve.genus());
        let mut eval_matrix = Matrix::zeros(n, monomials.len());
        for (row, pt) in curve.points().iter().enumerate() {
            for (col, &(i, j)) in monomials.iter().enumerate() {
                eval_matrix[(row, col)] = f.mul(f.pow(pt.x, i as u64), f.pow(pt.y, j as u64));
            }
        }
        let solver = LinearSolver::new(f, &eval_matrix);
        if solver.rank() != n {
            return Err(Error::RankDeficient);
        }
        Ok(InterpolationBasis {
            monomials,
            eval_matrix,
            solver,
        })
    }

    /// The monomials used, ascending in `deg_H` (this is the column order).
    pub fn monomials(&self) -> &[(usize, usize)] {
        &self.monomials
    }

    pub fn eval_matrix(&self) -> &Matrix {
        &self.eval_matrix
    }

    /// The canonical interpolant: free variables of the column-ordered
    /// system are set to zero.
    pub fn interpolate_row(&self, code: &Code, r: &[Fe]) -> Result<RingElement, Error> {
        let n = code.n();
        if r.len() != n {
            return Err(Error::Dimension {
                expected: n,
                got: r.len(),
            });
        }
        let coeffs = self
            .solver
            .solve(code.field(), r)
            .ok_or(Error::RankDeficient)?;
        Ok(code.curve().from_monomials(&self.monomials, &coeffs))
    }
}
