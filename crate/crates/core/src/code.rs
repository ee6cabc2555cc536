//! One-point Hermitian codes `C_H(n, m_H)` and their homogeneous
//! `h`-interleaved versions, together with the burst-error channel.

use alloc::format;
use alloc::vec;
use alloc::vec::Vec;

use rand::Rng;

use crate::gf::{Fe, Field};
use crate::hermitian::{Curve, RingElement};
use crate::Error;

#[derive(Clone, Debug)]
pub struct Code {
    curve: Curve,
    m_h: usize,
    h: usize,
    /// Message monomials `X^i Y^j` with `deg_H <= m_H`, ascending in `deg_H`.
    basis: Vec<(usize, usize)>,
    /// `basis[b]` evaluated at every point, one row per basis monomial.
    evaluations: Vec<Vec<Fe>>,
}

/// An `h x n` matrix over `F_{q^2}`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct InterleavedWord {
    pub rows: Vec<Vec<Fe>>,
}

impl InterleavedWord {
    pub fn zeros(h: usize, n: usize) -> Self {
        InterleavedWord {
            rows: vec![vec![Fe::ZERO; n]; h],
        }
    }

    pub fn h(&self) -> usize {
        self.rows.len()
    }

    pub fn n(&self) -> usize {
        self.rows.first().map_or(0, Vec::len)
    }

    pub fn add(&self, f: &Field, other: &InterleavedWord) -> InterleavedWord {
        InterleavedWord {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f.add(x, y)).collect())
                .collect(),
        }
    }

    pub fn sub(&self, f: &Field, other: &InterleavedWord) -> InterleavedWord {
        InterleavedWord {
            rows: self
                .rows
                .iter()
                .zip(&other.rows)
                .map(|(a, b)| a.iter().zip(b).map(|(&x, &y)| f.sub(x, y)).collect())
                .collect(),
        }
    }

    /// Indices of the nonzero columns.
    pub fn nonzero_columns(&self) -> Vec<usize> {
        (0..self.n())
            .filter(|&j| self.rows.iter().any(|r| !r[j].is_zero()))
            .collect()
    }
}

/// A burst error: the error matrix and its set of nonzero columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ErrorPattern {
    pub matrix: InterleavedWord,
    pub positions: Vec<usize>,
}

impl Code {
    /// Builds `C_H(q^3, m_H; h)`; requires `2(g - 1) < m_H < n` and `h >= 1`.
    pub fn new(curve: Curve, m_h: usize, h: usize) -> Result<Self, Error> {
        let (n, g) = (curve.n(), curve.genus());
        if 2 * g >= m_h + 2 || m_h >= n {
            return Err(Error::InvalidParams(format!(
                "m_H = {m_h} outside 2(g-1) < m_H < n (g = {g}, n = {n})"
            )));
        }
        if h == 0 {
            return Err(Error::InvalidParams(
                "interleaving degree h must be at least 1".into(),
            ));
        }
        let basis = curve.monomials_up_to(m_h);
        debug_assert_eq!(basis.len(), m_h + 1 - g);
        let f = curve.field();
        let evaluations = basis
            .iter()
            .map(|&(i, j)| {
                curve
                    .points()
                    .iter()
                    .map(|p| f.mul(f.pow(p.x, i as u64), f.pow(p.y, j as u64)))
                    .collect()
            })
            .collect();
        Ok(Code {
            curve,
            m_h,
            h,
            basis,
            evaluations,
        })
    }

    pub fn curve(&self) -> &Curve {
        &self.curve
    }

    pub fn field(&self) -> &Field {
        self.curve.field()
    }

    pub fn q(&self) -> usize {
        self.curve.q()
    }

    pub fn n(&self) -> usize {
        self.curve.n()
    }

    pub fn genus(&self) -> usize {
        self.curve.genus()
    }

    pub fn m_h(&self) -> usize {
        self.m_h
    }

    pub fn h(&self) -> usize {
        self.h
    }

    /// Dimension `k = m_H - g + 1`.
    pub fn k(&self) -> usize {
        self.basis.len()
    }

    /// Designed minimum distance `d* = n - m_H`.
    pub fn designed_distance(&self) -> usize {
        self.n() - self.m_h
    }

    pub fn basis(&self) -> &[(usize, usize)] {
        &self.basis
    }

    /// The message polynomial `sum_b msg[b] * basis[b]`.
    pub fn message_to_ring(&self, msg: &[Fe]) -> RingElement {
        self.curve.from_monomials(&self.basis, msg)
    }

    /// Inverse of [`Code::message_to_ring`]; `None` if `f` is not in
    /// `L(m_H P_inf)`.
    pub fn ring_to_message(&self, f: &RingElement) -> Option<Vec<Fe>> {
        if self.curve.deg_h(f).is_some_and(|d| d > self.m_h) {
            return None;
        }
        Some(self.basis.iter().map(|&(i, j)| f.coeff(i, j)).collect())
    }

    pub fn random_messages<R: Rng + ?Sized>(&self, rng: &mut R) -> Vec<Vec<Fe>> {
        let order = self.field().order();
        (0..self.h)
            .map(|_| {
                (0..self.k())
                    .map(|_| {
                        self.field()
                            .element(rng.gen_range(0..order))
                            .expect("in range")
                    })
                    .collect()
            })
            .collect()
    }

    /// Evaluates one message at all points.
    pub fn encode_row(&self, msg: &[Fe]) -> Result<Vec<Fe>, Error> {
        if msg.len() != self.k() {
            return Err(Error::Dimension {
                expected: self.k(),
                got: msg.len(),
            });
        }
        let f = self.field();
        let mut row = vec![Fe::ZERO; self.n()];
        for (coef, evals) in msg.iter().zip(&self.evaluations) {
            if coef.is_zero() {
                continue;
            }
            for (r, &v) in row.iter_mut().zip(evals) {
                *r = f.add(*r, f.mul(*coef, v));
            }
        }
        Ok(row)
    }

    /// Encodes `h` messages of `k` coefficients each.
    pub fn encode(&self, msgs: &[Vec<Fe>]) -> Result<InterleavedWord, Error> {
        if msgs.len() != self.h {
            return Err(Error::Dimension {
                expected: self.h,
                got: msgs.len(),
            });
        }
        let rows = msgs
            .iter()
            .map(|m| self.encode_row(m))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(InterleavedWord { rows })
    }

    /// `t` error positions drawn uniformly without replacement, each error
    /// column uniform over the nonzero vectors of `F_{q^2}^h`.
    pub fn random_burst_error<R: Rng + ?Sized>(
        &self,
        t: usize,
        rng: &mut R,
    ) -> Result<ErrorPattern, Error> {
        let n = self.n();
        if t > n {
            return Err(Error::InvalidParams(format!("t = {t} exceeds n = {n}")));
        }
        let order = self.field().order() as u64;
        let columns = order.pow(self.h as u32);
        let mut positions = rand::seq::index::sample(rng, n, t).into_vec();
        positions.sort_unstable();
        let mut matrix = InterleavedWord::zeros(self.h, n);
        for &pos in &positions {
            let mut col = rng.gen_range(1..columns);
            for row in matrix.rows.iter_mut() {
                row[pos] = self
                    .field()
                    .element((col % order) as u32)
                    .expect("in range");
                col /= order;
            }
        }
        Ok(ErrorPattern { matrix, positions })
    }
}
