//! Dense univariate polynomials over `F_{q^2}` and matrices of them.
//!
//! All arithmetic takes the [`Field`] explicitly; polynomials carry no field
//! reference. Coefficients are little-endian with trailing zeros trimmed, so
//! the zero polynomial has an empty coefficient vector.

use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{Fe, Field};

#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Poly {
    coeffs: Vec<Fe>,
}

impl Poly {
    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(Fe::ONE)
    }

    pub fn constant(c: Fe) -> Self {
        Poly::from_coeffs(vec![c])
    }

    /// `c X^d`.
    pub fn monomial(c: Fe, d: usize) -> Self {
        if c.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Fe::ZERO; d + 1];
        coeffs[d] = c;
        Poly { coeffs }
    }

    pub fn x() -> Self {
        Poly::monomial(Fe::ONE, 1)
    }

    pub fn from_coeffs(mut coeffs: Vec<Fe>) -> Self {
        trim(&mut coeffs);
        Poly { coeffs }
    }

    pub fn coeffs(&self) -> &[Fe] {
        &self.coeffs
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, `None` for the zero polynomial.
    #[inline]
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Leading coefficient (zero for the zero polynomial).
    #[inline]
    pub fn lc(&self) -> Fe {
        self.coeffs.last().copied().unwrap_or(Fe::ZERO)
    }

    #[inline]
    pub fn coeff(&self, k: usize) -> Fe {
        self.coeffs.get(k).copied().unwrap_or(Fe::ZERO)
    }

    pub fn add(&self, f: &Field, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign(f, other);
        out
    }

    pub fn sub(&self, f: &Field, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.sub_assign(f, other);
        out
    }

    pub fn neg(&self, f: &Field) -> Poly {
        Poly {
            coeffs: self.coeffs.iter().map(|&c| f.neg(c)).collect(),
        }
    }

    pub fn add_assign(&mut self, f: &Field, other: &Poly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Fe::ZERO);
        }
        for (a, &b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = f.add(*a, b);
        }
        trim(&mut self.coeffs);
    }

    pub fn sub_assign(&mut self, f: &Field, other: &Poly) {
        if self.coeffs.len() < other.coeffs.len() {
            self.coeffs.resize(other.coeffs.len(), Fe::ZERO);
        }
        for (a, &b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = f.sub(*a, b);
        }
        trim(&mut self.coeffs);
    }

    /// `self += c * X^shift * other`.
    pub fn add_scaled_shifted(&mut self, f: &Field, c: Fe, shift: usize, other: &Poly) {
        if c.is_zero() || other.is_zero() {
            return;
        }
        let need = other.coeffs.len() + shift;
        if self.coeffs.len() < need {
            self.coeffs.resize(need, Fe::ZERO);
        }
        for (a, &b) in self.coeffs[shift..].iter_mut().zip(&other.coeffs) {
            *a = f.add(*a, f.mul(c, b));
        }
        trim(&mut self.coeffs);
    }

    pub fn scale(&self, f: &Field, c: Fe) -> Poly {
        if c.is_zero() {
            return Poly::zero();
        }
        Poly {
            coeffs: self.coeffs.iter().map(|&a| f.mul(a, c)).collect(),
        }
    }

    /// `X^d * self`.
    pub fn shift(&self, d: usize) -> Poly {
        if self.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Fe::ZERO; d];
        coeffs.extend_from_slice(&self.coeffs);
        Poly { coeffs }
    }

    pub fn mul(&self, f: &Field, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut out = vec![Fe::ZERO; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                out[i + j] = f.add(out[i + j], f.mul(a, b));
            }
        }
        Poly::from_coeffs(out)
    }

    pub fn pow(&self, f: &Field, k: usize) -> Poly {
        let mut acc = Poly::one();
        for _ in 0..k {
            acc = acc.mul(f, self);
        }
        acc
    }

    /// Quotient and remainder; `None` when dividing by zero.
    pub fn divrem(&self, f: &Field, divisor: &Poly) -> Option<(Poly, Poly)> {
        let dd = divisor.deg()?;
        let inv_lead = f.inv(divisor.lc())?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Some((Poly::zero(), self.clone()));
        }
        let mut quot = vec![Fe::ZERO; rem.len() - dd];
        for top in (dd..rem.len()).rev() {
            let c = f.mul(rem[top], inv_lead);
            if c.is_zero() {
                continue;
            }
            let shift = top - dd;
            quot[shift] = c;
            for (k, &b) in divisor.coeffs.iter().enumerate() {
                rem[shift + k] = f.sub(rem[shift + k], f.mul(c, b));
            }
        }
        rem.truncate(dd);
        Some((Poly::from_coeffs(quot), Poly::from_coeffs(rem)))
    }

    pub fn rem(&self, f: &Field, divisor: &Poly) -> Option<Poly> {
        self.divrem(f, divisor).map(|(_, r)| r)
    }

    /// Exact quotient, `None` if `divisor` is zero or leaves a remainder.
    pub fn div_exact(&self, f: &Field, divisor: &Poly) -> Option<Poly> {
        let (q, r) = self.divrem(f, divisor)?;
        r.is_zero().then_some(q)
    }

    pub fn eval(&self, f: &Field, x: Fe) -> Fe {
        self.coeffs
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, &c| f.add(f.mul(acc, x), c))
    }

    /// `self(X + a)`.
    pub fn taylor_shift(&self, f: &Field, a: Fe) -> Poly {
        // Horner in the shifted variable: acc = acc * (X + a) + c.
        let mut acc: Vec<Fe> = Vec::with_capacity(self.coeffs.len());
        for &c in self.coeffs.iter().rev() {
            acc.push(Fe::ZERO);
            for k in (1..acc.len()).rev() {
                acc[k] = f.add(acc[k - 1], f.mul(acc[k], a));
            }
            acc[0] = f.add(f.mul(acc[0], a), c);
        }
        Poly::from_coeffs(acc)
    }

    /// `self mod X^n`.
    pub fn truncate(&self, n: usize) -> Poly {
        let mut coeffs = self.coeffs.clone();
        coeffs.truncate(n);
        Poly::from_coeffs(coeffs)
    }
}

fn trim(c: &mut Vec<Fe>) {
    while c.last().is_some_and(|x| x.is_zero()) {
        c.pop();
    }
}

/// A dense `rows x cols` matrix over `F_{q^2}[X]`, row-major.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    data: Vec<Poly>,
}

impl PolyMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        PolyMatrix {
            rows,
            cols,
            data: vec![Poly::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = PolyMatrix::zeros(n, n);
        for i in 0..n {
            m[(i, i)] = Poly::one();
        }
        m
    }

    pub fn from_rows(rows: Vec<Vec<Poly>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        PolyMatrix {
            rows: r,
            cols: c,
            data: rows.into_iter().flatten().collect(),
        }
    }

    #[inline]
    pub fn rows(&self) -> usize {
        self.rows
    }

    #[inline]
    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn row(&self, r: usize) -> &[Poly] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_mut(&mut self, r: usize) -> &mut [Poly] {
        &mut self.data[r * self.cols..(r + 1) * self.cols]
    }

    /// Mutable access to row `target` and shared access to row `source`.
    pub fn row_pair(&mut self, target: usize, source: usize) -> (&mut [Poly], &[Poly]) {
        assert_ne!(target, source);
        let c = self.cols;
        if target < source {
            let (lo, hi) = self.data.split_at_mut(source * c);
            (&mut lo[target * c..(target + 1) * c], &hi[..c])
        } else {
            let (lo, hi) = self.data.split_at_mut(target * c);
            (&mut hi[..c], &lo[source * c..(source + 1) * c])
        }
    }

    pub fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for c in 0..self.cols {
            self.data.swap(a * self.cols + c, b * self.cols + c);
        }
    }

    pub fn mul(&self, f: &Field, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.rows, "inner dimensions differ");
        let mut out = PolyMatrix::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = &self[(i, k)];
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = &other[(k, j)];
                    if !b.is_zero() {
                        let prod = a.mul(f, b);
                        out[(i, j)].add_assign(f, &prod);
                    }
                }
            }
        }
        out
    }

    /// Determinant by fraction-free (Bareiss) elimination.
    pub fn det(&self, f: &Field) -> Poly {
        assert_eq!(self.rows, self.cols, "determinant of a non-square matrix");
        let n = self.rows;
        if n == 0 {
            return Poly::one();
        }
        let mut m = self.clone();
        let mut negate = false;
        let mut prev = Poly::one();
        for k in 0..n {
            let Some(pivot) = (k..n).find(|&r| !m[(r, k)].is_zero()) else {
                return Poly::zero();
            };
            if pivot != k {
                m.swap_rows(pivot, k);
                negate = !negate;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = m[(k, k)]
                        .mul(f, &m[(i, j)])
                        .sub(f, &m[(i, k)].mul(f, &m[(k, j)]));
                    m[(i, j)] = num.div_exact(f, &prev).expect("Bareiss division is exact");
                }
                m[(i, k)] = Poly::zero();
            }
            prev = m[(k, k)].clone();
        }
        let d = m[(n - 1, n - 1)].clone();
        if negate {
            d.neg(f)
        } else {
            d
        }
    }
}

impl core::ops::Index<(usize, usize)> for PolyMatrix {
    type Output = Poly;

    fn index(&self, (r, c): (usize, usize)) -> &Poly {
        &self.data[r * self.cols + c]
    }
}

impl core::ops::IndexMut<(usize, usize)> for PolyMatrix {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut Poly {
        &mut self.data[r * self.cols + c]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn field() -> Field {
        Field::for_q(4).unwrap()
    }

    fn poly_strategy(max_len: usize) -> impl Strategy<Value = Vec<u16>> {
        proptest::collection::vec(0u16..16, 0..max_len)
    }

    fn mk(v: &[u16]) -> Poly {
        Poly::from_coeffs(v.iter().map(|&x| Fe(x)).collect())
    }

    #[test]
    fn basic_degrees() {
        assert_eq!(Poly::zero().deg(), None);
        assert_eq!(Poly::x().deg(), Some(1));
        assert_eq!(Poly::from_coeffs(vec![Fe(1), Fe(0), Fe(0)]).deg(), Some(0));
    }

    #[test]
    fn taylor_shift_matches_evaluation() {
        let f = field();
        let p = mk(&[3, 7, 0, 11, 2]);
        let a = Fe(9);
        let shifted = p.taylor_shift(&f, a);
        for x in f.elements() {
            assert_eq!(shifted.eval(&f, x), p.eval(&f, f.add(x, a)));
        }
    }

    #[test]
    fn det_of_triangular_and_product() {
        let f = field();
        let a = PolyMatrix::from_rows(vec![
            vec![mk(&[1, 1]), mk(&[2])],
            vec![Poly::zero(), mk(&[3, 0, 1])],
        ]);
        assert_eq!(a.det(&f), mk(&[1, 1]).mul(&f, &mk(&[3, 0, 1])));
        let b = PolyMatrix::from_rows(vec![
            vec![mk(&[0, 1]), mk(&[5, 1])],
            vec![mk(&[1]), mk(&[4, 4])],
        ]);
        assert_eq!(a.mul(&f, &b).det(&f), a.det(&f).mul(&f, &b.det(&f)));
    }

    proptest! {
        #[test]
        fn divrem_reconstructs(a in poly_strategy(12), b in poly_strategy(6)) {
            let f = field();
            let (a, b) = (mk(&a), mk(&b));
            prop_assume!(!b.is_zero());
            let (q, r) = a.divrem(&f, &b).unwrap();
            prop_assert!(r.deg().is_none_or(|d| d < b.deg().unwrap()));
            prop_assert_eq!(q.mul(&f, &b).add(&f, &r), a);
        }

        #[test]
        fn mul_is_commutative_and_distributive(a in poly_strategy(8), b in poly_strategy(8), c in poly_strategy(8)) {
            let f = field();
            let (a, b, c) = (mk(&a), mk(&b), mk(&c));
            prop_assert_eq!(a.mul(&f, &b), b.mul(&f, &a));
            prop_assert_eq!(a.mul(&f, &b.add(&f, &c)), a.mul(&f, &b).add(&f, &a.mul(&f, &c)));
        }

        #[test]
        fn scaled_shifted_add(a in poly_strategy(8), b in poly_strategy(8), c in 0u16..16, d in 0usize..5) {
            let f = field();
            let (mut a, b) = (mk(&a), mk(&b));
            let expect = a.add(&f, &b.scale(&f, Fe(c)).shift(d));
            a.add_scaled_shifted(&f, Fe(c), d, &b);
            prop_assert_eq!(a, expect);
        }
    }
}
