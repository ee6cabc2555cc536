//! Multi-indices, the key-equation coefficients `A_{i,j}`, and brute-force
//! oracles for the error locator `Lambda_s` and the `Omega_{s,i}`.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::code::{Code, InterleavedWord};
use crate::gf::{binomial_mod_p, Fe, Field};
use crate::hermitian::{Curve, RingElement};
use crate::interp::InterpolationBasis;
use crate::linalg::Matrix;
use crate::poly::Poly;
use crate::Error;

/// An element of `Z_{>=0}^h`.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MultiIndex(pub Vec<usize>);

impl MultiIndex {
    pub fn zero(h: usize) -> Self {
        MultiIndex(vec![0; h])
    }

    /// The `k`-th unit vector (0-based).
    pub fn unit(h: usize, k: usize) -> Self {
        let mut v = vec![0; h];
        v[k] = 1;
        MultiIndex(v)
    }

    pub fn h(&self) -> usize {
        self.0.len()
    }

    /// `|i|`.
    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// The product order `self <= other`.
    pub fn precedes(&self, other: &MultiIndex) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn checked_sub(&self, other: &MultiIndex) -> Option<MultiIndex> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_sub(*b))
            .collect::<Option<Vec<_>>>()
            .map(MultiIndex)
    }

    /// All multi-indices of size exactly `size`, first entry largest first.
    pub fn of_size(h: usize, size: usize) -> Vec<MultiIndex> {
        fn rec(h: usize, left: usize, prefix: &mut Vec<usize>, out: &mut Vec<MultiIndex>) {
            if prefix.len() + 1 == h {
                prefix.push(left);
                out.push(MultiIndex(prefix.clone()));
                prefix.pop();
                return;
            }
            for first in (0..=left).rev() {
                prefix.push(first);
                rec(h, left - first, prefix, out);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if h > 0 {
            rec(h, size, &mut Vec::new(), &mut out);
        }
        out
    }

    /// All multi-indices with `lo <= |i| <= hi`, graded by size.
    pub fn graded(h: usize, lo: usize, hi: usize) -> Vec<MultiIndex> {
        (lo..=hi).flat_map(|d| MultiIndex::of_size(h, d)).collect()
    }
}

/// `prod_k binom(j_k, i_k)` in the prime field, zero unless `i <= j`.
pub fn multi_binom(f: &Field, j: &MultiIndex, i: &MultiIndex) -> Fe {
    if !i.precedes(j) {
        return Fe::ZERO;
    }
    let p = f.p();
    let v = j.0.iter().zip(&i.0).fold(1u64, |acc, (&a, &b)| {
        acc * binomial_mod_p(a as u64, b as u64, p) as u64 % p as u64
    });
    f.from_int(v as i64)
}

/// Number of `i in Z_{>=0}^h` with `|i| <= t`.
pub fn count_leq(h: usize, t: usize) -> u64 {
    (0..=t)
        .map(|d| MultiIndex::of_size(h, d).len() as u64)
        .sum()
}

/// Number of `i` with `|i| < t`.
pub fn count_lt(h: usize, t: usize) -> u64 {
    if t == 0 {
        0
    } else {
        count_leq(h, t - 1)
    }
}

/// `sum_{|i| <= t} |i|`.
pub fn weighted_leq(h: usize, t: usize) -> u64 {
    (0..=t)
        .map(|d| d as u64 * MultiIndex::of_size(h, d).len() as u64)
        .sum()
}

/// `sum_{|i| < t} |i|`.
pub fn weighted_lt(h: usize, t: usize) -> u64 {
    if t == 0 {
        0
    } else {
        weighted_leq(h, t - 1)
    }
}

/// The index sets `I = {|i| < s}` and `J = {1 <= |j| <= l}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IndexSets {
    pub h: usize,
    pub s: usize,
    pub ell: usize,
    pub i_set: Vec<MultiIndex>,
    pub j_set: Vec<MultiIndex>,
}

impl IndexSets {
    pub fn new(h: usize, s: usize, ell: usize) -> Result<Self, Error> {
        if h == 0 || s == 0 || s > ell {
            return Err(Error::InvalidParams(alloc::format!(
                "need h >= 1 and 1 <= s <= l, got h = {h}, s = {s}, l = {ell}"
            )));
        }
        Ok(IndexSets {
            h,
            s,
            ell,
            i_set: MultiIndex::graded(h, 0, s - 1),
            j_set: MultiIndex::graded(h, 1, ell),
        })
    }

    /// Position of `u_k` in `J`.
    pub fn unit_position(&self, k: usize) -> usize {
        let u = MultiIndex::unit(self.h, k);
        self.j_set
            .iter()
            .position(|j| *j == u)
            .expect("unit vectors lie in J")
    }
}

/// `G = X^{q^2} - X`.
pub fn g_poly(f: &Field, q: usize) -> Poly {
    Poly::monomial(Fe::ONE, q * q).sub(f, &Poly::x())
}

/// All products `R^m` for `|m| <= bound`.
pub fn multi_powers(
    curve: &Curve,
    elems: &[RingElement],
    bound: usize,
) -> BTreeMap<MultiIndex, RingElement> {
    let h = elems.len();
    let mut out = BTreeMap::new();
    out.insert(MultiIndex::zero(h), curve.one());
    for m in MultiIndex::graded(h, 1, bound) {
        let k = m.0.iter().position(|&x| x > 0).expect("nonzero index");
        let prev = m
            .checked_sub(&MultiIndex::unit(h, k))
            .expect("entry is positive");
        let value = curve.mul(&out[&prev], &elems[k]);
        out.insert(m, value);
    }
    out
}

/// Inputs of the linearised problem for one received word.
#[derive(Clone, Debug)]
pub struct KeyEqSystem {
    pub sets: IndexSets,
    /// Interpolants of the received rows.
    pub r: Vec<RingElement>,
    pub g: Poly,
    /// `a[ii][jj] = A_{I[ii], J[jj]}`, `None` when `I[ii]` does not precede
    /// `J[jj]`.
    pub a: Vec<Vec<Option<RingElement>>>,
}

impl KeyEqSystem {
    pub fn build(
        code: &Code,
        interp: &InterpolationBasis,
        word: &InterleavedWord,
        s: usize,
        ell: usize,
    ) -> Result<Self, Error> {
        if word.h() != code.h() {
            return Err(Error::Dimension {
                expected: code.h(),
                got: word.h(),
            });
        }
        let r = word
            .rows
            .iter()
            .map(|row| interp.interpolate_row(code, row))
            .collect::<Result<Vec<_>, _>>()?;
        Self::from_interpolants(code, r, s, ell)
    }

    pub fn from_interpolants(
        code: &Code,
        r: Vec<RingElement>,
        s: usize,
        ell: usize,
    ) -> Result<Self, Error> {
        let sets = IndexSets::new(code.h(), s, ell)?;
        let curve = code.curve();
        let f = curve.field();
        let g = g_poly(f, code.q());
        let powers = multi_powers(curve, &r, ell);
        let g_powers: Vec<Poly> = (0..s).map(|k| g.pow(f, k)).collect();
        let a = sets
            .i_set
            .iter()
            .map(|i| {
                sets.j_set
                    .iter()
                    .map(|j| {
                        let diff = j.checked_sub(i)?;
                        let c = multi_binom(f, j, i);
                        let base = curve.mul_poly(&powers[&diff], &g_powers[i.size()]);
                        Some(curve.scale(&base, c))
                    })
                    .collect()
            })
            .collect();
        Ok(KeyEqSystem { sets, r, g, a })
    }

    pub fn s(&self) -> usize {
        self.sets.s
    }

    pub fn ell(&self) -> usize {
        self.sets.ell
    }

    /// `sum_{i in I} lambda_i A_{i,j}` for the `jj`-th element of `J`.
    pub fn combine(&self, curve: &Curve, lambdas: &[RingElement], jj: usize) -> RingElement {
        let mut acc = curve.zero();
        for (ii, lambda) in lambdas.iter().enumerate() {
            if let Some(a) = &self.a[ii][jj] {
                acc = curve.add(&acc, &curve.mul(lambda, a));
            }
        }
        acc
    }

    /// Checks the key equations for given `Lambda_s`, messages and `Omega`s
    /// (one per element of `I`).
    pub fn verify_key_equations(
        &self,
        curve: &Curve,
        lambda: &RingElement,
        f: &[RingElement],
        omegas: &[RingElement],
    ) -> bool {
        let s = self.s();
        let field = curve.field();
        let gs = self.g.pow(field, s);
        let f_powers = multi_powers(curve, f, self.ell());
        self.sets.j_set.iter().enumerate().all(|(jj, j)| {
            let lhs = curve.mul(lambda, &f_powers[j]);
            let rhs = self.combine(curve, omegas, jj);
            if j.size() < s {
                lhs == rhs
            } else {
                curve.rem_poly(&curve.sub(&lhs, &rhs), &gs).is_zero()
            }
        })
    }

    /// The degree `tau = deg_H lambda_0` if `(lambdas, psis)` solves the
    /// linearised problem with monic `lambda_0`, otherwise `None`.
    pub fn solution_degree(
        &self,
        code: &Code,
        lambdas: &[RingElement],
        psis: &[RingElement],
    ) -> Option<usize> {
        let curve = code.curve();
        let field = curve.field();
        if lambdas.len() != self.sets.i_set.len() || psis.len() != self.sets.j_set.len() {
            return None;
        }
        let tau = curve.deg_h(&lambdas[0])?;
        if curve.leading_coeff(&lambdas[0]) != Fe::ONE {
            return None;
        }
        let s = self.s();
        let gs = self.g.pow(field, s);
        let g = code.genus() as i64;
        let m_h = code.m_h() as i64;
        for (i, lambda) in self.sets.i_set.iter().zip(lambdas) {
            if let Some(d) = curve.deg_h(lambda) {
                if d as i64 - i.size() as i64 * (2 * g - 1) > tau as i64 {
                    return None;
                }
            }
        }
        for (jj, (j, psi)) in self.sets.j_set.iter().zip(psis).enumerate() {
            if let Some(d) = curve.deg_h(psi) {
                if d as i64 - j.size() as i64 * m_h > tau as i64 {
                    return None;
                }
            }
            let diff = curve.sub(psi, &self.combine(curve, lambdas, jj));
            let ok = if j.size() < s {
                diff.is_zero()
            } else {
                curve.rem_poly(&diff, &gs).is_zero()
            };
            if !ok {
                return None;
            }
        }
        Some(tau)
    }
}

/// The monic element of least `deg_H` vanishing to order `s` at every
/// listed point, by solving the local-expansion constraints.
pub fn oracle_error_locator(curve: &Curve, positions: &[usize], s: usize) -> RingElement {
    if positions.is_empty() || s == 0 {
        return curve.one();
    }
    let f = curve.field();
    let bound = s * positions.len() + curve.genus();
    let monomials = curve.monomials_up_to(bound);
    let mut system = Matrix::zeros(s * positions.len(), monomials.len());
    for (k, &pos) in positions.iter().enumerate() {
        let pt = curve.points()[pos];
        for (col, &(i, j)) in monomials.iter().enumerate() {
            let series = curve.expand_at(&curve.monomial(i, j, Fe::ONE), &pt, s);
            for (d, c) in series.into_iter().enumerate() {
                system[(k * s + d, col)] = c;
            }
        }
    }
    // The first non-pivot column is the least degree admitting a kernel
    // vector, and that vector is unique once made monic.
    let mut reduced = system.clone();
    let pivots = reduced.rref(f);
    let free = (0..monomials.len())
        .find(|c| !pivots.contains(c))
        .expect("a locator exists within degree s|E| + g");
    let mut coeffs = vec![Fe::ZERO; monomials.len()];
    coeffs[free] = Fe::ONE;
    for (row, &pc) in pivots.iter().enumerate() {
        if pc < free {
            coeffs[pc] = f.neg(reduced[(row, free)]);
        }
    }
    curve.from_monomials(&monomials, &coeffs)
}

/// `Omega_{s,i} = Lambda_s (f - R)^i / G^{|i|}`, `None` if not divisible.
pub fn oracle_omega(
    curve: &Curve,
    lambda: &RingElement,
    f: &[RingElement],
    r: &[RingElement],
    i: &MultiIndex,
) -> Option<RingElement> {
    let field = curve.field();
    let mut prod = lambda.clone();
    for ((fk, rk), &e) in f.iter().zip(r).zip(&i.0) {
        let d = curve.sub(fk, rk);
        prod = curve.mul(&prod, &curve.pow(&d, e));
    }
    let g = g_poly(field, curve.q());
    curve.divide_by_poly(&prod, &g.pow(field, i.size()))
}

/// The solution `(Omega_{s,i}, Lambda_s f^j)` built from the true messages.
pub fn oracle_solution(
    curve: &Curve,
    system: &KeyEqSystem,
    lambda: &RingElement,
    f: &[RingElement],
) -> Option<(Vec<RingElement>, Vec<RingElement>)> {
    let omegas = system
        .sets
        .i_set
        .iter()
        .map(|i| oracle_omega(curve, lambda, f, &system.r, i))
        .collect::<Option<Vec<_>>>()?;
    let f_powers = multi_powers(curve, f, system.ell());
    let psis = system
        .sets
        .j_set
        .iter()
        .map(|j| curve.mul(lambda, &f_powers[j]))
        .collect();
    Some((omegas, psis))
}
