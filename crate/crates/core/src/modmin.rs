//! The `F_{q^2}[X]`-module whose short vectors solve the linearised key
//! equations, its weighted weak Popov reduction, and solution extraction.

use alloc::vec;
use alloc::vec::Vec;

use crate::code::Code;
use crate::gf::{Fe, Field};
use crate::hermitian::RingElement;
use crate::keyeq::KeyEqSystem;
use crate::poly::{Poly, PolyMatrix};

/// Column weights: entry `p` in column `c` has weighted degree
/// `scale * deg p + shifts[c]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WeightVector {
    pub scale: i64,
    pub shifts: Vec<i64>,
}

impl WeightVector {
    pub fn uniform(cols: usize) -> Self {
        WeightVector {
            scale: 1,
            shifts: vec![0; cols],
        }
    }

    pub fn degree(&self, col: usize, p: &Poly) -> Option<i64> {
        p.deg().map(|d| self.scale * d as i64 + self.shifts[col])
    }

    /// Leading position and weighted degree of a row; ties go to the lowest
    /// column.
    pub fn leading(&self, row: &[Poly]) -> Option<(usize, i64)> {
        let mut best: Option<(usize, i64)> = None;
        for (c, p) in row.iter().enumerate() {
            if let Some(d) = self.degree(c, p) {
                if best.is_none_or(|(_, bd)| d > bd) {
                    best = Some((c, d));
                }
            }
        }
        best
    }

    /// `true` if the nonzero rows have pairwise distinct leading positions.
    pub fn is_weak_popov(&self, m: &PolyMatrix) -> bool {
        let mut seen = vec![false; m.cols()];
        for r in 0..m.rows() {
            if let Some((c, _)) = self.leading(m.row(r)) {
                if core::mem::replace(&mut seen[c], true) {
                    return false;
                }
            }
        }
        true
    }
}

/// Column layout: a block of `q` `lambda` columns per `i in I` (`i = 0`
/// first), then a block of `q` `psi` columns per `j in J`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SolutionLayout {
    pub q: usize,
    pub i_count: usize,
    pub j_count: usize,
    /// The shift subtracted from every raw weight to make them non-negative.
    pub offset: i64,
    pub weights: WeightVector,
}

impl SolutionLayout {
    pub fn new(code: &Code, system: &KeyEqSystem) -> Self {
        let q = code.q();
        let qi = q as i64;
        let g = code.genus() as i64;
        let m_h = code.m_h() as i64;
        let mut raw = Vec::new();
        for i in &system.sets.i_set {
            raw.extend((0..qi).map(|iota| iota * (qi + 1) - i.size() as i64 * (2 * g - 1)));
        }
        for j in &system.sets.j_set {
            raw.extend((0..qi).map(|kappa| kappa * (qi + 1) - j.size() as i64 * m_h));
        }
        let offset = -raw.iter().copied().min().unwrap_or(0);
        let shifts = raw.into_iter().map(|w| w + offset).collect();
        SolutionLayout {
            q,
            i_count: system.sets.i_set.len(),
            j_count: system.sets.j_set.len(),
            offset,
            weights: WeightVector { scale: qi, shifts },
        }
    }

    pub fn cols(&self) -> usize {
        (self.i_count + self.j_count) * self.q
    }

    pub fn lambda_col(&self, ii: usize, iota: usize) -> usize {
        ii * self.q + iota
    }

    pub fn psi_col(&self, jj: usize, kappa: usize) -> usize {
        (self.i_count + jj) * self.q + kappa
    }
}

/// Builds the basis: one row per `(i, iota)` carrying the unit vector on
/// `lambda_{i,iota}` and `nu(Y^iota A_{i,j})` on the `psi_j` blocks, plus
/// `G^s` on each `psi_{j,kappa}` column with `|j| >= s`.
pub fn build_module_basis(code: &Code, system: &KeyEqSystem) -> (PolyMatrix, SolutionLayout) {
    let curve = code.curve();
    let f = curve.field();
    let q = code.q();
    let s = system.s();
    let layout = SolutionLayout::new(code, system);
    let gs = system.g.pow(f, s);
    let congruent: Vec<bool> = system.sets.j_set.iter().map(|j| j.size() >= s).collect();
    let bottom = congruent.iter().filter(|&&c| c).count() * q;
    let mut m = PolyMatrix::zeros(layout.i_count * q + bottom, layout.cols());

    for ii in 0..layout.i_count {
        // Current Y^iota A_{i,j} for every j.
        let mut entries: Vec<Option<RingElement>> = system.a[ii]
            .iter()
            .zip(&congruent)
            .map(|(a, &c)| {
                a.as_ref()
                    .map(|a| if c { curve.rem_poly(a, &gs) } else { a.clone() })
            })
            .collect();
        for iota in 0..q {
            let r = ii * q + iota;
            m.row_mut(r)[layout.lambda_col(ii, iota)] = Poly::one();
            for (jj, entry) in entries.iter_mut().enumerate() {
                let Some(e) = entry else { continue };
                if iota > 0 {
                    let shifted = curve.mul_y(e);
                    *e = if congruent[jj] {
                        curve.rem_poly(&shifted, &gs)
                    } else {
                        shifted
                    };
                }
                for (kappa, comp) in e.components().iter().enumerate() {
                    m.row_mut(r)[layout.psi_col(jj, kappa)] = comp.clone();
                }
            }
        }
    }
    let mut r = layout.i_count * q;
    for (jj, _) in congruent.iter().enumerate().filter(|(_, &c)| c) {
        for kappa in 0..q {
            m.row_mut(r)[layout.psi_col(jj, kappa)] = gs.clone();
            r += 1;
        }
    }
    (m, layout)
}

/// Mulders–Storjohann: repeatedly cancel the leading term of one row
/// against another row with the same leading position.
///
/// Returns the reduced matrix and, if requested, the transformation `U`
/// with `U * input = output`.
pub fn weak_popov_reduce(
    f: &Field,
    mut m: PolyMatrix,
    w: &WeightVector,
    track: bool,
) -> (PolyMatrix, Option<PolyMatrix>) {
    let rows = m.rows();
    let mut u = track.then(|| PolyMatrix::identity(rows));
    let mut owner: Vec<Option<usize>> = vec![None; m.cols()];
    let mut pending: Vec<usize> = (0..rows).rev().collect();
    while let Some(r) = pending.pop() {
        while let Some((c, d)) = w.leading(m.row(r)) {
            let Some(o) = owner[c] else {
                owner[c] = Some(r);
                break;
            };
            let (_, od) = w.leading(m.row(o)).expect("owner rows are nonzero");
            // Reduce the row of larger degree by the other one; if that is
            // the owner, the current row takes over the position.
            let (hi, lo, shift) = if d >= od {
                (r, o, d - od)
            } else {
                (o, r, od - d)
            };
            debug_assert_eq!(shift % w.scale, 0);
            let x_shift = (shift / w.scale) as usize;
            let factor = f.neg(
                f.div(m.row(hi)[c].lc(), m.row(lo)[c].lc())
                    .expect("nonzero lc"),
            );
            add_multiple(f, &mut m, hi, lo, factor, x_shift);
            if let Some(u) = u.as_mut() {
                add_multiple(f, u, hi, lo, factor, x_shift);
            }
            if hi == o {
                owner[c] = Some(r);
                pending.push(o);
                break;
            }
        }
    }
    (m, u)
}

/// `row[target] += c X^shift row[source]`.
fn add_multiple(f: &Field, m: &mut PolyMatrix, target: usize, source: usize, c: Fe, shift: usize) {
    let (t, s) = m.row_pair(target, source);
    for (a, b) in t.iter_mut().zip(s) {
        if !b.is_zero() {
            a.add_scaled_shifted(f, c, shift, b);
        }
    }
}

/// A solution read off a reduced basis.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinimalSolution {
    pub lambdas: Vec<RingElement>,
    pub psis: Vec<RingElement>,
    pub tau: usize,
}

/// Among rows leading in the `lambda_0` block, the one of least weighted
/// degree, made monic. `None` if no row leads there.
pub fn extract_minimal_solution(
    f: &Field,
    reduced: &PolyMatrix,
    layout: &SolutionLayout,
) -> Option<MinimalSolution> {
    let q = layout.q;
    let row = (0..reduced.rows())
        .filter_map(|r| {
            let (c, d) = layout.weights.leading(reduced.row(r))?;
            (c < q).then_some((d, r))
        })
        .min()?
        .1;
    let entries = reduced.row(row);
    let block = |b: usize| RingElement::from_components(q, entries[b * q..(b + 1) * q].to_vec());
    let lambda0 = block(0);
    let (tau, lc) = lambda0
        .components()
        .iter()
        .enumerate()
        .filter_map(|(iota, c)| c.deg().map(|d| (q * d + iota * (q + 1), c.lc())))
        .max_by_key(|&(d, _)| d)?;
    let inv = f.inv(lc).expect("nonzero");
    let scale = |e: RingElement| {
        RingElement::from_components(q, e.components().iter().map(|c| c.scale(f, inv)).collect())
    };
    let lambdas = (0..layout.i_count).map(|b| scale(block(b))).collect();
    let psis = (0..layout.j_count)
        .map(|b| scale(block(layout.i_count + b)))
        .collect();
    Some(MinimalSolution { lambdas, psis, tau })
}

/// Builds, reduces and extracts in one go.
pub fn minimal_solution(code: &Code, system: &KeyEqSystem) -> Option<MinimalSolution> {
    let (m, layout) = build_module_basis(code, system);
    let f = code.field();
    let (reduced, _) = weak_popov_reduce(f, m, &layout.weights, false);
    extract_minimal_solution(f, &reduced, &layout)
}
