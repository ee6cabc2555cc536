//! The Hermitian curve `Y^q + Y = X^{q+1}` over `F_{q^2}` and its coordinate
//! ring `R = F_{q^2}[X, Y] / (Y^q + Y - X^{q+1})`.
//!
//! Ring elements are stored in vector representation: `a = sum a_i(X) Y^i`
//! for `i < q`, one univariate polynomial per power of `Y`. The order
//! function is `deg_H(X^i Y^j) = i q + j (q + 1)`, which is injective on the
//! monomial basis because `j < q`.

use alloc::vec;
use alloc::vec::Vec;

use crate::gf::{binomial_mod_p, Fe, Field};
use crate::linalg::Matrix;
use crate::poly::{Poly, PolyMatrix};

/// An affine rational point `(alpha, beta)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Point {
    pub x: Fe,
    pub y: Fe,
}

/// An element of `R` in vector representation.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct RingElement {
    comps: Vec<Poly>,
}

impl RingElement {
    pub fn zero(q: usize) -> Self {
        RingElement {
            comps: vec![Poly::zero(); q],
        }
    }

    /// Builds an element from its `Y`-components; missing components are zero.
    pub fn from_components(q: usize, mut comps: Vec<Poly>) -> Self {
        assert!(comps.len() <= q, "more than q components");
        comps.resize(q, Poly::zero());
        RingElement { comps }
    }

    /// Embeds a polynomial in `X` alone.
    pub fn from_poly(q: usize, p: Poly) -> Self {
        RingElement::from_components(q, vec![p])
    }

    pub fn components(&self) -> &[Poly] {
        &self.comps
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.comps[i]
    }

    pub fn is_zero(&self) -> bool {
        self.comps.iter().all(Poly::is_zero)
    }

    /// Coefficient of `X^i Y^j`.
    pub fn coeff(&self, i: usize, j: usize) -> Fe {
        self.comps[j].coeff(i)
    }
}

/// Power series of `Y` around an affine point in the local parameter
/// `t = X - alpha`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LocalExpansion {
    pub point: Point,
    pub precision: usize,
    pub series: Vec<Fe>,
}

#[derive(Clone, Debug)]
pub struct Curve {
    field: Field,
    q: usize,
    n: usize,
    genus: usize,
    points: Vec<Point>,
}

impl Curve {
    /// Enumerates the `q^3` affine points: `alpha` in field order, and for each
    /// `alpha` the `q` roots `beta` in field order.
    pub fn new(field: Field) -> Self {
        let q = field.q() as usize;
        let mut points = Vec::with_capacity(q * q * q);
        for alpha in field.elements() {
            let roots = field
                .artin_schreier_roots(alpha)
                .expect("a correctly built field has q roots per fiber");
            points.extend(roots.into_iter().map(|beta| Point { x: alpha, y: beta }));
        }
        Curve {
            field,
            q,
            n: q * q * q,
            genus: q * (q - 1) / 2,
            points,
        }
    }

    #[inline]
    pub fn field(&self) -> &Field {
        &self.field
    }

    #[inline]
    pub fn q(&self) -> usize {
        self.q
    }

    /// Number of affine points, `q^3`.
    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn genus(&self) -> usize {
        self.genus
    }

    pub fn points(&self) -> &[Point] {
        &self.points
    }

    // ---- monomials ----

    /// `deg_H(X^i Y^j)`.
    #[inline]
    pub fn monomial_degree(&self, i: usize, j: usize) -> usize {
        i * self.q + j * (self.q + 1)
    }

    /// The unique monomial `X^i Y^j` (`j < q`) of order `d`, if `d` is not a gap.
    pub fn monomial_of_degree(&self, d: usize) -> Option<(usize, usize)> {
        let q = self.q;
        let j = d % q;
        let used = j * (q + 1);
        (used <= d).then(|| ((d - used) / q, j))
    }

    /// All monomials with `deg_H <= bound`, ascending in `deg_H`.
    pub fn monomials_up_to(&self, bound: usize) -> Vec<(usize, usize)> {
        (0..=bound)
            .filter_map(|d| self.monomial_of_degree(d))
            .collect()
    }

    /// All monomials with `deg_H < bound`, ascending in `deg_H`.
    pub fn monomials_below(&self, bound: usize) -> Vec<(usize, usize)> {
        (0..bound)
            .filter_map(|d| self.monomial_of_degree(d))
            .collect()
    }

    // ---- ring arithmetic ----

    pub fn zero(&self) -> RingElement {
        RingElement::zero(self.q)
    }

    pub fn one(&self) -> RingElement {
        RingElement::from_poly(self.q, Poly::one())
    }

    /// `c X^i Y^j` with `j < q`.
    pub fn monomial(&self, i: usize, j: usize, c: Fe) -> RingElement {
        assert!(j < self.q, "Y exponent must be below q");
        let mut a = self.zero();
        a.comps[j] = Poly::monomial(c, i);
        a
    }

    pub fn from_poly(&self, p: Poly) -> RingElement {
        RingElement::from_poly(self.q, p)
    }

    /// Element with the given coefficients on the given monomials.
    pub fn from_monomials(&self, monomials: &[(usize, usize)], coeffs: &[Fe]) -> RingElement {
        let mut comps = vec![Vec::new(); self.q];
        for (&(i, j), &c) in monomials.iter().zip(coeffs) {
            let comp: &mut Vec<Fe> = &mut comps[j];
            if comp.len() <= i {
                comp.resize(i + 1, Fe::ZERO);
            }
            comp[i] = self.field.add(comp[i], c);
        }
        RingElement {
            comps: comps.into_iter().map(Poly::from_coeffs).collect(),
        }
    }

    /// `deg_H(a)`; `None` stands for `-infinity`.
    pub fn deg_h(&self, a: &RingElement) -> Option<usize> {
        a.comps
            .iter()
            .enumerate()
            .filter_map(|(j, c)| c.deg().map(|d| self.monomial_degree(d, j)))
            .max()
    }

    /// Coefficient of the monomial of largest `deg_H` (zero for `a = 0`).
    pub fn leading_coeff(&self, a: &RingElement) -> Fe {
        let Some(d) = self.deg_h(a) else {
            return Fe::ZERO;
        };
        let (i, j) = self
            .monomial_of_degree(d)
            .expect("degree of a nonzero element is attained");
        a.coeff(i, j)
    }

    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            comps: a
                .comps
                .iter()
                .zip(&b.comps)
                .map(|(x, y)| x.add(&self.field, y))
                .collect(),
        }
    }

    pub fn sub(&self, a: &RingElement, b: &RingElement) -> RingElement {
        RingElement {
            comps: a
                .comps
                .iter()
                .zip(&b.comps)
                .map(|(x, y)| x.sub(&self.field, y))
                .collect(),
        }
    }

    pub fn neg(&self, a: &RingElement) -> RingElement {
        RingElement {
            comps: a.comps.iter().map(|x| x.neg(&self.field)).collect(),
        }
    }

    pub fn scale(&self, a: &RingElement, c: Fe) -> RingElement {
        RingElement {
            comps: a.comps.iter().map(|x| x.scale(&self.field, c)).collect(),
        }
    }

    /// Product with a polynomial in `X`.
    pub fn mul_poly(&self, a: &RingElement, u: &Poly) -> RingElement {
        RingElement {
            comps: a.comps.iter().map(|x| x.mul(&self.field, u)).collect(),
        }
    }

    /// `Y * a`.
    pub fn mul_y(&self, a: &RingElement) -> RingElement {
        let f = &self.field;
        let q = self.q;
        let mut comps = Vec::with_capacity(q);
        comps.push(Poly::zero());
        comps.extend(a.comps[..q - 1].iter().cloned());
        // Y^q = X^{q+1} - Y.
        let top = &a.comps[q - 1];
        comps[0].add_assign(f, &top.shift(q + 1));
        comps[1].sub_assign(f, top);
        RingElement { comps }
    }

    /// Product in `R`: multiply as polynomials in `Y`, then fold `Y^k` for
    /// `k >= q` back with `Y^q = X^{q+1} - Y`.
    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let f = &self.field;
        let q = self.q;
        let mut full = vec![Poly::zero(); 2 * q - 1];
        for (i, ai) in a.comps.iter().enumerate() {
            if ai.is_zero() {
                continue;
            }
            for (j, bj) in b.comps.iter().enumerate() {
                if !bj.is_zero() {
                    let prod = ai.mul(f, bj);
                    full[i + j].add_assign(f, &prod);
                }
            }
        }
        for k in (q..2 * q - 1).rev() {
            let c = core::mem::take(&mut full[k]);
            if c.is_zero() {
                continue;
            }
            full[k - q].add_assign(f, &c.shift(q + 1));
            full[k - q + 1].sub_assign(f, &c);
        }
        full.truncate(q);
        RingElement { comps: full }
    }

    pub fn pow(&self, a: &RingElement, k: usize) -> RingElement {
        let mut acc = self.one();
        for _ in 0..k {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// The `q x (2q-1)` banded matrix `mu(b)`: row `r` holds `b_0, ..., b_{q-1}`
    /// starting at column `r`.
    pub fn mu_matrix(&self, b: &RingElement) -> PolyMatrix {
        let q = self.q;
        let mut m = PolyMatrix::zeros(q, 2 * q - 1);
        for r in 0..q {
            for (k, bk) in b.comps.iter().enumerate() {
                m[(r, r + k)] = bk.clone();
            }
        }
        m
    }

    /// The `(2q-1) x q` folding matrix: identity on top, then rows with
    /// `X^{q+1}` on the diagonal and `-1` just right of it.
    pub fn xi_matrix(&self) -> PolyMatrix {
        let q = self.q;
        let f = &self.field;
        let mut m = PolyMatrix::zeros(2 * q - 1, q);
        for r in 0..q {
            m[(r, r)] = Poly::one();
        }
        for r in 0..q - 1 {
            m[(q + r, r)] = Poly::monomial(Fe::ONE, q + 1);
            m[(q + r, r + 1)] = Poly::constant(f.neg(Fe::ONE));
        }
        m
    }

    /// Product computed as `nu(a) * mu(b) * Xi`.
    pub fn mul_via_matrices(&self, a: &RingElement, b: &RingElement) -> RingElement {
        let f = &self.field;
        let nu_a = PolyMatrix::from_rows(vec![a.comps.clone()]);
        let prod = nu_a.mul(f, &self.mu_matrix(b)).mul(f, &self.xi_matrix());
        RingElement {
            comps: prod.row(0).to_vec(),
        }
    }

    /// Componentwise remainder modulo a polynomial in `X`.
    pub fn rem_poly(&self, a: &RingElement, m: &Poly) -> RingElement {
        RingElement {
            comps: a
                .comps
                .iter()
                .map(|c| c.rem(&self.field, m).expect("nonzero modulus"))
                .collect(),
        }
    }

    /// Componentwise exact division by `u` in `F[X]`.
    pub fn divide_by_poly(&self, a: &RingElement, u: &Poly) -> Option<RingElement> {
        let comps = a
            .comps
            .iter()
            .map(|c| c.div_exact(&self.field, u))
            .collect::<Option<Vec<_>>>()?;
        Some(RingElement { comps })
    }

    /// `f` with `b f = a`, or `None` when `b` does not divide `a`.
    ///
    /// Solves for the coefficients of `f` over the monomials of order at most
    /// `deg_H a - deg_H b`, then checks the product.
    pub fn exact_divide(&self, a: &RingElement, b: &RingElement) -> Option<RingElement> {
        let db = self.deg_h(b)?;
        let Some(da) = self.deg_h(a) else {
            return Some(self.zero());
        };
        if da < db {
            return None;
        }
        let unknowns = self.monomials_up_to(da - db);
        let coords = self.monomials_up_to(da);
        let mut slot = vec![usize::MAX; da + 1];
        for (k, &(i, j)) in coords.iter().enumerate() {
            slot[self.monomial_degree(i, j)] = k;
        }
        let to_vector = |e: &RingElement| -> Option<Vec<Fe>> {
            let mut v = vec![Fe::ZERO; coords.len()];
            for (j, comp) in e.comps.iter().enumerate() {
                for (i, &c) in comp.coeffs().iter().enumerate() {
                    if c.is_zero() {
                        continue;
                    }
                    let d = self.monomial_degree(i, j);
                    if d > da {
                        return None;
                    }
                    v[slot[d]] = c;
                }
            }
            Some(v)
        };

        // Y^j b for every j, then X^i Y^j b is a shift of the components.
        let mut y_powers = vec![b.clone()];
        for _ in 1..self.q {
            let next = self.mul_y(y_powers.last().expect("nonempty"));
            y_powers.push(next);
        }
        let mut system = Matrix::zeros(coords.len(), unknowns.len());
        for (col, &(i, j)) in unknowns.iter().enumerate() {
            let prod = RingElement {
                comps: y_powers[j].comps.iter().map(|c| c.shift(i)).collect(),
            };
            let v = to_vector(&prod).expect("product degree bounded by deg_H a");
            for (row, &x) in v.iter().enumerate() {
                system[(row, col)] = x;
            }
        }
        let rhs = to_vector(a)?;
        let sol = system.solve(&self.field, &rhs)?;
        let quotient = self.from_monomials(&unknowns, &sol);
        (self.mul(b, &quotient) == *a).then_some(quotient)
    }

    // ---- evaluation and local behaviour ----

    pub fn evaluate(&self, a: &RingElement, pt: &Point) -> Fe {
        let f = &self.field;
        a.comps
            .iter()
            .rev()
            .fold(Fe::ZERO, |acc, c| f.add(f.mul(acc, pt.y), c.eval(f, pt.x)))
    }

    /// Expansion of `Y` at `pt` in `t = X - alpha`, to `precision` terms.
    ///
    /// Coefficients come from comparing `t^k` in
    /// `beta(t)^q + beta(t) = (alpha + t)^{q+1}`; in characteristic `p` the
    /// left side is `sum b_k^q t^{kq} + sum b_k t^k`.
    pub fn local_expansion(&self, pt: &Point, precision: usize) -> LocalExpansion {
        let f = &self.field;
        let q = self.q;
        let mut series = Vec::with_capacity(precision);
        for k in 0..precision {
            let b = if k == 0 {
                pt.y
            } else {
                let binom = binomial_mod_p((q + 1) as u64, k as u64, f.p());
                let mut rhs = if binom == 0 || k > q + 1 {
                    Fe::ZERO
                } else {
                    f.mul(f.from_int(binom as i64), f.pow(pt.x, (q + 1 - k) as u64))
                };
                if k % q == 0 {
                    rhs = f.sub(rhs, f.frobenius_q(series[k / q]));
                }
                rhs
            };
            series.push(b);
        }
        LocalExpansion {
            point: *pt,
            precision,
            series,
        }
    }

    /// Order of vanishing of `a` at `pt`, capped at `cap`.
    pub fn valuation_at(&self, a: &RingElement, pt: &Point, cap: usize) -> usize {
        assert!(cap >= 1);
        let series = self.expand_at(a, pt, cap);
        series.iter().position(|c| !c.is_zero()).unwrap_or(cap)
    }

    /// `a(alpha + t, beta(t)) mod t^precision`.
    pub fn expand_at(&self, a: &RingElement, pt: &Point, precision: usize) -> Vec<Fe> {
        let f = &self.field;
        let beta = self.local_expansion(pt, precision).series;
        let mut acc = vec![Fe::ZERO; precision];
        let mut y_pow = vec![Fe::ZERO; precision];
        y_pow[0] = Fe::ONE;
        for (j, comp) in a.comps.iter().enumerate() {
            if j > 0 {
                y_pow = series_mul(f, &y_pow, &beta, precision);
            }
            if comp.is_zero() {
                continue;
            }
            let shifted = comp.taylor_shift(f, pt.x);
            let term = series_mul(f, shifted.coeffs(), &y_pow, precision);
            for (x, t) in acc.iter_mut().zip(term) {
                *x = f.add(*x, t);
            }
        }
        acc
    }
}

/// Product of two power series truncated to `n` terms.
pub(crate) fn series_mul(f: &Field, a: &[Fe], b: &[Fe], n: usize) -> Vec<Fe> {
    let mut out = vec![Fe::ZERO; n];
    for (i, &x) in a.iter().enumerate().take(n) {
        if x.is_zero() {
            continue;
        }
        for (j, &y) in b.iter().enumerate().take(n - i) {
            out[i + j] = f.add(out[i + j], f.mul(x, y));
        }
    }
    out
}
