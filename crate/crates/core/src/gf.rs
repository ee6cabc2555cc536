//! Arithmetic in `F_{q^2}` for `q = p^e`.
//!
//! Elements are stored as their coefficient vector over `F_p` with respect to
//! the power basis `1, Z, ..., Z^{2e-1}`, packed little-endian into an integer
//! index `c_0 + c_1 p + c_2 p^2 + ...`. The packed index doubles as the
//! enumeration order of the field, and the prime subfield occupies indices
//! `0..p`.
//!
//! Multiplication goes through discrete log tables built once at
//! construction; [`Field::mul_reference`] and [`Field::inv_euclid`] compute the
//! same values directly on representative polynomials.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::Error;

/// Largest `q` accepted by [`Field::new`] without the override.
pub const DESK_SCALE_MAX_Q: u32 = 16;

/// A field element, identified by its packed coefficient index.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Fe(pub(crate) u16);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);

    #[inline]
    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    /// Packed index of the element (its position in enumeration order).
    #[inline]
    pub fn index(self) -> usize {
        self.0 as usize
    }
}

impl fmt::Debug for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Fe({})", self.0)
    }
}

/// `F_{q^2} = F_p[Z]/(m(Z))` together with its lookup tables.
#[derive(Clone)]
pub struct Field {
    p: u32,
    e: u32,
    q: u32,
    order: u32,
    /// Monic modulus of degree `2e`, little-endian, leading 1 included.
    modulus: Vec<u32>,
    exp: Vec<Fe>,
    log: Vec<u32>,
    /// Full addition table, only for odd characteristic and small fields.
    add_table: Option<Vec<u16>>,
    neg_table: Vec<u16>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("e", &self.e)
            .field("modulus", &self.modulus)
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.e == other.e && self.modulus == other.modulus
    }
}

impl Eq for Field {}

pub(crate) fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u32;
    while d.saturating_mul(d) <= n {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// `binom(n, k) mod p` by Lucas' theorem.
pub fn binomial_mod_p(mut n: u64, mut k: u64, p: u32) -> u32 {
    let p = p as u64;
    let mut acc = 1u64;
    while k > 0 {
        let (nd, kd) = (n % p, k % p);
        if kd > nd {
            return 0;
        }
        // Small binomial of digits, computed exactly.
        let mut b = 1u64;
        for i in 0..kd {
            b = b * (nd - i) / (i + 1);
        }
        acc = acc * (b % p) % p;
        n /= p;
        k /= p;
    }
    acc as u32
}

/// Splits a prime power into `(p, e)`.
pub fn prime_power(q: u32) -> Option<(u32, u32)> {
    if q < 2 {
        return None;
    }
    let mut p = 2;
    while !q.is_multiple_of(p) {
        p += 1;
    }
    let (mut rest, mut e) = (q, 0);
    while rest % p == 0 {
        rest /= p;
        e += 1;
    }
    (rest == 1).then_some((p, e))
}

// ---- polynomials over F_p, little-endian, trailing zeros trimmed ----

fn fp_trim(a: &mut Vec<u32>) {
    while a.last() == Some(&0) {
        a.pop();
    }
}

fn fp_inv(a: u32, p: u32) -> u32 {
    // Fermat; p is small.
    let mut r = 1u64;
    let mut b = a as u64 % p as u64;
    let mut k = p - 2;
    while k > 0 {
        if k & 1 == 1 {
            r = r * b % p as u64;
        }
        b = b * b % p as u64;
        k >>= 1;
    }
    r as u32
}

fn fp_rem(a: &[u32], m: &[u32], p: u32) -> Vec<u32> {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let dm = m.len() - 1;
    let inv_lead = fp_inv(m[dm], p);
    while r.len() > dm {
        let shift = r.len() - 1 - dm;
        let c = r[r.len() - 1] * inv_lead % p;
        for (k, &mk) in m.iter().enumerate() {
            let idx = shift + k;
            r[idx] = (r[idx] + p - c * mk % p) % p;
        }
        fp_trim(&mut r);
    }
    r
}

fn fp_mul(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u32; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x * y) % p;
        }
    }
    fp_trim(&mut out);
    out
}

fn fp_sub(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = vec![0u32; a.len().max(b.len())];
    for (k, o) in out.iter_mut().enumerate() {
        let x = a.get(k).copied().unwrap_or(0);
        let y = b.get(k).copied().unwrap_or(0);
        *o = (x + p - y) % p;
    }
    fp_trim(&mut out);
    out
}

fn fp_divrem(a: &[u32], b: &[u32], p: u32) -> (Vec<u32>, Vec<u32>) {
    let mut r = a.to_vec();
    fp_trim(&mut r);
    let db = b.len() - 1;
    if r.len() <= db {
        return (Vec::new(), r);
    }
    let mut quot = vec![0u32; r.len() - db];
    let inv_lead = fp_inv(b[db], p);
    while r.len() > db {
        let shift = r.len() - 1 - db;
        let c = r[r.len() - 1] * inv_lead % p;
        quot[shift] = c;
        for (k, &bk) in b.iter().enumerate() {
            let idx = shift + k;
            r[idx] = (r[idx] + p - c * bk % p) % p;
        }
        fp_trim(&mut r);
    }
    fp_trim(&mut quot);
    (quot, r)
}

/// Digits of `idx` in base `p`, `len` of them.
fn digits(mut idx: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0u32; len];
    for d in out.iter_mut() {
        *d = idx % p;
        idx /= p;
    }
    out
}

fn pack(coeffs: &[u32], p: u32) -> u32 {
    coeffs.iter().rev().fold(0u32, |acc, &c| acc * p + c % p)
}

/// Irreducibility by trial division against every monic polynomial of degree
/// `1..=deg/2`.
fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let deg = poly.len() - 1;
    for d in 1..=deg / 2 {
        let count = p.pow(d as u32);
        for low in 0..count {
            let mut divisor = digits(low, p, d);
            divisor.push(1);
            if fp_rem(poly, &divisor, p).is_empty() {
                return false;
            }
        }
    }
    true
}

/// Smallest monic irreducible of the given degree, ordered by the packed
/// index of its non-leading coefficients.
fn smallest_irreducible(p: u32, degree: usize) -> Option<Vec<u32>> {
    let count = (p as u64).pow(degree as u32);
    (0..count).find_map(|low| {
        let mut poly = digits(low as u32, p, degree);
        poly.push(1);
        is_irreducible(&poly, p).then_some(poly)
    })
}

impl Field {
    /// Builds `F_{q^2}` for `q = p^e`, subject to the desk-scale guard `q <= 16`.
    pub fn new(p: u32, e: u32) -> Result<Self, Error> {
        Self::build(p, e, false)
    }

    /// As [`Field::new`] but without the desk-scale guard. Tables are sized
    /// `q^2`, so this still refuses `q^2 > 65536`.
    pub fn new_unbounded(p: u32, e: u32) -> Result<Self, Error> {
        Self::build(p, e, true)
    }

    /// Builds the field for a prime power `q`.
    pub fn for_q(q: u32) -> Result<Self, Error> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Self::new(p, e)
    }

    fn build(p: u32, e: u32, unbounded: bool) -> Result<Self, Error> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidParams(
                "extension degree e must be positive".into(),
            ));
        }
        let q = p
            .checked_pow(e)
            .ok_or(Error::FieldTooLarge { q: u32::MAX })?;
        if (!unbounded && q > DESK_SCALE_MAX_Q) || q > 256 {
            return Err(Error::FieldTooLarge { q });
        }
        let order = q * q;
        let degree = 2 * e as usize;
        let modulus = smallest_irreducible(p, degree).ok_or(Error::NoIrreducible(degree as u32))?;

        let mut field = Field {
            p,
            e,
            q,
            order,
            modulus,
            exp: Vec::new(),
            log: Vec::new(),
            add_table: None,
            neg_table: Vec::new(),
        };
        field.neg_table = (0..order)
            .map(|a| {
                let c: Vec<u32> = digits(a, p, degree).iter().map(|&x| (p - x) % p).collect();
                pack(&c, p) as u16
            })
            .collect();
        if p != 2 && order <= 256 {
            let mut table = vec![0u16; (order * order) as usize];
            for a in 0..order {
                for b in 0..order {
                    table[(a * order + b) as usize] = field.add_digitwise(a, b) as u16;
                }
            }
            field.add_table = Some(table);
        }
        field.build_log_tables();
        Ok(field)
    }

    fn build_log_tables(&mut self) {
        let group = self.order - 1;
        // Smallest primitive element in enumeration order.
        let generator = (1..self.order)
            .find(|&cand| {
                let g = Fe(cand as u16);
                let mut x = g;
                let mut ord = 1u32;
                while x != Fe::ONE {
                    x = self.mul_reference(x, g);
                    ord += 1;
                }
                ord == group
            })
            .expect("multiplicative group of a finite field is cyclic");
        let g = Fe(generator as u16);
        let mut exp = Vec::with_capacity(2 * group as usize);
        let mut log = vec![0u32; self.order as usize];
        let mut x = Fe::ONE;
        for k in 0..group {
            exp.push(x);
            log[x.index()] = k;
            x = self.mul_reference(x, g);
        }
        for k in 0..group as usize {
            exp.push(exp[k]);
        }
        self.exp = exp;
        self.log = log;
    }

    fn add_digitwise(&self, a: u32, b: u32) -> u32 {
        let (mut a, mut b) = (a, b);
        let mut out = 0u32;
        let mut place = 1u32;
        for _ in 0..2 * self.e {
            out += ((a % self.p + b % self.p) % self.p) * place;
            a /= self.p;
            b /= self.p;
            place *= self.p;
        }
        out
    }

    #[inline]
    pub fn p(&self) -> u32 {
        self.p
    }

    #[inline]
    pub fn e(&self) -> u32 {
        self.e
    }

    /// `q = p^e`; the field has `q^2` elements.
    #[inline]
    pub fn q(&self) -> u32 {
        self.q
    }

    /// Number of elements, `q^2`.
    #[inline]
    pub fn order(&self) -> u32 {
        self.order
    }

    /// The defining polynomial `m(Z)` (little-endian, monic, degree `2e`).
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// All elements in enumeration order.
    pub fn elements(&self) -> impl Iterator<Item = Fe> + '_ {
        (0..self.order).map(|i| Fe(i as u16))
    }

    /// Element with packed index `idx`, if in range.
    pub fn element(&self, idx: u32) -> Option<Fe> {
        (idx < self.order).then_some(Fe(idx as u16))
    }

    pub fn from_coeffs(&self, coeffs: &[u32]) -> Result<Fe, Error> {
        if coeffs.len() != 2 * self.e as usize || coeffs.iter().any(|&c| c >= self.p) {
            return Err(Error::InvalidElement);
        }
        Ok(Fe(pack(coeffs, self.p) as u16))
    }

    pub fn coeffs(&self, a: Fe) -> Vec<u32> {
        digits(a.0 as u32, self.p, 2 * self.e as usize)
    }

    /// Image of an integer in the prime subfield.
    pub fn from_int(&self, n: i64) -> Fe {
        Fe(n.rem_euclid(self.p as i64) as u16)
    }

    #[inline]
    pub fn add(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            Fe(a.0 ^ b.0)
        } else if let Some(t) = &self.add_table {
            Fe(t[a.index() * self.order as usize + b.index()])
        } else {
            Fe(self.add_digitwise(a.0 as u32, b.0 as u32) as u16)
        }
    }

    #[inline]
    pub fn neg(&self, a: Fe) -> Fe {
        Fe(self.neg_table[a.index()])
    }

    #[inline]
    pub fn sub(&self, a: Fe, b: Fe) -> Fe {
        if self.p == 2 {
            Fe(a.0 ^ b.0)
        } else {
            self.add(a, self.neg(b))
        }
    }

    #[inline]
    pub fn mul(&self, a: Fe, b: Fe) -> Fe {
        if a.is_zero() || b.is_zero() {
            return Fe::ZERO;
        }
        self.exp[(self.log[a.index()] + self.log[b.index()]) as usize]
    }

    /// Multiplicative inverse; `None` for zero.
    #[inline]
    pub fn inv(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return None;
        }
        let group = self.order - 1;
        Some(self.exp[((group - self.log[a.index()]) % group) as usize])
    }

    pub fn div(&self, a: Fe, b: Fe) -> Option<Fe> {
        self.inv(b).map(|bi| self.mul(a, bi))
    }

    /// `a^k` by square-and-multiply.
    pub fn pow(&self, a: Fe, mut k: u64) -> Fe {
        let mut base = a;
        let mut acc = Fe::ONE;
        while k > 0 {
            if k & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            k >>= 1;
        }
        acc
    }

    /// The Frobenius map `a -> a^q`.
    pub fn frobenius_q(&self, a: Fe) -> Fe {
        self.pow(a, self.q as u64)
    }

    /// Product computed on representative polynomials, without tables.
    pub fn mul_reference(&self, a: Fe, b: Fe) -> Fe {
        let n = 2 * self.e as usize;
        let prod = fp_mul(
            &trimmed(digits(a.0 as u32, self.p, n)),
            &trimmed(digits(b.0 as u32, self.p, n)),
            self.p,
        );
        let r = fp_rem(&prod, &self.modulus, self.p);
        Fe(pack(&r, self.p) as u16)
    }

    /// Inverse via the extended Euclidean algorithm on representatives.
    pub fn inv_euclid(&self, a: Fe) -> Option<Fe> {
        if a.is_zero() {
            return None;
        }
        let p = self.p;
        let n = 2 * self.e as usize;
        let (mut r0, mut r1) = (self.modulus.clone(), trimmed(digits(a.0 as u32, p, n)));
        let (mut s0, mut s1): (Vec<u32>, Vec<u32>) = (Vec::new(), vec![1]);
        while !r1.is_empty() {
            let (quot, rem) = fp_divrem(&r0, &r1, p);
            let s2 = fp_sub(&s0, &fp_mul(&quot, &s1, p), p);
            r0 = core::mem::replace(&mut r1, rem);
            s0 = core::mem::replace(&mut s1, s2);
        }
        // r0 is a nonzero constant.
        let c = fp_inv(r0[0], p);
        let inv: Vec<u32> = s0.iter().map(|&x| x * c % p).collect();
        let mut full = inv;
        full.resize(n, 0);
        Some(Fe(pack(&full, p) as u16))
    }

    /// All `beta` with `beta^q + beta = alpha^{q+1}`.
    ///
    /// The map `beta -> beta^q + beta` is `F_p`-linear; it is written down as
    /// a `2e x 2e` matrix over `F_p`, one particular solution is found by
    /// elimination, and the `q` solutions are that solution plus the kernel.
    pub fn artin_schreier_roots(&self, alpha: Fe) -> Result<Vec<Fe>, Error> {
        let p = self.p;
        let n = 2 * self.e as usize;
        let rhs = self.pow(alpha, self.q as u64 + 1);
        // Column k is the image of the basis vector Z^k.
        let mut cols = Vec::with_capacity(n);
        for k in 0..n {
            let basis = Fe(p.pow(k as u32) as u16);
            cols.push(self.coeffs(self.add(self.frobenius_q(basis), basis)));
        }
        // Augmented matrix rows: n equations (one per output coordinate).
        let mut mat: Vec<Vec<u32>> = (0..n)
            .map(|r| {
                let mut row: Vec<u32> = (0..n).map(|c| cols[c][r]).collect();
                row.push(self.coeffs(rhs)[r]);
                row
            })
            .collect();
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..n {
            let Some(pr) = (row..n).find(|&r| mat[r][col] != 0) else {
                continue;
            };
            mat.swap(row, pr);
            let inv = fp_inv(mat[row][col], p);
            for x in mat[row].iter_mut() {
                *x = *x * inv % p;
            }
            for r in 0..n {
                if r != row && mat[r][col] != 0 {
                    let f = mat[r][col];
                    let pivot_row = mat[row].clone();
                    for (x, y) in mat[r].iter_mut().zip(&pivot_row) {
                        *x = (*x + p * p - f * y % p) % p;
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        if mat[row..].iter().any(|r| r[n] != 0) {
            return Err(Error::FieldConstruction(
                "Artin-Schreier equation has no solution",
            ));
        }
        let free: Vec<usize> = (0..n).filter(|c| !pivots.contains(c)).collect();
        let count = p.pow(free.len() as u32);
        let mut roots = Vec::with_capacity(count as usize);
        for assignment in 0..count {
            let fv = digits(assignment, p, free.len());
            let mut x = vec![0u32; n];
            for (k, &c) in free.iter().enumerate() {
                x[c] = fv[k];
            }
            for (r, &pc) in pivots.iter().enumerate() {
                let mut v = mat[r][n] as u64;
                for &c in &free {
                    v = (v + (p as u64 - mat[r][c] as u64) * x[c] as u64) % p as u64;
                }
                x[pc] = v as u32;
            }
            roots.push(Fe(pack(&x, p) as u16));
        }
        roots.sort();
        if roots.len() != self.q as usize {
            return Err(Error::FieldConstruction(
                "Artin-Schreier root count differs from q",
            ));
        }
        Ok(roots)
    }
}

fn trimmed(mut v: Vec<u32>) -> Vec<u32> {
    fp_trim(&mut v);
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn lucas_matches_integer_binomials() {
        for p in [2u32, 3, 5, 7] {
            for n in 0u64..30 {
                let mut row = vec![1u128];
                for k in 1..=n {
                    let prev = row[k as usize - 1];
                    row.push(prev * (n - k + 1) as u128 / k as u128);
                }
                for k in 0..=n + 2 {
                    let exact = row.get(k as usize).copied().unwrap_or(0);
                    assert_eq!(
                        binomial_mod_p(n, k, p) as u128,
                        exact % p as u128,
                        "n={n} k={k} p={p}"
                    );
                }
            }
        }
    }

    #[test]
    fn f4_modulus() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.order(), 4);
    }

    #[test]
    fn f169_modulus_by_scan() {
        let f = Field::new(13, 1).unwrap();
        // Oracle: first monic quadratic Z^2 + c1 Z + c0 (ordered by c0 + 13 c1)
        // without a root in F_13.
        let expected = (0..169u32)
            .map(|low| (low % 13, low / 13))
            .find(|&(c0, c1)| (0..13u32).all(|z| (z * z + c1 * z + c0) % 13 != 0))
            .unwrap();
        assert_eq!(expected, (2, 0));
        assert_eq!(f.modulus(), &[2, 0, 1]);
    }

    #[test]
    fn f16_modulus() {
        let f = Field::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 0, 0, 1]);
    }

    #[test]
    fn rejects_bad_input() {
        assert_eq!(Field::new(4, 1), Err(Error::NotPrime(4)));
        assert!(matches!(
            Field::new(2, 5),
            Err(Error::FieldTooLarge { q: 32 })
        ));
        assert!(Field::new_unbounded(2, 5).is_ok());
        assert!(Field::for_q(6).is_err());
    }

    #[test]
    fn tables_agree_with_reference() {
        for (p, e) in [(2, 1), (3, 1), (2, 2), (5, 1), (3, 2)] {
            let f = Field::new(p, e).unwrap();
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.mul(a, b), f.mul_reference(a, b));
                }
                assert_eq!(f.inv(a), f.inv_euclid(a));
            }
        }
    }

    #[test]
    fn field_axioms_random() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for q in [2u32, 3, 4, 5, 7, 8, 9, 16] {
            let f = Field::for_q(q).unwrap();
            for _ in 0..500 {
                let [a, b, c] = [0; 3].map(|_| Fe(rng.gen_range(0..f.order()) as u16));
                assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                assert_eq!(f.add(a, f.neg(a)), Fe::ZERO);
                assert_eq!(f.sub(f.add(a, b), b), a);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), Fe::ONE);
                }
            }
        }
    }

    #[test]
    fn frobenius_properties() {
        for q in [2u32, 3, 4, 5, 8, 9] {
            let f = Field::for_q(q).unwrap();
            assert_eq!(f.frobenius_q(Fe::ZERO), Fe::ZERO);
            for a in f.elements() {
                assert_eq!(f.frobenius_q(f.frobenius_q(a)), a);
                assert_eq!(f.pow(a, (q * q) as u64), a);
            }
            // The subfield F_q is the fixed set of the Frobenius.
            let fixed = f.elements().filter(|&a| f.frobenius_q(a) == a).count();
            assert_eq!(fixed, q as usize);
        }
    }

    #[test]
    fn artin_schreier_small_cases() {
        let f = Field::new(2, 1).unwrap();
        assert_eq!(
            f.artin_schreier_roots(Fe::ZERO).unwrap(),
            vec![Fe(0), Fe(1)]
        );
        // beta^2 + beta = 1 in F_4: the two roots of Z^2+Z+1, i.e. Z and Z+1.
        let by_scan: Vec<Fe> = f
            .elements()
            .filter(|&b| f.add(f.mul(b, b), b) == Fe::ONE)
            .collect();
        assert_eq!(by_scan, vec![Fe(2), Fe(3)]);
        assert_eq!(f.artin_schreier_roots(Fe::ONE).unwrap(), by_scan);
    }

    #[test]
    fn artin_schreier_matches_enumeration() {
        for q in [2u32, 3, 4, 5] {
            let f = Field::for_q(q).unwrap();
            let kernel: Vec<Fe> = f
                .elements()
                .filter(|&b| f.add(f.frobenius_q(b), b).is_zero())
                .collect();
            for alpha in f.elements() {
                let target = f.pow(alpha, q as u64 + 1);
                let scan: Vec<Fe> = f
                    .elements()
                    .filter(|&b| f.add(f.frobenius_q(b), b) == target)
                    .collect();
                let roots = f.artin_schreier_roots(alpha).unwrap();
                assert_eq!(roots.len(), q as usize);
                assert_eq!(roots, scan);
                for &r in &roots {
                    assert!(kernel.contains(&f.sub(r, roots[0])));
                }
            }
        }
    }
}
