//! Closed-form decoding radii: `delta(tau)`, `tau_max`, `t_new`, the
//! baseline `t_K`, the asymptotic parameter choice, and the comparison with
//! (interleaved) Reed–Solomon codes.

use alloc::format;

use num_bigint::BigUint;
use num_rational::Ratio;
use num_traits::{ToPrimitive, Zero};

use crate::keyeq::{count_leq, count_lt, weighted_leq, weighted_lt};
use crate::Error;

pub type Rational = Ratio<i128>;

/// Code and decoder parameters entering the radius formulas.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadiusParams {
    pub q: u64,
    pub m_h: u64,
    pub h: u64,
    pub s: u64,
    pub ell: u64,
}

impl RadiusParams {
    pub fn new(q: u64, m_h: u64, h: u64, s: u64, ell: u64) -> Result<Self, Error> {
        let p = RadiusParams { q, m_h, h, s, ell };
        if q < 2 || h == 0 || s == 0 || s > ell {
            return Err(Error::InvalidParams(format!(
                "need q >= 2, h >= 1 and 1 <= s <= l (q = {q}, h = {h}, s = {s}, l = {ell})"
            )));
        }
        if m_h + 2 <= 2 * p.genus() || m_h >= p.n() {
            return Err(Error::InvalidParams(format!(
                "m_H = {m_h} out of range for q = {q}"
            )));
        }
        Ok(p)
    }

    pub fn n(&self) -> u64 {
        self.q * self.q * self.q
    }

    pub fn genus(&self) -> u64 {
        self.q * (self.q - 1) / 2
    }

    pub fn k(&self) -> u64 {
        self.m_h + 1 - self.genus()
    }

    fn counts(&self) -> Counts {
        let (h, s, ell) = (self.h as usize, self.s as usize, self.ell as usize);
        Counts {
            c_leq: count_leq(h, ell) as i128,
            c_lt: count_lt(h, s) as i128,
            w_leq: weighted_leq(h, ell) as i128,
            w_lt: weighted_lt(h, s) as i128,
        }
    }
}

struct Counts {
    c_leq: i128,
    c_lt: i128,
    w_leq: i128,
    w_lt: i128,
}

/// `delta(tau) = slope * tau + intercept`; returns `(slope, intercept)`.
pub fn delta_coefficients(p: &RadiusParams) -> (i128, i128) {
    let c = p.counts();
    let (n, m, g, s) = (p.n() as i128, p.m_h as i128, p.genus() as i128, p.s as i128);
    let intercept = c.c_leq - n * (c.w_lt + s * c.c_leq - s * c.c_lt) + m * c.w_leq - g * c.c_leq;
    (c.c_leq, intercept)
}

/// Excess of variables over equations in the degree-`tau` linear system.
pub fn delta(p: &RadiusParams, tau: i128) -> i128 {
    let (a, b) = delta_coefficients(p);
    a * tau + b
}

/// `tau_max` in closed form.
pub fn tau_max(p: &RadiusParams) -> Rational {
    let c = p.counts();
    let (n, m, g, s, h, ell) = (
        p.n() as i128,
        p.m_h as i128,
        p.genus() as i128,
        p.s as i128,
        p.h as i128,
        p.ell as i128,
    );
    let r = |a: i128, b: i128| Rational::new(a, b);
    r(s * n, 1) * (r(1, 1) - r(s * c.c_lt - c.w_lt, s * c.c_leq)) - r(h * ell * m, h + 1)
        + (r(1, c.c_leq) - r(1, 1))
        + r(g, 1)
}

/// The threshold above which `delta(tau) > 1`.
pub fn tau_max_from_delta(p: &RadiusParams) -> Rational {
    let (a, b) = delta_coefficients(p);
    Rational::new(1 - b, a)
}

/// `t_new = (tau_max - g) / s`.
pub fn t_new(p: &RadiusParams) -> Rational {
    (tau_max(p) - Rational::from_integer(p.genus() as i128)) / Rational::from_integer(p.s as i128)
}

pub fn t_new_floor(p: &RadiusParams) -> i128 {
    t_new(p).floor().to_integer()
}

/// `t_K = h/(h+1) (n - m_H)`.
pub fn t_kampf(n: u64, m_h: u64, h: u64) -> Rational {
    Rational::new(h as i128 * (n as i128 - m_h as i128), h as i128 + 1)
}

/// Everything the radius formulas say about one parameter set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RadiusReport {
    pub params: RadiusParams,
    pub n: u64,
    pub k: u64,
    pub genus: u64,
    pub delta_slope: i128,
    pub delta_intercept: i128,
    pub tau_max: Rational,
    pub t_new: Rational,
    pub t_new_floor: i128,
    pub t_kampf: Rational,
    /// `tau_max + l m_H < s n`.
    pub valid: bool,
}

pub fn report(p: &RadiusParams) -> RadiusReport {
    let (delta_slope, delta_intercept) = delta_coefficients(p);
    let tm = tau_max(p);
    let bound = Rational::from_integer((p.s * p.n()) as i128 - (p.ell * p.m_h) as i128);
    RadiusReport {
        params: *p,
        n: p.n(),
        k: p.k(),
        genus: p.genus(),
        delta_slope,
        delta_intercept,
        tau_max: tm,
        t_new: t_new(p),
        t_new_floor: t_new_floor(p),
        t_kampf: t_kampf(p.n(), p.m_h, p.h),
        valid: tm < bound,
    }
}

/// `(l_i, s_i) = (i, round(gamma i) + 1)` with `gamma = (m_H/n)^{1/(h+1)}`.
pub fn asymptotic_params(q: u64, m_h: u64, h: u64, i: u64) -> Result<(u64, u64), Error> {
    let n = (q * q * q) as f64;
    let gamma = libm::pow(m_h as f64 / n, 1.0 / (h as f64 + 1.0));
    let s = libm::round(gamma * i as f64) as u64 + 1;
    if i == 0 || s > i {
        return Err(Error::InvalidParams(format!(
            "s_i = {s} exceeds l_i = {i}; take a larger i"
        )));
    }
    Ok((i, s))
}

/// `1 - (m_H/n)^{h/(h+1)}`, the limit of `t_new / n`.
pub fn asymptotic_relative_radius(q: u64, m_h: u64, h: u64) -> f64 {
    let n = (q * q * q) as f64;
    1.0 - libm::pow(m_h as f64 / n, h as f64 / (h as f64 + 1.0))
}

/// Decoding radii of length-`q^3`, dimension-`k` codes over a field of size
/// `q^{6h}`: a Reed–Solomon code, a `2h`-interleaved Reed–Solomon code over
/// `F_{q^3}` and a `3h`-interleaved one-point Hermitian code over `F_{q^2}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ComparisonRadii {
    pub n: u64,
    pub k: u64,
    pub t_rs: u64,
    pub t_irs: u64,
    pub t_ih: u64,
}

pub fn compare_radii(q: u64, k: u64, h: u64) -> Result<ComparisonRadii, Error> {
    let n = q * q * q;
    let g = q * (q - 1) / 2;
    if q < 2 || h == 0 || k == 0 || k >= n {
        return Err(Error::InvalidParams(format!(
            "need 1 <= k < n = {n} and h >= 1"
        )));
    }
    Ok(ComparisonRadii {
        n,
        k,
        t_rs: exact_floor(n, k - 1, 1, 2),
        t_irs: exact_floor(n, k - 1, 2 * h, 2 * h + 1),
        t_ih: exact_floor(n, k - 1 + g, 3 * h, 3 * h + 1),
    })
}

/// `floor(n (1 - (num/n)^{a/b}))`, found by a floating-point estimate and
/// settled with exact integer comparisons: `m` qualifies iff
/// `num^a n^b <= (n - m)^b n^a`.
fn exact_floor(n: u64, num: u64, a: u64, b: u64) -> u64 {
    if num >= n {
        return 0;
    }
    let lhs = BigUint::from(num).pow(a as u32) * BigUint::from(n).pow(b as u32);
    let n_a = BigUint::from(n).pow(a as u32);
    let ok = |m: u64| m <= n && BigUint::from(n - m).pow(b as u32) * &n_a >= lhs;
    let x = num as f64 / n as f64;
    let estimate = n as f64 * (1.0 - libm::pow(x, a as f64 / b as f64));
    let mut m = estimate.max(0.0) as u64;
    while m > 0 && !ok(m) {
        m -= 1;
    }
    while ok(m + 1) {
        m += 1;
    }
    debug_assert!(ok(m) || m == 0);
    m
}

/// Lossy view of a rational, for display.
pub fn to_f64(r: &Rational) -> f64 {
    if r.denom().is_zero() {
        return f64::NAN;
    }
    r.numer().to_f64().unwrap_or(f64::NAN) / r.denom().to_f64().unwrap_or(f64::NAN)
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec::Vec;

    fn params(q: u64, m: u64, h: u64, s: u64, ell: u64) -> RadiusParams {
        RadiusParams::new(q, m, h, s, ell).unwrap()
    }

    #[test]
    fn delta_example() {
        let p = params(4, 15, 1, 2, 4);
        assert_eq!(delta_coefficients(&p), (5, -323));
        assert_eq!(delta(&p, 65), 2);
        assert_eq!(tau_max(&p), Rational::new(324, 5));
        assert_eq!(t_new(&p), Rational::new(147, 5));
        assert_eq!(t_new_floor(&p), 29);
    }

    #[test]
    fn interleaved_radius_example() {
        let p = params(4, 15, 2, 2, 3);
        assert_eq!(t_new(&p), Rational::new(143, 4));
        assert_eq!(t_kampf(64, 15, 2), Rational::new(98, 3));
        assert_eq!(t_kampf(64, 15, 1), Rational::new(49, 2));
        assert_eq!(t_kampf(125, 20, 3), Rational::new(315, 4));
    }

    #[test]
    fn closed_form_matches_delta_threshold() {
        for q in 2..=5u64 {
            let g = q * (q - 1) / 2;
            for m in [2 * g, q * q * q / 4, q * q * q / 2] {
                for h in 1..=3 {
                    for ell in 1..=5 {
                        for s in 1..=ell {
                            let Ok(p) = RadiusParams::new(q, m.max(2 * g), h, s, ell) else {
                                continue;
                            };
                            let tm = tau_max(&p);
                            assert_eq!(tm, tau_max_from_delta(&p));
                            let above = tm.floor().to_integer() + 1;
                            assert!(delta(&p, above) > 1);
                            assert!(delta(&p, tm.ceil().to_integer() - 1) <= 1 || tm.is_integer());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn single_power_is_half_distance() {
        for (q, m) in [(2u64, 3u64), (3, 7), (4, 15), (4, 22), (5, 55), (7, 70)] {
            let p = params(q, m, 1, 1, 1);
            assert_eq!(t_new(&p), Rational::new((q * q * q - m) as i128 - 1, 2));
        }
    }

    #[test]
    fn delta_increases() {
        let p = params(5, 20, 2, 2, 3);
        assert!((0..200).all(|t| delta(&p, t + 1) > delta(&p, t)));
    }

    #[test]
    fn comparison_examples() {
        let r = compare_radii(8, 256, 1).unwrap();
        assert_eq!((r.t_rs, r.t_irs, r.t_ih), (150, 190, 183));
        let r = compare_radii(13, 1098, 1).unwrap();
        assert_eq!((r.t_rs, r.t_irs, r.t_ih), (644, 814, 823));
        assert!(compare_radii(4, 64, 1).is_err());
    }

    #[test]
    fn exact_floor_on_perfect_powers() {
        // n (1 - (1/4)^{1/2}) = n/2 exactly.
        assert_eq!(exact_floor(64, 16, 1, 2), 32);
        assert_eq!(exact_floor(64, 0, 1, 2), 64);
        assert_eq!(exact_floor(27, 8, 1, 3), 9);
    }

    #[test]
    fn asymptotic_choice() {
        let (q, m, h) = (4u64, 15u64, 2u64);
        assert!(asymptotic_params(q, m, h, 1).is_err());
        let limit = asymptotic_relative_radius(q, m, h);
        let gaps: Vec<f64> = (2..=24u64)
            .map(|i| {
                let (ell, s) = asymptotic_params(q, m, h, i).unwrap();
                let p = params(q, m, h, s, ell);
                let rel = to_f64(&t_new(&p)) / 64.0;
                assert!(rel < limit);
                let bound = s as f64 * to_f64(&t_new(&p));
                assert!(bound + ((ell * m) as f64) < (s * 64) as f64);
                limit - rel
            })
            .collect();
        // Rounding s_i makes the sequence jitter (i = 4 beats i = 5), so only
        // the O(1/i) envelope is checked.
        assert!(gaps
            .iter()
            .enumerate()
            .all(|(k, gap)| gap * ((k + 2) as f64) < 0.5));
        for i in 2..=12usize {
            let (a, b) = (gaps[i - 2], gaps[2 * i - 2]);
            assert!(b < a && b > a / 4.0, "i = {i}: {a} vs {b}");
        }
    }
}
