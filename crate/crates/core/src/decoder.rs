//! The improved power decoder for `h`-interleaved one-point Hermitian codes.

use alloc::format;
use alloc::vec::Vec;

use crate::code::{Code, InterleavedWord};
use crate::gf::Fe;
use crate::hermitian::RingElement;
use crate::interp::InterpolationBasis;
use crate::keyeq::KeyEqSystem;
use crate::modmin::{minimal_solution, MinimalSolution};
use crate::radius::{self, RadiusParams, Rational};
use crate::Error;

/// Upper bound accepted for `deg_H lambda_0` in the final locator check.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum LocatorBound {
    /// `s |E| + g`.
    #[default]
    Tight,
    /// `s (|E| + g)`, the looser form.
    Relaxed,
}

impl LocatorBound {
    pub fn limit(self, s: usize, errors: usize, genus: usize) -> usize {
        match self {
            LocatorBound::Tight => s * errors + genus,
            LocatorBound::Relaxed => s * (errors + genus),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FailureStage {
    /// No reduced row leads in the `lambda_0` block.
    NoCandidate,
    /// `lambda_0` does not divide some `psi_{u_i}`, or the quotient is not in
    /// `L(m_H P_inf)`.
    Divisibility,
    /// The candidate locator does not vanish to order `s` on the error set or
    /// its degree is out of range.
    LocatorCheck,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Warning {
    /// `tau + l m_H >= s n`: fewer equations than the radius analysis counts.
    EquationDeficit { tau: usize },
    /// `s t_new < 2g - 1`: Weierstrass gaps may shrink the radius.
    SmallLocatorDegree,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum DecodeStatus {
    Success {
        messages: Vec<Vec<Fe>>,
        positions: Vec<usize>,
        locator: RingElement,
    },
    Failure(FailureStage),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DecodeOutcome {
    pub status: DecodeStatus,
    /// `deg_H lambda_0` of the minimal solution, when one was found.
    pub tau: Option<usize>,
    pub warnings: Vec<Warning>,
}

impl DecodeOutcome {
    pub fn is_success(&self) -> bool {
        matches!(self.status, DecodeStatus::Success { .. })
    }

    pub fn messages(&self) -> Option<&[Vec<Fe>]> {
        match &self.status {
            DecodeStatus::Success { messages, .. } => Some(messages),
            DecodeStatus::Failure(_) => None,
        }
    }

    pub fn positions(&self) -> Option<&[usize]> {
        match &self.status {
            DecodeStatus::Success { positions, .. } => Some(positions),
            DecodeStatus::Failure(_) => None,
        }
    }

    pub fn locator(&self) -> Option<&RingElement> {
        match &self.status {
            DecodeStatus::Success { locator, .. } => Some(locator),
            DecodeStatus::Failure(_) => None,
        }
    }

    pub fn failure_stage(&self) -> Option<FailureStage> {
        match self.status {
            DecodeStatus::Failure(stage) => Some(stage),
            DecodeStatus::Success { .. } => None,
        }
    }
}

#[derive(Clone, Debug)]
pub struct Decoder {
    code: Code,
    interp: InterpolationBasis,
    pub locator_bound: LocatorBound,
}

impl Decoder {
    pub fn new(code: &Code) -> Self {
        let interp = InterpolationBasis::new(code)
            .expect("evaluation matrix of a Hermitian code has full rank");
        Decoder {
            code: code.clone(),
            interp,
            locator_bound: LocatorBound::default(),
        }
    }

    pub fn with_locator_bound(mut self, bound: LocatorBound) -> Self {
        self.locator_bound = bound;
        self
    }

    pub fn code(&self) -> &Code {
        &self.code
    }

    pub fn interpolation(&self) -> &InterpolationBasis {
        &self.interp
    }

    pub fn build_system(
        &self,
        word: &InterleavedWord,
        s: usize,
        ell: usize,
    ) -> Result<KeyEqSystem, Error> {
        self.check_word(word)?;
        KeyEqSystem::build(&self.code, &self.interp, word, s, ell)
    }

    pub fn decode(
        &self,
        word: &InterleavedWord,
        s: usize,
        ell: usize,
    ) -> Result<DecodeOutcome, Error> {
        let system = self.build_system(word, s, ell)?;
        let solution = minimal_solution(&self.code, &system);
        Ok(self.finish(word, &system, solution))
    }

    /// `decode` for a single row; the code must have `h = 1`.
    pub fn decode_h1(&self, row: &[Fe], s: usize, ell: usize) -> Result<DecodeOutcome, Error> {
        if self.code.h() != 1 {
            return Err(Error::InvalidParams(format!(
                "decode_h1 needs h = 1, code has h = {}",
                self.code.h()
            )));
        }
        self.decode(
            &InterleavedWord {
                rows: alloc::vec![row.to_vec()],
            },
            s,
            ell,
        )
    }

    fn check_word(&self, word: &InterleavedWord) -> Result<(), Error> {
        if word.h() != self.code.h() {
            return Err(Error::Dimension {
                expected: self.code.h(),
                got: word.h(),
            });
        }
        if let Some(bad) = word.rows.iter().find(|r| r.len() != self.code.n()) {
            return Err(Error::Dimension {
                expected: self.code.n(),
                got: bad.len(),
            });
        }
        Ok(())
    }

    fn finish(
        &self,
        word: &InterleavedWord,
        system: &KeyEqSystem,
        solution: Option<MinimalSolution>,
    ) -> DecodeOutcome {
        let code = &self.code;
        let curve = code.curve();
        let (s, ell) = (system.s(), system.ell());
        let mut warnings = Vec::new();
        if let Ok(p) = RadiusParams::new(
            code.q() as u64,
            code.m_h() as u64,
            code.h() as u64,
            s as u64,
            ell as u64,
        ) {
            let bound = Rational::from_integer(2 * code.genus() as i128 - 1);
            if radius::t_new(&p) * Rational::from_integer(s as i128) < bound {
                warnings.push(Warning::SmallLocatorDegree);
            }
        }
        let Some(solution) = solution else {
            return DecodeOutcome {
                status: DecodeStatus::Failure(FailureStage::NoCandidate),
                tau: None,
                warnings,
            };
        };
        let tau = solution.tau;
        if tau + ell * code.m_h() >= s * code.n() {
            warnings.push(Warning::EquationDeficit { tau });
        }
        let fail = |stage, warnings| DecodeOutcome {
            status: DecodeStatus::Failure(stage),
            tau: Some(tau),
            warnings,
        };

        let lambda = &solution.lambdas[0];
        let mut messages = Vec::with_capacity(code.h());
        for k in 0..code.h() {
            let psi = &solution.psis[system.sets.unit_position(k)];
            let Some(f) = curve.exact_divide(psi, lambda) else {
                return fail(FailureStage::Divisibility, warnings);
            };
            let Some(msg) = code.ring_to_message(&f) else {
                return fail(FailureStage::Divisibility, warnings);
            };
            messages.push(msg);
        }
        let codeword = code
            .encode(&messages)
            .expect("message dimensions match the code");
        let positions = word.sub(code.field(), &codeword).nonzero_columns();
        let vanishes = positions
            .iter()
            .all(|&p| curve.valuation_at(lambda, &curve.points()[p], s) >= s);
        let in_range = s * positions.len() <= tau
            && tau <= self.locator_bound.limit(s, positions.len(), code.genus());
        if !(vanishes && in_range) {
            return fail(FailureStage::LocatorCheck, warnings);
        }
        DecodeOutcome {
            status: DecodeStatus::Success {
                messages,
                positions,
                locator: lambda.clone(),
            },
            tau: Some(tau),
            warnings,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::gf::Field;
    use crate::hermitian::Curve;
    use crate::keyeq::oracle_error_locator;
    use rand::SeedableRng;
    use rand_chacha::ChaCha8Rng;

    fn code(q: u32, m: usize, h: usize) -> Code {
        Code::new(Curve::new(Field::for_q(q).unwrap()), m, h).unwrap()
    }

    #[test]
    fn error_free() {
        let c = code(3, 8, 2);
        let d = Decoder::new(&c);
        let mut rng = ChaCha8Rng::seed_from_u64(0);
        let msgs = c.random_messages(&mut rng);
        let out = d.decode(&c.encode(&msgs).unwrap(), 2, 3).unwrap();
        assert_eq!(out.messages(), Some(&msgs[..]));
        assert_eq!(out.positions(), Some(&[][..]));
        assert_eq!(out.tau, Some(0));
    }

    #[test]
    fn corrects_errors_and_matches_oracle() {
        let c = code(3, 8, 1);
        let d = Decoder::new(&c);
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let msgs = c.random_messages(&mut rng);
            let err = c.random_burst_error(6, &mut rng).unwrap();
            let word = c.encode(&msgs).unwrap().add(c.field(), &err.matrix);
            let out = d.decode(&word, 1, 1).unwrap();
            assert_eq!(out.messages(), Some(&msgs[..]));
            assert_eq!(out.positions(), Some(&err.positions[..]));
            assert_eq!(
                out.locator(),
                Some(&oracle_error_locator(c.curve(), &err.positions, 1))
            );
        }
    }

    #[test]
    fn rejects_bad_shapes() {
        let c = code(2, 3, 2);
        let d = Decoder::new(&c);
        assert!(d.decode(&InterleavedWord::zeros(1, 8), 1, 1).is_err());
        assert!(d.decode(&InterleavedWord::zeros(2, 7), 1, 1).is_err());
        assert!(d.decode(&InterleavedWord::zeros(2, 8), 2, 1).is_err());
        assert!(d.decode_h1(&[Fe::ZERO; 8], 1, 1).is_err());
    }

    #[test]
    fn hopeless_word_fails() {
        let c = code(3, 8, 1);
        let d = Decoder::new(&c);
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let err = c.random_burst_error(c.n(), &mut rng).unwrap();
        let out = d.decode(&err.matrix, 1, 1).unwrap();
        assert!(
            !out.is_success() || out.positions().unwrap().len() <= (c.designed_distance() - 1) / 2
        );
    }

    #[test]
    fn locator_bound_limits() {
        assert_eq!(LocatorBound::Tight.limit(2, 5, 6), 16);
        assert_eq!(LocatorBound::Relaxed.limit(2, 5, 6), 22);
    }
}
