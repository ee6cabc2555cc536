//! Improved power decoding of `h`-interleaved one-point Hermitian codes.
//!
//! The crate is `no_std` (it needs `alloc`) and purely computational:
//!
//! * [`gf`]: the field `F_{q^2}`
//! * [`poly`]: univariate polynomials and polynomial matrices over it
//! * [`hermitian`]: the Hermitian curve and its coordinate ring
//! * [`code`]: one-point Hermitian codes, interleaving, burst errors
//! * [`interp`]: interpolation of received rows
//! * [`keyeq`]: multi-indices, the key-equation system and brute-force oracles
//! * [`modmin`]: the module basis and its weighted weak Popov reduction
//! * [`decoder`]: the full decoder
//! * [`radius`]: closed-form decoding radii
//!
//! ```
//! use ihpd_core::{code::Code, decoder::Decoder, gf::Field, hermitian::Curve};
//! use rand::SeedableRng;
//! use rand_chacha::ChaCha8Rng;
//!
//! let curve = Curve::new(Field::for_q(4).unwrap());
//! let code = Code::new(curve, 15, 1).unwrap();
//! let decoder = Decoder::new(&code);
//! let mut rng = ChaCha8Rng::seed_from_u64(1);
//! let msgs = code.random_messages(&mut rng);
//! let word = code.encode(&msgs).unwrap();
//! let err = code.random_burst_error(20, &mut rng).unwrap();
//! let received = word.add(code.field(), &err.matrix);
//! let outcome = decoder.decode(&received, 2, 4).unwrap();
//! assert_eq!(outcome.messages(), Some(&msgs[..]));
//! ```

#![no_std]

extern crate alloc;

pub mod code;
pub mod decoder;
pub mod gf;
pub mod hermitian;
pub mod interp;
pub mod keyeq;
pub mod linalg;
pub mod modmin;
pub mod poly;
pub mod radius;

use alloc::string::String;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u32),
    #[error("{0} is not a prime power")]
    NotPrimePower(u32),
    #[error("q = {q} exceeds the supported field size")]
    FieldTooLarge { q: u32 },
    #[error("no irreducible polynomial of degree {0} found")]
    NoIrreducible(u32),
    #[error("field construction failed: {0}")]
    FieldConstruction(&'static str),
    #[error("invalid field element encoding")]
    InvalidElement,
    #[error("invalid parameters: {0}")]
    InvalidParams(String),
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("interpolation system is rank deficient")]
    RankDeficient,
}
