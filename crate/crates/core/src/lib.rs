//! Computational number theory around Fibonacci congruences for primes
//! `5k + r`, with exact arithmetic throughout.
//!
//! The crate provides:
//!
//! - [`arith`]: overflow-free modular arithmetic for moduli up to 2^62,
//!   extended gcd with Bezout witnesses, constructive congruence
//!   splitting, deterministic primality, and prime classification mod 5.
//! - [`legendre`]: three independent Legendre-symbol algorithms plus the
//!   class evaluation of `(5/p)`.
//! - [`fib`]: Fibonacci values by iteration, fast doubling, and the
//!   binomial-sum formula, exactly and modularly, with the addition law
//!   and the signed negative-index extension.
//! - [`binomial`]: binomial coefficients modulo a prime and the row
//!   congruences they satisfy.
//! - [`pisano`]: periods of the sequence modulo an integer, ranks of
//!   apparition, predicted class periods, reflection congruences, and
//!   half-/third-period zero structure.
//! - [`registry`]: a declarative catalog binding every congruence
//!   statement to an executable check, with a deterministic sweep driver
//!   and JSON-ready reports.
//!
//! No floating point is used anywhere; every verdict is the result of
//! exact integer computation.

pub mod arith;
pub mod binomial;
mod error;
pub mod fib;
pub mod legendre;
pub mod pisano;
pub mod registry;
pub mod verdict;

pub use error::{Error, Result};
