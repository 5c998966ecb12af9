use thiserror::Error;

/// Crate-wide error type.
///
/// Every operation that can reject its input does so through one of these
/// variants; none of them silently clamp or guess.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus {0} outside the supported range 2..=2^62")]
    ModulusRange(u64),

    #[error("index {index} exceeds the {what} bound {max}")]
    IndexRange {
        what: &'static str,
        index: u64,
        max: u64,
    },

    #[error("index overflow combining pairs at {0} and {1}")]
    IndexOverflow(u64, u64),

    #[error("extended gcd needs at least one nonzero input")]
    ZeroGcdPair,

    #[error("{a} is not invertible modulo {m}")]
    NotInvertible { a: u64, m: u64 },

    #[error("coefficients {m} and {n} are not coprime")]
    NotCoprime { m: i64, n: i64 },

    #[error("congruence {m}*{a} = {n}*{b} (mod {p}) does not hold")]
    CongruenceMismatch {
        a: u64,
        b: u64,
        m: i64,
        n: i64,
        p: u64,
    },

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("5 splits as 5*1 + 0 and has no residue class")]
    FiveUnclassifiable,

    #[error("residue class must lie in 1..=4, got {0}")]
    ResidueClassRange(u64),

    #[error("{a} shares a factor with the modulus {p}")]
    SharedFactor { a: u64, p: u64 },

    #[error("modulus {0} must be an odd prime")]
    NotOddPrime(u64),

    #[error("a^((p-1)/2) mod {p} landed on {got} for a = {a}; {p} cannot be prime")]
    EulerContradiction { a: u64, p: u64, got: u64 },

    #[error("modulus {0} is even; 2 is not invertible")]
    EvenModulus(u64),

    #[error("binomial sum for n = {n} is not divisible by 2^{e}")]
    BinomialSumIndivisible { n: u64, e: u64 },

    #[error("moduli differ: {0} vs {1}")]
    ModulusMismatch(u64, u64),

    #[error("lower index {j} exceeds upper index {n}")]
    BinomialIndex { n: u64, j: u64 },

    #[error("binomial row {n} reaches the modulus {p}; only n < p is supported")]
    BinomialRow { n: u64, p: u64 },

    #[error("hypothesis of {check} is not met by p = {p}")]
    HypothesisNotMet { check: &'static str, p: u64 },

    #[error("{ell} is not a period modulo {m}")]
    NotAPeriod { m: u64, ell: u64 },

    #[error("period {ell} modulo {m} is too short for tail checks")]
    PeriodTooShort { m: u64, ell: u64 },

    #[error("sweep bound {0} outside the supported range 2..=1000000")]
    SweepBound(u64),

    #[error("no check registered under id '{0}'")]
    UnknownCheck(String),

    #[error("check '{0}' sweeps primes; give it a prime target")]
    MissingPrimeTarget(String),
}

pub type Result<T> = std::result::Result<T, Error>;
