use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("nilpotency index must be at least 1, got {0}")]
    BadNilpotency(u32),
    #[error("ring p^e = {p}^{e} does not fit in 64-bit arithmetic")]
    RingTooLarge { p: u64, e: u32 },
    #[error("ring mismatch: {0} vs {1}")]
    RingMismatch(String, String),
    #[error("element is not a unit")]
    NonUnit,
    #[error("element is zero")]
    ZeroElement,
    #[error("precision {target} is out of range for a ring of precision {current}")]
    BadPrecision { current: u32, target: u32 },
    #[error("digit {digit} out of range for residue field F_{p}")]
    BadDigit { digit: u64, p: u64 },
    #[error("divisor is not monic")]
    NonMonicDivisor,
    #[error("zero polynomial")]
    ZeroPolynomial,
    #[error("p = {p} divides n = {n}")]
    GcdViolation { n: usize, p: u64 },
    #[error("polynomial does not divide x^n - lambda")]
    NotADivisor,
    #[error("polynomial is not irreducible over the residue field")]
    NotIrreducible,
    #[error("residue factors are not pairwise coprime")]
    NotCoprime,
    #[error("product of factors does not match the input polynomial")]
    ProductMismatch,
    #[error("empty generator matrix")]
    EmptyMatrix,
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("enumeration budget exceeded: |C| = {size} > {budget}")]
    BudgetExceeded { size: u128, budget: u128 },
    #[error("index {index} out of range 0..{bound}")]
    IndexOutOfRange { index: usize, bound: usize },
    #[error("code is not self-dual")]
    NotSelfDual,
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("hypothesis not satisfied: {0}")]
    Hypothesis(String),
    #[error("search exhausted without a witness: {0}")]
    SearchExhausted(String),
    #[error("primes shared between components: {0}")]
    SharedPrime(u64),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("invalid input: {0}")]
    Invalid(String),
}

pub type Result<T> = std::result::Result<T, Error>;
