use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("modulus must be at least 2, got {0}")]
    InvalidModulus(u64),
    #[error("matrix side length must be positive")]
    ZeroSide,
    #[error("arithmetic overflow")]
    Overflow,
    #[error("{value} is not a canonical residue modulo {modulus}")]
    NotCanonical { value: u64, modulus: u64 },
    #[error("modulus mismatch: {left} vs {right}")]
    ModulusMismatch { left: u64, right: u64 },
    #[error("gcd(0, 0) is undefined")]
    GcdZeroZero,
    #[error("modulus even: {0} (the Jacobi symbol needs an odd modulus)")]
    EvenModulus(u64),
    #[error("modulus {0} is below 3")]
    ModulusTooSmall(u64),
    #[error("n = {0} is odd: modulus even (n^2 + 1), this check needs even n")]
    OddSide(usize),
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("{a} is not coprime to {m}")]
    NotCoprime { a: i64, m: u64 },
    #[error("shape mismatch: expected {expected}x{expected}, got {got}")]
    ShapeMismatch { expected: usize, got: String },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown dihedral element `{0}`")]
    UnknownElement(String),
    #[error("unknown check `{0}`")]
    UnknownCheck(String),
    #[error("invalid range `{0}`")]
    InvalidRange(String),
    #[error("empty effective range for `{0}`")]
    EmptyRange(String),
    #[error("{0}")]
    Unsupported(String),
}
