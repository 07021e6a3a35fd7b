use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("ring size {computed} exceeds the size cap {cap}")]
    SizeOverflow { computed: u128, cap: usize },

    #[error("modulus must be at least 2, got {0}")]
    ModulusTooSmall(u64),

    #[error("polynomial modulus is not monic (leading coefficient is {leading}, not 1)")]
    NonMonic { leading: String },

    #[error("polynomial modulus must have degree at least 1")]
    ConstantModulus,

    #[error("a direct product needs at least two factors, got {0}")]
    ProductArity(usize),

    #[error("{0} is not prime")]
    NotPrime(u64),

    #[error("ring of size {size} exceeds the oracle cap {cap}")]
    OracleCapExceeded { size: usize, cap: usize },

    #[error("integer literal {0} is out of range")]
    LiteralOverflow(String),

    #[error("cannot factor {0}")]
    Unfactorable(String),
}
