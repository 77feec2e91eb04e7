use thiserror::Error;

/// Errors raised by the library. Precondition variants name the violated
/// hypothesis on P(T).
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("P(T) is not monic")]
    NotMonic,
    #[error("P(T) is not separable: it shares a factor with P'(T)")]
    NotSeparable,
    #[error("P(0) = 0: T divides P(T)")]
    ZeroAtZero,
    #[error("P(1) = 0: T - 1 divides P(T)")]
    ZeroAtOne,
    #[error("P(T) is constant; there is nothing to certify")]
    OnlyTrivial,
    #[error("prime {0} divides the discriminant")]
    BadPrime(u64),
    #[error("a factor of degree {factor_degree} mod {p} does not embed in a field of degree {degree}")]
    NoEmbedding {
        p: u64,
        degree: usize,
        factor_degree: usize,
    },
    #[error("{k} does not divide the order of the multiplicative group of F_{p}^{degree}")]
    BadOrder { k: u64, p: u64, degree: usize },
    #[error("factors are not pairwise coprime modulo {0}")]
    NotCoprime(u64),
    #[error("P(T) has no root that is a root of unity")]
    NoRootsOfUnity,
    #[error("P(T) has no root that is a non-unit")]
    NoNonUnits,
    #[error("every root of P(T) is a root of unity")]
    OnlyRootsOfUnity,
    #[error("irreducibility of T^{p0} - t is not certified for every non-torsion root")]
    CertificateMissing { p0: u64 },
    #[error("P(T) has a root that is not a root of unity")]
    NotCyclotomicCase,
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    #[error("limit exceeded: {0}")]
    LimitExceeded(String),
}

impl Error {
    /// True for the errors that report a violated hypothesis on the input.
    pub fn is_precondition(&self) -> bool {
        matches!(
            self,
            Error::NotMonic
                | Error::NotSeparable
                | Error::ZeroAtZero
                | Error::ZeroAtOne
                | Error::OnlyTrivial
                | Error::NoRootsOfUnity
                | Error::NoNonUnits
                | Error::OnlyRootsOfUnity
                | Error::NotCyclotomicCase
        )
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
