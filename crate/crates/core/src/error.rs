use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("{0} is not an odd prime")]
    NotOddPrime(u64),
    #[error("dimension mismatch: {0} vs {1}")]
    DimensionMismatch(usize, usize),
    #[error("intersection parameters must be nonzero")]
    ZeroParameter,
    #[error("point has zero imaginary part, not in the upper half-plane")]
    NotInHalfPlane,
    #[error("matrix is singular")]
    SingularMatrix,
    #[error("sigma = {sigma} is a square mod {q}")]
    BadSigma { q: u32, sigma: u32 },
    #[error("distance {a} is degenerate for sigma = {sigma} (must avoid 0 and 4*sigma)")]
    DegenerateDistance { a: u32, sigma: u32 },
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("graph would have {n} vertices, limit is {limit}")]
    SizeLimitExceeded { n: u64, limit: u64 },
    #[error("vertex index {index} out of range for {n} vertices")]
    IndexOutOfRange { index: usize, n: usize },
    #[error("{what}: n = {n} exceeds limit {limit}")]
    TooLarge { what: &'static str, n: usize, limit: usize },
    #[error("eigensolver did not converge within {0} sweeps")]
    NoConvergence(usize),
    #[error("family {0} is not an abelian Cayley graph")]
    UnsupportedFamily(String),
    #[error("vector is zero after projection")]
    ZeroVector,
    #[error("q = {q} does not satisfy q = {remainder} mod {modulus}{extra}")]
    BadResidue {
        q: u32,
        modulus: u32,
        remainder: u32,
        extra: &'static str,
    },
    #[error("graph contains {0} triangles")]
    NotTriangleFree(u64),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}
