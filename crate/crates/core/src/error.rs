use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FieldError {
    #[error("inverse of zero")]
    ZeroInverse,
    #[error("field order 2^{0} is outside the supported range 4..=2^20")]
    UnsupportedDegree(u32),
    #[error("q = {0} is not a power of two in 4..=2^20")]
    InvalidOrder(u64),
    #[error("modulus {modulus:#x} does not have degree {degree}")]
    ModulusDegree { modulus: u32, degree: u32 },
    #[error("modulus {0:#x} is reducible over GF(2)")]
    ReducibleModulus(u32),
    #[error("cannot parse modulus {0:?} as a hexadecimal bit string")]
    BadModulusSyntax(String),
    #[error("element {value:#x} does not belong to a field of order {order}")]
    ElementOutOfRange { value: u64, order: u64 },
    #[error("extension of degree {degree} over GF({q}) does not fit in 64 packed bits")]
    ExtensionTooLarge { degree: usize, q: u64 },
}

#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("all six conic coefficients are zero")]
    ZeroConic,
    #[error("a line needs (a, b) != (0, 0)")]
    ZeroLine,
    #[error("conic {0} is degenerate")]
    DegenerateConic(String),
    #[error("not covered by any closed form: {0}")]
    Uncovered(String),
    #[error("enumeration of {needed} items exceeds the budget of {limit}")]
    Budget { needed: u128, limit: u128 },
    #[error("construction invariant broken: {0}")]
    Construction(String),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Io(#[from] std::io::Error),
    #[error(transparent)]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Csv(#[from] csv::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
