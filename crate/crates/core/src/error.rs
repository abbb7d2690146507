use crate::quaternion::Quaternion;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Error {
    #[error("quaternion arithmetic overflow")]
    Overflow,
    #[error("{pi} is not a quaternion prime modulus: norm {norm} is not an odd rational prime")]
    NotPrimeModulus { pi: Quaternion, norm: i64 },
    #[error("modulus norm {0} is too large for exact residue arithmetic")]
    ModulusTooLarge(i64),
    #[error("operands are reduced modulo different quaternions")]
    ModulusMismatch,
    #[error("operation is undefined for the zero residue")]
    ZeroElement,
    #[error("expected {expected} symbols, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("generator {generator} does not satisfy {generator}^{exponent} = 1")]
    OrderViolation {
        generator: Quaternion,
        exponent: u64,
    },
    #[error("generator {generator} has order {actual:?}, expected {expected}")]
    WrongOrder {
        generator: Quaternion,
        expected: u64,
        actual: Option<u64>,
    },
    #[error("parity-check entries at positions {0} and {1} are associates; error locations would be ambiguous")]
    AssociateCollision(usize, usize),
    #[error("parity-check entry at position {0} has no two-sided inverse")]
    NonInvertibleEntry(usize),
    #[error("length {requested} is unsupported: only n = (p - 1)/2 = {supported} is constructible over H(Z)_pi")]
    UnsupportedLength { requested: usize, supported: usize },
    #[error("only t = 1 (double-error correction) is supported, got t = {0}")]
    UnsupportedDesign(usize),
    #[error("epsilon unavailable: 3*s1 has no two-sided inverse")]
    EpsilonUnavailable,
    #[error("message space of {0} words is too large to enumerate")]
    Oversized(u128),
    #[error("cannot parse {token:?}: {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;
