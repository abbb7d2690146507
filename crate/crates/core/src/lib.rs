//! Error-correcting codes over Lipschitz (quaternion) integers modulo a
//! quaternion prime, decoded with respect to the quaternion Mannheim metric.

pub mod code;
pub mod dec;
pub mod error;
pub mod metric;
pub mod omec;
pub mod oracle;
pub mod quaternion;
pub mod residue;
pub mod selfcheck;
pub mod text;

pub use code::{Code, DecodeKind, DecodeReport, ErrorEntry};
pub use dec::{Classification, DecCode, DoubleError};
pub use error::{Error, Result};
pub use metric::{qm_distance, qm_weight, vector_qm_weight, WeightTable, WeightedRep};
pub use omec::OmecCode;
pub use oracle::{
    brute_decode, enumerate_codewords, exhaustive_correction_suite, min_distance_at_most,
    ErrorPattern, SuiteReport, SyndromeTable,
};
pub use quaternion::Quaternion;
pub use residue::{find_prime_over, Modulus, Residue};
