use std::fmt;

use crate::error::{Error, Result};
use crate::residue::{Modulus, Residue};
use crate::text::format_word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DecodeKind {
    NoError,
    Single,
    Double,
    Uncorrectable,
}

impl DecodeKind {
    pub fn label(self) -> &'static str {
        match self {
            DecodeKind::NoError => "no error",
            DecodeKind::Single => "single",
            DecodeKind::Double => "double",
            DecodeKind::Uncorrectable => "uncorrectable",
        }
    }
}

/// A located error: 0-indexed position and the value that was added there.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ErrorEntry {
    pub position: usize,
    pub value: Residue,
}

/// Outcome of decoding one received word. For `Uncorrectable` the corrected
/// word is the received word unchanged and `errors` is empty.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DecodeReport {
    pub kind: DecodeKind,
    pub corrected: Vec<Residue>,
    pub errors: Vec<ErrorEntry>,
}

impl DecodeReport {
    pub(crate) fn unchanged(kind: DecodeKind, received: &[Residue]) -> Self {
        DecodeReport {
            kind,
            corrected: received.to_vec(),
            errors: Vec::new(),
        }
    }

    /// Subtracts each error from the received word; errors are sorted by position.
    pub(crate) fn corrected(
        kind: DecodeKind,
        received: &[Residue],
        mut errors: Vec<ErrorEntry>,
    ) -> Self {
        errors.sort_by_key(|e| e.position);
        let mut corrected = received.to_vec();
        for e in &errors {
            corrected[e.position] = corrected[e.position] - e.value;
        }
        DecodeReport {
            kind,
            corrected,
            errors,
        }
    }

    pub fn is_correctable(&self) -> bool {
        self.kind != DecodeKind::Uncorrectable
    }
}

/// One-line summary, e.g. `single; position 1 value i; corrected (1-i-j-k,1,-1+i+j+k)`.
impl fmt::Display for DecodeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.kind.label())?;
        for e in &self.errors {
            write!(f, "; position {} value {}", e.position, e.value)?;
        }
        if self.is_correctable() {
            write!(f, "; corrected {}", format_word(&self.corrected))?;
        }
        Ok(())
    }
}

/// What the oracle and the CLI need from a code family.
pub trait Code {
    fn modulus(&self) -> &Modulus;
    fn length(&self) -> usize;
    fn message_length(&self) -> usize;
    fn encode(&self, message: &[Residue]) -> Result<Vec<Residue>>;
    /// All parity-check syndromes of a word, one per check row.
    fn syndrome_vector(&self, word: &[Residue]) -> Result<Vec<Residue>>;
    fn decode(&self, word: &[Residue]) -> Result<DecodeReport>;
}

pub(crate) fn check_length(word: &[Residue], expected: usize) -> Result<()> {
    if word.len() == expected {
        Ok(())
    } else {
        Err(Error::LengthMismatch {
            expected,
            got: word.len(),
        })
    }
}

pub(crate) fn check_modulus(m: &Modulus, word: &[Residue]) -> Result<()> {
    if word.iter().all(|x| x.modulus() == m) {
        Ok(())
    } else {
        Err(Error::ModulusMismatch)
    }
}

/// `Σ word[l] · row[l]`, each received symbol as the left factor.
pub(crate) fn left_dot(m: &Modulus, word: &[Residue], row: &[Residue]) -> Residue {
    word.iter()
        .zip(row)
        .fold(m.zero(), |acc, (w, h)| acc + *w * *h)
}
