//! Codes correcting one error of quaternion Mannheim weight one.
//!
//! For `α` with `α^(p-1) = 1` the parity-check matrix is the single row
//! `H = (α⁰ α¹ … α^(n-1))` with `n = (p - 1)/2`, and the systematic generator
//! matrix has rows `(-α^(l+1), e_l)`. A weight-one error `u` at position `l`
//! leaves the syndrome `S = u·α^l`, so the decoder looks for the position at
//! which `S·α^(-l)` is a unit.

use crate::code::{
    check_length, check_modulus, left_dot, Code, DecodeKind, DecodeReport, ErrorEntry,
};
use crate::error::{Error, Result};
use crate::metric::is_unit_class;
use crate::residue::{Modulus, Residue};

#[derive(Debug, Clone)]
pub struct OmecCode {
    modulus: Modulus,
    alpha: Residue,
    n: usize,
    h_row: Vec<Residue>,
    h_inverses: Vec<Residue>,
    g_rows: Vec<Vec<Residue>>,
}

impl OmecCode {
    /// Builds the code of length `(p - 1)/2`.
    pub fn new(modulus: Modulus, alpha: Residue) -> Result<Self> {
        let n = ((modulus.p() - 1) / 2) as usize;
        Self::with_length(modulus, alpha, n)
    }

    /// Only `n = (p - 1)/2` is constructible: longer lengths `(p^r - 1)/2`
    /// would need an element of that order in an extension ring, which
    /// `H(Z)_π` does not provide.
    pub fn with_length(modulus: Modulus, alpha: Residue, n: usize) -> Result<Self> {
        let supported = ((modulus.p() - 1) / 2) as usize;
        if n != supported {
            return Err(Error::UnsupportedLength {
                requested: n,
                supported,
            });
        }
        if *alpha.modulus() != modulus {
            return Err(Error::ModulusMismatch);
        }
        if alpha.is_zero() {
            return Err(Error::ZeroElement);
        }
        let exponent = (modulus.p() - 1) as u64;
        if !alpha.pow(exponent).is_one() {
            return Err(Error::OrderViolation {
                generator: alpha.rep(),
                exponent,
            });
        }

        let h_row: Vec<Residue> = (0..n as u64).map(|l| alpha.pow(l)).collect();
        for a in 0..n {
            for b in a + 1..n {
                if h_row[b].is_left_associate_of(&h_row[a]) {
                    return Err(Error::AssociateCollision(a, b));
                }
            }
        }
        let h_inverses = h_row
            .iter()
            .enumerate()
            .map(|(l, h)| h.inverse()?.ok_or(Error::NonInvertibleEntry(l)))
            .collect::<Result<Vec<_>>>()?;
        let g_rows = (0..n - 1)
            .map(|l| {
                let mut row = vec![modulus.zero(); n];
                row[0] = -alpha.pow(l as u64 + 1);
                row[l + 1] = modulus.one();
                row
            })
            .collect();

        Ok(OmecCode {
            modulus,
            alpha,
            n,
            h_row,
            h_inverses,
            g_rows,
        })
    }

    pub fn alpha(&self) -> Residue {
        self.alpha
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn h_row(&self) -> &[Residue] {
        &self.h_row
    }

    pub fn g_rows(&self) -> &[Vec<Residue>] {
        &self.g_rows
    }

    /// `codeword[0] = -Σ msg[l]·α^(l+1)` followed by the message symbols.
    pub fn encode(&self, msg: &[Residue]) -> Result<Vec<Residue>> {
        check_length(msg, self.n - 1)?;
        check_modulus(&self.modulus, msg)?;
        let check = left_dot(&self.modulus, msg, &self.h_row[1..]);
        let mut word = Vec::with_capacity(self.n);
        word.push(-check);
        word.extend_from_slice(msg);
        Ok(word)
    }

    /// `S = Σ r[l]·α^l`, received symbols multiplying on the left.
    pub fn syndrome(&self, r: &[Residue]) -> Result<Residue> {
        check_length(r, self.n)?;
        check_modulus(&self.modulus, r)?;
        Ok(left_dot(&self.modulus, r, &self.h_row))
    }

    pub fn decode(&self, r: &[Residue]) -> Result<DecodeReport> {
        let s = self.syndrome(r)?;
        if s.is_zero() {
            return Ok(DecodeReport::unchanged(DecodeKind::NoError, r));
        }
        let hits: Vec<ErrorEntry> = self
            .h_inverses
            .iter()
            .enumerate()
            .map(|(position, inv)| ErrorEntry {
                position,
                value: s * *inv,
            })
            .filter(|e| is_unit_class(&e.value))
            .collect();
        // Non-associate parity entries leave at most one hit; anything else is reported, not guessed.
        Ok(match hits.len() {
            1 => DecodeReport::corrected(DecodeKind::Single, r, hits),
            _ => DecodeReport::unchanged(DecodeKind::Uncorrectable, r),
        })
    }
}

impl Code for OmecCode {
    fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    fn length(&self) -> usize {
        self.n
    }

    fn message_length(&self) -> usize {
        self.n - 1
    }

    fn encode(&self, message: &[Residue]) -> Result<Vec<Residue>> {
        OmecCode::encode(self, message)
    }

    fn syndrome_vector(&self, word: &[Residue]) -> Result<Vec<Residue>> {
        Ok(vec![self.syndrome(word)?])
    }

    fn decode(&self, word: &[Residue]) -> Result<DecodeReport> {
        OmecCode::decode(self, word)
    }
}
