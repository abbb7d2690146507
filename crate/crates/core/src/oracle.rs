//! Brute-force ground truth for the algebraic decoders.
//!
//! Everything here consumes only a syndrome function and the weight table,
//! never a decoder's internals. Error patterns are enumerated in a fixed
//! order: total weight first, then the list of positions lexicographically,
//! then the values by canonical representative. The first match is
//! therefore a minimum-weight explanation.

use std::collections::HashMap;

use crate::code::{Code, DecodeKind, ErrorEntry};
use crate::error::{Error, Result};
use crate::metric::WeightTable;
use crate::residue::{Modulus, Residue};

/// Largest message space [`enumerate_codewords`] will walk.
pub const MAX_CODEWORDS: u128 = 100_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ErrorPattern {
    /// Sorted by position; positions are distinct.
    pub entries: Vec<ErrorEntry>,
    pub total_weight: i64,
}

impl ErrorPattern {
    pub fn empty() -> Self {
        ErrorPattern {
            entries: Vec::new(),
            total_weight: 0,
        }
    }

    pub fn to_word(&self, m: &Modulus, n: usize) -> Vec<Residue> {
        let mut w = vec![m.zero(); n];
        for e in &self.entries {
            w[e.position] = e.value;
        }
        w
    }

    /// `word + pattern`, symbol by symbol.
    pub fn apply(&self, word: &[Residue]) -> Vec<Residue> {
        let mut w = word.to_vec();
        for e in &self.entries {
            w[e.position] = w[e.position] + e.value;
        }
        w
    }
}

/// Which symbol values a pattern may use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    /// Each erroneous symbol is one of the eight units.
    Units,
    /// Each erroneous symbol may be any nonzero class; its weight counts toward the total.
    AllWeights,
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            go(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Ordered ways to write `total` as `parts` positive integers, each at most `cap`.
fn compositions(total: usize, parts: usize, cap: usize) -> Vec<Vec<usize>> {
    if parts == 0 {
        return if total == 0 {
            vec![Vec::new()]
        } else {
            Vec::new()
        };
    }
    let mut out = Vec::new();
    for first in 1..=cap.min(total) {
        for mut rest in compositions(total - first, parts - 1, cap) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

/// Every pattern of total weight exactly `weight` on words of length `n`, in
/// enumeration order.
pub fn patterns_of_weight(
    table: &WeightTable,
    n: usize,
    weight: usize,
    alphabet: Alphabet,
) -> Vec<ErrorPattern> {
    if weight == 0 {
        return vec![ErrorPattern::empty()];
    }
    let cap = match alphabet {
        Alphabet::Units => 1,
        Alphabet::AllWeights => table.max_weight(),
    };
    let mut out = Vec::new();
    for k in 1..=weight.min(n) {
        for positions in combinations(n, k) {
            for comp in compositions(weight, k, cap) {
                let pools: Vec<&[Residue]> =
                    comp.iter().map(|&w| table.classes_of_weight(w)).collect();
                let mut idx = vec![0usize; k];
                if pools.iter().any(|p| p.is_empty()) {
                    continue;
                }
                loop {
                    let entries = positions
                        .iter()
                        .zip(&idx)
                        .zip(&pools)
                        .map(|((&position, &i), pool)| ErrorEntry {
                            position,
                            value: pool[i],
                        })
                        .collect();
                    out.push(ErrorPattern {
                        entries,
                        total_weight: weight as i64,
                    });
                    // odometer over the value pools, last position fastest
                    let mut slot = k;
                    loop {
                        if slot == 0 {
                            break;
                        }
                        slot -= 1;
                        idx[slot] += 1;
                        if idx[slot] < pools[slot].len() {
                            break;
                        }
                        idx[slot] = 0;
                        if slot == 0 {
                            slot = usize::MAX;
                            break;
                        }
                    }
                    if slot == usize::MAX {
                        break;
                    }
                }
            }
        }
    }
    out.sort_by_cached_key(|p| {
        let positions: Vec<usize> = p.entries.iter().map(|e| e.position).collect();
        let values: Vec<_> = p.entries.iter().map(|e| e.value.rep()).collect();
        (positions, values)
    });
    out
}

/// All patterns of total weight `0..=max_weight`, in enumeration order.
pub fn patterns_up_to(
    table: &WeightTable,
    n: usize,
    max_weight: usize,
    alphabet: Alphabet,
) -> Vec<ErrorPattern> {
    (0..=max_weight)
        .flat_map(|w| patterns_of_weight(table, n, w, alphabet))
        .collect()
}

/// The first pattern of weight at most `w_max` whose syndromes equal those of `word`.
pub fn brute_decode<F>(
    syndrome: F,
    table: &WeightTable,
    word: &[Residue],
    w_max: usize,
) -> Result<Option<ErrorPattern>>
where
    F: Fn(&[Residue]) -> Result<Vec<Residue>>,
{
    let target = syndrome(word)?;
    let (m, n) = (table.modulus(), word.len());
    for w in 0..=w_max {
        for pattern in patterns_of_weight(table, n, w, Alphabet::AllWeights) {
            if syndrome(&pattern.to_word(m, n))? == target {
                return Ok(Some(pattern));
            }
        }
    }
    Ok(None)
}

/// A nonzero word of total weight at most `w` with all-zero syndromes, if any.
/// `None` certifies minimum distance greater than `w`.
pub fn min_distance_at_most<F>(
    syndrome: F,
    table: &WeightTable,
    n: usize,
    w: usize,
) -> Result<Option<Vec<Residue>>>
where
    F: Fn(&[Residue]) -> Result<Vec<Residue>>,
{
    let m = table.modulus();
    for weight in 1..=w {
        for pattern in patterns_of_weight(table, n, weight, Alphabet::AllWeights) {
            let word = pattern.to_word(m, n);
            if syndrome(&word)?.iter().all(Residue::is_zero) {
                return Ok(Some(word));
            }
        }
    }
    Ok(None)
}

/// [`brute_decode`] tabulated once: every pattern up to `w_max`, keyed by its
/// syndromes, keeping the first pattern in enumeration order for each key.
#[derive(Debug, Clone)]
pub struct SyndromeTable {
    by_syndrome: HashMap<Vec<Residue>, ErrorPattern>,
}

impl SyndromeTable {
    pub fn build<F>(syndrome: F, table: &WeightTable, n: usize, w_max: usize) -> Result<Self>
    where
        F: Fn(&[Residue]) -> Result<Vec<Residue>>,
    {
        let m = table.modulus();
        let mut by_syndrome = HashMap::new();
        for pattern in patterns_up_to(table, n, w_max, Alphabet::AllWeights) {
            let key = syndrome(&pattern.to_word(m, n))?;
            by_syndrome.entry(key).or_insert(pattern);
        }
        Ok(SyndromeTable { by_syndrome })
    }

    pub fn lookup(&self, syndromes: &[Residue]) -> Option<&ErrorPattern> {
        self.by_syndrome.get(syndromes)
    }

    pub fn len(&self) -> usize {
        self.by_syndrome.len()
    }

    pub fn is_empty(&self) -> bool {
        self.by_syndrome.is_empty()
    }
}

/// All codewords, by encoding every message.
pub fn enumerate_codewords<C: Code>(code: &C) -> Result<Vec<Vec<Residue>>> {
    let residues = code.modulus().enumerate_residues();
    let k = code.message_length();
    let size = (residues.len() as u128)
        .checked_pow(k as u32)
        .unwrap_or(u128::MAX);
    if size > MAX_CODEWORDS {
        return Err(Error::Oversized(size));
    }
    let mut out = Vec::with_capacity(size as usize);
    let mut idx = vec![0usize; k];
    for _ in 0..size {
        let msg: Vec<Residue> = idx.iter().map(|&i| residues[i]).collect();
        out.push(code.encode(&msg)?);
        for slot in (0..k).rev() {
            idx[slot] += 1;
            if idx[slot] < residues.len() {
                break;
            }
            idx[slot] = 0;
        }
    }
    Ok(out)
}

/// Outcome of [`exhaustive_correction_suite`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct SuiteReport {
    pub codewords: usize,
    pub patterns: usize,
    pub trials: usize,
    /// Decoder returned the sent codeword and exactly the injected errors.
    pub decoder_recovered: usize,
    /// Oracle returned exactly the injected pattern.
    pub oracle_recovered: usize,
    /// Decoder's error list equals the oracle's pattern.
    pub agreements: usize,
    /// Decoder's classification differs from the injected error count.
    pub kind_mismatches: usize,
    /// First few failing trials, for diagnostics.
    pub transcript: Vec<String>,
}

impl SuiteReport {
    pub fn passed(&self) -> bool {
        self.decoder_recovered == self.trials
            && self.oracle_recovered == self.trials
            && self.agreements == self.trials
            && self.kind_mismatches == 0
    }
}

const TRANSCRIPT_LIMIT: usize = 20;

/// Injects every unit-valued error pattern of total weight at most
/// `error_weight` into every given codeword and runs both the code's decoder
/// and the tabulated oracle.
pub fn exhaustive_correction_suite<C: Code>(
    code: &C,
    table: &WeightTable,
    error_weight: usize,
    codewords: &[Vec<Residue>],
) -> Result<SuiteReport> {
    let n = code.length();
    let patterns = patterns_up_to(table, n, error_weight, Alphabet::Units);
    let mut report = SuiteReport {
        codewords: codewords.len(),
        patterns: patterns.len(),
        ..Default::default()
    };
    if codewords.is_empty() {
        return Ok(report);
    }
    let oracle = SyndromeTable::build(|w| code.syndrome_vector(w), table, n, error_weight)?;
    for c in codewords {
        for pattern in &patterns {
            report.trials += 1;
            let r = pattern.apply(c);
            let decoded = code.decode(&r)?;
            let guess = oracle.lookup(&code.syndrome_vector(&r)?);

            let expected_kind = match pattern.entries.len() {
                0 => DecodeKind::NoError,
                1 => DecodeKind::Single,
                _ => DecodeKind::Double,
            };
            let decoder_ok = decoded.corrected == *c && decoded.errors == pattern.entries;
            let oracle_ok = guess == Some(pattern);
            let agree = guess.is_some_and(|g| g.entries == decoded.errors);
            report.decoder_recovered += decoder_ok as usize;
            report.oracle_recovered += oracle_ok as usize;
            report.agreements += agree as usize;
            report.kind_mismatches += (decoded.kind != expected_kind) as usize;
            if !(decoder_ok && oracle_ok && agree) && report.transcript.len() < TRANSCRIPT_LIMIT {
                report.transcript.push(format!(
                    "codeword {} pattern {:?}: decoder {}, oracle {:?}",
                    crate::text::format_word(c),
                    pattern
                        .entries
                        .iter()
                        .map(|e| (e.position, e.value.to_string()))
                        .collect::<Vec<_>>(),
                    decoded,
                    guess.map(|g| g
                        .entries
                        .iter()
                        .map(|e| (e.position, e.value.to_string()))
                        .collect::<Vec<_>>()),
                ));
            }
        }
    }
    Ok(report)
}
