//! Double-error-correcting negacyclic codes.
//!
//! `β` has order `2n`, so `β^n = -1` and the code polynomials live in
//! `H(Z)_π[x] / (x^n + 1)`. Codewords satisfy `c(β) = c(β³) = 0` and are
//! generated by `g(x) = (x - β)(x - β³)`. Received symbols multiply powers
//! of `β` on the left throughout.
//!
//! Decoding classifies the syndrome pair `(s1, s3)`:
//!
//! * both zero: no error;
//! * `s1 = u·β^l` and `s3 = u·β^(3l)` for a unit `u`: one error `u` at `l`;
//! * otherwise two errors, found among pairs of candidate roots `z = u·β^l`
//!   with `z1 + z2 = s1`. The locator value `ε = (s1³ - s3)/(3 s1)` prunes
//!   the pair search when `3 s1` is invertible. Every accepted pair is
//!   checked against both raw syndrome equations.
//!
//! The roots do not commute in general, so `σ(z) = z² - s1 z + ε` is not
//! assumed to vanish at both of them; the pair check is authoritative.

use std::collections::HashMap;

use crate::code::{
    check_length, check_modulus, left_dot, Code, DecodeKind, DecodeReport, ErrorEntry,
};
use crate::error::{Error, Result};
use crate::residue::{Modulus, Residue};

/// Which side of `s1³ - s3` the inverse of `3 s1` multiplies.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EpsilonSide {
    /// `(3 s1)⁻¹ · (s1³ - s3)`
    InverseLeft,
    /// `(s1³ - s3) · (3 s1)⁻¹`
    InverseRight,
}

/// Division side used by [`DecCode::epsilon`].
pub const EPSILON_SIDE: EpsilonSide = EpsilonSide::InverseLeft;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    NoError,
    Single { position: usize, value: Residue },
    Double,
    Uncorrectable,
}

/// Two located errors together with their roots `z = value · β^position`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DoubleError {
    pub errors: [ErrorEntry; 2],
    pub roots: [Residue; 2],
}

#[derive(Debug, Clone, Copy)]
struct Candidate {
    position: usize,
    value: Residue,
    z1: Residue,
    z3: Residue,
}

#[derive(Debug, Clone)]
pub struct DecCode {
    modulus: Modulus,
    beta: Residue,
    n: usize,
    t: usize,
    h_rows: Vec<Vec<Residue>>,
    candidates: Vec<Candidate>,
    by_z1: HashMap<Residue, Vec<usize>>,
    inverses: HashMap<Residue, Residue>,
}

impl DecCode {
    /// Builds the code with `n` taken from the order `2n` of `β`.
    pub fn new(modulus: Modulus, beta: Residue, t: usize) -> Result<Self> {
        if *beta.modulus() != modulus {
            return Err(Error::ModulusMismatch);
        }
        let order = beta.order()?;
        match order {
            Some(o) if o % 2 == 0 => Self::with_length(modulus, beta, (o / 2) as usize, t),
            _ => Err(Error::WrongOrder {
                generator: beta.rep(),
                expected: 0,
                actual: order,
            }),
        }
    }

    pub fn with_length(modulus: Modulus, beta: Residue, n: usize, t: usize) -> Result<Self> {
        if *beta.modulus() != modulus {
            return Err(Error::ModulusMismatch);
        }
        let order = beta.order()?;
        if order != Some(2 * n as u64) {
            return Err(Error::WrongOrder {
                generator: beta.rep(),
                expected: 2 * n as u64,
                actual: order,
            });
        }
        if t != 1 || n <= t {
            return Err(Error::UnsupportedDesign(t));
        }
        debug_assert_eq!(beta.pow(n as u64), -modulus.one());

        let h_rows: Vec<Vec<Residue>> = (0..=t as u64)
            .map(|j| (0..n as u64).map(|l| beta.pow((2 * j + 1) * l)).collect())
            .collect();
        for a in 0..n {
            for b in a + 1..n {
                if h_rows[0][b].is_left_associate_of(&h_rows[0][a]) {
                    return Err(Error::AssociateCollision(a, b));
                }
            }
        }

        // z = u·β^e over e < 2n and u ∈ {1, i, j, k}; β^(l+n) = -β^l folds e into
        // a position below n with the sign moved onto the value.
        let units = modulus.unit_classes();
        let mut candidates = Vec::with_capacity(8 * n);
        for e in 0..2 * n {
            for u in [units[0], units[2], units[4], units[6]] {
                let (position, value) = if e < n { (e, u) } else { (e - n, -u) };
                candidates.push(Candidate {
                    position,
                    value,
                    z1: value * h_rows[0][position],
                    z3: value * h_rows[1][position],
                });
            }
        }
        let mut by_z1: HashMap<Residue, Vec<usize>> = HashMap::new();
        for (idx, c) in candidates.iter().enumerate() {
            by_z1.entry(c.z1).or_default().push(idx);
        }

        let mut inverses = HashMap::new();
        for x in modulus.enumerate_residues() {
            if x.is_zero() {
                continue;
            }
            if let Some(y) = x.inverse()? {
                inverses.insert(x, y);
            }
        }

        Ok(DecCode {
            modulus,
            beta,
            n,
            t,
            h_rows,
            candidates,
            by_z1,
            inverses,
        })
    }

    pub fn beta(&self) -> Residue {
        self.beta
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn t(&self) -> usize {
        self.t
    }

    /// Row `j` holds `β^((2j+1) l)` for `l < n`.
    pub fn h_rows(&self) -> &[Vec<Residue>] {
        &self.h_rows
    }

    /// Coefficients of `(x - β)(x - β³) = x² - (β + β³)x + β·β³`, ascending.
    pub fn generator_poly(&self) -> Vec<Residue> {
        let b1 = self.h_rows[0][1];
        let b3 = self.h_rows[1][1];
        vec![b1 * b3, -(b1 + b3), self.modulus.one()]
    }

    /// `m(x)·g(x)` with message coefficients as left factors; `n - 2` symbols in.
    pub fn encode(&self, msg: &[Residue]) -> Result<Vec<Residue>> {
        let g = self.generator_poly();
        check_length(msg, self.n + 1 - g.len())?;
        check_modulus(&self.modulus, msg)?;
        let mut word = vec![self.modulus.zero(); self.n];
        for (i, m) in msg.iter().enumerate() {
            for (j, gj) in g.iter().enumerate() {
                word[i + j] = word[i + j] + *m * *gj;
            }
        }
        Ok(word)
    }

    pub fn syndromes(&self, r: &[Residue]) -> Result<(Residue, Residue)> {
        check_length(r, self.n)?;
        check_modulus(&self.modulus, r)?;
        Ok((
            left_dot(&self.modulus, r, &self.h_rows[0]),
            left_dot(&self.modulus, r, &self.h_rows[1]),
        ))
    }

    pub fn is_codeword(&self, w: &[Residue]) -> Result<bool> {
        let (s1, s3) = self.syndromes(w)?;
        Ok(s1.is_zero() && s3.is_zero())
    }

    /// `x·c(x) mod (x^n + 1)`: shift right one place, negating the wrapped symbol.
    pub fn negacyclic_shift(&self, w: &[Residue]) -> Result<Vec<Residue>> {
        check_length(w, self.n)?;
        let mut out = Vec::with_capacity(self.n);
        out.push(-w[self.n - 1]);
        out.extend_from_slice(&w[..self.n - 1]);
        Ok(out)
    }

    fn single_match(&self, s1: Residue, s3: Residue) -> Option<&Candidate> {
        self.by_z1
            .get(&s1)?
            .iter()
            .map(|&idx| &self.candidates[idx])
            .find(|c| c.z3 == s3)
    }

    pub fn classify(&self, s1: Residue, s3: Residue) -> Classification {
        if s1.is_zero() && s3.is_zero() {
            return Classification::NoError;
        }
        if let Some(c) = self.single_match(s1, s3) {
            return Classification::Single {
                position: c.position,
                value: c.value,
            };
        }
        // Row-0 entries are pairwise non-associate, so two unit errors at
        // distinct positions cannot cancel in s1.
        if s1.is_zero() {
            return Classification::Uncorrectable;
        }
        Classification::Double
    }

    pub fn epsilon_with(&self, side: EpsilonSide, s1: Residue, s3: Residue) -> Result<Residue> {
        let denom = s1.scale(3)?;
        let inv = *self.inverses.get(&denom).ok_or(Error::EpsilonUnavailable)?;
        let num = s1 * s1 * s1 - s3;
        Ok(match side {
            EpsilonSide::InverseLeft => inv * num,
            EpsilonSide::InverseRight => num * inv,
        })
    }

    /// `ε = (s1³ - s3)/(3 s1)`; fails with [`Error::EpsilonUnavailable`] when
    /// `3 s1` has no two-sided inverse.
    pub fn epsilon(&self, s1: Residue, s3: Residue) -> Result<Residue> {
        self.epsilon_with(EPSILON_SIDE, s1, s3)
    }

    /// Searches candidate root pairs for two errors at distinct positions.
    /// Returns `None` when no pair, or more than one pair, explains both syndromes.
    pub fn locate_double(&self, s1: Residue, s3: Residue) -> Option<DoubleError> {
        let eps = self.epsilon(s1, s3).ok();
        let filters: &[Option<Residue>] = if eps.is_some() { &[eps, None] } else { &[None] };
        for filter in filters {
            let mut found: Vec<DoubleError> = Vec::new();
            for a in &self.candidates {
                let Some(partners) = self.by_z1.get(&(s1 - a.z1)) else {
                    continue;
                };
                for b in partners.iter().map(|&idx| &self.candidates[idx]) {
                    if b.position <= a.position {
                        continue;
                    }
                    if let Some(e) = filter {
                        if a.z1 * b.z1 != *e && b.z1 * a.z1 != *e {
                            continue;
                        }
                    }
                    if a.z3 + b.z3 == s3 {
                        found.push(DoubleError {
                            errors: [
                                ErrorEntry {
                                    position: a.position,
                                    value: a.value,
                                },
                                ErrorEntry {
                                    position: b.position,
                                    value: b.value,
                                },
                            ],
                            roots: [a.z1, b.z1],
                        });
                    }
                }
            }
            match found.len() {
                0 => continue,
                1 => return found.pop(),
                _ => return None,
            }
        }
        None
    }

    pub fn decode(&self, r: &[Residue]) -> Result<DecodeReport> {
        let (s1, s3) = self.syndromes(r)?;
        Ok(match self.classify(s1, s3) {
            Classification::NoError => DecodeReport::unchanged(DecodeKind::NoError, r),
            Classification::Single { position, value } => {
                DecodeReport::corrected(DecodeKind::Single, r, vec![ErrorEntry { position, value }])
            }
            Classification::Double => match self.locate_double(s1, s3) {
                Some(d) => DecodeReport::corrected(DecodeKind::Double, r, d.errors.to_vec()),
                None => DecodeReport::unchanged(DecodeKind::Uncorrectable, r),
            },
            Classification::Uncorrectable => DecodeReport::unchanged(DecodeKind::Uncorrectable, r),
        })
    }
}

impl Code for DecCode {
    fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    fn length(&self) -> usize {
        self.n
    }

    fn message_length(&self) -> usize {
        self.n - 2
    }

    fn encode(&self, message: &[Residue]) -> Result<Vec<Residue>> {
        DecCode::encode(self, message)
    }

    fn syndrome_vector(&self, word: &[Residue]) -> Result<Vec<Residue>> {
        let (s1, s3) = self.syndromes(word)?;
        Ok(vec![s1, s3])
    }

    fn decode(&self, word: &[Residue]) -> Result<DecodeReport> {
        DecCode::decode(self, word)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::quaternion::Quaternion;
    use crate::text::{parse_quaternion, parse_residue_word};

    fn q(a0: i64, a1: i64, a2: i64, a3: i64) -> Quaternion {
        Quaternion::new(a0, a1, a2, a3)
    }

    fn m13() -> Modulus {
        Modulus::new(q(1, 2, 2, 2)).unwrap()
    }

    fn code13() -> DecCode {
        let m = m13();
        DecCode::new(m, m.from_integer(2).unwrap(), 1).unwrap()
    }

    fn word(text: &str) -> Vec<Residue> {
        parse_residue_word(text, &m13()).unwrap()
    }

    fn res(text: &str) -> Residue {
        m13().reduce(parse_quaternion(text).unwrap()).unwrap()
    }

    fn unit_error(n: usize, pos: &[(usize, Residue)]) -> Vec<Residue> {
        let mut e = vec![m13().zero(); n];
        for &(l, u) in pos {
            e[l] = e[l] + u;
        }
        e
    }

    fn add(a: &[Residue], b: &[Residue]) -> Vec<Residue> {
        a.iter().zip(b).map(|(x, y)| *x + *y).collect()
    }

    #[test]
    fn parity_check_rows() {
        let code = code13();
        assert_eq!(code.n(), 6);
        assert_eq!(code.h_rows()[0], word("(1,2,-2+i+j+k,1-i-j-k,3,i+j+k)"));
        assert_eq!(code.h_rows()[1], word("(1,1-i-j-k,-1,-1+i+j+k,1,1-i-j-k)"));
        assert_eq!(code.beta().pow(6), -m13().one());
    }

    #[test]
    fn build_rejections() {
        let m = m13();
        let minus_one = -m.one();
        assert!(matches!(
            DecCode::with_length(m, minus_one, 6, 1),
            Err(Error::WrongOrder {
                expected: 12,
                actual: Some(2),
                ..
            })
        ));
        let two = m.from_integer(2).unwrap();
        assert_eq!(
            DecCode::new(m, two, 2).unwrap_err(),
            Error::UnsupportedDesign(2)
        );
        assert_eq!(
            DecCode::new(m, two, 0).unwrap_err(),
            Error::UnsupportedDesign(0)
        );
        assert_eq!(
            DecCode::new(m, m.zero(), 1).unwrap_err(),
            Error::ZeroElement
        );
        // 3 has order 3: odd, so no negacyclic length
        assert!(matches!(
            DecCode::new(m, m.from_integer(3).unwrap(), 1),
            Err(Error::WrongOrder {
                actual: Some(3),
                ..
            })
        ));
    }

    #[test]
    fn generator_polynomial() {
        let code = code13();
        let g = code.generator_poly();
        // (x - 2)(x - 8) = x² - 10x + 16 over the integers, and -10 ≡ 16 ≡ 3 (mod 13)
        let oracle = [16, -10, 1].map(|c| m13().from_integer(c).unwrap());
        assert_eq!(g, oracle.to_vec());
        assert_eq!(g, word("(3,3,1)"));
        assert_eq!(-(code.beta() + code.beta().pow(3)), res("-3+i+j+k"));
        for root in [code.beta(), code.beta().pow(3)] {
            let value = g
                .iter()
                .enumerate()
                .fold(m13().zero(), |acc, (i, gi)| acc + *gi * root.pow(i as u64));
            assert!(value.is_zero());
        }
    }

    #[test]
    fn codeword_membership_and_encoding() {
        let code = code13();
        let m = m13();
        assert!(code.is_codeword(&word("(3,3,1,0,0,0)")).unwrap());
        assert!(code.is_codeword(&[m.zero(); 6]).unwrap());
        assert!(!code.is_codeword(&word("(1,0,0,0,0,0)")).unwrap());
        assert_eq!(
            code.encode(&word("(1,0,0,0)")).unwrap(),
            word("(3,3,1,0,0,0)")
        );
        assert_eq!(code.encode(&[m.zero(); 4]).unwrap(), vec![m.zero(); 6]);
        assert_eq!(
            code.encode(&[m.zero(); 3]).unwrap_err(),
            Error::LengthMismatch {
                expected: 4,
                got: 3
            }
        );
        assert!(code.is_codeword(&[m.zero(); 5]).is_err());
    }

    #[test]
    fn left_multiples_of_the_generator_are_codewords() {
        let code = code13();
        let all = m13().enumerate_residues();
        for seed in 0..500usize {
            let msg: Vec<Residue> = (0..4)
                .map(|i| all[(seed * 37 + i * 101 + seed * seed * i) % all.len()])
                .collect();
            assert!(code.is_codeword(&code.encode(&msg).unwrap()).unwrap());
        }
    }

    #[test]
    fn negacyclic_shift() {
        let code = code13();
        let c = word("(3,3,1,0,0,0)");
        let shifted = code.negacyclic_shift(&c).unwrap();
        assert_eq!(shifted, word("(0,3,3,1,0,0)"));
        assert!(code.is_codeword(&shifted).unwrap());
        let w = word("(1,i,j,k,2,-3)");
        assert_eq!(code.negacyclic_shift(&w).unwrap(), word("(3,1,i,j,k,2)"));
        let mut x = w.clone();
        for _ in 0..12 {
            x = code.negacyclic_shift(&x).unwrap();
        }
        assert_eq!(x, w);
        let zero = vec![m13().zero(); 6];
        assert_eq!(code.negacyclic_shift(&zero).unwrap(), zero);
    }

    #[test]
    fn syndromes_of_a_double_error_word() {
        let code = code13();
        let (s1, s3) = code.syndromes(&word("(3,3,1,1,k,0)")).unwrap();
        assert_eq!(s1, res("1-i-j+2k"));
        assert_eq!(s3, res("-1+i+j+2k"));
        assert_eq!(s1.rep(), q(-1, 1, 0, 0));
        assert_eq!(s3.rep(), q(-2, -1, -1, 0));
        assert_ne!(s1 * s1 * s1, s3);
        let z = m13().zero();
        assert_eq!(code.syndromes(&word("(3,3,1,0,0,0)")).unwrap(), (z, z));
        let u = res("-j");
        let e = unit_error(6, &[(2, u)]);
        assert_eq!(
            code.syndromes(&e).unwrap(),
            (u * code.beta().pow(2), u * code.beta().pow(6))
        );
    }

    #[test]
    fn classification() {
        let code = code13();
        let z = m13().zero();
        assert_eq!(code.classify(z, z), Classification::NoError);
        let k = res("k");
        let (s1, s3) = code.syndromes(&unit_error(6, &[(4, k)])).unwrap();
        assert_eq!(s1, res("3k"));
        assert_eq!(s3, k);
        assert_eq!(
            code.classify(s1, s3),
            Classification::Single {
                position: 4,
                value: k
            }
        );
        let (s1, s3) = code.syndromes(&word("(3,3,1,1,k,0)")).unwrap();
        assert_eq!(code.classify(s1, s3), Classification::Double);
        assert_eq!(code.classify(z, k), Classification::Uncorrectable);
    }

    #[test]
    fn epsilon_for_unit_value_pairs() {
        let code = code13();
        let one = m13().one();
        for l1 in 0..6 {
            for l2 in l1 + 1..6 {
                let (s1, s3) = code
                    .syndromes(&unit_error(6, &[(l1, one), (l2, one)]))
                    .unwrap();
                let expected = code.beta().pow((l1 + l2) as u64);
                assert_eq!(code.epsilon(s1, s3).unwrap(), expected);
                assert_eq!(
                    code.epsilon_with(EpsilonSide::InverseRight, s1, s3)
                        .unwrap(),
                    expected
                );
            }
        }
    }

    /// For every unit double-error pattern, counts how often each side's ε
    /// equals one of the two products of the true roots.
    fn epsilon_root_product_hits(code: &DecCode) -> (usize, usize, usize) {
        let units = m13().unit_classes();
        let (mut defined, mut left_hits, mut right_hits) = (0, 0, 0);
        for l1 in 0..6 {
            for l2 in l1 + 1..6 {
                for u1 in units {
                    for u2 in units {
                        let (s1, s3) = code
                            .syndromes(&unit_error(6, &[(l1, u1), (l2, u2)]))
                            .unwrap();
                        let z1 = u1 * code.beta().pow(l1 as u64);
                        let z2 = u2 * code.beta().pow(l2 as u64);
                        let products = [z1 * z2, z2 * z1];
                        let left = code.epsilon_with(EpsilonSide::InverseLeft, s1, s3);
                        let right = code.epsilon_with(EpsilonSide::InverseRight, s1, s3);
                        assert_eq!(left.is_ok(), right.is_ok());
                        if let (Ok(l), Ok(r)) = (left, right) {
                            defined += 1;
                            left_hits += products.contains(&l) as usize;
                            right_hits += products.contains(&r) as usize;
                        }
                    }
                }
            }
        }
        (defined, left_hits, right_hits)
    }

    #[test]
    fn epsilon_side_calibration() {
        // 3·s1 is two-sidedly invertible for 144 of the 960 patterns; each side
        // reproduces a root product in 60 of them, so neither side is preferred
        // and EPSILON_SIDE stays InverseLeft.
        assert_eq!(epsilon_root_product_hits(&code13()), (144, 60, 60));
        assert_eq!(EPSILON_SIDE, EpsilonSide::InverseLeft);
    }

    #[test]
    fn epsilon_unavailable_when_three_s1_is_not_invertible() {
        // 3·s1 = 1+j here; its left and right inverses differ.
        let code = code13();
        let (s1, s3) = code.syndromes(&word("(3,3,1,1,k,0)")).unwrap();
        assert_eq!(s1.scale(3).unwrap(), res("1+j"));
        assert_eq!(code.epsilon(s1, s3), Err(Error::EpsilonUnavailable));
        assert_eq!(
            code.epsilon(m13().zero(), s3),
            Err(Error::EpsilonUnavailable)
        );
    }

    #[test]
    fn locates_a_double_error() {
        let code = code13();
        let (s1, s3) = code.syndromes(&word("(3,3,1,1,k,0)")).unwrap();
        let d = code.locate_double(s1, s3).unwrap();
        assert_eq!(
            d.errors[0],
            ErrorEntry {
                position: 3,
                value: m13().one()
            }
        );
        assert_eq!(
            d.errors[1],
            ErrorEntry {
                position: 4,
                value: res("k")
            }
        );
        assert_eq!(d.roots, [code.beta().pow(3), res("3k")]);
        // the product of the roots, taken second-by-first, is -2k = β⁷k
        assert_eq!(d.roots[1] * d.roots[0], res("-2k"));
        assert_eq!(res("-2k"), code.beta().pow(7) * res("k"));

        let report = code.decode(&word("(3,3,1,1,k,0)")).unwrap();
        assert_eq!(report.kind, DecodeKind::Double);
        assert_eq!(report.corrected, word("(3,3,1,0,0,0)"));
        assert_eq!(
            report.to_string(),
            "double; position 3 value 1; position 4 value k; corrected (3,3,1,0,0,0)"
        );
    }

    #[test]
    fn locates_an_injected_pair() {
        let code = code13();
        let c = code.encode(&word("(2,i,0,1-j)")).unwrap();
        let e = unit_error(6, &[(0, res("i")), (5, res("-j"))]);
        let r = add(&c, &e);
        let (s1, s3) = code.syndromes(&r).unwrap();
        let d = code.locate_double(s1, s3).unwrap();
        assert_eq!(
            d.errors.map(|e| (e.position, e.value)),
            [(0, res("i")), (5, res("-j"))]
        );
        let report = code.decode(&r).unwrap();
        assert_eq!(report.corrected, c);
    }

    #[test]
    fn candidate_folding_matches_raw_powers() {
        let code = code13();
        let units = m13().unit_classes();
        for e in 0..12u64 {
            for u in [units[0], units[2], units[4], units[6]] {
                let z = u * code.beta().pow(e);
                assert!(code.candidates.iter().any(|c| c.z1 == z
                    && c.z3 == u * code.beta().pow(3 * e)
                    && c.position == (e % 6) as usize));
            }
        }
        assert_eq!(code.candidates.len(), 48);
    }

    #[test]
    fn every_single_error_on_a_codeword() {
        let code = code13();
        let c = word("(3,3,1,0,0,0)");
        let mut count = 0;
        for l in 0..6 {
            for u in m13().unit_classes() {
                let r = add(&c, &unit_error(6, &[(l, u)]));
                let report = code.decode(&r).unwrap();
                assert_eq!(report.kind, DecodeKind::Single);
                assert_eq!(
                    report.errors,
                    vec![ErrorEntry {
                        position: l,
                        value: u
                    }]
                );
                assert_eq!(report.corrected, c);
                count += 1;
            }
        }
        assert_eq!(count, 48);
        assert_eq!(code.decode(&c).unwrap().kind, DecodeKind::NoError);
    }
}
