//! Reproduction checks behind the CLI `verify` command.

use std::fmt;

use crate::code::{Code, DecodeKind, ErrorEntry};
use crate::dec::{Classification, DecCode};
use crate::error::Result;
use crate::metric::WeightTable;
use crate::omec::OmecCode;
use crate::oracle::{
    enumerate_codewords, exhaustive_correction_suite, min_distance_at_most, SuiteReport,
};
use crate::quaternion::Quaternion;
use crate::residue::{Modulus, Residue};
use crate::text::{format_word, parse_quaternion, parse_residue_word};

pub const SUITES: [&str; 5] = ["tables", "examples", "omec7", "dec13", "mindist"];

/// Codewords sampled for the p = 13 double-error suite.
pub const DEC13_SAMPLE: usize = 200;

pub const ALPHA_POWERS: [&str; 8] = [
    "1", "1-i-j-k", "-i-j-k", "-1", "-1+i+j+k", "i+j+k", "1", "1-i-j-k",
];

pub const BETA_POWERS: [&str; 16] = [
    "1", "2", "-2+i+j+k", "1-i-j-k", "3", "i+j+k", "-1", "-2", "2-i-j-k", "-1+i+j+k", "-3",
    "-i-j-k", "1", "2", "-2+i+j+k", "1-i-j-k",
];

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Check {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        write!(f, "{status} {}: {}", self.name, self.detail)
    }
}

fn lit(text: &str) -> Quaternion {
    parse_quaternion(text).expect("built-in literal")
}

pub fn modulus7() -> Modulus {
    Modulus::new(lit("2+i+j+k")).expect("2+i+j+k is prime")
}

pub fn modulus13() -> Modulus {
    Modulus::new(lit("1+2i+2j+2k")).expect("1+2i+2j+2k is prime")
}

pub fn omec7() -> OmecCode {
    let m = modulus7();
    OmecCode::new(m, m.reduce(lit("1-i-j-k")).unwrap()).expect("valid p = 7 code")
}

pub fn dec13() -> DecCode {
    let m = modulus13();
    DecCode::new(m, m.from_integer(2).unwrap(), 1).expect("valid p = 13 code")
}

/// `gen^0 … gen^(count-1)` in canonical printing.
pub fn power_table(gen: &Residue, count: u64) -> Vec<String> {
    (0..count).map(|s| gen.pow(s).to_string()).collect()
}

/// The zero codeword followed by `DEC13_SAMPLE - 1` messages spread over the
/// message space by a fixed multiplicative stride.
pub fn dec13_sample(code: &DecCode) -> Result<Vec<Vec<Residue>>> {
    let mut residues = code.modulus().enumerate_residues();
    residues.sort_by_key(|r| !r.is_zero());
    let base = residues.len() as u64;
    let k = code.message_length();
    let space = base.pow(k as u32);
    (0..DEC13_SAMPLE as u64)
        .map(|i| {
            let mut x = i.wrapping_mul(2_654_435_761) % space;
            let mut msg = Vec::with_capacity(k);
            for _ in 0..k {
                msg.push(residues[(x % base) as usize]);
                x /= base;
            }
            code.encode(&msg)
        })
        .collect()
}

fn table_check(name: &str, pi: &str, gen: &str, expected: &[&str]) -> Check {
    let m = Modulus::new(lit(pi)).unwrap();
    let rows = power_table(&m.reduce(lit(gen)).unwrap(), expected.len() as u64);
    let bad: Vec<usize> = (0..expected.len())
        .filter(|&s| rows[s] != expected[s])
        .collect();
    let detail = if bad.is_empty() {
        format!("{} rows of {gen} mod {pi} match", expected.len())
    } else {
        format!("rows {bad:?} differ")
    };
    Check::new(name, bad.is_empty(), detail)
}

pub fn tables() -> Vec<Check> {
    vec![
        table_check(
            "alpha powers mod 2+i+j+k",
            "2+i+j+k",
            "1-i-j-k",
            &ALPHA_POWERS,
        ),
        table_check(
            "beta powers mod 1+2i+2j+2k",
            "1+2i+2j+2k",
            "2",
            &BETA_POWERS,
        ),
    ]
}

pub fn examples() -> Result<Vec<Check>> {
    let mut out = Vec::new();

    let m3 = Modulus::new(lit("1+i+j"))?;
    let residues = m3.enumerate_residues();
    let mut small: Vec<Residue> = std::iter::once(Quaternion::ZERO)
        .chain(Quaternion::units())
        .map(|q| m3.reduce(q))
        .collect::<Result<_>>()?;
    small.sort_by_key(|r| r.rep());
    out.push(Check::new(
        "residues mod 1+i+j",
        residues == small,
        format!(
            "{} classes mod 1+i+j, represented by 0 and the eight units",
            residues.len()
        ),
    ));

    let code = omec7();
    let m = *code.modulus();
    let r = parse_residue_word("(1-i-j-k,1+i,-1+i+j+k)", &m)?;
    let s = code.syndrome(&r)?;
    let factored = s == m.reduce(Quaternion::I)? * code.alpha();
    let report = code.decode(&r)?;
    let expected = "single; position 1 value i; corrected (1-i-j-k,1,-1+i+j+k)";
    out.push(Check::new(
        "single-error decode, p=7",
        s.rep() == lit("1+i+j-k") && factored && report.to_string() == expected,
        format!("syndrome {s} = i*alpha; {report}"),
    ));

    let code = dec13();
    let m = *code.modulus();
    let r = parse_residue_word("(3,3,1,1,k,0)", &m)?;
    let (s1, s3) = code.syndromes(&r)?;
    let syndromes_ok =
        m.congruent(s1.rep(), lit("1-i-j+2k"))? && m.congruent(s3.rep(), lit("-1+i+j+2k"))?;
    let double = code.classify(s1, s3) == Classification::Double;
    let located = code.locate_double(s1, s3);
    let eps = m.reduce(lit("-2k"))?;
    let eps_ok = located
        .as_ref()
        .is_some_and(|d| d.roots[1] * d.roots[0] == eps);
    let report = code.decode(&r)?;
    let errors_ok = report.errors
        == vec![
            ErrorEntry {
                position: 3,
                value: m.one(),
            },
            ErrorEntry {
                position: 4,
                value: m.reduce(Quaternion::K)?,
            },
        ];
    let corrected_ok = format_word(&report.corrected) == "(3,3,1,0,0,0)";
    out.push(Check::new(
        "double-error decode, p=13",
        syndromes_ok
            && double
            && eps_ok
            && errors_ok
            && corrected_ok
            && report.kind == DecodeKind::Double,
        format!("s1 = {s1}, s3 = {s3}, root product -2k; {report}"),
    ));
    Ok(out)
}

fn suite_check(name: &str, report: &SuiteReport) -> Check {
    let mut detail = format!(
        "{} codewords x {} patterns: decoder {}/{}, oracle {}/{}, agree {}/{}",
        report.codewords,
        report.patterns,
        report.decoder_recovered,
        report.trials,
        report.oracle_recovered,
        report.trials,
        report.agreements,
        report.trials
    );
    if let Some(first) = report.transcript.first() {
        detail.push_str("; first failure: ");
        detail.push_str(first);
    }
    Check::new(name, report.passed() && report.trials > 0, detail)
}

pub fn omec7_suite() -> Result<Vec<Check>> {
    let code = omec7();
    let table = WeightTable::new(code.modulus());
    let words = enumerate_codewords(&code)?;
    let report = exhaustive_correction_suite(&code, &table, 1, &words)?;
    Ok(vec![suite_check("omec p=7 single errors", &report)])
}

pub fn dec13_suite() -> Result<Vec<Check>> {
    let code = dec13();
    let table = WeightTable::new(code.modulus());
    let words = dec13_sample(&code)?;
    let report = exhaustive_correction_suite(&code, &table, 2, &words)?;

    let mut closed = true;
    for w in &words {
        let mut shifted = w.clone();
        for step in 1..=2 * code.n() {
            shifted = code.negacyclic_shift(&shifted)?;
            closed &= code.is_codeword(&shifted)?;
            if step == 2 * code.n() {
                closed &= shifted == *w;
            }
        }
    }
    Ok(vec![
        suite_check("dec p=13 double errors", &report),
        Check::new(
            "dec p=13 negacyclic closure",
            closed,
            format!("{} codewords, {} shifts each", words.len(), 2 * code.n()),
        ),
    ])
}

pub fn mindist() -> Result<Vec<Check>> {
    let omec = omec7();
    let t7 = WeightTable::new(omec.modulus());
    let w7 = min_distance_at_most(|w| omec.syndrome_vector(w), &t7, omec.n(), 2)?;
    let dec = dec13();
    let t13 = WeightTable::new(dec.modulus());
    let w13 = min_distance_at_most(|w| dec.syndrome_vector(w), &t13, dec.n(), 3)?;
    let detail = |w: &Option<Vec<Residue>>, d: usize| match w {
        None => format!("no nonzero codeword of weight <= {}, d >= {d}", d - 1),
        Some(word) => format!("codeword {} has weight <= {}", format_word(word), d - 1),
    };
    Ok(vec![
        Check::new("omec p=7 distance", w7.is_none(), detail(&w7, 3)),
        Check::new("dec p=13 distance", w13.is_none(), detail(&w13, 4)),
    ])
}

/// Runs one named suite; `None` for an unknown name.
pub fn run_suite(name: &str) -> Option<Result<Vec<Check>>> {
    Some(match name {
        "tables" => Ok(tables()),
        "examples" => examples(),
        "omec7" => omec7_suite(),
        "dec13" => dec13_suite(),
        "mindist" => mindist(),
        _ => return None,
    })
}
