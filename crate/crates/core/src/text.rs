//! ASCII text forms for quaternions and words.
//!
//! Quaternion literals are sums of terms such as `1-i-j-k`, `-2+i+j+k`,
//! `3k` or `0`. Printing is canonical: components in the order 1, i, j, k,
//! zero components omitted, unit coefficients omitted before a basis letter,
//! no whitespace, and no leading `+`. Words are parenthesized,
//! comma-separated literal lists such as `(3,3,1,1,k,0)`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;
use crate::residue::{Modulus, Residue};

impl fmt::Display for Quaternion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (c, basis) in self.components().into_iter().zip(["", "i", "j", "k"]) {
            if c == 0 {
                continue;
            }
            if c < 0 {
                f.write_str("-")?;
            } else if !first {
                f.write_str("+")?;
            }
            let mag = c.unsigned_abs();
            if basis.is_empty() || mag != 1 {
                write!(f, "{mag}")?;
            }
            f.write_str(basis)?;
            first = false;
        }
        Ok(())
    }
}

fn parse_err(token: &str, reason: impl Into<String>) -> Error {
    Error::Parse {
        token: token.to_string(),
        reason: reason.into(),
    }
}

/// Parses a quaternion literal. A single leading sign is allowed on the first term.
pub fn parse_quaternion(text: &str) -> Result<Quaternion> {
    let s = text.trim();
    if s.is_empty() {
        return Err(parse_err(text, "empty literal"));
    }
    let bytes = s.as_bytes();
    let mut comps: [Option<i64>; 4] = [None; 4];
    let mut pos = 0;
    while pos < bytes.len() {
        let start = pos;
        // every term after the first starts at a sign (checked at the end of the loop)
        let negative = match bytes[pos] {
            b'+' if pos == 0 => return Err(parse_err(s, "leading '+' is not allowed")),
            b'+' | b'-' => {
                pos += 1;
                bytes[start] == b'-'
            }
            _ => false,
        };
        let digits_start = pos;
        while pos < bytes.len() && bytes[pos].is_ascii_digit() {
            pos += 1;
        }
        let digits = &s[digits_start..pos];
        let basis = match bytes.get(pos) {
            Some(b'i') => Some(1),
            Some(b'j') => Some(2),
            Some(b'k') => Some(3),
            _ => None,
        };
        if basis.is_some() {
            pos += 1;
        }
        let term = &s[start..pos];
        if digits.is_empty() && basis.is_none() {
            let end = (pos + 1).min(s.len());
            return Err(parse_err(
                &s[start..end],
                "expected a number or one of i, j, k",
            ));
        }
        let magnitude: i64 = if digits.is_empty() {
            1
        } else {
            digits
                .parse()
                .map_err(|_| parse_err(term, "coefficient out of range"))?
        };
        let value = if negative { -magnitude } else { magnitude };
        let slot = basis.unwrap_or(0);
        if comps[slot].is_some() {
            return Err(parse_err(term, "repeated term"));
        }
        comps[slot] = Some(value);
        if pos < bytes.len() && !matches!(bytes[pos], b'+' | b'-') {
            return Err(parse_err(&s[pos..pos + 1], "unexpected character"));
        }
    }
    Ok(Quaternion::from_components(comps.map(|c| c.unwrap_or(0))))
}

impl FromStr for Quaternion {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse_quaternion(s)
    }
}

/// Parses `(q0,q1,...)` into its quaternion literals.
pub fn parse_word(text: &str) -> Result<Vec<Quaternion>> {
    let s = text.trim();
    let inner = s
        .strip_prefix('(')
        .and_then(|rest| rest.strip_suffix(')'))
        .ok_or_else(|| parse_err(s, "a word must be enclosed in parentheses"))?;
    if inner.trim().is_empty() {
        return Ok(Vec::new());
    }
    inner.split(',').map(parse_quaternion).collect()
}

/// Parses a word and reduces every symbol modulo `m`.
pub fn parse_residue_word(text: &str, m: &Modulus) -> Result<Vec<Residue>> {
    parse_word(text)?.into_iter().map(|q| m.reduce(q)).collect()
}

pub fn format_word<T: fmt::Display>(word: &[T]) -> String {
    let parts: Vec<String> = word.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(a0: i64, a1: i64, a2: i64, a3: i64) -> Quaternion {
        Quaternion::new(a0, a1, a2, a3)
    }

    #[test]
    fn canonical_printing() {
        assert_eq!(q(0, 0, 0, 0).to_string(), "0");
        assert_eq!(q(1, -1, -1, -1).to_string(), "1-i-j-k");
        assert_eq!(q(0, -1, -1, -1).to_string(), "-i-j-k");
        assert_eq!(q(-1, 0, 0, 0).to_string(), "-1");
        assert_eq!(q(-2, 1, 1, 1).to_string(), "-2+i+j+k");
        assert_eq!(q(1, -1, -1, 2).to_string(), "1-i-j+2k");
        assert_eq!(q(0, 0, 0, 1).to_string(), "k");
        assert_eq!(q(0, 3, 0, -12).to_string(), "3i-12k");
        assert_eq!(q(i64::MIN, 0, 0, 0).to_string(), "-9223372036854775808");
    }

    #[test]
    fn parsing() {
        assert_eq!(parse_quaternion("1-i-j-k").unwrap(), q(1, -1, -1, -1));
        assert_eq!(parse_quaternion("-2+i+j+k").unwrap(), q(-2, 1, 1, 1));
        assert_eq!(parse_quaternion("k").unwrap(), Quaternion::K);
        assert_eq!(parse_quaternion("0").unwrap(), Quaternion::ZERO);
        assert_eq!(parse_quaternion("2k+3").unwrap(), q(3, 0, 0, 2));
        assert_eq!(parse_quaternion(" 7 ").unwrap(), q(7, 0, 0, 0));
        assert_eq!(parse_quaternion("-0").unwrap(), Quaternion::ZERO);
    }

    #[test]
    fn parse_errors_name_the_token() {
        let err = parse_quaternion("1+i+i").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                token: "+i".into(),
                reason: "repeated term".into()
            }
        );
        assert!(
            matches!(parse_quaternion("1+x"), Err(Error::Parse { token, .. }) if token == "+x")
        );
        assert!(matches!(parse_quaternion("2i3"), Err(Error::Parse { token, .. }) if token == "3"));
        assert!(parse_quaternion("").is_err());
        assert!(parse_quaternion("+1").is_err());
        assert!(parse_quaternion("1+").is_err());
        assert!(parse_quaternion("1--i").is_err());
        assert!(parse_quaternion("99999999999999999999").is_err());
    }

    #[test]
    fn words() {
        let w = parse_word("(3,3,1,1,k,0)").unwrap();
        assert_eq!(w.len(), 6);
        assert_eq!(w[4], Quaternion::K);
        assert_eq!(format_word(&w), "(3,3,1,1,k,0)");
        assert_eq!(
            parse_word("( 1-i-j-k , 1+i )").unwrap(),
            vec![q(1, -1, -1, -1), q(1, 1, 0, 0)]
        );
        assert_eq!(parse_word("()").unwrap(), vec![]);
        assert!(parse_word("3,3").is_err());
        assert!(parse_word("(3,,3)").is_err());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn print_parse_round_trip(c in prop::array::uniform4(-99i64..=99)) {
            let x = Quaternion::from_components(c);
            let text = x.to_string();
            prop_assert!(!text.contains(' '));
            prop_assert!(!text.starts_with('+'));
            prop_assert_eq!(parse_quaternion(&text).unwrap(), x);
        }
    }
}
