//! The residue system `H(Z)_π` of Lipschitz integers under right congruence
//! modulo a quaternion prime `π`.
//!
//! Two quaternions are congruent when their difference is a left multiple
//! `βπ`. Each class is represented by a canonical quaternion obtained by
//! rounded right division: `rep = q - round(q π̄ / p) π`, where every
//! component is rounded with `floor(x + 1/2)`. Translating `q` by `γπ`
//! shifts `q π̄ / p` by exactly `γ`, so the representative depends only on
//! the class.
//!
//! `{βπ}` is a left ideal, so multiplying classes is not representative
//! independent in general. All products here are taken on canonical
//! representatives and then reduced, which keeps every computation
//! deterministic.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};
use crate::quaternion::Quaternion;

/// Largest accepted prime norm. Canonical representatives have components
/// bounded by `sqrt(p)`, so products of representatives times `π̄` stay far
/// inside `i64` below this bound.
pub const MAX_PRIME: i64 = (1 << 31) - 1;

/// A validated quaternion prime modulus `π` with `p = N(π)` an odd rational prime.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Modulus {
    pi: Quaternion,
    p: i64,
    conj_pi: Quaternion,
}

/// A congruence class modulo `π`, held as its canonical representative.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Residue {
    rep: Quaternion,
    modulus: Modulus,
}

pub(crate) fn is_odd_prime(n: i64) -> bool {
    if n < 3 || n % 2 == 0 {
        return false;
    }
    let mut d = 3i64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Smallest quaternion of norm `p`, searching nonnegative components in
/// lexicographic order of `(a0, a1, a2, a3)`. Returns `None` only when `p`
/// is not a sum of four squares, which never happens for `p >= 0`.
pub fn find_prime_over(p: i64) -> Option<Quaternion> {
    if p < 0 {
        return None;
    }
    let bound = (p as f64).sqrt().ceil() as i64 + 1;
    for a0 in 0..=bound {
        let r0 = p - a0 * a0;
        if r0 < 0 {
            break;
        }
        for a1 in 0..=bound {
            let r1 = r0 - a1 * a1;
            if r1 < 0 {
                break;
            }
            for a2 in 0..=bound {
                let r2 = r1 - a2 * a2;
                if r2 < 0 {
                    break;
                }
                let a3 = (r2 as f64).sqrt().round() as i64;
                for cand in [a3 - 1, a3, a3 + 1] {
                    if cand >= 0 && cand * cand == r2 {
                        return Some(Quaternion::new(a0, a1, a2, cand));
                    }
                }
            }
        }
    }
    None
}

impl Modulus {
    pub fn new(pi: Quaternion) -> Result<Self> {
        let p = pi.checked_norm()?;
        if p > MAX_PRIME {
            return Err(Error::ModulusTooLarge(p));
        }
        if !is_odd_prime(p) {
            return Err(Error::NotPrimeModulus { pi, norm: p });
        }
        let conj_pi = pi.conjugate();
        debug_assert_eq!(pi * conj_pi, Quaternion::from_integer(p));
        Ok(Modulus { pi, p, conj_pi })
    }

    pub fn pi(&self) -> Quaternion {
        self.pi
    }

    /// The rational prime `p = π π̄`.
    pub fn p(&self) -> i64 {
        self.p
    }

    pub fn conj_pi(&self) -> Quaternion {
        self.conj_pi
    }

    /// Canonical reduction of an arbitrary quaternion.
    pub fn reduce(&self, q: Quaternion) -> Result<Residue> {
        let scaled = q.checked_mul(self.conj_pi)?;
        let p = self.p as i128;
        let mut beta = [0i64; 4];
        for (b, t) in beta.iter_mut().zip(scaled.components()) {
            // floor(t/p + 1/2)
            let r = (2 * t as i128 + p).div_euclid(2 * p);
            *b = i64::try_from(r).map_err(|_| Error::Overflow)?;
        }
        let shift = Quaternion::from_components(beta).checked_mul(self.pi)?;
        Ok(Residue {
            rep: q.checked_sub(shift)?,
            modulus: *self,
        })
    }

    /// Reduction of a value known to be small (a product or sum of canonical
    /// representatives); cannot overflow for `p <= MAX_PRIME`.
    fn reduce_small(&self, q: Quaternion) -> Residue {
        self.reduce(q)
            .expect("representative arithmetic stays in range")
    }

    pub fn zero(&self) -> Residue {
        Residue {
            rep: Quaternion::ZERO,
            modulus: *self,
        }
    }

    pub fn one(&self) -> Residue {
        self.reduce_small(Quaternion::ONE)
    }

    pub fn from_integer(&self, n: i64) -> Result<Residue> {
        self.reduce(Quaternion::from_integer(n))
    }

    /// The classes of the eight units, in the order of [`Quaternion::units`].
    pub fn unit_classes(&self) -> [Residue; 8] {
        Quaternion::units().map(|u| self.reduce_small(u))
    }

    /// `q1 ≡ q2` iff `q1 - q2 = βπ` for a Lipschitz integer `β`, i.e. iff every
    /// component of `(q1 - q2) π̄` is divisible by `p`.
    pub fn congruent(&self, q1: Quaternion, q2: Quaternion) -> Result<bool> {
        let t = q1.checked_sub(q2)?.checked_mul(self.conj_pi)?;
        Ok(t.components().iter().all(|c| c % self.p == 0))
    }

    /// Radius of a box centred at zero that contains every canonical representative.
    pub(crate) fn rep_bound(&self) -> i64 {
        // |rep π̄| <= p and |π̄| = sqrt(p) give |rep| <= sqrt(p).
        (self.p as f64).sqrt().ceil() as i64
    }

    /// All `p²` residue classes, sorted by representative.
    pub fn enumerate_residues(&self) -> Vec<Residue> {
        let b = self.rep_bound();
        let mut out = Vec::with_capacity((self.p * self.p) as usize);
        for a0 in -b..=b {
            for a1 in -b..=b {
                for a2 in -b..=b {
                    for a3 in -b..=b {
                        out.push(self.reduce_small(Quaternion::new(a0, a1, a2, a3)));
                    }
                }
            }
        }
        out.sort_by_key(|r| r.rep);
        out.dedup();
        out
    }
}

impl Residue {
    pub fn rep(&self) -> Quaternion {
        self.rep
    }

    pub fn modulus(&self) -> &Modulus {
        &self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.rep.is_zero()
    }

    pub fn is_one(&self) -> bool {
        *self == self.modulus.one()
    }

    fn check(&self, other: &Residue) -> Result<()> {
        if self.modulus == other.modulus {
            Ok(())
        } else {
            Err(Error::ModulusMismatch)
        }
    }

    pub fn try_add(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(self.modulus.reduce_small(self.rep + other.rep))
    }

    pub fn try_sub(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(self.modulus.reduce_small(self.rep - other.rep))
    }

    /// Product of representatives with `self` as the left factor, reduced.
    pub fn try_mul(&self, other: &Residue) -> Result<Residue> {
        self.check(other)?;
        Ok(self.modulus.reduce_small(self.rep * other.rep))
    }

    pub fn scale(&self, factor: i64) -> Result<Residue> {
        self.modulus.reduce(self.rep.checked_scale(factor)?)
    }

    /// Left-to-right power `((x·x)·x)···`, with `x⁰ = 1`.
    pub fn pow(&self, k: u64) -> Residue {
        let mut acc = self.modulus.one();
        for _ in 0..k {
            acc = acc * *self;
        }
        acc
    }

    /// Least `m >= 1` with `x^m = 1`, searching `m <= p²`.
    pub fn order(&self) -> Result<Option<u64>> {
        if self.is_zero() {
            return Err(Error::ZeroElement);
        }
        let limit = (self.modulus.p * self.modulus.p) as u64;
        let one = self.modulus.one();
        let mut acc = *self;
        for m in 1..=limit {
            if acc == one {
                return Ok(Some(m));
            }
            acc = acc * *self;
        }
        Ok(None)
    }

    fn is_two_sided_inverse(&self, y: &Residue) -> bool {
        (*self * *y).is_one() && (*y * *self).is_one()
    }

    /// A two-sided inverse, if one exists. Tries the complementary power
    /// first and falls back to a search over all classes.
    pub fn inverse(&self) -> Result<Option<Residue>> {
        if let Some(m) = self.order()? {
            let y = self.pow(m - 1);
            if self.is_two_sided_inverse(&y) {
                return Ok(Some(y));
            }
        }
        Ok(self
            .modulus
            .enumerate_residues()
            .into_iter()
            .find(|y| self.is_two_sided_inverse(y)))
    }

    /// `{u · x}` over the eight units, deduplicated and sorted.
    pub fn left_associates(&self) -> Vec<Residue> {
        let mut out: Vec<Residue> = self
            .modulus
            .unit_classes()
            .iter()
            .map(|u| *u * *self)
            .collect();
        out.sort_by_key(|r| r.rep);
        out.dedup();
        out
    }

    pub fn is_left_associate_of(&self, other: &Residue) -> bool {
        self.modulus
            .unit_classes()
            .iter()
            .any(|u| *u * *other == *self)
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.rep.fmt(f)
    }
}

impl Add for Residue {
    type Output = Residue;
    fn add(self, rhs: Residue) -> Residue {
        self.try_add(&rhs).expect("residue modulus mismatch")
    }
}

impl Sub for Residue {
    type Output = Residue;
    fn sub(self, rhs: Residue) -> Residue {
        self.try_sub(&rhs).expect("residue modulus mismatch")
    }
}

impl Neg for Residue {
    type Output = Residue;
    fn neg(self) -> Residue {
        self.modulus.reduce_small(-self.rep)
    }
}

impl Mul for Residue {
    type Output = Residue;
    fn mul(self, rhs: Residue) -> Residue {
        self.try_mul(&rhs).expect("residue modulus mismatch")
    }
}
