//! Exact arithmetic on Lipschitz integers, the quaternions `a0 + a1 i + a2 j + a3 k`
//! with all four components in `Z`.
//!
//! Every operation has a `checked_*` form that reports overflow. The operator
//! impls (`+`, `-`, `*`, unary `-`) delegate to those and panic on overflow
//! instead of wrapping.

use std::ops::{Add, Mul, Neg, Sub};

use crate::error::{Error, Result};

/// A Lipschitz integer quaternion. `a0` is the complete (scalar) part and
/// `(a1, a2, a3)` the vector part.
///
/// The derived ordering is lexicographic on `(a0, a1, a2, a3)`; it is used
/// as the deterministic tie-break wherever several representatives qualify.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Quaternion {
    pub a0: i64,
    pub a1: i64,
    pub a2: i64,
    pub a3: i64,
}

impl Quaternion {
    pub const ZERO: Quaternion = Quaternion::new(0, 0, 0, 0);
    pub const ONE: Quaternion = Quaternion::new(1, 0, 0, 0);
    pub const I: Quaternion = Quaternion::new(0, 1, 0, 0);
    pub const J: Quaternion = Quaternion::new(0, 0, 1, 0);
    pub const K: Quaternion = Quaternion::new(0, 0, 0, 1);

    pub const fn new(a0: i64, a1: i64, a2: i64, a3: i64) -> Self {
        Quaternion { a0, a1, a2, a3 }
    }

    pub const fn from_integer(a0: i64) -> Self {
        Quaternion::new(a0, 0, 0, 0)
    }

    pub const fn components(self) -> [i64; 4] {
        [self.a0, self.a1, self.a2, self.a3]
    }

    pub const fn from_components(c: [i64; 4]) -> Self {
        Quaternion::new(c[0], c[1], c[2], c[3])
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// The eight units `±1, ±i, ±j, ±k`.
    pub const fn units() -> [Quaternion; 8] {
        [
            Quaternion::new(1, 0, 0, 0),
            Quaternion::new(-1, 0, 0, 0),
            Quaternion::new(0, 1, 0, 0),
            Quaternion::new(0, -1, 0, 0),
            Quaternion::new(0, 0, 1, 0),
            Quaternion::new(0, 0, -1, 0),
            Quaternion::new(0, 0, 0, 1),
            Quaternion::new(0, 0, 0, -1),
        ]
    }

    pub fn conjugate(self) -> Self {
        Quaternion::new(self.a0, -self.a1, -self.a2, -self.a3)
    }

    pub fn checked_conjugate(self) -> Result<Self> {
        Ok(Quaternion::new(
            self.a0,
            self.a1.checked_neg().ok_or(Error::Overflow)?,
            self.a2.checked_neg().ok_or(Error::Overflow)?,
            self.a3.checked_neg().ok_or(Error::Overflow)?,
        ))
    }

    /// `a0² + a1² + a2² + a3²`.
    pub fn checked_norm(self) -> Result<i64> {
        self.components().iter().try_fold(0i64, |acc, &c| {
            c.checked_mul(c)
                .and_then(|sq| acc.checked_add(sq))
                .ok_or(Error::Overflow)
        })
    }

    pub fn norm(self) -> i64 {
        self.checked_norm().expect("quaternion norm overflow")
    }

    /// Sum of the absolute values of the components.
    pub fn abs_sum(self) -> i64 {
        self.components().iter().map(|c| c.abs()).sum()
    }

    pub fn checked_add(self, rhs: Self) -> Result<Self> {
        self.zip_with(rhs, i64::checked_add)
    }

    pub fn checked_sub(self, rhs: Self) -> Result<Self> {
        self.zip_with(rhs, i64::checked_sub)
    }

    pub fn checked_neg(self) -> Result<Self> {
        Quaternion::ZERO.checked_sub(self)
    }

    pub fn checked_scale(self, factor: i64) -> Result<Self> {
        let c = self.components();
        let mut out = [0i64; 4];
        for (o, x) in out.iter_mut().zip(c) {
            *o = x.checked_mul(factor).ok_or(Error::Overflow)?;
        }
        Ok(Quaternion::from_components(out))
    }

    /// Hamilton product `self * rhs`; `self` is the left factor.
    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        let [a0, a1, a2, a3] = self.components();
        let [b0, b1, b2, b3] = rhs.components();
        let dot = |terms: [(i64, i64, i64); 4]| -> Result<i64> {
            terms.iter().try_fold(0i64, |acc, &(sign, x, y)| {
                x.checked_mul(y)
                    .and_then(|xy| xy.checked_mul(sign))
                    .and_then(|t| acc.checked_add(t))
                    .ok_or(Error::Overflow)
            })
        };
        Ok(Quaternion::new(
            dot([(1, a0, b0), (-1, a1, b1), (-1, a2, b2), (-1, a3, b3)])?,
            dot([(1, a0, b1), (1, a1, b0), (1, a2, b3), (-1, a3, b2)])?,
            dot([(1, a0, b2), (-1, a1, b3), (1, a2, b0), (1, a3, b1)])?,
            dot([(1, a0, b3), (1, a1, b2), (-1, a2, b1), (1, a3, b0)])?,
        ))
    }

    fn zip_with(self, rhs: Self, f: fn(i64, i64) -> Option<i64>) -> Result<Self> {
        let (a, b) = (self.components(), rhs.components());
        let mut out = [0i64; 4];
        for idx in 0..4 {
            out[idx] = f(a[idx], b[idx]).ok_or(Error::Overflow)?;
        }
        Ok(Quaternion::from_components(out))
    }
}

impl From<i64> for Quaternion {
    fn from(a0: i64) -> Self {
        Quaternion::from_integer(a0)
    }
}

impl Add for Quaternion {
    type Output = Quaternion;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(rhs).expect("quaternion addition overflow")
    }
}

impl Sub for Quaternion {
    type Output = Quaternion;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(rhs)
            .expect("quaternion subtraction overflow")
    }
}

impl Neg for Quaternion {
    type Output = Quaternion;
    fn neg(self) -> Self {
        self.checked_neg().expect("quaternion negation overflow")
    }
}

impl Mul for Quaternion {
    type Output = Quaternion;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(rhs)
            .expect("quaternion multiplication overflow")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const I: Quaternion = Quaternion::I;
    const J: Quaternion = Quaternion::J;
    const K: Quaternion = Quaternion::K;
    const ONE: Quaternion = Quaternion::ONE;

    fn q(a0: i64, a1: i64, a2: i64, a3: i64) -> Quaternion {
        Quaternion::new(a0, a1, a2, a3)
    }

    /// Multiplication through the basis relation table, term by term.
    fn mul_by_table(x: Quaternion, y: Quaternion) -> Quaternion {
        // basis[a] * basis[b] = sign * basis[idx]
        const TABLE: [[(i64, usize); 4]; 4] = [
            [(1, 0), (1, 1), (1, 2), (1, 3)],
            [(1, 1), (-1, 0), (1, 3), (-1, 2)],
            [(1, 2), (-1, 3), (-1, 0), (1, 1)],
            [(1, 3), (1, 2), (-1, 1), (-1, 0)],
        ];
        let (xc, yc) = (x.components(), y.components());
        let mut out = [0i64; 4];
        for a in 0..4 {
            for b in 0..4 {
                let (sign, idx) = TABLE[a][b];
                out[idx] += sign * xc[a] * yc[b];
            }
        }
        Quaternion::from_components(out)
    }

    #[test]
    fn add_examples() {
        assert_eq!(q(1, 1, 0, 0) + q(1, -1, 0, 0), q(2, 0, 0, 0));
        assert_eq!(q(3, -4, 5, 6) + Quaternion::ZERO, q(3, -4, 5, 6));
        assert_eq!(q(1, -1, -1, -1) + q(0, 1, 1, 1), ONE);
    }

    #[test]
    fn basis_relations() {
        assert_eq!(I * J, K);
        assert_eq!(J * I, -K);
        assert_eq!(I * K, -J);
        assert_eq!(K * I, J);
        assert_eq!(J * K, I);
        assert_eq!(K * J, -I);
        for b in [I, J, K] {
            assert_eq!(b * b, -ONE);
        }
    }

    #[test]
    fn mul_example() {
        // (1+i)(1-i-j-k) = 1 - i - j - k + i + 1 - k + j
        assert_eq!(q(1, 1, 0, 0) * q(1, -1, -1, -1), q(2, 0, 0, -2));
    }

    #[test]
    fn conjugate_and_norm() {
        assert_eq!(q(1, 1, 1, 1).conjugate(), q(1, -1, -1, -1));
        assert_eq!(q(5, 0, 0, 0).conjugate(), q(5, 0, 0, 0));
        assert_eq!(q(2, 1, 1, 1).norm(), 7);
        assert_eq!(q(1, 2, 2, 2).norm(), 13);
        assert_eq!(Quaternion::ZERO.norm(), 0);
    }

    #[test]
    fn units_form_a_group() {
        let units = Quaternion::units();
        let mut sorted = units.to_vec();
        sorted.sort();
        sorted.dedup();
        assert_eq!(sorted.len(), 8);
        for u in units {
            assert_eq!(u.norm(), 1);
            for v in units {
                assert!(units.contains(&(u * v)));
            }
        }
    }

    #[test]
    fn plumbing_ops() {
        assert_eq!(-q(1, 1, 0, 0), q(-1, -1, 0, 0));
        let x = q(4, -2, 7, 1);
        assert_eq!(x - x, Quaternion::ZERO);
        assert_eq!(q(0, 1, 1, 0).checked_scale(3).unwrap(), q(0, 3, 3, 0));
    }

    #[test]
    fn overflow_is_reported() {
        let big = q(i64::MAX, 0, 0, 0);
        assert_eq!(big.checked_add(ONE), Err(Error::Overflow));
        assert_eq!(big.checked_mul(q(2, 0, 0, 0)), Err(Error::Overflow));
        assert_eq!(q(i64::MIN, 0, 0, 0).checked_neg(), Err(Error::Overflow));
        assert_eq!(q(0, 1 << 32, 0, 0).checked_norm(), Err(Error::Overflow));
        assert_eq!(
            q(1 << 40, 0, 0, 0).checked_scale(1 << 30),
            Err(Error::Overflow)
        );
        assert_eq!(
            q(0, i64::MIN, 0, 0).checked_conjugate(),
            Err(Error::Overflow)
        );
    }

    fn small() -> impl Strategy<Value = Quaternion> {
        prop::array::uniform4(-1000i64..=1000).prop_map(Quaternion::from_components)
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(1000))]

        #[test]
        fn mul_matches_relation_table(x in small(), y in small()) {
            prop_assert_eq!(x * y, mul_by_table(x, y));
        }

        #[test]
        fn norm_is_multiplicative(x in small(), y in small()) {
            prop_assert_eq!((x * y).norm(), x.norm() * y.norm());
        }

        #[test]
        fn conjugation_reverses_products(x in small(), y in small()) {
            prop_assert_eq!((x * y).conjugate(), y.conjugate() * x.conjugate());
        }

        #[test]
        fn times_conjugate_is_norm(x in small()) {
            prop_assert_eq!(x * x.conjugate(), Quaternion::from_integer(x.norm()));
            prop_assert_eq!(x.conjugate().conjugate(), x);
        }
    }
}
