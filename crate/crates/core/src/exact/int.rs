//! Arbitrary-precision integers with an inline `i64` fast path.
//!
//! Coboundary matrices are almost entirely `0` and `±1`, and the entries that
//! appear during elimination rarely leave the machine range. Keeping those
//! values unboxed avoids an allocation per arithmetic operation; anything
//! that overflows is promoted to a [`BigInt`] and demoted again as soon as it
//! fits.

use std::cmp::Ordering;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::Rational;

#[derive(Clone, Debug)]
pub enum Int {
    Small(i64),
    Large(BigInt),
}

impl Int {
    pub fn from_big(value: BigInt) -> Int {
        match value.to_i64() {
            Some(v) => Int::Small(v),
            None => Int::Large(value),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Int::Small(v) => BigInt::from(*v),
            Int::Large(v) => v.clone(),
        }
    }

    pub fn to_rational(&self) -> Rational {
        Rational::from_integer(self.to_big())
    }

    #[inline]
    pub fn is_zero(&self) -> bool {
        matches!(self, Int::Small(0))
    }

    #[inline]
    pub fn is_one(&self) -> bool {
        matches!(self, Int::Small(1))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Int::Small(v) => *v < 0,
            Int::Large(v) => v.is_negative(),
        }
    }

    pub fn signum(&self) -> i32 {
        match self {
            Int::Small(v) => v.signum() as i32,
            Int::Large(v) => {
                if v.is_negative() {
                    -1
                } else {
                    1
                }
            }
        }
    }

    pub fn abs(&self) -> Int {
        match self {
            Int::Small(v) => match v.checked_abs() {
                Some(a) => Int::Small(a),
                None => Int::from_big(BigInt::from(*v).abs()),
            },
            Int::Large(v) => Int::from_big(v.abs()),
        }
    }

    /// Floor division; panics on a zero divisor.
    pub fn div_floor(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if !(*a == i64::MIN && *b == -1) {
                return Int::Small(a.div_floor(b));
            }
        }
        Int::from_big(self.to_big().div_floor(&other.to_big()))
    }

    /// Remainder with the sign of the divisor (pairs with [`Int::div_floor`]).
    pub fn mod_floor(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if !(*a == i64::MIN && *b == -1) {
                return Int::Small(a.mod_floor(b));
            }
        }
        Int::from_big(self.to_big().mod_floor(&other.to_big()))
    }

    /// `Some(self / other)` when the division is exact.
    pub fn div_exact(&self, other: &Int) -> Option<Int> {
        if other.is_zero() {
            return if self.is_zero() { Some(Int::zero()) } else { None };
        }
        if self.mod_floor(other).is_zero() {
            Some(self.div_floor(other))
        } else {
            None
        }
    }

    pub fn gcd(&self, other: &Int) -> Int {
        if let (Int::Small(a), Int::Small(b)) = (self, other) {
            if *a != i64::MIN && *b != i64::MIN {
                return Int::Small(a.gcd(b));
            }
        }
        Int::from_big(self.to_big().gcd(&other.to_big()))
    }

    /// `self * a + other * b` without intermediate clones on the fast path.
    pub fn mul_add(&self, a: &Int, other: &Int, b: &Int) -> Int {
        if let (Int::Small(x), Int::Small(p), Int::Small(y), Int::Small(q)) = (self, a, other, b) {
            if let Some(v) = x
                .checked_mul(*p)
                .and_then(|l| y.checked_mul(*q).and_then(|r| l.checked_add(r)))
            {
                return Int::Small(v);
            }
        }
        Int::from_big(self.to_big() * a.to_big() + other.to_big() * b.to_big())
    }

    /// Residue in `0..p` for a positive modulus `p`.
    pub fn rem_u64(&self, p: u64) -> u64 {
        match self {
            Int::Small(v) => v.rem_euclid(p as i64) as u64,
            Int::Large(v) => v.mod_floor(&BigInt::from(p)).to_u64().unwrap_or(0),
        }
    }
}

impl Zero for Int {
    fn zero() -> Self {
        Int::Small(0)
    }
    fn is_zero(&self) -> bool {
        Int::is_zero(self)
    }
}

impl One for Int {
    fn one() -> Self {
        Int::Small(1)
    }
}

impl From<i64> for Int {
    fn from(v: i64) -> Self {
        Int::Small(v)
    }
}

impl From<i32> for Int {
    fn from(v: i32) -> Self {
        Int::Small(v as i64)
    }
}

impl From<BigInt> for Int {
    fn from(v: BigInt) -> Self {
        Int::from_big(v)
    }
}

impl PartialEq for Int {
    fn eq(&self, other: &Self) -> bool {
        // Representations are canonical: `Large` never holds an i64-sized value.
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a == b,
            (Int::Large(a), Int::Large(b)) => a == b,
            _ => false,
        }
    }
}

impl Eq for Int {}

impl Hash for Int {
    fn hash<H: Hasher>(&self, state: &mut H) {
        match self {
            Int::Small(v) => v.hash(state),
            Int::Large(v) => v.hash(state),
        }
    }
}

impl PartialOrd for Int {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Int {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Int::Small(a), Int::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl fmt::Display for Int {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Int::Small(v) => write!(f, "{v}"),
            Int::Large(v) => write!(f, "{v}"),
        }
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident, $checked:ident) => {
        impl<'a> $trait<&'a Int> for &'a Int {
            type Output = Int;
            #[inline]
            fn $method(self, rhs: &'a Int) -> Int {
                if let (Int::Small(a), Int::Small(b)) = (self, rhs) {
                    if let Some(v) = a.$checked(*b) {
                        return Int::Small(v);
                    }
                }
                Int::from_big(self.to_big().$method(rhs.to_big()))
            }
        }

        impl $trait<Int> for Int {
            type Output = Int;
            #[inline]
            fn $method(self, rhs: Int) -> Int {
                (&self).$method(&rhs)
            }
        }

        impl<'a> $trait<&'a Int> for Int {
            type Output = Int;
            #[inline]
            fn $method(self, rhs: &'a Int) -> Int {
                (&self).$method(rhs)
            }
        }
    };
}

binop!(Add, add, checked_add);
binop!(Sub, sub, checked_sub);
binop!(Mul, mul, checked_mul);

impl AddAssign<&Int> for Int {
    fn add_assign(&mut self, rhs: &Int) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&Int> for Int {
    fn sub_assign(&mut self, rhs: &Int) {
        *self = &*self - rhs;
    }
}

impl Neg for &Int {
    type Output = Int;
    fn neg(self) -> Int {
        match self {
            Int::Small(v) => match v.checked_neg() {
                Some(n) => Int::Small(n),
                None => Int::from_big(-BigInt::from(*v)),
            },
            Int::Large(v) => Int::from_big(-v.clone()),
        }
    }
}

impl Neg for Int {
    type Output = Int;
    fn neg(self) -> Int {
        -&self
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn overflow_promotes_and_demotes() {
        let big = Int::from(i64::MAX);
        let sum = &big + &Int::one();
        assert!(matches!(sum, Int::Large(_)));
        let back = &sum - &Int::one();
        assert_eq!(back, Int::Small(i64::MAX));
        let prod = &big * &big;
        assert_eq!(prod.to_big(), BigInt::from(i64::MAX) * BigInt::from(i64::MAX));
        assert_eq!(-Int::from(i64::MIN), Int::from_big(-BigInt::from(i64::MIN)));
    }

    #[test]
    fn floor_division_matches_bigint() {
        for a in -7i64..=7 {
            for b in [-3i64, -2, 2, 3] {
                let q = Int::from(a).div_floor(&Int::from(b));
                let r = Int::from(a).mod_floor(&Int::from(b));
                assert_eq!(&(&q * &Int::from(b)) + &r, Int::from(a));
            }
        }
        assert_eq!(Int::from(6).div_exact(&Int::from(3)), Some(Int::from(2)));
        assert_eq!(Int::from(7).div_exact(&Int::from(3)), None);
    }

    #[test]
    fn ordering_across_representations() {
        let large = Int::from_big(BigInt::from(i64::MAX) * 4);
        assert!(Int::from(5) < large);
        assert!(-&large < Int::from(i64::MIN));
        assert_eq!(Int::from(-12).gcd(&Int::from(18)), Int::from(6));
    }
}
