//! Exact rational arithmetic for metric values and certificate bounds.
//!
//! Every distance in the library is a [`Rat`]: an arbitrary-precision
//! rational kept in canonical reduced form (positive denominator,
//! gcd(|num|, den) = 1). There is no floating point and no epsilon
//! anywhere; all comparisons are decided exactly.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{One, Signed, Zero};
use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

/// Arbitrary-precision rational with exact ordering and arithmetic.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rat(BigRational);

impl Rat {
    /// Builds `num/den` in canonical form. Panics if `den == 0`.
    pub fn new(num: i64, den: i64) -> Self {
        assert!(den != 0, "denominator must be non-zero");
        Rat(BigRational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn from_int(n: i64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }

    pub fn zero() -> Self {
        Rat(BigRational::zero())
    }

    pub fn one() -> Self {
        Rat(BigRational::one())
    }

    pub fn two() -> Self {
        Rat::from_int(2)
    }

    /// Exact power of two, `2^exp`, for any integer exponent.
    pub fn pow2(exp: i64) -> Self {
        if exp >= 0 {
            Rat(BigRational::from_integer(BigInt::one() << exp as usize))
        } else {
            // 1 / 2^k is already in lowest terms.
            Rat(BigRational::new_raw(
                BigInt::one(),
                BigInt::one() << (-exp) as usize,
            ))
        }
    }

    /// `|2^(-n) - 2^(-k)|`, the dyadic point-to-point distance, in one step.
    ///
    /// For n < k this is `(2^(k-n) - 1) / 2^k`; the numerator is odd, so the
    /// fraction is born reduced and skips the gcd pass (this sits in the
    /// innermost loop of every enumeration oracle).
    pub fn pow2_diff(n: u64, k: u64) -> Self {
        if n == k {
            return Rat::zero();
        }
        let (lo, hi) = if n < k { (n, k) } else { (k, n) };
        let num = (BigInt::one() << (hi - lo) as usize) - BigInt::one();
        Rat(BigRational::new_raw(num, BigInt::one() << hi as usize))
    }

    pub fn abs(&self) -> Self {
        Rat(self.0.abs())
    }

    pub fn min(self, other: Self) -> Self {
        if self <= other {
            self
        } else {
            other
        }
    }

    pub fn max(self, other: Self) -> Self {
        if self >= other {
            self
        } else {
            other
        }
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_positive(&self) -> bool {
        self.0.is_positive()
    }

    pub fn recip(&self) -> Self {
        assert!(!self.is_zero(), "reciprocal of zero");
        Rat(self.0.recip())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }
}

impl From<u64> for Rat {
    fn from(n: u64) -> Self {
        Rat(BigRational::from_integer(BigInt::from(n)))
    }
}

impl From<i64> for Rat {
    fn from(n: i64) -> Self {
        Rat::from_int(n)
    }
}

macro_rules! binop {
    ($trait:ident, $method:ident) => {
        impl $trait for Rat {
            type Output = Rat;
            fn $method(self, rhs: Rat) -> Rat {
                Rat((self.0).$method(rhs.0))
            }
        }
        impl<'a> $trait<&'a Rat> for &'a Rat {
            type Output = Rat;
            fn $method(self, rhs: &'a Rat) -> Rat {
                Rat((&self.0).$method(&rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
binop!(Div, div);

impl Neg for Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-self.0)
    }
}

impl Neg for &Rat {
    type Output = Rat;
    fn neg(self) -> Rat {
        Rat(-&self.0)
    }
}

impl fmt::Display for Rat {
    /// Always `num/den`, e.g. `3/8`, `-1/16`, `2/1` — uniform and exact.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl fmt::Debug for Rat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for Rat {
    type Err = String;

    /// Accepts `num/den` or a bare integer.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n.trim(), d.trim()),
            None => (s, "1"),
        };
        let num = BigInt::from_str(num).map_err(|e| format!("bad numerator {num:?}: {e}"))?;
        let den = BigInt::from_str(den).map_err(|e| format!("bad denominator {den:?}: {e}"))?;
        if den.is_zero() {
            return Err("denominator must be non-zero".into());
        }
        Ok(Rat(BigRational::new(num, den)))
    }
}

impl Serialize for Rat {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for Rat {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

/// A rational extended with `-inf` and `+inf`, ordered totally.
///
/// Used for the open bounds of Wijsman subbasic sets; one-sided sets carry an
/// infinite bound on the unused side.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum ExtendedBound {
    NegInf,
    Finite(Rat),
    PosInf,
}

impl ExtendedBound {
    /// Strictly below the given rational?
    pub fn lt_rat(&self, r: &Rat) -> bool {
        match self {
            ExtendedBound::NegInf => true,
            ExtendedBound::Finite(q) => q < r,
            ExtendedBound::PosInf => false,
        }
    }

    /// Strictly above the given rational?
    pub fn gt_rat(&self, r: &Rat) -> bool {
        match self {
            ExtendedBound::NegInf => false,
            ExtendedBound::Finite(q) => q > r,
            ExtendedBound::PosInf => true,
        }
    }

    pub fn finite(num: i64, den: i64) -> Self {
        ExtendedBound::Finite(Rat::new(num, den))
    }
}

impl PartialOrd for ExtendedBound {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for ExtendedBound {
    fn cmp(&self, other: &Self) -> Ordering {
        use ExtendedBound::*;
        match (self, other) {
            (NegInf, NegInf) | (PosInf, PosInf) => Ordering::Equal,
            (NegInf, _) | (_, PosInf) => Ordering::Less,
            (_, NegInf) | (PosInf, _) => Ordering::Greater,
            (Finite(a), Finite(b)) => a.cmp(b),
        }
    }
}

impl From<Rat> for ExtendedBound {
    fn from(r: Rat) -> Self {
        ExtendedBound::Finite(r)
    }
}

impl fmt::Display for ExtendedBound {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtendedBound::NegInf => write!(f, "-inf"),
            ExtendedBound::Finite(r) => write!(f, "{r}"),
            ExtendedBound::PosInf => write!(f, "inf"),
        }
    }
}

impl FromStr for ExtendedBound {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim() {
            "-inf" => Ok(ExtendedBound::NegInf),
            "inf" | "+inf" => Ok(ExtendedBound::PosInf),
            other => other.parse().map(ExtendedBound::Finite),
        }
    }
}

impl Serialize for ExtendedBound {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.serialize_str(&self.to_string())
    }
}

impl<'de> Deserialize<'de> for ExtendedBound {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(D::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rat {
        Rat::new(n, d)
    }

    #[test]
    fn arithmetic_is_exact() {
        assert_eq!(&r(1, 3) + &r(1, 6), r(1, 2));
        assert_eq!(&r(1, 4) - &r(1, 2), r(-1, 4));
        assert_eq!((&r(3, 8) - &r(1, 8)).abs(), r(1, 4));
        assert_eq!(&r(2, 3) * &r(3, 4), r(1, 2));
    }

    #[test]
    fn canonical_form() {
        assert_eq!(r(2, 4), r(1, 2));
        assert_eq!(r(1, -2), r(-1, 2));
        assert_eq!(r(-3, -6), r(1, 2));
        assert_eq!(r(2, 4).to_string(), "1/2");
    }

    #[test]
    fn pow2_matches_direct_computation() {
        assert_eq!(Rat::pow2(-3), r(1, 8));
        assert_eq!(Rat::pow2(0), r(1, 1));
        assert_eq!(Rat::pow2(4), r(16, 1));
    }

    #[test]
    fn pow2_diff_matches_naive() {
        for n in 1..=12u64 {
            for k in 1..=12u64 {
                let naive = (Rat::pow2(-(n as i64)) - Rat::pow2(-(k as i64))).abs();
                assert_eq!(Rat::pow2_diff(n, k), naive, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn dyadic_neighbor_distance() {
        // d(k, k+1) = 2^-k - 2^-(k+1) = 2^-(k+1)
        for k in 1..=20u64 {
            assert_eq!(Rat::pow2_diff(k, k + 1), Rat::pow2(-(k as i64) - 1));
        }
    }

    #[test]
    fn display_parse_roundtrip() {
        for q in [r(0, 1), r(3, 8), r(-9, 32), r(255, 1024), r(7, 1)] {
            let s = q.to_string();
            assert_eq!(s.parse::<Rat>().unwrap(), q);
        }
        assert_eq!("5".parse::<Rat>().unwrap(), r(5, 1));
        assert!("1/0".parse::<Rat>().is_err());
    }

    #[test]
    fn extended_bound_total_order() {
        use ExtendedBound::*;
        let vals = [NegInf, Finite(r(-1, 2)), Finite(r(0, 1)), Finite(r(3, 1)), PosInf];
        for i in 0..vals.len() {
            for j in 0..vals.len() {
                assert_eq!(vals[i].cmp(&vals[j]), i.cmp(&j), "{:?} vs {:?}", vals[i], vals[j]);
            }
        }
        assert!(NegInf.lt_rat(&r(-1000, 1)));
        assert!(PosInf.gt_rat(&r(1000, 1)));
        assert!(Finite(r(1, 2)).lt_rat(&r(3, 4)));
        assert!(!Finite(r(1, 2)).lt_rat(&r(1, 2)));
    }

    #[test]
    fn extended_bound_serde() {
        for b in [
            ExtendedBound::NegInf,
            ExtendedBound::PosInf,
            ExtendedBound::finite(-1, 16),
        ] {
            let js = serde_json::to_string(&b).unwrap();
            let back: ExtendedBound = serde_json::from_str(&js).unwrap();
            assert_eq!(back, b);
        }
    }
}
