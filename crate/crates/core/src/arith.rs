//! Exact rational arithmetic.
//!
//! Every index value, bound, and equality test is decided on [`Rational`],
//! a reduced arbitrary-precision fraction. Floats appear only in
//! [`Rational::to_decimal_string`], which exists for human-readable reports.

use std::cmp::Ordering;
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub, SubAssign};
use std::str::FromStr;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::{One, Signed, ToPrimitive, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// Signed rational with arbitrary-precision numerator and denominator.
///
/// Always stored reduced with a positive denominator, so structural
/// equality is numeric equality.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rational(BigRational);

/// Shorthand for [`Rational::new`].
pub fn rat(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Rational> {
    Rational::new(num, den)
}

impl Rational {
    pub fn new(num: impl Into<BigInt>, den: impl Into<BigInt>) -> Result<Self> {
        let den = den.into();
        if den.is_zero() {
            return Err(Error::ZeroDenominator);
        }
        Ok(Rational(BigRational::new(num.into(), den)))
    }

    pub fn integer(v: impl Into<BigInt>) -> Self {
        Rational(BigRational::from_integer(v.into()))
    }

    pub fn zero() -> Self {
        Rational(BigRational::zero())
    }

    pub fn one() -> Self {
        Rational(BigRational::one())
    }

    pub fn numer(&self) -> &BigInt {
        self.0.numer()
    }

    pub fn denom(&self) -> &BigInt {
        self.0.denom()
    }

    pub fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    pub fn is_negative(&self) -> bool {
        self.0.is_negative()
    }

    pub fn is_integer(&self) -> bool {
        self.0.is_integer()
    }

    pub fn checked_div(&self, rhs: &Rational) -> Result<Rational> {
        if rhs.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(&self.0 / &rhs.0))
    }

    /// Integer power; negative exponents invert (zero base is an error).
    pub fn pow(&self, exp: i32) -> Result<Rational> {
        if exp < 0 && self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Rational(num::traits::Pow::pow(&self.0, exp)))
    }

    pub fn cube(&self) -> Rational {
        Rational(&self.0 * &self.0 * &self.0)
    }

    pub fn abs(&self) -> Rational {
        Rational(self.0.abs())
    }

    pub fn to_f64(&self) -> f64 {
        self.0.to_f64().unwrap_or(f64::NAN)
    }

    /// Decimal rendering rounded to 12 significant digits. Display only.
    pub fn to_decimal_string(&self) -> String {
        let x = self.to_f64();
        if x == 0.0 || !x.is_finite() {
            return format!("{x:?}");
        }
        let rounded: f64 = format!("{x:.11e}").parse().unwrap_or(x);
        format!("{rounded:?}")
    }

    pub fn inner(&self) -> &BigRational {
        &self.0
    }
}

impl From<i64> for Rational {
    fn from(v: i64) -> Self {
        Rational::integer(v)
    }
}

impl From<BigRational> for Rational {
    fn from(v: BigRational) -> Self {
        Rational(v)
    }
}

/// Always `p/q`, including integers (`40/1`).
impl fmt::Display for Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}/{}", self.0.numer(), self.0.denom())
    }
}

impl FromStr for Rational {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::InvalidParameter(format!("not a rational: {s:?}"));
        let (p, q) = match s.split_once('/') {
            Some((p, q)) => (p.trim(), q.trim()),
            None => (s.trim(), "1"),
        };
        let p: BigInt = p.parse().map_err(|_| bad())?;
        let q: BigInt = q.parse().map_err(|_| bad())?;
        Rational::new(p, q)
    }
}

impl Serialize for Rational {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Rational {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

macro_rules! binop {
    ($tr:ident, $method:ident) => {
        impl $tr<&Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(&self.0, &rhs.0))
            }
        }
        impl $tr<Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(self.0, rhs.0))
            }
        }
        impl $tr<&Rational> for Rational {
            type Output = Rational;
            fn $method(self, rhs: &Rational) -> Rational {
                Rational($tr::$method(self.0, &rhs.0))
            }
        }
        impl $tr<Rational> for &Rational {
            type Output = Rational;
            fn $method(self, rhs: Rational) -> Rational {
                Rational($tr::$method(&self.0, rhs.0))
            }
        }
    };
}

binop!(Add, add);
binop!(Sub, sub);
binop!(Mul, mul);
// Panics on a zero divisor, like integer division; use `checked_div` otherwise.
binop!(Div, div);

impl Mul<i64> for &Rational {
    type Output = Rational;
    fn mul(self, rhs: i64) -> Rational {
        Rational(&self.0 * BigRational::from_integer(rhs.into()))
    }
}

impl Mul<i64> for Rational {
    type Output = Rational;
    fn mul(self, rhs: i64) -> Rational {
        &self * rhs
    }
}

impl Neg for Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-self.0)
    }
}

impl Neg for &Rational {
    type Output = Rational;
    fn neg(self) -> Rational {
        Rational(-&self.0)
    }
}

impl AddAssign<&Rational> for Rational {
    fn add_assign(&mut self, rhs: &Rational) {
        self.0 += &rhs.0;
    }
}

impl AddAssign<Rational> for Rational {
    fn add_assign(&mut self, rhs: Rational) {
        self.0 += rhs.0;
    }
}

impl SubAssign<&Rational> for Rational {
    fn sub_assign(&mut self, rhs: &Rational) {
        self.0 -= &rhs.0;
    }
}

impl Sum for Rational {
    fn sum<I: Iterator<Item = Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl<'a> Sum<&'a Rational> for Rational {
    fn sum<I: Iterator<Item = &'a Rational>>(iter: I) -> Rational {
        iter.fold(Rational::zero(), |acc, x| acc + x)
    }
}

impl PartialEq<i64> for Rational {
    fn eq(&self, other: &i64) -> bool {
        self.0.is_integer() && self.0.numer() == &BigInt::from(*other)
    }
}

impl PartialOrd<i64> for Rational {
    fn partial_cmp(&self, other: &i64) -> Option<Ordering> {
        Some(self.0.cmp(&BigRational::from_integer((*other).into())))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(p: i64, q: i64) -> Rational {
        rat(p, q).unwrap()
    }

    #[test]
    fn construction_reduces() {
        assert_eq!(r(512, 27).to_string(), "512/27");
        assert_eq!(r(4, -8).to_string(), "-1/2");
        assert_eq!(r(4, -8), r(-1, 2));
        // (4/27)(35*7 + 111)
        assert_eq!(r(1424, 27), r(4, 27) * Rational::integer(35 * 7 + 111));
        assert_eq!(Rational::integer(40).to_string(), "40/1");
    }

    #[test]
    fn zero_denominator_rejected() {
        assert_eq!(rat(1, 0), Err(Error::ZeroDenominator));
        assert_eq!(r(1, 2).checked_div(&Rational::zero()), Err(Error::DivisionByZero));
        assert_eq!(Rational::zero().pow(-1), Err(Error::DivisionByZero));
    }

    #[test]
    fn bound_constants() {
        assert_eq!(r(8, 3).pow(3).unwrap(), r(512, 27));
        assert_eq!(r(8, 3).cube(), r(512, 27));
        assert_eq!(Rational::integer(8) - r(512, 27), r(-296, 27));
        let b26 = Rational::integer(20 * 8) + r(512, 27) * 7;
        assert_eq!(b26, r(7904, 27));
        assert_eq!(r(2, 3).pow(-2).unwrap(), r(9, 4));
    }

    #[test]
    fn decimal_view() {
        assert_eq!(Rational::integer(40).to_decimal_string(), "40.0");
        assert_eq!(r(1120, 27).to_decimal_string(), "41.4814814815");
        assert_eq!(Rational::zero().to_decimal_string(), "0.0");
    }

    #[test]
    fn parse_and_serde() {
        assert_eq!("-296/27".parse::<Rational>().unwrap(), r(-296, 27));
        assert_eq!("12".parse::<Rational>().unwrap(), Rational::integer(12));
        assert!("1/0".parse::<Rational>().is_err());
        assert!("x/2".parse::<Rational>().is_err());
        let json = serde_json::to_string(&r(1120, 27)).unwrap();
        assert_eq!(json, "\"1120/27\"");
        let back: Rational = serde_json::from_str(&json).unwrap();
        assert_eq!(back, r(1120, 27));
    }

    fn arb() -> impl Strategy<Value = Rational> {
        (-10_000i64..10_000, 1i64..10_000).prop_map(|(p, q)| r(p, q))
    }

    proptest! {
        #[test]
        fn exact_round_trips(a in arb(), b in arb()) {
            prop_assert_eq!(&(&a + &b) - &b, a.clone());
            if !b.is_zero() {
                prop_assert_eq!((&a * &b).checked_div(&b).unwrap(), a.clone());
            }
        }

        #[test]
        fn normalized(p in -10_000i64..10_000, q in 1i64..10_000, neg in any::<bool>()) {
            let q = if neg { -q } else { q };
            let x = r(p, q);
            prop_assert!(x.denom() > &BigInt::from(0));
            prop_assert!(num::Integer::gcd(x.numer(), x.denom()) == BigInt::from(1) || x.is_zero());
        }

        #[test]
        fn order_matches_difference_sign(a in arb(), b in arb()) {
            let d = &a - &b;
            let expected = if d.is_zero() { Ordering::Equal } else if d.is_negative() { Ordering::Less } else { Ordering::Greater };
            prop_assert_eq!(a.cmp(&b), expected);
        }
    }
}
