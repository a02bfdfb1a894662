//! Scalar traits the combinatorial kernels are generic over.
//!
//! [`Weight`] is an exactly ordered ring: enough for assignment problems,
//! the tropical Stiefel map and three-term Plücker checks. [`Field`] adds
//! exact division and is what the lower-hull engine and the linear algebra
//! need. Floating point types deliberately implement neither.

use std::fmt;
use std::hash::Hash;

use num_bigint::BigInt;
use num_rational::Ratio;
use num_traits::{Num, Signed};

use crate::error::Error;

/// An exactly ordered commutative ring element.
pub trait Weight: Clone + Ord + Hash + Num + Signed + fmt::Debug + fmt::Display {
    fn from_i64(v: i64) -> Self;

    /// Parse from `"num/den"` or `"num"`.
    fn parse_exact(s: &str) -> Result<Self, Error>;

    /// Render as `"num/den"`; integers render with denominator 1.
    fn to_exact_string(&self) -> String;
}

/// A [`Weight`] with exact division.
pub trait Field: Weight {}

macro_rules! int_weight {
    ($($t:ty),*) => {$(
        impl Weight for $t {
            fn from_i64(v: i64) -> Self {
                <$t>::from(v)
            }

            fn parse_exact(s: &str) -> Result<Self, Error> {
                let s = s.trim();
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (s, "1"),
                };
                let num: $t = num.parse().map_err(|_| Error::Parse(format!("bad integer `{s}`")))?;
                if den != "1" {
                    return Err(Error::Parse(format!("`{s}` is not an integer")));
                }
                Ok(num)
            }

            fn to_exact_string(&self) -> String {
                format!("{}/1", self)
            }
        }
    )*};
}

int_weight!(i64, i128, BigInt);

macro_rules! ratio_weight {
    ($($t:ty),*) => {$(
        impl Weight for Ratio<$t> {
            fn from_i64(v: i64) -> Self {
                Ratio::from_integer(<$t>::from(v))
            }

            fn parse_exact(s: &str) -> Result<Self, Error> {
                let s = s.trim();
                let (num, den) = match s.split_once('/') {
                    Some((a, b)) => (a.trim(), b.trim()),
                    None => (s, "1"),
                };
                let num: $t = num.parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
                let den: $t = den.parse().map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
                if num_traits::Zero::is_zero(&den) {
                    return Err(Error::Parse(format!("zero denominator in `{s}`")));
                }
                Ok(Ratio::new(num, den))
            }

            fn to_exact_string(&self) -> String {
                format!("{}/{}", self.numer(), self.denom())
            }
        }

        impl Field for Ratio<$t> {}
    )*};
}

ratio_weight!(i64, i128, BigInt);

#[cfg(test)]
mod tests {
    use super::*;
    use crate::Rational;

    #[test]
    fn rational_strings() {
        let q = Rational::parse_exact("-6/4").unwrap();
        assert_eq!(q.to_exact_string(), "-3/2");
        assert_eq!(Rational::parse_exact("7").unwrap().to_exact_string(), "7/1");
        assert!(Rational::parse_exact("1/0").is_err());
        assert!(Rational::parse_exact("x").is_err());
    }

    #[test]
    fn integer_strings() {
        assert_eq!(i64::parse_exact("5/1").unwrap(), 5);
        assert!(i64::parse_exact("5/2").is_err());
        assert_eq!(BigInt::from(3).to_exact_string(), "3/1");
    }
}
