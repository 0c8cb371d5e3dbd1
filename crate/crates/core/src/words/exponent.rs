use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Neg};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, ToPrimitive};

/// Arbitrary-precision integer exponent with an inline fast path.
///
/// Values that fit in an `i64` are always stored as `Small`, so the derived
/// equality and hashing agree with numeric equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Exponent {
    Small(i64),
    Big(BigInt),
}

impl Exponent {
    pub const ZERO: Exponent = Exponent::Small(0);
    pub const ONE: Exponent = Exponent::Small(1);

    fn from_big(b: BigInt) -> Self {
        match b.to_i64() {
            Some(v) => Self::Small(v),
            None => Self::Big(b),
        }
    }

    pub fn to_big(&self) -> BigInt {
        match self {
            Self::Small(v) => BigInt::from(*v),
            Self::Big(b) => b.clone(),
        }
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, Self::Small(0))
    }

    pub fn is_negative(&self) -> bool {
        match self {
            Self::Small(v) => *v < 0,
            Self::Big(b) => b.is_negative(),
        }
    }

    /// Least non-negative residue modulo `m`.
    pub fn rem_euclid(&self, m: u32) -> u32 {
        match self {
            Self::Small(v) => v.rem_euclid(m as i64) as u32,
            Self::Big(b) => b.mod_floor(&BigInt::from(m)).to_u32().expect("residue below m"),
        }
    }

    /// `|self|`, saturating at `u64::MAX`.
    pub fn magnitude(&self) -> u64 {
        match self {
            Self::Small(v) => v.unsigned_abs(),
            Self::Big(b) => b.abs().to_u64().unwrap_or(u64::MAX),
        }
    }

    pub fn checked_i64(&self) -> Option<i64> {
        match self {
            Self::Small(v) => Some(*v),
            Self::Big(_) => None,
        }
    }
}

impl From<i64> for Exponent {
    fn from(v: i64) -> Self {
        Self::Small(v)
    }
}

impl From<BigInt> for Exponent {
    fn from(b: BigInt) -> Self {
        Self::from_big(b)
    }
}

impl Add for &Exponent {
    type Output = Exponent;

    fn add(self, rhs: &Exponent) -> Exponent {
        if let (Exponent::Small(a), Exponent::Small(b)) = (self, rhs) {
            if let Some(s) = a.checked_add(*b) {
                return Exponent::Small(s);
            }
        }
        Exponent::from_big(self.to_big() + rhs.to_big())
    }
}

impl Add for Exponent {
    type Output = Exponent;

    fn add(self, rhs: Exponent) -> Exponent {
        &self + &rhs
    }
}

impl Neg for &Exponent {
    type Output = Exponent;

    fn neg(self) -> Exponent {
        match self {
            Exponent::Small(v) => match v.checked_neg() {
                Some(n) => Exponent::Small(n),
                None => Exponent::from_big(-BigInt::from(*v)),
            },
            Exponent::Big(b) => Exponent::from_big(-b),
        }
    }
}

impl Neg for Exponent {
    type Output = Exponent;

    fn neg(self) -> Exponent {
        -&self
    }
}

impl Ord for Exponent {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Self::Small(a), Self::Small(b)) => a.cmp(b),
            _ => self.to_big().cmp(&other.to_big()),
        }
    }
}

impl PartialOrd for Exponent {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Exponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Self::Small(v) => write!(f, "{v}"),
            Self::Big(b) => write!(f, "{b}"),
        }
    }
}

impl FromStr for Exponent {
    type Err = num_bigint::ParseBigIntError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.parse::<i64>() {
            Ok(v) => Ok(Self::Small(v)),
            Err(_) => Ok(Self::from_big(s.parse::<BigInt>()?)),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn promotes_on_overflow() {
        let max = Exponent::from(i64::MAX);
        let sum = &max + &Exponent::ONE;
        assert!(matches!(sum, Exponent::Big(_)));
        assert_eq!(sum.to_string(), "9223372036854775808");
        assert_eq!(&sum + &Exponent::from(-1), max);
        assert!(matches!(-Exponent::from(i64::MIN), Exponent::Big(_)));
    }

    #[test]
    fn ordering_and_residues() {
        let big: Exponent = "100000000000000000000".parse().unwrap();
        assert!(big > Exponent::from(5));
        assert!(-&big < Exponent::from(-5));
        assert_eq!(big.rem_euclid(3), 1);
        assert_eq!(Exponent::from(-1).rem_euclid(4), 3);
        assert_eq!("-7".parse::<Exponent>().unwrap(), Exponent::from(-7));
        assert!("x".parse::<Exponent>().is_err());
    }
}
