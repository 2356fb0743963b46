//! Exact scalar types: extended naturals and extended nonnegative rationals.
//!
//! Everything is exact. Multiplication uses the convention `0 * inf = 0`,
//! which is forced by zero-preserving morphisms.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// An extended natural number: a finite count or infinity.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ExtNat {
    Fin(u64),
    Inf,
}

impl ExtNat {
    pub const ZERO: ExtNat = ExtNat::Fin(0);
    pub const ONE: ExtNat = ExtNat::Fin(1);

    pub fn is_finite(self) -> bool {
        matches!(self, ExtNat::Fin(_))
    }

    pub fn is_zero(self) -> bool {
        self == ExtNat::Fin(0)
    }

    pub fn add(self, other: ExtNat) -> ExtNat {
        match (self, other) {
            (ExtNat::Fin(a), ExtNat::Fin(b)) => {
                ExtNat::Fin(a.checked_add(b).expect("ExtNat overflow"))
            }
            _ => ExtNat::Inf,
        }
    }

    /// Product with the `0 * inf = 0` convention.
    pub fn mul(self, other: ExtNat) -> ExtNat {
        match (self, other) {
            (ExtNat::Fin(0), _) | (_, ExtNat::Fin(0)) => ExtNat::Fin(0),
            (ExtNat::Fin(a), ExtNat::Fin(b)) => {
                ExtNat::Fin(a.checked_mul(b).expect("ExtNat overflow"))
            }
            _ => ExtNat::Inf,
        }
    }

    /// In the extended naturals, `a` is way below `b` iff `a` is finite and `a <= b`.
    pub fn way_below(self, other: ExtNat) -> bool {
        self.is_finite() && self <= other
    }

    pub fn to_qinf(self) -> QInf {
        match self {
            ExtNat::Fin(n) => QInf::from_u64(n),
            ExtNat::Inf => QInf::Inf,
        }
    }
}

impl fmt::Display for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ExtNat::Fin(n) => write!(f, "{n}"),
            ExtNat::Inf => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for ExtNat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl From<u64> for ExtNat {
    fn from(n: u64) -> Self {
        ExtNat::Fin(n)
    }
}

impl FromStr for ExtNat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(ExtNat::Inf);
        }
        s.parse::<u64>()
            .map(ExtNat::Fin)
            .map_err(|_| Error::Parse(format!("invalid extended natural `{s}`")))
    }
}

/// An extended nonnegative rational: an exact rational in `[0, inf)` or infinity.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum QInf {
    Fin(BigRational),
    Inf,
}

impl QInf {
    pub fn zero() -> QInf {
        QInf::Fin(BigRational::zero())
    }

    pub fn one() -> QInf {
        QInf::Fin(BigRational::one())
    }

    pub fn from_u64(n: u64) -> QInf {
        QInf::Fin(BigRational::from_integer(BigInt::from(n)))
    }

    /// Builds `num/den`. Fails on `den == 0` or a negative value.
    pub fn ratio(num: i64, den: i64) -> Result<QInf> {
        if den == 0 {
            return Err(Error::Parse("zero denominator".into()));
        }
        let r = BigRational::new(BigInt::from(num), BigInt::from(den));
        if r.is_negative() {
            return Err(Error::Domain("negative rational".into()));
        }
        Ok(QInf::Fin(r))
    }

    pub fn from_big(r: BigRational) -> Result<QInf> {
        if r.is_negative() {
            return Err(Error::Domain("negative rational".into()));
        }
        Ok(QInf::Fin(r))
    }

    pub fn is_finite(&self) -> bool {
        matches!(self, QInf::Fin(_))
    }

    pub fn is_zero(&self) -> bool {
        matches!(self, QInf::Fin(r) if r.is_zero())
    }

    pub fn add(&self, other: &QInf) -> QInf {
        match (self, other) {
            (QInf::Fin(a), QInf::Fin(b)) => QInf::Fin(a + b),
            _ => QInf::Inf,
        }
    }

    /// Product with the `0 * inf = 0` convention.
    pub fn mul(&self, other: &QInf) -> QInf {
        if self.is_zero() || other.is_zero() {
            return QInf::zero();
        }
        match (self, other) {
            (QInf::Fin(a), QInf::Fin(b)) => QInf::Fin(a * b),
            _ => QInf::Inf,
        }
    }

    /// `self - other`, defined only when `other <= self` and `self` is finite
    /// (used for limit-law bookkeeping on increasing chains).
    pub fn sub(&self, other: &QInf) -> Option<QInf> {
        match (self, other) {
            (QInf::Fin(a), QInf::Fin(b)) if b <= a => Some(QInf::Fin(a - b)),
            _ => None,
        }
    }

    /// Midpoint of two finite values.
    pub fn midpoint(&self, other: &QInf) -> Option<QInf> {
        match (self, other) {
            (QInf::Fin(a), QInf::Fin(b)) => {
                Some(QInf::Fin((a + b) / BigRational::from_integer(BigInt::from(2))))
            }
            _ => None,
        }
    }

    pub fn scale_u64(&self, n: u64) -> QInf {
        self.mul(&QInf::from_u64(n))
    }
}

impl PartialOrd for QInf {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QInf {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (QInf::Fin(a), QInf::Fin(b)) => a.cmp(b),
            (QInf::Fin(_), QInf::Inf) => Ordering::Less,
            (QInf::Inf, QInf::Fin(_)) => Ordering::Greater,
            (QInf::Inf, QInf::Inf) => Ordering::Equal,
        }
    }
}

impl fmt::Display for QInf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            QInf::Fin(r) => {
                if r.is_integer() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            QInf::Inf => write!(f, "inf"),
        }
    }
}

impl fmt::Debug for QInf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for QInf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        if s == "inf" {
            return Ok(QInf::Inf);
        }
        let (num, den) = match s.split_once('/') {
            Some((n, d)) => (n, d),
            None => (s, "1"),
        };
        let num: i64 = num
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))?;
        let den: i64 = den
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid rational `{s}`")))?;
        QInf::ratio(num, den)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn extnat_absorbing_infinity() {
        assert_eq!(ExtNat::Fin(2).add(ExtNat::Inf), ExtNat::Inf);
        assert_eq!(ExtNat::Inf.add(ExtNat::Fin(0)), ExtNat::Inf);
    }

    #[test]
    fn extnat_zero_times_infinity() {
        assert_eq!(ExtNat::Fin(0).mul(ExtNat::Inf), ExtNat::Fin(0));
        assert_eq!(ExtNat::Inf.mul(ExtNat::Fin(0)), ExtNat::Fin(0));
        assert_eq!(ExtNat::Fin(3).mul(ExtNat::Inf), ExtNat::Inf);
    }

    #[test]
    fn extnat_way_below() {
        assert!(ExtNat::Fin(2).way_below(ExtNat::Fin(5)));
        assert!(ExtNat::Fin(2).way_below(ExtNat::Fin(2)));
        assert!(!ExtNat::Inf.way_below(ExtNat::Inf));
        assert!(ExtNat::Fin(0).way_below(ExtNat::Inf));
    }

    #[test]
    fn qinf_order_and_arith() {
        let half: QInf = "1/2".parse().unwrap();
        let three_quarters: QInf = "3/4".parse().unwrap();
        assert!(half < three_quarters);
        assert!(three_quarters < QInf::Inf);
        assert_eq!(half.add(&half), QInf::one());
        assert_eq!(half.mul(&QInf::Inf), QInf::Inf);
        assert_eq!(QInf::zero().mul(&QInf::Inf), QInf::zero());
    }

    #[test]
    fn qinf_display_roundtrip() {
        for s in ["0", "3", "1/2", "7/8", "inf"] {
            let v: QInf = s.parse().unwrap();
            assert_eq!(v.to_string(), s);
        }
    }

    #[test]
    fn qinf_rejects_negative() {
        assert!("-1/2".parse::<QInf>().is_err());
        assert!(QInf::ratio(-1, 2).is_err());
    }
}
