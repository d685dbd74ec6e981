//! The accuracy parameter epsilon, kept as an exact rational.

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};

/// A positive rational accuracy parameter.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Epsilon(Ratio<u64>);

impl Epsilon {
    pub fn new(numer: u64, denom: u64) -> Result<Self> {
        if denom == 0 || numer == 0 {
            return Err(Error::InvalidEpsilon(format!("{numer}/{denom}")));
        }
        Ok(Epsilon(Ratio::new(numer, denom)))
    }

    pub fn integer(v: u64) -> Result<Self> {
        Self::new(v, 1)
    }

    pub fn ratio(&self) -> Ratio<u64> {
        self.0
    }

    pub fn as_f64(&self) -> f64 {
        *self.0.numer() as f64 / *self.0.denom() as f64
    }

    /// `ceil(100 / epsilon)`, raised to 2 when smaller.
    pub fn cap_l(&self) -> usize {
        let (p, q) = (*self.0.numer() as u128, *self.0.denom() as u128);
        let l = (100 * q).div_ceil(p);
        l.max(2).min(usize::MAX as u128) as usize
    }
}

/// `4 * C(l + 1, 2) = 2 l (l + 1)`, the additive cost of extending a core
/// whose radius of influence is `l`.
pub fn extension_constant(l: usize) -> usize {
    2 * l * (l + 1)
}

impl FromStr for Epsilon {
    type Err = Error;

    /// Accepts `3`, `0.25` or `1/3`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let bad = || Error::InvalidEpsilon(s.to_string());
        if s.starts_with('-') {
            return Err(bad());
        }
        let ratio = if let Some((a, b)) = s.split_once('/') {
            let a: u64 = a.trim().parse().map_err(|_| bad())?;
            let b: u64 = b.trim().parse().map_err(|_| bad())?;
            if b == 0 {
                return Err(bad());
            }
            Ratio::new(a, b)
        } else {
            let (int, frac) = s.split_once('.').unwrap_or((s, ""));
            if (int.is_empty() && frac.is_empty()) || frac.len() > 18 {
                return Err(bad());
            }
            let digits = |t: &str| t.chars().all(|c| c.is_ascii_digit());
            if !digits(int) || !digits(frac) {
                return Err(bad());
            }
            let denom = 10u64.pow(frac.len() as u32);
            let int: u64 = if int.is_empty() { 0 } else { int.parse().map_err(|_| bad())? };
            let frac: u64 = if frac.is_empty() { 0 } else { frac.parse().map_err(|_| bad())? };
            let numer = int.checked_mul(denom).and_then(|x| x.checked_add(frac)).ok_or_else(bad)?;
            Ratio::new(numer, denom)
        };
        if *ratio.numer() == 0 {
            return Err(bad());
        }
        Ok(Epsilon(ratio))
    }
}

impl fmt::Display for Epsilon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if *self.0.denom() == 1 {
            write!(f, "{}", self.0.numer())
        } else {
            write!(f, "{}/{}", self.0.numer(), self.0.denom())
        }
    }
}

impl Serialize for Epsilon {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_f64(self.as_f64())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_forms() {
        assert_eq!("3".parse::<Epsilon>().unwrap(), Epsilon::new(3, 1).unwrap());
        assert_eq!("0.25".parse::<Epsilon>().unwrap(), Epsilon::new(1, 4).unwrap());
        assert_eq!("2/6".parse::<Epsilon>().unwrap(), Epsilon::new(1, 3).unwrap());
        assert_eq!(".5".parse::<Epsilon>().unwrap(), Epsilon::new(1, 2).unwrap());
    }

    #[test]
    fn rejects_non_positive() {
        for s in ["0", "-1", "0.0", "1/0", "abc", "", "1e3", "."] {
            assert!(s.parse::<Epsilon>().is_err(), "{s}");
        }
    }

    #[test]
    fn cap_is_ceiling() {
        let l = |s: &str| s.parse::<Epsilon>().unwrap().cap_l();
        assert_eq!(l("1"), 100);
        assert_eq!(l("30"), 4);
        assert_eq!(l("10"), 10);
        assert_eq!(l("50"), 2);
        assert_eq!(l("0.1"), 1000);
        assert_eq!(l("3"), 34);
        // 100 / 200 would give 1, raised to 2
        assert_eq!(l("200"), 2);
    }

    #[test]
    fn extension_constant_values() {
        assert_eq!(extension_constant(1), 4);
        assert_eq!(extension_constant(2), 12);
        assert_eq!(extension_constant(4), 40);
    }
}
