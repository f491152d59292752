use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::BetaPoly;
use super::scalar::BetaScalar;
use super::text;
use crate::error::{Error, Result};

/// Laurent polynomial in β with integer coefficients, an element of ℤ[β, β⁻¹].
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentBetaPoly {
    terms: BTreeMap<i64, BigInt>,
}

impl LaurentBetaPoly {
    pub fn zero() -> Self {
        Self::default()
    }

    pub fn one() -> Self {
        Self::monomial(1, 0)
    }

    pub fn monomial(c: impl Into<BigInt>, exp: i64) -> Self {
        let c = c.into();
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(exp, c);
        }
        LaurentBetaPoly { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (i64, &BigInt)> {
        self.terms.iter().map(|(&e, c)| (e, c))
    }

    pub fn coeff(&self, exp: i64) -> BigInt {
        self.terms.get(&exp).cloned().unwrap_or_default()
    }

    /// Lowest exponent present; `None` for zero.
    pub fn min_exponent(&self) -> Option<i64> {
        self.terms.keys().next().copied()
    }

    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// Multiplies by `β^k` for any integer `k`.
    pub fn shift(&self, k: i64) -> Self {
        LaurentBetaPoly {
            terms: self.terms.iter().map(|(&e, c)| (e + k, c.clone())).collect(),
        }
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        let mut out = LaurentBetaPoly {
            terms: self.terms.iter().map(|(&e, x)| (e, x * c)).collect(),
        };
        out.terms.retain(|_, v| !v.is_zero());
        out
    }

    /// True iff no negative power of β survives, i.e. the value lies in ℤ[β].
    pub fn is_in_z_beta(&self) -> bool {
        self.min_exponent().is_none_or(|e| e >= 0)
    }

    pub fn to_beta_poly(&self) -> Option<BetaPoly> {
        if !self.is_in_z_beta() {
            return None;
        }
        Some(
            self.terms
                .iter()
                .fold(BetaPoly::zero(), |acc, (&e, c)| &acc + &BetaPoly::monomial(c.clone(), e as usize)),
        )
    }

    pub fn to_scalar(&self) -> BetaScalar {
        let shift = self.min_exponent().map_or(0, |e| e.min(0));
        let num = self
            .terms
            .iter()
            .fold(BetaPoly::zero(), |acc, (&e, c)| &acc + &BetaPoly::monomial(c.clone(), (e - shift) as usize));
        BetaScalar::new(num, BetaPoly::monomial(1, (-shift) as usize)).expect("monomial denominator")
    }

    /// Converts a scalar whose denominator is `±β^k` (times 1).
    pub fn from_scalar(s: &BetaScalar) -> Option<Self> {
        let den = s.den();
        if den.num_terms() != 1 || !den.leading()?.is_one() {
            return None;
        }
        let k = den.valuation()? as i64;
        Some(Self::from(s.num()).shift(-k))
    }
}

impl From<&BetaPoly> for LaurentBetaPoly {
    fn from(p: &BetaPoly) -> Self {
        LaurentBetaPoly {
            terms: p.terms().map(|(e, c)| (e as i64, c.clone())).collect(),
        }
    }
}

impl Add for &LaurentBetaPoly {
    type Output = LaurentBetaPoly;
    fn add(self, rhs: &LaurentBetaPoly) -> LaurentBetaPoly {
        let mut terms = self.terms.clone();
        for (&e, c) in &rhs.terms {
            let slot = terms.entry(e).or_insert_with(BigInt::zero);
            *slot += c;
            if slot.is_zero() {
                terms.remove(&e);
            }
        }
        LaurentBetaPoly { terms }
    }
}

impl Sub for &LaurentBetaPoly {
    type Output = LaurentBetaPoly;
    fn sub(self, rhs: &LaurentBetaPoly) -> LaurentBetaPoly {
        self + &(-rhs)
    }
}

impl Neg for &LaurentBetaPoly {
    type Output = LaurentBetaPoly;
    fn neg(self) -> LaurentBetaPoly {
        LaurentBetaPoly {
            terms: self.terms.iter().map(|(&e, c)| (e, -c)).collect(),
        }
    }
}

impl Mul for &LaurentBetaPoly {
    type Output = LaurentBetaPoly;
    fn mul(self, rhs: &LaurentBetaPoly) -> LaurentBetaPoly {
        let mut terms: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&ea, a) in &self.terms {
            for (&eb, b) in &rhs.terms {
                *terms.entry(ea + eb).or_insert_with(BigInt::zero) += a * b;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        LaurentBetaPoly { terms }
    }
}

impl fmt::Display for LaurentBetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, &BigInt)> = self.terms.iter().rev().map(|(&e, c)| (e, c)).collect();
        text::write_terms(f, &terms)
    }
}

impl fmt::Debug for LaurentBetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl FromStr for LaurentBetaPoly {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (num, den) = text::parse_fraction(s)?;
        if den.len() != 1 || den.get(&0).is_none_or(|c| !c.is_one()) {
            return Err(Error::Parse(format!("{s:?} is not a Laurent polynomial")));
        }
        Ok(LaurentBetaPoly { terms: num.into_iter().collect() })
    }
}

impl Serialize for LaurentBetaPoly {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LaurentBetaPoly {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn inverse_powers_and_membership() {
        let inv = LaurentBetaPoly::monomial(1, -1);
        let b = LaurentBetaPoly::monomial(1, 1);
        assert_eq!(&inv * &b, LaurentBetaPoly::one());
        assert!(!inv.is_in_z_beta());
        assert!((&inv * &b).is_in_z_beta());
        assert_eq!(inv.to_string(), "b^-1");
        assert_eq!("b^-1".parse::<LaurentBetaPoly>().unwrap(), inv);
    }

    #[test]
    fn scalar_conversions() {
        let x: LaurentBetaPoly = "3*b^2 - 2*b^-1".parse().unwrap();
        let s = x.to_scalar();
        assert_eq!(s.to_string(), "(3*b^3 - 2) / b");
        assert_eq!(LaurentBetaPoly::from_scalar(&s), Some(x));
        assert_eq!(LaurentBetaPoly::from_scalar(&BetaScalar::ratio(1, 2)), None);
    }
}
