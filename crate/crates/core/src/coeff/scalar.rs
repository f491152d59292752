use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use super::poly::BetaPoly;
use super::text;
use crate::error::{Error, Result};

/// An element of the field ℚ(β).
///
/// Always held in canonical form: `num` and `den` coprime over ℚ[β], the
/// integer content of the pair is 1, and `den` has a positive leading
/// coefficient. Structural equality is therefore value equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct BetaScalar {
    num: BetaPoly,
    den: BetaPoly,
}

impl BetaScalar {
    pub fn zero() -> Self {
        BetaScalar {
            num: BetaPoly::zero(),
            den: BetaPoly::one(),
        }
    }

    pub fn one() -> Self {
        Self::from_int(1)
    }

    pub fn beta() -> Self {
        Self::from_poly(BetaPoly::beta())
    }

    pub fn from_int(n: impl Into<BigInt>) -> Self {
        Self::from_poly(BetaPoly::constant(n))
    }

    pub fn from_poly(num: BetaPoly) -> Self {
        BetaScalar {
            num,
            den: BetaPoly::one(),
        }
    }

    /// `n / d` for integers; panics when `d == 0`.
    pub fn ratio(n: impl Into<BigInt>, d: impl Into<BigInt>) -> Self {
        Self::new(BetaPoly::constant(n), BetaPoly::constant(d)).expect("zero denominator")
    }

    /// `c · β^k`.
    pub fn monomial(c: impl Into<BigInt>, k: usize) -> Self {
        Self::from_poly(BetaPoly::monomial(c, k))
    }

    /// `(β/2)^k`, `(-β/2)^k` and friends: `(num_c · β / den_c)^k`.
    pub fn beta_power_scaled(num_c: i64, den_c: i64, k: usize) -> Self {
        let n = BigInt::from(num_c).pow(k as u32);
        let d = BigInt::from(den_c).pow(k as u32);
        Self::new(BetaPoly::monomial(n, k), BetaPoly::constant(d)).expect("nonzero")
    }

    pub fn new(num: BetaPoly, den: BetaPoly) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(num, den))
    }

    fn normalized(num: BetaPoly, den: BetaPoly) -> Self {
        if num.is_zero() {
            return Self::zero();
        }
        let (num, den) = if num.is_constant() || den.is_constant() {
            (num, den)
        } else {
            let g = num.gcd(&den);
            if g.is_one() {
                (num, den)
            } else {
                (
                    num.div_exact(&g).expect("gcd divides numerator"),
                    den.div_exact(&g).expect("gcd divides denominator"),
                )
            }
        };
        let mut c = num.content().gcd(&den.content());
        if den.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        BetaScalar {
            num: num.div_int_exact(&c),
            den: den.div_int_exact(&c),
        }
    }

    pub fn num(&self) -> &BetaPoly {
        &self.num
    }

    pub fn den(&self) -> &BetaPoly {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.num.is_one() && self.den.is_one()
    }

    /// True iff the value lies in ℤ[β].
    pub fn is_in_z_beta(&self) -> bool {
        self.den.is_one()
    }

    /// True iff the value lies in ℚ[β] (denominator free of β).
    pub fn is_in_q_beta(&self) -> bool {
        self.den.is_constant()
    }

    /// `Some(p)` when the value lies in ℤ[β].
    pub fn as_z_beta(&self) -> Option<&BetaPoly> {
        self.is_in_z_beta().then_some(&self.num)
    }

    /// If the value is `r · β^k` for a rational `r`, returns `k`.
    pub fn beta_monomial_exponent(&self) -> Option<i64> {
        if self.num.num_terms() != 1 || self.den.num_terms() != 1 {
            return None;
        }
        Some(self.num.valuation()? as i64 - self.den.valuation()? as i64)
    }

    pub fn inverse(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        Ok(Self::normalized(self.den.clone(), self.num.clone()))
    }

    pub fn checked_div(&self, rhs: &Self) -> Result<Self> {
        Ok(self * &rhs.inverse()?)
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Value at β = 0; errors when the denominator vanishes there.
    pub fn at_beta_zero(&self) -> Result<Self> {
        let d = self.den.eval_at_zero();
        if d.is_zero() {
            return Err(Error::Contract("scalar has a pole at beta = 0".into()));
        }
        Self::new(BetaPoly::constant(self.num.eval_at_zero()), BetaPoly::constant(d))
    }

    /// Multiplies by a rational `n / d`.
    pub fn scale_ratio(&self, n: &BigInt, d: &BigInt) -> Self {
        Self::normalized(self.num.scale(n), self.den.scale(d))
    }
}

impl Default for BetaScalar {
    fn default() -> Self {
        Self::zero()
    }
}

impl Add for &BetaScalar {
    type Output = BetaScalar;
    fn add(self, rhs: &BetaScalar) -> BetaScalar {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        if self.den == rhs.den {
            return BetaScalar::normalized(&self.num + &rhs.num, self.den.clone());
        }
        let num = &(&self.num * &rhs.den) + &(&rhs.num * &self.den);
        BetaScalar::normalized(num, &self.den * &rhs.den)
    }
}

impl Sub for &BetaScalar {
    type Output = BetaScalar;
    fn sub(self, rhs: &BetaScalar) -> BetaScalar {
        self + &(-rhs)
    }
}

impl Mul for &BetaScalar {
    type Output = BetaScalar;
    fn mul(self, rhs: &BetaScalar) -> BetaScalar {
        if self.is_zero() || rhs.is_zero() {
            return BetaScalar::zero();
        }
        if self.den.is_one() && rhs.den.is_one() {
            return BetaScalar::from_poly(&self.num * &rhs.num);
        }
        BetaScalar::normalized(&self.num * &rhs.num, &self.den * &rhs.den)
    }
}

impl Div for &BetaScalar {
    type Output = BetaScalar;
    /// Panics on division by zero; use [`BetaScalar::checked_div`] otherwise.
    fn div(self, rhs: &BetaScalar) -> BetaScalar {
        self.checked_div(rhs).expect("division by zero in Q(beta)")
    }
}

impl Neg for &BetaScalar {
    type Output = BetaScalar;
    fn neg(self) -> BetaScalar {
        BetaScalar {
            num: -&self.num,
            den: self.den.clone(),
        }
    }
}

impl Neg for BetaScalar {
    type Output = BetaScalar;
    fn neg(self) -> BetaScalar {
        -&self
    }
}

impl AddAssign<&BetaScalar> for BetaScalar {
    fn add_assign(&mut self, rhs: &BetaScalar) {
        *self = &*self + rhs;
    }
}

impl From<i64> for BetaScalar {
    fn from(n: i64) -> Self {
        BetaScalar::from_int(n)
    }
}

impl From<BetaPoly> for BetaScalar {
    fn from(p: BetaPoly) -> Self {
        BetaScalar::from_poly(p)
    }
}

fn write_side(f: &mut fmt::Formatter<'_>, p: &BetaPoly) -> fmt::Result {
    if p.num_terms() > 1 {
        write!(f, "({p})")
    } else {
        write!(f, "{p}")
    }
}

impl fmt::Display for BetaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_one() {
            return write!(f, "{}", self.num);
        }
        write_side(f, &self.num)?;
        f.write_str(" / ")?;
        write_side(f, &self.den)
    }
}

impl fmt::Debug for BetaScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

fn poly_from_terms(terms: &text::TermMap) -> Result<BetaPoly> {
    let mut out = BetaPoly::zero();
    for (&e, c) in terms {
        if e < 0 {
            return Err(Error::Parse("negative beta exponent in Q(beta) scalar".into()));
        }
        out = &out + &BetaPoly::monomial(c.clone(), e as usize);
    }
    Ok(out)
}

impl FromStr for BetaScalar {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        let (n, d) = text::parse_fraction(s)?;
        BetaScalar::new(poly_from_terms(&n)?, poly_from_terms(&d)?)
    }
}

impl Serialize for BetaScalar {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for BetaScalar {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s(x: &str) -> BetaScalar {
        x.parse().unwrap()
    }

    #[test]
    fn common_factor_cancels() {
        let v = s("(b^2 - 1) / (b - 1)");
        assert_eq!(v, s("b + 1"));
        assert!(v.is_in_z_beta());
    }

    #[test]
    fn trivial_arithmetic() {
        assert_eq!(&BetaScalar::ratio(1, 2) * &BetaScalar::from_int(2), BetaScalar::one());
        let half_b = s("b / 2");
        assert_eq!(&half_b + &half_b, BetaScalar::beta());
    }

    #[test]
    fn ring_membership() {
        assert!(s("b^3 - 2*b").is_in_z_beta());
        assert!(!BetaScalar::ratio(1, 2).is_in_z_beta());
        assert!(s("(b^2 + b) / b").is_in_z_beta());
    }

    #[test]
    fn division_by_zero_is_an_error() {
        assert!(matches!(BetaScalar::one().checked_div(&BetaScalar::zero()), Err(Error::DivisionByZero)));
        assert!(BetaScalar::new(BetaPoly::one(), BetaPoly::zero()).is_err());
    }

    #[test]
    fn canonical_sign_and_content() {
        let v = BetaScalar::new(BetaPoly::constant(4), BetaPoly::constant(-6)).unwrap();
        assert_eq!(v.to_string(), "-2 / 3");
        let w = s("(2*b + 2) / (4*b - 4)");
        assert_eq!(w.to_string(), "(b + 1) / (2*b - 2)");
    }

    #[test]
    fn text_round_trip() {
        for t in ["0", "1", "-b / 2", "(b^2 + 1) / 2", "1 / (b + 2)", "3*b^4 - b + 7"] {
            assert_eq!(s(t).to_string(), t);
        }
    }
}
