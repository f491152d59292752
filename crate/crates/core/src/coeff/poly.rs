use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Polynomial in β with integer coefficients.
///
/// Stored densely: `coeffs[k]` is the coefficient of `β^k`. The vector never
/// ends in a zero, so the zero polynomial is the empty vector and the
/// representation of a given polynomial is unique.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct BetaPoly {
    coeffs: Vec<BigInt>,
}

impl BetaPoly {
    pub fn zero() -> Self {
        BetaPoly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(BigInt::one())
    }

    /// The formal parameter β itself.
    pub fn beta() -> Self {
        Self::monomial(BigInt::one(), 1)
    }

    pub fn constant(c: impl Into<BigInt>) -> Self {
        Self::from_coeffs(vec![c.into()])
    }

    pub fn monomial(c: impl Into<BigInt>, exp: usize) -> Self {
        let c = c.into();
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![BigInt::zero(); exp + 1];
        coeffs[exp] = c;
        BetaPoly { coeffs }
    }

    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        BetaPoly { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    /// Degree in β; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeff(&self, exp: usize) -> BigInt {
        self.coeffs.get(exp).cloned().unwrap_or_default()
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Lowest exponent carrying a nonzero coefficient.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    /// Nonzero terms as `(exponent, coefficient)`, ascending exponent.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (usize, &BigInt)> {
        self.coeffs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
    }

    pub fn num_terms(&self) -> usize {
        self.coeffs.iter().filter(|c| !c.is_zero()).count()
    }

    /// Non-negative gcd of the coefficients (0 for the zero polynomial).
    pub fn content(&self) -> BigInt {
        let mut g = BigInt::zero();
        for c in &self.coeffs {
            g = g.gcd(c);
            if g.is_one() {
                break;
            }
        }
        g
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        BetaPoly {
            coeffs: self.coeffs.iter().map(|x| x * c).collect(),
        }
    }

    /// Divides every coefficient by `c`; the caller guarantees exactness.
    pub fn div_int_exact(&self, c: &BigInt) -> Self {
        if c.is_one() {
            return self.clone();
        }
        BetaPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|x| {
                    debug_assert!((x % c).is_zero());
                    x / c
                })
                .collect(),
        }
    }

    /// Multiplies by `β^k`.
    pub fn shift(&self, k: usize) -> Self {
        if self.is_zero() || k == 0 {
            return self.clone();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().cloned());
        BetaPoly { coeffs }
    }

    /// Primitive part with positive leading coefficient.
    pub fn primitive(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let mut c = self.content();
        if self.leading().is_some_and(|l| l.is_negative()) {
            c = -c;
        }
        self.div_int_exact(&c)
    }

    pub fn eval_at_zero(&self) -> BigInt {
        self.coeff(0)
    }

    /// Pseudo-remainder of `self` by `divisor`: some `lc(divisor)^e · self mod divisor`.
    fn pseudo_rem(&self, divisor: &BetaPoly) -> BetaPoly {
        let db = divisor.degree().expect("pseudo_rem by zero");
        let lb = divisor.leading().unwrap().clone();
        let mut r = self.clone();
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let lr = r.leading().unwrap().clone();
            r = &r.scale(&lb) - &divisor.scale(&lr).shift(dr - db);
        }
        r
    }

    /// Monic-up-to-content gcd over ℚ[β]: the primitive integer polynomial
    /// with positive leading coefficient generating the same ideal.
    pub fn gcd(&self, other: &BetaPoly) -> BetaPoly {
        if self.is_zero() {
            return other.primitive();
        }
        if other.is_zero() {
            return self.primitive();
        }
        if self.is_constant() || other.is_constant() {
            return BetaPoly::one();
        }
        let (mut a, mut b) = if self.degree() >= other.degree() {
            (self.primitive(), other.primitive())
        } else {
            (other.primitive(), self.primitive())
        };
        while !b.is_zero() {
            let r = a.pseudo_rem(&b);
            a = b;
            b = r.primitive();
        }
        a.primitive()
    }

    /// Exact quotient in ℤ[β], or `None` when `divisor` does not divide `self`.
    pub fn div_exact(&self, divisor: &BetaPoly) -> Option<BetaPoly> {
        let db = divisor.degree()?;
        if self.is_zero() {
            return Some(Self::zero());
        }
        let da = self.degree().unwrap();
        if da < db {
            return None;
        }
        let lb = divisor.leading().unwrap();
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); da - db + 1];
        while let Some(dr) = r.degree() {
            if dr < db {
                return None;
            }
            let (quot, rem) = r.leading().unwrap().div_rem(lb);
            if !rem.is_zero() {
                return None;
            }
            r = &r - &divisor.scale(&quot).shift(dr - db);
            q[dr - db] = quot;
        }
        Some(BetaPoly::from_coeffs(q))
    }
}

impl Add for &BetaPoly {
    type Output = BetaPoly;
    fn add(self, rhs: &BetaPoly) -> BetaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => b.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        BetaPoly::from_coeffs(coeffs)
    }
}

impl Sub for &BetaPoly {
    type Output = BetaPoly;
    fn sub(self, rhs: &BetaPoly) -> BetaPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|i| match (self.coeffs.get(i), rhs.coeffs.get(i)) {
                (Some(a), Some(b)) => a - b,
                (Some(a), None) => a.clone(),
                (None, Some(b)) => -b,
                (None, None) => unreachable!(),
            })
            .collect();
        BetaPoly::from_coeffs(coeffs)
    }
}

impl Mul for &BetaPoly {
    type Output = BetaPoly;
    fn mul(self, rhs: &BetaPoly) -> BetaPoly {
        if self.is_zero() || rhs.is_zero() {
            return BetaPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        BetaPoly::from_coeffs(coeffs)
    }
}

impl Neg for &BetaPoly {
    type Output = BetaPoly;
    fn neg(self) -> BetaPoly {
        BetaPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl PartialOrd for BetaPoly {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// Arbitrary but fixed total order (degree, then coefficients from the top).
impl Ord for BetaPoly {
    fn cmp(&self, other: &Self) -> Ordering {
        self.coeffs
            .len()
            .cmp(&other.coeffs.len())
            .then_with(|| self.coeffs.iter().rev().cmp(other.coeffs.iter().rev()))
    }
}

impl fmt::Display for BetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(i64, &BigInt)> = self.terms().rev().map(|(k, c)| (k as i64, c)).collect();
        super::text::write_terms(f, &terms)
    }
}

impl fmt::Debug for BetaPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BetaPoly({self})")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> BetaPoly {
        BetaPoly::from_coeffs(c.iter().map(|&x| BigInt::from(x)).collect())
    }

    #[test]
    fn gcd_of_shared_linear_factor() {
        // (β-1)(β+2) and (β-1)(2β+3)
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        let b = &p(&[-1, 1]) * &p(&[3, 2]);
        assert_eq!(a.gcd(&b), p(&[-1, 1]));
        assert_eq!(p(&[2, 4]).gcd(&p(&[4, 8])), p(&[1, 2]));
        assert_eq!(p(&[0, 1]).gcd(&p(&[1, 1])), BetaPoly::one());
    }

    #[test]
    fn exact_division() {
        let a = &p(&[-1, 1]) * &p(&[2, 1]);
        assert_eq!(a.div_exact(&p(&[-1, 1])), Some(p(&[2, 1])));
        assert_eq!(p(&[1, 1]).div_exact(&p(&[0, 1])), None);
        assert_eq!(p(&[1, 2]).div_exact(&p(&[2])), None);
    }

    #[test]
    fn display() {
        assert_eq!(p(&[0, -2, 0, 1]).to_string(), "b^3 - 2*b");
        assert_eq!(p(&[]).to_string(), "0");
        assert_eq!(p(&[5, -1]).to_string(), "-b + 5");
    }
}
