//! Exact coefficient arithmetic: ℤ[β], ℤ[β, β⁻¹] and the field ℚ(β).

mod laurent;
mod poly;
mod scalar;
pub(crate) mod text;

pub use laurent::LaurentBetaPoly;
pub use poly::BetaPoly;
pub use scalar::BetaScalar;

use num_bigint::BigInt;
use num_traits::{One, Zero};

/// The minimal ring interface shared by the coefficient types, so that the
/// finite-variable polynomial engine can run over ℚ(β) or ℤ[β, β⁻¹].
pub trait Ring: Clone + PartialEq + std::fmt::Debug + Send + Sync {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn plus(&self, rhs: &Self) -> Self;
    fn minus(&self, rhs: &Self) -> Self;
    fn times(&self, rhs: &Self) -> Self;
    fn negated(&self) -> Self;
    fn from_int(c: i64) -> Self;
    /// `β^k` for any integer `k`; both coefficient types contain β⁻¹.
    fn beta_power(k: i64) -> Self;
}

impl Ring for BetaScalar {
    fn zero() -> Self {
        BetaScalar::zero()
    }
    fn one() -> Self {
        BetaScalar::one()
    }
    fn is_zero(&self) -> bool {
        BetaScalar::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_int(c: i64) -> Self {
        BetaScalar::from_int(c)
    }
    fn beta_power(k: i64) -> Self {
        let b = BetaScalar::monomial(1, k.unsigned_abs() as usize);
        if k >= 0 {
            b
        } else {
            b.inverse().expect("beta is nonzero")
        }
    }
}

impl Ring for LaurentBetaPoly {
    fn zero() -> Self {
        LaurentBetaPoly::zero()
    }
    fn one() -> Self {
        LaurentBetaPoly::one()
    }
    fn is_zero(&self) -> bool {
        LaurentBetaPoly::is_zero(self)
    }
    fn plus(&self, rhs: &Self) -> Self {
        self + rhs
    }
    fn minus(&self, rhs: &Self) -> Self {
        self - rhs
    }
    fn times(&self, rhs: &Self) -> Self {
        self * rhs
    }
    fn negated(&self) -> Self {
        -self
    }
    fn from_int(c: i64) -> Self {
        LaurentBetaPoly::monomial(c, 0)
    }
    fn beta_power(k: i64) -> Self {
        LaurentBetaPoly::monomial(1, k)
    }
}

/// Generalized binomial coefficient `n(n-1)…(n-k+1) / k!` for any integer `n`.
///
/// For negative upper index this is `(-1)^k · C(|n|+k-1, k)`.
pub fn binom_signed(n: i64, k: u64) -> BigInt {
    let mut num = BigInt::one();
    let mut den = BigInt::one();
    for i in 0..k {
        num *= BigInt::from(n) - BigInt::from(i);
        den *= BigInt::from(i + 1);
    }
    num / den
}

/// Ordinary binomial coefficient, zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> BigInt {
    if k > n {
        return BigInt::zero();
    }
    binom_signed(n as i64, k.min(n - k))
}

pub fn factorial(n: u64) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, i| acc * BigInt::from(i))
}

/// `ℓ! / (m₁! m₂! …)` for multiplicities summing to `ℓ`.
pub fn multinomial(mults: &[u64]) -> BigInt {
    let total: u64 = mults.iter().sum();
    mults
        .iter()
        .fold(factorial(total), |acc, &m| acc / factorial(m))
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Falling-factorial product evaluated directly with i128 arithmetic.
    fn falling_oracle(n: i128, k: u32) -> i128 {
        let mut num = 1i128;
        let mut den = 1i128;
        for i in 0..k as i128 {
            num *= n - i;
            den *= i + 1;
        }
        num / den
    }

    #[test]
    fn signed_binomials() {
        assert_eq!(binom_signed(-1, 2), BigInt::from(1));
        assert_eq!(binom_signed(-3, 1), BigInt::from(-3));
        assert_eq!(binom_signed(5, 0), BigInt::from(1));
        for n in -8..=8i64 {
            for k in 0..8u32 {
                assert_eq!(binom_signed(n, k as u64), BigInt::from(falling_oracle(n as i128, k)));
            }
        }
        // negative-index reflection
        assert_eq!(binom_signed(-4, 3), -binomial(6, 3));
    }

    #[test]
    fn multinomials() {
        assert_eq!(multinomial(&[2, 1]), BigInt::from(3));
        assert_eq!(multinomial(&[1, 1, 1]), BigInt::from(6));
        assert_eq!(multinomial(&[]), BigInt::from(1));
    }
}
