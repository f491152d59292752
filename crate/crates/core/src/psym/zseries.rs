use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;

use super::PSeries;
use crate::coeff::{binom_signed, binomial, BetaScalar};
use crate::error::{Error, Result};

/// A formal series `a₀ + a₁z + ⋯ + a_M z^M` in an auxiliary variable `z`
/// whose coefficients are [`PSeries`] of one common truncation degree.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ZSeries {
    degree: u32,
    coeffs: Vec<PSeries>,
}

impl ZSeries {
    /// Builds a series of order `coeffs.len() - 1`.
    pub fn new(coeffs: Vec<PSeries>) -> Result<Self> {
        let first = coeffs
            .first()
            .ok_or_else(|| Error::Precondition("a z-series needs at least one coefficient".into()))?;
        let degree = first.degree();
        if let Some(bad) = coeffs.iter().find(|c| c.degree() != degree) {
            return Err(Error::Mismatch {
                what: "truncation degrees",
                left: degree as usize,
                right: bad.degree() as usize,
            });
        }
        Ok(ZSeries { degree, coeffs })
    }

    pub fn zero(order: usize, degree: u32) -> Self {
        ZSeries {
            degree,
            coeffs: vec![PSeries::zero(degree); order + 1],
        }
    }

    pub fn one(order: usize, degree: u32) -> Self {
        Self::constant(PSeries::one(degree), order)
    }

    pub fn constant(c: PSeries, order: usize) -> Self {
        let degree = c.degree();
        let mut s = Self::zero(order, degree);
        s.coeffs[0] = c;
        s
    }

    /// `c · z^k` (zero if `k` exceeds the order).
    pub fn monomial(c: PSeries, k: usize, order: usize) -> Self {
        let degree = c.degree();
        let mut s = Self::zero(order, degree);
        if k <= order {
            s.coeffs[k] = c;
        }
        s
    }

    /// Series with scalar coefficients `cₖ` (times the constant 1).
    pub fn from_scalars(cs: &[BetaScalar], order: usize, degree: u32) -> Self {
        let mut s = Self::zero(order, degree);
        for (k, c) in cs.iter().enumerate().take(order + 1) {
            s.coeffs[k] = PSeries::constant(c.clone(), degree);
        }
        s
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn coeff(&self, k: usize) -> &PSeries {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[PSeries] {
        &self.coeffs
    }

    pub fn into_coeffs(self) -> Vec<PSeries> {
        self.coeffs
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0] == PSeries::one(self.degree) && self.coeffs[1..].iter().all(PSeries::is_zero)
    }

    fn check_shape(&self, other: &ZSeries) -> Result<()> {
        if self.order() != other.order() {
            return Err(Error::Mismatch {
                what: "z-orders",
                left: self.order(),
                right: other.order(),
            });
        }
        if self.degree != other.degree {
            return Err(Error::Mismatch {
                what: "truncation degrees",
                left: self.degree as usize,
                right: other.degree as usize,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &ZSeries) -> Result<ZSeries> {
        self.check_shape(other)?;
        Ok(ZSeries {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a + b).collect(),
        })
    }

    pub fn checked_sub(&self, other: &ZSeries) -> Result<ZSeries> {
        self.check_shape(other)?;
        Ok(ZSeries {
            degree: self.degree,
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a - b).collect(),
        })
    }

    /// Cauchy product truncated at the common order.
    pub fn checked_mul(&self, other: &ZSeries) -> Result<ZSeries> {
        self.check_shape(other)?;
        let m = self.order();
        let coeffs = (0..=m)
            .map(|n| {
                (0..=n).fold(PSeries::zero(self.degree), |acc, k| {
                    if self.coeffs[k].is_zero() || other.coeffs[n - k].is_zero() {
                        acc
                    } else {
                        &acc + &(&self.coeffs[k] * &other.coeffs[n - k])
                    }
                })
            })
            .collect();
        Ok(ZSeries {
            degree: self.degree,
            coeffs,
        })
    }

    /// Multiplies every coefficient by the same [`PSeries`].
    pub fn mul_pseries(&self, c: &PSeries) -> ZSeries {
        ZSeries {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    pub fn scale(&self, c: &BetaScalar) -> ZSeries {
        ZSeries {
            degree: self.degree,
            coeffs: self.coeffs.iter().map(|a| a.scale(c)).collect(),
        }
    }

    /// Multiplicative inverse; requires a nonzero constant term in `a₀`.
    pub fn invert(&self) -> Result<ZSeries> {
        let a0_inv = invert_pseries(&self.coeffs[0])?;
        let m = self.order();
        let mut out: Vec<PSeries> = Vec::with_capacity(m + 1);
        out.push(a0_inv.clone());
        for n in 1..=m {
            let mut s = PSeries::zero(self.degree);
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !out[n - k].is_zero() {
                    s = &s + &(&self.coeffs[k] * &out[n - k]);
                }
            }
            out.push(-&(&a0_inv * &s));
        }
        Ok(ZSeries {
            degree: self.degree,
            coeffs: out,
        })
    }

    /// Formal exponential; requires `a₀ = 0`.
    ///
    /// `n·bₙ = Σ_{k=1}^{n} k·aₖ·b_{n−k}`.
    pub fn exp(&self) -> Result<ZSeries> {
        if !self.coeffs[0].is_zero() {
            return Err(Error::Precondition("exp needs a vanishing constant coefficient".into()));
        }
        let m = self.order();
        let mut out = vec![PSeries::one(self.degree)];
        for n in 1..=m {
            let mut s = PSeries::zero(self.degree);
            for k in 1..=n {
                if !self.coeffs[k].is_zero() && !out[n - k].is_zero() {
                    let weight = BetaScalar::ratio(k as i64, n as i64);
                    s = &s + &(&self.coeffs[k] * &out[n - k]).scale(&weight);
                }
            }
            out.push(s);
        }
        Ok(ZSeries {
            degree: self.degree,
            coeffs: out,
        })
    }

    /// Formal logarithm; requires `a₀ = 1`.
    ///
    /// `bₙ = aₙ − (1/n) Σ_{k=1}^{n−1} k·bₖ·a_{n−k}`.
    pub fn log(&self) -> Result<ZSeries> {
        if self.coeffs[0] != PSeries::one(self.degree) {
            return Err(Error::Precondition("log needs constant coefficient 1".into()));
        }
        let m = self.order();
        let mut out = vec![PSeries::zero(self.degree)];
        for n in 1..=m {
            let mut s = self.coeffs[n].clone();
            for k in 1..n {
                if !out[k].is_zero() && !self.coeffs[n - k].is_zero() {
                    let weight = BetaScalar::ratio(-(k as i64), n as i64);
                    s = &s + &(&out[k] * &self.coeffs[n - k]).scale(&weight);
                }
            }
            out.push(s);
        }
        Ok(ZSeries {
            degree: self.degree,
            coeffs: out,
        })
    }

    /// Substitutes `z ↦ z̄ = −z/(1+βz)`, truncated at the same order.
    pub fn substitute_zbar(&self) -> ZSeries {
        let m = self.order();
        let mut out = vec![PSeries::zero(self.degree); m + 1];
        for (n, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (target, slot) in out.iter_mut().enumerate().skip(n) {
                let c = zbar_power_coeff(n as u32, target as u32);
                *slot = &*slot + &a.scale(&c);
            }
        }
        ZSeries {
            degree: self.degree,
            coeffs: out,
        }
    }

    /// True iff each `aₙ` has no terms of weight below `n`; for such series
    /// the tail beyond the stored order cannot reach weights `≤` the order.
    pub fn is_weight_graded(&self) -> bool {
        self.coeffs
            .iter()
            .enumerate()
            .all(|(n, a)| a.min_weight().is_none_or(|w| w as usize >= n))
    }

    fn check_evaluable(&self) -> Result<()> {
        if !self.is_weight_graded() || self.order() < self.degree as usize {
            return Err(Error::Precondition(
                "evaluation at a non-nilpotent point needs a weight-graded series with order >= degree"
                    .into(),
            ));
        }
        Ok(())
    }

    /// Evaluates at `z = point` (a scalar).
    pub fn evaluate_at(&self, point: &BetaScalar) -> Result<PSeries> {
        self.check_evaluable()?;
        let mut acc = PSeries::zero(self.degree);
        let mut pw = BetaScalar::one();
        for a in &self.coeffs {
            acc = &acc + &a.scale(&pw);
            pw = &pw * point;
        }
        Ok(acc)
    }

    /// Substitutes `z ↦ shift + slope·z` and re-expands in `z`.
    pub fn substitute_affine(&self, shift: &BetaScalar, slope: &BetaScalar) -> Result<ZSeries> {
        self.check_evaluable()?;
        let m = self.order();
        let mut out = vec![PSeries::zero(self.degree); m + 1];
        for (n, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            // (shift + slope z)^n = Σ_j C(n,j) slope^j shift^{n-j} z^j
            for (j, slot) in out.iter_mut().enumerate().take(n + 1) {
                let c = &BetaScalar::from_int(binomial(n as u64, j as u64))
                    * &(&slope.pow(j as u32) * &shift.pow((n - j) as u32));
                if !c.is_zero() {
                    *slot = &*slot + &a.scale(&c);
                }
            }
        }
        Ok(ZSeries {
            degree: self.degree,
            coeffs: out,
        })
    }

    pub fn truncate_degree(&self, degree: u32) -> Result<ZSeries> {
        Ok(ZSeries {
            degree,
            coeffs: self
                .coeffs
                .iter()
                .map(|a| a.truncate(degree))
                .collect::<Result<_>>()?,
        })
    }

    pub fn truncate_order(&self, order: usize) -> Result<ZSeries> {
        if order > self.order() {
            return Err(Error::Precondition(format!(
                "cannot raise z-order from {} to {order}",
                self.order()
            )));
        }
        Ok(ZSeries {
            degree: self.degree,
            coeffs: self.coeffs[..=order].to_vec(),
        })
    }

    pub fn at_beta_zero(&self) -> Result<ZSeries> {
        Ok(ZSeries {
            degree: self.degree,
            coeffs: self
                .coeffs
                .iter()
                .map(PSeries::at_beta_zero)
                .collect::<Result<_>>()?,
        })
    }
}

/// `[z^m] z̄^n = (−1)^n · C(−n, m−n) · β^{m−n}`.
pub fn zbar_power_coeff(n: u32, m: u32) -> BetaScalar {
    if m < n {
        return BetaScalar::zero();
    }
    if n == 0 {
        return if m == 0 { BetaScalar::one() } else { BetaScalar::zero() };
    }
    let sign = if n.is_multiple_of(2) { BigInt::from(1) } else { BigInt::from(-1) };
    BetaScalar::monomial(sign * binom_signed(-(n as i64), (m - n) as u64), (m - n) as usize)
}

/// Inverse of a [`PSeries`] with nonzero constant term, via the geometric
/// series in its (nilpotent modulo truncation) non-constant part.
pub fn invert_pseries(a: &PSeries) -> Result<PSeries> {
    let c = a.constant_term();
    if c.is_zero() {
        return Err(Error::Precondition("constant term is not invertible".into()));
    }
    let c_inv = c.inverse()?;
    let degree = a.degree();
    // a = c(1 + u)  ⇒  a⁻¹ = c⁻¹ Σ (−u)^k
    let u = &a.scale(&c_inv) - &PSeries::one(degree);
    let neg_u = -&u;
    let mut term = PSeries::one(degree);
    let mut acc = PSeries::one(degree);
    for _ in 0..degree {
        term = &term * &neg_u;
        if term.is_zero() {
            break;
        }
        acc = &acc + &term;
    }
    Ok(acc.scale(&c_inv))
}

impl Add for &ZSeries {
    type Output = ZSeries;
    fn add(self, rhs: &ZSeries) -> ZSeries {
        self.checked_add(rhs).expect("ZSeries addition")
    }
}

impl Sub for &ZSeries {
    type Output = ZSeries;
    fn sub(self, rhs: &ZSeries) -> ZSeries {
        self.checked_sub(rhs).expect("ZSeries subtraction")
    }
}

impl Mul for &ZSeries {
    type Output = ZSeries;
    fn mul(self, rhs: &ZSeries) -> ZSeries {
        self.checked_mul(rhs).expect("ZSeries multiplication")
    }
}
