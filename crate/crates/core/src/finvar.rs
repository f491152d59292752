//! Finite-variable specializations.
//!
//! Polynomials in `x₁, …, x_N` (plus auxiliary variables such as `t` or `z`,
//! appended after the x's) over a coefficient [`Ring`]. Used to test the
//! cancellation properties and to run the factor-theorem constructions of
//! integral forms.

use std::collections::{BTreeMap, HashMap};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::{BetaScalar, Ring};
use crate::error::{Error, Result};
use crate::partitions::Partition;
use crate::psym::PSeries;

pub type Exponents = Vec<u32>;

/// A polynomial in `num_vars` variables over `C`.
#[derive(Clone, PartialEq)]
pub struct FinitePoly<C: Ring = BetaScalar> {
    num_vars: usize,
    terms: BTreeMap<Exponents, C>,
}

fn total(e: &[u32]) -> u32 {
    e.iter().sum()
}

impl<C: Ring> FinitePoly<C> {
    pub fn zero(num_vars: usize) -> Self {
        FinitePoly {
            num_vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(c: C, num_vars: usize) -> Self {
        Self::monomial(vec![0; num_vars], c)
    }

    pub fn one(num_vars: usize) -> Self {
        Self::constant(C::one(), num_vars)
    }

    /// The variable with index `i` (0-based).
    pub fn var(i: usize, num_vars: usize) -> Self {
        let mut e = vec![0; num_vars];
        e[i] = 1;
        Self::monomial(e, C::one())
    }

    pub fn monomial(exps: Exponents, c: C) -> Self {
        let mut p = Self::zero(exps.len());
        p.add_term(exps, &c);
        p
    }

    pub fn num_vars(&self) -> usize {
        self.num_vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Exponents, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, exps: &[u32]) -> C {
        self.terms.get(exps).cloned().unwrap_or_else(C::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().map(|e| total(e)).max()
    }

    pub fn degree_in(&self, var: usize) -> Option<u32> {
        self.terms.keys().map(|e| e[var]).max()
    }

    pub fn add_term(&mut self, exps: Exponents, c: &C) {
        debug_assert_eq!(exps.len(), self.num_vars);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exps) {
            Some(v) => {
                let s = v.plus(c);
                if s.is_zero() {
                    self.terms.remove(&exps);
                } else {
                    *v = s;
                }
            }
            None => {
                self.terms.insert(exps, c.clone());
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c);
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        FinitePoly {
            num_vars: self.num_vars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), c.negated())).collect(),
        }
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.num_vars);
        for (e, x) in &self.terms {
            out.add_term(e.clone(), &x.times(c));
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.mul_bounded(other, None)
    }

    /// Product keeping only monomials of total degree `≤ bound`.
    pub fn mul_bounded(&self, other: &Self, bound: Option<u32>) -> Self {
        self.mul_filtered(other, |e| bound.is_none_or(|b| total(e) <= b))
    }

    /// Product keeping only monomials accepted by `keep`.
    pub fn mul_filtered(&self, other: &Self, keep: impl Fn(&[u32]) -> bool) -> Self {
        let mut acc: HashMap<Exponents, C> = HashMap::new();
        for (ea, a) in &self.terms {
            for (eb, b) in &other.terms {
                let e: Exponents = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                if !keep(&e) {
                    continue;
                }
                let prod = a.times(b);
                match acc.get_mut(&e) {
                    Some(v) => *v = v.plus(&prod),
                    None => {
                        acc.insert(e, prod);
                    }
                }
            }
        }
        FinitePoly {
            num_vars: self.num_vars,
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn pow_bounded(&self, k: u32, bound: Option<u32>) -> Self {
        let mut acc = Self::one(self.num_vars);
        for _ in 0..k {
            acc = acc.mul_bounded(self, bound);
        }
        acc
    }

    pub fn truncate(&self, bound: u32) -> Self {
        self.filter_terms(|e| total(e) <= bound)
    }

    pub fn filter_terms(&self, keep: impl Fn(&[u32]) -> bool) -> Self {
        FinitePoly {
            num_vars: self.num_vars,
            terms: self
                .terms
                .iter()
                .filter(|(e, _)| keep(e))
                .map(|(e, c)| (e.clone(), c.clone()))
                .collect(),
        }
    }

    /// Appends `extra` new variables (with exponent 0) after the existing ones.
    pub fn extend_vars(&self, extra: usize) -> Self {
        FinitePoly {
            num_vars: self.num_vars + extra,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut e = e.clone();
                    e.resize(e.len() + extra, 0);
                    (e, c.clone())
                })
                .collect(),
        }
    }

    /// Splits by powers of `var`: entry `k` holds the coefficient of `var^k`
    /// (with the `var` exponent zeroed).
    pub fn coefficients_in(&self, var: usize) -> Vec<FinitePoly<C>> {
        let deg = self.degree_in(var).unwrap_or(0) as usize;
        let mut out = vec![Self::zero(self.num_vars); deg + 1];
        for (e, c) in &self.terms {
            let k = e[var] as usize;
            let mut e = e.clone();
            e[var] = 0;
            out[k].add_term(e, c);
        }
        out
    }

    /// Reassembles `Σ parts[k] · var^k`.
    pub fn from_coefficients_in(parts: &[FinitePoly<C>], var: usize, num_vars: usize) -> Self {
        let mut out = Self::zero(num_vars);
        for (k, p) in parts.iter().enumerate() {
            for (e, c) in &p.terms {
                let mut e = e.clone();
                e[var] += k as u32;
                out.add_term(e, c);
            }
        }
        out
    }

    /// Replaces `var` by `value` (a polynomial in the same variables, which
    /// must not involve `var` itself), keeping monomials accepted by `keep`.
    pub fn substitute(&self, var: usize, value: &Self, keep: impl Fn(&[u32]) -> bool + Copy) -> Self {
        let parts = self.coefficients_in(var);
        let mut out = Self::zero(self.num_vars);
        let mut power = Self::one(self.num_vars);
        for (k, part) in parts.iter().enumerate() {
            if k > 0 {
                power = power.mul_filtered(value, keep);
            }
            if !part.is_zero() {
                out = out.add(&part.mul_filtered(&power, keep));
            }
        }
        out
    }

    pub fn map_coeffs<D: Ring>(&self, mut f: impl FnMut(&C) -> Result<D>) -> Result<FinitePoly<D>> {
        let mut out = FinitePoly::zero(self.num_vars);
        for (e, c) in &self.terms {
            out.add_term(e.clone(), &f(c)?);
        }
        Ok(out)
    }
}

impl FinitePoly<BetaScalar> {
    /// True iff every coefficient lies in ℤ[β].
    pub fn is_in_z_beta(&self) -> bool {
        self.terms.values().all(BetaScalar::is_in_z_beta)
    }

    pub fn at_beta_zero(&self) -> Result<Self> {
        self.map_coeffs(BetaScalar::at_beta_zero)
    }
}

impl<C: Ring + fmt::Display> fmt::Display for FinitePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (e, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            write!(f, "[{c}]")?;
            for (v, &k) in e.iter().enumerate() {
                match k {
                    0 => {}
                    1 => write!(f, "*x{}", v + 1)?,
                    _ => write!(f, "*x{}^{k}", v + 1)?,
                }
            }
        }
        Ok(())
    }
}

impl<C: Ring> fmt::Debug for FinitePoly<C> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FinitePoly(n={}; {:?})", self.num_vars, self.terms)
    }
}

#[derive(Serialize, Deserialize)]
struct FiniteTermRepr {
    monomial: Exponents,
    coeff: BetaScalar,
}

#[derive(Serialize, Deserialize)]
struct FinitePolyRepr {
    num_vars: usize,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    degree: Option<u32>,
    terms: Vec<FiniteTermRepr>,
}

impl FinitePoly<BetaScalar> {
    fn to_repr(&self, degree: Option<u32>) -> FinitePolyRepr {
        let mut terms: Vec<FiniteTermRepr> = self
            .terms
            .iter()
            .map(|(e, c)| FiniteTermRepr {
                monomial: e.clone(),
                coeff: c.clone(),
            })
            .collect();
        // total degree ascending, then exponent vectors descending
        terms.sort_by(|a, b| {
            total(&a.monomial)
                .cmp(&total(&b.monomial))
                .then_with(|| b.monomial.cmp(&a.monomial))
        });
        FinitePolyRepr {
            num_vars: self.num_vars,
            degree,
            terms,
        }
    }

    fn from_repr(r: FinitePolyRepr) -> Result<Self> {
        let mut p = Self::zero(r.num_vars);
        for t in r.terms {
            if t.monomial.len() != r.num_vars {
                return Err(Error::Parse(format!(
                    "monomial {:?} does not have {} exponents",
                    t.monomial, r.num_vars
                )));
            }
            p.add_term(t.monomial, &t.coeff);
        }
        Ok(p)
    }
}

impl Serialize for FinitePoly<BetaScalar> {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_repr(None).serialize(s)
    }
}

impl<'de> Deserialize<'de> for FinitePoly<BetaScalar> {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        Self::from_repr(FinitePolyRepr::deserialize(d)?).map_err(serde::de::Error::custom)
    }
}

/// A power series in `x₁, …, x_N` known up to total degree `degree`.
#[derive(Clone, PartialEq, Debug)]
pub struct TruncatedXSeries {
    pub poly: FinitePoly<BetaScalar>,
    pub degree: u32,
}

impl TruncatedXSeries {
    pub fn new(poly: FinitePoly<BetaScalar>, degree: u32) -> Self {
        TruncatedXSeries {
            poly: poly.truncate(degree),
            degree,
        }
    }

    pub fn num_vars(&self) -> usize {
        self.poly.num_vars()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let degree = self.degree.min(other.degree);
        TruncatedXSeries {
            poly: self.poly.mul_bounded(&other.poly, Some(degree)),
            degree,
        }
    }
}

impl Serialize for TruncatedXSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.poly.to_repr(Some(self.degree)).serialize(s)
    }
}

impl<'de> Deserialize<'de> for TruncatedXSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = FinitePolyRepr::deserialize(d)?;
        let degree = r
            .degree
            .ok_or_else(|| serde::de::Error::custom("truncated series needs a degree"))?;
        let poly = FinitePoly::from_repr(r).map_err(serde::de::Error::custom)?;
        Ok(TruncatedXSeries { poly, degree })
    }
}

/// `p_k(x₁, …, x_N)`.
pub fn power_sum_poly<C: Ring>(k: u32, num_vars: usize, total_vars: usize) -> FinitePoly<C> {
    let mut out = FinitePoly::zero(total_vars);
    for i in 0..num_vars {
        let mut e = vec![0; total_vars];
        e[i] = k;
        out.add_term(e, &C::one());
    }
    out
}

/// Substitutes `p_k ↦ x₁^k + ⋯ + x_N^k`, keeping total degree `≤ a.degree()`.
pub fn specialize(a: &PSeries, num_vars: usize) -> TruncatedXSeries {
    let bound = a.degree();
    let mut power_sums: HashMap<u32, FinitePoly> = HashMap::new();
    let mut products: HashMap<Partition, FinitePoly> = HashMap::new();
    products.insert(Partition::empty(), FinitePoly::one(num_vars));
    let mut out = FinitePoly::zero(num_vars);
    for (lambda, c) in a.terms() {
        let img = specialized_product(lambda, num_vars, bound, &mut products, &mut power_sums);
        out = out.add(&img.scale(c));
    }
    TruncatedXSeries { poly: out, degree: bound }
}

fn specialized_product(
    lambda: &Partition,
    n: usize,
    bound: u32,
    products: &mut HashMap<Partition, FinitePoly>,
    power_sums: &mut HashMap<u32, FinitePoly>,
) -> FinitePoly {
    if let Some(p) = products.get(lambda) {
        return p.clone();
    }
    let (rest, last) = lambda.split_last().expect("empty partition is memoized");
    let head = specialized_product(&rest, n, bound, products, power_sums);
    let pk = power_sums
        .entry(last)
        .or_insert_with(|| power_sum_poly(last, n, n))
        .clone();
    let value = head.mul_bounded(&pk, Some(bound));
    products.insert(lambda.clone(), value.clone());
    value
}

/// Substitutes `x₁ = t`, `x₂ = −t − β` (variable 0 plays the role of `t`)
/// and reports whether the result is free of `t`.
pub fn check_dual_cancellation<C: Ring>(a: &FinitePoly<C>) -> Result<bool> {
    let n = a.num_vars();
    if n < 2 {
        return Err(Error::Precondition("dual cancellation needs at least two variables".into()));
    }
    let t = FinitePoly::<C>::var(0, n);
    let value = t.neg().sub(&FinitePoly::constant(C::beta_power(1), n));
    let result = a.substitute(1, &value, |_| true);
    Ok(result.degree_in(0).unwrap_or(0) == 0)
}

/// Substitutes `x₁ = t`, `x₂ = t̄ = −t/(1+βt)` (expanded as a series in `t`)
/// and reports whether the coefficients of `t¹ … t^{t_order}` vanish.
///
/// The substitution maps a monomial of degree `d` to terms of total degree
/// `≥ d`, so truncating at the series degree keeps every retained term exact.
pub fn check_kq_cancellation(a: &TruncatedXSeries, t_order: u32) -> Result<bool> {
    let n = a.num_vars();
    if n < 2 {
        return Err(Error::Precondition("K-Q cancellation needs at least two variables".into()));
    }
    if t_order > a.degree {
        return Err(Error::Precondition(format!(
            "t-order {t_order} exceeds the truncation degree {}",
            a.degree
        )));
    }
    let bound = a.degree;
    // t̄ = Σ_{k≥1} (−1)^k β^{k−1} t^k
    let mut tbar = FinitePoly::zero(n);
    for k in 1..=bound {
        let mut e = vec![0; n];
        e[0] = k;
        let sign = if k % 2 == 0 { 1 } else { -1 };
        tbar.add_term(e, &BetaScalar::monomial(sign, (k - 1) as usize));
    }
    let keep = move |e: &[u32]| total(e) <= bound;
    let result = a.poly.substitute(1, &tbar, keep);
    let cancels = result.terms().all(|(e, _)| e[0] == 0 || e[0] > t_order);
    Ok(cancels)
}

/// The linear factor removed by [`divide_out_linear`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearRoot {
    /// Divide by `z + β` (root `z = −β`).
    MinusBeta,
    /// Divide by `2 + βz` (root `z = −2/β`); needs β⁻¹ in the coefficients.
    MinusTwoOverBeta,
}

/// Exact synthetic division of `a` (a polynomial in variable `var`) by the
/// linear factor of `root`. A nonzero remainder means `a` does not vanish
/// at the root, which is reported as a contract violation.
pub fn divide_out_linear<C: Ring>(a: &FinitePoly<C>, var: usize, root: LinearRoot) -> Result<FinitePoly<C>> {
    let n = a.num_vars();
    let parts = a.coefficients_in(var);
    let m = parts.len() - 1;
    // divide by (z − r), then by the leading coefficient of the factor
    let (r, lead_inv) = match root {
        LinearRoot::MinusBeta => (C::beta_power(1).negated(), C::one()),
        LinearRoot::MinusTwoOverBeta => (C::from_int(-2).times(&C::beta_power(-1)), C::beta_power(-1)),
    };
    if m == 0 {
        if parts[0].is_zero() {
            return Ok(FinitePoly::zero(n));
        }
        return Err(Error::Contract(format!("polynomial does not vanish at the root ({root:?})")));
    }
    let mut quotient = vec![FinitePoly::zero(n); m];
    quotient[m - 1] = parts[m].clone();
    for k in (1..m).rev() {
        quotient[k - 1] = parts[k].add(&quotient[k].scale(&r));
    }
    let remainder = parts[0].add(&quotient[0].scale(&r));
    if !remainder.is_zero() {
        return Err(Error::Contract(format!("polynomial does not vanish at the root ({root:?})")));
    }
    let q = FinitePoly::from_coefficients_in(&quotient, var, n);
    Ok(q.scale(&lead_inv))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeff::LaurentBetaPoly;

    fn x(i: usize, n: usize) -> FinitePoly {
        FinitePoly::var(i, n)
    }

    fn beta(n: usize) -> FinitePoly {
        FinitePoly::constant(BetaScalar::beta(), n)
    }

    #[test]
    fn specialize_power_sums() {
        let p2 = specialize(&PSeries::power_sum(2, 2), 2);
        assert_eq!(p2.poly, x(0, 2).mul(&x(0, 2)).add(&x(1, 2).mul(&x(1, 2))));
        let p11 = PSeries::monomial(Partition::from_parts(vec![1, 1]), BetaScalar::one(), 2);
        assert_eq!(specialize(&p11, 1).poly, x(0, 1).mul(&x(0, 1)));
    }

    #[test]
    fn dual_cancellation_examples() {
        // p1 in three variables: t + (−t − β) + x3
        let p1 = power_sum_poly::<BetaScalar>(1, 3, 3);
        assert!(check_dual_cancellation(&p1).unwrap());
        let p2 = power_sum_poly::<BetaScalar>(2, 3, 3);
        assert!(!check_dual_cancellation(&p2).unwrap());
        assert!(check_dual_cancellation(&FinitePoly::<BetaScalar>::one(3)).unwrap());
        assert!(check_dual_cancellation(&FinitePoly::<BetaScalar>::one(1)).is_err());
    }

    #[test]
    fn kq_cancellation_examples() {
        let p2 = specialize(&PSeries::power_sum(2, 6), 3);
        assert!(!check_kq_cancellation(&p2, 6).unwrap());
        let one = specialize(&PSeries::one(6), 3);
        assert!(check_kq_cancellation(&one, 6).unwrap());
        assert!(check_kq_cancellation(&one, 7).is_err());
    }

    #[test]
    fn divide_by_z_plus_beta() {
        let n = 1;
        let z = x(0, n);
        let f = z.add(&beta(n));
        assert_eq!(divide_out_linear(&f, 0, LinearRoot::MinusBeta).unwrap(), FinitePoly::one(n));
        let g = z.mul(&z).sub(&beta(n).mul(&beta(n)));
        assert_eq!(divide_out_linear(&g, 0, LinearRoot::MinusBeta).unwrap(), z.sub(&beta(n)));
        let h = z.add(&FinitePoly::one(n));
        assert!(matches!(divide_out_linear(&h, 0, LinearRoot::MinusBeta), Err(Error::Contract(_))));
    }

    #[test]
    fn divide_by_two_plus_beta_z_in_laurent_coefficients() {
        // (2 + βz)(z + x) over Z[β, β⁻¹], variables (x, z)
        let n = 2;
        let xv = FinitePoly::<LaurentBetaPoly>::var(0, n);
        let z = FinitePoly::<LaurentBetaPoly>::var(1, n);
        let factor = FinitePoly::constant(LaurentBetaPoly::from_int(2), n)
            .add(&z.scale(&LaurentBetaPoly::beta_power(1)));
        let q = z.add(&xv);
        let f = factor.mul(&q);
        let back = divide_out_linear(&f, 1, LinearRoot::MinusTwoOverBeta).unwrap();
        assert_eq!(back, q);
        assert_eq!(back.mul(&factor), f);
    }
}
