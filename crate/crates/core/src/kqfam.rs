//! The named function families: deformed power sums, q-functions and their
//! bar-variants, one-row `GQ` and `gp`.
//!
//! G-side families (`pG`, `qG`, `ovqG`, `GQ`) are infinite series and come
//! truncated at a degree `D`. g-side families (`pg`, `qg`, `ovqg`, `gp`) are
//! finite; the free constructors return them exactly, at a truncation degree
//! equal to their top weight.

use std::fmt;
use std::str::FromStr;
use std::sync::{OnceLock, RwLock};

use serde::{Deserialize, Serialize};

use crate::coeff::{binom_signed, binomial, BetaScalar, LaurentBetaPoly, Ring};
use crate::error::{Error, Result};
use crate::finvar::{divide_out_linear, FinitePoly, LinearRoot};
use crate::psym::{invert_pseries, zbar_power_coeff, PSeries, ZSeries};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "pG")]
    PG,
    #[serde(rename = "pg")]
    Pg,
    #[serde(rename = "qG")]
    QG,
    #[serde(rename = "qg")]
    Qg,
    #[serde(rename = "ovqG")]
    OvqG,
    #[serde(rename = "ovqg")]
    Ovqg,
    #[serde(rename = "GQ")]
    GQ,
    #[serde(rename = "gp")]
    Gp,
}

impl Family {
    pub const ALL: [Family; 8] = [
        Family::PG,
        Family::Pg,
        Family::QG,
        Family::Qg,
        Family::OvqG,
        Family::Ovqg,
        Family::GQ,
        Family::Gp,
    ];

    pub fn tag(self) -> &'static str {
        match self {
            Family::PG => "pG",
            Family::Pg => "pg",
            Family::QG => "qG",
            Family::Qg => "qg",
            Family::OvqG => "ovqG",
            Family::Ovqg => "ovqg",
            Family::GQ => "GQ",
            Family::Gp => "gp",
        }
    }

    /// True for the infinite (degree-truncated) families.
    pub fn is_truncated(self) -> bool {
        matches!(self, Family::PG | Family::QG | Family::OvqG | Family::GQ)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for Family {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Family::ALL
            .into_iter()
            .find(|f| f.tag() == s)
            .ok_or_else(|| Error::Usage(format!("unknown family tag `{s}`")))
    }
}

/// A family tag with its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilyId {
    pub family: Family,
    pub index: i64,
}

impl FamilyId {
    pub fn new(family: Family, index: i64) -> Result<Self> {
        if family != Family::GQ && index < 1 {
            return Err(Error::Usage(format!(
                "{family} needs a positive index, got {index}"
            )));
        }
        Ok(FamilyId { family, index })
    }

    /// True for even `pG` members, which lie outside the span of the odd
    /// deformed power sums.
    pub fn is_flagged(&self) -> bool {
        self.family == Family::PG && self.index % 2 == 0
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.family, self.index)
    }
}

/// `p^(β)_n = Σ_k C(−n,k) (β/2)^k p_{n+k}`, truncated at `degree`.
pub fn p_beta(n: u32, degree: u32) -> PSeries {
    let mut out = PSeries::zero(degree);
    for k in 0..=degree.saturating_sub(n) {
        let c = &BetaScalar::from_int(binom_signed(-(n as i64), k as u64))
            * &BetaScalar::beta_power_scaled(1, 2, k as usize);
        out = &out + &PSeries::power_sum(n + k, degree).scale(&c);
    }
    out
}

/// `p^[β]_n = Σ_{k<n} C(n,k) (β/2)^k p_{n−k}`, exact at degree `n`.
pub fn p_bracket(n: u32) -> PSeries {
    let mut out = PSeries::zero(n);
    for k in 0..n {
        let c = &BetaScalar::from_int(binomial(n as u64, k as u64))
            * &BetaScalar::beta_power_scaled(1, 2, k as usize);
        out = &out + &PSeries::power_sum(n - k, n).scale(&c);
    }
    out
}

/// `p_k(x̄) = (−1)^k Σ_j C(−k,j) β^j p_{k+j}`, truncated at `degree`.
pub fn p_of_xbar(k: u32, degree: u32) -> PSeries {
    let sign = if k.is_multiple_of(2) { 1 } else { -1 };
    let mut out = PSeries::zero(degree);
    for j in 0..=degree.saturating_sub(k) {
        let c = BetaScalar::monomial(sign * binom_signed(-(k as i64), j as u64), j as usize);
        out = &out + &PSeries::power_sum(k + j, degree).scale(&c);
    }
    out
}

/// `Q^(β)(z) = Σ q^(β)_n z^n = ∏ (1 − x̄ᵢ z)/(1 − xᵢ z)` through order `order`.
pub fn q_beta_series(order: usize, degree: u32) -> ZSeries {
    let mut log = vec![PSeries::zero(degree)];
    for k in 1..=order as u32 {
        let term = if k <= degree {
            (&PSeries::power_sum(k, degree) - &p_of_xbar(k, degree)).scale(&BetaScalar::ratio(1, k))
        } else {
            PSeries::zero(degree)
        };
        log.push(term);
    }
    ZSeries::new(log)
        .and_then(|s| s.exp())
        .expect("logarithm series has zero constant term")
}

/// `Q̄^(β)(z) = 1 / Q^(β)(z)`.
pub fn qbar_beta_series(order: usize, degree: u32) -> ZSeries {
    q_beta_series(order, degree)
        .invert()
        .expect("Q(z) has constant term 1")
}

/// `q̄^(β)_k = (−1)^k Σ_l C(k+l,k)(−β)^l q_{k+l} / Σ_l (−β)^l q_l`, an
/// independent route to the bar-series.
pub fn qbar_beta_from_quotient(q: &ZSeries) -> ZSeries {
    let order = q.order();
    let den = alternating_tail(q, 0, |_| 1.into());
    let den_inv = invert_pseries(&den).expect("denominator has constant term 1");
    let coeffs = (0..=order)
        .map(|k| {
            let num = alternating_tail(q, k, |l| binomial((k + l) as u64, k as u64));
            let sign = if k % 2 == 0 { 1 } else { -1 };
            (&num * &den_inv).scale(&BetaScalar::from_int(sign))
        })
        .collect();
    ZSeries::new(coeffs).expect("uniform degree")
}

/// `Σ_l w(l) (−β)^l q_{start+l}` over the stored coefficients of `q`;
/// terms with `start + l` beyond the degree vanish after truncation.
fn alternating_tail(
    q: &ZSeries,
    start: usize,
    weight: impl Fn(usize) -> num_bigint::BigInt,
) -> PSeries {
    let degree = q.degree();
    let mut out = PSeries::zero(degree);
    let mut l = 0;
    while start + l <= q.order() && start + l <= degree as usize {
        let c = &BetaScalar::from_int(weight(l)) * &BetaScalar::beta_power_scaled(-1, 1, l);
        out = &out + &q.coeff(start + l).scale(&c);
        l += 1;
    }
    out
}

/// `Q^[β](z) = Σ q^[β]_n z^n = ∏ (1 − xᵢ z̄)/(1 − xᵢ z)` through order `order`.
///
/// Each coefficient `q^[β]_n` has top weight `n`, so degree `order` is exact.
pub fn q_bracket_series(order: usize) -> ZSeries {
    let degree = order as u32;
    let mut z_powers = Vec::with_capacity(order + 1);
    z_powers.push(PSeries::zero(degree));
    for m in 1..=order as u32 {
        // coefficient of z^m in Σ_k p_k (z^k − z̄^k)/k
        let mut acc = PSeries::zero(degree);
        for k in 1..=m {
            let mut c = -zbar_power_coeff(k, m);
            if k == m {
                c = &c + &BetaScalar::one();
            }
            if c.is_zero() {
                continue;
            }
            let c = &c * &BetaScalar::ratio(1, k);
            acc = &acc + &PSeries::power_sum(k, degree).scale(&c);
        }
        z_powers.push(acc);
    }
    ZSeries::new(z_powers)
        .and_then(|s| s.exp())
        .expect("logarithm series has zero constant term")
}

/// `q^[β]_n`, exact at degree `n`.
pub fn q_bracket(n: u32) -> PSeries {
    exact_coeff(&q_bracket_series(n as usize), n)
}

fn exact_coeff(series: &ZSeries, n: u32) -> PSeries {
    series
        .coeff(n as usize)
        .truncate(n.max(1).min(series.degree()))
        .expect("degree lowered")
        .with_degree(n)
        .expect("coefficient fits its weight")
}

/// `q̄^[β]_n = (−1)^n Σ_{l<n} C(n−1,l) β^l q^[β]_{n−l}`, exact at degree `n`.
pub fn qbar_bracket_from_series(series: &ZSeries, n: u32) -> PSeries {
    let mut out = PSeries::zero(n);
    let sign = if n.is_multiple_of(2) { 1 } else { -1 };
    for l in 0..n {
        let c = BetaScalar::monomial(sign * binomial((n - 1) as u64, l as u64), l as usize);
        let q = exact_coeff(series, n - l).with_degree(n).expect("raising degree");
        out = &out + &q.scale(&c);
    }
    out
}

pub fn qbar_bracket(n: u32) -> PSeries {
    qbar_bracket_from_series(&q_bracket_series(n as usize), n)
}

/// `GQ_n`, truncated at `degree`: the constant `(−β)^{−n}` for `n ≤ 0`, and
/// `(Σ_j (−β)^j q_{n+j}) / (Σ_l (−β)^l q_l)` otherwise.
pub fn gq(n: i64, degree: u32) -> PSeries {
    gq_from_series(&q_beta_series(degree as usize, degree), n)
}

pub fn gq_from_series(q: &ZSeries, n: i64) -> PSeries {
    let degree = q.degree();
    if n <= 0 {
        return PSeries::constant(BetaScalar::beta_power_scaled(-1, 1, (-n) as usize), degree);
    }
    let n = n as usize;
    if n > degree as usize {
        return PSeries::zero(degree);
    }
    let num = alternating_tail(q, n, |_| 1.into());
    let den = alternating_tail(q, 0, |_| 1.into());
    &num * &invert_pseries(&den).expect("denominator has constant term 1")
}

/// `gp_n = ½ Σ_{j<n} (−β/2)^j q^[β]_{n−j}`, exact at degree `n`.
pub fn gp(n: u32) -> PSeries {
    gp_from_series(&q_bracket_series(n as usize), n)
}

pub fn gp_from_series(series: &ZSeries, n: u32) -> PSeries {
    let mut out = PSeries::zero(n);
    for j in 0..n {
        let c = &BetaScalar::ratio(1, 2) * &BetaScalar::beta_power_scaled(-1, 2, j as usize);
        let q = exact_coeff(series, n - j).with_degree(n).expect("raising degree");
        out = &out + &q.scale(&c);
    }
    out
}

/// `Σ_{k ≤ order} (a·z)^k` with `z` the variable of index `z_var`.
fn geometric<C: Ring>(a: &FinitePoly<C>, z_var: usize, order: u32) -> FinitePoly<C> {
    let n = a.num_vars();
    let keep = |e: &[u32]| e[z_var] <= order;
    let step = a.mul(&FinitePoly::var(z_var, n));
    let mut out = FinitePoly::one(n);
    let mut pw = FinitePoly::one(n);
    for _ in 0..order {
        pw = pw.mul_filtered(&step, keep);
        out = out.add(&pw);
    }
    out
}

/// Extracts the coefficient of `z^n` and drops the `z` variable.
fn z_coefficient<C: Ring>(a: &FinitePoly<C>, z_var: usize, n: u32) -> FinitePoly<C> {
    let nv = a.num_vars();
    let mut out = FinitePoly::zero(nv - 1);
    for (e, c) in a.terms() {
        if e[z_var] == n {
            let mut e = e.clone();
            e.remove(z_var);
            out.add_term(e, c);
        }
    }
    out
}

fn integral_poly(a: &FinitePoly<LaurentBetaPoly>, what: &str) -> Result<FinitePoly> {
    a.map_coeffs(|c| {
        if c.is_in_z_beta() {
            Ok(c.to_scalar())
        } else {
            Err(Error::Integrality(format!("{what}: coefficient {c} is not in Z[beta]")))
        }
    })
}

/// `GQ_n(x₁, …, x_N)` through the factor theorem: the numerator
/// `∏(1 + xᵢ(z+β))∏(1+βxᵢ) − ∏(1 − xᵢz)` is divided by `z + β`, multiplied by
/// `z / ∏(1 − xᵢz)` and the coefficient of `z^n` is read off.
pub fn gq_finite(n: u32, num_vars: usize) -> Result<FinitePoly> {
    type P = FinitePoly<LaurentBetaPoly>;
    let nv = num_vars + 1;
    let z = P::var(num_vars, nv);
    let one = P::one(nv);
    let beta = P::constant(LaurentBetaPoly::beta_power(1), nv);
    let z_plus_beta = z.add(&beta);
    let mut a = one.clone();
    let mut b = one.clone();
    let mut c = one.clone();
    let mut inv = one.clone();
    for i in 0..num_vars {
        let x = P::var(i, nv);
        a = a.mul(&one.add(&x.mul(&z_plus_beta)));
        b = b.mul(&one.add(&beta.mul(&x)));
        c = c.mul(&one.sub(&x.mul(&z)));
        inv = inv.mul_filtered(&geometric(&x, num_vars, n), |e| e[num_vars] <= n);
    }
    let numerator = a.mul(&b).sub(&c);
    let quotient = divide_out_linear(&numerator, num_vars, LinearRoot::MinusBeta)?;
    let series = quotient.mul(&z).mul_filtered(&inv, |e| e[num_vars] <= n);
    integral_poly(&z_coefficient(&series, num_vars, n), "GQ_finite")
}

/// `gp_n(x₁, …, x_N)` through the factor theorem at `z = −2/β`, computed over
/// ℤ[β, β⁻¹]; the result is checked to lie in ℤ[β].
pub fn gp_finite(n: u32, num_vars: usize) -> Result<FinitePoly> {
    type P = FinitePoly<LaurentBetaPoly>;
    let nv = num_vars + 1;
    let z = P::var(num_vars, nv);
    let one = P::one(nv);
    let beta_z = z.scale(&LaurentBetaPoly::beta_power(1));
    let one_plus_beta_z = one.add(&beta_z);
    let mut a = one.clone();
    let mut c = one.clone();
    let mut inv = one.clone();
    let neg_beta = P::constant(LaurentBetaPoly::beta_power(1).negated(), nv);
    let keep = |e: &[u32]| e[num_vars] <= n;
    for i in 0..num_vars {
        let x = P::var(i, nv);
        a = a.mul(&one_plus_beta_z.add(&x.mul(&z)));
        c = c.mul(&one.sub(&x.mul(&z)).mul(&one_plus_beta_z));
        inv = inv
            .mul_filtered(&geometric(&x, num_vars, n), keep)
            .mul_filtered(&geometric(&neg_beta, num_vars, n), keep);
    }
    let numerator = a.sub(&c);
    let quotient = divide_out_linear(&numerator, num_vars, LinearRoot::MinusTwoOverBeta)?;
    let series = quotient.mul_filtered(&inv, keep);
    integral_poly(&z_coefficient(&series, num_vars, n), "gp_finite")
}

/// Family constructors at a fixed truncation degree, with the generating
/// series computed once and shared between threads.
pub struct Families {
    degree: u32,
    q_beta: OnceLock<ZSeries>,
    qbar_beta: OnceLock<ZSeries>,
    q_bracket: RwLock<Option<ZSeries>>,
}

impl Families {
    pub fn new(degree: u32) -> Self {
        Families {
            degree,
            q_beta: OnceLock::new(),
            qbar_beta: OnceLock::new(),
            q_bracket: RwLock::new(None),
        }
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// `Q^(β)(z)` through order `D`; higher coefficients vanish at degree `D`.
    pub fn q_beta_series(&self) -> &ZSeries {
        self.q_beta
            .get_or_init(|| q_beta_series(self.degree as usize, self.degree))
    }

    pub fn qbar_beta_series(&self) -> &ZSeries {
        self.qbar_beta
            .get_or_init(|| self.q_beta_series().invert().expect("constant term 1"))
    }

    /// `Q^[β](z)` through at least order `order`.
    pub fn q_bracket_series(&self, order: usize) -> ZSeries {
        if let Some(s) = self.q_bracket.read().expect("lock").as_ref() {
            if s.order() >= order {
                return s.clone();
            }
        }
        let mut slot = self.q_bracket.write().expect("lock");
        match slot.as_ref() {
            Some(s) if s.order() >= order => s.clone(),
            _ => {
                let s = q_bracket_series(order.max(self.degree as usize));
                *slot = Some(s.clone());
                s
            }
        }
    }

    pub fn p_beta(&self, n: u32) -> PSeries {
        p_beta(n, self.degree)
    }

    pub fn q_beta(&self, n: u32) -> PSeries {
        self.coeff_or_zero(self.q_beta_series(), n)
    }

    pub fn qbar_beta(&self, n: u32) -> PSeries {
        self.coeff_or_zero(self.qbar_beta_series(), n)
    }

    fn coeff_or_zero(&self, s: &ZSeries, n: u32) -> PSeries {
        if (n as usize) <= s.order() {
            s.coeff(n as usize).clone()
        } else {
            PSeries::zero(self.degree)
        }
    }

    pub fn gq(&self, n: i64) -> PSeries {
        gq_from_series(self.q_beta_series(), n)
    }

    pub fn q_bracket(&self, n: u32) -> PSeries {
        exact_coeff(&self.q_bracket_series(n as usize), n)
    }

    pub fn qbar_bracket(&self, n: u32) -> PSeries {
        qbar_bracket_from_series(&self.q_bracket_series(n as usize), n)
    }

    pub fn gp(&self, n: u32) -> PSeries {
        gp_from_series(&self.q_bracket_series(n as usize), n)
    }

    /// The family member, exact at its own degree for the finite families and
    /// truncated at `D` for the others.
    pub fn element(&self, id: FamilyId) -> PSeries {
        let n = id.index.max(0) as u32;
        match id.family {
            Family::PG => self.p_beta(n),
            Family::Pg => p_bracket(n),
            Family::QG => self.q_beta(n),
            Family::Qg => self.q_bracket(n),
            Family::OvqG => self.qbar_beta(n),
            Family::Ovqg => self.qbar_bracket(n),
            Family::GQ => self.gq(id.index),
            Family::Gp => self.gp(n),
        }
    }

    /// The family member at truncation degree exactly `D`.
    pub fn element_at_degree(&self, id: FamilyId) -> PSeries {
        let e = self.element(id);
        if e.degree() >= self.degree {
            e.truncate(self.degree).expect("lowering degree")
        } else {
            e.with_degree(self.degree).expect("raising degree")
        }
    }
}

impl fmt::Debug for Families {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Families").field("degree", &self.degree).finish()
    }
}
