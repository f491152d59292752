use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::coeff::BetaScalar;
use crate::error::{Error, Result};
use crate::partitions::Partition;

/// A symmetric function in power-sum coordinates, truncated at total degree `D`.
///
/// The term `λ ↦ c` stands for `c · p_{λ₁} p_{λ₂} ⋯`; the empty partition is
/// the constant term. Everything of degree above `D` is discarded.
#[derive(Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(into = "PSeriesRepr", try_from = "PSeriesRepr")]
pub struct PSeries {
    degree: u32,
    terms: BTreeMap<Partition, BetaScalar>,
}

#[derive(Serialize, Deserialize)]
struct TermRepr {
    partition: Partition,
    coeff: BetaScalar,
}

#[derive(Serialize, Deserialize)]
struct PSeriesRepr {
    degree: u32,
    terms: Vec<TermRepr>,
}

impl From<PSeries> for PSeriesRepr {
    fn from(s: PSeries) -> Self {
        PSeriesRepr {
            degree: s.degree,
            terms: s
                .terms
                .into_iter()
                .map(|(partition, coeff)| TermRepr { partition, coeff })
                .collect(),
        }
    }
}

impl TryFrom<PSeriesRepr> for PSeries {
    type Error = Error;
    fn try_from(r: PSeriesRepr) -> Result<Self> {
        let mut s = PSeries::zero(r.degree);
        for t in r.terms {
            if t.partition.weight() > r.degree {
                return Err(Error::Parse(format!("term {} exceeds degree {}", t.partition, r.degree)));
            }
            s.add_term(t.partition, &t.coeff);
        }
        Ok(s)
    }
}

impl PSeries {
    pub fn zero(degree: u32) -> Self {
        PSeries {
            degree,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(degree: u32) -> Self {
        Self::constant(BetaScalar::one(), degree)
    }

    pub fn constant(c: BetaScalar, degree: u32) -> Self {
        Self::monomial(Partition::empty(), c, degree)
    }

    /// `c · p_λ`, or zero when `|λ| > degree`.
    pub fn monomial(lambda: Partition, c: BetaScalar, degree: u32) -> Self {
        let mut s = Self::zero(degree);
        s.add_term(lambda, &c);
        s
    }

    /// The power sum `p_k` (`p_0` is taken as the constant 1).
    pub fn power_sum(k: u32, degree: u32) -> Self {
        Self::monomial(Partition::row(k), BetaScalar::one(), degree)
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Partition, &BetaScalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, lambda: &Partition) -> BetaScalar {
        self.terms.get(lambda).cloned().unwrap_or_default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn constant_term(&self) -> BetaScalar {
        self.coeff(&Partition::empty())
    }

    /// Lowest weight of a stored term.
    pub fn min_weight(&self) -> Option<u32> {
        self.terms.keys().next().map(Partition::weight)
    }

    /// Highest weight of a stored term.
    pub fn top_weight(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Partition::weight)
    }

    /// Adds `c · p_λ` in place; ignores terms above the truncation degree.
    pub fn add_term(&mut self, lambda: Partition, c: &BetaScalar) {
        if c.is_zero() || lambda.weight() > self.degree {
            return;
        }
        match self.terms.entry(lambda) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c.clone());
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check_degree(&self, other: &PSeries) -> Result<()> {
        if self.degree != other.degree {
            return Err(Error::Mismatch {
                what: "truncation degrees",
                left: self.degree as usize,
                right: other.degree as usize,
            });
        }
        Ok(())
    }

    pub fn checked_add(&self, other: &PSeries) -> Result<PSeries> {
        self.check_degree(other)?;
        let mut out = self.clone();
        for (l, c) in &other.terms {
            out.add_term(l.clone(), c);
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &PSeries) -> Result<PSeries> {
        self.checked_add(&-other)
    }

    pub fn checked_mul(&self, other: &PSeries) -> Result<PSeries> {
        self.check_degree(other)?;
        let mut acc: BTreeMap<Partition, BetaScalar> = BTreeMap::new();
        for (l, a) in &self.terms {
            let room = self.degree - l.weight();
            for (m, b) in &other.terms {
                // terms are sorted by weight
                if m.weight() > room {
                    break;
                }
                let prod = a * b;
                let key = l.union(m);
                match acc.get_mut(&key) {
                    Some(v) => *v = &*v + &prod,
                    None => {
                        acc.insert(key, prod);
                    }
                }
            }
        }
        acc.retain(|_, c| !c.is_zero());
        Ok(PSeries {
            degree: self.degree,
            terms: acc,
        })
    }

    pub fn scale(&self, c: &BetaScalar) -> PSeries {
        if c.is_zero() {
            return PSeries::zero(self.degree);
        }
        PSeries {
            degree: self.degree,
            terms: self.terms.iter().map(|(l, x)| (l.clone(), x * c)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> PSeries {
        let mut acc = PSeries::one(self.degree);
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Drops everything above `degree`; raising the degree is refused.
    pub fn truncate(&self, degree: u32) -> Result<PSeries> {
        if degree > self.degree {
            return Err(Error::Precondition(format!(
                "cannot raise truncation degree from {} to {degree}",
                self.degree
            )));
        }
        Ok(PSeries {
            degree,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() <= degree)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        })
    }

    /// Re-labels the truncation degree of a series known to be exact, e.g. a
    /// polynomial whose top weight does not exceed `degree`.
    pub fn with_degree(&self, degree: u32) -> Result<PSeries> {
        if self.top_weight().unwrap_or(0) > degree {
            return Err(Error::Precondition(format!(
                "series has terms above degree {degree}"
            )));
        }
        Ok(PSeries {
            degree,
            terms: self.terms.clone(),
        })
    }

    /// The weight-`d` part.
    pub fn homogeneous_component(&self, d: u32) -> PSeries {
        PSeries {
            degree: self.degree,
            terms: self
                .terms
                .iter()
                .filter(|(l, _)| l.weight() == d)
                .map(|(l, c)| (l.clone(), c.clone()))
                .collect(),
        }
    }

    pub fn map_coeffs(&self, mut f: impl FnMut(&BetaScalar) -> Result<BetaScalar>) -> Result<PSeries> {
        let mut out = PSeries::zero(self.degree);
        for (l, c) in &self.terms {
            out.add_term(l.clone(), &f(c)?);
        }
        Ok(out)
    }

    /// Sets β = 0 in every coefficient.
    pub fn at_beta_zero(&self) -> Result<PSeries> {
        self.map_coeffs(BetaScalar::at_beta_zero)
    }

    /// True iff homogeneous of degree `n` when `deg xᵢ = 1` and `deg β = −1`:
    /// every coefficient of `p_λ` is a rational multiple of `β^{|λ|−n}`.
    pub fn is_homogeneous_beta_graded(&self, n: i64) -> bool {
        self.is_homogeneous_graded(n, -1)
    }

    /// Homogeneity of degree `n` when `deg xᵢ = 1` and `deg β = beta_degree`
    /// (`±1`). The finite families are homogeneous for `deg β = +1`.
    pub fn is_homogeneous_graded(&self, n: i64, beta_degree: i64) -> bool {
        self.terms.iter().all(|(l, c)| {
            c.beta_monomial_exponent()
                .is_some_and(|e| l.weight() as i64 + beta_degree * e == n)
        })
    }

    /// Applies the ring homomorphism determined by `p_k ↦ image(k)`.
    ///
    /// Images must be series of the target degree; the result is truncated
    /// there. Products `image(λ)` are memoized along partition prefixes.
    pub fn substitute_power_sums(
        &self,
        target_degree: u32,
        mut image: impl FnMut(u32) -> PSeries,
    ) -> PSeries {
        let mut generators: HashMap<u32, PSeries> = HashMap::new();
        let mut products: HashMap<Partition, PSeries> = HashMap::new();
        products.insert(Partition::empty(), PSeries::one(target_degree));
        let mut out = PSeries::zero(target_degree);
        for (lambda, c) in &self.terms {
            let img = product_image(lambda, &mut products, &mut generators, &mut image);
            out = &out + &img.scale(c);
        }
        out
    }
}

fn product_image(
    lambda: &Partition,
    products: &mut HashMap<Partition, PSeries>,
    generators: &mut HashMap<u32, PSeries>,
    image: &mut impl FnMut(u32) -> PSeries,
) -> PSeries {
    if let Some(p) = products.get(lambda) {
        return p.clone();
    }
    let (rest, last) = lambda.split_last().expect("empty partition is memoized");
    let head = product_image(&rest, products, generators, image);
    let g = generators.entry(last).or_insert_with(|| image(last)).clone();
    let value = &head * &g;
    products.insert(lambda.clone(), value.clone());
    value
}

impl Add for &PSeries {
    type Output = PSeries;
    fn add(self, rhs: &PSeries) -> PSeries {
        self.checked_add(rhs).expect("PSeries addition")
    }
}

impl Sub for &PSeries {
    type Output = PSeries;
    fn sub(self, rhs: &PSeries) -> PSeries {
        self.checked_sub(rhs).expect("PSeries subtraction")
    }
}

impl Mul for &PSeries {
    type Output = PSeries;
    fn mul(self, rhs: &PSeries) -> PSeries {
        self.checked_mul(rhs).expect("PSeries multiplication")
    }
}

impl Neg for &PSeries {
    type Output = PSeries;
    fn neg(self) -> PSeries {
        PSeries {
            degree: self.degree,
            terms: self.terms.iter().map(|(l, c)| (l.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (l, c)) in self.terms.iter().enumerate() {
            if i > 0 {
                f.write_str(" + ")?;
            }
            if l.is_empty() {
                write!(f, "[{c}]")?;
            } else {
                write!(f, "[{c}]*p{l}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for PSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PSeries(D={}; {self})", self.degree)
    }
}
