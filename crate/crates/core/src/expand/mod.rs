//! Basis expansions.
//!
//! Every expansion goes through deformed power-sum coordinates: G-side
//! elements are rewritten in monomials of `p^(β)_n`, g-side elements in
//! monomials of `p^[β]_n`. Membership in the odd subalgebra is read off as
//! odd support there, and coordinates in q-type bases come from a
//! degree-graded exact linear solve.
//!
//! Coordinates in the deformed power sums are themselves stored as a
//! [`PSeries`], whose variable `p_k` then stands for `p^(β)_k` or `p^[β]_k`.

mod formal;
mod linalg;

pub use formal::{gp_even_to_odd, keven_reduce, FormalGPPoly};

use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::str::FromStr;
use std::sync::Mutex;

use serde::{Deserialize, Serialize};

use crate::coeff::{binom_signed, binomial, BetaScalar};
use crate::error::{Error, Result};
use crate::kqfam::{self, Families};
use crate::partitions::{enumerate, Partition, PartitionClass};
use crate::psym::PSeries;

/// The bases an element can be expanded in.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Basis {
    #[serde(rename = "pG_odd")]
    PGOdd,
    #[serde(rename = "qG_odd")]
    QGOdd,
    #[serde(rename = "ovqG_odd")]
    OvqGOdd,
    #[serde(rename = "qG_strict")]
    QGStrict,
    #[serde(rename = "ovqG_strict")]
    OvqGStrict,
    #[serde(rename = "pg_odd")]
    PgOdd,
    #[serde(rename = "qg_odd")]
    QgOdd,
    #[serde(rename = "ovqg_odd")]
    OvqgOdd,
    #[serde(rename = "qg_strict")]
    QgStrict,
    #[serde(rename = "ovqg_strict")]
    OvqgStrict,
    #[serde(rename = "GQ_odd")]
    GQOdd,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum Generator {
    PBeta,
    QBeta,
    QbarBeta,
    PBracket,
    QBracket,
    QbarBracket,
    GQ,
}

impl Basis {
    pub const ALL: [Basis; 11] = [
        Basis::PGOdd,
        Basis::QGOdd,
        Basis::OvqGOdd,
        Basis::QGStrict,
        Basis::OvqGStrict,
        Basis::PgOdd,
        Basis::QgOdd,
        Basis::OvqgOdd,
        Basis::QgStrict,
        Basis::OvqgStrict,
        Basis::GQOdd,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Basis::PGOdd => "pG_odd",
            Basis::QGOdd => "qG_odd",
            Basis::OvqGOdd => "ovqG_odd",
            Basis::QGStrict => "qG_strict",
            Basis::OvqGStrict => "ovqG_strict",
            Basis::PgOdd => "pg_odd",
            Basis::QgOdd => "qg_odd",
            Basis::OvqgOdd => "ovqg_odd",
            Basis::QgStrict => "qg_strict",
            Basis::OvqgStrict => "ovqg_strict",
            Basis::GQOdd => "GQ_odd",
        }
    }

    pub fn class(self) -> PartitionClass {
        match self {
            Basis::QGStrict | Basis::OvqGStrict | Basis::QgStrict | Basis::OvqgStrict => {
                PartitionClass::Strict
            }
            _ => PartitionClass::Odd,
        }
    }

    /// True for bases of the infinite (degree-truncated) side.
    pub fn is_truncated(self) -> bool {
        matches!(
            self,
            Basis::PGOdd | Basis::QGOdd | Basis::OvqGOdd | Basis::QGStrict | Basis::OvqGStrict | Basis::GQOdd
        )
    }

    fn generator(self) -> Generator {
        match self {
            Basis::PGOdd => Generator::PBeta,
            Basis::QGOdd | Basis::QGStrict => Generator::QBeta,
            Basis::OvqGOdd | Basis::OvqGStrict => Generator::QbarBeta,
            Basis::PgOdd => Generator::PBracket,
            Basis::QgOdd | Basis::QgStrict => Generator::QBracket,
            Basis::OvqgOdd | Basis::OvqgStrict => Generator::QbarBracket,
            Basis::GQOdd => Generator::GQ,
        }
    }
}

impl fmt::Display for Basis {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Basis {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Basis::ALL
            .into_iter()
            .find(|b| b.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown basis `{s}`")))
    }
}

/// Coordinates of an element in one of the bases, up to a degree.
#[derive(Clone, PartialEq, Debug)]
pub struct Expansion {
    pub basis: Basis,
    pub degree: u32,
    pub coords: BTreeMap<Partition, BetaScalar>,
}

impl Expansion {
    pub fn coeff(&self, lambda: &Partition) -> BetaScalar {
        self.coords.get(lambda).cloned().unwrap_or_default()
    }

    pub fn num_nonzero(&self) -> usize {
        self.coords.len()
    }

    /// True iff every coordinate lies in ℤ[β].
    pub fn is_in_z_beta(&self) -> bool {
        self.coords.values().all(BetaScalar::is_in_z_beta)
    }

    /// True iff every coordinate lies in ℚ[β].
    pub fn is_in_q_beta(&self) -> bool {
        self.coords.values().all(BetaScalar::is_in_q_beta)
    }
}

impl fmt::Display for Expansion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (degree {}):", self.basis, self.degree)?;
        if self.coords.is_empty() {
            return f.write_str(" 0");
        }
        for (lambda, c) in &self.coords {
            write!(f, "\n  {lambda}: {c}")?;
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct CoordRepr {
    partition: Partition,
    coeff: BetaScalar,
}

#[derive(Serialize, Deserialize)]
struct ExpansionRepr {
    basis: Basis,
    degree: u32,
    coords: Vec<CoordRepr>,
}

impl Serialize for Expansion {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ExpansionRepr {
            basis: self.basis,
            degree: self.degree,
            coords: self
                .coords
                .iter()
                .map(|(p, c)| CoordRepr {
                    partition: p.clone(),
                    coeff: c.clone(),
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Expansion {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = ExpansionRepr::deserialize(d)?;
        let mut coords = BTreeMap::new();
        for c in r.coords {
            if !r.basis.class().contains(&c.partition) || c.partition.weight() > r.degree {
                return Err(serde::de::Error::custom(format!(
                    "partition {} does not index {} up to degree {}",
                    c.partition, r.basis, r.degree
                )));
            }
            if !c.coeff.is_zero() {
                coords.insert(c.partition, c.coeff);
            }
        }
        Ok(Expansion {
            basis: r.basis,
            degree: r.degree,
            coords,
        })
    }
}

/// Order in which the unknowns of each degree block are eliminated.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum UnknownOrder {
    Canonical,
    Reversed,
}

/// Rewrites `a` in monomials of `p^(β)_n`, truncated at `a`'s degree:
/// `p_n = Σ_k C(−n,k)(−β/2)^k p^(β)_{n+k}`.
pub fn to_p_beta_coords(a: &PSeries) -> PSeries {
    let d = a.degree();
    a.substitute_power_sums(d, |n| {
        let mut out = PSeries::zero(d);
        for k in 0..=d.saturating_sub(n) {
            let c = &BetaScalar::from_int(binom_signed(-(n as i64), k as u64))
                * &BetaScalar::beta_power_scaled(-1, 2, k as usize);
            out = &out + &PSeries::power_sum(n + k, d).scale(&c);
        }
        out
    })
}

/// Rewrites `a` exactly in monomials of `p^[β]_n`, inverting the triangular
/// relation `p^[β]_n = p_n + Σ_{k≥1} C(n,k)(β/2)^k p_{n−k}`.
pub fn to_p_bracket_coords(a: &PSeries) -> PSeries {
    let d = a.degree();
    let mut images: Vec<PSeries> = vec![PSeries::zero(d)];
    for n in 1..=d {
        let mut img = PSeries::power_sum(n, d);
        for k in 1..n {
            let c = &BetaScalar::from_int(binomial(n as u64, k as u64))
                * &BetaScalar::beta_power_scaled(1, 2, k as usize);
            img = &img - &images[(n - k) as usize].scale(&c);
        }
        images.push(img);
    }
    a.substitute_power_sums(d, |n| images[n as usize].clone())
}

/// Maps deformed coordinates back: `p_k ↦ p^(β)_k` or `p_k ↦ p^[β]_k`.
fn from_coords(coords: &PSeries, truncated: bool) -> PSeries {
    let d = coords.degree();
    coords.substitute_power_sums(d, |n| {
        if truncated {
            kqfam::p_beta(n, d)
        } else {
            kqfam::p_bracket(n).with_degree(d).expect("raising degree")
        }
    })
}

/// Splits coordinates into the odd-partition part and the residual.
fn split_odd(coords: &PSeries) -> (BTreeMap<Partition, BetaScalar>, PSeries) {
    let mut odd = BTreeMap::new();
    let mut residual = PSeries::zero(coords.degree());
    for (l, c) in coords.terms() {
        if l.is_odd() {
            odd.insert(l.clone(), c.clone());
        } else {
            residual.add_term(l.clone(), c);
        }
    }
    (odd, residual)
}

fn leading_term(residual: &PSeries) -> String {
    residual
        .terms()
        .next()
        .map(|(l, c)| format!("({c}) * p{l}"))
        .unwrap_or_default()
}

/// The odd part of `a` in `p^(β)` coordinates as a `pG_odd` expansion,
/// plus the even-touching residual (zero exactly when `a` lies in the odd
/// subalgebra up to its degree).
pub fn split_p_beta_coords(a: &PSeries) -> (Expansion, PSeries) {
    let coords = to_p_beta_coords(a);
    let (odd, residual) = split_odd(&coords);
    (
        Expansion {
            basis: Basis::PGOdd,
            degree: a.degree(),
            coords: odd,
        },
        residual,
    )
}

/// Caches generator coordinates and basis products at a fixed degree.
pub struct Expander {
    families: Families,
    products: Mutex<HashMap<(Generator, Partition), PSeries>>,
    gq_rows: Mutex<HashMap<Partition, Expansion>>,
}

impl fmt::Debug for Expander {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Expander").field("degree", &self.degree()).finish()
    }
}

impl Expander {
    pub fn new(degree: u32) -> Self {
        Self::with_families(Families::new(degree))
    }

    pub fn with_families(families: Families) -> Self {
        Expander {
            families,
            products: Mutex::new(HashMap::new()),
            gq_rows: Mutex::new(HashMap::new()),
        }
    }

    pub fn families(&self) -> &Families {
        &self.families
    }

    pub fn degree(&self) -> u32 {
        self.families.degree()
    }

    /// The `n`-th generator of a basis, in ordinary power sums. G-side
    /// generators are truncated at `D`, g-side ones exact at degree `n`.
    fn generator_element(&self, g: Generator, n: u32) -> PSeries {
        let f = &self.families;
        match g {
            Generator::PBeta => f.p_beta(n),
            Generator::QBeta => f.q_beta(n),
            Generator::QbarBeta => f.qbar_beta(n),
            Generator::GQ => f.gq(n as i64),
            Generator::PBracket => kqfam::p_bracket(n),
            Generator::QBracket => f.q_bracket(n),
            Generator::QbarBracket => f.qbar_bracket(n),
        }
    }

    fn is_truncated(g: Generator) -> bool {
        matches!(g, Generator::PBeta | Generator::QBeta | Generator::QbarBeta | Generator::GQ)
    }

    /// Product of generators over `lambda` in deformed coordinates, at
    /// degree `degree`.
    fn basis_coords(&self, g: Generator, lambda: &Partition, degree: u32) -> Result<PSeries> {
        if Self::is_truncated(g) && degree != self.degree() {
            return Err(Error::Mismatch {
                what: "expansion degree",
                left: degree as usize,
                right: self.degree() as usize,
            });
        }
        let key = (g, lambda.clone());
        if let Some(v) = self.products.lock().expect("lock").get(&key) {
            if v.degree() >= degree {
                return v.truncate(degree);
            }
        }
        let value = match lambda.split_last() {
            None => PSeries::one(degree),
            Some((rest, last)) => {
                let head = self.basis_coords(g, &rest, degree)?;
                &head * &self.generator_coords(g, last, degree)?
            }
        };
        self.products.lock().expect("lock").insert(key, value.clone());
        Ok(value)
    }

    fn generator_coords(&self, g: Generator, n: u32, degree: u32) -> Result<PSeries> {
        let key = (g, Partition::row(n));
        if let Some(v) = self.products.lock().expect("lock").get(&key) {
            if v.degree() >= degree {
                return v.truncate(degree);
            }
        }
        let element = self.generator_element(g, n);
        let coords = if Self::is_truncated(g) {
            to_p_beta_coords(&element)
        } else {
            to_p_bracket_coords(&element)
        };
        let (_, residual) = split_odd(&coords);
        if !residual.is_zero() {
            return Err(Error::Contract(format!(
                "generator {n} has even support {}",
                leading_term(&residual)
            )));
        }
        let coords = if coords.degree() >= degree {
            coords.truncate(degree)?
        } else {
            coords.with_degree(degree)?
        };
        self.products.lock().expect("lock").insert(key, coords.clone());
        Ok(coords)
    }

    /// Membership certificate and deformed coordinates of `a` for the side
    /// of `basis`: the odd-support coordinates, or a membership error naming
    /// the leading residual term.
    fn certified_coords(&self, a: &PSeries, truncated: bool) -> Result<PSeries> {
        let coords = if truncated {
            if a.degree() < self.degree() {
                return Err(Error::Mismatch {
                    what: "target degree",
                    left: a.degree() as usize,
                    right: self.degree() as usize,
                });
            }
            to_p_beta_coords(&a.truncate(self.degree())?)
        } else {
            to_p_bracket_coords(a)
        };
        let (_, residual) = split_odd(&coords);
        if !residual.is_zero() {
            return Err(Error::Membership {
                space: if truncated { "odd G-side subalgebra" } else { "odd g-side subalgebra" },
                leading: leading_term(&residual),
            });
        }
        Ok(coords)
    }

    /// Coordinates of `a` in `basis`. G-side bases work at the expander's
    /// degree `D`; g-side bases are exact at `a`'s degree.
    pub fn expand(&self, a: &PSeries, basis: Basis) -> Result<Expansion> {
        self.expand_with_order(a, basis, UnknownOrder::Canonical)
    }

    pub fn expand_with_order(&self, a: &PSeries, basis: Basis, order: UnknownOrder) -> Result<Expansion> {
        if basis == Basis::GQOdd {
            return self.expand_gq(a);
        }
        let truncated = basis.is_truncated();
        let coords = self.certified_coords(a, truncated)?;
        let degree = coords.degree();
        let g = basis.generator();
        let class = basis.class();
        if matches!(basis, Basis::PGOdd | Basis::PgOdd) {
            let (odd, _) = split_odd(&coords);
            return Ok(Expansion { basis, degree, coords: odd });
        }
        let mut residual = coords;
        let mut out = BTreeMap::new();
        let weights: Vec<u32> = if truncated {
            (0..=degree).collect()
        } else {
            (0..=degree).rev().collect()
        };
        for d in weights {
            let target = residual.homogeneous_component(d);
            if target.is_zero() {
                continue;
            }
            let mut unknowns = enumerate(d, class);
            if order == UnknownOrder::Reversed {
                unknowns.reverse();
            }
            let rows = enumerate(d, PartitionClass::Odd);
            let mut elements = Vec::with_capacity(unknowns.len());
            for l in &unknowns {
                elements.push(self.basis_coords(g, l, degree)?);
            }
            let matrix = rows
                .iter()
                .map(|r| elements.iter().map(|e| e.homogeneous_component(d).coeff(r)).collect())
                .collect();
            let rhs = rows.iter().map(|r| target.coeff(r)).collect();
            let solution = linalg::solve(matrix, rhs, d as usize)?;
            for ((l, c), e) in unknowns.into_iter().zip(solution).zip(&elements) {
                if c.is_zero() {
                    continue;
                }
                residual = &residual - &e.scale(&c);
                out.insert(l, c);
            }
        }
        if !residual.is_zero() {
            return Err(Error::Singular {
                degree: degree as usize,
                detail: format!("residual {} left after the solve", leading_term(&residual)),
            });
        }
        Ok(Expansion { basis, degree, coords: out })
    }

    /// Coordinates of `a` in monomials of `GQ₁, GQ₃, GQ₅, …` by triangular
    /// elimination along `≻` on top of the `qG_odd` expansion.
    pub fn expand_gq(&self, a: &PSeries) -> Result<Expansion> {
        let mut rest = self.expand(a, Basis::QGOdd)?.coords;
        let mut out = BTreeMap::new();
        while let Some((lambda, c)) = rest.pop_first() {
            let row = self.gq_row(&lambda)?;
            for (mu, d) in &row.coords {
                if mu == &lambda {
                    continue;
                }
                let v = &rest.get(mu).cloned().unwrap_or_default() - &(&c * d);
                if v.is_zero() {
                    rest.remove(mu);
                } else {
                    rest.insert(mu.clone(), v);
                }
            }
            out.insert(lambda, c);
        }
        Ok(Expansion {
            basis: Basis::GQOdd,
            degree: self.degree(),
            coords: out,
        })
    }

    /// `qG_odd` coordinates of `GQ_λ`, checked to be `q_λ` plus terms `≻ λ`.
    fn gq_row(&self, lambda: &Partition) -> Result<Expansion> {
        if let Some(e) = self.gq_rows.lock().expect("lock").get(lambda) {
            return Ok(e.clone());
        }
        let element = self.product_element(Basis::GQOdd, lambda);
        let row = self.expand(&element, Basis::QGOdd)?;
        if !row.coeff(lambda).is_one() || row.coords.keys().any(|mu| mu < lambda) {
            return Err(Error::Contract(format!("GQ{lambda} is not unitriangular over q_odd")));
        }
        self.gq_rows.lock().expect("lock").insert(lambda.clone(), row.clone());
        Ok(row)
    }

    /// The basis element indexed by `lambda`, in ordinary power sums.
    pub fn product_element(&self, basis: Basis, lambda: &Partition) -> PSeries {
        let g = basis.generator();
        let degree = if basis.is_truncated() { self.degree() } else { lambda.weight() };
        let mut out = PSeries::one(degree);
        for &k in lambda.parts() {
            let e = self.generator_element(g, k);
            let e = if e.degree() >= degree {
                e.truncate(degree).expect("lowering degree")
            } else {
                e.with_degree(degree).expect("raising degree")
            };
            out = &out * &e;
        }
        out
    }

    /// `Σ coords(λ) · basis(λ)` in ordinary power sums, at the expansion's
    /// degree.
    pub fn recombine(&self, e: &Expansion) -> Result<PSeries> {
        let g = e.basis.generator();
        let mut coords = PSeries::zero(e.degree);
        if e.basis == Basis::GQOdd {
            let mut out = PSeries::zero(e.degree);
            for (l, c) in &e.coords {
                let el = self.product_element(Basis::GQOdd, l);
                out = &out + &el.truncate(e.degree)?.scale(c);
            }
            return Ok(out);
        }
        for (l, c) in &e.coords {
            coords = &coords + &self.basis_coords(g, l, e.degree)?.scale(c);
        }
        Ok(from_coords(&coords, e.basis.is_truncated()))
    }
}

/// One-shot [`Expander::expand`].
pub fn expand_in_basis(a: &PSeries, basis: Basis, degree: u32) -> Result<Expansion> {
    Expander::new(degree).expand(a, basis)
}

/// One-shot [`Expander::expand_gq`].
pub fn expand_gq_basis(a: &PSeries, degree: u32) -> Result<Expansion> {
    Expander::new(degree).expand_gq(a)
}

/// The involution negating every generator: `p_λ ↦ (−1)^{ℓ(λ)} p_λ` on
/// deformed coordinates.
pub fn negate_generators(coords: &PSeries) -> PSeries {
    let mut out = PSeries::zero(coords.degree());
    for (l, c) in coords.terms() {
        let c = if l.len() % 2 == 0 { c.clone() } else { -c };
        out.add_term(l.clone(), &c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn row(n: u32) -> Partition {
        Partition::row(n)
    }

    #[test]
    fn p_beta_coordinates() {
        let d = 6;
        let (e, r) = split_p_beta_coords(&kqfam::p_beta(1, d));
        assert!(r.is_zero());
        assert_eq!(e.coords, BTreeMap::from([(row(1), BetaScalar::one())]));
        let (_, r) = split_p_beta_coords(&PSeries::power_sum(2, d));
        assert!(!r.is_zero());
        let (_, r) = split_p_beta_coords(&kqfam::p_beta(2, d));
        assert!(!r.is_zero());
    }

    #[test]
    fn deformed_coordinates_invert() {
        let d = 6;
        let a = &(&PSeries::power_sum(2, d) * &PSeries::power_sum(3, d)) + &PSeries::power_sum(1, d);
        assert_eq!(from_coords(&to_p_beta_coords(&a), true), a);
        assert_eq!(from_coords(&to_p_bracket_coords(&a), false), a);
        assert_eq!(to_p_bracket_coords(&kqfam::p_bracket(4)), PSeries::power_sum(4, 4));
    }

    #[test]
    fn q_expansions() {
        let d = 6;
        let ex = Expander::new(d);
        let q1 = ex.families().q_beta(1);
        let e = ex.expand(&q1, Basis::QGOdd).unwrap();
        assert_eq!(e.coords, BTreeMap::from([(row(1), BetaScalar::one())]));

        let q2 = ex.families().q_beta(2);
        let e = ex.expand(&q2, Basis::QGOdd).unwrap();
        assert_eq!(e.coords.first_key_value().unwrap().0, &Partition::from_parts(vec![1, 1]));
        assert!(e.is_in_q_beta());
        assert_eq!(ex.recombine(&e).unwrap(), q2);
        let again = ex.expand_with_order(&q2, Basis::QGOdd, UnknownOrder::Reversed).unwrap();
        assert_eq!(again, e);

        let q11 = &q1 * &q1;
        let e = ex.expand(&q11, Basis::QGStrict).unwrap();
        assert!(e.is_in_z_beta());
        assert_eq!(ex.recombine(&e).unwrap(), q11);
    }

    #[test]
    fn dual_expansions() {
        let ex = Expander::new(6);
        let q2 = ex.families().q_bracket(2);
        for basis in [Basis::QgOdd, Basis::QgStrict, Basis::OvqgOdd, Basis::PgOdd] {
            let e = ex.expand(&q2, basis).unwrap();
            assert_eq!(ex.recombine(&e).unwrap(), q2, "{basis}");
        }
        assert!(matches!(
            ex.expand(&PSeries::power_sum(2, 2), Basis::QgOdd),
            Err(Error::Membership { .. })
        ));
    }

    #[test]
    fn gq_basis() {
        let d = 5;
        let ex = Expander::new(d);
        let e = ex.expand_gq(&ex.families().gq(3)).unwrap();
        assert_eq!(e.coords, BTreeMap::from([(row(3), BetaScalar::one())]));
        let q1 = ex.families().q_beta(1);
        let e = ex.expand_gq(&q1).unwrap();
        assert_eq!(ex.recombine(&e).unwrap(), q1);
        assert!(ex.expand_gq(&ex.families().gq(2)).unwrap().num_nonzero() >= 2);
    }

    #[test]
    fn membership_failures() {
        let ex = Expander::new(4);
        let err = ex.expand(&PSeries::power_sum(2, 4), Basis::PGOdd).unwrap_err();
        assert!(matches!(err, Error::Membership { .. }));
        assert!(ex.expand(&PSeries::power_sum(1, 3), Basis::QGOdd).is_err());
    }

    #[test]
    fn involution_maps_q_to_qbar() {
        let d = 6;
        let fam = Families::new(d);
        for n in 1..=d {
            let q = to_p_beta_coords(&fam.q_beta(n));
            let qbar = to_p_beta_coords(&fam.qbar_beta(n));
            assert_eq!(negate_generators(&q), qbar, "n={n}");
        }
    }

    #[test]
    fn expansion_json() {
        let ex = Expander::new(3);
        let e = ex.expand(&ex.families().q_beta(1), Basis::QGOdd).unwrap();
        let json = serde_json::to_string(&e).unwrap();
        assert_eq!(json, r#"{"basis":"qG_odd","degree":3,"coords":[{"partition":[1],"coeff":"1"}]}"#);
        let back: Expansion = serde_json::from_str(&json).unwrap();
        assert_eq!(back, e);
        let bad = r#"{"basis":"qG_odd","degree":3,"coords":[{"partition":[2],"coeff":"1"}]}"#;
        assert!(serde_json::from_str::<Expansion>(bad).is_err());
    }
}
