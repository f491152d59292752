//! Polynomials in formal generators (`c₁, c₂, …` or `gp₁, gp₂, …`) over
//! ℤ[β, β⁻¹], the K-even reduction and the even-to-odd rewriting of `gp`.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::coeff::{multinomial, LaurentBetaPoly, Ring};
use crate::error::{Error, Result};
use crate::finvar::FinitePoly;
use crate::partitions::Partition;
use crate::psym::PSeries;

type Poly = FinitePoly<LaurentBetaPoly>;

/// A polynomial in formal generators indexed `1, 2, 3, …`; variable `i` of
/// the underlying polynomial is the generator with index `i + 1`.
#[derive(Clone, PartialEq, Debug)]
pub struct FormalGPPoly {
    poly: Poly,
}

impl FormalGPPoly {
    /// Builds from `(indices, coeff)` pairs; indices are generator indices.
    pub fn from_terms(num_generators: usize, terms: &[(&[u32], LaurentBetaPoly)]) -> Self {
        let mut poly = Poly::zero(num_generators);
        for (idx, c) in terms {
            let mut e = vec![0; num_generators];
            for &i in idx.iter() {
                e[i as usize - 1] += 1;
            }
            poly.add_term(e, c);
        }
        FormalGPPoly { poly }
    }

    fn from_poly(poly: Poly) -> Self {
        FormalGPPoly { poly }
    }

    pub fn num_generators(&self) -> usize {
        self.poly.num_vars()
    }

    /// Terms keyed by the multiset of generator indices, in canonical order.
    pub fn terms(&self) -> BTreeMap<Partition, LaurentBetaPoly> {
        self.poly
            .terms()
            .map(|(e, c)| {
                let parts = e
                    .iter()
                    .enumerate()
                    .flat_map(|(i, &k)| std::iter::repeat_n(i as u32 + 1, k as usize))
                    .collect();
                (Partition::from_parts(parts), c.clone())
            })
            .collect()
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn is_in_z_beta(&self) -> bool {
        self.poly.terms().all(|(_, c)| c.is_in_z_beta())
    }

    /// True iff only odd-indexed generators occur.
    pub fn uses_only_odd(&self) -> bool {
        self.poly
            .terms()
            .all(|(e, _)| e.iter().enumerate().all(|(i, &k)| k == 0 || i % 2 == 0))
    }

    /// Evaluates with generator `i` replaced by `value(i)`; coefficients
    /// must lie in ℤ[β].
    pub fn evaluate(&self, degree: u32, mut value: impl FnMut(u32) -> PSeries) -> Result<PSeries> {
        let mut out = PSeries::zero(degree);
        let mut cache: BTreeMap<u32, PSeries> = BTreeMap::new();
        for (idx, c) in self.terms() {
            let c = c
                .to_beta_poly()
                .ok_or_else(|| Error::Integrality(format!("coefficient {c} has negative beta powers")))?;
            let mut term = PSeries::constant(c.into(), degree);
            for &i in idx.parts() {
                let v = cache.entry(i).or_insert_with(|| value(i));
                term = &term * &*v;
            }
            out = &out + &term;
        }
        Ok(out)
    }

    /// Renders with generators named `symbol1`, `symbol3`, ….
    pub fn display_with(&self, symbol: &str) -> String {
        let terms = self.terms();
        if terms.is_empty() {
            return "0".into();
        }
        let mut out = String::new();
        for (i, (idx, c)) in terms.iter().rev().enumerate() {
            let mut gens = Vec::new();
            for (k, m) in idx.multiplicities().into_iter().rev() {
                gens.push(if m == 1 {
                    format!("{symbol}{k}")
                } else {
                    format!("{symbol}{k}^{m}")
                });
            }
            let coeff = c.to_string();
            let (negative, body) = match coeff.strip_prefix('-') {
                Some(rest) if c.terms().count() == 1 => (true, rest.to_string()),
                _ => (false, coeff.clone()),
            };
            let body = if c.terms().count() > 1 { format!("({body})") } else { body };
            let mut factors = Vec::new();
            if body != "1" || gens.is_empty() {
                factors.push(body);
            }
            factors.extend(gens);
            let text = factors.join("*");
            match (i, negative) {
                (0, true) => out.push_str(&format!("-{text}")),
                (0, false) => out.push_str(&text),
                (_, true) => out.push_str(&format!(" - {text}")),
                (_, false) => out.push_str(&format!(" + {text}")),
            }
        }
        out
    }
}

impl fmt::Display for FormalGPPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.display_with("gp"))
    }
}

#[derive(Serialize, Deserialize)]
struct FormalTermRepr {
    indices: Vec<u32>,
    coeff: LaurentBetaPoly,
}

#[derive(Serialize, Deserialize)]
struct FormalRepr {
    terms: Vec<FormalTermRepr>,
}

impl Serialize for FormalGPPoly {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        FormalRepr {
            terms: self
                .terms()
                .into_iter()
                .map(|(idx, coeff)| FormalTermRepr {
                    indices: idx.parts().iter().rev().copied().collect(),
                    coeff,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for FormalGPPoly {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let r = FormalRepr::deserialize(d)?;
        let n = r
            .terms
            .iter()
            .flat_map(|t| t.indices.iter().copied())
            .max()
            .unwrap_or(0) as usize;
        if r.terms.iter().any(|t| t.indices.contains(&0)) {
            return Err(serde::de::Error::custom("generator indices start at 1"));
        }
        let terms: Vec<(&[u32], LaurentBetaPoly)> =
            r.terms.iter().map(|t| (t.indices.as_slice(), t.coeff.clone())).collect();
        Ok(FormalGPPoly::from_terms(n, &terms))
    }
}

fn beta_pow(k: i64) -> LaurentBetaPoly {
    LaurentBetaPoly::beta_power(k)
}

/// A truncated series in `z` with polynomial coefficients.
type Series = Vec<Poly>;

fn series_mul(a: &Series, b: &Series, nv: usize) -> Series {
    let order = a.len().min(b.len());
    let mut out = vec![Poly::zero(nv); order];
    for (i, x) in a.iter().enumerate() {
        if x.is_zero() {
            continue;
        }
        for (j, y) in b.iter().enumerate().take(order - i) {
            if !y.is_zero() {
                out[i + j] = out[i + j].add(&x.mul(y));
            }
        }
    }
    out
}

fn scalar_series(coeffs: Vec<LaurentBetaPoly>, nv: usize) -> Series {
    coeffs.into_iter().map(|c| Poly::constant(c, nv)).collect()
}

/// `c_{2k}` for `2k ≤ m` as polynomials in `c₁, c₃, …`, for a K-even series
/// `F(z) = c₁z² + c₂z³ + ⋯`.
///
/// Each step subtracts `α β^{−k}(z + z̄)^k`, with `α` the current `z^{2k}`
/// coefficient and `z + z̄ = βz²/(1+βz)`, then reads `c_{2k}` off the
/// vanishing `z^{2k+1}` coefficient.
pub fn keven_reduce(m: usize) -> Result<Vec<FormalGPPoly>> {
    let nv = m.max(1);
    let order = m + 2;
    let mut f: Series = vec![Poly::zero(nv); order];
    for k in 1..=m {
        f[k + 1] = Poly::var(k - 1, nv);
    }
    // z + z̄ = Σ_{i≥0} (−1)^i β^{i+1} z^{i+2}
    let mut s = vec![LaurentBetaPoly::zero(); order];
    for (i, slot) in s.iter_mut().enumerate().skip(2) {
        let sign = if i % 2 == 0 { 1 } else { -1 };
        *slot = LaurentBetaPoly::monomial(sign, i as i64 - 1);
    }
    let s = scalar_series(s, nv);
    let mut power = scalar_series(vec![LaurentBetaPoly::one()], nv);
    power.resize(order, Poly::zero(nv));
    let mut out = Vec::new();
    for k in 1..=m / 2 {
        power = series_mul(&power, &s, nv);
        let alpha = f[2 * k].clone();
        let scale = beta_pow(-(k as i64));
        for (j, w) in power.iter().enumerate() {
            if !w.is_zero() {
                f[j] = f[j].sub(&alpha.mul(w).scale(&scale));
            }
        }
        if !f[2 * k].is_zero() {
            return Err(Error::Contract(format!("z^{} coefficient survived step {k}", 2 * k)));
        }
        let var = 2 * k - 1;
        let parts = f[2 * k + 1].coefficients_in(var);
        if parts.len() != 2 || parts[1] != Poly::one(nv) {
            return Err(Error::Contract(format!("c{} does not enter linearly", 2 * k)));
        }
        let expr = parts[0].neg();
        if expr.terms().any(|(_, c)| !c.is_in_z_beta()) {
            return Err(Error::Integrality(format!("c{} has negative beta powers", 2 * k)));
        }
        for coeff in f.iter_mut() {
            *coeff = coeff.substitute(var, &expr, |_| true);
        }
        out.push(FormalGPPoly::from_poly(expr));
    }
    Ok(out)
}

/// `gp_n` as a polynomial in `c₁, c₂, …` through `f = φ/(1−φ) = Σ_ℓ φ^ℓ`,
/// computed by iterated series multiplication; entry `n` is `gp_n`.
fn gp_in_c(m: usize) -> Vec<Poly> {
    let nv = m.max(1);
    let order = m + 1;
    let mut phi = vec![Poly::zero(nv); order];
    for k in 1..=m {
        phi[k] = Poly::var(k - 1, nv);
    }
    let mut f = vec![Poly::zero(nv); order];
    let mut power = phi.clone();
    for _ in 1..=m {
        for (slot, p) in f.iter_mut().zip(&power) {
            *slot = slot.add(p);
        }
        power = series_mul(&power, &phi, nv);
    }
    f
}

/// The multinomial form `gp_n = Σ_{|λ|=n} C(ℓ(λ); m₁, m₂, …) c_λ`.
pub(crate) fn gp_in_c_multinomial(n: u32, nv: usize) -> Poly {
    let mut out = Poly::zero(nv);
    for lambda in crate::partitions::enumerate(n, crate::partitions::PartitionClass::All) {
        let mults: Vec<u64> = lambda.multiplicities().iter().map(|&(_, m)| m as u64).collect();
        let mut e = vec![0; nv];
        for &k in lambda.parts() {
            e[k as usize - 1] += 1;
        }
        let c = LaurentBetaPoly::monomial(multinomial(&mults), 0);
        out.add_term(e, &c);
    }
    out
}

/// Substitutes `x_i ↦ images[i]` into `p`.
fn compose(p: &Poly, images: &[Poly], nv: usize) -> Poly {
    let mut out = Poly::zero(nv);
    let mut powers: BTreeMap<(usize, u32), Poly> = BTreeMap::new();
    for (e, c) in p.terms() {
        let mut term = Poly::constant(c.clone(), nv);
        for (i, &k) in e.iter().enumerate() {
            if k == 0 {
                continue;
            }
            let pw = powers
                .entry((i, k))
                .or_insert_with(|| images[i].pow_bounded(k, None))
                .clone();
            term = term.mul(&pw);
        }
        out = out.add(&term);
    }
    out
}

/// Expresses each `gp_{2n}` with `2n ≤ n_max` as a ℤ[β]-polynomial in
/// `gp₁, gp₃, …, gp_{2n−1}`.
pub fn gp_even_to_odd(n_max: usize) -> Result<BTreeMap<u32, FormalGPPoly>> {
    let nv = n_max.max(1);
    let gp_c = gp_in_c(n_max);
    for (n, p) in gp_c.iter().enumerate().skip(1).take(4) {
        if *p != gp_in_c_multinomial(n as u32, nv) {
            return Err(Error::Contract(format!("series and multinomial forms of gp{n} differ")));
        }
    }
    let keven = keven_reduce(n_max)?;
    // images[i]: c_{i+1} written in the gp generators
    let mut images: Vec<Poly> = Vec::with_capacity(n_max);
    for n in 1..=n_max {
        let image = if n % 2 == 1 {
            let lower = gp_c[n].sub(&Poly::var(n - 1, nv));
            let mut padded = images.clone();
            padded.resize(nv, Poly::zero(nv));
            Poly::var(n - 1, nv).sub(&compose(&lower, &padded, nv))
        } else {
            let mut padded = images.clone();
            padded.resize(nv, Poly::zero(nv));
            compose(&keven[n / 2 - 1].poly, &padded, nv)
        };
        images.push(image);
    }
    let mut out = BTreeMap::new();
    for n in (2..=n_max).step_by(2) {
        let poly = compose(&gp_c[n], &images, nv);
        let result = FormalGPPoly::from_poly(poly);
        if !result.is_in_z_beta() {
            return Err(Error::Integrality(format!("gp{n} has negative beta powers")));
        }
        if !result.uses_only_odd() {
            return Err(Error::Contract(format!("gp{n} still uses even generators")));
        }
        out.insert(n as u32, result);
    }
    Ok(out)
}
