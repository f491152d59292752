//! The bilinear form between G-side series and g-side polynomials, with
//! `⟨p^(β)_λ, p^[β]_μ⟩ = 2^{−ℓ(λ)} z_λ δ_{λμ}`, and the Cauchy kernel check.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use crate::coeff::{BetaScalar, Ring};
use crate::error::{Error, Result};
use crate::expand::{to_p_beta_coords, to_p_bracket_coords};
use crate::finvar::{specialize, FinitePoly};
use crate::kqfam;
use crate::partitions::{enumerate_up_to, Partition, PartitionClass};
use crate::psym::PSeries;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct PairingResult {
    pub value: BetaScalar,
    pub degree_used: u32,
}

/// `2^{−ℓ(λ)} z_λ`.
pub fn pairing_weight(lambda: &Partition) -> BetaScalar {
    BetaScalar::ratio(lambda.z_lambda(), BigInt::from(1) << lambda.len())
}

fn odd_or_membership(coords: &PSeries, space: &'static str) -> Result<()> {
    match coords.terms().find(|(l, _)| !l.is_odd()) {
        None => Ok(()),
        Some((l, c)) => Err(Error::Membership {
            space,
            leading: format!("({c}) * p{l}"),
        }),
    }
}

/// `⟨f, g⟩` for `f` in the G-side odd subalgebra and `g` a g-side polynomial.
///
/// Only coordinates of `f` up to the top weight of `g` are read, so `f`
/// must be known at least to that degree.
pub fn pair(f: &PSeries, g: &PSeries) -> Result<PairingResult> {
    let degree_used = g.top_weight().unwrap_or(0);
    if f.degree() < degree_used {
        return Err(Error::Mismatch {
            what: "pairing truncation degree",
            left: f.degree() as usize,
            right: degree_used as usize,
        });
    }
    let g_coords = to_p_bracket_coords(&g.truncate(degree_used)?);
    odd_or_membership(&g_coords, "odd g-side subalgebra")?;
    let f_coords = to_p_beta_coords(&f.truncate(degree_used)?);
    odd_or_membership(&f_coords, "odd G-side subalgebra")?;
    let mut value = BetaScalar::zero();
    for (lambda, gc) in g_coords.terms() {
        let fc = f_coords.coeff(lambda);
        if !fc.is_zero() {
            value = &value + &(&(&fc * gc) * &pairing_weight(lambda));
        }
    }
    Ok(PairingResult { value, degree_used })
}

/// Places a polynomial in `n` variables at offset `at` among `total` variables.
fn embed(p: &FinitePoly, at: usize, total: usize) -> FinitePoly {
    let mut out = FinitePoly::zero(total);
    for (e, c) in p.terms() {
        let mut full = vec![0; total];
        full[at..at + e.len()].copy_from_slice(e);
        out.add_term(full, c);
    }
    out
}

/// `Σ_{λ odd, |λ| ≤ D} 2^{ℓ(λ)} z_λ^{−1} p^(β)_λ(x) p^[β]_λ(y)` in `N + M`
/// variables, truncated at total degree `D`.
pub fn cauchy_sum_side(n: usize, m: usize, degree: u32) -> FinitePoly {
    let total = n + m;
    let bound = Some(degree);
    let mut px = Vec::new();
    let mut py = Vec::new();
    for k in 0..=degree {
        if k == 0 {
            px.push(FinitePoly::one(total));
            py.push(FinitePoly::one(total));
            continue;
        }
        px.push(embed(&specialize(&kqfam::p_beta(k, degree), n).poly, 0, total));
        let exact = kqfam::p_bracket(k);
        py.push(embed(&specialize(&exact, m).poly, n, total));
    }
    let mut out = FinitePoly::zero(total);
    for lambda in enumerate_up_to(degree, PartitionClass::Odd) {
        let mut term = FinitePoly::one(total);
        for &k in lambda.parts() {
            term = term.mul_bounded(&px[k as usize], bound);
            term = term.mul_bounded(&py[k as usize], bound);
        }
        let w = pairing_weight(&lambda).inverse().expect("nonzero weight");
        out = out.add(&term.scale(&w));
    }
    out
}

/// `∏_{i,j} (1 + xᵢyⱼ/(1+βxᵢ)) / (1 − xᵢyⱼ)` expanded directly, truncated at
/// total degree `D`. With `beta_zero` the classical `∏ (1 + xᵢyⱼ)/(1 − xᵢyⱼ)`.
pub fn cauchy_product_side(n: usize, m: usize, degree: u32, beta_zero: bool) -> FinitePoly {
    let total = n + m;
    let bound = Some(degree);
    let one = FinitePoly::<BetaScalar>::one(total);
    let geometric = |a: &FinitePoly| {
        let mut out = one.clone();
        let mut pw = one.clone();
        for _ in 0..degree {
            pw = pw.mul_bounded(a, bound);
            if pw.is_zero() {
                break;
            }
            out = out.add(&pw);
        }
        out
    };
    let mut out = one.clone();
    for i in 0..n {
        let x = FinitePoly::var(i, total);
        // 1/(1 + βx) = Σ (−βx)^k
        let inv = if beta_zero {
            one.clone()
        } else {
            geometric(&x.scale(&BetaScalar::beta_power(1).negated()))
        };
        for j in 0..m {
            let xy = x.mul(&FinitePoly::var(n + j, total));
            let numerator = one.add(&xy.mul_bounded(&inv, bound));
            out = out.mul_bounded(&numerator, bound).mul_bounded(&geometric(&xy), bound);
        }
    }
    out
}

/// Two-route check of the Cauchy kernel identity at `(N, M, D)`.
pub fn cauchy_kernel_check(n: usize, m: usize, degree: u32) -> bool {
    cauchy_sum_side(n, m, degree) == cauchy_product_side(n, m, degree, false)
}

/// The identity at `β = 0` against the classical kernel.
pub fn cauchy_kernel_check_classical(n: usize, m: usize, degree: u32) -> Result<bool> {
    let left = cauchy_sum_side(n, m, degree).at_beta_zero()?;
    Ok(left == cauchy_product_side(n, m, degree, true))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kqfam::{p_beta, p_bracket, Families};

    fn monomial_pg(lambda: &[u32], d: u32) -> PSeries {
        lambda.iter().fold(PSeries::one(d), |acc, &k| &acc * &p_beta(k, d))
    }

    fn monomial_pb(lambda: &[u32]) -> PSeries {
        let d: u32 = lambda.iter().sum();
        lambda
            .iter()
            .fold(PSeries::one(d), |acc, &k| &acc * &p_bracket(k).with_degree(d).unwrap())
    }

    #[test]
    fn basis_pairings() {
        let r = pair(&monomial_pg(&[3, 1], 6), &monomial_pb(&[3, 1])).unwrap();
        assert_eq!(r.value, BetaScalar::ratio(3, 4));
        assert_eq!(r.degree_used, 4);
        let r = pair(&p_beta(1, 4), &p_bracket(3)).unwrap();
        assert!(r.value.is_zero());
        assert!(pair(&p_beta(1, 2), &p_bracket(3)).is_err());
        assert!(matches!(pair(&p_beta(2, 4), &p_bracket(3)), Err(Error::Membership { .. })));
        assert!(matches!(pair(&p_beta(1, 4), &PSeries::power_sum(2, 2)), Err(Error::Membership { .. })));
    }

    #[test]
    fn gq_gp_duality_small() {
        let fam = Families::new(5);
        for m in [1u32, 3, 5] {
            for n in [1u32, 3, 5] {
                let r = pair(&fam.gq(m as i64), &fam.gp(n)).unwrap();
                let expected = if m == n { BetaScalar::one() } else { BetaScalar::zero() };
                assert_eq!(r.value, expected, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn cauchy_small() {
        assert!(cauchy_kernel_check(1, 1, 4));
        assert!(cauchy_kernel_check_classical(1, 2, 4).unwrap());
    }
}
