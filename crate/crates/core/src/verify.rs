//! Verification suites: every identity, recurrence, cancellation and
//! integrality property checked mechanically at a configurable size.

use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::coeff::{BetaScalar, LaurentBetaPoly};
use crate::error::{Error, Result};
use crate::expand::{gp_even_to_odd, keven_reduce, split_p_beta_coords, Basis, Expander, FormalGPPoly};
use crate::finvar::{check_dual_cancellation, check_kq_cancellation, specialize};
use crate::kqfam::{self, gp_finite, gq_finite, Families};
use crate::pairing::{cauchy_kernel_check, cauchy_kernel_check_classical, pair, pairing_weight};
use crate::partitions::{enumerate_up_to, Partition, PartitionClass};
use crate::psym::PSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Recurrences,
    Cancellation,
    Integrality,
    Pairing,
    Cauchy,
    Gpz,
    All,
}

impl Suite {
    pub const EACH: [Suite; 6] = [
        Suite::Recurrences,
        Suite::Cancellation,
        Suite::Integrality,
        Suite::Pairing,
        Suite::Cauchy,
        Suite::Gpz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Recurrences => "recurrences",
            Suite::Cancellation => "cancellation",
            Suite::Integrality => "integrality",
            Suite::Pairing => "pairing",
            Suite::Cauchy => "cauchy",
            Suite::Gpz => "gpz",
            Suite::All => "all",
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| Error::Usage(format!("unknown suite `{s}`")))
    }
}

#[derive(Clone, Copy, Debug)]
pub struct VerifyConfig {
    pub degree: u32,
    pub num_vars: usize,
    pub z_order: usize,
}

impl Default for VerifyConfig {
    fn default() -> Self {
        VerifyConfig {
            degree: 10,
            num_vars: 4,
            z_order: 12,
        }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckResult {
    pub suite: Suite,
    pub name: String,
    pub passed: bool,
    pub detail: String,
    #[serde(serialize_with = "millis")]
    pub elapsed: Duration,
}

fn millis<S: serde::Serializer>(d: &Duration, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_u64(d.as_millis() as u64)
}

struct Outcome {
    passed: bool,
    detail: String,
}

fn pass(detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        passed: true,
        detail: detail.into(),
    })
}

fn verdict(passed: bool, detail: impl Into<String>) -> Result<Outcome> {
    Ok(Outcome {
        passed,
        detail: detail.into(),
    })
}

type CheckFn = fn(&Context) -> Result<Outcome>;

struct Context {
    config: VerifyConfig,
    expander: Expander,
}

impl Context {
    fn families(&self) -> &Families {
        self.expander.families()
    }

    fn d(&self) -> u32 {
        self.config.degree
    }

    fn n(&self) -> usize {
        self.config.num_vars
    }
}

fn checks(suite: Suite) -> Vec<(&'static str, CheckFn)> {
    match suite {
        Suite::Recurrences => vec![
            ("q(beta)/qbar(beta) recurrence", g_recurrence),
            ("q[beta]/qbar[beta] recurrence", dual_recurrence),
            ("Q[beta](z) Q[beta](zbar) = 1", dual_functional),
            ("Qbar(z) = Q(-z-b) / Q(-b)", g_functional),
            ("qbar(beta) quotient formula", qbar_quotient),
            ("involution p(beta)_m -> -p(beta)_m maps q to qbar", involution),
            ("q_2n rewriting residual has weight > 2n", q_even_rewriting),
            ("homogeneity of every family", homogeneity),
        ],
        Suite::Cancellation => vec![
            ("dual cancellation of g-side families", dual_cancellation),
            ("dual cancellation fails for p2", dual_cancellation_p2),
            ("K-Q cancellation of G-side families", kq_cancellation),
            ("K-Q cancellation fails for p2", kq_cancellation_p2),
            ("membership certificates", membership),
            ("beta = 0 degenerations", classical_limits),
        ],
        Suite::Integrality => vec![
            ("one-variable closed forms", one_variable),
            ("GQ_finite in Z[beta]", gq_integrality),
            ("gp specializations in Z[beta]", gp_integrality),
            ("GQ series route = factor-theorem route", gq_routes),
            ("gp series route = factor-theorem route", gp_routes),
            ("expansion coefficient rings", expansion_rings),
            ("GQ-basis expansion of GQ2", gq2_expansion),
        ],
        Suite::Pairing => vec![
            ("pairing of deformed power-sum monomials", basis_pairing),
            ("<GQ_m, gp_n> = delta", duality),
        ],
        Suite::Cauchy => vec![
            ("kernel (1,1,4)", |_| verdict(cauchy_kernel_check(1, 1, 4), "N=M=1, D=4")),
            ("kernel (2,2,6)", |_| verdict(cauchy_kernel_check(2, 2, 6), "N=M=2, D=6")),
            ("classical kernel at beta = 0", |_| {
                verdict(cauchy_kernel_check_classical(2, 2, 6)?, "N=M=2, D=6")
            }),
            ("kernel at configured size", cauchy_configured),
        ],
        Suite::Gpz => vec![
            ("K-even sequence c2, c4, c6", keven_check),
            ("gp2 and gp4 in odd gp's", gp_even_check),
            ("gp even formulas evaluate to gp", gp_even_values),
        ],
        Suite::All => Suite::EACH.into_iter().flat_map(checks).collect(),
    }
}

fn suite_of(suite: Suite, index: usize) -> Suite {
    if suite != Suite::All {
        return suite;
    }
    let mut i = index;
    for s in Suite::EACH {
        let n = checks(s).len();
        if i < n {
            return s;
        }
        i -= n;
    }
    suite
}

/// Runs a suite, with independent checks in parallel. Results keep the
/// suite's check order.
pub fn run_suite(suite: Suite, config: VerifyConfig) -> Result<Vec<CheckResult>> {
    if config.degree == 0 || config.num_vars == 0 || config.z_order == 0 {
        return Err(Error::Usage("degree, vars and z-order must be at least 1".into()));
    }
    let ctx = Context {
        config,
        expander: Expander::new(config.degree),
    };
    let list = checks(suite);
    Ok(list
        .par_iter()
        .enumerate()
        .map(|(i, (name, f))| {
            let start = Instant::now();
            let (passed, detail) = match f(&ctx) {
                Ok(o) => (o.passed, o.detail),
                Err(e) => (false, format!("error: {e}")),
            };
            CheckResult {
                suite: suite_of(suite, i),
                name: name.to_string(),
                passed,
                detail,
                elapsed: start.elapsed(),
            }
        })
        .collect())
}

fn sum_of_products(a: &[PSeries], b: &[PSeries], n: usize) -> PSeries {
    let degree = a[0].degree();
    (0..=n).fold(PSeries::zero(degree), |acc, k| &acc + &(&a[n - k] * &b[k]))
}

fn g_recurrence(ctx: &Context) -> Result<Outcome> {
    let fam = ctx.families();
    let q = fam.q_beta_series().coeffs();
    let qbar = fam.qbar_beta_series().coeffs();
    let top = ctx.d() as usize;
    for n in 1..=top {
        if !sum_of_products(q, qbar, n).is_zero() {
            return verdict(false, format!("fails at n={n}"));
        }
    }
    pass(format!("n <= {top} at D={}", ctx.d()))
}

fn dual_recurrence(ctx: &Context) -> Result<Outcome> {
    let top = ctx.config.z_order.max(10);
    let series = ctx.families().q_bracket_series(top);
    let q: Vec<PSeries> = series.coeffs().to_vec();
    let mut qbar = vec![PSeries::one(series.degree())];
    for n in 1..=top as u32 {
        qbar.push(kqfam::qbar_bracket_from_series(&series, n).with_degree(series.degree())?);
    }
    for n in 1..=top {
        if !sum_of_products(&q, &qbar, n).is_zero() {
            return verdict(false, format!("fails at n={n}"));
        }
    }
    pass(format!("n <= {top}"))
}

fn dual_functional(ctx: &Context) -> Result<Outcome> {
    let top = ctx.config.z_order.max(10);
    let series = ctx.families().q_bracket_series(top);
    let series = series.truncate_order(top)?;
    let product = &series * &series.substitute_zbar();
    verdict(product.is_one(), format!("to order {top}"))
}

fn g_functional(ctx: &Context) -> Result<Outcome> {
    let d = ctx.d();
    let q = kqfam::q_beta_series(d as usize, d);
    let minus_one = BetaScalar::from_int(-1);
    let minus_beta = -BetaScalar::beta();
    let shifted = q.substitute_affine(&minus_beta, &minus_one)?;
    let at_minus_beta = q.evaluate_at(&minus_beta)?;
    let inv = crate::psym::invert_pseries(&at_minus_beta)?;
    let rhs = shifted.mul_pseries(&inv);
    verdict(rhs == q.invert()?, format!("to order {d} at D={d}"))
}

fn qbar_quotient(ctx: &Context) -> Result<Outcome> {
    let fam = ctx.families();
    let alt = kqfam::qbar_beta_from_quotient(fam.q_beta_series());
    verdict(&alt == fam.qbar_beta_series(), format!("to order {} at D={}", ctx.d(), ctx.d()))
}

fn involution(ctx: &Context) -> Result<Outcome> {
    let fam = ctx.families();
    for n in 1..=ctx.d() {
        let q = crate::expand::to_p_beta_coords(&fam.q_beta(n));
        let qbar = crate::expand::to_p_beta_coords(&fam.qbar_beta(n));
        if crate::expand::negate_generators(&q) != qbar {
            return verdict(false, format!("fails at n={n}"));
        }
    }
    pass(format!("n <= {}", ctx.d()))
}

fn q_even_rewriting(ctx: &Context) -> Result<Outcome> {
    let fam = ctx.families();
    let top = (ctx.d() / 2).min(3);
    for n in 1..=top {
        let q = |k: u32| fam.q_beta(k);
        let mut rhs = PSeries::zero(ctx.d());
        for j in 1..n {
            let sign = BetaScalar::from_int(if j % 2 == 1 { 1 } else { -1 });
            rhs = &rhs + &(&q(2 * n - j) * &q(j)).scale(&sign);
        }
        let sign = if n % 2 == 0 { -1 } else { 1 };
        rhs = &rhs + &(&q(n) * &q(n)).scale(&BetaScalar::ratio(sign, 2));
        let residual = &q(2 * n) - &rhs;
        let e = ctx.expander.expand(&residual, Basis::QGOdd)?;
        if let Some(l) = e.coords.keys().find(|l| l.weight() <= 2 * n) {
            return verdict(false, format!("n={n}: coordinate on {l}"));
        }
    }
    pass(format!("n <= {top}"))
}

fn homogeneity(ctx: &Context) -> Result<Outcome> {
    let fam = ctx.families();
    for n in 1..=ctx.d().min(8) {
        for f in kqfam::Family::ALL {
            let id = kqfam::FamilyId::new(f, n as i64)?;
            let e = fam.element(id);
            let ok = if f.is_truncated() {
                e.is_homogeneous_beta_graded(n as i64)
            } else {
                e.is_homogeneous_graded(n as i64, 1)
            };
            if !ok {
                return verdict(false, format!("{id} is not homogeneous"));
            }
        }
    }
    pass("G-side with deg b = -1, g-side with deg b = +1")
}

fn dual_cancellation(ctx: &Context) -> Result<Outcome> {
    let fam = ctx.families();
    let n_vars = ctx.n().max(2);
    let mut count = 0;
    for n in 1..=6u32 {
        let mut items = vec![
            ("qg", fam.q_bracket(n)),
            ("ovqg", fam.qbar_bracket(n)),
            ("gp", fam.gp(n)),
        ];
        if n % 2 == 1 {
            items.push(("pg", kqfam::p_bracket(n)));
        }
        for (tag, e) in items {
            if !check_dual_cancellation(&specialize(&e, n_vars).poly)? {
                return verdict(false, format!("{tag}{n} fails at N={n_vars}"));
            }
            count += 1;
        }
    }
    pass(format!("{count} elements, n <= 6, N={n_vars}"))
}

fn dual_cancellation_p2(ctx: &Context) -> Result<Outcome> {
    let n_vars = ctx.n().max(2);
    let holds = check_dual_cancellation(&specialize(&PSeries::power_sum(2, 2), n_vars).poly)?;
    verdict(!holds, format!("N={n_vars}"))
}

fn kq_cancellation(ctx: &Context) -> Result<Outcome> {
    let fam = ctx.families();
    let n_vars = ctx.n().max(2);
    let t_order = ctx.d().min(8);
    let mut items = Vec::new();
    for n in 1..=6u32.min(ctx.d()) {
        items.push((format!("qG{n}"), fam.q_beta(n)));
        items.push((format!("GQ{n}"), fam.gq(n as i64)));
        if n % 2 == 1 {
            items.push((format!("pG{n}"), fam.p_beta(n)));
        }
    }
    let failures: Vec<String> = items
        .par_iter()
        .filter_map(|(name, e)| match check_kq_cancellation(&specialize(e, n_vars), t_order) {
            Ok(true) => None,
            Ok(false) => Some(name.clone()),
            Err(err) => Some(format!("{name}: {err}")),
        })
        .collect();
    if let Some(f) = failures.first() {
        return verdict(false, format!("{f} fails"));
    }
    pass(format!("{} elements, N={n_vars}, t-order {t_order}", items.len()))
}

fn kq_cancellation_p2(ctx: &Context) -> Result<Outcome> {
    let n_vars = ctx.n().max(2);
    let t_order = ctx.d().min(8);
    let p2 = specialize(&PSeries::power_sum(2, ctx.d()), n_vars);
    verdict(!check_kq_cancellation(&p2, t_order)?, format!("N={n_vars}"))
}

fn membership(ctx: &Context) -> Result<Outcome> {
    let d = ctx.d().min(8);
    let fam = Families::new(d);
    for n in 1..=6u32.min(d) {
        let odd = n % 2 == 1;
        let mut items = vec![
            (format!("qG{n}"), fam.q_beta(n)),
            (format!("ovqG{n}"), fam.qbar_beta(n)),
            (format!("GQ{n}"), fam.gq(n as i64)),
        ];
        if odd {
            items.push((format!("pG{n}"), fam.p_beta(n)));
        }
        for (name, e) in items {
            if !split_p_beta_coords(&e).1.is_zero() {
                return verdict(false, format!("{name} has a nonzero residual"));
            }
        }
    }
    if split_p_beta_coords(&PSeries::power_sum(2, d)).1.is_zero() {
        return verdict(false, "p2 has a zero residual");
    }
    if split_p_beta_coords(&fam.p_beta(2)).1.is_zero() {
        return verdict(false, "pG2 has a zero residual");
    }
    pass(format!("n <= 6 at D={d}; p2 and pG2 rejected"))
}

fn classical_limits(ctx: &Context) -> Result<Outcome> {
    let fam = ctx.families();
    let d = ctx.d();
    let classical = kqfam::q_beta_series(d as usize, d).at_beta_zero()?;
    let half = BetaScalar::ratio(1, 2);
    for n in 1..=d.min(8) {
        let q = classical.coeff(n as usize);
        let checks = [
            ("pG", fam.p_beta(n).at_beta_zero()? == PSeries::power_sum(n, d)),
            ("pg", kqfam::p_bracket(n).at_beta_zero()? == PSeries::power_sum(n, n)),
            ("ovqG", fam.qbar_beta(n).at_beta_zero()? == q.scale(&sign(n))),
            ("qg", fam.q_bracket(n).at_beta_zero()? == q.truncate(n)?),
            ("ovqg", fam.qbar_bracket(n).at_beta_zero()? == q.truncate(n)?.scale(&sign(n))),
            ("GQ", &fam.gq(n as i64).at_beta_zero()? == q),
            ("gp", fam.gp(n).at_beta_zero()? == q.truncate(n)?.scale(&half)),
        ];
        if let Some((tag, _)) = checks.iter().find(|(_, ok)| !ok) {
            return verdict(false, format!("{tag}{n}"));
        }
    }
    pass("pG -> p, q-families -> q, GQ -> q, gp -> q/2")
}

fn sign(n: u32) -> BetaScalar {
    BetaScalar::from_int(if n.is_multiple_of(2) { 1 } else { -1 })
}

/// `x^n (2 + βx)` and the series of `x^n (2 + βx)/(1 + βx)` in one variable.
fn one_variable(_ctx: &Context) -> Result<Outcome> {
    use crate::finvar::FinitePoly;
    let b = BetaScalar::beta();
    for n in 1..=8u32 {
        let d = n + 4;
        let gq = specialize(&kqfam::gq(n as i64, d), 1).poly;
        let expected = FinitePoly::monomial(vec![n], BetaScalar::from_int(2))
            .add(&FinitePoly::monomial(vec![n + 1], b.clone()));
        if gq != expected {
            return verdict(false, format!("GQ{n}"));
        }
        let d = n + 6;
        let q = specialize(&kqfam::q_beta_series(n as usize, d).coeff(n as usize).clone(), 1).poly;
        // x^n (2 + βx) Σ (−βx)^k  =  x^n (2 + Σ_{k≥1} (−1)^k β^k x^k)
        let mut expected = FinitePoly::monomial(vec![n], BetaScalar::from_int(2));
        for k in 1..=(d - n) {
            let c = BetaScalar::monomial(if k % 2 == 0 { 1 } else { -1 }, k as usize);
            expected.add_term(vec![n + k], &c);
        }
        if q != expected {
            return verdict(false, format!("qG{n}"));
        }
    }
    for n in 0..=4i64 {
        let expected = PSeries::constant(BetaScalar::beta_power_scaled(-1, 1, n as usize), 4);
        if kqfam::gq(-n, 4) != expected {
            return verdict(false, format!("GQ{}", -n));
        }
    }
    pass("GQ_n, q_n for n <= 8; GQ_0, GQ_-n for n <= 4")
}

fn gq_integrality(ctx: &Context) -> Result<Outcome> {
    let cases: Vec<(u32, usize)> =
        (1..=8u32).flat_map(|n| (1..=ctx.n()).map(move |v| (n, v))).collect();
    let bad: Vec<String> = cases
        .par_iter()
        .filter_map(|&(n, v)| match gq_finite(n, v) {
            Ok(p) if p.is_in_z_beta() => None,
            Ok(_) => Some(format!("GQ{n} at N={v}")),
            Err(e) => Some(format!("GQ{n} at N={v}: {e}")),
        })
        .collect();
    match bad.first() {
        Some(b) => verdict(false, b.clone()),
        None => pass(format!("n <= 8, N <= {}", ctx.n())),
    }
}

fn gp_integrality(ctx: &Context) -> Result<Outcome> {
    let fam = ctx.families();
    for n in 1..=8u32 {
        let gp = fam.gp(n);
        for v in 1..=ctx.n() {
            if !specialize(&gp, v).poly.is_in_z_beta() {
                return verdict(false, format!("gp{n} at N={v}"));
            }
        }
    }
    pass(format!("n <= 8, N <= {}", ctx.n()))
}

fn gq_routes(ctx: &Context) -> Result<Outcome> {
    let fam = ctx.families();
    let top = 6u32.min(ctx.d());
    for n in 1..=top {
        let series = fam.gq(n as i64);
        for v in 1..=ctx.n().min(3) {
            if gq_finite(n, v)?.truncate(ctx.d()) != specialize(&series, v).poly {
                return verdict(false, format!("GQ{n} at N={v}"));
            }
        }
    }
    pass(format!("n <= {top}, N <= {}, compared to degree {}", ctx.n().min(3), ctx.d()))
}

fn gp_routes(ctx: &Context) -> Result<Outcome> {
    let fam = ctx.families();
    for n in 1..=6u32 {
        for v in 1..=ctx.n().min(3) {
            if gp_finite(n, v)? != specialize(&fam.gp(n), v).poly {
                return verdict(false, format!("gp{n} at N={v}"));
            }
        }
    }
    pass(format!("n <= 6, N <= {}", ctx.n().min(3)))
}

fn expansion_rings(ctx: &Context) -> Result<Outcome> {
    let d = ctx.d().min(8);
    let ex = Expander::new(d);
    let fam = ex.families();
    let mut targets = Vec::new();
    for n in 1..=6u32.min(d) {
        targets.push((format!("qG{n}"), fam.q_beta(n)));
    }
    for lambda in enumerate_up_to(6.min(d), PartitionClass::All) {
        if lambda.len() > 1 {
            let prod = lambda.parts().iter().fold(PSeries::one(d), |acc, &k| &acc * &fam.q_beta(k));
            targets.push((format!("qG{lambda}"), prod));
        }
    }
    let failures: Vec<String> = targets
        .par_iter()
        .filter_map(|(name, t)| {
            let check = || -> Result<Option<String>> {
                let odd = ex.expand(t, Basis::QGOdd)?;
                if !odd.is_in_q_beta() {
                    return Ok(Some(format!("{name}: qG_odd coefficient outside Q[b]")));
                }
                if &ex.recombine(&odd)? != t {
                    return Ok(Some(format!("{name}: qG_odd round trip")));
                }
                let strict = ex.expand(t, Basis::QGStrict)?;
                if !strict.is_in_z_beta() {
                    return Ok(Some(format!("{name}: qG_strict coefficient outside Z[b]")));
                }
                if &ex.recombine(&strict)? != t {
                    return Ok(Some(format!("{name}: qG_strict round trip")));
                }
                Ok(None)
            };
            check().unwrap_or_else(|e| Some(format!("{name}: {e}")))
        })
        .collect();
    match failures.first() {
        Some(f) => verdict(false, f.clone()),
        None => pass(format!("{} targets of weight <= 6 at D={d}", targets.len())),
    }
}

fn gq2_expansion(_ctx: &Context) -> Result<Outcome> {
    let ex = Expander::new(6);
    let gq2 = ex.families().gq(2);
    let e = ex.expand_gq(&gq2)?;
    let round_trip = ex.recombine(&e)? == gq2;
    verdict(
        e.num_nonzero() >= 2 && round_trip,
        format!("{} nonzero coordinates at D=6", e.num_nonzero()),
    )
}

fn basis_pairing(ctx: &Context) -> Result<Outcome> {
    let top = ctx.d().min(8);
    let parts = enumerate_up_to(top, PartitionClass::Odd);
    let pg = |l: &Partition| l.parts().iter().fold(PSeries::one(top), |acc, &k| &acc * &kqfam::p_beta(k, top));
    let pb = |l: &Partition| {
        let w = l.weight();
        l.parts()
            .iter()
            .fold(PSeries::one(w), |acc, &k| &acc * &kqfam::p_bracket(k).with_degree(w).expect("raise"))
    };
    let left: Vec<PSeries> = parts.iter().map(pg).collect();
    let right: Vec<PSeries> = parts.iter().map(pb).collect();
    let bad: Vec<String> = (0..parts.len())
        .into_par_iter()
        .flat_map_iter(|i| {
            let left = &left;
            let right = &right;
            let parts = &parts;
            (0..parts.len()).filter_map(move |j| {
                let expected = if i == j { pairing_weight(&parts[i]) } else { BetaScalar::zero() };
                match pair(&left[i], &right[j]) {
                    Ok(r) if r.value == expected => None,
                    Ok(r) => Some(format!("<{}, {}> = {}", parts[i], parts[j], r.value)),
                    Err(e) => Some(e.to_string()),
                }
            })
        })
        .collect();
    match bad.first() {
        Some(b) => verdict(false, b.clone()),
        None => pass(format!("{0}x{0} odd partitions of weight <= {top}", parts.len())),
    }
}

fn duality(ctx: &Context) -> Result<Outcome> {
    if ctx.d() < 7 {
        return verdict(false, "needs degree >= 7");
    }
    let fam = ctx.families();
    for m in [1u32, 3, 5, 7] {
        for n in [1u32, 3, 5, 7] {
            let v = pair(&fam.gq(m as i64), &fam.gp(n))?.value;
            let expected = if m == n { BetaScalar::one() } else { BetaScalar::zero() };
            if v != expected {
                return verdict(false, format!("<GQ{m}, gp{n}> = {v}"));
            }
        }
    }
    pass("odd m, n <= 7")
}

fn cauchy_configured(ctx: &Context) -> Result<Outcome> {
    let (n, d) = (ctx.n(), ctx.d());
    verdict(cauchy_kernel_check(n, n, d), format!("N=M={n}, D={d}"))
}

fn b(c: i64, k: i64) -> LaurentBetaPoly {
    LaurentBetaPoly::monomial(c, k)
}

/// The K-even sequence `c₂ = −c₁β`, `c₄ = c₁β³ − 2c₃β`, `c₆ = −3c₁β⁵ + 5c₃β³ − 3c₅β`.
pub fn expected_keven() -> Vec<FormalGPPoly> {
    vec![
        FormalGPPoly::from_terms(6, &[(&[1], b(-1, 1))]),
        FormalGPPoly::from_terms(6, &[(&[1], b(1, 3)), (&[3], b(-2, 1))]),
        FormalGPPoly::from_terms(6, &[(&[1], b(-3, 5)), (&[3], b(5, 3)), (&[5], b(-3, 1))]),
    ]
}

/// `gp₂ = gp₁² − gp₁β` and
/// `gp₄ = −gp₁⁴ + 2gp₁gp₃ + 3gp₁³β − 2gp₃β − 3gp₁²β² + gp₁β³`.
pub fn expected_gp_even() -> Vec<(u32, FormalGPPoly)> {
    vec![
        (2, FormalGPPoly::from_terms(2, &[(&[1, 1], b(1, 0)), (&[1], b(-1, 1))])),
        (
            4,
            FormalGPPoly::from_terms(
                4,
                &[
                    (&[1, 1, 1, 1], b(-1, 0)),
                    (&[1, 3], b(2, 0)),
                    (&[1, 1, 1], b(3, 1)),
                    (&[3], b(-2, 1)),
                    (&[1, 1], b(-3, 2)),
                    (&[1], b(1, 3)),
                ],
            ),
        ),
    ]
}

fn keven_check(_ctx: &Context) -> Result<Outcome> {
    let got = keven_reduce(6)?;
    let expected = expected_keven();
    let ok = got.iter().zip(&expected).all(|(g, e)| g.terms() == e.terms());
    let text: Vec<String> = got
        .iter()
        .enumerate()
        .map(|(i, p)| format!("c{} = {}", 2 * i + 2, p.display_with("c")))
        .collect();
    verdict(ok && got.len() == 3, text.join("; "))
}

fn gp_even_check(_ctx: &Context) -> Result<Outcome> {
    let table = gp_even_to_odd(4)?;
    let mut ok = true;
    let mut text = Vec::new();
    for (n, e) in expected_gp_even() {
        let got = &table[&n];
        ok &= got.terms() == e.terms();
        text.push(format!("gp{n} = {got}"));
    }
    verdict(ok, text.join("; "))
}

fn gp_even_values(ctx: &Context) -> Result<Outcome> {
    let top = 6usize.max(ctx.d().min(8) as usize);
    let top = top - top % 2;
    let table = gp_even_to_odd(top)?;
    let fam = ctx.families();
    for (&n, formula) in &table {
        let value = formula.evaluate(n, |i| fam.gp(i).with_degree(n).expect("raise"))?;
        if value != fam.gp(n) {
            return verdict(false, format!("gp{n}"));
        }
    }
    pass(format!("gp_2n for 2n <= {top}"))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn suites_pass_at_small_size() {
        let config = VerifyConfig {
            degree: 8,
            num_vars: 2,
            z_order: 10,
        };
        let results = run_suite(Suite::All, config).unwrap();
        let failed: Vec<_> = results.iter().filter(|r| !r.passed).map(|r| (&r.name, &r.detail)).collect();
        assert!(failed.is_empty(), "{failed:?}");
        assert_eq!(results.iter().filter(|r| r.suite == Suite::Gpz).count(), 3);
    }

    #[test]
    fn suite_names() {
        assert_eq!("gpz".parse::<Suite>().unwrap(), Suite::Gpz);
        assert!("nope".parse::<Suite>().is_err());
        assert!(run_suite(Suite::Gpz, VerifyConfig { degree: 0, ..VerifyConfig::default() }).is_err());
    }
}
