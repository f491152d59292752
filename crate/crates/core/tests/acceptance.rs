//! Acceptance criteria. Each criterion prints one PASS/FAIL line; the binary
//! exits nonzero if any fails.

use std::process::ExitCode;
use std::time::Instant;

use kqsym::coeff::LaurentBetaPoly;
use kqsym::expand::{gp_even_to_odd, keven_reduce, split_p_beta_coords, Basis, Expander, FormalGPPoly};
use kqsym::finvar::{check_dual_cancellation, check_kq_cancellation, specialize, FinitePoly};
use kqsym::kqfam::{self, gq_finite, Families};
use kqsym::pairing::{cauchy_kernel_check, cauchy_kernel_check_classical, pair};
use kqsym::partitions::enumerate_up_to;
use kqsym::{BetaScalar, PSeries, Partition, PartitionClass, ZSeries};

type Outcome = Result<(), String>;
type Criterion = (&'static str, fn() -> Outcome);

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Outcome {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn lb(c: i64, k: i64) -> LaurentBetaPoly {
    LaurentBetaPoly::monomial(c, k)
}

fn s(n: i64) -> BetaScalar {
    BetaScalar::from_int(n)
}

fn b() -> BetaScalar {
    BetaScalar::beta()
}

fn product(parts: &[u32], degree: u32, f: impl Fn(u32) -> PSeries) -> PSeries {
    parts.iter().fold(PSeries::one(degree), |acc, &k| &acc * &f(k))
}

fn gp_even() -> Outcome {
    let table = gp_even_to_odd(6).map_err(|e| e.to_string())?;
    let gp2 = FormalGPPoly::from_terms(2, &[(&[1, 1], lb(1, 0)), (&[1], lb(-1, 1))]);
    let gp4 = FormalGPPoly::from_terms(
        4,
        &[
            (&[1, 1, 1, 1], lb(-1, 0)),
            (&[1, 3], lb(2, 0)),
            (&[1, 1, 1], lb(3, 1)),
            (&[3], lb(-2, 1)),
            (&[1, 1], lb(-3, 2)),
            (&[1], lb(1, 3)),
        ],
    );
    ensure(table[&2].terms() == gp2.terms(), || format!("gp2 = {}", table[&2]))?;
    ensure(table[&4].terms() == gp4.terms(), || format!("gp4 = {}", table[&4]))?;
    let fam = Families::new(6);
    let value = table[&6]
        .evaluate(6, |i| fam.gp(i).with_degree(6).unwrap())
        .map_err(|e| e.to_string())?;
    ensure(value == kqfam::gp(6), || "gp6 formula does not evaluate to gp6".into())
}

fn keven() -> Outcome {
    let got = keven_reduce(6).map_err(|e| e.to_string())?;
    let expected = [
        FormalGPPoly::from_terms(6, &[(&[1], lb(-1, 1))]),
        FormalGPPoly::from_terms(6, &[(&[1], lb(1, 3)), (&[3], lb(-2, 1))]),
        FormalGPPoly::from_terms(6, &[(&[1], lb(-3, 5)), (&[3], lb(5, 3)), (&[5], lb(-3, 1))]),
    ];
    ensure(got.len() == 3, || format!("{} coefficients", got.len()))?;
    for (i, (g, e)) in got.iter().zip(&expected).enumerate() {
        ensure(g.terms() == e.terms(), || format!("c{} = {}", 2 * i + 2, g.display_with("c")))?;
    }
    Ok(())
}

/// `x^n (2 + βx) / (1 + βx)` in one variable to total degree `d`, by long
/// division of the numerator by `1 + βx`.
fn one_var_quotient(n: u32, d: u32) -> FinitePoly {
    let mut num: Vec<BetaScalar> = vec![BetaScalar::zero(); d as usize + 2];
    num[n as usize] = s(2);
    num[n as usize + 1] = b();
    let mut out = FinitePoly::zero(1);
    for k in 0..=d as usize {
        let c = num[k].clone();
        if c.is_zero() {
            continue;
        }
        out.add_term(vec![k as u32], &c);
        num[k + 1] = &num[k + 1] - &(&c * &b());
    }
    out
}

fn one_variable() -> Outcome {
    for n in 1..=8u32 {
        let gq = specialize(&kqfam::gq(n as i64, n + 4), 1).poly;
        let expected = FinitePoly::monomial(vec![n], s(2)).add(&FinitePoly::monomial(vec![n + 1], b()));
        ensure(gq == expected, || format!("GQ{n} = {gq}"))?;
        let d = n + 6;
        let q = kqfam::q_beta_series(n as usize, d);
        let q = specialize(q.coeff(n as usize), 1).poly;
        ensure(q == one_var_quotient(n, d), || format!("q{n} = {q}"))?;
    }
    ensure(kqfam::gq(0, 4) == PSeries::one(4), || "GQ0".into())?;
    for n in 1..=4u32 {
        let expected = PSeries::constant((-b()).pow(n), 4);
        ensure(kqfam::gq(-(n as i64), 4) == expected, || format!("GQ-{n}"))?;
    }
    Ok(())
}

fn recurrences() -> Outcome {
    let fam = Families::new(10);
    let (q, qbar) = (fam.q_beta_series(), fam.qbar_beta_series());
    let dual = fam.q_bracket_series(10);
    for n in 1..=10usize {
        let mut g = PSeries::zero(10);
        let mut h = PSeries::zero(10);
        for k in 0..=n {
            g = &g + &(q.coeff(n - k) * qbar.coeff(k));
            let dbar = if k == 0 {
                PSeries::one(10)
            } else {
                fam.qbar_bracket(k as u32).with_degree(10).unwrap()
            };
            h = &h + &(&dual.coeff(n - k).with_degree(10).unwrap() * &dbar);
        }
        ensure(g.is_zero(), || format!("G-side recurrence at n={n}"))?;
        ensure(h.is_zero(), || format!("g-side recurrence at n={n}"))?;
    }
    let dual = dual.truncate_order(10).map_err(|e| e.to_string())?;
    ensure((&dual * &dual.substitute_zbar()).is_one(), || "Q[b](z) Q[b](zbar) != 1".into())?;

    let q8 = kqfam::q_beta_series(8, 8);
    let shifted = q8.substitute_affine(&-b(), &s(-1)).map_err(|e| e.to_string())?;
    let at = q8.evaluate_at(&-b()).map_err(|e| e.to_string())?;
    let inv = kqsym::psym::invert_pseries(&at).map_err(|e| e.to_string())?;
    let rhs = shifted.mul_pseries(&inv);
    ensure(rhs == kqfam::qbar_beta_series(8, 8), || "functional equation to order 8".into())
}

fn integrality() -> Outcome {
    let fam = Families::new(10);
    for n in 1..=8u32 {
        for v in 1..=4 {
            let g = gq_finite(n, v).map_err(|e| e.to_string())?;
            ensure(g.is_in_z_beta(), || format!("GQ_finite({n}, {v})"))?;
            ensure(specialize(&fam.gp(n), v).poly.is_in_z_beta(), || format!("gp{n} at N={v}"))?;
        }
    }
    for n in 1..=6u32 {
        let d = n + 4;
        let series = kqfam::gq(n as i64, d);
        for v in 1..=3 {
            let finite = gq_finite(n, v).map_err(|e| e.to_string())?.truncate(d);
            ensure(finite == specialize(&series, v).poly, || format!("GQ{n} routes at N={v}"))?;
        }
    }
    Ok(())
}

fn cancellation() -> Outcome {
    let fam = Families::new(8);
    for n in 1..=6u32 {
        let mut dual = vec![
            (format!("qg{n}"), fam.q_bracket(n)),
            (format!("ovqg{n}"), fam.qbar_bracket(n)),
            (format!("gp{n}"), fam.gp(n)),
        ];
        let mut kq = vec![(format!("qG{n}"), fam.q_beta(n)), (format!("GQ{n}"), fam.gq(n as i64))];
        if n % 2 == 1 {
            dual.push((format!("pg{n}"), kqfam::p_bracket(n)));
            kq.push((format!("pG{n}"), fam.p_beta(n)));
        }
        for (name, e) in dual {
            let ok = check_dual_cancellation(&specialize(&e, 4).poly).map_err(|e| e.to_string())?;
            ensure(ok, || format!("dual cancellation of {name}"))?;
        }
        for (name, e) in kq {
            let ok = check_kq_cancellation(&specialize(&e, 4), 8).map_err(|e| e.to_string())?;
            ensure(ok, || format!("K-Q cancellation of {name}"))?;
        }
    }
    let p2 = specialize(&PSeries::power_sum(2, 8), 4);
    ensure(!check_dual_cancellation(&p2.poly).unwrap(), || "p2 passes dual cancellation".into())?;
    ensure(!check_kq_cancellation(&p2, 8).unwrap(), || "p2 passes K-Q cancellation".into())
}

/// `2^{−ℓ} ∏ k^{m_k} m_k!`, computed from multiplicities.
fn weight_oracle(l: &Partition) -> BetaScalar {
    let mut num = 1i64;
    let mut run = 0;
    let mut prev = 0;
    for &p in l.parts() {
        run = if p == prev { run + 1 } else { 1 };
        prev = p;
        num *= p as i64 * run;
    }
    BetaScalar::ratio(num, 1i64 << l.len())
}

fn pairing() -> Outcome {
    let parts = enumerate_up_to(8, PartitionClass::Odd);
    for l in &parts {
        let left = product(l.parts(), 8, |k| kqfam::p_beta(k, 8));
        for m in &parts {
            let w = m.weight();
            let right = product(m.parts(), w, |k| kqfam::p_bracket(k).with_degree(w).unwrap());
            let v = pair(&left, &right).map_err(|e| e.to_string())?.value;
            let expected = if l == m { weight_oracle(l) } else { BetaScalar::zero() };
            ensure(v == expected, || format!("<p{l}, p{m}> = {v}"))?;
        }
    }
    let fam = Families::new(7);
    for m in [1u32, 3, 5, 7] {
        for n in [1u32, 3, 5, 7] {
            let v = pair(&fam.gq(m as i64), &fam.gp(n)).map_err(|e| e.to_string())?.value;
            let expected = if m == n { BetaScalar::one() } else { BetaScalar::zero() };
            ensure(v == expected, || format!("<GQ{m}, gp{n}> = {v}"))?;
        }
    }
    Ok(())
}

fn cauchy() -> Outcome {
    ensure(cauchy_kernel_check(1, 1, 4), || "(1,1,4)".into())?;
    ensure(cauchy_kernel_check(2, 2, 6), || "(2,2,6)".into())?;
    ensure(cauchy_kernel_check_classical(2, 2, 6).unwrap(), || "classical (2,2,6)".into())
}

fn expansions() -> Outcome {
    let ex = Expander::new(8);
    let fam = ex.families();
    for n in 1..=6u32 {
        let q = fam.q_beta(n);
        let odd = ex.expand(&q, Basis::QGOdd).map_err(|e| e.to_string())?;
        ensure(odd.is_in_q_beta(), || format!("qG_odd expansion of q{n}"))?;
        let strict = ex.expand(&q, Basis::QGStrict).map_err(|e| e.to_string())?;
        ensure(strict.is_in_z_beta(), || format!("qG_strict expansion of q{n}"))?;
        for e in [&odd, &strict] {
            ensure(ex.recombine(e).unwrap() == q, || format!("round trip of q{n} in {}", e.basis.name()))?;
        }
        let qg = fam.q_bracket(n);
        for basis in [Basis::QgOdd, Basis::QgStrict] {
            let e = ex.expand(&qg, basis).map_err(|e| e.to_string())?;
            ensure(ex.recombine(&e).unwrap() == qg, || format!("round trip of qg{n} in {}", basis.name()))?;
        }
    }
    let q22 = &fam.q_beta(2) * &fam.q_beta(2);
    let strict = ex.expand(&q22, Basis::QGStrict).map_err(|e| e.to_string())?;
    ensure(strict.is_in_z_beta(), || "qG_strict expansion of q2 q2".into())?;
    ensure(ex.recombine(&strict).unwrap() == q22, || "round trip of q2 q2".into())?;

    let ex6 = Expander::new(6);
    let gq2 = ex6.families().gq(2);
    let e = ex6.expand_gq(&gq2).map_err(|e| e.to_string())?;
    ensure(e.num_nonzero() >= 2, || format!("GQ2 has {} coordinates", e.num_nonzero()))?;
    ensure(ex6.recombine(&e).unwrap() == gq2, || "round trip of GQ2".into())
}

/// `exp(Σ_{k odd} 2 p_k z^k / k)`.
fn classical_q(order: usize, degree: u32) -> ZSeries {
    let coeffs = (0..=order)
        .map(|k| {
            if k % 2 == 1 {
                PSeries::power_sum(k as u32, degree).scale(&BetaScalar::ratio(2, k as i64))
            } else {
                PSeries::zero(degree)
            }
        })
        .collect();
    ZSeries::new(coeffs).unwrap().exp().unwrap()
}

fn membership() -> Outcome {
    let fam = Families::new(8);
    for n in 1..=6u32 {
        let mut items = vec![
            (format!("qG{n}"), fam.q_beta(n)),
            (format!("ovqG{n}"), fam.qbar_beta(n)),
            (format!("GQ{n}"), fam.gq(n as i64)),
        ];
        if n % 2 == 1 {
            items.push((format!("pG{n}"), fam.p_beta(n)));
        }
        for (name, e) in items {
            ensure(split_p_beta_coords(&e).1.is_zero(), || format!("{name} has a residual"))?;
        }
    }
    ensure(!split_p_beta_coords(&PSeries::power_sum(2, 8)).1.is_zero(), || "p2 has no residual".into())?;

    let classical = classical_q(8, 8);
    let zero = |p: PSeries| p.at_beta_zero().unwrap();
    for n in 1..=8u32 {
        let q = classical.coeff(n as usize);
        let q_exact = q.truncate(n).unwrap();
        let sign = s(if n % 2 == 0 { 1 } else { -1 });
        ensure(zero(fam.p_beta(n)) == PSeries::power_sum(n, 8), || format!("pG{n}"))?;
        ensure(&zero(fam.q_beta(n)) == q, || format!("qG{n}"))?;
        ensure(zero(fam.qbar_beta(n)) == q.scale(&sign), || format!("ovqG{n}"))?;
        ensure(zero(fam.q_bracket(n)) == q_exact, || format!("qg{n}"))?;
        ensure(zero(fam.qbar_bracket(n)) == q_exact.scale(&sign), || format!("ovqg{n}"))?;
        ensure(&zero(fam.gq(n as i64)) == q, || format!("GQ{n}"))?;
        ensure(zero(fam.gp(n)) == q_exact.scale(&BetaScalar::ratio(1, 2)), || format!("gp{n}"))?;
    }
    Ok(())
}

fn main() -> ExitCode {
    let criteria: [Criterion; 10] = [
        ("gp even-to-odd identities", gp_even),
        ("K-even coefficient sequence", keven),
        ("one-variable closed forms", one_variable),
        ("recurrences and functional equations", recurrences),
        ("integrality", integrality),
        ("cancellation properties", cancellation),
        ("pairing", pairing),
        ("Cauchy kernel", cauchy),
        ("expansion coefficient rings", expansions),
        ("membership certificates and beta = 0 limits", membership),
    ];
    let mut failed = 0;
    for (i, (name, f)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = f();
        let ms = start.elapsed().as_millis();
        match outcome {
            Ok(()) => println!("PASS [{:>2}] {name} ({ms} ms)", i + 1),
            Err(why) => {
                failed += 1;
                println!("FAIL [{:>2}] {name}: {why} ({ms} ms)", i + 1);
            }
        }
    }
    println!("acceptance: {} passed, {failed} failed", criteria.len() - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
