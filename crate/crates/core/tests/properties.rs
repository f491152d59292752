use std::cmp::Ordering;

use num_bigint::BigInt;
use proptest::prelude::*;

use kqsym::coeff::LaurentBetaPoly;
use kqsym::finvar::{divide_out_linear, specialize, FinitePoly, LinearRoot};
use kqsym::kqfam;
use kqsym::pairing::pair;
use kqsym::partitions::{cmp_succ, cmp_succ_prime, enumerate, enumerate_up_to};
use kqsym::{BetaPoly, BetaScalar, PSeries, Partition, PartitionClass, ZSeries};

fn poly() -> impl Strategy<Value = BetaPoly> {
    prop::collection::vec(-4i64..=4, 0..4).prop_map(|cs| BetaPoly::from_coeffs(cs.into_iter().map(BigInt::from).collect()))
}

fn scalar() -> impl Strategy<Value = BetaScalar> {
    (poly(), poly().prop_filter("nonzero", |p| !p.is_zero())).prop_map(|(n, d)| BetaScalar::new(n, d).unwrap())
}

fn small_int_beta() -> impl Strategy<Value = BetaScalar> {
    (-3i64..=3, 0usize..3).prop_map(|(c, k)| BetaScalar::monomial(c, k))
}

/// A random series in power-sum coordinates, with terms of weight in `lo..=degree`.
fn pseries(lo: u32, degree: u32, class: PartitionClass) -> impl Strategy<Value = PSeries> {
    let basis: Vec<Partition> = enumerate_up_to(degree, class).into_iter().filter(|l| l.weight() >= lo).collect();
    prop::collection::vec(small_int_beta(), basis.len()).prop_map(move |cs| {
        let mut out = PSeries::zero(degree);
        for (l, c) in basis.iter().zip(cs) {
            out.add_term(l.clone(), &c);
        }
        out
    })
}

fn partition() -> impl Strategy<Value = Partition> {
    prop::collection::vec(1u32..6, 0..5).prop_map(Partition::from_parts)
}

fn finite_poly(vars: usize) -> impl Strategy<Value = FinitePoly> {
    prop::collection::vec((prop::collection::vec(0u32..3, vars), small_int_beta()), 0..5).prop_map(move |terms| {
        let mut p = FinitePoly::zero(vars);
        for (e, c) in terms {
            p.add_term(e, &c);
        }
        p
    })
}

/// Partition numbers from Euler's pentagonal recurrence.
fn partition_numbers(n: usize) -> Vec<i64> {
    let mut p = vec![0i64; n + 1];
    p[0] = 1;
    for m in 1..=n {
        let mut k = 1i64;
        loop {
            let g1 = (k * (3 * k - 1) / 2) as usize;
            if g1 > m {
                break;
            }
            let sign = if k % 2 == 1 { 1 } else { -1 };
            p[m] += sign * p[m - g1];
            let g2 = (k * (3 * k + 1) / 2) as usize;
            if g2 <= m {
                p[m] += sign * p[m - g2];
            }
            k += 1;
        }
    }
    p
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn field_axioms(a in scalar(), b in scalar(), c in scalar()) {
        prop_assert_eq!(&a + &b, &b + &a);
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a + &b) + &c, &a + &(&b + &c));
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
        prop_assert!((&a - &a).is_zero());
        if !a.is_zero() {
            prop_assert!((&a * &a.inverse().unwrap()).is_one());
        }
    }

    #[test]
    fn scalar_text_round_trip(a in scalar()) {
        prop_assert_eq!(a.to_string().parse::<BetaScalar>().unwrap(), a);
    }

    #[test]
    fn laurent_ring_axioms(a in (-3i64..=3, -3i64..=3), b in (-3i64..=3, -3i64..=3)) {
        let x = LaurentBetaPoly::monomial(a.0, a.1);
        let y = LaurentBetaPoly::monomial(b.0, b.1);
        let sum = (&x + &y).to_scalar();
        prop_assert_eq!(sum, &x.to_scalar() + &y.to_scalar());
        prop_assert_eq!((&x * &y).to_scalar(), &x.to_scalar() * &y.to_scalar());
    }

    #[test]
    fn pseries_ring_axioms(
        a in pseries(0, 4, PartitionClass::All),
        b in pseries(0, 4, PartitionClass::All),
        c in pseries(0, 4, PartitionClass::All),
    ) {
        prop_assert_eq!(&a * &b, &b * &a);
        prop_assert_eq!(&(&a * &b) * &c, &a * &(&b * &c));
        prop_assert_eq!(&a * &(&b + &c), &(&a * &b) + &(&a * &c));
    }

    #[test]
    fn exp_log_round_trip(cs in prop::collection::vec(pseries(0, 3, PartitionClass::All), 4)) {
        let mut coeffs = vec![PSeries::zero(3)];
        coeffs.extend(cs);
        let a = ZSeries::new(coeffs).unwrap();
        prop_assert_eq!(a.exp().unwrap().log().unwrap(), a);
    }

    #[test]
    fn zbar_is_an_involution(cs in prop::collection::vec(pseries(0, 3, PartitionClass::All), 5)) {
        let a = ZSeries::new(cs).unwrap();
        prop_assert_eq!(a.substitute_zbar().substitute_zbar(), a);
    }

    #[test]
    fn specialize_is_a_homomorphism(
        a in pseries(0, 4, PartitionClass::All),
        b in pseries(0, 4, PartitionClass::All),
        n in 1usize..=3,
    ) {
        let product = specialize(&(&a * &b), n);
        prop_assert_eq!(product, specialize(&a, n).mul(&specialize(&b, n)));
        let sum = specialize(&(&a + &b), n).poly;
        prop_assert_eq!(sum, specialize(&a, n).poly.add(&specialize(&b, n).poly));
    }

    #[test]
    fn odd_and_strict_counts_agree(n in 0u32..=18) {
        let all = partition_numbers(n as usize)[n as usize];
        prop_assert_eq!(enumerate(n, PartitionClass::All).len() as i64, all);
        prop_assert_eq!(enumerate(n, PartitionClass::Odd).len(), enumerate(n, PartitionClass::Strict).len());
        prop_assert!(enumerate(n, PartitionClass::Odd).iter().all(Partition::is_odd));
    }

    #[test]
    fn orders_are_total(a in partition(), b in partition(), c in partition()) {
        for cmp in [cmp_succ, cmp_succ_prime] {
            prop_assert_eq!(cmp(&a, &b), cmp(&b, &a).reverse());
            prop_assert_eq!(cmp(&a, &b) == Ordering::Equal, a == b);
            if cmp(&a, &b).is_ge() && cmp(&b, &c).is_ge() {
                prop_assert!(cmp(&a, &c).is_ge());
            }
        }
    }

    #[test]
    fn pairing_is_bilinear(
        f1 in pseries(0, 5, PartitionClass::Odd),
        f2 in pseries(0, 5, PartitionClass::Odd),
        u in small_int_beta(),
        v in small_int_beta(),
        g_parts in prop::sample::select(enumerate_up_to(5, PartitionClass::Odd)),
    ) {
        // f1, f2 are taken in p^(β) coordinates
        let to_g_side = |f: &PSeries| {
            f.substitute_power_sums(5, |k| kqfam::p_beta(k, 5))
        };
        let (f1, f2) = (to_g_side(&f1), to_g_side(&f2));
        let w = g_parts.weight();
        let g = g_parts.parts().iter().fold(PSeries::one(w), |acc, &k| &acc * &kqfam::p_bracket(k).with_degree(w).unwrap());
        let combined = &f1.scale(&u) + &f2.scale(&v);
        let lhs = pair(&combined, &g).unwrap().value;
        let rhs = &(&u * &pair(&f1, &g).unwrap().value) + &(&v * &pair(&f2, &g).unwrap().value);
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn divide_recompose(f in finite_poly(2)) {
        let x0 = FinitePoly::var(0, 2);
        let beta = FinitePoly::constant(BetaScalar::beta(), 2);
        let a = f.mul(&x0.add(&beta));
        prop_assert_eq!(divide_out_linear(&a, 0, LinearRoot::MinusBeta).unwrap(), f.clone());
        let two = FinitePoly::constant(BetaScalar::from_int(2), 2);
        let a = f.mul(&two.add(&x0.mul(&beta)));
        prop_assert_eq!(divide_out_linear(&a, 0, LinearRoot::MinusTwoOverBeta).unwrap(), f);
    }
}
