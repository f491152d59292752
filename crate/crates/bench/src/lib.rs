//! Shared fixtures for the criterion benchmarks.

use kqsym::kqfam::{self, Families};
use kqsym::{PSeries, ZSeries};

/// A family context at the CLI's default truncation degree.
pub fn default_families() -> Families {
    Families::new(10)
}

/// `log Q(z)` at order and degree `d`, the input of the exponential.
pub fn log_q(d: u32) -> ZSeries {
    kqfam::q_beta_series(d as usize, d).log().expect("constant term 1")
}

/// `q₃ q₂ q₁` at degree `d`, a typical expansion target.
pub fn q_product(families: &Families) -> PSeries {
    [3, 2, 1].iter().fold(PSeries::one(families.degree()), |acc, &k| &acc * &families.q_beta(k))
}
