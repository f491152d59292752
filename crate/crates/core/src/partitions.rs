//! Integer partitions, their statistics and the two monomial orders.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::coeff::factorial;
use crate::error::{Error, Result};

/// A weakly decreasing sequence of positive integers.
///
/// `Ord` is the order ≻ (weight first, then reverse lexicographic), so sorted
/// containers list partitions by ascending weight and descending lex within a
/// weight.
#[derive(Clone, PartialEq, Eq, Hash, Default, Serialize)]
#[serde(transparent)]
pub struct Partition(Vec<u32>);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionClass {
    All,
    Odd,
    Strict,
}

impl PartitionClass {
    pub fn contains(self, p: &Partition) -> bool {
        match self {
            PartitionClass::All => true,
            PartitionClass::Odd => p.is_odd(),
            PartitionClass::Strict => p.is_strict(),
        }
    }
}

impl Partition {
    pub fn empty() -> Self {
        Partition(Vec::new())
    }

    pub fn row(n: u32) -> Self {
        if n == 0 {
            Self::empty()
        } else {
            Partition(vec![n])
        }
    }

    /// Validates that `parts` is weakly decreasing and positive.
    pub fn new(parts: Vec<u32>) -> Result<Self> {
        if parts.contains(&0) {
            return Err(Error::Precondition(format!("partition {parts:?} has a zero part")));
        }
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(Error::Precondition(format!("partition {parts:?} is not weakly decreasing")));
        }
        Ok(Partition(parts))
    }

    /// Sorts arbitrary positive parts into a partition.
    pub fn from_parts(mut parts: Vec<u32>) -> Self {
        parts.retain(|&p| p > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[u32] {
        &self.0
    }

    pub fn weight(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_odd(&self) -> bool {
        self.0.iter().all(|p| p % 2 == 1)
    }

    pub fn is_strict(&self) -> bool {
        self.0.windows(2).all(|w| w[0] > w[1])
    }

    /// `mᵢ(λ)`, the number of parts equal to `i`.
    pub fn multiplicity(&self, i: u32) -> usize {
        self.0.iter().filter(|&&p| p == i).count()
    }

    /// Distinct parts with their multiplicities, largest part first.
    pub fn multiplicities(&self) -> Vec<(u32, usize)> {
        let mut out: Vec<(u32, usize)> = Vec::new();
        for &p in &self.0 {
            match out.last_mut() {
                Some((q, m)) if *q == p => *m += 1,
                _ => out.push((p, 1)),
            }
        }
        out
    }

    /// Multiset union.
    pub fn union(&self, other: &Partition) -> Partition {
        let mut parts = Vec::with_capacity(self.len() + other.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() || j < other.0.len() {
            if j == other.0.len() || (i < self.0.len() && self.0[i] >= other.0[j]) {
                parts.push(self.0[i]);
                i += 1;
            } else {
                parts.push(other.0[j]);
                j += 1;
            }
        }
        Partition(parts)
    }

    /// Removes the last (smallest) part.
    pub fn split_last(&self) -> Option<(Partition, u32)> {
        let (&last, rest) = self.0.split_last()?;
        Some((Partition(rest.to_vec()), last))
    }

    pub fn z_lambda(&self) -> BigInt {
        z_lambda(self)
    }
}

impl<'de> Deserialize<'de> for Partition {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let parts = Vec::<u32>::deserialize(d)?;
        Partition::new(parts).map_err(serde::de::Error::custom)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl PartialOrd for Partition {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Partition {
    fn cmp(&self, other: &Self) -> Ordering {
        cmp_succ(self, other)
    }
}

/// Lexicographic comparison, shorter sequences padded with zeros.
fn lex(a: &Partition, b: &Partition) -> Ordering {
    let n = a.len().max(b.len());
    (0..n)
        .map(|i| {
            let x = a.0.get(i).copied().unwrap_or(0);
            let y = b.0.get(i).copied().unwrap_or(0);
            x.cmp(&y)
        })
        .find(|o| o.is_ne())
        .unwrap_or(Ordering::Equal)
}

/// `Greater` iff `kappa ≻ mu`: heavier, or equal weight and lexicographically smaller.
pub fn cmp_succ(kappa: &Partition, mu: &Partition) -> Ordering {
    kappa
        .weight()
        .cmp(&mu.weight())
        .then_with(|| lex(kappa, mu).reverse())
}

/// `Greater` iff `kappa ≻′ mu`: heavier, or equal weight and lexicographically greater.
pub fn cmp_succ_prime(kappa: &Partition, mu: &Partition) -> Ordering {
    kappa.weight().cmp(&mu.weight()).then_with(|| lex(kappa, mu))
}

/// `z_λ = ∏ i^{mᵢ} · mᵢ!`.
pub fn z_lambda(lambda: &Partition) -> BigInt {
    lambda
        .multiplicities()
        .into_iter()
        .fold(BigInt::one(), |acc, (i, m)| {
            acc * BigInt::from(i).pow(m as u32) * factorial(m as u64)
        })
}

/// All partitions of `n` in `class`, descending lexicographic order.
pub fn enumerate(n: u32, class: PartitionClass) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current = Vec::new();
    fill(n, n, class, &mut current, &mut out);
    out
}

fn fill(remaining: u32, max_part: u32, class: PartitionClass, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition(current.clone()));
        return;
    }
    for part in (1..=max_part.min(remaining)).rev() {
        match class {
            PartitionClass::Odd if part % 2 == 0 => continue,
            _ => {}
        }
        let next_max = match class {
            PartitionClass::Strict => part - 1,
            _ => part,
        };
        current.push(part);
        fill(remaining - part, next_max, class, current, out);
        current.pop();
    }
}

/// All partitions in `class` of weight at most `max_weight`, in ascending ≻ order.
pub fn enumerate_up_to(max_weight: u32, class: PartitionClass) -> Vec<Partition> {
    (0..=max_weight).flat_map(|n| enumerate(n, class)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(enumerate(4, PartitionClass::Odd), vec![p(&[3, 1]), p(&[1, 1, 1, 1])]);
        assert_eq!(enumerate(4, PartitionClass::Strict), vec![p(&[4]), p(&[3, 1])]);
        assert_eq!(enumerate(0, PartitionClass::All), vec![Partition::empty()]);
        assert_eq!(
            enumerate(4, PartitionClass::All),
            vec![p(&[4]), p(&[3, 1]), p(&[2, 2]), p(&[2, 1, 1]), p(&[1, 1, 1, 1])]
        );
    }

    #[test]
    fn z_lambda_examples() {
        assert_eq!(z_lambda(&p(&[3, 1, 1])), BigInt::from(6));
        assert_eq!(z_lambda(&p(&[2, 2])), BigInt::from(8));
        assert_eq!(z_lambda(&Partition::empty()), BigInt::from(1));
    }

    #[test]
    fn order_examples() {
        assert_eq!(cmp_succ(&p(&[2, 2]), &p(&[3, 1])), Ordering::Greater);
        assert_eq!(cmp_succ(&p(&[5]), &p(&[3, 1])), Ordering::Greater);
        assert_eq!(cmp_succ(&p(&[3, 1]), &p(&[3, 1])), Ordering::Equal);
        assert_eq!(cmp_succ_prime(&p(&[3, 1]), &p(&[2, 2])), Ordering::Greater);
        assert_eq!(cmp_succ_prime(&p(&[5]), &p(&[4, 1])), Ordering::Greater);
        assert_eq!(cmp_succ_prime(&p(&[1]), &p(&[1])), Ordering::Equal);
    }

    #[test]
    fn rejects_malformed() {
        assert!(Partition::new(vec![1, 2]).is_err());
        assert!(Partition::new(vec![2, 0]).is_err());
        assert!(serde_json::from_str::<Partition>("[1,3]").is_err());
        assert_eq!(serde_json::to_string(&p(&[3, 1, 1])).unwrap(), "[3,1,1]");
    }

    #[test]
    fn union_merges_sorted() {
        assert_eq!(p(&[3, 1]).union(&p(&[2, 1])), p(&[3, 2, 1, 1]));
    }
}
