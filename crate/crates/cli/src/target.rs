//! Target expressions: family members and ordinary power sums joined by `*`.
//!
//! A factor is a family tag followed by an index (`GQ3`, `qG1`, `ovqg2`,
//! `GQ-1`), the same with the side written last (`q1G`, `ovq2g`, `p3G`), or
//! `p<n>` for an ordinary power sum.

use std::fmt;
use std::str::FromStr;

use kqsym::kqfam::{Families, Family, FamilyId};
use kqsym::PSeries;

use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Factor {
    Member(FamilyId),
    PowerSum(u32),
}

impl Factor {
    fn is_exact(self) -> bool {
        matches!(self, Factor::Member(id) if !id.family.is_truncated())
    }

    fn weight(self) -> u32 {
        match self {
            Factor::Member(id) => id.index.max(0) as u32,
            Factor::PowerSum(n) => n,
        }
    }
}

impl fmt::Display for Factor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Factor::Member(id) => write!(f, "{id}"),
            Factor::PowerSum(n) => write!(f, "p{n}"),
        }
    }
}

impl FromStr for Factor {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = || CliError::Usage(format!("cannot read target factor `{s}`"));
        let start = s.find(|c: char| c.is_ascii_digit() || c == '-').ok_or_else(bad)?;
        let (prefix, rest) = s.split_at(start);
        let end = rest[1..]
            .find(|c: char| !c.is_ascii_digit())
            .map_or(rest.len(), |i| i + 1);
        let (digits, suffix) = rest.split_at(end);
        let index: i64 = digits.parse().map_err(|_| bad())?;
        let tag = match suffix {
            "" if prefix == "p" => {
                let n = u32::try_from(index).ok().filter(|&n| n >= 1).ok_or_else(bad)?;
                return Ok(Factor::PowerSum(n));
            }
            "" => prefix.to_string(),
            "G" | "g" if matches!(prefix, "p" | "q" | "ovq") => format!("{prefix}{suffix}"),
            _ => return Err(bad()),
        };
        let family: Family = tag.parse()?;
        Ok(Factor::Member(FamilyId::new(family, index)?))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Target {
    pub factors: Vec<Factor>,
}

impl FromStr for Target {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let factors = s
            .split('*')
            .map(|f| f.trim().parse())
            .collect::<Result<Vec<Factor>, _>>()?;
        Ok(Target { factors })
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.factors.iter().map(Factor::to_string).collect();
        f.write_str(&parts.join("*"))
    }
}

impl Target {
    /// Products of finite families are exact at their total weight; anything
    /// else is truncated at the families' degree.
    pub fn evaluate(&self, families: &Families) -> PSeries {
        let exact = self.factors.iter().all(|f| f.is_exact());
        let degree = if exact {
            self.factors.iter().map(|f| f.weight()).sum()
        } else {
            families.degree()
        };
        self.factors.iter().fold(PSeries::one(degree), |acc, f| {
            let e = match *f {
                Factor::Member(id) if exact => families.element(id).with_degree(degree).expect("raise"),
                Factor::Member(id) => families.element_at_degree(id),
                Factor::PowerSum(n) => PSeries::power_sum(n, degree),
            };
            &acc * &e
        })
    }
}
