//! Partitions: the isomorphism type of a finite abelian p-group.
//!
//! A partition is a non-increasing sequence of positive integers
//! `λ_1 ≥ λ_2 ≥ … ≥ λ_l`. The group of type `λ` at the prime `p` is the
//! direct sum of the cyclic groups `Z/p^{λ_i}Z`.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A partition with positive, non-increasing parts.
///
/// Construction sorts the parts descending and precomputes the distinct
/// part values with their multiplicities, so a `Partition` is always in
/// canonical form.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<u32>,
    /// Distinct part values paired with multiplicities, values ascending.
    distinct: Vec<(u32, u32)>,
}

impl Partition {
    /// Builds a partition from arbitrary positive parts; sorts descending.
    pub fn new(parts: impl IntoIterator<Item = u32>) -> Result<Self> {
        let mut parts: Vec<u32> = parts.into_iter().collect();
        if parts.is_empty() {
            return Err(Error::EmptyInput);
        }
        if let Some(&zero) = parts.iter().find(|&&x| x == 0) {
            return Err(Error::NonPositivePart(zero.to_string()));
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));

        let mut distinct: Vec<(u32, u32)> = Vec::new();
        for &part in parts.iter().rev() {
            match distinct.last_mut() {
                Some((value, mult)) if *value == part => *mult += 1,
                _ => distinct.push((part, 1)),
            }
        }

        Ok(Partition { parts, distinct })
    }

    /// The parts in non-increasing order.
    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Number of parts `l`.
    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        false // construction rejects empty part lists
    }

    /// The weight `n = Σ λ_i`.
    pub fn weight(&self) -> u64 {
        self.parts.iter().map(|&x| x as u64).sum()
    }

    /// Distinct part values with multiplicities, values strictly increasing.
    pub fn distinct(&self) -> &[(u32, u32)] {
        &self.distinct
    }

    /// How many parts equal `k`; zero when `k` does not occur.
    pub fn multiplicity(&self, k: u32) -> u32 {
        self.distinct
            .binary_search_by_key(&k, |&(value, _)| value)
            .map(|idx| self.distinct[idx].1)
            .unwrap_or(0)
    }

    /// True iff `k` occurs as a part.
    pub fn has_part(&self, k: u32) -> bool {
        self.multiplicity(k) > 0
    }

    /// The largest part `λ_1`.
    pub fn max_part(&self) -> u32 {
        self.parts[0]
    }

    /// Canonical comma-separated rendering, e.g. `7,5,3,3,2`.
    pub fn to_compact_string(&self) -> String {
        self.parts
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.to_compact_string())
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses comma-separated positive integers; input order is irrelevant.
    fn from_str(text: &str) -> Result<Self> {
        if text.trim().is_empty() {
            return Err(Error::EmptyInput);
        }
        let mut parts = Vec::new();
        for token in text.split(',') {
            let token = token.trim();
            if token.is_empty() {
                return Err(Error::MalformedToken(token.to_string()));
            }
            // Reject explicit signs so "-3" reports as non-positive, not malformed.
            if let Some(stripped) = token.strip_prefix('-') {
                if stripped.chars().all(|c| c.is_ascii_digit()) && !stripped.is_empty() {
                    return Err(Error::NonPositivePart(token.to_string()));
                }
                return Err(Error::MalformedToken(token.to_string()));
            }
            let value: u32 = token
                .parse()
                .map_err(|_| Error::MalformedToken(token.to_string()))?;
            if value == 0 {
                return Err(Error::NonPositivePart(token.to_string()));
            }
            parts.push(value);
        }
        Partition::new(parts)
    }
}

/// Parses a comma-separated list of positive integers into a partition.
pub fn parse_partition(text: &str) -> Result<Partition> {
    text.parse()
}
