//! Order ideals of the column subposet: the orbit parametrization.
//!
//! An ideal is stored as the r-vector `⟨r_1, …, r_l⟩`, one entry per part,
//! where `r_i` is the least valuation present in column `i` and `r_i = λ_i`
//! encodes an empty column. A vector is an ideal exactly when
//! `r_i ≤ r_{i−1} ≤ r_i + (λ_{i−1} − λ_i)` holds for consecutive indices,
//! so validation, equality, and the lattice operations are all
//! componentwise on r-vectors.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;
use crate::poset::{geq, PosetPoint};

/// An order ideal of the column subposet of a partition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ideal {
    partition: Partition,
    rvec: Vec<u32>,
}

/// A set of pairwise incomparable points, at most one per column.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Antichain {
    points: Vec<PosetPoint>,
}

impl Antichain {
    /// Validates pairwise incomparability and the one-per-column rule.
    pub fn new(mut points: Vec<PosetPoint>) -> Self {
        points.sort_by_key(|point| std::cmp::Reverse(point.k()));
        for (i, &x) in points.iter().enumerate() {
            for &y in &points[i + 1..] {
                assert!(
                    !geq(x, y) && !geq(y, x) && x.k() != y.k(),
                    "not an antichain: {x} and {y} are comparable or share a column"
                );
            }
        }
        Antichain { points }
    }

    /// Points sorted by column height descending.
    pub fn points(&self) -> &[PosetPoint] {
        &self.points
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

/// The boundary polyline of a nonempty ideal: one `(r, k)` vertex per
/// occupied column, listed by column height descending.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Boundary {
    vertices: Vec<(u32, u32)>,
}

impl Boundary {
    pub fn vertices(&self) -> &[(u32, u32)] {
        &self.vertices
    }
}

impl Ideal {
    /// Validates an r-vector against the part ranges and the ideal condition.
    pub fn from_rvec(partition: &Partition, rvec: Vec<u32>) -> Result<Self> {
        let parts = partition.parts();
        if rvec.len() != parts.len() {
            return Err(Error::LengthMismatch {
                expected: parts.len(),
                got: rvec.len(),
            });
        }
        for (i, (&r, &part)) in rvec.iter().zip(parts).enumerate() {
            if r > part {
                return Err(Error::RangeViolation {
                    index: i,
                    value: r as i64,
                    part,
                });
            }
        }
        for i in 1..rvec.len() {
            let gap = parts[i - 1] - parts[i];
            let (lo, hi) = (rvec[i], rvec[i] + gap);
            if rvec[i - 1] < lo || rvec[i - 1] > hi {
                return Err(Error::NotAnIdeal {
                    index: i - 1,
                    value: rvec[i - 1],
                    lo,
                    hi,
                });
            }
        }
        Ok(Ideal {
            partition: partition.clone(),
            rvec,
        })
    }

    /// Like [`Ideal::from_rvec`] but accepts signed entries, so negative
    /// input is reported as a range violation rather than a parse panic.
    pub fn from_signed_rvec(partition: &Partition, rvec: &[i64]) -> Result<Self> {
        let parts = partition.parts();
        if rvec.len() != parts.len() {
            return Err(Error::LengthMismatch {
                expected: parts.len(),
                got: rvec.len(),
            });
        }
        for (i, (&r, &part)) in rvec.iter().zip(parts).enumerate() {
            if r < 0 || r > part as i64 {
                return Err(Error::RangeViolation {
                    index: i,
                    value: r,
                    part,
                });
            }
        }
        Ideal::from_rvec(partition, rvec.iter().map(|&r| r as u32).collect())
    }

    /// The downward closure of a set of points, as an ideal.
    ///
    /// Each generator must lie in the subposet (its column must be a part).
    /// The empty generator set yields the empty ideal.
    pub fn from_generators(partition: &Partition, generators: &[PosetPoint]) -> Result<Self> {
        for g in generators {
            if !partition.has_part(g.k()) {
                return Err(Error::ForeignPoint { r: g.r(), k: g.k() });
            }
        }
        let rvec = partition
            .parts()
            .iter()
            .map(|&part| {
                generators
                    .iter()
                    .filter_map(|g| {
                        // Least s with g ≥ (s, part): s = g.r + max(0, part − g.k),
                        // provided that lands inside the column.
                        let s = g.r() + part.saturating_sub(g.k());
                        (s < part).then_some(s)
                    })
                    .min()
                    .unwrap_or(part)
            })
            .collect();
        let ideal = Ideal::from_rvec(partition, rvec)
            .expect("downward closure always satisfies the ideal condition");
        Ok(ideal)
    }

    /// The empty ideal (the orbit of zero).
    pub fn empty(partition: &Partition) -> Self {
        Ideal {
            partition: partition.clone(),
            rvec: partition.parts().to_vec(),
        }
    }

    /// The full ideal (every point of the subposet).
    pub fn full(partition: &Partition) -> Self {
        Ideal {
            partition: partition.clone(),
            rvec: vec![0; partition.len()],
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn rvec(&self) -> &[u32] {
        &self.rvec
    }

    pub fn is_ideal_empty(&self) -> bool {
        self.rvec
            .iter()
            .zip(self.partition.parts())
            .all(|(&r, &part)| r == part)
    }

    pub fn is_ideal_full(&self) -> bool {
        self.rvec.iter().all(|&r| r == 0)
    }

    /// True iff the point belongs to the ideal.
    pub fn contains(&self, point: PosetPoint) -> bool {
        self.partition
            .parts()
            .iter()
            .zip(&self.rvec)
            .any(|(&part, &r)| part == point.k() && point.r() >= r)
    }

    /// The distinct points of the ideal, one column per distinct part.
    pub fn points(&self) -> Vec<PosetPoint> {
        let mut points = Vec::new();
        for (&part, &r) in self
            .partition
            .parts()
            .iter()
            .zip(&self.rvec)
            .collect::<std::collections::BTreeMap<_, _>>()
        {
            for s in r..part {
                points.push(PosetPoint::new(s, part));
            }
        }
        points.sort_by(|a, b| b.k().cmp(&a.k()).then(a.r().cmp(&b.r())));
        points
    }

    /// True iff `self ⊆ other` (componentwise `r_i(self) ≥ r_i(other)`).
    pub fn is_subideal_of(&self, other: &Ideal) -> Result<bool> {
        if self.partition != other.partition {
            return Err(Error::PartitionMismatch);
        }
        Ok(self.rvec.iter().zip(&other.rvec).all(|(&a, &b)| a >= b))
    }

    /// Lattice join: componentwise minimum of r-vectors.
    pub fn union(&self, other: &Ideal) -> Result<Ideal> {
        self.combine(other, u32::min)
    }

    /// Lattice meet: componentwise maximum of r-vectors.
    pub fn intersection(&self, other: &Ideal) -> Result<Ideal> {
        self.combine(other, u32::max)
    }

    fn combine(&self, other: &Ideal, pick: fn(u32, u32) -> u32) -> Result<Ideal> {
        if self.partition != other.partition {
            return Err(Error::PartitionMismatch);
        }
        let rvec = self
            .rvec
            .iter()
            .zip(&other.rvec)
            .map(|(&a, &b)| pick(a, b))
            .collect();
        Ok(Ideal::from_rvec(&self.partition, rvec)
            .expect("lattice operations preserve the ideal condition"))
    }

    /// The antichain of maximal elements; regenerating its closure gives
    /// back the ideal.
    pub fn max_elements(&self) -> Antichain {
        let mut tops: Vec<PosetPoint> = Vec::new();
        let mut seen_parts = Vec::new();
        for (&part, &r) in self.partition.parts().iter().zip(&self.rvec) {
            if r < part && !seen_parts.contains(&part) {
                seen_parts.push(part);
                tops.push(PosetPoint::new(r, part));
            }
        }
        let maximal: Vec<PosetPoint> = tops
            .iter()
            .copied()
            .filter(|&x| !tops.iter().any(|&y| y != x && geq(y, x)))
            .collect();
        Antichain::new(maximal)
    }

    /// Point count with column multiplicity: `Σ_i (λ_i − r_i)`.
    pub fn weighted_size(&self) -> u64 {
        self.partition
            .parts()
            .iter()
            .zip(&self.rvec)
            .map(|(&part, &r)| (part - r) as u64)
            .sum()
    }

    /// Number of distinct points of `self ∖ smaller`, columns counted once.
    pub fn point_count_difference(&self, smaller: &Ideal) -> Result<u64> {
        if !smaller.is_subideal_of(self)? {
            return Err(Error::NotSubideal);
        }
        let mut seen_parts = Vec::new();
        let mut count = 0u64;
        for ((&part, &r_big), &r_small) in self
            .partition
            .parts()
            .iter()
            .zip(&self.rvec)
            .zip(&smaller.rvec)
        {
            if !seen_parts.contains(&part) {
                seen_parts.push(part);
                count += (r_small - r_big) as u64;
            }
        }
        Ok(count)
    }

    /// Boundary polyline of a nonempty ideal: the vertex `(r_i, λ_i)` for
    /// each index up to the last occupied column, repeated parts collapsed.
    pub fn boundary(&self) -> Result<Boundary> {
        if self.is_ideal_empty() {
            return Err(Error::EmptyIdeal);
        }
        let mut vertices = Vec::new();
        for (&part, &r) in self.partition.parts().iter().zip(&self.rvec) {
            if r == part {
                break; // empty columns form a suffix
            }
            if vertices.last().map(|&(_, k)| k) != Some(part) {
                vertices.push((r, part));
            }
        }
        Ok(Boundary { vertices })
    }

    /// All ideals `I'` with `smaller ⊆ I' ⊆ self`, in the enumeration order
    /// of [`enumerate_ideals`].
    pub fn ideals_between(&self, smaller: &Ideal) -> Result<IdealRange> {
        if !smaller.is_subideal_of(self)? {
            return Err(Error::NotSubideal);
        }
        Ok(IdealRange::new(
            self.partition.clone(),
            self.rvec.clone(),
            smaller.rvec.clone(),
        ))
    }

    /// Compact rendering of the r-vector, e.g. `3,1,0,0,0`.
    pub fn to_compact_string(&self) -> String {
        self.rvec
            .iter()
            .map(|r| r.to_string())
            .collect::<Vec<_>>()
            .join(",")
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<{}>", self.to_compact_string())
    }
}

/// Enumerates every ideal of the subposet of `λ`, from the empty ideal
/// (all `r_i = λ_i`) down to the full ideal (all zero), in descending
/// lexicographic order of r-vectors.
pub fn enumerate_ideals(partition: &Partition) -> IdealRange {
    let lo = vec![0; partition.len()];
    let hi = partition.parts().to_vec();
    IdealRange::new(partition.clone(), lo, hi)
}

/// Restartable stream over the r-vectors between two componentwise bounds
/// that satisfy the ideal condition.
#[derive(Debug, Clone)]
pub struct IdealRange {
    partition: Partition,
    lo: Vec<u32>,
    hi: Vec<u32>,
    current: Option<Vec<u32>>,
}

impl IdealRange {
    fn new(partition: Partition, lo: Vec<u32>, hi: Vec<u32>) -> Self {
        let mut range = IdealRange {
            partition,
            lo,
            hi,
            current: None,
        };
        range.current = Some(range.maximal_from(0, &[]));
        range
    }

    /// Greatest valid completion from position `start`, given a fixed prefix.
    fn maximal_from(&self, start: usize, prefix: &[u32]) -> Vec<u32> {
        let parts = self.partition.parts();
        let mut rvec = prefix.to_vec();
        for i in start..parts.len() {
            let value = if i == 0 {
                self.hi[0]
            } else {
                self.hi[i].min(rvec[i - 1])
            };
            rvec.push(value);
        }
        rvec
    }

    /// Least admissible value at position `i` given the preceding entry.
    fn floor_at(&self, i: usize, rvec: &[u32]) -> u32 {
        if i == 0 {
            return self.lo[0];
        }
        let parts = self.partition.parts();
        let gap = parts[i - 1] - parts[i];
        self.lo[i].max(rvec[i - 1].saturating_sub(gap))
    }
}

impl Iterator for IdealRange {
    type Item = Ideal;

    fn next(&mut self) -> Option<Ideal> {
        let rvec = self.current.take()?;
        // Descending lexicographic successor: decrement the rightmost entry
        // that sits above its floor, then maximize everything after it.
        for i in (0..rvec.len()).rev() {
            if rvec[i] > self.floor_at(i, &rvec) {
                let mut prefix = rvec[..=i].to_vec();
                prefix[i] -= 1;
                self.current = Some(self.maximal_from(i + 1, &prefix));
                break;
            }
        }
        Some(Ideal {
            partition: self.partition.clone(),
            rvec,
        })
    }
}
