//! The degeneration order on cyclic-group orbits and its induced subposets.
//!
//! A point `(r, k)` stands for the orbit of `p^r` in `Z/p^k Z`. The order is
//! prime-independent: `(r, k) ≥ (s, l)` iff `r ≤ s` and `k − r ≥ l − s`,
//! i.e. the first orbit maps onto the second under some homomorphism.
//! For a partition `λ` the induced subposet on the columns `k ∈ λ` is the
//! combinatorial core of the whole crate: its order ideals parametrize the
//! automorphism orbits of the group of type `λ`.

use std::fmt;

use crate::error::{Error, Result};
use crate::partition::Partition;

/// Default cap on `n` for maximal-chain counting.
pub const DEFAULT_CHAIN_BOUND: u32 = 12;

/// An orbit `(p^r, k)` of a nonzero element of `Z/p^k Z`, stored p-free.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct PosetPoint {
    r: u32,
    k: u32,
}

impl PosetPoint {
    /// Requires `r < k`: the orbit of a nonzero element.
    pub fn new(r: u32, k: u32) -> Self {
        assert!(r < k, "poset point needs r < k, got ({r}, {k})");
        PosetPoint { r, k }
    }

    /// Valuation of the orbit representative.
    pub fn r(&self) -> u32 {
        self.r
    }

    /// Exponent of the ambient cyclic group `Z/p^k Z`.
    pub fn k(&self) -> u32 {
        self.k
    }

    /// Label in the traditional notation, e.g. `(p^2, 5)`, `(p, 3)`, `(1, 7)`.
    pub fn label(&self) -> String {
        match self.r {
            0 => format!("(1, {})", self.k),
            1 => format!("(p, {})", self.k),
            r => format!("(p^{r}, {})", self.k),
        }
    }
}

impl fmt::Display for PosetPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.r, self.k)
    }
}

/// True iff `x ≥ y`: the orbit `x` degenerates to the orbit `y`.
pub fn geq(x: PosetPoint, y: PosetPoint) -> bool {
    x.r <= y.r && x.k - x.r >= y.k - y.r
}

/// The induced subposet on the columns of a partition.
///
/// Points are sorted by column height descending, then by valuation
/// ascending; `covers` holds index pairs `(i, j)` with point `i` covering
/// point `j` (transitive reduction of [`geq`]).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subposet {
    partition: Partition,
    points: Vec<PosetPoint>,
    covers: Vec<(usize, usize)>,
}

impl Subposet {
    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn points(&self) -> &[PosetPoint] {
        &self.points
    }

    pub fn covers(&self) -> &[(usize, usize)] {
        &self.covers
    }

    /// Index of a point within `points`, if present.
    pub fn index_of(&self, point: PosetPoint) -> Option<usize> {
        self.points.iter().position(|&q| q == point)
    }
}

/// Builds the subposet for `λ`: one column of height `k` per distinct part `k`.
pub fn points_of(partition: &Partition) -> Subposet {
    let mut points = Vec::new();
    for &(k, _) in partition.distinct().iter().rev() {
        for r in 0..k {
            points.push(PosetPoint::new(r, k));
        }
    }
    let covers = transitive_reduction(&points);
    Subposet {
        partition: partition.clone(),
        points,
        covers,
    }
}

/// Cover pairs `(i, j)` with `points[i]` covering `points[j]`.
///
/// Cubic in the point count, which never exceeds the sum of distinct parts.
fn transitive_reduction(points: &[PosetPoint]) -> Vec<(usize, usize)> {
    let n = points.len();
    let mut covers = Vec::new();
    for i in 0..n {
        for j in 0..n {
            if i == j || !geq(points[i], points[j]) {
                continue;
            }
            let has_intermediate = (0..n).any(|m| {
                m != i && m != j && geq(points[i], points[m]) && geq(points[m], points[j])
            });
            if !has_intermediate {
                covers.push((i, j));
            }
        }
    }
    covers
}

/// Counts maximal chains from the top of the full staircase poset on
/// columns `1..=n` down to its bottom, by memoized descent along covers.
pub fn count_maximal_chains(n: u32) -> Result<u64> {
    count_maximal_chains_bounded(n, DEFAULT_CHAIN_BOUND)
}

/// Same as [`count_maximal_chains`] with an explicit cap on `n`.
pub fn count_maximal_chains_bounded(n: u32, bound: u32) -> Result<u64> {
    if n == 0 {
        return Err(Error::NonPositivePart("0".into()));
    }
    if n > bound {
        return Err(Error::BoundExceeded {
            what: "chain poset size",
            value: n as u128,
            bound: bound as u128,
        });
    }
    let staircase = Partition::new((1..=n).rev()).expect("n >= 1");
    let poset = points_of(&staircase);
    let points = poset.points();

    // (0, n) is the unique maximal element, (n-1, n) the unique minimal one.
    let top = poset.index_of(PosetPoint::new(0, n)).expect("top exists");
    let bottom = poset
        .index_of(PosetPoint::new(n - 1, n))
        .expect("bottom exists");

    let mut below: Vec<Vec<usize>> = vec![Vec::new(); points.len()];
    for &(i, j) in poset.covers() {
        below[i].push(j);
    }

    fn descend(v: usize, bottom: usize, below: &[Vec<usize>], memo: &mut [Option<u64>]) -> u64 {
        if v == bottom {
            return 1;
        }
        if let Some(count) = memo[v] {
            return count;
        }
        let count = below[v]
            .iter()
            .map(|&w| descend(w, bottom, below, memo))
            .sum();
        memo[v] = Some(count);
        count
    }

    let mut memo = vec![None; points.len()];
    Ok(descend(top, bottom, &below, &mut memo))
}
