//! Brute-force ground truth at desk scale.
//!
//! Everything here works with concrete group elements and exhaustive
//! enumeration: homomorphisms as matrices of residues, automorphisms
//! detected by checking bijectivity on the full element set, orbits by
//! union-find closure under the automorphism action. None of it shares
//! reasoning with the combinatorial modules, which is the point — the two
//! pipelines validate each other.
//!
//! All loops are guarded by hard size bounds and fail loudly with
//! `BoundExceeded` instead of truncating.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::arith::{is_prime, saturating_pow_u128};
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::partition::Partition;
use crate::poset::{geq, PosetPoint};

/// Size guards for the exponential enumeration loops.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Bounds {
    /// Cap on the homomorphism space `p^{Σ min(λ_j, μ_i)}`.
    pub max_hom_space: u128,
    /// Cap on the group order `p^{Σ λ_i}`.
    pub max_group_order: u128,
}

impl Bounds {
    pub const DEFAULT_HOM_SPACE: u128 = 1 << 22;
    pub const DEFAULT_GROUP_ORDER: u128 = 1 << 20;

    /// Overrides the hom-space cap, keeping the group-order default.
    pub fn with_max_hom_space(space: u128) -> Self {
        Bounds {
            max_hom_space: space,
            ..Bounds::default()
        }
    }
}

impl Default for Bounds {
    fn default() -> Self {
        Bounds {
            max_hom_space: Self::DEFAULT_HOM_SPACE,
            max_group_order: Self::DEFAULT_GROUP_ORDER,
        }
    }
}

/// A concrete element of the group of type `λ` at the prime `p`, stored
/// as one residue per cyclic summand.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct GroupElement {
    partition: Partition,
    p: u64,
    residues: Vec<BigUint>,
}

impl GroupElement {
    /// Validates that each residue is reduced modulo `p^{λ_i}`.
    pub fn new(partition: &Partition, p: u64, residues: Vec<BigUint>) -> Result<Self> {
        if residues.len() != partition.len() {
            return Err(Error::LengthMismatch {
                expected: partition.len(),
                got: residues.len(),
            });
        }
        for (i, (residue, &part)) in residues.iter().zip(partition.parts()).enumerate() {
            if *residue >= BigUint::from(p).pow(part) {
                return Err(Error::RangeViolation {
                    index: i,
                    value: i64::try_from(residue).unwrap_or(i64::MAX),
                    part,
                });
            }
        }
        Ok(GroupElement {
            partition: partition.clone(),
            p,
            residues,
        })
    }

    /// Convenience constructor from machine integers.
    pub fn from_u64s(partition: &Partition, p: u64, residues: &[u64]) -> Result<Self> {
        GroupElement::new(
            partition,
            p,
            residues.iter().map(|&r| BigUint::from(r)).collect(),
        )
    }

    /// The zero element.
    pub fn zero(partition: &Partition, p: u64) -> Self {
        GroupElement {
            partition: partition.clone(),
            p,
            residues: vec![BigUint::zero(); partition.len()],
        }
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn residues(&self) -> &[BigUint] {
        &self.residues
    }

    pub fn is_zero(&self) -> bool {
        self.residues.iter().all(|r| r.is_zero())
    }

    /// Componentwise sum modulo `p^{λ_i}`.
    pub fn add(&self, other: &GroupElement) -> Result<GroupElement> {
        if self.partition != other.partition {
            return Err(Error::ShapeMismatch);
        }
        if self.p != other.p {
            return Err(Error::PrimeMismatch(self.p, other.p));
        }
        let residues = self
            .residues
            .iter()
            .zip(&other.residues)
            .zip(self.partition.parts())
            .map(|((a, b), &part)| (a + b) % BigUint::from(self.p).pow(part))
            .collect();
        Ok(GroupElement {
            partition: self.partition.clone(),
            p: self.p,
            residues,
        })
    }
}

/// p-adic valuation of a nonzero residue.
fn valuation(residue: &BigUint, p: u64) -> u32 {
    let p = BigUint::from(p);
    let mut value = residue.clone();
    let mut v = 0u32;
    while (&value % &p).is_zero() {
        value /= &p;
        v += 1;
    }
    v
}

/// The orbit points of the nonzero coordinates: the generators of the
/// element's ideal, inside the fundamental poset.
fn generator_points(element: &GroupElement) -> Vec<PosetPoint> {
    element
        .residues()
        .iter()
        .zip(element.partition().parts())
        .filter(|(residue, _)| !residue.is_zero())
        .map(|(residue, &part)| PosetPoint::new(valuation(residue, element.prime()), part))
        .collect()
}

/// The ideal generated by the orbits of the nonzero coordinates.
pub fn ideal_of_element(element: &GroupElement) -> Ideal {
    Ideal::from_generators(element.partition(), &generator_points(element))
        .expect("coordinate orbits always lie in the column subposet")
}

/// The canonical representative of the orbit labeled by an ideal: for each
/// maximal element `(r, k)` put `p^r` at the first coordinate of part `k`.
pub fn canonical_rep(ideal: &Ideal, p: u64) -> GroupElement {
    let partition = ideal.partition();
    let mut residues = vec![BigUint::zero(); partition.len()];
    for point in ideal.max_elements().points() {
        let index = partition
            .parts()
            .iter()
            .position(|&part| part == point.k())
            .expect("maximal elements live in columns of the partition");
        residues[index] = BigUint::from(p).pow(point.r());
    }
    GroupElement {
        partition: partition.clone(),
        p,
        residues,
    }
}

/// A homomorphism between groups of types `λ → μ` as a matrix of residues:
/// entry `(i, j)` is the image of the `j`-th source generator in
/// `Z/p^{μ_i}Z`, and must be divisible by `p^{max(0, μ_i − λ_j)}` for the
/// map to be well defined.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HomMatrix {
    source: Partition,
    target: Partition,
    p: u64,
    /// Row-major, `target.len()` rows by `source.len()` columns.
    entries: Vec<BigUint>,
}

impl HomMatrix {
    pub fn new(
        source: &Partition,
        target: &Partition,
        p: u64,
        entries: Vec<BigUint>,
    ) -> Result<Self> {
        if entries.len() != source.len() * target.len() {
            return Err(Error::LengthMismatch {
                expected: source.len() * target.len(),
                got: entries.len(),
            });
        }
        for (i, &target_part) in target.parts().iter().enumerate() {
            for (j, &source_part) in source.parts().iter().enumerate() {
                let entry = &entries[i * source.len() + j];
                if *entry >= BigUint::from(p).pow(target_part) {
                    return Err(Error::RangeViolation {
                        index: i * source.len() + j,
                        value: i64::try_from(entry).unwrap_or(i64::MAX),
                        part: target_part,
                    });
                }
                let required = target_part.saturating_sub(source_part);
                if required > 0 && !(entry % BigUint::from(p).pow(required)).is_zero() {
                    return Err(Error::ShapeMismatch);
                }
            }
        }
        Ok(HomMatrix {
            source: source.clone(),
            target: target.clone(),
            p,
            entries,
        })
    }

    pub fn identity(partition: &Partition, p: u64) -> Self {
        let l = partition.len();
        let mut entries = vec![BigUint::zero(); l * l];
        for i in 0..l {
            entries[i * l + i] = BigUint::from(1u32);
        }
        HomMatrix {
            source: partition.clone(),
            target: partition.clone(),
            p,
            entries,
        }
    }

    pub fn source(&self) -> &Partition {
        &self.source
    }

    pub fn target(&self) -> &Partition {
        &self.target
    }

    pub fn prime(&self) -> u64 {
        self.p
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigUint {
        &self.entries[row * self.source.len() + col]
    }
}

/// Applies a homomorphism: `b_i = Σ_j c_{ij} · a_j mod p^{μ_i}`.
pub fn apply_hom(hom: &HomMatrix, element: &GroupElement) -> Result<GroupElement> {
    if element.partition() != &hom.source {
        return Err(Error::ShapeMismatch);
    }
    if element.prime() != hom.p {
        return Err(Error::PrimeMismatch(hom.p, element.prime()));
    }
    let residues = hom
        .target
        .parts()
        .iter()
        .enumerate()
        .map(|(i, &target_part)| {
            let modulus = BigUint::from(hom.p).pow(target_part);
            element
                .residues()
                .iter()
                .enumerate()
                .fold(BigUint::zero(), |acc, (j, a)| {
                    (acc + hom.entry(i, j) * a) % &modulus
                })
        })
        .collect();
    Ok(GroupElement {
        partition: hom.target.clone(),
        p: hom.p,
        residues,
    })
}

/// The full space of homomorphisms `λ → μ` at `p`, addressable by index.
///
/// Entry `(i, j)` ranges over `p^{min(λ_j, μ_i)}` multiples of
/// `p^{max(0, μ_i − λ_j)}`; a flat mixed-radix index enumerates every
/// matrix exactly once.
#[derive(Debug, Clone)]
pub struct HomSpace {
    source: Partition,
    target: Partition,
    p: u64,
    /// Number of choices per entry, row-major.
    radices: Vec<u64>,
    len: u128,
}

impl HomSpace {
    pub fn new(source: &Partition, target: &Partition, p: u64, bounds: Bounds) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let exponent_sum: u64 = target
            .parts()
            .iter()
            .flat_map(|&ti| source.parts().iter().map(move |&sj| ti.min(sj) as u64))
            .sum();
        let len = saturating_pow_u128(p, exponent_sum);
        if len > bounds.max_hom_space {
            return Err(Error::BoundExceeded {
                what: "homomorphism space",
                value: len,
                bound: bounds.max_hom_space,
            });
        }
        let radices = target
            .parts()
            .iter()
            .flat_map(|&ti| source.parts().iter().map(move |&sj| p.pow(ti.min(sj))))
            .collect();
        Ok(HomSpace {
            source: source.clone(),
            target: target.clone(),
            p,
            radices,
            len,
        })
    }

    pub fn len(&self) -> u128 {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false // there is always at least the zero map
    }

    /// Decodes a flat index into the matrix it addresses.
    pub fn hom_at(&self, index: u128) -> HomMatrix {
        debug_assert!(index < self.len);
        let mut remaining = index;
        let mut entries = vec![BigUint::zero(); self.radices.len()];
        for (slot, &radix) in self.radices.iter().enumerate().rev() {
            let digit = (remaining % radix as u128) as u64;
            remaining /= radix as u128;
            let row = slot / self.source.len();
            let col = slot % self.source.len();
            let step = self.target.parts()[row].saturating_sub(self.source.parts()[col]);
            entries[slot] = BigUint::from(digit) * BigUint::from(self.p).pow(step);
        }
        HomMatrix {
            source: self.source.clone(),
            target: self.target.clone(),
            p: self.p,
            entries,
        }
    }

    /// Streams every homomorphism exactly once, in index order.
    pub fn iter(&self) -> impl Iterator<Item = HomMatrix> + '_ {
        (0..self.len).map(|index| self.hom_at(index))
    }
}

/// Validates the guards and returns the addressable hom space.
pub fn enumerate_homs(
    source: &Partition,
    target: &Partition,
    p: u64,
    bounds: Bounds,
) -> Result<HomSpace> {
    HomSpace::new(source, target, p, bounds)
}

/// The elements of the group of type `λ` at `p`, addressable by index in
/// lexicographic residue order (first coordinate most significant).
#[derive(Debug, Clone)]
pub struct ElementSpace {
    partition: Partition,
    p: u64,
    moduli: Vec<u64>,
    order: u128,
}

impl ElementSpace {
    pub fn new(partition: &Partition, p: u64, bounds: Bounds) -> Result<Self> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let order = saturating_pow_u128(p, partition.weight());
        if order > bounds.max_group_order {
            return Err(Error::BoundExceeded {
                what: "group order",
                value: order,
                bound: bounds.max_group_order,
            });
        }
        let moduli = partition.parts().iter().map(|&part| p.pow(part)).collect();
        Ok(ElementSpace {
            partition: partition.clone(),
            p,
            moduli,
            order,
        })
    }

    pub fn order(&self) -> u128 {
        self.order
    }

    pub fn element_at(&self, index: u128) -> GroupElement {
        debug_assert!(index < self.order);
        let mut remaining = index;
        let mut residues = vec![BigUint::zero(); self.moduli.len()];
        for (i, &modulus) in self.moduli.iter().enumerate().rev() {
            residues[i] = BigUint::from((remaining % modulus as u128) as u64);
            remaining /= modulus as u128;
        }
        GroupElement {
            partition: self.partition.clone(),
            p: self.p,
            residues,
        }
    }

    pub fn index_of(&self, element: &GroupElement) -> u128 {
        element
            .residues()
            .iter()
            .zip(&self.moduli)
            .fold(0u128, |acc, (residue, &modulus)| {
                acc * modulus as u128
                    + u64::try_from(residue).expect("residue below a u64 modulus") as u128
            })
    }

    pub fn iter(&self) -> impl Iterator<Item = GroupElement> + '_ {
        (0..self.order).map(|index| self.element_at(index))
    }
}

/// The image table of an endomorphism: position `i` holds the index of the
/// image of element `i`.
fn image_table(hom: &HomMatrix, space: &ElementSpace) -> Vec<u32> {
    assert!(space.order() <= u32::MAX as u128, "group too large to tabulate");
    (0..space.order())
        .map(|index| {
            let image = apply_hom(hom, &space.element_at(index)).expect("shapes match");
            space.index_of(&image) as u32
        })
        .collect()
}

fn is_permutation(table: &[u32]) -> bool {
    let mut seen = vec![false; table.len()];
    for &image in table {
        if seen[image as usize] {
            return false;
        }
        seen[image as usize] = true;
    }
    true
}

/// Exhaustive bijectivity check over the full element set.
pub fn is_automorphism(hom: &HomMatrix, bounds: Bounds) -> Result<bool> {
    if hom.source != hom.target {
        return Err(Error::ShapeMismatch);
    }
    let space = ElementSpace::new(&hom.source, hom.p, bounds)?;
    Ok(is_permutation(&image_table(hom, &space)))
}

/// Image tables of every automorphism, in hom-index order.
///
/// This is the expensive scan over the endomorphism space; the parallel
/// build partitions it across the thread pool.
fn automorphism_tables(
    partition: &Partition,
    p: u64,
    bounds: Bounds,
) -> Result<(ElementSpace, Vec<Vec<u32>>)> {
    let homs = HomSpace::new(partition, partition, p, bounds)?;
    let elements = ElementSpace::new(partition, p, bounds)?;
    let tables = map_indices(homs.len(), |index| {
        let table = image_table(&homs.hom_at(index), &elements);
        is_permutation(&table).then_some(table)
    });
    let tables = tables.into_iter().flatten().collect();
    Ok((elements, tables))
}

#[cfg(feature = "parallel")]
fn map_indices<T: Send>(len: u128, f: impl Fn(u128) -> T + Sync) -> Vec<T> {
    use rayon::prelude::*;
    let len = u64::try_from(len).expect("enumeration spaces fit in u64");
    (0..len).into_par_iter().map(|i| f(i as u128)).collect()
}

#[cfg(not(feature = "parallel"))]
fn map_indices<T>(len: u128, f: impl Fn(u128) -> T) -> Vec<T> {
    let len = u64::try_from(len).expect("enumeration spaces fit in u64");
    (0..len).map(|i| f(i as u128)).collect()
}

/// Disjoint-set forest with path compression; final labeling is by the
/// minimum member, so the result is independent of merge order.
struct UnionFind {
    parent: Vec<u32>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n as u32).collect(),
        }
    }

    fn find(&mut self, x: u32) -> u32 {
        let mut root = x;
        while self.parent[root as usize] != root {
            root = self.parent[root as usize];
        }
        let mut cursor = x;
        while self.parent[cursor as usize] != root {
            let next = self.parent[cursor as usize];
            self.parent[cursor as usize] = root;
            cursor = next;
        }
        root
    }

    fn union(&mut self, x: u32, y: u32) {
        let (rx, ry) = (self.find(x), self.find(y));
        if rx != ry {
            // Keep the smaller index as root, so roots are class minima.
            let (lo, hi) = (rx.min(ry), rx.max(ry));
            self.parent[hi as usize] = lo;
        }
    }

    /// Classes sorted by their minimum member, members ascending.
    fn classes(&mut self) -> Vec<Vec<u32>> {
        let n = self.parent.len();
        let mut by_root: std::collections::BTreeMap<u32, Vec<u32>> = Default::default();
        for x in 0..n as u32 {
            by_root.entry(self.find(x)).or_default().push(x);
        }
        by_root.into_values().collect()
    }
}

/// One orbit of the automorphism action, with its members in enumeration
/// order and the ideal labeling it.
#[derive(Debug, Clone)]
pub struct Orbit {
    pub label: Ideal,
    pub elements: Vec<GroupElement>,
}

/// The orbit partition of the full element set.
#[derive(Debug, Clone)]
pub struct OrbitPartition {
    orbits: Vec<Orbit>,
}

impl OrbitPartition {
    pub fn orbits(&self) -> &[Orbit] {
        &self.orbits
    }

    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }

    /// The orbit containing a given element, by exhaustive lookup.
    pub fn orbit_of(&self, element: &GroupElement) -> Option<&Orbit> {
        self.orbits
            .iter()
            .find(|orbit| orbit.elements.contains(element))
    }

    /// The orbit carrying a given ideal label.
    pub fn orbit_labeled(&self, ideal: &Ideal) -> Option<&Orbit> {
        self.orbits.iter().find(|orbit| orbit.label == *ideal)
    }
}

fn orbits_from_tables(elements: &ElementSpace, tables: &[Vec<u32>]) -> OrbitPartition {
    let mut dsu = UnionFind::new(elements.order() as usize);
    for table in tables {
        for (from, &to) in table.iter().enumerate() {
            dsu.union(from as u32, to);
        }
    }
    let orbits = dsu
        .classes()
        .into_iter()
        .map(|class| {
            let members: Vec<GroupElement> = class
                .into_iter()
                .map(|index| elements.element_at(index as u128))
                .collect();
            Orbit {
                label: ideal_of_element(&members[0]),
                elements: members,
            }
        })
        .collect();
    OrbitPartition { orbits }
}

/// Exhaustive orbit computation: closes the element set under every
/// automorphism and labels each orbit by the ideal of its members.
pub fn brute_orbits(partition: &Partition, p: u64, bounds: Bounds) -> Result<OrbitPartition> {
    let (elements, tables) = automorphism_tables(partition, p, bounds)?;
    Ok(orbits_from_tables(&elements, &tables))
}

/// Sequential reference for [`brute_orbits`]; the benches compare the two.
pub fn brute_orbits_seq(partition: &Partition, p: u64, bounds: Bounds) -> Result<OrbitPartition> {
    let homs = HomSpace::new(partition, partition, p, bounds)?;
    let elements = ElementSpace::new(partition, p, bounds)?;
    let tables: Vec<Vec<u32>> = homs
        .iter()
        .map(|hom| image_table(&hom, &elements))
        .filter(|table| is_permutation(table))
        .collect();
    Ok(orbits_from_tables(&elements, &tables))
}

/// True iff some homomorphism carries `a` to `b`, by exhaustive search.
pub fn brute_degenerates(a: &GroupElement, b: &GroupElement, bounds: Bounds) -> Result<bool> {
    if a.prime() != b.prime() {
        return Err(Error::PrimeMismatch(a.prime(), b.prime()));
    }
    let homs = HomSpace::new(a.partition(), b.partition(), a.prime(), bounds)?;
    let witness = homs
        .iter()
        .any(|hom| apply_hom(&hom, a).expect("shapes match") == *b);
    Ok(witness)
}

/// True iff `a` degenerates to `b`, decided purely on generator points:
/// every orbit point of `b` must sit below some orbit point of `a` in the
/// fundamental poset. No homomorphism is ever enumerated.
pub fn structural_degenerates(a: &GroupElement, b: &GroupElement) -> Result<bool> {
    if a.prime() != b.prime() {
        return Err(Error::PrimeMismatch(a.prime(), b.prime()));
    }
    let gens_a = generator_points(a);
    let gens_b = generator_points(b);
    Ok(gens_b.iter().all(|y| gens_a.iter().any(|x| geq(*x, *y))))
}

/// One orbit of cosets in a characteristic subquotient.
#[derive(Debug, Clone)]
pub struct SubquotientOrbit {
    pub label: Ideal,
    /// Canonical representatives (minimal element of each coset), in
    /// enumeration order.
    pub coset_reps: Vec<GroupElement>,
}

/// Orbits of the automorphism action on the cosets of one characteristic
/// subgroup inside another.
pub fn brute_subquotient_orbits(
    smaller: &Ideal,
    bigger: &Ideal,
    p: u64,
    bounds: Bounds,
) -> Result<Vec<SubquotientOrbit>> {
    if !smaller.is_subideal_of(bigger)? {
        return Err(Error::NotSubideal);
    }
    let partition = bigger.partition();
    let (elements, tables) = automorphism_tables(partition, p, bounds)?;

    // Member sets of the two characteristic subgroups, by element index.
    let in_bigger: Vec<bool> = (0..elements.order())
        .map(|i| {
            ideal_of_element(&elements.element_at(i))
                .is_subideal_of(bigger)
                .expect("same partition")
        })
        .collect();
    let subgroup_small: Vec<u128> = (0..elements.order())
        .filter(|&i| {
            ideal_of_element(&elements.element_at(i))
                .is_subideal_of(smaller)
                .expect("same partition")
        })
        .collect();

    // Assign each member of the big subgroup to a coset, keyed by the
    // minimal element index it contains; coset ids in discovery order.
    let mut coset_of: Vec<Option<u32>> = vec![None; elements.order() as usize];
    let mut coset_reps: Vec<u128> = Vec::new();
    for index in 0..elements.order() {
        if !in_bigger[index as usize] || coset_of[index as usize].is_some() {
            continue;
        }
        let id = coset_reps.len() as u32;
        coset_reps.push(index);
        let base = elements.element_at(index);
        for offset_index in &subgroup_small {
            let shifted = base
                .add(&elements.element_at(*offset_index))
                .expect("same group");
            coset_of[elements.index_of(&shifted) as usize] = Some(id);
        }
    }

    // Close the coset set under the automorphism action.
    let mut dsu = UnionFind::new(coset_reps.len());
    for table in &tables {
        for (id, &rep) in coset_reps.iter().enumerate() {
            let image_coset = coset_of[table[rep as usize] as usize]
                .expect("automorphisms preserve characteristic subgroups");
            dsu.union(id as u32, image_coset);
        }
    }

    let orbits = dsu
        .classes()
        .into_iter()
        .map(|class| {
            let reps: Vec<GroupElement> = class
                .iter()
                .map(|&id| elements.element_at(coset_reps[id as usize]))
                .collect();
            let label = ideal_of_element(&reps[0])
                .union(smaller)
                .expect("same partition");
            SubquotientOrbit {
                label,
                coset_reps: reps,
            }
        })
        .collect();
    Ok(orbits)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideal::enumerate_ideals;
    use crate::orbit::orbit_size_product;
    use crate::partition::parse_partition;
    use num_bigint::BigInt;

    fn running() -> Partition {
        parse_partition("7,5,3,3,2").unwrap()
    }

    fn two_one() -> Partition {
        parse_partition("2,1").unwrap()
    }

    #[test]
    fn element_validation() {
        let p = two_one();
        assert!(GroupElement::from_u64s(&p, 2, &[3, 1]).is_ok());
        assert_eq!(
            GroupElement::from_u64s(&p, 2, &[4, 0]).unwrap_err(),
            Error::RangeViolation {
                index: 0,
                value: 4,
                part: 2
            }
        );
        assert_eq!(
            GroupElement::from_u64s(&p, 2, &[0]).unwrap_err(),
            Error::LengthMismatch {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn ideal_of_element_matches_worked_example() {
        let a = GroupElement::from_u64s(&running(), 2, &[32, 2, 4, 1, 2]).unwrap();
        assert_eq!(ideal_of_element(&a).rvec(), &[3, 1, 0, 0, 0]);

        let zero = GroupElement::zero(&running(), 2);
        assert!(ideal_of_element(&zero).is_ideal_empty());

        let c = GroupElement::from_u64s(&two_one(), 3, &[6, 0]).unwrap();
        assert_eq!(ideal_of_element(&c).rvec(), &[1, 1]);
    }

    #[test]
    fn canonical_reps_match_worked_example() {
        let a = Ideal::from_rvec(&running(), vec![3, 1, 0, 0, 0]).unwrap();
        let rep = canonical_rep(&a, 2);
        assert_eq!(rep.residues(), &[0u32, 2, 1, 0, 0].map(BigUint::from));
        assert_eq!(ideal_of_element(&rep), a);

        let b = Ideal::from_rvec(&running(), vec![4, 3, 1, 1, 1]).unwrap();
        let rep_b = canonical_rep(&b, 2);
        assert_eq!(rep_b.residues(), &[16u32, 0, 2, 0, 0].map(BigUint::from));
        assert_eq!(ideal_of_element(&rep_b), b);

        assert!(canonical_rep(&Ideal::empty(&running()), 2).is_zero());
    }

    #[test]
    fn hom_application() {
        let p = two_one();
        let a = GroupElement::from_u64s(&p, 2, &[3, 1]).unwrap();
        let id = HomMatrix::identity(&p, 2);
        assert_eq!(apply_hom(&id, &a).unwrap(), a);

        let zero = HomMatrix::new(&p, &p, 2, vec![BigUint::zero(); 4]).unwrap();
        assert!(apply_hom(&zero, &a).unwrap().is_zero());

        // 1 ↦ 2 realizes the degeneration from Z/2 into Z/4.
        let one = parse_partition("1").unwrap();
        let two = parse_partition("2").unwrap();
        let doubling = HomMatrix::new(&one, &two, 2, vec![BigUint::from(2u32)]).unwrap();
        let source = GroupElement::from_u64s(&one, 2, &[1]).unwrap();
        let image = apply_hom(&doubling, &source).unwrap();
        assert_eq!(image.residues(), &[BigUint::from(2u32)]);
    }

    #[test]
    fn hom_matrix_validation() {
        let one = parse_partition("1").unwrap();
        let two = parse_partition("2").unwrap();
        // A map Z/2 → Z/4 must land in the 2-torsion: entry 1 is invalid.
        assert_eq!(
            HomMatrix::new(&one, &two, 2, vec![BigUint::from(1u32)]).unwrap_err(),
            Error::ShapeMismatch
        );
        assert!(HomMatrix::new(&one, &two, 2, vec![BigUint::from(2u32)]).is_ok());
    }

    #[test]
    fn hom_space_counts() {
        let bounds = Bounds::default();
        let one = parse_partition("1").unwrap();
        assert_eq!(enumerate_homs(&one, &one, 2, bounds).unwrap().len(), 2);

        let p = two_one();
        assert_eq!(enumerate_homs(&p, &p, 2, bounds).unwrap().len(), 32);

        let two = parse_partition("2").unwrap();
        assert_eq!(enumerate_homs(&two, &one, 3, bounds).unwrap().len(), 3);

        assert_eq!(
            enumerate_homs(&p, &p, 4, bounds).unwrap_err(),
            Error::NotPrime(4)
        );
        assert!(matches!(
            enumerate_homs(&running(), &running(), 2, bounds).unwrap_err(),
            Error::BoundExceeded { .. }
        ));
    }

    #[test]
    fn hom_space_enumerates_distinct_valid_matrices() {
        let p = two_one();
        let space = enumerate_homs(&p, &p, 2, Bounds::default()).unwrap();
        let homs: Vec<HomMatrix> = space.iter().collect();
        assert_eq!(homs.len(), 32);
        let mut distinct = homs.clone();
        distinct.sort_by_key(|h| format!("{h:?}"));
        distinct.dedup();
        assert_eq!(distinct.len(), 32);
        for hom in &homs {
            let entries: Vec<BigUint> = (0..2)
                .flat_map(|i| (0..2).map(move |j| hom.entry(i, j).clone()))
                .collect();
            assert!(HomMatrix::new(&p, &p, 2, entries).is_ok());
        }
    }

    #[test]
    fn automorphism_detection() {
        let bounds = Bounds::default();
        let p = two_one();
        assert!(is_automorphism(&HomMatrix::identity(&p, 2), bounds).unwrap());
        let zero = HomMatrix::new(&p, &p, 2, vec![BigUint::zero(); 4]).unwrap();
        assert!(!is_automorphism(&zero, bounds).unwrap());

        let space = enumerate_homs(&p, &p, 2, bounds).unwrap();
        let aut_count = space
            .iter()
            .filter(|hom| is_automorphism(hom, bounds).unwrap())
            .count();
        assert_eq!(aut_count, 8);
    }

    #[test]
    fn brute_orbits_two_one_at_two() {
        let orbits = brute_orbits(&two_one(), 2, Bounds::default()).unwrap();
        assert_eq!(orbits.len(), 4);
        let mut sizes: Vec<usize> = orbits.orbits().iter().map(|o| o.elements.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 1, 2, 4]);
    }

    #[test]
    fn brute_orbits_one_at_three() {
        let one = parse_partition("1").unwrap();
        let orbits = brute_orbits(&one, 3, Bounds::default()).unwrap();
        let mut sizes: Vec<usize> = orbits.orbits().iter().map(|o| o.elements.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2]);
    }

    #[test]
    fn brute_orbits_two_one_at_three() {
        let orbits = brute_orbits(&two_one(), 3, Bounds::default()).unwrap();
        let mut sizes: Vec<usize> = orbits.orbits().iter().map(|o| o.elements.len()).collect();
        sizes.sort_unstable();
        assert_eq!(sizes, vec![1, 2, 6, 18]);
    }

    #[test]
    fn brute_orbit_sizes_match_polynomials() {
        for (parts, p) in [("2,1", 2u64), ("2,1", 3), ("2,2", 2)] {
            let partition = parse_partition(parts).unwrap();
            let orbits = brute_orbits(&partition, p, Bounds::default()).unwrap();
            assert_eq!(
                orbits.len() as u128,
                crate::orbit::count_orbits_product(&partition)
            );
            for orbit in orbits.orbits() {
                let expected = orbit_size_product(&orbit.label).unwrap().evaluate(p);
                assert_eq!(BigInt::from(orbit.elements.len()), expected);
                for member in &orbit.elements {
                    assert_eq!(ideal_of_element(member), orbit.label);
                }
            }
        }
    }

    #[test]
    fn seq_and_default_orbits_agree() {
        let partition = parse_partition("3,1").unwrap();
        let par = brute_orbits(&partition, 2, Bounds::default()).unwrap();
        let seq = brute_orbits_seq(&partition, 2, Bounds::default()).unwrap();
        assert_eq!(par.len(), seq.len());
        for (a, b) in par.orbits().iter().zip(seq.orbits()) {
            assert_eq!(a.label, b.label);
            assert_eq!(a.elements, b.elements);
        }
    }

    #[test]
    fn degeneration_checks() {
        let bounds = Bounds::default();
        let one = parse_partition("1").unwrap();
        let two = parse_partition("2").unwrap();

        let a = GroupElement::from_u64s(&one, 2, &[1]).unwrap();
        let b = GroupElement::from_u64s(&two, 2, &[2]).unwrap();
        assert!(brute_degenerates(&a, &b, bounds).unwrap());
        assert!(structural_degenerates(&a, &b).unwrap());

        // The reverse direction fails: valuations cannot decrease.
        let c = GroupElement::from_u64s(&two, 2, &[2]).unwrap();
        let d = GroupElement::from_u64s(&one, 2, &[1]).unwrap();
        assert!(!brute_degenerates(&c, &d, bounds).unwrap());
        assert!(!structural_degenerates(&c, &d).unwrap());

        // Anything degenerates to zero: the zero map is a witness.
        let zero = GroupElement::zero(&one, 2);
        assert!(brute_degenerates(&a, &zero, bounds).unwrap());
        assert!(structural_degenerates(&a, &zero).unwrap());

        let e3 = GroupElement::from_u64s(&one, 3, &[1]).unwrap();
        assert_eq!(
            structural_degenerates(&a, &e3).unwrap_err(),
            Error::PrimeMismatch(2, 3)
        );
    }

    #[test]
    fn structural_matches_worked_example() {
        let a = GroupElement::from_u64s(&running(), 2, &[32, 2, 4, 1, 2]).unwrap();
        let b = GroupElement::from_u64s(&running(), 2, &[16, 16, 2, 2, 0]).unwrap();
        assert!(structural_degenerates(&a, &b).unwrap());
        assert!(!structural_degenerates(&b, &a).unwrap());
    }

    #[test]
    fn structural_agrees_with_brute_on_all_pairs() {
        let bounds = Bounds::default();
        let partition = two_one();
        let elements = ElementSpace::new(&partition, 2, bounds).unwrap();
        let all: Vec<GroupElement> = elements.iter().collect();
        for a in &all {
            for b in &all {
                assert_eq!(
                    structural_degenerates(a, b).unwrap(),
                    brute_degenerates(a, b, bounds).unwrap(),
                    "pair ({a:?}, {b:?})"
                );
            }
        }
    }

    #[test]
    fn subquotient_orbits_count_matches_interval() {
        let bounds = Bounds::default();
        let partition = two_one();
        let all: Vec<Ideal> = enumerate_ideals(&partition).collect();
        for big in &all {
            for small in &all {
                if !small.is_subideal_of(big).unwrap() {
                    continue;
                }
                let orbits = brute_subquotient_orbits(small, big, 2, bounds).unwrap();
                let expected = big.ideals_between(small).unwrap().count();
                assert_eq!(orbits.len(), expected, "interval [{small}, {big}]");
            }
        }
    }

    #[test]
    fn subquotient_orbit_of_equal_ideals_is_single_zero_coset() {
        let partition = two_one();
        let ideal = Ideal::from_rvec(&partition, vec![1, 1]).unwrap();
        let orbits = brute_subquotient_orbits(&ideal, &ideal, 2, Bounds::default()).unwrap();
        assert_eq!(orbits.len(), 1);
        assert_eq!(orbits[0].coset_reps.len(), 1);
        assert!(orbits[0].coset_reps[0].is_zero());
    }

    #[test]
    fn subquotient_by_trivial_subgroup_recovers_plain_orbits() {
        let partition = two_one();
        let empty = Ideal::empty(&partition);
        let full = Ideal::full(&partition);
        let orbits = brute_subquotient_orbits(&empty, &full, 2, Bounds::default()).unwrap();
        let plain = brute_orbits(&partition, 2, Bounds::default()).unwrap();
        assert_eq!(orbits.len(), plain.len());
        for orbit in &orbits {
            let twin = plain.orbit_labeled(&orbit.label).unwrap();
            assert_eq!(orbit.coset_reps.len(), twin.elements.len());
        }
    }
}
