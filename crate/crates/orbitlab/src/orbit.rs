//! Orbit counts and orbit orders as exact polynomials in the prime.
//!
//! Two independent counting formulas, two independent orbit-order
//! formulas, characteristic-subgroup orders, the lattice Möbius function,
//! subquotient orbit orders, and exact maximal-orbit densities. Everything
//! is exact; the two routes exist to cross-validate each other and are
//! both exercised by the sweep and the acceptance suite.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::arith::is_prime;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::partition::Partition;
use crate::polynomial::OrbitPolynomial;

/// Orbit count via the product over consecutive part gaps:
/// `(λ_l + 1) · Π (λ_i − λ_{i+1} + 1)`.
pub fn count_orbits_product(partition: &Partition) -> u128 {
    let parts = partition.parts();
    let last = *parts.last().expect("partitions are nonempty") as u128;
    let gaps: u128 = parts
        .windows(2)
        .map(|w| (w[0] - w[1] + 1) as u128)
        .product();
    (last + 1) * gaps
}

/// Orbit count via antichains: sum over subsets of the distinct part
/// values, each subset `v_1 < … < v_k` contributing
/// `v_1 · Π (v_{j+1} − v_j − 1)`; the empty subset contributes 1.
pub fn count_orbits_antichains(partition: &Partition) -> u128 {
    let values: Vec<u32> = partition.distinct().iter().map(|&(v, _)| v).collect();
    let t = values.len();
    assert!(t < 64, "too many distinct parts to sum over subsets");
    let mut total: u128 = 0;
    for mask in 0u64..(1 << t) {
        let chosen: Vec<u32> = (0..t)
            .filter(|&j| mask >> j & 1 == 1)
            .map(|j| values[j])
            .collect();
        total += match chosen.split_first() {
            None => 1,
            Some((&first, _)) => {
                let mut term = first as u128;
                for pair in chosen.windows(2) {
                    term *= (pair[1] - pair[0] - 1) as u128;
                }
                term
            }
        };
    }
    total
}

/// Order of the characteristic subgroup attached to an ideal: `p^{[I]}`.
pub fn char_subgroup_order(ideal: &Ideal) -> OrbitPolynomial {
    OrbitPolynomial::power_of_p(ideal.weighted_size())
}

/// Möbius function of the ideal lattice: `(−1)^{|I∖J|}` when the
/// difference is an antichain (all its points maximal in `I`), else 0.
pub fn mobius(smaller: &Ideal, bigger: &Ideal) -> Result<i64> {
    if !smaller.is_subideal_of(bigger)? {
        return Err(Error::NotSubideal);
    }
    let max_points = bigger.max_elements();
    let difference: Vec<_> = bigger
        .points()
        .into_iter()
        .filter(|p| !smaller.contains(*p))
        .collect();
    if difference
        .iter()
        .any(|p| !max_points.points().contains(p))
    {
        return Ok(0);
    }
    Ok(if difference.len() % 2 == 0 { 1 } else { -1 })
}

/// Orbit order by inclusion–exclusion over deleted maximal elements:
/// `Σ_{S ⊆ max I} (−1)^{|S|} p^{[I∖S]}`.
pub fn orbit_size_mobius(ideal: &Ideal) -> OrbitPolynomial {
    let max_points = ideal.max_elements();
    let points = max_points.points();
    assert!(points.len() < 64, "too many maximal elements to sum over subsets");
    let mut total = OrbitPolynomial::zero();
    for mask in 0u64..(1 << points.len()) {
        let mut rvec = ideal.rvec().to_vec();
        let mut removed = 0u32;
        for (j, point) in points.iter().enumerate() {
            if mask >> j & 1 == 1 {
                removed += 1;
                for (i, &part) in ideal.partition().parts().iter().enumerate() {
                    if part == point.k() {
                        rvec[i] += 1;
                    }
                }
            }
        }
        let shrunk = Ideal::from_rvec(ideal.partition(), rvec)
            .expect("deleting maximal elements keeps an ideal");
        let sign = if removed.is_multiple_of(2) { 1 } else { -1 };
        let term = OrbitPolynomial::monomial(shrunk.weighted_size(), sign);
        total = &total + &term;
    }
    total
}

/// Orbit order by the product formula:
/// `p^{[I]} · Π_{x ∈ max I} (1 − p^{−m(x)})`, expanded exactly.
///
/// The expansion runs through Laurent polynomials; a surviving negative
/// exponent would mean a bug and is reported, never truncated.
pub fn orbit_size_product(ideal: &Ideal) -> Result<OrbitPolynomial> {
    let mut laurent: BTreeMap<i64, BigInt> = BTreeMap::new();
    laurent.insert(ideal.weighted_size() as i64, BigInt::one());
    for point in ideal.max_elements().points() {
        let m = ideal.partition().multiplicity(point.k()) as i64;
        let mut next: BTreeMap<i64, BigInt> = BTreeMap::new();
        for (&exp, coef) in &laurent {
            for (shift, sign) in [(0i64, 1), (-m, -1)] {
                let entry = next.entry(exp + shift).or_insert_with(BigInt::zero);
                *entry += coef * BigInt::from(sign);
            }
        }
        next.retain(|_, c| !c.is_zero());
        laurent = next;
    }
    let mut result = OrbitPolynomial::zero();
    for (exp, coef) in laurent {
        if exp < 0 {
            return Err(Error::NegativeExponentResidue(exp));
        }
        result = &result + &OrbitPolynomial::monomial(exp as u64, coef);
    }
    Ok(result)
}

/// Order of the orbit labeled `label` in the subquotient by the
/// characteristic subgroup of `smaller`:
/// `(Σ_{I'' ∪ smaller = label} |O_{p,I''}|) / p^{[smaller]}`.
///
/// The division is performed exactly and reported if it ever fails to be
/// exact coefficientwise.
pub fn subquotient_orbit_order(smaller: &Ideal, label: &Ideal) -> Result<OrbitPolynomial> {
    if !smaller.is_subideal_of(label)? {
        return Err(Error::NotSubideal);
    }
    let empty = Ideal::empty(label.partition());
    let mut numerator = OrbitPolynomial::zero();
    for candidate in label.ideals_between(&empty)? {
        if candidate.union(smaller)? == *label {
            numerator = &numerator + &orbit_size_product(&candidate)?;
        }
    }
    numerator.div_exact_power_of_p(smaller.weighted_size())
}

/// Fraction of the subquotient occupied by its maximal orbit, as an exact
/// rational: `|orbit(label = bigger)| / p^{[bigger]−[smaller]}`.
pub fn maximal_orbit_density(bigger: &Ideal, smaller: &Ideal, p: u64) -> Result<BigRational> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let orbit_order = subquotient_orbit_order(smaller, bigger)?.evaluate(p);
    let quotient_order = BigInt::from(p)
        .pow(u32::try_from(bigger.weighted_size() - smaller.weighted_size()).expect("small exp"));
    Ok(BigRational::new(orbit_order, quotient_order))
}
