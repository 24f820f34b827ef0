//! Full oracle cross-check for one `(λ, p)` instance.
//!
//! Runs every brute-force/combinatorial comparison the crate knows about
//! and reports each as a named check with a concrete witness on failure.
//! The group is enumerated exhaustively, so this is only for desk-scale
//! instances; the guards in [`crate::oracle::Bounds`] apply.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::error::Result;
use crate::ideal::{enumerate_ideals, Ideal};
use crate::oracle::{
    apply_hom, brute_orbits, brute_subquotient_orbits, canonical_rep, enumerate_homs,
    ideal_of_element, structural_degenerates, Bounds, ElementSpace, GroupElement,
};
use crate::orbit::{
    count_orbits_antichains, count_orbits_product, orbit_size_mobius, orbit_size_product,
    subquotient_orbit_order,
};
use crate::partition::Partition;

/// One named check with an optional counterexample.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Check {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<String>,
}

impl Check {
    fn pass(name: &'static str) -> Self {
        Check {
            name,
            pass: true,
            witness: None,
        }
    }

    fn fail(name: &'static str, witness: String) -> Self {
        Check {
            name,
            pass: false,
            witness: Some(witness),
        }
    }
}

/// Outcome of the cross-check suite for one instance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub partition: Partition,
    pub p: u64,
    pub orbit_count: u64,
    pub checks: Vec<Check>,
}

impl Report {
    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|check| check.pass)
    }
}

/// Runs every oracle-vs-combinatorics comparison for `(λ, p)`.
pub fn run(partition: &Partition, p: u64, bounds: Bounds) -> Result<Report> {
    let orbits = brute_orbits(partition, p, bounds)?;
    let ideals: Vec<Ideal> = enumerate_ideals(partition).collect();
    let mut checks = Vec::new();

    // Orbit count: brute force vs both formulas vs enumeration.
    let counts = [
        orbits.len() as u128,
        count_orbits_product(partition),
        count_orbits_antichains(partition),
        ideals.len() as u128,
    ];
    checks.push(if counts.iter().all(|&c| c == counts[0]) {
        Check::pass("orbit count agreement")
    } else {
        Check::fail(
            "orbit count agreement",
            format!(
                "brute={} product={} antichains={} enumeration={}",
                counts[0], counts[1], counts[2], counts[3]
            ),
        )
    });

    // Orbit labels biject with the enumerated ideals.
    let labels: HashSet<&Ideal> = orbits.orbits().iter().map(|orbit| &orbit.label).collect();
    let targets: HashSet<&Ideal> = ideals.iter().collect();
    checks.push(if labels == targets && labels.len() == orbits.len() {
        Check::pass("orbit labels biject with ideals")
    } else {
        Check::fail(
            "orbit labels biject with ideals",
            format!("{} distinct labels for {} orbits", labels.len(), orbits.len()),
        )
    });

    // Orbit sizes match both polynomial routes.
    let mut size_witness = None;
    for orbit in orbits.orbits() {
        let got = BigInt::from(orbit.elements.len());
        let product = orbit_size_product(&orbit.label)?.evaluate(p);
        let mobius = orbit_size_mobius(&orbit.label).evaluate(p);
        if got != product || got != mobius {
            size_witness = Some(format!(
                "orbit {} has {} elements, product says {}, inclusion-exclusion says {}",
                orbit.label, got, product, mobius
            ));
            break;
        }
    }
    checks.push(match size_witness {
        None => Check::pass("orbit sizes match polynomials"),
        Some(witness) => Check::fail("orbit sizes match polynomials", witness),
    });

    // Canonical representatives land in the right orbit.
    let mut rep_witness = None;
    for ideal in &ideals {
        let rep = canonical_rep(ideal, p);
        if ideal_of_element(&rep) != *ideal {
            rep_witness = Some(format!("canonical rep of {ideal} has the wrong ideal"));
            break;
        }
        let home = orbits.orbit_labeled(ideal).filter(|orbit| orbit.elements.contains(&rep));
        if home.is_none() {
            rep_witness = Some(format!("canonical rep of {ideal} is not in its orbit"));
            break;
        }
    }
    checks.push(match rep_witness {
        None => Check::pass("canonical representatives"),
        Some(witness) => Check::fail("canonical representatives", witness),
    });

    // Characteristic subgroup orders: direct membership count vs p^{[I]}.
    let elements = ElementSpace::new(partition, p, bounds)?;
    let member_ideals: Vec<Ideal> = elements
        .iter()
        .map(|element| ideal_of_element(&element))
        .collect();
    let mut subgroup_witness = None;
    for ideal in &ideals {
        let members = member_ideals
            .iter()
            .filter(|label| label.is_subideal_of(ideal).expect("same partition"))
            .count() as u128;
        let expected = crate::arith::saturating_pow_u128(p, ideal.weighted_size());
        if members != expected {
            subgroup_witness = Some(format!("{ideal}: {members} members, expected {expected}"));
            break;
        }
    }
    checks.push(match subgroup_witness {
        None => Check::pass("characteristic subgroup orders"),
        Some(witness) => Check::fail("characteristic subgroup orders", witness),
    });

    // Degeneration criterion: structural vs exhaustive, all element pairs.
    // One pass over the hom space per source element, then set lookups.
    let homs = enumerate_homs(partition, partition, p, bounds)?;
    let all: Vec<GroupElement> = elements.iter().collect();
    let mut degeneration_witness = None;
    'outer: for a in &all {
        let images: HashSet<GroupElement> = homs
            .iter()
            .map(|hom| apply_hom(&hom, a).expect("shapes match"))
            .collect();
        for b in &all {
            let structural = structural_degenerates(a, b)?;
            if structural != images.contains(b) {
                degeneration_witness = Some(format!(
                    "a={a:?}, b={b:?}: structural={structural}, exhaustive={}",
                    !structural
                ));
                break 'outer;
            }
        }
    }
    checks.push(match degeneration_witness {
        None => Check::pass("degeneration criterion"),
        Some(witness) => Check::fail("degeneration criterion", witness),
    });

    // Subquotient orbits for every ideal pair.
    let mut subquotient_witness = None;
    'pairs: for big in &ideals {
        for small in &ideals {
            if !small.is_subideal_of(big)? {
                continue;
            }
            let coset_orbits = brute_subquotient_orbits(small, big, p, bounds)?;
            let interval: Vec<Ideal> = big.ideals_between(small)?.collect();
            if coset_orbits.len() != interval.len() {
                subquotient_witness = Some(format!(
                    "[{small}, {big}]: {} coset orbits, {} interval ideals",
                    coset_orbits.len(),
                    interval.len()
                ));
                break 'pairs;
            }
            for orbit in &coset_orbits {
                let expected = subquotient_orbit_order(small, &orbit.label)?.evaluate(p);
                if BigInt::from(orbit.coset_reps.len()) != expected {
                    subquotient_witness = Some(format!(
                        "[{small}, {big}] orbit {}: {} cosets, formula says {}",
                        orbit.label,
                        orbit.coset_reps.len(),
                        expected
                    ));
                    break 'pairs;
                }
            }
        }
    }
    checks.push(match subquotient_witness {
        None => Check::pass("subquotient orbits"),
        Some(witness) => Check::fail("subquotient orbits", witness),
    });

    Ok(Report {
        partition: partition.clone(),
        p,
        orbit_count: orbits.len() as u64,
        checks,
    })
}
