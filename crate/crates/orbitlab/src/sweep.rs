//! Batch consistency checks over families of partitions.
//!
//! One partition is one independent unit of work: enumerate its ideals,
//! compute every orbit-order polynomial by both routes, and test the
//! counting and partition identities. The default build fans the
//! partitions out over rayon; `sweep_partitions_seq` is the sequential
//! reference path, used directly when the `parallel` feature is off and
//! benchmarked against the parallel one otherwise. Aggregation is a fold
//! over per-partition reports in enumeration order, so both paths produce
//! identical output.

use crate::ideal::enumerate_ideals;
use crate::orbit::{
    char_subgroup_order, count_orbits_antichains, count_orbits_product, orbit_size_mobius,
    orbit_size_product,
};
use crate::partition::Partition;
use crate::polynomial::OrbitPolynomial;

/// Family bounds: every nonempty partition with parts at most `max_part`
/// and at most `max_len` parts.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SweepConfig {
    pub max_part: u32,
    pub max_len: usize,
}

/// Aggregated result of a sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOutcome {
    pub partitions_checked: u64,
    pub ideals_checked: u64,
    /// One line per violated identity; empty means every check passed.
    pub failures: Vec<String>,
}

impl SweepOutcome {
    pub fn all_pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Every nonempty partition within the bounds, largest-first ordering.
pub fn partitions_up_to(max_part: u32, max_len: usize) -> Vec<Partition> {
    fn recurse(prefix: &mut Vec<u32>, cap: u32, max_len: usize, out: &mut Vec<Partition>) {
        if !prefix.is_empty() {
            out.push(Partition::new(prefix.clone()).expect("positive parts"));
        }
        if prefix.len() == max_len {
            return;
        }
        for next in (1..=cap).rev() {
            prefix.push(next);
            recurse(prefix, next, max_len, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    recurse(&mut Vec::new(), max_part, max_len, &mut out);
    out
}

/// All identities for one partition; failures reported as text lines.
fn check_partition(partition: &Partition) -> (u64, Vec<String>) {
    let mut failures = Vec::new();

    let by_product = count_orbits_product(partition);
    let by_antichains = count_orbits_antichains(partition);
    if by_product != by_antichains {
        failures.push(format!(
            "{partition}: count formulas disagree ({by_product} vs {by_antichains})"
        ));
    }

    let mut ideal_count = 0u64;
    let mut group_total = OrbitPolynomial::zero();
    for ideal in enumerate_ideals(partition) {
        ideal_count += 1;
        let product = match orbit_size_product(&ideal) {
            Ok(poly) => poly,
            Err(err) => {
                failures.push(format!("{partition} {ideal}: product formula failed: {err}"));
                continue;
            }
        };
        let mobius_sum = orbit_size_mobius(&ideal);
        if product != mobius_sum {
            failures.push(format!(
                "{partition} {ideal}: orbit-size routes disagree ({product} vs {mobius_sum})"
            ));
        }
        if !ideal.is_ideal_empty() {
            if !product.is_monic() {
                failures.push(format!("{partition} {ideal}: orbit size not monic"));
            }
            if product.degree() != Some(ideal.weighted_size()) {
                failures.push(format!(
                    "{partition} {ideal}: degree {:?} != weighted size {}",
                    product.degree(),
                    ideal.weighted_size()
                ));
            }
        }
        group_total = &group_total + &product;
    }

    if ideal_count as u128 != by_product {
        failures.push(format!(
            "{partition}: enumeration found {ideal_count} ideals, formula says {by_product}"
        ));
    }
    // Orbits partition the group, so the sizes must sum to its order.
    if group_total != char_subgroup_order(&crate::ideal::Ideal::full(partition)) {
        failures.push(format!(
            "{partition}: orbit sizes sum to {group_total}, not p^{}",
            partition.weight()
        ));
    }

    (ideal_count, failures)
}

fn combine(reports: Vec<(u64, Vec<String>)>) -> SweepOutcome {
    let mut outcome = SweepOutcome {
        partitions_checked: reports.len() as u64,
        ideals_checked: 0,
        failures: Vec::new(),
    };
    for (ideals, failures) in reports {
        outcome.ideals_checked += ideals;
        outcome.failures.extend(failures);
    }
    outcome
}

/// Runs the sweep, one partition per unit of parallel work.
#[cfg(feature = "parallel")]
pub fn sweep_partitions(config: SweepConfig) -> SweepOutcome {
    use rayon::prelude::*;
    let partitions = partitions_up_to(config.max_part, config.max_len);
    combine(partitions.par_iter().map(check_partition).collect())
}

/// Runs the sweep on the current thread only.
#[cfg(not(feature = "parallel"))]
pub fn sweep_partitions(config: SweepConfig) -> SweepOutcome {
    sweep_partitions_seq(config)
}

/// Sequential reference implementation; the benches compare this against
/// [`sweep_partitions`].
pub fn sweep_partitions_seq(config: SweepConfig) -> SweepOutcome {
    let partitions = partitions_up_to(config.max_part, config.max_len);
    combine(partitions.iter().map(check_partition).collect())
}
