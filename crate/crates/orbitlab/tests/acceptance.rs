//! Acceptance suite: one test per criterion, one pass/fail line each.
//!
//! Run with `cargo test -p orbitlab --test acceptance -- --nocapture`
//! to see the lines; every expected value is exact, no tolerances.

use std::time::Instant;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use orbitlab::ideal::{enumerate_ideals, Ideal};
use orbitlab::oracle::{
    brute_degenerates, brute_orbits, brute_subquotient_orbits, canonical_rep, ideal_of_element,
    structural_degenerates, Bounds, ElementSpace, GroupElement,
};
use orbitlab::orbit::{
    count_orbits_antichains, count_orbits_product, maximal_orbit_density, orbit_size_mobius,
    orbit_size_product, subquotient_orbit_order,
};
use orbitlab::partition::{parse_partition, Partition};
use orbitlab::poset::{count_maximal_chains, geq, points_of, PosetPoint};
use orbitlab::sweep::{sweep_partitions, SweepConfig};

fn running() -> Partition {
    parse_partition("7,5,3,3,2").unwrap()
}

fn ideal_a() -> Ideal {
    Ideal::from_rvec(&running(), vec![3, 1, 0, 0, 0]).unwrap()
}

fn ideal_b() -> Ideal {
    Ideal::from_rvec(&running(), vec![4, 3, 1, 1, 1]).unwrap()
}

/// The seven (λ, p) instances small enough for exhaustive verification.
fn verification_set() -> Vec<(Partition, u64)> {
    [
        ("1,1", 2u64),
        ("2,1", 2),
        ("2,1", 3),
        ("3,1", 2),
        ("2,2", 2),
        ("2,1,1", 2),
        ("3,2", 2),
    ]
    .into_iter()
    .map(|(parts, p)| (parse_partition(parts).unwrap(), p))
    .collect()
}

fn report(number: u32, description: &str, failures: Vec<String>, started: Instant) {
    let elapsed = started.elapsed();
    if failures.is_empty() {
        println!("criterion {number}: PASS ({elapsed:.2?}) - {description}");
    } else {
        println!("criterion {number}: FAIL ({elapsed:.2?}) - {description}");
        for failure in &failures {
            println!("    {failure}");
        }
        panic!("criterion {number} failed with {} violations", failures.len());
    }
}

#[test]
fn criterion_01_worked_example_orbit_count() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let partition = running();

    let product = count_orbits_product(&partition);
    let antichains = count_orbits_antichains(&partition);
    let enumerated = enumerate_ideals(&partition).count() as u128;
    for (name, value) in [
        ("product formula", product),
        ("antichain formula", antichains),
        ("enumeration", enumerated),
    ] {
        if value != 54 {
            failures.push(format!("{name} gives {value}, expected 54"));
        }
    }
    if started.elapsed().as_secs_f64() >= 1.0 {
        failures.push(format!("took {:?}, target < 1 s", started.elapsed()));
    }
    report(1, "orbit count 54 by all three routes", failures, started);
}

#[test]
fn criterion_02_worked_example_orbit_sizes() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let cases = [
        (ideal_a(), "p^16 - p^15 - p^14 + p^13"),
        (ideal_b(), "p^10 - p^9 - p^8 + p^7"),
    ];
    for (ideal, expected) in cases {
        let product = orbit_size_product(&ideal).unwrap();
        let mobius = orbit_size_mobius(&ideal);
        if product.to_string() != expected {
            failures.push(format!("product route for {ideal}: {product}, expected {expected}"));
        }
        if mobius.to_string() != expected {
            failures.push(format!(
                "inclusion-exclusion route for {ideal}: {mobius}, expected {expected}"
            ));
        }
        if product != mobius {
            failures.push(format!("routes disagree for {ideal}"));
        }
    }
    report(2, "orbit-size polynomials by both routes", failures, started);
}

#[test]
fn criterion_03_worked_example_subgroup_orders() {
    let started = Instant::now();
    let mut failures = Vec::new();
    for (ideal, expected) in [(ideal_a(), 16u64), (ideal_b(), 10)] {
        let got = ideal.weighted_size();
        if got != expected {
            failures.push(format!("weighted size of {ideal} is {got}, expected {expected}"));
        }
    }
    report(3, "characteristic subgroup orders p^16 and p^10", failures, started);
}

#[test]
fn criterion_04_worked_example_subquotient_count() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let count = ideal_a().ideals_between(&ideal_b()).unwrap().count();
    if count != 13 {
        failures.push(format!("found {count} ideals in the interval, expected 13"));
    }
    report(4, "13 ideals between the worked-example pair", failures, started);
}

#[test]
fn criterion_05_formula_agreement_sweep() {
    let started = Instant::now();
    let outcome = sweep_partitions(SweepConfig {
        max_part: 8,
        max_len: 6,
    });
    let mut failures = outcome.failures.clone();
    if outcome.partitions_checked < 3000 {
        failures.push(format!(
            "only {} partitions checked, expected several thousand",
            outcome.partitions_checked
        ));
    }
    if started.elapsed().as_secs_f64() >= 60.0 {
        failures.push(format!("took {:?}, target < 60 s", started.elapsed()));
    }
    let description = format!(
        "sweep of {} partitions / {} ideals, zero tolerance",
        outcome.partitions_checked, outcome.ideals_checked
    );
    report(5, &description, failures, started);
}

#[test]
fn criterion_06_oracle_equivalence() {
    let started = Instant::now();
    let bounds = Bounds::default();
    let mut failures = Vec::new();

    for (partition, p) in verification_set() {
        let orbits = match brute_orbits(&partition, p, bounds) {
            Ok(orbits) => orbits,
            Err(err) => {
                failures.push(format!("{partition} at p={p}: {err}"));
                continue;
            }
        };
        if orbits.len() as u128 != count_orbits_product(&partition) {
            failures.push(format!(
                "{partition} at p={p}: {} brute orbits, formula says {}",
                orbits.len(),
                count_orbits_product(&partition)
            ));
        }
        // Ideal labeling must biject onto the enumerated ideals, with
        // every member of every orbit mapping to the orbit's label.
        let mut labels: Vec<&Ideal> = orbits.orbits().iter().map(|o| &o.label).collect();
        labels.sort_by_key(|ideal| ideal.rvec().to_vec());
        labels.dedup();
        if labels.len() != orbits.len() {
            failures.push(format!("{partition} at p={p}: duplicate orbit labels"));
        }
        let mut enumerated: Vec<Ideal> = enumerate_ideals(&partition).collect();
        enumerated.sort_by_key(|ideal| ideal.rvec().to_vec());
        if labels.iter().map(|&l| l.clone()).collect::<Vec<_>>() != enumerated {
            failures.push(format!("{partition} at p={p}: labels differ from ideals"));
        }
        for orbit in orbits.orbits() {
            let expected = orbit_size_product(&orbit.label).unwrap().evaluate(p);
            if BigInt::from(orbit.elements.len()) != expected {
                failures.push(format!(
                    "{partition} at p={p}, orbit {}: size {} != {}",
                    orbit.label,
                    orbit.elements.len(),
                    expected
                ));
            }
            for member in &orbit.elements {
                if ideal_of_element(member) != orbit.label {
                    failures.push(format!(
                        "{partition} at p={p}: member of {} labels differently",
                        orbit.label
                    ));
                    break;
                }
            }
        }
        // Structural vs exhaustive degeneration on all pairs in the group.
        let elements: Vec<GroupElement> = ElementSpace::new(&partition, p, bounds)
            .unwrap()
            .iter()
            .collect();
        for a in &elements {
            for b in &elements {
                let structural = structural_degenerates(a, b).unwrap();
                let brute = brute_degenerates(a, b, bounds).unwrap();
                if structural != brute {
                    failures.push(format!(
                        "{partition} at p={p}: degeneration verdicts differ for {a:?} -> {b:?}"
                    ));
                }
            }
        }
    }

    // Cross-type degenerations: (2,1) against (2) and (1,1) at p = 2.
    let source = parse_partition("2,1").unwrap();
    let source_elements: Vec<GroupElement> = ElementSpace::new(&source, 2, bounds)
        .unwrap()
        .iter()
        .collect();
    for target_parts in ["2", "1,1"] {
        let target = parse_partition(target_parts).unwrap();
        let target_elements: Vec<GroupElement> = ElementSpace::new(&target, 2, bounds)
            .unwrap()
            .iter()
            .collect();
        for a in &source_elements {
            for b in &target_elements {
                for (x, y) in [(a, b), (b, a)] {
                    let structural = structural_degenerates(x, y).unwrap();
                    let brute = brute_degenerates(x, y, bounds).unwrap();
                    if structural != brute {
                        failures.push(format!(
                            "cross-type {source} -> {target}: verdicts differ for {x:?} -> {y:?}"
                        ));
                    }
                }
            }
        }
    }

    // p-independence: identical lattice structure at p = 2 and p = 3.
    let two_one = parse_partition("2,1").unwrap();
    let at_two = brute_orbits(&two_one, 2, bounds).unwrap();
    let at_three = brute_orbits(&two_one, 3, bounds).unwrap();
    let labels = |orbits: &orbitlab::oracle::OrbitPartition| {
        let mut labels: Vec<Vec<u32>> = orbits
            .orbits()
            .iter()
            .map(|orbit| orbit.label.rvec().to_vec())
            .collect();
        labels.sort();
        labels
    };
    if labels(&at_two) != labels(&at_three) {
        failures.push("lattice structure differs between p=2 and p=3".to_string());
    }

    if started.elapsed().as_secs_f64() >= 300.0 {
        failures.push(format!("took {:?}, target < 5 min", started.elapsed()));
    }
    report(6, "brute-force action agrees with the combinatorics", failures, started);
}

#[test]
fn criterion_07_subquotient_oracle() {
    let started = Instant::now();
    let bounds = Bounds::default();
    let mut failures = Vec::new();

    for parts in ["2,1", "2,2", "3,1"] {
        let partition = parse_partition(parts).unwrap();
        let ideals: Vec<Ideal> = enumerate_ideals(&partition).collect();
        for big in &ideals {
            for small in &ideals {
                if !small.is_subideal_of(big).unwrap() {
                    continue;
                }
                let coset_orbits = brute_subquotient_orbits(small, big, 2, bounds).unwrap();
                let interval = big.ideals_between(small).unwrap().count();
                if coset_orbits.len() != interval {
                    failures.push(format!(
                        "{partition} [{small}, {big}]: {} orbits vs {} ideals",
                        coset_orbits.len(),
                        interval
                    ));
                }
                for orbit in &coset_orbits {
                    let expected = subquotient_orbit_order(small, &orbit.label)
                        .unwrap()
                        .evaluate(2);
                    if BigInt::from(orbit.coset_reps.len()) != expected {
                        failures.push(format!(
                            "{partition} [{small}, {big}] orbit {}: {} cosets vs {}",
                            orbit.label,
                            orbit.coset_reps.len(),
                            expected
                        ));
                    }
                }
            }
        }
    }
    report(7, "subquotient orbits match counts and orders", failures, started);
}

#[test]
fn criterion_08_canonical_representatives() {
    let started = Instant::now();
    let bounds = Bounds::default();
    let mut failures = Vec::new();

    for (partition, p) in verification_set() {
        let orbits = brute_orbits(&partition, p, bounds).unwrap();
        for ideal in enumerate_ideals(&partition) {
            let rep = canonical_rep(&ideal, p);
            if ideal_of_element(&rep) != ideal {
                failures.push(format!(
                    "{partition} at p={p}: canonical rep of {ideal} has wrong ideal"
                ));
            }
            match orbits.orbit_labeled(&ideal) {
                Some(orbit) if orbit.elements.contains(&rep) => {}
                _ => failures.push(format!(
                    "{partition} at p={p}: canonical rep of {ideal} not in its brute orbit"
                )),
            }
        }
    }
    report(8, "canonical representatives in their own orbits", failures, started);
}

#[test]
fn criterion_09_density_bound() {
    let started = Instant::now();
    let mut failures = Vec::new();
    let partition = running();
    let full = Ideal::full(&partition);
    let empty = Ideal::empty(&partition);

    let mut previous: Option<BigRational> = None;
    for p in [2u64, 3, 5, 101, 10007] {
        let density = maximal_orbit_density(&full, &empty, p).unwrap();
        let shortfall = BigRational::one() - &density;
        let bound = BigRational::new(BigInt::from(2), BigInt::from(p));
        if shortfall > bound {
            failures.push(format!("p={p}: 1 - density = {shortfall} exceeds 2/p"));
        }
        if let Some(previous) = &previous {
            if &shortfall >= previous {
                failures.push(format!("p={p}: shortfall {shortfall} did not shrink"));
            }
        }
        previous = Some(shortfall);
    }
    report(9, "maximal-orbit density approaches 1", failures, started);
}

/// Exhaustive path enumeration, deliberately unmemoized: walks every
/// maximal chain one by one so the memoized count has an independent check.
fn chains_by_walking(n: u32) -> u64 {
    let staircase = Partition::new((1..=n).rev()).unwrap();
    let poset = points_of(&staircase);
    let points = poset.points();
    let top = poset.index_of(PosetPoint::new(0, n)).unwrap();
    let bottom = poset.index_of(PosetPoint::new(n - 1, n)).unwrap();
    let mut stack = vec![top];
    let mut count = 0u64;
    fn walk(
        v: usize,
        bottom: usize,
        covers: &[(usize, usize)],
        stack: &mut Vec<usize>,
        count: &mut u64,
        points: &[PosetPoint],
    ) {
        if v == bottom {
            // Sanity: the walked path must be a chain of covers.
            for pair in stack.windows(2) {
                assert!(geq(points[pair[0]], points[pair[1]]));
            }
            *count += 1;
            return;
        }
        for &(x, y) in covers {
            if x == v {
                stack.push(y);
                walk(y, bottom, covers, stack, count, points);
                stack.pop();
            }
        }
    }
    walk(top, bottom, poset.covers(), &mut stack, &mut count, points);
    count
}

#[test]
fn criterion_10_catalan_chains() {
    let started = Instant::now();
    let mut failures = Vec::new();

    let golden: Vec<u64> = (1..=6).map(|n| count_maximal_chains(n).unwrap()).collect();
    for (n, &value) in (1..=6).zip(&golden) {
        let walked = chains_by_walking(n);
        if walked != value {
            failures.push(format!(
                "n={n}: memoized count {value} vs walked count {walked}"
            ));
        }
    }
    if golden[0] != 1 {
        failures.push(format!("anchor n=1 gives {}, expected 1", golden[0]));
    }
    if golden[2] != 2 {
        failures.push(format!("anchor n=3 gives {}, expected 2", golden[2]));
    }

    // The six values must appear consecutively in the Catalan sequence.
    let mut catalan: Vec<u64> = vec![1];
    for i in 1..12u64 {
        let last = *catalan.last().unwrap();
        catalan.push(last * 2 * (2 * i - 1) / (i + 1));
    }
    let consecutive = catalan
        .windows(golden.len())
        .any(|window| window == golden.as_slice());
    if !consecutive {
        failures.push(format!(
            "chain counts {golden:?} are not consecutive Catalan numbers {catalan:?}"
        ));
    }
    report(10, "maximal chain counts are Catalan", failures, started);
}
