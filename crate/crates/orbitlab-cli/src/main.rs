//! Command-line front end: poset diagrams, orbit listings, orbit-size
//! polynomials, degeneration tests, subquotient tables, oracle
//! verification, and maximal-chain counts.
//!
//! Exit codes: 0 success, 2 input error, 3 internal count mismatch,
//! 4 theorem violation (oracle disagreement), 5 bound exceeded.

use std::fmt::Write as _;
use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigUint;
use serde_json::{json, Value};

use orbitlab::ideal::{enumerate_ideals, Ideal};
use orbitlab::oracle::{
    brute_degenerates, canonical_rep, enumerate_homs, ideal_of_element, structural_degenerates,
    Bounds, GroupElement,
};
use orbitlab::orbit::{
    count_orbits_antichains, count_orbits_product, maximal_orbit_density, orbit_size_mobius,
    orbit_size_product, subquotient_orbit_order,
};
use orbitlab::partition::{parse_partition, Partition};
use orbitlab::polynomial::OrbitPolynomial;
use orbitlab::poset::{count_maximal_chains, points_of, PosetPoint, Subposet};
use orbitlab::{arith, verify, Error};

const EXIT_INPUT: u8 = 2;
const EXIT_MISMATCH: u8 = 3;
const EXIT_THEOREM: u8 = 4;
const EXIT_BOUND: u8 = 5;

#[derive(Parser)]
#[command(
    name = "orbitlab",
    version,
    about = "Automorphism orbits of finite abelian p-groups, exactly"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Default, PartialEq, Eq, ValueEnum)]
enum Format {
    #[default]
    Ascii,
    Dot,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the poset of cyclic orbits for a partition.
    Poset {
        /// Comma-separated parts, e.g. 7,5,3,3,2
        #[arg(long)]
        lambda: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List every orbit of the group of type lambda.
    Orbits {
        #[arg(long)]
        lambda: String,
        /// Evaluate orbit sizes at this prime and show canonical reps.
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Expand the orbit-order polynomial of one ideal.
    OrbitSize {
        #[arg(long)]
        lambda: String,
        /// Comma-separated r-vector, one entry per part.
        #[arg(long)]
        rvec: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Decide whether element a degenerates to element b.
    Degenerates {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        mu: String,
        #[arg(long)]
        p: u64,
        /// Residues of a, comma-separated, one per part of lambda.
        #[arg(long)]
        a: String,
        /// Residues of b, comma-separated, one per part of mu.
        #[arg(long)]
        b: String,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// List the orbits of a characteristic subquotient.
    Subquotient {
        #[arg(long)]
        lambda: String,
        /// r-vector of the larger ideal.
        #[arg(long)]
        outer: String,
        /// r-vector of the smaller ideal.
        #[arg(long)]
        inner: String,
        #[arg(long)]
        p: Option<u64>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Cross-check the combinatorics against the brute-force oracle.
    Verify {
        #[arg(long)]
        lambda: String,
        #[arg(long)]
        p: u64,
        /// Override the homomorphism-space bound (default 2^22).
        #[arg(long)]
        max_aut_space: Option<u128>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Count maximal chains of strict degenerations in the first n columns.
    Chains {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        output: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }
}

impl From<Error> for Failure {
    fn from(err: Error) -> Self {
        let code = match err {
            Error::BoundExceeded { .. } => EXIT_BOUND,
            _ => EXIT_INPUT,
        };
        Failure::new(code, err.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok((text, output)) => match output {
            Some(path) => match fs::write(&path, text) {
                Ok(()) => ExitCode::SUCCESS,
                Err(err) => {
                    eprintln!("error: cannot write {}: {err}", path.display());
                    ExitCode::from(EXIT_INPUT)
                }
            },
            None => {
                println!("{}", text.trim_end_matches('\n'));
                ExitCode::SUCCESS
            }
        },
        Err(failure) => {
            eprintln!("error: {}", failure.message);
            ExitCode::from(failure.code)
        }
    }
}

fn run(command: Command) -> Result<(String, Option<PathBuf>), Failure> {
    match command {
        Command::Poset {
            lambda,
            format,
            output,
        } => Ok((cmd_poset(&lambda, format)?, output)),
        Command::Orbits {
            lambda,
            p,
            format,
            output,
        } => Ok((cmd_orbits(&lambda, p, format)?, output)),
        Command::OrbitSize {
            lambda,
            rvec,
            p,
            format,
            output,
        } => Ok((cmd_orbit_size(&lambda, &rvec, p, format)?, output)),
        Command::Degenerates {
            lambda,
            mu,
            p,
            a,
            b,
            format,
            output,
        } => Ok((cmd_degenerates(&lambda, &mu, p, &a, &b, format)?, output)),
        Command::Subquotient {
            lambda,
            outer,
            inner,
            p,
            format,
            output,
        } => Ok((cmd_subquotient(&lambda, &outer, &inner, p, format)?, output)),
        Command::Verify {
            lambda,
            p,
            max_aut_space,
            format,
            output,
        } => Ok((cmd_verify(&lambda, p, max_aut_space, format)?, output)),
        Command::Chains { n, output } => Ok((cmd_chains(n)?, output)),
    }
}

// ---------------------------------------------------------------- parsing

fn parse_rvec(partition: &Partition, text: &str) -> Result<Ideal, Failure> {
    let mut entries = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let value: i64 = token
            .parse()
            .map_err(|_| Failure::from(Error::MalformedToken(token.to_string())))?;
        entries.push(value);
    }
    Ok(Ideal::from_signed_rvec(partition, &entries)?)
}

fn parse_element(partition: &Partition, p: u64, text: &str) -> Result<GroupElement, Failure> {
    let mut residues = Vec::new();
    for token in text.split(',') {
        let token = token.trim();
        let value: BigUint = token
            .parse()
            .map_err(|_| Failure::from(Error::MalformedToken(token.to_string())))?;
        residues.push(value);
    }
    Ok(GroupElement::new(partition, p, residues)?)
}

fn require_prime(p: u64) -> Result<(), Failure> {
    if arith::is_prime(p) {
        Ok(())
    } else {
        Err(Failure::from(Error::NotPrime(p)))
    }
}

fn bounds_from_env(flag: Option<u128>) -> Bounds {
    let from_env = std::env::var("ORBITLAB_MAX_AUT_SPACE")
        .ok()
        .and_then(|text| text.trim().parse::<u128>().ok());
    match flag.or(from_env) {
        Some(space) => Bounds::with_max_hom_space(space),
        None => Bounds::default(),
    }
}

// ------------------------------------------------------------- rendering

fn json_pretty(value: &Value) -> String {
    serde_json::to_string_pretty(value).expect("json serialization")
}

fn point_json(point: PosetPoint) -> Value {
    json!({ "k": point.k(), "r": point.r() })
}

fn polynomial_json(poly: &OrbitPolynomial) -> Value {
    Value::Array(
        poly.terms()
            .map(|(exp, coef)| json!({ "coef": coef.to_string(), "exp": exp }))
            .collect(),
    )
}

fn rvec_json(ideal: &Ideal) -> Value {
    Value::Array(ideal.rvec().iter().map(|&r| json!(r)).collect())
}

// ------------------------------------------------------------------ poset

fn cmd_poset(lambda: &str, format: Format) -> Result<String, Failure> {
    let partition = parse_partition(lambda)?;
    let poset = points_of(&partition);
    Ok(match format {
        Format::Ascii => poset_ascii(&poset),
        Format::Dot => poset_dot(&poset),
        Format::Json => {
            let nodes: Vec<Value> = poset.points().iter().map(|&pt| point_json(pt)).collect();
            let covers: Vec<Value> = poset
                .covers()
                .iter()
                .map(|&(i, j)| json!([i, j]))
                .collect();
            json_pretty(&json!({ "covers": covers, "nodes": nodes }))
        }
    })
}

fn poset_ascii(poset: &Subposet) -> String {
    let mut out = String::new();
    writeln!(
        out,
        "poset of {} : {} points, {} cover relations",
        poset.partition(),
        poset.points().len(),
        poset.covers().len()
    )
    .unwrap();
    for (index, point) in poset.points().iter().enumerate() {
        writeln!(out, "  [{index:2}] {}", point.label()).unwrap();
    }
    for &(i, j) in poset.covers() {
        writeln!(
            out,
            "  {} > {}",
            poset.points()[i].label(),
            poset.points()[j].label()
        )
        .unwrap();
    }
    out
}

fn poset_dot(poset: &Subposet) -> String {
    // Columns by k, rows by r, reproducing the staircase layout: column
    // k sits at x = K − k and the point (r, k) at height 2r + (K − k).
    let max_k = poset.partition().max_part() as i64;
    let mut out = String::new();
    writeln!(out, "digraph poset {{").unwrap();
    writeln!(out, "  node [shape=plaintext];").unwrap();
    for (index, point) in poset.points().iter().enumerate() {
        let x = (max_k - point.k() as i64) * 72;
        let y = -(2 * point.r() as i64 + (max_k - point.k() as i64)) * 36;
        writeln!(
            out,
            "  n{index} [label=\"{}\", pos=\"{x},{y}!\"];",
            point.label()
        )
        .unwrap();
    }
    for &(i, j) in poset.covers() {
        writeln!(out, "  n{i} -> n{j};").unwrap();
    }
    writeln!(out, "}}").unwrap();
    out
}

// ----------------------------------------------------------------- orbits

fn cmd_orbits(lambda: &str, p: Option<u64>, format: Format) -> Result<String, Failure> {
    let partition = parse_partition(lambda)?;
    if let Some(p) = p {
        require_prime(p)?;
    }

    let ideals: Vec<Ideal> = enumerate_ideals(&partition).collect();
    let by_product = count_orbits_product(&partition);
    let by_antichains = count_orbits_antichains(&partition);
    let enumerated = ideals.len() as u128;
    if by_product != by_antichains || by_product != enumerated {
        return Err(Failure::new(
            EXIT_MISMATCH,
            format!(
                "orbit counts disagree: product={by_product} antichains={by_antichains} enumerated={enumerated}"
            ),
        ));
    }

    let mut rows_json = Vec::new();
    let mut rows_ascii = String::new();
    for ideal in &ideals {
        let poly = orbit_size_product(ideal)?;
        let max_points = ideal.max_elements();
        let mut row = serde_json::Map::new();
        row.insert(
            "max".into(),
            Value::Array(max_points.points().iter().map(|&pt| point_json(pt)).collect()),
        );
        row.insert("polynomial".into(), polynomial_json(&poly));
        row.insert("rvec".into(), rvec_json(ideal));
        row.insert("weighted_size".into(), json!(ideal.weighted_size()));

        let mut line = format!(
            "<{}>  max={{{}}}  [I]={}  |O| = {}",
            ideal.to_compact_string(),
            max_points
                .points()
                .iter()
                .map(|pt| pt.label())
                .collect::<Vec<_>>()
                .join(", "),
            ideal.weighted_size(),
            poly
        );
        if let Some(p) = p {
            let size = poly.evaluate(p);
            let rep = canonical_rep(ideal, p);
            let rep_text = rep
                .residues()
                .iter()
                .map(|r| r.to_string())
                .collect::<Vec<_>>()
                .join(",");
            row.insert("size_at_p".into(), json!(size.to_string()));
            row.insert(
                "canonical_rep".into(),
                Value::Array(
                    rep.residues()
                        .iter()
                        .map(|r| json!(r.to_string()))
                        .collect(),
                ),
            );
            write!(line, "  at p={p}: {size}  rep=({rep_text})").unwrap();
        }
        rows_ascii.push_str(&line);
        rows_ascii.push('\n');
        rows_json.push(Value::Object(row));
    }

    Ok(match format {
        Format::Json => json_pretty(&json!({
            "counts": {
                "antichains": by_antichains.to_string(),
                "enumerated": enumerated.to_string(),
                "product": by_product.to_string(),
            },
            "lambda": partition.parts(),
            "rows": rows_json,
        })),
        _ => {
            let mut out = format!("orbits of the group of type {partition}\n");
            out.push_str(&rows_ascii);
            write!(
                out,
                "counts: product={by_product} antichains={by_antichains} enumerated={enumerated}"
            )
            .unwrap();
            out
        }
    })
}

// ------------------------------------------------------------- orbit-size

fn cmd_orbit_size(
    lambda: &str,
    rvec: &str,
    p: Option<u64>,
    format: Format,
) -> Result<String, Failure> {
    let partition = parse_partition(lambda)?;
    let ideal = parse_rvec(&partition, rvec)?;
    if let Some(p) = p {
        require_prime(p)?;
    }

    let product = orbit_size_product(&ideal)?;
    let mobius = orbit_size_mobius(&ideal);
    if product != mobius {
        return Err(Failure::new(
            EXIT_MISMATCH,
            format!("orbit-size formulas disagree: {product} vs {mobius}"),
        ));
    }

    let degree = product.degree().unwrap_or(0);
    let value = p.map(|p| product.evaluate(p));
    let boundary = ideal.boundary().ok();
    Ok(match format {
        Format::Json => {
            let mut object = serde_json::Map::new();
            if let Some(boundary) = &boundary {
                object.insert(
                    "boundary".into(),
                    Value::Array(
                        boundary
                            .vertices()
                            .iter()
                            .map(|&(r, k)| json!({ "k": k, "r": r }))
                            .collect(),
                    ),
                );
            }
            object.insert("degree".into(), json!(degree));
            object.insert("lambda".into(), json!(partition.parts()));
            object.insert("monic".into(), json!(product.is_monic()));
            object.insert("polynomial".into(), polynomial_json(&product));
            object.insert("rvec".into(), rvec_json(&ideal));
            if let (Some(p), Some(value)) = (p, &value) {
                object.insert("p".into(), json!(p));
                object.insert("value".into(), json!(value.to_string()));
            }
            json_pretty(&Value::Object(object))
        }
        _ => {
            let mut out = format!(
                "|O| = {product}\ndegree {degree}, monic: {}",
                product.is_monic()
            );
            if let Some(boundary) = boundary {
                let vertices = boundary
                    .vertices()
                    .iter()
                    .map(|&(r, k)| format!("({r},{k})"))
                    .collect::<Vec<_>>()
                    .join(" ");
                write!(out, "\nboundary: {vertices}").unwrap();
            }
            if let (Some(p), Some(value)) = (p, value) {
                write!(out, "\nat p={p}: {value}").unwrap();
            }
            out
        }
    })
}

// ------------------------------------------------------------ degenerates

fn cmd_degenerates(
    lambda: &str,
    mu: &str,
    p: u64,
    a: &str,
    b: &str,
    format: Format,
) -> Result<String, Failure> {
    require_prime(p)?;
    let source = parse_partition(lambda)?;
    let target = parse_partition(mu)?;
    let elem_a = parse_element(&source, p, a)?;
    let elem_b = parse_element(&target, p, b)?;

    let structural = structural_degenerates(&elem_a, &elem_b)?;
    let bounds = bounds_from_env(None);
    let brute = match enumerate_homs(&source, &target, p, bounds) {
        Ok(_) => Some(brute_degenerates(&elem_a, &elem_b, bounds)?),
        Err(Error::BoundExceeded { .. }) => None,
        Err(err) => return Err(err.into()),
    };
    if let Some(brute) = brute {
        if brute != structural {
            return Err(Failure::new(
                EXIT_THEOREM,
                format!(
                    "degeneration criterion violated: structural={structural}, exhaustive={brute}"
                ),
            ));
        }
    }

    let gens = |element: &GroupElement| -> Vec<PosetPoint> {
        ideal_of_element(element).max_elements().points().to_vec()
    };
    let (gens_a, gens_b) = (gens(&elem_a), gens(&elem_b));

    Ok(match format {
        Format::Json => json_pretty(&json!({
            "brute_force": brute,
            "degenerates": structural,
            "generators_a": gens_a.iter().map(|&pt| point_json(pt)).collect::<Vec<_>>(),
            "generators_b": gens_b.iter().map(|&pt| point_json(pt)).collect::<Vec<_>>(),
            "p": p,
        })),
        _ => {
            let labels = |points: &[PosetPoint]| {
                points
                    .iter()
                    .map(|pt| pt.label())
                    .collect::<Vec<_>>()
                    .join(", ")
            };
            let mut out = format!(
                "a degenerates to b: {structural}\nideal generators of a: {{{}}}\nideal generators of b: {{{}}}",
                labels(&gens_a),
                labels(&gens_b)
            );
            match brute {
                Some(confirmed) => {
                    write!(out, "\nexhaustive hom search confirms: {confirmed}").unwrap()
                }
                None => {
                    write!(out, "\nexhaustive hom search skipped (space above bound)").unwrap()
                }
            }
            out
        }
    })
}

// ------------------------------------------------------------ subquotient

fn cmd_subquotient(
    lambda: &str,
    outer: &str,
    inner: &str,
    p: Option<u64>,
    format: Format,
) -> Result<String, Failure> {
    let partition = parse_partition(lambda)?;
    let outer = parse_rvec(&partition, outer)?;
    let inner = parse_rvec(&partition, inner)?;
    if let Some(p) = p {
        require_prime(p)?;
    }
    if !inner.is_subideal_of(&outer)? {
        return Err(Failure::from(Error::NotSubideal));
    }

    let mut rows_json = Vec::new();
    let mut rows_ascii = String::new();
    let mut count = 0u64;
    for label in outer.ideals_between(&inner)? {
        count += 1;
        let order = subquotient_orbit_order(&inner, &label)?;
        let mut row = serde_json::Map::new();
        row.insert("order".into(), polynomial_json(&order));
        row.insert("rvec".into(), rvec_json(&label));
        let mut line = format!("<{}>  |orbit| = {order}", label.to_compact_string());
        if let Some(p) = p {
            let value = order.evaluate(p);
            row.insert("order_at_p".into(), json!(value.to_string()));
            write!(line, "  at p={p}: {value}").unwrap();
        }
        rows_ascii.push_str(&line);
        rows_ascii.push('\n');
        rows_json.push(Value::Object(row));
    }

    let density = match p {
        Some(p) => Some(maximal_orbit_density(&outer, &inner, p)?),
        None => None,
    };

    Ok(match format {
        Format::Json => {
            let mut object = serde_json::Map::new();
            object.insert("count".into(), json!(count));
            object.insert("inner".into(), rvec_json(&inner));
            object.insert("lambda".into(), json!(partition.parts()));
            object.insert("outer".into(), rvec_json(&outer));
            object.insert("rows".into(), Value::Array(rows_json));
            if let Some(density) = &density {
                object.insert("maximal_orbit_density".into(), json!(density.to_string()));
            }
            json_pretty(&Value::Object(object))
        }
        _ => {
            let mut out = format!(
                "orbits of the subquotient <{}> / <{}> of type {partition}\n",
                outer.to_compact_string(),
                inner.to_compact_string()
            );
            out.push_str(&rows_ascii);
            write!(out, "orbits: {count}").unwrap();
            if let Some(density) = density {
                write!(out, "\nmaximal orbit density: {density}").unwrap();
            }
            out
        }
    })
}

// ----------------------------------------------------------------- verify

fn cmd_verify(
    lambda: &str,
    p: u64,
    max_aut_space: Option<u128>,
    format: Format,
) -> Result<String, Failure> {
    let partition = parse_partition(lambda)?;
    require_prime(p)?;
    let bounds = bounds_from_env(max_aut_space);

    let started = Instant::now();
    let report = verify::run(&partition, p, bounds)?;
    let elapsed_ms = started.elapsed().as_millis() as u64;

    let rendered = match format {
        Format::Json => {
            let checks: Vec<Value> = report
                .checks
                .iter()
                .map(|check| {
                    let mut object = serde_json::Map::new();
                    object.insert("name".into(), json!(check.name));
                    object.insert("pass".into(), json!(check.pass));
                    if let Some(witness) = &check.witness {
                        object.insert("witness".into(), json!(witness));
                    }
                    Value::Object(object)
                })
                .collect();
            json_pretty(&json!({
                "checks": checks,
                "command": format!("verify --lambda {lambda} --p {p}"),
                "lambda": partition.parts(),
                "orbit_count": report.orbit_count,
                "p": p,
                "pass": report.all_pass(),
                "wall_time_ms": elapsed_ms,
            }))
        }
        _ => {
            let mut out = format!(
                "verify {partition} at p={p}: {} orbits, {} ms\n",
                report.orbit_count, elapsed_ms
            );
            for check in &report.checks {
                let status = if check.pass { "PASS" } else { "FAIL" };
                write!(out, "{status}  {}", check.name).unwrap();
                if let Some(witness) = &check.witness {
                    write!(out, "  [{witness}]").unwrap();
                }
                out.push('\n');
            }
            out.trim_end().to_string()
        }
    };

    if report.all_pass() {
        Ok(rendered)
    } else {
        // Emit the report before signaling the oracle disagreement.
        println!("{rendered}");
        Err(Failure::new(
            EXIT_THEOREM,
            "oracle and combinatorics disagree",
        ))
    }
}

// ----------------------------------------------------------------- chains

fn cmd_chains(n: u32) -> Result<String, Failure> {
    let count = count_maximal_chains(n)?;
    // Locate the count in the Catalan sequence for the footer.
    let mut catalan: u64 = 1;
    let mut index = 0u64;
    while catalan < count {
        index += 1;
        catalan = catalan * 2 * (2 * index - 1) / (index + 1);
    }
    let marker = if catalan == count {
        format!("C_{index}")
    } else {
        "not a Catalan number".to_string()
    };
    Ok(format!(
        "maximal chains in the first {n} columns: {count} ({marker})"
    ))
}
