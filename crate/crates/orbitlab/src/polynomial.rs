//! Sparse integer polynomials in the formal variable `p`.
//!
//! Orbit orders are polynomials in the prime, so all arithmetic here is
//! exact: big-integer coefficients keyed by exponent, zero coefficients
//! never stored.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// A polynomial in `p` with integer coefficients, stored sparsely.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct OrbitPolynomial {
    coefficients: BTreeMap<u64, BigInt>,
}

impl OrbitPolynomial {
    pub fn zero() -> Self {
        OrbitPolynomial::default()
    }

    pub fn one() -> Self {
        OrbitPolynomial::monomial(0, BigInt::one())
    }

    /// The single term `coefficient · p^exponent`.
    pub fn monomial(exponent: u64, coefficient: impl Into<BigInt>) -> Self {
        let coefficient = coefficient.into();
        let mut coefficients = BTreeMap::new();
        if !coefficient.is_zero() {
            coefficients.insert(exponent, coefficient);
        }
        OrbitPolynomial { coefficients }
    }

    /// `p^exponent`.
    pub fn power_of_p(exponent: u64) -> Self {
        OrbitPolynomial::monomial(exponent, BigInt::one())
    }

    pub fn is_zero(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u64> {
        self.coefficients.keys().next_back().copied()
    }

    /// True iff nonzero with leading coefficient one.
    pub fn is_monic(&self) -> bool {
        self.coefficients
            .values()
            .next_back()
            .is_some_and(|c| c.is_one())
    }

    /// Terms in descending exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (u64, &BigInt)> {
        self.coefficients.iter().rev().map(|(&e, c)| (e, c))
    }

    pub fn coefficient(&self, exponent: u64) -> BigInt {
        self.coefficients
            .get(&exponent)
            .cloned()
            .unwrap_or_else(BigInt::zero)
    }

    /// Exact big-integer evaluation at `p`.
    pub fn evaluate(&self, p: u64) -> BigInt {
        let base = BigInt::from(p);
        let mut acc = BigInt::zero();
        let mut power = BigInt::one();
        let mut last_exp = 0u64;
        for (&exp, coef) in &self.coefficients {
            power *= pow_big(&base, exp - last_exp);
            last_exp = exp;
            acc += coef * &power;
        }
        acc
    }

    /// Exact division by `p^exponent`; errors when any term sits below it.
    pub fn div_exact_power_of_p(&self, exponent: u64) -> Result<OrbitPolynomial> {
        if self.coefficients.keys().any(|&e| e < exponent) {
            return Err(Error::InexactDivision {
                divisor_exp: exponent,
            });
        }
        Ok(OrbitPolynomial {
            coefficients: self
                .coefficients
                .iter()
                .map(|(&e, c)| (e - exponent, c.clone()))
                .collect(),
        })
    }

    fn insert_term(&mut self, exponent: u64, delta: BigInt) {
        let entry = self
            .coefficients
            .entry(exponent)
            .or_insert_with(BigInt::zero);
        *entry += delta;
        if entry.is_zero() {
            self.coefficients.remove(&exponent);
        }
    }
}

fn pow_big(base: &BigInt, exp: u64) -> BigInt {
    base.pow(u32::try_from(exp).expect("exponent fits in u32"))
}

impl Add for &OrbitPolynomial {
    type Output = OrbitPolynomial;

    fn add(self, other: &OrbitPolynomial) -> OrbitPolynomial {
        let mut sum = self.clone();
        for (&exp, coef) in &other.coefficients {
            sum.insert_term(exp, coef.clone());
        }
        sum
    }
}

impl Sub for &OrbitPolynomial {
    type Output = OrbitPolynomial;

    fn sub(self, other: &OrbitPolynomial) -> OrbitPolynomial {
        let mut diff = self.clone();
        for (&exp, coef) in &other.coefficients {
            diff.insert_term(exp, -coef.clone());
        }
        diff
    }
}

impl Mul for &OrbitPolynomial {
    type Output = OrbitPolynomial;

    fn mul(self, other: &OrbitPolynomial) -> OrbitPolynomial {
        let mut product = OrbitPolynomial::zero();
        for (&ea, ca) in &self.coefficients {
            for (&eb, cb) in &other.coefficients {
                product.insert_term(ea + eb, ca * cb);
            }
        }
        product
    }
}

impl fmt::Display for OrbitPolynomial {
    /// Descending exponents with explicit signs, e.g.
    /// `p^16 - p^15 - p^14 + p^13` or `p^3 - 2p^2 + p` or `1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exp, coef)) in self.terms().enumerate() {
            let magnitude = coef.abs();
            if i == 0 {
                if coef.is_negative() {
                    write!(f, "-")?;
                }
            } else if coef.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = magnitude.is_one();
            match (exp, unit) {
                (0, _) => write!(f, "{magnitude}")?,
                (1, true) => write!(f, "p")?,
                (1, false) => write!(f, "{magnitude}p")?,
                (_, true) => write!(f, "p^{exp}")?,
                (_, false) => write!(f, "{magnitude}p^{exp}")?,
            }
        }
        Ok(())
    }
}
