//! Exact big-integer combinatorics and their log-space counterparts.

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::LogReal;

/// Exact binomial coefficient; 0 when `b > a`.
pub fn binomial(a: u64, b: u64) -> BigUint {
    if b > a {
        return BigUint::zero();
    }
    let b = b.min(a - b);
    let mut res = BigUint::one();
    for i in 0..b {
        // Exact at every step: the running product of i+1 consecutive
        // integers is divisible by (i+1)!.
        res = res * BigUint::from(a - i) / BigUint::from(i + 1);
    }
    res
}

/// Exact factorial.
pub fn factorial(n: u64) -> BigUint {
    let mut res = BigUint::one();
    for i in 2..=n {
        res *= BigUint::from(i);
    }
    res
}

/// Falling factorial `x * (x-1) * ... * (x-u+1)`; 1 for `u = 0`.
pub fn falling_factorial(x: i64, u: u32) -> BigInt {
    let mut res = BigInt::one();
    for i in 0..i64::from(u) {
        res *= BigInt::from(x - i);
    }
    res
}

/// `ln C(a, b)` as a [`LogReal`]; zero when `b > a`.
pub fn log_binomial(a: i64, b: i64) -> Result<LogReal> {
    if a < 0 {
        return Err(Error::InvalidParams(format!(
            "log_binomial requires a >= 0, got a = {a}"
        )));
    }
    if b < 0 {
        return Err(Error::InvalidParams(format!(
            "log_binomial requires b >= 0, got b = {b}"
        )));
    }
    if b > a {
        return Ok(LogReal::ZERO);
    }
    let (a, b) = (a as u64, b as u64);
    let b = b.min(a - b);
    let mut ln = 0.0f64;
    for i in 0..b {
        ln += ((a - i) as f64).ln() - ((i + 1) as f64).ln();
    }
    Ok(LogReal::from_ln(ln))
}

/// Natural log of a [`BigUint`], accurate to f64 precision.
pub fn ln_biguint(x: &BigUint) -> f64 {
    if x.is_zero() {
        return f64::NEG_INFINITY;
    }
    let bits = x.bits();
    if bits <= 64 {
        let v: u64 = x.try_into().expect("fits in u64");
        return (v as f64).ln();
    }
    // Take the top 64 bits and account for the shift.
    let shift = bits - 64;
    let top: u64 = (x >> shift).try_into().expect("top 64 bits");
    (top as f64).ln() + (shift as f64) * std::f64::consts::LN_2
}
