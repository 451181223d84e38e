//! Signed log-space scalars.
//!
//! A [`LogReal`] stores a sign and the natural log of the absolute value, so
//! products like `2^{3k} * e^{3k} * ln^{2k}(n)` evaluate without overflow.
//! Addition goes through log-sum-exp.

use std::cmp::Ordering;
use std::f64::consts::LN_10;
use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

/// log-sum-exp of two natural logs.
#[inline]
pub fn logsumexp(a: f64, b: f64) -> f64 {
    if a == f64::NEG_INFINITY && b == f64::NEG_INFINITY {
        return f64::NEG_INFINITY;
    }
    if a > b {
        a + (b - a).exp().ln_1p()
    } else {
        b + (a - b).exp().ln_1p()
    }
}

/// A real number represented as `sign * exp(ln_abs)`.
#[derive(Clone, Copy, Debug)]
pub struct LogReal {
    sign: i8,
    ln_abs: f64,
}

impl LogReal {
    pub const ZERO: LogReal = LogReal {
        sign: 0,
        ln_abs: f64::NEG_INFINITY,
    };
    pub const ONE: LogReal = LogReal {
        sign: 1,
        ln_abs: 0.0,
    };

    /// Positive value from its natural log.
    pub fn from_ln(ln_abs: f64) -> Self {
        LogReal { sign: 1, ln_abs }
    }

    pub fn from_f64(x: f64) -> Self {
        if x == 0.0 {
            LogReal::ZERO
        } else if x > 0.0 {
            LogReal {
                sign: 1,
                ln_abs: x.ln(),
            }
        } else {
            LogReal {
                sign: -1,
                ln_abs: (-x).ln(),
            }
        }
    }

    pub fn sign(&self) -> i8 {
        self.sign
    }

    pub fn is_zero(&self) -> bool {
        self.sign == 0
    }

    /// Natural log of the absolute value; `-inf` for zero.
    pub fn ln_abs(&self) -> f64 {
        if self.sign == 0 {
            f64::NEG_INFINITY
        } else {
            self.ln_abs
        }
    }

    /// Natural log of a positive value.
    ///
    /// Panics in debug builds when the value is not positive.
    pub fn ln(&self) -> f64 {
        debug_assert!(self.sign > 0, "ln of non-positive LogReal");
        self.ln_abs
    }

    pub fn to_f64(&self) -> f64 {
        match self.sign {
            0 => 0.0,
            1 => self.ln_abs.exp(),
            _ => -self.ln_abs.exp(),
        }
    }

    pub fn neg(&self) -> Self {
        LogReal {
            sign: -self.sign,
            ln_abs: self.ln_abs,
        }
    }

    pub fn mul(&self, other: &LogReal) -> Self {
        if self.sign == 0 || other.sign == 0 {
            return LogReal::ZERO;
        }
        LogReal {
            sign: self.sign * other.sign,
            ln_abs: self.ln_abs + other.ln_abs,
        }
    }

    /// Division; `other` must be nonzero.
    pub fn div(&self, other: &LogReal) -> Self {
        assert!(other.sign != 0, "division by zero LogReal");
        if self.sign == 0 {
            return LogReal::ZERO;
        }
        LogReal {
            sign: self.sign * other.sign,
            ln_abs: self.ln_abs - other.ln_abs,
        }
    }

    pub fn add(&self, other: &LogReal) -> Self {
        if self.sign == 0 {
            return *other;
        }
        if other.sign == 0 {
            return *self;
        }
        if self.sign == other.sign {
            return LogReal {
                sign: self.sign,
                ln_abs: logsumexp(self.ln_abs, other.ln_abs),
            };
        }
        // Opposite signs: log-difference, larger magnitude wins.
        match self
            .ln_abs
            .partial_cmp(&other.ln_abs)
            .unwrap_or(Ordering::Equal)
        {
            Ordering::Equal => LogReal::ZERO,
            Ordering::Greater => LogReal {
                sign: self.sign,
                ln_abs: self.ln_abs + (-((other.ln_abs - self.ln_abs).exp())).ln_1p(),
            },
            Ordering::Less => LogReal {
                sign: other.sign,
                ln_abs: other.ln_abs + (-((self.ln_abs - other.ln_abs).exp())).ln_1p(),
            },
        }
    }

    pub fn sub(&self, other: &LogReal) -> Self {
        self.add(&other.neg())
    }

    /// Sum in log space.
    pub fn sum<I: IntoIterator<Item = LogReal>>(iter: I) -> Self {
        iter.into_iter().fold(LogReal::ZERO, |acc, x| acc.add(&x))
    }

    /// Real power of a nonnegative value.
    pub fn powf(&self, exp: f64) -> Self {
        debug_assert!(self.sign >= 0, "powf of negative LogReal");
        if self.sign == 0 {
            if exp == 0.0 {
                return LogReal::ONE;
            }
            return LogReal::ZERO;
        }
        LogReal {
            sign: 1,
            ln_abs: self.ln_abs * exp,
        }
    }

    pub fn powi(&self, exp: i32) -> Self {
        if self.sign == 0 {
            if exp == 0 {
                return LogReal::ONE;
            }
            return LogReal::ZERO;
        }
        let sign = if exp % 2 == 0 { 1 } else { self.sign };
        LogReal {
            sign,
            ln_abs: self.ln_abs * f64::from(exp),
        }
    }

    /// Decimal rendering, scientific notation, stable across platforms.
    pub fn decimal_string(&self) -> String {
        if self.sign == 0 {
            return "0".to_string();
        }
        let prefix = if self.sign < 0 { "-" } else { "" };
        if self.ln_abs == f64::INFINITY {
            return format!("{prefix}inf");
        }
        let log10 = self.ln_abs / LN_10;
        let e10 = log10.floor();
        let mut mant = 10f64.powf(log10 - e10);
        let mut exp10 = e10 as i64;
        // Rounding the mantissa to 6 places can push it to 10.0.
        if format!("{mant:.6}").starts_with("10") {
            mant /= 10.0;
            exp10 += 1;
        }
        format!("{prefix}{mant:.6}e{exp10}")
    }
}

impl PartialEq for LogReal {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for LogReal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        if self.sign != other.sign {
            return self.sign.partial_cmp(&other.sign);
        }
        match self.sign {
            0 => Some(Ordering::Equal),
            1 => self.ln_abs.partial_cmp(&other.ln_abs),
            _ => other.ln_abs.partial_cmp(&self.ln_abs),
        }
    }
}

impl fmt::Display for LogReal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.decimal_string())
    }
}

impl Serialize for LogReal {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("LogReal", 3)?;
        s.serialize_field("sign", &self.sign)?;
        s.serialize_field("log_abs", &self.ln_abs())?;
        s.serialize_field("decimal", &self.decimal_string())?;
        s.end()
    }
}
