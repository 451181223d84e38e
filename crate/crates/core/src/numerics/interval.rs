//! Certified rational enclosures of irrational quantities.
//!
//! Weight bounds like `w(G, p/L) <= 1/2` involve k-th roots and powers of e,
//! so they cannot be settled by rational arithmetic alone. A [`RatInterval`]
//! carries exact rational endpoints that are guaranteed to bracket the true
//! value; a comparison is certified only when the whole interval lands on one
//! side.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

/// Closed interval with exact rational endpoints, `lo <= hi`.
#[derive(Clone, Debug, PartialEq)]
pub struct RatInterval {
    lo: BigRational,
    hi: BigRational,
}

impl RatInterval {
    pub fn exact(x: BigRational) -> Self {
        RatInterval {
            lo: x.clone(),
            hi: x,
        }
    }

    pub fn new(lo: BigRational, hi: BigRational) -> Self {
        assert!(lo <= hi, "interval endpoints out of order");
        RatInterval { lo, hi }
    }

    pub fn from_u64(x: u64) -> Self {
        Self::exact(BigRational::from_integer(BigInt::from(x)))
    }

    pub fn lo(&self) -> &BigRational {
        &self.lo
    }

    pub fn hi(&self) -> &BigRational {
        &self.hi
    }

    pub fn add(&self, other: &RatInterval) -> Self {
        RatInterval {
            lo: &self.lo + &other.lo,
            hi: &self.hi + &other.hi,
        }
    }

    pub fn mul(&self, other: &RatInterval) -> Self {
        if !self.lo.is_negative() && !other.lo.is_negative() {
            return RatInterval {
                lo: &self.lo * &other.lo,
                hi: &self.hi * &other.hi,
            };
        }
        let cands = [
            &self.lo * &other.lo,
            &self.lo * &other.hi,
            &self.hi * &other.lo,
            &self.hi * &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    /// Division by a strictly positive interval.
    pub fn div_pos(&self, other: &RatInterval) -> Self {
        assert!(
            other.lo.is_positive(),
            "div_pos requires a strictly positive divisor"
        );
        let cands = [
            &self.lo / &other.lo,
            &self.lo / &other.hi,
            &self.hi / &other.lo,
            &self.hi / &other.hi,
        ];
        let lo = cands.iter().min().unwrap().clone();
        let hi = cands.iter().max().unwrap().clone();
        RatInterval { lo, hi }
    }

    pub fn powi(&self, exp: u32) -> Self {
        if exp == 0 {
            return RatInterval::exact(BigRational::one());
        }
        if !self.lo.is_negative() {
            // Powers of reduced fractions stay reduced, so skip the gcd.
            let pow =
                |x: &BigRational| BigRational::new_raw(x.numer().pow(exp), x.denom().pow(exp));
            return RatInterval {
                lo: pow(&self.lo),
                hi: pow(&self.hi),
            };
        }
        let mut out = self.clone();
        for _ in 1..exp {
            out = out.mul(self);
        }
        out
    }

    /// True when every point of `self` is `<=` every point of `other`.
    pub fn certified_le(&self, other: &RatInterval) -> bool {
        self.hi <= other.lo
    }

    /// True when every point of `self` is `>` every point of `other`.
    pub fn certified_gt(&self, other: &RatInterval) -> bool {
        self.lo > other.hi
    }

    pub fn width(&self) -> BigRational {
        &self.hi - &self.lo
    }

    pub fn to_f64_bounds(&self) -> (f64, f64) {
        (
            self.lo.to_f64().unwrap_or(f64::NAN),
            self.hi.to_f64().unwrap_or(f64::NAN),
        )
    }

    pub fn approx(&self) -> f64 {
        let (a, b) = self.to_f64_bounds();
        0.5 * (a + b)
    }
}

/// Integer k-th root, rounded down.
fn floor_kth_root(x: &BigUint, k: u32) -> BigUint {
    assert!(k >= 1);
    if x.is_zero() || x.is_one() || k == 1 {
        return x.clone();
    }
    // Newton iteration from a power-of-two overestimate.
    let bits = x.bits();
    let mut guess = BigUint::one() << (bits / u64::from(k) + 1);
    let km1 = BigUint::from(k - 1);
    let kk = BigUint::from(k);
    loop {
        let gp = guess.pow(k - 1);
        let next = (&km1 * &guess + x / gp) / &kk;
        if next >= guess {
            break;
        }
        guess = next;
    }
    while guess.pow(k) > *x {
        guess -= BigUint::one();
    }
    guess
}

/// Rational enclosure of `q^{1/k}` for `q >= 0`, with width `<= 2 * 10^-digits`.
pub fn kth_root(q: &BigRational, k: u32, digits: u32) -> Result<RatInterval> {
    if q.is_negative() {
        return Err(Error::InvalidParams(
            "kth_root requires a nonnegative argument".into(),
        ));
    }
    if k == 0 {
        return Err(Error::InvalidParams("kth_root requires k >= 1".into()));
    }
    if q.is_zero() {
        return Ok(RatInterval::exact(BigRational::zero()));
    }
    let scale = BigUint::from(10u32).pow(digits);
    // floor((q * scale^k)^(1/k)) / scale brackets the root from below.
    let num = q.numer().magnitude() * scale.pow(k);
    let scaled = num / q.denom().magnitude();
    let root = floor_kth_root(&scaled, k);
    let lo = BigRational::new(BigInt::from(root.clone()), BigInt::from(scale.clone()));
    let hi = BigRational::new(BigInt::from(root + BigUint::one()), BigInt::from(scale));
    Ok(RatInterval { lo, hi })
}

/// Rational enclosure of Euler's number from the series `sum 1/i!`.
///
/// The tail after `terms` summands is below `2/(terms+1)!`.
pub fn euler_e(terms: u32) -> RatInterval {
    let mut fact = BigUint::one();
    let mut sum = BigRational::zero();
    for i in 0..=u64::from(terms) {
        if i > 0 {
            fact *= BigUint::from(i);
        }
        sum += BigRational::new(BigInt::one(), BigInt::from(fact.clone()));
    }
    let tail_fact = &fact * BigUint::from(u64::from(terms) + 1);
    let tail = BigRational::new(BigInt::from(2), BigInt::from(tail_fact));
    RatInterval {
        lo: sum.clone(),
        hi: sum + tail,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn roots_bracket() {
        let half = rat(1, 2);
        let r = kth_root(&half, 2, 20).unwrap();
        let sqrt_half = std::f64::consts::FRAC_1_SQRT_2;
        let (lo, hi) = r.to_f64_bounds();
        assert!(lo <= sqrt_half && sqrt_half <= hi);
        assert!((hi - lo) < 1e-18);
        // Exact case: 8^(1/3) has lo exactly 2.
        let r = kth_root(&rat(8, 1), 3, 10).unwrap();
        assert_eq!(*r.lo(), rat(2, 1));
    }

    #[test]
    fn floor_root_edge_cases() {
        assert_eq!(
            floor_kth_root(&BigUint::from(26u32), 3),
            BigUint::from(2u32)
        );
        assert_eq!(
            floor_kth_root(&BigUint::from(27u32), 3),
            BigUint::from(3u32)
        );
        assert_eq!(
            floor_kth_root(&BigUint::from(28u32), 3),
            BigUint::from(3u32)
        );
        assert_eq!(floor_kth_root(&BigUint::zero(), 5), BigUint::zero());
    }

    #[test]
    fn e_enclosure() {
        let e = euler_e(25);
        let (lo, hi) = e.to_f64_bounds();
        assert!(lo <= std::f64::consts::E && std::f64::consts::E <= hi);
        assert!(e.width() < rat(1, 1_000_000_000_000_000));
    }

    #[test]
    fn interval_arithmetic() {
        let a = RatInterval::new(rat(1, 2), rat(3, 4));
        let b = RatInterval::new(rat(-2, 1), rat(1, 1));
        let p = a.mul(&b);
        assert_eq!(*p.lo(), rat(-3, 2));
        assert_eq!(*p.hi(), rat(3, 4));
        let q = a.powi(2);
        assert_eq!(*q.lo(), rat(1, 4));
        assert_eq!(*q.hi(), rat(9, 16));
        assert!(a.certified_le(&RatInterval::exact(rat(1, 1))));
        assert!(!a.certified_le(&RatInterval::exact(rat(2, 3))));
        let d = a.div_pos(&RatInterval::new(rat(1, 4), rat(1, 2)));
        assert_eq!(*d.lo(), rat(1, 1));
        assert_eq!(*d.hi(), rat(3, 1));
    }
}
