//! Exact hypergeometric laws over big rationals.
//!
//! Draw `draws` items without replacement from a population of size
//! `population` containing `marked` marked items; the law describes the
//! number of marked items drawn. All masses are exact rationals sharing the
//! denominator `C(population, draws)`.

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::numerics::big::binomial;

fn binom_u128(a: u64, b: u64) -> Option<u128> {
    if b > a {
        return Some(0);
    }
    let b = b.min(a - b);
    let mut res: u128 = 1;
    for i in 0..b {
        res = res.checked_mul(u128::from(a - i))?;
        res /= u128::from(i + 1);
    }
    Some(res)
}

fn fast_masses(
    population: u64,
    marked: u64,
    draws: u64,
    lo: u64,
    hi: u64,
) -> Option<(Vec<u128>, u128)> {
    let den = binom_u128(population, draws)?;
    let nums = (lo..=hi)
        .map(|j| binom_u128(marked, j)?.checked_mul(binom_u128(population - marked, draws - j)?))
        .collect::<Option<Vec<u128>>>()?;
    Some((nums, den))
}

#[derive(Clone, Debug)]
pub struct HypergeomLaw {
    population: u64,
    marked: u64,
    draws: u64,
    lo: u64,
    hi: u64,
    numerators: Vec<BigUint>,
    denominator: BigUint,
}

impl HypergeomLaw {
    pub fn new(population: u64, marked: u64, draws: u64) -> Result<Self> {
        if marked > population {
            return Err(Error::InvalidParams(format!(
                "hypergeometric: marked {marked} exceeds population {population}"
            )));
        }
        if draws < 1 || draws > population {
            return Err(Error::InvalidParams(format!(
                "hypergeometric: draws {draws} outside [1, {population}]"
            )));
        }
        let lo = (draws + marked).saturating_sub(population);
        let hi = draws.min(marked);
        // u128 fast path covers every desk-scale law; the big-integer path
        // takes over on overflow.
        let (numerators, denominator) = match fast_masses(population, marked, draws, lo, hi) {
            Some((nums, den)) => (
                nums.into_iter().map(BigUint::from).collect(),
                BigUint::from(den),
            ),
            None => (
                (lo..=hi)
                    .map(|j| binomial(marked, j) * binomial(population - marked, draws - j))
                    .collect::<Vec<BigUint>>(),
                binomial(population, draws),
            ),
        };
        // Vandermonde: the numerators over the full support sum to the denominator.
        let total: BigUint = numerators.iter().sum();
        assert_eq!(total, denominator, "hypergeometric masses must sum to 1");
        Ok(HypergeomLaw {
            population,
            marked,
            draws,
            lo,
            hi,
            numerators,
            denominator,
        })
    }

    pub fn population(&self) -> u64 {
        self.population
    }

    pub fn marked(&self) -> u64 {
        self.marked
    }

    pub fn draws(&self) -> u64 {
        self.draws
    }

    /// Inclusive support range `[max(0, draws+marked-population), min(draws, marked)]`.
    pub fn support(&self) -> std::ops::RangeInclusive<u64> {
        self.lo..=self.hi
    }

    fn ratio(&self, num: BigUint) -> BigRational {
        BigRational::new(BigInt::from(num), BigInt::from(self.denominator.clone()))
    }

    /// Exact `P(X = j)`.
    pub fn pmf(&self, j: u64) -> BigRational {
        if j < self.lo || j > self.hi {
            return BigRational::zero();
        }
        self.ratio(self.numerators[(j - self.lo) as usize].clone())
    }

    /// Exact upper tail `P(X >= j)`.
    pub fn tail(&self, j: u64) -> BigRational {
        if j <= self.lo {
            return BigRational::one();
        }
        if j > self.hi {
            return BigRational::zero();
        }
        let num: BigUint = self.numerators[(j - self.lo) as usize..].iter().sum();
        self.ratio(num)
    }

    /// Exact mean, computed from the pmf.
    pub fn mean(&self) -> BigRational {
        let mut num = BigUint::zero();
        for (off, n) in self.numerators.iter().enumerate() {
            num += n * BigUint::from(self.lo + off as u64);
        }
        self.ratio(num)
    }

    /// Sum of all masses; exactly one by construction.
    pub fn total_mass(&self) -> BigRational {
        self.ratio(self.numerators.iter().sum())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn small_law() {
        let law = HypergeomLaw::new(5, 3, 3).unwrap();
        assert_eq!(law.support(), 1..=3);
        assert_eq!(law.pmf(2), rat(6, 10));
        assert_eq!(law.pmf(1), rat(3, 10));
        assert_eq!(law.pmf(3), rat(1, 10));
        assert_eq!(law.pmf(0), BigRational::zero());
        assert!(law.total_mass().is_one());
    }

    #[test]
    fn degenerate_no_marked() {
        let law = HypergeomLaw::new(12, 0, 4).unwrap();
        assert_eq!(law.pmf(0), BigRational::one());
        assert_eq!(law.tail(1), BigRational::zero());
    }

    #[test]
    fn tail_20_6_3() {
        let law = HypergeomLaw::new(20, 6, 3).unwrap();
        assert_eq!(law.tail(2), rat(230, 1140));
        assert_eq!(law.tail(0), BigRational::one());
    }

    #[test]
    fn mean_is_draws_marked_over_population() {
        for population in 1..=25u64 {
            for marked in 0..=population {
                for draws in 1..=population {
                    let law = HypergeomLaw::new(population, marked, draws).unwrap();
                    let expect = rat((draws * marked) as i64, population as i64);
                    assert_eq!(law.mean(), expect);
                }
            }
        }
    }

    #[test]
    fn rejects_bad_params() {
        assert!(HypergeomLaw::new(5, 6, 2).is_err());
        assert!(HypergeomLaw::new(5, 3, 0).is_err());
        assert!(HypergeomLaw::new(5, 3, 6).is_err());
    }

    #[test]
    fn big_integer_path_beyond_u128() {
        // C(200, 100) overflows u128, forcing the big-integer branch.
        let law = HypergeomLaw::new(200, 100, 100).unwrap();
        assert!(law.total_mass().is_one());
        assert_eq!(law.mean(), rat(50, 1));
        assert_eq!(law.tail(0), BigRational::one());
    }
}
