//! Randomized union covers and their Monte Carlo analysis.
//!
//! A cover sample draws `s * t` edges uniformly with replacement, groups them
//! into `t` unions `e_i`, and records for each union the overlap trace
//! `Y_j = |e_{i,j} ∩ (e_{i,1} ∪ ... ∪ e_{i,j-1})|`, so that
//! `|e_i| = s*k - sum_j Y_j` holds per draw.
//!
//! Trials are independent given per-trial derived seeds, so Monte Carlo runs
//! parallelize and stay reproducible regardless of thread count.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::conditions::{ConditionPoint, ConditionReport};
use crate::error::{Error, Result};
use crate::model::{Instance, Subset, SubsetFamily};
use crate::numerics::{log_binomial, LogReal};

/// Cap on `s * t` draws materialized per cover sample. Beyond it the weight
/// estimators switch to the analytic path and flag it.
pub const MAX_MATERIALIZED_DRAWS: u64 = 1_000_000;

/// 97.5% normal quantile, for two-sided 95% intervals.
const WILSON_Z: f64 = 1.959963984540054;

fn splitmix64(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9E37_79B9_7F4A_7C15);
    let mut z = x;
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// Deterministic per-trial RNG derived from a base seed and trial index.
pub(crate) fn trial_rng(seed: u64, trial: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(splitmix64(seed ^ splitmix64(trial.wrapping_add(1))))
}

/// Parameters of the randomized cover construction.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CoverParams {
    pub s: u32,
    /// Number of unions. `t = 0` is the degenerate empty cover.
    pub t: u64,
    pub l: f64,
    pub seed: u64,
}

impl CoverParams {
    pub fn new(s: u32, t: u64, l: f64, seed: u64) -> Result<Self> {
        if s < 1 {
            return Err(Error::InvalidParams("cover params require s >= 1".into()));
        }
        if !l.is_finite() || l <= 1.0 {
            return Err(Error::InvalidParams(format!(
                "cover params require L > 1, got {l}"
            )));
        }
        Ok(CoverParams { s, t, l, seed })
    }

    /// Default `s = ceil(ln(n)/k)`.
    pub fn default_s(inst: &Instance) -> u32 {
        let s = (f64::from(inst.n()).ln() / f64::from(inst.k())).ceil();
        (s as u32).max(1)
    }

    /// Default `t = ceil(p^{-s k} * n)`; errors when it does not fit in u64.
    pub fn default_t(inst: &Instance, s: u32) -> Result<u64> {
        let ln_p = inst.ln_p()?;
        let ln_t = -(f64::from(s) * f64::from(inst.k()) * ln_p) + f64::from(inst.n()).ln();
        if ln_t > (u64::MAX as f64).ln() - 1.0 {
            return Err(Error::TooLarge {
                what: "default t",
                value: u128::MAX,
                limit: u128::from(u64::MAX),
            });
        }
        Ok(ln_t.exp().ceil() as u64)
    }
}

/// One materialized cover draw.
#[derive(Clone, Debug)]
pub struct CoverSample {
    /// The family `G` (duplicate unions collapse).
    pub unions: SubsetFamily,
    /// The unions `e_i` in draw order, duplicates kept.
    pub union_list: Vec<Subset>,
    /// Per union, the overlap trace `(Y_j)_{j in [s]}`; `Y_1 = 0` always.
    pub y_traces: Vec<Vec<u32>>,
    /// `|e_i|` per union, aligned with `union_list`.
    pub sizes: Vec<u32>,
}

/// Draw one union of `s` edges and its overlap trace.
pub(crate) fn draw_union_trace<R: Rng>(inst: &Instance, s: u32, rng: &mut R) -> (Subset, Vec<u32>) {
    let d = inst.d() as usize;
    let mut union = Subset::EMPTY;
    let mut trace = Vec::with_capacity(s as usize);
    for _ in 0..s {
        let e = inst.edges()[rng.random_range(0..d)];
        trace.push(e.intersection(&union).len());
        union = union.union(&e);
    }
    debug_assert_eq!(
        union.len(),
        s * inst.k() - trace.iter().sum::<u32>(),
        "trace identity violated"
    );
    (union, trace)
}

/// Materialize a full cover sample; deterministic given the seed.
pub fn sample_cover(inst: &Instance, params: &CoverParams) -> Result<CoverSample> {
    sample_cover_with(inst, params, ChaCha8Rng::seed_from_u64(params.seed))
}

/// The cover sample the Monte Carlo estimators see at a given trial index.
pub fn sample_cover_at_trial(
    inst: &Instance,
    params: &CoverParams,
    trial: u64,
) -> Result<CoverSample> {
    sample_cover_with(inst, params, trial_rng(params.seed, trial))
}

fn sample_cover_with(
    inst: &Instance,
    params: &CoverParams,
    mut rng: ChaCha8Rng,
) -> Result<CoverSample> {
    let draws = u64::from(params.s).saturating_mul(params.t);
    if draws > MAX_MATERIALIZED_DRAWS {
        return Err(Error::TooLarge {
            what: "cover sample draws",
            value: u128::from(draws),
            limit: u128::from(MAX_MATERIALIZED_DRAWS),
        });
    }
    let mut union_list = Vec::with_capacity(params.t as usize);
    let mut y_traces = Vec::with_capacity(params.t as usize);
    let mut sizes = Vec::with_capacity(params.t as usize);
    for _ in 0..params.t {
        let (u, trace) = draw_union_trace(inst, params.s, &mut rng);
        sizes.push(u.len());
        union_list.push(u);
        y_traces.push(trace);
    }
    Ok(CoverSample {
        unions: SubsetFamily::new(union_list.clone()),
        union_list,
        y_traces,
        sizes,
    })
}

/// Wilson 95% score interval for a binomial proportion.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct WilsonInterval {
    pub lo: f64,
    pub hi: f64,
    /// Implied standard error, `(hi - lo) / (2 z)`.
    pub se: f64,
}

pub fn wilson_interval(successes: u64, trials: u64) -> WilsonInterval {
    if trials == 0 {
        return WilsonInterval {
            lo: 0.0,
            hi: 1.0,
            se: 0.5,
        };
    }
    let n = trials as f64;
    let p = successes as f64 / n;
    let z2 = WILSON_Z * WILSON_Z;
    let denom = 1.0 + z2 / n;
    let center = (p + z2 / (2.0 * n)) / denom;
    let half = WILSON_Z * (p * (1.0 - p) / n + z2 / (4.0 * n * n)).sqrt() / denom;
    WilsonInterval {
        lo: (center - half).max(0.0),
        hi: (center + half).min(1.0),
        se: half / WILSON_Z,
    }
}

/// Map-reduce over seeded independent trials, order-stable in both modes.
fn run_trials<T, F>(trials: u64, seed: u64, per_trial: F) -> Vec<T>
where
    T: Send,
    F: Fn(&mut ChaCha8Rng) -> T + Sync + Send,
{
    #[cfg(feature = "parallel")]
    {
        (0..trials)
            .into_par_iter()
            .map(|i| per_trial(&mut trial_rng(seed, i)))
            .collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..trials)
            .map(|i| per_trial(&mut trial_rng(seed, i)))
            .collect()
    }
}

/// Empirical cover probability against the analytic lower bounds.
#[derive(Clone, Debug, Serialize)]
pub struct CoverageReport {
    pub s: u32,
    pub t: u64,
    pub l: f64,
    pub seed: u64,
    pub trials: u64,
    pub successes: u64,
    pub coverage: f64,
    pub wilson: WilsonInterval,
    /// Number of minimal elements of the upset.
    pub m: usize,
    pub p: f64,
    /// `1 - m (1 - p^{sk})^t`, the sharp union bound.
    pub bound_union: f64,
    /// `1 - exp(ln m - p^{sk} t)`, the exponential relaxation.
    pub bound_exponential: f64,
    pub warnings: Vec<String>,
}

/// Estimate the probability that the sampled family covers the upset.
pub fn coverage_probability(
    inst: &Instance,
    params: &CoverParams,
    trials: u64,
) -> Result<CoverageReport> {
    let summary = inst.minimal_elements()?;
    let draws = u64::from(params.s).saturating_mul(params.t);
    if draws > MAX_MATERIALIZED_DRAWS {
        return Err(Error::TooLarge {
            what: "coverage draws per trial",
            value: u128::from(draws),
            limit: u128::from(MAX_MATERIALIZED_DRAWS),
        });
    }
    let p = inst.solve_p()?;
    let minimal = summary.minimal.sets().to_vec();

    let successes: u64 = if params.t == 0 {
        0
    } else {
        let hits = run_trials(trials, params.seed, |rng| {
            let mut unions = Vec::with_capacity(params.t as usize);
            for _ in 0..params.t {
                let (u, _) = draw_union_trace(inst, params.s, rng);
                unions.push(u);
            }
            let covered = minimal
                .iter()
                .all(|s| unions.iter().any(|e| e.is_subset_of(s)));
            u64::from(covered)
        });
        hits.iter().sum()
    };

    let coverage = if trials == 0 {
        0.0
    } else {
        successes as f64 / trials as f64
    };
    let m = summary.m;
    let psk = p.powi((params.s * inst.k()) as i32);
    let bound_union = 1.0 - m as f64 * (1.0 - psk).powi(params.t.min(i32::MAX as u64) as i32);
    let bound_exponential = 1.0 - ((m as f64).ln() - psk * params.t as f64).exp();
    let mut warnings = inst.assumption_warnings(Some(params.l));
    if params.t == 0 {
        warnings.push("t = 0: the cover is empty and coverage is defined as 0".into());
    }
    Ok(CoverageReport {
        s: params.s,
        t: params.t,
        l: params.l,
        seed: params.seed,
        trials,
        successes,
        coverage,
        wilson: wilson_interval(successes, trials),
        m,
        p,
        bound_union,
        bound_exponential,
        warnings,
    })
}

/// Empirical check of the conditional-expectation transfer
/// `E[w | covers] <= E[w] / P(covers)`.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionalTransfer {
    pub trials: u64,
    pub covered: u64,
    pub p_cover: f64,
    /// Mean of `w(G, p/L)` over all trials, duplicates collapsed.
    pub mean_weight: f64,
    pub mean_weight_given_cover: f64,
    /// `mean_weight / p_cover`.
    pub transfer_bound: f64,
    /// Standard error of the conditional mean.
    pub sigma: f64,
    pub holds: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct WeightReport {
    pub s: u32,
    pub t: u64,
    pub l: f64,
    pub seed: u64,
    pub trials: u64,
    /// `t * E[(p/L)^{|e_1|}]`, the expected multiset weight.
    pub estimate: LogReal,
    /// Standard error of the estimate in linear space; `None` for the
    /// closed form.
    pub std_error: Option<f64>,
    /// `s = 1` makes `|e_1| = k` deterministic.
    pub closed_form: bool,
    /// Set when `G` was never materialized (the estimate samples `|e_1|` only).
    pub analytic_only: bool,
    pub conditional: Option<ConditionalTransfer>,
    pub warnings: Vec<String>,
}

/// Estimate `E[w(G, p/L)]` and, when feasible, the conditional transfer.
pub fn expected_cover_weight(
    inst: &Instance,
    params: &CoverParams,
    trials: u64,
) -> Result<WeightReport> {
    let p = inst.solve_p()?;
    let q = p / params.l;
    let k = inst.k();
    let mut warnings = inst.assumption_warnings(Some(params.l));

    let (estimate, std_error, closed_form) = if params.s == 1 {
        // |e_1| = k deterministically: t * (p/L)^k, no sampling.
        let est = LogReal::from_f64(params.t as f64).mul(&LogReal::from_f64(q).powi(k as i32));
        (est, None, true)
    } else {
        let values = run_trials(trials, params.seed, |rng| {
            let (u, _) = draw_union_trace(inst, params.s, rng);
            q.powi(u.len() as i32)
        });
        let n = values.len().max(1) as f64;
        let mean: f64 = values.iter().sum::<f64>() / n;
        let var: f64 = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n.max(2.0);
        let se = (var / n).sqrt() * params.t as f64;
        let est = LogReal::from_f64(params.t as f64).mul(&LogReal::from_f64(mean));
        (est, Some(se), false)
    };

    // Conditional transfer needs materialized covers and an exact oracle.
    let draws = u64::from(params.s).saturating_mul(params.t);
    let materializable = inst.n() <= crate::model::ENUMERATION_LIMIT
        && draws <= MAX_MATERIALIZED_DRAWS
        && params.t > 0;
    let conditional = if materializable && trials > 0 {
        let minimal = inst.minimal_elements()?.minimal.sets().to_vec();
        let outcomes: Vec<(f64, bool)> = run_trials(trials, params.seed, |rng| {
            let mut unions = Vec::with_capacity(params.t as usize);
            for _ in 0..params.t {
                let (u, _) = draw_union_trace(inst, params.s, rng);
                unions.push(u);
            }
            let fam = SubsetFamily::new(unions);
            let w = fam.weight(q).to_f64();
            let covered = minimal
                .iter()
                .all(|s| fam.sets().iter().any(|e| e.is_subset_of(s)));
            (w, covered)
        });
        let n = outcomes.len() as f64;
        let covered = outcomes.iter().filter(|(_, c)| *c).count() as u64;
        let mean_weight = outcomes.iter().map(|(w, _)| w).sum::<f64>() / n;
        let p_cover = covered as f64 / n;
        let cond: Vec<f64> = outcomes
            .iter()
            .filter(|(_, c)| *c)
            .map(|(w, _)| *w)
            .collect();
        let mean_given = if cond.is_empty() {
            0.0
        } else {
            cond.iter().sum::<f64>() / cond.len() as f64
        };
        let var_given = if cond.len() > 1 {
            cond.iter().map(|w| (w - mean_given).powi(2)).sum::<f64>() / cond.len() as f64
        } else {
            0.0
        };
        let sigma = (var_given / cond.len().max(1) as f64).sqrt();
        let transfer_bound = if p_cover > 0.0 {
            mean_weight / p_cover
        } else {
            f64::INFINITY
        };
        Some(ConditionalTransfer {
            trials,
            covered,
            p_cover,
            mean_weight,
            mean_weight_given_cover: mean_given,
            transfer_bound,
            sigma,
            holds: mean_given <= transfer_bound + 3.0 * sigma,
        })
    } else {
        None
    };
    let analytic_only = !materializable;
    if analytic_only {
        warnings.push(format!(
            "t = {} is evaluated analytically; the cover family was not materialized",
            params.t
        ));
    }

    Ok(WeightReport {
        s: params.s,
        t: params.t,
        l: params.l,
        seed: params.seed,
        trials,
        estimate,
        std_error,
        closed_form,
        analytic_only,
        conditional,
        warnings,
    })
}

/// How the minimal-element count entered the single-draw construction.
#[derive(Clone, Debug, Serialize)]
pub enum MinimalCountMode {
    /// Exact enumeration; holds the count.
    Exact(usize),
    /// Upper bound `C(d, ceil(r))`; holds `ln` of the bound.
    BinomialBound(f64),
}

/// Report of the single-draw (`s = 1`) construction.
#[derive(Clone, Debug, Serialize)]
pub struct S1Report {
    pub c: f64,
    pub l: f64,
    pub seed: u64,
    /// Hypothesis `k >= log_c(r) + log_c(ln n)`.
    pub hypothesis_lhs: f64,
    pub hypothesis_rhs: f64,
    pub hypothesis_ok: bool,
    pub m_mode: MinimalCountMode,
    pub ln_2m: f64,
    pub t: u64,
    pub report: ConditionReport,
}

/// Evaluate the single-draw construction: `s = 1`, `t = ceil(p^{-k} ln(2m))`,
/// and the chain `p^{-k} ln(2m) (p/L)^k <= k r ln(n) / (2c)^k <= 1/2`.
///
/// Returns the report and a materialized sample at the chosen `t` when it
/// fits the draw cap.
pub fn single_draw_construction(
    inst: &Instance,
    c: f64,
    l: f64,
    seed: u64,
    exact_m: bool,
) -> Result<(S1Report, Option<CoverSample>)> {
    if !c.is_finite() || c <= 1.0 {
        return Err(Error::InvalidParams(format!("requires c > 1, got {c}")));
    }
    let k = f64::from(inst.k());
    let n = f64::from(inst.n());
    let r = inst.r_f64();
    let ln_p = inst.ln_p()?;

    let hypothesis_rhs = r.ln() / c.ln() + n.ln().ln() / c.ln();
    let hypothesis_ok = k >= hypothesis_rhs;

    let (m_mode, ln_2m) = if exact_m {
        let summary = inst.minimal_elements()?;
        let m = summary.m.max(1);
        (MinimalCountMode::Exact(summary.m), (2.0 * m as f64).ln())
    } else {
        // Every upset member holds at least ceil(r) edges, so m <= C(d, ceil(r)).
        let ceil_r = inst.r().ceil().to_integer();
        let ceil_r = i64::try_from(&ceil_r)
            .map_err(|_| Error::InvalidParams("r too large for the binomial bound".into()))?;
        let ln_m = log_binomial(inst.d() as i64, ceil_r)?.ln_abs().max(0.0);
        (MinimalCountMode::BinomialBound(ln_m), 2f64.ln() + ln_m)
    };

    // E[w(G, p/L)] = p^{-k} ln(2m) (p/L)^k = ln(2m)/L^k.
    let expected_weight = LogReal::from_ln(ln_2m.ln() - k * l.ln());
    let middle = LogReal::from_f64(k * r * n.ln() / (2.0 * c).powf(k));
    let half = LogReal::from_f64(0.5);

    let points = vec![
        ConditionPoint::exact(1, expected_weight, middle, None),
        ConditionPoint::exact(2, middle, half, None),
    ];
    let mut warnings = inst.assumption_warnings(Some(l));
    if !hypothesis_ok {
        warnings.push(format!(
            "hypothesis k >= log_c(r) + log_c(ln n) fails: {k} < {hypothesis_rhs:.6}"
        ));
    }
    if l < 2.0 * c {
        warnings.push(format!("L = {l} is below 2c = {}", 2.0 * c));
    }
    let report = ConditionReport::from_points("single-draw-construction".into(), points, warnings);

    let t = (ln_2m * (-k * ln_p).exp()).ceil().max(1.0) as u64;
    let params = CoverParams::new(1, t, l, seed)?;
    let sample = match sample_cover(inst, &params) {
        Ok(s) => Some(s),
        Err(Error::TooLarge { .. }) => None,
        Err(e) => return Err(e),
    };

    Ok((
        S1Report {
            c,
            l,
            seed,
            hypothesis_lhs: k,
            hypothesis_rhs,
            hypothesis_ok,
            m_mode,
            ln_2m,
            t,
            report,
        },
        sample,
    ))
}

/// Internal hook for the empirical sum-overlap law.
pub(crate) fn trace_sums(inst: &Instance, s: u32, trials: u64, seed: u64) -> Vec<u32> {
    run_trials(trials, seed, |rng| {
        let (_, trace) = draw_union_trace(inst, s, rng);
        trace.iter().sum()
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::conditions::Verdict;
    use num_bigint::BigInt;
    use num_rational::BigRational;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    fn cycle4() -> Instance {
        Instance::from_edge_lists(
            4,
            2,
            &[vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 0]],
            rat(2, 1),
        )
        .unwrap()
    }

    #[test]
    fn s1_sample_shape() {
        let inst = cycle4();
        let params = CoverParams::new(1, 3, 2.0 * std::f64::consts::E, 42).unwrap();
        let sample = sample_cover(&inst, &params).unwrap();
        assert_eq!(sample.union_list.len(), 3);
        for (u, trace) in sample.union_list.iter().zip(&sample.y_traces) {
            assert_eq!(u.len(), 2);
            assert_eq!(trace, &vec![0]);
        }
    }

    #[test]
    fn trace_identity_and_determinism() {
        let inst = cycle4();
        let params = CoverParams::new(3, 40, 6.0, 7).unwrap();
        let a = sample_cover(&inst, &params).unwrap();
        let b = sample_cover(&inst, &params).unwrap();
        assert_eq!(a.union_list, b.union_list);
        assert_eq!(a.y_traces, b.y_traces);
        for (i, trace) in a.y_traces.iter().enumerate() {
            assert_eq!(trace[0], 0, "Y_1 must be 0");
            assert_eq!(
                a.sizes[i],
                3 * inst.k() - trace.iter().sum::<u32>(),
                "size identity"
            );
        }
        let other = sample_cover(&inst, &CoverParams::new(3, 40, 6.0, 8).unwrap()).unwrap();
        assert_ne!(a.union_list, other.union_list);
    }

    #[test]
    fn coverage_lemma_bound() {
        let inst = cycle4();
        // t = ceil(p^{-2} ln(2m)) = ceil(2 ln 8) = 5.
        let params = CoverParams::new(1, 5, 2.0 * std::f64::consts::E, 1234).unwrap();
        let report = coverage_probability(&inst, &params, 10_000).unwrap();
        assert_eq!(report.m, 4);
        // 1 - 4 (1/2)^5 = 0.875.
        assert!((report.bound_union - 0.875).abs() < 1e-12);
        assert!(report.bound_union >= 0.5);
        assert!(report.coverage >= 0.5 - 3.0 * report.wilson.se);
        assert!(report.coverage >= report.bound_union - 3.0 * report.wilson.se);
    }

    #[test]
    fn coverage_t_zero_and_large_t() {
        let inst = cycle4();
        let params = CoverParams::new(1, 0, 6.0, 5).unwrap();
        let report = coverage_probability(&inst, &params, 100).unwrap();
        assert_eq!(report.coverage, 0.0);

        let params = CoverParams::new(1, 50, 6.0, 5).unwrap();
        let report = coverage_probability(&inst, &params, 4_000).unwrap();
        assert!(report.coverage >= 0.99);
    }

    #[test]
    fn expected_weight_closed_form() {
        let inst = cycle4();
        let l = 2.0 * std::f64::consts::E;
        let params = CoverParams::new(1, 8, l, 3).unwrap();
        let report = expected_cover_weight(&inst, &params, 200).unwrap();
        assert!(report.closed_form);
        let expect = 8.0 * (0.5f64.sqrt() / l).powi(2);
        assert!((report.estimate.to_f64() - expect).abs() < 1e-12);
        assert!((expect - 0.1353).abs() < 1e-3);
        // Large L drives the estimate to zero.
        let params = CoverParams::new(1, 8, 1e9, 3).unwrap();
        let report = expected_cover_weight(&inst, &params, 0).unwrap();
        assert!(report.estimate.to_f64() < 1e-15);
    }

    #[test]
    fn expected_weight_matches_exact_pair_law() {
        // Clique instance (5,3,2), r = 2: |e_1| = 6 - Y_2 with
        // P(Y_2 = 0,1,3) = 0.3, 0.6, 0.1.
        let inst = crate::cliques::CliqueParams::new(5, 3, 2)
            .unwrap()
            .build_instance(rat(2, 1))
            .unwrap();
        let l = 2.0 * std::f64::consts::E;
        let p = inst.solve_p().unwrap();
        let q = p / l;
        let t = ((1.0 / p.powi(6)) * 10.0).ceil();
        let params = CoverParams::new(2, t as u64, l, 99).unwrap();
        let report = expected_cover_weight(&inst, &params, 100_000).unwrap();
        let exact = t * (0.3 * q.powi(6) + 0.6 * q.powi(5) + 0.1 * q.powi(3));
        let se = report.std_error.unwrap();
        assert!(
            (report.estimate.to_f64() - exact).abs() <= 3.0 * se,
            "estimate {} vs exact {exact} (se {se})",
            report.estimate.to_f64()
        );
    }

    #[test]
    fn conditional_transfer_holds() {
        let inst = cycle4();
        let params = CoverParams::new(1, 5, 2.0 * std::f64::consts::E, 21).unwrap();
        let report = expected_cover_weight(&inst, &params, 10_000).unwrap();
        let cond = report.conditional.expect("materializable");
        assert!(cond.p_cover > 0.5);
        assert!(cond.holds);
        assert!(cond.mean_weight_given_cover <= cond.transfer_bound + 3.0 * cond.sigma);
    }

    #[test]
    fn s1_construction_cycle() {
        let inst = cycle4();
        let e = std::f64::consts::E;
        let (report, sample) = single_draw_construction(&inst, e, 2.0 * e, 11, true).unwrap();
        assert!(report.hypothesis_ok);
        assert!((report.hypothesis_rhs - 1.0197).abs() < 1e-3);
        assert_eq!(report.t, 5);
        // Chain value k r ln(n) / (2c)^k = 4 ln4 / (2e)^2.
        let expect = 4.0 * 4f64.ln() / (2.0 * e).powi(2);
        assert!((report.report.points[1].lhs.to_f64() - expect).abs() < 1e-12);
        assert!((expect - 0.1876).abs() < 1e-3);
        assert_eq!(report.report.overall, Verdict::Pass);
        assert!(sample.is_some());
    }

    #[test]
    fn s1_construction_single_edge() {
        let inst = Instance::from_edge_lists(2, 2, &[vec![0, 1]], rat(1, 1)).unwrap();
        let e = std::f64::consts::E;
        let (report, _) = single_draw_construction(&inst, e, 2.0 * e, 1, true).unwrap();
        assert_eq!(report.t, 1);
        assert!(matches!(report.m_mode, MinimalCountMode::Exact(1)));
        assert_eq!(report.report.overall, Verdict::Pass);
    }

    #[test]
    fn s1_construction_clique_bound_mode() {
        let inst = crate::cliques::CliqueParams::new(5, 3, 2)
            .unwrap()
            .build_instance(rat(2, 1))
            .unwrap();
        let e = std::f64::consts::E;
        let (report, _) = single_draw_construction(&inst, e, 2.0 * e, 1, false).unwrap();
        assert!(report.hypothesis_ok); // k = 3 >= ln 2 + ln ln 10 ~ 1.527
                                       // ln m <= ln C(10, 2) = ln 45.
        match report.m_mode {
            MinimalCountMode::BinomialBound(ln_m) => {
                assert!((ln_m - 45f64.ln()).abs() < 1e-9)
            }
            _ => panic!("expected binomial bound"),
        }
    }

    #[test]
    fn edge_containment_probability_bound() {
        // P(e ⊆ S) >= p^k for every upset member S, i.e. the edge count
        // inside each minimal S is at least r.
        for inst in [
            cycle4(),
            crate::cliques::CliqueParams::new(5, 3, 2)
                .unwrap()
                .build_instance(rat(2, 1))
                .unwrap(),
        ] {
            let minimal = inst.minimal_elements().unwrap().minimal;
            for s in minimal.sets() {
                let count = inst.edges().iter().filter(|e| e.is_subset_of(s)).count() as f64;
                assert!(count / inst.d() as f64 >= inst.r_f64() / inst.d() as f64);
            }
        }
    }

    #[test]
    fn default_params_from_instance() {
        let inst = cycle4();
        let s = CoverParams::default_s(&inst);
        assert_eq!(s, 1); // ceil(ln 4 / 2)
        let t = CoverParams::default_t(&inst, s).unwrap();
        assert_eq!(t, 8); // ceil(p^{-2} * 4) = ceil(2 * 4)
    }

    #[test]
    fn wilson_sanity() {
        let w = wilson_interval(875, 1000);
        assert!(w.lo < 0.875 && 0.875 < w.hi);
        assert!(w.se < 0.02);
        let w = wilson_interval(0, 10);
        assert!(w.lo == 0.0 && w.hi > 0.0);
    }

    #[test]
    fn draw_cap_enforced() {
        let inst = cycle4();
        let params = CoverParams::new(2, MAX_MATERIALIZED_DRAWS, 6.0, 0).unwrap();
        assert!(matches!(
            sample_cover(&inst, &params),
            Err(Error::TooLarge { .. })
        ));
    }
}
