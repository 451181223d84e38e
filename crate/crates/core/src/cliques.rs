//! Clique hypergraphs: the ground set is the family of `ell`-subsets of
//! `[n_tilde]` and each edge is the set of `ell`-subsets of a `k_tilde`-set,
//! so `n = C(n_tilde, ell)`, `k = C(k_tilde, ell)`, `d = C(n_tilde, k_tilde)`.
//!
//! Ground indices use colex order: the `ell`-subset `{a_1 < ... < a_ell}`
//! has rank `sum_i C(a_i, i)`, which makes instance files reproducible
//! bit for bit.
//!
//! Vertex overlaps of random cliques are exactly hypergeometric, which gives
//! closed-form pair laws, an exact forward chain for union sizes, and the
//! tail bounds behind the two regime checkers.

use std::collections::BTreeMap;
use std::f64::consts::E;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rand::Rng;
use serde::Serialize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::conditions::{ConditionPoint, ConditionReport, OverlapLaw, Verdict};
use crate::error::{Error, Result};
use crate::model::{Instance, Subset};
use crate::numerics::{binomial, euler_e, log_binomial, HypergeomLaw, LogReal, RatInterval};

/// Parameters of a clique hypergraph.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct CliqueParams {
    pub n_tilde: u64,
    pub k_tilde: u32,
    pub ell: u32,
}

impl CliqueParams {
    pub fn new(n_tilde: u64, k_tilde: u32, ell: u32) -> Result<Self> {
        if !(ell >= 2 && u64::from(k_tilde) > u64::from(ell) && n_tilde > u64::from(k_tilde)) {
            return Err(Error::InvalidParams(format!(
                "clique params need n_tilde > k_tilde > ell >= 2, got ({n_tilde}, {k_tilde}, {ell})"
            )));
        }
        let params = CliqueParams {
            n_tilde,
            k_tilde,
            ell,
        };
        // Edge size must stay addressable.
        if params.k_exact().to_u64().is_none() {
            return Err(Error::InvalidParams(format!(
                "edge size C({k_tilde}, {ell}) does not fit in u64"
            )));
        }
        Ok(params)
    }

    /// Edge size `k = C(k_tilde, ell)`.
    pub fn k(&self) -> u64 {
        self.k_exact().to_u64().expect("validated at construction")
    }

    fn k_exact(&self) -> BigUint {
        binomial(u64::from(self.k_tilde), u64::from(self.ell))
    }

    /// Ground size `n = C(n_tilde, ell)` when it fits.
    pub fn n_exact(&self) -> BigUint {
        binomial(self.n_tilde, u64::from(self.ell))
    }

    /// Edge count `d = C(n_tilde, k_tilde)`.
    pub fn d_exact(&self) -> BigUint {
        binomial(self.n_tilde, u64::from(self.k_tilde))
    }

    pub fn ln_n(&self) -> f64 {
        log_binomial(self.n_tilde as i64, i64::from(self.ell))
            .expect("validated")
            .ln()
    }

    pub fn ln_d(&self) -> f64 {
        log_binomial(self.n_tilde as i64, i64::from(self.k_tilde))
            .expect("validated")
            .ln()
    }

    /// Scale triple for the condition checkers, given `r`.
    pub fn scale(&self, r: f64) -> crate::conditions::InstanceScale {
        crate::conditions::InstanceScale::new(self.k() as u32, self.ln_n(), self.ln_d(), r.ln())
    }

    /// Advisory hypothesis `C(k_tilde, ell) <= ln C(n_tilde, ell)`.
    pub fn advisory_warnings(&self) -> Vec<String> {
        let mut warnings = Vec::new();
        let k = self.k() as f64;
        if k > self.ln_n() {
            warnings.push(format!(
                "edge size k = {k} exceeds ln(n) = {:.4}",
                self.ln_n()
            ));
        }
        warnings
    }

    /// Materialize the instance when the ground set fits in 64 bits.
    pub fn build_instance(&self, r: BigRational) -> Result<Instance> {
        let n = self.n_exact().to_u64().unwrap_or(u64::MAX);
        if n > u64::from(crate::model::GROUND_LIMIT) {
            return Err(Error::TooLarge {
                what: "clique ground set",
                value: u128::from(n),
                limit: u128::from(crate::model::GROUND_LIMIT),
            });
        }
        let k = self.k() as u32;
        let vertices: Vec<usize> = (0..self.n_tilde as usize).collect();
        let mut edges = Vec::new();
        for tee in combinations(&vertices, self.k_tilde as usize) {
            let mut members = Vec::with_capacity(k as usize);
            for sub in combinations(&tee, self.ell as usize) {
                members.push(colex_rank(&sub));
            }
            edges.push(Subset::from_indices(n as u32, &members)?);
        }
        Instance::new(n as u32, k, edges, r)
    }
}

/// Colex rank of a sorted index set: `sum_i C(a_i, i+1)`.
pub fn colex_rank(sorted: &[usize]) -> usize {
    sorted
        .iter()
        .enumerate()
        .map(|(i, &a)| {
            binomial(a as u64, i as u64 + 1)
                .to_usize()
                .expect("desk-scale rank")
        })
        .sum()
}

/// All `take`-subsets of `items` in lexicographic order.
fn combinations(items: &[usize], take: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut current = Vec::with_capacity(take);
    fn rec(
        items: &[usize],
        take: usize,
        start: usize,
        current: &mut Vec<usize>,
        out: &mut Vec<Vec<usize>>,
    ) {
        if current.len() == take {
            out.push(current.clone());
            return;
        }
        for i in start..items.len() {
            current.push(items[i]);
            rec(items, take, i + 1, current, out);
            current.pop();
        }
    }
    rec(items, take, 0, &mut current, &mut out);
    out
}

/// Smallest `y_tilde` with `C(y_tilde, ell) >= y`; zero for `y = 0`.
pub fn ytilde_map(y: u64, ell: u32) -> u64 {
    if y == 0 {
        return 0;
    }
    let target = BigUint::from(y);
    let mut yt = u64::from(ell);
    while binomial(yt, u64::from(ell)) < target {
        yt += 1;
    }
    yt
}

/// Exact pair law of `Y_2` via the hypergeometric vertex overlap: the mass
/// at `C(y_tilde, ell)` aggregates all vertex overlaps `y_tilde` mapping
/// there, with overlaps below `ell` contributing to zero.
pub fn exact_pair_law(params: &CliqueParams) -> Result<OverlapLaw> {
    let hyper = HypergeomLaw::new(
        params.n_tilde,
        u64::from(params.k_tilde),
        u64::from(params.k_tilde),
    )?;
    let mut masses: BTreeMap<u64, BigRational> = BTreeMap::new();
    for yt in hyper.support() {
        let y = if yt < u64::from(params.ell) {
            0
        } else {
            binomial(yt, u64::from(params.ell))
                .to_u64()
                .expect("edge overlap fits")
        };
        let mass = hyper.pmf(yt);
        *masses.entry(y).or_insert_with(BigRational::zero) += mass;
    }
    // Vertex overlap 0 may be outside the hypergeometric support when the
    // cliques must intersect; mass map handles it implicitly.
    Ok(OverlapLaw::exact_from_masses(
        masses.into_iter().collect(),
        (0, params.k()),
    ))
}

/// Exact pmf of the vertex-union size after `step` cliques.
#[derive(Clone, Debug)]
pub struct VertexChainState {
    pub step: u32,
    /// `(union size, mass)` pairs, sorted, masses summing to one.
    pub pmf: Vec<(u64, BigRational)>,
}

impl Serialize for VertexChainState {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let pmf: Vec<serde_json::Value> = self
            .pmf
            .iter()
            .map(|(m, p)| {
                serde_json::json!({
                    "size": m,
                    "mass": format!("{}/{}", p.numer(), p.denom()),
                    "approx": p.to_f64(),
                })
            })
            .collect();
        let mut s = serializer.serialize_struct("VertexChainState", 2)?;
        s.serialize_field("step", &self.step)?;
        s.serialize_field("pmf", &pmf)?;
        s.end()
    }
}

impl VertexChainState {
    pub fn mean(&self) -> BigRational {
        self.pmf
            .iter()
            .map(|(m, p)| BigRational::from_integer(BigInt::from(*m)) * p)
            .sum()
    }
}

#[derive(Clone, Debug)]
pub struct VertexChain {
    pub states: Vec<VertexChainState>,
    /// Marginal law of the vertex overlap at each step; step 1 is the
    /// point mass at zero.
    pub ytilde_laws: Vec<OverlapLaw>,
}

/// Forward recursion over union sizes: conditioned on the current union
/// having `m` vertices, the next overlap is hypergeometric `(n_tilde, m,
/// k_tilde)` regardless of the union's shape, and the union grows by
/// `k_tilde - overlap`.
pub fn vertex_union_chain(params: &CliqueParams, s: u32) -> Result<VertexChain> {
    if s < 1 {
        return Err(Error::InvalidParams("chain needs s >= 1".into()));
    }
    let kt = u64::from(params.k_tilde);
    let mut states = Vec::with_capacity(s as usize);
    let mut ytilde_laws = Vec::with_capacity(s as usize);
    let mut pmf: BTreeMap<u64, BigRational> = BTreeMap::new();
    pmf.insert(kt, BigRational::one());
    states.push(VertexChainState {
        step: 1,
        pmf: vec![(kt, BigRational::one())],
    });
    ytilde_laws.push(OverlapLaw::point_mass(0, (0, kt)));

    for step in 2..=s {
        let mut next: BTreeMap<u64, BigRational> = BTreeMap::new();
        let mut marginal: BTreeMap<u64, BigRational> = BTreeMap::new();
        for (&m, mass) in &pmf {
            let hyper = HypergeomLaw::new(params.n_tilde, m, kt)?;
            for y in hyper.support() {
                let p = hyper.pmf(y) * mass;
                if p.is_zero() {
                    continue;
                }
                *next.entry(m + kt - y).or_insert_with(BigRational::zero) += p.clone();
                *marginal.entry(y).or_insert_with(BigRational::zero) += p;
            }
        }
        pmf = next;
        states.push(VertexChainState {
            step,
            pmf: pmf.iter().map(|(&m, p)| (m, p.clone())).collect(),
        });
        ytilde_laws.push(OverlapLaw::exact_from_masses(
            marginal.into_iter().collect(),
            (0, kt),
        ));
    }
    Ok(VertexChain {
        states,
        ytilde_laws,
    })
}

/// Exact hypergeometric tail against the closed-form bound
/// `(m_tilde/n_tilde)^y (e k_tilde / y)^y`.
#[derive(Clone, Debug)]
pub struct TailBoundCheck {
    pub exact: BigRational,
    pub bound: RatInterval,
    pub verdict: Verdict,
}

pub fn tail_bound_check(
    params: &CliqueParams,
    m_tilde: u64,
    y_tilde: u64,
) -> Result<TailBoundCheck> {
    hypergeom_tail_vs_bound(params.n_tilde, m_tilde, u64::from(params.k_tilde), y_tilde)
}

/// The raw comparison behind [`tail_bound_check`], valid for any
/// hypergeometric parameters.
pub fn hypergeom_tail_vs_bound(
    n_tilde: u64,
    m_tilde: u64,
    k_tilde: u64,
    y_tilde: u64,
) -> Result<TailBoundCheck> {
    if m_tilde > n_tilde {
        return Err(Error::InvalidParams(format!(
            "m_tilde {m_tilde} exceeds n_tilde {n_tilde}"
        )));
    }
    if y_tilde == 0 {
        // Both sides are at least one: empty products.
        return Ok(TailBoundCheck {
            exact: BigRational::one(),
            bound: RatInterval::exact(BigRational::one()),
            verdict: Verdict::Pass,
        });
    }
    let hyper = HypergeomLaw::new(n_tilde, m_tilde, k_tilde)?;
    let exact = hyper.tail(y_tilde);
    // (m k e / (n y))^y with a rational enclosure of e.
    static EULER: std::sync::OnceLock<RatInterval> = std::sync::OnceLock::new();
    let euler = EULER.get_or_init(|| euler_e(25));
    let ratio = BigRational::new(
        BigInt::from(m_tilde) * BigInt::from(k_tilde),
        BigInt::from(n_tilde) * BigInt::from(y_tilde),
    );
    let y32 =
        u32::try_from(y_tilde).map_err(|_| Error::InvalidParams("y_tilde too large".into()))?;
    let bound = RatInterval::exact(ratio).mul(euler).powi(y32);
    let exact_iv = RatInterval::exact(exact.clone());
    let verdict = if exact_iv.certified_le(&bound) {
        Verdict::Pass
    } else if exact_iv.certified_gt(&bound) {
        Verdict::Fail
    } else {
        Verdict::Inconclusive
    };
    Ok(TailBoundCheck {
        exact,
        bound,
        verdict,
    })
}

/// Exact table of `f(y_tilde) = y_tilde - k_tilde * C(y_tilde, ell) / C(k_tilde, ell)`
/// on `[ell, k_tilde - 1]`, with the three facts the small-r regime rests on.
#[derive(Clone, Debug)]
pub struct FAnalysis {
    pub rows: Vec<(u32, BigRational)>,
    /// `f(ell) >= ell - 1`.
    pub at_ell_ok: bool,
    /// `f(k_tilde - 1) = ell - 1` exactly.
    pub at_top_ok: bool,
    /// Second differences are nonpositive.
    pub concave: bool,
}

pub fn f_analysis(k_tilde: u32, ell: u32) -> Result<FAnalysis> {
    if !(ell >= 2 && k_tilde > ell) {
        return Err(Error::InvalidParams(format!(
            "f analysis needs k_tilde > ell >= 2, got ({k_tilde}, {ell})"
        )));
    }
    let k_choose_l =
        BigRational::from_integer(BigInt::from(binomial(u64::from(k_tilde), u64::from(ell))));
    let f = |yt: u32| -> BigRational {
        let c = BigRational::from_integer(BigInt::from(binomial(u64::from(yt), u64::from(ell))));
        BigRational::from_integer(BigInt::from(yt))
            - BigRational::from_integer(BigInt::from(k_tilde)) * c / &k_choose_l
    };
    let rows: Vec<(u32, BigRational)> = (ell..k_tilde).map(|yt| (yt, f(yt))).collect();
    let lm1 = BigRational::from_integer(BigInt::from(ell - 1));
    let at_ell_ok = rows.first().map(|(_, v)| *v >= lm1).unwrap_or(false);
    let at_top_ok = rows.last().map(|(_, v)| *v == lm1).unwrap_or(false);
    let concave = rows.windows(3).all(|w| {
        let second = &w[2].1 - BigRational::from_integer(BigInt::from(2)) * &w[1].1 + &w[0].1;
        second <= BigRational::zero()
    });
    Ok(FAnalysis {
        rows,
        at_ell_ok,
        at_top_ok,
        concave,
    })
}

// ---------------------------------------------------------------------------
// Regime checkers
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum RegimeCase {
    General,
    Succinct,
}

/// `ln` of the large-r regime threshold for the given case.
fn ln_large_r_threshold(params: &CliqueParams, case: RegimeCase) -> f64 {
    let k = params.k() as f64;
    let kt = f64::from(params.k_tilde);
    let nt = params.n_tilde as f64;
    match case {
        // 2^{3k} e^{3k} ln^{2 k_tilde}(n_tilde)
        RegimeCase::General => 3.0 * k * 2f64.ln() + 3.0 * k + 2.0 * kt * nt.ln().ln(),
        // (ln(e n_tilde / ell))^ell * n_tilde * e^{3(ell+1)}
        RegimeCase::Succinct => {
            let l = f64::from(params.ell);
            l * (1.0 + nt.ln() - l.ln()).ln() + nt.ln() + 3.0 * (l + 1.0)
        }
    }
}

/// Large-r regime: hypothesis inequalities plus an independent re-check of
/// the chained inequality the threshold is designed to guarantee.
pub fn check_large_r_regime(
    params: &CliqueParams,
    r: f64,
    l: f64,
    case: RegimeCase,
) -> Result<ConditionReport> {
    if r < 1.0 {
        return Err(Error::InvalidParams(format!("requires r >= 1, got {r}")));
    }
    if case == RegimeCase::Succinct && params.k_tilde != params.ell + 1 {
        return Err(Error::InvalidParams(format!(
            "succinct case needs k_tilde = ell + 1, got ({}, {})",
            params.k_tilde, params.ell
        )));
    }
    let k = params.k() as f64;
    let kt = f64::from(params.k_tilde);
    let nt = params.n_tilde as f64;
    let ell = f64::from(params.ell);
    let mut points = Vec::new();
    let mut warnings = params.advisory_warnings();

    if case == RegimeCase::General {
        // ell <= 4 ln(n_tilde)
        points.push(ConditionPoint::exact(
            1,
            LogReal::from_f64(ell),
            LogReal::from_f64(4.0 * nt.ln()),
            Some("ell <= 4 ln(n_tilde)".into()),
        ));
    }
    // L >= 4e, stated as 4e <= L.
    points.push(ConditionPoint::exact(
        2,
        LogReal::from_f64(4.0 * E),
        LogReal::from_f64(l),
        Some("L >= 4e".into()),
    ));
    // r >= threshold.
    let ln_thresh = ln_large_r_threshold(params, case);
    points.push(ConditionPoint::exact(
        3,
        LogReal::from_ln(ln_thresh),
        LogReal::from_f64(r),
        Some("r >= regime threshold".into()),
    ));
    // Chained inequality implied by the threshold, <= 1.
    let ln_chain = match case {
        RegimeCase::General => {
            2.0 * kt + 2.0 * kt * nt.ln().ln() + 3.0 * k * 2f64.ln() + k - r.ln()
        }
        RegimeCase::Succinct => {
            let lg = (1.0 + nt.ln() - ell.ln()).ln();
            ell * ell.ln() + ell * lg + nt.ln() + 2.0 * (ell + 1.0) + (ell + 1.0) * 2f64.ln()
                - ell * (ell + 1.0).ln()
                - r.ln()
        }
    };
    points.push(ConditionPoint::exact(
        4,
        LogReal::from_ln(ln_chain),
        LogReal::ONE,
        Some("implied chain <= 1".into()),
    ));

    let ln_d = params.ln_d();
    if ln_thresh > ln_d {
        warnings.push(format!(
            "regime empty: threshold ln {ln_thresh:.4} exceeds ln d = {ln_d:.4}"
        ));
    }
    if r.ln() > ln_d {
        warnings.push(format!("r = {r} exceeds d; the upset is empty"));
    }
    let id = match case {
        RegimeCase::General => "large-r-regime-general",
        RegimeCase::Succinct => "large-r-regime-succinct",
    };
    Ok(ConditionReport::from_points(id.into(), points, warnings))
}

/// The history-uniform tail bound the large-r regime feeds to the pointwise
/// condition: `tail(y) = (4 e k_tilde ln^2(n_tilde) / n_tilde)^{ytilde(y)}`.
pub fn large_r_tail_bound(params: &CliqueParams) -> impl Fn(u32) -> LogReal + '_ {
    let kt = f64::from(params.k_tilde);
    let nt = params.n_tilde as f64;
    move |y: u32| {
        let yt = ytilde_map(u64::from(y), params.ell) as f64;
        let ln_base = (4.0 * E * kt).ln() + 2.0 * nt.ln().ln() - nt.ln();
        LogReal::from_ln(yt * ln_base)
    }
}

/// Small-r regime: `r <= sqrt(L^k n_tilde^{ell-1} / (e^{2 k_tilde} k_tilde^{ell-1}))`,
/// plus the implied inequality `e^{2 k_tilde} r^2 (k_tilde/n_tilde)^{ell-1} <= L^k`.
pub fn check_small_r_regime(params: &CliqueParams, r: f64, l: f64) -> Result<ConditionReport> {
    if r < 1.0 {
        return Err(Error::InvalidParams(format!("requires r >= 1, got {r}")));
    }
    let k = params.k() as f64;
    let kt = f64::from(params.k_tilde);
    let nt = params.n_tilde as f64;
    let ell = f64::from(params.ell);
    let ln_bound = 0.5 * (k * l.ln() + (ell - 1.0) * nt.ln() - 2.0 * kt - (ell - 1.0) * kt.ln());
    let mut points = Vec::new();
    points.push(ConditionPoint::exact(
        1,
        LogReal::from_f64(r),
        LogReal::from_ln(ln_bound),
        Some("r <= regime bound".into()),
    ));
    let ln_final = 2.0 * kt + 2.0 * r.ln() + (ell - 1.0) * (kt.ln() - nt.ln());
    points.push(ConditionPoint::exact(
        2,
        LogReal::from_ln(ln_final),
        LogReal::from_ln(k * l.ln()),
        Some("implied inequality".into()),
    ));
    let mut warnings = params.advisory_warnings();
    if l < 2.0 * E {
        warnings.push(format!("L = {l} is below 2e"));
    }
    Ok(ConditionReport::from_points(
        "small-r-regime".into(),
        points,
        warnings,
    ))
}

// ---------------------------------------------------------------------------
// Regime coverage scan
// ---------------------------------------------------------------------------

#[derive(Clone, Debug, Serialize)]
pub struct RegimeGridPoint {
    pub ln_r: f64,
    pub lemma52_case1: bool,
    pub lemma52_case2: bool,
    pub lemma53: bool,
    pub covered: bool,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegimeScanRow {
    pub n_tilde: u64,
    /// `ln L^k`, the lower end of the admissible r range.
    pub ln_r_lo: f64,
    /// `ln d`, the upper end.
    pub ln_r_hi: f64,
    pub interval_empty: bool,
    pub ln_threshold_general: f64,
    pub general_applicable: bool,
    pub ln_threshold_succinct: Option<f64>,
    pub succinct_applicable: bool,
    pub ln_bound_small: f64,
    pub small_applicable: bool,
    /// Analytic overlap: some applicable large-r threshold sits at or below
    /// the small-r bound.
    pub regimes_meet: bool,
    pub gap: bool,
    pub first_gap_ln_r: Option<f64>,
    pub grid: Vec<RegimeGridPoint>,
    /// `ln` of the general branch inequality; nonpositive means it holds.
    pub branch_general_ln_lhs: f64,
    pub branch_general_holds: bool,
    pub branch_succinct_ln_lhs: Option<f64>,
    pub branch_succinct_holds: Option<bool>,
}

#[derive(Clone, Debug, Serialize)]
pub struct RegimeScan {
    pub k_tilde: u32,
    pub ell: u32,
    pub l: f64,
    pub rows: Vec<RegimeScanRow>,
    /// Smallest grid `n_tilde` whose admissible range shows no gap.
    pub first_gap_free_n: Option<u64>,
    /// Smallest grid `n_tilde` where the two regimes analytically meet.
    pub first_meet_n: Option<u64>,
}

fn scan_row(
    k_tilde: u32,
    ell: u32,
    l: f64,
    n_tilde: u64,
    r_points: usize,
) -> Result<RegimeScanRow> {
    let params = CliqueParams::new(n_tilde, k_tilde, ell)?;
    let k = params.k() as f64;
    let kt = f64::from(k_tilde);
    let nt = n_tilde as f64;
    let le = f64::from(ell);

    let ln_r_lo = (k * l.ln()).max(0.0);
    let ln_r_hi = params.ln_d();
    let interval_empty = ln_r_lo > ln_r_hi;

    let ln_threshold_general = ln_large_r_threshold(&params, RegimeCase::General);
    let general_applicable = le <= 4.0 * nt.ln() && l >= 4.0 * E;
    let (ln_threshold_succinct, succinct_applicable) = if k_tilde == ell + 1 {
        (
            Some(ln_large_r_threshold(&params, RegimeCase::Succinct)),
            l >= 4.0 * E,
        )
    } else {
        (None, false)
    };
    let ln_bound_small =
        0.5 * (k * l.ln() + (le - 1.0) * nt.ln() - 2.0 * kt - (le - 1.0) * kt.ln());
    let small_applicable = l >= 2.0 * E;

    let mut min_large = f64::INFINITY;
    if general_applicable {
        min_large = min_large.min(ln_threshold_general);
    }
    if succinct_applicable {
        if let Some(t) = ln_threshold_succinct {
            min_large = min_large.min(t);
        }
    }
    let regimes_meet = small_applicable && min_large <= ln_bound_small;

    let mut grid = Vec::new();
    let mut first_gap_ln_r = None;
    if !interval_empty {
        let steps = r_points.max(2);
        for i in 0..steps {
            let frac = i as f64 / (steps - 1) as f64;
            let ln_r = ln_r_lo + frac * (ln_r_hi - ln_r_lo);
            let c1 = general_applicable && ln_r >= ln_threshold_general;
            let c2 =
                succinct_applicable && ln_threshold_succinct.map(|t| ln_r >= t).unwrap_or(false);
            let c3 = small_applicable && ln_r <= ln_bound_small;
            let covered = c1 || c2 || c3;
            if !covered && first_gap_ln_r.is_none() {
                first_gap_ln_r = Some(ln_r);
            }
            grid.push(RegimeGridPoint {
                ln_r,
                lemma52_case1: c1,
                lemma52_case2: c2,
                lemma53: c3,
                covered,
            });
        }
    }
    let gap = first_gap_ln_r.is_some();

    // Branch inequality: 2^{6k} e^{6k} e^{2 k_tilde} / L^k * ln^{4 k_tilde}(n) k^{ell-1} / n^{ell-1}.
    let branch_general_ln_lhs = 6.0 * k * 2f64.ln() + 6.0 * k + 2.0 * kt - k * l.ln()
        + 4.0 * kt * nt.ln().ln()
        + (le - 1.0) * (kt.ln() - nt.ln());
    // Succinct branch: (ln(e n / ell))^{2 ell} e^{8(ell+1)} (ell+1)^{ell-1} / (L^{ell+1} n^{ell-3}).
    let branch_succinct_ln_lhs = (k_tilde == ell + 1).then(|| {
        2.0 * le * (1.0 + nt.ln() - le.ln()).ln() + 8.0 * (le + 1.0) + (le - 1.0) * (le + 1.0).ln()
            - (le + 1.0) * l.ln()
            - (le - 3.0) * nt.ln()
    });

    Ok(RegimeScanRow {
        n_tilde,
        ln_r_lo,
        ln_r_hi,
        interval_empty,
        ln_threshold_general,
        general_applicable,
        ln_threshold_succinct,
        succinct_applicable,
        ln_bound_small,
        small_applicable,
        regimes_meet,
        gap,
        first_gap_ln_r,
        grid,
        branch_general_ln_lhs,
        branch_general_holds: branch_general_ln_lhs <= 0.0,
        branch_succinct_ln_lhs,
        branch_succinct_holds: branch_succinct_ln_lhs.map(|x| x <= 0.0),
    })
}

/// Scan the admissible r range on a grid of ground scales and report which
/// regime covers each point.
pub fn regime_coverage_scan(
    k_tilde: u32,
    ell: u32,
    l: f64,
    n_grid: &[u64],
    r_points: usize,
) -> Result<RegimeScan> {
    let rows: Vec<RegimeScanRow> = {
        #[cfg(feature = "parallel")]
        {
            n_grid
                .par_iter()
                .map(|&n| scan_row(k_tilde, ell, l, n, r_points))
                .collect::<Result<Vec<_>>>()?
        }
        #[cfg(not(feature = "parallel"))]
        {
            n_grid
                .iter()
                .map(|&n| scan_row(k_tilde, ell, l, n, r_points))
                .collect::<Result<Vec<_>>>()?
        }
    };
    let first_gap_free_n = rows.iter().find(|r| !r.gap).map(|r| r.n_tilde);
    let first_meet_n = rows.iter().find(|r| r.regimes_meet).map(|r| r.n_tilde);
    Ok(RegimeScan {
        k_tilde,
        ell,
        l,
        rows,
        first_gap_free_n,
        first_meet_n,
    })
}

// ---------------------------------------------------------------------------
// Seeded clique traces
// ---------------------------------------------------------------------------

/// One sampled run of `s` random cliques: vertex sets, vertex overlaps,
/// edge overlaps and union sizes.
#[derive(Clone, Debug)]
pub struct CliqueTrace {
    pub tees: Vec<Vec<u32>>,
    /// `|T_j ∩ (T_1 ∪ ... ∪ T_{j-1})|` per step.
    pub ytilde: Vec<u32>,
    /// Edge overlap `Y_j`: ell-subsets of `T_j` already present in an
    /// earlier clique.
    pub y: Vec<u32>,
    /// `|T_1 ∪ ... ∪ T_j|` per step.
    pub union_sizes: Vec<u32>,
}

/// Draw `k_tilde` distinct vertices of `[n_tilde]`, sorted.
fn draw_vertex_set<R: Rng>(n_tilde: u64, k_tilde: u32, rng: &mut R) -> Vec<u32> {
    let mut out: Vec<u32> = Vec::with_capacity(k_tilde as usize);
    while out.len() < k_tilde as usize {
        let v = rng.random_range(0..n_tilde) as u32;
        if !out.contains(&v) {
            out.push(v);
        }
    }
    out.sort_unstable();
    out
}

pub fn sample_clique_trace<R: Rng>(params: &CliqueParams, s: u32, rng: &mut R) -> CliqueTrace {
    let mut tees: Vec<Vec<u32>> = Vec::with_capacity(s as usize);
    let mut union: Vec<u32> = Vec::new();
    let mut ytilde = Vec::with_capacity(s as usize);
    let mut y = Vec::with_capacity(s as usize);
    let mut union_sizes = Vec::with_capacity(s as usize);
    let ell = params.ell as usize;
    for _ in 0..s {
        let tee = draw_vertex_set(params.n_tilde, params.k_tilde, rng);
        let overlap = tee
            .iter()
            .filter(|v| union.binary_search(v).is_ok())
            .count() as u32;
        ytilde.push(overlap);
        // Count ell-subsets of the new clique already spanned by an earlier one.
        let idx: Vec<usize> = tee.iter().map(|&v| v as usize).collect();
        let covered = combinations(&idx, ell)
            .iter()
            .filter(|sub| {
                tees.iter()
                    .any(|t| sub.iter().all(|&v| t.binary_search(&(v as u32)).is_ok()))
            })
            .count() as u32;
        y.push(covered);
        for &v in &tee {
            if union.binary_search(&v).is_err() {
                let pos = union.binary_search(&v).unwrap_err();
                union.insert(pos, v);
            }
        }
        union_sizes.push(union.len() as u32);
        tees.push(tee);
    }
    CliqueTrace {
        tees,
        ytilde,
        y,
        union_sizes,
    }
}

/// Seeded Monte Carlo traces, one per trial.
pub fn run_clique_traces(
    params: &CliqueParams,
    s: u32,
    trials: u64,
    seed: u64,
) -> Vec<CliqueTrace> {
    let run = |i: u64| {
        let mut rng = crate::cover::trial_rng(seed, i);
        sample_clique_trace(params, s, &mut rng)
    };
    #[cfg(feature = "parallel")]
    {
        (0..trials).into_par_iter().map(run).collect()
    }
    #[cfg(not(feature = "parallel"))]
    {
        (0..trials).map(run).collect()
    }
}

/// Empirical law of `sum_j Y_j` from clique traces; for metadata-only scales
/// where no instance materializes.
pub fn sum_overlap_law_mc(
    params: &CliqueParams,
    s: u32,
    trials: u64,
    seed: u64,
) -> Result<OverlapLaw> {
    if s < 1 || trials == 0 {
        return Err(Error::InvalidParams("needs s >= 1 and trials > 0".into()));
    }
    let span = (0u64, u64::from(s - 1) * params.k());
    if s == 1 {
        return Ok(OverlapLaw::point_mass(0, span));
    }
    let traces = run_clique_traces(params, s, trials, seed);
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for t in traces {
        let sum: u32 = t.y.iter().sum();
        *counts.entry(u64::from(sum)).or_insert(0) += 1;
    }
    Ok(OverlapLaw::empirical_from_counts(&counts, trials, span))
}
