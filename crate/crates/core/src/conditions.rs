//! Overlap laws and the sufficient-condition checkers for the two union
//! cover theorems, plus the explicit two-part cover construction.
//!
//! Checkers evaluate in log space. Empirical laws widen verdicts: a point
//! passes or fails only when it does so with the probability shifted by
//! three standard errors, and is inconclusive in between.

use std::collections::BTreeMap;
use std::f64::consts::E;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use serde::Serialize;

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::model::{Instance, SubsetFamily};
use crate::numerics::{binomial, kth_root, ln_biguint, log_binomial, LogReal, RatInterval};

/// Quadratic pair enumeration cap.
pub const PAIR_ENUMERATION_LIMIT: u64 = 10_000;
/// Cap on `C(d, r)` for materializing the disjoint-tuple family.
pub const DISJOINT_FAMILY_LIMIT: u64 = 1_000_000;

// ---------------------------------------------------------------------------
// Overlap laws
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum LawKind {
    Exact,
    Empirical,
    Dominating,
}

#[derive(Clone, Debug)]
pub struct LawEntry {
    pub value: u64,
    pub prob: f64,
    pub exact: Option<BigRational>,
}

impl Serialize for LawEntry {
    fn serialize<S: serde::Serializer>(
        &self,
        serializer: S,
    ) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut s = serializer.serialize_struct("LawEntry", 3)?;
        s.serialize_field("value", &self.value)?;
        s.serialize_field("prob", &self.prob)?;
        s.serialize_field(
            "exact",
            &self
                .exact
                .as_ref()
                .map(|m| format!("{}/{}", m.numer(), m.denom())),
        )?;
        s.end()
    }
}

/// A probability mass function for an overlap variable. Values inside the
/// span but absent from the entries carry zero mass.
#[derive(Clone, Debug, Serialize)]
pub struct OverlapLaw {
    kind: LawKind,
    span: (u64, u64),
    entries: Vec<LawEntry>,
    trials: Option<u64>,
}

impl OverlapLaw {
    pub fn exact_from_masses(masses: Vec<(u64, BigRational)>, span: (u64, u64)) -> Self {
        let mut entries: Vec<LawEntry> = masses
            .into_iter()
            .filter(|(_, m)| !m.is_zero())
            .map(|(value, m)| LawEntry {
                value,
                prob: m.to_f64().unwrap_or(f64::NAN),
                exact: Some(m),
            })
            .collect();
        entries.sort_by_key(|e| e.value);
        let total: BigRational = entries.iter().map(|e| e.exact.clone().unwrap()).sum();
        assert!(total.is_one(), "exact law must sum to 1, got {total}");
        OverlapLaw {
            kind: LawKind::Exact,
            span,
            entries,
            trials: None,
        }
    }

    pub fn empirical_from_counts(
        counts: &BTreeMap<u64, u64>,
        trials: u64,
        span: (u64, u64),
    ) -> Self {
        assert!(trials > 0, "empirical law needs at least one trial");
        let entries = counts
            .iter()
            .filter(|(_, &c)| c > 0)
            .map(|(&value, &c)| LawEntry {
                value,
                prob: c as f64 / trials as f64,
                exact: None,
            })
            .collect();
        OverlapLaw {
            kind: LawKind::Empirical,
            span,
            entries,
            trials: Some(trials),
        }
    }

    pub fn point_mass(value: u64, span: (u64, u64)) -> Self {
        OverlapLaw::exact_from_masses(vec![(value, BigRational::one())], span)
    }

    pub fn kind(&self) -> LawKind {
        self.kind
    }

    pub fn span(&self) -> (u64, u64) {
        self.span
    }

    pub fn trials(&self) -> Option<u64> {
        self.trials
    }

    pub fn entries(&self) -> &[LawEntry] {
        &self.entries
    }

    pub fn prob(&self, value: u64) -> f64 {
        self.entries
            .iter()
            .find(|e| e.value == value)
            .map_or(0.0, |e| e.prob)
    }

    /// Exact mass at `value`; `None` for empirical laws.
    pub fn exact_prob(&self, value: u64) -> Option<BigRational> {
        if self.kind == LawKind::Empirical {
            return None;
        }
        Some(
            self.entries
                .iter()
                .find(|e| e.value == value)
                .and_then(|e| e.exact.clone())
                .unwrap_or_else(BigRational::zero),
        )
    }

    /// Standard error of the mass estimate at `value`; zero for exact laws.
    /// Empirical laws get a `1/trials` floor so that unseen values stay
    /// distinguishable from certified zeros.
    pub fn std_error(&self, value: u64) -> f64 {
        match self.trials {
            None => 0.0,
            Some(n) => {
                let p = self.prob(value);
                (p * (1.0 - p) / n as f64).sqrt() + 1.0 / n as f64
            }
        }
    }

    /// Total-variation distance, over the union of the spans.
    pub fn tv_distance(&self, other: &OverlapLaw) -> f64 {
        let lo = self.span.0.min(other.span.0);
        let hi = self.span.1.max(other.span.1);
        let mut sum = 0.0;
        for v in lo..=hi {
            sum += (self.prob(v) - other.prob(v)).abs();
        }
        0.5 * sum
    }
}

// ---------------------------------------------------------------------------
// Condition reports
// ---------------------------------------------------------------------------

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum Verdict {
    Pass,
    Fail,
    Inconclusive,
}

impl Verdict {
    fn and(self, other: Verdict) -> Verdict {
        use Verdict::*;
        match (self, other) {
            (Fail, _) | (_, Fail) => Fail,
            (Inconclusive, _) | (_, Inconclusive) => Inconclusive,
            _ => Pass,
        }
    }
}

/// One evaluated inequality point: `lhs <= rhs`.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionPoint {
    /// The index `m` or `y` the point belongs to.
    pub index: i64,
    pub lhs: LogReal,
    pub rhs: LogReal,
    /// `ln(rhs) - ln(lhs)`; positive means slack.
    pub margin: f64,
    pub verdict: Verdict,
    /// Informational points are reported but excluded from the overall verdict.
    pub informational: bool,
    pub note: Option<String>,
}

impl ConditionPoint {
    fn margin_of(lhs: &LogReal, rhs: &LogReal) -> f64 {
        rhs.ln_abs() - lhs.ln_abs()
    }

    /// Exact comparison, no widening.
    pub fn exact(index: i64, lhs: LogReal, rhs: LogReal, note: Option<String>) -> Self {
        let verdict = if lhs <= rhs {
            Verdict::Pass
        } else {
            Verdict::Fail
        };
        ConditionPoint {
            index,
            lhs,
            rhs,
            margin: Self::margin_of(&lhs, &rhs),
            verdict,
            informational: false,
            note,
        }
    }

    /// Comparison of `prob * factor <= rhs` with the probability widened by
    /// three standard errors.
    pub fn widened(
        index: i64,
        prob: f64,
        se: f64,
        factor: LogReal,
        rhs: LogReal,
        note: Option<String>,
    ) -> Self {
        let lhs = LogReal::from_f64(prob).mul(&factor);
        if se == 0.0 {
            return Self::exact(index, lhs, rhs, note);
        }
        let hi = LogReal::from_f64(prob + 3.0 * se).mul(&factor);
        let lo = LogReal::from_f64((prob - 3.0 * se).max(0.0)).mul(&factor);
        let verdict = if hi <= rhs {
            Verdict::Pass
        } else if lo > rhs {
            Verdict::Fail
        } else {
            Verdict::Inconclusive
        };
        ConditionPoint {
            index,
            lhs,
            rhs,
            margin: Self::margin_of(&lhs, &rhs),
            verdict,
            informational: false,
            note,
        }
    }

    pub fn informational(mut self) -> Self {
        self.informational = true;
        self
    }
}

/// A per-inequality evaluation record.
#[derive(Clone, Debug, Serialize)]
pub struct ConditionReport {
    pub id: String,
    pub points: Vec<ConditionPoint>,
    pub overall: Verdict,
    pub warnings: Vec<String>,
}

impl ConditionReport {
    pub fn from_points(id: String, points: Vec<ConditionPoint>, warnings: Vec<String>) -> Self {
        let overall = points
            .iter()
            .filter(|p| !p.informational)
            .map(|p| p.verdict)
            .fold(Verdict::Pass, Verdict::and);
        ConditionReport {
            id,
            points,
            overall,
            warnings,
        }
    }
}

// ---------------------------------------------------------------------------
// Instance scale
// ---------------------------------------------------------------------------

/// The scalars the checkers need; large instances supply them in log form
/// without ever materializing edges.
#[derive(Clone, Copy, Debug, Serialize)]
pub struct InstanceScale {
    pub k: u32,
    pub ln_n: f64,
    pub ln_d: f64,
    pub ln_r: f64,
}

impl InstanceScale {
    pub fn from_instance(inst: &Instance) -> Self {
        InstanceScale {
            k: inst.k(),
            ln_n: f64::from(inst.n()).ln(),
            ln_d: (inst.d() as f64).ln(),
            ln_r: inst.r_f64().ln(),
        }
    }

    pub fn new(k: u32, ln_n: f64, ln_d: f64, ln_r: f64) -> Self {
        InstanceScale {
            k,
            ln_n,
            ln_d,
            ln_r,
        }
    }

    pub fn ln_p(&self) -> f64 {
        (self.ln_r - self.ln_d) / f64::from(self.k)
    }
}

// ---------------------------------------------------------------------------
// Laws from instances
// ---------------------------------------------------------------------------

/// Exact law of `Y_2 = |e ∩ e'|` over ordered edge pairs drawn with
/// replacement.
pub fn pair_overlap_law(inst: &Instance) -> Result<OverlapLaw> {
    let d = inst.d();
    if d > PAIR_ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "pair enumeration",
            value: u128::from(d),
            limit: u128::from(PAIR_ENUMERATION_LIMIT),
        });
    }
    let k = inst.k() as usize;
    let edges = inst.edges();
    let count_row = |i: usize| {
        let mut counts = vec![0u64; k + 1];
        for e in edges {
            counts[edges[i].intersection(e).len() as usize] += 1;
        }
        counts
    };
    let fold = |mut acc: Vec<u64>, row: Vec<u64>| {
        for (a, b) in acc.iter_mut().zip(row) {
            *a += b;
        }
        acc
    };
    let counts: Vec<u64> = {
        #[cfg(feature = "parallel")]
        {
            (0..edges.len())
                .into_par_iter()
                .map(count_row)
                .reduce(|| vec![0u64; k + 1], fold)
        }
        #[cfg(not(feature = "parallel"))]
        {
            (0..edges.len())
                .map(count_row)
                .fold(vec![0u64; k + 1], fold)
        }
    };
    let total = BigInt::from(d) * BigInt::from(d);
    let masses = counts
        .iter()
        .enumerate()
        .filter(|(_, &c)| c > 0)
        .map(|(y, &c)| (y as u64, BigRational::new(BigInt::from(c), total.clone())))
        .collect();
    Ok(OverlapLaw::exact_from_masses(masses, (0, inst.k() as u64)))
}

/// Empirical law of `sum_j Y_j` from seeded Monte Carlo traces; exact point
/// mass at zero for `s = 1`.
pub fn sum_overlap_law(inst: &Instance, s: u32, trials: u64, seed: u64) -> Result<OverlapLaw> {
    if s < 1 {
        return Err(Error::InvalidParams("sum law requires s >= 1".into()));
    }
    let span = (0u64, u64::from(s - 1) * u64::from(inst.k()));
    if s == 1 {
        return Ok(OverlapLaw::point_mass(0, span));
    }
    if trials == 0 {
        return Err(Error::InvalidParams(
            "empirical sum law needs trials > 0".into(),
        ));
    }
    let sums = crate::cover::trace_sums(inst, s, trials, seed);
    let mut counts: BTreeMap<u64, u64> = BTreeMap::new();
    for v in sums {
        *counts.entry(u64::from(v)).or_insert(0) += 1;
    }
    Ok(OverlapLaw::empirical_from_counts(&counts, trials, span))
}

// ---------------------------------------------------------------------------
// Condition checkers
// ---------------------------------------------------------------------------

fn law_points<F, G>(law: &OverlapLaw, range: (u64, u64), factor: F, rhs: G) -> Vec<ConditionPoint>
where
    F: Fn(u64) -> LogReal,
    G: Fn(u64) -> LogReal,
{
    (range.0..=range.1)
        .map(|v| {
            ConditionPoint::widened(
                v as i64,
                law.prob(v),
                law.std_error(v),
                factor(v),
                rhs(v),
                None,
            )
        })
        .collect()
}

/// Condition on the summed overlap law: for all `m in [(s-1)k]`,
/// `P(sum Y_j = m) (d e^k / r)^{m/k} <= (L / 2e)^{(s-1)k - m}`.
///
/// `m = 0` is evaluated as an informational point.
pub fn check_sum_overlap_condition(
    scale: &InstanceScale,
    law: &OverlapLaw,
    s: u32,
    l: f64,
) -> ConditionReport {
    let k = f64::from(scale.k);
    let top = u64::from(s.saturating_sub(1)) * u64::from(scale.k);
    let factor = |m: u64| LogReal::from_ln(m as f64 / k * (scale.ln_d + k - scale.ln_r));
    let rhs = |m: u64| LogReal::from_ln((top - m) as f64 * (l.ln() - (2.0 * E).ln()));

    let mut points = Vec::new();
    if top == 0 {
        // s = 1: the range is empty and the condition is vacuous.
        points.push(
            ConditionPoint::exact(
                0,
                LogReal::ZERO,
                LogReal::ONE,
                Some("vacuous for s = 1".into()),
            )
            .informational(),
        );
    } else {
        points.push(
            ConditionPoint::widened(
                0,
                law.prob(0),
                law.std_error(0),
                factor(0),
                rhs(0),
                Some("m = 0 is outside the stated range; reported for reference".into()),
            )
            .informational(),
        );
        points.extend(law_points(law, (1, top), factor, rhs));
    }

    let mut warnings = Vec::new();
    if f64::from(s) * k < scale.ln_n {
        warnings.push(format!(
            "s*k = {} is below ln(n) = {:.4}",
            f64::from(s) * k,
            scale.ln_n
        ));
    }
    if l < 2.0 * E {
        warnings.push(format!("L = {l} is below 2e"));
    }
    let ln_t = -f64::from(s) * k * scale.ln_p() + scale.ln_n;
    warnings.push(format!("package takes t = p^(-s*k)*n, ln(t) = {ln_t:.4}"));
    ConditionReport::from_points("sum-overlap-condition".into(), points, warnings)
}

/// Condition on the pairwise overlap law: for all `y in [k-1]`,
/// `P(Y_2 = y) r^{2 - y/k} d^{y/k} <= L^k`.
pub fn check_pair_overlap_condition(
    scale: &InstanceScale,
    law: &OverlapLaw,
    l: f64,
) -> ConditionReport {
    let k = f64::from(scale.k);
    let factor =
        |y: u64| LogReal::from_ln((2.0 - y as f64 / k) * scale.ln_r + y as f64 / k * scale.ln_d);
    let rhs = |_y: u64| LogReal::from_ln(k * l.ln());
    let points = if scale.k >= 2 {
        law_points(law, (1, u64::from(scale.k) - 1), factor, rhs)
    } else {
        vec![ConditionPoint::exact(
            0,
            LogReal::ZERO,
            LogReal::ONE,
            Some("vacuous for k = 1".into()),
        )
        .informational()]
    };
    let mut warnings = Vec::new();
    if l < 2.0 * E {
        warnings.push(format!("L = {l} is below 2e"));
    }
    ConditionReport::from_points("pair-overlap-condition".into(), points, warnings)
}

/// Pointwise condition on a history-uniform tail bound: for all `y in [k]`,
/// `tail(y) (d 2^k e^k / r)^{y/k} <= (L / 4e)^{k - y}`.
pub fn check_pointwise_tail_condition<F>(scale: &InstanceScale, tail: F, l: f64) -> ConditionReport
where
    F: Fn(u32) -> LogReal,
{
    let k = f64::from(scale.k);
    let mut points = Vec::new();
    for y in 1..=scale.k {
        let t = tail(y);
        let factor =
            LogReal::from_ln(f64::from(y) / k * (scale.ln_d + k * 2f64.ln() + k - scale.ln_r));
        let lhs = t.mul(&factor);
        let rhs = LogReal::from_ln(f64::from(scale.k - y) * (l.ln() - (4.0 * E).ln()));
        points.push(ConditionPoint::exact(i64::from(y), lhs, rhs, None));
    }
    let mut warnings = Vec::new();
    if l < 4.0 * E {
        warnings.push(format!("L = {l} is below 4e"));
    }
    ConditionReport::from_points("pointwise-tail-condition".into(), points, warnings)
}

// ---------------------------------------------------------------------------
// Explicit two-part cover
// ---------------------------------------------------------------------------

/// The explicit cover: `G_0` gathers unions of intersecting distinct edge
/// pairs, `G_1` unions of `r` pairwise disjoint edges.
pub fn build_explicit_cover(inst: &Instance) -> Result<(SubsetFamily, SubsetFamily)> {
    if !inst.r().is_integer() {
        return Err(Error::InvalidParams(format!(
            "explicit cover needs an integer r, got {}",
            inst.r()
        )));
    }
    let r = inst
        .r()
        .to_integer()
        .to_u64()
        .ok_or_else(|| Error::InvalidParams("r too large to enumerate".into()))?;
    let d = inst.d();
    if d > PAIR_ENUMERATION_LIMIT {
        return Err(Error::TooLarge {
            what: "pair enumeration",
            value: u128::from(d),
            limit: u128::from(PAIR_ENUMERATION_LIMIT),
        });
    }
    let edges = inst.edges();

    let mut g0 = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        for ep in &edges[i + 1..] {
            if !e.intersection(ep).is_empty() {
                g0.push(e.union(ep));
            }
        }
    }
    let g0 = SubsetFamily::new(g0);

    let tuples = binomial(d, r);
    if tuples > num_bigint::BigUint::from(DISJOINT_FAMILY_LIMIT) {
        return Err(Error::TooLarge {
            what: "disjoint tuple enumeration C(d, r)",
            value: tuples.to_u128().unwrap_or(u128::MAX),
            limit: u128::from(DISJOINT_FAMILY_LIMIT),
        });
    }
    // Depth-first over index combinations, pruning on the running union.
    let mut g1 = Vec::new();
    let mut stack: Vec<(usize, u32, crate::model::Subset)> = Vec::new();
    let r = r as usize;
    if r >= 1 {
        for start in 0..edges.len() {
            stack.push((start, 1, edges[start]));
            while let Some((i, chosen, union)) = stack.pop() {
                if chosen as usize == r {
                    g1.push(union);
                    continue;
                }
                for (j, e) in edges.iter().enumerate().skip(i + 1) {
                    if e.intersection(&union).is_empty() {
                        stack.push((j, chosen + 1, union.union(e)));
                    }
                }
            }
        }
    }
    Ok((g0, SubsetFamily::new(g1)))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum WeightMode {
    Materialized,
    AnalyticBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct ExplicitCoverWeights {
    pub l: f64,
    pub q: f64,
    pub w0: LogReal,
    pub w0_mode: WeightMode,
    pub w0_le_half: Verdict,
    pub w1: LogReal,
    pub w1_mode: WeightMode,
    pub w1_le_half: Verdict,
    /// The looser closed form `(e d / r)^r / L^{rk}` for reference.
    pub w1_loose_bound: LogReal,
    pub total: LogReal,
    pub total_le_one: Verdict,
    pub g0_size: Option<u64>,
    pub g1_size: Option<u64>,
    pub warnings: Vec<String>,
}

/// Weights of the explicit cover at `q = p/L`, materialized when the
/// families fit and falling back to the analytic bounds otherwise.
pub fn explicit_cover_weights(inst: &Instance, l: f64) -> Result<ExplicitCoverWeights> {
    if !inst.r().is_integer() {
        return Err(Error::InvalidParams(format!(
            "explicit cover needs an integer r, got {}",
            inst.r()
        )));
    }
    let p = inst.solve_p()?;
    let q = p / l;
    let k = inst.k();
    let r = inst.r().to_integer().to_u64().unwrap_or(u64::MAX);
    let rk = r.saturating_mul(u64::from(k));
    let mut warnings = inst.assumption_warnings(Some(l));

    let materialized = match build_explicit_cover(inst) {
        Ok(pair) => Some(pair),
        Err(Error::TooLarge { what, .. }) => {
            warnings.push(format!("{what} exceeds the cap; using analytic bounds"));
            None
        }
        Err(e) => return Err(e),
    };

    let (w0, w0_mode, w1, w1_mode, g0_size, g1_size) = match &materialized {
        Some((g0, g1)) => (
            g0.weight(q),
            WeightMode::Materialized,
            g1.weight(q),
            WeightMode::Materialized,
            Some(g0.len() as u64),
            Some(g1.len() as u64),
        ),
        None => {
            // G_0: sum_y P(Y_2=y) d^2 (p/L)^{2k - y}; G_1: C(d, r) (p/L)^{rk}.
            let law = pair_overlap_law(inst)?;
            let d_sq = LogReal::from_ln(2.0 * (inst.d() as f64).ln());
            let w0 = LogReal::sum((1..u64::from(k)).map(|y| {
                LogReal::from_f64(law.prob(y))
                    .mul(&d_sq)
                    .mul(&LogReal::from_f64(q).powi((2 * u64::from(k) - y) as i32))
            }));
            let w1 = log_binomial(inst.d() as i64, r as i64)
                .unwrap_or(LogReal::ZERO)
                .mul(&LogReal::from_f64(q).powi(rk as i32));
            (
                w0,
                WeightMode::AnalyticBound,
                w1,
                WeightMode::AnalyticBound,
                None,
                None,
            )
        }
    };

    // (e d / r)^r / L^{rk} = e^r / L^{rk} after p^{rk} = (r/d)^r cancels.
    let w1_loose_bound = LogReal::from_ln(
        r as f64 * (1.0 + (inst.d() as f64).ln() - inst.r_f64().ln()) - rk as f64 * l.ln()
            + rk as f64 * inst.ln_p()?,
    );

    let half = LogReal::from_f64(0.5);
    let total = w0.add(&w1);
    Ok(ExplicitCoverWeights {
        l,
        q,
        w0,
        w0_mode,
        w0_le_half: if w0 <= half {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        w1,
        w1_mode,
        w1_le_half: if w1 <= half {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        w1_loose_bound,
        total,
        total_le_one: if total <= LogReal::ONE {
            Verdict::Pass
        } else {
            Verdict::Fail
        },
        g0_size,
        g1_size,
        warnings,
    })
}

/// Certified rational enclosures of the materialized cover weights and their
/// half-comparisons. `l` must be a positive enclosure (for example `2e`).
#[derive(Clone, Debug)]
pub struct ExactCoverCheck {
    pub w0: RatInterval,
    pub w1: RatInterval,
    pub w0_le_half: bool,
    pub w1_le_half: bool,
}

/// Exact-interval weight of a family at `q = p/L` where `p^k = r/d`:
/// each size-`z` member contributes `(r/d)^{z/k} / L^z`.
pub fn family_weight_interval(
    fam: &SubsetFamily,
    p_pow_k: &BigRational,
    k: u32,
    l: &RatInterval,
    digits: u32,
) -> Result<RatInterval> {
    let mut total = RatInterval::exact(BigRational::zero());
    for (size, count) in fam.size_histogram() {
        let mut pk_z = BigRational::one();
        for _ in 0..size {
            pk_z *= p_pow_k;
        }
        // pk_z = (r/d)^z; its k-th root is p^z.
        let p_z = kth_root(&pk_z, k, digits)?;
        let term = p_z
            .div_pos(&l.powi(size))
            .mul(&RatInterval::from_u64(count));
        total = total.add(&term);
    }
    Ok(total)
}

pub fn explicit_cover_weights_exact(
    inst: &Instance,
    l: &RatInterval,
    digits: u32,
) -> Result<ExactCoverCheck> {
    let (g0, g1) = build_explicit_cover(inst)?;
    let d = BigRational::from_integer(BigInt::from(inst.d()));
    let p_pow_k = inst.r() / d;
    let w0 = family_weight_interval(&g0, &p_pow_k, inst.k(), l, digits)?;
    let w1 = family_weight_interval(&g1, &p_pow_k, inst.k(), l, digits)?;
    let half = RatInterval::exact(BigRational::new(BigInt::one(), BigInt::from(2)));
    Ok(ExactCoverCheck {
        w0_le_half: w0.certified_le(&half),
        w1_le_half: w1.certified_le(&half),
        w0,
        w1,
    })
}

/// `ln` helper for `C(a, b)` used by reports.
pub fn ln_binomial_u64(a: u64, b: u64) -> f64 {
    ln_biguint(&binomial(a, b))
}
