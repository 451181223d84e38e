//! Ground sets, uniform weighted hypergraphs, upsets and cover relations.
//!
//! Subsets are fixed-width bit vectors (`u64`), which caps ground sets at 64
//! elements and full enumeration at 24. The weight of the hypergraph `g`
//! (constant `1/r` on its `d` edges of size `k`) against a probability `q`
//! is `(d/r) * q^k`; the solved probability `p = (r/d)^{1/k}` makes it one.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde_json::{json, Value};

#[cfg(feature = "parallel")]
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::numerics::LogReal;

/// Hard cap for full-subset enumeration.
pub const ENUMERATION_LIMIT: u32 = 24;
/// Hard cap for bit-vector ground sets.
pub const GROUND_LIMIT: u32 = 64;

/// The ground set `{0, 1, ..., n-1}`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct GroundSet {
    n: u32,
}

impl GroundSet {
    pub fn new(n: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidInstance("ground set must be nonempty".into()));
        }
        if n > GROUND_LIMIT {
            return Err(Error::TooLarge {
                what: "ground set",
                value: u128::from(n),
                limit: u128::from(GROUND_LIMIT),
            });
        }
        Ok(GroundSet { n })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    /// The subset containing every element.
    pub fn full(&self) -> Subset {
        if self.n == 64 {
            Subset(u64::MAX)
        } else {
            Subset((1u64 << self.n) - 1)
        }
    }

    pub fn subset(&self, indices: &[usize]) -> Result<Subset> {
        Subset::from_indices(self.n, indices)
    }
}

/// A subset of the ground set as a bit mask.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Subset(u64);

impl Subset {
    pub const EMPTY: Subset = Subset(0);

    pub fn from_bits(bits: u64) -> Self {
        Subset(bits)
    }

    pub fn from_indices(n: u32, indices: &[usize]) -> Result<Self> {
        let mut bits = 0u64;
        for &i in indices {
            if i >= n as usize {
                return Err(Error::InvalidInstance(format!(
                    "element {i} outside ground set of size {n}"
                )));
            }
            let bit = 1u64 << i;
            if bits & bit != 0 {
                return Err(Error::InvalidInstance(format!(
                    "element {i} listed twice in a subset"
                )));
            }
            bits |= bit;
        }
        Ok(Subset(bits))
    }

    pub fn bits(&self) -> u64 {
        self.0
    }

    pub fn len(&self) -> u32 {
        self.0.count_ones()
    }

    pub fn is_empty(&self) -> bool {
        self.0 == 0
    }

    pub fn contains(&self, i: usize) -> bool {
        i < 64 && self.0 & (1u64 << i) != 0
    }

    pub fn is_subset_of(&self, other: &Subset) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn union(&self, other: &Subset) -> Subset {
        Subset(self.0 | other.0)
    }

    pub fn intersection(&self, other: &Subset) -> Subset {
        Subset(self.0 & other.0)
    }

    pub fn indices(&self) -> Vec<usize> {
        (0..64).filter(|&i| self.contains(i)).collect()
    }
}

impl fmt::Debug for Subset {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        let mut first = true;
        for i in self.indices() {
            if !first {
                write!(f, ",")?;
            }
            write!(f, "{i}")?;
            first = false;
        }
        write!(f, "}}")
    }
}

/// A finite family of subsets; duplicates removed on construction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SubsetFamily {
    sets: Vec<Subset>,
}

impl SubsetFamily {
    pub fn new(mut sets: Vec<Subset>) -> Self {
        sets.sort_unstable();
        sets.dedup();
        SubsetFamily { sets }
    }

    pub fn empty() -> Self {
        SubsetFamily { sets: Vec::new() }
    }

    pub fn sets(&self) -> &[Subset] {
        &self.sets
    }

    pub fn len(&self) -> usize {
        self.sets.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sets.is_empty()
    }

    pub fn union_with(&self, other: &SubsetFamily) -> SubsetFamily {
        let mut sets = self.sets.clone();
        sets.extend_from_slice(&other.sets);
        SubsetFamily::new(sets)
    }

    /// `sum of q^{|S|}` over the family, accumulated in log space.
    pub fn weight(&self, q: f64) -> LogReal {
        debug_assert!((0.0..=1.0).contains(&q));
        LogReal::sum(
            self.sets
                .iter()
                .map(|s| LogReal::from_f64(q).powi(s.len() as i32)),
        )
    }

    /// Exact weight for a rational `q`.
    pub fn weight_exact(&self, q: &BigRational) -> BigRational {
        let mut total = BigRational::zero();
        for s in &self.sets {
            let mut term = BigRational::one();
            for _ in 0..s.len() {
                term *= q;
            }
            total += term;
        }
        total
    }

    /// Histogram of member sizes, as (size, count) pairs sorted by size.
    pub fn size_histogram(&self) -> Vec<(u32, u64)> {
        let mut hist: Vec<(u32, u64)> = Vec::new();
        for s in &self.sets {
            let z = s.len();
            match hist.binary_search_by_key(&z, |e| e.0) {
                Ok(i) => hist[i].1 += 1,
                Err(i) => hist.insert(i, (z, 1)),
            }
        }
        hist
    }
}

/// Minimal elements of the upset, with their count.
#[derive(Clone, Debug)]
pub struct UpsetSummary {
    pub minimal: SubsetFamily,
    pub m: usize,
}

impl UpsetSummary {
    /// True when every minimal element contains some member of `family`.
    pub fn covered_by(&self, family: &SubsetFamily) -> bool {
        self.minimal
            .sets()
            .iter()
            .all(|s| family.sets().iter().any(|e| e.is_subset_of(s)))
    }
}

/// A uniform weighted hypergraph: `d` distinct edges of size `k`, each of
/// weight `1/r`.
#[derive(Clone, Debug)]
pub struct Instance {
    ground: GroundSet,
    k: u32,
    edges: Vec<Subset>,
    r: BigRational,
    /// Least integer edge count that puts a set in the upset: `ceil(r)`.
    threshold: u64,
}

impl Instance {
    pub fn new(n: u32, k: u32, edges: Vec<Subset>, r: BigRational) -> Result<Self> {
        let ground = GroundSet::new(n)?;
        if k == 0 || k > n {
            return Err(Error::InvalidInstance(format!(
                "edge size k = {k} outside [1, {n}]"
            )));
        }
        if edges.is_empty() {
            return Err(Error::InvalidInstance(
                "instance needs at least one edge".into(),
            ));
        }
        let full = ground.full();
        for e in &edges {
            if e.len() != k {
                return Err(Error::InvalidInstance(format!(
                    "edge {e:?} has size {} instead of k = {k}",
                    e.len()
                )));
            }
            if !e.is_subset_of(&full) {
                return Err(Error::InvalidInstance(format!(
                    "edge {e:?} leaves the ground set of size {n}"
                )));
            }
        }
        let mut sorted = edges.clone();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != edges.len() {
            return Err(Error::InvalidInstance(
                "edges must be pairwise distinct".into(),
            ));
        }
        if !r.is_positive() {
            return Err(Error::InvalidInstance(format!(
                "weight denominator r = {r} must be positive"
            )));
        }
        let threshold = r.ceil().to_integer().to_u64().ok_or_else(|| {
            Error::InvalidInstance(format!("r = {r} too large for an edge-count threshold"))
        })?;
        Ok(Instance {
            ground,
            k,
            edges,
            r,
            threshold,
        })
    }

    /// Convenience constructor from index lists.
    pub fn from_edge_lists(n: u32, k: u32, edges: &[Vec<usize>], r: BigRational) -> Result<Self> {
        let subsets = edges
            .iter()
            .map(|e| Subset::from_indices(n, e))
            .collect::<Result<Vec<_>>>()?;
        Instance::new(n, k, subsets, r)
    }

    pub fn ground(&self) -> GroundSet {
        self.ground
    }

    pub fn n(&self) -> u32 {
        self.ground.n()
    }

    pub fn k(&self) -> u32 {
        self.k
    }

    pub fn edges(&self) -> &[Subset] {
        &self.edges
    }

    pub fn d(&self) -> u64 {
        self.edges.len() as u64
    }

    pub fn r(&self) -> &BigRational {
        &self.r
    }

    pub fn r_f64(&self) -> f64 {
        self.r.to_f64().unwrap_or(f64::NAN)
    }

    /// `w(g, q) = (d/r) q^k` in log space.
    pub fn weight(&self, q: f64) -> LogReal {
        debug_assert!((0.0..=1.0).contains(&q));
        let ratio = LogReal::from_ln((self.d() as f64).ln() - self.r_f64().ln());
        ratio.mul(&LogReal::from_f64(q).powi(self.k as i32))
    }

    /// Exact `w(g, q)` for rational `q`.
    pub fn weight_exact(&self, q: &BigRational) -> BigRational {
        let mut qk = BigRational::one();
        for _ in 0..self.k {
            qk *= q;
        }
        BigRational::new(BigInt::from(self.d()), BigInt::one()) / &self.r * qk
    }

    /// `ln p` for the probability `p = (r/d)^{1/k}` solving `w(g, p) = 1`.
    pub fn ln_p(&self) -> Result<f64> {
        let d = BigRational::from_integer(BigInt::from(self.d()));
        if self.r > d {
            return Err(Error::EmptyUpset {
                r: self.r.to_string(),
                d: self.d(),
            });
        }
        Ok((self.r_f64().ln() - (self.d() as f64).ln()) / f64::from(self.k))
    }

    /// The probability `p = (r/d)^{1/k}`.
    pub fn solve_p(&self) -> Result<f64> {
        Ok(self.ln_p()?.exp())
    }

    /// True iff at least `r` edges lie inside `s` (exact rational threshold).
    pub fn upset_contains(&self, s: &Subset) -> bool {
        let count = self.edges.iter().filter(|e| e.is_subset_of(s)).count() as u64;
        count >= self.threshold
    }

    fn check_enumerable(&self) -> Result<()> {
        if self.n() > ENUMERATION_LIMIT {
            return Err(Error::TooLarge {
                what: "subset enumeration",
                value: u128::from(self.n()),
                limit: u128::from(ENUMERATION_LIMIT),
            });
        }
        Ok(())
    }

    /// Brute-force enumeration of the minimal elements of the upset.
    pub fn minimal_elements(&self) -> Result<UpsetSummary> {
        self.check_enumerable()?;
        let n = self.n();
        let total: u64 = 1u64 << n;

        // Membership bitmap over all 2^n subsets, one bit per mask.
        let words = total.div_ceil(64) as usize;
        let member: Vec<u64> = {
            let fill = |w: usize| {
                let mut word = 0u64;
                let base = (w as u64) * 64;
                for b in 0..64u64 {
                    let mask = base + b;
                    if mask >= total {
                        break;
                    }
                    if self.upset_contains(&Subset(mask)) {
                        word |= 1 << b;
                    }
                }
                word
            };
            #[cfg(feature = "parallel")]
            {
                (0..words).into_par_iter().map(fill).collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..words).map(fill).collect()
            }
        };
        let is_member = |mask: u64| member[(mask / 64) as usize] >> (mask % 64) & 1 == 1;

        // A member is minimal iff dropping any single element leaves the upset.
        let minimal_in = |mask: u64| {
            if !is_member(mask) {
                return false;
            }
            let mut rest = mask;
            while rest != 0 {
                let bit = rest & rest.wrapping_neg();
                if is_member(mask & !bit) {
                    return false;
                }
                rest &= rest - 1;
            }
            true
        };
        let minimal: Vec<Subset> = {
            #[cfg(feature = "parallel")]
            {
                (0..total)
                    .into_par_iter()
                    .filter(|&m| minimal_in(m))
                    .map(Subset)
                    .collect()
            }
            #[cfg(not(feature = "parallel"))]
            {
                (0..total).filter(|&m| minimal_in(m)).map(Subset).collect()
            }
        };
        let m = minimal.len();
        Ok(UpsetSummary {
            minimal: SubsetFamily::new(minimal),
            m,
        })
    }

    /// True iff the upset of `g` is contained in the upset of `family`.
    pub fn covers(&self, family: &SubsetFamily) -> Result<bool> {
        Ok(self.minimal_elements()?.covered_by(family))
    }

    /// Advisory checks on the asymptotic-scale assumptions; desk-scale instances
    /// routinely violate them, so these are warnings rather than errors.
    pub fn assumption_warnings(&self, l: Option<f64>) -> Vec<String> {
        let mut warnings = Vec::new();
        let n = f64::from(self.n());
        let k = f64::from(self.k);
        if k < 2.0 {
            warnings.push(format!("edge size k = {k} is below 2"));
        }
        if k > n.ln() {
            warnings.push(format!(
                "k = {k} exceeds ln(n) = {:.4}; the uniform regime assumes ln(n) >= k",
                n.ln()
            ));
        }
        let d = BigRational::from_integer(BigInt::from(self.d()));
        if self.r > d {
            warnings.push(format!(
                "r = {} exceeds d = {}; the upset is empty",
                self.r,
                self.d()
            ));
        }
        if let Some(l) = l {
            let lk = l.powi(self.k as i32);
            if self.r_f64() < lk {
                warnings.push(format!(
                    "r = {} is below L^k = {lk:.6}; the trivial cover G = E already works",
                    self.r
                ));
            }
        }
        warnings
    }

    // ---- instance file format -------------------------------------------

    /// Parse the canonical instance JSON.
    pub fn from_json_str(text: &str) -> Result<Self> {
        let value: Value =
            serde_json::from_str(text).map_err(|e| Error::Parse(format!("invalid JSON: {e}")))?;
        let obj = value
            .as_object()
            .ok_or_else(|| Error::Parse("instance file must be a JSON object".into()))?;
        let n = obj
            .get("n")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing integer field \"n\"".into()))?;
        let k = obj
            .get("k")
            .and_then(Value::as_u64)
            .ok_or_else(|| Error::Parse("missing integer field \"k\"".into()))?;
        let r_text = obj
            .get("r")
            .and_then(Value::as_str)
            .ok_or_else(|| Error::Parse("missing string field \"r\" (\"num/den\")".into()))?;
        let r = parse_rational(r_text)?;
        let edges_val = obj
            .get("edges")
            .and_then(Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field \"edges\"".into()))?;
        let mut edges = Vec::with_capacity(edges_val.len());
        for (i, edge) in edges_val.iter().enumerate() {
            let arr = edge
                .as_array()
                .ok_or_else(|| Error::Parse(format!("edge {i} is not an array")))?;
            let mut idx = Vec::with_capacity(arr.len());
            for v in arr {
                let x = v
                    .as_u64()
                    .ok_or_else(|| Error::Parse(format!("edge {i} holds a non-integer entry")))?;
                idx.push(x as usize);
            }
            edges.push(idx);
        }
        Instance::from_edge_lists(n as u32, k as u32, &edges, r)
    }

    /// Canonical JSON: sorted indices within each edge, edges sorted
    /// lexicographically, `r` reduced as `"num/den"`.
    pub fn to_json_string(&self) -> String {
        let mut edges: Vec<Vec<usize>> = self.edges.iter().map(|e| e.indices()).collect();
        edges.sort();
        let value = json!({
            "v": "v1",
            "n": self.n(),
            "k": self.k,
            "r": format!("{}/{}", self.r.numer(), self.r.denom()),
            "edges": edges,
        });
        let mut out = serde_json::to_string_pretty(&value).expect("instance serializes");
        out.push('\n');
        out
    }
}

/// Parse `"num/den"` or a bare integer as a positive rational.
pub fn parse_rational(text: &str) -> Result<BigRational> {
    let (num, den) = match text.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (text.trim(), "1"),
    };
    let num: BigInt = num
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational numerator in {text:?}")))?;
    let den: BigInt = den
        .parse()
        .map_err(|_| Error::Parse(format!("bad rational denominator in {text:?}")))?;
    if den.is_zero() {
        return Err(Error::Parse(format!("zero denominator in {text:?}")));
    }
    Ok(BigRational::new(num, den))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numerics::binomial;
    use num_traits::FromPrimitive;

    fn rat(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    /// n = 4 cycle: edges 01, 12, 23, 30 with r = 2.
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
    fn weight_examples() {
        let inst = cycle4();
        let q = 0.5f64.sqrt();
        assert!((inst.weight(q).to_f64() - 1.0).abs() < 1e-12);
        assert!(inst.weight(0.0).is_zero());
    }

    #[test]
    fn weight_cross_checked_by_edge_loop() {
        // Clique instance (5,3,2) with r = 2, q = 1/2: w = 10/2 * 0.125 = 0.625.
        let inst = crate::cliques::CliqueParams::new(5, 3, 2)
            .unwrap()
            .build_instance(rat(2, 1))
            .unwrap();
        let w = inst.weight(0.5).to_f64();
        assert!((w - 0.625).abs() < 1e-12);
        // Independent oracle: sum q^{|e|} / r over the edge list.
        let oracle: f64 = inst
            .edges()
            .iter()
            .map(|e| 0.5f64.powi(e.len() as i32) / 2.0)
            .sum();
        assert!((w - oracle).abs() < 1e-12);
        // Exact mode agrees.
        let exact = inst.weight_exact(&rat(1, 2));
        assert_eq!(exact, rat(5, 8));
    }

    #[test]
    fn solve_p_examples() {
        let inst = cycle4();
        let p = inst.solve_p().unwrap();
        assert!((p - std::f64::consts::FRAC_1_SQRT_2).abs() < 1e-15);
        assert!((inst.weight(p).to_f64() - 1.0).abs() < 1e-12);

        let single = Instance::from_edge_lists(2, 2, &[vec![0, 1]], rat(1, 1)).unwrap();
        assert_eq!(single.solve_p().unwrap(), 1.0);

        let b = crate::cliques::CliqueParams::new(5, 3, 2)
            .unwrap()
            .build_instance(rat(2, 1))
            .unwrap();
        let p = b.solve_p().unwrap();
        assert!((p - 0.2f64.powf(1.0 / 3.0)).abs() < 1e-14);
        assert!((b.weight(p).to_f64() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn solve_p_rejects_empty_upset() {
        let inst = Instance::from_edge_lists(3, 2, &[vec![0, 1]], rat(3, 1)).unwrap();
        assert!(matches!(inst.solve_p(), Err(Error::EmptyUpset { .. })));
    }

    #[test]
    fn upset_membership() {
        let inst = cycle4();
        let s = inst.ground().subset(&[0, 1, 2]).unwrap();
        assert!(inst.upset_contains(&s));
        let s = inst.ground().subset(&[0, 1]).unwrap();
        assert!(!inst.upset_contains(&s));
        assert!(!inst.upset_contains(&Subset::EMPTY));
    }

    #[test]
    fn minimal_elements_cycle() {
        let inst = cycle4();
        let summary = inst.minimal_elements().unwrap();
        assert_eq!(summary.m, 4);
        let expect: Vec<Subset> = [
            vec![0usize, 1, 2],
            vec![1, 2, 3],
            vec![2, 3, 0],
            vec![3, 0, 1],
        ]
        .iter()
        .map(|v| Subset::from_indices(4, v).unwrap())
        .collect();
        assert_eq!(summary.minimal, SubsetFamily::new(expect));
    }

    #[test]
    fn minimal_elements_single_edge() {
        let inst = Instance::from_edge_lists(5, 3, &[vec![1, 2, 4]], rat(1, 1)).unwrap();
        let summary = inst.minimal_elements().unwrap();
        assert_eq!(summary.m, 1);
        assert_eq!(
            summary.minimal.sets()[0],
            Subset::from_indices(5, &[1, 2, 4]).unwrap()
        );
    }

    #[test]
    fn minimal_elements_triangles() {
        // Clique instance (5,3,2) with r = 1: minimal elements are the 10 edges.
        let inst = crate::cliques::CliqueParams::new(5, 3, 2)
            .unwrap()
            .build_instance(rat(1, 1))
            .unwrap();
        let summary = inst.minimal_elements().unwrap();
        assert_eq!(summary.m, 10);
        let edges = SubsetFamily::new(inst.edges().to_vec());
        assert_eq!(summary.minimal, edges);
    }

    #[test]
    fn enumeration_cap() {
        let edges: Vec<Vec<usize>> = vec![vec![0, 1]];
        let inst = Instance::from_edge_lists(25, 2, &edges, rat(1, 1)).unwrap();
        assert!(matches!(
            inst.minimal_elements(),
            Err(Error::TooLarge { .. })
        ));
    }

    #[test]
    fn ground_set_caps() {
        assert!(GroundSet::new(0).is_err());
        assert!(matches!(GroundSet::new(65), Err(Error::TooLarge { .. })));
        assert_eq!(GroundSet::new(64).unwrap().full().len(), 64);
    }

    #[test]
    fn covers_examples() {
        let inst = cycle4();
        let minimal = inst.minimal_elements().unwrap().minimal.clone();
        assert!(inst.covers(&minimal).unwrap());
        let partial = SubsetFamily::new(vec![Subset::from_indices(4, &[0, 1, 2]).unwrap()]);
        assert!(!inst.covers(&partial).unwrap());
    }

    #[test]
    fn family_weights() {
        assert!(SubsetFamily::empty().weight(0.3).is_zero());
        let mut sets: Vec<Subset> = [
            vec![0usize, 1, 2],
            vec![1, 2, 3],
            vec![2, 3, 4],
            vec![3, 4, 0],
        ]
        .iter()
        .map(|v| Subset::from_indices(5, v).unwrap())
        .collect();
        sets.push(Subset::from_indices(5, &[0, 1, 2, 3]).unwrap());
        let fam = SubsetFamily::new(sets);
        let w = fam.weight(0.13).to_f64();
        assert!((w - (4.0 * 0.13f64.powi(3) + 0.13f64.powi(4))).abs() < 1e-15);
        let exact = fam.weight_exact(&rat(13, 100));
        let expect = rat(4 * 13 * 13 * 13, 1_000_000) + rat(13i64.pow(4), 100_000_000);
        assert_eq!(exact, expect);

        let ground = GroundSet::new(6).unwrap();
        let whole = SubsetFamily::new(vec![ground.full()]);
        assert!((whole.weight(1.0).to_f64() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn sperner_bound_holds() {
        let inst = cycle4();
        let summary = inst.minimal_elements().unwrap();
        let bound = binomial(4, 2).to_u64().unwrap() as usize;
        assert!(summary.m <= bound);
    }

    #[test]
    fn json_roundtrip_canonical() {
        let inst = cycle4();
        let text = inst.to_json_string();
        let back = Instance::from_json_str(&text).unwrap();
        assert_eq!(back.to_json_string(), text);
        assert_eq!(back.d(), 4);
        assert_eq!(back.r(), &rat(2, 1));
    }

    #[test]
    fn json_rejects_malformed() {
        assert!(Instance::from_json_str("{").is_err());
        assert!(Instance::from_json_str("{\"n\": 4}").is_err());
        let bad_edge = r#"{"n":4,"k":2,"r":"2/1","edges":[[0,9]]}"#;
        assert!(Instance::from_json_str(bad_edge).is_err());
        let dup_edges = r#"{"n":4,"k":2,"r":"2/1","edges":[[0,1],[0,1]]}"#;
        assert!(Instance::from_json_str(dup_edges).is_err());
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rational("3/2").unwrap(), rat(3, 2));
        assert_eq!(parse_rational("7").unwrap(), rat(7, 1));
        assert!(parse_rational("1/0").is_err());
        assert!(parse_rational("x/2").is_err());
        assert_eq!(
            parse_rational("10/4").unwrap(),
            BigRational::from_f64(2.5).unwrap()
        );
    }

    #[test]
    fn warnings_cover_the_scale_assumptions() {
        let inst = cycle4();
        let warnings = inst.assumption_warnings(Some(2.0 * std::f64::consts::E));
        // Desk scale: k = 2 > ln 4, and r = 2 < (2e)^2.
        assert!(warnings.iter().any(|w| w.contains("ln(n)")));
        assert!(warnings.iter().any(|w| w.contains("L^k")));
    }
}
