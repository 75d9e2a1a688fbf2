//! Radio labelings: verification, construction from a vertex ordering, and
//! the ordering conditions under which the constructed labeling meets the
//! layer lower bound.
//!
//! For an ordering `x_0, ..., x_{p-1}` and center `L0` with `k = diam(L0)`,
//! the ordering labeling is
//!
//! ```text
//! f(x_0) = 0
//! f(x_{i+1}) = f(x_i) + d + 1 - d(x_i, L0) - d(x_{i+1}, L0) - k
//! ```
//!
//! It is an optimal radio labeling when
//!
//! * (a) `d(x_0, L0) + d(x_{p-1}, L0)` is 1 for a single-vertex center and 0
//!   otherwise, and
//! * (b) for all `i < j`,
//!   `d(x_i, x_j) >= sum_{t=i}^{j-1} (d(x_t,L0) + d(x_{t+1},L0) + k - d - 1) + d + 1`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{DistanceMatrix, VertexId};
use crate::layers::{layer_decomposition, lower_bound, BoundReport, CenterSet};

/// Most violations kept in any report.
pub const MAX_REPORTED_VIOLATIONS: usize = 20;

/// A permutation `x_0, ..., x_{p-1}` of all vertices.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Ordering(Vec<VertexId>);

impl Ordering {
    pub fn new(sequence: Vec<VertexId>, order: usize) -> Result<Self> {
        if sequence.len() != order {
            return Err(Error::InvalidOrdering(format!(
                "length {} for {order} vertices",
                sequence.len()
            )));
        }
        let mut seen = vec![false; order];
        for &v in &sequence {
            if v >= order {
                return Err(Error::InvalidOrdering(format!("vertex {v} out of range")));
            }
            if std::mem::replace(&mut seen[v], true) {
                return Err(Error::InvalidOrdering(format!("vertex {v} repeated")));
            }
        }
        Ok(Self(sequence))
    }

    pub fn identity(order: usize) -> Self {
        Self((0..order).collect())
    }

    pub fn as_slice(&self) -> &[VertexId] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn first(&self) -> VertexId {
        self.0[0]
    }

    pub fn last(&self) -> VertexId {
        self.0[self.0.len() - 1]
    }

    pub fn reversed(&self) -> Self {
        Self(self.0.iter().rev().copied().collect())
    }

    /// `position[v]` = index of `v` in the ordering.
    pub fn positions(&self) -> Vec<usize> {
        let mut pos = vec![0; self.0.len()];
        for (i, &v) in self.0.iter().enumerate() {
            pos[v] = i;
        }
        pos
    }

    pub fn into_inner(self) -> Vec<VertexId> {
        self.0
    }
}

/// Per-vertex channel assignment.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Labeling {
    labels: Vec<u64>,
}

impl Labeling {
    pub fn new(labels: Vec<u64>) -> Self {
        Self { labels }
    }

    pub fn labels(&self) -> &[u64] {
        &self.labels
    }

    pub fn get(&self, v: VertexId) -> u64 {
        self.labels[v]
    }

    pub fn len(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    /// `max - min`.
    pub fn span(&self) -> u64 {
        let max = self.labels.iter().copied().max().unwrap_or(0);
        let min = self.labels.iter().copied().min().unwrap_or(0);
        max - min
    }

    /// Vertices sorted by label; fails on repeated labels.
    pub fn induced_ordering(&self) -> Result<Ordering> {
        let mut seq: Vec<VertexId> = (0..self.labels.len()).collect();
        seq.sort_by_key(|&v| (self.labels[v], v));
        for w in seq.windows(2) {
            if self.labels[w[0]] == self.labels[w[1]] {
                return Err(Error::DuplicateLabel(w[0], w[1]));
            }
        }
        Ok(Ordering(seq))
    }

    /// Builds from a sparse map, requiring every vertex in `0..order`.
    pub fn from_map(map: &BTreeMap<VertexId, u64>, order: usize) -> Result<Self> {
        if let Some((&v, _)) = map.iter().find(|(&v, _)| v >= order) {
            return Err(Error::VertexOutOfRange { vertex: v, order });
        }
        let labels = (0..order)
            .map(|v| map.get(&v).copied().ok_or(Error::MissingLabel(v)))
            .collect::<Result<_>>()?;
        Ok(Self { labels })
    }

    pub fn to_map(&self) -> BTreeMap<VertexId, u64> {
        self.labels.iter().copied().enumerate().collect()
    }
}

/// JSON form: `{"labels": {"0": 0, ...}, "ordering": [...], "span": n}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingFile {
    pub labels: BTreeMap<VertexId, u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ordering: Option<Vec<VertexId>>,
    pub span: u64,
}

impl LabelingFile {
    pub fn new(labeling: &Labeling, ordering: Option<&Ordering>) -> Self {
        Self {
            labels: labeling.to_map(),
            ordering: ordering.map(|o| o.as_slice().to_vec()),
            span: labeling.span(),
        }
    }

    pub fn labeling(&self, order: usize) -> Result<Labeling> {
        Labeling::from_map(&self.labels, order)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Violation {
    pub u: VertexId,
    pub v: VertexId,
    pub required_gap: u64,
    pub actual_gap: u64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub valid: bool,
    /// Up to [`MAX_REPORTED_VIOLATIONS`] entries.
    pub violations: Vec<Violation>,
    pub violation_count: usize,
    pub span: u64,
}

/// Checks `|f(u) - f(v)| >= d + 1 - d(u, v)` for every unordered pair.
pub fn is_radio_labeling(dist: &DistanceMatrix, labeling: &Labeling) -> Result<VerificationReport> {
    let p = dist.order();
    if labeling.len() != p {
        return Err(Error::LabelCountMismatch { expected: p, got: labeling.len() });
    }
    let d = u64::from(dist.diameter());
    let mut violations = Vec::new();
    let mut count = 0;
    for u in 0..p {
        for v in u + 1..p {
            let required = d + 1 - u64::from(dist.get(u, v));
            let actual = labeling.get(u).abs_diff(labeling.get(v));
            if actual < required {
                count += 1;
                if violations.len() < MAX_REPORTED_VIOLATIONS {
                    violations.push(Violation { u, v, required_gap: required, actual_gap: actual });
                }
            }
        }
    }
    Ok(VerificationReport {
        valid: count == 0,
        violations,
        violation_count: count,
        span: labeling.span(),
    })
}

/// `d(x_t, L0) + d(x_{t+1}, L0) + k - d - 1` for each consecutive step.
fn step_terms(dist: &DistanceMatrix, center: &CenterSet, ordering: &Ordering) -> (Vec<u32>, Vec<i64>) {
    let level = layer_decomposition(dist, center).level;
    let d = i64::from(dist.diameter());
    let k = i64::from(center.k());
    let terms = ordering
        .as_slice()
        .windows(2)
        .map(|w| i64::from(level[w[0]]) + i64::from(level[w[1]]) + k - d - 1)
        .collect();
    (level, terms)
}

/// The labeling determined by the ordering and the center's levels.
pub fn labeling_from_ordering(
    dist: &DistanceMatrix,
    center: &CenterSet,
    ordering: &Ordering,
) -> Result<Labeling> {
    check_order(dist, ordering)?;
    let (_, terms) = step_terms(dist, center, ordering);
    let mut labels = vec![0u64; ordering.len()];
    let mut current = 0u64;
    for (i, (w, &term)) in ordering.as_slice().windows(2).zip(&terms).enumerate() {
        let increment = -term;
        if increment <= 0 {
            return Err(Error::NonPositiveIncrement { index: i, increment });
        }
        current += increment as u64;
        labels[w[1]] = current;
    }
    Ok(Labeling::new(labels))
}

fn check_order(dist: &DistanceMatrix, ordering: &Ordering) -> Result<()> {
    if ordering.len() != dist.order() {
        return Err(Error::InvalidOrdering(format!(
            "length {} for {} vertices",
            ordering.len(),
            dist.order()
        )));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PairViolation {
    pub i: usize,
    pub j: usize,
    pub distance: u32,
    pub required: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct OrderingConditions {
    pub endpoint_level_sum: u32,
    pub expected_endpoint_level_sum: u32,
    pub condition_a: bool,
    pub condition_b: bool,
    /// First failing `(i, j)` pairs for condition (b), by `i` then `j`.
    pub violations: Vec<PairViolation>,
}

impl OrderingConditions {
    pub fn holds(&self) -> bool {
        self.condition_a && self.condition_b
    }
}

/// Evaluates conditions (a) and (b) for every pair `i < j` using prefix sums.
pub fn check_ordering_conditions(
    dist: &DistanceMatrix,
    center: &CenterSet,
    ordering: &Ordering,
) -> Result<OrderingConditions> {
    check_order(dist, ordering)?;
    let (level, terms) = step_terms(dist, center, ordering);
    let endpoint_level_sum = level[ordering.first()] + level[ordering.last()];
    let expected = center.delta();

    let mut prefix = Vec::with_capacity(terms.len() + 1);
    prefix.push(0i64);
    for t in &terms {
        prefix.push(prefix.last().unwrap() + t);
    }
    let d1 = i64::from(dist.diameter()) + 1;
    let seq = ordering.as_slice();
    let mut violations = Vec::new();
    let mut ok = true;
    'outer: for i in 0..seq.len() {
        for j in i + 1..seq.len() {
            let required = prefix[j] - prefix[i] + d1;
            let distance = dist.get(seq[i], seq[j]);
            if i64::from(distance) < required {
                ok = false;
                violations.push(PairViolation { i, j, distance, required });
                if violations.len() >= MAX_REPORTED_VIOLATIONS {
                    break 'outer;
                }
            }
        }
    }
    Ok(OrderingConditions {
        endpoint_level_sum,
        expected_endpoint_level_sum: expected,
        condition_a: endpoint_level_sum == expected,
        condition_b: ok,
        violations,
    })
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Certificate {
    /// `None` when the ordering has a non-positive step.
    pub labeling: Option<Labeling>,
    pub bound: BoundReport,
    pub conditions: OrderingConditions,
    pub verification: Option<VerificationReport>,
    pub certified: bool,
}

/// When the ordering conditions hold, returns the ordering labeling as a
/// certified optimum: verified as a radio labeling with span equal to the
/// lower bound, hence `rn(G) = bound`.
pub fn certify_optimal(
    dist: &DistanceMatrix,
    center: &CenterSet,
    ordering: &Ordering,
) -> Result<Certificate> {
    let conditions = check_ordering_conditions(dist, center, ordering)?;
    let bound = lower_bound(dist, center);
    let labeling = match labeling_from_ordering(dist, center, ordering) {
        Ok(l) => Some(l),
        Err(Error::NonPositiveIncrement { .. }) => None,
        Err(e) => return Err(e),
    };
    let verification = labeling.as_ref().map(|l| is_radio_labeling(dist, l)).transpose()?;
    let certified = conditions.holds();
    if certified {
        let (Some(l), Some(v)) = (&labeling, &verification) else {
            return Err(Error::Inconsistent(
                "ordering conditions hold but a step increment is non-positive".into(),
            ));
        };
        if !v.valid || l.span() as i64 != bound.bound {
            return Err(Error::Inconsistent(format!(
                "conditions hold but labeling valid={} span={} bound={}",
                v.valid,
                l.span(),
                bound.bound
            )));
        }
    }
    Ok(Certificate { labeling, bound, conditions, verification, certified })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct LabelingConditions {
    /// (a) consecutive vertices satisfy `d(x_i,x_{i+1}) = l_i + l_{i+1} + k`.
    pub consecutive_distance: bool,
    /// (b) endpoints in `L0` (or `x_{p-1}` in the first layer for a one-vertex center).
    pub endpoints: bool,
    /// (c) `f(x_0) = 0` and every step equals the ordering-labeling increment.
    pub increments: bool,
    pub first_failing_step: Option<usize>,
}

impl LabelingConditions {
    pub fn holds(&self) -> bool {
        self.consecutive_distance && self.endpoints && self.increments
    }
}

/// Checks an existing labeling against the three structural conditions of
/// an optimal labeling, over the ordering induced by sorting labels.
pub fn check_labeling_conditions(
    dist: &DistanceMatrix,
    center: &CenterSet,
    labeling: &Labeling,
) -> Result<LabelingConditions> {
    if labeling.len() != dist.order() {
        return Err(Error::LabelCountMismatch { expected: dist.order(), got: labeling.len() });
    }
    let ordering = labeling.induced_ordering()?;
    let level = layer_decomposition(dist, center).level;
    let d = i64::from(dist.diameter());
    let k = center.k();
    let seq = ordering.as_slice();

    let mut consecutive_distance = true;
    let mut increments = labeling.get(seq[0]) == 0;
    let mut first_failing_step = None;
    for (i, w) in seq.windows(2).enumerate() {
        let (a, b) = (w[0], w[1]);
        let sum = level[a] + level[b] + k;
        let dist_ok = dist.get(a, b) == sum;
        let step = labeling.get(b) as i64 - labeling.get(a) as i64;
        let inc_ok = step == d + 1 - i64::from(sum);
        consecutive_distance &= dist_ok;
        increments &= inc_ok;
        if first_failing_step.is_none() && !(dist_ok && inc_ok) {
            first_failing_step = Some(i);
        }
    }
    let (x0, last) = (ordering.first(), ordering.last());
    let endpoints = if center.len() >= 2 {
        center.contains(x0) && center.contains(last)
    } else {
        center.contains(x0) && level[last] == 1
    };
    Ok(LabelingConditions { consecutive_distance, endpoints, increments, first_failing_step })
}

/// Smallest labels consistent with the ordering:
/// `f(x_{i+1}) = max_{j <= i} f(x_j) + d + 1 - d(x_j, x_{i+1})`.
pub fn greedy_min_span(dist: &DistanceMatrix, ordering: &Ordering) -> Labeling {
    let d = u64::from(dist.diameter());
    let seq = ordering.as_slice();
    let mut labels = vec![0u64; seq.len()];
    for i in 1..seq.len() {
        let v = seq[i];
        labels[v] = seq[..i]
            .iter()
            .map(|&u| labels[u] + d + 1 - u64::from(dist.get(u, v)))
            .max()
            .unwrap();
    }
    Labeling::new(labels)
}
