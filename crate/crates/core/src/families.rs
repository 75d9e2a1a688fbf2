//! Optimal radio labelings of `P_m □ W_n`, and the labelings they induce on
//! `P_m □ K_{1,n}` and `P_m □ F_n`.
//!
//! Vertex `(u_i, v_j)` of `P_m □ H` has id `(i - 1) * |V(H)| + j`.
//!
//! The wheel ordering is built in two steps. Each row `i` of the product
//! has a permutation `π_i` of the rim indices `1..=n`; vertex `(u_i, v_j)` is
//! renamed `(a_i, b_{π_i(j)})` (hubs keep `b_0`). A slot table then maps
//! `(a_r, b_s)` to its position `t` in the ordering.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{
    all_pairs_distances, cartesian_product, complete, friendship, path, star, wheel,
    DistanceMatrix, Graph, VertexId,
};
use crate::labeling::{certify_optimal, Certificate, Labeling, LabelingFile, Ordering};
use crate::layers::{layer_decomposition, CenterSet};

/// A permutation of `{1, ..., n}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Permutation1N {
    images: Vec<usize>,
}

impl Permutation1N {
    /// `images[j - 1]` is the image of `j`. Fails unless bijective on `1..=n`.
    pub fn from_images(images: Vec<usize>) -> Result<Self> {
        let n = images.len();
        let mut hit = vec![false; n + 1];
        for (idx, &img) in images.iter().enumerate() {
            if img == 0 || img > n {
                return Err(Error::NotBijective(format!("{} maps to {img}, outside 1..={n}", idx + 1)));
            }
            if std::mem::replace(&mut hit[img], true) {
                return Err(Error::NotBijective(format!("{img} is hit twice")));
            }
        }
        Ok(Self { images })
    }

    pub fn identity(n: usize) -> Self {
        Self { images: (1..=n).collect() }
    }

    pub fn n(&self) -> usize {
        self.images.len()
    }

    pub fn apply(&self, j: usize) -> usize {
        self.images[j - 1]
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0; self.n()];
        for (idx, &img) in self.images.iter().enumerate() {
            inv[img - 1] = idx + 1;
        }
        Self { images: inv }
    }

    /// `self ∘ inner`, i.e. `j -> self(inner(j))`.
    pub fn compose(&self, inner: &Self) -> Self {
        Self { images: (1..=inner.n()).map(|j| self.apply(inner.apply(j))).collect() }
    }
}

fn need(what: &'static str, min: usize, got: usize) -> Result<()> {
    if got < min {
        return Err(Error::ParameterTooSmall { what, min, got });
    }
    Ok(())
}

/// `1 -> n-1`, `2 -> n`, `j -> j-2` otherwise.
pub fn tau(n: usize) -> Result<Permutation1N> {
    need("tau", 3, n)?;
    let images = (1..=n)
        .map(|j| match j {
            1 => n - 1,
            2 => n,
            _ => j - 2,
        })
        .collect();
    Permutation1N::from_images(images)
}

/// Groups `1..=n` by residue mod 4 (classes 1, 2, 3, 0 in that order) and
/// numbers each class consecutively.
pub fn sigma(n: usize) -> Result<Permutation1N> {
    need("sigma", 4, n)?;
    let images = (1..=n)
        .map(|j| {
            let class = match j % 4 {
                0 => 4,
                r => r,
            };
            let offset: usize = (0..class - 1).map(|t| (n - t).div_ceil(4)).sum();
            offset + j.div_ceil(4)
        })
        .collect();
    Permutation1N::from_images(images)
}

/// Rotation by four: `j -> n-4+j` for `j <= 4`, `j -> j-4` otherwise.
pub fn alpha(n: usize) -> Result<Permutation1N> {
    need("alpha", 5, n)?;
    let images = (1..=n).map(|j| if j <= 4 { n - 4 + j } else { j - 4 }).collect();
    Permutation1N::from_images(images)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    PathWheel,
    PathStar,
    PathFriendship,
    PathComplete,
}

impl Family {
    pub const ALL: [Family; 4] =
        [Family::PathWheel, Family::PathStar, Family::PathFriendship, Family::PathComplete];

    pub fn as_str(self) -> &'static str {
        match self {
            Family::PathWheel => "path-wheel",
            Family::PathStar => "path-star",
            Family::PathFriendship => "path-friendship",
            Family::PathComplete => "path-complete",
        }
    }

    /// Smallest `(m, n)` covered by the closed-form radio number.
    pub fn hypothesis(self) -> (usize, usize) {
        match self {
            Family::PathWheel | Family::PathStar => (3, 7),
            Family::PathFriendship => (3, 4),
            Family::PathComplete => (4, 3),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Family {
    type Err = String;

    fn from_str(s: &str) -> std::result::Result<Self, Self::Err> {
        Family::ALL
            .into_iter()
            .find(|f| f.as_str() == s)
            .ok_or_else(|| format!("unknown family {s:?}"))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct FamilySpec {
    pub family: Family,
    pub m: usize,
    pub n: usize,
}

impl FamilySpec {
    pub fn new(family: Family, m: usize, n: usize) -> Self {
        Self { family, m, n }
    }

    pub fn within_hypothesis(&self) -> bool {
        let (min_m, min_n) = self.family.hypothesis();
        self.m >= min_m && self.n >= min_n
    }

    /// Error naming the first parameter below the theorem's range.
    pub fn check_hypothesis(&self) -> Result<()> {
        let (min_m, min_n) = self.family.hypothesis();
        need("m", min_m, self.m)?;
        need("n", min_n, self.n)
    }

    /// The product graph `P_m □ H`.
    pub fn graph(&self) -> Result<Graph> {
        let factor = match self.family {
            Family::PathWheel => wheel(self.n)?,
            Family::PathStar => star(self.n)?,
            Family::PathFriendship => friendship(self.n)?,
            Family::PathComplete => complete(self.n)?,
        };
        cartesian_product(&path(self.m)?, &factor)
    }

    /// Closed-form radio number for the family.
    pub fn closed_form(&self) -> i64 {
        let (m, n) = (self.m, self.n);
        match self.family {
            Family::PathWheel | Family::PathStar => wheel_radio_number(m, n),
            Family::PathFriendship => friendship_radio_number(m, n),
            Family::PathComplete => complete_radio_number(m, n),
        }
    }
}

fn halve(numerator: i64) -> i64 {
    assert!(numerator % 2 == 0, "closed form numerator {numerator} is odd");
    numerator / 2
}

/// `rn(P_m □ W_n)`: `(m²n + m² + 2m - 2)/2` for even `m`,
/// `(m²n + m² + 2m + n - 1)/2` for odd `m`.
pub fn wheel_radio_number(m: usize, n: usize) -> i64 {
    let (m, n) = (m as i64, n as i64);
    if m % 2 == 0 {
        halve(m * m * n + m * m + 2 * m - 2)
    } else {
        halve(m * m * n + m * m + 2 * m + n - 1)
    }
}

/// Equal to the wheel value.
pub fn star_radio_number(m: usize, n: usize) -> i64 {
    wheel_radio_number(m, n)
}

/// `rn(P_m □ F_n)`: `(2m²n + m² + 2m - 2)/2` even, `(2m²n + m² + 2m + 2n - 1)/2` odd.
pub fn friendship_radio_number(m: usize, n: usize) -> i64 {
    let (m, n) = (m as i64, n as i64);
    if m % 2 == 0 {
        halve(2 * m * m * n + m * m + 2 * m - 2)
    } else {
        halve(2 * m * m * n + m * m + 2 * m + 2 * n - 1)
    }
}

/// `rn(P_m □ K_n)`: `(m²n - 2m + 2)/2` even, `(m²n - 2m + n + 2)/2` odd.
pub fn complete_radio_number(m: usize, n: usize) -> i64 {
    let (m, n) = (m as i64, n as i64);
    if m % 2 == 0 {
        halve(m * m * n - 2 * m + 2)
    } else {
        halve(m * m * n - 2 * m + n + 2)
    }
}

/// Total level `L(P_m □ W_n)` around the wheel center: `m(mn + 2n + m - 2)/4`
/// for even `m`, `(m²n + m² + 4mn - n - 1)/4` for odd `m`.
pub fn wheel_total_level(m: usize, n: usize) -> u64 {
    let (m, n) = (m as u64, n as u64);
    if m % 2 == 0 {
        m * (m * n + 2 * n + m - 2) / 4
    } else {
        (m * m * n + m * m + 4 * m * n - n - 1) / 4
    }
}

/// The stated total level for `P_m □ K_n`: `mn(m-2)/2` even, `(m²-1)n/4` odd.
pub fn complete_total_level_stated(m: usize, n: usize) -> u64 {
    let (m, n) = (m as u64, n as u64);
    if m % 2 == 0 {
        m * n * (m - 2) / 2
    } else {
        (m * m - 1) * n / 4
    }
}

/// Center used for the wheel ordering: the two middle hubs for even `m`,
/// the middle hub for odd `m`.
pub fn pw_center_vertices(m: usize, n: usize) -> Vec<VertexId> {
    let row = n + 1;
    if m.is_multiple_of(2) {
        vec![(m / 2 - 1) * row, (m / 2) * row]
    } else {
        vec![(m - 1) / 2 * row]
    }
}

pub fn pw_center(graph: &Graph, dist: &DistanceMatrix, m: usize, n: usize) -> Result<CenterSet> {
    CenterSet::new(graph, dist, &pw_center_vertices(m, n))
}

/// How the rim renaming `v_j -> b_s` is read off the row permutation.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum RimReading {
    /// `s = pi(j)` with `pi = sigma . tau` on the composed rows. Reproduces
    /// the reference `P_7 □ W_7` and `P_8 □ W_7` labelings; certifies only
    /// for `n ≡ 0, 3 (mod 4)`.
    Direct,
    /// `s = pi^{-1}(j)` with `pi = tau . sigma` on the composed rows.
    /// Certifies for every `n` in `7..=30`, the range checked.
    Inverse,
}

impl RimReading {
    /// The direct reading where it certifies, the inverse one elsewhere.
    pub fn for_n(n: usize) -> Self {
        if matches!(n % 4, 0 | 3) {
            Self::Direct
        } else {
            Self::Inverse
        }
    }
}

/// Rim permutation applied to row `i` (1-based), before the reading.
fn row_permutation(m: usize, n: usize, i: usize, reading: RimReading) -> Result<Permutation1N> {
    let composed = || -> Result<Permutation1N> {
        Ok(match reading {
            RimReading::Direct => sigma(n)?.compose(&tau(n)?),
            RimReading::Inverse => tau(n)?.compose(&sigma(n)?),
        })
    };
    if m.is_multiple_of(2) {
        return if i <= m / 2 { composed() } else { sigma(n) };
    }
    let mid = m.div_ceil(2);
    if i == m {
        Ok(Permutation1N::identity(n))
    } else if i == 1 {
        tau(n)
    } else if i == mid {
        alpha(n)
    } else if i < mid {
        composed()
    } else {
        sigma(n)
    }
}

/// Position of `(a_r, b_s)` in the ordering.
fn slot(m: usize, n: usize, r: usize, s: usize) -> usize {
    let row = n + 1;
    if m.is_multiple_of(2) {
        let half = m / 2;
        return match (r <= half, s) {
            (true, 0) => 2 * (half - r) * row,
            (true, s) => 2 * (half - r) * row + 2 * s,
            (false, 0) => 2 * (m - r + 1) * row - 1,
            (false, s) => 2 * (m - r) * row + 2 * s - 1,
        };
    }
    let mid = m.div_ceil(2);
    match (r, s) {
        (1, 0) => 3 * n + 2,
        (1, s) => 3 * s - 1,
        (r, 0) if r == mid => 0,
        (r, s) if r == mid => 3 * s,
        (r, 0) if r == m => 3 * n + 1,
        (r, s) if r == m => 3 * s - 2,
        (r, 0) if r < mid => 3 * n + 2 + 2 * (r - 1) * row,
        (r, s) if r < mid => 3 * n + 2 + 2 * (r - 2) * row + 2 * s,
        (r, 0) => 3 * n + 2 + 2 * (r - mid) * row - 1,
        (r, s) => 3 * n + 2 + 2 * (r - mid - 1) * row + 2 * s - 1,
    }
}

/// The wheel ordering `x_0, ..., x_{p-1}` of `P_m □ W_n`.
///
/// Requires `m >= 2` and `n >= 4` (even `m`) or `m >= 3` and `n >= 5` (odd
/// `m`) for the permutations to exist; optimality is only claimed for
/// `m >= 3`, `n >= 7`.
pub fn pw_ordering(m: usize, n: usize) -> Result<Ordering> {
    pw_ordering_with(m, n, RimReading::for_n(n))
}

pub fn pw_ordering_with(m: usize, n: usize, reading: RimReading) -> Result<Ordering> {
    need("m", if m.is_multiple_of(2) { 2 } else { 3 }, m)?;
    let row = n + 1;
    let p = m * row;
    let mut x = vec![usize::MAX; p];
    for i in 1..=m {
        let perm = row_permutation(m, n, i, reading)?;
        let perm = match reading {
            RimReading::Direct => perm,
            RimReading::Inverse => perm.inverse(),
        };
        for j in 0..=n {
            let s = if j == 0 { 0 } else { perm.apply(j) };
            let t = slot(m, n, i, s);
            let vertex = (i - 1) * row + j;
            if t >= p || x[t] != usize::MAX {
                return Err(Error::Inconsistent(format!(
                    "slot {t} for (u_{i},v_{j}) collides or is out of range"
                )));
            }
            x[t] = vertex;
        }
    }
    Ordering::new(x, p)
}

/// Level-preservation check for an inherited construction.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Inheritance {
    pub parent: FamilySpec,
    pub parent_certified: bool,
    /// `d(v, L0)` identical in parent and subgraph for every vertex.
    pub levels_match: bool,
}

#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub spec: FamilySpec,
    pub graph: Graph,
    pub distances: DistanceMatrix,
    pub center: CenterSet,
    pub ordering: Ordering,
    pub certificate: Certificate,
    pub closed_form: i64,
    pub within_hypothesis: bool,
    pub inheritance: Option<Inheritance>,
}

impl ConstructionResult {
    pub fn certified(&self) -> bool {
        self.certificate.certified
    }

    pub fn labeling(&self) -> Option<&Labeling> {
        self.certificate.labeling.as_ref()
    }

    pub fn span(&self) -> Option<u64> {
        self.labeling().map(Labeling::span)
    }

    pub fn to_output(&self) -> FamilyOutput {
        let c = &self.certificate;
        let labeling = c
            .labeling
            .clone()
            .unwrap_or_else(|| Labeling::new(vec![0; self.graph.order()]));
        FamilyOutput {
            family: self.spec.family,
            m: self.spec.m,
            n: self.spec.n,
            file: LabelingFile::new(&labeling, Some(&self.ordering)),
            certificate: CertificateBlock {
                p: c.bound.p,
                d: c.bound.d,
                k: c.bound.k,
                delta: c.bound.delta,
                total: c.bound.total,
                bound: c.bound.bound,
                center: c.bound.center.clone(),
                endpoint_level_sum: c.conditions.endpoint_level_sum,
                condition_a: c.conditions.condition_a,
                condition_b: c.conditions.condition_b,
                first_violations: c.conditions.violations.iter().take(5).map(|v| (v.i, v.j)).collect(),
                closed_form: self.closed_form,
                within_hypothesis: self.within_hypothesis,
                certified: c.certified,
                inheritance: self.inheritance.clone(),
            },
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CertificateBlock {
    pub p: usize,
    pub d: u32,
    pub k: u32,
    pub delta: u32,
    #[serde(rename = "L")]
    pub total: u64,
    pub bound: i64,
    pub center: Vec<VertexId>,
    pub endpoint_level_sum: u32,
    pub condition_a: bool,
    pub condition_b: bool,
    #[serde(skip_serializing_if = "Vec::is_empty")]
    pub first_violations: Vec<(usize, usize)>,
    pub closed_form: i64,
    pub within_hypothesis: bool,
    pub certified: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub inheritance: Option<Inheritance>,
}

/// Labeling JSON plus `family`, `m`, `n` and a `certificate` block.
#[derive(Debug, Clone, Serialize)]
pub struct FamilyOutput {
    pub family: Family,
    pub m: usize,
    pub n: usize,
    #[serde(flatten)]
    pub file: LabelingFile,
    pub certificate: CertificateBlock,
}

#[derive(Debug, Clone, Copy, Default)]
pub struct BuildOptions {
    /// Run the construction below the theorem's parameter range and report
    /// whether certification happens to pass instead of failing early.
    pub allow_outside_hypothesis: bool,
}

/// Builds and certifies the explicit construction for `spec`.
///
/// Inside the theorem's range a certification failure is an error. Outside
/// it (with `allow_outside_hypothesis`) the uncertified result is returned.
pub fn build_family(spec: FamilySpec, options: BuildOptions) -> Result<ConstructionResult> {
    let within = spec.within_hypothesis();
    if !within && !options.allow_outside_hypothesis {
        spec.check_hypothesis()?;
    }
    let result = match spec.family {
        Family::PathWheel => build_wheel(spec)?,
        Family::PathStar => inherit(spec, FamilySpec::new(Family::PathWheel, spec.m, spec.n))?,
        Family::PathFriendship => {
            inherit(spec, FamilySpec::new(Family::PathWheel, spec.m, 2 * spec.n))?
        }
        Family::PathComplete => return Err(Error::NoConstruction(spec.family.to_string())),
    };
    if within && !result.certified() {
        let detail = match result.certificate.conditions.violations.first() {
            Some(v) => format!(
                "pair (x_{}, x_{}) has distance {} < {}",
                v.i, v.j, v.distance, v.required
            ),
            None => format!(
                "endpoint level sum {} != {}",
                result.certificate.conditions.endpoint_level_sum,
                result.certificate.conditions.expected_endpoint_level_sum
            ),
        };
        return Err(Error::CertificationFailed(format!("{} m={} n={}: {detail}", spec.family, spec.m, spec.n)));
    }
    Ok(result)
}

fn build_wheel(spec: FamilySpec) -> Result<ConstructionResult> {
    let graph = spec.graph()?;
    let distances = all_pairs_distances(&graph);
    let center = pw_center(&graph, &distances, spec.m, spec.n)?;
    let ordering = pw_ordering(spec.m, spec.n)?;
    let certificate = certify_optimal(&distances, &center, &ordering)?;
    Ok(ConstructionResult {
        spec,
        closed_form: spec.closed_form(),
        within_hypothesis: spec.within_hypothesis(),
        graph,
        distances,
        center,
        ordering,
        certificate,
        inheritance: None,
    })
}

/// Reuses the parent wheel ordering on a spanning subgraph with the same
/// vertex ids, certifying against the subgraph's own distances.
fn inherit(spec: FamilySpec, parent_spec: FamilySpec) -> Result<ConstructionResult> {
    let parent = build_wheel(parent_spec)?;
    let graph = spec.graph()?;
    if graph.order() != parent.graph.order() {
        return Err(Error::Inconsistent("subgraph order differs from parent".into()));
    }
    if let Some((u, v)) = graph.edges().into_iter().find(|&(u, v)| !parent.graph.has_edge(u, v)) {
        return Err(Error::EdgeNotInParent(u, v));
    }
    let distances = all_pairs_distances(&graph);
    let center = CenterSet::new(&graph, &distances, parent.center.vertices())?;
    let levels_match = layer_decomposition(&distances, &center).level
        == layer_decomposition(&parent.distances, &parent.center).level;
    let certificate = certify_optimal(&distances, &center, &parent.ordering)?;
    Ok(ConstructionResult {
        spec,
        closed_form: spec.closed_form(),
        within_hypothesis: spec.within_hypothesis(),
        graph,
        distances,
        center,
        ordering: parent.ordering.clone(),
        certificate,
        inheritance: Some(Inheritance {
            parent: parent_spec,
            parent_certified: parent.certified(),
            levels_match,
        }),
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tau_values() {
        let t = tau(7).unwrap();
        assert_eq!(t.apply(1), 6);
        assert_eq!(t.apply(2), 7);
        assert_eq!(t.apply(3), 1);
        assert_eq!(t.compose(&t.inverse()), Permutation1N::identity(7));
        assert!(tau(2).is_err());
    }

    #[test]
    fn sigma_values() {
        // Classes for n = 7: {1,5} -> 1,2; {2,6} -> 3,4; {3,7} -> 5,6; {4} -> 7.
        let s = sigma(7).unwrap();
        let images: Vec<_> = (1..=7).map(|j| s.apply(j)).collect();
        assert_eq!(images, vec![1, 3, 5, 7, 2, 4, 6]);
        assert!(sigma(3).is_err());
        for n in 4..=40 {
            assert!(sigma(n).is_ok(), "sigma({n})");
        }
    }

    #[test]
    fn alpha_values() {
        let a = alpha(7).unwrap();
        assert_eq!(a.apply(1), 4);
        assert_eq!(a.apply(4), 7);
        assert_eq!(a.apply(5), 1);
        assert!(alpha(4).is_err());
    }

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation1N::from_images(vec![1, 1, 3]).is_err());
        assert!(Permutation1N::from_images(vec![1, 4, 3]).is_err());
    }

    #[test]
    fn closed_forms() {
        assert_eq!(wheel_radio_number(7, 7), 206);
        assert_eq!(wheel_radio_number(8, 7), 263);
        assert_eq!(wheel_radio_number(4, 7), 67);
        assert_eq!(star_radio_number(7, 7), 206);
        assert_eq!(friendship_radio_number(8, 4), 295);
        assert_eq!(friendship_radio_number(7, 4), 231);
        assert_eq!(complete_radio_number(4, 3), 21);
        assert_eq!(wheel_total_level(8, 7), 152);
        assert_eq!(wheel_total_level(7, 7), 145);
        assert_eq!(complete_total_level_stated(5, 3), 18);
    }

    #[test]
    fn friendship_matches_wheel_on_double_rim() {
        for m in 3..=12 {
            for n in 4..=12 {
                assert_eq!(friendship_radio_number(m, n), wheel_radio_number(m, 2 * n));
            }
        }
    }

    #[test]
    fn table_anchor_positions() {
        let row = 8;
        let o7 = pw_ordering(7, 7).unwrap();
        assert_eq!(o7.as_slice()[0], 3 * row);
        assert_eq!(o7.as_slice()[1], 6 * row + 1);
        assert_eq!(o7.as_slice()[55], 2 * row);
        let o8 = pw_ordering(8, 7).unwrap();
        assert_eq!(o8.as_slice()[63], 4 * row);
    }

    #[test]
    fn center_shape() {
        let spec = FamilySpec::new(Family::PathWheel, 8, 7);
        let g = spec.graph().unwrap();
        let d = all_pairs_distances(&g);
        let c = pw_center(&g, &d, 8, 7).unwrap();
        assert_eq!(c.vertices(), &[24, 32]);
        assert_eq!(c.k(), 1);
        assert_eq!(layer_decomposition(&d, &c).h, 4);

        let spec = FamilySpec::new(Family::PathWheel, 7, 7);
        let g = spec.graph().unwrap();
        let d = all_pairs_distances(&g);
        let c = pw_center(&g, &d, 7, 7).unwrap();
        assert_eq!((c.k(), c.delta()), (0, 1));
    }

    #[test]
    fn family_parsing() {
        assert_eq!("path-star".parse::<Family>(), Ok(Family::PathStar));
        assert!("path-cycle".parse::<Family>().is_err());
        assert!(!FamilySpec::new(Family::PathWheel, 2, 7).within_hypothesis());
        assert!(FamilySpec::new(Family::PathFriendship, 3, 4).within_hypothesis());
    }

    #[test]
    fn build_small_cases() {
        let r = build_family(FamilySpec::new(Family::PathWheel, 4, 7), BuildOptions::default()).unwrap();
        assert!(r.certified());
        assert_eq!(r.span(), Some(67));

        let f = build_family(FamilySpec::new(Family::PathFriendship, 7, 4), BuildOptions::default())
            .unwrap();
        assert_eq!(f.span(), Some(231));
        assert!(f.inheritance.as_ref().unwrap().levels_match);

        assert!(matches!(
            build_family(FamilySpec::new(Family::PathComplete, 4, 3), BuildOptions::default()),
            Err(Error::NoConstruction(_))
        ));
        assert!(matches!(
            build_family(FamilySpec::new(Family::PathWheel, 2, 7), BuildOptions::default()),
            Err(Error::ParameterTooSmall { what: "m", .. })
        ));
    }

    #[test]
    fn rim_readings_by_residue() {
        use crate::labeling::certify_optimal;
        for n in [7, 8, 9, 10] {
            for m in [4, 5] {
                let g = FamilySpec::new(Family::PathWheel, m, n).graph().unwrap();
                let d = crate::all_pairs_distances(&g);
                let c = pw_center(&g, &d, m, n).unwrap();
                let direct = pw_ordering_with(m, n, RimReading::Direct).unwrap();
                let inverse = pw_ordering_with(m, n, RimReading::Inverse).unwrap();
                let certified = |o: &Ordering| certify_optimal(&d, &c, o).unwrap().certified;
                assert_eq!(certified(&direct), matches!(n % 4, 0 | 3), "direct m={m} n={n}");
                assert!(certified(&inverse), "inverse m={m} n={n}");
            }
        }
        assert_eq!(RimReading::for_n(7), RimReading::Direct);
        assert_eq!(RimReading::for_n(9), RimReading::Inverse);
    }
}
