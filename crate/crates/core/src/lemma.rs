//! Constructive extremal arguments run as algorithms.
//!
//! - [`half_degree_subgraph`]: delete low-degree vertices until the minimum
//!   degree is at least half the original average degree.
//! - [`dense_core`]: peel vertices whose degree falls below
//!   `(1 - 1/r + eps/2)·m` in the current `m`-vertex graph.
//! - [`find_blowup`]: extract `r+1` pairwise complete `t`-sets, either by the
//!   inductive pigeonhole construction over the dense core or by direct search.
//! - [`bfs_layers`] and [`layer_density_report`]: distance layers from a root
//!   with their internal and cross-layer densities.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use num_traits::Zero;

use crate::bounds::lemma_threshold;
use crate::detect::{binomial, chromatic_number, DetectError};
use crate::graph::{Graph, VertexSet};
use crate::rational::Rational;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum LemmaError {
    #[error("epsilon is out of range: need 0 < eps < 1/r")]
    EpsOutOfRange,
    #[error("bad parameters: {0}")]
    BadParams(&'static str),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error(transparent)]
    Detect(#[from] DetectError),
}

/// Validated `(r, eps)` with `r >= 1` and `0 < eps < 1/r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DensityParams {
    r: usize,
    eps: Rational,
}

impl DensityParams {
    pub fn new(r: usize, eps: Rational) -> Result<Self, LemmaError> {
        if r == 0 {
            return Err(LemmaError::BadParams("r must be at least 1"));
        }
        if eps <= Rational::zero() || eps >= Rational::new(1, r as i128) {
            return Err(LemmaError::EpsOutOfRange);
        }
        Ok(DensityParams { r, eps })
    }

    pub fn r(&self) -> usize {
        self.r
    }

    pub fn eps(&self) -> Rational {
        self.eps
    }

    /// `deg < (1 - 1/r + eps/2)·size`, by cross-multiplication.
    ///
    /// With `eps = p/q` the factor is `(2q(r-1) + pr) / (2qr)`.
    pub fn below_threshold(&self, degree: usize, size: usize) -> bool {
        let (p, q, r) = (*self.eps.numer(), *self.eps.denom(), self.r as i128);
        degree as i128 * 2 * q * r < (2 * q * (r - 1) + p * r) * size as i128
    }

    /// `p > r·eps·n/3`.
    pub fn core_is_large(&self, p: usize, n: usize) -> bool {
        let (ep, eq) = (*self.eps.numer(), *self.eps.denom());
        3 * p as i128 * eq > self.r as i128 * ep * n as i128
    }

    /// `s = ceil(3t/eps)`, the part size the induction asks for one level down.
    pub fn part_size_below(&self, t: usize) -> usize {
        let (p, q) = (*self.eps.numer(), *self.eps.denom());
        num_integer::Integer::div_ceil(&(3 * t as i128 * q), &p) as usize
    }
}

// ---------------------------------------------------------------------------
// Half-average-degree subgraph
// ---------------------------------------------------------------------------

/// The vertex with the smallest degree inside `alive`, ties to the smallest id.
fn min_degree_vertex(g: &Graph, alive: VertexSet) -> Option<(usize, usize)> {
    alive.iter().map(|v| (g.degree_in(v, alive), v)).min()
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HalfDegreeSubgraph {
    pub vertices: VertexSet,
    pub subgraph: Graph,
}

/// A nonempty induced subgraph with `δ(H) >= d(g)/2`, where `d(g)` is the
/// average degree of the input graph (fixed throughout). Vertices of degree
/// below `m/n` are deleted one at a time, smallest degree then smallest id
/// first. An edgeless input yields the single vertex 0.
pub fn half_degree_subgraph(g: &Graph) -> HalfDegreeSubgraph {
    let (m, n) = (g.edge_count(), g.order());
    let vertices = if m == 0 {
        g.vertices().smallest(n.min(1)).expect("n.min(1) <= n")
    } else {
        let mut alive = g.vertices();
        // deg < d/2 = m/n  <=>  deg·n < m
        while let Some((deg, v)) = min_degree_vertex(g, alive) {
            if deg * n >= m {
                break;
            }
            alive.remove(v);
        }
        alive
    };
    let subgraph = g.induced_subgraph(vertices).expect("subset of g");
    HalfDegreeSubgraph { vertices, subgraph }
}

// ---------------------------------------------------------------------------
// Dense core
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Removal {
    pub vertex: usize,
    /// Degree inside the current graph when removed.
    pub degree: usize,
    /// Order of the current graph when removed.
    pub size: usize,
}

/// Things worth reporting about a peeling run that are not errors.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoreFinding {
    /// Everything was peeled away.
    EmptyCore,
    /// The edge hypothesis held and `n >= n_min`, but `p <= r·eps·n/3`.
    CoreTooSmall { p: usize, n: usize },
}

impl fmt::Display for CoreFinding {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CoreFinding::EmptyCore => f.write_str("empty core"),
            CoreFinding::CoreTooSmall { p, n } => write!(f, "core of {p} vertices is not above r*eps*n/3 for n={n}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DenseCoreConfig {
    /// The size guarantee is only asserted for `n >= n_min`.
    pub n_min: usize,
}

impl Default for DenseCoreConfig {
    fn default() -> Self {
        DenseCoreConfig { n_min: 1 }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseCoreResult {
    pub params: DensityParams,
    pub n: usize,
    pub core: Graph,
    pub survivors: VertexSet,
    pub p: usize,
    pub removal_trace: Vec<Removal>,
    /// The input has at least `(1 - 1/r + eps)·n²/2` edges.
    pub hypothesis_met: bool,
    /// `Some(p > r·eps·n/3)` when the guarantee applies.
    pub guarantee_holds: Option<bool>,
    pub findings: Vec<CoreFinding>,
}

impl DenseCoreResult {
    /// Every survivor has core degree at least `(1 - 1/r + eps/2)·p`.
    pub fn degree_invariant_holds(&self) -> bool {
        (0..self.core.order()).all(|v| !self.params.below_threshold(self.core.degree(v), self.p))
    }
}

/// Peels `g` down to its dense core for `(r, eps)`.
///
/// Each step removes the vertex of smallest degree (then smallest id) if
/// that degree is below `(1 - 1/r + eps/2)·m`, `m` the current order.
pub fn dense_core(g: &Graph, params: DensityParams, config: DenseCoreConfig) -> DenseCoreResult {
    let n = g.order();
    let mut alive = g.vertices();
    let mut removal_trace = Vec::new();
    while let Some((degree, vertex)) = min_degree_vertex(g, alive) {
        let size = alive.len();
        if !params.below_threshold(degree, size) {
            break;
        }
        removal_trace.push(Removal { vertex, degree, size });
        alive.remove(vertex);
    }
    let p = alive.len();
    let threshold = lemma_threshold(n, params.r, params.eps)
        .expect("params validated")
        .as_rational()
        .expect("rational threshold");
    let hypothesis_met = Rational::from_integer(g.edge_count() as i128) >= threshold;
    let guarantee_holds = (hypothesis_met && n >= config.n_min).then(|| params.core_is_large(p, n));
    let mut findings = Vec::new();
    if p == 0 {
        findings.push(CoreFinding::EmptyCore);
    }
    if guarantee_holds == Some(false) {
        findings.push(CoreFinding::CoreTooSmall { p, n });
    }
    DenseCoreResult {
        params,
        n,
        core: g.induced_subgraph(alive).expect("subset of g"),
        survivors: alive,
        p,
        removal_trace,
        hypothesis_met,
        guarantee_holds,
        findings,
    }
}

// ---------------------------------------------------------------------------
// Blow-up extraction
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlowupMode {
    ProofFaithful,
    Fallback,
    Auto,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum BlowupMethod {
    ProofFaithful,
    FallbackSearch,
}

impl BlowupMethod {
    pub fn name(self) -> &'static str {
        match self {
            BlowupMethod::ProofFaithful => "proof",
            BlowupMethod::FallbackSearch => "fallback",
        }
    }
}

/// `r + 1` disjoint `t`-sets with every cross pair adjacent.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlowupWitness {
    pub parts: Vec<VertexSet>,
    pub method: BlowupMethod,
}

/// Where the inductive construction gave out.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ProofStep {
    /// The dense core (or the host at this depth) has fewer vertices than needed.
    DenseCoreTooSmall { available: usize, needed: usize },
    /// `s = ceil(3t/eps)` exceeds the vertices available.
    SExceedsN { s: usize, available: usize },
    /// No pigeonhole bucket reached `t` members.
    RTooSmall { candidates: usize, largest_bucket: usize, buckets: usize, needed: u128 },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ProofFailure {
    /// 0 at the top level, increasing with each inductive step down.
    pub depth: usize,
    pub step: ProofStep,
}

impl fmt::Display for ProofFailure {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "depth {}: ", self.depth)?;
        match self.step {
            ProofStep::DenseCoreTooSmall { available, needed } => {
                write!(f, "dense core too small ({available} vertices, need {needed})")
            }
            ProofStep::SExceedsN { s, available } => write!(f, "s = {s} exceeds the {available} available vertices"),
            ProofStep::RTooSmall { candidates, largest_bucket, buckets, needed } => write!(
                f,
                "R too small for pigeonhole ({candidates} candidates in {buckets} buckets, largest {largest_bucket}, \
                 guarantee needs {needed})"
            ),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum BlowupError {
    #[error("bad parameters: {0}")]
    BadParams(&'static str),
    #[error("epsilon is out of range: need 0 < eps < 1/r")]
    EpsOutOfRange,
    #[error("inductive construction stopped at {0}")]
    ProofNotFound(ProofFailure),
    #[error("inductive construction impossible at this size: {0}")]
    SCapExceeded(ProofFailure),
    /// Direct search proved that no blow-up exists.
    #[error("no blow-up exists (exhaustive search)")]
    NotFound { proof_attempt: Option<ProofFailure> },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct BlowupParams {
    pub r: usize,
    pub t: usize,
    /// Required for `r >= 1`.
    pub eps: Option<Rational>,
}

impl BlowupParams {
    fn density(&self) -> Result<Option<DensityParams>, BlowupError> {
        if self.t == 0 {
            return Err(BlowupError::BadParams("t must be at least 1"));
        }
        if self.r == 0 {
            return Ok(None);
        }
        let eps = self.eps.ok_or(BlowupError::BadParams("eps is required when r >= 1"))?;
        DensityParams::new(self.r, eps).map(Some).map_err(|_| BlowupError::EpsOutOfRange)
    }
}

/// Pairwise complete `count` sets of size `size` inside `host`, following the
/// induction on the number of sets.
fn inductive_parts(
    g: &Graph,
    host: VertexSet,
    count: usize,
    size: usize,
    params: &DensityParams,
    depth: usize,
) -> Result<Vec<VertexSet>, ProofFailure> {
    let fail = |step| ProofFailure { depth, step };
    if count == 1 {
        let part = host
            .smallest(size)
            .ok_or(fail(ProofStep::DenseCoreTooSmall { available: host.len(), needed: size }))?;
        return Ok(alloc::vec![part]);
    }
    let s = params.part_size_below(size);
    // the count - 1 lower parts need (count - 1)·s vertices
    if s > host.len() {
        return Err(fail(ProofStep::SExceedsN { s, available: host.len() }));
    }
    let lower = inductive_parts(g, host, count - 1, s, params, depth + 1)?;
    let used = lower.iter().fold(VertexSet::EMPTY, |acc, &l| acc.union(l));
    let outside = host.difference(used);

    // R: vertices outside the L_i with at least `size` neighbours in each L_i,
    // bucketed by their `size` smallest neighbours in each
    let mut buckets: BTreeMap<Vec<u64>, VertexSet> = BTreeMap::new();
    let mut candidates = 0;
    for u in outside {
        let choice: Option<Vec<u64>> = lower
            .iter()
            .map(|&l| g.neighbors(u).intersection(l).smallest(size).map(VertexSet::bits))
            .collect();
        if let Some(key) = choice {
            candidates += 1;
            buckets.entry(key).or_default().insert(u);
        }
    }
    let found = buckets.iter().find(|(_, members)| members.len() >= size);
    match found {
        Some((key, members)) => {
            let mut parts: Vec<VertexSet> = key.iter().map(|&b| VertexSet::from_bits(b)).collect();
            parts.push(members.smallest(size).expect("bucket has enough members"));
            Ok(parts)
        }
        None => {
            let per_part = binomial(s as u128, size as u128);
            let needed = (0..count - 1)
                .try_fold(1u128, |acc, _| acc.checked_mul(per_part))
                .and_then(|b| b.checked_mul(size as u128 - 1))
                .and_then(|b| b.checked_add(1))
                .unwrap_or(u128::MAX);
            Err(fail(ProofStep::RTooSmall {
                candidates,
                largest_bucket: buckets.values().map(|m| m.len()).max().unwrap_or(0),
                buckets: buckets.len(),
                needed,
            }))
        }
    }
}

fn proof_faithful(g: &Graph, r: usize, t: usize, density: Option<DensityParams>) -> Result<Vec<VertexSet>, ProofFailure> {
    match density {
        None => inductive_parts(g, g.vertices(), 1, t, &DensityParams { r: 1, eps: Rational::new(1, 2) }, 0),
        Some(params) => {
            let core = dense_core(g, params, DenseCoreConfig::default());
            if core.p == 0 {
                return Err(ProofFailure { depth: 0, step: ProofStep::DenseCoreTooSmall { available: 0, needed: t } });
            }
            inductive_parts(g, core.survivors, r + 1, t, &params, 0)
        }
    }
}

struct PartSearch<'a> {
    g: &'a Graph,
    parts: usize,
    size: usize,
    chosen: Vec<VertexSet>,
}

impl PartSearch<'_> {
    /// Fills part `chosen.len()`. `allowed` is the common neighbourhood of all
    /// earlier parts; `current` is the part being built; `min_first` keeps the
    /// parts ordered by smallest member.
    fn fill(&mut self, allowed: VertexSet, current: VertexSet, common: VertexSet, from: usize, min_first: usize) -> bool {
        let remaining_parts = self.parts - self.chosen.len() - 1;
        if current.len() == self.size {
            if remaining_parts == 0 {
                self.chosen.push(current);
                return true;
            }
            let next_allowed = allowed.intersection(common);
            let start = current.first().expect("nonempty part") + 1;
            self.chosen.push(current);
            if self.fill(next_allowed, VertexSet::EMPTY, self.g.vertices(), start, start) {
                return true;
            }
            self.chosen.pop();
            return false;
        }
        let lo = if current.is_empty() { min_first } else { from };
        let cand = allowed.difference(VertexSet::full(lo));
        let need_here = self.size - current.len();
        if cand.len() < need_here {
            return false;
        }
        for v in cand {
            let common = common.intersection(self.g.neighbors(v));
            // later parts live in allowed ∩ common
            if allowed.intersection(common).len() < remaining_parts * self.size {
                continue;
            }
            if self.fill(allowed, current.with(v), common, v + 1, min_first) {
                return true;
            }
        }
        false
    }
}

/// Direct backtracking for `parts` pairwise complete sets of size `size`.
/// Parts are returned ordered by smallest member.
pub fn search_complete_parts(g: &Graph, parts: usize, size: usize) -> Option<Vec<VertexSet>> {
    if parts == 0 {
        return Some(Vec::new());
    }
    if size == 0 {
        return Some(alloc::vec![VertexSet::EMPTY; parts]);
    }
    let mut s = PartSearch { g, parts, size, chosen: Vec::new() };
    s.fill(g.vertices(), VertexSet::EMPTY, g.vertices(), 0, 0).then_some(s.chosen)
}

/// `r + 1` disjoint `t`-sets of `g`, pairwise completely joined.
///
/// `ProofFaithful` runs the inductive construction on the dense core: it
/// recursively finds `r` pairwise complete sets of size `s = ceil(3t/eps)`,
/// collects the outside vertices with `t` neighbours in each, and buckets
/// them by their `t` smallest neighbours per set; any bucket with `t`
/// members finishes the job. At small `n` this usually fails, and the
/// failure says where. `Fallback` searches directly and is complete.
/// `Auto` tries the construction first. Every witness is re-checked.
pub fn find_blowup(g: &Graph, params: BlowupParams, mode: BlowupMode) -> Result<BlowupWitness, BlowupError> {
    let density = params.density()?;
    let (r, t) = (params.r, params.t);
    let witness = |parts: Vec<VertexSet>, method| {
        let w = BlowupWitness { parts, method };
        verify_blowup(g, &w.parts, r + 1, t).expect("construction produced an invalid witness");
        w
    };
    let mut proof_attempt = None;
    if mode != BlowupMode::Fallback {
        match proof_faithful(g, r, t, density) {
            Ok(parts) => return Ok(witness(parts, BlowupMethod::ProofFaithful)),
            Err(failure) if mode == BlowupMode::ProofFaithful => {
                return Err(match failure.step {
                    ProofStep::SExceedsN { .. } => BlowupError::SCapExceeded(failure),
                    _ => BlowupError::ProofNotFound(failure),
                });
            }
            Err(failure) => proof_attempt = Some(failure),
        }
    }
    match search_complete_parts(g, r + 1, t) {
        Some(parts) => Ok(witness(parts, BlowupMethod::FallbackSearch)),
        None => Err(BlowupError::NotFound { proof_attempt }),
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum WitnessDefect {
    #[error("expected {expected} parts, got {got}")]
    PartCount { expected: usize, got: usize },
    #[error("part {part} has {got} vertices, expected {expected}")]
    PartSize { part: usize, expected: usize, got: usize },
    #[error("vertex {vertex} is not in the graph")]
    OutOfRange { vertex: usize },
    #[error("vertex {vertex} appears in two parts")]
    Overlap { vertex: usize },
    #[error("missing cross edge {u}-{v}")]
    MissingEdge { u: usize, v: usize },
}

/// Checks a claimed blow-up from scratch, pair by pair.
pub fn verify_blowup(g: &Graph, parts: &[VertexSet], expected_parts: usize, t: usize) -> Result<(), WitnessDefect> {
    if parts.len() != expected_parts {
        return Err(WitnessDefect::PartCount { expected: expected_parts, got: parts.len() });
    }
    let mut owner = [usize::MAX; 64];
    for (i, part) in parts.iter().enumerate() {
        let members: Vec<usize> = part.iter().collect();
        if members.len() != t {
            return Err(WitnessDefect::PartSize { part: i, expected: t, got: members.len() });
        }
        for v in members {
            if v >= g.order() {
                return Err(WitnessDefect::OutOfRange { vertex: v });
            }
            if owner[v] != usize::MAX {
                return Err(WitnessDefect::Overlap { vertex: v });
            }
            owner[v] = i;
        }
    }
    for u in 0..g.order() {
        for v in u + 1..g.order() {
            if owner[u] != usize::MAX && owner[v] != usize::MAX && owner[u] != owner[v] && !g.has_edge(u, v) {
                return Err(WitnessDefect::MissingEdge { u, v });
            }
        }
    }
    Ok(())
}

/// `(χ(h), t)`: `h` embeds in the blow-up of `K_χ` with parts of size `t`,
/// one colour class per part, `t` the largest class of the optimal colouring.
pub fn coloring_blowup_params(h: &Graph) -> Result<(usize, usize), LemmaError> {
    let coloring = chromatic_number(h)?;
    let t = coloring.classes().iter().map(|c| c.len()).max().unwrap_or(0);
    Ok((coloring.chi, t))
}

// ---------------------------------------------------------------------------
// Distance layers
// ---------------------------------------------------------------------------

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerDecomposition {
    pub root: usize,
    /// `V_0 = {root}, V_1, .., V_k` by exact distance.
    pub layers: Vec<VertexSet>,
    pub sizes: Vec<usize>,
    /// `|E(G[V_i])|` for `i = 0..=k`.
    pub intra_edges: Vec<usize>,
    /// `|E(G[V_i, V_{i+1}])|` for `i = 0..k`.
    pub cross_edges: Vec<usize>,
    /// `n_{i+1} / n_i` for `i = 0..k`; `None` when `n_i = 0`.
    pub ratios: Vec<Option<Rational>>,
}

pub fn bfs_layers(g: &Graph, root: usize, k: usize) -> Result<LayerDecomposition, LemmaError> {
    if root >= g.order() {
        return Err(LemmaError::OutOfRange { vertex: root, n: g.order() });
    }
    if k == 0 {
        return Err(LemmaError::BadParams("depth must be at least 1"));
    }
    let mut layers = alloc::vec![VertexSet::EMPTY.with(root)];
    let mut seen = layers[0];
    for _ in 0..k {
        let frontier = *layers.last().expect("nonempty");
        let next = frontier
            .iter()
            .fold(VertexSet::EMPTY, |acc, v| acc.union(g.neighbors(v)))
            .difference(seen);
        seen = seen.union(next);
        layers.push(next);
    }
    let sizes: Vec<usize> = layers.iter().map(|l| l.len()).collect();
    let intra_edges = layers.iter().map(|&l| g.edges_within(l)).collect();
    let cross_edges = layers.windows(2).map(|w| g.edges_between(w[0], w[1])).collect();
    let ratios = sizes
        .windows(2)
        .map(|w| (w[0] > 0).then(|| Rational::new(w[1] as i128, w[0] as i128)))
        .collect();
    Ok(LayerDecomposition { root, layers, sizes, intra_edges, cross_edges, ratios })
}

/// One row of [`layer_density_report`]; descriptive only.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LayerRow {
    pub index: usize,
    pub size: usize,
    /// `d(G[V_i]) = 2|E(G[V_i])| / n_i`.
    pub intra_density: Option<Rational>,
    /// `d(G[V_i, V_{i+1}]) = 2|E| / (n_i + n_{i+1})`; absent on the last layer.
    pub cross_density: Option<Rational>,
    /// `n_{i+1} / n_i`; absent on the last layer.
    pub ratio: Option<Rational>,
}

pub fn layer_density_report(g: &Graph, root: usize, k: usize) -> Result<Vec<LayerRow>, LemmaError> {
    let d = bfs_layers(g, root, k)?;
    let rows = (0..=k)
        .map(|i| {
            let size = d.sizes[i];
            let intra_density = (size > 0).then(|| Rational::new(2 * d.intra_edges[i] as i128, size as i128));
            let cross_density = (i < k)
                .then(|| (size, d.sizes[i + 1]))
                .filter(|&(a, b)| a + b > 0)
                .map(|(a, b)| Rational::new(2 * d.cross_edges[i] as i128, (a + b) as i128));
            let ratio = if i < k { d.ratios[i] } else { None };
            LayerRow { index: i, size, intra_density, cross_density, ratio }
        })
        .collect();
    Ok(rows)
}
