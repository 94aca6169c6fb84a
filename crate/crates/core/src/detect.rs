//! Forbidden-subgraph detection and the counting quantities behind the
//! classical extremal bounds.
//!
//! All searches branch over vertices in increasing id order, so every
//! witness returned is the lexicographically first one in that order.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::construct::{named_graph, NamedGraph};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::graph6::{from_graph6, to_graph6};

/// Explicit patterns are matched by backtracking and are capped at this order.
pub const MAX_PATTERN_ORDER: usize = 10;
/// Exact colouring is limited to graphs of at most this order.
pub const MAX_EXACT_COLORING_ORDER: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DetectError {
    #[error("pattern has {0} vertices, at most 10 are supported")]
    PatternTooLarge(usize),
    #[error("exact colouring is limited to 16 vertices, got {0}")]
    TooLargeForExact(usize),
    #[error("invalid pattern: {0}")]
    InvalidPattern(&'static str),
}

/// A forbidden subgraph `H`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum ForbiddenPattern {
    /// `K_k`.
    Clique(usize),
    /// `K_{r,t}` with `r <= t`.
    CompleteBipartite(usize, usize),
    /// The cycle on exactly `len` vertices, `len` even and at least 4.
    EvenCycle(usize),
    /// Any graph on at most [`MAX_PATTERN_ORDER`] vertices.
    Explicit(Graph),
}

impl ForbiddenPattern {
    pub fn validate(&self) -> Result<(), DetectError> {
        match *self {
            ForbiddenPattern::Clique(k) if k == 0 => Err(DetectError::InvalidPattern("clique size must be at least 1")),
            ForbiddenPattern::Clique(k) if k > 64 => Err(DetectError::InvalidPattern("clique size must be at most 64")),
            ForbiddenPattern::CompleteBipartite(r, t) if r == 0 || r > t => {
                Err(DetectError::InvalidPattern("complete bipartite pattern needs 1 <= r <= t"))
            }
            ForbiddenPattern::CompleteBipartite(r, t) if r + t > 64 => {
                Err(DetectError::InvalidPattern("complete bipartite pattern must fit in 64 vertices"))
            }
            ForbiddenPattern::EvenCycle(len) if len < 4 || len % 2 == 1 || len > 64 => {
                Err(DetectError::InvalidPattern("cycle length must be even, at least 4 and at most 64"))
            }
            ForbiddenPattern::Explicit(ref h) if h.order() > MAX_PATTERN_ORDER => {
                Err(DetectError::PatternTooLarge(h.order()))
            }
            _ => Ok(()),
        }
    }

    /// Number of vertices of the pattern.
    pub fn order(&self) -> usize {
        match self {
            ForbiddenPattern::Clique(k) => *k,
            ForbiddenPattern::CompleteBipartite(r, t) => r + t,
            ForbiddenPattern::EvenCycle(len) => *len,
            ForbiddenPattern::Explicit(h) => h.order(),
        }
    }

    /// The pattern as a graph. Requires a valid pattern.
    pub fn to_graph(&self) -> Graph {
        let kind = match *self {
            ForbiddenPattern::Clique(k) => NamedGraph::Complete(k),
            ForbiddenPattern::CompleteBipartite(r, t) => NamedGraph::CompleteBipartite(r, t),
            ForbiddenPattern::EvenCycle(len) => NamedGraph::Cycle(len),
            ForbiddenPattern::Explicit(ref h) => return h.clone(),
        };
        named_graph(kind).expect("validated pattern fits in 64 vertices")
    }

    /// Whether `g` contains the pattern as a (not necessarily induced) subgraph.
    pub fn is_contained_in(&self, g: &Graph) -> bool {
        match *self {
            ForbiddenPattern::Clique(k) => has_clique(g, k),
            ForbiddenPattern::CompleteBipartite(r, t) => has_complete_bipartite(g, r, t),
            ForbiddenPattern::EvenCycle(len) => has_even_cycle(g, len),
            ForbiddenPattern::Explicit(ref h) => {
                contains_subgraph(g, h).expect("validated pattern is within the size cap")
            }
        }
    }

    /// Whether adding the edge `uv` to `g` creates a copy of the pattern,
    /// assuming `g` itself is pattern-free. Only copies through `uv` are
    /// searched where a rooted search exists; otherwise `g + uv` is checked in full.
    pub fn completes_with_edge(&self, g: &Graph, u: usize, v: usize) -> bool {
        match *self {
            ForbiddenPattern::Clique(k) if k >= 2 => {
                let common = g.neighbors(u).intersection(g.neighbors(v));
                k == 2 || find_clique_within(g, common, k - 2).is_some()
            }
            ForbiddenPattern::EvenCycle(len) => cycle_through_edge(g, u, v, len),
            _ => {
                let mut b = GraphBuilder::from_graph(g);
                b.insert_unchecked(u, v);
                self.is_contained_in(&b.build())
            }
        }
    }
}

impl fmt::Display for ForbiddenPattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ForbiddenPattern::Clique(k) => write!(f, "K{k}"),
            ForbiddenPattern::CompleteBipartite(r, t) => write!(f, "K{r},{t}"),
            ForbiddenPattern::EvenCycle(len) => write!(f, "C{len}"),
            ForbiddenPattern::Explicit(h) => write!(f, "g6:{}", to_graph6(h)),
        }
    }
}

impl FromStr for ForbiddenPattern {
    type Err = DetectError;

    /// `K3`, `K2,2` (or `K{2,2}`), `C4`, or `g6:<graph6>`.
    fn from_str(s: &str) -> Result<Self, DetectError> {
        let bad = DetectError::InvalidPattern("expected K<k>, K<r>,<t>, C<len> or g6:<graph6>");
        let s = s.trim();
        let pattern = if let Some(code) = s.strip_prefix("g6:") {
            ForbiddenPattern::Explicit(from_graph6(code).map_err(|_| bad.clone())?)
        } else if let Some(rest) = s.strip_prefix('K') {
            let rest = rest.trim_start_matches('{').trim_end_matches('}');
            match rest.split_once(',') {
                Some((r, t)) => ForbiddenPattern::CompleteBipartite(
                    r.trim().parse().map_err(|_| bad.clone())?,
                    t.trim().parse().map_err(|_| bad.clone())?,
                ),
                None => ForbiddenPattern::Clique(rest.parse().map_err(|_| bad.clone())?),
            }
        } else if let Some(len) = s.strip_prefix('C') {
            ForbiddenPattern::EvenCycle(len.parse().map_err(|_| bad.clone())?)
        } else {
            return Err(bad);
        };
        pattern.validate()?;
        Ok(pattern)
    }
}

// ---------------------------------------------------------------------------
// Cliques and independent sets
// ---------------------------------------------------------------------------

/// Number of colours a greedy sequential colouring uses on `p`; an upper
/// bound on the clique number of `g[p]`.
fn greedy_color_bound(g: &Graph, mut p: VertexSet) -> usize {
    let mut colors = 0;
    while !p.is_empty() {
        let mut q = p;
        while let Some(v) = q.first() {
            p.remove(v);
            q = q.without(v).difference(g.neighbors(v));
        }
        colors += 1;
    }
    colors
}

fn extend_clique(g: &Graph, chosen: VertexSet, cand: VertexSet, k: usize) -> Option<VertexSet> {
    if chosen.len() == k {
        return Some(chosen);
    }
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if chosen.len() + rest.len() < k {
            return None;
        }
        rest.remove(v);
        let next = rest.intersection(g.neighbors(v));
        if chosen.len() + 1 + next.len() >= k {
            if let Some(found) = extend_clique(g, chosen.with(v), next, k) {
                return Some(found);
            }
        }
    }
    None
}

/// First `k`-clique inside `within`, in lexicographic order.
pub fn find_clique_within(g: &Graph, within: VertexSet, k: usize) -> Option<VertexSet> {
    extend_clique(g, VertexSet::EMPTY, within, k)
}

/// First `k`-clique of `g`, in lexicographic order.
pub fn find_clique(g: &Graph, k: usize) -> Option<VertexSet> {
    find_clique_within(g, g.vertices(), k)
}

/// True iff `g` has `k` pairwise adjacent vertices.
pub fn has_clique(g: &Graph, k: usize) -> bool {
    find_clique(g, k).is_some()
}

fn grow_max_clique(g: &Graph, chosen: VertexSet, cand: VertexSet, best: &mut VertexSet) {
    if chosen.len() > best.len() {
        *best = chosen;
    }
    if chosen.len() + greedy_color_bound(g, cand) <= best.len() {
        return;
    }
    let mut rest = cand;
    while let Some(v) = rest.first() {
        if chosen.len() + rest.len() <= best.len() {
            return;
        }
        rest.remove(v);
        grow_max_clique(g, chosen.with(v), rest.intersection(g.neighbors(v)), best);
    }
}

/// A maximum clique; the lexicographically smallest one among all maximum cliques.
pub fn max_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    grow_max_clique(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

/// A maximum independent set; the lexicographically smallest among all maximum ones.
pub fn max_independent_set(g: &Graph) -> VertexSet {
    max_clique(&g.complement())
}

// ---------------------------------------------------------------------------
// Complete bipartite subgraphs
// ---------------------------------------------------------------------------

fn extend_left_side(
    g: &Graph,
    chosen: VertexSet,
    common: VertexSet,
    from: usize,
    r: usize,
    t: usize,
) -> Option<(VertexSet, VertexSet)> {
    if common.len() < t {
        return None;
    }
    if chosen.len() == r {
        return Some((chosen, common.smallest(t).expect("size checked")));
    }
    for v in from..g.order() {
        let next = common.intersection(g.neighbors(v));
        if let Some(found) = extend_left_side(g, chosen.with(v), next, v + 1, r, t) {
            return Some(found);
        }
    }
    None
}

/// Disjoint `(A, B)` with `|A| = r`, `|B| = t` and every `A`-`B` pair adjacent.
/// `A` is the first `r`-subset (lexicographically) whose common
/// neighbourhood has at least `t` vertices; `B` is the `t` smallest of those.
pub fn find_complete_bipartite(g: &Graph, r: usize, t: usize) -> Option<(VertexSet, VertexSet)> {
    if r == 0 {
        return g.vertices().smallest(t).map(|b| (VertexSet::EMPTY, b));
    }
    // common neighbourhood of a nonempty set never meets the set itself
    extend_left_side(g, VertexSet::EMPTY, g.vertices(), 0, r, t)
}

pub fn has_complete_bipartite(g: &Graph, r: usize, t: usize) -> bool {
    find_complete_bipartite(g, r, t).is_some()
}

// ---------------------------------------------------------------------------
// Cycles of an exact length
// ---------------------------------------------------------------------------

/// Extends `path` (ending at `last`, already `depth` vertices long) to a simple
/// path of `len` vertices whose final vertex is adjacent to `target`.
/// Only vertices in `allowed` may be used.
fn extend_path(
    g: &Graph,
    path: &mut Vec<usize>,
    allowed: VertexSet,
    target: usize,
    len: usize,
) -> bool {
    let last = *path.last().expect("path starts nonempty");
    if path.len() == len {
        return g.has_edge(last, target);
    }
    let mut next = g.neighbors(last).intersection(allowed);
    if path.len() + 1 == len {
        next = next.intersection(g.neighbors(target));
    }
    for w in next {
        path.push(w);
        if extend_path(g, path, allowed.without(w), target, len) {
            return true;
        }
        path.pop();
    }
    false
}

/// A simple cycle on exactly `len` vertices, listed from its smallest vertex.
/// Works for any `len >= 3`.
pub fn find_cycle(g: &Graph, len: usize) -> Option<Vec<usize>> {
    if len < 3 || len > g.order() {
        return None;
    }
    for s in 0..g.order() {
        // s is the smallest vertex on the cycle
        let allowed = g.vertices().difference(VertexSet::full(s + 1));
        let mut path = alloc::vec![s];
        if extend_path(g, &mut path, allowed, s, len) {
            return Some(path);
        }
    }
    None
}

/// True iff `g` has a simple cycle of exactly `len` vertices (not "at least").
pub fn has_even_cycle(g: &Graph, len: usize) -> bool {
    debug_assert!(len >= 4 && len % 2 == 0, "even cycle length must be even and >= 4");
    find_cycle(g, len).is_some()
}

/// A `len`-cycle that uses the edge `uv`: a simple `u`..`v` path on `len` vertices.
fn cycle_through_edge(g: &Graph, u: usize, v: usize, len: usize) -> bool {
    if len < 3 || len > g.order() {
        return false;
    }
    let mut path = alloc::vec![u];
    let allowed = g.vertices().without(u).without(v);
    // path of len - 1 vertices from u avoiding v, whose end is adjacent to v;
    // then v closes it and vu is the cycle edge
    extend_path(g, &mut path, allowed, v, len - 1)
}

// ---------------------------------------------------------------------------
// General subgraph containment
// ---------------------------------------------------------------------------

/// Matching order for `h`: repeatedly take the unplaced vertex with the most
/// placed neighbours, then the highest degree, then the smallest id.
fn matching_order(h: &Graph) -> [usize; MAX_PATTERN_ORDER] {
    let mut order = [0; MAX_PATTERN_ORDER];
    let mut placed = VertexSet::EMPTY;
    for slot in order.iter_mut().take(h.order()) {
        let next = h
            .vertices()
            .difference(placed)
            .iter()
            .max_by_key(|&w| (h.degree_in(w, placed), h.degree(w), core::cmp::Reverse(w)))
            .expect("unplaced vertex remains");
        *slot = next;
        placed.insert(next);
    }
    order
}

struct Matcher<'a> {
    g: &'a Graph,
    h: &'a Graph,
    order: [usize; MAX_PATTERN_ORDER],
    image: [usize; MAX_PATTERN_ORDER],
}

impl<'a> Matcher<'a> {
    /// `None` when `h` cannot fit in `g` for size reasons alone.
    fn new(g: &'a Graph, h: &'a Graph) -> Result<Option<Self>, DetectError> {
        if h.order() > MAX_PATTERN_ORDER {
            return Err(DetectError::PatternTooLarge(h.order()));
        }
        if h.order() > g.order() || h.edge_count() > g.edge_count() {
            return Ok(None);
        }
        Ok(Some(Matcher { g, h, order: matching_order(h), image: [0; MAX_PATTERN_ORDER] }))
    }

    fn extend(&mut self, depth: usize, used: VertexSet) -> bool {
        if depth == self.h.order() {
            return true;
        }
        let x = self.order[depth];
        let mut cand = self.g.vertices().difference(used);
        for &y in &self.order[..depth] {
            if self.h.has_edge(x, y) {
                cand = cand.intersection(self.g.neighbors(self.image[y]));
            }
        }
        let need = self.h.degree(x);
        for c in cand {
            if self.g.degree(c) < need {
                continue;
            }
            self.image[x] = c;
            if self.extend(depth + 1, used.with(c)) {
                return true;
            }
        }
        false
    }
}

/// An injective map `h -> g` preserving adjacency (not necessarily induced);
/// entry `i` is the image of vertex `i` of `h`.
pub fn find_embedding(g: &Graph, h: &Graph) -> Result<Option<Vec<usize>>, DetectError> {
    Ok(Matcher::new(g, h)?.and_then(|mut m| m.extend(0, VertexSet::EMPTY).then(|| m.image[..h.order()].to_vec())))
}

pub fn contains_subgraph(g: &Graph, h: &Graph) -> Result<bool, DetectError> {
    Ok(Matcher::new(g, h)?.is_some_and(|mut m| m.extend(0, VertexSet::EMPTY)))
}

// ---------------------------------------------------------------------------
// Counting
// ---------------------------------------------------------------------------

pub fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let k = k.min(n - k);
    (0..k).fold(1u128, |acc, i| acc * (n - i) / (i + 1))
}

/// `P = Σ_v C(deg v, 2)`, the number of paths with two edges.
pub fn count_paths2(g: &Graph) -> u128 {
    count_stars(g, 2)
}

/// `Σ_v C(deg v, r)`: copies of `K_{1,r}` counted as (centre, leaf set) pairs.
pub fn count_stars(g: &Graph, r: usize) -> u128 {
    (0..g.order()).map(|v| binomial(g.degree(v) as u128, r as u128)).sum()
}

// ---------------------------------------------------------------------------
// Colouring
// ---------------------------------------------------------------------------

/// An optimal proper colouring: `colors[v]` is in `0..chi`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub chi: usize,
    pub colors: Vec<usize>,
}

impl Coloring {
    /// Vertices of each colour class, indexed by colour.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut classes = alloc::vec![VertexSet::EMPTY; self.chi];
        for (v, &c) in self.colors.iter().enumerate() {
            classes[c].insert(v);
        }
        classes
    }

    pub fn is_proper_for(&self, g: &Graph) -> bool {
        self.colors.len() == g.order()
            && self.colors.iter().all(|&c| c < self.chi)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }
}

fn greedy_colors(g: &Graph) -> usize {
    let mut classes: Vec<VertexSet> = Vec::new();
    for v in 0..g.order() {
        match classes.iter_mut().find(|c| c.is_disjoint(g.neighbors(v))) {
            Some(c) => c.insert(v),
            None => classes.push(VertexSet::EMPTY.with(v)),
        }
    }
    classes.len()
}

fn color_from(g: &Graph, v: usize, k: usize, used: usize, classes: &mut [VertexSet], colors: &mut [usize]) -> bool {
    if v == g.order() {
        return true;
    }
    for c in 0..k.min(used + 1) {
        if classes[c].is_disjoint(g.neighbors(v)) {
            classes[c].insert(v);
            colors[v] = c;
            if color_from(g, v + 1, k, used.max(c + 1), classes, colors) {
                return true;
            }
            classes[c].remove(v);
        }
    }
    false
}

/// Lexicographically smallest proper colouring with at most `k` colours.
fn try_color(g: &Graph, k: usize) -> Option<Vec<usize>> {
    let mut classes = alloc::vec![VertexSet::EMPTY; k];
    let mut colors = alloc::vec![0; g.order()];
    color_from(g, 0, k, 0, &mut classes, &mut colors).then_some(colors)
}

/// `χ(g)` with the lexicographically smallest optimal colouring.
/// Exact branch and bound between the clique lower bound and the greedy upper bound.
pub fn chromatic_number(g: &Graph) -> Result<Coloring, DetectError> {
    if g.order() > MAX_EXACT_COLORING_ORDER {
        return Err(DetectError::TooLargeForExact(g.order()));
    }
    if g.order() == 0 {
        return Ok(Coloring { chi: 0, colors: Vec::new() });
    }
    let lower = max_clique(g).len();
    let upper = greedy_colors(g);
    for k in lower..=upper {
        if let Some(colors) = try_color(g, k) {
            return Ok(Coloring { chi: k, colors });
        }
    }
    unreachable!("greedy colouring with {upper} colours exists")
}
