//! Bit-row simple graphs on at most 64 vertices.

use core::fmt;

use crate::rational::Rational;

/// Largest supported vertex count. Each adjacency row is one `u64`.
pub const MAX_VERTICES: usize = 64;

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("graph has {0} vertices, at most 64 are supported")]
    TooLarge(usize),
    #[error("vertex {vertex} is out of range for a graph on {n} vertices")]
    OutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("average degree is undefined on the empty graph")]
    EmptyGraph,
}

/// Mask with the lowest `n` bits set.
#[inline]
pub const fn low_mask(n: usize) -> u64 {
    if n >= 64 {
        u64::MAX
    } else {
        (1u64 << n) - 1
    }
}

/// A set of vertex ids in `0..64`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    /// `{0, 1, .., n-1}`.
    #[inline]
    pub const fn full(n: usize) -> Self {
        VertexSet(low_mask(n))
    }

    #[inline]
    pub const fn bits(self) -> u64 {
        self.0
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 64 && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 |= 1 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        debug_assert!(v < 64);
        self.0 &= !(1 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1 << v)
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1 << v))
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in increasing order.
    #[inline]
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    /// The `k` smallest members, or `None` if there are fewer than `k`.
    pub fn smallest(self, k: usize) -> Option<VertexSet> {
        if self.len() < k {
            return None;
        }
        let mut out = VertexSet::EMPTY;
        for v in self.iter().take(k) {
            out.insert(v);
        }
        Some(out)
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{v}")?;
        }
        f.write_str("}")
    }
}

/// Iterator over the members of a [`VertexSet`].
#[derive(Clone)]
pub struct Members(u64);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for Members {}

/// An immutable simple undirected graph on `n <= 64` vertices.
///
/// Row `v` of the adjacency matrix is a `u64` whose bit `u` is set iff `uv`
/// is an edge. Rows are kept symmetric and loop-free; the edge count is
/// cached. Use [`GraphBuilder`] to assemble or modify graphs.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    m: usize,
    adj: [u64; MAX_VERTICES],
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(Graph { n, m: 0, adj: [0; MAX_VERTICES] })
    }

    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn row(&self, v: usize) -> u64 {
        self.adj[v]
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n && v < self.n && self.adj[u] >> v & 1 == 1
    }

    /// Neighbors of `v` inside `within`.
    #[inline]
    pub fn degree_in(&self, v: usize, within: VertexSet) -> usize {
        (self.adj[v] & within.0).count_ones() as usize
    }

    /// Common neighborhood of every vertex in `s` (all vertices when `s` is empty).
    pub fn common_neighbors(&self, s: VertexSet) -> VertexSet {
        s.iter()
            .fold(self.vertices(), |acc, v| acc.intersection(self.neighbors(v)))
    }

    /// Edges `(u, v)` with `u < v`, in graph6 column order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (1..self.n).flat_map(move |v| {
            VertexSet(self.adj[v] & low_mask(v)).iter().map(move |u| (u, v))
        })
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter().map(|v| self.degree_in(v, s)).sum::<usize>() / 2
    }

    /// Number of edges with one end in `a` and the other in `b`; `a` and `b` must be disjoint.
    pub fn edges_between(&self, a: VertexSet, b: VertexSet) -> usize {
        debug_assert!(a.is_disjoint(b));
        a.iter().map(|v| self.degree_in(v, b)).sum()
    }

    pub fn complement(&self) -> Graph {
        let mut adj = [0; MAX_VERTICES];
        let full = low_mask(self.n);
        for (v, row) in adj.iter_mut().enumerate().take(self.n) {
            *row = !self.adj[v] & full & !(1 << v);
        }
        let m = self.n * self.n.saturating_sub(1) / 2 - self.m;
        Graph { n: self.n, m, adj }
    }

    /// The subgraph induced by `s`, relabeled by increasing original id.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<Graph, GraphError> {
        if let Some(bad) = s.difference(self.vertices()).first() {
            return Err(GraphError::OutOfRange { vertex: bad, n: self.n });
        }
        let ids: ids::Ids = s.iter().collect();
        let mut b = GraphBuilder::new(ids.len())?;
        for (i, &u) in ids.iter().enumerate() {
            for (j, &v) in ids.iter().enumerate().skip(i + 1) {
                if self.has_edge(u, v) {
                    b.add_edge(i, j)?;
                }
            }
        }
        Ok(b.build())
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    /// `(δ, Δ, d, m)`; fails on the empty graph since `d = 2m/n` is undefined there.
    pub fn degree_profile(&self) -> Result<DegreeProfile, GraphError> {
        if self.n == 0 {
            return Err(GraphError::EmptyGraph);
        }
        Ok(DegreeProfile {
            min_degree: self.min_degree(),
            max_degree: self.max_degree(),
            average_degree: AverageDegree { twice_edges: 2 * self.m, vertices: self.n },
            edge_count: self.m,
        })
    }

    /// Same vertex set and every edge of `self` is an edge of `other`.
    pub fn is_subgraph_of(&self, other: &Graph) -> bool {
        self.n == other.n && (0..self.n).all(|v| self.adj[v] & !other.adj[v] == 0)
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (i, (u, v)) in self.edges().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        f.write_str("])")
    }
}

/// `d(G) = 2m/n`, kept as the exact pair `(2m, n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AverageDegree {
    pub twice_edges: usize,
    pub vertices: usize,
}

impl AverageDegree {
    pub fn to_rational(self) -> Rational {
        Rational::new(self.twice_edges as i128, self.vertices as i128)
    }

    pub fn to_f64(self) -> f64 {
        self.twice_edges as f64 / self.vertices as f64
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct DegreeProfile {
    pub min_degree: usize,
    pub max_degree: usize,
    pub average_degree: AverageDegree,
    pub edge_count: usize,
}

/// Mutable adjacency rows used to assemble a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    n: usize,
    m: usize,
    adj: [u64; MAX_VERTICES],
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooLarge(n));
        }
        Ok(GraphBuilder { n, m: 0, adj: [0; MAX_VERTICES] })
    }

    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder { n: g.n, m: g.m, adj: g.adj }
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn edge_count(&self) -> usize {
        self.m
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    fn check(&self, u: usize, v: usize) -> Result<(), GraphError> {
        for w in [u, v] {
            if w >= self.n {
                return Err(GraphError::OutOfRange { vertex: w, n: self.n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop(u));
        }
        Ok(())
    }

    /// Adds `uv`; returns whether it was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check(u, v)?;
        Ok(self.insert_unchecked(u, v))
    }

    /// Removes `uv`; returns whether it was present.
    pub fn remove_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        self.check(u, v)?;
        Ok(self.remove_unchecked(u, v))
    }

    #[inline]
    pub(crate) fn insert_unchecked(&mut self, u: usize, v: usize) -> bool {
        let fresh = self.adj[u] >> v & 1 == 0;
        if fresh {
            self.adj[u] |= 1 << v;
            self.adj[v] |= 1 << u;
            self.m += 1;
        }
        fresh
    }

    #[inline]
    pub(crate) fn remove_unchecked(&mut self, u: usize, v: usize) -> bool {
        let present = self.adj[u] >> v & 1 == 1;
        if present {
            self.adj[u] &= !(1 << v);
            self.adj[v] &= !(1 << u);
            self.m -= 1;
        }
        present
    }

    /// Snapshot of the current state.
    pub fn build(&self) -> Graph {
        Graph { n: self.n, m: self.m, adj: self.adj }
    }
}

/// Fixed-capacity id list, enough for the 64-vertex cap without allocating.
pub(crate) mod ids {
    use super::MAX_VERTICES;

    pub struct Ids {
        len: usize,
        buf: [usize; MAX_VERTICES],
    }

    impl Ids {
        pub fn len(&self) -> usize {
            self.len
        }

        pub fn iter(&self) -> core::slice::Iter<'_, usize> {
            self.buf[..self.len].iter()
        }
    }

    impl FromIterator<usize> for Ids {
        fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
            let mut ids = Ids { len: 0, buf: [0; MAX_VERTICES] };
            for v in iter {
                ids.buf[ids.len] = v;
                ids.len += 1;
            }
            ids
        }
    }
}
