//! Pattern and extremal graphs: cliques, cycles, stars, complete multipartite
//! graphs, Turán graphs and blow-ups.

use alloc::vec::Vec;

use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};

#[derive(Debug, Clone, Copy, PartialEq, Eq, thiserror::Error)]
pub enum ConstructError {
    #[error("construction needs {0} vertices, at most 64 are supported")]
    TooLarge(usize),
    #[error("bad parameters: {0}")]
    BadParams(&'static str),
}

/// Standard small graphs with canonical labelings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NamedGraph {
    /// `K_k`.
    Complete(usize),
    /// `K_{a,b}` with the `a` side first.
    CompleteBipartite(usize, usize),
    /// `0-1-..-(len-1)-0`, `len >= 3`.
    Cycle(usize),
    /// `K_{1,leaves}` with center 0.
    Star(usize),
    /// Path on `len` vertices.
    Path(usize),
    /// `n` isolated vertices.
    Empty(usize),
}

fn builder(n: usize) -> Result<GraphBuilder, ConstructError> {
    GraphBuilder::new(n).map_err(|_| ConstructError::TooLarge(n))
}

pub fn named_graph(kind: NamedGraph) -> Result<Graph, ConstructError> {
    match kind {
        NamedGraph::Complete(k) => complete_multipartite(&alloc::vec![1; k]),
        NamedGraph::CompleteBipartite(a, b) => complete_multipartite(&[a, b]),
        NamedGraph::Cycle(len) => {
            if len < 3 {
                return Err(ConstructError::BadParams("a cycle needs at least 3 vertices"));
            }
            let mut b = builder(len)?;
            for v in 0..len {
                b.insert_unchecked(v, (v + 1) % len);
            }
            Ok(b.build())
        }
        NamedGraph::Star(leaves) => {
            let mut b = builder(leaves + 1)?;
            for v in 1..=leaves {
                b.insert_unchecked(0, v);
            }
            Ok(b.build())
        }
        NamedGraph::Path(len) => {
            let mut b = builder(len)?;
            for v in 1..len {
                b.insert_unchecked(v - 1, v);
            }
            Ok(b.build())
        }
        NamedGraph::Empty(n) => Ok(builder(n)?.build()),
    }
}

/// Vertices are grouped by part in order; every cross-part pair is an edge.
pub fn complete_multipartite(parts: &[usize]) -> Result<Graph, ConstructError> {
    let n: usize = parts.iter().sum();
    if n > MAX_VERTICES {
        return Err(ConstructError::TooLarge(n));
    }
    let mut part_of = Vec::with_capacity(n);
    for (i, &size) in parts.iter().enumerate() {
        part_of.extend(core::iter::repeat_n(i, size));
    }
    let mut b = builder(n)?;
    for v in 0..n {
        for u in 0..v {
            if part_of[u] != part_of[v] {
                b.insert_unchecked(u, v);
            }
        }
    }
    Ok(b.build())
}

/// Part sizes of `T(n, r)`: the `n mod r` larger parts come first.
pub fn turan_parts(n: usize, r: usize) -> Vec<usize> {
    (0..r).map(|i| n / r + usize::from(i < n % r)).collect()
}

/// `T(n, r)`, the complete `r`-partite graph with parts as equal as possible.
pub fn turan_graph(n: usize, r: usize) -> Result<Graph, ConstructError> {
    if r == 0 || r > n {
        return Err(ConstructError::BadParams("turan graph needs 1 <= r <= n"));
    }
    complete_multipartite(&turan_parts(n, r))
}

/// Replaces vertex `v` of `h` by the independent set `v*t .. v*t + t - 1` and each
/// edge by a complete bipartite graph between the clone sets.
pub fn blow_up(h: &Graph, t: usize) -> Result<Graph, ConstructError> {
    let n = h.order() * t;
    if n > MAX_VERTICES {
        return Err(ConstructError::TooLarge(n));
    }
    let mut b = builder(n)?;
    for (u, v) in h.edges() {
        for i in 0..t {
            for j in 0..t {
                b.insert_unchecked(u * t + i, v * t + j);
            }
        }
    }
    Ok(b.build())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detect::{contains_subgraph, has_clique};

    #[test]
    fn multipartite_examples() {
        let k222 = complete_multipartite(&[2, 2, 2]).unwrap();
        assert_eq!(k222.edge_count(), 12);
        assert_eq!(complete_multipartite(&[1, 1, 1, 1]).unwrap(), named_graph(NamedGraph::Complete(4)).unwrap());
        let e3 = complete_multipartite(&[3]).unwrap();
        assert_eq!((e3.order(), e3.edge_count()), (3, 0));
        assert_eq!(complete_multipartite(&[40, 25]), Err(ConstructError::TooLarge(65)));
    }

    #[test]
    fn turan_examples() {
        assert_eq!(turan_graph(6, 3).unwrap(), complete_multipartite(&[2, 2, 2]).unwrap());
        let t73 = turan_graph(7, 3).unwrap();
        assert_eq!(t73, complete_multipartite(&[3, 2, 2]).unwrap());
        assert_eq!(t73.edge_count(), 3 * 2 + 3 * 2 + 2 * 2);
        assert_eq!(turan_graph(5, 5).unwrap(), named_graph(NamedGraph::Complete(5)).unwrap());
        assert!(turan_graph(3, 4).is_err());
        assert!(turan_graph(3, 0).is_err());
        assert_eq!(turan_parts(11, 4), [3, 3, 3, 2]);
    }

    #[test]
    fn turan_graph_is_clique_free() {
        for n in 1..=20 {
            for r in 1..=5.min(n) {
                let t = turan_graph(n, r).unwrap();
                assert!(!has_clique(&t, r + 1), "T({n},{r})");
                assert!(has_clique(&t, r));
            }
        }
    }

    #[test]
    fn blow_up_examples() {
        let k3 = named_graph(NamedGraph::Complete(3)).unwrap();
        assert_eq!(blow_up(&k3, 2).unwrap(), complete_multipartite(&[2, 2, 2]).unwrap());

        let c5 = named_graph(NamedGraph::Cycle(5)).unwrap();
        assert_eq!(blow_up(&c5, 1).unwrap(), c5);

        let c4 = named_graph(NamedGraph::Cycle(4)).unwrap();
        let b = blow_up(&c4, 2).unwrap();
        assert_eq!((b.order(), b.edge_count()), (8, 16));
        // clones of 0 sit at 0 and 1 and are independent
        assert!(!b.has_edge(0, 1));
        assert!(b.has_edge(0, 2) && b.has_edge(1, 3));

        assert_eq!(blow_up(&k3, 22), Err(ConstructError::TooLarge(66)));
    }

    #[test]
    fn named_examples() {
        let c4 = named_graph(NamedGraph::Cycle(4)).unwrap();
        let k22 = named_graph(NamedGraph::CompleteBipartite(2, 2)).unwrap();
        assert!(contains_subgraph(&c4, &k22).unwrap());
        assert!(contains_subgraph(&k22, &c4).unwrap());

        let star = named_graph(NamedGraph::Star(3)).unwrap();
        assert_eq!(star.degree(0), 3);
        assert_eq!(star.edge_count(), 3);

        let k1 = named_graph(NamedGraph::Complete(1)).unwrap();
        assert_eq!((k1.order(), k1.edge_count()), (1, 0));

        assert!(named_graph(NamedGraph::Cycle(2)).is_err());
        assert!(named_graph(NamedGraph::Complete(65)).is_err());
        assert_eq!(named_graph(NamedGraph::Path(4)).unwrap().edge_count(), 3);
        assert_eq!(named_graph(NamedGraph::Empty(5)).unwrap().edge_count(), 0);
    }
}
