//! graph6 encoding: a size header, then the upper triangle of the adjacency
//! matrix in column order `(0,1),(0,2),(1,2),(0,3),..`, six bits per byte,
//! each byte offset by 63.

use alloc::string::String;

use crate::graph::{Graph, GraphBuilder, MAX_VERTICES};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("malformed graph6: {0}")]
    MalformedEncoding(&'static str),
    #[error("graph6 encodes {0} vertices, at most 64 are supported")]
    TooLarge(u64),
}

const HEADER: &str = ">>graph6<<";

fn sextet(byte: u8) -> Result<u8, Graph6Error> {
    match byte {
        63..=126 => Ok(byte - 63),
        _ => Err(Graph6Error::MalformedEncoding("byte outside 63..=126")),
    }
}

/// Splits off the vertex count.
fn parse_size(bytes: &[u8]) -> Result<(u64, &[u8]), Graph6Error> {
    let short = Graph6Error::MalformedEncoding("truncated size field");
    match bytes {
        [] => Err(Graph6Error::MalformedEncoding("empty input")),
        [126, 126, rest @ ..] => {
            if rest.len() < 6 {
                return Err(short);
            }
            let mut n = 0u64;
            for &b in &rest[..6] {
                n = n << 6 | sextet(b)? as u64;
            }
            Ok((n, &rest[6..]))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(short);
            }
            let mut n = 0u64;
            for &b in &rest[..3] {
                n = n << 6 | sextet(b)? as u64;
            }
            Ok((n, &rest[3..]))
        }
        [b, rest @ ..] => Ok((sextet(*b)? as u64, rest)),
    }
}

/// Decodes one graph6 line. Surrounding whitespace and an optional
/// `>>graph6<<` header are ignored.
pub fn from_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let (n, body) = parse_size(text.as_bytes())?;
    if n > MAX_VERTICES as u64 {
        return Err(Graph6Error::TooLarge(n));
    }
    let n = n as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    if body.len() != pairs.div_ceil(6) {
        return Err(Graph6Error::MalformedEncoding("edge section has the wrong length"));
    }
    let mut b = GraphBuilder::new(n).expect("n checked against the cap");
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            let bits = sextet(body[k / 6])?;
            if bits >> (5 - k % 6) & 1 == 1 {
                b.insert_unchecked(u, v);
            }
            k += 1;
        }
    }
    // padding bits must be zero
    if pairs % 6 != 0 {
        let last = sextet(body[body.len() - 1])?;
        if last & ((1 << (6 - pairs % 6)) - 1) != 0 {
            return Err(Graph6Error::MalformedEncoding("nonzero padding bits"));
        }
    }
    for &byte in body {
        sextet(byte)?;
    }
    Ok(b.build())
}

/// Encodes `g` under its current labeling.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 63) as u8 + 63) as char);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u8;
            filled += 1;
            if filled == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(((acc << (6 - filled)) + 63) as char);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::{named_graph, NamedGraph};
    use proptest::prelude::*;

    #[test]
    fn decode_examples() {
        let k3 = from_graph6("Bw").unwrap();
        assert_eq!((k3.order(), k3.edge_count()), (3, 3));

        let e3 = from_graph6("B?").unwrap();
        assert_eq!((e3.order(), e3.edge_count()), (3, 0));

        let c4 = from_graph6("Cl").unwrap();
        assert_eq!(c4, Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap());
    }

    #[test]
    fn encode_examples() {
        assert_eq!(to_graph6(&named_graph(NamedGraph::Complete(3)).unwrap()), "Bw");
        assert_eq!(to_graph6(&Graph::empty(1).unwrap()), "@");
        assert_eq!(to_graph6(&Graph::empty(0).unwrap()), "?");
        // petgraph's fixture: edges a-c, a-e, b-d, d-e on 5 vertices
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
    }

    #[test]
    fn header_and_whitespace_are_ignored() {
        assert_eq!(from_graph6(">>graph6<<Bw\n").unwrap(), from_graph6("Bw").unwrap());
    }

    #[test]
    fn large_sizes_use_the_long_header() {
        let g = named_graph(NamedGraph::Cycle(64)).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@?"));
        assert_eq!(from_graph6(&s).unwrap(), g);
        let g63 = named_graph(NamedGraph::Star(62)).unwrap();
        assert_eq!(from_graph6(&to_graph6(&g63)).unwrap(), g63);
    }

    #[test]
    fn rejects_malformed_input() {
        assert!(matches!(from_graph6(""), Err(Graph6Error::MalformedEncoding(_))));
        assert!(matches!(from_graph6("Bww"), Err(Graph6Error::MalformedEncoding(_))));
        assert!(matches!(from_graph6("C"), Err(Graph6Error::MalformedEncoding(_))));
        assert!(matches!(from_graph6("B "), Err(Graph6Error::MalformedEncoding(_))));
        // 3 vertices use 3 of 6 bits; a set padding bit is rejected
        assert!(matches!(from_graph6("B@"), Err(Graph6Error::MalformedEncoding(_))));
        assert!(matches!(from_graph6("~?"), Err(Graph6Error::MalformedEncoding(_))));
        // n = 65 via the 3-byte size form
        assert_eq!(from_graph6("~?@@"), Err(Graph6Error::TooLarge(65)));
        assert_eq!(from_graph6("~~??A???"), Err(Graph6Error::TooLarge(2 << 18)));
    }

    #[test]
    fn exhaustive_round_trip_up_to_six_vertices() {
        for n in 0..=6usize {
            let pairs: alloc::vec::Vec<(usize, usize)> =
                (1..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            for mask in 0u32..(1 << pairs.len()) {
                let edges: alloc::vec::Vec<_> =
                    pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, &e)| e).collect();
                let g = Graph::from_edges(n, &edges).unwrap();
                assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
            }
        }
    }

    proptest! {
        #[test]
        fn random_round_trip(n in 0usize..=64, seed in any::<u64>()) {
            let mut b = GraphBuilder::new(n).unwrap();
            let mut x = seed | 1;
            for v in 1..n {
                for u in 0..v {
                    x ^= x << 13; x ^= x >> 7; x ^= x << 17;
                    if x & 1 == 1 { b.add_edge(u, v).unwrap(); }
                }
            }
            let g = b.build();
            prop_assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
    }
}
