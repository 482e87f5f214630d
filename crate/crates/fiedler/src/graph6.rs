//! graph6 encoding: 6 bits per printable character (offset 63), length
//! prefix N(n), then the upper triangle of the adjacency matrix in
//! column-major order x(0,1) x(0,2) x(1,2) x(0,3) ...

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

/// Decode one graph6 line (optional `>>graph6<<` header allowed).
pub fn decode(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (line, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest, HEADER.len()),
        None => (line, 0),
    };
    let bytes = line.as_bytes();
    let err = |offset: usize, reason: &str| Error::Graph6 {
        offset: base + offset,
        reason: reason.to_string(),
    };
    if bytes.is_empty() {
        return Err(err(0, "empty input"));
    }
    let (n, mut pos) = decode_order(bytes, &err)?;
    if n > MAX_VERTICES {
        return Err(Error::TooLarge {
            max: MAX_VERTICES,
            got: n,
        });
    }
    let bits_needed = n * n.saturating_sub(1) / 2;
    let bytes_needed = bits_needed.div_ceil(6);
    if bytes.len() < pos + bytes_needed {
        return Err(err(bytes.len(), "truncated edge data"));
    }
    if bytes.len() > pos + bytes_needed {
        return Err(err(pos + bytes_needed, "trailing garbage"));
    }
    let mut graph = Graph::new(n)?;
    let mut bit = 0usize;
    let mut pairs = upper_triangle_pairs(n);
    let mut next_pair = pairs.next();
    while pos < bytes.len() {
        let b = bytes[pos];
        if !(BIAS..=126).contains(&b) {
            return Err(err(pos, "character out of range"));
        }
        let word = b - BIAS;
        for k in (0..6).rev() {
            if bit >= bits_needed {
                if word & (1 << k) != 0 {
                    return Err(err(pos, "nonzero padding bits"));
                }
                continue;
            }
            if word & (1 << k) != 0 {
                let (u, v) = next_pair.expect("pair available while bits remain");
                graph.add_edge(u, v)?;
            }
            if bit < bits_needed {
                next_pair = pairs.next();
            }
            bit += 1;
        }
        pos += 1;
    }
    Ok(graph)
}

fn decode_order(bytes: &[u8], err: &impl Fn(usize, &str) -> Error) -> Result<(usize, usize)> {
    if bytes[0] == b'~' {
        if bytes.len() >= 2 && bytes[1] == b'~' {
            // 36-bit orders are beyond this crate's supported range.
            return Err(err(0, "order prefix too large"));
        }
        if bytes.len() < 4 {
            return Err(err(bytes.len(), "truncated order prefix"));
        }
        let mut n = 0usize;
        for (i, &b) in bytes[1..4].iter().enumerate() {
            if !(BIAS..=126).contains(&b) {
                return Err(err(1 + i, "character out of range in order prefix"));
            }
            n = (n << 6) | (b - BIAS) as usize;
        }
        Ok((n, 4))
    } else {
        let b = bytes[0];
        if !(BIAS..=125).contains(&b) {
            return Err(err(0, "malformed length header"));
        }
        Ok(((b - BIAS) as usize, 1))
    }
}

/// Encode a graph as a single graph6 line (no header, no newline).
pub fn encode(graph: &Graph) -> String {
    let n = graph.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(b'~');
        out.push(((n >> 12) & 63) as u8 + BIAS);
        out.push(((n >> 6) & 63) as u8 + BIAS);
        out.push((n & 63) as u8 + BIAS);
    }
    let mut word = 0u8;
    let mut filled = 0usize;
    for (u, v) in upper_triangle_pairs(n) {
        word <<= 1;
        if graph.has_edge(u, v) {
            word |= 1;
        }
        filled += 1;
        if filled == 6 {
            out.push(word + BIAS);
            word = 0;
            filled = 0;
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("printable ascii")
}

/// Column-major upper-triangle order: (0,1), (0,2), (1,2), (0,3), ...
fn upper_triangle_pairs(n: usize) -> impl Iterator<Item = (usize, usize)> {
    (1..n).flat_map(move |v| (0..v).map(move |u| (u, v)))
}

impl Graph {
    pub fn parse_graph6(text: &str) -> Result<Graph> {
        decode(text)
    }

    pub fn to_graph6(&self) -> String {
        encode(self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::graphs_with_order;

    #[test]
    fn smallest_cases() {
        let k1 = decode("@").unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::complete(4)), "C~");
        assert_eq!(decode("C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn known_encodings() {
        // 5 vertices, edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
        assert_eq!(decode("DQc").unwrap(), g);
    }

    #[test]
    fn header_accepted() {
        let g = decode(">>graph6<<C~").unwrap();
        assert_eq!(g, Graph::complete(4));
    }

    #[test]
    fn round_trip_all_small_graphs() {
        for n in 0..=5 {
            for g in graphs_with_order(n) {
                let s = encode(&g);
                assert_eq!(decode(&s).unwrap(), g, "round trip failed for {s}");
            }
        }
    }

    #[test]
    fn large_order_prefix() {
        let g = Graph::complete(63);
        let s = encode(&g);
        assert!(s.starts_with('~'));
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        // out-of-range character
        let e = decode("D \x01").unwrap_err();
        assert!(matches!(e, Error::Graph6 { .. }));
        // truncated edge data
        assert!(matches!(decode("D"), Err(Error::Graph6 { offset: 1, .. })));
        // trailing garbage
        assert!(matches!(
            decode("C~~"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        // "A_" is K_2; "A@" has a padding bit set
        assert_eq!(decode("A_").unwrap(), Graph::complete(2));
        assert!(matches!(decode("A@"), Err(Error::Graph6 { .. })));
        assert!(decode("").is_err());
    }
}
