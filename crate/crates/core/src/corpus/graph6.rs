//! Short-form graph6 (n ≤ 62).
//!
//! Layout: one byte `n + 63`, then the upper adjacency triangle in
//! column-major order `x(0,1), x(0,2), x(1,2), x(0,3), …`, packed six bits
//! per byte (most significant first), zero padded, each byte offset by 63.

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::vertex_set::MAX_VERTICES;

/// How to treat nonzero padding bits in the final byte.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Padding {
    #[default]
    Strict,
    Lenient,
}

/// Number of bytes after the size byte for an `n`-vertex graph.
pub fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> Result<String> {
    if !g.is_compact() {
        return Err(Error::invalid(
            "graph6 encoding needs labels 0..n; call Graph::compact first",
        ));
    }
    let n = g.order();
    if n > MAX_VERTICES {
        return Err(Error::capacity("graph6 short form holds at most 62 vertices"));
    }
    let mut out = Vec::with_capacity(1 + body_len(n));
    out.push((n + 63) as u8);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        let row = g.neighbors(j);
        for i in 0..j {
            acc = acc << 1 | row.contains(i) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + 63);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ASCII"))
}

/// Compacts `g` and encodes it.
pub fn encode_compacted(g: &Graph) -> String {
    encode(&g.compact().0).expect("compacted graphs always encode")
}

pub fn decode(line: &[u8]) -> Result<Graph> {
    decode_with(line, Padding::Strict).map(|(g, _)| g)
}

/// Decodes one graph6 string; the flag reports tolerated padding bits.
pub fn decode_with(line: &[u8], padding: Padding) -> Result<(Graph, bool)> {
    let Some(&first) = line.first() else {
        return Err(Error::parse(0, "empty input"));
    };
    if first == 126 {
        return Err(Error::parse(0, "long-form graph6 (n > 62) is not supported"));
    }
    if !(63..=126).contains(&first) {
        return Err(Error::parse(0, format!("byte {first} outside 63..126")));
    }
    let n = (first - 63) as usize;
    let expected = body_len(n);
    let body = &line[1..];
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::parse(i + 1, format!("byte {b} outside 63..126")));
        }
    }
    if body.len() != expected {
        return Err(Error::parse(
            line.len().min(1 + expected),
            format!("expected {expected} edge bytes for n={n}, found {}", body.len()),
        ));
    }
    let mut rows = vec![0u64; n];
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let bit = (body[k / 6] - 63) >> (5 - k % 6) & 1;
            if bit == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    let mut padded = false;
    if !k.is_multiple_of(6) {
        let last = body[body.len() - 1] - 63;
        let pad_mask = (1u8 << (6 - k % 6)) - 1;
        if last & pad_mask != 0 {
            if padding == Padding::Strict {
                return Err(Error::parse(body.len(), "nonzero padding bits"));
            }
            padded = true;
        }
    }
    Ok((Graph::from_rows(n, &rows)?, padded))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_examples() {
        assert_eq!(decode(b"@").unwrap(), Graph::complete(1).unwrap());
        assert_eq!(decode(b"A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(decode(b"A?").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(decode(b"Bw").unwrap(), Graph::complete(3).unwrap());
        assert_eq!(encode(&Graph::complete(1).unwrap()).unwrap(), "@");
        assert_eq!(encode(&Graph::complete(3).unwrap()).unwrap(), "Bw");
        assert_eq!(encode(&Graph::empty(0).unwrap()).unwrap(), "?");
    }

    #[test]
    fn matches_external_tool_output() {
        // Same 5-vertex graph as petgraph's graph6 test: edges a-c, a-e, b-d, d-e.
        let g = Graph::from_edges(5, &[(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g).unwrap(), "DQc");
        assert_eq!(decode(b"DQc").unwrap(), g);
    }

    #[test]
    fn rejects_malformed() {
        assert!(matches!(decode(b""), Err(Error::Parse { offset: 0, .. })));
        assert!(matches!(decode(b"B"), Err(Error::Parse { .. })));
        assert!(matches!(decode(b"Bww"), Err(Error::Parse { .. })));
        assert!(matches!(decode(b"B "), Err(Error::Parse { offset: 1, .. })));
        assert!(matches!(decode(b"~??"), Err(Error::Parse { offset: 0, .. })));
        // K_2 with a stray padding bit.
        assert!(matches!(decode(b"A`"), Err(Error::Parse { .. })));
        let (g, padded) = decode_with(b"A`", Padding::Lenient).unwrap();
        assert!(padded);
        assert_eq!(g, Graph::complete(2).unwrap());
    }

    #[test]
    fn encode_requires_compact_labels() {
        let g = Graph::cycle(5).unwrap().delete_vertex(0).unwrap();
        assert!(matches!(encode(&g), Err(Error::InvalidArgument(_))));
        assert_eq!(encode_compacted(&g), encode(&Graph::path(4).unwrap()).unwrap());
    }
}
