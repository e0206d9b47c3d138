//! graph6 wire format and a small edge-list text format.
//!
//! graph6 layout: an optional `>>graph6<<` header, a size field, then the
//! upper-triangle adjacency bits x01, x02, x12, x03, x13, x23, ... taken
//! column by column, padded with zeros to a multiple of six, each 6-bit
//! group offset by 63 so every byte stays in the printable range 63..=126.
//! Orders up to 62 use the single size byte `n + 63`; orders 63..2^18 use
//! byte 126 followed by three big-endian 6-bit groups, each + 63.
//!
//! Only graph6 is handled, no sparse6 or digraph6.

use crate::bitset::MAX_VERTICES;
use crate::error::{Error, Result};
use crate::graph::Graph;

const HEADER: &str = ">>graph6<<";

/// Decode one graph6 record.
pub fn parse_graph6(record: &str) -> Result<Graph> {
    let body = record.strip_prefix(HEADER).unwrap_or(record);
    let bytes = body.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6Empty);
    }

    let (n, used) = decode_size(bytes)?;
    if n > MAX_VERTICES {
        return Err(Error::TooManyVertices(n));
    }

    let nbits = n * (n.saturating_sub(1)) / 2;
    let nbytes = nbits.div_ceil(6);
    let rest = &bytes[used..];
    if rest.len() < nbytes {
        return Err(Error::Graph6Truncated {
            expected: nbytes,
            found: rest.len(),
        });
    }
    if rest.len() > nbytes {
        return Err(Error::Graph6TrailingBytes { expected: nbytes });
    }
    for (i, &b) in rest.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Error::Graph6ByteOutOfRange {
                byte: b,
                position: used + i,
            });
        }
    }

    let bit = |t: usize| -> bool {
        let group = (rest[t / 6] - 63) as usize;
        (group >> (5 - t % 6)) & 1 == 1
    };

    let mut edges = Vec::new();
    let mut t = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(t) {
                edges.push((u, v));
            }
            t += 1;
        }
    }
    Graph::from_edges(n, &edges)
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize)> {
    match bytes[0] {
        126 => {
            if bytes.len() < 2 {
                return Err(Error::Graph6Truncated { expected: 4, found: bytes.len() });
            }
            if bytes[1] == 126 {
                // the 8-byte huge-order form is out of range here
                return Err(Error::Graph6UnsupportedSize);
            }
            if bytes.len() < 4 {
                return Err(Error::Graph6Truncated { expected: 4, found: bytes.len() });
            }
            let mut n = 0usize;
            for (i, &b) in bytes[1..4].iter().enumerate() {
                if !(63..=126).contains(&b) {
                    return Err(Error::Graph6ByteOutOfRange { byte: b, position: 1 + i });
                }
                n = (n << 6) | (b - 63) as usize;
            }
            Ok((n, 4))
        }
        b @ 63..=125 => Ok(((b - 63) as usize, 1)),
        b => Err(Error::Graph6ByteOutOfRange { byte: b, position: 0 }),
    }
}

/// Encode a graph as one graph6 record (no header, no newline).
pub fn write_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n < (1 << 18) {
        out.push(126);
        out.push(63 + ((n >> 12) & 0x3f) as u8);
        out.push(63 + ((n >> 6) & 0x3f) as u8);
        out.push(63 + (n & 0x3f) as u8);
    } else {
        return Err(Error::Graph6UnsupportedSize);
    }

    let mut group = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            group <<= 1;
            if g.has_edge(u, v) {
                group |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + group);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        group <<= 6 - filled;
        out.push(63 + group);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are printable ascii"))
}

/// Parse the edge-list text format: first line `n m`, then `m` lines `u v`,
/// 0-based.
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text.lines().filter(|l| !l.trim().is_empty());
    let head = lines
        .next()
        .ok_or_else(|| Error::EdgeListParse("empty input".into()))?;
    let mut it = head.split_whitespace();
    let n: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeListParse(format!("bad header line {head:?}")))?;
    let m: usize = it
        .next()
        .and_then(|t| t.parse().ok())
        .ok_or_else(|| Error::EdgeListParse(format!("bad header line {head:?}")))?;
    if it.next().is_some() {
        return Err(Error::EdgeListParse(format!("bad header line {head:?}")));
    }
    let mut edges = Vec::with_capacity(m);
    for _ in 0..m {
        let line = lines
            .next()
            .ok_or_else(|| Error::EdgeListParse(format!("expected {m} edge lines")))?;
        let mut it = line.split_whitespace();
        let u: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeListParse(format!("bad edge line {line:?}")))?;
        let v: usize = it
            .next()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| Error::EdgeListParse(format!("bad edge line {line:?}")))?;
        edges.push((u, v));
    }
    if lines.next().is_some() {
        return Err(Error::EdgeListParse("trailing lines after edge list".into()));
    }
    Graph::from_edges(n, &edges)
}

/// Write the edge-list text format.
pub fn write_edge_list(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = format!("{} {}\n", g.n(), edges.len());
    for (u, v) in edges {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}
