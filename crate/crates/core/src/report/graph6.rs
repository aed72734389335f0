//! Short-form graph6 (orders 0..=62).
//!
//! One byte `n + 63`, then the upper triangle of the adjacency matrix in
//! column order (`(0,1), (0,2), (1,2), (0,3), ...`) packed six bits per byte,
//! most significant first, each byte offset by 63 and the last one
//! zero-padded.

use crate::error::{Error, Result};
use crate::graph::{bit, Graph};

pub const MAX_GRAPH6_ORDER: usize = 62;

const HEADER: &str = ">>graph6<<";

pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_ORDER {
        return Err(Error::TooLarge { n, max: MAX_GRAPH6_ORDER });
    }
    let pairs = n * n.saturating_sub(1) / 2;
    let mut out = Vec::with_capacity(1 + pairs.div_ceil(6));
    out.push(n as u8 + 63);
    let rows = g.rows();
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for row in &rows[..j] {
            acc <<= 1;
            if row & bit(j) != 0 {
                acc |= 1;
            }
            k += 1;
            if k % 6 == 0 {
                out.push(acc + 63);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + 63);
    }
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// Parse one graph6 string; an optional `>>graph6<<` header is skipped.
/// Error offsets are byte positions in `s`.
pub fn from_graph6(s: &str) -> Result<Graph> {
    let skip = if s.starts_with(HEADER) { HEADER.len() } else { 0 };
    let bytes = &s.as_bytes()[skip..];
    let err = |offset: usize, reason: &str| Error::Graph6 { offset: offset + skip, reason: reason.to_string() };
    let Some(&first) = bytes.first() else {
        return Err(err(0, "empty input"));
    };
    if first == 126 {
        return Err(err(0, "long-form graph6 (order > 62) is not supported"));
    }
    if !(63..=126).contains(&first) {
        return Err(err(0, "order byte outside 63..=126"));
    }
    let n = (first - 63) as usize;
    let pairs = n * n.saturating_sub(1) / 2;
    let expected = 1 + pairs.div_ceil(6);
    if bytes.len() < expected {
        return Err(err(bytes.len(), &format!("truncated: expected {expected} bytes, found {}", bytes.len())));
    }
    if bytes.len() > expected {
        return Err(err(expected, &format!("trailing data: expected {expected} bytes, found {}", bytes.len())));
    }
    for (i, &b) in bytes.iter().enumerate().skip(1) {
        if !(63..=126).contains(&b) {
            return Err(err(i, "byte outside 63..=126"));
        }
    }
    let mut adj = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte & (0x20 >> (k % 6)) != 0 {
                adj[i] |= bit(j);
                adj[j] |= bit(i);
            }
            k += 1;
        }
    }
    if k % 6 != 0 {
        let last = bytes[expected - 1] - 63;
        if last & ((1u8 << (6 - k % 6)) - 1) != 0 {
            return Err(err(expected - 1, "nonzero padding bits"));
        }
    }
    Ok(Graph::from_rows(n, adj))
}
