//! The graph6 text format for simple undirected graphs.
//!
//! Layout: a vertex-count prefix `N(n)` followed by the upper triangle of the
//! adjacency matrix read column by column — bit order `x(0,1), x(0,2),
//! x(1,2), x(0,3), ...` — packed big-endian into 6-bit groups, zero-padded,
//! with 63 added to every byte so the result is printable ASCII.
//!
//! `N(n)` is one byte `n + 63` for `n <= 62`, or `~` followed by three bytes
//! holding `n` in 18 bits for `63 <= n <= 258047`. (The 8-byte form for even
//! larger `n` is decoded too, but such graphs exceed this crate's host limit
//! anyway.) Parsing is strict: every byte must be in `63..=126`, the bit
//! stream must have exactly the padded length, and padding bits must be zero.

use super::{SimpleGraph, MAX_VERTICES};
use crate::error::{Error, Result};

const OFFSET: u8 = 63;

/// Decode a graph6 string (surrounding whitespace is ignored).
pub fn parse_graph6(text: &str) -> Result<SimpleGraph> {
    let bytes = text.trim().as_bytes();
    if bytes.is_empty() {
        return Err(Error::malformed("graph6 string is empty"));
    }
    for &b in bytes {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::malformed(format!(
                "invalid graph6 character {:?} (byte {b}); bytes must lie in 63..=126",
                b as char
            )));
        }
    }

    let (n, body) = decode_order(bytes)?;
    if n > MAX_VERTICES as u64 {
        return Err(Error::unsupported(format!(
            "graph6 input encodes {n} vertices; host graphs are limited to {MAX_VERTICES}"
        )));
    }
    let n = n as usize;

    let nbits = n.saturating_sub(1) * n / 2;
    let nbytes = nbits.div_ceil(6);
    if body.len() != nbytes {
        return Err(Error::malformed(format!(
            "graph6 bit stream for {n} vertices needs {nbytes} data bytes, got {}",
            body.len()
        )));
    }

    let mut g = SimpleGraph::new(n)?;
    let mut bit_index = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = body[bit_index / 6] - OFFSET;
            let bit = byte >> (5 - bit_index % 6) & 1;
            if bit == 1 {
                g.add_edge(u, v)?;
            }
            bit_index += 1;
        }
    }
    // Remaining bits of the final byte are padding and must be zero.
    while bit_index < 6 * nbytes {
        let byte = body[bit_index / 6] - OFFSET;
        if byte >> (5 - bit_index % 6) & 1 != 0 {
            return Err(Error::malformed("graph6 padding bits must be zero"));
        }
        bit_index += 1;
    }
    Ok(g)
}

/// Encode a graph as a minimal graph6 string.
pub fn encode_graph6(g: &SimpleGraph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + OFFSET);
    } else {
        // 63 <= n <= 63 here in practice, but encode the general 18-bit form.
        out.push(126);
        for shift in [12u32, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + OFFSET);
        }
    }

    let mut acc = 0u8;
    let mut used = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | u8::from(g.has_edge(u, v));
            used += 1;
            if used == 6 {
                out.push(acc + OFFSET);
                acc = 0;
                used = 0;
            }
        }
    }
    if used > 0 {
        out.push((acc << (6 - used)) + OFFSET);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Split off `N(n)`; returns the order and the remaining data bytes.
fn decode_order(bytes: &[u8]) -> Result<(u64, &[u8])> {
    if bytes[0] != 126 {
        return Ok(((bytes[0] - OFFSET) as u64, &bytes[1..]));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        // 8-byte form: "~~" then 36 bits.
        if bytes.len() < 8 {
            return Err(Error::malformed("truncated graph6 vertex count (8-byte form)"));
        }
        let mut n = 0u64;
        for &b in &bytes[2..8] {
            n = n << 6 | (b - OFFSET) as u64;
        }
        Ok((n, &bytes[8..]))
    } else {
        // 4-byte form: "~" then 18 bits.
        if bytes.len() < 4 {
            return Err(Error::malformed("truncated graph6 vertex count (4-byte form)"));
        }
        let mut n = 0u64;
        for &b in &bytes[1..4] {
            n = n << 6 | (b - OFFSET) as u64;
        }
        Ok((n, &bytes[4..]))
    }
}
