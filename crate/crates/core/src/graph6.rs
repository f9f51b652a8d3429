//! Bit-exact graph6 codec.
//!
//! Follows Brendan McKay's format definition: printable bytes 63..=126,
//! big-endian 6-bit groups, upper-triangle bits in column order. The short
//! header covers n <= 62; the 4-byte `~`-prefixed long form covers
//! 63 <= n <= 258047. The 8-byte `~~` form and sparse6 are rejected
//! explicitly.

use alloc::vec::Vec;

use crate::graph::{Graph, GraphError};

/// Largest order the 4-byte long form can canonically encode (the top 6-bit
/// group of the 18-bit field must not itself read as `~`).
pub const MAX_LONG_FORM_N: usize = 258047;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum Graph6Error {
    #[error("byte {byte} at offset {offset} is outside the graph6 alphabet 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("sparse6 input is not accepted (leading '{lead}')")]
    Sparse6Unsupported { lead: char },
    #[error("empty input")]
    Empty,
    #[error("truncated record: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("trailing data within record starting at offset {offset}")]
    TrailingData { offset: usize },
    #[error("nonzero padding bits in final byte at offset {offset}")]
    NonzeroPadding { offset: usize },
    #[error("long-form header encodes n = {n}, which has a canonical short form")]
    NonCanonicalHeader { n: usize },
    #[error("graph order {n} exceeds the supported maximum {max}")]
    TooLarge { n: usize, max: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn check_byte(bytes: &[u8], offset: usize) -> Result<u8, Graph6Error> {
    match bytes.get(offset) {
        None => Err(Graph6Error::Truncated { expected: offset + 1, found: bytes.len() }),
        Some(&b) if !(63..=126).contains(&b) => Err(Graph6Error::InvalidByte { offset, byte: b }),
        Some(&b) => Ok(b),
    }
}

/// Parse one graph6 record (no trailing newline). The returned graph may be
/// disconnected; analysis preconditions are checked elsewhere.
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    if bytes[0] == b':' || bytes[0] == b';' {
        return Err(Graph6Error::Sparse6Unsupported { lead: bytes[0] as char });
    }
    let (n, header_len) = if bytes[0] == 126 {
        if check_byte(bytes, 1)? == 126 {
            // 8-byte header: n >= 258048, beyond what this tool supports
            return Err(Graph6Error::TooLarge { n: 258048, max: MAX_LONG_FORM_N });
        }
        let mut n = 0usize;
        for offset in 1..4 {
            n = (n << 6) | (check_byte(bytes, offset)? - 63) as usize;
        }
        if n <= 62 {
            return Err(Graph6Error::NonCanonicalHeader { n });
        }
        (n, 4)
    } else {
        (check_byte(bytes, 0)? as usize - 63, 1)
    };

    let bit_count = n * (n.saturating_sub(1)) / 2;
    let body_len = bit_count.div_ceil(6);
    let expected = header_len + body_len;
    if bytes.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: bytes.len() });
    }
    if bytes.len() > expected {
        return Err(Graph6Error::TrailingData { offset: expected });
    }

    let mut edges = Vec::new();
    let mut pos = 0usize;
    for v in 1..n {
        for u in 0..v {
            let byte = check_byte(bytes, header_len + pos / 6)?;
            let bit = (byte - 63) >> (5 - pos % 6) & 1;
            if bit == 1 {
                edges.push((u, v));
            }
            pos += 1;
        }
    }
    // remaining padding bits must be zero
    if body_len > 0 {
        let last = check_byte(bytes, expected - 1)? - 63;
        let pad_bits = body_len * 6 - bit_count;
        if pad_bits > 0 && last & ((1 << pad_bits) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding { offset: expected - 1 });
        }
    }

    Ok(Graph::build(n, edges)?)
}

/// Encode a graph as a canonical graph6 record (no trailing newline).
pub fn encode_graph6(g: &Graph) -> Result<Vec<u8>, Graph6Error> {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= MAX_LONG_FORM_N {
        out.push(126);
        out.push(((n >> 12) & 63) as u8 + 63);
        out.push(((n >> 6) & 63) as u8 + 63);
        out.push((n & 63) as u8 + 63);
    } else {
        return Err(Graph6Error::TooLarge { n, max: MAX_LONG_FORM_N });
    }
    let mut acc = 0u8;
    let mut filled = 0u8;
    for v in 1..n {
        for u in 0..v {
            acc = (acc << 1) | u8::from(g.has_edge(u, v));
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
    Ok(out)
}
