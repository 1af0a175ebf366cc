//! graph6 encoding of simple undirected graphs.
//!
//! Layout: a size header `N(n)` followed by the upper triangle of the
//! adjacency matrix in column order (`(0,1), (0,2), (1,2), (0,3), ...`),
//! packed six bits per byte, each byte offset by 63.

use thiserror::Error;

use super::{Graph, GraphError};

const HEADER: &[u8] = b">>graph6<<";
/// Largest order with the four-byte size header.
const MAX_SHORT_ORDER: usize = 258_047;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("truncated at offset {offset}: {expected} more bytes expected")]
    Truncated { offset: usize, expected: usize },
    #[error("trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("non-zero padding bits in the final byte at offset {offset}")]
    NonZeroPadding { offset: usize },
}

fn value_at(bytes: &[u8], offset: usize) -> Result<u64, Graph6Error> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - 63)),
        Some(&b) => Err(Graph6Error::BadByte { offset, byte: b }),
        None => Err(Graph6Error::Truncated {
            offset,
            expected: 1,
        }),
    }
}

/// Parses one graph6 line. A leading `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let mut bytes = text.as_bytes();
    let base = if bytes.starts_with(HEADER) {
        bytes = &bytes[HEADER.len()..];
        HEADER.len()
    } else {
        0
    };
    while let Some((b'\n' | b'\r', rest)) = bytes.split_last() {
        bytes = rest;
    }
    let err_at = |e: Graph6Error| match e {
        Graph6Error::BadByte { offset, byte } => Graph6Error::BadByte {
            offset: offset + base,
            byte,
        },
        Graph6Error::Truncated { offset, expected } => Graph6Error::Truncated {
            offset: offset + base,
            expected,
        },
        Graph6Error::TrailingData { offset } => Graph6Error::TrailingData {
            offset: offset + base,
        },
        Graph6Error::NonZeroPadding { offset } => Graph6Error::NonZeroPadding {
            offset: offset + base,
        },
        Graph6Error::Empty => Graph6Error::Empty,
    };
    parse_body(bytes).map_err(err_at)
}

fn parse_body(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    let (order, mut pos) = match value_at(bytes, 0)? {
        63 => match value_at(bytes, 1)? {
            63 => (read_big_endian(bytes, 2, 6)?, 8),
            _ => (read_big_endian(bytes, 1, 3)?, 4),
        },
        n => (n, 1),
    };
    let order = order as usize;
    let bits = order * order.saturating_sub(1) / 2;
    let data_len = bits.div_ceil(6);
    if bytes.len() < pos + data_len {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected: pos + data_len - bytes.len(),
        });
    }
    let mut g = Graph::empty(order);
    let (mut i, mut j) = (0usize, 1usize);
    let mut seen = 0usize;
    while seen < bits {
        let word = value_at(bytes, pos)?;
        for shift in (0..6).rev() {
            if seen == bits {
                if word & ((1 << (shift + 1)) - 1) != 0 {
                    return Err(Graph6Error::NonZeroPadding { offset: pos });
                }
                break;
            }
            if (word >> shift) & 1 == 1 {
                g.insert_edge(i, j).expect("indices below order");
            }
            seen += 1;
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
        pos += 1;
    }
    if pos < bytes.len() {
        return Err(Graph6Error::TrailingData { offset: pos });
    }
    Ok(g)
}

fn read_big_endian(bytes: &[u8], start: usize, len: usize) -> Result<u64, Graph6Error> {
    (start..start + len).try_fold(0u64, |acc, k| Ok((acc << 6) | value_at(bytes, k)?))
}

/// Encodes a loop-free graph under its current labeling.
pub fn write_graph6(g: &Graph) -> Result<String, GraphError> {
    if g.has_loops() {
        return Err(GraphError::HasLoops);
    }
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= MAX_SHORT_ORDER {
        out.push(126);
        out.extend((0..3).rev().map(|k| ((n >> (6 * k)) & 63) as u8 + 63));
    } else {
        return Err(GraphError::TooLarge {
            order: n,
            max: MAX_SHORT_ORDER,
        });
    }
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(word + 63);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + 63);
    }
    Ok(String::from_utf8(out).expect("printable ASCII"))
}
