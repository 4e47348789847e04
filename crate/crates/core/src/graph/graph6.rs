//! graph6 encoding: a size prefix `N(n)` followed by the upper triangle of
//! the adjacency matrix, column by column, packed six bits per printable
//! character (`63..=126`).

use thiserror::Error;

use super::Graph;

pub const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 word")]
    Empty,
    #[error("character {byte:#04x} at offset {offset} is outside 63..=126")]
    BadChar { offset: usize, byte: u8 },
    #[error("truncated or malformed size prefix")]
    BadSize,
    #[error("expected {expected} data characters, found {found}")]
    WrongLength { expected: usize, found: usize },
    #[error("padding bits after the adjacency triangle are not zero")]
    NonzeroPadding,
}

fn six_bits(byte: u8, offset: usize) -> Result<u64, Graph6Error> {
    if (63..=126).contains(&byte) {
        Ok(u64::from(byte - 63))
    } else {
        Err(Graph6Error::BadChar { offset, byte })
    }
}

fn decode_size(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::Empty)?;
    if first != 126 {
        return Ok((six_bits(first, 0)? as usize, 1));
    }
    let (start, groups) = if bytes.get(1) == Some(&126) {
        (2, 6)
    } else {
        (1, 3)
    };
    if bytes.len() < start + groups {
        return Err(Graph6Error::BadSize);
    }
    let mut n = 0u64;
    for (i, &b) in bytes[start..start + groups].iter().enumerate() {
        n = (n << 6) | six_bits(b, start + i)?;
    }
    // The long forms are only canonical above their lower bounds.
    let min = if groups == 3 { 63 } else { 258_048 };
    if n < min {
        return Err(Graph6Error::BadSize);
    }
    Ok((n as usize, start + groups))
}

fn encode_size(n: usize, out: &mut String) {
    let push = |out: &mut String, v: u64| out.push(char::from(v as u8 + 63));
    if n <= 62 {
        push(out, n as u64);
    } else if n <= 258_047 {
        out.push('~');
        for shift in [12, 6, 0] {
            push(out, (n as u64 >> shift) & 63);
        }
    } else {
        out.push_str("~~");
        for shift in [30, 24, 18, 12, 6, 0] {
            push(out, (n as u64 >> shift) & 63);
        }
    }
}

/// Parses one graph6 word; an optional `>>graph6<<` header and trailing
/// line terminator are accepted.
pub fn parse(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, start) = decode_size(bytes)?;
    let nbits = n * n.saturating_sub(1) / 2;
    let expected = nbits.div_ceil(6);
    let data = &bytes[start..];
    if data.len() != expected {
        return Err(Graph6Error::WrongLength {
            expected,
            found: data.len(),
        });
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    for (i, &b) in data.iter().enumerate() {
        let word = six_bits(b, start + i)?;
        for k in (0..6).rev() {
            let set = word >> k & 1 == 1;
            if bit >= nbits {
                if set {
                    return Err(Graph6Error::NonzeroPadding);
                }
            } else if set {
                edges.push(bit);
            }
            bit += 1;
        }
    }
    // Bit index -> (i, j), columns j = 1.., rows i < j.
    let mut pairs = Vec::with_capacity(edges.len());
    let mut it = edges.into_iter().peekable();
    let mut base = 0usize;
    for j in 1..n {
        while let Some(&b) = it.peek() {
            if b >= base + j {
                break;
            }
            pairs.push((b - base, j));
            it.next();
        }
        base += j;
    }
    Ok(Graph::from_edges(n, &pairs).expect("decoded edges are in range"))
}

/// Canonical graph6 word (no header, no newline).
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = String::new();
    encode_size(n, &mut out);
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(char::from(word + 63));
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((word << (6 - filled)) + 63));
    }
    out
}

/// Parses a file body with one graph per line; blank lines are skipped.
pub fn parse_many(text: &str) -> Result<Vec<Graph>, (usize, Graph6Error)> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !l.trim().is_empty())
        .map(|(i, l)| parse(l.trim()).map_err(|e| (i + 1, e)))
        .collect()
}
