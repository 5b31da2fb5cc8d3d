//! graph6 for orders `0..=62`.
//!
//! Byte 0 is `n + 63`. It is followed by `⌈C(n,2)/6⌉` bytes, each `63` plus
//! six bits of the upper triangle in column order `a(0,1); a(0,2), a(1,2);
//! a(0,3), …`, most significant bit first, zero padded. Parsing is strict:
//! padding bits must be zero and nothing may follow the payload, so
//! `write(parse(bytes)) == bytes` for every accepted input.

use thiserror::Error;

use crate::graph::Graph;

pub const MAX_GRAPH6_ORDER: usize = 62;

/// Optional first line of a graph6 file.
pub const GRAPH6_HEADER: &[u8] = b">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at position {position} is outside 63..=126")]
    InvalidByte { position: usize, byte: u8 },
    #[error("extended order header (byte 126) is not supported")]
    ExtendedHeader,
    #[error("payload too short: expected {expected} bytes, found {found}")]
    Truncated { expected: usize, found: usize },
    #[error("payload too long: expected {expected} bytes, found {found}")]
    TrailingBytes { expected: usize, found: usize },
    #[error("padding bits in the last byte must be zero")]
    NonZeroPadding,
    #[error("graph6 supports orders up to {MAX_GRAPH6_ORDER}, got {0}")]
    OrderTooLarge(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {source}")]
pub struct CorpusError {
    pub line: usize,
    #[source]
    pub source: Graph6Error,
}

fn payload_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

/// Parses exactly one graph6 string (no newline).
pub fn parse_graph6(bytes: &[u8]) -> Result<Graph, Graph6Error> {
    let (&head, body) = bytes.split_first().ok_or(Graph6Error::Empty)?;
    if let Some(position) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(Graph6Error::InvalidByte {
            position,
            byte: bytes[position],
        });
    }
    if head == 126 {
        return Err(Graph6Error::ExtendedHeader);
    }
    let n = (head - 63) as usize;
    let expected = payload_len(n);
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            expected,
            found: body.len(),
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingBytes {
            expected,
            found: body.len(),
        });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let bit = |k: usize| (body[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Graph6Error::NonZeroPadding);
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Ok(Graph::new(n, edges).expect("graph6 indices are in range"))
}

pub fn write_graph6(g: &Graph) -> Result<Vec<u8>, Graph6Error> {
    let n = g.order();
    if n > MAX_GRAPH6_ORDER {
        return Err(Graph6Error::OrderTooLarge(n));
    }
    let mut out = Vec::with_capacity(1 + payload_len(n));
    out.push(n as u8 + 63);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | g.has_edge(i, j) as u8;
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

/// Parses a newline-separated graph6 file. Blank lines, a trailing `\r`,
/// and a `>>graph6<<` prefix on the first line are accepted.
pub fn parse_graph6_corpus(text: &[u8]) -> Result<Vec<Graph>, CorpusError> {
    let mut out = Vec::new();
    for (i, raw) in text.split(|&b| b == b'\n').enumerate() {
        let mut line = raw.strip_suffix(b"\r").unwrap_or(raw);
        if i == 0 {
            line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
        }
        if line.is_empty() {
            continue;
        }
        out.push(parse_graph6(line).map_err(|source| CorpusError { line: i + 1, source })?);
    }
    Ok(out)
}

/// One graph6 line per graph, each terminated by `\n`.
pub fn write_graph6_corpus<'a, I>(graphs: I) -> Result<Vec<u8>, Graph6Error>
where
    I: IntoIterator<Item = &'a Graph>,
{
    let mut out = Vec::new();
    for g in graphs {
        out.extend(write_graph6(g)?);
        out.push(b'\n');
    }
    Ok(out)
}
