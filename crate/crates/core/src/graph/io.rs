//! Text formats: graph6, DIMACS edge lists, adjacency-list dumps and DOT.
//!
//! graph6 packs the upper adjacency triangle in column-major order
//! (`(0,1), (0,2), (1,2), (0,3), ...`) into 6-bit groups, each written as a
//! printable byte with offset 63. The vertex count prefix is one byte for
//! `n <= 62`, or `~` followed by three bytes for larger orders.

use std::fmt::Write as _;

use thiserror::Error;

use super::{Graph, GraphError, MAX_VERTICES};

const GRAPH6_HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty graph6 input")]
    Empty,
    #[error("byte 0x{byte:02x} at offset {offset} is outside the graph6 range 63..=126")]
    NonPrintable { offset: usize, byte: u8 },
    #[error("malformed length header at offset {offset}: {reason}")]
    BadHeader { offset: usize, reason: &'static str },
    #[error("graph6 data truncated at offset {offset}: expected {expected} data bytes")]
    Truncated { offset: usize, expected: usize },
    #[error("trailing bytes after graph6 data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("non-zero padding bits in the last byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("graph with {0} vertices exceeds the supported maximum of {MAX_VERTICES}")]
    TooLarge(usize),
    #[error("dimacs line {line}: {reason}")]
    Dimacs { line: usize, reason: String },
}

/// Parses one graph6 line. A trailing newline and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, FormatError> {
    let line = text.strip_suffix('\n').unwrap_or(text);
    let line = line.strip_suffix('\r').unwrap_or(line);
    let (bytes, base) = match line.strip_prefix(GRAPH6_HEADER) {
        Some(rest) => (rest.as_bytes(), GRAPH6_HEADER.len()),
        None => (line.as_bytes(), 0),
    };
    if bytes.is_empty() {
        return Err(FormatError::Empty);
    }
    if let Some((i, &byte)) = bytes
        .iter()
        .enumerate()
        .find(|(_, b)| !(63..=126).contains(*b))
    {
        return Err(FormatError::NonPrintable {
            offset: base + i,
            byte,
        });
    }

    let (n, header_len) = if bytes[0] != 126 {
        (usize::from(bytes[0] - 63), 1)
    } else if bytes.len() >= 2 && bytes[1] == 126 {
        // eight-byte form, n > 258047
        return Err(FormatError::BadHeader {
            offset: base + 1,
            reason: "eight-byte size header is not supported",
        });
    } else if bytes.len() < 4 {
        return Err(FormatError::BadHeader {
            offset: base + bytes.len(),
            reason: "extended size header needs three bytes after '~'",
        });
    } else {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
        if n < 63 {
            return Err(FormatError::BadHeader {
                offset: base,
                reason: "extended header used for n < 63",
            });
        }
        (n, 4)
    };
    if n > MAX_VERTICES {
        return Err(FormatError::TooLarge(n));
    }

    let bit_count = n * n.saturating_sub(1) / 2;
    let data_len = bit_count.div_ceil(6);
    let data = &bytes[header_len..];
    if data.len() < data_len {
        return Err(FormatError::Truncated {
            offset: base + bytes.len(),
            expected: data_len,
        });
    }
    if data.len() > data_len {
        return Err(FormatError::TrailingData {
            offset: base + header_len + data_len,
        });
    }
    if bit_count % 6 != 0 {
        let pad = 6 - bit_count % 6;
        if (data[data_len - 1] - 63) & ((1 << pad) - 1) != 0 {
            return Err(FormatError::NonZeroPadding {
                offset: base + header_len + data_len - 1,
            });
        }
    }

    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1u64 << j;
                rows[j] |= 1u64 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// Canonical minimal-length graph6 encoding (no header, no newline).
pub fn write_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 0x3f) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = acc << 1 | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

/// Parses a DIMACS edge file: `c` comment lines, one `p edge <n> <m>`
/// header, then `e <u> <v>` lines with 1-based vertices.
pub fn parse_dimacs(text: &str) -> Result<Graph, FormatError> {
    let err = |line: usize, reason: String| FormatError::Dimacs { line, reason };
    let mut n: Option<usize> = None;
    let mut pairs = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let mut tokens = raw.split_whitespace();
        match tokens.next() {
            None | Some("c") => continue,
            Some("p") => {
                if n.is_some() {
                    return Err(err(line_no, "duplicate problem line".into()));
                }
                let _kind = tokens
                    .next()
                    .ok_or_else(|| err(line_no, "problem line missing format".into()))?;
                let count = tokens
                    .next()
                    .and_then(|t| t.parse::<usize>().ok())
                    .ok_or_else(|| err(line_no, "problem line missing vertex count".into()))?;
                if count > MAX_VERTICES {
                    return Err(FormatError::TooLarge(count));
                }
                n = Some(count);
            }
            Some("e") => {
                let n = n.ok_or_else(|| err(line_no, "edge before the problem line".into()))?;
                let mut endpoint = || -> Result<usize, FormatError> {
                    let v = tokens
                        .next()
                        .and_then(|t| t.parse::<usize>().ok())
                        .ok_or_else(|| err(line_no, "edge line needs two vertex numbers".into()))?;
                    if v == 0 || v > n {
                        return Err(err(line_no, format!("vertex {v} out of range 1..={n}")));
                    }
                    Ok(v - 1)
                };
                let (u, v) = (endpoint()?, endpoint()?);
                if u == v {
                    return Err(err(line_no, format!("self-loop at vertex {}", u + 1)));
                }
                pairs.push((u, v));
            }
            Some(other) => {
                return Err(err(line_no, format!("unknown line type '{other}'")));
            }
        }
    }
    let n = n.ok_or_else(|| err(0, "missing 'p edge' header".into()))?;
    Graph::from_edges(n, pairs).map_err(|e: GraphError| err(0, e.to_string()))
}

pub fn write_dimacs(g: &Graph) -> String {
    let mut out = format!("p edge {} {}\n", g.n(), g.m());
    for e in g.edges() {
        let _ = writeln!(out, "e {} {}", e.u() + 1, e.v() + 1);
    }
    out
}

/// One `u: v w x` line per vertex.
pub fn to_adjacency_list(g: &Graph) -> String {
    let mut out = String::new();
    for v in 0..g.n() {
        let _ = write!(out, "{v}:");
        for w in g.neighbors(v) {
            let _ = write!(out, " {w}");
        }
        out.push('\n');
    }
    out
}

/// DOT with edge statements only.
pub fn to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for e in g.edges() {
        let _ = writeln!(out, "  {} -- {};", e.u(), e.v());
    }
    out.push_str("}\n");
    out
}
