//! graph6 text encoding.
//!
//! Header `N(n)`: one byte `n + 63` for `n <= 62`, otherwise `~` followed by
//! three 6-bit groups (or `~~` and six groups past 258047). The body holds the
//! upper triangle column by column, `x(0,1) x(0,2) x(1,2) x(0,3) ...`, six
//! bits per byte, most significant first, each byte offset by 63.

use thiserror::Error;

use super::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("malformed graph6 header: {0}")]
    MalformedHeader(&'static str),
    #[error("graph6 body has {found} bytes, expected {expected}")]
    TruncatedBits { expected: usize, found: usize },
    #[error("byte {byte:#04x} at offset {offset} is outside the printable graph6 range")]
    InvalidByte { offset: usize, byte: u8 },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

const BIAS: u8 = 63;
const LONG: u8 = 126;

pub fn graph6_encode(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(8 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(LONG);
        push_groups(&mut out, n as u64, 3);
    } else {
        out.push(LONG);
        out.push(LONG);
        push_groups(&mut out, n as u64, 6);
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(acc + BIAS);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((acc << (6 - filled)) + BIAS);
    }
    // Every byte is in 63..=126, so this is ASCII.
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn push_groups(out: &mut Vec<u8>, value: u64, groups: u32) {
    for k in (0..groups).rev() {
        out.push(((value >> (6 * k)) & 0x3f) as u8 + BIAS);
    }
}

pub fn graph6_decode(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(BIAS..=LONG).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
    }
    let (n, body) = match bytes {
        [] => return Err(Graph6Error::MalformedHeader("empty input")),
        [LONG, LONG, rest @ ..] => (read_groups(rest, 6)?, &rest[6..]),
        [LONG, rest @ ..] => (read_groups(rest, 3)?, &rest[3..]),
        [first, rest @ ..] => ((first - BIAS) as usize, rest),
    };
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    if body.len() != expected {
        return Err(Graph6Error::TruncatedBits { expected, found: body.len() });
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if (byte >> (5 - k % 6)) & 1 == 1 {
                g.set_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

fn read_groups(bytes: &[u8], groups: usize) -> Result<usize, Graph6Error> {
    if bytes.len() < groups {
        return Err(Graph6Error::MalformedHeader("truncated vertex count"));
    }
    Ok(bytes[..groups].iter().fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize))
}
