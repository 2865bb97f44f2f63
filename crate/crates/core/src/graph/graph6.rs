//! graph6 codec.
//!
//! Order byte `n + 63` for `n <= 62`, otherwise `~` followed by three 6-bit
//! order bytes; then the upper triangle in column-major order
//! (`x(0,1), x(0,2), x(1,2), x(0,3), …`), packed big-endian into 6-bit groups,
//! zero padded, each group offset by 63.

use super::{Graph, MAX_ORDER};
use crate::{Error, Result};

const HEADER: &str = ">>graph6<<";

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(1 + (n * n.saturating_sub(1)).div_ceil(12));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([(n >> 12) & 63, (n >> 6) & 63, n & 63].map(|x| x as u8 + 63));
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = group << 1 | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(group + 63);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + 63);
    }
    String::from_utf8(out).expect("graph6 bytes are printable ASCII")
}

/// Decodes one graph6 record; surrounding whitespace and an optional
/// `>>graph6<<` header are ignored. Byte offsets in errors refer to the record
/// after the header.
pub fn decode(text: &str) -> Result<Graph> {
    let text = text.trim();
    let body = text.strip_prefix(HEADER).unwrap_or(text).as_bytes();
    let err = |offset: usize, message: String| Error::Parse { offset, message };
    if let Some(pos) = body.iter().position(|&b| !(63..=126).contains(&b)) {
        return Err(err(pos, format!("byte {} outside 63..=126", body[pos])));
    }
    let Some(&first) = body.first() else {
        return Err(err(0, "empty record".into()));
    };
    let (n, start) = if first < 126 {
        (usize::from(first - 63), 1)
    } else {
        if body.len() < 4 {
            return Err(err(body.len(), "truncated order field".into()));
        }
        if body[1] == 126 {
            return Err(Error::Capacity {
                requested: 258_048,
                capacity: MAX_ORDER,
            });
        }
        let n = body[1..4].iter().fold(0usize, |acc, &b| acc << 6 | usize::from(b - 63));
        (n, 4)
    };
    if n == 0 {
        return Err(err(0, "order 0 is not a graph".into()));
    }
    if n > MAX_ORDER {
        return Err(Error::Capacity {
            requested: n,
            capacity: MAX_ORDER,
        });
    }
    let expected = (n * (n - 1) / 2).div_ceil(6);
    let data = &body[start..];
    if data.len() != expected {
        return Err(err(
            start + data.len().min(expected),
            format!("expected {expected} data bytes for order {n}, found {}", data.len()),
        ));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0usize;
    for j in 1..n {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    let used = n * (n - 1) / 2;
    if used % 6 != 0 {
        let last = data[data.len() - 1] - 63;
        let pad = 6 - used % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(err(start + data.len() - 1, "nonzero padding bits".into()));
        }
    }
    Ok(g)
}
