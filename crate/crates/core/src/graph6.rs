//! graph6 encoding of simple undirected graphs (McKay's format).
//!
//! The upper triangle is written column by column (`x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`), six bits per byte, most significant bit first, each byte
//! offset by 63.

use crate::error::{Error, Result};
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let (body, base) = match line.strip_prefix(HEADER) {
        Some(rest) => (rest.as_bytes(), HEADER.len()),
        None => (line.as_bytes(), 0),
    };
    let (n, mut pos) = decode_size(body, base)?;
    if n > MAX_VERTICES {
        return Err(Error::g6(
            base,
            format!("{n} vertices exceeds the supported limit of {MAX_VERTICES}"),
        ));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let need = bits.div_ceil(6);
    if body.len() < pos + need {
        return Err(Error::g6(
            base + body.len(),
            format!("truncated bit field: expected {need} bytes after the size"),
        ));
    }

    let mut g = Graph::empty(n);
    let mut k = 0usize;
    'outer: for byte_idx in 0..need {
        let b = body[pos + byte_idx];
        if !(63..=126).contains(&b) {
            return Err(Error::g6(base + pos + byte_idx, format!("byte {b} outside 63..=126")));
        }
        let six = b - 63;
        for shift in (0..6).rev() {
            if k == bits {
                if six & ((1 << (shift + 1)) - 1) != 0 {
                    return Err(Error::g6(base + pos + byte_idx, "nonzero padding bits"));
                }
                break 'outer;
            }
            if (six >> shift) & 1 == 1 {
                let (i, j) = column_pair(k);
                g.set(i, j, 1);
            }
            k += 1;
        }
    }
    pos += need;
    if pos != body.len() {
        return Err(Error::g6(base + pos, "trailing bytes after the bit field"));
    }
    Ok(g)
}

pub fn emit_graph6(g: &Graph) -> Result<String> {
    g.require_simple()?;
    let n = g.n();
    let mut out = Vec::new();
    encode_size(n, &mut out);
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.get(i, j) > 0);
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
    Ok(String::from_utf8(out).expect("graph6 is ascii"))
}

/// Maps the k-th bit of the column-wise upper triangle to its pair `(i, j)`, `i < j`.
fn column_pair(k: usize) -> (usize, usize) {
    let mut j = 1;
    let mut start = 0;
    while start + j <= k {
        start += j;
        j += 1;
    }
    (k - start, j)
}

fn decode_size(body: &[u8], base: usize) -> Result<(usize, usize)> {
    let byte = |i: usize| -> Result<usize> {
        match body.get(i) {
            None => Err(Error::g6(base + i, "truncated size header")),
            Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as usize),
            Some(&b) => Err(Error::g6(base + i, format!("byte {b} outside 63..=126"))),
        }
    };
    let first = byte(0)?;
    if first < 63 {
        return Ok((first, 1));
    }
    if byte(1)? < 63 {
        let n = (byte(1)? << 12) | (byte(2)? << 6) | byte(3)?;
        if n < 63 {
            return Err(Error::g6(base, "non-canonical size header"));
        }
        return Ok((n, 4));
    }
    let mut n = 0usize;
    for i in 2..8 {
        n = (n << 6) | byte(i)?;
    }
    if n <= 258_047 {
        return Err(Error::g6(base, "non-canonical size header"));
    }
    Ok((n, 8))
}

fn encode_size(n: usize, out: &mut Vec<u8>) {
    if n < 63 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}
