//! graph6 encoding: a size header followed by the upper triangle of the
//! adjacency matrix in column order, six bits per printable byte.

use super::{Graph, MAX_ORDER};
use crate::error::{Error, Result};

const BIAS: u8 = 63;

fn err(offset: usize, msg: impl Into<String>) -> Error {
    Error::Graph6 { offset, msg: msg.into() }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let mut bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(b">>graph6<<") {
        bytes = rest;
        base = 10;
    }
    if bytes.is_empty() {
        return Err(err(base, "empty input"));
    }
    for (i, &b) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&b) {
            return Err(err(base + i, format!("byte 0x{b:02x} outside the printable range 63..=126")));
        }
    }
    let (n, header_len) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, 1)
    } else {
        if bytes.get(1) == Some(&126) {
            return Err(err(base + 1, "eight-byte size header is not supported"));
        }
        if bytes.len() < 4 {
            return Err(err(base + bytes.len(), "truncated size header"));
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n < 63 {
            return Err(err(base, format!("long-form header used for order {n}")));
        }
        (n, 4)
    };
    if n > MAX_ORDER {
        return Err(Error::OrderOutOfRange { n, min: 0, max: MAX_ORDER });
    }
    let nbits = n * n.saturating_sub(1) / 2;
    let want = nbits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < want {
        return Err(err(base + bytes.len(), format!("truncated bit section: need {want} bytes, found {}", body.len())));
    }
    if body.len() > want {
        return Err(err(base + header_len + want, "trailing bytes after bit section"));
    }
    let mut g = Graph::empty(n)?;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte & (1 << (5 - k % 6)) != 0 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    Ok(g)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + BIAS);
        }
    }
    let mut acc = 0u8;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            k += 1;
            if k % 6 == 0 {
                out.push(acc + BIAS);
                acc = 0;
            }
        }
    }
    if k % 6 != 0 {
        out.push((acc << (6 - k % 6)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}
