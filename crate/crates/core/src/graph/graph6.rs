//! Short-form graph6 (`n <= 62`).
//!
//! The header byte is `n + 63`. The upper triangle of the adjacency matrix is
//! then read column by column (`x(0,1), x(0,2), x(1,2), x(0,3), ...`), packed
//! big-endian into 6-bit groups, zero-padded, each group offset by 63.

use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

pub const MAX_GRAPH6_N: usize = 62;

fn format_err(offset: usize, reason: impl Into<String>) -> Error {
    Error::Format {
        offset,
        reason: reason.into(),
    }
}

pub fn parse_graph6(text: &str) -> Result<Graph> {
    let line = text.trim_end_matches(['\n', '\r']);
    let bytes = line.as_bytes();
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(format_err(
            pos,
            format!("byte 0x{:02x} outside the printable range 63..=126", bytes[pos]),
        ));
    }
    let Some(&header) = bytes.first() else {
        return Err(format_err(0, "empty line"));
    };
    if header == 126 {
        return Err(format_err(0, "long-form header (n > 62) is not supported"));
    }
    let n = (header - 63) as usize;
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = 1 + bit_count.div_ceil(6);
    if bytes.len() < expected {
        return Err(format_err(
            bytes.len(),
            format!("truncated: {n} vertices need {expected} bytes, found {}", bytes.len()),
        ));
    }
    if bytes.len() > expected {
        return Err(format_err(
            expected,
            format!("trailing data: {n} vertices need exactly {expected} bytes"),
        ));
    }

    let mut g = Graph::empty(n);
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = bytes[1 + k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    // padding must be zero, otherwise the line encodes something else
    if !bit_count.is_multiple_of(6) {
        let last = bytes[expected - 1] - 63;
        let pad = 6 - bit_count % 6;
        if last & ((1 << pad) - 1) != 0 {
            return Err(format_err(expected - 1, "nonzero padding bits"));
        }
    }
    Ok(g)
}

pub fn encode_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_GRAPH6_N {
        return Err(Error::UnsupportedSize(format!(
            "graph6 short form holds at most {MAX_GRAPH6_N} vertices, got {n}"
        )));
    }
    let mut out = vec![n as u8 + 63];
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
    Ok(String::from_utf8(out).expect("graph6 bytes are ASCII"))
}

/// One graph per line; blank lines and `#` comments are skipped. Errors carry
/// the line number in the reason.
pub fn read_graph6_file(path: impl AsRef<Path>) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path)?;
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let g = parse_graph6(line).map_err(|e| match e {
            Error::Format { offset, reason } => Error::Format {
                offset,
                reason: format!("line {}: {reason}", lineno + 1),
            },
            other => other,
        })?;
        out.push(g);
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{enumerate_graphs, make_named};

    /// Independent encoder: build the bit string explicitly, then chunk it.
    fn reference_encode(g: &Graph) -> String {
        let n = g.n();
        let mut bits = String::new();
        for j in 0..n {
            for i in 0..j {
                bits.push(if g.has_edge(i, j) { '1' } else { '0' });
            }
        }
        while !bits.len().is_multiple_of(6) {
            bits.push('0');
        }
        let mut s = String::new();
        s.push(char::from(63 + n as u8));
        for chunk in bits.as_bytes().chunks(6) {
            let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
            s.push(char::from(63 + v));
        }
        s
    }

    #[test]
    fn reference_values() {
        let e2 = Graph::empty(2);
        let k2 = make_named("complete", &[2]).unwrap();
        let k3 = make_named("complete", &[3]).unwrap();
        assert_eq!(reference_encode(&e2), "A?");
        assert_eq!(reference_encode(&k2), "A_");
        assert_eq!(reference_encode(&k3), "Bw");

        assert_eq!(encode_graph6(&e2).unwrap(), "A?");
        assert_eq!(encode_graph6(&k2).unwrap(), "A_");
        assert_eq!(encode_graph6(&k3).unwrap(), "Bw");
        assert_eq!(parse_graph6("A?").unwrap(), e2);
        assert_eq!(parse_graph6("A_").unwrap(), k2);
        assert_eq!(parse_graph6("Bw\n").unwrap(), k3);
    }

    #[test]
    fn round_trip_and_reference_agree_on_enumerated() {
        for n in 0..=6 {
            for g in enumerate_graphs(n, false).unwrap() {
                let s = encode_graph6(&g).unwrap();
                assert_eq!(s, reference_encode(&g));
                assert_eq!(parse_graph6(&s).unwrap(), g);
            }
        }
        let p = make_named("petersen", &[]).unwrap();
        assert_eq!(encode_graph6(&p).unwrap(), reference_encode(&p));
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_graph6(""), Err(Error::Format { offset: 0, .. })));
        // K3 needs one data byte
        assert!(matches!(parse_graph6("B"), Err(Error::Format { offset: 1, .. })));
        assert!(matches!(parse_graph6("Bww"), Err(Error::Format { offset: 2, .. })));
        assert!(matches!(parse_graph6("B\u{7}"), Err(Error::Format { offset: 1, .. })));
        assert!(matches!(parse_graph6("~?@"), Err(Error::Format { offset: 0, .. })));
        // padding bits set: 'B' + 0b111001
        assert!(parse_graph6("Bx").is_err());
    }

    #[test]
    fn encode_size_limit() {
        let g = Graph::empty(63);
        assert!(matches!(encode_graph6(&g), Err(Error::UnsupportedSize(_))));
        assert!(encode_graph6(&Graph::empty(62)).is_ok());
    }

    #[test]
    fn file_skips_comments() {
        let dir = std::env::temp_dir().join(format!("g6-test-{}", std::process::id()));
        std::fs::write(&dir, "# corpus\nA_\n\nBw\n").unwrap();
        let gs = read_graph6_file(&dir).unwrap();
        std::fs::remove_file(&dir).ok();
        assert_eq!(gs.len(), 2);
        assert_eq!(gs[1].edge_count(), 3);
    }
}
