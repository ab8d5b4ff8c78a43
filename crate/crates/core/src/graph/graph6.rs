//! graph6 encoding and decoding.
//!
//! Bytes are printable ASCII in `63..=126`, each carrying six bits. The
//! order prefix is one byte for `n <= 62`, `~` plus three bytes up to
//! 258047 and `~~` plus six bytes up to `2^36 - 1`. The adjacency body is
//! the upper triangle in column order `x(0,1), x(0,2), x(1,2), x(0,3), …`,
//! most significant bit first, zero-padded to a multiple of six bits.

use std::io::BufRead;

use super::Graph;
use crate::error::{Error, Result};

pub const HEADER: &str = ">>graph6<<";

const MAX_ORDER: u64 = (1 << 36) - 1;
const BIAS: u8 = 63;

fn encode_order(n: u64, out: &mut Vec<u8>) {
    let push_bits = |out: &mut Vec<u8>, groups: u32| {
        for g in (0..groups).rev() {
            out.push(((n >> (6 * g)) & 0x3f) as u8 + BIAS);
        }
    };
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else if n <= 258_047 {
        out.push(126);
        push_bits(out, 3);
    } else {
        out.push(126);
        out.push(126);
        push_bits(out, 6);
    }
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    assert!(
        n as u64 <= MAX_ORDER,
        "graph6 supports at most 2^36 - 1 vertices"
    );
    let mut out = Vec::with_capacity(8 + n * n / 12);
    encode_order(n as u64, &mut out);
    let mut word = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            word = (word << 1) | u8::from(g.has_edge(i, j));
            filled += 1;
            if filled == 6 {
                out.push(word + BIAS);
                word = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((word << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

fn parse_error(offset: usize, reason: impl Into<String>) -> Error {
    Error::Graph6 {
        offset,
        reason: reason.into(),
    }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok(u64::from(b - BIAS)),
        Some(&b) => Err(parse_error(offset, format!("byte {b} outside 63..=126"))),
        None => Err(parse_error(offset, "unexpected end of input")),
    }
}

/// Decodes one graph6 string. A leading `>>graph6<<` header and trailing
/// line terminators are accepted. Error offsets index into `s`.
pub fn decode(s: &str) -> Result<Graph> {
    let trimmed = s.trim_end_matches(['\n', '\r']);
    let bytes = trimmed.as_bytes();
    let mut pos = if trimmed.starts_with(HEADER) {
        HEADER.len()
    } else {
        0
    };

    let n = if sextet(bytes, pos)? < 63 {
        pos += 1;
        sextet(bytes, pos - 1)?
    } else if bytes.get(pos + 1) != Some(&126) {
        let mut n = 0;
        for i in 1..=3 {
            n = (n << 6) | sextet(bytes, pos + i)?;
        }
        pos += 4;
        n
    } else {
        let mut n = 0;
        for i in 2..=7 {
            n = (n << 6) | sextet(bytes, pos + i)?;
        }
        pos += 8;
        n
    };
    let n = usize::try_from(n).map_err(|_| parse_error(0, "order does not fit in memory"))?;

    let bits = n * n.saturating_sub(1) / 2;
    let body_len = bits.div_ceil(6);
    let body = &bytes[pos..];
    if body.len() < body_len {
        return Err(parse_error(
            bytes.len(),
            format!("expected {body_len} adjacency bytes, found {}", body.len()),
        ));
    }
    if body.len() > body_len {
        return Err(parse_error(
            pos + body_len,
            "trailing bytes after adjacency data",
        ));
    }

    let mut edges = Vec::new();
    let mut bit = 0usize;
    for j in 1..n {
        for i in 0..j {
            let offset = pos + bit / 6;
            if (sextet(bytes, offset)? >> (5 - bit % 6)) & 1 == 1 {
                edges.push((i, j));
            }
            bit += 1;
        }
    }
    if bits % 6 != 0 {
        let last = pos + body_len - 1;
        let pad = 6 - bits % 6;
        if sextet(bytes, last)? & ((1 << pad) - 1) != 0 {
            return Err(parse_error(last, "non-zero padding bits"));
        }
    }
    Graph::from_edges(n, edges)
}

/// Decodes a newline-delimited graph6 stream. Blank lines are skipped;
/// each item carries its 1-based line number.
pub fn read_stream<R: BufRead>(reader: R) -> impl Iterator<Item = (usize, Result<Graph>)> {
    reader
        .lines()
        .enumerate()
        .filter_map(|(i, line)| match line {
            Ok(line) if line.trim().is_empty() => None,
            Ok(line) => Some((i + 1, decode(line.trim()))),
            Err(e) => Some((i + 1, Err(parse_error(0, e.to_string())))),
        })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k4_packs_to_tilde() {
        assert_eq!(encode(&Graph::complete(4)), "C~");
        assert_eq!(decode("C~").unwrap(), Graph::complete(4));
    }

    #[test]
    fn single_vertex_and_empty() {
        assert_eq!(encode(&Graph::empty(1)), "@");
        assert_eq!(encode(&Graph::empty(0)), "?");
        assert_eq!(decode("@").unwrap().order(), 1);
    }

    #[test]
    fn known_five_vertex_string() {
        // Edges 0-2, 0-4, 1-3, 3-4.
        let g = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(encode(&g), "DQc");
    }

    #[test]
    fn petersen_standard_string() {
        assert_eq!(encode(&Graph::petersen()), "IheA@GUAo");
    }

    #[test]
    fn header_and_newline_are_accepted() {
        assert_eq!(decode(">>graph6<<C~\n").unwrap(), Graph::complete(4));
    }

    #[test]
    fn long_order_prefix_roundtrips() {
        let g = Graph::path(70);
        let s = encode(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 69]);
        assert_eq!(decode(&s).unwrap(), g);
    }

    #[test]
    fn malformed_inputs_report_offsets() {
        assert!(matches!(decode(""), Err(Error::Graph6 { offset: 0, .. })));
        assert!(matches!(
            decode("C}x"),
            Err(Error::Graph6 { offset: 2, .. })
        ));
        assert!(matches!(decode("C"), Err(Error::Graph6 { offset: 1, .. })));
        assert!(matches!(
            decode("C\x20"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        // n = 2 has one bit; the low five padding bits must be zero.
        assert!(matches!(decode("A@"), Err(Error::Graph6 { offset: 1, .. })));
        assert_eq!(decode("A_").unwrap(), Graph::path(2));
    }

    #[test]
    fn stream_skips_blank_lines_and_numbers_lines() {
        let input = "C~\n\nbad\nA_\n";
        let items: Vec<_> = read_stream(input.as_bytes()).collect();
        assert_eq!(items.len(), 3);
        assert_eq!(items[0].0, 1);
        assert!(items[1].1.is_err());
        assert_eq!(items[1].0, 3);
        assert_eq!(items[2].0, 4);
    }
}
