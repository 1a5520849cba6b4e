//! graph6 encoding: a size prefix followed by the upper triangle of the
//! adjacency matrix, column by column, packed into 6-bit groups offset by 63.

use super::{Graph, MAX_VERTICES};
use crate::error::{Graph6Error, Result};

const HEADER: &str = ">>graph6<<";
const BIAS: u8 = 63;

fn data_byte(offset: usize, byte: u8) -> Result<u8, Graph6Error> {
    if (BIAS..=126).contains(&byte) {
        Ok(byte - BIAS)
    } else {
        Err(Graph6Error::OutOfRange { offset, byte })
    }
}

/// Decodes N(n); returns the vertex count and the number of bytes consumed.
fn decode_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let first = *bytes.first().ok_or(Graph6Error::MalformedHeader("empty record"))?;
    let first = data_byte(0, first)?;
    if first < 63 {
        return Ok((first as usize, 1));
    }
    let (skip, width) = if bytes.get(1) == Some(&126) { (2, 6) } else { (1, 3) };
    let digits = bytes.get(skip..skip + width).ok_or(Graph6Error::MalformedHeader("size prefix cut short"))?;
    let mut n: u64 = 0;
    for (i, &b) in digits.iter().enumerate() {
        n = (n << 6) | data_byte(skip + i, b)? as u64;
    }
    if n as usize > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices(n));
    }
    let minimal = match width {
        3 => n >= 63,
        _ => n > 258_047,
    };
    if !minimal {
        return Err(Graph6Error::MalformedHeader("size prefix is not in shortest form"));
    }
    Ok((n as usize, skip + width))
}

fn encode_order(n: usize, out: &mut String) {
    let push_digits = |out: &mut String, width: u32| {
        for k in (0..width).rev() {
            out.push(char::from(((n >> (6 * k)) & 0x3f) as u8 + BIAS));
        }
    };
    if n < 63 {
        out.push(char::from(n as u8 + BIAS));
    } else if n <= 258_047 {
        out.push('~');
        push_digits(out, 3);
    } else {
        out.push_str("~~");
        push_digits(out, 6);
    }
}

/// Parses a single graph6 record. Surrounding whitespace and the optional
/// `>>graph6<<` header are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph> {
    let text = text.trim();
    let text = text.strip_prefix(HEADER).unwrap_or(text);
    let bytes = text.as_bytes();
    let (n, start) = decode_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let data = &bytes[start..];
    if data.len() < expected {
        return Err(Graph6Error::Truncated { expected, found: data.len() }.into());
    }
    if data.len() > expected {
        return Err(Graph6Error::TrailingData { extra: data.len() - expected }.into());
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let chunk = data_byte(start + k / 6, data[k / 6])?;
            if chunk & (0x20 >> (k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    // Validate bytes that only carry padding.
    for (offset, &b) in data.iter().enumerate().skip(k / 6) {
        data_byte(start + offset, b)?;
    }
    Graph::from_edges(n, edges)
}

/// Encodes `g` in graph6 form without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = String::new();
    encode_order(n, &mut out);
    let mut chunk = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            chunk = (chunk << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(char::from(chunk + BIAS));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(char::from((chunk << (6 - filled)) + BIAS));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::graph::{make_complete, make_path, make_petersen};

    /// Decodes the upper-triangle bits of a small record by hand.
    fn naive_bits(record: &str) -> (usize, Vec<bool>) {
        let b = record.as_bytes();
        let n = (b[0] - 63) as usize;
        let mut bits = Vec::new();
        for &c in &b[1..] {
            let v = c - 63;
            for shift in (0..6).rev() {
                bits.push((v >> shift) & 1 == 1);
            }
        }
        bits.truncate(n * (n - 1) / 2);
        (n, bits)
    }

    #[test]
    fn five_vertex_record() {
        let g = parse_graph6("D?{").unwrap();
        let (n, bits) = naive_bits("D?{");
        assert_eq!(n, 5);
        let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let expected: Vec<_> = pairs.iter().zip(&bits).filter(|(_, &b)| b).map(|(&p, _)| p).collect();
        assert_eq!(g.edges().collect::<Vec<_>>(), expected);
        assert_eq!(expected, vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn single_vertex() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.order(), g.edge_count()), (1, 0));
        assert_eq!(to_graph6(&g), "@");
    }

    #[test]
    fn known_encodings() {
        assert_eq!(to_graph6(&make_complete(4).unwrap()), "C~");
        assert_eq!(to_graph6(&make_path(4).unwrap()), "Ch");
        assert_eq!(to_graph6(&make_petersen()), "IheA@GUAo");
    }

    #[test]
    fn header_and_whitespace() {
        let g = parse_graph6(">>graph6<<C~\n").unwrap();
        assert_eq!(g.edge_count(), 6);
    }

    #[test]
    fn long_size_prefix() {
        let g = make_path(100).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn distinct_errors() {
        let g6 = |s: &str| match parse_graph6(s) {
            Err(Error::Graph6(e)) => e,
            other => panic!("expected graph6 error, got {other:?}"),
        };
        assert!(matches!(g6(""), Graph6Error::MalformedHeader(_)));
        assert!(matches!(g6("~?"), Graph6Error::MalformedHeader(_)));
        assert!(matches!(g6("~???"), Graph6Error::MalformedHeader(_)));
        assert!(matches!(g6("D?\u{7f}"), Graph6Error::OutOfRange { offset: 2, byte: 127 }));
        assert!(matches!(g6("D ?"), Graph6Error::OutOfRange { offset: 1, .. }));
        assert!(matches!(g6("D?"), Graph6Error::Truncated { expected: 2, found: 1 }));
        assert!(matches!(g6("D?{?"), Graph6Error::TrailingData { extra: 1 }));
    }
}
