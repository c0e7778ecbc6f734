//! graph6 line format.
//!
//! Each byte stores a value `0..=63` offset by 63. The order is `N(n)`, a
//! single byte for `n <= 62` or `126` plus three bytes otherwise, followed by
//! the upper triangle `x(0,1), x(0,2), x(1,2), x(0,3), ...` packed six bits
//! per byte, most significant first, zero padded.

use super::{Graph, GraphBuilder, MAX_VERTICES};
use crate::error::{Error, Result};

/// Optional header that may open a graph6 file.
pub const HEADER: &str = ">>graph6<<";

fn malformed(offset: usize, reason: impl Into<String>) -> Error {
    Error::MalformedGraph6 {
        offset,
        reason: reason.into(),
    }
}

/// Decode one graph6 line. A trailing newline and a leading header are
/// tolerated.
pub fn decode(text: &str) -> Result<Graph> {
    let mut bytes = text.as_bytes();
    let mut base = 0;
    if let Some(rest) = bytes.strip_prefix(HEADER.as_bytes()) {
        bytes = rest;
        base = HEADER.len();
    }
    if let Some(rest) = bytes.strip_suffix(b"\n") {
        bytes = rest.strip_suffix(b"\r").unwrap_or(rest);
    }
    if let Some(pos) = bytes.iter().position(|b| !(63..=126).contains(b)) {
        return Err(malformed(
            base + pos,
            format!(
                "byte {:#04x} outside the printable range 63..=126",
                bytes[pos]
            ),
        ));
    }
    let (n, header_len) = match bytes {
        [] => return Err(malformed(base, "empty line")),
        [126, 126, ..] => {
            return Err(malformed(
                base + 1,
                format!("eight-byte order form exceeds {MAX_VERTICES} vertices"),
            ))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(malformed(base + 1 + rest.len(), "truncated order field"));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - 63));
            (n, 4)
        }
        [b, ..] => (usize::from(b - 63), 1),
    };
    if n == 0 {
        return Err(malformed(base, "graphs with no vertices are not supported"));
    }
    if n > MAX_VERTICES {
        return Err(malformed(base, format!("order {n} exceeds {MAX_VERTICES}")));
    }
    let total = n * (n - 1) / 2;
    let need = total.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() != need {
        let at = base + header_len + body.len().min(need);
        return Err(malformed(
            at,
            format!(
                "expected {need} data bytes for n = {n}, found {}",
                body.len()
            ),
        ));
    }
    let mut b = GraphBuilder::new(n)?;
    let (mut i, mut j) = (0usize, 1usize);
    for (idx, &byte) in body.iter().enumerate() {
        let value = byte - 63;
        for shift in (0..6).rev() {
            let pos = idx * 6 + (5 - shift);
            let bit = value >> shift & 1;
            if pos >= total {
                if bit != 0 {
                    return Err(malformed(base + header_len + idx, "nonzero padding bits"));
                }
                continue;
            }
            if bit == 1 {
                b.add_edge(i, j)?;
            }
            i += 1;
            if i == j {
                i = 0;
                j += 1;
            }
        }
    }
    Ok(b.build())
}

/// Encode `g` as a graph6 line without the trailing newline.
pub fn encode(g: &Graph) -> String {
    let n = g.n();
    let total = n * (n - 1) / 2;
    let mut out = Vec::with_capacity(4 + total.div_ceil(6));
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
    let mut acc = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u8::from(g.has_edge(i, j));
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
    String::from_utf8(out).expect("graph6 output is ASCII")
}

/// Decode every graph in a newline-separated stream, skipping blank lines and
/// an optional header. Errors carry the 1-based line number.
pub fn decode_stream(text: &str) -> Result<Vec<Graph>> {
    stream_lines(text)
        .map(|(line, s)| decode_line(line, s))
        .collect()
}

/// Non-blank lines with their 1-based line numbers; a leading header is
/// dropped.
pub fn stream_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(i, raw)| {
        let s = raw.trim_end_matches('\r');
        let s = if i == 0 {
            s.strip_prefix(HEADER).unwrap_or(s)
        } else {
            s
        };
        (!s.trim().is_empty()).then_some((i + 1, s))
    })
}

pub(crate) fn decode_line(line: usize, s: &str) -> Result<Graph> {
    decode(s).map_err(|e| Error::StreamParse {
        line,
        source: Box::new(e),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{construct, FamilySpec};

    #[test]
    fn triangle_and_path() {
        let k3 = decode("Bw").unwrap();
        assert_eq!(k3, construct(&FamilySpec::Complete { n: 3 }).unwrap());
        let p3 = decode("Bg").unwrap();
        assert_eq!(p3.edges().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
        assert_eq!(encode(&p3), "Bg");
    }

    #[test]
    fn five_vertex_sample() {
        let g = decode("DQc").unwrap();
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 2), (0, 4), (1, 3), (3, 4)]
        );
    }

    #[test]
    fn long_form_round_trip() {
        let g = construct(&FamilySpec::SnkPlus { n: 100, k: 3 }).unwrap();
        let s = encode(&g);
        assert_eq!(s.as_bytes()[0], 126);
        assert_eq!(decode(&s).unwrap(), g);
        let g63 = construct(&FamilySpec::Cycle { n: 63 }).unwrap();
        assert_eq!(decode(&encode(&g63)).unwrap(), g63);
    }

    #[test]
    fn errors_report_offsets() {
        assert!(matches!(
            decode("B w"),
            Err(Error::MalformedGraph6 { offset: 1, .. })
        ));
        assert!(matches!(
            decode("B"),
            Err(Error::MalformedGraph6 { offset: 1, .. })
        ));
        assert!(matches!(decode("Bww"), Err(Error::MalformedGraph6 { .. })));
        // "Bx" sets a padding bit
        assert!(matches!(
            decode("Bx"),
            Err(Error::MalformedGraph6 { offset: 1, .. })
        ));
        assert!(matches!(
            decode(""),
            Err(Error::MalformedGraph6 { offset: 0, .. })
        ));
        assert!(matches!(decode("?"), Err(Error::MalformedGraph6 { .. })));
    }

    #[test]
    fn header_and_newline() {
        assert_eq!(decode(">>graph6<<Bw\n").unwrap().m(), 3);
        let gs = decode_stream(">>graph6<<Bw\n\nBg\r\n").unwrap();
        assert_eq!(gs.len(), 2);
        let err = decode_stream("Bw\nB!\n").unwrap_err();
        assert!(matches!(err, Error::StreamParse { line: 2, .. }));
    }

    #[test]
    fn generator_output_round_trips() {
        for n in 1..=7 {
            for line in qext_graphgen::all_graphs(n) {
                assert_eq!(encode(&decode(&line).unwrap()), line);
            }
        }
    }
}
