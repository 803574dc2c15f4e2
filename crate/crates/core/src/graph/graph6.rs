//! graph6 encoding as produced by nauty's `showg`/`geng`.
//!
//! Header: one byte `n + 63` for `n <= 62`, otherwise `~` followed by `n` in
//! three 6-bit groups. Body: the upper triangle in column order
//! `(0,1),(0,2),(1,2),(0,3),...`, packed big-endian into 6-bit groups, each
//! offset by 63, with the last group zero-padded.

use thiserror::Error;

use super::{Graph, MAX_VERTICES};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty input")]
    Empty,
    #[error("malformed header")]
    MalformedHeader,
    #[error("byte {byte:#04x} at offset {offset} is outside the printable range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("expected {expected} body bytes for the declared order, found {found}")]
    Length { expected: usize, found: usize },
    #[error("padding bits after the last edge bit are not zero")]
    NonzeroPadding,
    #[error("order {n} exceeds the capacity of {capacity} vertices")]
    TooManyVertices { n: usize, capacity: usize },
}

const BIAS: u8 = 63;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let text = text.trim_end_matches(['\n', '\r']);
    let text = text.strip_prefix(">>graph6<<").unwrap_or(text);
    let bytes = text.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&byte) {
            return Err(Graph6Error::InvalidByte { offset, byte });
        }
    }

    let (n, body) = if bytes[0] != 126 {
        ((bytes[0] - BIAS) as usize, &bytes[1..])
    } else {
        // `~~` introduces the 8-byte form for n >= 258048
        if bytes.len() < 4 || bytes[1] == 126 {
            return Err(Graph6Error::MalformedHeader);
        }
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - BIAS) as usize);
        if n < 63 {
            return Err(Graph6Error::MalformedHeader);
        }
        (n, &bytes[4..])
    };
    if n > MAX_VERTICES {
        return Err(Graph6Error::TooManyVertices {
            n,
            capacity: MAX_VERTICES,
        });
    }
    let expected = body_len(n);
    if body.len() != expected {
        return Err(Graph6Error::Length {
            expected,
            found: body.len(),
        });
    }

    let mut g = Graph::empty(n).expect("n checked against capacity");
    let total = n * n.saturating_sub(1) / 2;
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let group = body[k / 6] - BIAS;
            if group >> (5 - k % 6) & 1 == 1 {
                g.add_edge(i, j);
            }
            k += 1;
        }
    }
    if total % 6 != 0 {
        let last = body[expected - 1] - BIAS;
        let pad_bits = 6 - total % 6;
        if last & ((1u8 << pad_bits) - 1) != 0 {
            return Err(Graph6Error::NonzeroPadding);
        }
    }
    Ok(g)
}

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(n as u8 + BIAS);
    } else {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 0x3f) as u8 + BIAS);
        }
    }
    let mut group = 0u8;
    let mut filled = 0;
    for j in 1..n {
        for i in 0..j {
            group = (group << 1) | g.has_edge(i, j) as u8;
            filled += 1;
            if filled == 6 {
                out.push(group + BIAS);
                group = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push((group << (6 - filled)) + BIAS);
    }
    String::from_utf8(out).expect("graph6 is ASCII")
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Straight transcription of the format description, used as a second
    /// encoder: collect the bit string, then cut it into sextets.
    fn reference_encode(g: &Graph) -> String {
        let n = g.n();
        let mut bits = Vec::new();
        for j in 1..n {
            for i in 0..j {
                bits.push(g.has_edge(i, j));
            }
        }
        while bits.len() % 6 != 0 {
            bits.push(false);
        }
        let mut s = String::new();
        assert!(n <= 62);
        s.push((n as u8 + 63) as char);
        for chunk in bits.chunks(6) {
            let v = chunk.iter().fold(0u8, |a, &b| a * 2 + b as u8);
            s.push((v + 63) as char);
        }
        s
    }

    #[test]
    fn small_examples() {
        let g = parse_graph6("@").unwrap();
        assert_eq!((g.n(), g.edge_count()), (1, 0));

        let g = parse_graph6("A_").unwrap();
        assert_eq!(g.n(), 2);
        assert_eq!(g.edge_list().0, vec![(0, 1)]);
        assert_eq!(reference_encode(&Graph::complete(2)), "A_");

        let g = parse_graph6("C~").unwrap();
        assert_eq!(g, Graph::complete(4));
        assert_eq!(reference_encode(&Graph::complete(4)), "C~");
    }

    #[test]
    fn known_nauty_strings() {
        // geng/showg outputs
        assert_eq!(encode_graph6(&Graph::petersen()), "IheA@GUAo");
        assert_eq!(encode_graph6(&Graph::cycle(5)), "Dhc");
        assert_eq!(encode_graph6(&Graph::empty(0).unwrap()), "?");
    }

    #[test]
    fn agrees_with_reference_encoder() {
        for g in [
            Graph::petersen(),
            Graph::cycle(7),
            Graph::complete_multipartite(&[1, 2, 3]),
        ] {
            assert_eq!(encode_graph6(&g), reference_encode(&g));
            assert_eq!(parse_graph6(&encode_graph6(&g)).unwrap(), g);
        }
    }

    #[test]
    fn long_header_round_trip() {
        let g = Graph::cycle(64);
        let s = encode_graph6(&g);
        assert_eq!(&s[..4], "~?@?");
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn distinct_errors() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(parse_graph6("~~"), Err(Graph6Error::MalformedHeader));
        assert_eq!(parse_graph6("~??_"), Err(Graph6Error::MalformedHeader));
        assert_eq!(
            parse_graph6("A@"),
            Err(Graph6Error::NonzeroPadding),
            "bit after the single edge slot must be zero"
        );
        assert_eq!(parse_graph6("C~~"), Err(Graph6Error::Length { expected: 1, found: 2 }));
        assert!(matches!(
            parse_graph6("A\x10"),
            Err(Graph6Error::InvalidByte { offset: 1, .. })
        ));
        // n = 65 via the long header
        assert!(matches!(
            parse_graph6("~?@@"),
            Err(Graph6Error::TooManyVertices { n: 65, .. })
        ));
    }
}
