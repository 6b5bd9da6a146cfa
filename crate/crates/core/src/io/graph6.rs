//! The graph6 text format: an order prefix followed by the upper triangle of
//! the adjacency matrix, column by column, six bits per printable byte.

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside 63..=126")]
    BadByte { offset: usize, byte: u8 },
    #[error("graph6 string for {n} vertices needs {expected} data bytes, found {found}")]
    BadLength { n: usize, expected: usize, found: usize },
    #[error("padding bits in the last byte are not zero")]
    TrailingBits,
    #[error("graph6 order {0} is outside 1..={MAX_VERTICES}")]
    UnsupportedOrder(usize),
}

pub type Result<T> = std::result::Result<T, Graph6Error>;

pub fn parse(s: &str) -> Result<Graph> {
    let s = s.trim();
    let s = s.strip_prefix(HEADER).unwrap_or(s);
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return Err(Graph6Error::BadByte { offset, byte });
        }
    }
    let (n, data) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, &bytes[1..])
    } else if bytes.len() >= 4 && bytes[1] != 126 {
        let n = bytes[1..4]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
        (n, &bytes[4..])
    } else {
        // 8-byte orders exceed anything representable here
        return Err(Graph6Error::UnsupportedOrder(usize::MAX));
    };
    if n == 0 || n > MAX_VERTICES {
        return Err(Graph6Error::UnsupportedOrder(n));
    }
    let nbits = n * (n - 1) / 2;
    let expected = nbits.div_ceil(6);
    if data.len() != expected {
        return Err(Graph6Error::BadLength {
            n,
            expected,
            found: data.len(),
        });
    }
    let bit = |k: usize| (data[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
    if (nbits..expected * 6).any(bit) {
        return Err(Graph6Error::TrailingBits);
    }
    let mut rows = vec![0u64; n];
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            if bit(k) {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            k += 1;
        }
    }
    Ok(Graph::from_rows_unchecked(rows))
}

/// graph6 of the graph with its current labelling.
pub fn emit(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else {
        out.push(126);
        out.extend([12, 6, 0].map(|s| ((n >> s) & 63) as u8 + 63));
    }
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
    String::from_utf8(out).expect("graph6 bytes are ASCII")
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.serialize_str(&emit(self))
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        parse(&s).map_err(serde::de::Error::custom)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_named, NamedGraph};

    #[test]
    fn small_literals() {
        assert_eq!(parse("A_").unwrap(), Graph::complete(2).unwrap());
        assert_eq!(parse("C~").unwrap(), Graph::complete(4).unwrap());
        assert_eq!(parse("A?").unwrap(), Graph::empty(2).unwrap());
        assert_eq!(emit(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(parse(">>graph6<<C~").unwrap(), Graph::complete(4).unwrap());
    }

    #[test]
    fn petersen_round_trip() {
        let p = build_named(&NamedGraph::Petersen).unwrap();
        let s = emit(&p);
        assert_eq!(s.len(), 9);
        assert_eq!(parse(&s).unwrap(), p);
    }

    #[test]
    fn long_order_prefix() {
        for n in [62, 63, 64] {
            let g = build_named(&NamedGraph::Cycle(n)).unwrap();
            let s = emit(&g);
            assert_eq!(s.as_bytes()[0] == 126, n > 62);
            assert_eq!(parse(&s).unwrap(), g);
        }
    }

    #[test]
    fn malformed_inputs() {
        assert_eq!(parse(""), Err(Graph6Error::Empty));
        assert!(matches!(parse("C~~"), Err(Graph6Error::BadLength { .. })));
        assert!(matches!(parse("C\u{7f}"), Err(Graph6Error::BadByte { .. })));
        // K2 with a padding bit set
        assert_eq!(parse("A`"), Err(Graph6Error::TrailingBits));
        assert!(matches!(parse("?"), Err(Graph6Error::UnsupportedOrder(0))));
    }
}
