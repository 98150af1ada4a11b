//! graph6 encoding: one printable byte per six bits, offset by 63.
//!
//! Layout is `N(n) R(x)`. `N(n)` is one byte for `n <= 62`, `126` followed
//! by three bytes for `n <= 258047`, and `126 126` followed by six bytes
//! beyond that. `R(x)` packs the upper triangle column by column, i.e. the
//! pairs `(0,1), (0,2), (1,2), (0,3), ...`, big-endian within each 6-bit
//! group and zero-padded at the end.

use thiserror::Error;

use super::{Graph, GraphError, MAX_ORDER};

const HEADER: &str = ">>graph6<<";

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 string")]
    Empty,
    #[error("byte {byte:#04x} at offset {offset} is outside the graph6 range 63..=126")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("{format} input at offset {offset} is not supported, only graph6")]
    Unsupported { offset: usize, format: &'static str },
    #[error("truncated input at offset {offset}: expected {expected} bytes, found {found}")]
    Truncated {
        offset: usize,
        expected: usize,
        found: usize,
    },
    #[error("non-zero padding bits in the byte at offset {offset}")]
    NonZeroPadding { offset: usize },
    #[error("unexpected trailing data at offset {offset}")]
    TrailingData { offset: usize },
    #[error("graph6 string at offset {offset} encodes order 0")]
    ZeroOrder { offset: usize },
    #[error("order {order} exceeds the supported maximum of {MAX_ORDER}")]
    OrderTooLarge { order: usize },
}

impl Graph6Error {
    /// Byte offset of the failure within the input, where one applies.
    pub fn offset(&self) -> Option<usize> {
        match *self {
            Graph6Error::Empty | Graph6Error::OrderTooLarge { .. } => None,
            Graph6Error::InvalidByte { offset, .. }
            | Graph6Error::Unsupported { offset, .. }
            | Graph6Error::Truncated { offset, .. }
            | Graph6Error::NonZeroPadding { offset }
            | Graph6Error::TrailingData { offset }
            | Graph6Error::ZeroOrder { offset } => Some(offset),
        }
    }
}

/// Parses one graph6 record. A leading `>>graph6<<` header and trailing
/// line terminators are accepted.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    let start = if bytes.starts_with(HEADER.as_bytes()) {
        HEADER.len()
    } else {
        0
    };
    let body = &bytes[start..];
    if body.is_empty() {
        return Err(Graph6Error::Empty);
    }
    match body[0] {
        b':' => {
            return Err(Graph6Error::Unsupported {
                offset: start,
                format: "sparse6",
            })
        }
        b'&' => {
            return Err(Graph6Error::Unsupported {
                offset: start,
                format: "digraph6",
            })
        }
        _ => {}
    }
    for (i, &b) in body.iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(Graph6Error::InvalidByte {
                offset: start + i,
                byte: b,
            });
        }
    }

    let (order, header_len) = decode_order(body, start)?;
    if order == 0 {
        return Err(Graph6Error::ZeroOrder { offset: start });
    }
    if order > MAX_ORDER {
        return Err(Graph6Error::OrderTooLarge { order });
    }
    let bits = order * (order - 1) / 2;
    let data_len = bits.div_ceil(6);
    let data = &body[header_len..];
    if data.len() < data_len {
        return Err(Graph6Error::Truncated {
            offset: start + body.len(),
            expected: header_len + data_len,
            found: body.len(),
        });
    }
    if data.len() > data_len {
        return Err(Graph6Error::TrailingData {
            offset: start + header_len + data_len,
        });
    }
    if data_len > 0 {
        let pad = data_len * 6 - bits;
        let last = data[data_len - 1] - 63;
        if last & ((1u8 << pad) - 1) != 0 {
            return Err(Graph6Error::NonZeroPadding {
                offset: start + header_len + data_len - 1,
            });
        }
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..order {
        for i in 0..j {
            let byte = data[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::from_edges(order, edges).map_err(|e| match e {
        GraphError::OrderTooLarge(order) => Graph6Error::OrderTooLarge { order },
        other => unreachable!("decoded edges are always valid: {other}"),
    })
}

fn decode_order(body: &[u8], start: usize) -> Result<(usize, usize), Graph6Error> {
    let need = |len: usize| -> Result<(), Graph6Error> {
        if body.len() < len {
            Err(Graph6Error::Truncated {
                offset: start + body.len(),
                expected: len,
                found: body.len(),
            })
        } else {
            Ok(())
        }
    };
    let fold = |digits: &[u8]| {
        digits
            .iter()
            .fold(0usize, |acc, &b| acc << 6 | (b - 63) as usize)
    };
    if body[0] != 126 {
        return Ok(((body[0] - 63) as usize, 1));
    }
    need(2)?;
    if body[1] != 126 {
        need(4)?;
        Ok((fold(&body[1..4]), 4))
    } else {
        need(8)?;
        Ok((fold(&body[2..8]), 8))
    }
}

/// Encodes `g` as graph6, without header or newline.
pub fn write_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out: Vec<u8> = Vec::new();
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push((n >> shift & 63) as u8 + 63);
        }
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

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::generators;

    #[test]
    fn decodes_small_examples() {
        let k2 = parse_graph6("A_").unwrap();
        assert_eq!((k2.order(), k2.edge_count()), (2, 1));
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!((k4.order(), k4.edge_count()), (4, 6));
        let e2 = parse_graph6("A?").unwrap();
        assert_eq!((e2.order(), e2.edge_count()), (2, 0));
        assert_eq!(parse_graph6(">>graph6<<C~\n").unwrap(), k4);
    }

    #[test]
    fn encodes_small_examples() {
        assert_eq!(write_graph6(&generators::complete(2).unwrap()), "A_");
        assert_eq!(write_graph6(&generators::complete(4).unwrap()), "C~");
        assert_eq!(write_graph6(&Graph::empty(1).unwrap()), "@");
    }

    #[test]
    fn bit_order_is_column_major() {
        // Only the pair (0, 2) set: second bit of the stream.
        let g = parse_graph6("B_").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 1)]);
        let g = parse_graph6("BO").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 2)]);
        let g = parse_graph6("BG").unwrap();
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(1, 2)]);
    }

    #[test]
    fn long_form_order() {
        let g = generators::cycle(100).unwrap();
        let s = write_graph6(&g);
        assert_eq!(&s.as_bytes()[..4], &[126, 63, 64, 63 + 36]);
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("C~ "),
            Err(Graph6Error::InvalidByte {
                offset: 2,
                byte: b' '
            })
        );
        assert_eq!(
            parse_graph6("C"),
            Err(Graph6Error::Truncated {
                offset: 1,
                expected: 2,
                found: 1
            })
        );
        assert_eq!(
            parse_graph6("A`"),
            Err(Graph6Error::NonZeroPadding { offset: 1 })
        );
        assert_eq!(
            parse_graph6("A_?"),
            Err(Graph6Error::TrailingData { offset: 2 })
        );
        assert_eq!(parse_graph6("?"), Err(Graph6Error::ZeroOrder { offset: 0 }));
        assert!(matches!(
            parse_graph6(":Fa@x^"),
            Err(Graph6Error::Unsupported {
                format: "sparse6",
                ..
            })
        ));
        assert_eq!(
            parse_graph6(">>graph6<<C~~").unwrap_err().offset(),
            Some(12)
        );
    }
}
