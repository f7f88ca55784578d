//! The nauty graph6 format for simple undirected graphs.
//!
//! A line is the order `N(n)` followed by the upper triangle of the
//! adjacency matrix, read column by column (`x(0,1) x(0,2) x(1,2) x(0,3) ...`),
//! packed six bits per byte, most significant first, each byte offset by 63.
//! Orders up to 62 use one byte; larger orders use the `~` prefixed
//! 18-bit and 36-bit forms.

use super::Graph;
use thiserror::Error;

const BIAS: u8 = 63;
const MAX_SHORT: usize = 62;
const MAX_MEDIUM: usize = 258_047;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Graph6Error {
    #[error("empty graph6 line")]
    Empty,
    #[error("byte {offset}: character {byte:#04x} is outside the graph6 range 63..=126")]
    BadCharacter { offset: usize, byte: u8 },
    #[error("byte {offset}: malformed order header")]
    BadHeader { offset: usize },
    #[error("byte {offset}: adjacency data truncated, expected {expected} bytes after the header")]
    Truncated { offset: usize, expected: usize },
    #[error("byte {offset}: {extra} unexpected trailing bytes")]
    TrailingData { offset: usize, extra: usize },
    #[error("byte {offset}: padding bits are not zero")]
    NonZeroPadding { offset: usize },
    #[error("graph6 cannot encode parallel edges")]
    Multigraph,
    #[error("order {0} is too large for graph6")]
    TooLarge(usize),
}

/// Parses one graph6 line. A trailing newline is tolerated; the optional
/// `>>graph6<<` file header is not.
pub fn parse_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let bytes = text.trim_end_matches(['\n', '\r']).as_bytes();
    if bytes.is_empty() {
        return Err(Graph6Error::Empty);
    }
    for (offset, &byte) in bytes.iter().enumerate() {
        if !(BIAS..=126).contains(&byte) {
            return Err(Graph6Error::BadCharacter { offset, byte });
        }
    }
    let (n, header_len) = parse_order(bytes)?;
    let bits = n * n.saturating_sub(1) / 2;
    let expected = bits.div_ceil(6);
    let body = &bytes[header_len..];
    if body.len() < expected {
        return Err(Graph6Error::Truncated {
            offset: bytes.len(),
            expected,
        });
    }
    if body.len() > expected {
        return Err(Graph6Error::TrailingData {
            offset: header_len + expected,
            extra: body.len() - expected,
        });
    }

    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - BIAS;
            if byte & (0x20 >> (k % 6)) != 0 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    if bits % 6 != 0 {
        let last = body[expected - 1] - BIAS;
        let pad_mask = (1u8 << (6 - bits % 6)) - 1;
        if last & pad_mask != 0 {
            return Err(Graph6Error::NonZeroPadding {
                offset: header_len + expected - 1,
            });
        }
    }
    Ok(Graph::new(n, edges).expect("graph6 decodes to a loopless graph"))
}

fn parse_order(bytes: &[u8]) -> Result<(usize, usize), Graph6Error> {
    let value = |range: std::ops::Range<usize>| {
        bytes[range]
            .iter()
            .fold(0usize, |acc, &b| (acc << 6) | usize::from(b - BIAS))
    };
    if bytes[0] != 126 {
        return Ok((usize::from(bytes[0] - BIAS), 1));
    }
    if bytes.len() >= 2 && bytes[1] == 126 {
        if bytes.len() < 8 {
            return Err(Graph6Error::BadHeader { offset: bytes.len() });
        }
        let n = value(2..8);
        if n <= MAX_MEDIUM {
            return Err(Graph6Error::BadHeader { offset: 2 });
        }
        return Ok((n, 8));
    }
    if bytes.len() < 4 {
        return Err(Graph6Error::BadHeader { offset: bytes.len() });
    }
    let n = value(1..4);
    if n <= MAX_SHORT {
        return Err(Graph6Error::BadHeader { offset: 1 });
    }
    Ok((n, 4))
}

/// Encodes a simple graph as a graph6 line (without newline).
pub fn write_graph6(g: &Graph) -> Result<String, Graph6Error> {
    if !g.is_simple() {
        return Err(Graph6Error::Multigraph);
    }
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    if n <= MAX_SHORT {
        out.push(n as u8 + BIAS);
    } else if n <= MAX_MEDIUM {
        out.push(126);
        out.extend((0..3).rev().map(|i| ((n >> (6 * i)) & 0x3f) as u8 + BIAS));
    } else if n < 1 << 36 {
        out.extend([126, 126]);
        out.extend((0..6).rev().map(|i| ((n >> (6 * i)) & 0x3f) as u8 + BIAS));
    } else {
        return Err(Graph6Error::TooLarge(n));
    }

    let bits = n * n.saturating_sub(1) / 2;
    let mut packed = vec![0u8; bits.div_ceil(6)];
    for &(i, j) in g.edges() {
        // column-major index of (i, j), i < j
        let k = j * (j - 1) / 2 + i;
        packed[k / 6] |= 0x20 >> (k % 6);
    }
    out.extend(packed.into_iter().map(|b| b + BIAS));
    Ok(String::from_utf8(out).expect("graph6 output is ASCII"))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let edges = (0..n).flat_map(|j| (0..j).map(move |i| (i, j)));
        Graph::new(n, edges).unwrap()
    }

    #[test]
    fn hand_decoded_examples() {
        // K4: header 4+63 = 'C'; six set bits = 63+63 = '~'
        let k4 = parse_graph6("C~").unwrap();
        assert_eq!(k4, complete(4));
        // K2: one set bit padded to 100000 = 32, +63 = '_'
        let k2 = parse_graph6("A_\n").unwrap();
        assert_eq!(k2.edges(), &[(0, 1)]);
        let k1 = parse_graph6("@").unwrap();
        assert_eq!((k1.vertex_count(), k1.edge_count()), (1, 0));
        assert_eq!(parse_graph6("?").unwrap().vertex_count(), 0);
    }

    #[test]
    fn hand_encoded_examples() {
        assert_eq!(write_graph6(&complete(4)).unwrap(), "C~");
        assert_eq!(write_graph6(&complete(2)).unwrap(), "A_");
        assert_eq!(write_graph6(&Graph::empty(1)).unwrap(), "@");
        // path 0-1-2: bits x01=1 x02=0 x12=1 -> 101000 = 40, +63 = 'g'
        let p3 = Graph::new(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(write_graph6(&p3).unwrap(), "Bg");
    }

    #[test]
    fn long_order_form() {
        let g = Graph::new(63, [(0, 62)]).unwrap();
        let s = write_graph6(&g).unwrap();
        assert_eq!(&s[..4], "~??~");
        assert_eq!(parse_graph6(&s).unwrap(), g);
    }

    #[test]
    fn errors_carry_offsets() {
        assert_eq!(parse_graph6(""), Err(Graph6Error::Empty));
        assert_eq!(
            parse_graph6("C~ "),
            Err(Graph6Error::BadCharacter { offset: 2, byte: b' ' })
        );
        assert_eq!(
            parse_graph6("C"),
            Err(Graph6Error::Truncated { offset: 1, expected: 1 })
        );
        assert_eq!(
            parse_graph6("A_?"),
            Err(Graph6Error::TrailingData { offset: 2, extra: 1 })
        );
        assert_eq!(parse_graph6("A~"), Err(Graph6Error::NonZeroPadding { offset: 1 }));
        assert_eq!(parse_graph6("~?"), Err(Graph6Error::BadHeader { offset: 2 }));
        // 18-bit form must not encode a short order
        assert_eq!(parse_graph6("~??@"), Err(Graph6Error::BadHeader { offset: 1 }));
    }

    #[test]
    fn multigraph_is_rejected() {
        let g = Graph::new(2, [(0, 1), (0, 1)]).unwrap();
        assert_eq!(write_graph6(&g), Err(Graph6Error::Multigraph));
    }
}
