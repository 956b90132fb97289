//! The graph6 text format.
//!
//! A header encodes the order (`63 + n` for `n <= 62`, otherwise `~`
//! followed by three 6-bit groups), then the upper triangle of the
//! adjacency matrix is packed column by column (`x(0,1), x(0,2), x(1,2),
//! x(0,3), ...`) six bits per byte, most significant bit first, each byte
//! offset by 63. Padding bits are zero.

use crate::graph::{Graph, GraphError, MAX_ORDER};

const OFFSET: u8 = 63;

fn body_len(n: usize) -> usize {
    (n * n.saturating_sub(1) / 2).div_ceil(6)
}

pub fn encode(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + body_len(n));
    if n <= 62 {
        out.push(OFFSET + n as u8);
    } else {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(OFFSET + ((n >> shift) & 0x3f) as u8);
        }
    }
    let rows = g.rows();
    let mut acc = 0u8;
    let mut filled = 0;
    for (j, row) in rows.iter().enumerate().skip(1) {
        for i in 0..j {
            acc = acc << 1 | (row >> i & 1) as u8;
            filled += 1;
            if filled == 6 {
                out.push(OFFSET + acc);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        out.push(OFFSET + (acc << (6 - filled)));
    }
    String::from_utf8(out).expect("graph6 output is ASCII")
}

fn err(offset: usize, reason: &'static str) -> GraphError {
    GraphError::Graph6 { offset, reason }
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u8, GraphError> {
    match bytes.get(offset) {
        None => Err(err(offset, "truncated input")),
        Some(&b) if (OFFSET..=OFFSET + 63).contains(&b) => Ok(b - OFFSET),
        Some(_) => Err(err(offset, "byte outside the printable graph6 range")),
    }
}

pub fn decode(text: &str) -> Result<Graph, GraphError> {
    let bytes = text.as_bytes();
    let mut pos = 0;
    if bytes.starts_with(b">>graph6<<") {
        pos = 10;
    }
    let n = match bytes.get(pos) {
        None => return Err(err(pos, "missing header")),
        Some(b'~') => {
            if bytes.get(pos + 1) == Some(&b'~') {
                return Err(err(pos + 1, "order too large"));
            }
            let mut n = 0usize;
            for k in 1..=3 {
                n = n << 6 | sextet(bytes, pos + k)? as usize;
            }
            pos += 4;
            if n < 63 {
                return Err(err(pos - 4, "long header used for a small order"));
            }
            n
        }
        Some(_) => {
            let n = sextet(bytes, pos)? as usize;
            pos += 1;
            n
        }
    };
    if n > MAX_ORDER {
        return Err(err(0, "order exceeds 64"));
    }

    let mut rows = vec![0u64; n];
    let total_bits = n * n.saturating_sub(1) / 2;
    let mut bit = 0;
    'columns: for j in 1..n {
        for i in 0..j {
            if bit == total_bits {
                break 'columns;
            }
            let byte = sextet(bytes, pos + bit / 6)?;
            if byte >> (5 - bit % 6) & 1 == 1 {
                rows[i] |= 1 << j;
                rows[j] |= 1 << i;
            }
            bit += 1;
        }
    }
    let end = pos + body_len(n);
    if total_bits % 6 != 0 {
        let last = sextet(bytes, end - 1)?;
        if last & ((1 << (6 - total_bits % 6)) - 1) != 0 {
            return Err(err(end - 1, "nonzero padding bits"));
        }
    }
    if end < bytes.len() {
        return Err(err(end, "trailing bytes after graph body"));
    }
    Ok(Graph::from_rows_unchecked(rows))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn header_encodes_order() {
        let g = decode("D?{").unwrap();
        assert_eq!(g.order(), 5);
        // '{' = 60 = 0b111100: vertex 4 joined to 0..=3
        assert_eq!(g.edges().collect::<Vec<_>>(), vec![(0, 4), (1, 4), (2, 4), (3, 4)]);
        assert_eq!(encode(&g), "D?{");
    }

    #[test]
    fn small_known_strings() {
        assert_eq!(encode(&Graph::empty(0).unwrap()), "?");
        assert_eq!(encode(&Graph::empty(1).unwrap()), "@");
        assert_eq!(encode(&Graph::complete(2).unwrap()), "A_");
        assert_eq!(encode(&Graph::complete(3).unwrap()), "Bw");
        assert_eq!(encode(&Graph::complete(4).unwrap()), "C~");
        assert_eq!(encode(&Graph::cycle(5).unwrap()), "Dhc");
    }

    #[test]
    fn long_header() {
        let g = Graph::path(63).unwrap();
        let s = encode(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode(&s).unwrap(), g);
        let g = Graph::complete(64).unwrap();
        assert_eq!(decode(&encode(&g)).unwrap(), g);
    }

    #[test]
    fn decode_errors_carry_offsets() {
        assert_eq!(decode(""), Err(err(0, "missing header")));
        assert_eq!(decode("D?"), Err(err(2, "truncated input")));
        assert_eq!(decode("D? "), Err(err(2, "byte outside the printable graph6 range")));
        assert_eq!(decode("D?{?"), Err(err(3, "trailing bytes after graph body")));
        assert_eq!(decode("D?}"), Err(err(2, "nonzero padding bits")));
        assert!(matches!(decode("~~??????"), Err(GraphError::Graph6 { offset: 1, .. })));
        assert!(matches!(decode("~?AA"), Err(GraphError::Graph6 { offset: 0, .. })));
    }

    #[test]
    fn optional_marker_is_accepted() {
        assert_eq!(decode(">>graph6<<Bw").unwrap(), Graph::complete(3).unwrap());
    }
}
