//! Bit-exact graph6 text serialization.
//!
//! The upper triangle of the adjacency matrix is packed column by column,
//! six bits per byte at offset 63. Sizes use one byte up to n = 62, a `~`
//! escape with three bytes up to n = 258047, and `~~` with six bytes up to
//! n = 68719476735. Decoding accepts an optional `>>graph6<<` header and
//! rejects anything non-canonical, reporting the offending byte offset.

use crate::graph::{Graph, GraphBuilder};
use thiserror::Error;

#[derive(Debug, Error, PartialEq, Eq)]
#[error("graph6 error at byte {offset}: {message}")]
pub struct Graph6Error {
    pub offset: usize,
    pub message: String,
}

fn err<T>(offset: usize, message: impl Into<String>) -> Result<T, Graph6Error> {
    Err(Graph6Error {
        offset,
        message: message.into(),
    })
}

const HEADER: &str = ">>graph6<<";

pub fn encode_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out: Vec<u8> = Vec::new();
    encode_size(&mut out, n as u64);
    let mut acc: u32 = 0;
    let mut nbits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | u32::from(g.has_edge(i, j));
            nbits += 1;
            if nbits == 6 {
                out.push(63 + acc as u8);
                acc = 0;
                nbits = 0;
            }
        }
    }
    if nbits > 0 {
        out.push(63 + (acc << (6 - nbits)) as u8);
    }
    String::from_utf8(out).unwrap()
}

fn encode_size(out: &mut Vec<u8>, n: u64) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(b'~');
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else if n <= 68_719_476_735 {
        out.push(b'~');
        out.push(b'~');
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 63) as u8);
        }
    } else {
        // 2^36 - 1 is the format ceiling; a graph this large cannot be
        // materialized anyway.
        unreachable!("graph too large for graph6");
    }
}

pub fn decode_graph6(text: &str) -> Result<Graph, Graph6Error> {
    let mut s = text.as_bytes();
    let mut base = 0;
    if text.starts_with(HEADER) {
        s = &s[HEADER.len()..];
        base = HEADER.len();
    }
    if s.is_empty() {
        return err(base, "empty input");
    }
    let (n, consumed) = decode_size(s, base)?;
    let body = &s[consumed..];
    let nbits = n * (n - 1) / 2; // n fits in usize by decode_size's cap
    let need = nbits.div_ceil(6);
    if body.len() < need {
        return err(base + consumed + body.len(), "input truncated");
    }
    if body.len() > need {
        return err(base + consumed + need, "trailing bytes after graph body");
    }
    let mut b = GraphBuilder::new(n);
    let mut bit = 0usize;
    let (mut i, mut j) = (0usize, 1usize);
    for (k, &byte) in body.iter().enumerate() {
        if !(63..=126).contains(&byte) {
            return err(base + consumed + k, format!("invalid byte 0x{byte:02x}"));
        }
        let v = byte - 63;
        for t in (0..6).rev() {
            let set = (v >> t) & 1 == 1;
            if bit < nbits {
                if set {
                    b.add_edge(i, j);
                }
                i += 1;
                if i == j {
                    i = 0;
                    j += 1;
                }
            } else if set {
                return err(base + consumed + k, "nonzero padding bits");
            }
            bit += 1;
        }
    }
    Ok(b.freeze())
}

fn decode_size(s: &[u8], base: usize) -> Result<(usize, usize), Graph6Error> {
    let sextet = |b: u8, at: usize| -> Result<u64, Graph6Error> {
        if (63..=126).contains(&b) {
            Ok(u64::from(b - 63))
        } else {
            err(base + at, format!("invalid size byte 0x{b:02x}"))
        }
    };
    if s[0] != b'~' {
        let n = sextet(s[0], 0)?;
        if n > 62 {
            return err(base, "invalid size byte");
        }
        return Ok((n as usize, 1));
    }
    if s.len() >= 2 && s[1] == b'~' {
        if s.len() < 8 {
            return err(base + s.len(), "truncated 8-byte size");
        }
        let mut n: u64 = 0;
        for k in 0..6 {
            n = (n << 6) | sextet(s[2 + k], 2 + k)?;
        }
        if n < 258_048 {
            return err(base, "non-canonical long size encoding");
        }
        // Reject sizes whose adjacency could not fit in memory; the body
        // length check would fail anyway, but n*(n-1)/2 must not overflow.
        if n > 1 << 32 {
            return err(base, "graph too large to materialize");
        }
        Ok((n as usize, 8))
    } else {
        if s.len() < 4 {
            return err(base + s.len(), "truncated 4-byte size");
        }
        let mut n: u64 = 0;
        for k in 0..3 {
            n = (n << 6) | sextet(s[1 + k], 1 + k)?;
        }
        if n < 63 {
            return err(base, "non-canonical medium size encoding");
        }
        Ok((n as usize, 4))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{build_graph, complete_graph};

    // Expected strings cross-checked against an independent encoder.
    #[test]
    fn known_encodings() {
        assert_eq!(encode_graph6(&complete_graph(3)), "Bw");
        assert_eq!(encode_graph6(&complete_graph(0)), "?");
        assert_eq!(encode_graph6(&complete_graph(1)), "@");
        assert_eq!(encode_graph6(&complete_graph(5)), "D~{");
        let p4 = build_graph(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(encode_graph6(&p4), "Ch");
        let petersen = build_graph(
            10,
            &[
                (0, 1),
                (1, 2),
                (2, 3),
                (3, 4),
                (0, 4),
                (0, 5),
                (1, 6),
                (2, 7),
                (3, 8),
                (4, 9),
                (5, 7),
                (7, 9),
                (9, 6),
                (6, 8),
                (8, 5),
            ],
        )
        .unwrap();
        assert_eq!(encode_graph6(&petersen), "IheA@GUAo");
    }

    #[test]
    fn long_size_form() {
        let g = build_graph(63, &[(0, 62)]).unwrap();
        let s = encode_graph6(&g);
        assert!(s.starts_with("~??~"));
        assert_eq!(decode_graph6(&s).unwrap(), g);
    }

    #[test]
    fn header_accepted_never_emitted() {
        let g = complete_graph(3);
        let s = encode_graph6(&g);
        assert!(!s.contains(">>"));
        assert_eq!(decode_graph6(&format!(">>graph6<<{s}")).unwrap(), g);
    }

    #[test]
    fn decode_errors() {
        // bad size char
        assert_eq!(decode_graph6("\u{1}w").unwrap_err().offset, 0);
        // truncated body
        assert_eq!(decode_graph6("B").unwrap_err().offset, 1);
        // trailing garbage
        assert_eq!(decode_graph6("Bww").unwrap_err().offset, 2);
        // nonzero padding: K2 body has one meaningful bit
        // 'A' size=2, body byte with low bits set: '~' = 63+63
        assert!(decode_graph6("A~").is_err());
        // header offsets propagate
        assert_eq!(decode_graph6(">>graph6<<B").unwrap_err().offset, 11);
    }

    #[test]
    fn roundtrip_random() {
        let mut seed = 12345u64;
        let mut rand = move || {
            seed = seed.wrapping_mul(6364136223846793005).wrapping_add(1);
            seed
        };
        for trial in 0..100 {
            let n = (rand() % 71) as usize;
            let mut edges = Vec::new();
            for u in 0..n {
                for v in (u + 1)..n {
                    if rand() % 4 == 0 {
                        edges.push((u, v));
                    }
                }
            }
            let g = build_graph(n, &edges).unwrap();
            let s = encode_graph6(&g);
            assert_eq!(decode_graph6(&s).unwrap(), g, "trial {trial} n={n}");
        }
    }
}
