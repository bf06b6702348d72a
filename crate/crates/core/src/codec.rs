//! graph6 and plain edge-list text codecs.
//!
//! graph6 follows the published format: a size byte `n + 63` (n <= 62), then
//! the upper triangle of the adjacency matrix in column-major order packed
//! big-endian into 6-bit groups, each offset by 63 into the printable range.

use crate::graph::Graph;
use crate::{Error, Result};

const OFFSET: u8 = 63;
const MAX_G6_ORDER: usize = 62;

/// Encodes a labeled graph as a graph6 line (without newline).
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > MAX_G6_ORDER {
        return Err(Error::Graph6TooLarge { n });
    }
    let mut bytes = vec![OFFSET + n as u8];
    let mut acc: u8 = 0;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc <<= 1;
            if g.has_edge(u, v) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                bytes.push(acc + OFFSET);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        acc <<= 6 - filled;
        bytes.push(acc + OFFSET);
    }
    Ok(String::from_utf8(bytes).expect("graph6 bytes are printable ASCII"))
}

/// Decodes a graph6 line. Accepts the optional `>>graph6<<` file header.
/// Errors carry the byte offset of the first offending byte.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let mut s = text.trim_end_matches(['\n', '\r']);
    let mut base = 0;
    if let Some(rest) = s.strip_prefix(">>graph6<<") {
        s = rest;
        base = 10;
    }
    let bytes = s.as_bytes();
    if bytes.is_empty() {
        return Err(Error::Graph6 {
            offset: base,
            reason: "empty input".into(),
        });
    }
    if bytes[0] == 126 {
        // Multi-byte size headers encode n > 62, outside the supported range.
        return Err(Error::Graph6 {
            offset: base,
            reason: "orders above 62 are not supported".into(),
        });
    }
    if !(OFFSET..=126).contains(&bytes[0]) {
        return Err(Error::Graph6 {
            offset: base,
            reason: format!("size byte 0x{:02x} outside the printable range", bytes[0]),
        });
    }
    let n = (bytes[0] - OFFSET) as usize;
    let bits_needed = n * (n.saturating_sub(1)) / 2;
    let body_len = bits_needed.div_ceil(6);
    if bytes.len() != 1 + body_len {
        return Err(Error::Graph6 {
            offset: base + bytes.len().min(1 + body_len),
            reason: format!(
                "order {} needs {} body bytes, found {}",
                n,
                body_len,
                bytes.len() - 1
            ),
        });
    }
    let mut bits = Vec::with_capacity(body_len * 6);
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(OFFSET..=126).contains(&b) {
            return Err(Error::Graph6 {
                offset: base + 1 + i,
                reason: format!("byte 0x{b:02x} outside the printable range"),
            });
        }
        let v = b - OFFSET;
        for k in (0..6).rev() {
            bits.push(v >> k & 1 == 1);
        }
    }
    if bits[bits_needed..].iter().any(|&b| b) {
        return Err(Error::Graph6 {
            offset: base + bytes.len() - 1,
            reason: "trailing padding bits are nonzero".into(),
        });
    }
    let mut edges = Vec::new();
    let mut idx = 0;
    for v in 1..n {
        for u in 0..v {
            if bits[idx] {
                edges.push((u, v));
            }
            idx += 1;
        }
    }
    Graph::from_edges(n, edges)
}

/// Plain-text edge list: first line the vertex count, then one `u v` pair
/// per line. Blank lines and `#` comments are ignored.
pub fn to_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for &(u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Parses the edge-list text format.
pub fn from_edge_list(text: &str) -> Result<Graph> {
    let mut n: Option<usize> = None;
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        if n.is_none() {
            n = Some(line.parse().map_err(|_| Error::EdgeList {
                line: lineno + 1,
                reason: format!("expected a vertex count, got {line:?}"),
            })?);
            continue;
        }
        let mut parts = line.split_whitespace();
        let (u, v) = match (parts.next(), parts.next(), parts.next()) {
            (Some(a), Some(b), None) => {
                let parse = |s: &str| {
                    s.parse::<usize>().map_err(|_| Error::EdgeList {
                        line: lineno + 1,
                        reason: format!("bad endpoint {s:?}"),
                    })
                };
                (parse(a)?, parse(b)?)
            }
            _ => {
                return Err(Error::EdgeList {
                    line: lineno + 1,
                    reason: format!("expected 'u v', got {line:?}"),
                })
            }
        };
        edges.push((u, v));
    }
    let n = n.ok_or(Error::EdgeList {
        line: 1,
        reason: "missing vertex-count header".into(),
    })?;
    Graph::from_edges(n, edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families;

    #[test]
    fn known_anchors() {
        assert_eq!(to_graph6(&Graph::empty(1)).unwrap(), "@");
        assert_eq!(to_graph6(&Graph::complete(3)).unwrap(), "Bw");
        assert_eq!(to_graph6(&Graph::complete(4)).unwrap(), "C~");
    }

    #[test]
    fn round_trips() {
        for g in [
            families::path_graph(4),
            families::star_graph(7),
            Graph::empty(0),
            Graph::empty(5),
            families::t_n_p(11, 4).unwrap().complement(),
        ] {
            let enc = to_graph6(&g).unwrap();
            assert_eq!(from_graph6(&enc).unwrap(), g, "round trip failed for {enc}");
        }
    }

    #[test]
    fn accepts_header_and_newline() {
        let enc = format!(
            ">>graph6<<{}\n",
            to_graph6(&families::path_graph(4)).unwrap()
        );
        assert_eq!(from_graph6(&enc).unwrap(), families::path_graph(4));
    }

    #[test]
    fn rejects_malformed_input() {
        match from_graph6("garbage\x01") {
            Err(Error::Graph6 { .. }) => {}
            other => panic!("expected graph6 error, got {other:?}"),
        }
        // Truncated body for the declared order.
        assert!(matches!(from_graph6("D"), Err(Error::Graph6 { .. })));
        // Nonzero padding: K_2 is 'A_' (bit 1 then zero padding); 'A' + '`'
        // sets a padding bit.
        assert!(from_graph6("A_").is_ok());
        assert!(matches!(
            from_graph6("A`"),
            Err(Error::Graph6 { offset: 1, .. })
        ));
        // n > 62 marker.
        assert!(matches!(from_graph6("~??"), Err(Error::Graph6 { .. })));
        assert!(matches!(
            to_graph6(&Graph::empty(63)),
            Err(Error::Graph6TooLarge { n: 63 })
        ));
    }

    #[test]
    fn edge_list_round_trip() {
        let g = families::t_n_2(8).unwrap();
        let text = to_edge_list(&g);
        assert_eq!(from_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn edge_list_errors_carry_line_numbers() {
        match from_edge_list("4\n0 1\n1 x\n") {
            Err(Error::EdgeList { line: 3, .. }) => {}
            other => panic!("expected line-3 error, got {other:?}"),
        }
        assert!(from_edge_list("").is_err());
        assert!(from_edge_list("# only comments\n").is_err());
    }
}
