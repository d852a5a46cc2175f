//! Text formats: graph6 and a line-based edge list.
//!
//! Edge list grammar: `"n; u-v u-v ..."`, e.g. `"5; 0-1 1-2"`. The edge part
//! may be empty (`"3;"` is three isolated vertices).
//!
//! graph6 is the standard ASCII encoding: byte `n + 63` for the order
//! (orders < 63 only, which covers this crate), then the upper triangle of
//! the adjacency matrix read column by column, packed into 6-bit groups,
//! each stored as `bits + 63`.

use super::{Edge, Graph};
use crate::error::GraphError;

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = format!("{};", g.vertex_count());
    for &(u, v) in g.edges() {
        s.push_str(&format!(" {u}-{v}"));
    }
    s
}

pub fn parse_edge_list(text: &str) -> Result<Graph, GraphError> {
    let semi = text.find(';').ok_or_else(|| GraphError::Parse {
        position: text.len(),
        message: "expected ';' after the vertex count".into(),
    })?;
    let n: usize = text[..semi].trim().parse().map_err(|_| GraphError::Parse {
        position: 0,
        message: format!("invalid vertex count {:?}", text[..semi].trim()),
    })?;
    let mut edges: Vec<Edge> = Vec::new();
    let body = &text[semi + 1..];
    let mut offset = semi + 1;
    for token in body.split_whitespace() {
        let pos = offset + body[offset - semi - 1..].find(token).unwrap_or(0);
        let dash = token.find('-').ok_or_else(|| GraphError::Parse {
            position: pos,
            message: format!("expected 'u-v', got {token:?}"),
        })?;
        let u: usize = token[..dash].parse().map_err(|_| GraphError::Parse {
            position: pos,
            message: format!("invalid endpoint in {token:?}"),
        })?;
        let v: usize = token[dash + 1..].parse().map_err(|_| GraphError::Parse {
            position: pos,
            message: format!("invalid endpoint in {token:?}"),
        })?;
        edges.push((u, v));
        offset = pos + token.len();
    }
    Graph::new(n, edges)
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    assert!(n < 63, "graph6 writer here supports orders below 63");
    let mut out = String::new();
    out.push((n as u8 + 63) as char);
    let mut bits: Vec<bool> = Vec::with_capacity(n * (n - 1) / 2);
    for v in 1..n {
        for u in 0..v {
            bits.push(g.has_edge(u, v));
        }
    }
    while bits.len() % 6 != 0 {
        bits.push(false);
    }
    for chunk in bits.chunks(6) {
        let mut val = 0u8;
        for &b in chunk {
            val = (val << 1) | b as u8;
        }
        out.push((val + 63) as char);
    }
    out
}

pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let line = text.trim();
    let line = line.strip_prefix(">>graph6<<").unwrap_or(line);
    let bytes = line.as_bytes();
    if bytes.is_empty() {
        return Err(GraphError::Parse { position: 0, message: "empty graph6 string".into() });
    }
    if bytes[0] == 126 {
        return Err(GraphError::Parse {
            position: 0,
            message: "multi-byte graph6 orders (n >= 63) are not supported".into(),
        });
    }
    if !(63..=125).contains(&bytes[0]) {
        return Err(GraphError::Parse {
            position: 0,
            message: format!("invalid graph6 order byte {}", bytes[0]),
        });
    }
    let n = (bytes[0] - 63) as usize;
    let need_bits = n * (n - 1) / 2;
    let need_bytes = need_bits.div_ceil(6);
    if bytes.len() - 1 != need_bytes {
        return Err(GraphError::Parse {
            position: bytes.len().min(1 + need_bytes),
            message: format!("expected {} data bytes for n={}, got {}", need_bytes, n, bytes.len() - 1),
        });
    }
    let mut bits = Vec::with_capacity(need_bytes * 6);
    for (i, &b) in bytes[1..].iter().enumerate() {
        if !(63..=126).contains(&b) {
            return Err(GraphError::Parse {
                position: 1 + i,
                message: format!("invalid graph6 data byte {b}"),
            });
        }
        let val = b - 63;
        for k in (0..6).rev() {
            bits.push((val >> k) & 1 == 1);
        }
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
    Graph::new(n, edges)
}

/// Parses either format, sniffing on the presence of `';'`.
pub fn parse_graph(text: &str) -> Result<Graph, GraphError> {
    if text.contains(';') {
        parse_edge_list(text)
    } else {
        from_graph6(text)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::complete_graph;

    #[test]
    fn edge_list_round_trip() {
        let g = parse_graph("5; 0-1 1-2").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(g.edge_count(), 2);
        assert_eq!(parse_graph(&to_edge_list(&g)).unwrap(), g);
        let iso = parse_graph("3;").unwrap();
        assert_eq!(iso.edge_count(), 0);
    }

    #[test]
    fn edge_list_errors() {
        assert!(matches!(parse_graph("3; 0-0"), Err(GraphError::Loop { v: 0 })));
        assert!(parse_graph("x; 0-1").is_err());
        assert!(parse_graph("3; 05").is_err());
        assert!(parse_graph("3; 0-9").is_err());
    }

    #[test]
    fn graph6_known_values() {
        // K4 encodes as "C~"
        assert_eq!(to_graph6(&complete_graph(4)), "C~");
        assert_eq!(from_graph6("C~").unwrap(), complete_graph(4));

        // 5-vertex graph with edges 0-2, 0-4, 1-3, 3-4 encodes as "DQc"
        let g = Graph::new(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&g), "DQc");
        assert_eq!(from_graph6("DQc").unwrap(), g);
    }

    #[test]
    fn graph6_round_trip_families() {
        for n in 1..10 {
            let g = complete_graph(n);
            assert_eq!(from_graph6(&to_graph6(&g)).unwrap(), g);
        }
        let plate = crate::graph::quad_plate(3);
        assert_eq!(from_graph6(&to_graph6(&plate)).unwrap(), plate);
    }

    #[test]
    fn graph6_rejects_malformed() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("C").is_err());
        assert!(from_graph6("C~~").is_err());
        assert!(from_graph6("~??").is_err());
    }
}
