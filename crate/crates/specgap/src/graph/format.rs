//! graph6 (header-less), DOT, and whitespace edge-list encodings.
//!
//! graph6 follows the standard layout: N(n) then the upper triangle of the
//! adjacency matrix in column order x(0,1), x(0,2), x(1,2), x(0,3), ...,
//! packed big-endian into 6-bit groups, each offset by 63. Output carries a
//! trailing LF; `from_graph6` accepts a single optional trailing newline.

use super::{Graph, GraphError};

fn push_size(n: usize, out: &mut Vec<u8>) {
    if n <= 62 {
        out.push(63 + n as u8);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    } else {
        // up to 2^36 - 1
        out.push(126);
        out.push(126);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(63 + ((n >> shift) & 0x3f) as u8);
        }
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.n();
    let mut out = Vec::new();
    push_size(n, &mut out);
    let nbits = n * n.saturating_sub(1) / 2;
    let mut acc: u8 = 0;
    let mut filled = 0usize;
    let mut emitted = 0usize;
    for j in 1..n {
        for i in 0..j {
            acc <<= 1;
            if g.has_edge(i, j) {
                acc |= 1;
            }
            filled += 1;
            if filled == 6 {
                out.push(63 + acc);
                acc = 0;
                filled = 0;
            }
            emitted += 1;
        }
    }
    debug_assert_eq!(emitted, nbits);
    if filled > 0 {
        acc <<= 6 - filled;
        out.push(63 + acc);
    }
    let mut s = String::from_utf8(out).expect("graph6 bytes are ASCII");
    s.push('\n');
    s
}

pub fn from_graph6(text: &str) -> Result<Graph, GraphError> {
    let bad = |msg: &str| GraphError::MalformedGraph6(msg.to_string());
    let bytes: &[u8] = text.strip_suffix('\n').unwrap_or(text).as_bytes();
    if bytes.is_empty() {
        return Err(bad("empty input"));
    }
    for &b in bytes {
        if !(63..=126).contains(&b) {
            return Err(bad("byte outside printable graph6 range 63..126"));
        }
    }
    let (n, mut pos) = if bytes[0] != 126 {
        ((bytes[0] - 63) as usize, 1usize)
    } else if bytes.len() >= 2 && bytes[1] != 126 {
        if bytes.len() < 4 {
            return Err(bad("truncated 3-byte size field"));
        }
        let mut n = 0usize;
        for &b in &bytes[1..4] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 4usize)
    } else {
        if bytes.len() < 8 {
            return Err(bad("truncated 6-byte size field"));
        }
        let mut n = 0usize;
        for &b in &bytes[2..8] {
            n = (n << 6) | (b - 63) as usize;
        }
        (n, 8usize)
    };
    let nbits = n * n.saturating_sub(1) / 2;
    let expect = nbits.div_ceil(6);
    if bytes.len() - pos != expect {
        return Err(bad(&format!(
            "expected {} data bytes for n={}, found {}",
            expect,
            n,
            bytes.len() - pos
        )));
    }
    let mut edges = Vec::new();
    let mut bit = 0usize;
    let mut acc = 0u8;
    let mut left = 0usize;
    for j in 1..n {
        for i in 0..j {
            if left == 0 {
                acc = bytes[pos] - 63;
                pos += 1;
                left = 6;
            }
            if acc & 0x20 != 0 {
                edges.push((i, j));
            }
            acc <<= 1;
            acc &= 0x3f;
            left -= 1;
            bit += 1;
        }
    }
    debug_assert_eq!(bit, nbits);
    // remaining padding bits must be zero
    if left > 0 && acc != 0 {
        return Err(bad("nonzero padding bits"));
    }
    Graph::new(n, &edges)
}

pub fn to_dot(g: &Graph) -> String {
    let mut s = String::from("graph G {\n");
    for v in 0..g.n() {
        if g.degree(v) == 0 {
            s.push_str(&format!("  {};\n", v));
        }
    }
    for (u, v) in g.edges() {
        s.push_str(&format!("  {} -- {};\n", u, v));
    }
    s.push_str("}\n");
    s
}

pub fn to_edge_list(g: &Graph) -> String {
    let mut s = String::new();
    for (u, v) in g.edges() {
        s.push_str(&format!("{} {}\n", u, v));
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn k5_is_d_tilde_brace() {
        assert_eq!(Graph::complete(5).to_graph6(), "D~{\n");
    }

    #[test]
    fn rejects_trailing_garbage() {
        // '@' encodes n=1 which needs zero data bytes
        assert!(matches!(
            Graph::from_graph6("@@"),
            Err(GraphError::MalformedGraph6(_))
        ));
    }

    #[test]
    fn roundtrip_small() {
        let g = Graph::new(7, &[(0, 3), (1, 2), (2, 6), (4, 5), (0, 6)]).unwrap();
        let h = Graph::from_graph6(&g.to_graph6()).unwrap();
        assert_eq!(g, h);
    }

    #[test]
    fn roundtrip_large_order() {
        // exercises the 3-byte size field
        let g = Graph::path(100);
        assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
        let g = Graph::path(1000);
        assert_eq!(Graph::from_graph6(&g.to_graph6()).unwrap(), g);
    }

    #[test]
    fn dot_and_edges_have_trailing_newline() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert_eq!(g.to_dot(), "graph G {\n  2;\n  0 -- 1;\n}\n");
        assert_eq!(g.to_edge_list(), "0 1\n");
    }
}
