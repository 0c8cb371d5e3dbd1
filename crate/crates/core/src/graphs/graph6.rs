//! graph6 encoding (bit-exact with the nauty/networkx format).

use super::{default_labels, GraphError, Result, SimpleGraph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn encode_size(n: usize, out: &mut String) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push(((n >> shift & 0x3f) as u8 + 63) as char);
        }
    }
}

impl SimpleGraph {
    pub fn to_graph6(&self) -> String {
        let n = self.n();
        let mut out = String::new();
        encode_size(n, &mut out);
        let mut acc = 0u8;
        let mut filled = 0;
        for j in 1..n {
            for i in 0..j {
                acc = acc << 1 | self.adjacent(i, j) as u8;
                filled += 1;
                if filled == 6 {
                    out.push((acc + 63) as char);
                    acc = 0;
                    filled = 0;
                }
            }
        }
        if filled > 0 {
            out.push(((acc << (6 - filled)) + 63) as char);
        }
        out
    }

    /// Decode one graph6 line (an optional `>>graph6<<` header is accepted).
    /// Vertices receive default labels.
    pub fn from_graph6(text: &str) -> Result<Self> {
        let body = text.trim_end_matches(['\n', '\r']);
        let body = body.strip_prefix(HEADER).unwrap_or(body);
        let bytes = body.as_bytes();
        if let Some(&b) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
            return Err(GraphError::Graph6(format!("byte {b:#04x} outside 63..=126")));
        }
        let (n, rest) = match bytes {
            [] => return Err(GraphError::Graph6("empty input".into())),
            [126, 126, ..] => return Err(GraphError::Graph6("more than 258047 vertices".into())),
            [126, a, b, c, rest @ ..] => {
                let n = (((a - 63) as usize) << 12) | (((b - 63) as usize) << 6) | (c - 63) as usize;
                (n, rest)
            }
            [126, ..] => return Err(GraphError::Graph6("truncated size field".into())),
            [a, rest @ ..] => ((a - 63) as usize, rest),
        };
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices(n));
        }
        let bits = n * n.saturating_sub(1) / 2;
        let expected = bits.div_ceil(6);
        if rest.len() != expected {
            return Err(GraphError::Graph6(format!(
                "expected {expected} data bytes for {n} vertices, found {}",
                rest.len()
            )));
        }
        let mut g = SimpleGraph::edgeless(default_labels(n))?;
        let bit = |k: usize| (rest[k / 6] - 63) >> (5 - k % 6) & 1 == 1;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if bit(k) {
                    g.insert_edge(i, j)?;
                }
                k += 1;
            }
        }
        if (bits..expected * 6).any(bit) {
            return Err(GraphError::Graph6("nonzero padding bits".into()));
        }
        Ok(g)
    }
}
