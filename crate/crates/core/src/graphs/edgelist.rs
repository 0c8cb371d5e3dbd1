//! Line-oriented edge-list format:
//!
//! ```text
//! # comment
//! n 3 a b c
//! e a b
//! e b c
//! ```
//!
//! The writer is the [`Display`](std::fmt::Display) impl of [`SimpleGraph`].

use super::{GraphError, Result, SimpleGraph};

fn parse_error(line: usize, msg: impl Into<String>) -> GraphError {
    GraphError::Parse { line, msg: msg.into() }
}

/// Strip a trailing `#` comment and surrounding whitespace.
pub(crate) fn content(line: &str) -> &str {
    line.split('#').next().unwrap_or("").trim()
}

impl SimpleGraph {
    pub fn parse_edge_list(text: &str) -> Result<Self> {
        Self::parse_edge_list_with(text, |_, _| Ok(false))
    }

    /// Parse the edge-list lines of `text`, handing every other non-empty
    /// line to `extra`, which returns whether it recognised the line.
    pub(crate) fn parse_edge_list_with(
        text: &str,
        mut extra: impl FnMut(usize, &[&str]) -> Result<bool>,
    ) -> Result<Self> {
        let mut graph: Option<SimpleGraph> = None;
        for (no, raw) in text.lines().enumerate() {
            let line = no + 1;
            let fields: Vec<&str> = content(raw).split_whitespace().collect();
            match fields.as_slice() {
                [] => {}
                ["n", count, labels @ ..] => {
                    if graph.is_some() {
                        return Err(parse_error(line, "repeated `n` line"));
                    }
                    let count: usize = count.parse().map_err(|_| parse_error(line, format!("bad count `{count}`")))?;
                    if count != labels.len() {
                        return Err(parse_error(
                            line,
                            format!("declared {count} vertices but listed {}", labels.len()),
                        ));
                    }
                    graph = Some(SimpleGraph::edgeless(labels.iter().copied())?);
                }
                ["e", u, v] => {
                    let g = graph.as_mut().ok_or_else(|| parse_error(line, "`e` before `n`"))?;
                    let (i, j) = (g.index_of(u)?, g.index_of(v)?);
                    g.insert_edge(i, j)?;
                }
                _ if extra(line, &fields)? => {}
                _ => return Err(parse_error(line, format!("unrecognised line `{}`", content(raw)))),
            }
        }
        graph.ok_or_else(|| parse_error(0, "missing `n` line"))
    }

    /// Accept either the edge-list format or a single graph6 line.
    pub fn parse_any(text: &str) -> Result<Self> {
        let first = text.lines().map(content).find(|l| !l.is_empty()).unwrap_or("");
        if first.starts_with("n ") || first == "n" {
            Self::parse_edge_list(text)
        } else {
            Self::from_graph6(first)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_and_print() {
        let text = "# path\nn 3 a b c\ne a b  # first\ne b c\n";
        let g = SimpleGraph::parse_edge_list(text).unwrap();
        assert_eq!(g.edges(), vec![(0, 1), (1, 2)]);
        assert_eq!(g.to_string(), "n 3 a b c\ne a b\ne b c\n");
        assert_eq!(SimpleGraph::parse_edge_list(&g.to_string()).unwrap(), g);
    }

    #[test]
    fn errors_carry_line_numbers() {
        assert!(matches!(SimpleGraph::parse_edge_list("n 2 a b\nx y\n"), Err(GraphError::Parse { line: 2, .. })));
        assert!(matches!(SimpleGraph::parse_edge_list("e a b\n"), Err(GraphError::Parse { line: 1, .. })));
        assert!(matches!(SimpleGraph::parse_edge_list("n 3 a b\n"), Err(GraphError::Parse { line: 1, .. })));
        assert_eq!(
            SimpleGraph::parse_edge_list("n 2 a b\ne a q\n").unwrap_err(),
            GraphError::UnknownVertex("q".into())
        );
        assert!(SimpleGraph::parse_edge_list("").is_err());
        assert!(SimpleGraph::parse_edge_list("n 1 a\nn 1 b\n").is_err());
    }

    #[test]
    fn auto_detects_graph6() {
        assert_eq!(SimpleGraph::parse_any("D?{\n").unwrap().edge_count(), 4);
        assert_eq!(SimpleGraph::parse_any("n 1 a\n").unwrap().n(), 1);
    }
}
