//! Plain-text edge-list documents.
//!
//! ```text
//! # optional comments
//! n m
//! u v      (m lines, 0-based vertex indices)
//! ```
//!
//! Unlike [`Graph::new`], the parser rejects duplicate edges: files are
//! authored artifacts and a repeated pair is almost certainly a mistake.

use std::collections::HashSet;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;

fn parse_err(line: usize, msg: impl Into<String>) -> Error {
    Error::Parse {
        line,
        msg: msg.into(),
    }
}

fn parse_pair(line_no: usize, line: &str, what: &str) -> Result<(usize, usize)> {
    let mut fields = line.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = fields
            .next()
            .ok_or_else(|| parse_err(line_no, format!("{what}: expected two integers")))?;
        tok.parse()
            .map_err(|_| parse_err(line_no, format!("{what}: `{tok}` is not a nonnegative integer")))
    };
    let a = next()?;
    let b = next()?;
    if let Some(extra) = fields.next() {
        return Err(parse_err(line_no, format!("{what}: unexpected token `{extra}`")));
    }
    Ok((a, b))
}

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (header_no, header) = lines
        .next()
        .ok_or_else(|| parse_err(1, "missing header line `n m`"))?;
    let (n, m) = parse_pair(header_no, header, "header")?;

    let mut seen = HashSet::with_capacity(m);
    let mut edges = Vec::with_capacity(m);
    for (line_no, line) in lines {
        let (u, v) = parse_pair(line_no, line, "edge")?;
        for vertex in [u, v] {
            if vertex >= n {
                return Err(parse_err(
                    line_no,
                    format!("vertex {vertex} out of range for {n} vertices"),
                ));
            }
        }
        if u == v {
            return Err(parse_err(line_no, format!("self-loop at vertex {u}")));
        }
        if !seen.insert((u.min(v), u.max(v))) {
            return Err(parse_err(line_no, format!("duplicate edge {u} {v}")));
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(parse_err(
            header_no,
            format!("header declares {m} edges but {} were listed", edges.len()),
        ));
    }
    Graph::new(n, edges)
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    writeln!(out, "{} {}", g.order(), g.size()).unwrap();
    for &(u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn parses_path() {
        let g = parse_edge_list("3 2\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::new(3, [(0, 1), (1, 2)]).unwrap());
    }

    #[test]
    fn comments_and_blank_lines_are_skipped() {
        let g = parse_edge_list("# comment\n1 0\n").unwrap();
        assert_eq!(g, Graph::empty(1));
        let g = parse_edge_list("\n# a\n2 1\n\n# b\n1 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1)]);
    }

    #[test]
    fn rejects_self_loop() {
        let err = parse_edge_list("2 1\n0 0\n").unwrap_err();
        assert_eq!(err, parse_err(2, "self-loop at vertex 0"));
    }

    #[test]
    fn rejects_malformed_documents() {
        let bad = [
            "",
            "# only a comment\n",
            "3\n",
            "3 x\n",
            "3 1 7\n0 1\n",
            "3 1\n0 3\n",
            "3 2\n0 1\n1 0\n",
            "3 2\n0 1\n",
            "3 1\n0 1\n1 2\n",
            "3 1\n0 -1\n",
        ];
        for doc in bad {
            assert!(
                matches!(parse_edge_list(doc), Err(Error::Parse { .. })),
                "accepted {doc:?}"
            );
        }
    }

    #[test]
    fn writes_header_then_sorted_edges() {
        let g = Graph::new(4, [(3, 2), (1, 0)]).unwrap();
        assert_eq!(write_edge_list(&g), "4 2\n0 1\n2 3\n");
    }

    proptest! {
        #[test]
        fn round_trip(n in 0usize..10, bits in proptest::collection::vec(any::<bool>(), 45)) {
            let pairs = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
            let edges = pairs.zip(bits).filter(|(_, keep)| *keep).map(|(e, _)| e);
            let g = Graph::new(n, edges).unwrap();
            prop_assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
        }
    }
}
