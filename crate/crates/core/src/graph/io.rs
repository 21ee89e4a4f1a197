//! Edge-list files: a header line `n m`, then `m` lines `u v` with 0-indexed
//! endpoints. Lines starting with `#` and blank lines are ignored.

use std::fmt::Write as _;
use std::path::Path;

use super::Graph;
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (line, header) = lines.next().ok_or(Error::Parse {
        line: 0,
        message: "missing `n m` header".into(),
    })?;
    let (n, m) = two_numbers(line, header)?;

    let mut pairs = Vec::with_capacity(m);
    for (line, l) in lines {
        pairs.push(two_numbers(line, l)?);
    }
    if pairs.len() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("header declares {m} edges, found {}", pairs.len()),
        });
    }
    let g = Graph::from_edge_list(n, pairs)?;
    if g.size() != m {
        return Err(Error::Parse {
            line: 0,
            message: format!("duplicate edges: {m} listed, {} distinct", g.size()),
        });
    }
    Ok(g)
}

fn two_numbers(line: usize, text: &str) -> Result<(usize, usize)> {
    let bad = |message: String| Error::Parse { line, message };
    let mut it = text.split_whitespace();
    let mut next = || -> Result<usize> {
        let tok = it
            .next()
            .ok_or_else(|| bad(format!("expected two integers in {text:?}")))?;
        tok.parse()
            .map_err(|_| bad(format!("not a non-negative integer: {tok:?}")))
    };
    let a = next()?;
    let b = next()?;
    if it.next().is_some() {
        return Err(bad(format!("trailing tokens in {text:?}")));
    }
    Ok((a, b))
}

pub fn read_edge_list(path: impl AsRef<Path>) -> Result<Graph> {
    parse_edge_list(&std::fs::read_to_string(path)?)
}

/// Serializes with edges in lexicographic order.
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {}", g.order(), g.size());
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Family;

    #[test]
    fn parses_with_comments() {
        let g = parse_edge_list("# triangle\n3 3\n0 1\n\n1 2\n# closing edge\n2 0\n").unwrap();
        assert_eq!(g.edges(), &[(0, 1), (0, 2), (1, 2)]);
    }

    #[test]
    fn writer_sorts_edges() {
        let g = Graph::from_edge_list(4, [(3, 2), (1, 0), (2, 0)]).unwrap();
        assert_eq!(write_edge_list(&g), "4 3\n0 1\n0 2\n2 3\n");
    }

    #[test]
    fn round_trip_family() {
        let g = Family::Helm(7).build().unwrap();
        assert_eq!(parse_edge_list(&write_edge_list(&g)).unwrap(), g);
    }

    #[test]
    fn malformed_inputs() {
        assert!(matches!(parse_edge_list(""), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_edge_list("3 2\n0 1\n"),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 x\n"),
            Err(Error::Parse { line: 2, .. })
        ));
        assert!(matches!(
            parse_edge_list("3 1\n0 1 2\n"),
            Err(Error::Parse { .. })
        ));
        assert_eq!(parse_edge_list("3 1\n1 1\n"), Err(Error::SelfLoop(1)));
        assert!(matches!(
            parse_edge_list("2 2\n0 1\n1 0\n"),
            Err(Error::Parse { .. })
        ));
    }
}
