//! Plain-text edge lists: a header line `n m`, then `m` lines `u v` with
//! 0-based vertex ids. Blank lines and `#` comments are ignored.

use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{normalize, Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EdgeListError {
    #[error("empty input: expected a header line \"n m\"")]
    MissingHeader,
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: {source}")]
    Graph {
        line: usize,
        #[source]
        source: GraphError,
    },
    #[error("header announces {expected} edges but {found} were given")]
    EdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Invalid(#[from] GraphError),
}

fn parse_pair(line: usize, text: &str, what: &str) -> Result<(usize, usize), EdgeListError> {
    let fields: Vec<&str> = text.split_whitespace().collect();
    if fields.len() != 2 {
        return Err(EdgeListError::Syntax {
            line,
            message: format!("expected two integers ({what}), found {} fields", fields.len()),
        });
    }
    let num = |s: &str| {
        s.parse::<usize>().map_err(|_| EdgeListError::Syntax {
            line,
            message: format!("'{s}' is not a non-negative integer"),
        })
    };
    Ok((num(fields[0])?, num(fields[1])?))
}

/// Parses an edge list. Errors carry the 1-based line number.
///
/// ```
/// use unicyclic_ga::edgelist::parse_edge_list;
///
/// let g = parse_edge_list("4 4\n0 1\n1 2\n2 0\n0 3\n").unwrap();
/// assert_eq!((g.order(), g.size()), (4, 4));
/// assert!(parse_edge_list("2 1\n1 x\n").unwrap_err().to_string().starts_with("line 2"));
/// ```
pub fn parse_edge_list(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.split('#').next().unwrap_or("").trim()))
        .filter(|(_, l)| !l.is_empty());
    let (hline, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let (n, m) = parse_pair(hline, header, "n m")?;
    if n == 0 {
        return Err(EdgeListError::Graph {
            line: hline,
            source: GraphError::NoVertices,
        });
    }
    let mut edges = Vec::with_capacity(m);
    let mut seen = std::collections::HashSet::new();
    for (line, l) in lines {
        let (u, v) = parse_pair(line, l, "u v")?;
        let source = if u >= n || v >= n {
            Some(GraphError::OutOfRange { u, v, n })
        } else if u == v {
            Some(GraphError::SelfLoop { v })
        } else if !seen.insert(normalize((u, v))) {
            let (a, b) = normalize((u, v));
            Some(GraphError::DuplicateEdge { u: a, v: b })
        } else {
            None
        };
        if let Some(source) = source {
            return Err(EdgeListError::Graph { line, source });
        }
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::EdgeCount {
            expected: m,
            found: edges.len(),
        });
    }
    Ok(Graph::new(n, edges)?)
}

/// Writes `g` in the format read by [`parse_edge_list`].
pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{} {}\n", g.order(), g.size());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let g = Graph::new(5, [(0, 1), (1, 2), (2, 0), (0, 3), (3, 4)]).unwrap();
        let text = write_edge_list(&g);
        assert_eq!(text, "5 5\n0 1\n0 2\n0 3\n1 2\n3 4\n");
        assert_eq!(parse_edge_list(&text).unwrap(), g);
    }

    #[test]
    fn comments_and_blank_lines() {
        let g = parse_edge_list("# paw\n4 4\n\n0 1  # cycle\n1 2\n2 0\n0 3\n").unwrap();
        assert_eq!(g.size(), 4);
    }

    #[test]
    fn errors_name_the_line() {
        let cases = [
            ("", "empty input"),
            ("3\n", "line 1: expected two integers"),
            ("3 2\n0 1\n1 x\n", "line 3: 'x' is not"),
            ("3 2\n0 1\n1 -2\n", "line 3: '-2' is not"),
            ("3 2\n0 1\n1 3\n", "line 3: edge (1, 3)"),
            ("3 2\n0 1\n1 1\n", "line 3: self-loop"),
            ("3 2\n0 1\n1 0\n", "line 3: duplicate edge"),
            ("3 3\n0 1\n1 2\n", "header announces 3 edges but 2"),
            ("0 0\n", "line 1:"),
        ];
        for (input, prefix) in cases {
            let msg = parse_edge_list(input).unwrap_err().to_string();
            assert!(msg.starts_with(prefix), "{input:?}: {msg}");
        }
    }
}
