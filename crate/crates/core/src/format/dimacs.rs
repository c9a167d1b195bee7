use std::fmt::Write;

use super::FormatError;
use crate::graph::Graph;

/// `p edge N M` followed by one `e u v` line per edge, 1-based, `u < v`, lexicographic.
pub fn to_dimacs(g: &Graph) -> String {
    let edges = g.edges();
    let mut out = String::new();
    writeln!(out, "p edge {} {}", g.order(), edges.len()).unwrap();
    for (u, v) in edges {
        writeln!(out, "e {} {}", u + 1, v + 1).unwrap();
    }
    out
}

fn err(line: usize, message: impl Into<String>) -> FormatError {
    FormatError::Dimacs {
        line,
        message: message.into(),
    }
}

/// Parses a DIMACS edge document. Comment lines start with `c`. Loops,
/// repeated edges and an edge count that disagrees with the header are errors.
pub fn parse_dimacs(text: &str) -> Result<Graph, FormatError> {
    let mut graph: Option<(Graph, usize)> = None;
    let mut seen = 0usize;
    for (idx, raw) in text.lines().enumerate() {
        let lineno = idx + 1;
        let mut fields = raw.split_whitespace();
        match fields.next() {
            None | Some("c") => continue,
            Some("p") => {
                if graph.is_some() {
                    return Err(err(lineno, "duplicate problem line"));
                }
                let kind = fields.next();
                if !matches!(kind, Some("edge") | Some("col")) {
                    return Err(err(lineno, "expected `p edge N M`"));
                }
                let n = parse_num(fields.next(), lineno)?;
                let m = parse_num(fields.next(), lineno)?;
                if fields.next().is_some() {
                    return Err(err(lineno, "trailing fields in problem line"));
                }
                graph = Some((Graph::empty(n)?, m));
            }
            Some("e") => {
                let Some((g, _)) = graph.as_mut() else {
                    return Err(err(lineno, "edge before problem line"));
                };
                let u = parse_num(fields.next(), lineno)?;
                let v = parse_num(fields.next(), lineno)?;
                if fields.next().is_some() {
                    return Err(err(lineno, "trailing fields in edge line"));
                }
                let n = g.order();
                if u == 0 || v == 0 || u > n || v > n {
                    return Err(err(lineno, format!("vertex index out of range 1..={n}")));
                }
                if u == v {
                    return Err(err(lineno, format!("self-loop at vertex {u}")));
                }
                if g.has_edge(u - 1, v - 1) {
                    return Err(err(lineno, format!("repeated edge {u} {v}")));
                }
                g.add_edge(u - 1, v - 1)?;
                seen += 1;
            }
            Some(other) => return Err(err(lineno, format!("unknown line type `{other}`"))),
        }
    }
    let (g, m) = graph.ok_or(FormatError::Empty)?;
    if seen != m {
        return Err(err(0, format!("header declares {m} edges, found {seen}")));
    }
    Ok(g)
}

fn parse_num(field: Option<&str>, line: usize) -> Result<usize, FormatError> {
    let f = field.ok_or_else(|| err(line, "missing field"))?;
    f.parse()
        .map_err(|_| err(line, format!("invalid integer `{f}`")))
}
