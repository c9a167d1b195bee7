//! Text encodings for graphs: graph6 and DIMACS edge format.

mod dimacs;
mod graph6;

pub use dimacs::{parse_dimacs, to_dimacs};
pub use graph6::{parse_graph6, parse_graph6_lines, to_graph6};

use thiserror::Error;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("empty input")]
    Empty,
    #[error("graph6: invalid byte 0x{byte:02x} at offset {offset}")]
    InvalidByte { offset: usize, byte: u8 },
    #[error("graph6: malformed size header")]
    MalformedHeader,
    #[error("graph6: expected {expected} data bytes, found {found}")]
    Length { expected: usize, found: usize },
    #[error("graph6: nonzero padding bits")]
    Padding,
    #[error("unsupported graph encoding: {0}")]
    Unsupported(&'static str),
    #[error("line {line}: {message}")]
    Dimacs { line: usize, message: String },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Output encoding for graphs.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum GraphFormat {
    #[default]
    Graph6,
    Dimacs,
}

impl GraphFormat {
    pub fn write(self, g: &Graph) -> String {
        match self {
            GraphFormat::Graph6 => {
                let mut s = to_graph6(g);
                s.push('\n');
                s
            }
            GraphFormat::Dimacs => to_dimacs(g),
        }
    }
}

impl std::str::FromStr for GraphFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            "dimacs" => Ok(GraphFormat::Dimacs),
            other => Err(format!("unknown graph format `{other}`")),
        }
    }
}

/// Reads either a single DIMACS document or a sequence of graph6 lines.
pub fn read_graphs(text: &str) -> Result<Vec<Graph>, FormatError> {
    let first = text.lines().map(str::trim).find(|l| !l.is_empty());
    match first {
        None => Ok(Vec::new()),
        Some(l) if l == "c" || l.starts_with("c ") || l.starts_with("p ") || l.starts_with("e ") => {
            Ok(vec![parse_dimacs(text)?])
        }
        Some(_) => parse_graph6_lines(text),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn detects_encoding() {
        let c5 = Graph::from_edges(5, (0..5).map(|i| (i, (i + 1) % 5))).unwrap();
        let dim = to_dimacs(&c5);
        assert_eq!(read_graphs(&dim).unwrap(), vec![c5.clone()]);
        let g6 = format!("{}\n\n{}\n", to_graph6(&c5), to_graph6(&c5));
        assert_eq!(read_graphs(&g6).unwrap(), vec![c5.clone(), c5]);
        assert!(read_graphs("  \n").unwrap().is_empty());
    }
}
