use super::FormatError;
use crate::graph::{Graph, MAX_VERTICES};

const HEADER: &str = ">>graph6<<";

fn push_size(out: &mut Vec<u8>, n: usize) {
    if n <= 62 {
        out.push(n as u8 + 63);
    } else if n <= 258_047 {
        out.push(126);
        for shift in [12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    } else {
        out.extend([126, 126]);
        for shift in [30, 24, 18, 12, 6, 0] {
            out.push(((n >> shift) & 63) as u8 + 63);
        }
    }
}

/// Encodes `g` in graph6, without header or trailing newline.
pub fn to_graph6(g: &Graph) -> String {
    let n = g.order();
    let mut out = Vec::with_capacity(4 + (n * n.saturating_sub(1) / 2).div_ceil(6));
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push(acc + 63);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push((acc << (6 - bits)) + 63);
    }
    String::from_utf8(out).expect("graph6 output is printable ASCII")
}

fn sextet(bytes: &[u8], offset: usize) -> Result<u64, FormatError> {
    match bytes.get(offset) {
        Some(&b) if (63..=126).contains(&b) => Ok((b - 63) as u64),
        Some(&b) => Err(FormatError::InvalidByte { offset, byte: b }),
        None => Err(FormatError::MalformedHeader),
    }
}

/// Parses one graph6 string. Only the canonical (shortest) size header is
/// accepted so that encoding the result reproduces the input exactly.
pub fn parse_graph6(line: &str) -> Result<Graph, FormatError> {
    let line = line.trim();
    let line = line.strip_prefix(HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    match bytes.first() {
        None => return Err(FormatError::Empty),
        Some(b':') => return Err(FormatError::Unsupported("sparse6")),
        Some(b'&') => return Err(FormatError::Unsupported("digraph6")),
        _ => {}
    }
    let (n, mut pos) = if bytes[0] != 126 {
        (sextet(bytes, 0)? as usize, 1)
    } else if bytes.get(1) != Some(&126) {
        let n = (1..4).try_fold(0u64, |acc, i| Ok::<_, FormatError>((acc << 6) | sextet(bytes, i)?))?;
        if n < 63 {
            return Err(FormatError::MalformedHeader);
        }
        (n as usize, 4)
    } else {
        let n = (2..8).try_fold(0u64, |acc, i| Ok::<_, FormatError>((acc << 6) | sextet(bytes, i)?))?;
        if n <= 258_047 {
            return Err(FormatError::MalformedHeader);
        }
        (n as usize, 8)
    };
    if n > MAX_VERTICES {
        return Err(crate::graph::GraphError::TooManyVertices { n }.into());
    }
    let total_bits = n * n.saturating_sub(1) / 2;
    let expected = total_bits.div_ceil(6);
    let found = bytes.len() - pos;
    if found != expected {
        return Err(FormatError::Length { expected, found });
    }
    let mut g = Graph::empty(n)?;
    let mut bit = 0usize;
    let mut current = 0u64;
    for j in 1..n {
        for i in 0..j {
            if bit.is_multiple_of(6) {
                current = sextet(bytes, pos)?;
                pos += 1;
            }
            if current & (1 << (5 - bit % 6)) != 0 {
                g.add_edge(i, j)?;
            }
            bit += 1;
        }
    }
    if !bit.is_multiple_of(6) {
        let used = bit % 6;
        if current & ((1 << (6 - used)) - 1) != 0 {
            return Err(FormatError::Padding);
        }
    }
    Ok(g)
}

/// Parses one graph per non-blank line.
pub fn parse_graph6_lines(text: &str) -> Result<Vec<Graph>, FormatError> {
    text.lines()
        .map(str::trim)
        .filter(|l| !l.is_empty())
        .map(parse_graph6)
        .collect()
}
