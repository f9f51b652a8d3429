//! Edge-list text format: a header line `n m`, then m lines `u v` with
//! 0-indexed endpoints. `#` starts a comment; blank lines are skipped.

use alloc::vec::Vec;

use crate::graph::{Graph, GraphError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EdgeListError {
    #[error("missing 'n m' header line")]
    MissingHeader,
    #[error("line {line}: expected {expected}, found '{found}'")]
    Malformed {
        line: usize,
        expected: &'static str,
        found: alloc::string::String,
    },
    #[error("expected {expected} edge lines, found {found}")]
    WrongEdgeCount { expected: usize, found: usize },
    #[error(transparent)]
    Graph(#[from] GraphError),
}

fn parse_fields<const K: usize>(
    line_no: usize,
    text: &str,
    expected: &'static str,
) -> Result<[usize; K], EdgeListError> {
    let mut out = [0usize; K];
    let mut fields = text.split_whitespace();
    for slot in &mut out {
        let field = fields.next().ok_or_else(|| EdgeListError::Malformed {
            line: line_no,
            expected,
            found: text.into(),
        })?;
        *slot = field.parse().map_err(|_| EdgeListError::Malformed {
            line: line_no,
            expected,
            found: text.into(),
        })?;
    }
    if fields.next().is_some() {
        return Err(EdgeListError::Malformed { line: line_no, expected, found: text.into() });
    }
    Ok(out)
}

/// Parse the edge-list text format. The returned graph may be disconnected;
/// connectivity is an analysis precondition.
pub fn parse_edgelist(text: &str) -> Result<Graph, EdgeListError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(idx, raw)| (idx + 1, raw.split('#').next().unwrap_or("").trim()))
        .filter(|(_, s)| !s.is_empty());

    let (line_no, header) = lines.next().ok_or(EdgeListError::MissingHeader)?;
    let [n, m] = parse_fields::<2>(line_no, header, "header 'n m'")?;

    let mut edges = Vec::with_capacity(m);
    for (line_no, body) in lines {
        if edges.len() == m {
            return Err(EdgeListError::WrongEdgeCount { expected: m, found: m + 1 });
        }
        let [u, v] = parse_fields::<2>(line_no, body, "edge 'u v'")?;
        edges.push((u, v));
    }
    if edges.len() != m {
        return Err(EdgeListError::WrongEdgeCount { expected: m, found: edges.len() });
    }
    Ok(Graph::build(n, edges)?)
}
