//! Text formats for graphs, tableaux, decks and switch paths.
//!
//! * Edge list: a header line `n <count>`, then one `u v` pair per line.
//!   Vertices are 0-indexed. Blank lines and lines starting with `#` are
//!   ignored.
//! * graph6: the standard printable encoding, one graph per line.
//! * JSON graph: `{"n": 5, "edges": [[0, 1], ...]}` with `u < v`.
//! * JSON tableau: `[[2, 2, 1], [3, 2], ...]`.
//! * Deck: a line holding the card count, then one graph6 card per line.
//! * Switch path: `[{"a": 1, "b": 4, "c": 0, "d": 3}, ...]`.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graph::{Graph, GraphError};
use crate::realization::SwitchPath;
use crate::reconstruction::Deck;
use crate::tableau::Tableau;

#[derive(Debug, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Malformed { line: usize, msg: String },
    #[error("graph6: {0}")]
    Graph6(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error("json: {0}")]
    Json(#[from] serde_json::Error),
}

fn malformed(line: usize, msg: impl Into<String>) -> FormatError {
    FormatError::Malformed {
        line,
        msg: msg.into(),
    }
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("n {}\n", g.vertex_count());
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

pub fn read_edge_list(text: &str) -> Result<Graph, FormatError> {
    let mut lines = content_lines(text);
    let (line, header) = lines
        .next()
        .ok_or_else(|| malformed(1, "missing `n <count>` header"))?;
    let n = match header.split_whitespace().collect::<Vec<_>>()[..] {
        ["n", count] => count
            .parse::<usize>()
            .map_err(|_| malformed(line, format!("bad vertex count `{count}`")))?,
        _ => return Err(malformed(line, "expected `n <count>`")),
    };
    let mut edges = Vec::new();
    for (line, l) in lines {
        let parsed: Vec<usize> = l
            .split_whitespace()
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| malformed(line, format!("expected two vertex indices, got `{l}`")))?;
        match parsed[..] {
            [u, v] => edges.push((u, v)),
            _ => {
                return Err(malformed(
                    line,
                    format!("expected two vertex indices, got `{l}`"),
                ))
            }
        }
    }
    Ok(Graph::from_edges(n, edges)?)
}

const GRAPH6_HEADER: &str = ">>graph6<<";

fn push_six_bits(out: &mut String, value: u64, groups: u32) {
    for i in (0..groups).rev() {
        out.push(char::from(63 + ((value >> (6 * i)) & 63) as u8));
    }
}

pub fn to_graph6(g: &Graph) -> String {
    let n = g.vertex_count();
    let mut out = String::new();
    if n <= 62 {
        push_six_bits(&mut out, n as u64, 1);
    } else if n <= 258_047 {
        out.push('~');
        push_six_bits(&mut out, n as u64, 3);
    } else {
        out.push_str("~~");
        push_six_bits(&mut out, n as u64, 6);
    }
    // upper triangle, column by column
    let mut acc = 0u64;
    let mut filled = 0;
    for v in 1..n {
        for u in 0..v {
            acc = acc << 1 | g.has_edge(u, v) as u64;
            filled += 1;
            if filled == 6 {
                push_six_bits(&mut out, acc, 1);
                acc = 0;
                filled = 0;
            }
        }
    }
    if filled > 0 {
        push_six_bits(&mut out, acc << (6 - filled), 1);
    }
    out
}

pub fn from_graph6(line: &str) -> Result<Graph, FormatError> {
    let err = |m: &str| FormatError::Graph6(m.to_string());
    let s = line.trim_end_matches(['\r', '\n']);
    let s = s.strip_prefix(GRAPH6_HEADER).unwrap_or(s);
    let bytes: Vec<u64> = s
        .bytes()
        .map(|b| {
            if (63..=126).contains(&b) {
                Ok(u64::from(b - 63))
            } else {
                Err(err(&format!("byte {b:#04x} outside the printable range")))
            }
        })
        .collect::<Result<_, _>>()?;
    let read = |at: usize, groups: usize| -> Result<u64, FormatError> {
        let chunk = bytes
            .get(at..at + groups)
            .ok_or_else(|| err("truncated size field"))?;
        Ok(chunk.iter().fold(0, |acc, &b| acc << 6 | b))
    };
    let (n, body) = match bytes.first() {
        None => return Err(err("empty input")),
        Some(&63) if bytes.get(1) == Some(&63) => (read(2, 6)?, 8),
        Some(&63) => (read(1, 3)?, 4),
        Some(&b) => (b, 1),
    };
    let n = usize::try_from(n).map_err(|_| err("vertex count too large"))?;
    let bits = n * n.saturating_sub(1) / 2;
    let body = &bytes[body..];
    if body.len() != bits.div_ceil(6) {
        return Err(err(&format!(
            "expected {} data bytes for {n} vertices, found {}",
            bits.div_ceil(6),
            body.len()
        )));
    }
    let bit = |k: usize| body[k / 6] >> (5 - k % 6) & 1 == 1;
    if (bits..body.len() * 6).any(bit) {
        return Err(err("nonzero padding bits"));
    }
    let mut g = Graph::empty(n);
    let mut k = 0;
    for v in 1..n {
        for u in 0..v {
            if bit(k) {
                g.insert_edge(u, v);
            }
            k += 1;
        }
    }
    Ok(g)
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    n: usize,
    edges: Vec<[usize; 2]>,
}

pub fn graph_to_json(g: &Graph) -> String {
    let doc = JsonGraph {
        n: g.vertex_count(),
        edges: g.edges().map(|(u, v)| [u, v]).collect(),
    };
    serde_json::to_string(&doc).expect("plain data serializes")
}

pub fn graph_from_json(text: &str) -> Result<Graph, FormatError> {
    let doc: JsonGraph = serde_json::from_str(text)?;
    Ok(Graph::from_edges(
        doc.n,
        doc.edges.into_iter().map(|[u, v]| (u, v)),
    )?)
}

pub fn tableau_to_json(t: &Tableau) -> String {
    serde_json::to_string(t).expect("plain data serializes")
}

/// Rows may arrive unsorted; row order is kept.
pub fn tableau_from_json(text: &str) -> Result<Tableau, FormatError> {
    Ok(serde_json::from_str(text)?)
}

pub fn switch_path_to_json(p: &SwitchPath) -> String {
    serde_json::to_string(p).expect("plain data serializes")
}

pub fn switch_path_from_json(text: &str) -> Result<SwitchPath, FormatError> {
    Ok(serde_json::from_str(text)?)
}

pub fn write_deck(d: &Deck) -> String {
    let mut out = format!("{}\n", d.len());
    for card in &d.cards {
        out.push_str(&to_graph6(card));
        out.push('\n');
    }
    out
}

pub fn read_deck(text: &str) -> Result<Deck, FormatError> {
    let mut lines = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty());
    let (line, header) = lines
        .next()
        .ok_or_else(|| malformed(1, "missing card count"))?;
    let n: usize = header
        .parse()
        .map_err(|_| malformed(line, format!("bad card count `{header}`")))?;
    let mut cards = Vec::with_capacity(n);
    for (line, l) in lines {
        let card = from_graph6(l).map_err(|e| malformed(line, e.to_string()))?;
        cards.push(card);
    }
    if cards.len() != n {
        return Err(malformed(
            line,
            format!("header promises {n} cards, found {}", cards.len()),
        ));
    }
    Ok(Deck::new(cards))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::pendant_c4;
    use crate::reconstruction::deck_of;

    #[test]
    fn edge_lists() {
        let g = read_edge_list("n 3\n0 1\n1 2\n").unwrap();
        assert_eq!(g, Graph::from_edges(3, [(0, 1), (1, 2)]).unwrap());
        assert_eq!(read_edge_list("n 0\n").unwrap(), Graph::empty(0));
        assert_eq!(
            read_edge_list("# graph6: A_\nn 2\n\n0 1\n").unwrap(),
            Graph::complete(2)
        );
        assert_eq!(write_edge_list(&g), "n 3\n0 1\n1 2\n");
        assert!(matches!(
            read_edge_list(""),
            Err(FormatError::Malformed { line: 1, .. })
        ));
        assert!(matches!(
            read_edge_list("n 3\n0 x\n"),
            Err(FormatError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            read_edge_list("n 3\n0 1 2\n"),
            Err(FormatError::Malformed { line: 2, .. })
        ));
        assert!(matches!(
            read_edge_list("n 3\n0 3\n"),
            Err(FormatError::Graph(GraphError::VertexOutOfRange { .. }))
        ));
    }

    #[test]
    fn graph6_star() {
        let g = from_graph6("D?{").unwrap();
        assert_eq!(g.vertex_count(), 5);
        assert_eq!(
            g.edges().collect::<Vec<_>>(),
            vec![(0, 4), (1, 4), (2, 4), (3, 4)]
        );
        assert_eq!(to_graph6(&g), "D?{");
    }

    #[test]
    fn graph6_known_strings() {
        // the worked example of the format description
        let c = Graph::from_edges(5, [(0, 2), (0, 4), (1, 3), (3, 4)]).unwrap();
        assert_eq!(to_graph6(&c), "DQc");
        assert_eq!(to_graph6(&Graph::empty(0)), "?");
        assert_eq!(to_graph6(&Graph::complete(2)), "A_");
        assert_eq!(from_graph6(">>graph6<<A_").unwrap(), Graph::complete(2));
    }

    #[test]
    fn graph6_large_sizes() {
        let g = Graph::from_edges(100, [(0, 99), (10, 20)]).unwrap();
        let s = to_graph6(&g);
        assert!(s.starts_with("~?@c"));
        assert_eq!(from_graph6(&s).unwrap(), g);
    }

    #[test]
    fn graph6_errors() {
        assert!(from_graph6("").is_err());
        assert!(from_graph6("D?").is_err());
        assert!(from_graph6("D?{?").is_err());
        // last byte of a 5-vertex graph carries two padding bits
        assert!(from_graph6("D?|").is_err());
        assert!(from_graph6("D? ").is_err());
        assert!(from_graph6("~?A").is_err());
    }

    #[test]
    fn json_graphs() {
        let g = pendant_c4();
        let s = graph_to_json(&g);
        assert_eq!(s, r#"{"n":5,"edges":[[0,1],[0,2],[0,4],[1,3],[2,3]]}"#);
        assert_eq!(graph_from_json(&s).unwrap(), g);
        assert!(graph_from_json(r#"{"n":2,"edges":[[0,2]]}"#).is_err());
        assert!(graph_from_json(r#"{"n":2}"#).is_err());
    }

    #[test]
    fn decks() {
        let d = deck_of(&pendant_c4());
        let text = write_deck(&d);
        assert!(text.starts_with("5\n"));
        assert_eq!(read_deck(&text).unwrap(), d);
        assert!(read_deck("3\nA_\n").is_err());
        assert!(read_deck("x\n").is_err());
    }
}
