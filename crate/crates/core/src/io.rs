//! Graph ingestion and serialization: graph6 and plain edge lists.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};
use crate::graph::Graph;

const GRAPH6_HEADER: &str = ">>graph6<<";
/// Largest vertex count with a four-byte graph6 size prefix.
pub const GRAPH6_MAX_N: usize = 258_047;

fn push_size(out: &mut String, n: usize) {
    if n <= 62 {
        out.push((n as u8 + 63) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((((n >> shift) & 0x3f) as u8 + 63) as char);
        }
    }
}

/// Encodes a graph in graph6: size prefix, then the upper triangle of the
/// adjacency matrix column by column, six bits per byte, offset by 63.
pub fn to_graph6(g: &Graph) -> Result<String> {
    let n = g.n();
    if n > GRAPH6_MAX_N {
        return Err(Error::Graph6(format!(
            "{n} vertices exceeds the supported maximum of {GRAPH6_MAX_N}"
        )));
    }
    let mut out = String::new();
    push_size(&mut out, n);
    let mut acc = 0u8;
    let mut bits = 0;
    for j in 1..n {
        for i in 0..j {
            acc = (acc << 1) | g.has_edge(i, j) as u8;
            bits += 1;
            if bits == 6 {
                out.push((acc + 63) as char);
                acc = 0;
                bits = 0;
            }
        }
    }
    if bits > 0 {
        out.push(((acc << (6 - bits)) + 63) as char);
    }
    Ok(out)
}

/// Decodes one graph6 line; an optional `>>graph6<<` header is accepted.
pub fn from_graph6(text: &str) -> Result<Graph> {
    let line = text.trim();
    let line = line.strip_prefix(GRAPH6_HEADER).unwrap_or(line);
    let bytes = line.as_bytes();
    if let Some(&bad) = bytes.iter().find(|&&b| !(63..=126).contains(&b)) {
        return Err(Error::Graph6(format!("invalid byte 0x{bad:02x}")));
    }
    let (n, body) = match bytes {
        [] => return Err(Error::Graph6("empty input".into())),
        [126, 126, ..] => {
            return Err(Error::Graph6(
                "eight-byte size prefix is not supported".into(),
            ))
        }
        [126, rest @ ..] => {
            if rest.len() < 3 {
                return Err(Error::Graph6("truncated size prefix".into()));
            }
            let n = rest[..3]
                .iter()
                .fold(0usize, |acc, &b| (acc << 6) | (b - 63) as usize);
            (n, &rest[3..])
        }
        [first, rest @ ..] => ((first - 63) as usize, rest),
    };
    let bit_count = n * n.saturating_sub(1) / 2;
    let expected = bit_count.div_ceil(6);
    if body.len() != expected {
        return Err(Error::Graph6(format!(
            "expected {expected} data bytes for {n} vertices, found {}",
            body.len()
        )));
    }
    let mut edges = Vec::new();
    let mut k = 0;
    for j in 1..n {
        for i in 0..j {
            let byte = body[k / 6] - 63;
            if byte >> (5 - k % 6) & 1 == 1 {
                edges.push((i, j));
            }
            k += 1;
        }
    }
    Graph::new(n, edges)
}

/// A graph read from an edge list together with its vertex labels, indexed
/// in order of first appearance.
#[derive(Debug, Clone, PartialEq)]
pub struct EdgeList {
    pub graph: Graph,
    pub labels: Vec<String>,
}

/// Parses lines of the form `u v`. Blank lines and `#` comments are
/// ignored; anything else is an error carrying its 1-based line number.
pub fn parse_edgelist<'a>(text: &'a str) -> Result<EdgeList> {
    let mut index: HashMap<&'a str, usize> = HashMap::new();
    let mut labels: Vec<String> = Vec::new();
    let mut edges = Vec::new();
    for (lineno, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let tokens: Vec<&str> = line.split_whitespace().collect();
        let &[a, b] = tokens.as_slice() else {
            return Err(Error::Parse {
                line: lineno + 1,
                reason: format!("expected two vertex labels, found {}", tokens.len()),
            });
        };
        if a == b {
            return Err(Error::Parse {
                line: lineno + 1,
                reason: format!("self-loop at `{a}`"),
            });
        }
        let mut id = |label: &'a str| -> usize {
            *index.entry(label).or_insert_with(|| {
                labels.push(label.to_string());
                labels.len() - 1
            })
        };
        let (u, v) = (id(a), id(b));
        edges.push((u, v));
    }
    let graph = Graph::new(labels.len(), edges)?;
    Ok(EdgeList { graph, labels })
}

/// Writes `u v` lines, one per edge in lexicographic order, preceded by a
/// comment with the vertex and edge counts. Labels default to indices.
pub fn write_edgelist(g: &Graph, labels: Option<&[String]>) -> String {
    let name = |v: usize| match labels {
        Some(l) => l[v].clone(),
        None => v.to_string(),
    };
    let mut out = format!("# n={} m={}\n", g.n(), g.m());
    for (u, v) in g.edges() {
        out.push_str(&name(u));
        out.push(' ');
        out.push_str(&name(v));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GraphFormat {
    EdgeList,
    Graph6,
}

impl GraphFormat {
    /// A single line holding a single token is graph6; anything else is
    /// read as an edge list.
    pub fn sniff(text: &str) -> GraphFormat {
        let mut lines = text
            .lines()
            .map(|l| l.split('#').next().unwrap_or("").trim())
            .filter(|l| !l.is_empty());
        match (lines.next(), lines.next()) {
            (Some(only), None) if only.split_whitespace().count() == 1 => GraphFormat::Graph6,
            _ => GraphFormat::EdgeList,
        }
    }
}

impl FromStr for GraphFormat {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "edgelist" => Ok(GraphFormat::EdgeList),
            "graph6" | "g6" => Ok(GraphFormat::Graph6),
            other => Err(Error::Unknown {
                kind: "format",
                name: other.to_string(),
            }),
        }
    }
}

impl fmt::Display for GraphFormat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GraphFormat::EdgeList => "edgelist",
            GraphFormat::Graph6 => "graph6",
        })
    }
}

/// Where a graph came from.
#[derive(Debug, Clone, PartialEq)]
pub enum GraphSource {
    File(String),
    Stdin,
    Family(String),
}

/// A graph together with its provenance and display name.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphDocument {
    pub source: GraphSource,
    pub format: GraphFormat,
    pub graph: Graph,
    pub label: String,
    /// Edge-list labels, when the input carried any.
    pub vertex_labels: Option<Vec<String>>,
}

impl GraphDocument {
    pub fn parse(
        text: &str,
        format: Option<GraphFormat>,
        source: GraphSource,
        label: String,
    ) -> Result<Self> {
        let format = format.unwrap_or_else(|| GraphFormat::sniff(text));
        let (graph, vertex_labels) = match format {
            GraphFormat::Graph6 => (from_graph6(text)?, None),
            GraphFormat::EdgeList => {
                let parsed = parse_edgelist(text)?;
                (parsed.graph, Some(parsed.labels))
            }
        };
        Ok(GraphDocument {
            source,
            format,
            graph,
            label,
            vertex_labels,
        })
    }

    pub fn write(&self, format: GraphFormat) -> Result<String> {
        match format {
            GraphFormat::Graph6 => Ok(to_graph6(&self.graph)? + "\n"),
            GraphFormat::EdgeList => Ok(write_edgelist(&self.graph, self.vertex_labels.as_deref())),
        }
    }

    /// Edges as label pairs with the smaller label first, sorted.
    pub fn labeled_edges(&self) -> Vec<(String, String)> {
        let name = |v: usize| match &self.vertex_labels {
            Some(l) => l[v].clone(),
            None => v.to_string(),
        };
        let mut edges: Vec<_> = self
            .graph
            .edges()
            .map(|(u, v)| {
                let (a, b) = (name(u), name(v));
                if a <= b {
                    (a, b)
                } else {
                    (b, a)
                }
            })
            .collect();
        edges.sort();
        edges
    }
}
