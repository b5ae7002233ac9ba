//! The plain-text graph format.
//!
//! ```text
//! # comment
//! graph <name> <n> <m>
//! vertices: <name> ...      (optional)
//! side A: <vertex> ...      (optional)
//! <u> <v>                   (m lines)
//! ```
//!
//! Vertices are integers `0..n` when every vertex token is an integer and
//! there is no `vertices:` line. Otherwise they are names, numbered by the
//! `vertices:` line if present and by first appearance if not; a graph with
//! isolated named vertices needs the `vertices:` line. Duplicate edges,
//! self-loops and edges inside a declared side are errors.

use std::collections::{HashMap, HashSet};
use std::fmt::Write as _;

use thiserror::Error;

use crate::graph::{Bipartition, BipartitionError, Graph, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphDocument {
    pub name: String,
    pub n: usize,
    /// Edges in file order, as written.
    pub edges: Vec<(usize, usize)>,
    pub side_a: Option<VertexSet>,
    pub names: Option<Vec<String>>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}: {kind}")]
pub struct ParseError {
    pub line: usize,
    pub kind: ParseErrorKind,
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseErrorKind {
    #[error("missing `graph <name> <n> <m>` header")]
    MissingHeader,
    #[error("malformed header: expected `graph <name> <n> <m>`")]
    BadHeader,
    #[error("malformed edge line: expected two vertices")]
    BadEdge,
    #[error("duplicate `{0}` line")]
    DuplicateDirective(&'static str),
    #[error("`{0}` line must precede the edges")]
    LateDirective(&'static str),
    #[error("vertex {0} is out of range for n = {1}")]
    OutOfRange(usize, usize),
    #[error("unknown vertex `{0}`")]
    UnknownName(String),
    #[error("vertex `{0}` listed twice")]
    RepeatedName(String),
    #[error("self-loop at `{0}`")]
    SelfLoop(String),
    #[error("duplicate edge `{0} {1}`")]
    DuplicateEdge(String, String),
    #[error("edge `{0} {1}` has both endpoints on side {2}")]
    SideViolation(String, String, char),
    #[error("header declares {declared} edges, found {found}")]
    EdgeCount { declared: usize, found: usize },
    #[error("header declares {declared} vertices, found {found} names (list isolated vertices on a `vertices:` line)")]
    NameCount { declared: usize, found: usize },
}

fn err(line: usize, kind: ParseErrorKind) -> ParseError {
    ParseError { line, kind }
}

struct Line<'a> {
    number: usize,
    tokens: Vec<&'a str>,
}

fn directive<'a>(tokens: &[&'a str], prefix: &[&str]) -> Option<Vec<&'a str>> {
    (tokens.len() >= prefix.len() && tokens[..prefix.len()] == *prefix).then(|| tokens[prefix.len()..].to_vec())
}

/// Parses the graph format.
pub fn parse_graph(text: &str) -> Result<GraphDocument, ParseError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let body = raw.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some(Line { number: i + 1, tokens })
    });
    let header = lines.next().ok_or(err(text.lines().count().max(1), ParseErrorKind::MissingHeader))?;
    let (name, n, m) = match header.tokens.as_slice() {
        ["graph", name, n, m] => match (n.parse::<usize>(), m.parse::<usize>()) {
            (Ok(n), Ok(m)) => (name.to_string(), n, m),
            _ => return Err(err(header.number, ParseErrorKind::BadHeader)),
        },
        [first, ..] if *first == "graph" => return Err(err(header.number, ParseErrorKind::BadHeader)),
        _ => return Err(err(header.number, ParseErrorKind::MissingHeader)),
    };

    let mut vertices: Option<(usize, Vec<&str>)> = None;
    let mut side: Option<(usize, Vec<&str>)> = None;
    let mut edge_lines: Vec<(usize, &str, &str)> = Vec::new();
    for line in lines {
        let t = &line.tokens;
        if let Some(rest) = directive(t, &["vertices:"]) {
            if vertices.is_some() {
                return Err(err(line.number, ParseErrorKind::DuplicateDirective("vertices:")));
            }
            if !edge_lines.is_empty() || side.is_some() {
                return Err(err(line.number, ParseErrorKind::LateDirective("vertices:")));
            }
            vertices = Some((line.number, rest));
        } else if let Some(rest) = directive(t, &["side", "A:"]) {
            if side.is_some() {
                return Err(err(line.number, ParseErrorKind::DuplicateDirective("side A:")));
            }
            if !edge_lines.is_empty() {
                return Err(err(line.number, ParseErrorKind::LateDirective("side A:")));
            }
            side = Some((line.number, rest));
        } else if t.len() == 2 {
            edge_lines.push((line.number, t[0], t[1]));
        } else {
            return Err(err(line.number, ParseErrorKind::BadEdge));
        }
    }

    let numeric = vertices.is_none()
        && side.iter().flat_map(|(_, s)| s.iter()).chain(edge_lines.iter().flat_map(|(_, u, v)| [u, v])).all(|t| t.parse::<usize>().is_ok());

    let mut names: Vec<String> = Vec::new();
    let mut index: HashMap<&str, usize> = HashMap::new();
    let resolve_fixed = |tok: &str, line: usize, index: &HashMap<&str, usize>| -> Result<usize, ParseError> {
        if numeric {
            let v: usize = tok.parse().unwrap();
            if v >= n {
                return Err(err(line, ParseErrorKind::OutOfRange(v, n)));
            }
            Ok(v)
        } else {
            index.get(tok).copied().ok_or_else(|| err(line, ParseErrorKind::UnknownName(tok.to_string())))
        }
    };

    if let Some((line, list)) = &vertices {
        for tok in list {
            if index.insert(tok, names.len()).is_some() {
                return Err(err(*line, ParseErrorKind::RepeatedName(tok.to_string())));
            }
            names.push(tok.to_string());
        }
        if names.len() != n {
            return Err(err(*line, ParseErrorKind::NameCount { declared: n, found: names.len() }));
        }
    } else if !numeric {
        // First appearance order, side line first.
        let order = side
            .iter()
            .flat_map(|(l, s)| s.iter().map(move |t| (*l, *t)))
            .chain(edge_lines.iter().flat_map(|(l, u, v)| [(*l, *u), (*l, *v)]));
        for (line, tok) in order {
            if !index.contains_key(tok) {
                if names.len() == n {
                    return Err(err(line, ParseErrorKind::NameCount { declared: n, found: n + 1 }));
                }
                index.insert(tok, names.len());
                names.push(tok.to_string());
            }
        }
        if names.len() != n {
            return Err(err(header.number, ParseErrorKind::NameCount { declared: n, found: names.len() }));
        }
    }

    let label = |v: usize| if numeric { v.to_string() } else { names[v].clone() };

    let side_a = match &side {
        Some((line, list)) => {
            let mut set = VertexSet::empty(n);
            for tok in list {
                let v = resolve_fixed(tok, *line, &index)?;
                if set.contains(v) {
                    return Err(err(*line, ParseErrorKind::RepeatedName(tok.to_string())));
                }
                set.insert(v);
            }
            Some(set)
        }
        None => None,
    };

    let mut seen = HashSet::new();
    let mut edges = Vec::with_capacity(edge_lines.len());
    for &(line, u, v) in &edge_lines {
        let a = resolve_fixed(u, line, &index)?;
        let b = resolve_fixed(v, line, &index)?;
        if a == b {
            return Err(err(line, ParseErrorKind::SelfLoop(u.to_string())));
        }
        if !seen.insert((a.min(b), a.max(b))) {
            return Err(err(line, ParseErrorKind::DuplicateEdge(u.to_string(), v.to_string())));
        }
        if let Some(sa) = &side_a {
            if sa.contains(a) == sa.contains(b) {
                let tag = if sa.contains(a) { 'A' } else { 'B' };
                return Err(err(line, ParseErrorKind::SideViolation(label(a), label(b), tag)));
            }
        }
        edges.push((a, b));
    }
    if edges.len() != m {
        let line = edge_lines.last().map_or(header.number, |e| e.0);
        return Err(err(line, ParseErrorKind::EdgeCount { declared: m, found: edges.len() }));
    }

    Ok(GraphDocument {
        name,
        n,
        edges,
        side_a,
        names: (!numeric).then_some(names),
    })
}

/// Renders a document so that `parse_graph(render_graph(d)) == d`.
pub fn render_graph(doc: &GraphDocument) -> String {
    let mut out = String::new();
    writeln!(out, "graph {} {} {}", doc.name, doc.n, doc.edges.len()).unwrap();
    let label = |v: usize| match &doc.names {
        Some(names) => names[v].clone(),
        None => v.to_string(),
    };
    if let Some(names) = &doc.names {
        writeln!(out, "vertices: {}", names.join(" ")).unwrap();
    }
    if let Some(a) = &doc.side_a {
        let parts: Vec<String> = a.iter().map(label).collect();
        writeln!(out, "side A: {}", parts.join(" ")).unwrap();
    }
    for &(u, v) in &doc.edges {
        writeln!(out, "{} {}", label(u), label(v)).unwrap();
    }
    out
}

impl GraphDocument {
    /// A numeric document for `g`.
    pub fn from_graph(name: &str, g: &Graph, side_a: Option<VertexSet>) -> Self {
        GraphDocument {
            name: name.to_string(),
            n: g.n(),
            edges: g.edges().to_vec(),
            side_a,
            names: None,
        }
    }

    pub fn graph(&self) -> Graph {
        Graph::new(self.n, self.edges.iter().copied()).expect("parsed documents are simple graphs")
    }

    /// The declared bipartition, validated against the edges.
    pub fn declared_bipartition(&self, g: &Graph) -> Option<Result<Bipartition, BipartitionError>> {
        self.side_a.as_ref().map(|a| Bipartition::with_side_a(g, a))
    }

    pub fn vertex_name(&self, v: usize) -> String {
        match &self.names {
            Some(names) => names[v].clone(),
            None => v.to_string(),
        }
    }

    /// Vertex names, or decimal ids for numeric documents.
    pub fn labels(&self) -> Vec<String> {
        (0..self.n).map(|v| self.vertex_name(v)).collect()
    }

    /// Id of a vertex by label.
    pub fn vertex_id(&self, label: &str) -> Option<usize> {
        match &self.names {
            Some(names) => names.iter().position(|n| n == label),
            None => label.parse().ok().filter(|&v| v < self.n),
        }
    }

    /// A vertex set from labels. Panics on unknown labels.
    pub fn set(&self, labels: &[&str]) -> VertexSet {
        VertexSet::new(
            self.n,
            labels.iter().map(|l| self.vertex_id(l).unwrap_or_else(|| panic!("unknown vertex {l}"))),
        )
    }

    /// Labels of a set, ascending by id.
    pub fn set_labels(&self, x: &VertexSet) -> Vec<String> {
        x.iter().map(|v| self.vertex_name(v)).collect()
    }

    /// `{a, b}` with labels.
    pub fn format_set(&self, x: &VertexSet) -> String {
        format!("{{{}}}", self.set_labels(x).join(", "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn numeric_and_named() {
        let d = parse_graph("graph p4 4 3\n0 1\n1 2\n2 3\n").unwrap();
        assert!(d.names.is_none());
        assert_eq!(d.edges, vec![(0, 1), (1, 2), (2, 3)]);

        let d = parse_graph("# a path\ngraph p3 3 2\nx y  # first\ny z\n").unwrap();
        assert_eq!(d.names.as_deref().unwrap(), ["x", "y", "z"]);
        assert_eq!(d.edges, vec![(0, 1), (1, 2)]);

        let d = parse_graph("graph k1 1 0").unwrap();
        assert_eq!((d.n, d.edges.len()), (1, 0));
    }

    #[test]
    fn side_and_vertices_lines() {
        let d = parse_graph("graph s 4 2\nvertices: a b c d\nside A: a c\na b\nc b\n").unwrap();
        assert_eq!(d.side_a.as_ref().unwrap().to_vec(), vec![0, 2]);
        assert_eq!(d.vertex_id("d"), Some(3));
        let e = parse_graph("graph s 2 1\nside A: a c\na c\n").unwrap_err();
        assert_eq!(e.line, 3);
        assert!(matches!(e.kind, ParseErrorKind::SideViolation(..)));
    }

    #[test]
    fn errors_carry_line_numbers() {
        let e = parse_graph("graph bad 1 1\na a\n").unwrap_err();
        assert_eq!(e, err(2, ParseErrorKind::SelfLoop("a".into())));
        let e = parse_graph("graph bad 3 3\n0 1\n1 2\n2 1\n").unwrap_err();
        assert_eq!(e, err(4, ParseErrorKind::DuplicateEdge("2".into(), "1".into())));
        let e = parse_graph("graph bad 3 1\n0 1 2\n").unwrap_err();
        assert_eq!(e, err(2, ParseErrorKind::BadEdge));
        let e = parse_graph("graph bad 2 1\n0 5\n").unwrap_err();
        assert_eq!(e, err(2, ParseErrorKind::OutOfRange(5, 2)));
        let e = parse_graph("graph bad 2 2\n0 1\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::EdgeCount { declared: 2, found: 1 }));
        let e = parse_graph("graph bad 4 1\nx y\n").unwrap_err();
        assert!(matches!(e.kind, ParseErrorKind::NameCount { declared: 4, found: 2 }));
        let e = parse_graph("\n\n").unwrap_err();
        assert_eq!(e.kind, ParseErrorKind::MissingHeader);
        let e = parse_graph("graph x two 0\n").unwrap_err();
        assert_eq!(e, err(1, ParseErrorKind::BadHeader));
        let e = parse_graph("graph s 2 1\nvertices: a b\na c\n").unwrap_err();
        assert_eq!(e, err(3, ParseErrorKind::UnknownName("c".into())));
    }

    #[test]
    fn round_trip() {
        for text in [
            "graph p4 4 3\n2 3\n0 1\n1 2\n",
            "graph s 5 2\nside A: 0 2 4\n1 2\n3 4\n",
            "graph named 3 2\nb c\nc d\n",
            "graph iso 3 1\nvertices: q p r\np r\n",
        ] {
            let d = parse_graph(text).unwrap();
            assert_eq!(parse_graph(&render_graph(&d)).unwrap(), d, "{text}");
        }
    }
}
