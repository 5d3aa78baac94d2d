//! Tableau text format.
//!
//! ```text
//! # comment
//! graph K22
//! y1: x1 x2
//! y2: x1 x2
//! ```
//!
//! Each row names a white vertex and the black vertices it is joined to,
//! with repetition for multiple edges. Blacks are declared by appearing in
//! a row. A file may hold several graphs.

use std::fmt;

use super::{BipartiteGraph, GraphError};
use crate::label::{Label, LabelError};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TableauErrorKind {
    RowBeforeHeader,
    BadHeader,
    MissingColon,
    Label(LabelError),
    Graph(GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableauError {
    pub line: usize,
    pub kind: TableauErrorKind,
}

impl fmt::Display for TableauError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "line {}: ", self.line)?;
        match &self.kind {
            TableauErrorKind::RowBeforeHeader => f.write_str("row before any `graph <name>` line"),
            TableauErrorKind::BadHeader => f.write_str("expected `graph <name>`"),
            TableauErrorKind::MissingColon => f.write_str("expected `white: black ...`"),
            TableauErrorKind::Label(e) => write!(f, "{e}"),
            TableauErrorKind::Graph(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for TableauError {}

struct Pending {
    line: usize,
    name: String,
    whites: Vec<Label>,
    blacks: Vec<Label>,
    edges: Vec<(Label, Label)>,
}

impl Pending {
    fn finish(self) -> Result<BipartiteGraph, TableauError> {
        let line = self.line;
        BipartiteGraph::new(self.name, self.whites, self.blacks, self.edges).map_err(|e| {
            TableauError {
                line,
                kind: TableauErrorKind::Graph(e),
            }
        })
    }
}

pub fn parse_tableaux(text: &str) -> Result<Vec<BipartiteGraph>, TableauError> {
    parse_lines(text.lines().enumerate().map(|(i, l)| (i + 1, l)))
}

/// Parses numbered lines; used for tableau blocks embedded in other files.
pub(crate) fn parse_lines<'a>(
    lines: impl IntoIterator<Item = (usize, &'a str)>,
) -> Result<Vec<BipartiteGraph>, TableauError> {
    let mut graphs = Vec::new();
    let mut current: Option<Pending> = None;
    for (line, raw) in lines {
        let text = raw.trim();
        if text.is_empty() || text.starts_with('#') {
            continue;
        }
        let err = |kind| TableauError { line, kind };
        if let Some(rest) = text.strip_prefix("graph") {
            if rest.is_empty() || rest.starts_with(char::is_whitespace) {
                let mut words = rest.split_whitespace();
                let (Some(name), None) = (words.next(), words.next()) else {
                    return Err(err(TableauErrorKind::BadHeader));
                };
                if let Some(p) = current.take() {
                    graphs.push(p.finish()?);
                }
                current = Some(Pending {
                    line,
                    name: name.to_string(),
                    whites: Vec::new(),
                    blacks: Vec::new(),
                    edges: Vec::new(),
                });
                continue;
            }
        }
        let Some(p) = current.as_mut() else {
            return Err(err(TableauErrorKind::RowBeforeHeader));
        };
        let Some((white, row)) = text.split_once(':') else {
            return Err(err(TableauErrorKind::MissingColon));
        };
        let white = Label::parse(white.trim()).map_err(|e| err(TableauErrorKind::Label(e)))?;
        if p.whites.contains(&white) {
            return Err(err(TableauErrorKind::Graph(GraphError::DuplicateVertex(
                white,
            ))));
        }
        p.whites.push(white.clone());
        for tok in row.split_whitespace() {
            let black = Label::parse(tok).map_err(|e| err(TableauErrorKind::Label(e)))?;
            if !p.blacks.contains(&black) {
                p.blacks.push(black.clone());
            }
            p.edges.push((white.clone(), black));
        }
    }
    if let Some(p) = current {
        graphs.push(p.finish()?);
    }
    Ok(graphs)
}

/// One graph as a tableau block, newline-terminated.
pub fn write_tableau(g: &BipartiteGraph) -> String {
    let mut out = format!("graph {}\n", g.name());
    for (w, label) in g.whites().iter().enumerate() {
        out.push_str(&label.to_string());
        out.push(':');
        for b in g.neighbours_of_white(w) {
            out.push(' ');
            out.push_str(&b.to_string());
        }
        out.push('\n');
    }
    out
}

pub fn write_tableaux(gs: &[BipartiteGraph]) -> String {
    gs.iter().map(write_tableau).collect::<Vec<_>>().join("\n")
}
