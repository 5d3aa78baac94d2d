//! Presentation text format.
//!
//! ```text
//! [graphs]
//! graph G1
//! y1: x1 x2
//! include more_graphs.tab
//!
//! [lambda]
//! x1 -> y1
//!
//! [tuples]
//! x1 x2 x3
//! ```
//!
//! `[graphs]` holds tableau blocks inline or `include <path>` lines.
//! Written files are always inline, with `λ` sorted by black letter and
//! tuples as sorted least rotations, so parsing and writing such a file
//! reproduces it byte for byte.

use thiserror::Error;

use super::{BasicBijection, PolygonalPresentation, PresentationError};
use crate::bigraph::{parse_tableau_lines, write_tableaux, BipartiteGraph, TableauError};
use crate::label::{Label, LabelError};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum FormatError {
    #[error("line {line}: {msg}")]
    Syntax { line: usize, msg: String },
    #[error("line {line}: {source}")]
    Label { line: usize, source: LabelError },
    #[error(transparent)]
    Tableau(#[from] TableauError),
    #[error("include {path}: {msg}")]
    Include { path: String, msg: String },
    #[error(transparent)]
    Presentation(#[from] PresentationError),
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Section {
    None,
    Graphs,
    Lambda,
    Tuples,
}

/// Parses a presentation whose graphs are all inline.
pub fn parse_presentation(text: &str) -> Result<PolygonalPresentation, FormatError> {
    parse_presentation_with(text, &mut |path| {
        Err(format!("cannot resolve {path} without a file loader"))
    })
}

/// Parses a presentation, resolving `include` lines through `load`.
pub fn parse_presentation_with(
    text: &str,
    load: &mut dyn FnMut(&str) -> Result<String, String>,
) -> Result<PolygonalPresentation, FormatError> {
    let mut section = Section::None;
    let mut seen = Vec::new();
    let mut graphs: Vec<BipartiteGraph> = Vec::new();
    let mut pending: Vec<(usize, &str)> = Vec::new();
    let mut lambda = Vec::new();
    let mut tuples = Vec::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;
        let t = raw.trim();
        let syntax = |msg: &str| FormatError::Syntax {
            line,
            msg: msg.to_string(),
        };
        if t.is_empty() || t.starts_with('#') {
            continue;
        }
        if t.starts_with('[') {
            let next = match t {
                "[graphs]" => Section::Graphs,
                "[lambda]" => Section::Lambda,
                "[tuples]" => Section::Tuples,
                _ => return Err(syntax("unknown section")),
            };
            if seen.contains(&t) {
                return Err(syntax("section repeated"));
            }
            seen.push(t);
            if section == Section::Graphs {
                graphs.extend(parse_tableau_lines(pending.drain(..))?);
            }
            section = next;
            continue;
        }
        let label = |tok: &str| {
            Label::parse(tok).map_err(|source| FormatError::Label { line, source })
        };
        match section {
            Section::None => return Err(syntax("content before the first section")),
            Section::Graphs => {
                if let Some(path) = t.strip_prefix("include ") {
                    graphs.extend(parse_tableau_lines(pending.drain(..))?);
                    let path = path.trim();
                    let body = load(path).map_err(|msg| FormatError::Include {
                        path: path.to_string(),
                        msg,
                    })?;
                    let included = parse_tableau_lines(
                        body.lines().enumerate().map(|(i, l)| (i + 1, l)),
                    )
                    .map_err(|e| FormatError::Include {
                        path: path.to_string(),
                        msg: e.to_string(),
                    })?;
                    graphs.extend(included);
                } else {
                    pending.push((line, raw));
                }
            }
            Section::Lambda => {
                let Some((a, b)) = t.split_once("->") else {
                    return Err(syntax("expected `black -> white`"));
                };
                lambda.push((label(a.trim())?, label(b.trim())?));
            }
            Section::Tuples => {
                tuples.push(
                    t.split_whitespace()
                        .map(label)
                        .collect::<Result<Vec<_>, _>>()?,
                );
            }
        }
    }
    if section == Section::Graphs {
        graphs.extend(parse_tableau_lines(pending.drain(..))?);
    }
    let lambda = BasicBijection::new(lambda)?;
    Ok(PolygonalPresentation::new(graphs, lambda, tuples)?)
}

pub fn write_presentation(p: &PolygonalPresentation) -> String {
    let mut out = String::from("[graphs]\n");
    out.push_str(&write_tableaux(p.graphs()));
    out.push_str("\n[lambda]\n");
    for (a, b) in p.lambda().pairs() {
        out.push_str(&format!("{a} -> {b}\n"));
    }
    out.push_str("\n[tuples]\n");
    for t in p.tuples() {
        let words: Vec<String> = t.iter().map(Label::to_string).collect();
        out.push_str(&words.join(" "));
        out.push('\n');
    }
    out
}
