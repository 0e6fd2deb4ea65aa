//! Line-oriented algebra files.
//!
//! ```text
//! # comment
//! field 2
//! vertex 1
//! vertex 2
//! arrow a 1 2
//! relation a*b + 2*c*d
//! ```

use std::collections::HashMap;

use crate::error::{Error, Result};
use crate::field::is_prime;

/// An arrow `label: source -> target` (vertex indices).
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Arrow {
    pub label: String,
    pub source: usize,
    pub target: usize,
}

/// One term `coeff * path` of a relation; the path lists arrow indices in
/// traversal order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Term {
    pub coeff: i64,
    pub path: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Relation {
    pub terms: Vec<Term>,
}

/// A validated quiver with relations, independent of any scalar type.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct QuiverSpec {
    pub characteristic: u32,
    pub vertices: Vec<String>,
    pub arrows: Vec<Arrow>,
    pub relations: Vec<Relation>,
}

impl QuiverSpec {
    pub fn vertex_index(&self, label: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == label)
    }

    pub fn arrow_index(&self, label: &str) -> Option<usize> {
        self.arrows.iter().position(|a| a.label == label)
    }

    /// Source and target of a nonempty arrow path, if composable.
    pub fn path_endpoints(&self, path: &[usize]) -> Option<(usize, usize)> {
        let first = self.arrows.get(*path.first()?)?;
        let mut at = first.target;
        for &a in &path[1..] {
            let arrow = self.arrows.get(a)?;
            if arrow.source != at {
                return None;
            }
            at = arrow.target;
        }
        Some((first.source, at))
    }

    /// Canonical text, the input of content hashes.
    pub fn to_text(&self) -> String {
        let mut out = format!("field {}\n", self.characteristic);
        for v in &self.vertices {
            out.push_str(&format!("vertex {v}\n"));
        }
        for a in &self.arrows {
            out.push_str(&format!(
                "arrow {} {} {}\n",
                a.label, self.vertices[a.source], self.vertices[a.target]
            ));
        }
        for r in &self.relations {
            let terms: Vec<String> = r
                .terms
                .iter()
                .map(|t| {
                    let path: Vec<&str> = t.path.iter().map(|&a| self.arrows[a].label.as_str()).collect();
                    format!("{}*{}", t.coeff, path.join("*"))
                })
                .collect();
            out.push_str(&format!("relation {}\n", terms.join(" + ")));
        }
        out
    }
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax { line, column, message: message.into() }
}

fn is_label(s: &str) -> bool {
    !s.is_empty()
        && s.chars().all(|c| c.is_alphanumeric() || c == '_' || c == '\'' || c == '.')
}

/// Parse and validate an algebra file.
pub fn parse_algebra(text: &str) -> Result<QuiverSpec> {
    let mut characteristic: Option<u32> = None;
    let mut vertices: Vec<String> = Vec::new();
    let mut arrows: Vec<Arrow> = Vec::new();
    // relations are resolved after all arrows are known
    let mut pending: Vec<(usize, usize, String)> = Vec::new();
    let mut seen_vertex: HashMap<String, ()> = HashMap::new();

    for (lineno, raw) in text.lines().enumerate() {
        let line_no = lineno + 1;
        let line = raw.split('#').next().unwrap_or("");
        if line.trim().is_empty() {
            continue;
        }
        let indent = line.len() - line.trim_start().len();
        let body = line.trim();
        let (keyword, rest) = match body.find(char::is_whitespace) {
            Some(i) => (&body[..i], &body[i..]),
            None => (body, ""),
        };
        let rest_col = indent + keyword.len() + 1;
        let args: Vec<&str> = rest.split_whitespace().collect();
        match keyword {
            "field" => {
                if args.len() != 1 {
                    return Err(syntax(line_no, rest_col, "expected `field <prime>`"));
                }
                if characteristic.is_some() {
                    return Err(syntax(line_no, indent + 1, "field declared twice"));
                }
                let p: u64 = args[0]
                    .parse()
                    .map_err(|_| syntax(line_no, rest_col + 1, "characteristic must be an integer"))?;
                if !is_prime(p) || p > 46_337 {
                    return Err(Error::BadCharacteristic(p));
                }
                characteristic = Some(p as u32);
            }
            "vertex" => {
                if args.len() != 1 || !is_label(args[0]) {
                    return Err(syntax(line_no, rest_col, "expected `vertex <label>`"));
                }
                if seen_vertex.insert(args[0].to_string(), ()).is_some() {
                    return Err(Error::Duplicate(args[0].to_string()));
                }
                vertices.push(args[0].to_string());
            }
            "arrow" => {
                if args.len() != 3 || !is_label(args[0]) {
                    return Err(syntax(line_no, rest_col, "expected `arrow <label> <source> <target>`"));
                }
                if args[0].parse::<i64>().is_ok() {
                    return Err(syntax(line_no, rest_col, "arrow labels may not be integers"));
                }
                if arrows.iter().any(|a| a.label == args[0]) {
                    return Err(Error::Duplicate(args[0].to_string()));
                }
                let find = |l: &str| {
                    vertices
                        .iter()
                        .position(|v| v == l)
                        .ok_or_else(|| Error::UndeclaredVertex(l.to_string()))
                };
                let source = find(args[1])?;
                let target = find(args[2])?;
                arrows.push(Arrow { label: args[0].to_string(), source, target });
            }
            "relation" => {
                if args.is_empty() {
                    return Err(syntax(line_no, rest_col, "empty relation"));
                }
                pending.push((line_no, rest_col, rest.to_string()));
            }
            other => {
                return Err(syntax(line_no, indent + 1, format!("unknown keyword `{other}`")));
            }
        }
    }

    if vertices.is_empty() {
        return Err(Error::EmptyQuiver);
    }
    let mut spec = QuiverSpec {
        characteristic: characteristic.unwrap_or(2),
        vertices,
        arrows,
        relations: Vec::new(),
    };
    for (line_no, col, text) in pending {
        let rel = parse_relation(&spec, line_no, col, &text)?;
        spec.relations.push(rel);
    }
    Ok(spec)
}

fn parse_relation(spec: &QuiverSpec, line_no: usize, col: usize, text: &str) -> Result<Relation> {
    let mut terms = Vec::new();
    let mut endpoints: Option<(usize, usize)> = None;
    let mut offset = 0;
    for chunk in text.split('+') {
        let term_col = col + offset + (chunk.len() - chunk.trim_start().len());
        offset += chunk.len() + 1;
        let chunk = chunk.trim();
        if chunk.is_empty() {
            return Err(syntax(line_no, term_col, "empty relation term"));
        }
        let factors: Vec<&str> = chunk.split('*').map(str::trim).collect();
        let (coeff, labels) = match factors[0].parse::<i64>() {
            Ok(c) => (c, &factors[1..]),
            Err(_) => (1, &factors[..]),
        };
        if labels.iter().any(|l| l.is_empty() || l.contains(char::is_whitespace)) {
            return Err(syntax(line_no, term_col, "malformed path"));
        }
        let mut path = Vec::with_capacity(labels.len());
        for l in labels {
            path.push(spec.arrow_index(l).ok_or_else(|| Error::UnknownArrow(l.to_string()))?);
        }
        if path.len() < 2 {
            return Err(Error::ShortRelationPath(labels.join("*")));
        }
        let ends = spec
            .path_endpoints(&path)
            .ok_or_else(|| Error::NonComposablePath(labels.join("*")))?;
        match endpoints {
            None => endpoints = Some(ends),
            Some(e) if e != ends => return Err(Error::MixedRelation),
            _ => {}
        }
        terms.push(Term { coeff, path });
    }
    Ok(Relation { terms })
}
