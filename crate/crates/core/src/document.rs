//! TOML configuration documents.
//!
//! ```toml
//! vertices = ["1", "2", "3", "4"]
//!
//! [multiplicity]          # optional; missing entries default to 1
//! 1 = 2
//! 2 = 2
//!
//! [polygons]              # declaration order is kept
//! V1 = ["1", "2"]
//! V2 = ["1", "2"]
//! V3 = ["1", "1", "3", "3"]
//! V4 = ["3", "4"]
//!
//! [orientation]           # one successor sequence per nontruncated vertex
//! 1 = ["V1", "V2", "V3", "V3"]
//! 2 = ["V1", "V2"]
//! 3 = ["V3", "V4", "V3"]
//! ```
//!
//! Vertex names may be written as strings or integers. Polygon member order
//! is irrelevant; successor sequence order is the orientation.

use std::collections::BTreeMap;
use std::fmt;

use indexmap::IndexMap;
use serde::Deserialize;
use thiserror::Error;

use crate::model::{BrauerConfiguration, Polygon, SuccessorSequence, VertexId, Violation};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DocumentError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("invalid configuration: {}", .0.iter().map(ToString::to_string).collect::<Vec<_>>().join("; "))]
    Semantic(Vec<Violation>),
}

#[derive(Deserialize)]
#[serde(untagged)]
enum Name {
    Text(String),
    Integer(i64),
}

impl fmt::Display for Name {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Name::Text(s) => f.write_str(s),
            Name::Integer(n) => write!(f, "{n}"),
        }
    }
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct Document {
    vertices: Vec<Name>,
    #[serde(default)]
    multiplicity: IndexMap<String, u64>,
    polygons: IndexMap<String, Vec<Name>>,
    #[serde(default)]
    orientation: IndexMap<String, Vec<String>>,
}

fn line_column(text: &str, offset: usize) -> (usize, usize) {
    let before = &text[..offset.min(text.len())];
    let line = before.matches('\n').count() + 1;
    let column = before
        .rfind('\n')
        .map_or(before.len(), |nl| before.len() - nl - 1)
        + 1;
    (line, column)
}

/// Reads a document into a configuration without checking the axioms.
pub fn parse_unchecked(text: &str) -> Result<BrauerConfiguration, DocumentError> {
    let doc: Document = toml::from_str(text).map_err(|e| {
        let (line, column) = e
            .span()
            .map_or((1, 1), |span| line_column(text, span.start));
        DocumentError::Syntax {
            line,
            column,
            message: e.message().trim().to_owned(),
        }
    })?;

    let vertices = doc
        .vertices
        .iter()
        .map(|n| VertexId::new(n.to_string()))
        .collect();
    let polygons = doc
        .polygons
        .iter()
        .map(|(id, members)| {
            Polygon::new(id.as_str(), members.iter().map(|m| m.to_string()).collect())
        })
        .collect();
    let multiplicity = doc
        .multiplicity
        .into_iter()
        .map(|(v, m)| (VertexId::new(v), m))
        .collect();
    let orientation = doc
        .orientation
        .into_iter()
        .map(|(v, seq)| {
            let seq = SuccessorSequence::new(v, seq);
            (seq.vertex.clone(), seq)
        })
        .collect::<BTreeMap<_, _>>();
    Ok(BrauerConfiguration::from_parts(
        vertices,
        polygons,
        multiplicity,
        orientation,
    ))
}

/// Reads and validates a document.
pub fn parse(text: &str) -> Result<BrauerConfiguration, DocumentError> {
    let config = parse_unchecked(text)?;
    if config.is_valid() {
        Ok(config)
    } else {
        Err(DocumentError::Semantic(crate::model::validate(&config)))
    }
}

fn is_bare_key(s: &str) -> bool {
    !s.is_empty()
        && s.bytes()
            .all(|b| b.is_ascii_alphanumeric() || b == b'_' || b == b'-')
}

fn key(s: &str) -> String {
    if is_bare_key(s) {
        s.to_owned()
    } else {
        quoted(s)
    }
}

fn quoted(s: &str) -> String {
    toml::Value::String(s.to_owned()).to_string()
}

fn list<'a>(items: impl IntoIterator<Item = &'a str>) -> String {
    let items: Vec<String> = items.into_iter().map(quoted).collect();
    format!("[{}]", items.join(", "))
}

/// Writes the canonical document for a configuration: sections in fixed
/// order, vertices and polygons in declaration order, polygon members sorted.
pub fn serialize(config: &BrauerConfiguration) -> String {
    let mut out = String::new();
    out.push_str(&format!(
        "vertices = {}\n",
        list(config.vertices().iter().map(VertexId::as_str))
    ));

    let mu = config.explicit_multiplicities();
    if !mu.is_empty() {
        out.push_str("\n[multiplicity]\n");
        let declared = config.vertices().iter().filter(|v| mu.contains_key(*v));
        let stray = mu.keys().filter(|v| !config.vertices().contains(v));
        let mut written = std::collections::HashSet::new();
        for v in declared.chain(stray) {
            if written.insert(v) {
                out.push_str(&format!("{} = {}\n", key(v.as_str()), mu[v]));
            }
        }
    }

    out.push_str("\n[polygons]\n");
    for p in config.polygons() {
        out.push_str(&format!(
            "{} = {}\n",
            key(p.id.as_str()),
            list(p.members.expanded().map(VertexId::as_str))
        ));
    }

    let orientation = config.orientation();
    if !orientation.is_empty() {
        out.push_str("\n[orientation]\n");
        let declared = config
            .vertices()
            .iter()
            .filter(|v| orientation.contains_key(*v));
        let stray = orientation
            .keys()
            .filter(|v| !config.vertices().contains(v));
        let mut written = std::collections::HashSet::new();
        for v in declared.chain(stray) {
            if written.insert(v) {
                out.push_str(&format!(
                    "{} = {}\n",
                    key(v.as_str()),
                    list(orientation[v].polygons.iter().map(|p| p.as_str()))
                ));
            }
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{example_configuration, EXAMPLE_DOCUMENT};
    use crate::model::ViolationKind;

    #[test]
    fn example_document_parses() {
        let g = parse(EXAMPLE_DOCUMENT).unwrap();
        assert_eq!(g.val(&VertexId::new("1")).unwrap(), 4);
        assert_eq!(g, example_configuration());
    }

    #[test]
    fn example_document_is_canonical() {
        assert_eq!(serialize(&example_configuration()), EXAMPLE_DOCUMENT);
    }

    #[test]
    fn integer_vertex_names() {
        let text = r#"
vertices = [1, 2]
[polygons]
V = [1, 2, 2]
[orientation]
2 = ["V", "V"]
"#;
        let g = parse(text).unwrap();
        assert_eq!(g.vertices()[0].as_str(), "1");
    }

    #[test]
    fn missing_orientation_is_semantic() {
        let text = r#"
vertices = ["a"]
[polygons]
V = ["a", "a"]
"#;
        match parse(text) {
            Err(DocumentError::Semantic(v)) => {
                assert_eq!(v[0].kind, ViolationKind::MissingOrientation)
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn singleton_polygon_is_semantic() {
        let text = r#"
vertices = ["a", "b"]
[polygons]
V = ["a", "b", "b"]
W = ["b"]
[orientation]
b = ["V", "V", "W"]
"#;
        match parse(text) {
            Err(DocumentError::Semantic(v)) => {
                assert!(v.iter().any(|x| x.kind == ViolationKind::C2))
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn syntax_errors_carry_position() {
        let text = "vertices = [\"a\"]\n[polygons]\nV = [\"a\", \n";
        match parse(text) {
            Err(DocumentError::Syntax { line, .. }) => assert!(line >= 3),
            other => panic!("unexpected {other:?}"),
        }
        let text = "vertices = [\"a\"]\n[polygons]\nV = [\"a\", \"a\"]\n[extra]\nx = 1\n";
        assert!(matches!(parse(text), Err(DocumentError::Syntax { .. })));
        let text = "vertices = [\"a\"]\n[multiplicity]\na = -1\n[polygons]\nV = [\"a\", \"a\"]\n";
        match parse(text) {
            Err(DocumentError::Syntax { line, .. }) => assert_eq!(line, 3),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn odd_names_are_quoted() {
        let g = BrauerConfiguration::builder()
            .vertices(["x y", "é"])
            .polygon("P \"1\"", ["x y", "é", "é"])
            .orientation("é", ["P \"1\"", "P \"1\""])
            .build()
            .unwrap();
        let text = serialize(&g);
        assert_eq!(parse(&text).unwrap(), g);
    }
}
