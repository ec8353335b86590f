use thiserror::Error;

use crate::model::Violation;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("unknown vertex `{0}`")]
    UnknownVertex(String),

    #[error("unknown polygon `{0}`")]
    UnknownPolygon(String),

    #[error("invalid configuration ({} violation(s)): {}", .0.len(), summarize(.0))]
    InvalidConfiguration(Vec<Violation>),

    #[error("vertex `{0}` is truncated and generates no arrows")]
    TruncatedVertex(String),

    #[error("vertex `{vertex}` does not occur in polygon `{polygon}`")]
    VertexNotInPolygon { vertex: String, polygon: String },

    #[error("polygon `{0}` given twice where two distinct polygons are required")]
    SamePolygon(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    #[error(
        "path enumeration for vertex `{vertex}` needs {length} steps, above the limit of {limit}"
    )]
    OracleLimit {
        vertex: String,
        length: u128,
        limit: u128,
    },

    #[error("no valid configuration found after {attempts} attempts")]
    Unsatisfiable { attempts: usize },

    #[error("invalid generator bounds: {0}")]
    InvalidBounds(String),
}

fn summarize(violations: &[Violation]) -> String {
    violations
        .iter()
        .map(ToString::to_string)
        .collect::<Vec<_>>()
        .join("; ")
}
