//! Reading and writing drawings, report documents and figures.
//!
//! The interchange format is JSON. Top-level keys come in the order
//! `vertices`, `edges`, `chains`, `crossings`, `rotations` and the optional
//! `outer_face_hint`; map keys are sorted. Ids may be strings or integers on
//! input and are always written as strings. Unknown keys are ignored, so a
//! report document can be fed back in as a drawing.

mod dot;
mod svg;

pub use dot::to_dot;
pub use svg::{layout, to_svg, Layout, LayoutOptions};

use std::path::Path;

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};
use thiserror::Error;

use crate::drawing::{DrawingError, DrawingSpec, PlanarizedMap};

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum IoError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("invalid drawing: {0}")]
    Invariant(#[from] DrawingError),
    #[error("cannot read {path}: {message}")]
    Read { path: String, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum ExportError {
    #[error("outer face hint {hint} is out of range; the drawing has {faces} faces")]
    BadHint { hint: usize, faces: usize },
}

/// Parses and checks a drawing. Structural problems are `Parse` errors,
/// broken drawing rules are `Invariant` errors.
pub fn parse_str(text: &str) -> Result<DrawingSpec, IoError> {
    if text.trim().is_empty() {
        return Err(IoError::Parse { line: 1, column: 1, message: "empty document".into() });
    }
    let spec: DrawingSpec = serde_json::from_str(text).map_err(|e| IoError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    if spec.vertices.is_empty() {
        return Err(IoError::Parse { line: 1, column: 1, message: "field `vertices` is empty".into() });
    }
    PlanarizedMap::build(&spec)?;
    Ok(spec)
}

pub fn parse_drawing(path: impl AsRef<Path>) -> Result<DrawingSpec, IoError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path)
        .map_err(|e| IoError::Read { path: path.display().to_string(), message: e.to_string() })?;
    parse_str(&text)
}

/// Canonical text of a drawing: pretty JSON with a trailing newline.
pub fn emit(spec: &DrawingSpec) -> String {
    let mut s = serde_json::to_string_pretty(spec).expect("drawings serialize");
    s.push('\n');
    s
}

/// Hex SHA-256 of the canonical text.
pub fn digest(spec: &DrawingSpec) -> String {
    Sha256::digest(emit(spec).as_bytes()).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn tool_version() -> String {
    format!("crossing-ledger {}", env!("CARGO_PKG_VERSION"))
}

/// A drawing plus analysis sections. The drawing's own keys come first.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ReportDocument {
    #[serde(flatten)]
    pub drawing: DrawingSpec,
    pub tool: String,
    pub input_digest: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub validation: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub skeleton: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub segments: Option<Value>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub audit: Option<Value>,
}

impl ReportDocument {
    pub fn new(drawing: DrawingSpec) -> Self {
        Self {
            input_digest: digest(&drawing),
            tool: tool_version(),
            drawing,
            validation: None,
            skeleton: None,
            segments: None,
            audit: None,
        }
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("reports serialize");
        s.push('\n');
        s
    }
}

/// Serializes a section for a report document.
pub fn section<T: Serialize>(value: &T) -> Value {
    serde_json::to_value(value).expect("sections serialize")
}
