//! The JSON arrangement file format.
//!
//! ```json
//! {"dimension": 2, "lines": [{"point": ["0", "1/2"], "direction": ["1", "0"]}]}
//! ```
//!
//! Coordinates are rational strings so values stay exact. `name` and `seed`
//! are optional metadata.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::arrangement::{Arrangement, ArrangementError};
use crate::geometry::{GeometryError, PointN, Rat};
use crate::rat_serde::{parse_rat, rat_to_string};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ArrangementFile {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub dimension: usize,
    pub lines: Vec<LineEntry>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LineEntry {
    pub point: Vec<String>,
    pub direction: Vec<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Error, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum ParseError {
    /// Malformed JSON or a schema mismatch, with a 1-based text position.
    #[error("line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("{path}: {message}")]
    InvalidRational { path: String, message: String },
    #[error("{path}: expected {expected} coordinates, found {found}")]
    DimensionMismatch { path: String, expected: usize, found: usize },
    #[error("{path}: direction is the zero vector")]
    ZeroDirection { path: String },
    #[error("dimension: must be at least 2, got {found}")]
    InvalidDimension { found: usize },
    #[error("lines[{first}] and lines[{second}] describe the same line")]
    DuplicateLine { first: usize, second: usize },
}

impl ArrangementFile {
    pub fn from_arrangement(a: &Arrangement) -> Self {
        let strings = |v: &[Rat]| v.iter().map(rat_to_string).collect();
        Self {
            name: None,
            seed: None,
            dimension: a.dimension(),
            lines: a
                .lines()
                .iter()
                .map(|l| LineEntry {
                    point: strings(l.base().coords()),
                    direction: strings(&l.dir_rat()),
                })
                .collect(),
        }
    }

    pub fn to_arrangement(&self) -> Result<Arrangement, ParseError> {
        let n = self.dimension;
        if n < 2 {
            return Err(ParseError::InvalidDimension { found: n });
        }
        let mut raw = Vec::with_capacity(self.lines.len());
        for (i, entry) in self.lines.iter().enumerate() {
            let point = coordinates(&entry.point, n, &format!("lines[{i}].point"))?;
            let direction = coordinates(&entry.direction, n, &format!("lines[{i}].direction"))?;
            raw.push((PointN::new(point), direction));
        }
        Arrangement::new(n, &raw).map_err(|e| match e {
            ArrangementError::InvalidDimension(found) => ParseError::InvalidDimension { found },
            ArrangementError::DuplicateLine { first, second } => ParseError::DuplicateLine { first, second },
            ArrangementError::Line { index, source } => match source {
                GeometryError::ZeroDirection => ParseError::ZeroDirection {
                    path: format!("lines[{index}].direction"),
                },
                GeometryError::DimensionMismatch { expected, found } => ParseError::DimensionMismatch {
                    path: format!("lines[{index}]"),
                    expected,
                    found,
                },
                GeometryError::DimensionTooSmall(found) => ParseError::InvalidDimension { found },
            },
        })
    }
}

fn coordinates(values: &[String], n: usize, path: &str) -> Result<Vec<Rat>, ParseError> {
    if values.len() != n {
        return Err(ParseError::DimensionMismatch {
            path: path.to_string(),
            expected: n,
            found: values.len(),
        });
    }
    values
        .iter()
        .enumerate()
        .map(|(j, s)| {
            parse_rat(s).map_err(|message| ParseError::InvalidRational {
                path: format!("{path}[{j}]"),
                message,
            })
        })
        .collect()
}

pub fn parse_file(text: &str) -> Result<ArrangementFile, ParseError> {
    serde_json::from_str(text).map_err(|e| ParseError::Syntax {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })
}

pub fn parse_arrangement(text: &str) -> Result<Arrangement, ParseError> {
    parse_file(text)?.to_arrangement()
}

/// Pretty-printed JSON with a trailing newline.
pub fn serialize_arrangement(a: &Arrangement) -> String {
    let mut s = serde_json::to_string_pretty(&ArrangementFile::from_arrangement(a)).expect("plain data");
    s.push('\n');
    s
}
