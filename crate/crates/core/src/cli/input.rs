//! Matrix and polygon file formats.

use std::path::Path;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::convexgeom::{ConvexPolygon, GeomError, Point};
use crate::linalg::{LinalgError, Matrix};

#[derive(Debug, Error)]
pub enum InputError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    #[error("malformed JSON matrix: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: cannot parse `{token}` as a complex number")]
    BadEntry { line: usize, token: String },
    #[error("line {line}: cannot parse `{text}` as an `x y` pair")]
    BadPoint { line: usize, text: String },
    #[error("entry {index} is not a [re, im] pair")]
    BadPair { index: usize },
    #[error("empty input")]
    Empty,
    #[error(transparent)]
    Matrix(#[from] LinalgError),
    #[error(transparent)]
    Geometry(#[from] GeomError),
}

/// JSON matrix file: `{"n": 2, "entries": [[re, im], ...]}`, row-major.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MatrixFile {
    pub n: usize,
    pub entries: Vec<Vec<f64>>,
}

impl MatrixFile {
    pub fn from_matrix(a: &Matrix) -> Self {
        Self {
            n: a.dim(),
            entries: a.as_slice().iter().map(|z| vec![z.re, z.im]).collect(),
        }
    }

    pub fn to_matrix(&self) -> Result<Matrix, InputError> {
        let data = self
            .entries
            .iter()
            .enumerate()
            .map(|(index, pair)| match pair.as_slice() {
                [re, im] => Ok(Complex64::new(*re, *im)),
                _ => Err(InputError::BadPair { index }),
            })
            .collect::<Result<Vec<_>, _>>()?;
        Ok(Matrix::from_row_major(self.n, data)?)
    }
}

fn read(path: &Path) -> Result<String, InputError> {
    std::fs::read_to_string(path).map_err(|source| InputError::Io {
        path: path.display().to_string(),
        source,
    })
}

/// Lines that carry data: `#` starts a comment, blank lines are skipped.
fn data_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines().enumerate().filter_map(|(k, line)| {
        let line = line.split('#').next().unwrap_or("").trim();
        (!line.is_empty()).then_some((k + 1, line))
    })
}

/// Plain-text matrix: one row per line, entries separated by whitespace or
/// commas, each written like `1`, `-2.5i` or `1+2i`.
pub fn parse_matrix_text(text: &str) -> Result<Matrix, InputError> {
    let mut rows = Vec::new();
    for (line, content) in data_lines(text) {
        let row = content
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(|token| {
                token.parse::<Complex64>().map_err(|_| InputError::BadEntry {
                    line,
                    token: token.to_string(),
                })
            })
            .collect::<Result<Vec<_>, _>>()?;
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(InputError::Empty);
    }
    Ok(Matrix::from_rows(&rows)?)
}

/// JSON when the first non-blank character is `{`, plain text otherwise.
pub fn parse_matrix(text: &str) -> Result<Matrix, InputError> {
    if text.trim_start().starts_with('{') {
        let file: MatrixFile = serde_json::from_str(text)?;
        file.to_matrix()
    } else {
        parse_matrix_text(text)
    }
}

pub fn read_matrix(path: &Path) -> Result<Matrix, InputError> {
    parse_matrix(&read(path)?)
}

/// Polygon file: one `x y` pair per line in any order; the body is the
/// convex hull of the points.
pub fn parse_polygon(text: &str) -> Result<ConvexPolygon, InputError> {
    let mut points = Vec::new();
    for (line, content) in data_lines(text) {
        let nums: Vec<f64> = content
            .split(|c: char| c.is_whitespace() || c == ',')
            .filter(|t| !t.is_empty())
            .map(str::parse)
            .collect::<Result<_, _>>()
            .map_err(|_| InputError::BadPoint {
                line,
                text: content.to_string(),
            })?;
        match nums.as_slice() {
            [x, y] => points.push(Point::new(*x, *y)),
            _ => {
                return Err(InputError::BadPoint {
                    line,
                    text: content.to_string(),
                })
            }
        }
    }
    if points.is_empty() {
        return Err(InputError::Empty);
    }
    Ok(ConvexPolygon::from_points(&points)?)
}

pub fn read_polygon(path: &Path) -> Result<ConvexPolygon, InputError> {
    parse_polygon(&read(path)?)
}
