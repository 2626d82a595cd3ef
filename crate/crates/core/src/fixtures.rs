//! Fixture files: one PD line per diagram with an optional annotation
//! suffix, and matrix files with one named integer matrix per line.
//!
//! ```text
//! 11n_34 PD: X(4,2,5,1) ... @ genus_paper=3 source="..."
//! P442: [[4,-2],[-2,1]]
//! ```
//!
//! Blank lines and lines starting with `#` are skipped. Line numbers in
//! errors are 1-based.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::IntMatrix;
use crate::pd::{parse_pd_line, PlanarDiagram};

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize)]
pub struct Annotations {
    #[serde(skip_serializing_if = "Option::is_none")]
    pub genus_paper: Option<u32>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub source: Option<String>,
}

impl Annotations {
    pub fn is_empty(&self) -> bool {
        self.genus_paper.is_none() && self.source.is_none()
    }
}

#[derive(Debug, Clone)]
pub struct FixtureEntry {
    pub line: usize,
    pub diagram: PlanarDiagram,
    pub annotations: Annotations,
}

impl FixtureEntry {
    pub fn name(&self) -> &str {
        self.diagram.name()
    }
}

/// A failed line, with enough context to report it and carry on.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LineError {
    pub line: usize,
    pub message: String,
}

fn is_skippable(line: &str) -> bool {
    let t = line.trim();
    t.is_empty() || t.starts_with('#')
}

fn parse_annotations(text: &str) -> Result<Annotations> {
    let mut out = Annotations::default();
    let mut rest = text.trim();
    while !rest.is_empty() {
        let (key, after) = rest
            .split_once('=')
            .ok_or_else(|| Error::Usage(format!("annotation without '=': {rest}")))?;
        let (value, tail) = if let Some(quoted) = after.strip_prefix('"') {
            let end = quoted
                .find('"')
                .ok_or_else(|| Error::Usage("unterminated quoted annotation".into()))?;
            (&quoted[..end], &quoted[end + 1..])
        } else {
            after.split_once(char::is_whitespace).unwrap_or((after, ""))
        };
        match key.trim() {
            "genus_paper" => {
                let g = value.parse().map_err(|_| {
                    Error::Usage(format!(
                        "genus_paper must be a non-negative integer, got {value:?}"
                    ))
                })?;
                out.genus_paper = Some(g);
            }
            "source" => out.source = Some(value.to_string()),
            other => return Err(Error::Usage(format!("unknown annotation {other:?}"))),
        }
        rest = tail.trim_start();
    }
    Ok(out)
}

/// Parses one non-comment fixture line.
pub fn parse_fixture_line(text: &str, line: usize) -> Result<FixtureEntry> {
    let (pd, ann) = match text.split_once(" @") {
        Some((pd, ann)) => (pd, parse_annotations(ann)?),
        None => (text, Annotations::default()),
    };
    Ok(FixtureEntry {
        line,
        diagram: parse_pd_line(pd)?,
        annotations: ann,
    })
}

/// Every entry of a fixture file in order, failed lines included.
pub fn parse_fixture_text(text: &str) -> Vec<std::result::Result<FixtureEntry, LineError>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !is_skippable(l))
        .map(|(i, l)| {
            parse_fixture_line(l.trim(), i + 1).map_err(|e| LineError {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

/// Strict loader for tests and batch checks: the first bad line is an error.
pub fn load_fixtures(text: &str) -> Result<Vec<FixtureEntry>> {
    parse_fixture_text(text)
        .into_iter()
        .map(|r| r.map_err(|e| Error::Usage(format!("line {}: {}", e.line, e.message))))
        .collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MatrixEntry {
    pub line: usize,
    pub name: String,
    pub matrix: IntMatrix,
}

pub fn parse_matrix_line(text: &str, line: usize) -> Result<MatrixEntry> {
    let (name, body) = text
        .split_once(':')
        .ok_or_else(|| Error::Usage("expected `NAME: [[...]]`".into()))?;
    let rows: Vec<Vec<i64>> = serde_json::from_str(body.trim())
        .map_err(|e| Error::Usage(format!("bad matrix literal: {e}")))?;
    Ok(MatrixEntry {
        line,
        name: name.trim().to_string(),
        matrix: IntMatrix::from_rows(rows)?,
    })
}

pub fn parse_matrix_text(text: &str) -> Vec<std::result::Result<MatrixEntry, LineError>> {
    text.lines()
        .enumerate()
        .filter(|(_, l)| !is_skippable(l))
        .map(|(i, l)| {
            parse_matrix_line(l.trim(), i + 1).map_err(|e| LineError {
                line: i + 1,
                message: e.to_string(),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn annotated_line() {
        let e = parse_fixture_line(
            r#"k PD: X(1,4,2,5) X(3,6,4,1) X(5,2,6,3) @ genus_paper=3 source="table, row 2""#,
            7,
        )
        .unwrap();
        assert_eq!(e.name(), "k");
        assert_eq!(e.line, 7);
        assert_eq!(e.annotations.genus_paper, Some(3));
        assert_eq!(e.annotations.source.as_deref(), Some("table, row 2"));
    }

    #[test]
    fn plain_line_has_no_annotations() {
        let e = parse_fixture_line("u PD:", 1).unwrap();
        assert!(e.annotations.is_empty());
        assert_eq!(e.diagram.crossing_count(), 0);
    }

    #[test]
    fn bad_annotations() {
        assert!(parse_fixture_line("u PD: @ genus_paper=x", 1).is_err());
        assert!(parse_fixture_line("u PD: @ colour=red", 1).is_err());
        assert!(parse_fixture_line(r#"u PD: @ source="open"#, 1).is_err());
    }

    #[test]
    fn file_keeps_going_after_errors() {
        let text = "# comment\n\nu PD:\nbad PD: X(1,2\nv PD:\n";
        let out = parse_fixture_text(text);
        assert_eq!(out.len(), 3);
        assert!(out[0].is_ok());
        assert_eq!(out[1].as_ref().unwrap_err().line, 4);
        assert!(out[2].is_ok());
        assert!(load_fixtures(text).is_err());
    }

    #[test]
    fn matrices() {
        let m = parse_matrix_line("P: [[4,-2],[-2,1]]", 1).unwrap();
        assert_eq!(m.name, "P");
        assert_eq!(m.matrix.to_string(), "[[4,-2],[-2,1]]");
        assert!(matches!(
            parse_matrix_line("Q: [[1,2],[3]]", 1),
            Err(Error::NotSquare(_))
        ));
        assert!(parse_matrix_line("no colon", 1).is_err());
    }
}
