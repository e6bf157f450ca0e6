//! Plain-text generator matrix files: optional '#' comment lines, then one
//! row per line as '0'/'1' characters with optional single spaces. Blank
//! lines are ignored. Parse failures carry line/column positions.

use csst::gf2::{BinaryMatrix, BinaryVector};
use std::fmt;

#[derive(Debug)]
pub struct ParseError {
    pub line: usize,
    pub col: usize,
    pub message: String,
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}: {}", self.line, self.col, self.message)
    }
}

impl std::error::Error for ParseError {}

pub fn parse_matrix(content: &str) -> Result<BinaryMatrix, ParseError> {
    let mut rows: Vec<BinaryVector> = Vec::new();
    let mut width: Option<usize> = None;
    for (idx, raw) in content.lines().enumerate() {
        let lineno = idx + 1;
        let line = raw.trim_end();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut bits = Vec::new();
        for (col0, ch) in line.chars().enumerate() {
            match ch {
                '0' => bits.push(false),
                '1' => bits.push(true),
                ' ' => {}
                other => {
                    return Err(ParseError {
                        line: lineno,
                        col: col0 + 1,
                        message: format!("unexpected character {other:?}; rows are '0'/'1' with optional spaces"),
                    });
                }
            }
        }
        if bits.is_empty() {
            continue;
        }
        match width {
            None => width = Some(bits.len()),
            Some(w) if w != bits.len() => {
                return Err(ParseError {
                    line: lineno,
                    col: 1,
                    message: format!("row has {} columns, expected {w}", bits.len()),
                });
            }
            _ => {}
        }
        rows.push(BinaryVector::from_bits(bits));
    }
    let Some(w) = width else {
        return Err(ParseError {
            line: 1,
            col: 1,
            message: "no matrix rows found".into(),
        });
    };
    Ok(BinaryMatrix::new(w, rows).expect("widths were checked per line"))
}
