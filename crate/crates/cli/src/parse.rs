//! Matrix file parsing.
//!
//! One row per line, characters '0'/'1'; spaces and tabs are ignored, '#'
//! starts a comment, blank lines are skipped, and all rows must have equal
//! length.

use thiserror::Error;
use tricode::gf2::{BitMatrix, BitVector};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: invalid symbol {symbol:?}; expected '0' or '1'")]
    InvalidSymbol { line: usize, symbol: char },
    #[error("line {line}: row has {found} columns, expected {expected}")]
    RaggedRow {
        line: usize,
        expected: usize,
        found: usize,
    },
    #[error("no matrix rows found")]
    Empty,
}

fn parse_row(raw: &str, line: usize) -> Result<Option<BitVector>, ParseError> {
    let content = raw.split('#').next().unwrap_or("");
    let mut bits = Vec::new();
    for symbol in content.chars() {
        match symbol {
            '0' => bits.push(false),
            '1' => bits.push(true),
            ' ' | '\t' | '\r' => {}
            _ => return Err(ParseError::InvalidSymbol { line, symbol }),
        }
    }
    Ok((!bits.is_empty()).then(|| BitVector::from_bits(bits)))
}

/// Parses a matrix file; rows appear in file order.
pub fn parse_matrix(text: &str) -> Result<BitMatrix, ParseError> {
    let mut rows: Vec<BitVector> = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let Some(row) = parse_row(raw, line)? else {
            continue;
        };
        if let Some(first) = rows.first() {
            if row.len() != first.len() {
                return Err(ParseError::RaggedRow {
                    line,
                    expected: first.len(),
                    found: row.len(),
                });
            }
        }
        rows.push(row);
    }
    if rows.is_empty() {
        return Err(ParseError::Empty);
    }
    let cols = rows[0].len();
    Ok(BitMatrix::from_rows(cols, rows))
}

/// Parses a single vector in the same '0'/'1' syntax as file rows.
pub fn parse_vector(text: &str) -> Result<BitVector, ParseError> {
    parse_row(text, 1)?.ok_or(ParseError::Empty)
}
