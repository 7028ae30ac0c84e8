//! Text formats: tower files and divisor literals.
//!
//! Tower files are line oriented. `#` starts a comment; blank lines are
//! ignored. The first record is `dim <d>`, followed by `d - 1` records
//! `row c_{i,1} ... c_{i,i}`.
//!
//! ```text
//! # Example A tower, n = 3, e = 2
//! dim 4
//! row 2
//! row 2 1
//! row 4 2 2
//! ```
//!
//! Divisor literals are comma-separated rationals, e.g. `4,2,2,1/2`.

use std::fmt::Write;
use std::str::FromStr;

use crate::{DivisorClass, Error, Result, TowerSpec, Q};

fn parse_error(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        column,
        message: message.into(),
    }
}

/// Whitespace-separated tokens of a line with their 1-based columns.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start = None;
    for (idx, ch) in line.char_indices() {
        match (ch.is_whitespace(), start) {
            (true, Some(s)) => {
                out.push((s, &line[s..idx]));
                start = None;
            }
            (false, None) => start = Some(idx),
            _ => {}
        }
    }
    if let Some(s) = start {
        out.push((s, &line[s..]));
    }
    out.into_iter()
        .map(|(byte, tok)| (line[..byte].chars().count() + 1, tok))
        .collect()
}

pub fn parse_tower_file(text: &str) -> Result<TowerSpec> {
    let mut dim: Option<(usize, usize)> = None;
    let mut rows: Vec<Vec<i64>> = Vec::new();
    let mut last_line = 0;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        last_line = line_no;
        let content = raw.split('#').next().unwrap_or("");
        let toks = tokens(content);
        let Some(&(col, keyword)) = toks.first() else {
            continue;
        };
        match keyword {
            "dim" => {
                if dim.is_some() {
                    return Err(parse_error(line_no, col, "duplicate `dim` record"));
                }
                if !rows.is_empty() {
                    return Err(parse_error(line_no, col, "`dim` must precede all rows"));
                }
                let [_, (vcol, value)] = toks[..] else {
                    return Err(parse_error(line_no, col, "expected `dim <d>`"));
                };
                let d: usize = value.parse().map_err(|_| {
                    parse_error(line_no, vcol, format!("invalid dimension `{value}`"))
                })?;
                if d == 0 {
                    return Err(parse_error(line_no, vcol, "dimension must be positive"));
                }
                dim = Some((d, line_no));
            }
            "row" => {
                let Some((d, _)) = dim else {
                    return Err(parse_error(line_no, col, "`row` before `dim`"));
                };
                let expected = rows.len() + 1;
                if expected >= d {
                    return Err(parse_error(
                        line_no,
                        col,
                        format!("too many rows: dim {d} takes {} rows", d - 1),
                    ));
                }
                let mut row = Vec::with_capacity(expected);
                for &(tcol, tok) in &toks[1..] {
                    let v: i64 = tok.parse().map_err(|_| {
                        parse_error(line_no, tcol, format!("invalid integer `{tok}`"))
                    })?;
                    row.push(v);
                }
                if row.len() != expected {
                    return Err(parse_error(
                        line_no,
                        col,
                        format!("row {expected} must have {expected} entries, found {}", row.len()),
                    ));
                }
                rows.push(row);
            }
            other => {
                return Err(parse_error(line_no, col, format!("unknown record `{other}`")));
            }
        }
    }

    let Some((d, dim_line)) = dim else {
        return Err(parse_error(last_line.max(1), 1, "missing `dim` record"));
    };
    if rows.len() + 1 != d {
        return Err(parse_error(
            dim_line,
            1,
            format!("expected {} rows for dim {d}, found {}", d - 1, rows.len()),
        ));
    }
    TowerSpec::from_rows(rows)
}

pub fn render_tower_file(tower: &TowerSpec) -> String {
    let mut out = format!("dim {}\n", tower.dim());
    for row in tower.rows() {
        let entries: Vec<String> = row.iter().map(i64::to_string).collect();
        writeln!(out, "row {}", entries.join(" ")).unwrap();
    }
    out
}

pub fn parse_rational(token: &str) -> Option<Q> {
    let token = token.trim();
    if token.is_empty() {
        return None;
    }
    let q = Q::from_str(token).ok()?;
    Some(q)
}

pub fn parse_divisor(literal: &str) -> Result<DivisorClass> {
    let mut coeffs = Vec::new();
    let mut column = 1;
    for part in literal.split(',') {
        let q = parse_rational(part)
            .ok_or_else(|| parse_error(1, column, format!("invalid rational `{}`", part.trim())))?;
        coeffs.push(q);
        column += part.chars().count() + 1;
    }
    Ok(DivisorClass::new(coeffs))
}

/// Semicolon-separated divisor literals, e.g. `3,1;3,1`.
pub fn parse_divisor_list(literal: &str) -> Result<Vec<DivisorClass>> {
    literal
        .split(';')
        .filter(|s| !s.trim().is_empty())
        .map(parse_divisor)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parse_examples() {
        let f3 = parse_tower_file("dim 2\nrow 3").unwrap();
        assert_eq!(f3, TowerSpec::from_rows(vec![vec![3]]).unwrap());

        let w = parse_tower_file("dim 4\nrow 2\nrow 2 1\nrow 4 2 2").unwrap();
        assert_eq!(w.rows(), &[vec![2], vec![2, 1], vec![4, 2, 2]]);

        let err = parse_tower_file("dim 3\nrow 2").unwrap_err();
        assert!(err.to_string().contains("expected 2 rows"), "{err}");
    }

    #[test]
    fn comments_and_blanks() {
        let text = "# a comment\n\ndim 1   # P^1\n";
        assert_eq!(parse_tower_file(text).unwrap().dim(), 1);
    }

    #[test]
    fn error_positions() {
        let err = parse_tower_file("dim 3\nrow 2\nrow 1 x").unwrap_err();
        assert_eq!(
            err,
            Error::Parse {
                line: 3,
                column: 7,
                message: "invalid integer `x`".into()
            }
        );
        let err = parse_tower_file("dim 3\nrow 2 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
        let err = parse_tower_file("row 2\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, column: 1, .. }));
        let err = parse_tower_file("dim 2\nrow 1\ncol 3").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
    }

    #[test]
    fn render_roundtrip() {
        let text = "dim 4\nrow 2\nrow 2 1\nrow 4 2 2\n";
        let tower = parse_tower_file(text).unwrap();
        assert_eq!(render_tower_file(&tower), text);
    }

    #[test]
    fn divisor_literals() {
        let d = parse_divisor("4,2,2,1/2").unwrap();
        assert_eq!(d.to_string(), "4,2,2,1/2");
        assert!(!d.is_integral());
        assert_eq!(parse_divisor("-1").unwrap(), DivisorClass::from_ints(&[-1]));
        assert!(parse_divisor("1,,2").is_err());
        assert!(parse_divisor("1,a").is_err());
        assert_eq!(parse_divisor_list("3,1;3,1").unwrap().len(), 2);
    }
}
