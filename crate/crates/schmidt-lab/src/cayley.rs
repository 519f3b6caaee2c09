//! The `.cayley` text format: line 1 holds the order n, the next n lines hold
//! n space-separated element indices each (row-major product table). `#`
//! starts a comment that runs to end of line; blank lines are skipped. The
//! identity is inferred during validation. Writing then reading a group
//! reproduces the identical table.

use std::fmt::Write as _;
use std::path::Path;

use crate::group::{Group, GroupError};

#[derive(Debug, thiserror::Error)]
pub enum CayleyError {
    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}, column {col}: {msg}")]
    Parse { line: usize, col: usize, msg: String },
    #[error("table is not a group: {0}")]
    Invalid(#[from] GroupError),
}

/// Serialize a group table.
pub fn format_group(g: &Group) -> String {
    let n = g.order();
    let mut out = String::new();
    let _ = writeln!(out, "{n}");
    for row in g.rows() {
        let line: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        let _ = writeln!(out, "{}", line.join(" "));
    }
    out
}

/// Parse the `.cayley` text format and validate the table as a group.
pub fn parse_group(text: &str) -> Result<Group, CayleyError> {
    let mut rows: Vec<Vec<usize>> = Vec::new();
    let mut n: Option<usize> = None;
    for (lineno, raw) in text.lines().enumerate() {
        let line = match raw.find('#') {
            Some(pos) => &raw[..pos],
            None => raw,
        };
        if line.trim().is_empty() {
            continue;
        }
        let mut fields = Vec::new();
        let mut col_of = Vec::new();
        let mut col = 0usize;
        for tok in line.split(' ') {
            if !tok.is_empty() {
                fields.push(tok);
                col_of.push(col + 1);
            }
            col += tok.len() + 1;
        }
        match n {
            None => {
                if fields.len() != 1 {
                    return Err(CayleyError::Parse {
                        line: lineno + 1,
                        col: col_of.get(1).copied().unwrap_or(1),
                        msg: "expected a single order on the first line".into(),
                    });
                }
                let order: usize = fields[0].parse().map_err(|_| CayleyError::Parse {
                    line: lineno + 1,
                    col: col_of[0],
                    msg: format!("invalid order {:?}", fields[0]),
                })?;
                if order == 0 {
                    return Err(CayleyError::Parse {
                        line: lineno + 1,
                        col: col_of[0],
                        msg: "order must be positive".into(),
                    });
                }
                n = Some(order);
            }
            Some(order) => {
                if rows.len() == order {
                    return Err(CayleyError::Parse {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("expected exactly {order} rows"),
                    });
                }
                if fields.len() != order {
                    return Err(CayleyError::Parse {
                        line: lineno + 1,
                        col: 1,
                        msg: format!("expected {order} entries, found {}", fields.len()),
                    });
                }
                let mut row = Vec::with_capacity(order);
                for (k, tok) in fields.iter().enumerate() {
                    let v: usize = tok.parse().map_err(|_| CayleyError::Parse {
                        line: lineno + 1,
                        col: col_of[k],
                        msg: format!("invalid entry {tok:?}"),
                    })?;
                    row.push(v);
                }
                rows.push(row);
            }
        }
    }
    let order = n.ok_or(CayleyError::Parse { line: 1, col: 1, msg: "empty file".into() })?;
    if rows.len() != order {
        return Err(CayleyError::Parse {
            line: text.lines().count(),
            col: 1,
            msg: format!("expected {order} rows, found {}", rows.len()),
        });
    }
    Ok(Group::from_rows(&rows)?)
}

pub fn write_group(g: &Group, path: &Path) -> Result<(), CayleyError> {
    std::fs::write(path, format_group(g))?;
    Ok(())
}

pub fn read_group(path: &Path) -> Result<Group, CayleyError> {
    let text = std::fs::read_to_string(path)?;
    parse_group(&text)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::catalog;

    #[test]
    fn c2_roundtrip_is_exact() {
        let c2 = catalog("C2").unwrap();
        let text = format_group(&c2);
        assert_eq!(text, "2\n0 1\n1 0\n");
        let back = parse_group(&text).unwrap();
        assert_eq!(back, c2);
        assert_eq!(format_group(&back), text);
    }

    #[test]
    fn comments_and_blank_lines() {
        let text = "# sample\n2\n\n0 1 # identity row\n1 0\n";
        let g = parse_group(text).unwrap();
        assert_eq!(g.order(), 2);
    }

    #[test]
    fn non_latin_rows_parse_but_fail_validation() {
        let text = "2\n0 0\n1 0\n";
        assert!(matches!(parse_group(text), Err(CayleyError::Invalid(_))));
    }

    #[test]
    fn diagnostics_carry_line_and_column() {
        let err = parse_group("2\n0 x\n1 0\n").unwrap_err();
        match err {
            CayleyError::Parse { line, col, .. } => {
                assert_eq!(line, 2);
                assert_eq!(col, 3);
            }
            other => panic!("expected parse error, got {other:?}"),
        }
        let err = parse_group("2\n0 1\n").unwrap_err();
        assert!(matches!(err, CayleyError::Parse { .. }));
    }

    #[test]
    fn catalog_roundtrips() {
        for name in ["S3", "Q8", "A4", "SL23", "C24"] {
            let g = catalog(name).unwrap();
            let back = parse_group(&format_group(&g)).unwrap();
            assert_eq!(back, g, "{name}");
        }
    }

    #[test]
    fn constructed_group_survives_the_file_format() {
        use crate::construct::{miller_moreno, MmParams};
        let mm = miller_moreno(
            MmParams::new(2, 3, 1).unwrap(),
            &crate::config::RunConfig::default(),
        )
        .unwrap();
        let back = parse_group(&format_group(&mm.group)).unwrap();
        assert_eq!(back, mm.group);
        assert!(crate::group::are_isomorphic(&back, &catalog("A4").unwrap()).is_some());
    }
}
