//! Plain-text Cayley table files.
//!
//! The first meaningful line holds the order `n`; the next `n` lines hold
//! row `g` of the table as `n` space-separated indices. Blank lines and
//! `#` comments are ignored. Any index may be the identity.

use std::fmt::Write as _;
use std::path::Path;

use thiserror::Error;

use crate::group::{Group, GroupError};
use crate::MAX_ORDER;

#[derive(Debug, Error)]
pub enum CayleyError {
    #[error("cannot read {path}: {source}")]
    Io {
        path: String,
        source: std::io::Error,
    },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("table does not define a group: {0}")]
    NotAGroup(#[from] GroupError),
}

pub fn parse_cayley_table(text: &str, label: &str) -> Result<Group, CayleyError> {
    let mut lines = text.lines().enumerate().filter_map(|(i, raw)| {
        let content = raw.split('#').next().unwrap_or("").trim();
        (!content.is_empty()).then_some((i + 1, content))
    });

    let (line, header) = lines.next().ok_or(CayleyError::Parse {
        line: 1,
        message: "missing order line".into(),
    })?;
    let order: usize = header.parse().map_err(|_| CayleyError::Parse {
        line,
        message: format!("expected the group order, found {header:?}"),
    })?;
    if order == 0 {
        return Err(GroupError::EmptyGroup.into());
    }
    if order > MAX_ORDER {
        return Err(GroupError::OrderTooLarge { order }.into());
    }

    let mut table = Vec::with_capacity(order * order);
    for row in 0..order {
        let (line, content) = lines.next().ok_or(CayleyError::Parse {
            line: text.lines().count() + 1,
            message: format!("expected {order} table rows, found {row}"),
        })?;
        let entries: Vec<&str> = content.split_whitespace().collect();
        if entries.len() != order {
            return Err(CayleyError::Parse {
                line,
                message: format!("row {row} has {} entries, expected {order}", entries.len()),
            });
        }
        for entry in entries {
            let value: usize = entry.parse().map_err(|_| CayleyError::Parse {
                line,
                message: format!("{entry:?} is not an element index"),
            })?;
            table.push(value);
        }
    }
    if let Some((line, _)) = lines.next() {
        return Err(CayleyError::Parse {
            line,
            message: "unexpected content after the last table row".into(),
        });
    }
    Ok(Group::from_table(order, &table, label)?)
}

pub fn load_cayley_table(path: impl AsRef<Path>) -> Result<Group, CayleyError> {
    let path = path.as_ref();
    let text = std::fs::read_to_string(path).map_err(|source| CayleyError::Io {
        path: path.display().to_string(),
        source,
    })?;
    let label = format!("file:{}", path.display());
    parse_cayley_table(&text, &label)
}

/// Serializes a group in the same format, identity at index 0.
pub fn format_cayley_table(group: &Group) -> String {
    let mut out = String::new();
    writeln!(out, "# {}", group.label()).unwrap();
    writeln!(out, "{}", group.order()).unwrap();
    for g in 0..group.order() {
        let row: Vec<String> = group.row(g).map(|x| x.to_string()).collect();
        writeln!(out, "{}", row.join(" ")).unwrap();
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructors::{make_cyclic, make_symmetric};

    #[test]
    fn z3_with_comments_and_moved_identity() {
        let text = "# Z3, identity stored as 1\n3\n\n2 0 1\n0 1 2  # identity row\n1 2 0\n";
        let g = parse_cayley_table(text, "z3").unwrap();
        assert_eq!(g.row(0).collect::<Vec<_>>(), vec![0, 1, 2]);
        let z3 = make_cyclic(3).unwrap();
        for i in 0..3 {
            assert_eq!(g.row(i).collect::<Vec<_>>(), z3.row(i).collect::<Vec<_>>());
        }
    }

    #[test]
    fn round_trip_s3() {
        let s3 = make_symmetric(3).unwrap();
        let g = parse_cayley_table(&format_cayley_table(&s3), "S3").unwrap();
        assert_eq!(g, s3);
    }

    #[test]
    fn corrupted_cell_reports_a_witness() {
        let s3 = make_symmetric(3).unwrap();
        let text = format_cayley_table(&s3);
        let mut lines: Vec<String> = text.lines().map(String::from).collect();
        // swap two entries of row 3
        let mut row: Vec<usize> = lines[5].split(' ').map(|x| x.parse().unwrap()).collect();
        row.swap(1, 2);
        lines[5] = row
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(" ");
        let err = parse_cayley_table(&lines.join("\n"), "bad").unwrap_err();
        assert!(
            matches!(
                err,
                CayleyError::NotAGroup(
                    GroupError::NotAssociative { .. } | GroupError::NoInverse { .. }
                )
            ),
            "{err}"
        );
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(
            parse_cayley_table("", "x"),
            Err(CayleyError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_cayley_table("two\n", "x"),
            Err(CayleyError::Parse { line: 1, .. })
        ));
        assert!(matches!(
            parse_cayley_table("2\n0 1\n1\n", "x"),
            Err(CayleyError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_cayley_table("2\n0 1\n", "x"),
            Err(CayleyError::Parse { .. })
        ));
        assert!(matches!(
            parse_cayley_table("1\n0\n0\n", "x"),
            Err(CayleyError::Parse { line: 3, .. })
        ));
        assert!(matches!(
            parse_cayley_table("600\n", "x"),
            Err(CayleyError::NotAGroup(GroupError::OrderTooLarge {
                order: 600
            }))
        ));
        assert!(matches!(
            parse_cayley_table("0\n", "x"),
            Err(CayleyError::NotAGroup(GroupError::EmptyGroup))
        ));
        assert!(matches!(
            parse_cayley_table("2\n0 1\n1 2\n", "x"),
            Err(CayleyError::NotAGroup(GroupError::EntryOutOfRange { .. }))
        ));
    }
}
