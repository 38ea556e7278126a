//! Plain-text matrix format.
//!
//! ```text
//! # optional comment lines
//! 2
//! 1 -1
//! 1 1
//! ```
//!
//! The first data line is the dimension `n`, followed by `n` rows of `n` integers.
//! Columns are basis vectors unless the caller asks for rows-as-vectors.

use super::matrix::SquareMatrix;
use crate::error::{Error, Result};

fn parse_row(line: &str, lineno: usize) -> Result<Vec<i64>> {
    line.split_whitespace()
        .map(|tok| {
            tok.parse::<i64>().map_err(|e| Error::Parse {
                line: lineno,
                message: format!("bad integer {tok:?}: {e}"),
            })
        })
        .collect()
}

/// Parses the file format. With `rows_as_vectors` the matrix is transposed on ingest.
pub fn parse_matrix(text: &str, rows_as_vectors: bool) -> Result<SquareMatrix<i64>> {
    let mut data = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));

    let (lineno, header) =
        data.next().ok_or(Error::Parse { line: 0, message: "missing dimension line".into() })?;
    let n: usize = header.parse().map_err(|_| Error::Parse {
        line: lineno,
        message: format!("expected dimension, found {header:?}"),
    })?;

    let mut rows = Vec::with_capacity(n);
    for (lineno, line) in data {
        if rows.len() == n {
            return Err(Error::Parse { line: lineno, message: format!("more than {n} rows") });
        }
        let row = parse_row(line, lineno)?;
        if row.len() != n {
            return Err(Error::Parse {
                line: lineno,
                message: format!("expected {n} entries, found {}", row.len()),
            });
        }
        rows.push(row);
    }
    if rows.len() != n {
        return Err(Error::Parse {
            line: text.lines().count(),
            message: format!("expected {n} rows, found {}", rows.len()),
        });
    }
    let m = SquareMatrix::from_rows(rows)?;
    Ok(if rows_as_vectors { m.transpose() } else { m })
}

/// Parses the inline form `"2 0; 0 2"` (rows separated by semicolons).
pub fn parse_inline(text: &str, rows_as_vectors: bool) -> Result<SquareMatrix<i64>> {
    let rows = text
        .split(';')
        .map(str::trim)
        .filter(|r| !r.is_empty())
        .map(|r| parse_row(r, 1))
        .collect::<Result<Vec<_>>>()?;
    let n = rows.len();
    if let Some(bad) = rows.iter().find(|r| r.len() != n) {
        return Err(Error::Parse {
            line: 1,
            message: format!("expected {n} entries per row, found {}", bad.len()),
        });
    }
    let m = SquareMatrix::from_rows(rows)?;
    Ok(if rows_as_vectors { m.transpose() } else { m })
}

/// Renders a matrix in the file format, including the dimension line.
pub fn format_matrix(m: &SquareMatrix<i64>) -> String {
    let mut out = format!("{}\n", m.dim());
    if m.dim() > 0 {
        out.push_str(&m.to_string());
        out.push('\n');
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    #[test]
    fn comments_and_transpose() {
        let text = "# a lattice\n2\n1 -1\n\n# columns are vectors\n1 1\n";
        let m = parse_matrix(text, false).unwrap();
        assert_eq!(m.rows(), vec![vec![1, -1], vec![1, 1]]);
        let t = parse_matrix(text, true).unwrap();
        assert_eq!(t.rows(), vec![vec![1, 1], vec![-1, 1]]);
    }

    #[test]
    fn parse_errors() {
        assert!(matches!(parse_matrix("", false), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("2\n1 0\n", false), Err(Error::Parse { .. })));
        assert!(matches!(parse_matrix("2\n1 0 0\n0 1\n", false), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix("1\nx\n", false), Err(Error::Parse { line: 2, .. })));
        assert!(matches!(parse_matrix("1\n1\n1\n", false), Err(Error::Parse { line: 3, .. })));
        assert!(matches!(parse_inline("1 2; 3", false), Err(Error::Parse { .. })));
    }

    #[test]
    fn inline() {
        assert_eq!(parse_inline("2 0; 0 2", false).unwrap(), SquareMatrix::diagonal(&[2, 2]));
        assert_eq!(parse_inline("3", false).unwrap().rows(), vec![vec![3]]);
    }

    #[test]
    fn empty_matrix_round_trips() {
        let m = SquareMatrix::<i64>::zeros(0);
        assert_eq!(parse_matrix(&format_matrix(&m), false).unwrap(), m);
    }

    proptest! {
        #[test]
        fn round_trip(n in 1usize..6, entries in prop::collection::vec(any::<i64>(), 36)) {
            let rows: Vec<Vec<i64>> = (0..n).map(|i| entries[i * n..i * n + n].to_vec()).collect();
            let m = SquareMatrix::from_rows(rows).unwrap();
            prop_assert_eq!(parse_matrix(&format_matrix(&m), false).unwrap(), m);
        }
    }
}
