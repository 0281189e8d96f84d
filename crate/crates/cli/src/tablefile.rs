//! Cayley-table ring files.
//!
//! ```text
//! n
//! <n rows of n integers: addition>
//!
//! <n rows of n integers: multiplication>
//!
//! <optional: n integers, an involution as a permutation>
//! ```
//!
//! Blank lines only separate blocks; the reader does not insist on them.

use std::fs;
use std::io;
use std::path::{Path, PathBuf};

use starzd::ring::{build_from_tables_labeled, FiniteRing, RingError, StarRing};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum TableFileError {
    #[error("cannot read {path}: {source}")]
    Io { path: PathBuf, source: io::Error },
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TableFile {
    pub add: Vec<Vec<usize>>,
    pub mul: Vec<Vec<usize>>,
    pub involution: Option<Vec<usize>>,
}

impl TableFile {
    pub fn from_star_ring(sr: &StarRing) -> Self {
        let (add, mul) = sr.ring().cayley_tables();
        TableFile {
            add,
            mul,
            involution: Some(sr.involution().to_vec()),
        }
    }

    pub fn order(&self) -> usize {
        self.add.len()
    }

    /// Validates the ring axioms on the stored tables.
    pub fn build_ring(&self, label: &str) -> Result<FiniteRing, RingError> {
        build_from_tables_labeled(&self.add, &self.mul, label)
    }
}

fn parse_row(line: usize, text: &str, n: usize, what: &str) -> Result<Vec<usize>, TableFileError> {
    let err = |message: String| TableFileError::Parse { line, message };
    let values = text
        .split_whitespace()
        .map(|tok| match tok.parse::<usize>() {
            Ok(v) if v < n => Ok(v),
            Ok(v) => Err(err(format!("entry {v} is not below the order {n}"))),
            Err(_) => Err(err(format!("`{tok}` is not a non-negative integer"))),
        })
        .collect::<Result<Vec<_>, _>>()?;
    if values.len() != n {
        return Err(err(format!("expected {n} entries in {what}, found {}", values.len())));
    }
    Ok(values)
}

pub fn parse_table_text(text: &str) -> Result<TableFile, TableFileError> {
    let lines: Vec<(usize, &str)> = text
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty())
        .collect();
    let eof = |what: &str| TableFileError::Parse {
        line: text.lines().count(),
        message: format!("unexpected end of file, expected {what}"),
    };

    let &(line, first) = lines.first().ok_or_else(|| eof("the ring order"))?;
    let n: usize = first.parse().map_err(|_| TableFileError::Parse {
        line,
        message: format!("expected the ring order, found `{first}`"),
    })?;
    if n == 0 {
        return Err(TableFileError::Parse {
            line,
            message: "ring order must be positive".into(),
        });
    }
    let block = |from: usize, what: &str| -> Result<Vec<Vec<usize>>, TableFileError> {
        (from..from + n)
            .map(|i| {
                let &(line, row) = lines.get(i).ok_or_else(|| eof(what))?;
                parse_row(line, row, n, what)
            })
            .collect()
    };
    let add = block(1, "an addition row")?;
    let mul = block(1 + n, "a multiplication row")?;
    let involution = match lines.get(1 + 2 * n) {
        Some(&(line, row)) => Some(parse_row(line, row, n, "the involution")?),
        None => None,
    };
    if let Some(&(line, extra)) = lines.get(2 + 2 * n) {
        return Err(TableFileError::Parse {
            line,
            message: format!("unexpected trailing content `{extra}`"),
        });
    }
    Ok(TableFile { add, mul, involution })
}

pub fn read_table_file(path: &Path) -> Result<TableFile, TableFileError> {
    let text = fs::read_to_string(path).map_err(|source| TableFileError::Io {
        path: path.to_path_buf(),
        source,
    })?;
    parse_table_text(&text)
}

pub fn write_table_text(file: &TableFile) -> String {
    let join = |row: &[usize]| row.iter().map(usize::to_string).collect::<Vec<_>>().join(" ");
    let mut out = format!("{}\n", file.order());
    for r in &file.add {
        out.push_str(&join(r));
        out.push('\n');
    }
    out.push('\n');
    for r in &file.mul {
        out.push_str(&join(r));
        out.push('\n');
    }
    if let Some(inv) = &file.involution {
        out.push('\n');
        out.push_str(&join(inv));
        out.push('\n');
    }
    out
}
