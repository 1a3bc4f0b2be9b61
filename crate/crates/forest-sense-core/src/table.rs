//! Rectangular curve tables: a named abscissa column followed by one or more
//! value columns. Estimators and experiments emit these; the CLI serializes
//! them.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

/// Construction errors for [`CurveTable`].
#[derive(Debug, Clone, PartialEq)]
pub enum TableError {
    NoColumns,
    /// `row` has a different length than the header.
    RaggedRow { row: usize, expected: usize, got: usize },
    /// The first column must be strictly increasing.
    AbscissaNotIncreasing { row: usize },
}

impl fmt::Display for TableError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TableError::NoColumns => write!(f, "table needs at least one column"),
            TableError::RaggedRow { row, expected, got } => {
                write!(f, "row {row} has {got} fields, expected {expected}")
            }
            TableError::AbscissaNotIncreasing { row } => {
                write!(f, "abscissa not strictly increasing at row {row}")
            }
        }
    }
}

impl core::error::Error for TableError {}

/// A rectangular table of `f64` values whose first column is a strictly
/// increasing abscissa.
#[derive(Debug, Clone, PartialEq)]
pub struct CurveTable {
    columns: Vec<String>,
    rows: Vec<Vec<f64>>,
}

impl CurveTable {
    pub fn new(columns: Vec<String>, rows: Vec<Vec<f64>>) -> Result<Self, TableError> {
        if columns.is_empty() {
            return Err(TableError::NoColumns);
        }
        for (i, row) in rows.iter().enumerate() {
            if row.len() != columns.len() {
                return Err(TableError::RaggedRow {
                    row: i,
                    expected: columns.len(),
                    got: row.len(),
                });
            }
            if i > 0 && !(row[0] > rows[i - 1][0]) {
                return Err(TableError::AbscissaNotIncreasing { row: i });
            }
        }
        Ok(Self { columns, rows })
    }

    pub fn columns(&self) -> &[String] {
        &self.columns
    }

    pub fn rows(&self) -> &[Vec<f64>] {
        &self.rows
    }

    pub fn n_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn n_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn column_index(&self, name: &str) -> Option<usize> {
        self.columns.iter().position(|c| c == name)
    }

    /// Values of column `idx`, top to bottom.
    pub fn column(&self, idx: usize) -> Vec<f64> {
        self.rows.iter().map(|r| r[idx]).collect()
    }

    pub fn abscissae(&self) -> Vec<f64> {
        self.column(0)
    }

    /// Location and value of the maximum of column `idx`; `None` for an
    /// empty table.
    pub fn max_of_column(&self, idx: usize) -> Option<(f64, f64)> {
        self.rows
            .iter()
            .map(|r| (r[0], r[idx]))
            .fold(None, |best, (x, v)| match best {
                Some((_, bv)) if bv >= v => best,
                _ => Some((x, v)),
            })
    }
}
