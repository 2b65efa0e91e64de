//! Grids of the comparison functions `A, B` and `C, D`, rendered at four decimals.

use std::fmt::Write as _;
use std::ops::RangeInclusive;

use serde::Serialize;
use thiserror::Error;

use crate::families::{compare_ab, compare_cd};

/// Largest row or column index accepted by [`ComparisonTable::build`].
pub const MAX_TABLE_INDEX: usize = 10_000;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("invalid {axis} range {start}..={end}: {reason}")]
    InvalidRange {
        axis: &'static str,
        start: usize,
        end: usize,
        reason: &'static str,
    },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum TableKind {
    /// `A(p, q)` and `B(p, q)`; rows are `p`, columns are `q`.
    AB,
    /// `C(r, k)` and `D(r, k)`; rows are `r`, columns are `k`.
    CD,
}

impl TableKind {
    pub fn default_rows(self) -> RangeInclusive<usize> {
        match self {
            TableKind::AB => 2..=7,
            TableKind::CD => 2..=13,
        }
    }

    pub fn default_cols(self) -> RangeInclusive<usize> {
        match self {
            TableKind::AB => 2..=4,
            TableKind::CD => 2..=5,
        }
    }

    fn labels(self) -> (&'static str, &'static str, &'static str) {
        match self {
            TableKind::AB => ("p", "A", "B"),
            TableKind::CD => ("r", "C", "D"),
        }
    }

    fn min_col(self) -> usize {
        match self {
            TableKind::AB => 0,
            TableKind::CD => 1,
        }
    }
}

/// A computed grid. A cell is empty when the row index is below the
/// column index (the functions are only defined for `p >= q`, `r >= k`).
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ComparisonTable {
    pub kind: TableKind,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
    pub cells: Vec<Vec<Option<(f64, f64)>>>,
}

impl ComparisonTable {
    pub fn build(
        kind: TableKind,
        rows: RangeInclusive<usize>,
        cols: RangeInclusive<usize>,
    ) -> Result<Self, TableError> {
        check_range("row", &rows, 0)?;
        check_range("column", &cols, kind.min_col())?;
        let rows: Vec<usize> = rows.collect();
        let cols: Vec<usize> = cols.collect();
        let cells = rows
            .iter()
            .map(|&r| {
                cols.iter()
                    .map(|&c| match kind {
                        TableKind::AB => compare_ab(r, c).ok(),
                        TableKind::CD => compare_cd(r, c).ok(),
                    })
                    .collect()
            })
            .collect();
        Ok(ComparisonTable {
            kind,
            rows,
            cols,
            cells,
        })
    }

    /// The grid laid out as printed in the literature.
    pub fn default_for(kind: TableKind) -> Self {
        Self::build(kind, kind.default_rows(), kind.default_cols())
            .expect("default ranges are valid")
    }

    pub fn get(&self, row: usize, col: usize) -> Option<(f64, f64)> {
        let i = self.rows.iter().position(|&r| r == row)?;
        let j = self.cols.iter().position(|&c| c == col)?;
        self.cells[i][j]
    }

    pub fn header(&self) -> Vec<String> {
        let (row, first, second) = self.kind.labels();
        let mut out = vec![row.to_string()];
        for c in &self.cols {
            out.push(format!("{first}({row},{c})"));
            out.push(format!("{second}({row},{c})"));
        }
        out
    }

    /// CSV with four-decimal values and `-` for undefined cells.
    pub fn to_csv(&self) -> String {
        let mut out = self.header().join(",");
        out.push('\n');
        for (i, r) in self.rows.iter().enumerate() {
            let mut fields = vec![r.to_string()];
            for cell in &self.cells[i] {
                fields.extend(format_cell(*cell));
            }
            out.push_str(&fields.join(","));
            out.push('\n');
        }
        out
    }

    /// Column-aligned plain text.
    pub fn to_text(&self) -> String {
        let header = self.header();
        let mut lines: Vec<Vec<String>> = vec![header];
        for (i, r) in self.rows.iter().enumerate() {
            let mut fields = vec![r.to_string()];
            for cell in &self.cells[i] {
                fields.extend(format_cell(*cell));
            }
            lines.push(fields);
        }
        let widths: Vec<usize> = (0..lines[0].len())
            .map(|j| lines.iter().map(|l| l[j].len()).max().unwrap_or(0))
            .collect();
        let mut out = String::new();
        for line in &lines {
            let cells: Vec<String> = line
                .iter()
                .zip(&widths)
                .map(|(s, w)| format!("{s:>w$}"))
                .collect();
            writeln!(out, "{}", cells.join("  ").trim_end()).unwrap();
        }
        out
    }
}

fn format_cell(cell: Option<(f64, f64)>) -> [String; 2] {
    match cell {
        Some((a, b)) => [format!("{a:.4}"), format!("{b:.4}")],
        None => ["-".to_string(), "-".to_string()],
    }
}

fn check_range(
    axis: &'static str,
    range: &RangeInclusive<usize>,
    min: usize,
) -> Result<(), TableError> {
    let (start, end) = (*range.start(), *range.end());
    let reason = if start > end {
        Some("start exceeds end")
    } else if start < min {
        Some("below the domain of the comparison functions")
    } else if end > MAX_TABLE_INDEX {
        Some("too large")
    } else {
        None
    };
    match reason {
        Some(reason) => Err(TableError::InvalidRange {
            axis,
            start,
            end,
            reason,
        }),
        None => Ok(()),
    }
}
