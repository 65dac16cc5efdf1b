//! The stretched path diagram.
//!
//! Every step becomes an arrow in its own column: a North step is a red up
//! arrow `(1, m)`, an East step a blue down arrow `(1, -n)`, drawn from its
//! start rank. Row `j` is the band between levels `j` and `j + 1`; a red
//! arrow starting at `r` has one segment in each of the rows `r..r+m`, a blue
//! one in each of `r-n..r`.

use std::ops::Range;

use crate::error::{Error, Result};
use crate::paths::{Params, Step, StepWord};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Color {
    /// Up arrow of a North step.
    Red,
    /// Down arrow of an East step.
    Blue,
}

impl From<Step> for Color {
    fn from(step: Step) -> Self {
        match step {
            Step::North => Color::Red,
            Step::East => Color::Blue,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Arrow {
    /// 1-indexed column.
    pub column: usize,
    pub color: Color,
    pub start_rank: i64,
}

impl Arrow {
    pub fn end_rank(&self, params: Params) -> i64 {
        match self.color {
            Color::Red => self.start_rank + params.rise(),
            Color::Blue => self.start_rank - params.fall(),
        }
    }

    /// Rows holding a segment of this arrow.
    pub fn rows(&self, params: Params) -> Range<i64> {
        match self.color {
            Color::Red => self.start_rank..self.start_rank + params.rise(),
            Color::Blue => self.start_rank - params.fall()..self.start_rank,
        }
    }

    pub fn crosses(&self, row: i64, params: Params) -> bool {
        self.rows(params).contains(&row)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RowCounts {
    pub row: i64,
    pub red: i64,
    pub blue: i64,
}

impl RowCounts {
    /// Row count `c(j) = c^r(j) - c^b(j)`.
    pub fn net(&self) -> i64 {
        self.red - self.blue
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PathDiagram {
    params: Params,
    arrows: Vec<Arrow>,
    rows: Range<i64>,
}

impl PathDiagram {
    pub fn new(word: &StepWord) -> Self {
        let params = word.params();
        let arrows: Vec<Arrow> = word
            .iter()
            .map(|(column, step, start_rank)| Arrow {
                column,
                color: step.into(),
                start_rank,
            })
            .collect();
        // Dyck words live in 0..dmn; other words stretch to their extreme ranks.
        let lo = word.vertex_ranks().min().unwrap_or(0).min(0);
        let hi = word.vertex_ranks().max().unwrap_or(0).max(params.height());
        PathDiagram {
            params,
            arrows,
            rows: lo..hi,
        }
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn arrows(&self) -> &[Arrow] {
        &self.arrows
    }

    /// Valid row indices; `0..dmn` for Dyck words.
    pub fn rows(&self) -> Range<i64> {
        self.rows.clone()
    }

    fn check_row(&self, row: i64) -> Result<()> {
        if self.rows.contains(&row) {
            Ok(())
        } else {
            Err(Error::RowOutOfRange {
                row,
                lo: self.rows.start,
                hi: self.rows.end,
            })
        }
    }

    /// Segments of row `row`, left to right, as `(column, color)`.
    pub fn segments_in_row(&self, row: i64) -> Result<Vec<(usize, Color)>> {
        self.check_row(row)?;
        Ok(self.row_segments(row).collect())
    }

    fn row_segments(&self, row: i64) -> impl Iterator<Item = (usize, Color)> + '_ {
        self.arrows
            .iter()
            .filter(move |a| a.crosses(row, self.params))
            .map(|a| (a.column, a.color))
    }

    pub fn row_counts(&self, row: i64) -> Result<RowCounts> {
        self.check_row(row)?;
        let (red, blue) = self.row_segments(row).fold((0, 0), |(r, b), (_, c)| match c {
            Color::Red => (r + 1, b),
            Color::Blue => (r, b + 1),
        });
        Ok(RowCounts { row, red, blue })
    }

    /// `c(j) = 0` in every row.
    pub fn has_zero_row_counts(&self) -> bool {
        self.rows()
            .all(|j| self.row_counts(j).map(|c| c.net() == 0).unwrap_or(false))
    }

    /// Every row reads red, blue, red, blue, ..., ending blue.
    pub fn check_row_structure(&self) -> bool {
        self.rows().all(|row| {
            let mut expect = Color::Red;
            for (_, color) in self.row_segments(row) {
                if color != expect {
                    return false;
                }
                expect = match color {
                    Color::Red => Color::Blue,
                    Color::Blue => Color::Red,
                };
            }
            expect == Color::Red
        })
    }

    /// Total number of red and blue segments.
    pub fn segment_totals(&self) -> (i64, i64) {
        self.arrows.iter().fold((0, 0), |(r, b), a| match a.color {
            Color::Red => (r + self.params.rise(), b),
            Color::Blue => (r, b + self.params.fall()),
        })
    }
}
