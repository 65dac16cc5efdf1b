//! The sweep map.
//!
//! Steps are read in sweep order: by increasing start rank, and rightmost
//! first among equal ranks. In the path diagram this is sweeping upward with
//! a line of infinitesimal positive slope, which is what [`GreenLine`]
//! models exactly.

use std::cmp::Ordering;
use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_rational::Ratio;

use crate::diagram::{Arrow, Color, PathDiagram};
use crate::error::{Error, Result};
use crate::paths::{enumerate_dyck, Params, Step, StepWord};

/// 1-indexed columns of a word in sweep order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SweepOrder {
    columns: Vec<usize>,
}

impl SweepOrder {
    pub fn columns(&self) -> &[usize] {
        &self.columns
    }

    /// 1-indexed sweep position of `column`.
    pub fn position_of(&self, column: usize) -> Option<usize> {
        self.columns.iter().position(|&c| c == column).map(|i| i + 1)
    }
}

pub fn sweep_order(word: &StepWord) -> SweepOrder {
    let mut columns: Vec<usize> = (1..=word.len()).collect();
    columns.sort_by_key(|&c| word.key(c));
    SweepOrder { columns }
}

/// The sweep image: the letters of `word` read in sweep order.
pub fn sweep(word: &StepWord) -> StepWord {
    let steps = sweep_order(word).columns.iter().map(|&c| word.steps()[c - 1]).collect();
    StepWord::from_steps(steps, word.params()).expect("sweep permutes letters")
}

/// Start rank of the `position`-th step (1-indexed) of the sweep image,
/// computed as `b*m - a*n` from the North (`b`) and East (`a`) steps swept
/// before it.
pub fn image_start_rank(word: &StepWord, position: usize) -> Result<i64> {
    if position == 0 || position > word.len() {
        return Err(Error::IndexOutOfRange {
            index: position,
            len: word.len(),
        });
    }
    let params = word.params();
    let order = sweep_order(word);
    Ok(order.columns[..position - 1]
        .iter()
        .map(|&c| match word.steps()[c - 1] {
            Step::North => params.rise(),
            Step::East => -params.fall(),
        })
        .sum())
}

/// The line of infinitesimal positive slope through the start of one step.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GreenLine {
    /// Rank of the reference step's start.
    pub level: i64,
    /// 1-indexed column of the reference step; its start has `x = column - 1`.
    pub column: usize,
}

impl GreenLine {
    pub fn through(word: &StepWord, column: usize) -> Self {
        GreenLine {
            level: word.rank(column),
            column,
        }
    }

    fn x0(&self) -> Ratio<i64> {
        Ratio::from_integer(self.column as i64 - 1)
    }

    /// Side of the point `(x, height)`: `Greater` above, `Less` below.
    ///
    /// At the line's own level a point is above iff it lies left of the
    /// reference start; the slope never needs a numeric value.
    pub fn side(&self, x: Ratio<i64>, height: Ratio<i64>) -> Ordering {
        height
            .cmp(&Ratio::from_integer(self.level))
            .then_with(|| self.x0().cmp(&x))
    }

    /// Whether the start of `column` lies strictly below the line.
    pub fn starts_below(&self, word: &StepWord, column: usize) -> bool {
        let x = Ratio::from_integer(column as i64 - 1);
        self.side(x, Ratio::from_integer(word.rank(column))) == Ordering::Less
    }

    /// Side of the segment of an arrow in `row`, judged at its midpoint.
    pub fn segment_side(&self, arrow: &Arrow, params: Params, row: i64) -> Ordering {
        let mid_height = Ratio::new(2 * row + 1, 2);
        let offset = row - arrow.start_rank;
        let mid_x = match arrow.color {
            Color::Red => Ratio::new(2 * offset + 1, 2 * params.rise()),
            Color::Blue => Ratio::new(-2 * offset - 1, 2 * params.fall()),
        } + Ratio::from_integer(arrow.column as i64 - 1);
        self.side(mid_x, mid_height)
    }
}

/// Image start rank of the step in `column`, from segment counts alone.
///
/// Counts the segments lying above the green line through the step's start
/// that belong to red arrows starting below it, plus the segments lying below
/// the line that belong to blue arrows not starting below it (the reference
/// arrow included).
pub fn green_line_rank(word: &StepWord, column: usize) -> Result<i64> {
    word.require_dyck()?;
    if column == 0 || column > word.len() {
        return Err(Error::IndexOutOfRange {
            index: column,
            len: word.len(),
        });
    }
    let params = word.params();
    let line = GreenLine::through(word, column);
    let diagram = PathDiagram::new(word);
    let mut count = 0;
    // a blue reference arrow is not below its own line and counts with B
    for arrow in diagram.arrows() {
        let below = line.starts_below(word, arrow.column);
        let wanted = match (arrow.color, below) {
            (Color::Red, true) => Ordering::Greater,
            (Color::Blue, false) => Ordering::Less,
            _ => continue,
        };
        count += arrow
            .rows(params)
            .filter(|&row| line.segment_side(arrow, params, row) == wanted)
            .count() as i64;
    }
    Ok(count)
}

/// Whether "starts below the green line" agrees with "precedes in sweep
/// order" for every pair of steps of `word`.
pub fn green_line_matches_sweep_order(word: &StepWord) -> bool {
    (1..=word.len()).all(|c0| {
        let line = GreenLine::through(word, c0);
        (1..=word.len()).all(|c| line.starts_below(word, c) == (word.key(c) < word.key(c0)))
    })
}

type SweepTable = HashMap<Vec<Step>, StepWord>;

fn table_cache() -> &'static Mutex<HashMap<Params, Arc<SweepTable>>> {
    static CACHE: OnceLock<Mutex<HashMap<Params, Arc<SweepTable>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

fn inverse_table(params: Params, limit: usize) -> Result<Arc<SweepTable>> {
    if params.word_len() > limit {
        return Err(Error::LimitExceeded {
            len: params.word_len(),
            limit,
        });
    }
    let mut cache = table_cache().lock().unwrap_or_else(|e| e.into_inner());
    if let Some(table) = cache.get(&params) {
        return Ok(Arc::clone(table));
    }
    let table: SweepTable = enumerate_dyck(params, limit)?
        .map(|w| (sweep(&w).steps().to_vec(), w))
        .collect();
    let table = Arc::new(table);
    cache.insert(params, Arc::clone(&table));
    Ok(table)
}

/// The Dyck preimage of `image` under [`sweep`], looked up in a per-`Params`
/// table built once by enumeration.
pub fn unsweep(image: &StepWord, limit: usize) -> Result<StepWord> {
    image.require_dyck()?;
    let table = inverse_table(image.params(), limit)?;
    table
        .get(image.steps())
        .cloned()
        .ok_or_else(|| Error::NotInImage(image.to_string()))
}
