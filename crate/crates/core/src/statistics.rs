//! The `area` and `dinv` statistics, each computed two independent ways.
//!
//! Cells of the `dm x dn` grid are addressed by their south-west corner
//! `(x, y)`. A cell is above the path when East step `x + 1` comes before
//! North step `y + 1`, and weakly above the diagonal when its south-east
//! corner has nonnegative rank `m*y - n*(x + 1)`.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::paths::{enumerate_dyck, Params, Step, StepWord};

/// Positions (0-based) of the North and East steps of a word, in path order.
fn step_positions(word: &StepWord) -> (Vec<usize>, Vec<usize>) {
    let mut north = Vec::with_capacity(word.params().north_count());
    let mut east = Vec::with_capacity(word.params().east_count());
    for (i, &s) in word.steps().iter().enumerate() {
        match s {
            Step::North => north.push(i),
            Step::East => east.push(i),
        }
    }
    (north, east)
}

/// Number of cells between the path and the main diagonal, by direct count.
pub fn area_cells(word: &StepWord) -> Result<u64> {
    word.require_dyck()?;
    let params = word.params();
    let (m, n) = (params.rise(), params.fall());
    let (north, east) = step_positions(word);
    let mut area = 0;
    for (y, &ny) in north.iter().enumerate() {
        for (x, &ex) in east.iter().enumerate() {
            let below_path = ny < ex;
            if below_path && m * y as i64 - n * (x as i64 + 1) >= 0 {
                area += 1;
            }
        }
    }
    Ok(area)
}

/// `area` from the North-step start ranks: `(sum r(S_j)) / n - d(n-1)/2`.
pub fn area_rank_formula(word: &StepWord) -> Result<u64> {
    let sum: i64 = word.south_end_ranks()?.iter().sum();
    let params = word.params();
    let n = params.fall();
    // 2n * area = 2 * sum - d * n * (n - 1)
    let twice = 2 * sum - params.d() as i64 * n * (n - 1);
    if twice < 0 || twice % (2 * n) != 0 {
        return Err(Error::NonIntegral {
            word: word.to_string(),
            sum,
            n: params.n(),
        });
    }
    Ok((twice / (2 * n)) as u64)
}

/// Least nonnegative cell rank in grid row `row`: `m * row mod n`.
pub fn lpr(row: i64, params: Params) -> Result<i64> {
    let rows = params.north_count() as i64;
    if !(0..rows).contains(&row) {
        return Err(Error::RowOutOfRange { row, lo: 0, hi: rows });
    }
    Ok((params.rise() * row).rem_euclid(params.fall()))
}

/// Per-row area: `(r(S_{j+1}) - lpr(j)) / n` for each grid row `j`.
pub fn row_area_contributions(word: &StepWord) -> Result<Vec<i64>> {
    let params = word.params();
    word.south_end_ranks()?
        .iter()
        .enumerate()
        .map(|(j, &r)| {
            let diff = r - lpr(j as i64, params)?;
            if diff < 0 || diff % params.fall() != 0 {
                return Err(Error::NonIntegral {
                    word: word.to_string(),
                    sum: r,
                    n: params.n(),
                });
            }
            Ok(diff / params.fall())
        })
        .collect()
}

fn dinv_condition(east_rank: i64, north_rank: i64, params: Params) -> bool {
    let diff = east_rank - north_rank;
    0 <= diff && diff < params.rise() + params.fall()
}

/// `dinv` as a count of (East, later North) pairs whose start ranks `a`, `b`
/// satisfy `0 <= a - b < m + n`.
pub fn dinv_pairs(word: &StepWord) -> Result<u64> {
    word.require_dyck()?;
    let params = word.params();
    let mut dinv = 0;
    let mut east_ranks = Vec::with_capacity(params.east_count());
    for (_, step, rank) in word.iter() {
        match step {
            Step::East => east_ranks.push(rank),
            Step::North => {
                dinv += east_ranks.iter().filter(|&&a| dinv_condition(a, rank, params)).count() as u64;
            }
        }
    }
    Ok(dinv)
}

/// `dinv` as a count of cells above the path, each judged by the East step
/// below it and the North step to its right.
pub fn dinv_cells(word: &StepWord) -> Result<u64> {
    Ok(dinv_cell_list(word)?.len() as u64)
}

/// The cells `(x, y)` counted by [`dinv_cells`].
pub fn dinv_cell_list(word: &StepWord) -> Result<Vec<(usize, usize)>> {
    word.require_dyck()?;
    let params = word.params();
    let ranks = word.ranks();
    let (north, east) = step_positions(word);
    let mut cells = Vec::new();
    for (y, &ny) in north.iter().enumerate() {
        for (x, &ex) in east.iter().enumerate() {
            let above_path = ex < ny;
            if above_path && dinv_condition(ranks[ex], ranks[ny], params) {
                cells.push((x, y));
            }
        }
    }
    Ok(cells)
}

/// The common maximum of `area` and `dinv`: `((dm-1)(dn-1) + d - 1) / 2`.
pub fn max_stat(params: Params) -> u64 {
    let (dm, dn, d) = (
        params.east_count() as u64,
        params.north_count() as u64,
        params.d() as u64,
    );
    ((dm - 1) * (dn - 1) + d - 1) / 2
}

/// Joint counts of `(area, dinv)` over all Dyck paths of a `Params`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StatTable {
    pub params: Params,
    pub counts: BTreeMap<(u64, u64), u64>,
}

impl StatTable {
    pub fn total(&self) -> u64 {
        self.counts.values().sum()
    }

    pub fn area_marginal(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for (&(area, _), &c) in &self.counts {
            *out.entry(area).or_default() += c;
        }
        out
    }

    pub fn dinv_marginal(&self) -> BTreeMap<u64, u64> {
        let mut out = BTreeMap::new();
        for (&(_, dinv), &c) in &self.counts {
            *out.entry(dinv).or_default() += c;
        }
        out
    }

    pub fn marginals_agree(&self) -> bool {
        self.area_marginal() == self.dinv_marginal()
    }

    /// `area,dinv,count` rows, sorted by area then dinv.
    pub fn to_csv(&self) -> String {
        let mut out = String::from("area,dinv,count\n");
        for (&(a, b), &c) in &self.counts {
            writeln!(out, "{a},{b},{c}").unwrap();
        }
        out
    }

    /// Matrix with one line per area value and one column per dinv value.
    pub fn to_matrix(&self) -> String {
        let max = max_stat(self.params);
        let width = self
            .counts
            .values()
            .max()
            .copied()
            .unwrap_or(0)
            .to_string()
            .len()
            .max(max.to_string().len());
        let mut out = String::new();
        write!(out, "{:>w$}", "a\\d", w = width.max(3)).unwrap();
        for dinv in 0..=max {
            write!(out, " {dinv:>width$}").unwrap();
        }
        out.push('\n');
        for area in 0..=max {
            write!(out, "{area:>w$}", w = width.max(3)).unwrap();
            for dinv in 0..=max {
                let c = self.counts.get(&(area, dinv)).copied().unwrap_or(0);
                write!(out, " {c:>width$}").unwrap();
            }
            out.push('\n');
        }
        out
    }
}

pub fn joint_distribution(params: Params, limit: usize) -> Result<StatTable> {
    let mut counts = BTreeMap::new();
    for word in enumerate_dyck(params, limit)? {
        *counts.entry((area_cells(&word)?, dinv_pairs(&word)?)).or_default() += 1;
    }
    Ok(StatTable { params, counts })
}
