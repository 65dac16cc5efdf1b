//! Exhaustive verification over every Dyck path of a `Params`.
//!
//! Per-path checks run in parallel; results are merged in enumeration order so
//! the report, including which counterexample is reported first, does not
//! depend on the number of worker threads.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;

use crate::diagram::PathDiagram;
use crate::error::Result;
use crate::paths::{base_path, count_dyck, enumerate_dyck, Params, StepWord};
use crate::recursion::{apply_move, rank_difference_sides, reduce_to_base, region_counts, valid_moves, Strategy};
use crate::statistics::{area_cells, area_rank_formula, dinv_cells, dinv_pairs, max_stat};
use crate::sweep::{green_line_matches_sweep_order, green_line_rank, image_start_rank, sweep, sweep_order};

pub type StatFn = fn(&StepWord) -> Result<u64>;

/// The `area` and `dinv` implementations under test.
#[derive(Debug, Clone, Copy)]
pub struct Stats {
    pub area: StatFn,
    pub dinv: StatFn,
}

impl Default for Stats {
    fn default() -> Self {
        Stats {
            area: area_cells,
            dinv: dinv_pairs,
        }
    }
}

/// Deliberately broken statistics, for checking that verification catches them.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Fault {
    /// dinv window `0 <= a - b < m` in place of `0 <= a - b < m + n`.
    DinvNarrow,
    /// dinv shifted by one on every path with a North step after an East step.
    DinvShift,
    /// area judging cells by the wrong corner.
    AreaSwCorner,
}

impl Fault {
    pub const ALL: [Fault; 3] = [Fault::DinvNarrow, Fault::DinvShift, Fault::AreaSwCorner];

    pub fn name(self) -> &'static str {
        match self {
            Fault::DinvNarrow => "dinv-narrow",
            Fault::DinvShift => "dinv-shift",
            Fault::AreaSwCorner => "area-sw-corner",
        }
    }

    pub fn from_name(name: &str) -> Option<Fault> {
        Fault::ALL.into_iter().find(|f| f.name() == name)
    }

    pub fn stats(self) -> Stats {
        match self {
            Fault::DinvNarrow => Stats {
                dinv: broken_dinv_narrow,
                ..Stats::default()
            },
            Fault::DinvShift => Stats {
                dinv: broken_dinv_shift,
                ..Stats::default()
            },
            Fault::AreaSwCorner => Stats {
                area: broken_area_sw_corner,
                ..Stats::default()
            },
        }
    }
}

fn broken_dinv_narrow(word: &StepWord) -> Result<u64> {
    word.require_dyck()?;
    let limit = word.params().rise();
    let mut dinv = 0;
    let mut easts = Vec::new();
    for (_, step, rank) in word.iter() {
        match step {
            crate::Step::East => easts.push(rank),
            crate::Step::North => dinv += easts.iter().filter(|&&a| (0..limit).contains(&(a - rank))).count() as u64,
        }
    }
    Ok(dinv)
}

fn broken_dinv_shift(word: &StepWord) -> Result<u64> {
    let dinv = dinv_pairs(word)?;
    let s = word.to_string();
    Ok(if s.contains("EN") { dinv + 1 } else { dinv })
}

fn broken_area_sw_corner(word: &StepWord) -> Result<u64> {
    word.require_dyck()?;
    let params = word.params();
    let (mut y, mut x) = (0i64, 0i64);
    let mut area = 0;
    for &s in word.steps() {
        match s {
            crate::Step::North => {
                // judges each cell by its south-west corner instead of the south-east one
                let reach = (params.rise() * y).div_euclid(params.fall()) + 1;
                area += (reach - x).max(0) as u64;
                y += 1;
            }
            crate::Step::East => x += 1,
        }
    }
    Ok(area)
}

/// Names of the checks, in report order.
pub const CHECKS: [&str; 13] = [
    "image-is-dyck",
    "bijectivity",
    "area-rank-formula",
    "dinv-cells",
    "green-line-rank",
    "row-structure",
    "rank-difference",
    "area-recursion",
    "dinv-recursion",
    "cross-identities",
    "move-existence",
    "base-case",
    "main-theorem",
];

const BIJECTIVITY: usize = 1;
const BASE_CASE: usize = 11;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckResult {
    pub name: &'static str,
    pub failures: usize,
    /// The first counterexample in enumeration order.
    pub first: Option<String>,
}

impl CheckResult {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Report {
    pub params: Params,
    pub paths: usize,
    pub checks: Vec<CheckResult>,
    /// Chosen max-sweep-W moves whose T1 or T2 region holds a segment.
    /// Informational only.
    pub top_regions_nonempty: usize,
    pub max_sweep_moves: usize,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(CheckResult::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckResult> {
        self.checks.iter().find(|c| !c.passed())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.params;
        writeln!(f, "verify m={} n={} d={}: {} paths", p.m(), p.n(), p.d(), self.paths)?;
        for c in &self.checks {
            match &c.first {
                None => writeln!(f, "  PASS {}", c.name)?,
                Some(first) => writeln!(
                    f,
                    "  FAIL {} ({} counterexamples; first: {})",
                    c.name, c.failures, first
                )?,
            }
        }
        writeln!(
            f,
            "  note: max-sweep-W moves with segments in T1/T2: {} of {}",
            self.top_regions_nonempty, self.max_sweep_moves
        )?;
        match self.first_failure() {
            None => writeln!(f, "{} checks × {} paths: PASS", self.checks.len(), self.paths),
            Some(c) => writeln!(
                f,
                "{} checks × {} paths: FAIL {}: {}",
                self.checks.len(),
                self.paths,
                c.name,
                c.first.as_deref().unwrap_or("")
            ),
        }
    }
}

struct PathOutcome {
    failures: [Option<String>; 13],
    image: StepWord,
    area_zero: bool,
    top_nonempty: bool,
    had_max_move: bool,
}

fn check_path(word: &StepWord, stats: Stats) -> Result<PathOutcome> {
    let mut failures: [Option<String>; 13] = Default::default();
    let mut fail = |idx: usize, msg: String| {
        if failures[idx].is_none() {
            failures[idx] = Some(format!("{word} {msg}"));
        }
    };
    let (area_fn, dinv_fn) = (stats.area, stats.dinv);
    let image = sweep(word);
    let order = sweep_order(word);
    let area = area_fn(word)?;
    let dinv = dinv_fn(word)?;

    let image_ranks: Vec<i64> = (1..=word.len())
        .map(|pos| image_start_rank(word, pos))
        .collect::<Result<_>>()?;
    if !image.is_dyck() || image_ranks.iter().any(|&r| r < 0) {
        fail(0, format!("-> {image} is not Dyck"));
    }

    match area_rank_formula(word) {
        Ok(a) if a == area => {}
        Ok(a) => fail(2, format!("(cells {area} != formula {a})")),
        Err(e) => fail(2, format!("({e})")),
    }

    let cells = dinv_cells(word)?;
    if cells != dinv {
        fail(3, format!("(dinv cells {cells} != pairs {dinv})"));
    }

    if !green_line_matches_sweep_order(word) {
        fail(4, "(green line disagrees with sweep order)".into());
    }
    for column in 1..=word.len() {
        let pos = order.position_of(column).expect("permutation");
        let got = green_line_rank(word, column)?;
        if got != image_ranks[pos - 1] {
            fail(
                4,
                format!(
                    "(column {column}: segment count {got} != image rank {})",
                    image_ranks[pos - 1]
                ),
            );
        }
    }

    let diagram = PathDiagram::new(word);
    if !diagram.check_row_structure() || !diagram.has_zero_row_counts() {
        fail(5, "(row pattern is not (red, blue)*)".into());
    }

    let image_area = area_fn(&image)?;
    let moves = valid_moves(word)?;
    for &mv in &moves {
        let after = apply_move(word, mv)?;
        let (lhs, rhs) = rank_difference_sides(word, mv)?;
        if lhs != rhs {
            fail(6, format!("p={} ({lhs} != {rhs})", mv.p));
        }
        let counts = region_counts(word, mv)?;
        let image_diff = image_area as i64 - area_fn(&sweep(&after))? as i64;
        if counts.area_delta() != image_diff {
            fail(
                7,
                format!("p={} (predicted {} != {image_diff})", mv.p, counts.area_delta()),
            );
        }
        let dinv_diff = dinv as i64 - dinv_fn(&after)? as i64;
        if counts.dinv_delta() != dinv_diff {
            fail(
                8,
                format!("p={} (predicted {} != {dinv_diff})", mv.p, counts.dinv_delta()),
            );
        }
        if !counts.cross_identities_hold() {
            fail(9, format!("p={} ({counts:?})", mv.p));
        }
        if area_fn(&after)? + 1 != area {
            fail(10, format!("p={} does not remove exactly one cell", mv.p));
        }
    }
    if area > 0 && moves.is_empty() {
        fail(10, format!("(area {area} but no move)"));
    }
    for strategy in [Strategy::FirstValid, Strategy::MaxSweepW] {
        match reduce_to_base(word, strategy) {
            Ok(chain) if chain.len() as u64 == area => {}
            Ok(chain) => fail(
                10,
                format!("({strategy:?} chain of {} moves, area {area})", chain.len()),
            ),
            Err(e) => fail(10, format!("({e})")),
        }
    }

    let max_move = moves.iter().copied().max_by_key(|mv| word.key(mv.p + 1));
    let top_nonempty = match max_move {
        Some(mv) => {
            let c = region_counts(word, mv)?;
            c.red_t1 + c.blue_t1 + c.red_t2 > 0
        }
        None => false,
    };

    if dinv != image_area {
        fail(
            12,
            format!("(dinv {dinv} != area of sweep image {image} = {image_area})"),
        );
    }

    Ok(PathOutcome {
        failures,
        image,
        area_zero: area == 0,
        top_nonempty,
        had_max_move: max_move.is_some(),
    })
}

/// Runs every check on every Dyck path of `params` with `jobs` worker threads
/// (`0` picks the rayon default).
pub fn verify(params: Params, limit: usize, jobs: usize, stats: Stats) -> Result<Report> {
    let words: Vec<StepWord> = enumerate_dyck(params, limit)?.collect();
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .expect("thread pool");
    let outcomes: Vec<PathOutcome> =
        pool.install(|| words.par_iter().map(|w| check_path(w, stats)).collect::<Result<_>>())?;

    let mut checks: Vec<CheckResult> = CHECKS
        .iter()
        .map(|&name| CheckResult {
            name,
            failures: 0,
            first: None,
        })
        .collect();
    let mut record = |idx: usize, msg: String| {
        let c = &mut checks[idx];
        c.failures += 1;
        c.first.get_or_insert(msg);
    };
    for outcome in &outcomes {
        for (idx, f) in outcome.failures.iter().enumerate() {
            if let Some(msg) = f {
                record(idx, msg.clone());
            }
        }
    }

    let domain: BTreeSet<&[crate::Step]> = words.iter().map(|w| w.steps()).collect();
    let images: BTreeSet<&[crate::Step]> = outcomes.iter().map(|o| o.image.steps()).collect();
    if images.len() != words.len() {
        record(
            BIJECTIVITY,
            format!("{} images for {} paths", images.len(), words.len()),
        );
    } else if images != domain {
        record(BIJECTIVITY, "image set differs from the Dyck set".into());
    }
    if count_dyck(params)? != words.len() as u128 {
        record(BIJECTIVITY, "count_dyck disagrees with enumeration".into());
    }

    let base = base_path(params);
    let corner = StepWord::corner(params);
    let zero: Vec<&StepWord> = words
        .iter()
        .zip(&outcomes)
        .filter(|(_, o)| o.area_zero)
        .map(|(w, _)| w)
        .collect();
    if zero != [&base] {
        record(BASE_CASE, format!("area-0 paths {zero:?} are not exactly {base}"));
    }
    let max = max_stat(params);
    if (stats.dinv)(&base)? != max {
        record(BASE_CASE, format!("{base} dinv {} != {max}", (stats.dinv)(&base)?));
    }
    if sweep(&base) != corner {
        record(BASE_CASE, format!("{base} sweeps to {} not {corner}", sweep(&base)));
    }
    if (stats.area)(&corner)? != max {
        record(BASE_CASE, format!("{corner} area {} != {max}", (stats.area)(&corner)?));
    }

    Ok(Report {
        params,
        paths: words.len(),
        checks,
        top_regions_nonempty: outcomes.iter().filter(|o| o.top_nonempty).count(),
        max_sweep_moves: outcomes.iter().filter(|o| o.had_max_move).count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::DEFAULT_LIMIT;

    fn p(m: i64, n: i64, d: i64) -> Params {
        Params::new(m, n, d).unwrap()
    }

    #[test]
    fn passes_small_sets() {
        let report = verify(p(3, 2, 1), DEFAULT_LIMIT, 1, Stats::default()).unwrap();
        assert!(report.passed(), "{report}");
        assert_eq!(report.paths, 2);
        assert!(report.to_string().ends_with("13 checks × 2 paths: PASS\n"));
        assert!(verify(p(1, 1, 2), DEFAULT_LIMIT, 2, Stats::default()).unwrap().passed());
    }

    #[test]
    fn independent_of_jobs() {
        let a = verify(p(5, 3, 1), DEFAULT_LIMIT, 1, Fault::DinvShift.stats()).unwrap();
        let b = verify(p(5, 3, 1), DEFAULT_LIMIT, 4, Fault::DinvShift.stats()).unwrap();
        assert_eq!(a, b);
        assert!(!a.passed());
    }

    #[test]
    fn faults_are_caught() {
        for fault in Fault::ALL {
            assert_eq!(Fault::from_name(fault.name()), Some(fault));
            let report = verify(p(7, 5, 1), DEFAULT_LIMIT, 0, fault.stats()).unwrap();
            assert!(!report.passed(), "{fault:?} slipped through");
            assert!(!report.checks[12].passed(), "{fault:?} main theorem");
        }
    }
}
