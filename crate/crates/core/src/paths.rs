//! Path words, their ranks, Dyck validation, enumeration and counting.
//!
//! A path of the `(dm, dn)` rectangle is a word of `dn` North and `dm` East
//! unit steps. The rank of a vertex starts at `0` at the origin, grows by `m`
//! after each North step and drops by `n` after each East step; a path is
//! Dyck exactly when no vertex has negative rank. Columns (step positions)
//! are 1-indexed throughout the public API.

use std::cmp::Ordering;
use std::fmt;

use crate::error::{Error, Result};

/// Default cap on `dm + dn` for anything that enumerates paths.
pub const DEFAULT_LIMIT: usize = 40;

/// The environment variable that overrides [`DEFAULT_LIMIT`].
pub const LIMIT_ENV: &str = "SWEEPLAB_LIMIT";

/// Reads the enumeration cap from `SWEEPLAB_LIMIT`, falling back to the default.
pub fn limit_from_env() -> usize {
    std::env::var(LIMIT_ENV)
        .ok()
        .and_then(|v| v.trim().parse().ok())
        .unwrap_or(DEFAULT_LIMIT)
}

/// The triple `(m, n, d)` with `gcd(m, n) = 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Params {
    m: u32,
    n: u32,
    d: u32,
}

impl Params {
    pub fn new(m: i64, n: i64, d: i64) -> Result<Self> {
        if m < 1 || n < 1 || d < 1 {
            return Err(Error::NonPositive { m, n, d });
        }
        let (m, n, d) = match (u32::try_from(m), u32::try_from(n), u32::try_from(d)) {
            (Ok(m), Ok(n), Ok(d)) => (m, n, d),
            _ => return Err(Error::TooLarge),
        };
        if gcd(m, n) != 1 {
            return Err(Error::NonCoprime { m, n });
        }
        (d as i64)
            .checked_mul(m as i64)
            .and_then(|v| v.checked_mul(n as i64))
            .ok_or(Error::TooLarge)?;
        Ok(Params { m, n, d })
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn d(&self) -> u32 {
        self.d
    }

    /// Rank gained by a North step.
    pub fn rise(&self) -> i64 {
        self.m as i64
    }

    /// Rank lost by an East step.
    pub fn fall(&self) -> i64 {
        self.n as i64
    }

    /// Number of North steps, `dn`.
    pub fn north_count(&self) -> usize {
        self.d as usize * self.n as usize
    }

    /// Number of East steps, `dm`.
    pub fn east_count(&self) -> usize {
        self.d as usize * self.m as usize
    }

    /// Word length `dm + dn`.
    pub fn word_len(&self) -> usize {
        self.north_count() + self.east_count()
    }

    /// Height `dmn` of the path diagram.
    pub fn height(&self) -> i64 {
        self.d as i64 * self.m as i64 * self.n as i64
    }
}

impl fmt::Display for Params {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(m={}, n={}, d={})", self.m, self.n, self.d)
    }
}

fn gcd(mut a: u32, mut b: u32) -> u32 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Step {
    North,
    East,
}

impl Step {
    pub fn letter(self) -> char {
        match self {
            Step::North => 'N',
            Step::East => 'E',
        }
    }

    /// Accepts `N`/`E` and the start-point synonyms `S` (North) and `W` (East).
    pub fn from_letter(c: char) -> Option<Self> {
        match c.to_ascii_uppercase() {
            'N' | 'S' => Some(Step::North),
            'E' | 'W' => Some(Step::East),
            _ => None,
        }
    }
}

/// A complete word of `dn` North and `dm` East steps, with its start ranks.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct StepWord {
    params: Params,
    steps: Vec<Step>,
    ranks: Vec<i64>,
}

impl StepWord {
    pub fn parse(text: &str, params: Params) -> Result<Self> {
        let steps = text
            .trim()
            .chars()
            .enumerate()
            .map(|(i, c)| {
                Step::from_letter(c).ok_or(Error::BadLetter {
                    letter: c,
                    position: i + 1,
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Self::from_steps(steps, params)
    }

    pub fn from_steps(steps: Vec<Step>, params: Params) -> Result<Self> {
        let north = steps.iter().filter(|&&s| s == Step::North).count();
        let east = steps.len() - north;
        if north != params.north_count() || east != params.east_count() {
            return Err(Error::BadCounts {
                north,
                east,
                want_north: params.north_count(),
                want_east: params.east_count(),
            });
        }
        Ok(Self::new_unchecked(steps, params))
    }

    pub(crate) fn new_unchecked(steps: Vec<Step>, params: Params) -> Self {
        let mut ranks = Vec::with_capacity(steps.len());
        let mut rank = 0i64;
        for &step in &steps {
            ranks.push(rank);
            rank += match step {
                Step::North => params.rise(),
                Step::East => -params.fall(),
            };
        }
        StepWord { params, steps, ranks }
    }

    /// The corner path `N^{dn} E^{dm}`.
    pub fn corner(params: Params) -> Self {
        let mut steps = vec![Step::North; params.north_count()];
        steps.extend(std::iter::repeat_n(Step::East, params.east_count()));
        Self::new_unchecked(steps, params)
    }

    pub fn params(&self) -> Params {
        self.params
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    /// Step in 1-indexed column `column`.
    pub fn step(&self, column: usize) -> Option<Step> {
        column.checked_sub(1).and_then(|i| self.steps.get(i)).copied()
    }

    /// Start ranks `r_1, ..., r_{dm+dn}`, indexed from 0.
    pub fn ranks(&self) -> &[i64] {
        &self.ranks
    }

    /// Start rank of the step in 1-indexed column `column`.
    pub fn rank(&self, column: usize) -> i64 {
        self.ranks[column - 1]
    }

    pub fn start_ranks(&self) -> RankSequence {
        RankSequence {
            starts: self.ranks.clone(),
            end: self.end_rank(),
        }
    }

    /// Rank of the final vertex; zero for every complete word.
    pub fn end_rank(&self) -> i64 {
        match self.steps.last() {
            None => 0,
            Some(Step::North) => self.ranks[self.len() - 1] + self.params.rise(),
            Some(Step::East) => self.ranks[self.len() - 1] - self.params.fall(),
        }
    }

    /// Ranks of all `dm + dn + 1` vertices, origin first.
    pub fn vertex_ranks(&self) -> impl Iterator<Item = i64> + '_ {
        self.ranks.iter().copied().chain(std::iter::once(self.end_rank()))
    }

    pub fn is_dyck(&self) -> bool {
        self.vertex_ranks().all(|r| r >= 0)
    }

    pub(crate) fn require_dyck(&self) -> Result<()> {
        if self.is_dyck() {
            Ok(())
        } else {
            Err(Error::NotDyck(self.to_string()))
        }
    }

    /// Sweep key of the step in 1-indexed column `column`.
    pub fn key(&self, column: usize) -> SweepKey {
        SweepKey {
            rank: self.rank(column),
            column,
        }
    }

    /// Iterates `(column, step, start rank)` with 1-indexed columns.
    pub fn iter(&self) -> impl Iterator<Item = (usize, Step, i64)> + '_ {
        self.steps
            .iter()
            .zip(&self.ranks)
            .enumerate()
            .map(|(i, (&s, &r))| (i + 1, s, r))
    }

    /// Ranks of the North-step starts in path order; entry `j` belongs to
    /// the North step leaving height `j`.
    pub fn south_end_ranks(&self) -> Result<Vec<i64>> {
        self.require_dyck()?;
        Ok(self
            .iter()
            .filter(|&(_, s, _)| s == Step::North)
            .map(|(_, _, r)| r)
            .collect())
    }

    /// Swaps the letters in columns `p` and `p + 1`.
    pub(crate) fn swapped(&self, p: usize) -> StepWord {
        let mut steps = self.steps.clone();
        steps.swap(p - 1, p);
        Self::new_unchecked(steps, self.params)
    }
}

impl fmt::Display for StepWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.steps.iter().try_for_each(|s| write!(f, "{}", s.letter()))
    }
}

/// Start ranks of a word plus the rank of its final vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RankSequence {
    pub starts: Vec<i64>,
    pub end: i64,
}

/// Position of a step start in sweep order: lower rank first, and within one
/// rank the rightmost column first.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SweepKey {
    pub rank: i64,
    pub column: usize,
}

impl Ord for SweepKey {
    fn cmp(&self, other: &Self) -> Ordering {
        self.rank.cmp(&other.rank).then_with(|| other.column.cmp(&self.column))
    }
}

impl PartialOrd for SweepKey {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// The unique area-0 path: from each vertex, step East when the rank allows it.
pub fn base_path(params: Params) -> StepWord {
    let mut steps = Vec::with_capacity(params.word_len());
    let mut rank = 0i64;
    for _ in 0..params.word_len() {
        if rank >= params.fall() {
            steps.push(Step::East);
            rank -= params.fall();
        } else {
            steps.push(Step::North);
            rank += params.rise();
        }
    }
    StepWord::new_unchecked(steps, params)
}

/// Number of Dyck paths, by dynamic programming over lattice points of
/// nonnegative rank. No enumeration and no size limit.
pub fn count_dyck(params: Params) -> Result<u128> {
    let (east, north) = (params.east_count(), params.north_count());
    let (m, n) = (params.rise(), params.fall());
    // ways[x] holds the counts for the current row y
    let mut ways = vec![0u128; east + 1];
    for y in 0..=north {
        for x in 0..=east {
            if m * (y as i64) - n * (x as i64) < 0 {
                ways[x] = 0;
                continue;
            }
            if x == 0 && y == 0 {
                ways[x] = 1;
            } else if x > 0 {
                ways[x] = ways[x].checked_add(ways[x - 1]).ok_or(Error::CountOverflow)?;
            }
        }
    }
    Ok(ways[east])
}

/// All Dyck paths of `params` in lexicographic order (`N < E`).
pub fn enumerate_dyck(params: Params, limit: usize) -> Result<DyckPaths> {
    if params.word_len() > limit {
        return Err(Error::LimitExceeded {
            len: params.word_len(),
            limit,
        });
    }
    Ok(DyckPaths {
        params,
        current: Some(StepWord::corner(params).steps),
    })
}

/// Lexicographic stream of Dyck words; see [`enumerate_dyck`].
#[derive(Debug, Clone)]
pub struct DyckPaths {
    params: Params,
    current: Option<Vec<Step>>,
}

impl DyckPaths {
    // Successor in lex order: turn the last switchable N into E, then
    // complete with the smallest word (all remaining N before all E).
    fn advance(&self, steps: &[Step]) -> Option<Vec<Step>> {
        let (m, n) = (self.params.rise(), self.params.fall());
        let mut prefix_rank = Vec::with_capacity(steps.len());
        let mut rank = 0;
        for &s in steps {
            prefix_rank.push(rank);
            rank += if s == Step::North { m } else { -n };
        }
        let pivot = (0..steps.len())
            .rev()
            .find(|&i| steps[i] == Step::North && prefix_rank[i] >= n && steps[i + 1..].contains(&Step::East))?;
        let mut next = steps[..pivot].to_vec();
        next.push(Step::East);
        let norths = steps[pivot..].iter().filter(|&&s| s == Step::North).count();
        let easts = steps.len() - pivot - norths;
        next.extend(std::iter::repeat_n(Step::North, norths));
        next.extend(std::iter::repeat_n(Step::East, easts - 1));
        Some(next)
    }
}

impl Iterator for DyckPaths {
    type Item = StepWord;

    fn next(&mut self) -> Option<StepWord> {
        let steps = self.current.take()?;
        self.current = self.advance(&steps);
        Some(StepWord::new_unchecked(steps, self.params))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(m: i64, n: i64, d: i64) -> Params {
        Params::new(m, n, d).unwrap()
    }

    fn words(params: Params) -> Vec<String> {
        enumerate_dyck(params, DEFAULT_LIMIT)
            .unwrap()
            .map(|w| w.to_string())
            .collect()
    }

    /// Brute force over all binary words of the right length.
    fn brute_force_dyck(params: Params) -> Vec<String> {
        let len = params.word_len();
        let mut out = Vec::new();
        for bits in 0u64..(1 << len) {
            // bit set = East; iterate so that N < E in lexicographic order
            let steps: Vec<Step> = (0..len)
                .map(|i| {
                    if bits >> (len - 1 - i) & 1 == 1 {
                        Step::East
                    } else {
                        Step::North
                    }
                })
                .collect();
            if let Ok(w) = StepWord::from_steps(steps, params) {
                if w.is_dyck() {
                    out.push(w.to_string());
                }
            }
        }
        out
    }

    #[test]
    fn params_validation() {
        assert!(Params::new(3, 2, 1).is_ok());
        assert!(Params::new(7, 5, 1).is_ok());
        assert_eq!(Params::new(4, 2, 1), Err(Error::NonCoprime { m: 4, n: 2 }));
        assert!(matches!(Params::new(0, 1, 1), Err(Error::NonPositive { .. })));
        assert!(matches!(Params::new(3, 2, -1), Err(Error::NonPositive { .. })));
    }

    #[test]
    fn parse_words() {
        let w = StepWord::parse("NENEE", p(3, 2, 1)).unwrap();
        assert_eq!(w.to_string(), "NENEE");
        assert_eq!(StepWord::parse("SWSWW", p(3, 2, 1)).unwrap(), w);
        assert!(matches!(
            StepWord::parse("NNEE", p(3, 2, 1)),
            Err(Error::BadCounts { north: 2, east: 2, .. })
        ));
        assert_eq!(
            StepWord::parse("NEXEE", p(3, 2, 1)),
            Err(Error::BadLetter {
                letter: 'X',
                position: 3
            })
        );
    }

    #[test]
    fn ranks() {
        let r = |s, params| StepWord::parse(s, params).unwrap().start_ranks();
        assert_eq!(r("NENEE", p(3, 2, 1)).starts, vec![0, 3, 1, 4, 2]);
        assert_eq!(r("NNEEE", p(3, 2, 1)).starts, vec![0, 3, 6, 4, 2]);
        assert_eq!(r("NNEE", p(1, 1, 2)).starts, vec![0, 1, 2, 1]);
        assert_eq!(r("EEENN", p(3, 2, 1)).end, 0);
    }

    #[test]
    fn dyck_checks() {
        let w = |s| StepWord::parse(s, p(3, 2, 1)).unwrap();
        assert!(w("NENEE").is_dyck());
        assert!(!w("NEENE").is_dyck());
        assert!(!w("ENNEE").is_dyck());
        assert!(matches!(w("NEENE").south_end_ranks(), Err(Error::NotDyck(_))));
    }

    #[test]
    fn enumeration_examples() {
        assert_eq!(words(p(3, 2, 1)), ["NNEEE", "NENEE"]);
        assert_eq!(words(p(1, 1, 2)), ["NNEE", "NENE"]);
        assert_eq!(words(p(5, 2, 1)), ["NNEEEEE", "NENEEEE", "NEENEEE"]);
    }

    #[test]
    fn enumeration_matches_brute_force() {
        for (m, n, d) in [
            (3, 2, 1),
            (5, 3, 1),
            (7, 4, 1),
            (1, 1, 3),
            (3, 2, 2),
            (2, 1, 3),
            (4, 3, 1),
        ] {
            let params = p(m, n, d);
            assert_eq!(words(params), brute_force_dyck(params), "{params}");
        }
    }

    #[test]
    fn enumeration_limit() {
        assert!(matches!(
            enumerate_dyck(p(3, 2, 1), 4),
            Err(Error::LimitExceeded { len: 5, limit: 4 })
        ));
    }

    #[test]
    fn counting() {
        assert_eq!(count_dyck(p(3, 2, 1)).unwrap(), 2);
        assert_eq!(count_dyck(p(1, 1, 2)).unwrap(), 2);
        assert_eq!(count_dyck(p(7, 5, 1)).unwrap(), 66);
        for (m, n, d) in [(5, 2, 1), (8, 5, 1), (3, 2, 2), (2, 1, 3), (1, 1, 5)] {
            let params = p(m, n, d);
            assert_eq!(count_dyck(params).unwrap(), words(params).len() as u128, "{params}");
        }
        // ordinary Catalan numbers
        assert_eq!(count_dyck(p(1, 1, 10)).unwrap(), 16796);
    }

    #[test]
    fn base_paths() {
        assert_eq!(base_path(p(3, 2, 1)).to_string(), "NENEE");
        assert_eq!(base_path(p(1, 1, 2)).to_string(), "NENE");
        assert_eq!(base_path(p(5, 2, 1)).to_string(), "NEENEEE");
        for (m, n, d) in [(7, 5, 1), (3, 2, 3), (5, 3, 2), (1, 4, 2)] {
            let params = p(m, n, d);
            let base = base_path(params);
            assert!(base.is_dyck());
            let mut south = base.south_end_ranks().unwrap();
            south.sort();
            let expected: Vec<i64> = (0..n).flat_map(|r| std::iter::repeat_n(r, d as usize)).collect();
            assert_eq!(south, expected, "{params}");
        }
    }

    #[test]
    fn south_ranks() {
        let w = |s| StepWord::parse(s, p(3, 2, 1)).unwrap();
        assert_eq!(w("NNEEE").south_end_ranks().unwrap(), vec![0, 3]);
        assert_eq!(w("NENEE").south_end_ranks().unwrap(), vec![0, 1]);
    }

    #[test]
    fn sweep_key_order() {
        let a = SweepKey { rank: 1, column: 4 };
        let b = SweepKey { rank: 1, column: 2 };
        let c = SweepKey { rank: 2, column: 1 };
        assert!(a < b && b < c);
    }

    #[test]
    fn coprime_ranks_are_distinct() {
        for (m, n) in [(3, 2), (5, 3), (7, 5), (8, 5)] {
            for w in enumerate_dyck(p(m, n, 1), DEFAULT_LIMIT).unwrap() {
                let mut r = w.ranks().to_vec();
                r.sort();
                r.dedup();
                assert_eq!(r.len(), w.len());
            }
        }
    }

    proptest::proptest! {
        #[test]
        fn end_rank_is_zero(m in 1i64..6, n in 1i64..6, d in 1i64..4, seed in proptest::collection::vec(proptest::bool::ANY, 0..60)) {
            proptest::prop_assume!(gcd(m as u32, n as u32) == 1);
            let params = p(m, n, d);
            // shuffle a fixed multiset with the seed bits
            let mut steps = StepWord::corner(params).steps().to_vec();
            let len = steps.len();
            for (i, &b) in seed.iter().enumerate() {
                let j = i % len;
                if b { steps.swap(j, (j * 7 + 3) % len); }
            }
            let w = StepWord::from_steps(steps, params).unwrap();
            proptest::prop_assert_eq!(w.end_rank(), 0);
            proptest::prop_assert_eq!(w.is_dyck(), w.vertex_ranks().all(|r| r >= 0));
        }
    }
}
