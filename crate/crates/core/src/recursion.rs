//! Area-cell removal and the twin recursions for image area and dinv.
//!
//! A removal move turns an adjacent `N E` at columns `p, p + 1` into `E N`.
//! With `k` the start rank of the North step, the displayed arrows are
//! `S = (k, p)` and `W = (k + m, p + 1)` before the move and `W' = (k, p)`,
//! `S' = (k - n, p + 1)` after it. Only one vertex rank changes (to `k - n`),
//! so the move is valid exactly when `k >= n`; it removes one area cell.
//!
//! The regions `T1, T2, B1, B2` are single row bands flanking the display:
//! `T1` is row `k + m - 1` left of `p`, `T2` row `k + m` right of `p + 1`,
//! `B1` row `k - n - 1` left of `p` and `B2` row `k - n` right of `p + 1`.
//! Only arrows outside the display are counted.

use crate::diagram::Color;
use crate::error::{Error, Result};
use crate::paths::{base_path, Step, StepWord, SweepKey};
use crate::statistics::area_cells;
use crate::sweep::{image_start_rank, sweep_order};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct RemovalMove {
    /// 1-indexed column of the North step.
    pub p: usize,
    /// Start rank of that North step.
    pub k: i64,
}

impl RemovalMove {
    /// The move at column `p` of `word`, if it is valid there.
    pub fn at(word: &StepWord, p: usize) -> Result<Self> {
        let invalid = || Error::InvalidMove {
            word: word.to_string(),
            p,
        };
        if word.step(p) != Some(Step::North) || word.step(p + 1) != Some(Step::East) {
            return Err(invalid());
        }
        let k = word.rank(p);
        if k < word.params().fall() {
            return Err(invalid());
        }
        Ok(RemovalMove { p, k })
    }

    /// Level `l = k + m - n`; the display spans levels `l + n, l, k, k - n`.
    pub fn l(&self, word: &StepWord) -> i64 {
        self.k + word.params().rise() - word.params().fall()
    }

    fn check(&self, word: &StepWord) -> Result<()> {
        match RemovalMove::at(word, self.p) {
            Ok(mv) if mv == *self => Ok(()),
            _ => Err(Error::InvalidMove {
                word: word.to_string(),
                p: self.p,
            }),
        }
    }
}

/// Which valid move [`reduce_to_base`] takes at each step.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Strategy {
    /// Leftmost valid move.
    FirstValid,
    /// The move whose East step is swept last.
    MaxSweepW,
}

pub fn valid_moves(word: &StepWord) -> Result<Vec<RemovalMove>> {
    word.require_dyck()?;
    Ok((1..word.len()).filter_map(|p| RemovalMove::at(word, p).ok()).collect())
}

pub fn apply_move(word: &StepWord, mv: RemovalMove) -> Result<StepWord> {
    mv.check(word)?;
    Ok(word.swapped(mv.p))
}

/// Segment counts of non-displayed arrows in the four flanking regions.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RegionCounts {
    pub red_t1: i64,
    pub blue_t1: i64,
    pub red_t2: i64,
    pub blue_b1: i64,
    pub blue_b2: i64,
    pub red_b2: i64,
}

impl RegionCounts {
    /// Image-area recursion: `c^r(T1) + c^r(T2) - c^b(B1) - c^b(B2)`.
    pub fn area_delta(&self) -> i64 {
        self.red_t1 + self.red_t2 - self.blue_b1 - self.blue_b2
    }

    /// dinv recursion: `c^b(T1) + c^r(T2) - c^b(B1) - c^r(B2) - 1`.
    pub fn dinv_delta(&self) -> i64 {
        self.blue_t1 + self.red_t2 - self.blue_b1 - self.red_b2 - 1
    }

    /// `c^r(T1) = c^b(T1)` and `c^r(B2) + 1 = c^b(B2)`.
    pub fn cross_identities_hold(&self) -> bool {
        self.red_t1 == self.blue_t1 && self.red_b2 + 1 == self.blue_b2
    }
}

pub fn region_counts(word: &StepWord, mv: RemovalMove) -> Result<RegionCounts> {
    mv.check(word)?;
    let params = word.params();
    let (m, n, k, p) = (params.rise(), params.fall(), mv.k, mv.p);
    let mut counts = RegionCounts::default();
    for (column, step, s) in word.iter() {
        let color = Color::from(step);
        if column < p {
            match color {
                Color::Red => counts.red_t1 += (k <= s && s < k + m) as i64,
                Color::Blue => {
                    counts.blue_t1 += (k + m <= s && s < k + m + n) as i64;
                    counts.blue_b1 += (k - n <= s && s < k) as i64;
                }
            }
        } else if column > p + 1 {
            match color {
                Color::Red => {
                    counts.red_t2 += (k < s && s <= k + m) as i64;
                    counts.red_b2 += (k - n - m < s && s <= k - n) as i64;
                }
                Color::Blue => counts.blue_b2 += (k - n < s && s <= k) as i64,
            }
        }
    }
    Ok(counts)
}

/// Predicted `area(sweep(word)) - area(sweep(apply_move(word, mv)))`.
pub fn area_recursion_delta(word: &StepWord, mv: RemovalMove) -> Result<i64> {
    Ok(region_counts(word, mv)?.area_delta())
}

/// Predicted `dinv(word) - dinv(apply_move(word, mv))`.
pub fn dinv_recursion_delta(word: &StepWord, mv: RemovalMove) -> Result<i64> {
    Ok(region_counts(word, mv)?.dinv_delta())
}

/// Both sides of `rank(S) - rank(S') = m*A - n*B`.
///
/// `rank(S)` is the image start rank of the North step before the move,
/// `rank(S')` that of the North step after it, and `A` (`B`) counts the
/// non-displayed red (blue) arrows whose sweep key lies strictly between
/// `S' = (k - n, p + 1)` and `S = (k, p)`.
pub fn rank_difference_sides(word: &StepWord, mv: RemovalMove) -> Result<(i64, i64)> {
    let after = apply_move(word, mv)?;
    let params = word.params();
    let rank_s = image_start_rank(word, sweep_order(word).position_of(mv.p).unwrap())?;
    let rank_s_dash = image_start_rank(&after, sweep_order(&after).position_of(mv.p + 1).unwrap())?;
    let lo = SweepKey {
        rank: mv.k - params.fall(),
        column: mv.p + 1,
    };
    let hi = SweepKey {
        rank: mv.k,
        column: mv.p,
    };
    let (mut reds, mut blues) = (0, 0);
    for (column, step, rank) in word.iter() {
        if column == mv.p || column == mv.p + 1 {
            continue;
        }
        let key = SweepKey { rank, column };
        if lo < key && key < hi {
            match step {
                Step::North => reds += 1,
                Step::East => blues += 1,
            }
        }
    }
    Ok((rank_s - rank_s_dash, params.rise() * reds - params.fall() * blues))
}

pub fn rank_difference_holds(word: &StepWord, mv: RemovalMove) -> Result<bool> {
    let (lhs, rhs) = rank_difference_sides(word, mv)?;
    Ok(lhs == rhs)
}

fn pick(word: &StepWord, moves: &[RemovalMove], strategy: Strategy) -> Option<RemovalMove> {
    match strategy {
        Strategy::FirstValid => moves.first().copied(),
        // W sits at (k + m, p + 1); the largest sweep key is swept last
        Strategy::MaxSweepW => moves.iter().copied().max_by_key(|mv| word.key(mv.p + 1)),
    }
}

/// Chain of moves from `word` down to the base path, one area cell each.
pub fn reduce_to_base(word: &StepWord, strategy: Strategy) -> Result<Vec<RemovalMove>> {
    let mut current = word.clone();
    let mut chain = Vec::new();
    loop {
        let moves = valid_moves(&current)?;
        let Some(mv) = pick(&current, &moves, strategy) else {
            let area = area_cells(&current)?;
            if area > 0 {
                return Err(Error::NoMoveAvailable {
                    word: current.to_string(),
                    area,
                });
            }
            debug_assert_eq!(current, base_path(current.params()));
            return Ok(chain);
        };
        current = apply_move(&current, mv)?;
        chain.push(mv);
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::paths::{enumerate_dyck, Params, DEFAULT_LIMIT};
    use crate::statistics::{dinv_pairs, max_stat};
    use crate::sweep::sweep;

    fn word(s: &str, m: i64, n: i64, d: i64) -> StepWord {
        StepWord::parse(s, Params::new(m, n, d).unwrap()).unwrap()
    }

    #[test]
    fn moves() {
        let w = word("NNEEE", 3, 2, 1);
        assert_eq!(valid_moves(&w).unwrap(), [RemovalMove { p: 2, k: 3 }]);
        assert_eq!(valid_moves(&word("NENEE", 3, 2, 1)).unwrap(), []);
        let p = Params::new(7, 5, 1).unwrap();
        assert_eq!(valid_moves(&base_path(p)).unwrap(), []);
        assert!(matches!(valid_moves(&word("NEENE", 3, 2, 1)), Err(Error::NotDyck(_))));
    }

    #[test]
    fn apply() {
        let w = word("NNEEE", 3, 2, 1);
        let mv = RemovalMove::at(&w, 2).unwrap();
        assert_eq!(mv.l(&w), 4);
        assert_eq!(apply_move(&w, mv).unwrap().to_string(), "NENEE");
        let w = word("NNEE", 1, 1, 2);
        assert_eq!(
            apply_move(&w, RemovalMove::at(&w, 2).unwrap()).unwrap().to_string(),
            "NENE"
        );

        let base = word("NENEE", 3, 2, 1);
        assert!(matches!(
            RemovalMove::at(&base, 1),
            Err(Error::InvalidMove { p: 1, .. })
        ));
        assert!(matches!(
            RemovalMove::at(&base, 3),
            Err(Error::InvalidMove { p: 3, .. })
        ));
        assert!(matches!(
            apply_move(&base, RemovalMove { p: 3, k: 1 }),
            Err(Error::InvalidMove { .. })
        ));
        // a move whose k does not match the word
        assert!(matches!(
            apply_move(&word("NNEEE", 3, 2, 1), RemovalMove { p: 2, k: 5 }),
            Err(Error::InvalidMove { .. })
        ));
    }

    #[test]
    fn region_examples() {
        let w = word("NNEEE", 3, 2, 1);
        let mv = RemovalMove::at(&w, 2).unwrap();
        assert_eq!(
            region_counts(&w, mv).unwrap(),
            RegionCounts {
                blue_b2: 1,
                ..Default::default()
            }
        );
        assert_eq!(area_recursion_delta(&w, mv).unwrap(), -1);
        assert_eq!(dinv_recursion_delta(&w, mv).unwrap(), -1);
        assert!(rank_difference_holds(&w, mv).unwrap());

        let w = word("NNEE", 1, 1, 2);
        let mv = RemovalMove::at(&w, 2).unwrap();
        assert_eq!(mv.k, 1);
        assert_eq!(
            region_counts(&w, mv).unwrap(),
            RegionCounts {
                blue_b2: 1,
                ..Default::default()
            }
        );
        assert_eq!(area_recursion_delta(&w, mv).unwrap(), -1);
        assert_eq!(dinv_recursion_delta(&w, mv).unwrap(), -1);
        assert!(rank_difference_holds(&w, mv).unwrap());
    }

    #[test]
    fn corner_move_has_nothing_left() {
        for (m, n, d) in [(3, 2, 1), (7, 5, 1), (2, 1, 3)] {
            let params = Params::new(m, n, d).unwrap();
            let corner = StepWord::corner(params);
            let moves = valid_moves(&corner).unwrap();
            assert_eq!(moves.len(), 1);
            let mv = moves[0];
            assert_eq!(mv.p, params.north_count());
            let c = region_counts(&corner, mv).unwrap();
            assert_eq!((c.red_t1, c.blue_t1, c.blue_b1), (0, 0, 0));
            assert!(rank_difference_holds(&corner, mv).unwrap());
        }
    }

    #[test]
    fn recursions_match_direct_differences() {
        for (m, n, d) in [(5, 3, 1), (7, 4, 1), (1, 1, 3), (3, 2, 2), (2, 1, 3)] {
            let params = Params::new(m, n, d).unwrap();
            for w in enumerate_dyck(params, DEFAULT_LIMIT).unwrap() {
                for mv in valid_moves(&w).unwrap() {
                    let after = apply_move(&w, mv).unwrap();
                    assert_eq!(area_cells(&w).unwrap(), area_cells(&after).unwrap() + 1);
                    let image_diff =
                        area_cells(&sweep(&w)).unwrap() as i64 - area_cells(&sweep(&after)).unwrap() as i64;
                    let dinv_diff = dinv_pairs(&w).unwrap() as i64 - dinv_pairs(&after).unwrap() as i64;
                    let counts = region_counts(&w, mv).unwrap();
                    assert_eq!(counts.area_delta(), image_diff, "{w} {mv:?}");
                    assert_eq!(counts.dinv_delta(), dinv_diff, "{w} {mv:?}");
                    assert!(counts.cross_identities_hold(), "{w} {mv:?}");
                    assert!(rank_difference_holds(&w, mv).unwrap(), "{w} {mv:?}");
                }
            }
        }
    }

    #[test]
    fn reductions() {
        let w = word("NNEEE", 3, 2, 1);
        for strategy in [Strategy::FirstValid, Strategy::MaxSweepW] {
            assert_eq!(reduce_to_base(&w, strategy).unwrap(), [RemovalMove { p: 2, k: 3 }]);
            assert_eq!(reduce_to_base(&word("NENEE", 3, 2, 1), strategy).unwrap(), []);
            let params = Params::new(3, 2, 2).unwrap();
            let chain = reduce_to_base(&StepWord::corner(params), strategy).unwrap();
            assert_eq!(chain.len() as u64, max_stat(params));
        }
    }

    #[test]
    fn max_sweep_w_choice() {
        // ranks 0,5,10,7,12,9,6,3: moves at p=2 (W rank 10) and p=4 (W rank 12)
        let w = word("NNENEEEE", 5, 3, 1);
        let moves = valid_moves(&w).unwrap();
        assert_eq!(moves.iter().map(|mv| mv.p).collect::<Vec<_>>(), [2, 4]);
        assert_eq!(pick(&w, &moves, Strategy::MaxSweepW).unwrap().p, 4);
        assert_eq!(pick(&w, &moves, Strategy::FirstValid).unwrap().p, 2);
    }
}
