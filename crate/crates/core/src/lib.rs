//! Exact combinatorics of rational `(dm, dn)`-Dyck paths.
//!
//! The crate covers the rank construction of lattice paths, the sweep map,
//! the `area` and `dinv` statistics, the stretched path diagram with its
//! per-row segment counts, and the area-cell removal recursions that relate
//! `dinv` of a path to `area` of its sweep image. Everything is integer
//! arithmetic; there is no floating point anywhere in the library.
//!
//! ```
//! use sweeplab_core::{Params, StepWord, sweep, statistics};
//!
//! let params = Params::new(3, 2, 1).unwrap();
//! let word = StepWord::parse("NENEE", params).unwrap();
//! let image = sweep::sweep(&word);
//! assert_eq!(image.to_string(), "NNEEE");
//! assert_eq!(
//!     statistics::dinv_pairs(&word).unwrap(),
//!     statistics::area_cells(&image).unwrap(),
//! );
//! ```

pub mod cli;
pub mod diagram;
mod error;
pub mod paths;
pub mod recursion;
pub mod render;
pub mod statistics;
pub mod sweep;
pub mod verify;

pub use diagram::{Arrow, Color, PathDiagram, RowCounts};
pub use error::{Error, Result};
pub use paths::{Params, RankSequence, Step, StepWord, SweepKey, DEFAULT_LIMIT};
pub use recursion::{RegionCounts, RemovalMove, Strategy};
pub use statistics::StatTable;
pub use sweep::{GreenLine, SweepOrder};
