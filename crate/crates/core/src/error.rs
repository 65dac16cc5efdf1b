use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("m, n and d must all be positive (got m={m}, n={n}, d={d})")]
    NonPositive { m: i64, n: i64, d: i64 },

    #[error("m={m} and n={n} are not co-prime")]
    NonCoprime { m: u32, n: u32 },

    #[error("parameters too large: d*m*n must fit in 63 bits")]
    TooLarge,

    #[error("bad letter {letter:?} at position {position}; expected N, E, S or W")]
    BadLetter { letter: char, position: usize },

    #[error("expected {want_north} N and {want_east} E steps, found {north} N and {east} E")]
    BadCounts {
        north: usize,
        east: usize,
        want_north: usize,
        want_east: usize,
    },

    #[error("{0} is not a Dyck path")]
    NotDyck(String),

    #[error("path length {len} exceeds the enumeration limit {limit}")]
    LimitExceeded { len: usize, limit: usize },

    #[error("row {row} outside {lo}..{hi}")]
    RowOutOfRange { row: i64, lo: i64, hi: i64 },

    #[error("index {index} outside 1..={len}")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("{0} has no Dyck preimage under sweep")]
    NotInImage(String),

    #[error("rank sum {sum} of {word} is not compatible with division by n={n}")]
    NonIntegral { word: String, sum: i64, n: u32 },

    #[error("no removal move at column {p} of {word}")]
    InvalidMove { word: String, p: usize },

    #[error("{word} has area {area} but no removal move")]
    NoMoveAvailable { word: String, area: u64 },

    #[error("count of Dyck paths overflows u128")]
    CountOverflow,
}
