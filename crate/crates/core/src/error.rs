use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("need at least 3 vertices, got n = {0}")]
    TooFewVertices(u32),

    #[error("n = {0} is too large for exact 64-bit counting")]
    Overflow(u32),

    #[error("chord endpoints must be distinct, got {0} twice")]
    DegenerateChord(u32),

    #[error("shift d = {d} is outside 1 <= d < n/2 for n = {n}")]
    ShiftOutOfRange { n: u32, d: u32 },

    #[error("n = {0} must be even")]
    OddModulus(u32),

    #[error("max-cut value {value} exceeds |E(G_{n})| = {edges}")]
    CutValueTooLarge { n: u32, value: u64, edges: u64 },

    #[error("cut covers {got} vertices but the graph has {expected}")]
    CutSizeMismatch { expected: usize, got: usize },

    #[error(
        "exact max-cut is too large: {vertices} non-isolated vertices exceed the limit of {limit}; \
         use heuristic mode (--mode heuristic) instead"
    )]
    TooLargeForExact { vertices: usize, limit: usize },

    #[error("heuristic needs restarts >= 1 and iterations >= 1")]
    InvalidHeuristicParams,

    #[error("coefficient table is not symmetric: a({n},{m}) != a({m},{n})")]
    NotSymmetric { n: i32, m: i32 },

    #[error("index ({n},{m}) lies outside the support bound {bound}")]
    OutOfSupport { n: i32, m: i32, bound: i32 },

    #[error("level k = {0} must be at least 2")]
    LevelTooSmall(u32),

    #[error("level vector for k = {k} needs {expected} entries, got {got}")]
    LevelLength { k: u32, expected: usize, got: usize },

    #[error("partial-sum identity fails at k = {k}, n = {n}: {got} != {expected}")]
    PartialSumMismatch { k: u32, n: u32, got: i64, expected: i64 },

    #[error("truncation N = {truncation} must be at least |k| + 1 = {}", .k.unsigned_abs() + 1)]
    TruncationTooSmall { k: i64, truncation: i64 },

    #[error("quadrature grid must have at least 8 points per axis, got {0}")]
    GridTooCoarse(usize),
}

pub type Result<T> = std::result::Result<T, Error>;
