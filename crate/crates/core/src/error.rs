use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("pairing has odd length {0}")]
    OddLength(usize),

    #[error("index {index}: partner {value} is out of range for {points} points")]
    OutOfRange {
        index: usize,
        value: usize,
        points: usize,
    },

    #[error("index {0}: point is paired with itself")]
    FixedPoint(usize),

    #[error("index {0}: pairing is not an involution")]
    NotInvolution(usize),

    #[error("symbol {symbol:?} occurs {count} times, expected exactly 2")]
    BadMultiplicity { symbol: String, count: usize },

    #[error("cannot parse token {0:?}")]
    BadToken(String),

    #[error("point {0} appears in more than one chord")]
    DuplicatePoint(usize),

    #[error("({0}, {1}) is not a chord of the diagram")]
    NotAChord(usize, usize),

    #[error("partition has no cuts")]
    EmptyCutSet,

    #[error("gap {gap} is out of range for {points} points")]
    GapOutOfRange { gap: usize, points: usize },

    #[error("gap {0} is cut more than once")]
    DuplicateCut(usize),

    #[error("operation requires at least one chord")]
    EmptyDiagram,

    #[error("size {actual} exceeds the configured guard {limit}")]
    GuardExceeded { limit: usize, actual: usize },

    #[error("diagram has {0} chords; at least 3 are required")]
    TooSmall(usize),

    #[error("parameter must be at least {min}, got {got}")]
    ParameterTooSmall { min: usize, got: usize },

    #[error("some chord does not have length m - 2")]
    StarViolated,

    #[error("a diagram with every chord of length m - 2 cannot have m = {0} (m = 2 mod 4)")]
    ImpossibleParity(usize),

    #[error("forward/back walk degenerates for n = 1 (-3 = 0 mod 3)")]
    DegenerateModulus,

    #[error("I/O error: {0}")]
    Io(String),

    #[error("internal inconsistency: {0}")]
    Inconsistent(String),
}

pub type Result<T> = std::result::Result<T, Error>;
