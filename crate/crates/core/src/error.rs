use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("empty input")]
    EmptyInput,
    #[error("generators must be positive integers")]
    NonPositiveGenerator,
    #[error("gcd of generators is {0}, not 1; the semigroup is not cofinite")]
    GcdNotOne(u32),
    #[error("{0} is not a positive member of the semigroup")]
    NotAMember(i64),
    #[error("requested size {requested} exceeds the cap {cap}")]
    CapExceeded { requested: u32, cap: u32 },
    #[error("parse error: {0}")]
    Parse(String),
    #[error("ideals live over different semigroups")]
    AmbientMismatch,
    #[error("the first semigroup is not contained in the second")]
    NotASubsemigroup,
    #[error("Hilbert function differences did not stabilize")]
    NotStabilized,

    #[error("unsupported field {0:?}; expected one of F2, F3, F4, F5")]
    UnsupportedField(String),
    #[error("malformed structure table: {0}")]
    BadShape(String),
    #[error("coefficient {value} is not an element of F{q}")]
    InvalidCoefficient { value: u32, q: u32 },
    #[error("NoIdentity at j={0}")]
    NoIdentity(usize),
    #[error("NotCommutative at (i,j)=({0},{1})")]
    NotCommutative(usize, usize),
    #[error("NotAssociative at (i,j,k)=({0},{1},{2})")]
    NotAssociative(usize, usize, usize),
    #[error("algebra has {0} elements, above the exhaustive bound")]
    TooLarge(u64),
    #[error("quadratic algebra fits none of the five classes")]
    Unclassifiable,

    #[error("precision must be at least 4, got {0}")]
    BadPrecision(usize),
    #[error("rank must be at least 1, got {0}")]
    BadRank(usize),
    #[error("elements belong to different rings")]
    RingMismatch,
    #[error("ideal is not regular at this precision")]
    NotRegular,
    #[error("power {n} needs precision at least {needed}, have {precision}")]
    PrecisionTooLow { n: usize, needed: usize, precision: usize },
    #[error("ring axiom check failed: {0}")]
    AxiomFailure(String),
}
