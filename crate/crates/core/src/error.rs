use thiserror::Error;

/// Everything that can go wrong in this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("malformed input: {0}")]
    Malformed(String),
    #[error("parts are not weakly decreasing: {0}")]
    NotWeaklyDecreasing(String),
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    #[error("scaling by {0} does not give integral parts")]
    NonIntegralScale(String),
    #[error("partition {0} is not 2-regular")]
    NotTwoRegular(String),
    #[error("{what} = {value} exceeds the bound {bound}")]
    BoundExceeded {
        what: &'static str,
        value: usize,
        bound: usize,
    },
    #[error("{0} is not a staircase")]
    NotAStaircase(String),
    #[error("internal arithmetic gave a non-integral result: {0}")]
    NonIntegral(String),
    #[error("parameter out of range: {0}")]
    ParameterOutOfRange(String),
    #[error("labels come from different levels: {0} and {1}")]
    MixedLevels(usize, usize),
    #[error("cannot mix {0} and {1} labels")]
    MixedKinds(&'static str, &'static str),
    #[error("the character is zero")]
    ZeroCharacter,
    #[error("block with core length {core_len} and weight {weight} is not Rouquier")]
    NotRouquier { core_len: usize, weight: usize },
    #[error("matrix is not unitriangular: {0}")]
    NotUnitriangular(String),
    #[error("shape mismatch: {0}")]
    ShapeMismatch(String),
    #[error("adjustment matrix has a negative entry at ({row}, {col})")]
    NegativeAdjustment { row: String, col: String },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("i/o error on {path}: {msg}")]
    Io { path: String, msg: String },
}

pub type Result<T> = std::result::Result<T, Error>;
