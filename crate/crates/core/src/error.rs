use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("not a partition: {0:?} is not weakly decreasing")]
    NotPartition(Vec<usize>),
    #[error("incomparable sizes: {0} and {1}")]
    IncomparableSizes(usize, usize),
    #[error("not a virtual character")]
    NotVirtualCharacter,
    #[error("rank mismatch: {0} and {1}")]
    RankMismatch(usize, usize),
    #[error("invalid eigenvalue {value} for generator s_{generator}: expected -1 or q")]
    InvalidEigenvalue { generator: usize, value: String },
    #[error("block character differs between s_{0} and s_{1}")]
    InconsistentBlock(usize, usize),
    #[error("generator s_{0} listed twice")]
    DuplicateGenerator(usize),
    #[error("simple index {index} out of range for rank {n}")]
    SimpleIndexOutOfRange { index: usize, n: usize },
    #[error("element {0} is not a distinguished coset representative")]
    NotDistinguished(String),
    #[error("different cuspidal support")]
    DifferentSupport,
    #[error("empty multisegment")]
    EmptyMultisegment,
    #[error("support of {points} points exceeds the poset cap of {cap}")]
    PosetCap { points: usize, cap: usize },
    #[error("backend inconsistency: decomposition numbers invalid")]
    BackendInconsistency,
    #[error("invalid literal `{token}`: {reason}")]
    Parse { token: String, reason: String },
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}
