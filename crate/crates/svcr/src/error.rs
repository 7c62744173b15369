use thiserror::Error;

use crate::model::MAX_ALTERNATIVES;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Error)]
pub enum Error {
    #[error("alternative set is empty")]
    EmptyAlternativeSet,
    #[error("too many alternatives: {0} (exact mode supports at most {MAX_ALTERNATIVES})")]
    TooManyAlternatives(usize),
    #[error("duplicate alternative `{0}`")]
    DuplicateAlternative(String),
    #[error("invalid alternative name `{0}`")]
    InvalidAlternativeName(String),
    #[error("unknown alternative `{0}`")]
    UnknownAlternative(String),
    #[error("empty coalition is not allowed here")]
    EmptyCoalition,
    #[error("coalition uses alternatives outside this set")]
    CoalitionOutOfRange,
    #[error("empty voter id")]
    EmptyVoterId,
    #[error("duplicate voter id `{0}`")]
    DuplicateVoterId(String),
    #[error("voter id `{0}` appears in both profiles")]
    OverlappingVoterIds(String),
    #[error("alternative sets do not match")]
    AlternativeSetMismatch,
    #[error("committee size {k} out of range (expected 1..={m})")]
    CommitteeSizeOutOfRange { k: usize, m: usize },
    #[error("score tie across the committee boundary at k={k}, tied: {}", tied.join(", "))]
    BoundaryTie { k: usize, tied: Vec<String> },
    #[error("permutation oracle supports at most {max} alternatives, got {m}")]
    OracleTooLarge { m: usize, max: usize },
    #[error("dense matrix output supports at most {max} alternatives, got {m}")]
    DenseTooWide { m: usize, max: usize },
    #[error("malformed header: {0}")]
    MalformedHeader(String),
    #[error("non-binary cell for voter `{voter}` in column `{column}`: `{value}`")]
    NonBinaryCell {
        voter: String,
        column: String,
        value: String,
    },
    #[error("malformed profile document: {0}")]
    MalformedDocument(String),
    #[error("invalid rational literal `{0}`")]
    InvalidRational(String),
    #[error("invalid generator parameters: {0}")]
    InvalidGeneratorConfig(String),
}
