use thiserror::Error;

/// Errors shared across the workbench.
///
/// `WordTooLong` is a desk-scale resource cap, never a mathematical
/// statement: it means the configured `max_word_len` would be exceeded,
/// so the caller must raise the cap or shrink the request.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("coxeter matrix is not square ({rows} rows, expected {expected} columns each)")]
    BadShape { rows: usize, expected: usize },
    #[error("coxeter matrix is not symmetric at ({0}, {1})")]
    NonSymmetric(usize, usize),
    #[error("coxeter matrix diagonal entry at ({0}, {0}) must be 1")]
    BadDiagonal(usize),
    #[error("coxeter matrix off-diagonal entry at ({0}, {1}) must be >= 2 or infinite")]
    OffDiagonalOne(usize, usize),
    #[error("duplicate generator name {0:?}")]
    DuplicateName(String),
    #[error("unknown generator {0:?}")]
    UnknownGenerator(String),
    #[error("generator index {index} out of range for rank {rank}")]
    BadGeneratorIndex { index: usize, rank: usize },
    #[error("word of length {len} exceeds the configured cap {cap}")]
    WordTooLong { len: usize, cap: usize },
    #[error("generator {0} violates the nested condition; the six-class classification does not apply")]
    NestedConditionViolated(usize),
    #[error("expected the rank-3 affine triangle system with all off-diagonal orders 3")]
    WrongSystem,
    #[error("coset representative discovery failed: {0}")]
    RepDiscoveryFailed(String),
    #[error("element does not factor as rep * lattice element within the configured cap")]
    DecompositionFailed,
    #[error("graph descriptor invalid: {0}")]
    BadGraph(String),
    #[error("finer-model values violate the orbit constraint ({violations} orbit pairs disagree)")]
    ConstraintViolated { violations: usize },
    #[error("finer model requires a finite vertex group at the distinguished vertex")]
    InfiniteDistinguishedVertex,
    #[error("finer model expects {expected} values (one per component), got {got}")]
    ValueCountMismatch { expected: usize, got: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
