use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PosetError {
    #[error("duplicate label `{0}`")]
    DuplicateLabel(String),
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("relation contains a cycle through `{0}`")]
    CycleDetected(String),
    #[error("parse error on line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("poset has {n} elements, above the isomorphism bound {bound}")]
    SizeLimitExceeded { n: usize, bound: usize },
    #[error("enumeration needs cap >= {required}, configured cap is {cap}")]
    CapExceeded { required: usize, cap: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("elements belong to different algebras")]
    AlgebraMismatch,
    #[error("the irreflexive incidence algebra has no unit")]
    NoUnit,
    #[error("({x}, {y}) is not a generator of this algebra")]
    NotAGenerator { x: usize, y: usize },
    #[error("generator index {0} out of range")]
    IndexOutOfRange(usize),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TableError {
    #[error("table is not associative: (b{i} b{j}) b{k} != b{i} (b{j} b{k})")]
    NotAssociative { i: usize, j: usize, k: usize },
    #[error("product b{i} b{j} is given more than once")]
    NotMonomial { i: usize, j: usize },
    #[error("product b{i} b{j} has a zero coefficient")]
    ZeroCoefficient { i: usize, j: usize },
    #[error("basis index {index} out of range for dimension {dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("invalid coefficient `{0}`")]
    BadCoefficient(String),
    #[error("malformed table file: {0}")]
    Format(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IdealError {
    #[error("ideals belong to different algebras")]
    AlgebraMismatch,
    #[error("ideal calculus needs the reflexive convention")]
    RequiresReflexive,
    #[error("pair set is not upward closed under nesting")]
    NotUpClosed,
    #[error("enumeration needs cap >= {required}, configured cap is {cap}")]
    CapExceeded { required: usize, cap: usize },
}

impl From<AlgebraError> for IdealError {
    fn from(_: AlgebraError) -> Self {
        IdealError::AlgebraMismatch
    }
}

impl From<PosetError> for IdealError {
    fn from(err: PosetError) -> Self {
        match err {
            PosetError::CapExceeded { required, cap } => IdealError::CapExceeded { required, cap },
            other => unreachable!("up-set enumeration only fails on the cap: {other}"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RecoveryError {
    #[error(transparent)]
    Table(#[from] TableError),
    #[error("table has dimension {0} but no quasi-idempotent basis element")]
    NoQuasiIdempotents(usize),
    #[error("recovered relation is not transitive: b{x} < b{y} < b{z} but not b{x} < b{z}")]
    RecoveredRelationNotTransitive { x: usize, y: usize, z: usize },
    #[error("recovered relation is not antisymmetric: b{x} < b{y} < b{x}")]
    RecoveredRelationNotAntisymmetric { x: usize, y: usize },
    #[error("complement of b{omitted} is not an ideal: b{i} b{j} lands on b{omitted}")]
    ClosureViolation { omitted: usize, i: usize, j: usize },
    #[error(transparent)]
    Poset(#[from] PosetError),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PresentedError {
    #[error("word of length {len} exceeds the bound {bound}")]
    WordLengthExceeded { len: usize, bound: usize },
    #[error("unknown label `{0}`")]
    UnknownLabel(String),
    #[error("degree {degree} exceeds the supported maximum {max}")]
    DegreeBoundExceeded { degree: usize, max: usize },
}
