use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },

    #[error("undeclared vertex `{0}`")]
    UndeclaredVertex(String),

    #[error("unknown arrow `{0}`")]
    UnknownArrow(String),

    #[error("duplicate declaration of `{0}`")]
    Duplicate(String),

    #[error("relation path `{0}` is not composable")]
    NonComposablePath(String),

    #[error("relation terms do not share source and target")]
    MixedRelation,

    #[error("relation path `{0}` has length below 2")]
    ShortRelationPath(String),

    #[error("characteristic {0} is not a supported prime")]
    BadCharacteristic(u64),

    #[error("algebra has no vertices")]
    EmptyQuiver,

    #[error("infinite-dimensional algebra detected (paths survive past length {0})")]
    InfiniteDimensional(usize),

    #[error("algebra characteristic {found} does not match scalar field of characteristic {expected}")]
    CharacteristicMismatch { expected: u32, found: u32 },

    #[error("modules belong to different algebras")]
    MismatchedAlgebras,

    #[error("invalid module: {0}")]
    InvalidModule(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("enumeration cap exceeded ({needed} > {cap}); raise cap")]
    CapExceeded { needed: u128, cap: u128 },

    #[error("module is decomposable")]
    Decomposable,

    #[error("module is injective")]
    InjectiveInput,

    #[error("module is zero")]
    ZeroModule,

    #[error("catalog certificate failed: {0} (raise dim_bound or algebra not representation-finite at this bound)")]
    Certificate(String),

    #[error("catalog has {0} entries; at most 128 are supported")]
    CatalogTooLarge(usize),

    #[error("decomposition failed: {0}")]
    Decomposition(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("verification failure: {0}")]
    Verification(String),

    #[error("cache file error: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
