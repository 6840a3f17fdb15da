use thiserror::Error;

/// Errors shared by every module of the crate.
///
/// Domain errors (bad letters, non-endomorphisms, erasing images where a
/// non-erasing morphism is required) are kept separate from resource errors
/// (symbol caps, work budgets) so callers can escalate budgets without
/// masking genuine misuse.
#[derive(Debug, Error)]
pub enum Error {
    #[error("unknown letter token `{0}`")]
    UnknownToken(String),

    #[error("letter index {index} out of range for alphabet of size {size}")]
    LetterOutOfRange { index: usize, size: usize },

    #[error("expected an endomorphism, but source and target alphabets differ")]
    NotEndomorphism,

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("morphism not prolongable at `{letter}`: {reason}")]
    NotProlongable { letter: String, reason: String },

    #[error("erasing image: `{0}` maps to the empty word where a non-erasing morphism is required")]
    ErasingImage(String),

    #[error("word is finite with {len} symbols, cannot produce {want}")]
    FiniteWord { len: usize, want: usize },

    #[error("symbol cap exceeded (cap {cap})")]
    SymbolCap { cap: usize },

    #[error("work budget exceeded ({budget} stored factors)")]
    WorkBudget { budget: u64 },

    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("letter `{0}` does not occur")]
    LetterAbsent(String),

    #[error("factor `{0}` does not occur within the horizon")]
    FactorAbsent(String),

    #[error("{0}")]
    Precondition(String),

    #[error("no transport candidate survives at verification length {len}: {msg}")]
    NoCandidate { len: usize, msg: String },

    #[error("transport ambiguous at verification cap {cap}; survivors: {survivors}")]
    Ambiguous { cap: usize, survivors: String },

    #[error("verification failed: {0}")]
    Verification(String),

    #[error("no ultimately periodic structure detected within a window of {0} symbols")]
    PeriodDetection(usize),

    #[error("factorization stuck at position {pos}: no return word matches")]
    FactorizationStuck { pos: usize },

    #[error("complete returns are prefix-comparable: {0}")]
    ComparableReturns(String),

    #[error("internal inconsistency: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;
