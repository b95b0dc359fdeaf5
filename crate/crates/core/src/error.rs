use thiserror::Error;

/// Errors produced by word, language and morphism operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("parse error: {0}")]
    Parse(String),

    #[error("alphabet mismatch: {0}")]
    AlphabetMismatch(String),

    #[error("expected a binary alphabet, found {size} symbols")]
    NotBinary { size: usize },

    #[error("`{0}` is not a palindrome")]
    NotPalindrome(String),

    #[error("empty word where a non-empty one is required: {0}")]
    EmptyWord(&'static str),

    #[error("morphism is erasing (letter `{0}` maps to the empty word)")]
    Erasing(String),

    #[error("morphism is cyclic: all images are powers of `{0}`")]
    Cyclic(String),

    #[error("operation requires an endomorphism (domain = codomain)")]
    NotEndomorphism,

    #[error("morphism is not primitive")]
    NotPrimitive,

    #[error("no fixed point starting with `{seed}`: {reason}")]
    NotSubstitution { seed: String, reason: String },

    #[error("required prefix of {needed} letters exceeds the cap of {cap}")]
    LengthCap { needed: usize, cap: usize },

    #[error("horizon {horizon} too small, need at least {needed}")]
    HorizonTooSmall { needed: usize, horizon: usize },

    #[error("`{0}` is not a factor of the language")]
    NotInLanguage(String),

    #[error("`{0}` does not occur in the source")]
    FactorAbsent(String),

    #[error("found {found} occurrences, need {needed}")]
    InsufficientOccurrences { found: usize, needed: usize },

    #[error("language is not closed under reversal (first failure at length {length}: `{word}`)")]
    NotReversalClosed { length: usize, word: String },

    #[error("morphism is not conjugate to a morphism in class P_ret")]
    NotConjugateToPret,

    #[error("morphism is not in class P_ret")]
    NotPret,

    #[error("morphism is not right marked")]
    NotRightMarked,

    #[error("no well-marked power up to exponent {0}")]
    NoWellMarkedPower(usize),

    #[error("exponent lists must have equal positive length (got {0} and {1})")]
    LengthMismatch(usize, usize),

    #[error("exponent list is not non-decreasing positive: {0:?}")]
    NotNonDecreasing(Vec<usize>),

    #[error("malformed Arnoux-Rauzy expression: {0}")]
    MalformedExpression(String),

    #[error("`{0}` is not bispecial in the view")]
    NotBispecial(String),

    #[error("too few return words: {0}")]
    TooFewReturnWords(String),

    #[error("could not decompose `{0}` into return words")]
    DecompositionFailed(String),

    #[error("power iteration did not reach the residual bound (residual {0:e})")]
    NoConvergence(f64),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
