use thiserror::Error;

/// Errors shared by the codec, channel, decoder, capacity and CC4 modules.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    /// A bit pattern the decoder's encoder could never have produced.
    #[error("malformed codeword: {0}")]
    MalformedCodeword(String),

    /// A word outside the code, rejected by a strict decoder.
    #[error("not a codeword: {0}")]
    NotACodeword(String),

    /// A parameter outside its documented domain.
    #[error("out of range: {0}")]
    Range(String),

    /// Probabilities that are negative or do not sum to one.
    #[error("invalid distribution: {0}")]
    InvalidDistribution(String),

    /// An error-pattern position that does not fit the word it is applied to.
    #[error("position {position} out of range for a word of length {length}")]
    OutOfRange { position: usize, length: usize },

    /// Two bitstrings (or a word and a codebook) of different lengths.
    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    /// CC4 training with no samples.
    #[error("empty training set")]
    EmptyTrainingSet,

    /// An exhaustive enumeration too large to run.
    #[error("census for n = {n} exceeds the exhaustive enumeration bound (n <= {bound})")]
    Infeasible { n: usize, bound: usize },

    /// A string with characters other than '0' and '1'.
    #[error("invalid bitstring: {0}")]
    InvalidBitstring(String),

    /// A training-set line that does not parse as `bitstring,label`.
    #[error("invalid training data: {0}")]
    InvalidTrainingData(String),

    #[error("io: {0}")]
    Io(String),
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;
