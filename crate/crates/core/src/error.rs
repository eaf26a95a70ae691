use thiserror::Error;

/// Errors produced anywhere in the recognition and stitching pipeline.
#[derive(Debug, Error)]
pub enum Error {
    #[error("trajectory is empty")]
    EmptyTrajectory,
    #[error("frame has zero parameters at frame {index}")]
    ZeroDimension { index: usize },
    #[error("ragged at frame {index}: expected {expected} parameters, found {found}")]
    RaggedFrame {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error("non-finite value at frame {frame}, channel {channel}")]
    NonFinite { frame: usize, channel: usize },

    #[error("segment boundaries are empty")]
    EmptyBoundaries,
    #[error("first segment boundary must be 0, found {found}")]
    BoundaryNotZero { found: usize },
    #[error("segment boundaries not strictly increasing at position {position}")]
    BoundaryNotAscending { position: usize },
    #[error("segment boundary {index} out of range for {frame_count} frames")]
    BoundaryOutOfRange { index: usize, frame_count: usize },

    #[error("syllable {label:?}: {phonemes} phoneme labels for {segments} segments")]
    PhonemeCount {
        label: String,
        phonemes: usize,
        segments: usize,
    },
    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("duplicate syllable label {0:?}")]
    DuplicateLabel(String),
    #[error("dictionary is empty")]
    EmptyDictionary,
    #[error("unknown syllable label {0:?}")]
    UnknownLabel(String),

    #[error("empty frame sequence")]
    EmptySequence,
    #[error("segment count mismatch: group has {group}, pattern has {pattern}")]
    SegmentCountMismatch { group: usize, pattern: usize },
    #[error("no dictionary pattern spans {segments} segments")]
    NoApplicablePattern { segments: usize },

    #[error("singular system: no usable pivot in column {column}")]
    Singular { column: usize },
    #[error("nothing to stitch")]
    NothingToStitch,

    #[error("no complete path over {segments} segments")]
    NoCompletePath { segments: usize },

    #[error("invariant violated: {0}")]
    InvariantViolation(String),

    #[error("syllable {label:?}, field {field}: {source}")]
    InvalidSyllable {
        label: String,
        field: &'static str,
        #[source]
        source: Box<Error>,
    },
    #[error("field {field}: {source}")]
    InvalidField {
        field: &'static str,
        #[source]
        source: Box<Error>,
    },
    #[error("malformed document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;
