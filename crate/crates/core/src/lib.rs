//! Syllable-level recognition of segmented parameter trajectories.
//!
//! An input trajectory arrives already cut into phoneme-sized segments. The
//! recognizer places dictionary syllables over runs of consecutive segments,
//! scoring each placement with a dynamic-time-warping comparison, and
//! searches the resulting lattice (the *synthesis graph*) with exhaustive,
//! depth-first or breadth-first strategies. The chosen reference syllables
//! are then stitched into one smooth trajectory by fitting a per-syllable
//! linear or quadratic value transform under continuity constraints at every
//! merge point.
//!
//! Module map:
//!
//! - [`trajectory`]: trajectories, segment boundaries, syllable patterns, dictionaries
//! - [`compare`]: frame distance, DTW, syllable distance and best-pattern lookup
//! - [`stitch`]: the linear and quadratic adjustment systems and their solver
//! - [`search`]: the synthesis graph, path enumeration and the three search strategies
//! - [`recognize`]: the end-to-end pipeline
//! - [`harness`]: seeded synthetic data and the strategy comparison experiment
//! - [`io`]: JSON/CSV file formats
//! - [`cli`]: the command-line front end

pub mod cli;
pub mod compare;
mod error;
pub mod harness;
pub mod io;
pub mod recognize;
pub mod search;
pub mod stitch;
pub mod trajectory;

pub use compare::{best_pattern, dtw_distance, frame_distance, syllable_distance, SyllableGroup};
pub use error::{Error, Result};
pub use recognize::{recognize, RecognitionResult};
pub use search::{SearchStrategy, SolutionPath, SynthesisGraph};
pub use stitch::{stitch, Model, StitchResult};
pub use trajectory::{Dictionary, SegmentBoundaries, SegmentedInput, SyllablePattern, Trajectory};
