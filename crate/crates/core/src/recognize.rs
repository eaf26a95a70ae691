//! End-to-end recognition: search the synthesis graph, then stitch the
//! chosen reference syllables into the adjusted trajectory `X*`.

use std::time::{Duration, Instant};

use crate::compare::dtw_distance;
use crate::error::Result;
use crate::search::{build_graph, search, SearchStats, SearchStrategy, SolutionPath};
use crate::stitch::{stitch, Model, StitchResult};
use crate::trajectory::{Dictionary, SegmentedInput, Trajectory};

#[derive(Debug, Clone)]
pub struct RecognitionResult {
    pub path: SolutionPath,
    /// Chosen syllable labels in order.
    pub labels: Vec<String>,
    /// `d_i` for each placed syllable.
    pub per_syllable_distances: Vec<f64>,
    /// `d = Σ d_i`.
    pub total_distance: f64,
    /// The stitched reference trajectory and its fit diagnostics.
    pub stitched: StitchResult,
    pub strategy: SearchStrategy,
    pub model: Model,
    pub stats: SearchStats,
    pub wall_time: Duration,
    /// DTW between the input and the stitched trajectory; informational only.
    pub info_distance: f64,
}

/// Sum of a path's hop weights.
pub fn total_distance(path: &SolutionPath) -> f64 {
    path.hop_distances.iter().fold(0.0, |acc, d| acc + d)
}

/// Recognizes `input` against `dict` and stitches the result with `model`.
pub fn recognize(
    input: &SegmentedInput,
    dict: &Dictionary,
    strategy: SearchStrategy,
    model: Model,
) -> Result<RecognitionResult> {
    let started = Instant::now();
    let graph = build_graph(input, dict)?;
    let path = search(&graph, strategy)?;
    let wall_time = started.elapsed();

    let references: Vec<&Trajectory> = path
        .patterns
        .iter()
        .map(|k| dict.syllables()[k.expect("dictionary-backed graph")].trajectory())
        .collect();
    let stitched = stitch(&references, model)?;
    let info_distance = dtw_distance(input.trajectory().frames(), stitched.stitched.frames())?;

    Ok(RecognitionResult {
        labels: path.labels.clone(),
        per_syllable_distances: path.hop_distances.clone(),
        total_distance: total_distance(&path),
        stats: path.stats,
        path,
        stitched,
        strategy,
        model,
        wall_time,
        info_distance,
    })
}
