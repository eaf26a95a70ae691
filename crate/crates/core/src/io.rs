//! File formats: JSON dictionaries, inputs and reports; CSV trajectories.
//!
//! Dictionary:
//!
//! ```json
//! {"parameter_dim": 1,
//!  "syllables": [{"label": "ba", "phonemes": ["b", "a"],
//!                 "frames": [[0.0], [0.5], [1.0]], "boundaries": [0, 2]}]}
//! ```
//!
//! Input: `{"parameter_dim": P, "frames": [[..], ..], "boundaries": [0, ..]}`.
//!
//! Unknown fields are rejected. Numbers are written in shortest round-trip
//! form, so parsing what the writers emit reproduces every value exactly.

use std::fmt::Write as _;
use std::fs;
use std::path::Path;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::recognize::RecognitionResult;
use crate::search::{SearchStats, SearchStrategy};
use crate::stitch::{Coefficients, Model, StitchResult};
use crate::trajectory::{Dictionary, Frame, SegmentBoundaries, SegmentedInput, SyllablePattern, Trajectory};

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SyllableDocument {
    pub label: String,
    pub phonemes: Vec<String>,
    pub frames: Vec<Frame>,
    pub boundaries: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DictionaryDocument {
    pub parameter_dim: usize,
    pub syllables: Vec<SyllableDocument>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InputDocument {
    pub parameter_dim: usize,
    pub frames: Vec<Frame>,
    pub boundaries: Vec<usize>,
}

fn check_dim(traj: &Trajectory, declared: usize) -> Result<()> {
    if traj.dim() == declared {
        Ok(())
    } else {
        Err(Error::DimensionMismatch {
            expected: declared,
            found: traj.dim(),
        })
    }
}

impl DictionaryDocument {
    pub fn into_dictionary(self) -> Result<Dictionary> {
        let dim = self.parameter_dim;
        let syllables = self
            .syllables
            .into_iter()
            .map(|s| {
                let wrap = |field: &'static str| {
                    let label = s.label.clone();
                    move |e: Error| Error::InvalidSyllable {
                        label,
                        field,
                        source: Box::new(e),
                    }
                };
                let traj = Trajectory::new(s.frames).map_err(wrap("frames"))?;
                check_dim(&traj, dim).map_err(wrap("frames"))?;
                let bounds = SegmentBoundaries::new(s.boundaries).map_err(wrap("boundaries"))?;
                bounds.check_fits(traj.len()).map_err(wrap("boundaries"))?;
                SyllablePattern::new(s.label.clone(), s.phonemes, traj, bounds).map_err(wrap("phonemes"))
            })
            .collect::<Result<Vec<_>>>()?;
        Dictionary::new(syllables, dim)
    }
}

impl From<&Dictionary> for DictionaryDocument {
    fn from(dict: &Dictionary) -> Self {
        DictionaryDocument {
            parameter_dim: dict.parameter_dim(),
            syllables: dict
                .syllables()
                .iter()
                .map(|s| SyllableDocument {
                    label: s.label().to_owned(),
                    phonemes: s.phonemes().to_vec(),
                    frames: s.trajectory().frames().to_vec(),
                    boundaries: s.boundaries().starts().to_vec(),
                })
                .collect(),
        }
    }
}

impl InputDocument {
    pub fn into_input(self) -> Result<SegmentedInput> {
        let field = |field: &'static str| move |e: Error| Error::InvalidField { field, source: Box::new(e) };
        let traj = Trajectory::new(self.frames).map_err(field("frames"))?;
        check_dim(&traj, self.parameter_dim).map_err(field("frames"))?;
        let bounds = SegmentBoundaries::new(self.boundaries).map_err(field("boundaries"))?;
        SegmentedInput::new(traj, bounds).map_err(field("boundaries"))
    }
}

impl From<&SegmentedInput> for InputDocument {
    fn from(input: &SegmentedInput) -> Self {
        InputDocument {
            parameter_dim: input.trajectory().dim(),
            frames: input.trajectory().frames().to_vec(),
            boundaries: input.boundaries().starts().to_vec(),
        }
    }
}

pub fn parse_dictionary_str(text: &str) -> Result<Dictionary> {
    serde_json::from_str::<DictionaryDocument>(text)?.into_dictionary()
}

pub fn parse_dictionary_file(path: impl AsRef<Path>) -> Result<Dictionary> {
    parse_dictionary_str(&fs::read_to_string(path)?)
}

pub fn parse_input_str(text: &str) -> Result<SegmentedInput> {
    serde_json::from_str::<InputDocument>(text)?.into_input()
}

pub fn parse_input_file(path: impl AsRef<Path>) -> Result<SegmentedInput> {
    parse_input_str(&fs::read_to_string(path)?)
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize + ?Sized>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)?;
    s.push('\n');
    Ok(s)
}

pub fn dictionary_to_json(dict: &Dictionary) -> Result<String> {
    to_json(&DictionaryDocument::from(dict))
}

pub fn input_to_json(input: &SegmentedInput) -> Result<String> {
    to_json(&InputDocument::from(input))
}

/// One frame per line, channels separated by commas.
pub fn trajectory_to_csv(traj: &Trajectory) -> String {
    let mut out = String::new();
    for frame in traj.frames() {
        for (c, v) in frame.iter().enumerate() {
            if c > 0 {
                out.push(',');
            }
            write!(out, "{v}").expect("writing to a String");
        }
        out.push('\n');
    }
    out
}

/// Stitching fields shared by the recognition and stitch reports.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct StitchDocument {
    pub coefficients: Coefficients,
    pub sigma2: Vec<f64>,
    pub junction_residuals: Vec<Vec<f64>>,
    pub slope_residuals: Vec<Vec<f64>>,
    pub solver_residuals: Vec<f64>,
    pub fallback: Vec<bool>,
    pub stitched: Vec<Frame>,
}

impl From<&StitchResult> for StitchDocument {
    fn from(s: &StitchResult) -> Self {
        StitchDocument {
            coefficients: s.coeffs.clone(),
            sigma2: s.sigma2.clone(),
            junction_residuals: s.junction_residuals.clone(),
            slope_residuals: s.slope_residuals.clone(),
            solver_residuals: s.solver_residuals.clone(),
            fallback: s.fallback.clone(),
            stitched: s.stitched.frames().to_vec(),
        }
    }
}

/// The `recognize` output. Wall time is left out so reruns are byte-identical.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub strategy: SearchStrategy,
    pub model: Model,
    pub labels: Vec<String>,
    pub path_nodes: Vec<usize>,
    pub per_syllable_distances: Vec<f64>,
    pub total_distance: f64,
    pub stats: SearchStats,
    pub info_distance: f64,
    pub stitch: StitchDocument,
}

impl From<&RecognitionResult> for ReportDocument {
    fn from(r: &RecognitionResult) -> Self {
        ReportDocument {
            strategy: r.strategy,
            model: r.model,
            labels: r.labels.clone(),
            path_nodes: r.path.nodes.clone(),
            per_syllable_distances: r.per_syllable_distances.clone(),
            total_distance: r.total_distance,
            stats: r.stats,
            info_distance: r.info_distance,
            stitch: StitchDocument::from(&r.stitched),
        }
    }
}
