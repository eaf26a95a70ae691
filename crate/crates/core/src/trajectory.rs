//! Trajectories of parameter frames and the segment structure laid over them.
//!
//! A [`Trajectory`] is a non-empty sequence of frames, each a vector of `P`
//! finite parameters. [`SegmentBoundaries`] cut a trajectory into contiguous
//! phoneme segments by listing the frame index where each segment starts.
//! All types here are immutable once validated.

use std::collections::HashSet;
use std::ops::Range;

use crate::error::{Error, Result};

/// One frame of `P` parameter values.
pub type Frame = Vec<f64>;

/// A validated, non-empty sequence of equally sized, finite frames.
#[derive(Debug, Clone, PartialEq)]
pub struct Trajectory {
    frames: Vec<Frame>,
    dim: usize,
}

impl Trajectory {
    /// Validates raw frames: non-empty, equal dimension `P >= 1`, all finite.
    pub fn new(frames: Vec<Frame>) -> Result<Self> {
        let dim = match frames.first() {
            None => return Err(Error::EmptyTrajectory),
            Some(f) if f.is_empty() => return Err(Error::ZeroDimension { index: 0 }),
            Some(f) => f.len(),
        };
        for (index, frame) in frames.iter().enumerate() {
            if frame.len() != dim {
                return Err(Error::RaggedFrame {
                    index,
                    expected: dim,
                    found: frame.len(),
                });
            }
            if let Some(channel) = frame.iter().position(|v| !v.is_finite()) {
                return Err(Error::NonFinite {
                    frame: index,
                    channel,
                });
            }
        }
        Ok(Trajectory { frames, dim })
    }

    /// Builds a single-channel trajectory from scalar values.
    pub fn from_scalars(values: &[f64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| vec![v]).collect())
    }

    pub fn frames(&self) -> &[Frame] {
        &self.frames
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    /// Always false for a validated trajectory.
    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }

    /// Number of parameters per frame.
    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Values of one channel across all frames.
    pub fn channel(&self, c: usize) -> Vec<f64> {
        self.frames.iter().map(|f| f[c]).collect()
    }

    pub fn into_frames(self) -> Vec<Frame> {
        self.frames
    }
}

/// Validates a raw frame sequence into a [`Trajectory`].
pub fn validate_trajectory(frames: Vec<Frame>) -> Result<Trajectory> {
    Trajectory::new(frames)
}

/// Segment start indices; the first is always 0 and they strictly increase.
///
/// Segment `j` spans `[starts[j], starts[j + 1])`, the last one running to the
/// end of the trajectory it is applied to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SegmentBoundaries {
    starts: Vec<usize>,
}

impl SegmentBoundaries {
    pub fn new(starts: Vec<usize>) -> Result<Self> {
        match starts.first() {
            None => return Err(Error::EmptyBoundaries),
            Some(&s) if s != 0 => return Err(Error::BoundaryNotZero { found: s }),
            _ => {}
        }
        if let Some(position) = starts.windows(2).position(|w| w[0] >= w[1]) {
            return Err(Error::BoundaryNotAscending {
                position: position + 1,
            });
        }
        Ok(SegmentBoundaries { starts })
    }

    pub fn starts(&self) -> &[usize] {
        &self.starts
    }

    pub fn segment_count(&self) -> usize {
        self.starts.len()
    }

    /// Checks that every segment is non-empty for a trajectory of `frame_count` frames.
    pub fn check_fits(&self, frame_count: usize) -> Result<()> {
        match self.starts.last() {
            Some(&last) if last >= frame_count => Err(Error::BoundaryOutOfRange {
                index: last,
                frame_count,
            }),
            _ => Ok(()),
        }
    }

    /// Frame ranges of each segment; assumes [`check_fits`](Self::check_fits) holds.
    pub fn ranges(&self, frame_count: usize) -> Vec<Range<usize>> {
        let ends = self.starts[1..].iter().copied().chain(Some(frame_count));
        self.starts.iter().zip(ends).map(|(&s, e)| s..e).collect()
    }
}

/// A borrowed, contiguous run of frames belonging to one phoneme segment.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Segment<'a> {
    pub start: usize,
    pub end: usize,
    pub frames: &'a [Frame],
}

impl Segment<'_> {
    pub fn range(&self) -> Range<usize> {
        self.start..self.end
    }

    pub fn len(&self) -> usize {
        self.frames.len()
    }

    pub fn is_empty(&self) -> bool {
        self.frames.is_empty()
    }
}

/// Cuts `traj` into the segments described by `bounds`.
pub fn slice_segments<'a>(traj: &'a Trajectory, bounds: &SegmentBoundaries) -> Result<Vec<Segment<'a>>> {
    bounds.check_fits(traj.len())?;
    Ok(bounds
        .ranges(traj.len())
        .into_iter()
        .map(|r| Segment {
            start: r.start,
            end: r.end,
            frames: &traj.frames()[r],
        })
        .collect())
}

/// A labeled reference syllable: its trajectory and per-phoneme segmentation.
#[derive(Debug, Clone, PartialEq)]
pub struct SyllablePattern {
    label: String,
    phonemes: Vec<String>,
    trajectory: Trajectory,
    boundaries: SegmentBoundaries,
}

impl SyllablePattern {
    pub fn new(
        label: impl Into<String>,
        phonemes: Vec<String>,
        trajectory: Trajectory,
        boundaries: SegmentBoundaries,
    ) -> Result<Self> {
        let label = label.into();
        boundaries.check_fits(trajectory.len())?;
        if phonemes.len() != boundaries.segment_count() {
            return Err(Error::PhonemeCount {
                label,
                phonemes: phonemes.len(),
                segments: boundaries.segment_count(),
            });
        }
        Ok(SyllablePattern {
            label,
            phonemes,
            trajectory,
            boundaries,
        })
    }

    pub fn label(&self) -> &str {
        &self.label
    }

    pub fn phonemes(&self) -> &[String] {
        &self.phonemes
    }

    pub fn trajectory(&self) -> &Trajectory {
        &self.trajectory
    }

    pub fn boundaries(&self) -> &SegmentBoundaries {
        &self.boundaries
    }

    /// Number of phoneme segments `n_k`.
    pub fn segment_count(&self) -> usize {
        self.boundaries.segment_count()
    }

    pub fn segments(&self) -> Vec<Segment<'_>> {
        slice_segments(&self.trajectory, &self.boundaries).expect("validated at construction")
    }
}

/// An ordered set of syllable patterns sharing one parameter dimension.
///
/// Dictionary order breaks every tie downstream.
#[derive(Debug, Clone, PartialEq)]
pub struct Dictionary {
    syllables: Vec<SyllablePattern>,
    parameter_dim: usize,
}

impl Dictionary {
    pub fn new(syllables: Vec<SyllablePattern>, parameter_dim: usize) -> Result<Self> {
        let mut seen = HashSet::new();
        for s in &syllables {
            if s.trajectory().dim() != parameter_dim {
                return Err(Error::InvalidSyllable {
                    label: s.label().to_owned(),
                    field: "frames",
                    source: Box::new(Error::DimensionMismatch {
                        expected: parameter_dim,
                        found: s.trajectory().dim(),
                    }),
                });
            }
            if !seen.insert(s.label()) {
                return Err(Error::DuplicateLabel(s.label().to_owned()));
            }
        }
        Ok(Dictionary {
            syllables,
            parameter_dim,
        })
    }

    pub fn syllables(&self) -> &[SyllablePattern] {
        &self.syllables
    }

    pub fn parameter_dim(&self) -> usize {
        self.parameter_dim
    }

    pub fn len(&self) -> usize {
        self.syllables.len()
    }

    pub fn is_empty(&self) -> bool {
        self.syllables.is_empty()
    }

    pub fn get(&self, label: &str) -> Option<&SyllablePattern> {
        self.syllables.iter().find(|s| s.label() == label)
    }

    /// Patterns with exactly `n` segments, in dictionary order.
    pub fn by_length(&self, n: usize) -> Vec<&SyllablePattern> {
        self.syllables
            .iter()
            .filter(|s| s.segment_count() == n)
            .collect()
    }

    /// Distinct segment counts present, ascending.
    pub fn lengths(&self) -> Vec<usize> {
        let mut lengths: Vec<usize> = self.syllables.iter().map(|s| s.segment_count()).collect();
        lengths.sort_unstable();
        lengths.dedup();
        lengths
    }
}

/// Free-function form of [`Dictionary::by_length`].
pub fn dictionary_by_length(dict: &Dictionary, n: usize) -> Vec<&SyllablePattern> {
    dict.by_length(n)
}

/// The segmented input trajectory `X` with its `p` segments.
#[derive(Debug, Clone, PartialEq)]
pub struct SegmentedInput {
    trajectory: Trajectory,
    boundaries: SegmentBoundaries,
}

impl SegmentedInput {
    pub fn new(trajectory: Trajectory, boundaries: SegmentBoundaries) -> Result<Self> {
        boundaries.check_fits(trajectory.len())?;
        Ok(SegmentedInput {
            trajectory,
            boundaries,
        })
    }

    pub fn trajectory(&self) -> &Trajectory {
        &self.trajectory
    }

    pub fn boundaries(&self) -> &SegmentBoundaries {
        &self.boundaries
    }

    /// `p`, the number of input segments.
    pub fn segment_count(&self) -> usize {
        self.boundaries.segment_count()
    }

    pub fn segments(&self) -> Vec<Segment<'_>> {
        slice_segments(&self.trajectory, &self.boundaries).expect("validated at construction")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn scalars(v: &[f64]) -> Trajectory {
        Trajectory::from_scalars(v).unwrap()
    }

    fn pattern(label: &str, values: &[f64], starts: Vec<usize>) -> SyllablePattern {
        let n = starts.len();
        SyllablePattern::new(
            label,
            (0..n).map(|j| format!("{label}{j}")).collect(),
            scalars(values),
            SegmentBoundaries::new(starts).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn validates_well_formed_frames() {
        let t = validate_trajectory(vec![vec![1.0], vec![2.0]]).unwrap();
        assert_eq!(t.len(), 2);
        assert_eq!(t.dim(), 1);
    }

    #[test]
    fn rejects_empty_ragged_and_non_finite() {
        assert!(matches!(validate_trajectory(vec![]), Err(Error::EmptyTrajectory)));
        let err = validate_trajectory(vec![vec![1.0], vec![2.0, 3.0]]).unwrap_err();
        assert!(matches!(err, Error::RaggedFrame { index: 1, .. }));
        assert!(err.to_string().contains("ragged at frame 1"));
        assert!(matches!(
            validate_trajectory(vec![vec![1.0, f64::NAN]]),
            Err(Error::NonFinite { frame: 0, channel: 1 })
        ));
        assert!(matches!(
            validate_trajectory(vec![vec![]]),
            Err(Error::ZeroDimension { index: 0 })
        ));
    }

    #[test]
    fn slices_segments() {
        let t = scalars(&[0., 1., 2., 3., 4., 5., 6.]);
        let b = SegmentBoundaries::new(vec![0, 2, 4]).unwrap();
        let ranges: Vec<_> = slice_segments(&t, &b).unwrap().iter().map(|s| s.range()).collect();
        assert_eq!(ranges, vec![0..2, 2..4, 4..7]);

        let t = scalars(&[0., 1., 2.]);
        let one = slice_segments(&t, &SegmentBoundaries::new(vec![0]).unwrap()).unwrap();
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].range(), 0..3);

        let b = SegmentBoundaries::new(vec![0, 3]).unwrap();
        assert!(matches!(
            slice_segments(&t, &b),
            Err(Error::BoundaryOutOfRange { index: 3, frame_count: 3 })
        ));
    }

    #[test]
    fn boundary_validation() {
        assert!(matches!(SegmentBoundaries::new(vec![]), Err(Error::EmptyBoundaries)));
        assert!(matches!(
            SegmentBoundaries::new(vec![1, 2]),
            Err(Error::BoundaryNotZero { found: 1 })
        ));
        assert!(matches!(
            SegmentBoundaries::new(vec![0, 2, 2]),
            Err(Error::BoundaryNotAscending { position: 2 })
        ));
    }

    #[test]
    fn phoneme_count_must_match_segments() {
        let err = SyllablePattern::new(
            "ka",
            vec!["k".into()],
            scalars(&[0., 1., 2.]),
            SegmentBoundaries::new(vec![0, 1]).unwrap(),
        )
        .unwrap_err();
        assert!(matches!(err, Error::PhonemeCount { phonemes: 1, segments: 2, .. }));
    }

    #[test]
    fn dictionary_rejects_duplicates_and_dim_mismatch() {
        let a = pattern("a", &[0., 1.], vec![0, 1]);
        let err = Dictionary::new(vec![a.clone(), a.clone()], 1).unwrap_err();
        assert!(matches!(err, Error::DuplicateLabel(ref l) if l == "a"));
        assert!(Dictionary::new(vec![a], 2).is_err());
    }

    #[test]
    fn filters_by_length_in_order() {
        let dict = Dictionary::new(
            vec![
                pattern("x", &[0., 1.], vec![0, 1]),
                pattern("y", &[0., 1., 2.], vec![0, 1, 2]),
                pattern("z", &[2., 1.], vec![0, 1]),
            ],
            1,
        )
        .unwrap();
        let labels = |n| -> Vec<&str> { dictionary_by_length(&dict, n).iter().map(|p| p.label()).collect() };
        assert_eq!(labels(2), vec!["x", "z"]);
        assert!(labels(4).is_empty());
        assert_eq!(labels(3), vec!["y"]);
        assert_eq!(dict.lengths(), vec![2, 3]);
    }

    proptest! {
        #[test]
        fn segments_concatenate_to_input(
            len in 1usize..40,
            cuts in proptest::collection::btree_set(1usize..40, 0..8),
        ) {
            let t = Trajectory::from_scalars(&(0..len).map(|i| i as f64).collect::<Vec<_>>()).unwrap();
            let starts: Vec<usize> = std::iter::once(0).chain(cuts.into_iter().filter(|&c| c < len)).collect();
            let b = SegmentBoundaries::new(starts).unwrap();
            let segs = slice_segments(&t, &b).unwrap();
            let joined: Vec<Frame> = segs.iter().flat_map(|s| s.frames.iter().cloned()).collect();
            prop_assert_eq!(joined.as_slice(), t.frames());
            prop_assert!(segs.iter().all(|s| !s.is_empty()));
        }

        #[test]
        fn by_length_partitions_dictionary(counts in proptest::collection::vec(1usize..5, 1..10)) {
            let pats: Vec<_> = counts
                .iter()
                .enumerate()
                .map(|(i, &n)| {
                    let vals: Vec<f64> = (0..n).map(|j| j as f64).collect();
                    pattern(&format!("p{i}"), &vals, (0..n).collect())
                })
                .collect();
            let dict = Dictionary::new(pats, 1).unwrap();
            let mut seen: Vec<&str> = (1..5).flat_map(|n| dict.by_length(n)).map(|p| p.label()).collect();
            seen.sort_unstable();
            let mut all: Vec<&str> = dict.syllables().iter().map(|p| p.label()).collect();
            all.sort_unstable();
            prop_assert_eq!(seen, all);
        }

        #[test]
        fn validation_is_total(frames in proptest::collection::vec(
            proptest::collection::vec(prop_oneof![Just(f64::NAN), -1e3f64..1e3], 0..4), 0..6)
        ) {
            match Trajectory::new(frames) {
                Ok(t) => {
                    prop_assert!(!t.frames().is_empty() && t.dim() >= 1);
                    prop_assert!(t.frames().iter().all(|f| f.len() == t.dim() && f.iter().all(|v| v.is_finite())));
                }
                Err(e) => prop_assert!(!e.to_string().is_empty()),
            }
        }
    }
}
