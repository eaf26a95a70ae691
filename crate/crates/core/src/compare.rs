//! Dynamic-programming comparison of segments and syllables.
//!
//! Segments are compared with classic symmetric DTW: steps `(1,0)`, `(0,1)`
//! and `(1,1)`, Euclidean local cost over all channels, no warping window and
//! no length normalization. A syllable placement is scored by pairing the
//! group's segments with the pattern's segments in order and summing the
//! per-pair DTW totals.

use crate::error::{Error, Result};
use crate::trajectory::{Dictionary, Frame, Segment, SyllablePattern};

/// Euclidean distance between two frames.
pub fn frame_distance(f: &[f64], g: &[f64]) -> Result<f64> {
    if f.len() != g.len() {
        return Err(Error::DimensionMismatch {
            expected: f.len(),
            found: g.len(),
        });
    }
    Ok(f.iter()
        .zip(g)
        .map(|(a, b)| (a - b) * (a - b))
        .sum::<f64>()
        .sqrt())
}

/// Unnormalized DTW total between two frame sequences, anchored at both ends.
pub fn dtw_distance(a: &[Frame], b: &[Frame]) -> Result<f64> {
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptySequence);
    }
    let dim = a[0].len();
    if let Some(f) = a.iter().chain(b).find(|f| f.len() != dim) {
        return Err(Error::DimensionMismatch {
            expected: dim,
            found: f.len(),
        });
    }

    // Two rolling rows over b; prev[j] is the cost of reaching (i - 1, j).
    let m = b.len();
    let mut prev = vec![f64::INFINITY; m];
    let mut curr = vec![f64::INFINITY; m];
    for (i, fa) in a.iter().enumerate() {
        for (j, fb) in b.iter().enumerate() {
            let local = frame_distance(fa, fb)?;
            let best = if i == 0 && j == 0 {
                0.0
            } else {
                let diag = if i > 0 && j > 0 { prev[j - 1] } else { f64::INFINITY };
                let up = if i > 0 { prev[j] } else { f64::INFINITY };
                let left = if j > 0 { curr[j - 1] } else { f64::INFINITY };
                diag.min(up).min(left)
            };
            curr[j] = local + best;
        }
        std::mem::swap(&mut prev, &mut curr);
    }
    Ok(prev[m - 1])
}

/// A run of consecutive input segments considered as one syllable `X_i`.
///
/// `start_node` and `end_node` are input boundary indices, so the group holds
/// segments `start_node..end_node`.
#[derive(Debug, Clone, PartialEq)]
pub struct SyllableGroup<'a> {
    pub segments: Vec<Segment<'a>>,
    pub start_node: usize,
    pub end_node: usize,
}

impl<'a> SyllableGroup<'a> {
    /// Groups `segments[start_node..end_node]`.
    pub fn new(segments: &[Segment<'a>], start_node: usize, end_node: usize) -> Self {
        SyllableGroup {
            segments: segments[start_node..end_node].to_vec(),
            start_node,
            end_node,
        }
    }

    pub fn segment_count(&self) -> usize {
        self.segments.len()
    }
}

/// Sum of in-order segment DTW distances between a group and a pattern.
pub fn syllable_distance(group: &SyllableGroup<'_>, pattern: &SyllablePattern) -> Result<f64> {
    if group.segment_count() != pattern.segment_count() {
        return Err(Error::SegmentCountMismatch {
            group: group.segment_count(),
            pattern: pattern.segment_count(),
        });
    }
    group
        .segments
        .iter()
        .zip(pattern.segments())
        .map(|(x, y)| dtw_distance(x.frames, y.frames))
        .sum()
}

/// The applicable pattern closest to `group`; the earliest wins ties.
pub fn best_pattern<'d>(group: &SyllableGroup<'_>, dict: &'d Dictionary) -> Result<(&'d SyllablePattern, f64)> {
    let mut best: Option<(&SyllablePattern, f64)> = None;
    for pattern in dict.by_length(group.segment_count()) {
        let d = syllable_distance(group, pattern)?;
        if best.is_none_or(|(_, b)| d < b) {
            best = Some((pattern, d));
        }
    }
    best.ok_or(Error::NoApplicablePattern {
        segments: group.segment_count(),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::trajectory::{slice_segments, SegmentBoundaries, Trajectory};
    use proptest::prelude::*;

    /// Minimum over every monotone alignment path, by explicit enumeration.
    fn exhaustive_dtw(a: &[Frame], b: &[Frame]) -> f64 {
        fn walk(a: &[Frame], b: &[Frame], i: usize, j: usize, acc: f64, best: &mut f64) {
            let acc = acc + frame_distance(&a[i], &b[j]).unwrap();
            if i + 1 == a.len() && j + 1 == b.len() {
                *best = best.min(acc);
                return;
            }
            if i + 1 < a.len() {
                walk(a, b, i + 1, j, acc, best);
            }
            if j + 1 < b.len() {
                walk(a, b, i, j + 1, acc, best);
            }
            if i + 1 < a.len() && j + 1 < b.len() {
                walk(a, b, i + 1, j + 1, acc, best);
            }
        }
        let mut best = f64::INFINITY;
        walk(a, b, 0, 0, 0.0, &mut best);
        best
    }

    fn seq(v: &[f64]) -> Vec<Frame> {
        v.iter().map(|&x| vec![x]).collect()
    }

    fn pattern(label: &str, values: &[f64], starts: Vec<usize>) -> SyllablePattern {
        let n = starts.len();
        SyllablePattern::new(
            label,
            (0..n).map(|j| j.to_string()).collect(),
            Trajectory::from_scalars(values).unwrap(),
            SegmentBoundaries::new(starts).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn frame_distance_cases() {
        assert_eq!(frame_distance(&[0., 0.], &[3., 4.]).unwrap(), 5.0);
        assert_eq!(frame_distance(&[1.5], &[1.5]).unwrap(), 0.0);
        assert_eq!(frame_distance(&[1.], &[4.]).unwrap(), 3.0);
        assert!(matches!(
            frame_distance(&[1.], &[1., 2.]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn dtw_cases() {
        let a = seq(&[0., 1., 2.]);
        assert_eq!(dtw_distance(&a, &a).unwrap(), 0.0);
        assert_eq!(dtw_distance(&seq(&[2.]), &seq(&[5.])).unwrap(), 3.0);

        let a = seq(&[0., 2., 4.]);
        let b = seq(&[0., 4.]);
        assert_eq!(exhaustive_dtw(&a, &b), 2.0);
        assert_eq!(dtw_distance(&a, &b).unwrap(), 2.0);
    }

    #[test]
    fn dtw_errors() {
        assert!(matches!(dtw_distance(&[], &seq(&[1.])), Err(Error::EmptySequence)));
        assert!(matches!(
            dtw_distance(&seq(&[1.]), &[vec![1., 2.]]),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn syllable_distance_is_additive() {
        // Segment pairs chosen so each DTW is checked by enumeration first.
        let (x1, y1) = (seq(&[0.]), seq(&[2.]));
        let (x2, y2) = (seq(&[0., 3.]), seq(&[0., 0.]));
        assert_eq!(exhaustive_dtw(&x1, &y1), 2.0);
        assert_eq!(exhaustive_dtw(&x2, &y2), 3.0);

        let input = Trajectory::from_scalars(&[0., 0., 3.]).unwrap();
        let segs = slice_segments(&input, &SegmentBoundaries::new(vec![0, 1]).unwrap()).unwrap();
        let group = SyllableGroup::new(&segs, 0, 2);
        let pat = pattern("p", &[2., 0., 0.], vec![0, 1]);
        assert_eq!(syllable_distance(&group, &pat).unwrap(), 5.0);

        let same = pattern("q", &[0., 0., 3.], vec![0, 1]);
        assert_eq!(syllable_distance(&group, &same).unwrap(), 0.0);

        let three = pattern("r", &[0., 1., 2.], vec![0, 1, 2]);
        let err = syllable_distance(&group, &three).unwrap_err();
        assert!(err.to_string().contains("segment count mismatch"));
    }

    #[test]
    fn best_pattern_picks_minimum_then_first() {
        let input = Trajectory::from_scalars(&[0.]).unwrap();
        let segs = slice_segments(&input, &SegmentBoundaries::new(vec![0]).unwrap()).unwrap();
        let group = SyllableGroup::new(&segs, 0, 1);

        let values = [4.0, 1.5, 7.0];
        let expected: Vec<f64> = values.iter().map(|&v| exhaustive_dtw(&seq(&[0.]), &seq(&[v]))).collect();
        assert_eq!(expected, vec![4.0, 1.5, 7.0]);
        let dict = Dictionary::new(
            values
                .iter()
                .enumerate()
                .map(|(i, &v)| pattern(&format!("s{i}"), &[v], vec![0]))
                .collect(),
            1,
        )
        .unwrap();
        let (p, d) = best_pattern(&group, &dict).unwrap();
        assert_eq!((p.label(), d), ("s1", 1.5));

        let tied = Dictionary::new(
            vec![pattern("first", &[1.], vec![0]), pattern("second", &[-1.], vec![0])],
            1,
        )
        .unwrap();
        assert_eq!(best_pattern(&group, &tied).unwrap().0.label(), "first");

        let exact = Dictionary::new(
            vec![pattern("off", &[0.5], vec![0]), pattern("src", &[0.], vec![0])],
            1,
        )
        .unwrap();
        assert_eq!(best_pattern(&group, &exact).unwrap(), (&exact.syllables()[1], 0.0));

        let none = Dictionary::new(vec![pattern("two", &[0., 1.], vec![0, 1])], 1).unwrap();
        assert!(matches!(
            best_pattern(&group, &none),
            Err(Error::NoApplicablePattern { segments: 1 })
        ));
    }

    fn frames(max_len: usize, dim: usize) -> impl Strategy<Value = Vec<Frame>> {
        proptest::collection::vec(proptest::collection::vec(-5.0f64..5.0, dim), 1..=max_len)
    }

    proptest! {
        #[test]
        fn dtw_matches_enumeration((a, b) in (1usize..=2).prop_flat_map(|d| (frames(6, d), frames(6, d)))) {
            let dp = dtw_distance(&a, &b).unwrap();
            prop_assert!((dp - exhaustive_dtw(&a, &b)).abs() <= 1e-12);
            prop_assert!(dp >= 0.0);
        }

        #[test]
        fn dtw_symmetric_and_reflexive((a, b) in (1usize..=3).prop_flat_map(|d| (frames(10, d), frames(10, d)))) {
            prop_assert_eq!(dtw_distance(&a, &a).unwrap(), 0.0);
            prop_assert_eq!(dtw_distance(&a, &b).unwrap(), dtw_distance(&b, &a).unwrap());
        }
    }
}
