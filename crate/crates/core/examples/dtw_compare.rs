//! Matches a time-stretched syllable against a small dictionary with dynamic time warping.

use syllabic::trajectory::{SegmentBoundaries, Trajectory};
use syllabic::{best_pattern, dtw_distance, Dictionary, SyllableGroup, SyllablePattern};

fn pattern(label: &str, values: &[f64], starts: Vec<usize>) -> SyllablePattern {
    let phonemes = (0..starts.len()).map(|j| format!("{label}.{j}")).collect();
    SyllablePattern::new(
        label,
        phonemes,
        Trajectory::from_scalars(values).unwrap(),
        SegmentBoundaries::new(starts).unwrap(),
    )
    .unwrap()
}

fn main() -> syllabic::Result<()> {
    let a = Trajectory::from_scalars(&[0.0, 1.0, 2.0])?;
    let b = Trajectory::from_scalars(&[0.0, 0.0, 1.0, 1.0, 2.0, 2.0])?;
    println!("dtw(a, stretched a) = {}", dtw_distance(a.frames(), b.frames())?);

    let dict = Dictionary::new(
        vec![
            pattern("ma", &[0.0, 0.5, 1.0, 1.2], vec![0, 2]),
            pattern("ti", &[2.0, 1.5, 1.0, 0.4], vec![0, 2]),
            pattern("ran", &[1.0, 1.0, 0.0, -1.0, -0.5], vec![0, 2, 4]),
        ],
        1,
    )?;

    // "ma" spoken slowly: each frame held twice.
    let slow = Trajectory::from_scalars(&[0.0, 0.0, 0.5, 0.5, 1.0, 1.0, 1.2, 1.2])?;
    let input = syllabic::SegmentedInput::new(slow, SegmentBoundaries::new(vec![0, 4])?)?;
    let segments = input.segments();
    let group = SyllableGroup::new(&segments, 0, 2);
    let (best, d) = best_pattern(&group, &dict)?;
    println!("best two-segment match: {} (d = {d})", best.label());
    for p in dict.by_length(2) {
        println!("  {} -> {}", p.label(), syllabic::syllable_distance(&group, p)?);
    }
    Ok(())
}
