//! Generates a dictionary, builds a noisy input from it, then recognizes and stitches it.

use syllabic::harness::{gen_input, gen_synthetic_dictionary, label_accuracy, SynthConfig};
use syllabic::{recognize, Model, SearchStrategy};

fn main() -> syllabic::Result<()> {
    let cfg = SynthConfig {
        seed: 42,
        syllable_count: 12,
        parameter_dim: 2,
        ..SynthConfig::default()
    };
    let dict = gen_synthetic_dictionary(&cfg)?;

    for noise in [0.0, 0.1, 0.4] {
        let truth = gen_input(&dict, 7, 3, noise)?;
        println!("noise {noise}: truth {}", truth.labels.join(" "));
        for strategy in SearchStrategy::ALL {
            let res = recognize(&truth.input, &dict, strategy, Model::Quadratic)?;
            println!(
                "  {strategy:<4} {:<22} d = {:8.4}  accuracy {:.2}  dtw(X, X*) = {:.4}",
                res.labels.join(" "),
                res.total_distance,
                label_accuracy(&truth, &res.path),
                res.info_distance
            );
        }
    }
    Ok(())
}
