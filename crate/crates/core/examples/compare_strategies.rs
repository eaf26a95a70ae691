//! Runs the seeded strategy comparison and prints its summary table.

use syllabic::harness::{compare_strategies, SynthConfig};
use syllabic::SearchStrategy;

fn main() -> syllabic::Result<()> {
    let cfg = SynthConfig {
        seed: 2024,
        noise_sigma: 0.15,
        input_syllables: (2, 4),
        ..SynthConfig::default()
    };
    let report = compare_strategies(&cfg, 200)?;
    print!("{}", report.summary());

    let full = report.strategy(SearchStrategy::Full);
    let dfs = report.strategy(SearchStrategy::Dfs);
    println!(
        "dfs evaluates {:.0}% of the arcs full search does, at {:.2}x its mean cost",
        100.0 * dfs.mean_arc_ratio_vs_full.unwrap_or(f64::NAN),
        dfs.mean_cost / full.mean_cost
    );
    Ok(())
}
