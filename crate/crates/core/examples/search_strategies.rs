//! Full search, depth-first and breadth-first on a hand-weighted synthesis graph.

use syllabic::search::{search, SearchStrategy, SynthesisGraph};

fn main() -> syllabic::Result<()> {
    // Four-segment syllables are cheap, so the best cover uses as few of them as possible.
    let weight = |from: usize, n: usize| match n {
        4 => 0.5,
        3 => 1.0 + from as f64 * 0.1,
        _ => 1.2,
    };
    for strategy in SearchStrategy::ALL {
        let graph = SynthesisGraph::from_weights(11, &[2, 3, 4], weight);
        let path = search(&graph, strategy)?;
        let nodes: Vec<String> = path.nodes.iter().map(ToString::to_string).collect();
        println!(
            "{strategy:<4} {:<16} cost {:.2}  hops {}  arcs evaluated {}",
            nodes.join("-"),
            path.cost,
            path.hops(),
            path.stats.arcs_evaluated
        );
    }
    Ok(())
}
