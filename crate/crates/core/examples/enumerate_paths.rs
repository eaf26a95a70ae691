//! Lists every way to cover seven segments with syllables of two, three or four phonemes.
//!
//! ```bash
//! cargo run --example enumerate_paths
//! ```

use syllabic::search::{count_compositions, enumerate_compositions};

fn main() {
    let lengths = [2, 3, 4];
    for nodes in enumerate_compositions(7, &lengths) {
        let parts: Vec<String> = nodes.windows(2).map(|w| (w[1] - w[0]).to_string()).collect();
        let nodes: Vec<String> = nodes.iter().map(ToString::to_string).collect();
        println!("{} ({})", nodes.join("-"), parts.join("-"));
    }
    println!("count: {}", count_compositions(7, &lengths));

    for p in [10, 20, 40, 80] {
        println!("p = {p:>2}: {} complete paths", count_compositions(p, &lengths));
    }
}
