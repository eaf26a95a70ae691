//! The synthesis graph and the strategies that search it.
//!
//! Nodes `0..=p` are the boundary positions of the `p` input segments. An arc
//! `v → v + n` places one dictionary syllable of `n` segments over input
//! segments `v..v + n`; its weight is the distance to the best such syllable.
//! Weights are computed on first use and memoized, so the number of arc
//! evaluations a strategy triggers measures how much comparison work it did.
//!
//! Search states are partial placements (paths from node 0). All strategies
//! expand successors in ascending syllable length and never step onto a node
//! from which the final node is structurally unreachable; that check needs
//! only the set of allowed lengths, never an arc weight.

use std::collections::VecDeque;
use std::fmt;
use std::str::FromStr;
use std::sync::atomic::{AtomicUsize, Ordering};
use std::sync::OnceLock;

use serde::{Deserialize, Serialize};

use crate::compare::{best_pattern, SyllableGroup};
use crate::error::{Error, Result};
use crate::trajectory::{Dictionary, Segment, SegmentedInput};

/// How the synthesis graph is explored.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum SearchStrategy {
    /// Enumerate every complete path and keep the cheapest.
    Full,
    /// Depth-first; returns the first complete path found.
    Dfs,
    /// Breadth-first; returns the first complete path found (fewest hops).
    Bfs,
}

impl SearchStrategy {
    pub const ALL: [SearchStrategy; 3] = [SearchStrategy::Full, SearchStrategy::Dfs, SearchStrategy::Bfs];
}

impl fmt::Display for SearchStrategy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            SearchStrategy::Full => "full",
            SearchStrategy::Dfs => "dfs",
            SearchStrategy::Bfs => "bfs",
        })
    }
}

impl FromStr for SearchStrategy {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "full" => Ok(SearchStrategy::Full),
            "dfs" => Ok(SearchStrategy::Dfs),
            "bfs" => Ok(SearchStrategy::Bfs),
            other => Err(format!("unknown strategy {other:?} (expected full, dfs or bfs)")),
        }
    }
}

/// Weight of one arc and the dictionary pattern that achieved it.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ArcWeight {
    pub distance: f64,
    /// Index into the dictionary; `None` for table-backed graphs.
    pub pattern: Option<usize>,
}

type WeightFn<'a> = dyn Fn(usize, usize) -> f64 + Send + Sync + 'a;

enum WeightSource<'a> {
    Dictionary {
        dict: &'a Dictionary,
        segments: Vec<Segment<'a>>,
    },
    Table(Box<WeightFn<'a>>),
}

/// Lattice over input segment boundaries with lazily weighted arcs.
pub struct SynthesisGraph<'a> {
    source: WeightSource<'a>,
    segments: usize,
    lengths: Vec<usize>,
    completable: Vec<bool>,
    cells: Vec<OnceLock<ArcWeight>>,
    evaluations: AtomicUsize,
}

impl fmt::Debug for SynthesisGraph<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SynthesisGraph")
            .field("segments", &self.segments)
            .field("lengths", &self.lengths)
            .field("arcs_evaluated", &self.arcs_evaluated())
            .finish()
    }
}

impl<'a> SynthesisGraph<'a> {
    fn with_source(segments: usize, lengths: &[usize], source: WeightSource<'a>) -> Self {
        let mut lengths: Vec<usize> = lengths.iter().copied().filter(|&n| n > 0).collect();
        lengths.sort_unstable();
        lengths.dedup();
        let completable = completable_nodes(segments, &lengths);
        let cells = (0..(segments + 1) * lengths.len()).map(|_| OnceLock::new()).collect();
        SynthesisGraph {
            source,
            segments,
            lengths,
            completable,
            cells,
            evaluations: AtomicUsize::new(0),
        }
    }

    /// A graph whose arc weights come from `weight(from, n)` instead of a dictionary.
    ///
    /// Weights must be non-negative.
    pub fn from_weights(
        segments: usize,
        lengths: &[usize],
        weight: impl Fn(usize, usize) -> f64 + Send + Sync + 'a,
    ) -> Self {
        Self::with_source(segments, lengths, WeightSource::Table(Box::new(weight)))
    }

    /// `p`, the number of input segments; the final node.
    pub fn segment_count(&self) -> usize {
        self.segments
    }

    pub fn node_count(&self) -> usize {
        self.segments + 1
    }

    /// Allowed syllable lengths, ascending.
    pub fn allowed_lengths(&self) -> &[usize] {
        &self.lengths
    }

    /// Whether the final node can be reached from `node`.
    pub fn is_completable(&self, node: usize) -> bool {
        self.completable.get(node).copied().unwrap_or(false)
    }

    pub fn has_complete_path(&self) -> bool {
        self.is_completable(0)
    }

    /// Number of distinct arcs whose weight has been computed so far.
    pub fn arcs_evaluated(&self) -> usize {
        self.evaluations.load(Ordering::Relaxed)
    }

    /// Successor lengths of `node` that keep the final node reachable, ascending.
    pub fn successors(&self, node: usize) -> impl Iterator<Item = usize> + '_ {
        self.lengths
            .iter()
            .copied()
            .filter(move |&n| self.is_completable(node + n))
    }

    /// Weight of the arc `from → from + n`, computing it on first request.
    ///
    /// Returns `None` when no such arc exists.
    pub fn arc(&self, from: usize, n: usize) -> Option<ArcWeight> {
        let slot = self.lengths.iter().position(|&l| l == n)?;
        if from + n > self.segments {
            return None;
        }
        let cell = &self.cells[from * self.lengths.len() + slot];
        Some(*cell.get_or_init(|| {
            self.evaluations.fetch_add(1, Ordering::Relaxed);
            self.evaluate(from, n)
        }))
    }

    fn evaluate(&self, from: usize, n: usize) -> ArcWeight {
        match &self.source {
            WeightSource::Dictionary { dict, segments } => {
                let group = SyllableGroup::new(segments, from, from + n);
                let (pattern, distance) =
                    best_pattern(&group, dict).expect("arc lengths and dimensions checked at construction");
                let index = dict
                    .syllables()
                    .iter()
                    .position(|p| std::ptr::eq(p, pattern))
                    .expect("pattern comes from this dictionary");
                ArcWeight {
                    distance,
                    pattern: Some(index),
                }
            }
            WeightSource::Table(f) => ArcWeight {
                distance: f(from, n),
                pattern: None,
            },
        }
    }

    fn label(&self, pattern: Option<usize>, from: usize, to: usize) -> String {
        match (&self.source, pattern) {
            (WeightSource::Dictionary { dict, .. }, Some(k)) => dict.syllables()[k].label().to_owned(),
            _ => format!("{from}-{to}"),
        }
    }

    /// Assembles a path over `nodes`, reading (or computing) each hop weight.
    pub fn path(&self, nodes: Vec<usize>, stats: SearchStats) -> SolutionPath {
        let mut labels = Vec::with_capacity(nodes.len().saturating_sub(1));
        let mut patterns = Vec::with_capacity(labels.capacity());
        let mut hop_distances = Vec::with_capacity(labels.capacity());
        for w in nodes.windows(2) {
            let weight = self.arc(w[0], w[1] - w[0]).expect("path uses existing arcs");
            labels.push(self.label(weight.pattern, w[0], w[1]));
            patterns.push(weight.pattern);
            hop_distances.push(weight.distance);
        }
        let cost = total_cost(&hop_distances);
        SolutionPath {
            nodes,
            labels,
            patterns,
            hop_distances,
            cost,
            stats,
        }
    }

    /// Every complete path, in lexicographic node order.
    pub fn enumerate_paths(&self) -> Vec<Vec<usize>> {
        let mut expanded = 0;
        self.enumerate_counting(&mut expanded)
    }

    fn enumerate_counting(&self, expanded: &mut usize) -> Vec<Vec<usize>> {
        fn walk(g: &SynthesisGraph<'_>, prefix: &mut Vec<usize>, out: &mut Vec<Vec<usize>>, expanded: &mut usize) {
            let node = *prefix.last().expect("prefix starts at node 0");
            if node == g.segments {
                out.push(prefix.clone());
                return;
            }
            *expanded += 1;
            for n in g.successors(node) {
                prefix.push(node + n);
                walk(g, prefix, out, expanded);
                prefix.pop();
            }
        }
        let mut out = Vec::new();
        if self.has_complete_path() {
            walk(self, &mut vec![0], &mut out, expanded);
        }
        out
    }
}

/// Builds the synthesis graph for `input` against `dict`.
pub fn build_graph<'a>(input: &'a SegmentedInput, dict: &'a Dictionary) -> Result<SynthesisGraph<'a>> {
    if dict.is_empty() {
        return Err(Error::EmptyDictionary);
    }
    if input.trajectory().dim() != dict.parameter_dim() {
        return Err(Error::DimensionMismatch {
            expected: dict.parameter_dim(),
            found: input.trajectory().dim(),
        });
    }
    let source = WeightSource::Dictionary {
        dict,
        segments: input.segments(),
    };
    Ok(SynthesisGraph::with_source(input.segment_count(), &dict.lengths(), source))
}

fn completable_nodes(p: usize, lengths: &[usize]) -> Vec<bool> {
    let mut can = vec![false; p + 1];
    can[p] = true;
    for v in (0..p).rev() {
        can[v] = lengths.iter().any(|&n| v + n <= p && can[v + n]);
    }
    can
}

/// Number of ordered compositions of `p` into parts drawn from `lengths`.
///
/// Saturates at `u128::MAX`.
pub fn count_compositions(p: usize, lengths: &[usize]) -> u128 {
    let mut counts = vec![0u128; p + 1];
    counts[0] = 1;
    for total in 1..=p {
        counts[total] = lengths
            .iter()
            .filter(|&&n| n > 0 && n <= total)
            .fold(0u128, |acc, &n| acc.saturating_add(counts[total - n]));
    }
    counts[p]
}

/// Node sequences of every composition of `p` into `lengths`, lexicographic.
pub fn enumerate_compositions(p: usize, lengths: &[usize]) -> Vec<Vec<usize>> {
    SynthesisGraph::from_weights(p, lengths, |_, _| 0.0).enumerate_paths()
}

/// Work done by one search.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SearchStats {
    /// Arc weights first computed during this search.
    pub arcs_evaluated: usize,
    /// Search states whose successors were generated.
    pub nodes_expanded: usize,
}

/// A complete path from node 0 to node `p` with its hop weights.
#[derive(Debug, Clone, PartialEq)]
pub struct SolutionPath {
    pub nodes: Vec<usize>,
    pub labels: Vec<String>,
    pub patterns: Vec<Option<usize>>,
    pub hop_distances: Vec<f64>,
    /// Sum of hop weights, accumulated from node 0 forward.
    pub cost: f64,
    pub stats: SearchStats,
}

impl SolutionPath {
    /// Number of placed syllables `M`.
    pub fn hops(&self) -> usize {
        self.nodes.len().saturating_sub(1)
    }

    /// Syllable lengths of each hop.
    pub fn gaps(&self) -> Vec<usize> {
        self.nodes.windows(2).map(|w| w[1] - w[0]).collect()
    }
}

fn total_cost(hops: &[f64]) -> f64 {
    hops.iter().fold(0.0, |acc, d| acc + d)
}

fn no_path(graph: &SynthesisGraph<'_>) -> Error {
    Error::NoCompletePath {
        segments: graph.segments,
    }
}

/// Exhaustive search: the cheapest complete path, ties to the lexicographically first.
pub fn search_full(graph: &SynthesisGraph<'_>) -> Result<SolutionPath> {
    let before = graph.arcs_evaluated();
    let mut nodes_expanded = 0;
    let paths = graph.enumerate_counting(&mut nodes_expanded);
    let mut best: Option<(f64, &Vec<usize>)> = None;
    for path in &paths {
        let cost = path.windows(2).fold(0.0, |acc, w| {
            acc + graph.arc(w[0], w[1] - w[0]).expect("enumerated arcs exist").distance
        });
        if best.is_none_or(|(b, _)| cost < b) {
            best = Some((cost, path));
        }
    }
    let (_, nodes) = best.ok_or_else(|| no_path(graph))?;
    let stats = SearchStats {
        arcs_evaluated: graph.arcs_evaluated() - before,
        nodes_expanded,
    };
    Ok(graph.path(nodes.clone(), stats))
}

/// Depth-first search returning the first complete path reached.
pub fn search_dfs(graph: &SynthesisGraph<'_>) -> Result<SolutionPath> {
    fn descend(g: &SynthesisGraph<'_>, prefix: &mut Vec<usize>, expanded: &mut usize) -> bool {
        let node = *prefix.last().expect("prefix starts at node 0");
        if node == g.segments {
            return true;
        }
        *expanded += 1;
        for n in g.successors(node) {
            g.arc(node, n);
            prefix.push(node + n);
            if descend(g, prefix, expanded) {
                return true;
            }
            prefix.pop();
        }
        false
    }

    if !graph.has_complete_path() {
        return Err(no_path(graph));
    }
    let before = graph.arcs_evaluated();
    let mut nodes = vec![0];
    let mut nodes_expanded = 0;
    if !descend(graph, &mut nodes, &mut nodes_expanded) {
        return Err(no_path(graph));
    }
    let stats = SearchStats {
        arcs_evaluated: graph.arcs_evaluated() - before,
        nodes_expanded,
    };
    Ok(graph.path(nodes, stats))
}

/// Breadth-first search returning the first complete path generated.
///
/// The goal test runs when a state is generated, so the result has the
/// fewest hops of any complete path.
pub fn search_bfs(graph: &SynthesisGraph<'_>) -> Result<SolutionPath> {
    if !graph.has_complete_path() {
        return Err(no_path(graph));
    }
    let before = graph.arcs_evaluated();
    // (node, parent state)
    let mut states: Vec<(usize, Option<usize>)> = vec![(0, None)];
    let mut queue = VecDeque::from([0usize]);
    let mut nodes_expanded = 0;
    let mut goal = (graph.segments == 0).then_some(0);

    while goal.is_none() {
        let Some(state) = queue.pop_front() else {
            return Err(no_path(graph));
        };
        let node = states[state].0;
        nodes_expanded += 1;
        for n in graph.successors(node) {
            graph.arc(node, n);
            states.push((node + n, Some(state)));
            let child = states.len() - 1;
            if node + n == graph.segments {
                goal = Some(child);
                break;
            }
            queue.push_back(child);
        }
    }

    let mut nodes = Vec::new();
    let mut cursor = goal;
    while let Some(s) = cursor {
        nodes.push(states[s].0);
        cursor = states[s].1;
    }
    nodes.reverse();
    let stats = SearchStats {
        arcs_evaluated: graph.arcs_evaluated() - before,
        nodes_expanded,
    };
    Ok(graph.path(nodes, stats))
}

/// Runs `strategy` on `graph`.
pub fn search(graph: &SynthesisGraph<'_>, strategy: SearchStrategy) -> Result<SolutionPath> {
    match strategy {
        SearchStrategy::Full => search_full(graph),
        SearchStrategy::Dfs => search_dfs(graph),
        SearchStrategy::Bfs => search_bfs(graph),
    }
}
