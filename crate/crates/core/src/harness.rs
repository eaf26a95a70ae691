//! Seeded synthetic data and the search-strategy comparison experiment.
//!
//! Random streams use `ChaCha8Rng::seed_from_u64` from `rand_chacha`. The
//! draw order is fixed so that a seed always reproduces the same data:
//!
//! * dictionary: for each pattern `k` in order, its segment count (uniform
//!   index into the allowed lengths), then for each segment its frame count
//!   (uniform in the inclusive range), then for each channel four cubic
//!   coefficients `c0..c3` uniform in `[-1, 1)`. Frame `i` of an `m`-frame
//!   segment takes `c0 + c1·t + c2·t² + c3·t³` at `t = (i + 0.5) / m`.
//! * input: `syllable_count` uniform pattern indices, then (only when
//!   `noise_sigma > 0`) one `N(0, noise_sigma)` draw per value in frame-major
//!   order.
//! * experiment instance `i` seeds its own stream with
//!   [`instance_seed`]`(cfg.seed, i)`; from it, the number of syllables
//!   (uniform in `input_syllables`) and then the input seed (`u64`).

use std::time::Duration;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::recognize::recognize;
use crate::search::{build_graph, search_full, SearchStrategy, SolutionPath, SynthesisGraph};
use crate::stitch::Model;
use crate::trajectory::{Dictionary, SegmentBoundaries, SegmentedInput, SyllablePattern, Trajectory};

/// Parameters of the synthetic dictionary and of the experiment instances.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SynthConfig {
    pub seed: u64,
    /// `N`, number of dictionary patterns.
    pub syllable_count: usize,
    /// `P`, parameters per frame.
    pub parameter_dim: usize,
    /// Allowed segment counts per syllable.
    pub lengths: Vec<usize>,
    /// Inclusive frame-count range of one segment.
    pub frames_per_segment: (usize, usize),
    /// Standard deviation of the additive Gaussian noise on inputs.
    pub noise_sigma: f64,
    /// Inclusive range of syllables concatenated into one input.
    pub input_syllables: (usize, usize),
}

impl Default for SynthConfig {
    fn default() -> Self {
        SynthConfig {
            seed: 0,
            syllable_count: 20,
            parameter_dim: 2,
            lengths: vec![2, 3, 4],
            frames_per_segment: (3, 6),
            noise_sigma: 0.0,
            input_syllables: (1, 3),
        }
    }
}

impl SynthConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |what: &str| Err(Error::InvariantViolation(format!("synthetic config: {what}")));
        if self.syllable_count == 0 {
            return bad("syllable_count must be at least 1");
        }
        if self.parameter_dim == 0 {
            return bad("parameter_dim must be at least 1");
        }
        if self.lengths.is_empty() || self.lengths.contains(&0) {
            return bad("lengths must be non-empty and positive");
        }
        let (lo, hi) = self.frames_per_segment;
        if lo == 0 || lo > hi {
            return bad("frames_per_segment must be a non-empty range of positive counts");
        }
        let (lo, hi) = self.input_syllables;
        if lo == 0 || lo > hi {
            return bad("input_syllables must be a non-empty range of positive counts");
        }
        if !(self.noise_sigma.is_finite() && self.noise_sigma >= 0.0) {
            return bad("noise_sigma must be finite and non-negative");
        }
        Ok(())
    }
}

/// Mixes `(seed, index)` into an independent per-instance seed (SplitMix64).
pub fn instance_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed.wrapping_add(index.wrapping_add(1).wrapping_mul(0x9E37_79B9_7F4A_7C15));
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

/// `N` random patterns whose segments are smooth cubic curves per channel.
pub fn gen_synthetic_dictionary(cfg: &SynthConfig) -> Result<Dictionary> {
    cfg.validate()?;
    let mut rng = ChaCha8Rng::seed_from_u64(cfg.seed);
    let (fmin, fmax) = cfg.frames_per_segment;
    let mut syllables = Vec::with_capacity(cfg.syllable_count);
    for k in 0..cfg.syllable_count {
        let label = format!("syl{k:03}");
        let n = cfg.lengths[rng.random_range(0..cfg.lengths.len())];
        let mut frames: Vec<Vec<f64>> = Vec::new();
        let mut starts = Vec::with_capacity(n);
        for _ in 0..n {
            starts.push(frames.len());
            let m = rng.random_range(fmin..=fmax);
            let cubics: Vec<[f64; 4]> = (0..cfg.parameter_dim)
                .map(|_| std::array::from_fn(|_| rng.random_range(-1.0..1.0)))
                .collect();
            for i in 0..m {
                let t = (i as f64 + 0.5) / m as f64;
                frames.push(
                    cubics
                        .iter()
                        .map(|c| c[0] + t * (c[1] + t * (c[2] + t * c[3])))
                        .collect(),
                );
            }
        }
        let phonemes = (0..n).map(|j| format!("{label}.{j}")).collect();
        syllables.push(SyllablePattern::new(
            label,
            phonemes,
            Trajectory::new(frames)?,
            SegmentBoundaries::new(starts)?,
        )?);
    }
    Dictionary::new(syllables, cfg.parameter_dim)
}

/// A generated input together with the syllables it was built from.
#[derive(Debug, Clone, PartialEq)]
pub struct GeneratedInput {
    pub input: SegmentedInput,
    pub labels: Vec<String>,
    /// Boundary node where each true syllable starts, plus the final node.
    pub nodes: Vec<usize>,
}

/// Concatenates `syllable_count` random patterns and adds Gaussian noise.
pub fn gen_input(dict: &Dictionary, seed: u64, syllable_count: usize, noise_sigma: f64) -> Result<GeneratedInput> {
    if dict.is_empty() {
        return Err(Error::EmptyDictionary);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let picks: Vec<&SyllablePattern> = (0..syllable_count)
        .map(|_| &dict.syllables()[rng.random_range(0..dict.len())])
        .collect();

    let mut frames: Vec<Vec<f64>> = Vec::new();
    let mut starts = Vec::new();
    let mut nodes = vec![0];
    for p in &picks {
        starts.extend(p.boundaries().starts().iter().map(|s| s + frames.len()));
        frames.extend(p.trajectory().frames().iter().cloned());
        nodes.push(nodes.last().unwrap() + p.segment_count());
    }
    if noise_sigma > 0.0 {
        let normal = Normal::new(0.0, noise_sigma)
            .map_err(|e| Error::InvariantViolation(format!("noise sigma: {e}")))?;
        for v in frames.iter_mut().flatten() {
            *v += normal.sample(&mut rng);
        }
    }
    Ok(GeneratedInput {
        input: SegmentedInput::new(Trajectory::new(frames)?, SegmentBoundaries::new(starts)?)?,
        labels: picks.iter().map(|p| p.label().to_owned()).collect(),
        nodes,
    })
}

/// Minimum path cost by forward dynamic programming over the lattice.
///
/// Shares memoized weights with whatever search ran on `graph` before.
pub fn oracle_shortest_path(graph: &SynthesisGraph<'_>) -> Result<f64> {
    let p = graph.segment_count();
    let mut best = vec![f64::INFINITY; p + 1];
    best[0] = 0.0;
    for v in 1..=p {
        for &n in graph.allowed_lengths() {
            if n > v || best[v - n].is_infinite() {
                continue;
            }
            let arc = graph.arc(v - n, n).expect("allowed length within range");
            best[v] = best[v].min(best[v - n] + arc.distance);
        }
    }
    if best[p].is_finite() {
        Ok(best[p])
    } else {
        Err(Error::NoCompletePath { segments: p })
    }
}

/// Fraction of true syllables recovered with the right label at the right span.
pub fn label_accuracy(truth: &GeneratedInput, path: &SolutionPath) -> f64 {
    if truth.labels.is_empty() {
        return 1.0;
    }
    let predicted: Vec<(usize, usize, &str)> = path
        .nodes
        .windows(2)
        .zip(&path.labels)
        .map(|(w, l)| (w[0], w[1], l.as_str()))
        .collect();
    let hits = truth
        .nodes
        .windows(2)
        .zip(&truth.labels)
        .filter(|(w, l)| predicted.contains(&(w[0], w[1], l.as_str())))
        .count();
    hits as f64 / truth.labels.len() as f64
}

/// One `recognize` call inside the experiment.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct RunRecord {
    pub strategy: SearchStrategy,
    pub model: Model,
    pub cost: f64,
    pub hops: usize,
    pub labels: Vec<String>,
    pub arcs_evaluated: usize,
    pub nodes_expanded: usize,
    pub accuracy: f64,
    /// Deformation summed over channels.
    pub sigma2: f64,
    pub max_junction_residual: f64,
    pub info_distance: f64,
    pub fallback: bool,
    #[serde(skip)]
    pub wall_time: Duration,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct InstanceRecord {
    pub index: usize,
    pub seed: u64,
    pub segments: usize,
    pub truth: Vec<String>,
    /// Complete paths in the synthesis graph.
    pub path_count: usize,
    /// Fewest hops over all complete paths.
    pub min_hops: usize,
    pub oracle_cost: f64,
    pub runs: Vec<RunRecord>,
}

impl InstanceRecord {
    /// The run for `strategy` with the linear model (search does not depend on the model).
    pub fn run(&self, strategy: SearchStrategy) -> &RunRecord {
        self.runs
            .iter()
            .find(|r| r.strategy == strategy)
            .expect("every strategy runs on every instance")
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct StrategySummary {
    pub strategy: SearchStrategy,
    pub mean_cost: f64,
    pub median_cost: f64,
    pub mean_arcs_evaluated: f64,
    pub mean_nodes_expanded: f64,
    pub accuracy: f64,
    /// Mean of `arcs_evaluated / arcs_evaluated(full)` over instances with at least two paths.
    pub mean_arc_ratio_vs_full: Option<f64>,
    #[serde(skip)]
    pub mean_wall_time: Duration,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ModelSummary {
    pub model: Model,
    pub mean_sigma2: f64,
    pub mean_junction_residual: f64,
    pub mean_info_distance: f64,
    pub fallback_runs: usize,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ExperimentReport {
    pub config: SynthConfig,
    pub instance_count: usize,
    pub strategies: Vec<StrategySummary>,
    pub models: Vec<ModelSummary>,
    /// `mean_cost(bfs) − mean_cost(dfs)`; negative means BFS found cheaper paths on average.
    pub bfs_minus_dfs_mean_cost: f64,
    pub instances: Vec<InstanceRecord>,
}

impl ExperimentReport {
    pub fn strategy(&self, s: SearchStrategy) -> &StrategySummary {
        self.strategies.iter().find(|x| x.strategy == s).expect("all strategies summarized")
    }

    pub fn model(&self, m: Model) -> &ModelSummary {
        self.models.iter().find(|x| x.model == m).expect("all models summarized")
    }

    /// Human-readable table.
    pub fn summary(&self) -> String {
        let mut out = format!(
            "instances: {}  (N={}, P={}, noise={})\n",
            self.instance_count, self.config.syllable_count, self.config.parameter_dim, self.config.noise_sigma
        );
        out.push_str("strategy  mean_cost  median_cost  arcs  nodes  accuracy  arc_ratio  wall_us\n");
        for s in &self.strategies {
            out.push_str(&format!(
                "{:<8}  {:>9.4}  {:>11.4}  {:>4.1}  {:>5.1}  {:>8.3}  {:>9}  {:>7.1}\n",
                s.strategy.to_string(),
                s.mean_cost,
                s.median_cost,
                s.mean_arcs_evaluated,
                s.mean_nodes_expanded,
                s.accuracy,
                s.mean_arc_ratio_vs_full.map_or("-".to_owned(), |r| format!("{r:.3}")),
                s.mean_wall_time.as_secs_f64() * 1e6,
            ));
        }
        out.push_str("model      mean_sigma2  mean_junction  mean_dtw(X,X*)  fallbacks\n");
        for m in &self.models {
            out.push_str(&format!(
                "{:<9}  {:>11.6}  {:>13.3e}  {:>14.4}  {:>9}\n",
                m.model.to_string(),
                m.mean_sigma2,
                m.mean_junction_residual,
                m.mean_info_distance,
                m.fallback_runs
            ));
        }
        out.push_str(&format!("mean cost bfs - dfs: {:+.4}\n", self.bfs_minus_dfs_mean_cost));
        out
    }
}

fn mean(values: impl IntoIterator<Item = f64>) -> f64 {
    let (sum, n) = values.into_iter().fold((0.0, 0usize), |(s, n), v| (s + v, n + 1));
    if n == 0 { 0.0 } else { sum / n as f64 }
}

fn median(mut values: Vec<f64>) -> f64 {
    if values.is_empty() {
        return 0.0;
    }
    values.sort_by(f64::total_cmp);
    let mid = values.len() / 2;
    if values.len() % 2 == 1 {
        values[mid]
    } else {
        0.5 * (values[mid - 1] + values[mid])
    }
}

/// The input of experiment instance `index`.
pub fn instance_input(cfg: &SynthConfig, dict: &Dictionary, index: usize) -> Result<GeneratedInput> {
    let mut rng = ChaCha8Rng::seed_from_u64(instance_seed(cfg.seed, index as u64));
    let count = rng.random_range(cfg.input_syllables.0..=cfg.input_syllables.1);
    gen_input(dict, rng.random(), count, cfg.noise_sigma)
}

fn run_instance(cfg: &SynthConfig, dict: &Dictionary, index: usize) -> Result<InstanceRecord> {
    let seed = instance_seed(cfg.seed, index as u64);
    let truth = instance_input(cfg, dict, index)?;

    let graph = build_graph(&truth.input, dict)?;
    let full = search_full(&graph)?;
    let oracle_cost = oracle_shortest_path(&graph)?;
    let paths = graph.enumerate_paths();
    let min_hops = paths.iter().map(|p| p.len() - 1).min().unwrap_or(0);

    let mut runs = Vec::with_capacity(SearchStrategy::ALL.len() * Model::ALL.len());
    for strategy in SearchStrategy::ALL {
        for model in Model::ALL {
            let r = recognize(&truth.input, dict, strategy, model)?;
            runs.push(RunRecord {
                strategy,
                model,
                cost: r.total_distance,
                hops: r.path.hops(),
                accuracy: label_accuracy(&truth, &r.path),
                labels: r.labels,
                arcs_evaluated: r.stats.arcs_evaluated,
                nodes_expanded: r.stats.nodes_expanded,
                sigma2: r.stitched.sigma2.iter().sum(),
                max_junction_residual: r.stitched.max_junction_residual(),
                info_distance: r.info_distance,
                fallback: r.stitched.any_fallback(),
                wall_time: r.wall_time,
            });
        }
    }

    let record = InstanceRecord {
        index,
        seed,
        segments: truth.input.segment_count(),
        truth: truth.labels,
        path_count: paths.len(),
        min_hops,
        oracle_cost,
        runs,
    };
    check_instance(&record, full.cost)?;
    Ok(record)
}

fn check_instance(rec: &InstanceRecord, full_cost: f64) -> Result<()> {
    let fail = |what: String| Err(Error::InvariantViolation(format!("instance {}: {what}", rec.index)));
    if full_cost != rec.oracle_cost {
        return fail(format!("full search cost {full_cost} != oracle {}", rec.oracle_cost));
    }
    let full = rec.run(SearchStrategy::Full);
    for strategy in [SearchStrategy::Dfs, SearchStrategy::Bfs] {
        let run = rec.run(strategy);
        if full.cost > run.cost {
            return fail(format!("full cost {} exceeds {strategy} cost {}", full.cost, run.cost));
        }
        if rec.path_count >= 2 && run.arcs_evaluated >= full.arcs_evaluated {
            return fail(format!(
                "{strategy} evaluated {} arcs, full {}",
                run.arcs_evaluated, full.arcs_evaluated
            ));
        }
    }
    if rec.run(SearchStrategy::Bfs).hops > rec.min_hops {
        return fail("bfs path is not the shortest in hops".into());
    }
    Ok(())
}

/// Runs every strategy and model on `instance_count` seeded instances.
///
/// Fails if any instance breaks a hard invariant: full search matches the
/// dynamic-programming oracle, is no costlier than DFS or BFS, and (with at
/// least two complete paths) evaluates strictly more arcs than either.
pub fn compare_strategies(cfg: &SynthConfig, instance_count: usize) -> Result<ExperimentReport> {
    if instance_count == 0 {
        return Err(Error::InvariantViolation("instance_count must be at least 1".into()));
    }
    let dict = gen_synthetic_dictionary(cfg)?;
    let instances = (0..instance_count)
        .into_par_iter()
        .map(|i| run_instance(cfg, &dict, i))
        .collect::<Result<Vec<_>>>()?;

    let strategies = SearchStrategy::ALL
        .iter()
        .map(|&s| {
            let runs: Vec<&RunRecord> = instances.iter().map(|rec| rec.run(s)).collect();
            let ratios: Vec<f64> = instances
                .iter()
                .filter(|rec| rec.path_count >= 2)
                .map(|rec| rec.run(s).arcs_evaluated as f64 / rec.run(SearchStrategy::Full).arcs_evaluated as f64)
                .collect();
            let wall: Duration = instances
                .iter()
                .flat_map(|rec| rec.runs.iter().filter(move |r| r.strategy == s))
                .map(|r| r.wall_time)
                .sum();
            StrategySummary {
                strategy: s,
                mean_cost: mean(runs.iter().map(|r| r.cost)),
                median_cost: median(runs.iter().map(|r| r.cost).collect()),
                mean_arcs_evaluated: mean(runs.iter().map(|r| r.arcs_evaluated as f64)),
                mean_nodes_expanded: mean(runs.iter().map(|r| r.nodes_expanded as f64)),
                accuracy: mean(runs.iter().map(|r| r.accuracy)),
                mean_arc_ratio_vs_full: (!ratios.is_empty()).then(|| mean(ratios.iter().copied())),
                mean_wall_time: wall / (instance_count * Model::ALL.len()) as u32,
            }
        })
        .collect::<Vec<_>>();

    let models = Model::ALL
        .iter()
        .map(|&m| {
            let runs: Vec<&RunRecord> = instances.iter().flat_map(|rec| &rec.runs).filter(|r| r.model == m).collect();
            ModelSummary {
                model: m,
                mean_sigma2: mean(runs.iter().map(|r| r.sigma2)),
                mean_junction_residual: mean(runs.iter().map(|r| r.max_junction_residual)),
                mean_info_distance: mean(runs.iter().map(|r| r.info_distance)),
                fallback_runs: runs.iter().filter(|r| r.fallback).count(),
            }
        })
        .collect();

    let cost = |s: SearchStrategy| strategies.iter().find(|x| x.strategy == s).map_or(0.0, |x| x.mean_cost);
    Ok(ExperimentReport {
        config: cfg.clone(),
        instance_count,
        bfs_minus_dfs_mean_cost: cost(SearchStrategy::Bfs) - cost(SearchStrategy::Dfs),
        strategies,
        models,
        instances,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn dictionary_is_deterministic_and_well_shaped() {
        let cfg = SynthConfig {
            syllable_count: 5,
            lengths: vec![2, 3],
            parameter_dim: 2,
            ..SynthConfig::default()
        };
        let a = gen_synthetic_dictionary(&cfg).unwrap();
        assert_eq!(a, gen_synthetic_dictionary(&cfg).unwrap());
        assert_eq!(a.len(), 5);
        assert!(a.syllables().iter().all(|p| [2, 3].contains(&p.segment_count())));
        assert!(a.syllables().iter().all(|p| p.trajectory().dim() == 2));
        let other = gen_synthetic_dictionary(&SynthConfig { seed: 1, ..cfg }).unwrap();
        assert_ne!(a, other);
    }

    #[test]
    fn noiseless_input_is_exact_concatenation() {
        let dict = gen_synthetic_dictionary(&SynthConfig::default()).unwrap();
        let g = gen_input(&dict, 42, 3, 0.0).unwrap();
        let expected: Vec<Vec<f64>> = g
            .labels
            .iter()
            .flat_map(|l| dict.get(l).unwrap().trajectory().frames().to_vec())
            .collect();
        assert_eq!(g.input.trajectory().frames(), expected.as_slice());
        let segs: usize = g.labels.iter().map(|l| dict.get(l).unwrap().segment_count()).sum();
        assert_eq!(g.input.segment_count(), segs);
        assert_eq!(*g.nodes.last().unwrap(), segs);
        assert_eq!(g, gen_input(&dict, 42, 3, 0.0).unwrap());
    }

    #[test]
    fn noise_perturbs_values() {
        let dict = gen_synthetic_dictionary(&SynthConfig::default()).unwrap();
        let clean = gen_input(&dict, 3, 2, 0.0).unwrap();
        let noisy = gen_input(&dict, 3, 2, 0.5).unwrap();
        assert_eq!(clean.labels, noisy.labels);
        assert_ne!(clean.input.trajectory(), noisy.input.trajectory());
    }

    #[test]
    fn oracle_cases() {
        let g = SynthesisGraph::from_weights(4, &[2], |f, _| f as f64 + 1.0);
        assert_eq!(oracle_shortest_path(&g).unwrap(), 4.0);
        let g = SynthesisGraph::from_weights(9, &[2, 3, 4], |_, _| 0.0);
        assert_eq!(oracle_shortest_path(&g).unwrap(), 0.0);
        let g = SynthesisGraph::from_weights(1, &[2, 3, 4], |_, _| 0.0);
        assert!(oracle_shortest_path(&g).is_err());
    }

    #[test]
    fn oracle_matches_full_search_on_random_tables() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let p = rng.random_range(1..=12);
            let table: Vec<f64> = (0..(p + 1) * 5).map(|_| rng.random_range(0.0..10.0)).collect();
            let g = SynthesisGraph::from_weights(p, &[2, 3, 4], |f, n| table[f * 5 + n]);
            match search_full(&g) {
                Ok(full) => assert_eq!(full.cost, oracle_shortest_path(&g).unwrap()),
                Err(_) => assert!(oracle_shortest_path(&g).is_err()),
            }
        }
    }

    #[test]
    fn accuracy_counts_matching_spans() {
        let truth = GeneratedInput {
            input: SegmentedInput::new(
                Trajectory::from_scalars(&[0., 1., 2., 3.]).unwrap(),
                SegmentBoundaries::new(vec![0, 1, 2, 3]).unwrap(),
            )
            .unwrap(),
            labels: vec!["a".into(), "b".into()],
            nodes: vec![0, 2, 4],
        };
        let g = SynthesisGraph::from_weights(4, &[2], |_, _| 0.0);
        let mut path = search_full(&g).unwrap();
        path.labels = vec!["a".into(), "x".into()];
        assert_eq!(label_accuracy(&truth, &path), 0.5);
    }

    #[test]
    fn noiseless_experiment_is_perfect() {
        let cfg = SynthConfig {
            syllable_count: 8,
            ..SynthConfig::default()
        };
        let report = compare_strategies(&cfg, 12).unwrap();
        assert_eq!(report.strategy(SearchStrategy::Full).accuracy, 1.0);
        assert_eq!(report.strategy(SearchStrategy::Full).mean_cost, 0.0);
        let full = report.strategy(SearchStrategy::Full).mean_arcs_evaluated;
        assert!(report.strategy(SearchStrategy::Dfs).mean_arcs_evaluated <= full);
        assert!(report.strategy(SearchStrategy::Bfs).mean_arcs_evaluated <= full);
    }

    #[test]
    fn report_is_deterministic() {
        let cfg = SynthConfig {
            noise_sigma: 0.2,
            seed: 9,
            ..SynthConfig::default()
        };
        let a = serde_json::to_string(&compare_strategies(&cfg, 10).unwrap()).unwrap();
        let b = serde_json::to_string(&compare_strategies(&cfg, 10).unwrap()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_bad_config() {
        assert!(compare_strategies(&SynthConfig::default(), 0).is_err());
        let bad = SynthConfig {
            lengths: vec![],
            ..SynthConfig::default()
        };
        assert!(gen_synthetic_dictionary(&bad).is_err());
    }
}
