//! Command-line front end.
//!
//! Exit codes: 0 success, 1 usage error, 2 data or validation error,
//! 3 no complete path through the synthesis graph.

use std::ffi::OsString;
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};

use clap::{Args, Parser, Subcommand};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::harness::{compare_strategies, gen_input, gen_synthetic_dictionary, SynthConfig};
use crate::io::{
    dictionary_to_json, input_to_json, parse_dictionary_file, parse_input_file, to_json, trajectory_to_csv,
    ReportDocument, StitchDocument,
};
use crate::recognize::recognize;
use crate::search::{count_compositions, enumerate_compositions, SearchStrategy};
use crate::stitch::{stitch, Model};
use crate::trajectory::Trajectory;

pub const EXIT_OK: i32 = 0;
pub const EXIT_USAGE: i32 = 1;
pub const EXIT_DATA: i32 = 2;
pub const EXIT_NO_PATH: i32 = 3;

#[derive(Debug, Parser)]
#[command(name = "syllabic", version, about = "Syllable recognition by synthesis-graph search and trajectory stitching")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Generate a seeded synthetic dictionary.
    GenDict(GenDictArgs),
    /// Generate a segmented input by concatenating random dictionary syllables.
    GenInput(GenInputArgs),
    /// Recognize an input against a dictionary and stitch the result.
    Recognize(RecognizeArgs),
    /// Stitch named dictionary syllables with an adjustment model.
    Stitch(StitchArgs),
    /// Compare search strategies and models on seeded synthetic instances.
    Compare(CompareArgs),
    /// List every placement of syllable lengths over a number of segments.
    Enumerate(EnumerateArgs),
}

#[derive(Debug, Args)]
struct SynthArgs {
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of dictionary syllables.
    #[arg(long, default_value_t = 20)]
    syllables: usize,
    /// Parameters per frame.
    #[arg(long, default_value_t = 2)]
    dim: usize,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
    lengths: Vec<usize>,
    #[arg(long, default_value_t = 3)]
    frames_min: usize,
    #[arg(long, default_value_t = 6)]
    frames_max: usize,
}

impl SynthArgs {
    fn config(&self) -> SynthConfig {
        SynthConfig {
            seed: self.seed,
            syllable_count: self.syllables,
            parameter_dim: self.dim,
            lengths: self.lengths.clone(),
            frames_per_segment: (self.frames_min, self.frames_max),
            ..SynthConfig::default()
        }
    }
}

#[derive(Debug, Args)]
struct GenDictArgs {
    #[command(flatten)]
    synth: SynthArgs,
    #[arg(long)]
    out: PathBuf,
}

#[derive(Debug, Args)]
struct GenInputArgs {
    #[arg(long)]
    dict: PathBuf,
    #[arg(long, default_value_t = 0)]
    seed: u64,
    /// Number of syllables to concatenate.
    #[arg(long, default_value_t = 3)]
    syllables: usize,
    #[arg(long, default_value_t = 0.0)]
    noise: f64,
    #[arg(long)]
    out: PathBuf,
    /// Where to write the ground-truth labels (JSON).
    #[arg(long)]
    truth_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct RecognizeArgs {
    #[arg(long)]
    dict: PathBuf,
    #[arg(long)]
    input: PathBuf,
    #[arg(long, default_value = "full")]
    strategy: SearchStrategy,
    #[arg(long, default_value = "linear")]
    model: Model,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    stitched_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct StitchArgs {
    #[arg(long)]
    dict: PathBuf,
    /// Syllable labels to concatenate, in order.
    #[arg(long, value_delimiter = ',', required = true)]
    labels: Vec<String>,
    #[arg(long, default_value = "linear")]
    model: Model,
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long)]
    stitched_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct CompareArgs {
    #[command(flatten)]
    synth: SynthArgs,
    #[arg(long, default_value_t = 100)]
    instances: usize,
    #[arg(long, default_value_t = 0.1)]
    noise: f64,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Args)]
struct EnumerateArgs {
    #[arg(long)]
    segments: usize,
    #[arg(long, value_delimiter = ',', default_value = "2,3,4")]
    lengths: Vec<usize>,
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Debug, Serialize)]
struct EnumerationDocument {
    segments: usize,
    lengths: Vec<usize>,
    count: u128,
    paths: Vec<String>,
    parts: Vec<String>,
}

#[derive(Debug, Serialize)]
struct StitchReport {
    model: Model,
    labels: Vec<String>,
    #[serde(flatten)]
    stitch: StitchDocument,
}

fn write_file(path: &Path, contents: &str) -> Result<()> {
    fs::write(path, contents)?;
    Ok(())
}

fn write_optional(path: &Option<PathBuf>, contents: impl FnOnce() -> Result<String>) -> Result<()> {
    match path {
        Some(p) => write_file(p, &contents()?),
        None => Ok(()),
    }
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(sep)
}

fn dispatch(command: Command, stdout: &mut dyn Write) -> Result<()> {
    match command {
        Command::GenDict(args) => {
            let dict = gen_synthetic_dictionary(&args.synth.config())?;
            write_file(&args.out, &dictionary_to_json(&dict)?)?;
            writeln!(
                stdout,
                "wrote {} syllables (P={}, lengths {:?}) to {}",
                dict.len(),
                dict.parameter_dim(),
                dict.lengths(),
                args.out.display()
            )?;
        }
        Command::GenInput(args) => {
            let dict = parse_dictionary_file(&args.dict)?;
            let generated = gen_input(&dict, args.seed, args.syllables, args.noise)?;
            write_file(&args.out, &input_to_json(&generated.input)?)?;
            write_optional(&args.truth_out, || to_json(&generated.labels))?;
            writeln!(
                stdout,
                "wrote input with {} segments, {} frames; truth: {}",
                generated.input.segment_count(),
                generated.input.trajectory().len(),
                generated.labels.join(" ")
            )?;
        }
        Command::Recognize(args) => {
            let dict = parse_dictionary_file(&args.dict)?;
            let input = parse_input_file(&args.input)?;
            let result = recognize(&input, &dict, args.strategy, args.model)?;
            write_optional(&args.out, || to_json(&ReportDocument::from(&result)))?;
            write_optional(&args.stitched_out, || Ok(trajectory_to_csv(&result.stitched.stitched)))?;
            writeln!(stdout, "labels:     {}", result.labels.join(" "))?;
            writeln!(stdout, "path:       {}", join(&result.path.nodes, "-"))?;
            writeln!(stdout, "distances:  {}", join(&result.per_syllable_distances, " "))?;
            writeln!(stdout, "total d:    {}", result.total_distance)?;
            writeln!(stdout, "sigma2:     {}", join(&result.stitched.sigma2, " "))?;
            writeln!(stdout, "max junction residual: {:e}", result.stitched.max_junction_residual())?;
            if result.stitched.any_fallback() {
                writeln!(stdout, "fallback channels: {:?}", result.stitched.fallback)?;
            }
            writeln!(
                stdout,
                "{} / {}: {} arcs evaluated, {} states expanded, {:.1} us; dtw(X, X*) = {}",
                result.strategy,
                result.model,
                result.stats.arcs_evaluated,
                result.stats.nodes_expanded,
                result.wall_time.as_secs_f64() * 1e6,
                result.info_distance
            )?;
        }
        Command::Stitch(args) => {
            let dict = parse_dictionary_file(&args.dict)?;
            let refs: Vec<&Trajectory> = args
                .labels
                .iter()
                .map(|l| dict.get(l).map(|p| p.trajectory()).ok_or_else(|| Error::UnknownLabel(l.clone())))
                .collect::<Result<_>>()?;
            let result = stitch(&refs, args.model)?;
            write_optional(&args.out, || {
                to_json(&StitchReport {
                    model: args.model,
                    labels: args.labels.clone(),
                    stitch: StitchDocument::from(&result),
                })
            })?;
            write_optional(&args.stitched_out, || Ok(trajectory_to_csv(&result.stitched)))?;
            writeln!(stdout, "stitched {} syllables with the {} model", refs.len(), args.model)?;
            writeln!(stdout, "sigma2: {}", join(&result.sigma2, " "))?;
            writeln!(stdout, "max junction residual: {:e}", result.max_junction_residual())?;
            if result.any_fallback() {
                writeln!(stdout, "fallback channels: {:?}", result.fallback)?;
            }
        }
        Command::Compare(args) => {
            let cfg = SynthConfig {
                noise_sigma: args.noise,
                ..args.synth.config()
            };
            let report = compare_strategies(&cfg, args.instances)?;
            write_optional(&args.out, || to_json(&report))?;
            write!(stdout, "{}", report.summary())?;
        }
        Command::Enumerate(args) => {
            let paths = enumerate_compositions(args.segments, &args.lengths);
            let doc = EnumerationDocument {
                segments: args.segments,
                lengths: args.lengths.clone(),
                count: count_compositions(args.segments, &args.lengths),
                paths: paths.iter().map(|p| join(p, "-")).collect(),
                parts: paths
                    .iter()
                    .map(|p| join(&p.windows(2).map(|w| w[1] - w[0]).collect::<Vec<_>>(), "-"))
                    .collect(),
            };
            write_optional(&args.out, || to_json(&doc))?;
            for (path, parts) in doc.paths.iter().zip(&doc.parts) {
                writeln!(stdout, "{path} ({parts})")?;
            }
            writeln!(stdout, "count: {}", doc.count)?;
        }
    }
    Ok(())
}

/// Parses `argv` (including the program name), runs the command and returns the exit code.
pub fn run_command<'w, I, T>(argv: I, stdout: &'w mut dyn Write, stderr: &'w mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_USAGE,
            };
            let sink = if code == EXIT_OK { stdout } else { stderr };
            let _ = write!(sink, "{}", e.render());
            return code;
        }
    };
    match dispatch(cli.command, stdout) {
        Ok(()) => EXIT_OK,
        Err(e) => {
            let _ = writeln!(stderr, "error: {e}");
            match e {
                Error::NoCompletePath { .. } => EXIT_NO_PATH,
                _ => EXIT_DATA,
            }
        }
    }
}
