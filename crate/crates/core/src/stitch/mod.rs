//! Stitching of concatenated reference syllables into one smooth trajectory.
//!
//! Each syllable `Y_k` gets its own value transform, linear (`a·Y + b`) or
//! quadratic (`a·Y² + b·Y + c`), applied per channel. The coefficients come
//! from one exactly-determined linear system per channel that combines the
//! deformation normal equations with continuity rows at every merge point
//! (value continuity, plus `2aY + b` continuity for the quadratic model).
//!
//! A channel whose system is singular, for instance because a syllable is
//! constant, keeps the identity transform and is flagged in
//! [`StitchResult::fallback`].

mod solve;
mod system;

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::trajectory::Trajectory;

pub use solve::{solve_dense, DenseSystem, PIVOT_TOLERANCE};
pub use system::{build_linear_system, build_quadratic_system};

/// The adjustment model applied to each syllable.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Model {
    Linear,
    Quadratic,
}

impl Model {
    /// Coefficients per syllable and channel.
    pub fn arity(self) -> usize {
        match self {
            Model::Linear => 2,
            Model::Quadratic => 3,
        }
    }

    pub fn build_system(self, ys: &[&[f64]]) -> DenseSystem {
        match self {
            Model::Linear => build_linear_system(ys),
            Model::Quadratic => build_quadratic_system(ys),
        }
    }

    /// Coefficient vector of the identity transform for one syllable.
    fn identity(self) -> &'static [f64] {
        match self {
            Model::Linear => &[1.0, 0.0],
            Model::Quadratic => &[0.0, 1.0, 0.0],
        }
    }

    pub const ALL: [Model; 2] = [Model::Linear, Model::Quadratic];
}

impl fmt::Display for Model {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.pad(match self {
            Model::Linear => "linear",
            Model::Quadratic => "quadratic",
        })
    }
}

impl FromStr for Model {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "linear" => Ok(Model::Linear),
            "quadratic" => Ok(Model::Quadratic),
            other => Err(format!("unknown model {other:?} (expected linear or quadratic)")),
        }
    }
}

/// `a[k][c]`, `b[k][c]` of `Ỹ = a·Y + b`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct LinearCoeffs {
    pub a: Vec<Vec<f64>>,
    pub b: Vec<Vec<f64>>,
}

/// `a[k][c]`, `b[k][c]`, `c[k][c]` of `Ỹ = a·Y² + b·Y + c`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct QuadraticCoeffs {
    pub a: Vec<Vec<f64>>,
    pub b: Vec<Vec<f64>>,
    pub c: Vec<Vec<f64>>,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "model", rename_all = "lowercase")]
pub enum Coefficients {
    Linear(LinearCoeffs),
    Quadratic(QuadraticCoeffs),
}

impl Coefficients {
    /// Builds coefficients from `per_channel[c]`, each laid out in system order.
    fn from_solutions(model: Model, syllables: usize, per_channel: &[Vec<f64>]) -> Self {
        let arity = model.arity();
        let take = |offset: usize| -> Vec<Vec<f64>> {
            (0..syllables)
                .map(|k| per_channel.iter().map(|x| x[arity * k + offset]).collect())
                .collect()
        };
        match model {
            Model::Linear => Coefficients::Linear(LinearCoeffs { a: take(0), b: take(1) }),
            Model::Quadratic => Coefficients::Quadratic(QuadraticCoeffs {
                a: take(0),
                b: take(1),
                c: take(2),
            }),
        }
    }

    /// Identity transform for `syllables × channels`.
    pub fn identity(model: Model, syllables: usize, channels: usize) -> Self {
        let x: Vec<f64> = model.identity().repeat(syllables);
        Self::from_solutions(model, syllables, &vec![x; channels])
    }

    pub fn model(&self) -> Model {
        match self {
            Coefficients::Linear(_) => Model::Linear,
            Coefficients::Quadratic(_) => Model::Quadratic,
        }
    }

    /// `(syllables, channels)`.
    pub fn shape(&self) -> (usize, usize) {
        let a = match self {
            Coefficients::Linear(l) => &l.a,
            Coefficients::Quadratic(q) => &q.a,
        };
        (a.len(), a.first().map_or(0, Vec::len))
    }

    /// Transformed value of sample `y` of syllable `k`, channel `c`.
    pub fn apply(&self, k: usize, c: usize, y: f64) -> f64 {
        match self {
            Coefficients::Linear(l) => l.a[k][c] * y + l.b[k][c],
            Coefficients::Quadratic(q) => q.a[k][c] * y * y + q.b[k][c] * y + q.c[k][c],
        }
    }

    /// `dỸ/dY` at `y`, the quantity the quadratic slope rows equate.
    pub fn slope(&self, k: usize, c: usize, y: f64) -> f64 {
        match self {
            Coefficients::Linear(l) => l.a[k][c],
            Coefficients::Quadratic(q) => 2.0 * q.a[k][c] * y + q.b[k][c],
        }
    }
}

/// Outcome of stitching `R` syllables with one model.
#[derive(Debug, Clone, PartialEq)]
pub struct StitchResult {
    pub coeffs: Coefficients,
    /// Concatenation of the transformed syllables.
    pub stitched: Trajectory,
    /// Deformation `Σ_k Σ_i (Ỹ_ki − Y_ki)²` per channel.
    pub sigma2: Vec<f64>,
    /// `|Ỹ_k(T) − Ỹ_{k+1}(T)|` per merge point and channel.
    pub junction_residuals: Vec<Vec<f64>>,
    /// `|(2a_k·Y_k(T) + b_k) − (2a_{k+1}·Y_{k+1}(T) + b_{k+1})|` per merge point and
    /// channel; empty for the linear model.
    pub slope_residuals: Vec<Vec<f64>>,
    /// `‖A·x − rhs‖∞` of each channel's solve (0 for fallback channels).
    pub solver_residuals: Vec<f64>,
    /// Channels that fell back to the identity transform.
    pub fallback: Vec<bool>,
}

impl StitchResult {
    pub fn model(&self) -> Model {
        self.coeffs.model()
    }

    pub fn any_fallback(&self) -> bool {
        self.fallback.iter().any(|&f| f)
    }

    pub fn max_junction_residual(&self) -> f64 {
        self.junction_residuals.iter().flatten().fold(0.0, |m, &v| m.max(v))
    }
}

fn check_shapes(ys: &[&Trajectory]) -> Result<usize> {
    let dim = ys.first().ok_or(Error::NothingToStitch)?.dim();
    match ys.iter().find(|y| y.dim() != dim) {
        Some(y) => Err(Error::DimensionMismatch {
            expected: dim,
            found: y.dim(),
        }),
        None => Ok(dim),
    }
}

/// Per-channel deformation `Σ_k Σ_i |Ỹ_ki − Y_ki|²`.
pub fn sigma_squared(coeffs: &Coefficients, ys: &[&Trajectory]) -> Result<Vec<f64>> {
    let dim = check_shapes(ys)?;
    let (syllables, channels) = coeffs.shape();
    if syllables != ys.len() {
        return Err(Error::DimensionMismatch {
            expected: syllables,
            found: ys.len(),
        });
    }
    if channels != dim {
        return Err(Error::DimensionMismatch {
            expected: channels,
            found: dim,
        });
    }
    Ok((0..dim)
        .map(|c| {
            ys.iter()
                .enumerate()
                .flat_map(|(k, y)| {
                    y.frames().iter().map(move |f| {
                        let d = coeffs.apply(k, c, f[c]) - f[c];
                        d * d
                    })
                })
                .sum()
        })
        .collect())
}

/// Fits and applies the chosen model to the concatenation of `ys`.
pub fn stitch(ys: &[&Trajectory], model: Model) -> Result<StitchResult> {
    let dim = check_shapes(ys)?;
    let r = ys.len();

    let mut solutions = Vec::with_capacity(dim);
    let mut solver_residuals = Vec::with_capacity(dim);
    let mut fallback = Vec::with_capacity(dim);
    for c in 0..dim {
        let channel: Vec<Vec<f64>> = ys.iter().map(|y| y.channel(c)).collect();
        let refs: Vec<&[f64]> = channel.iter().map(Vec::as_slice).collect();
        let sys = model.build_system(&refs);
        match solve_dense(&sys) {
            Ok(x) => {
                solver_residuals.push(sys.residual(&x));
                solutions.push(x);
                fallback.push(false);
            }
            Err(Error::Singular { .. }) => {
                solver_residuals.push(0.0);
                solutions.push(model.identity().repeat(r));
                fallback.push(true);
            }
            Err(e) => return Err(e),
        }
    }
    let coeffs = Coefficients::from_solutions(model, r, &solutions);

    let frames: Vec<Vec<f64>> = ys
        .iter()
        .enumerate()
        .flat_map(|(k, y)| {
            let coeffs = &coeffs;
            y.frames()
                .iter()
                .map(move |f| f.iter().enumerate().map(|(c, &v)| coeffs.apply(k, c, v)).collect())
        })
        .collect();
    let stitched = Trajectory::new(frames)?;

    let junction = |measure: &dyn Fn(usize, usize, f64) -> f64| -> Vec<Vec<f64>> {
        ys.windows(2)
            .enumerate()
            .map(|(k, w)| {
                let left = w[0].frames().last().expect("non-empty");
                let right = &w[1].frames()[0];
                (0..dim)
                    .map(|c| (measure(k, c, left[c]) - measure(k + 1, c, right[c])).abs())
                    .collect()
            })
            .collect()
    };
    let junction_residuals = junction(&|k, c, y| coeffs.apply(k, c, y));
    let slope_residuals = match model {
        Model::Linear => Vec::new(),
        Model::Quadratic => junction(&|k, c, y| coeffs.slope(k, c, y)),
    };
    let sigma2 = sigma_squared(&coeffs, ys)?;

    Ok(StitchResult {
        coeffs,
        stitched,
        sigma2,
        junction_residuals,
        slope_residuals,
        solver_residuals,
        fallback,
    })
}
