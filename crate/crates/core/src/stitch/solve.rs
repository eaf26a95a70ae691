use crate::error::{Error, Result};

/// A square linear system `matrix · x = rhs`.
#[derive(Debug, Clone, PartialEq)]
pub struct DenseSystem {
    pub matrix: Vec<Vec<f64>>,
    pub rhs: Vec<f64>,
}

impl DenseSystem {
    pub fn zeros(n: usize) -> Self {
        DenseSystem {
            matrix: vec![vec![0.0; n]; n],
            rhs: vec![0.0; n],
        }
    }

    pub fn size(&self) -> usize {
        self.rhs.len()
    }

    /// `‖A·x − rhs‖∞`.
    pub fn residual(&self, x: &[f64]) -> f64 {
        self.matrix
            .iter()
            .zip(&self.rhs)
            .map(|(row, r)| (row.iter().zip(x).map(|(a, v)| a * v).sum::<f64>() - r).abs())
            .fold(0.0, f64::max)
    }
}

/// Pivots smaller than this fraction of the largest initial entry count as zero.
pub const PIVOT_TOLERANCE: f64 = 1e-12;

/// Gaussian elimination with partial pivoting.
pub fn solve_dense(sys: &DenseSystem) -> Result<Vec<f64>> {
    let n = sys.size();
    assert!(
        sys.matrix.len() == n && sys.matrix.iter().all(|r| r.len() == n),
        "system must be square"
    );
    let mut a = sys.matrix.clone();
    let mut b = sys.rhs.clone();
    let scale = a.iter().flatten().fold(0.0f64, |m, v| m.max(v.abs()));
    let threshold = PIVOT_TOLERANCE * scale;

    for col in 0..n {
        let (pivot_row, pivot) = (col..n)
            .map(|r| (r, a[r][col].abs()))
            .fold((col, -1.0), |best, cur| if cur.1 > best.1 { cur } else { best });
        if scale == 0.0 || pivot < threshold {
            return Err(Error::Singular { column: col });
        }
        a.swap(col, pivot_row);
        b.swap(col, pivot_row);
        for r in col + 1..n {
            let factor = a[r][col] / a[col][col];
            if factor == 0.0 {
                continue;
            }
            let (upper, lower) = a.split_at_mut(r);
            for (x, p) in lower[0][col..].iter_mut().zip(&upper[col][col..]) {
                *x -= factor * p;
            }
            b[r] -= factor * b[col];
        }
    }

    let mut x = vec![0.0; n];
    for row in (0..n).rev() {
        let tail: f64 = (row + 1..n).map(|c| a[row][c] * x[c]).sum();
        x[row] = (b[row] - tail) / a[row][row];
    }
    Ok(x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    #[test]
    fn hand_solved_two_by_two() {
        let sys = DenseSystem {
            matrix: vec![vec![1., 1.], vec![1., 2.]],
            rhs: vec![1., 1.],
        };
        assert_eq!(solve_dense(&sys).unwrap(), vec![1.0, 0.0]);
    }

    #[test]
    fn identity_returns_rhs() {
        let mut sys = DenseSystem::zeros(4);
        for i in 0..4 {
            sys.matrix[i][i] = 1.0;
        }
        sys.rhs = vec![3.0, -1.5, 0.0, 2.25];
        assert_eq!(solve_dense(&sys).unwrap(), sys.rhs);
    }

    #[test]
    fn zero_and_rank_deficient_are_singular() {
        assert!(matches!(
            solve_dense(&DenseSystem::zeros(3)),
            Err(Error::Singular { column: 0 })
        ));
        let sys = DenseSystem {
            matrix: vec![vec![1., 2.], vec![2., 4.]],
            rhs: vec![1., 2.],
        };
        assert!(matches!(solve_dense(&sys), Err(Error::Singular { column: 1 })));
    }

    #[test]
    fn random_systems_have_small_residual() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let n = rng.random_range(1..=30);
            let sys = DenseSystem {
                matrix: (0..n)
                    .map(|_| (0..n).map(|_| rng.random_range(-1.0..1.0)).collect())
                    .collect(),
                rhs: (0..n).map(|_| rng.random_range(-10.0..10.0)).collect(),
            };
            let x = solve_dense(&sys).unwrap();
            let bound = 1e-9 * (1.0 + sys.rhs.iter().fold(0.0f64, |m, v| m.max(v.abs())));
            assert!(sys.residual(&x) <= bound, "n={n} residual {}", sys.residual(&x));
        }
    }
}
