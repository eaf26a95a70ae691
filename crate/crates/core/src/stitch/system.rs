//! Assembly of the exactly-determined stitching systems.
//!
//! Both systems share one layout: the full normal equations of the first
//! syllable, then the continuity rows at each merge point, then one reduced
//! normal equation per remaining syllable. At merge point `j` the left value
//! is the last sample of syllable `j` and the right value the first sample of
//! syllable `j + 1`.

use super::solve::DenseSystem;

/// Power sums `Σ y^0 .. Σ y^4` of one syllable's samples.
struct Moments([f64; 5]);

impl Moments {
    fn of(ys: &[f64]) -> Self {
        let mut m = [0.0; 5];
        for &y in ys {
            let mut p = 1.0;
            for slot in m.iter_mut() {
                *slot += p;
                p *= y;
            }
        }
        Moments(m)
    }

    fn pow(&self, k: usize) -> f64 {
        self.0[k]
    }
}

fn junctions<'a>(ys: &'a [&'a [f64]]) -> impl Iterator<Item = (usize, f64, f64)> + 'a {
    ys.windows(2).enumerate().map(|(j, w)| {
        (
            j,
            *w[0].last().expect("syllables are non-empty"),
            *w[1].first().expect("syllables are non-empty"),
        )
    })
}

/// The `2R × 2R` system for `Ỹ = a·Y + b`, unknowns `(a_1, b_1, …, a_R, b_R)`.
pub fn build_linear_system(ys: &[&[f64]]) -> DenseSystem {
    let r = ys.len();
    let mut sys = DenseSystem::zeros(2 * r);
    if r == 0 {
        return sys;
    }
    let first = Moments::of(ys[0]);
    sys.matrix[0][..2].copy_from_slice(&[first.pow(2), first.pow(1)]);
    sys.rhs[0] = first.pow(2);
    sys.matrix[1][..2].copy_from_slice(&[first.pow(1), first.pow(0)]);
    sys.rhs[1] = first.pow(1);

    let mut row = 2;
    for (j, left, right) in junctions(ys) {
        let (k, next) = (2 * j, 2 * (j + 1));
        sys.matrix[row][k] = left;
        sys.matrix[row][k + 1] = 1.0;
        sys.matrix[row][next] = -right;
        sys.matrix[row][next + 1] = -1.0;
        row += 1;
    }
    for (k, y) in ys.iter().enumerate().skip(1) {
        let m = Moments::of(y);
        sys.matrix[row][2 * k] = m.pow(1);
        sys.matrix[row][2 * k + 1] = m.pow(0);
        sys.rhs[row] = m.pow(1);
        row += 1;
    }
    debug_assert_eq!(row, 2 * r);
    sys
}

/// The `3R × 3R` system for `Ỹ = a·Y² + b·Y + c`, unknowns `(a_1, b_1, c_1, …)`.
pub fn build_quadratic_system(ys: &[&[f64]]) -> DenseSystem {
    let r = ys.len();
    let mut sys = DenseSystem::zeros(3 * r);
    if r == 0 {
        return sys;
    }
    let first = Moments::of(ys[0]);
    for (row, top) in [4, 3, 2].into_iter().enumerate() {
        sys.matrix[row][..3].copy_from_slice(&[first.pow(top), first.pow(top - 1), first.pow(top - 2)]);
        sys.rhs[row] = first.pow(top - 1);
    }

    let mut row = 3;
    for (j, left, right) in junctions(ys) {
        let (k, next) = (3 * j, 3 * (j + 1));
        sys.matrix[row][k..k + 3].copy_from_slice(&[left * left, left, 1.0]);
        sys.matrix[row][next..next + 3].copy_from_slice(&[-right * right, -right, -1.0]);
        row += 1;
    }
    for (j, left, right) in junctions(ys) {
        let (k, next) = (3 * j, 3 * (j + 1));
        sys.matrix[row][k..k + 2].copy_from_slice(&[2.0 * left, 1.0]);
        sys.matrix[row][next..next + 2].copy_from_slice(&[-2.0 * right, -1.0]);
        row += 1;
    }
    for (k, y) in ys.iter().enumerate().skip(1) {
        let m = Moments::of(y);
        sys.matrix[row][3 * k..3 * k + 3].copy_from_slice(&[m.pow(2), m.pow(1), m.pow(0)]);
        sys.rhs[row] = m.pow(1);
        row += 1;
    }
    debug_assert_eq!(row, 3 * r);
    sys
}
