//! Joins three syllables with the linear and quadratic models and reports the deformation.

use syllabic::stitch::{stitch, Coefficients, Model};
use syllabic::trajectory::Trajectory;

fn main() -> syllabic::Result<()> {
    let syllables = [
        Trajectory::from_scalars(&[0.0, 0.4, 1.1, 1.5])?,
        Trajectory::from_scalars(&[2.3, 2.0, 1.2, 0.9, 0.7])?,
        Trajectory::from_scalars(&[-0.2, 0.3, 0.1])?,
    ];
    let refs: Vec<&Trajectory> = syllables.iter().collect();

    for model in Model::ALL {
        let res = stitch(&refs, model)?;
        println!("{model}:");
        match &res.coeffs {
            Coefficients::Linear(l) => {
                for k in 0..refs.len() {
                    println!("  k={k}: a={:.4} b={:.4}", l.a[k][0], l.b[k][0]);
                }
            }
            Coefficients::Quadratic(q) => {
                for k in 0..refs.len() {
                    println!("  k={k}: a={:.4} b={:.4} c={:.4}", q.a[k][0], q.b[k][0], q.c[k][0]);
                }
            }
        }
        let values: Vec<String> = res.stitched.channel(0).iter().map(|v| format!("{v:.3}")).collect();
        println!("  stitched: [{}]", values.join(", "));
        println!("  sigma2 = {:.4}, max junction residual = {:e}", res.sigma2[0], res.max_junction_residual());
    }

    // The second syllable is constant, so the value constraint cannot pin it down.
    let flat = Trajectory::from_scalars(&[1.0, 1.0, 1.0])?;
    let res = stitch(&[&syllables[0], &flat], Model::Quadratic)?;
    println!("constant syllable: fallback = {:?}", res.fallback);
    Ok(())
}
