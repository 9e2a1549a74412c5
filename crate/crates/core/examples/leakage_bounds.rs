//! Magnus leakage bound against simulated leakage for constant drive, as the
//! blockade grows.
//!
//!     cargo run --release --example leakage_bounds

use rydberg_mis::bounds::{approx_adiabatic_ratio, leakage_upper_bound, BoundParams};
use rydberg_mis::dynamics::evolve_full;
use rydberg_mis::{AnnealParams, Graph, Schedule};

fn main() -> rydberg_mis::Result<()> {
    let g = Graph::erdos_renyi(8, 0.5, 3)?;
    let n = g.n();
    let t = 2.0;
    println!("L,omega0,sqrt_leak,bound,certified,approx_ratio");
    for l in [50usize, 100, 200, 400, 800] {
        let omega0 = 2.0 * std::f64::consts::PI * l as f64 / t;
        let params = AnnealParams::new(t, omega0, Schedule::constant(1.0, 1.0))?;
        let bp = BoundParams::from_anneal(&params, n)?;
        let report = leakage_upper_bound(&bp);
        let r = evolve_full(&g, &params, 1.0, 1e-9)?;
        println!(
            "{l},{omega0:.3},{:.4e},{:.4e},{},{:.2e}",
            r.leakage.sqrt(),
            report.truncated_bound,
            report.certified,
            approx_adiabatic_ratio(&bp)
        );
    }
    Ok(())
}
