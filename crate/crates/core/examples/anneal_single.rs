//! One full state-vector anneal with the sine/cosine schedule, printing the
//! final size distribution.
//!
//!     cargo run --release --example anneal_single -- 8 0.8 3

use rydberg_mis::dynamics::{evolve_full_with, EvolveOptions};
use rydberg_mis::{AnnealParams, Graph, Schedule};

fn main() -> rydberg_mis::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|a| a.parse().ok()).unwrap_or(8);
    let p: f64 = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(0.8);
    let seed: u64 = args.get(2).and_then(|a| a.parse().ok()).unwrap_or(1);

    let g = Graph::erdos_renyi(n, p, seed)?;
    let params = AnnealParams::new(100.0, (n * n) as f64, Schedule::sine_cosine())?;
    let opts = EvolveOptions {
        tol: 1e-5,
        ..Default::default()
    };
    let r = evolve_full_with(&g, &params, 1.0, &opts)?;

    println!("n={n} m={} MIS={} greedy={}", g.edge_count(), g.exact_mis()?.len(), g.greedy_mis().len());
    println!("steps={} halving change={:.2e} norm drift={:.2e}", r.steps_taken, r.halving_change, r.norm_drift);
    println!("P(IS)={:.12} leakage={:.3e}", r.p_is, r.leakage);
    for (k, prob) in &r.size_probs.sizes {
        println!("  size {k}: {:.6} (conditioned {:.6})", prob.unconditioned, prob.conditioned.unwrap_or(0.0));
    }
    if let Some(e) = r.expected_is_size {
        println!("expected IS size {e:.6}");
    }
    Ok(())
}
