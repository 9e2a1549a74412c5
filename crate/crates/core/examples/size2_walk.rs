//! Short-time growth of the size-2 probability on the independent-set
//! lattice: walk result, the s⁴ coefficient from H_eff², and the closed-form
//! curve side by side.
//!
//!     cargo run --release --example size2_walk -- 10 0.5 1

use rydberg_mis::median::{p2_perturbative_oracle, p2_short_time, walk_evolve, MedianGraph};
use rydberg_mis::Graph;

fn main() -> rydberg_mis::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|a| a.parse().ok()).unwrap_or(10);
    let p: f64 = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(0.5);
    let seed: u64 = args.get(2).and_then(|a| a.parse().ok()).unwrap_or(1);
    let (omega, t) = (1.0, 1.0);

    let g = Graph::erdos_renyi(n, p, seed)?;
    let mg = MedianGraph::build(&g)?;
    println!("# n={n} m={} independent sets={}", g.edge_count(), mg.len());
    println!("s,p2_walk,p2_oracle,p2_closed_form");
    for i in 0..=20 {
        let s = 1e-3 * 10f64.powf(i as f64 / 5.0);
        let w = walk_evolve(&mg, omega, 0.0, t, s, 1e-14)?;
        let oracle = p2_perturbative_oracle(&mg, omega, t, s);
        let closed = p2_short_time(n, g.edge_count(), omega, t, s);
        println!("{s:.6e},{:.6e},{oracle:.6e},{closed:.6e}", w.p2);
    }
    Ok(())
}
