//! Minimum-degree greedy against branch-and-bound on seeded random graphs.
//!
//!     cargo run --release --example greedy_vs_exact -- 30 0.5 20

use rydberg_mis::seed::derive_seed;
use rydberg_mis::Graph;

fn main() -> rydberg_mis::Result<()> {
    let args: Vec<String> = std::env::args().skip(1).collect();
    let n: usize = args.first().and_then(|a| a.parse().ok()).unwrap_or(24);
    let p: f64 = args.get(1).and_then(|a| a.parse().ok()).unwrap_or(0.5);
    let count: u64 = args.get(2).and_then(|a| a.parse().ok()).unwrap_or(20);

    let mut gap = 0usize;
    println!("seed,m,greedy,exact");
    for k in 0..count {
        let seed = derive_seed(7, n as u64, k);
        let g = Graph::erdos_renyi(n, p, seed)?;
        let greedy = g.greedy_mis().len();
        let exact = g.exact_mis()?.len();
        gap += exact - greedy;
        println!("{seed},{},{greedy},{exact}", g.edge_count());
    }
    println!("# mean shortfall of greedy: {:.3}", gap as f64 / count as f64);
    Ok(())
}
