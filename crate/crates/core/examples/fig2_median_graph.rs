//! The five-vertex example: its independent sets, the lattice they form, and
//! the greedy and exact MIS.
//!
//!     cargo run --example fig2_median_graph

use rydberg_mis::median::MedianGraph;
use rydberg_mis::Graph;

fn main() -> rydberg_mis::Result<()> {
    // Vertices x1..x5 are labels 0..4.
    let g = Graph::new(5, [(0, 1), (1, 2), (0, 3), (3, 4), (1, 3), (1, 4)])?;
    print!("{}", g.to_text());

    let sets = g.enumerate_independent_sets()?;
    println!("{} independent sets:", sets.len());
    for s in &sets {
        println!("  {s}");
    }

    let mg = MedianGraph::build(&g)?;
    println!("median graph: {} nodes, {} edges", mg.len(), mg.adjacency().len());
    for &(i, j) in mg.adjacency() {
        println!("  {} -- {}", mg.nodes()[i], mg.nodes()[j]);
    }

    println!("greedy: {}", g.greedy_mis());
    println!("exact:  {}", g.exact_mis()?);
    Ok(())
}
