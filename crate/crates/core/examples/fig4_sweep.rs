//! A small anneal-versus-greedy sweep written as CSV to stdout. The full
//! sweep is `rydberg-mis fig4`.
//!
//!     cargo run --release --example fig4_sweep

use rydberg_mis::experiment::{run_fig4, ExperimentConfig, ExperimentKind};

fn main() -> rydberg_mis::Result<()> {
    let mut cfg = ExperimentConfig::defaults(ExperimentKind::Fig4);
    cfg.n_list = vec![4, 6, 8];
    cfg.samples = 10;
    let out = run_fig4(&cfg)?;
    for row in out.aggregates() {
        eprintln!(
            "n={:2}  anneal {:.3}  greedy {:.3}  exact {:.3}",
            row.n,
            row.expected_is_size.unwrap_or(f64::NAN),
            row.greedy_size.unwrap_or(f64::NAN),
            row.mis_size.unwrap_or(f64::NAN)
        );
    }
    out.write_csv(std::io::stdout().lock())
}
