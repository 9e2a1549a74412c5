use std::fs::File;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use rydberg_mis::experiment::{
    bound_report, run_fig3, run_fig4, run_single, write_bound_report, ExperimentConfig, ExperimentKind,
};
use rydberg_mis::{Graph, Result};

#[derive(Parser)]
#[command(name = "rydberg-mis", version, about = "Rydberg-blockade independent-set experiments")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a seeded Erdős–Rényi graph in the `n m` / `i j` text format.
    GenGraph {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        p: f64,
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long)]
        output: Option<PathBuf>,
    },
    /// Anneal vs greedy vs exact MIS size on dense random graphs.
    Fig4(Common),
    /// Size-2 success probability: simulation and closed-form curves.
    Fig3(Common),
    /// Leakage-bound constants over a sweep of n.
    BoundReport(Common),
    /// Full report for one graph as JSON.
    Single {
        #[command(flatten)]
        common: Common,
        /// Graph file; a seeded ER graph is generated when absent.
        #[arg(long)]
        graph: Option<PathBuf>,
    },
}

/// Flags shared by the experiment subcommands. Each overrides the same key
/// of `--config`.
#[derive(Args)]
struct Common {
    /// `key = value` file applied before the flags.
    #[arg(long)]
    config: Option<PathBuf>,
    /// Vertex counts, e.g. `4..12` or `6,8,10`.
    #[arg(long = "n-list")]
    n_list: Option<String>,
    #[arg(long)]
    p: Option<String>,
    #[arg(long)]
    samples: Option<String>,
    /// T as a rule in n, e.g. `100` or `20/n`.
    #[arg(long = "t-rule")]
    t_rule: Option<String>,
    /// ω₀ as a rule in n, e.g. `n^2` or `4*n^2`.
    #[arg(long = "omega0-rule")]
    omega0_rule: Option<String>,
    /// `fig4`, `fig3` or `constant(omega,delta)`.
    #[arg(long)]
    schedule: Option<String>,
    #[arg(long)]
    seed: Option<String>,
    #[arg(long)]
    tol: Option<String>,
    #[arg(long)]
    output: Option<String>,
    #[arg(long = "max-full-n")]
    max_full_n: Option<String>,
    #[arg(long = "max-walk-states")]
    max_walk_states: Option<String>,
    #[arg(long = "s-end")]
    s_end: Option<String>,
    #[arg(long)]
    kappa: Option<String>,
    #[arg(long = "density-c")]
    density_c: Option<String>,
    #[arg(long)]
    shots: Option<String>,
    #[arg(long)]
    threads: Option<String>,
    /// Record per-row elapsed seconds (makes output non-reproducible).
    #[arg(long = "wall-time")]
    wall_time: bool,
}

impl Common {
    fn config(&self, kind: ExperimentKind) -> Result<ExperimentConfig> {
        let mut cfg = ExperimentConfig::defaults(kind);
        if let Some(path) = &self.config {
            cfg.apply_text(&std::fs::read_to_string(path)?)?;
        }
        let flags = [
            ("n_list", &self.n_list),
            ("p", &self.p),
            ("samples", &self.samples),
            ("t_rule", &self.t_rule),
            ("omega0_rule", &self.omega0_rule),
            ("schedule", &self.schedule),
            ("seed", &self.seed),
            ("tol", &self.tol),
            ("output", &self.output),
            ("max_full_n", &self.max_full_n),
            ("max_walk_states", &self.max_walk_states),
            ("s_end", &self.s_end),
            ("kappa", &self.kappa),
            ("density_c", &self.density_c),
            ("shots", &self.shots),
            ("threads", &self.threads),
        ];
        for (key, value) in flags {
            if let Some(v) = value {
                cfg.set(key, v)?;
            }
        }
        if self.wall_time {
            cfg.wall_time = true;
        }
        cfg.validate()?;
        Ok(cfg)
    }
}

fn open_output(path: Option<&PathBuf>) -> Result<Box<dyn Write>> {
    Ok(match path {
        Some(p) => Box::new(BufWriter::new(File::create(p)?)),
        None => Box::new(BufWriter::new(io::stdout().lock())),
    })
}

fn run(cli: Cli) -> Result<()> {
    match cli.command {
        Command::GenGraph { n, p, seed, output } => {
            let g = Graph::erdos_renyi(n, p, seed)?;
            let mut out = open_output(output.as_ref())?;
            out.write_all(g.to_text().as_bytes())?;
            out.flush()?;
        }
        Command::Fig4(common) => {
            let cfg = common.config(ExperimentKind::Fig4)?;
            let result = run_fig4(&cfg)?;
            result.write_csv(open_output(cfg.output.as_ref())?)?;
        }
        Command::Fig3(common) => {
            let cfg = common.config(ExperimentKind::Fig3)?;
            let result = run_fig3(&cfg)?;
            result.write_csv(open_output(cfg.output.as_ref())?)?;
        }
        Command::BoundReport(common) => {
            let cfg = common.config(ExperimentKind::BoundReport)?;
            let rows = bound_report(&cfg)?;
            write_bound_report(&cfg, &rows, open_output(cfg.output.as_ref())?)?;
        }
        Command::Single { common, graph } => {
            let cfg = common.config(ExperimentKind::Single)?;
            let graph = match graph {
                Some(path) => Some(std::fs::read_to_string(path)?.parse::<Graph>()?),
                None => None,
            };
            let report = run_single(&cfg, graph)?;
            let mut out = open_output(cfg.output.as_ref())?;
            serde_json::to_writer_pretty(&mut out, &report)?;
            writeln!(out)?;
            out.flush()?;
        }
    }
    Ok(())
}

fn report_error(kind: &str, message: &str) {
    let body = serde_json::json!({ "error": { "kind": kind, "message": message } });
    eprintln!("{body}");
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                let _ = e.print();
                return ExitCode::SUCCESS;
            }
            report_error("usage", e.to_string().trim());
            return ExitCode::from(2);
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            report_error(e.kind(), &e.to_string());
            ExitCode::FAILURE
        }
    }
}

