//! Batch experiments over seeded random graphs and their CSV/JSON output.
//!
//! Sample `k` at vertex count `n` always uses the graph seed
//! [`derive_seed`]`(master_seed, n, k)`, so any single row can be regenerated
//! on its own. Samples run in parallel but are collected and aggregated in
//! sample order, which keeps the output byte-identical for a given
//! configuration regardless of the worker count.

mod bound_report;
mod config;
mod fig3;
mod fig4;
mod single;

use std::fmt::Write as _;
use std::io::Write;
use std::time::Instant;

use rayon::prelude::*;

pub use bound_report::{bound_report, write_bound_report, BoundRow, BOUND_COLUMNS};
pub use config::{parse_n_list, ExperimentConfig, ExperimentKind, Rule};
pub use fig3::{p2_caption_curve, run_fig3};
pub use fig4::run_fig4;
pub use single::{run_single, SingleReport};

use crate::error::{Error, Result};
use crate::seed::derive_seed;

pub const SCHEMA_VERSION: u32 = 1;

/// Columns of [`ResultRow`] in output order.
pub const COLUMNS: &[&str] = &[
    "experiment",
    "kind",
    "n",
    "seed",
    "m_edges",
    "p_is",
    "expected_is_size",
    "greedy_size",
    "mis_size",
    "p2_simulated",
    "p2_eq5",
    "p2_eq6",
    "bound_leading",
    "bound_second",
    "bound",
    "bound_certified",
    "wall_time",
    "leakage",
    "sampled_is_size",
    "p2_full",
    "p2_walk",
    "p2_oracle",
    "curve_order",
    "norm_drift",
    "steps",
    "halving_change",
    "samples_ok",
    "p_is_stderr",
    "expected_is_size_stderr",
    "greedy_size_stderr",
    "mis_size_stderr",
    "p2_simulated_stderr",
    "error",
];

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RowKind {
    Sample,
    Aggregate,
}

/// One CSV line of a fig3/fig4 run. Sample rows describe one graph;
/// aggregate rows hold per-n means (maxima for `norm_drift` and
/// `halving_change`) with standard errors for the plotted curves.
#[derive(Clone, Debug, PartialEq)]
pub struct ResultRow {
    pub experiment: ExperimentKind,
    pub kind: RowKind,
    pub n: usize,
    pub seed: Option<u64>,
    pub m_edges: Option<f64>,
    pub p_is: Option<f64>,
    /// Mean IS size conditioned on measuring an IS.
    pub expected_is_size: Option<f64>,
    pub greedy_size: Option<f64>,
    pub mis_size: Option<f64>,
    pub p2_simulated: Option<f64>,
    /// Short-time closed form `Ω²T²κ⁴(n(n−1)/2 − m)²/(8n⁴)`.
    pub p2_eq5: Option<f64>,
    /// Dense-graph asymptote `(0.5 − c)²Ω²T²κ⁴/8`.
    pub p2_eq6: Option<f64>,
    pub bound_leading: Option<f64>,
    pub bound_second: Option<f64>,
    pub bound: Option<f64>,
    pub bound_certified: Option<bool>,
    pub wall_time: Option<f64>,
    pub leakage: Option<f64>,
    /// Mean size over simulated measurement shots that hit an IS.
    pub sampled_is_size: Option<f64>,
    pub p2_full: Option<f64>,
    pub p2_walk: Option<f64>,
    pub p2_oracle: Option<f64>,
    /// Aggregate rows of size-2 runs: the three curves ordered from top to bottom.
    pub curve_order: Option<String>,
    pub norm_drift: Option<f64>,
    pub steps: Option<f64>,
    pub halving_change: Option<f64>,
    pub samples_ok: Option<usize>,
    pub p_is_stderr: Option<f64>,
    pub expected_is_size_stderr: Option<f64>,
    pub greedy_size_stderr: Option<f64>,
    pub mis_size_stderr: Option<f64>,
    pub p2_simulated_stderr: Option<f64>,
    pub error: Option<String>,
}

impl ResultRow {
    pub fn new(experiment: ExperimentKind, kind: RowKind, n: usize) -> Self {
        ResultRow {
            experiment,
            kind,
            n,
            seed: None,
            m_edges: None,
            p_is: None,
            expected_is_size: None,
            greedy_size: None,
            mis_size: None,
            p2_simulated: None,
            p2_eq5: None,
            p2_eq6: None,
            bound_leading: None,
            bound_second: None,
            bound: None,
            bound_certified: None,
            wall_time: None,
            leakage: None,
            sampled_is_size: None,
            p2_full: None,
            p2_walk: None,
            p2_oracle: None,
            curve_order: None,
            norm_drift: None,
            steps: None,
            halving_change: None,
            samples_ok: None,
            p_is_stderr: None,
            expected_is_size_stderr: None,
            greedy_size_stderr: None,
            mis_size_stderr: None,
            p2_simulated_stderr: None,
            error: None,
        }
    }

    pub fn is_ok(&self) -> bool {
        self.error.is_none()
    }

    fn fail(&mut self, e: &Error) {
        self.error = Some(format!("{}: {}", e.kind(), e));
    }

    fn record(&self) -> Vec<String> {
        let f = |v: Option<f64>| v.map(fmt_f64).unwrap_or_default();
        vec![
            self.experiment.id().to_string(),
            match self.kind {
                RowKind::Sample => "sample",
                RowKind::Aggregate => "aggregate",
            }
            .to_string(),
            self.n.to_string(),
            self.seed.map(|s| s.to_string()).unwrap_or_default(),
            f(self.m_edges),
            f(self.p_is),
            f(self.expected_is_size),
            f(self.greedy_size),
            f(self.mis_size),
            f(self.p2_simulated),
            f(self.p2_eq5),
            f(self.p2_eq6),
            f(self.bound_leading),
            f(self.bound_second),
            f(self.bound),
            self.bound_certified.map(|b| b.to_string()).unwrap_or_default(),
            f(self.wall_time),
            f(self.leakage),
            f(self.sampled_is_size),
            f(self.p2_full),
            f(self.p2_walk),
            f(self.p2_oracle),
            self.curve_order.clone().unwrap_or_default(),
            f(self.norm_drift),
            f(self.steps),
            f(self.halving_change),
            self.samples_ok.map(|k| k.to_string()).unwrap_or_default(),
            f(self.p_is_stderr),
            f(self.expected_is_size_stderr),
            f(self.greedy_size_stderr),
            f(self.mis_size_stderr),
            f(self.p2_simulated_stderr),
            self.error.clone().unwrap_or_default(),
        ]
    }

    /// Row invariants checked at emission. Probabilities may overshoot
    /// [0, 1] by round-off; those are clamped, anything larger is an error.
    fn enforce(&mut self) -> Result<()> {
        const SLACK: f64 = 1e-9;
        let id = self.experiment.id();
        let n = self.n;
        for (name, v) in [
            ("p_is", &mut self.p_is),
            ("leakage", &mut self.leakage),
            ("p2_simulated", &mut self.p2_simulated),
            ("p2_full", &mut self.p2_full),
            ("p2_walk", &mut self.p2_walk),
        ] {
            if let Some(x) = v {
                if !(*x >= -SLACK && *x <= 1.0 + SLACK) {
                    return Err(Error::Domain(format!("{id} n={n}: {name} = {x} outside [0, 1]")));
                }
                *x = x.clamp(0.0, 1.0);
            }
        }
        if let (Some(g), Some(m)) = (self.greedy_size, self.mis_size) {
            if g > m + SLACK {
                return Err(Error::Domain(format!("{id} n={n}: greedy size {g} exceeds MIS size {m}")));
            }
        }
        if let (Some(e), Some(m)) = (self.expected_is_size, self.mis_size) {
            if e > m + SLACK {
                return Err(Error::Domain(format!("{id} n={n}: expected IS size {e} exceeds MIS size {m}")));
            }
        }
        Ok(())
    }
}

/// Shortest round-trip decimal form; stable across runs and platforms.
pub fn fmt_f64(x: f64) -> String {
    if x != 0.0 && x.is_finite() && (x.abs() < 1e-4 || x.abs() >= 1e15) {
        format!("{x:e}")
    } else {
        format!("{x}")
    }
}

/// Rows plus the comment lines written above the CSV header.
#[derive(Clone, Debug, PartialEq)]
pub struct ExperimentOutput {
    pub comments: Vec<String>,
    pub rows: Vec<ResultRow>,
}

impl ExperimentOutput {
    pub fn samples(&self) -> impl Iterator<Item = &ResultRow> {
        self.rows.iter().filter(|r| r.kind == RowKind::Sample)
    }

    pub fn aggregates(&self) -> impl Iterator<Item = &ResultRow> {
        self.rows.iter().filter(|r| r.kind == RowKind::Aggregate)
    }

    pub fn aggregate_for(&self, n: usize) -> Option<&ResultRow> {
        self.aggregates().find(|r| r.n == n)
    }

    pub fn write_csv<W: Write>(&self, out: W) -> Result<()> {
        write_csv(out, &self.comments, COLUMNS, self.rows.iter().map(ResultRow::record))
    }

    pub fn to_csv_string(&self) -> Result<String> {
        let mut buf = Vec::new();
        self.write_csv(&mut buf)?;
        Ok(String::from_utf8(buf).expect("CSV output is UTF-8"))
    }
}

pub(crate) fn write_csv<W, I>(mut out: W, comments: &[String], header: &[&str], records: I) -> Result<()>
where
    W: Write,
    I: IntoIterator<Item = Vec<String>>,
{
    for c in comments {
        writeln!(out, "# {c}")?;
    }
    let mut w = csv::Writer::from_writer(out);
    w.write_record(header)?;
    for r in records {
        w.write_record(&r)?;
    }
    w.flush()?;
    Ok(())
}

/// Describes the run in a comment line so a CSV is self-documenting.
fn describe(cfg: &ExperimentConfig) -> String {
    let mut s = String::new();
    let ns: Vec<String> = cfg.n_list.iter().map(|n| n.to_string()).collect();
    let _ = write!(
        s,
        "n_list={} p={} samples={} T={} omega0={} schedule={} master_seed={} tol={}",
        ns.join(","),
        cfg.p,
        cfg.samples,
        cfg.t_rule,
        cfg.omega0_rule,
        cfg.schedule,
        cfg.master_seed,
        cfg.tol
    );
    s
}

fn schema_line(kind: ExperimentKind) -> String {
    format!("rydberg-mis {} results, schema v{SCHEMA_VERSION}", kind.id())
}

/// Runs `per_sample` for every (n, k) in parallel, appending an aggregate row
/// after each n.
fn run_samples<F>(cfg: &ExperimentConfig, per_sample: F) -> Result<Vec<ResultRow>>
where
    F: Fn(usize, u64) -> ResultRow + Sync,
{
    let work = || -> Result<Vec<ResultRow>> {
        let mut rows = Vec::new();
        for &n in &cfg.n_list {
            let mut samples: Vec<ResultRow> = (0..cfg.samples)
                .into_par_iter()
                .map(|k| {
                    let seed = derive_seed(cfg.master_seed, n as u64, k as u64);
                    let start = Instant::now();
                    let mut row = per_sample(n, seed);
                    row.seed = Some(seed);
                    if cfg.wall_time {
                        row.wall_time = Some(start.elapsed().as_secs_f64());
                    }
                    row
                })
                .collect();
            for r in &mut samples {
                r.enforce()?;
            }
            let mut agg = aggregate(cfg.experiment, n, &samples);
            agg.enforce()?;
            rows.extend(samples);
            rows.push(agg);
        }
        Ok(rows)
    };
    match cfg.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Config(format!("thread pool: {e}")))?
            .install(work),
        None => work(),
    }
}

fn mean_stderr(values: &[f64]) -> (Option<f64>, Option<f64>) {
    if values.is_empty() {
        return (None, None);
    }
    let k = values.len() as f64;
    let mean = values.iter().sum::<f64>() / k;
    if values.len() == 1 {
        return (Some(mean), Some(0.0));
    }
    let var = values.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / (k - 1.0);
    (Some(mean), Some((var / k).sqrt()))
}

fn aggregate(experiment: ExperimentKind, n: usize, samples: &[ResultRow]) -> ResultRow {
    let ok: Vec<&ResultRow> = samples.iter().filter(|r| r.is_ok()).collect();
    let col = |get: fn(&ResultRow) -> Option<f64>| -> Vec<f64> { ok.iter().filter_map(|r| get(r)).collect() };
    let mean = |get: fn(&ResultRow) -> Option<f64>| mean_stderr(&col(get)).0;
    let max = |get: fn(&ResultRow) -> Option<f64>| col(get).into_iter().reduce(f64::max);

    let mut a = ResultRow::new(experiment, RowKind::Aggregate, n);
    a.samples_ok = Some(ok.len());
    (a.p_is, a.p_is_stderr) = mean_stderr(&col(|r| r.p_is));
    (a.expected_is_size, a.expected_is_size_stderr) = mean_stderr(&col(|r| r.expected_is_size));
    (a.greedy_size, a.greedy_size_stderr) = mean_stderr(&col(|r| r.greedy_size));
    (a.mis_size, a.mis_size_stderr) = mean_stderr(&col(|r| r.mis_size));
    (a.p2_simulated, a.p2_simulated_stderr) = mean_stderr(&col(|r| r.p2_simulated));
    a.m_edges = mean(|r| r.m_edges);
    a.p2_eq5 = mean(|r| r.p2_eq5);
    a.p2_eq6 = mean(|r| r.p2_eq6);
    a.bound_leading = mean(|r| r.bound_leading);
    a.bound_second = mean(|r| r.bound_second);
    a.bound = mean(|r| r.bound);
    a.wall_time = mean(|r| r.wall_time);
    a.leakage = mean(|r| r.leakage);
    a.sampled_is_size = mean(|r| r.sampled_is_size);
    a.p2_full = mean(|r| r.p2_full);
    a.p2_walk = mean(|r| r.p2_walk);
    a.p2_oracle = mean(|r| r.p2_oracle);
    a.steps = mean(|r| r.steps);
    a.norm_drift = max(|r| r.norm_drift);
    a.halving_change = max(|r| r.halving_change);
    let certified: Vec<bool> = ok.iter().filter_map(|r| r.bound_certified).collect();
    if !certified.is_empty() {
        a.bound_certified = Some(certified.iter().all(|&c| c));
    }
    if let (Some(sim), Some(e5), Some(e6)) = (a.p2_simulated, a.p2_eq5, a.p2_eq6) {
        let mut curves = [("sim", sim), ("eq6", e6), ("eq5", e5)];
        curves.sort_by(|x, y| y.1.total_cmp(&x.1));
        let names: Vec<&str> = curves.iter().map(|c| c.0).collect();
        a.curve_order = Some(names.join(">"));
    }
    if ok.len() < samples.len() {
        a.error = Some(format!("{} of {} samples failed", samples.len() - ok.len(), samples.len()));
    }
    a
}
