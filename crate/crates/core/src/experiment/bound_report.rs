//! Leakage-bound table over a sweep of vertex counts.

use std::io::Write;

use super::{fmt_f64, schema_line, write_csv, ExperimentConfig};
use crate::bounds::{approx_adiabatic_ratio, leakage_upper_bound, BoundParams};
use crate::error::Result;

pub const BOUND_COLUMNS: &[&str] = &[
    "n",
    "tau",
    "a1",
    "a2",
    "a3",
    "a4",
    "leading",
    "second",
    "bound",
    "convergence_ok",
    "certified",
    "approx_ratio",
];

#[derive(Clone, Debug, PartialEq)]
pub struct BoundRow {
    pub n: usize,
    pub params: BoundParams,
    pub leading: f64,
    pub second: f64,
    pub bound: f64,
    pub convergence_ok: bool,
    pub certified: bool,
    pub approx_ratio: f64,
    pub annotations: Vec<String>,
}

impl BoundRow {
    fn record(&self) -> Vec<String> {
        let p = &self.params;
        vec![
            self.n.to_string(),
            fmt_f64(p.tau),
            fmt_f64(p.a1),
            fmt_f64(p.a2),
            fmt_f64(p.a3),
            fmt_f64(p.a4),
            fmt_f64(self.leading),
            fmt_f64(self.second),
            fmt_f64(self.bound),
            self.convergence_ok.to_string(),
            self.certified.to_string(),
            fmt_f64(self.approx_ratio),
        ]
    }
}

/// One row per n, with T and ω₀ taken from the configured rules.
pub fn bound_report(cfg: &ExperimentConfig) -> Result<Vec<BoundRow>> {
    cfg.validate()?;
    cfg.n_list
        .iter()
        .map(|&n| {
            let bp = BoundParams::from_anneal(&cfg.anneal_params(n)?, n)?;
            let r = leakage_upper_bound(&bp);
            Ok(BoundRow {
                n,
                leading: r.leading_term,
                second: r.second_term,
                bound: r.truncated_bound,
                convergence_ok: r.convergence_ok,
                certified: r.certified,
                approx_ratio: approx_adiabatic_ratio(&bp),
                annotations: r.annotations,
                params: bp,
            })
        })
        .collect()
}

pub fn write_bound_report<W: Write>(cfg: &ExperimentConfig, rows: &[BoundRow], out: W) -> Result<()> {
    let mut comments = vec![
        schema_line(cfg.experiment),
        format!(
            "T={} omega0={} schedule={}",
            cfg.t_rule, cfg.omega0_rule, cfg.schedule
        ),
    ];
    let mut notes: Vec<&String> = rows.iter().flat_map(|r| &r.annotations).collect();
    notes.sort();
    notes.dedup();
    comments.extend(notes.into_iter().map(|a| format!("note: {a}")));
    write_csv(out, &comments, BOUND_COLUMNS, rows.iter().map(BoundRow::record))
}
