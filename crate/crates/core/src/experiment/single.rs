//! Everything about one graph and one parameter set, as a JSON document.

use serde::Serialize;

use super::ExperimentConfig;
use crate::bounds::{approx_adiabatic_ratio, leakage_upper_bound, BoundParams, LeakageBoundReport};
use crate::dynamics::{evolve_full_with, EvolutionResult, EvolveOptions};
use crate::error::Result;
use crate::graph::Graph;
use crate::median::{walk_evolve, MedianGraph, WalkResult};
use crate::seed::derive_seed;

#[derive(Clone, Debug, Serialize)]
pub struct SingleReport {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    /// Set when the graph was generated rather than read.
    pub seed: Option<u64>,
    pub independent_sets: Option<usize>,
    pub mis: Vec<usize>,
    pub mis_size: usize,
    pub greedy: Vec<usize>,
    pub greedy_size: usize,
    pub t_total: f64,
    pub omega0: f64,
    pub schedule: String,
    pub evolution: Option<EvolutionResult>,
    pub evolution_error: Option<String>,
    /// Median-graph walk with Ω = Ω_max and Δ = 0 up to `s_end`.
    pub walk: Option<WalkResult>,
    pub walk_error: Option<String>,
    pub bound_params: BoundParams,
    pub bound: LeakageBoundReport,
    pub approx_adiabatic_ratio: f64,
}

/// Runs the full anneal, the walk and the bound on `graph`, or on the ER
/// graph for the first configured n when no graph is given.
pub fn run_single(cfg: &ExperimentConfig, graph: Option<Graph>) -> Result<SingleReport> {
    cfg.validate()?;
    let (g, seed) = match graph {
        Some(g) => (g, None),
        None => {
            let n = cfg.n_list[0];
            let seed = derive_seed(cfg.master_seed, n as u64, 0);
            (Graph::erdos_renyi(n, cfg.p, seed)?, Some(seed))
        }
    };
    let n = g.n();
    let params = cfg.anneal_params(n)?;
    let mis = g.exact_mis()?;
    let greedy = g.greedy_mis();
    let bp = BoundParams::from_anneal(&params, n)?;

    let opts = EvolveOptions {
        tol: cfg.tol,
        max_qubits: cfg.max_full_n,
        ..Default::default()
    };
    let (evolution, evolution_error) = match evolve_full_with(&g, &params, cfg.s_end, &opts) {
        Ok(r) => (Some(r), None),
        Err(e) => (None, Some(e.to_string())),
    };
    let mg = MedianGraph::build_with_limit(&g, cfg.max_walk_states);
    let independent_sets = mg.as_ref().ok().map(MedianGraph::len);
    let walk = mg.and_then(|mg| {
        walk_evolve(&mg, params.schedule.omega_max, 0.0, params.t_total, cfg.s_end, 1e-12)
    });
    let (walk, walk_error) = match walk {
        Ok(w) => (Some(w), None),
        Err(e) => (None, Some(e.to_string())),
    };
    Ok(SingleReport {
        n,
        edges: g.edges().to_vec(),
        seed,
        independent_sets,
        mis_size: mis.len(),
        mis: mis.vertices().collect(),
        greedy_size: greedy.len(),
        greedy: greedy.vertices().collect(),
        t_total: params.t_total,
        omega0: params.omega0,
        schedule: params.schedule.name().to_string(),
        evolution,
        evolution_error,
        walk,
        walk_error,
        bound: leakage_upper_bound(&bp),
        approx_adiabatic_ratio: approx_adiabatic_ratio(&bp),
        bound_params: bp,
    })
}
