//! The independent-set lattice ("median graph") and the continuous-time walk
//! generated by the blockade-projected Hamiltonian
//! `H_eff = T(½Ω A − Δ D)`, with `A` the lattice adjacency and `D` the
//! diagonal of occupation numbers.

use std::fmt::Write as _;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, DEFAULT_IS_LIMIT};
use crate::state::StateVector;

#[derive(Clone, Debug)]
pub struct MedianGraph {
    source: Graph,
    nodes: Vec<VertexSet>,
    adjacency: Vec<(usize, usize)>,
    occupation: Vec<u32>,
    /// Per-node neighbor lists, for the matvec.
    links: Vec<Vec<usize>>,
}

impl MedianGraph {
    pub fn build(g: &Graph) -> Result<Self> {
        Self::build_with_limit(g, DEFAULT_IS_LIMIT)
    }

    pub fn build_with_limit(g: &Graph, limit: usize) -> Result<Self> {
        let nodes = g.enumerate_independent_sets_with_limit(limit)?;
        let masks: Vec<u64> = nodes.iter().map(|s| s.mask()).collect();
        let mut adjacency = Vec::new();
        let mut links = vec![Vec::new(); nodes.len()];
        for (i, s) in nodes.iter().enumerate() {
            // Removing one vertex of an IS always leaves an IS, so every
            // lattice edge is found once from its larger end.
            for v in s.vertices() {
                let below = s.mask() & !(1u64 << v);
                let j = masks
                    .binary_search(&below)
                    .expect("subsets of independent sets are independent");
                adjacency.push((j, i));
                links[i].push(j);
                links[j].push(i);
            }
        }
        adjacency.sort_unstable();
        let occupation = nodes.iter().map(|s| s.len() as u32).collect();
        Ok(MedianGraph {
            source: g.clone(),
            nodes,
            adjacency,
            occupation,
            links,
        })
    }

    pub fn source_graph(&self) -> &Graph {
        &self.source
    }

    /// IS masks in ascending order; node 0 is the empty set.
    pub fn nodes(&self) -> &[VertexSet] {
        &self.nodes
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    /// Pairs `(i, j)`, `i < j`, whose masks differ in one bit.
    pub fn adjacency(&self) -> &[(usize, usize)] {
        &self.adjacency
    }

    pub fn occupation(&self) -> &[u32] {
        &self.occupation
    }

    pub fn index_of(&self, s: VertexSet) -> Option<usize> {
        self.nodes.binary_search_by_key(&s.mask(), |v| v.mask()).ok()
    }

    pub fn max_degree(&self) -> usize {
        self.links.iter().map(Vec::len).max().unwrap_or(0)
    }

    pub fn max_occupation(&self) -> u32 {
        self.occupation.iter().copied().max().unwrap_or(0)
    }

    /// Text export: `N E`, then one mask per line (decimal), then one
    /// `i j` adjacency pair per line.
    pub fn to_text(&self) -> String {
        let mut out = format!("{} {}\n", self.nodes.len(), self.adjacency.len());
        for s in &self.nodes {
            let _ = writeln!(out, "{}", s.mask());
        }
        for (i, j) in &self.adjacency {
            let _ = writeln!(out, "{i} {j}");
        }
        out
    }

    fn apply_into(&self, omega: f64, delta: f64, t: f64, x: &[Complex64], y: &mut [Complex64]) {
        let hop = 0.5 * omega * t;
        let det = delta * t;
        for (i, out) in y.iter_mut().enumerate() {
            let mut acc = x[i] * (-det * self.occupation[i] as f64);
            for &j in &self.links[i] {
                acc += x[j] * hop;
            }
            *out = acc;
        }
    }
}

pub fn build_median_graph(g: &Graph) -> Result<MedianGraph> {
    MedianGraph::build(g)
}

/// `T(½Ω A − Δ D) x`.
pub fn apply_h_eff(mg: &MedianGraph, omega: f64, delta: f64, t: f64, x: &StateVector) -> Result<StateVector> {
    x.check_dim(mg.len())?;
    let mut y = vec![Complex64::new(0.0, 0.0); mg.len()];
    mg.apply_into(omega, delta, t, x.amplitudes(), &mut y);
    Ok(StateVector::from_amplitudes(y))
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct WalkResult {
    pub s_end: f64,
    pub state: StateVector,
    /// Probability on size-2 independent sets.
    pub p2: f64,
    /// Probability by IS size, indexed by size.
    pub size_probs: Vec<f64>,
    pub norm_drift: f64,
}

const MAX_TAYLOR_TERMS: usize = 80;

/// `exp(−i H_eff s_end)|∅⟩` by a Taylor series on substeps short enough that
/// ‖H_eff h‖ ≤ ½. Each substep series stops once the last term drops below
/// `tol / substeps`; with the ½ contraction that term also bounds the
/// discarded remainder.
pub fn walk_evolve(
    mg: &MedianGraph,
    omega: f64,
    delta: f64,
    t: f64,
    s_end: f64,
    tol: f64,
) -> Result<WalkResult> {
    if !(s_end >= 0.0) || !s_end.is_finite() {
        return Err(Error::Domain(format!("s_end = {s_end} must be finite and nonnegative")));
    }
    if !(tol > 0.0) {
        return Err(Error::Domain(format!("tolerance {tol} must be positive")));
    }
    let dim = mg.len();
    let mut psi = vec![Complex64::new(0.0, 0.0); dim];
    psi[0] = Complex64::new(1.0, 0.0);

    let norm_bound = t.abs()
        * (0.5 * omega.abs() * mg.max_degree() as f64 + delta.abs() * mg.max_occupation() as f64);
    let substeps = ((norm_bound * s_end / 0.5).ceil() as usize).max(1);
    let h = s_end / substeps as f64;
    let cutoff = (tol / substeps as f64).max(f64::EPSILON * 1e-3);
    let mut term = vec![Complex64::new(0.0, 0.0); dim];
    let mut next = vec![Complex64::new(0.0, 0.0); dim];
    if s_end > 0.0 {
        for _ in 0..substeps {
            term.copy_from_slice(&psi);
            let mut converged = false;
            for k in 1..=MAX_TAYLOR_TERMS {
                mg.apply_into(omega, delta, t, &term, &mut next);
                // term_k = (−i h / k) H term_{k−1}
                let scale = Complex64::new(0.0, -h / k as f64);
                let mut size = 0.0;
                for (a, b) in term.iter_mut().zip(&next) {
                    *a = b * scale;
                    size += a.norm_sqr();
                }
                for (p, a) in psi.iter_mut().zip(&term) {
                    *p += a;
                }
                if size.sqrt() < cutoff {
                    converged = true;
                    break;
                }
            }
            if !converged {
                return Err(Error::NonConvergence(format!(
                    "Taylor series did not reach {cutoff:e} in {MAX_TAYLOR_TERMS} terms"
                )));
            }
        }
    }

    let state = StateVector::from_amplitudes(psi);
    let mut size_probs = vec![0.0; mg.max_occupation() as usize + 1];
    for (a, &k) in state.amplitudes().iter().zip(&mg.occupation) {
        size_probs[k as usize] += a.norm_sqr();
    }
    Ok(WalkResult {
        s_end,
        p2: size_probs.get(2).copied().unwrap_or(0.0),
        norm_drift: (state.norm() - 1.0).abs(),
        size_probs,
        state,
    })
}

/// Short-time size-2 formula `(1/8)Ω²T²s⁴(n(n−1)/2 − m)²`, evaluated as
/// written for figure reproduction.
pub fn p2_short_time(n: usize, m: usize, omega: f64, t: f64, s: f64) -> f64 {
    let missing = (n * n.saturating_sub(1)) as f64 / 2.0 - m as f64;
    omega * omega * t * t * s.powi(4) * missing * missing / 8.0
}

/// Leading s⁴ term of P₂ taken straight from the lattice:
/// `Σᵢ (s⁴/4)|⟨ψ₂ᵢ|H_eff²|ψ₀⟩|²` with Δ = 0.
pub fn p2_perturbative_oracle(mg: &MedianGraph, omega: f64, t: f64, s: f64) -> f64 {
    let e0 = StateVector::basis(mg.len(), 0);
    let once = apply_h_eff(mg, omega, 0.0, t, &e0).expect("dimension matches by construction");
    let twice = apply_h_eff(mg, omega, 0.0, t, &once).expect("dimension matches by construction");
    let weight: f64 = twice
        .amplitudes()
        .iter()
        .zip(mg.occupation())
        .filter(|&(_, &k)| k == 2)
        .map(|(a, _)| a.norm_sqr())
        .sum();
    s.powi(4) / 4.0 * weight
}

/// Dense-graph lower bound `(0.5 − c)²Ω²T²κ⁴/8`, for edge density
/// constant `c ∈ [0, 0.5]`.
pub fn p2_asymptotic_lower_bound(c: f64, omega: f64, t: f64, kappa: f64) -> Result<f64> {
    if !(0.0..=0.5).contains(&c) {
        return Err(Error::Domain(format!("density constant c = {c} must lie in [0, 0.5]")));
    }
    Ok((0.5 - c).powi(2) * omega * omega * t * t * kappa.powi(4) / 8.0)
}
