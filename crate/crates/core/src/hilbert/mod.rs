//! Computational-basis bookkeeping and the Rydberg Hamiltonian
//!
//! ```text
//! H₀(s) = ½Ω(s)T Σⱼ σˣⱼ − Δ(s)T Σⱼ nⱼ + ω₀T Σ₍ᵢⱼ₎∈E nᵢnⱼ
//! ```
//!
//! in scaled time `s ∈ [0, 1]` with ħ = 1, so states obey `i dψ/ds = H₀(s)ψ`.
//! Basis state `m` is the bitmask of excited vertices.

pub(crate) mod schedule;

use num_complex::Complex64;

pub use schedule::{Profile, Schedule};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::state::StateVector;

/// Computational basis state; the index is the vertex bitmask.
pub type BasisState = VertexSet;

/// Largest vertex count for which a full 2ⁿ state vector may be allocated.
pub const DEFAULT_MAX_QUBITS: usize = 22;

/// Runtime, blockade strength and drive profile of one anneal.
#[derive(Clone, Debug)]
pub struct AnnealParams {
    pub t_total: f64,
    pub omega0: f64,
    pub schedule: Schedule,
}

impl AnnealParams {
    pub fn new(t_total: f64, omega0: f64, schedule: Schedule) -> Result<Self> {
        if !(t_total.is_finite() && t_total > 0.0) {
            return Err(Error::Domain(format!("total time T = {t_total} must be positive")));
        }
        if !(omega0.is_finite() && omega0 > 0.0) {
            return Err(Error::Domain(format!("blockade strength ω₀ = {omega0} must be positive")));
        }
        Ok(AnnealParams {
            t_total,
            omega0,
            schedule,
        })
    }
}

/// Per-basis-state occupation `n_m` and violated-edge count `N_e(m)`.
#[derive(Clone, Debug)]
pub struct BasisTable {
    n: usize,
    occupation: Vec<u8>,
    violations: Vec<u16>,
}

impl BasisTable {
    pub fn new(g: &Graph) -> Result<Self> {
        Self::with_limit(g, DEFAULT_MAX_QUBITS)
    }

    pub fn with_limit(g: &Graph, max_qubits: usize) -> Result<Self> {
        let n = g.n();
        if n > max_qubits {
            return Err(Error::Capacity {
                what: format!("2^{n} state vector"),
                limit: max_qubits,
            });
        }
        let dim = 1usize << n;
        let mut occupation = vec![0u8; dim];
        let mut violations = vec![0u16; dim];
        for m in 1..dim {
            let v = m.trailing_zeros() as usize;
            let rest = m & (m - 1);
            occupation[m] = occupation[rest] + 1;
            violations[m] = violations[rest] + (g.neighbors(v) & rest as u64).count_ones() as u16;
        }
        Ok(BasisTable {
            n,
            occupation,
            violations,
        })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.occupation.len()
    }

    pub fn occupation(&self) -> &[u8] {
        &self.occupation
    }

    pub fn violations(&self) -> &[u16] {
        &self.violations
    }

    pub fn is_independent(&self, m: usize) -> bool {
        self.violations[m] == 0
    }

    pub fn max_violations(&self) -> usize {
        self.violations.last().copied().unwrap_or(0) as usize
    }
}

/// Matrix-free H₀(s) for one graph and parameter set.
#[derive(Clone, Debug)]
pub struct RydbergHamiltonian<'a> {
    params: &'a AnnealParams,
    table: BasisTable,
}

impl<'a> RydbergHamiltonian<'a> {
    pub fn new(g: &Graph, params: &'a AnnealParams) -> Result<Self> {
        Ok(RydbergHamiltonian {
            params,
            table: BasisTable::new(g)?,
        })
    }

    pub fn table(&self) -> &BasisTable {
        &self.table
    }

    pub fn dim(&self) -> usize {
        self.table.dim()
    }

    pub fn diagonal(&self, m: usize, s: f64) -> f64 {
        let p = self.params;
        let delta = p.schedule.delta(s);
        -delta * p.t_total * self.table.occupation[m] as f64
            + p.omega0 * p.t_total * self.table.violations[m] as f64
    }

    /// `y = H₀(s)x`.
    pub fn apply_into(&self, s: f64, x: &[Complex64], y: &mut [Complex64]) {
        let p = self.params;
        let (omega, delta) = p.schedule.at(s);
        let hop = 0.5 * omega * p.t_total;
        let det = delta * p.t_total;
        let block = p.omega0 * p.t_total;
        let n = self.table.n;
        for (m, out) in y.iter_mut().enumerate() {
            let diag =
                -det * self.table.occupation[m] as f64 + block * self.table.violations[m] as f64;
            let mut flips = Complex64::new(0.0, 0.0);
            for j in 0..n {
                flips += x[m ^ (1 << j)];
            }
            *out = x[m] * diag + flips * hop;
        }
    }

    pub fn apply(&self, s: f64, x: &StateVector) -> Result<StateVector> {
        x.check_dim(self.dim())?;
        let mut y = StateVector::zeros(self.dim());
        self.apply_into(s, x.amplitudes(), y.amplitudes_mut());
        Ok(y)
    }
}

/// Diagonal entry `−Δ(s)T·n_m + ω₀T·N_e(m)`.
pub fn diagonal_energy(g: &Graph, m: BasisState, s: f64, p: &AnnealParams) -> f64 {
    -p.schedule.delta(s) * p.t_total * m.len() as f64
        + p.omega0 * p.t_total * g.violated_edges(m) as f64
}

/// `H₀(s)x` without storing the 2ⁿ × 2ⁿ matrix.
pub fn apply_h0(g: &Graph, p: &AnnealParams, s: f64, x: &StateVector) -> Result<StateVector> {
    RydbergHamiltonian::new(g, p)?.apply(s, x)
}

/// Diagonal element of the interaction-picture transform,
/// `exp(−i(E_m s − n_m T∫₀ˢΔ))` with `E_m = N_e(m)ω₀T`.
pub fn interaction_phase(g: &Graph, p: &AnnealParams, m: BasisState, s: f64) -> Complex64 {
    let e_m = g.violated_edges(m) as f64 * p.omega0 * p.t_total;
    let detuning_phase = m.len() as f64 * p.t_total * p.schedule.delta_integral(s);
    Complex64::from_polar(1.0, -(e_m * s - detuning_phase))
}

/// Applies U_I(s)† to `psi`, moving a Schrödinger-picture state into the
/// interaction picture.
pub fn to_interaction_picture(
    g: &Graph,
    p: &AnnealParams,
    s: f64,
    psi: &StateVector,
) -> Result<StateVector> {
    psi.check_dim(1usize << g.n())?;
    let amps = psi
        .amplitudes()
        .iter()
        .enumerate()
        .map(|(m, a)| a * interaction_phase(g, p, VertexSet::from_mask(m as u64), s).conj())
        .collect();
    Ok(StateVector::from_amplitudes(amps))
}
