//! Magnus-expansion estimates for leakage out of the independent-set
//! subspace, and the related constants.
//!
//! The unit interval is cut into `L = ω₀T/2π` pieces of length
//! `τ = 2π/(ω₀T)`; the leakage amplitude `√(1 − P_IS)` is bounded by a
//! series in `nτ` whose first two orders are kept here.

use std::f64::consts::PI;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{AnnealParams, Schedule};

/// `∫₀^{2π} dx / (4 + x(1 − cot(x/2)))`.
pub const XI: f64 = 1.0868687;

/// Share of the kept terms the next-order estimate may reach before a
/// bound stops being labeled certified.
pub const TAIL_FRACTION: f64 = 0.05;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct BoundParams {
    pub omega_max: f64,
    pub delta_max: f64,
    pub lipschitz_k: f64,
    pub t_total: f64,
    pub omega0: f64,
    pub n: usize,
    pub tau: f64,
    pub intervals_l: f64,
    /// Set when `ω₀T/2π` is more than 1e-9 away from an integer.
    pub non_integer_l: bool,
    pub a1: f64,
    pub a2: f64,
    pub a3: f64,
    pub a4: f64,
    pub xi: f64,
    /// False when the schedule's detuning varies within intervals.
    pub delta_piecewise_constant: bool,
}

pub fn derive_constants(
    omega_max: f64,
    delta_max: f64,
    lipschitz_k: f64,
    t_total: f64,
    omega0: f64,
    n: usize,
) -> Result<BoundParams> {
    if !(t_total > 0.0) || !(omega0 > 0.0) {
        return Err(Error::Domain(format!(
            "T = {t_total} and omega0 = {omega0} must be positive"
        )));
    }
    for (name, v) in [("omega_max", omega_max), ("delta_max", delta_max), ("K", lipschitz_k)] {
        if !(v >= 0.0) || !v.is_finite() {
            return Err(Error::Domain(format!("{name} = {v} must be finite and nonnegative")));
        }
    }
    let t = t_total;
    let intervals_l = omega0 * t / (2.0 * PI);
    Ok(BoundParams {
        omega_max,
        delta_max,
        lipschitz_k,
        t_total,
        omega0,
        n,
        tau: 2.0 * PI / (omega0 * t),
        intervals_l,
        non_integer_l: (intervals_l - intervals_l.round()).abs() > 1e-9,
        a1: omega_max * t / 2.0,
        a2: omega_max * omega_max * t * t / 8.0,
        a3: (omega_max * delta_max * t * t + 2.0 * PI * lipschitz_k * t) / (4.0 * PI),
        a4: (PI + 1.0) * omega_max * delta_max * delta_max * t.powi(3) / (8.0 * PI * PI),
        xi: XI,
        delta_piecewise_constant: true,
    })
}

impl BoundParams {
    pub fn from_anneal(p: &AnnealParams, n: usize) -> Result<Self> {
        let s = &p.schedule;
        let mut bp = derive_constants(s.omega_max, s.delta_max, s.lipschitz_k, p.t_total, p.omega0, n)?;
        bp.delta_piecewise_constant = s.delta_is_constant();
        Ok(bp)
    }

    /// `Ω_max T n τ`, the expansion parameter of the Magnus series.
    pub fn expansion_parameter(&self) -> f64 {
        self.omega_max * self.t_total * self.n as f64 * self.tau
    }
}

/// `π Ω_max n / ω₀ < 1`.
pub fn magnus_convergence_check(bp: &BoundParams) -> bool {
    PI * bp.omega_max * bp.n as f64 / bp.omega0 < 1.0
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct LeakageBoundReport {
    pub leading_term: f64,
    pub second_term: f64,
    /// Bound on `√(1 − P_IS)` from the two kept orders.
    pub truncated_bound: f64,
    /// Estimate of the first dropped order, `(a₁³a₃ + (π/16)Ω_max⁴T⁴)n⁴τ³`.
    pub tail_estimate: f64,
    pub convergence_ok: bool,
    /// Convergence holds and the tail estimate is below
    /// [`TAIL_FRACTION`] of the kept terms.
    pub certified: bool,
    pub asymptotic_value: f64,
    pub annotations: Vec<String>,
}

pub fn leakage_upper_bound(bp: &BoundParams) -> LeakageBoundReport {
    let n = bp.n as f64;
    let ot = bp.omega_max * bp.t_total;
    let leading_term = bp.a1 * bp.a3 * n * n * bp.tau;
    let second_term = (bp.a1 * bp.a1 * bp.a3 + PI / 8.0 * ot.powi(3)) * n.powi(3) * bp.tau.powi(2);
    let tail_estimate = (bp.a1.powi(3) * bp.a3 + PI / 16.0 * ot.powi(4)) * n.powi(4) * bp.tau.powi(3);
    let truncated_bound = leading_term + second_term;
    let convergence_ok = magnus_convergence_check(bp);
    let certified = convergence_ok && tail_estimate <= TAIL_FRACTION * truncated_bound;

    let mut annotations = Vec::new();
    if !convergence_ok {
        annotations.push("convergence condition fails; bound not certified".to_string());
    }
    if bp.non_integer_l {
        annotations.push(format!(
            "omega0*T/2pi = {} is not an integer; tau used as is",
            bp.intervals_l
        ));
    }
    if bp.delta_max > 0.0 && !bp.delta_piecewise_constant {
        annotations.push("detuning varies inside intervals; derivation assumes it constant".to_string());
    }
    LeakageBoundReport {
        leading_term,
        second_term,
        truncated_bound,
        tail_estimate,
        convergence_ok,
        certified,
        asymptotic_value: asymptotic_value(bp, bp.tau * n * n),
        annotations,
    }
}

fn asymptotic_value(bp: &BoundParams, tau0: f64) -> f64 {
    let ot = bp.omega_max * bp.t_total;
    ot / (8.0 * PI)
        * (bp.omega_max * bp.delta_max * bp.t_total * bp.t_total + 2.0 * PI * bp.lipschitz_k * bp.t_total)
        * tau0
}

/// Large-n limit of the leading term when `τ = τ₀ n⁻²`.
pub fn asymptotic_leakage(bp: &BoundParams, tau0: f64) -> Result<f64> {
    if !(tau0 > 0.0) {
        return Err(Error::Domain(format!("tau0 = {tau0} must be positive")));
    }
    Ok(asymptotic_value(bp, tau0))
}

/// `π(Ω_max T/2)^k (nτ)^k`, bounding the k-th Magnus term over one interval.
pub fn magnus_term_norm_bound(bp: &BoundParams, k: u32) -> Result<f64> {
    check_order(k)?;
    Ok(PI * (bp.a1 * bp.n as f64 * bp.tau).powi(k as i32))
}

/// The sharper intermediate form `π(τΩ_max T n / 2ξ)^k`.
pub fn magnus_term_norm_bound_xi(bp: &BoundParams, k: u32) -> Result<f64> {
    check_order(k)?;
    Ok(PI * (bp.tau * bp.omega_max * bp.t_total * bp.n as f64 / (2.0 * bp.xi)).powi(k as i32))
}

fn check_order(k: u32) -> Result<()> {
    if k == 0 {
        return Err(Error::Domain("Magnus order starts at 1".to_string()));
    }
    Ok(())
}

/// Spectral radius bound `m·w` for a matrix with at most `m` nonzeros per
/// row, each of modulus at most `w`.
pub fn spectral_radius_bound(rows_nonzero: usize, max_entry: f64) -> f64 {
    rows_nonzero as f64 * max_entry
}

/// Interaction-picture coupling between a state with `n_e` violated edges and
/// its IS neighbor: `(Ω(s)T/2)·exp(iT∫₀ˢ[n_e ω₀ − Δ])`.
pub fn hopping_coefficient(bp: &BoundParams, schedule: &Schedule, n_e: usize, s: f64) -> Result<Complex64> {
    if n_e == 0 {
        return Err(Error::Domain("hopping needs at least one violated edge".to_string()));
    }
    let t = bp.t_total;
    let phase = t * (n_e as f64 * bp.omega0 * s - schedule.delta_integral(s));
    Ok(Complex64::from_polar(schedule.omega(s) * t / 2.0, phase))
}

/// `max Ω / 2ω₀`, the usual heuristic adiabaticity figure.
pub fn approx_adiabatic_ratio(bp: &BoundParams) -> f64 {
    bp.omega_max / (2.0 * bp.omega0)
}
