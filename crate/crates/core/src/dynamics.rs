//! Full 2ⁿ Schrödinger propagation under H₀(s) and the observables read off
//! the final state.
//!
//! The propagator splits H₀ into its diagonal part (detuning plus blockade,
//! integrated exactly as phases) and the transverse drive ½ΩT Σσˣ (applied
//! exactly as a product of single-site rotations). Strang splitting of the
//! two exact flows, composed with the Yoshida triple-jump coefficients, gives
//! a fourth-order scheme whose every factor is unitary; norm drift is pure
//! round-off. Accuracy is certified by step doubling instead of a priori
//! error estimates.

use std::collections::BTreeMap;

use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::hilbert::{AnnealParams, BasisTable, DEFAULT_MAX_QUBITS};
use crate::seed::{seeded_rng, unit_f64};
pub use crate::state::StateVector;

/// Knobs for [`evolve_full_with`].
#[derive(Clone, Debug)]
pub struct EvolveOptions {
    /// Maximum change of any reported probability when the step is halved.
    pub tol: f64,
    /// Optional relative tolerance on the leakage itself, for runs where the
    /// leakage is far below `tol` but still has to be resolved.
    pub leakage_rtol: Option<f64>,
    /// Cap on the number of fourth-order steps in the finest run.
    pub max_steps: usize,
    pub max_qubits: usize,
    /// Overrides the automatic first step count.
    pub initial_steps: Option<usize>,
}

impl Default for EvolveOptions {
    fn default() -> Self {
        EvolveOptions {
            tol: 1e-6,
            leakage_rtol: None,
            max_steps: 1 << 22,
            max_qubits: DEFAULT_MAX_QUBITS,
            initial_steps: None,
        }
    }
}

impl EvolveOptions {
    pub fn with_tol(tol: f64) -> Self {
        EvolveOptions {
            tol,
            ..Default::default()
        }
    }
}

/// Probability of measuring an independent set of a given size.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct SizeProbability {
    pub unconditioned: f64,
    /// Divided by the independent-set probability; absent when that is zero.
    pub conditioned: Option<f64>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SizeDistribution {
    pub p_is: f64,
    pub sizes: BTreeMap<usize, SizeProbability>,
}

impl SizeDistribution {
    pub fn conditioned_defined(&self) -> bool {
        self.p_is > 0.0
    }

    /// Mean IS size conditioned on the outcome being an independent set.
    pub fn expected_size(&self) -> Result<f64> {
        if !self.conditioned_defined() {
            return Err(Error::ZeroIsProbability);
        }
        Ok(self
            .sizes
            .iter()
            .map(|(&k, p)| k as f64 * p.unconditioned)
            .sum::<f64>()
            / self.p_is)
    }
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct EvolutionResult {
    pub s_end: f64,
    pub p_is: f64,
    /// Σ |ψ_m|² over non-independent m, summed directly rather than as 1 − p_is.
    pub leakage: f64,
    pub size_probs: SizeDistribution,
    pub expected_is_size: Option<f64>,
    pub norm_drift: f64,
    /// Fourth-order steps used for the reported state.
    pub steps_taken: usize,
    /// Largest probability change between the reported run and the run with
    /// twice the step.
    pub halving_change: f64,
    pub final_state: StateVector,
}

/// Integrates `i dψ/ds = H₀(s)ψ` from |∅⟩ to `s_end`, doubling the step count
/// until the reported probabilities move by less than `tol`.
pub fn evolve_full(g: &Graph, p: &AnnealParams, s_end: f64, tol: f64) -> Result<EvolutionResult> {
    evolve_full_with(g, p, s_end, &EvolveOptions::with_tol(tol))
}

pub fn evolve_full_with(
    g: &Graph,
    p: &AnnealParams,
    s_end: f64,
    opts: &EvolveOptions,
) -> Result<EvolutionResult> {
    if !(s_end > 0.0 && s_end <= 1.0) {
        return Err(Error::Domain(format!("s_end = {s_end} must lie in (0, 1]")));
    }
    if !(opts.tol > 0.0) {
        return Err(Error::Domain(format!("tolerance {} must be positive", opts.tol)));
    }
    let table = BasisTable::with_limit(g, opts.max_qubits)?;
    let prop = SplitPropagator::new(&table, p);

    let mut steps = opts
        .initial_steps
        .unwrap_or_else(|| initial_steps(g, p, s_end))
        .max(1);
    let mut coarse_obs = Observables::of(&table, &prop.run(s_end, steps));
    loop {
        let fine_steps = steps * 2;
        if fine_steps > opts.max_steps {
            return Err(Error::NonConvergence(format!(
                "step doubling still above tolerance {} at {} steps",
                opts.tol, steps
            )));
        }
        let fine = prop.run(s_end, fine_steps);
        let fine_obs = Observables::of(&table, &fine);
        let change = coarse_obs.max_change(&fine_obs);
        let leak_ok = match opts.leakage_rtol {
            None => true,
            Some(rtol) => (coarse_obs.leakage - fine_obs.leakage).abs() <= rtol * fine_obs.leakage,
        };
        if change < opts.tol && leak_ok {
            return Ok(finish(&table, fine, fine_obs, s_end, fine_steps, change));
        }
        coarse_obs = fine_obs;
        steps = fine_steps;
    }
}

/// Propagates with exactly `steps` fourth-order steps, no step control.
pub fn evolve_fixed_steps(
    g: &Graph,
    p: &AnnealParams,
    s_end: f64,
    steps: usize,
) -> Result<StateVector> {
    let table = BasisTable::new(g)?;
    Ok(SplitPropagator::new(&table, p).run(s_end, steps.max(1)))
}

/// First step count: about two steps per unit of the fastest phase the
/// blockade and drive imprint over `[0, s_end]`.
fn initial_steps(g: &Graph, p: &AnnealParams, s_end: f64) -> usize {
    let n = g.n() as f64;
    let sch = &p.schedule;
    let scale = p.omega0 * p.t_total + (sch.delta_max + 0.5 * sch.omega_max) * p.t_total * n;
    ((0.5 * s_end * scale).ceil() as usize).max(4)
}

fn finish(
    table: &BasisTable,
    state: StateVector,
    obs: Observables,
    s_end: f64,
    steps: usize,
    change: f64,
) -> EvolutionResult {
    let dist = distribution_from_table(table, &state);
    let expected_is_size = dist.expected_size().ok();
    EvolutionResult {
        s_end,
        p_is: obs.p_is,
        leakage: obs.leakage,
        expected_is_size,
        norm_drift: (state.norm() - 1.0).abs(),
        size_probs: dist,
        steps_taken: steps,
        halving_change: change,
        final_state: state,
    }
}

/// The quantities compared under step doubling.
struct Observables {
    p_is: f64,
    leakage: f64,
    by_size: Vec<f64>,
}

impl Observables {
    fn of(table: &BasisTable, state: &StateVector) -> Self {
        let mut by_size = vec![0.0; table.n() + 1];
        let mut leakage = 0.0;
        for (m, a) in state.amplitudes().iter().enumerate() {
            let w = a.norm_sqr();
            if table.is_independent(m) {
                by_size[table.occupation()[m] as usize] += w;
            } else {
                leakage += w;
            }
        }
        Observables {
            p_is: by_size.iter().sum(),
            leakage,
            by_size,
        }
    }

    fn max_change(&self, other: &Observables) -> f64 {
        self.by_size
            .iter()
            .zip(&other.by_size)
            .map(|(a, b)| (a - b).abs())
            .fold((self.p_is - other.p_is).abs(), f64::max)
            .max((self.leakage - other.leakage).abs())
    }
}

/// Yoshida triple-jump weights for a symmetric second-order base step.
fn yoshida_weights() -> [f64; 3] {
    let cbrt2 = 2f64.cbrt();
    let outer = 1.0 / (2.0 - cbrt2);
    [outer, 1.0 - 2.0 * outer, outer]
}

struct SplitPropagator<'a> {
    params: &'a AnnealParams,
    n: usize,
    /// `violations * (n + 1) + occupation` for every basis state.
    class: Vec<u32>,
    max_violations: usize,
}

impl<'a> SplitPropagator<'a> {
    fn new(table: &BasisTable, params: &'a AnnealParams) -> Self {
        let n = table.n();
        let class = table
            .violations()
            .iter()
            .zip(table.occupation())
            .map(|(&v, &o)| v as u32 * (n as u32 + 1) + o as u32)
            .collect();
        SplitPropagator {
            params,
            n,
            class,
            max_violations: table.max_violations(),
        }
    }

    fn run(&self, s_end: f64, steps: usize) -> StateVector {
        let mut psi = StateVector::basis(self.class.len(), 0);
        let amps = psi.amplitudes_mut();
        let h = s_end / steps as f64;
        let weights = yoshida_weights();
        let mut phase_table = Vec::new();
        // Diagonal flow still owed from `pending` up to the current time.
        let mut pending = 0.0;
        for k in 0..steps {
            let mut t = k as f64 * h;
            for w in weights {
                let dt = w * h;
                let mid = t + 0.5 * dt;
                self.diagonal_flow(amps, pending, mid, &mut phase_table);
                self.drive_flow(amps, mid, dt);
                pending = mid;
                t += dt;
            }
        }
        self.diagonal_flow(amps, pending, s_end, &mut phase_table);
        psi
    }

    /// Exact propagation under the diagonal part from `from` to `to`.
    fn diagonal_flow(&self, amps: &mut [Complex64], from: f64, to: f64, table: &mut Vec<Complex64>) {
        let p = self.params;
        let blockade = -p.omega0 * p.t_total * (to - from);
        let detuning =
            p.t_total * (p.schedule.delta_integral(to) - p.schedule.delta_integral(from));
        let per_violation: Vec<Complex64> = (0..=self.max_violations)
            .map(|v| Complex64::from_polar(1.0, blockade * v as f64))
            .collect();
        let per_occupation: Vec<Complex64> = (0..=self.n)
            .map(|o| Complex64::from_polar(1.0, detuning * o as f64))
            .collect();
        table.clear();
        for v in &per_violation {
            table.extend(per_occupation.iter().map(|o| v * o));
        }
        for (a, &c) in amps.iter_mut().zip(&self.class) {
            *a *= table[c as usize];
        }
    }

    /// exp(−i dt ½Ω(mid)T Σσˣ), one site at a time.
    fn drive_flow(&self, amps: &mut [Complex64], mid: f64, dt: f64) {
        let theta = 0.5 * self.params.schedule.omega(mid) * self.params.t_total * dt;
        if theta == 0.0 {
            return;
        }
        let (s, c) = theta.sin_cos();
        for j in 0..self.n {
            let stride = 1usize << j;
            for chunk in amps.chunks_exact_mut(2 * stride) {
                let (lo, hi) = chunk.split_at_mut(stride);
                for (a, b) in lo.iter_mut().zip(hi.iter_mut()) {
                    let (x, y) = (*a, *b);
                    // c·x − i s·y and −i s·x + c·y
                    *a = Complex64::new(c * x.re + s * y.im, c * x.im - s * y.re);
                    *b = Complex64::new(c * y.re + s * x.im, c * y.im - s * x.re);
                }
            }
        }
    }
}

fn check_state(state: &StateVector, g: &Graph) -> Result<()> {
    if g.n() >= usize::BITS as usize {
        return Err(Error::Capacity {
            what: format!("2^{} state vector", g.n()),
            limit: DEFAULT_MAX_QUBITS,
        });
    }
    state.check_dim(1usize << g.n())
}

/// Σ |ψ_m|² over independent sets m.
pub fn probability_in_is(state: &StateVector, g: &Graph) -> Result<f64> {
    check_state(state, g)?;
    Ok(state
        .amplitudes()
        .iter()
        .enumerate()
        .filter(|&(m, _)| g.is_independent(VertexSet::from_mask(m as u64)))
        .map(|(_, a)| a.norm_sqr())
        .sum())
}

/// Probability of each IS size, raw and conditioned on landing in an IS.
pub fn size_distribution(state: &StateVector, g: &Graph) -> Result<SizeDistribution> {
    check_state(state, g)?;
    let mut raw: BTreeMap<usize, f64> = BTreeMap::new();
    for (m, a) in state.amplitudes().iter().enumerate() {
        let s = VertexSet::from_mask(m as u64);
        if g.is_independent(s) {
            *raw.entry(s.len()).or_default() += a.norm_sqr();
        }
    }
    Ok(conditioned(raw))
}

fn distribution_from_table(table: &BasisTable, state: &StateVector) -> SizeDistribution {
    let mut raw: BTreeMap<usize, f64> = BTreeMap::new();
    for (m, a) in state.amplitudes().iter().enumerate() {
        if table.is_independent(m) {
            *raw.entry(table.occupation()[m] as usize).or_default() += a.norm_sqr();
        }
    }
    conditioned(raw)
}

fn conditioned(raw: BTreeMap<usize, f64>) -> SizeDistribution {
    let p_is: f64 = raw.values().sum();
    let sizes = raw
        .into_iter()
        .filter(|&(_, w)| w > 0.0)
        .map(|(k, w)| {
            let cond = (p_is > 0.0).then(|| w / p_is);
            (
                k,
                SizeProbability {
                    unconditioned: w,
                    conditioned: cond,
                },
            )
        })
        .collect();
    SizeDistribution { p_is, sizes }
}

/// Mean measured IS size, conditioned on measuring an independent set.
pub fn expected_is_size(state: &StateVector, g: &Graph) -> Result<f64> {
    size_distribution(state, g)?.expected_size()
}

/// Outcome of simulated projective measurements.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SampledSizes {
    pub shots: usize,
    pub is_hits: usize,
    /// Mean size over the shots that returned an independent set.
    pub mean_is_size: Option<f64>,
}

/// Draws `shots` computational-basis measurements of `state` with a seeded
/// generator.
pub fn sample_is_sizes(state: &StateVector, g: &Graph, shots: usize, seed: u64) -> Result<SampledSizes> {
    check_state(state, g)?;
    let probs = state.probabilities();
    let total: f64 = probs.iter().sum();
    let mut rng = seeded_rng(seed);
    let mut hits = 0usize;
    let mut size_sum = 0usize;
    for _ in 0..shots {
        let target = unit_f64(&mut rng) * total;
        let mut acc = 0.0;
        let mut pick = probs.len() - 1;
        for (m, w) in probs.iter().enumerate() {
            acc += w;
            if target < acc {
                pick = m;
                break;
            }
        }
        let s = VertexSet::from_mask(pick as u64);
        if g.is_independent(s) {
            hits += 1;
            size_sum += s.len();
        }
    }
    Ok(SampledSizes {
        shots,
        is_hits: hits,
        mean_is_size: (hits > 0).then(|| size_sum as f64 / hits as f64),
    })
}

#[cfg(test)]
mod tests {
    use std::f64::consts::PI;

    use super::*;
    use crate::graph::tests::example_graph;
    use crate::hilbert::{interaction_phase, Schedule};

    fn mask(v: &[usize]) -> usize {
        VertexSet::from_vertices(v.iter().copied()).mask() as usize
    }

    #[test]
    fn single_atom_rabi_flop() {
        let g = Graph::empty(1).unwrap();
        let p = AnnealParams::new(PI, 1.0, Schedule::constant(1.0, 0.0)).unwrap();
        let r = evolve_full(&g, &p, 1.0, 1e-10).unwrap();
        // P(excited) = sin²(ΩTs/2) = 1.
        assert!((r.final_state.probabilities()[1] - 1.0).abs() < 1e-10);
        assert!(r.norm_drift < 1e-12);

        let r = evolve_full(&g, &p, 0.25, 1e-10).unwrap();
        let expect = (PI * 0.25 / 2.0).sin().powi(2);
        assert!((r.final_state.probabilities()[1] - expect).abs() < 1e-10);
    }

    #[test]
    fn detuned_single_atom_matches_closed_form() {
        // Constant Ω, Δ: generalized Rabi formula P = Ω²/Ω_R² sin²(Ω_R T s / 2).
        let g = Graph::empty(1).unwrap();
        let (omega, delta, t) = (1.3, 0.8, 4.0);
        let p = AnnealParams::new(t, 1.0, Schedule::constant(omega, delta)).unwrap();
        let r = evolve_full(&g, &p, 1.0, 1e-11).unwrap();
        let rabi = (omega * omega + delta * delta).sqrt();
        let expect = (omega / rabi).powi(2) * (rabi * t / 2.0).sin().powi(2);
        assert!((r.final_state.probabilities()[1] - expect).abs() < 1e-9);
    }

    #[test]
    fn zero_drive_stays_empty() {
        let g = example_graph();
        let p = AnnealParams::new(20.0, 3.0, Schedule::constant(0.0, 1.0)).unwrap();
        let r = evolve_full(&g, &p, 1.0, 1e-8).unwrap();
        assert_eq!(r.p_is, 1.0);
        assert!((r.final_state.amplitudes()[0].norm() - 1.0).abs() < 1e-14);
        assert_eq!(r.expected_is_size, Some(0.0));
    }

    #[test]
    fn deep_blockade_anneal_stays_independent() {
        let g = example_graph();
        let p = AnnealParams::new(100.0, 25.0, Schedule::sine_cosine()).unwrap();
        let r = evolve_full(&g, &p, 1.0, 1e-6).unwrap();
        assert!(r.p_is >= 0.99, "p_is {}", r.p_is);
        assert!(r.norm_drift <= 1e-9);
        assert!(r.halving_change < 1e-6);
        let sum: f64 = r.size_probs.sizes.values().map(|p| p.unconditioned).sum();
        assert!((sum + r.leakage - 1.0).abs() < 1e-9);
    }

    #[test]
    fn matches_rk4_reference() {
        // Independent route: classical RK4 on the matrix-free H₀ with a tiny step.
        let g = Graph::erdos_renyi(5, 0.5, 3).unwrap();
        let p = AnnealParams::new(6.0, 4.0, Schedule::sine_cosine()).unwrap();
        let h0 = crate::hilbert::RydbergHamiltonian::new(&g, &p).unwrap();
        let steps = 40_000;
        let dt = 1.0 / steps as f64;
        let mut psi = StateVector::basis(32, 0).into_amplitudes();
        let minus_i = Complex64::new(0.0, -1.0);
        let deriv = |s: f64, x: &[Complex64]| {
            let mut y = vec![Complex64::new(0.0, 0.0); x.len()];
            h0.apply_into(s, x, &mut y);
            y.iter_mut().for_each(|v| *v *= minus_i);
            y
        };
        for k in 0..steps {
            let s = k as f64 * dt;
            let k1 = deriv(s, &psi);
            let tmp: Vec<_> = psi.iter().zip(&k1).map(|(a, b)| a + b * (0.5 * dt)).collect();
            let k2 = deriv(s + 0.5 * dt, &tmp);
            let tmp: Vec<_> = psi.iter().zip(&k2).map(|(a, b)| a + b * (0.5 * dt)).collect();
            let k3 = deriv(s + 0.5 * dt, &tmp);
            let tmp: Vec<_> = psi.iter().zip(&k3).map(|(a, b)| a + b * dt).collect();
            let k4 = deriv(s + dt, &tmp);
            for i in 0..psi.len() {
                psi[i] += (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]) * (dt / 6.0);
            }
        }
        let r = evolve_full(&g, &p, 1.0, 1e-10).unwrap();
        for (a, b) in psi.iter().zip(r.final_state.amplitudes()) {
            assert!((a - b).norm() < 1e-7, "{a} vs {b}");
        }
    }

    #[test]
    fn is_probability_examples() {
        let g = example_graph();
        assert_eq!(probability_in_is(&StateVector::basis(32, 0), &g).unwrap(), 1.0);
        let all: Vec<usize> = (0..32).collect();
        let uniform = StateVector::uniform_over(32, &all);
        assert!((probability_in_is(&uniform, &g).unwrap() - 11.0 / 32.0).abs() < 1e-15);
        let bad = StateVector::basis(32, mask(&[0, 1]));
        assert_eq!(probability_in_is(&bad, &g).unwrap(), 0.0);
        assert!(probability_in_is(&StateVector::zeros(4), &g).is_err());
    }

    #[test]
    fn size_distribution_examples() {
        let g = example_graph();
        let d = size_distribution(&StateVector::basis(32, 0), &g).unwrap();
        assert_eq!(d.sizes[&0].unconditioned, 1.0);
        assert_eq!(d.sizes[&0].conditioned, Some(1.0));

        let psi = StateVector::uniform_over(32, &[mask(&[0]), mask(&[0, 2])]);
        let d = size_distribution(&psi, &g).unwrap();
        for k in [1, 2] {
            assert!((d.sizes[&k].unconditioned - 0.5).abs() < 1e-15);
            assert!((d.sizes[&k].conditioned.unwrap() - 0.5).abs() < 1e-15);
        }

        let leaked = StateVector::basis(32, mask(&[0, 1]));
        let d = size_distribution(&leaked, &g).unwrap();
        assert!(!d.conditioned_defined());
        assert!(matches!(expected_is_size(&leaked, &g), Err(Error::ZeroIsProbability)));
    }

    #[test]
    fn expected_size_examples() {
        let g = example_graph();
        let mis = StateVector::basis(32, mask(&[0, 2, 4]));
        assert_eq!(expected_is_size(&mis, &g).unwrap(), 3.0);
        let half = StateVector::uniform_over(32, &[0, mask(&[0])]);
        assert!((expected_is_size(&half, &g).unwrap() - 0.5).abs() < 1e-15);
    }

    #[test]
    fn distribution_sums_to_is_probability() {
        let g = Graph::erdos_renyi(8, 0.8, 1).unwrap();
        let p = AnnealParams::new(100.0, 64.0, Schedule::sine_cosine()).unwrap();
        let r = evolve_full(&g, &p, 1.0, 1e-5).unwrap();
        let sum: f64 = r.size_probs.sizes.values().map(|p| p.unconditioned).sum();
        assert!((sum - r.p_is).abs() < 1e-9);
        let alpha = g.exact_mis().unwrap().len() as f64;
        assert!(r.expected_is_size.unwrap() <= alpha + 1e-12);
        let direct = size_distribution(&r.final_state, &g).unwrap();
        assert!((direct.p_is - r.p_is).abs() < 1e-14);
    }

    #[test]
    fn picture_invariance() {
        let g = example_graph();
        let p = AnnealParams::new(30.0, 6.0, Schedule::sine_cosine()).unwrap();
        let r = evolve_full(&g, &p, 0.6, 1e-8).unwrap();
        let probs = r.final_state.probabilities();
        for (m, a) in r.final_state.amplitudes().iter().enumerate() {
            let phase = interaction_phase(&g, &p, VertexSet::from_mask(m as u64), 0.6);
            assert!(((a * phase.conj()).norm_sqr() - probs[m]).abs() <= 1e-15);
        }
    }

    #[test]
    fn step_doubling_converges_at_fourth_order() {
        let g = Graph::erdos_renyi(6, 0.5, 8).unwrap();
        let p = AnnealParams::new(10.0, 4.0, Schedule::sine_cosine()).unwrap();
        let reference = evolve_fixed_steps(&g, &p, 1.0, 8192).unwrap();
        let err = |steps| {
            let psi = evolve_fixed_steps(&g, &p, 1.0, steps).unwrap();
            psi.amplitudes()
                .iter()
                .zip(reference.amplitudes())
                .map(|(a, b)| (a - b).norm())
                .fold(0.0, f64::max)
        };
        let (e1, e2) = (err(256), err(512));
        let order = (e1 / e2).log2();
        assert!(order > 3.5 && order < 4.5, "observed order {order}");
    }

    #[test]
    fn sampling_is_deterministic() {
        let g = example_graph();
        let psi = StateVector::uniform_over(32, &[0, mask(&[0, 2]), mask(&[0, 1])]);
        let a = sample_is_sizes(&psi, &g, 500, 7).unwrap();
        let b = sample_is_sizes(&psi, &g, 500, 7).unwrap();
        assert_eq!(a, b);
        // Two of the three outcomes are independent sets, of sizes 0 and 2.
        let frac = a.is_hits as f64 / 500.0;
        assert!((frac - 2.0 / 3.0).abs() < 0.07);
        assert!((a.mean_is_size.unwrap() - 1.0).abs() < 0.15);
    }

    #[test]
    fn rejects_bad_arguments() {
        let g = example_graph();
        let p = AnnealParams::new(1.0, 1.0, Schedule::sine_cosine()).unwrap();
        assert!(evolve_full(&g, &p, 0.0, 1e-6).is_err());
        assert!(evolve_full(&g, &p, 1.5, 1e-6).is_err());
        let big = Graph::empty(23).unwrap();
        assert!(matches!(evolve_full(&big, &p, 1.0, 1e-6), Err(Error::Capacity { .. })));
        let opts = EvolveOptions {
            tol: 1e-14,
            max_steps: 16,
            initial_steps: Some(4),
            ..Default::default()
        };
        let p = AnnealParams::new(50.0, 10.0, Schedule::sine_cosine()).unwrap();
        assert!(matches!(
            evolve_full_with(&g, &p, 1.0, &opts),
            Err(Error::NonConvergence(_))
        ));
    }
}
