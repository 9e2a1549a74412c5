//! Acceptance suite: one check per criterion, one PASS/FAIL line each.
//!
//! Runs as a plain binary (`harness = false`) so the lines are visible in
//! `cargo test` output. The two full sweeps (criteria 7 and 8) dominate the
//! runtime.

use std::f64::consts::PI;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::process::ExitCode;
use std::time::Instant;

use nalgebra::{Complex, DMatrix, SymmetricEigen};
use num_complex::Complex64;
use rydberg_mis::bounds::{leakage_upper_bound, spectral_radius_bound, BoundParams};
use rydberg_mis::dynamics::{evolve_full_with, EvolveOptions};
use rydberg_mis::experiment::{run_fig3, run_fig4, ExperimentConfig, ExperimentKind};
use rydberg_mis::hilbert::apply_h0;
use rydberg_mis::median::{p2_perturbative_oracle, p2_short_time, walk_evolve, MedianGraph};
use rydberg_mis::seed::{derive_seed, seeded_rng, unit_f64};
use rydberg_mis::{AnnealParams, Graph, Schedule, StateVector, VertexSet};

/// Norm drifts seen by every evolution in the suite, for criterion 9.
#[derive(Default)]
struct Drift {
    max: f64,
    count: usize,
}

impl Drift {
    fn see(&mut self, d: f64) {
        self.max = self.max.max(d);
        self.count += 1;
    }
}

type Outcome = Result<String, String>;

fn check(cond: bool, pass: String, fail: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(pass)
    } else {
        Err(fail())
    }
}

fn tight(tol: f64, leakage_rtol: Option<f64>) -> EvolveOptions {
    EvolveOptions {
        tol,
        leakage_rtol,
        ..Default::default()
    }
}

fn criterion_1(_: &mut Drift) -> Outcome {
    let start = Instant::now();
    let g = Graph::new(5, [(0, 1), (1, 2), (0, 3), (3, 4), (1, 3), (1, 4)]).unwrap();
    let sets = g.enumerate_independent_sets().unwrap().len();
    let mg = MedianGraph::build(&g).unwrap();
    let mis = g.exact_mis().unwrap();
    let secs = start.elapsed().as_secs_f64();
    let ok = sets == 11
        && mg.len() == 11
        && mg.adjacency().len() == 16
        && mis == VertexSet::from_vertices([0, 2, 4])
        && secs < 1.0;
    check(
        ok,
        format!("11 sets, 16 adjacencies, MIS {mis} in {secs:.3}s"),
        || format!("sets={sets} adjacencies={} MIS={mis} time={secs:.3}s", mg.adjacency().len()),
    )
}

fn criterion_2(drift: &mut Drift) -> Outcome {
    let (omega, t) = (1.0, 2.0);
    let mut checked = 0;
    let mut violations = Vec::new();
    let mut worst_ratio: f64 = 0.0;
    for n in 6..=10usize {
        for k in 0..4u64 {
            let g = Graph::erdos_renyi(n, 0.5, derive_seed(2, n as u64, k)).unwrap();
            let delta = (k % 2) as f64;
            // τ small enough that Ω_max T n τ = 0.04.
            let l = 25.0 * (omega * t * n as f64).ceil();
            let params = AnnealParams::new(t, 2.0 * PI * l / t, Schedule::constant(omega, delta)).unwrap();
            let report = leakage_upper_bound(&BoundParams::from_anneal(&params, n).unwrap());
            if !(report.convergence_ok && report.certified) {
                return Err(format!("n={n} k={k}: bound not certified ({:?})", report.annotations));
            }
            let r = evolve_full_with(&g, &params, 1.0, &tight(1e-8, Some(1e-3))).unwrap();
            drift.see(r.norm_drift);
            let amp = r.leakage.sqrt();
            worst_ratio = worst_ratio.max(amp / report.truncated_bound);
            if amp > report.truncated_bound {
                violations.push(format!("n={n} k={k}: {amp:.3e} > {:.3e}", report.truncated_bound));
            }
            checked += 1;
        }
    }
    check(
        violations.is_empty() && checked >= 20,
        format!("{checked} certified instances, 0 violations, max sqrt(leak)/bound = {worst_ratio:.3}"),
        || violations.join("; "),
    )
}

fn criterion_3(drift: &mut Drift) -> Outcome {
    let n = 8usize;
    let suite = 10u64;
    let mut suppressed = 0;
    let mut pairs = Vec::new();
    for k in 0..suite {
        let g = Graph::erdos_renyi(n, 0.8, derive_seed(3, n as u64, k)).unwrap();
        let leak = |c: f64, drift: &mut Drift| {
            let p = AnnealParams::new(100.0, c * (n * n) as f64, Schedule::sine_cosine()).unwrap();
            let r = evolve_full_with(&g, &p, 1.0, &tight(1e-6, Some(1e-2))).unwrap();
            drift.see(r.norm_drift);
            r.leakage
        };
        let (weak, strong) = (leak(1.0, drift), leak(4.0, drift));
        if weak > strong {
            suppressed += 1;
        }
        pairs.push(format!("{weak:.2e}/{strong:.2e}"));
    }
    let frac = suppressed as f64 / suite as f64;
    check(
        frac >= 0.9,
        format!("{suppressed}/{suite} instances leak less at 4n^2 (leak n^2 / 4n^2: {})", pairs.join(" ")),
        || format!("only {suppressed}/{suite}: {}", pairs.join(" ")),
    )
}

/// Ten walks for criteria 4 and 5, with p2 on a log grid of s.
struct QuarticSuite {
    slopes: Vec<f64>,
    ratios: Vec<f64>,
    table: Vec<String>,
}

fn quartic_suite(drift: &mut Drift) -> QuarticSuite {
    let (omega, t) = (1.0, 1.0);
    let grid: Vec<f64> = (0..10).map(|i| 1e-3 * 10f64.powf(i as f64 / 9.0) / (omega * t)).collect();
    let mut out = QuarticSuite {
        slopes: Vec::new(),
        ratios: Vec::new(),
        table: Vec::new(),
    };
    for k in 0..10u64 {
        let n = [6usize, 8, 10][k as usize % 3];
        let g = Graph::erdos_renyi(n, 0.5, derive_seed(4, n as u64, k)).unwrap();
        let mg = MedianGraph::build(&g).unwrap();
        let p2: Vec<f64> = grid
            .iter()
            .map(|&s| {
                let w = walk_evolve(&mg, omega, 0.0, t, s, 1e-16).unwrap();
                drift.see(w.norm_drift);
                w.p2
            })
            .collect();
        // Least-squares slope of log p2 against log s.
        let xs: Vec<f64> = grid.iter().map(|s| s.ln()).collect();
        let ys: Vec<f64> = p2.iter().map(|p| p.ln()).collect();
        let (mx, my) = (xs.iter().sum::<f64>() / 10.0, ys.iter().sum::<f64>() / 10.0);
        let sxy: f64 = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum();
        let sxx: f64 = xs.iter().map(|x| (x - mx).powi(2)).sum();
        out.slopes.push(sxy / sxx);
        let s0 = grid[0];
        let oracle = p2_perturbative_oracle(&mg, omega, t, s0);
        out.ratios.push(oracle / p2[0]);
        out.table.push(format!(
            "n={n} m={} s={s0:.0e}: walk {:.4e} oracle {oracle:.4e} closed-form {:.4e}",
            g.edge_count(),
            p2[0],
            p2_short_time(n, g.edge_count(), omega, t, s0)
        ));
    }
    out
}

fn criterion_4(q: &QuarticSuite) -> Outcome {
    let worst = q.slopes.iter().map(|s| (s - 4.0).abs()).fold(0.0, f64::max);
    let (lo, hi) = q.slopes.iter().fold((f64::MAX, f64::MIN), |(a, b), &s| (a.min(s), b.max(s)));
    check(
        worst <= 0.05,
        format!("10 walks, slopes in [{lo:.4}, {hi:.4}]"),
        || format!("slopes {:?}", q.slopes),
    )
}

fn criterion_5(q: &QuarticSuite) -> Outcome {
    let ok = q.ratios.iter().all(|r| (0.98..=1.02).contains(r));
    let (lo, hi) = q.ratios.iter().fold((f64::MAX, f64::MIN), |(a, b), &s| (a.min(s), b.max(s)));
    check(
        ok,
        format!("oracle/walk in [{lo:.6}, {hi:.6}]; {}", q.table.join(" | ")),
        || format!("ratios {:?}; {}", q.ratios, q.table.join(" | ")),
    )
}

fn criterion_6(drift: &mut Drift) -> Outcome {
    let mut worst: f64 = 0.0;
    for k in 0..10u64 {
        let n = [4usize, 5, 6][k as usize % 3];
        let g = Graph::erdos_renyi(n, 0.5, derive_seed(6, n as u64, k)).unwrap();
        let t = 20.0 / n as f64;
        let params = AnnealParams::new(t, 100.0 * (n * n) as f64, Schedule::constant(1.0, 0.0)).unwrap();
        let full = evolve_full_with(&g, &params, 1.0, &tight(1e-9, None)).unwrap();
        drift.see(full.norm_drift);
        let mg = MedianGraph::build(&g).unwrap();
        let walk = walk_evolve(&mg, 1.0, 0.0, t, 1.0, 1e-13).unwrap();
        drift.see(walk.norm_drift);
        let full_probs = full.final_state.probabilities();
        let walk_probs = walk.state.probabilities();
        let on_is: f64 = mg
            .nodes()
            .iter()
            .zip(&walk_probs)
            .map(|(s, w)| (full_probs[s.mask() as usize] - w).abs())
            .sum();
        let tv = 0.5 * (on_is + full.leakage);
        worst = worst.max(tv);
    }
    check(worst <= 1e-3, format!("10 instances, max TV {worst:.3e}"), || {
        format!("max TV {worst:.3e}")
    })
}

fn criterion_7(drift: &mut Drift) -> Outcome {
    let cfg = ExperimentConfig::defaults(ExperimentKind::Fig4);
    let start = Instant::now();
    let out = run_fig4(&cfg).map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    let mut problems = Vec::new();
    for r in out.samples() {
        if let Some(e) = &r.error {
            problems.push(format!("n={} seed={:?}: {e}", r.n, r.seed));
            continue;
        }
        drift.see(r.norm_drift.unwrap());
        let (e, m) = (r.expected_is_size.unwrap(), r.mis_size.unwrap());
        if e > m + 1e-9 {
            problems.push(format!("n={} seed={:?}: expected {e} > MIS {m}", r.n, r.seed));
        }
    }
    let mut curve = Vec::new();
    for &n in &cfg.n_list {
        let a = out.aggregate_for(n).unwrap();
        let (q, gr, m) = (a.expected_is_size.unwrap(), a.greedy_size.unwrap(), a.mis_size.unwrap());
        curve.push(format!("n={n}: {q:.3}/{gr:.3}/{m:.3}"));
        if q < gr - 0.05 {
            problems.push(format!("n={n}: anneal {q:.4} below greedy {gr:.4} - 0.05"));
        }
    }
    check(
        problems.is_empty(),
        format!("anneal/greedy/exact means {} ({secs:.0}s)", curve.join(", ")),
        || problems.join("; "),
    )
}

fn criterion_8(drift: &mut Drift) -> Outcome {
    let cfg = ExperimentConfig::defaults(ExperimentKind::Fig3);
    let start = Instant::now();
    let out = run_fig3(&cfg).map_err(|e| e.to_string())?;
    let secs = start.elapsed().as_secs_f64();
    if let Some(r) = out.samples().find(|r| r.error.is_some()) {
        return Err(format!("n={} failed: {:?}", r.n, r.error));
    }
    for r in out.samples() {
        drift.see(r.norm_drift.unwrap());
    }
    let points: Vec<(f64, f64)> = cfg
        .n_list
        .iter()
        .map(|&n| (n as f64, out.aggregate_for(n).unwrap().p2_simulated.unwrap()))
        .collect();
    let min = points.iter().map(|p| p.1).fold(f64::MAX, f64::min);
    let xs: Vec<f64> = points.iter().map(|p| p.0.ln()).collect();
    let ys: Vec<f64> = points.iter().map(|p| p.1.ln()).collect();
    let k = xs.len() as f64;
    let (mx, my) = (xs.iter().sum::<f64>() / k, ys.iter().sum::<f64>() / k);
    let slope = xs.iter().zip(&ys).map(|(x, y)| (x - mx) * (y - my)).sum::<f64>()
        / xs.iter().map(|x| (x - mx).powi(2)).sum::<f64>();
    let curve: Vec<String> = points.iter().map(|(n, p)| format!("{n}:{p:.3}")).collect();
    let detail = format!(
        "mean p2 by n {}; min {min:.3}, log-log slope {slope:.3} ({secs:.0}s)",
        curve.join(" ")
    );
    check(min >= 0.05 && slope >= -0.5, detail.clone(), || detail)
}

fn criterion_9(drift: &mut Drift) -> Outcome {
    let mut small4 = ExperimentConfig::defaults(ExperimentKind::Fig4);
    small4.n_list = vec![4, 5, 6, 7, 8];
    small4.samples = 10;
    let mut small3 = ExperimentConfig::defaults(ExperimentKind::Fig3);
    small3.n_list = vec![6, 9, 15];
    small3.samples = 10;
    let csv = |cfg: &ExperimentConfig, fig3: bool| {
        let out = if fig3 { run_fig3(cfg) } else { run_fig4(cfg) }.unwrap();
        out.to_csv_string().unwrap()
    };
    let same4 = csv(&small4, false) == csv(&small4, false);
    let same3 = csv(&small3, true) == csv(&small3, true);
    let mut one_thread = small4.clone();
    one_thread.threads = Some(1);
    let same_threads = csv(&small4, false) == csv(&one_thread, false);
    let max = drift.max;
    let count = drift.count;
    check(
        same4 && same3 && same_threads && max <= 1e-9,
        format!("{count} evolutions, max norm drift {max:.2e}; reruns byte-identical"),
        || format!("drift {max:.2e}, fig4 identical {same4}, fig3 identical {same3}, thread-independent {same_threads}"),
    )
}

/// Entry-by-entry Rydberg Hamiltonian for a fixed s.
fn dense_rydberg(g: &Graph, p: &AnnealParams, s: f64) -> Vec<Vec<f64>> {
    let dim = 1usize << g.n();
    let (omega, delta) = p.schedule.at(s);
    let mut h = vec![vec![0.0; dim]; dim];
    for (m, row) in h.iter_mut().enumerate() {
        let occupied = (m as u64).count_ones() as f64;
        let violated = g
            .edges()
            .iter()
            .filter(|&&(i, j)| m >> i & 1 == 1 && m >> j & 1 == 1)
            .count() as f64;
        row[m] = -delta * p.t_total * occupied + p.omega0 * p.t_total * violated;
        for j in 0..g.n() {
            row[m ^ (1 << j)] = omega * p.t_total / 2.0;
        }
    }
    h
}

fn criterion_10(_: &mut Drift) -> Outcome {
    let mut worst: f64 = 0.0;
    let mut rng = seeded_rng(10);
    for n in 1..=6usize {
        for k in 0..3u64 {
            let g = Graph::erdos_renyi(n, 0.5, derive_seed(10, n as u64, k)).unwrap();
            let p = AnnealParams::new(1.3, 2.1, Schedule::sine_cosine()).unwrap();
            let s = 0.37;
            let h = dense_rydberg(&g, &p, s);
            let dim = 1 << n;
            let x: Vec<Complex64> = (0..dim)
                .map(|_| Complex64::new(unit_f64(&mut rng) - 0.5, unit_f64(&mut rng) - 0.5))
                .collect();
            let y = apply_h0(&g, &p, s, &StateVector::from_amplitudes(x.clone())).unwrap();
            for (r, row) in h.iter().enumerate() {
                let expect: Complex64 = row.iter().zip(&x).map(|(a, b)| b * a).sum();
                worst = worst.max((expect - y.amplitudes()[r]).norm());
            }
        }
    }
    if worst > 1e-12 {
        return Err(format!("apply_h0 differs from dense matrix by {worst:.2e}"));
    }

    let mut tightest: f64 = 0.0;
    for _ in 0..200 {
        let dim = 2 + (unit_f64(&mut rng) * 127.0) as usize;
        let mut a = DMatrix::<Complex<f64>>::zeros(dim, dim);
        for i in 0..dim {
            a[(i, i)] = Complex::new(2.0 * unit_f64(&mut rng) - 1.0, 0.0);
            for _ in 0..2 {
                let j = (unit_f64(&mut rng) * dim as f64) as usize;
                if j != i {
                    let v = Complex::new(2.0 * unit_f64(&mut rng) - 1.0, 2.0 * unit_f64(&mut rng) - 1.0) * 0.7;
                    a[(i, j)] = v;
                    a[(j, i)] = v.conj();
                }
            }
        }
        let m = (0..dim)
            .map(|i| (0..dim).filter(|&j| a[(i, j)].norm() > 0.0).count())
            .max()
            .unwrap();
        let w = a.iter().map(|z| z.norm()).fold(0.0, f64::max);
        let rho = SymmetricEigen::new(a).eigenvalues.iter().map(|e| e.abs()).fold(0.0, f64::max);
        let bound = spectral_radius_bound(m, w);
        if rho > bound * (1.0 + 1e-12) {
            return Err(format!("spectral radius {rho} exceeds bound {bound} (dim {dim})"));
        }
        tightest = tightest.max(rho / bound);
    }
    Ok(format!(
        "apply_h0 vs dense max error {worst:.1e} (n<=6); 200 sparse Hermitian matrices bounded, max rho/bound {tightest:.3}"
    ))
}

fn main() -> ExitCode {
    let mut drift = Drift::default();
    let mut failures = 0;
    // ACCEPTANCE_ONLY=2,5 restricts the run to the listed criteria.
    let only: Option<Vec<u32>> = std::env::var("ACCEPTANCE_ONLY")
        .ok()
        .map(|v| v.split(',').filter_map(|x| x.trim().parse().ok()).collect());
    let mut report = |id: u32, name: &str, f: &mut dyn FnMut() -> Outcome| {
        if only.as_ref().is_some_and(|o| !o.contains(&id)) {
            return;
        }
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(f)).unwrap_or_else(|e| {
            let msg = e
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| e.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_default();
            Err(format!("panicked: {msg}"))
        });
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(detail) => println!("criterion {id:2} PASS  {name} [{secs:.1}s]: {detail}"),
            Err(detail) => {
                failures += 1;
                println!("criterion {id:2} FAIL  {name} [{secs:.1}s]: {detail}");
            }
        }
    };

    report(1, "example graph golden values", &mut || criterion_1(&mut drift));
    report(2, "leakage bound soundness", &mut || criterion_2(&mut drift));
    report(3, "blockade suppression trend", &mut || criterion_3(&mut drift));
    let quartic = catch_unwind(AssertUnwindSafe(|| quartic_suite(&mut drift)));
    match &quartic {
        Ok(q) => {
            report(4, "quartic short-time law", &mut || criterion_4(q));
            report(5, "perturbative oracle agreement", &mut || criterion_5(q));
        }
        Err(_) => {
            report(4, "quartic short-time law", &mut || Err("walk suite panicked".into()));
            report(5, "perturbative oracle agreement", &mut || Err("walk suite panicked".into()));
        }
    }
    report(6, "projection equivalence", &mut || criterion_6(&mut drift));
    report(7, "anneal vs greedy sweep", &mut || criterion_7(&mut drift));
    report(8, "size-2 probability sweep", &mut || criterion_8(&mut drift));
    report(9, "unitarity and determinism", &mut || criterion_9(&mut drift));
    report(10, "small-matrix oracles", &mut || criterion_10(&mut drift));

    if failures == 0 {
        println!("acceptance: all criteria passed");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: {failures} criteria failed");
        ExitCode::FAILURE
    }
}
