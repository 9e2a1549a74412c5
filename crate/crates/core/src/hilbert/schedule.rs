use std::f64::consts::PI;
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use crate::error::{Error, Result};

type ProfileFn = Arc<dyn Fn(f64) -> (f64, f64) + Send + Sync>;

/// Shape of the drive as a function of scaled time `s ∈ [0, 1]`.
#[derive(Clone)]
pub enum Profile {
    /// Ω(s) = sin(πs), Δ(s) = cos(πs).
    SineCosine,
    Constant { omega: f64, delta: f64 },
    /// Sampled `(s, Ω, Δ)` rows, linearly interpolated and held constant
    /// outside the sampled range.
    Table(Vec<[f64; 3]>),
    /// Arbitrary `s ↦ (Ω, Δ)`; ∫Δ is evaluated by adaptive Simpson.
    Custom(ProfileFn),
}

impl fmt::Debug for Profile {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Profile::SineCosine => f.write_str("SineCosine"),
            Profile::Constant { omega, delta } => write!(f, "Constant({omega}, {delta})"),
            Profile::Table(rows) => write!(f, "Table({} rows)", rows.len()),
            Profile::Custom(_) => f.write_str("Custom"),
        }
    }
}

/// Rabi frequency Ω(s) and detuning Δ(s) profiles with their stated bounds.
#[derive(Clone, Debug)]
pub struct Schedule {
    profile: Profile,
    name: String,
    pub omega_max: f64,
    pub delta_max: f64,
    /// Lipschitz constant of Ω.
    pub lipschitz_k: f64,
}

const SIMPSON_TOL: f64 = 1e-10;

impl Schedule {
    /// Ω = sin(πs), Δ = cos(πs); Ω_max = Δ_max = 1, K = π.
    pub fn sine_cosine() -> Self {
        Schedule {
            profile: Profile::SineCosine,
            name: "fig4".into(),
            omega_max: 1.0,
            delta_max: 1.0,
            lipschitz_k: PI,
        }
    }

    pub fn constant(omega: f64, delta: f64) -> Self {
        Schedule {
            profile: Profile::Constant { omega, delta },
            name: format!("constant({omega},{delta})"),
            omega_max: omega.abs(),
            delta_max: delta.abs(),
            lipschitz_k: 0.0,
        }
    }

    /// Builds a schedule from `(s, Ω, Δ)` rows; bounds are read off the
    /// samples, which is exact for the piecewise-linear interpolant.
    pub fn table(mut rows: Vec<[f64; 3]>) -> Result<Self> {
        if rows.is_empty() {
            return Err(Error::Domain("schedule table has no rows".into()));
        }
        if rows.iter().flatten().any(|x| !x.is_finite()) {
            return Err(Error::Domain("schedule table has non-finite entries".into()));
        }
        rows.sort_by(|a, b| a[0].total_cmp(&b[0]));
        if rows.windows(2).any(|w| w[0][0] == w[1][0]) {
            return Err(Error::Domain("schedule table repeats an s value".into()));
        }
        let omega_max = rows.iter().map(|r| r[1].abs()).fold(0.0, f64::max);
        let delta_max = rows.iter().map(|r| r[2].abs()).fold(0.0, f64::max);
        let lipschitz_k = rows
            .windows(2)
            .map(|w| ((w[1][1] - w[0][1]) / (w[1][0] - w[0][0])).abs())
            .fold(0.0, f64::max);
        Ok(Schedule {
            name: format!("table({} rows)", rows.len()),
            profile: Profile::Table(rows),
            omega_max,
            delta_max,
            lipschitz_k,
        })
    }

    /// Parses `s,omega,delta` rows (comma or whitespace separated, `#`
    /// comments allowed, an optional non-numeric header line skipped).
    pub fn table_from_text(text: &str) -> Result<Self> {
        let mut rows = Vec::new();
        for (k, raw) in text.lines().enumerate() {
            let line = raw.trim();
            if line.is_empty() || line.starts_with('#') {
                continue;
            }
            let fields: Vec<&str> = line
                .split(|c: char| c == ',' || c.is_whitespace())
                .filter(|t| !t.is_empty())
                .collect();
            let parsed: std::result::Result<Vec<f64>, _> =
                fields.iter().map(|t| t.parse::<f64>()).collect();
            match parsed {
                Ok(v) if v.len() == 3 => rows.push([v[0], v[1], v[2]]),
                Err(_) if rows.is_empty() => continue,
                _ => {
                    return Err(Error::Parse {
                        line: k + 1,
                        message: format!("expected `s,omega,delta`, got `{line}`"),
                    })
                }
            }
        }
        Schedule::table(rows)
    }

    /// Arbitrary profile with caller-stated bounds.
    pub fn custom<F>(f: F, omega_max: f64, delta_max: f64, lipschitz_k: f64) -> Self
    where
        F: Fn(f64) -> (f64, f64) + Send + Sync + 'static,
    {
        Schedule {
            profile: Profile::Custom(Arc::new(f)),
            name: "custom".into(),
            omega_max,
            delta_max,
            lipschitz_k,
        }
    }

    /// Builtin schedules by name: `fig4`, `fig3` (= `constant(1,0)`), or
    /// `constant(Ω,Δ)`.
    pub fn builtin(name: &str) -> Result<Self> {
        let key = name.trim();
        match key {
            "fig4" | "sine-cosine" => return Ok(Schedule::sine_cosine()),
            "fig3" => {
                let mut s = Schedule::constant(1.0, 0.0);
                s.name = "fig3".into();
                return Ok(s);
            }
            _ => {}
        }
        let args = key
            .strip_prefix("constant(")
            .and_then(|r| r.strip_suffix(')'))
            .ok_or_else(|| Error::UnknownSchedule(name.to_string()))?;
        let vals: Vec<f64> = args
            .split(',')
            .map(|t| t.trim().parse::<f64>())
            .collect::<std::result::Result<_, _>>()
            .map_err(|_| Error::UnknownSchedule(name.to_string()))?;
        match vals[..] {
            [omega, delta] if omega.is_finite() && delta.is_finite() => {
                Ok(Schedule::constant(omega, delta))
            }
            _ => Err(Error::UnknownSchedule(name.to_string())),
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn profile(&self) -> &Profile {
        &self.profile
    }

    /// (Ω(s), Δ(s)).
    pub fn at(&self, s: f64) -> (f64, f64) {
        match &self.profile {
            Profile::SineCosine => ((PI * s).sin(), (PI * s).cos()),
            Profile::Constant { omega, delta } => (*omega, *delta),
            Profile::Table(rows) => interpolate(rows, s),
            Profile::Custom(f) => f(s),
        }
    }

    pub fn omega(&self, s: f64) -> f64 {
        self.at(s).0
    }

    pub fn delta(&self, s: f64) -> f64 {
        self.at(s).1
    }

    /// ∫₀ˢ Δ(s′) ds′.
    pub fn delta_integral(&self, s: f64) -> f64 {
        match &self.profile {
            Profile::SineCosine => (PI * s).sin() / PI,
            Profile::Constant { delta, .. } => delta * s,
            Profile::Table(rows) => table_integral(rows, s),
            Profile::Custom(f) => adaptive_simpson(&|x| f(x).1, 0.0, s, SIMPSON_TOL),
        }
    }

    /// True when Δ is the same at every sample of a 10⁴-point grid.
    pub fn delta_is_constant(&self) -> bool {
        match &self.profile {
            Profile::Constant { .. } => true,
            _ => {
                let d0 = self.delta(0.0);
                (1..=10_000).all(|k| self.delta(k as f64 / 10_000.0) == d0)
            }
        }
    }
}

impl FromStr for Schedule {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Schedule::builtin(s)
    }
}

fn interpolate(rows: &[[f64; 3]], s: f64) -> (f64, f64) {
    let first = rows[0];
    let last = rows[rows.len() - 1];
    if s <= first[0] {
        return (first[1], first[2]);
    }
    if s >= last[0] {
        return (last[1], last[2]);
    }
    let k = rows.partition_point(|r| r[0] <= s);
    let (a, b) = (rows[k - 1], rows[k]);
    let t = (s - a[0]) / (b[0] - a[0]);
    (a[1] + t * (b[1] - a[1]), a[2] + t * (b[2] - a[2]))
}

/// Exact integral of the interpolated Δ from 0 to `s` (trapezoids are exact
/// for piecewise-linear data, constant extension outside the samples).
fn table_integral(rows: &[[f64; 3]], s: f64) -> f64 {
    let delta_at = |x: f64| interpolate(rows, x).1;
    let (lo, hi, sign) = if s >= 0.0 { (0.0, s, 1.0) } else { (s, 0.0, -1.0) };
    let mut knots = vec![lo];
    knots.extend(rows.iter().map(|r| r[0]).filter(|&x| x > lo && x < hi));
    knots.push(hi);
    let total: f64 = knots
        .windows(2)
        .map(|w| 0.5 * (w[1] - w[0]) * (delta_at(w[0]) + delta_at(w[1])))
        .sum();
    sign * total
}

pub(crate) fn adaptive_simpson(f: &dyn Fn(f64) -> f64, a: f64, b: f64, tol: f64) -> f64 {
    fn simpson(fa: f64, fm: f64, fb: f64, a: f64, b: f64) -> f64 {
        (b - a) / 6.0 * (fa + 4.0 * fm + fb)
    }
    #[allow(clippy::too_many_arguments)]
    fn recurse(
        f: &dyn Fn(f64) -> f64,
        a: f64,
        b: f64,
        fa: f64,
        fm: f64,
        fb: f64,
        whole: f64,
        tol: f64,
        depth: u32,
    ) -> f64 {
        let m = 0.5 * (a + b);
        let (lm, rm) = (0.5 * (a + m), 0.5 * (m + b));
        let (flm, frm) = (f(lm), f(rm));
        let left = simpson(fa, flm, fm, a, m);
        let right = simpson(fm, frm, fb, m, b);
        let diff = left + right - whole;
        if depth == 0 || diff.abs() <= 15.0 * tol {
            return left + right + diff / 15.0;
        }
        recurse(f, a, m, fa, flm, fm, left, 0.5 * tol, depth - 1)
            + recurse(f, m, b, fm, frm, fb, right, 0.5 * tol, depth - 1)
    }
    if a == b {
        return 0.0;
    }
    let (fa, fb, fm) = (f(a), f(b), f(0.5 * (a + b)));
    recurse(f, a, b, fa, fm, fb, simpson(fa, fm, fb, a, b), tol, 48)
}
