//! Experiment configuration: defaults per experiment, `key = value` config
//! files, and the `c*n^a` rules used for T and ω₀.

use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hilbert::{AnnealParams, Schedule};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ExperimentKind {
    Fig3,
    Fig4,
    BoundReport,
    Single,
}

impl ExperimentKind {
    pub fn id(self) -> &'static str {
        match self {
            ExperimentKind::Fig3 => "fig3",
            ExperimentKind::Fig4 => "fig4",
            ExperimentKind::BoundReport => "bound-report",
            ExperimentKind::Single => "single",
        }
    }
}

/// `coef · n^exp`, written as `100`, `20/n`, `n^2`, `4*n^2`, `0.5*n^1.5`,
/// `3/n^2` and so on.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct Rule {
    pub coef: f64,
    pub exp: f64,
}

impl Rule {
    pub const fn new(coef: f64, exp: f64) -> Self {
        Rule { coef, exp }
    }

    pub const fn constant(v: f64) -> Self {
        Rule { coef: v, exp: 0.0 }
    }

    pub fn eval(&self, n: usize) -> f64 {
        if self.exp == 0.0 {
            self.coef
        } else {
            self.coef * (n as f64).powf(self.exp)
        }
    }
}

impl FromStr for Rule {
    type Err = Error;

    fn from_str(text: &str) -> Result<Self> {
        let bad = || Error::Config(format!("cannot read rule `{text}`; expected forms like 100, 20/n, n^2, 4*n^2"));
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let num = |t: &str| t.parse::<f64>().map_err(|_| bad());
        // Power of n: "n" or "n^a".
        let power = |t: &str| -> Result<f64> {
            match t.strip_prefix('n') {
                Some("") => Ok(1.0),
                Some(rest) => rest.strip_prefix('^').ok_or_else(bad).and_then(num),
                None => Err(bad()),
            }
        };
        let rule = if let Some((c, p)) = s.split_once('/') {
            Rule::new(num(c)?, -power(p)?)
        } else if let Some((c, p)) = s.split_once('*') {
            Rule::new(num(c)?, power(p)?)
        } else if s.starts_with('n') {
            Rule::new(1.0, power(&s)?)
        } else {
            Rule::constant(num(&s)?)
        };
        if !rule.coef.is_finite() || !rule.exp.is_finite() {
            return Err(bad());
        }
        Ok(rule)
    }
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.exp {
            e if e == 0.0 => write!(f, "{}", self.coef),
            e if self.coef == 1.0 && e > 0.0 => {
                if e == 1.0 {
                    write!(f, "n")
                } else {
                    write!(f, "n^{e}")
                }
            }
            e if e == 1.0 => write!(f, "{}*n", self.coef),
            e if e == -1.0 => write!(f, "{}/n", self.coef),
            e if e < 0.0 => write!(f, "{}/n^{}", self.coef, -e),
            e => write!(f, "{}*n^{}", self.coef, e),
        }
    }
}

/// Vertex counts written as `4,6,8`, `4..12` (inclusive) or a mix.
pub fn parse_n_list(text: &str) -> Result<Vec<usize>> {
    let bad = |part: &str| Error::Config(format!("cannot read vertex count `{part}` in `{text}`"));
    let mut out = Vec::new();
    for part in text.split(',').map(str::trim).filter(|p| !p.is_empty()) {
        if let Some((a, b)) = part.split_once("..") {
            let b = b.strip_prefix('=').unwrap_or(b);
            let lo: usize = a.trim().parse().map_err(|_| bad(part))?;
            let hi: usize = b.trim().parse().map_err(|_| bad(part))?;
            if hi < lo {
                return Err(bad(part));
            }
            out.extend(lo..=hi);
        } else {
            out.push(part.parse().map_err(|_| bad(part))?);
        }
    }
    Ok(out)
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub experiment: ExperimentKind,
    pub n_list: Vec<usize>,
    /// Edge probability of the sampled graphs.
    pub p: f64,
    /// Graphs per vertex count.
    pub samples: usize,
    pub t_rule: Rule,
    pub omega0_rule: Rule,
    pub schedule: String,
    pub master_seed: u64,
    /// Step-doubling tolerance for full state-vector runs.
    pub tol: f64,
    pub output: Option<PathBuf>,
    /// Largest n simulated in the full 2ⁿ space.
    pub max_full_n: usize,
    /// Largest independent-set count for median-graph walks.
    pub max_walk_states: usize,
    /// Measurement time for size-2 experiments.
    pub s_end: f64,
    /// Hitting-time constant of the size-2 closed-form curves.
    pub kappa: f64,
    /// Edge-density constant of the size-2 lower bound.
    pub density_c: f64,
    /// Simulated measurement shots per graph (0 disables sampling).
    pub shots: usize,
    /// Record elapsed time per row; off by default so reruns are byte-identical.
    pub wall_time: bool,
    pub threads: Option<usize>,
}

impl ExperimentConfig {
    pub fn defaults(kind: ExperimentKind) -> Self {
        let base = ExperimentConfig {
            experiment: kind,
            n_list: (4..=12).collect(),
            p: 0.8,
            samples: 100,
            t_rule: Rule::constant(100.0),
            omega0_rule: Rule::new(1.0, 2.0),
            schedule: "fig4".to_string(),
            master_seed: 1,
            tol: 1e-3,
            output: None,
            max_full_n: 14,
            max_walk_states: 1 << 20,
            s_end: 1.0,
            kappa: 20.0,
            density_c: 0.25,
            shots: 1,
            wall_time: false,
            threads: None,
        };
        match kind {
            ExperimentKind::Fig4 | ExperimentKind::BoundReport => base,
            ExperimentKind::Fig3 => ExperimentConfig {
                n_list: (6..=16).collect(),
                p: 0.5,
                t_rule: Rule::new(20.0, -1.0),
                schedule: "fig3".to_string(),
                tol: 1e-6,
                ..base
            },
            ExperimentKind::Single => ExperimentConfig {
                n_list: vec![8],
                samples: 1,
                tol: 1e-6,
                ..base
            },
        }
    }

    /// Sets one field from its textual form. Keys accept `-` or `_`.
    pub fn set(&mut self, key: &str, value: &str) -> Result<()> {
        let value = value.trim();
        let key = key.trim().replace('-', "_");
        fn num<T: FromStr>(key: &str, v: &str) -> Result<T> {
            v.parse()
                .map_err(|_| Error::Config(format!("bad value `{v}` for `{key}`")))
        }
        match key.as_str() {
            "n_list" | "n" => self.n_list = parse_n_list(value)?,
            "p" => self.p = num(&key, value)?,
            "samples" => self.samples = num(&key, value)?,
            "t_rule" | "t" => self.t_rule = value.parse()?,
            "omega0_rule" | "omega0" => self.omega0_rule = value.parse()?,
            "schedule" => self.schedule = value.to_string(),
            "master_seed" | "seed" => self.master_seed = num(&key, value)?,
            "tol" | "tolerance" => self.tol = num(&key, value)?,
            "output" => self.output = Some(PathBuf::from(value)),
            "max_full_n" => self.max_full_n = num(&key, value)?,
            "max_walk_states" => self.max_walk_states = num(&key, value)?,
            "s_end" => self.s_end = num(&key, value)?,
            "kappa" => self.kappa = num(&key, value)?,
            "density_c" => self.density_c = num(&key, value)?,
            "shots" => self.shots = num(&key, value)?,
            "wall_time" => self.wall_time = num(&key, value)?,
            "threads" => self.threads = Some(num(&key, value)?),
            _ => return Err(Error::Config(format!("unknown key `{key}`"))),
        }
        Ok(())
    }

    /// Applies a `key = value` file; `#` starts a comment.
    pub fn apply_text(&mut self, text: &str) -> Result<()> {
        for (i, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            let (k, v) = line.split_once('=').ok_or_else(|| Error::Parse {
                line: i + 1,
                message: format!("expected `key = value`, got `{line}`"),
            })?;
            self.set(k, v).map_err(|e| Error::Parse {
                line: i + 1,
                message: e.to_string(),
            })?;
        }
        Ok(())
    }

    pub fn validate(&self) -> Result<()> {
        if self.samples == 0 {
            return Err(Error::Config("samples must be at least 1".into()));
        }
        if self.n_list.is_empty() {
            return Err(Error::Config("n_list is empty".into()));
        }
        if !(0.0..=1.0).contains(&self.p) {
            return Err(Error::Config(format!("edge probability {} outside [0, 1]", self.p)));
        }
        if !(self.tol > 0.0) {
            return Err(Error::Config(format!("tolerance {} must be positive", self.tol)));
        }
        if !(self.s_end > 0.0 && self.s_end <= 1.0) {
            return Err(Error::Config(format!("s_end {} must lie in (0, 1]", self.s_end)));
        }
        Schedule::builtin(&self.schedule)?;
        for &n in &self.n_list {
            let (t, w) = (self.t_rule.eval(n), self.omega0_rule.eval(n));
            if !(t > 0.0 && t.is_finite() && w > 0.0 && w.is_finite()) {
                return Err(Error::Config(format!(
                    "rules give T = {t}, omega0 = {w} at n = {n}; both must be positive"
                )));
            }
        }
        Ok(())
    }

    pub fn schedule(&self) -> Result<Schedule> {
        Schedule::builtin(&self.schedule)
    }

    pub fn anneal_params(&self, n: usize) -> Result<AnnealParams> {
        AnnealParams::new(self.t_rule.eval(n), self.omega0_rule.eval(n), self.schedule()?)
    }
}
