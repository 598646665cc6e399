//! Concentration intervals, tail masses, moments and parameter sweeps.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::engine::{classical_distribution, evolve, position_distribution, PairingMode, PositionDistribution, WalkConfig};
use crate::error::{Error, Result};
use crate::reduce::evolve_reduced;

/// `[(1 - beta) t / 2, (1 + beta) t / 2]` with `beta = 1 / sqrt(n)`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct IntervalBound {
    pub lo: f64,
    pub hi: f64,
    pub beta: f64,
    pub t: usize,
}

impl IntervalBound {
    /// Integer positions are inside iff `lo <= x <= hi`.
    pub fn contains(&self, x: usize) -> bool {
        let x = x as f64;
        self.lo <= x && x <= self.hi
    }
}

pub fn interval_bounds(n: usize, t: usize) -> Result<IntervalBound> {
    if n < 2 {
        return Err(Error::invalid("n", "the concentration interval needs n >= 2"));
    }
    let beta = 1.0 / (n as f64).sqrt();
    let tf = t as f64;
    Ok(IntervalBound { lo: (1.0 - beta) * tf / 2.0, hi: (1.0 + beta) * tf / 2.0, beta, t })
}

// `Sum` for floats starts at -0.0; fold from +0.0 so empty tails print as `0`.
fn mass(dist: &PositionDistribution, keep: impl Fn(usize) -> bool) -> f64 {
    dist.iter().filter(|&(x, _)| keep(x)).fold(0.0, |acc, (_, p)| acc + p)
}

/// Mass strictly outside `bound`.
pub fn tail_mass(dist: &PositionDistribution, bound: &IntervalBound) -> f64 {
    mass(dist, |x| !bound.contains(x))
}

/// Mass inside `bound`, endpoints included.
pub fn interval_mass(dist: &PositionDistribution, bound: &IntervalBound) -> f64 {
    mass(dist, |x| bound.contains(x))
}

/// `(mean, variance)` of the position.
pub fn moments(dist: &PositionDistribution) -> (f64, f64) {
    let mean: f64 = dist.iter().map(|(x, p)| x as f64 * p).sum();
    let variance = dist.iter().map(|(x, p)| (x as f64 - mean).powi(2) * p).sum();
    (mean, variance)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Mode {
    Classical,
    /// Full `n`-dimensional walk (the reduced walk stands in above the
    /// sweep's full-walk limit when pairing is natural).
    Quantum,
    Reduced,
}

impl Mode {
    pub fn as_str(&self) -> &'static str {
        match self {
            Mode::Classical => "classical",
            Mode::Quantum => "quantum",
            Mode::Reduced => "reduced",
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "classical" => Ok(Mode::Classical),
            "quantum" => Ok(Mode::Quantum),
            "reduced" => Ok(Mode::Reduced),
            other => Err(Error::invalid("mode", format!("unknown mode `{other}`"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepSpec {
    pub n_list: Vec<usize>,
    pub t: usize,
    pub modes: Vec<Mode>,
    /// `Natural` or `Random`; for random pairing the seed inside is ignored
    /// in favour of `seeds`.
    pub pairing: PairingMode,
    pub seeds: Vec<u64>,
    pub loop_length: usize,
    /// Largest `n` run with the full walk in quantum mode.
    pub full_limit: usize,
}

impl SweepSpec {
    pub fn new(n_list: Vec<usize>, t: usize, modes: Vec<Mode>) -> Self {
        Self { n_list, t, modes, pairing: PairingMode::Natural, seeds: Vec::new(), loop_length: 1, full_limit: 64 }
    }

    pub fn with_random_pairing(mut self, seeds: Vec<u64>) -> Self {
        self.pairing = PairingMode::Random { seed: 0 };
        self.seeds = seeds;
        self
    }

    pub fn with_loop_length(mut self, loop_length: usize) -> Self {
        self.loop_length = loop_length;
        self
    }

    fn is_random(&self) -> bool {
        matches!(self.pairing, PairingMode::Random { .. })
    }

    fn jobs(&self) -> Result<Vec<Job>> {
        if self.is_random() && self.seeds.is_empty() {
            return Err(Error::invalid("seeds", "random pairing needs at least one seed"));
        }
        let mut jobs = Vec::new();
        for &n in &self.n_list {
            for &mode in &self.modes {
                match mode {
                    Mode::Quantum if self.is_random() => {
                        jobs.extend(self.seeds.iter().map(|&s| Job { n, mode, seed: Some(s) }));
                    }
                    _ => jobs.push(Job { n, mode, seed: None }),
                }
            }
        }
        Ok(jobs)
    }
}

#[derive(Debug, Clone, Copy)]
struct Job {
    n: usize,
    mode: Mode,
    seed: Option<u64>,
}

/// One row of sweep output. `None` marks a column that does not apply.
#[derive(Debug, Clone, PartialEq)]
pub struct SweepRecord {
    pub n: usize,
    pub t: usize,
    pub mode: Mode,
    pub pairing: Option<&'static str>,
    pub seed: Option<u64>,
    pub mean: f64,
    pub variance: f64,
    pub interval: Option<IntervalBound>,
    pub tail_mass: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct SweepEntry {
    pub record: SweepRecord,
    pub distribution: PositionDistribution,
}

fn run_job(spec: &SweepSpec, job: Job) -> Result<SweepEntry> {
    let Job { n, mode, seed } = job;
    let t = spec.t;
    let (distribution, pairing) = match mode {
        Mode::Classical => (classical_distribution(n, t)?, None),
        Mode::Reduced => {
            if spec.is_random() {
                return Err(Error::invalid("pairing", "the reduced walk only exists for natural pairing"));
            }
            (evolve_reduced(n, t)?.distribution(), Some("natural"))
        }
        Mode::Quantum => match seed {
            Some(seed) => {
                if n > spec.full_limit {
                    return Err(Error::invalid(
                        "n",
                        format!("random pairing needs the full walk; n = {n} exceeds the limit {}", spec.full_limit),
                    ));
                }
                let cfg = WalkConfig::new(n, t)
                    .with_pairing(PairingMode::Random { seed })
                    .with_loop_length(spec.loop_length);
                (position_distribution(&evolve(&cfg)?), Some("random"))
            }
            None if n > spec.full_limit && spec.loop_length == 1 && n >= 2 => {
                (evolve_reduced(n, t)?.distribution(), Some("natural"))
            }
            None => {
                let cfg = WalkConfig::new(n, t).with_loop_length(spec.loop_length);
                (position_distribution(&evolve(&cfg)?), Some("natural"))
            }
        },
    };
    let (mean, variance) = moments(&distribution);
    let interval = match mode {
        Mode::Classical => None,
        _ => interval_bounds(n, t).ok(),
    };
    let tail_mass = interval.map(|b| tail_mass(&distribution, &b));
    Ok(SweepEntry {
        record: SweepRecord { n, t, mode, pairing, seed, mean, variance, interval, tail_mass },
        distribution,
    })
}

/// Runs every `(n, mode, seed)` combination, in parallel on the current rayon
/// pool. Output order follows input order: `n_list`, then `modes`, then
/// `seeds`.
pub fn sweep(spec: &SweepSpec) -> Result<Vec<SweepEntry>> {
    if spec.loop_length == 0 {
        return Err(Error::invalid("loop_length", "must be >= 1"));
    }
    if spec.loop_length > 1 && spec.modes.iter().any(|m| *m != Mode::Quantum) {
        return Err(Error::invalid("loop_length", "discretized loops only apply to the quantum mode"));
    }
    let jobs = spec.jobs()?;
    jobs.into_par_iter().map(|job| run_job(spec, job)).collect()
}
