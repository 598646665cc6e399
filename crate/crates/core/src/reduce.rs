//! The two-dimensional reduced walk.
//!
//! Starting from `|0, Forward>` with natural pairing, the full walk never
//! leaves the span of `|x, Forward>` and the uniform loop superposition
//! `|x, LoopSuper> = (n - 1)^{-1/2} sum_k |x, k>`. On that span the Fourier
//! coin acts as `[[beta, alpha], [alpha, -beta]]`, so the walk can be run with
//! two amplitudes per position for any `n`.

use num_complex::Complex64;

use crate::coin::reduced_coin;
use crate::engine::{evolve, position_distribution, FullState, PositionDistribution, WalkConfig};
use crate::error::{Error, Result};

/// Amplitudes over `(position, {Forward, LoopSuper})`.
#[derive(Debug, Clone, PartialEq)]
pub struct ReducedState {
    forward: Vec<Complex64>,
    loops: Vec<Complex64>,
}

impl ReducedState {
    pub fn zeros(t_cap: usize) -> Self {
        Self { forward: vec![Complex64::ZERO; t_cap + 1], loops: vec![Complex64::ZERO; t_cap + 1] }
    }

    pub fn initial(t_cap: usize) -> Self {
        let mut s = Self::zeros(t_cap);
        s.forward[0] = Complex64::ONE;
        s
    }

    pub fn t_cap(&self) -> usize {
        self.forward.len() - 1
    }

    pub fn forward(&self) -> &[Complex64] {
        &self.forward
    }

    pub fn loop_super(&self) -> &[Complex64] {
        &self.loops
    }

    pub fn norm_sqr(&self) -> f64 {
        self.forward.iter().chain(&self.loops).map(|a| a.norm_sqr()).sum()
    }

    pub fn distribution(&self) -> PositionDistribution {
        let p = self.forward.iter().zip(&self.loops).map(|(f, l)| f.norm_sqr() + l.norm_sqr()).collect();
        PositionDistribution::new(p).expect("squared moduli are non-negative")
    }
}

/// `t` steps of the reduced walk with the coin for dimension `n`.
pub fn evolve_reduced(n: usize, t: usize) -> Result<ReducedState> {
    let coin = reduced_coin(n)?;
    let mut s = ReducedState::initial(t);
    for step in 0..t {
        // After `step` steps positions 0..=step are occupied. Walking x
        // downward lets the forward shift go in place.
        for x in (0..=step).rev() {
            let (f, l) = coin.apply(s.forward[x], s.loops[x]);
            s.forward[x + 1] = f;
            s.loops[x] = l;
        }
        s.forward[0] = Complex64::ZERO;
    }
    Ok(s)
}

/// Projects a full `L = 1` state onto `{Forward, LoopSuper}`. The second
/// value is the norm of everything orthogonal to that span.
pub fn project_to_reduced(full: &FullState) -> Result<(ReducedState, f64)> {
    if full.loop_length() != 1 {
        return Err(Error::invalid("loop_length", "projection needs plain self-loops (L = 1)"));
    }
    let n = full.n();
    let mut out = ReducedState::zeros(full.t_cap());
    let mut residual = 0.0;
    for x in 0..=full.t_cap() {
        let site = full.site(x);
        out.forward[x] = site[0];
        if n < 2 {
            continue;
        }
        let loops = &site[1..n];
        let mean = loops.iter().sum::<Complex64>() / (n - 1) as f64;
        out.loops[x] = mean * ((n - 1) as f64).sqrt();
        residual += loops.iter().map(|a| (a - mean).norm_sqr()).sum::<f64>();
    }
    Ok((out, residual.sqrt()))
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct EquivalenceReport {
    pub n: usize,
    pub t: usize,
    pub max_amplitude_diff: f64,
    pub max_probability_diff: f64,
    pub residual_norm: f64,
    pub tolerance: f64,
}

impl EquivalenceReport {
    pub fn passed(&self) -> bool {
        self.max_amplitude_diff < self.tolerance && self.max_probability_diff < self.tolerance
    }
}

/// Runs the full walk (natural pairing, `L = 1`) and the reduced walk side by
/// side and compares them in the projected basis.
pub fn equivalence_check(n: usize, t: usize, tolerance: f64) -> Result<EquivalenceReport> {
    if n < 2 {
        return Err(Error::invalid("n", "equivalence needs n >= 2"));
    }
    let (full, reduced) = rayon::join(|| evolve(&WalkConfig::new(n, t)), || evolve_reduced(n, t));
    let (full, reduced) = (full?, reduced?);
    let (projected, residual_norm) = project_to_reduced(&full)?;

    let max_amplitude_diff = projected
        .forward
        .iter()
        .zip(&reduced.forward)
        .chain(projected.loops.iter().zip(&reduced.loops))
        .map(|(a, b)| (a - b).norm())
        .fold(0.0, f64::max);
    let max_probability_diff = position_distribution(&full)
        .probabilities()
        .iter()
        .zip(reduced.distribution().probabilities())
        .map(|(a, b)| (a - b).abs())
        .fold(0.0, f64::max);

    Ok(EquivalenceReport { n, t, max_amplitude_diff, max_probability_diff, residual_norm, tolerance })
}
