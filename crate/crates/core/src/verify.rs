//! The invariant suite behind `dqwalk verify`.

use std::fmt;

use rayon::prelude::*;

use crate::coin::{fourier_coin, CoinMatrix};
use crate::engine::{
    classical_distribution, expected_position, initial_state, make_random_pairing, position_distribution,
    EdgePairing, Walk, WalkConfig,
};
use crate::error::Result;
use crate::graph::{build_line_with_loops, check_unitary_realizable, DirectedGraph, LineWithLoopsSpec};
use crate::reduce::{equivalence_check, project_to_reduced};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Depth {
    Quick,
    Full,
}

type CoinFactory = dyn Fn(usize) -> Result<CoinMatrix> + Sync;

pub struct VerifyOptions<'a> {
    pub depth: Depth,
    /// Replaces the Fourier coin in the unitarity and norm checks.
    pub coin: Option<&'a CoinFactory>,
}

impl VerifyOptions<'_> {
    pub fn new(depth: Depth) -> Self {
        Self { depth, coin: None }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub name: &'static str,
    /// Worst value observed; compared as `measured < threshold`.
    pub measured: f64,
    pub threshold: f64,
}

impl Check {
    pub fn passed(&self) -> bool {
        self.measured < self.threshold
    }
}

impl fmt::Display for Check {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let tag = if self.passed() { "PASS" } else { "FAIL" };
        write!(f, "{tag}  {:<24} measured {:.3e}  threshold {:.1e}", self.name, self.measured, self.threshold)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub checks: Vec<Check>,
}

impl Report {
    pub fn passed(&self) -> bool {
        self.checks.iter().all(Check::passed)
    }
}

fn max(it: impl IntoIterator<Item = f64>) -> f64 {
    it.into_iter().fold(0.0, f64::max)
}

fn coin_for(opts: &VerifyOptions<'_>, n: usize) -> Result<CoinMatrix> {
    match opts.coin {
        Some(f) => f(n),
        None => fourier_coin(n),
    }
}

/// Largest `|norm^2 - 1|` seen after any step.
fn norm_drift(coin: CoinMatrix, pairing: EdgePairing, n: usize, t: usize) -> Result<f64> {
    let mut walk = Walk::from_parts(initial_state(&WalkConfig::new(n, t))?, coin, pairing)?;
    let mut worst = 0.0f64;
    for _ in 0..t {
        walk.step()?;
        worst = worst.max((walk.state().norm_sqr() - 1.0).abs());
    }
    Ok(worst)
}

fn closure_residual(n: usize, t: usize, every: usize) -> Result<f64> {
    let mut walk = Walk::new(&WalkConfig::new(n, t))?;
    let mut worst = 0.0f64;
    for s in 1..=t {
        walk.step()?;
        if s % every == 0 || s == t {
            worst = worst.max(project_to_reduced(walk.state())?.1);
        }
    }
    Ok(worst)
}

/// Returns `0.0` when all generated graphs are balanced inside and the
/// negative control is rejected, `1.0` otherwise.
fn realizability_failures(ns: &[usize], lengths: &[usize]) -> Result<f64> {
    let mut bad = 0usize;
    for &n in ns {
        for &len in lengths {
            let g = build_line_with_loops(LineWithLoopsSpec::new(n, 12, len)?)?;
            let r = check_unitary_realizable(&g);
            if !r.balanced_on((1..12).chain(13..g.vertex_count())) {
                bad += 1;
            }
        }
    }
    let control = DirectedGraph::new(3, vec![(0, 1), (1, 2), (2, 0), (0, 2)])?;
    if check_unitary_realizable(&control).is_realizable() {
        bad += 1;
    }
    Ok(bad as f64)
}

pub fn run(opts: &VerifyOptions<'_>) -> Result<Report> {
    let full = opts.depth == Depth::Full;
    let mut checks = Vec::new();

    let unitary_ns: Vec<usize> = if full { (1..=256).collect() } else { (1..=64).collect() };
    let dev: Vec<f64> = unitary_ns
        .par_iter()
        .map(|&n| coin_for(opts, n).map(|c| c.unitarity_deviation()))
        .collect::<Result<_>>()?;
    checks.push(Check { name: "coin unitarity", measured: max(dev), threshold: 1e-12 });

    let (norm_ns, norm_t): (&[usize], usize) = if full { (&[2, 4, 8, 16, 32, 64], 1000) } else { (&[2, 8, 16], 200) };
    let drift: Vec<f64> = norm_ns
        .par_iter()
        .flat_map_iter(|&n| [(n, false), (n, true)])
        .map(|(n, random)| {
            let pairing = if random { make_random_pairing(n, norm_t, 17)? } else { EdgePairing::natural(n) };
            norm_drift(coin_for(opts, n)?, pairing, n, norm_t)
        })
        .collect::<Result<_>>()?;
    checks.push(Check { name: "norm conservation", measured: max(drift), threshold: 1e-9 });

    let (closure_ns, closure_t): (&[usize], usize) =
        if full { (&[2, 3, 4, 8, 16, 32, 64], 1000) } else { (&[2, 4, 16], 200) };
    let residual: Vec<f64> =
        closure_ns.par_iter().map(|&n| closure_residual(n, closure_t, 25)).collect::<Result<_>>()?;
    checks.push(Check { name: "subspace closure", measured: max(residual), threshold: 1e-11 });

    let eq_ns: &[usize] = if full { &[2, 4, 16, 64] } else { &[2, 4, 16] };
    let eq_t = if full { 200 } else { 100 };
    let reports: Vec<_> = eq_ns.par_iter().map(|&n| equivalence_check(n, eq_t, 1e-9)).collect::<Result<_>>()?;
    checks.push(Check {
        name: "reduced equivalence",
        measured: max(reports.iter().map(|r| r.max_amplitude_diff.max(r.max_probability_diff))),
        threshold: 1e-9,
    });

    let ts: &[usize] = if full { &[10, 100, 1000] } else { &[10, 100] };
    let mut mean_err = 0.0f64;
    let mut sum_err = 0.0f64;
    for n in [1, 2, 4, 8, 16, 32, 64] {
        for &t in ts {
            let d = classical_distribution(n, t)?;
            mean_err = mean_err.max((expected_position(&d) - t as f64 / n as f64).abs());
            sum_err = sum_err.max((d.total() - 1.0).abs());
        }
    }
    checks.push(Check { name: "classical mean", measured: mean_err, threshold: 1e-9 });

    let dist_t = if full { 500 } else { 100 };
    for n in [2, 8, 32] {
        let d = position_distribution(&crate::engine::evolve(&WalkConfig::new(n, dist_t))?);
        sum_err = sum_err.max((d.total() - 1.0).abs());
    }
    checks.push(Check { name: "distribution sums", measured: sum_err, threshold: 1e-10 });

    let (ns, lens): (&[usize], &[usize]) = if full { (&[1, 2, 3, 4, 8, 16], &[1, 2, 3, 5]) } else { (&[1, 2, 4], &[1, 3]) };
    // `measured < 0.5` means zero failures.
    checks.push(Check { name: "realizability", measured: realizability_failures(ns, lens)?, threshold: 0.5 });

    Ok(Report { checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_complex::Complex64;

    #[test]
    fn quick_suite_passes() {
        let report = run(&VerifyOptions::new(Depth::Quick)).unwrap();
        for c in &report.checks {
            assert!(c.passed(), "{c}");
        }
        assert_eq!(report.checks.len(), 7);
    }

    #[test]
    fn broken_coin_fails_unitarity_and_norm() {
        let broken = |n: usize| -> Result<CoinMatrix> {
            let mut e = fourier_coin(n)?.entries().to_vec();
            e[0] *= Complex64::new(1.001, 0.0);
            CoinMatrix::from_entries(n, e)
        };
        let opts = VerifyOptions { depth: Depth::Quick, coin: Some(&broken) };
        let report = run(&opts).unwrap();
        assert!(!report.passed());
        let failed: Vec<_> = report.checks.iter().filter(|c| !c.passed()).map(|c| c.name).collect();
        assert_eq!(failed, vec!["coin unitarity", "norm conservation"]);
    }
}
