//! Browser bindings for the demo page in `www/`.
//!
//! Three views are backed by this module: a single-walk explorer
//! (quantum vs classical distribution with the concentration interval), the
//! position-by-coin-dimension probability grid, and the transport-speed curve.
//! Each `#[wasm_bindgen]` export is a thin wrapper over a plain function so the
//! numerics are testable off-wasm.

use wasm_bindgen::prelude::*;

use dqwalk::analysis::moments;
use dqwalk::{
    classical_distribution, evolve, evolve_reduced, interval_bounds, position_distribution, PairingMode,
    PositionDistribution, WalkConfig,
};

/// Beyond this the explorer switches to the reduced walk (natural pairing only).
pub const FULL_WALK_LIMIT: usize = 64;
/// Caps interactive requests so a slider cannot lock up the page.
pub const MAX_STEPS: usize = 2000;

fn check_steps(t: usize) -> Result<(), String> {
    if t > MAX_STEPS {
        return Err(format!("t = {t} exceeds the demo limit of {MAX_STEPS}"));
    }
    Ok(())
}

/// Quantum position distribution. `seed = None` is natural pairing.
pub fn quantum(n: usize, t: usize, seed: Option<u64>, loop_length: usize) -> Result<Vec<f64>, String> {
    check_steps(t)?;
    let dist = match seed {
        None if n > FULL_WALK_LIMIT && loop_length == 1 => evolve_reduced(n, t).map(|s| s.distribution()),
        _ if n > FULL_WALK_LIMIT => {
            return Err(format!("random pairing and discretized loops need n <= {FULL_WALK_LIMIT}"))
        }
        None => evolve(&WalkConfig::new(n, t).with_loop_length(loop_length)).map(|s| position_distribution(&s)),
        Some(seed) => evolve(
            &WalkConfig::new(n, t).with_pairing(PairingMode::Random { seed }).with_loop_length(loop_length),
        )
        .map(|s| position_distribution(&s)),
    };
    dist.map(|d| d.probabilities().to_vec()).map_err(|e| e.to_string())
}

pub fn classical(n: usize, t: usize) -> Result<Vec<f64>, String> {
    check_steps(t)?;
    classical_distribution(n, t).map(|d| d.probabilities().to_vec()).map_err(|e| e.to_string())
}

/// Row-major grid of `(n_max - n_min + 1)` rows by `t + 1` positions.
pub fn grid(t: usize, n_min: usize, n_max: usize, quantum_mode: bool) -> Result<Vec<f64>, String> {
    check_steps(t)?;
    if n_min < 2 || n_max < n_min || n_max > 1024 {
        return Err("need 2 <= n_min <= n_max <= 1024".into());
    }
    let mut out = Vec::with_capacity((n_max - n_min + 1) * (t + 1));
    for n in n_min..=n_max {
        let d = if quantum_mode {
            evolve_reduced(n, t).map(|s| s.distribution())
        } else {
            classical_distribution(n, t)
        };
        out.extend_from_slice(d.map_err(|e| e.to_string())?.probabilities());
    }
    Ok(out)
}

/// `[n, quantum mean / t, classical mean / t, interval lo / t, interval hi / t]`
/// for each `n` in `2..=n_max`, flattened.
pub fn speed(t: usize, n_max: usize) -> Result<Vec<f64>, String> {
    check_steps(t)?;
    if t == 0 || !(2..=4096).contains(&n_max) {
        return Err("need t >= 1 and 2 <= n_max <= 4096".into());
    }
    let tf = t as f64;
    let mut out = Vec::with_capacity(5 * (n_max - 1));
    for n in 2..=n_max {
        let q = evolve_reduced(n, t).map_err(|e| e.to_string())?.distribution();
        let b = interval_bounds(n, t).map_err(|e| e.to_string())?;
        out.extend([n as f64, moments(&q).0 / tf, 1.0 / n as f64, b.lo / tf, b.hi / tf]);
    }
    Ok(out)
}

/// `[mean, variance]`.
pub fn stats(probabilities: &[f64]) -> Result<Vec<f64>, String> {
    let d = PositionDistribution::new(probabilities.to_vec()).map_err(|e| e.to_string())?;
    let (m, v) = moments(&d);
    Ok(vec![m, v])
}

fn js(r: Result<Vec<f64>, String>) -> Result<Vec<f64>, JsError> {
    r.map_err(|e| JsError::new(&e))
}

#[wasm_bindgen(js_name = quantumDistribution)]
pub fn quantum_distribution(n: usize, t: usize, loop_length: usize) -> Result<Vec<f64>, JsError> {
    js(quantum(n, t, None, loop_length))
}

#[wasm_bindgen(js_name = randomPairingDistribution)]
pub fn random_pairing_distribution(n: usize, t: usize, seed: u32, loop_length: usize) -> Result<Vec<f64>, JsError> {
    js(quantum(n, t, Some(seed.into()), loop_length))
}

#[wasm_bindgen(js_name = classicalDistribution)]
pub fn classical_distribution_js(n: usize, t: usize) -> Result<Vec<f64>, JsError> {
    js(classical(n, t))
}

/// `[lo, hi]`.
#[wasm_bindgen(js_name = intervalBounds)]
pub fn interval_bounds_js(n: usize, t: usize) -> Result<Vec<f64>, JsError> {
    js(interval_bounds(n, t).map(|b| vec![b.lo, b.hi]).map_err(|e| e.to_string()))
}

#[wasm_bindgen(js_name = distributionGrid)]
pub fn distribution_grid(t: usize, n_min: usize, n_max: usize, quantum_mode: bool) -> Result<Vec<f64>, JsError> {
    js(grid(t, n_min, n_max, quantum_mode))
}

#[wasm_bindgen(js_name = speedCurve)]
pub fn speed_curve(t: usize, n_max: usize) -> Result<Vec<f64>, JsError> {
    js(speed(t, n_max))
}

#[wasm_bindgen(js_name = distributionStats)]
pub fn distribution_stats(probabilities: &[f64]) -> Result<Vec<f64>, JsError> {
    js(stats(probabilities))
}
