//! Walk state, edge pairings, the shift operator and time evolution.
//!
//! A [`FullState`] stores one amplitude per edge of the line-with-loops graph,
//! with each edge identified by the line position of its base. Per position the
//! labels are laid out as
//!
//! ```text
//! [Forward, Loop(1) .. Loop(n-1), LoopInterior(1, 1) .. LoopInterior(n-1, L-1)]
//! ```
//!
//! Loop-interior edges belong to the auxiliary vertices of a discretized loop;
//! those vertices have a single in and out edge, so their coin is the identity
//! and their shift just advances the amplitude along the cycle.

use num_complex::Complex64;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::coin::{fourier_coin, CoinMatrix};
use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeLabel {
    /// The line edge `x -> x + 1`.
    Forward,
    /// First edge of loop `k` (`1 <= k <= n - 1`); for `L = 1` the whole self-loop.
    Loop(usize),
    /// Edge `depth` (`1 <= depth <= L - 1`) further along loop `k`.
    LoopInterior { k: usize, depth: usize },
}

/// Dense amplitudes over `(position 0..=t_cap, EdgeLabel)`.
#[derive(Debug, Clone, PartialEq)]
pub struct FullState {
    n: usize,
    loop_length: usize,
    t_cap: usize,
    /// One past the highest position that may carry nonzero amplitude.
    support: usize,
    amps: Vec<Complex64>,
}

impl FullState {
    pub fn zeros(n: usize, loop_length: usize, t_cap: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::invalid("n", "must be >= 1"));
        }
        if loop_length == 0 {
            return Err(Error::invalid("loop_length", "must be >= 1"));
        }
        let stride = n + (n - 1) * (loop_length - 1);
        let len = (t_cap + 1)
            .checked_mul(stride)
            .ok_or_else(|| Error::invalid("t_cap", "state size overflows"))?;
        Ok(Self { n, loop_length, t_cap, support: 0, amps: vec![Complex64::ZERO; len] })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn loop_length(&self) -> usize {
        self.loop_length
    }

    pub fn t_cap(&self) -> usize {
        self.t_cap
    }

    /// Number of edge labels per line position.
    pub fn stride(&self) -> usize {
        self.n + (self.n - 1) * (self.loop_length - 1)
    }

    /// One past the highest position that may be nonzero. Positions at or
    /// beyond this hold exactly zero amplitude.
    pub fn support(&self) -> usize {
        self.support
    }

    pub fn label_index(&self, label: EdgeLabel) -> Option<usize> {
        match label {
            EdgeLabel::Forward => Some(0),
            EdgeLabel::Loop(k) if (1..self.n).contains(&k) => Some(k),
            EdgeLabel::LoopInterior { k, depth }
                if (1..self.n).contains(&k) && (1..self.loop_length).contains(&depth) =>
            {
                Some(self.interior_index(k, depth))
            }
            _ => None,
        }
    }

    #[inline]
    fn interior_index(&self, k: usize, depth: usize) -> usize {
        self.n + (k - 1) * (self.loop_length - 1) + (depth - 1)
    }

    pub fn label_at(&self, index: usize) -> EdgeLabel {
        let (n, per_loop) = (self.n, self.loop_length - 1);
        match index {
            0 => EdgeLabel::Forward,
            k if k < n => EdgeLabel::Loop(k),
            i => {
                let off = i - n;
                EdgeLabel::LoopInterior { k: off / per_loop + 1, depth: off % per_loop + 1 }
            }
        }
    }

    pub fn labels(&self) -> impl Iterator<Item = EdgeLabel> + '_ {
        (0..self.stride()).map(|i| self.label_at(i))
    }

    pub fn get(&self, position: usize, label: EdgeLabel) -> Complex64 {
        match self.label_index(label) {
            Some(i) if position <= self.t_cap => self.amps[position * self.stride() + i],
            _ => Complex64::ZERO,
        }
    }

    /// Panics if `position > t_cap` or `label` does not exist for this state.
    pub fn set(&mut self, position: usize, label: EdgeLabel, amplitude: Complex64) {
        assert!(position <= self.t_cap, "position {position} beyond t_cap {}", self.t_cap);
        let i = self
            .label_index(label)
            .unwrap_or_else(|| panic!("label {label:?} invalid for n = {}, L = {}", self.n, self.loop_length));
        let stride = self.stride();
        self.amps[position * stride + i] = amplitude;
        self.support = self.support.max(position + 1);
    }

    /// Amplitudes of all labels at `position`.
    pub fn site(&self, position: usize) -> &[Complex64] {
        let stride = self.stride();
        &self.amps[position * stride..(position + 1) * stride]
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps[..self.support * self.stride()].iter().map(|a| a.norm_sqr()).sum()
    }

    pub fn normalize(&mut self) {
        let norm = self.norm_sqr().sqrt();
        if norm > 0.0 {
            self.amps.iter_mut().for_each(|a| *a /= norm);
        }
    }

    /// Applies `coin` to the `{Forward, Loop 1..n-1}` block of every occupied
    /// position.
    pub fn apply_coin_in_place(&mut self, coin: &CoinMatrix) -> Result<()> {
        let n = self.n;
        if coin.dim() != n {
            return Err(Error::DimensionMismatch { expected: n, actual: coin.dim() });
        }
        let stride = self.stride();
        let mut input = vec![Complex64::ZERO; n];
        for site in self.amps[..self.support * stride].chunks_exact_mut(stride) {
            input.copy_from_slice(&site[..n]);
            coin.apply_to(&input, &mut site[..n]);
        }
        Ok(())
    }

    /// Writes `S * self` into `out` (resized and zeroed as needed).
    fn shift_into(&self, pairing: &EdgePairing, out: &mut Vec<Complex64>) -> Result<usize> {
        let (n, len) = (self.n, self.loop_length);
        if pairing.n() != n {
            return Err(Error::DimensionMismatch { expected: n, actual: pairing.n() });
        }
        let stride = self.stride();
        let new_support = (self.support + 1).min(self.t_cap + 1);
        if new_support > 0 && pairing.covered() < new_support {
            return Err(Error::PairingCoverage { covered: pairing.covered(), vertex: new_support - 1 });
        }
        out.clear();
        out.resize(self.amps.len(), Complex64::ZERO);

        for x in 0..self.support {
            let site = &self.amps[x * stride..(x + 1) * stride];
            let base = x * stride;

            let fwd = site[0];
            if x == self.t_cap {
                if fwd != Complex64::ZERO {
                    return Err(Error::Capacity { position: x + 1, t_cap: self.t_cap });
                }
            } else {
                out[base + stride + pairing.target(x + 1, 0)] = fwd;
            }

            for k in 1..n {
                if len == 1 {
                    out[base + pairing.target(x, k)] = site[k];
                } else {
                    out[base + self.interior_index(k, 1)] = site[k];
                    for depth in 1..len - 1 {
                        out[base + self.interior_index(k, depth + 1)] = site[self.interior_index(k, depth)];
                    }
                    out[base + pairing.target(x, k)] = site[self.interior_index(k, len - 1)];
                }
            }
        }
        Ok(new_support)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PairingMode {
    /// Loops paired with themselves, line-in with line-out.
    #[default]
    Natural,
    /// Independent uniform permutation per vertex from a seeded generator.
    Random { seed: u64 },
    /// Caller-supplied permutations.
    Explicit,
}

/// Per-vertex bijection from incoming slots to outgoing slots.
///
/// Slot `0` is the line edge (incoming from `x - 1`, outgoing to `x + 1`),
/// slot `k` is loop `k`. Natural pairing is the identity at every vertex and
/// covers every vertex without storing anything.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgePairing {
    mode: PairingMode,
    n: usize,
    perms: Vec<Vec<usize>>,
}

impl EdgePairing {
    pub fn natural(n: usize) -> Self {
        Self { mode: PairingMode::Natural, n, perms: Vec::new() }
    }

    /// `perms[v][s]` is the outgoing slot paired with incoming slot `s` at vertex `v`.
    pub fn from_permutations(n: usize, perms: Vec<Vec<usize>>) -> Result<Self> {
        for (v, p) in perms.iter().enumerate() {
            if p.len() != n {
                return Err(Error::invalid("perms", format!("vertex {v}: {} slots, expected {n}", p.len())));
            }
            let mut seen = vec![false; n];
            for &s in p {
                if s >= n || std::mem::replace(&mut seen[s], true) {
                    return Err(Error::invalid("perms", format!("vertex {v}: not a bijection")));
                }
            }
        }
        Ok(Self { mode: PairingMode::Explicit, n, perms })
    }

    /// Draws one permutation per vertex `0..vertices` from `rng`, in vertex order.
    pub fn random_from_rng(n: usize, vertices: usize, rng: &mut ChaCha8Rng) -> Vec<Vec<usize>> {
        (0..vertices)
            .map(|_| {
                let mut p: Vec<usize> = (0..n).collect();
                p.shuffle(rng);
                p
            })
            .collect()
    }

    pub fn mode(&self) -> PairingMode {
        self.mode
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Number of line vertices `0..covered` this pairing defines.
    pub fn covered(&self) -> usize {
        match self.mode {
            PairingMode::Natural => usize::MAX,
            _ => self.perms.len(),
        }
    }

    pub fn permutation(&self, vertex: usize) -> Option<&[usize]> {
        self.perms.get(vertex).map(Vec::as_slice)
    }

    #[inline]
    pub fn target(&self, vertex: usize, slot: usize) -> usize {
        match self.mode {
            PairingMode::Natural => slot,
            _ => self.perms[vertex][slot],
        }
    }

    pub fn is_identity(&self) -> bool {
        self.perms.iter().all(|p| p.iter().enumerate().all(|(i, &s)| i == s))
    }
}

/// Random pairing on line vertices `0..=x_max`, drawn with ChaCha8 seeded by
/// `seed` and a Fisher-Yates shuffle per vertex in ascending vertex order.
pub fn make_random_pairing(n: usize, x_max: usize, seed: u64) -> Result<EdgePairing> {
    if n == 0 {
        return Err(Error::invalid("n", "must be >= 1"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let perms = EdgePairing::random_from_rng(n, x_max + 1, &mut rng);
    Ok(EdgePairing { mode: PairingMode::Random { seed }, n, perms })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct WalkConfig {
    pub n: usize,
    pub t: usize,
    pub pairing: PairingMode,
    pub loop_length: usize,
    /// Draw a fresh random pairing before every step. Only meaningful with
    /// `PairingMode::Random`; the default holds one pairing for all time.
    pub rerandomize: bool,
}

impl WalkConfig {
    pub fn new(n: usize, t: usize) -> Self {
        Self { n, t, pairing: PairingMode::Natural, loop_length: 1, rerandomize: false }
    }

    pub fn with_pairing(mut self, pairing: PairingMode) -> Self {
        self.pairing = pairing;
        self
    }

    pub fn with_loop_length(mut self, loop_length: usize) -> Self {
        self.loop_length = loop_length;
        self
    }

    pub fn with_rerandomize(mut self, rerandomize: bool) -> Self {
        self.rerandomize = rerandomize;
        self
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::invalid("n", "must be >= 1"));
        }
        if self.loop_length == 0 {
            return Err(Error::invalid("loop_length", "must be >= 1"));
        }
        match self.pairing {
            PairingMode::Explicit => {
                Err(Error::invalid("pairing", "explicit pairings are applied with `Walk::with_pairing`"))
            }
            PairingMode::Natural if self.rerandomize => {
                Err(Error::invalid("rerandomize", "requires random pairing"))
            }
            _ => Ok(()),
        }
    }
}

/// `|0, Forward>` with capacity for `config.t` steps.
pub fn initial_state(config: &WalkConfig) -> Result<FullState> {
    let mut s = FullState::zeros(config.n, config.loop_length, config.t)?;
    s.set(0, EdgeLabel::Forward, Complex64::ONE);
    Ok(s)
}

pub fn shift(state: &FullState, pairing: &EdgePairing) -> Result<FullState> {
    let mut out = Vec::new();
    let support = state.shift_into(pairing, &mut out)?;
    Ok(FullState { amps: out, support, ..*state })
}

/// One application of `U = S (I x C)`.
pub fn step(state: &FullState, coin: &CoinMatrix, pairing: &EdgePairing) -> Result<FullState> {
    let mut coined = state.clone();
    coined.apply_coin_in_place(coin)?;
    shift(&coined, pairing)
}

/// In-place evolution with a reusable scratch buffer.
#[derive(Debug, Clone)]
pub struct Walk {
    state: FullState,
    coin: CoinMatrix,
    pairing: EdgePairing,
    scratch: Vec<Complex64>,
    reseed: Option<ChaCha8Rng>,
    steps: usize,
}

impl Walk {
    pub fn new(config: &WalkConfig) -> Result<Self> {
        config.validate()?;
        let pairing = match config.pairing {
            PairingMode::Random { seed } if !config.rerandomize => make_random_pairing(config.n, config.t, seed)?,
            _ => EdgePairing::natural(config.n),
        };
        let reseed = match config.pairing {
            PairingMode::Random { seed } if config.rerandomize => Some(ChaCha8Rng::seed_from_u64(seed)),
            _ => None,
        };
        Ok(Self {
            state: initial_state(config)?,
            coin: fourier_coin(config.n)?,
            pairing,
            scratch: Vec::new(),
            reseed,
            steps: 0,
        })
    }

    /// Starts from an arbitrary state with explicit operators.
    pub fn from_parts(state: FullState, coin: CoinMatrix, pairing: EdgePairing) -> Result<Self> {
        if coin.dim() != state.n() {
            return Err(Error::DimensionMismatch { expected: state.n(), actual: coin.dim() });
        }
        if pairing.n() != state.n() {
            return Err(Error::DimensionMismatch { expected: state.n(), actual: pairing.n() });
        }
        Ok(Self { state, coin, pairing, scratch: Vec::new(), reseed: None, steps: 0 })
    }

    pub fn state(&self) -> &FullState {
        &self.state
    }

    pub fn into_state(self) -> FullState {
        self.state
    }

    pub fn pairing(&self) -> &EdgePairing {
        &self.pairing
    }

    pub fn steps(&self) -> usize {
        self.steps
    }

    pub fn step(&mut self) -> Result<()> {
        if let Some(rng) = self.reseed.as_mut() {
            let perms = EdgePairing::random_from_rng(self.state.n, self.state.t_cap + 1, rng);
            self.pairing.perms = perms;
            self.pairing.mode = PairingMode::Explicit;
        }
        self.state.apply_coin_in_place(&self.coin)?;
        let support = self.state.shift_into(&self.pairing, &mut self.scratch)?;
        std::mem::swap(&mut self.state.amps, &mut self.scratch);
        self.state.support = support;
        self.steps += 1;
        Ok(())
    }

    pub fn run(&mut self, steps: usize) -> Result<()> {
        (0..steps).try_for_each(|_| self.step())
    }
}

/// `config.t` steps of the walk from `|0, Forward>`.
pub fn evolve(config: &WalkConfig) -> Result<FullState> {
    let mut walk = Walk::new(config)?;
    walk.run(config.t)?;
    Ok(walk.into_state())
}

/// Probability per position `0..=t_cap`.
#[derive(Debug, Clone, PartialEq)]
pub struct PositionDistribution {
    probabilities: Vec<f64>,
}

impl PositionDistribution {
    pub fn new(probabilities: Vec<f64>) -> Result<Self> {
        if let Some(p) = probabilities.iter().find(|p| !(**p >= 0.0 && p.is_finite())) {
            return Err(Error::invalid("probabilities", format!("entry {p} is not a finite non-negative number")));
        }
        Ok(Self { probabilities })
    }

    pub fn probabilities(&self) -> &[f64] {
        &self.probabilities
    }

    pub fn len(&self) -> usize {
        self.probabilities.len()
    }

    pub fn is_empty(&self) -> bool {
        self.probabilities.is_empty()
    }

    pub fn get(&self, position: usize) -> f64 {
        self.probabilities.get(position).copied().unwrap_or(0.0)
    }

    pub fn total(&self) -> f64 {
        self.probabilities.iter().sum()
    }

    pub fn iter(&self) -> impl Iterator<Item = (usize, f64)> + '_ {
        self.probabilities.iter().copied().enumerate()
    }
}

/// Marginal over edge labels; loop-interior amplitude counts toward its base
/// position.
pub fn position_distribution(state: &FullState) -> PositionDistribution {
    let probabilities = state
        .amps
        .chunks_exact(state.stride())
        .map(|site| site.iter().map(|a| a.norm_sqr()).sum())
        .collect();
    PositionDistribution { probabilities }
}

pub fn expected_position(dist: &PositionDistribution) -> f64 {
    dist.iter().map(|(x, p)| x as f64 * p).sum()
}

/// Exact law of the classical walk that advances with probability `1/n` per
/// step: `Binomial(t, 1/n)`, computed by repeated convolution.
pub fn classical_distribution(n: usize, t: usize) -> Result<PositionDistribution> {
    if n == 0 {
        return Err(Error::invalid("n", "must be >= 1"));
    }
    let advance = 1.0 / n as f64;
    let stay = 1.0 - advance;
    let mut p = vec![0.0; t + 1];
    p[0] = 1.0;
    for s in 1..=t {
        for x in (1..=s).rev() {
            p[x] = p[x] * stay + p[x - 1] * advance;
        }
        p[0] *= stay;
    }
    Ok(PositionDistribution { probabilities: p })
}
