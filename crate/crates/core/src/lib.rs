//! Exact simulation of the directed quantum walk on the line with `n - 1`
//! self-loops per vertex, driven by the `n`-dimensional Fourier coin.
//!
//! The crate is organized bottom-up:
//!
//! - [`graph`]: the line-with-loops graph family, an edge-list reader/writer
//!   and the in-degree = out-degree realizability check.
//! - [`coin`]: the Fourier coin, the reduced 2x2 coin and coin application.
//! - [`engine`]: walk state, edge pairings, the shift, `U = S (I x C)`,
//!   and the exact classical baseline.
//! - [`reduce`]: the two-dimensional reduced walk and its equivalence with
//!   the full walk.
//! - [`analysis`]: concentration intervals, tail masses, moments and sweeps.
//! - [`output`]: CSV writers for distributions and sweep records.
//! - [`verify`]: the invariant suite driven by `dqwalk verify`.

pub mod analysis;
pub mod coin;
pub mod engine;
pub mod error;
pub mod graph;
pub mod output;
pub mod reduce;
pub mod verify;

pub use num_complex::Complex64;

pub use analysis::{interval_bounds, moments, sweep, tail_mass, IntervalBound, SweepSpec, SweepRecord};
pub use coin::{apply_coin, fourier_coin, reduced_coin, CoinMatrix, ReducedCoin};
pub use engine::{
    classical_distribution, evolve, expected_position, initial_state, make_random_pairing,
    position_distribution, shift, step, EdgeLabel, EdgePairing, FullState, PairingMode,
    PositionDistribution, WalkConfig,
};
pub use error::{Error, Result};
pub use graph::{
    build_line_with_loops, check_unitary_realizable, parse_edge_list, render_edge_list,
    DirectedGraph, LineWithLoopsSpec,
};
pub use reduce::{equivalence_check, evolve_reduced, project_to_reduced, ReducedState};
