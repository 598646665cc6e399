//! Coin operators.
//!
//! The full walk uses the `n x n` discrete Fourier transform matrix as its
//! coin, with row/column 0 assigned to the forward edge and `k` to loop `k`.
//! The reduced walk uses the real 2x2 coin `[[beta, alpha], [alpha, -beta]]`.

use std::f64::consts::TAU;

use num_complex::Complex64;

use crate::engine::FullState;
use crate::error::{Error, Result};

/// Dense square coin, row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CoinMatrix {
    dim: usize,
    entries: Vec<Complex64>,
}

impl CoinMatrix {
    /// Wraps arbitrary entries without a unitarity check. The walk engine
    /// will happily apply a non-unitary matrix; `verify` uses this to build
    /// its negative controls.
    pub fn from_entries(dim: usize, entries: Vec<Complex64>) -> Result<Self> {
        if dim == 0 {
            return Err(Error::invalid("dim", "must be >= 1"));
        }
        if entries.len() != dim * dim {
            return Err(Error::DimensionMismatch { expected: dim * dim, actual: entries.len() });
        }
        Ok(Self { dim, entries })
    }

    pub fn identity(dim: usize) -> Result<Self> {
        let mut entries = vec![Complex64::ZERO; dim * dim];
        for j in 0..dim {
            entries[j * dim + j] = Complex64::ONE;
        }
        Self::from_entries(dim, entries)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.entries[row * self.dim + col]
    }

    pub fn entries(&self) -> &[Complex64] {
        &self.entries
    }

    /// `max |(C^dagger C - I)_{jk}|`.
    pub fn unitarity_deviation(&self) -> f64 {
        let n = self.dim;
        let mut worst = 0.0f64;
        for j in 0..n {
            for k in 0..n {
                let mut acc = Complex64::ZERO;
                for m in 0..n {
                    acc += self.entry(m, j).conj() * self.entry(m, k);
                }
                if j == k {
                    acc -= Complex64::ONE;
                }
                worst = worst.max(acc.norm());
            }
        }
        worst
    }

    pub fn is_unitary(&self, tolerance: f64) -> bool {
        self.unitarity_deviation() < tolerance
    }

    /// `out = C * input` for one vertex's coin vector.
    #[inline]
    pub fn apply_to(&self, input: &[Complex64], out: &mut [Complex64]) {
        let n = self.dim;
        debug_assert_eq!(input.len(), n);
        debug_assert_eq!(out.len(), n);
        for (row, o) in self.entries.chunks_exact(n).zip(out.iter_mut()) {
            *o = row.iter().zip(input).map(|(c, a)| c * a).sum();
        }
    }
}

/// The `n`-dimensional discrete Fourier transform, `C[j][k] = w^{jk} / sqrt(n)`
/// with `w = exp(2 pi i / n)`.
pub fn fourier_coin(n: usize) -> Result<CoinMatrix> {
    if n == 0 {
        return Err(Error::invalid("n", "coin dimension must be >= 1"));
    }
    let scale = 1.0 / (n as f64).sqrt();
    let mut entries = Vec::with_capacity(n * n);
    for j in 0..n {
        for k in 0..n {
            // Reduce jk mod n so the phase argument stays in [0, 2 pi).
            let phase = TAU * ((j * k) % n) as f64 / n as f64;
            let (sin, cos) = phase.sin_cos();
            entries.push(Complex64::new(cos * scale, sin * scale));
        }
    }
    CoinMatrix::from_entries(n, entries)
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ReducedCoin {
    /// `sqrt((n - 1) / n)`, the forward/loop mixing amplitude.
    pub alpha: f64,
    /// `1 / sqrt(n)`.
    pub beta: f64,
}

impl ReducedCoin {
    /// `[[beta, alpha], [alpha, -beta]]` on `{Forward, LoopSuper}`.
    pub fn matrix(&self) -> [[f64; 2]; 2] {
        [[self.beta, self.alpha], [self.alpha, -self.beta]]
    }

    #[inline]
    pub fn apply(&self, forward: Complex64, loops: Complex64) -> (Complex64, Complex64) {
        (
            forward * self.beta + loops * self.alpha,
            forward * self.alpha - loops * self.beta,
        )
    }
}

pub fn reduced_coin(n: usize) -> Result<ReducedCoin> {
    if n < 2 {
        return Err(Error::invalid("n", "the reduced coin needs n >= 2 (no loop subspace otherwise)"));
    }
    let nf = n as f64;
    Ok(ReducedCoin { alpha: ((nf - 1.0) / nf).sqrt(), beta: 1.0 / nf.sqrt() })
}

/// Applies `coin` independently at every line position. Loop-interior labels
/// (discretized loops) see the identity.
pub fn apply_coin(state: &FullState, coin: &CoinMatrix) -> Result<FullState> {
    let mut out = state.clone();
    out.apply_coin_in_place(coin)?;
    Ok(out)
}
