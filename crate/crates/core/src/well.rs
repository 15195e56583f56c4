//! Stationary states of a particle in the infinite square well on `[0, 1]`.
//!
//! The sine family ("Adam" waves) satisfies the Dirichlet boundary condition,
//! the cosine family ("Eve" waves) the derivative condition. Energies are
//! expressed in units of `energy_scale`, standing for `π²ħ²/(2m)`, with `ħ = 1`
//! in the phase factors.

use std::f64::consts::{PI, SQRT_2};

use num_complex::Complex64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::grid::{Interval, NodeValues};
use crate::ordering::sort_and_screen;

fn check_n(n: usize) -> Result<()> {
    if n == 0 {
        Err(Error::ZeroQuantumNumber)
    } else {
        Ok(())
    }
}

fn check_x(x: f64) -> Result<()> {
    Interval::unit().check(x)
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WellState {
    n: usize,
    energy_scale: f64,
}

impl WellState {
    pub fn new(n: usize) -> Result<Self> {
        Self::with_scale(n, 1.0)
    }

    pub fn with_scale(n: usize, energy_scale: f64) -> Result<Self> {
        check_n(n)?;
        if !(energy_scale > 0.0 && energy_scale.is_finite()) {
            return Err(Error::InvalidArgument(format!("energy scale {energy_scale}")));
        }
        Ok(Self { n, energy_scale })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn energy(&self) -> f64 {
        (self.n * self.n) as f64 * self.energy_scale
    }

    /// `ψ_n(x) e^{i E_n t}`.
    pub fn adam_at(&self, x: f64, t: f64) -> Result<Complex64> {
        Ok(adam_wave(self.n, x)? * Complex64::from_polar(1.0, self.energy() * t))
    }

    /// `φ_n(x) e^{-i E_n t}`.
    pub fn eve_at(&self, x: f64, t: f64) -> Result<Complex64> {
        Ok(eve_wave(self.n, x)? * Complex64::from_polar(1.0, -self.energy() * t))
    }
}

/// `E_n = n² · scale`.
pub fn energy(n: usize, energy_scale: f64) -> Result<f64> {
    Ok(WellState::with_scale(n, energy_scale)?.energy())
}

/// `√2 sin(nπx)`.
pub fn adam_wave(n: usize, x: f64) -> Result<f64> {
    Ok(SQRT_2 * adam_essence(n, x)?)
}

/// `sin(nπx)`, the Adam wave without its amplitude.
pub fn adam_essence(n: usize, x: f64) -> Result<f64> {
    check_n(n)?;
    check_x(x)?;
    Ok((n as f64 * PI * x).sin())
}

/// `√2 cos(nπx)`.
pub fn eve_wave(n: usize, x: f64) -> Result<f64> {
    Ok(SQRT_2 * eve_essence(n, x)?)
}

pub fn eve_essence(n: usize, x: f64) -> Result<f64> {
    check_n(n)?;
    check_x(x)?;
    Ok((n as f64 * PI * x).cos())
}

/// `φ_n(x) + i ψ_n(x) = √2 e^{inπx}`.
pub fn complex_wave(n: usize, x: f64) -> Result<Complex64> {
    Ok(Complex64::new(eve_wave(n, x)?, adam_wave(n, x)?))
}

/// Frequency and wavelength of level `n` together with their product.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Duality {
    pub nu: f64,
    pub lambda: f64,
    pub product: f64,
}

/// `ν_n = n/2`, `λ_n = 2/n`.
///
/// The product is formed from the integer numerator `2n` and denominator
/// `2n`, so it is exactly 1.
pub fn duality_numbers(n: usize) -> Result<Duality> {
    check_n(n)?;
    let num = (n as u128) * 2;
    let den = 2 * (n as u128);
    Ok(Duality { nu: n as f64 / 2.0, lambda: 2.0 / n as f64, product: (num / den) as f64 })
}

/// Squared ground states of a well of width `2(hi - lo)` translated to `lo`:
/// `(sin², cos²)` of `π(y - lo) / (2(hi - lo))`.
pub fn local_ground_state(lo: f64, hi: f64, y: f64) -> Result<(f64, f64)> {
    let sub = Interval::new(lo, hi)?;
    sub.check(y)?;
    let phase = PI * (y - lo) / (2.0 * (hi - lo));
    let (s, c) = phase.sin_cos();
    Ok((s * s, c * c))
}

/// Descendant subintervals of level `n`: one per cell of the sorted node values.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DescendantLedger {
    pub level: usize,
    pub count: usize,
    pub subintervals: Vec<(f64, f64)>,
}

pub fn descendant_ledger(nodes: &NodeValues, level: usize) -> Result<DescendantLedger> {
    check_n(level)?;
    let cells = nodes.grid().cells();
    if cells != 2 * level {
        return Err(Error::InconsistentGrid { expected: 2 * level, found: cells });
    }
    let order = sort_and_screen(nodes.values())?;
    let subintervals: Vec<(f64, f64)> =
        order.sorted_values().windows(2).map(|w| (w[0], w[1])).collect();
    Ok(DescendantLedger { level, count: subintervals.len(), subintervals })
}

/// Total descendants over levels `1..=levels`: `L(L + 1)`.
pub fn cumulative_descendants(levels: usize) -> usize {
    (1..=levels).map(|n| 2 * n).sum()
}

/// One row of a wave table.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WaveRow {
    pub x: f64,
    pub psi: f64,
    pub phi: f64,
    pub psi_sq: f64,
    pub phi_sq: f64,
}

/// `points` equispaced samples of `ψ_n`, `φ_n` and their squares on `[0, 1]`.
pub fn wave_table(n: usize, points: usize) -> Result<Vec<WaveRow>> {
    check_n(n)?;
    Interval::unit()
        .probe_points(points)
        .into_iter()
        .map(|x| {
            let psi = adam_wave(n, x)?;
            let phi = eve_wave(n, x)?;
            Ok(WaveRow { x, psi, phi, psi_sq: psi * psi, phi_sq: phi * phi })
        })
        .collect()
}
