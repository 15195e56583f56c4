//! Equidistant partitions of the domain and the sampled node values.

use serde::Serialize;

use crate::error::{Error, Result};

/// A closed interval `[lo, hi]` with `lo < hi`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct Interval {
    lo: f64,
    hi: f64,
}

impl Interval {
    pub fn new(lo: f64, hi: f64) -> Result<Self> {
        if !(lo.is_finite() && hi.is_finite() && lo < hi) {
            return Err(Error::InvalidInterval { lo, hi });
        }
        Ok(Self { lo, hi })
    }

    pub fn unit() -> Self {
        Self { lo: 0.0, hi: 1.0 }
    }

    pub fn lo(&self) -> f64 {
        self.lo
    }

    pub fn hi(&self) -> f64 {
        self.hi
    }

    pub fn width(&self) -> f64 {
        self.hi - self.lo
    }

    pub fn contains(&self, x: f64) -> bool {
        x >= self.lo && x <= self.hi
    }

    pub(crate) fn check(&self, x: f64) -> Result<()> {
        if self.contains(x) {
            Ok(())
        } else {
            Err(Error::OutOfDomain { value: x, lo: self.lo, hi: self.hi })
        }
    }

    /// `count` equispaced points covering the interval, both endpoints included.
    pub fn probe_points(&self, count: usize) -> Vec<f64> {
        match count {
            0 => Vec::new(),
            1 => vec![self.lo],
            _ => {
                let step = self.width() / (count - 1) as f64;
                let mut pts: Vec<f64> =
                    (0..count).map(|i| self.lo + i as f64 * step).collect();
                pts[count - 1] = self.hi;
                pts
            }
        }
    }
}

/// The partition `lo = x_0 < x_1 < ... < x_n = hi` with constant step.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct EquidistantGrid {
    interval: Interval,
    n: usize,
    step: f64,
    nodes: Vec<f64>,
}

/// Partition `interval` into `n` equal cells.
///
/// Nodes are computed as `lo + i * step` rather than by accumulation, and the
/// last node is pinned to `hi`, so the same inputs always give the same bits.
pub fn make_grid(interval: Interval, n: usize) -> Result<EquidistantGrid> {
    if n == 0 {
        return Err(Error::ZeroPartition);
    }
    let step = interval.width() / n as f64;
    let mut nodes: Vec<f64> = (0..=n).map(|i| interval.lo + i as f64 * step).collect();
    nodes[0] = interval.lo;
    nodes[n] = interval.hi;
    if nodes.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidArgument(format!(
            "interval [{}, {}] too narrow for {} cells",
            interval.lo, interval.hi, n
        )));
    }
    Ok(EquidistantGrid { interval, n, step, nodes })
}

impl EquidistantGrid {
    pub fn interval(&self) -> Interval {
        self.interval
    }

    /// Number of cells.
    pub fn cells(&self) -> usize {
        self.n
    }

    pub fn step(&self) -> f64 {
        self.step
    }

    pub fn nodes(&self) -> &[f64] {
        &self.nodes
    }

    pub fn node(&self, i: usize) -> f64 {
        self.nodes[i]
    }

    /// Index `k` in `1..=n` of a cell `[x_{k-1}, x_k]` containing `x`.
    ///
    /// Constant time: the guess from the step is corrected against the stored
    /// node values. Points outside the interval are clamped to the end cells.
    pub fn locate(&self, x: f64) -> usize {
        let n = self.n;
        let guess = ((x - self.interval.lo) / self.step).floor();
        let mut k = if guess.is_nan() || guess < 0.0 {
            1
        } else {
            (guess as usize + 1).min(n)
        };
        while k > 1 && x < self.nodes[k - 1] {
            k -= 1;
        }
        while k < n && x > self.nodes[k] {
            k += 1;
        }
        k
    }
}

/// Source-function values at the grid nodes.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct NodeValues {
    grid: EquidistantGrid,
    y: Vec<f64>,
    y_min: f64,
    y_max: f64,
}

/// Evaluate `f` at every node of `grid`.
///
/// A non-finite sample aborts construction.
pub fn sample_nodes<F>(f: F, grid: &EquidistantGrid) -> Result<NodeValues>
where
    F: Fn(f64) -> f64,
{
    let mut y = Vec::with_capacity(grid.nodes.len());
    for &x in &grid.nodes {
        let value = f(x);
        if !value.is_finite() {
            return Err(Error::NonFinite { x, value });
        }
        y.push(value);
    }
    let y_min = y.iter().copied().fold(f64::INFINITY, f64::min);
    let y_max = y.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    Ok(NodeValues { grid: grid.clone(), y, y_min, y_max })
}

impl NodeValues {
    pub fn grid(&self) -> &EquidistantGrid {
        &self.grid
    }

    pub fn values(&self) -> &[f64] {
        &self.y
    }

    pub fn y_min(&self) -> f64 {
        self.y_min
    }

    pub fn y_max(&self) -> f64 {
        self.y_max
    }

    /// True when every sample is the same number.
    pub fn is_constant(&self) -> bool {
        self.y_min == self.y_max
    }
}
