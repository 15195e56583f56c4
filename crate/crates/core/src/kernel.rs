//! Max-product kernel, its normalization and the level-axis slice integrals.
//!
//! The kernel pairs each domain base function with the level base function of
//! the same original index, `R(x, y) = max_i A_i(x) B_i(y)`. At a fixed `x`
//! only the two domain bumps of the cell holding `x` are nonzero, so a slice
//! `y -> R(x, y)` lives on at most four level cells. Inside one level cell the
//! slice is the larger of one rising and one falling piece; the crossover is
//! located in closed form and each smooth piece gets its own Simpson panels.

use rayon::prelude::*;
use serde::Serialize;

use crate::basis::{Family, GridBasis, LevelBasis};
use crate::error::{Error, Result};
use crate::grid::Interval;
use crate::ordering::SortedOrder;
use crate::quadrature::{simpson, simpson_nodes, QuadratureSpec};

/// Relative floor for the slice mass `∫ R(x, y) dy`.
pub const DENOMINATOR_FLOOR: f64 = 1e-14;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct MaxProductKernel {
    basis_x: GridBasis,
    basis_y: LevelBasis,
    /// Strict level position paired with each domain index.
    pairing: Vec<usize>,
}

impl MaxProductKernel {
    /// Pair `basis_x` with level bases built from `order`, the sorted node
    /// values sampled on the same grid.
    pub fn new(basis_x: GridBasis, order: &SortedOrder) -> Result<Self> {
        if order.len() != basis_x.len() {
            return Err(Error::InconsistentGrid {
                expected: basis_x.len() - 1,
                found: order.len().saturating_sub(1),
            });
        }
        let basis_y = LevelBasis::new(order, basis_x.family())?;
        let pairing = order.class_map().to_vec();
        Ok(Self { basis_x, basis_y, pairing })
    }

    pub fn basis_x(&self) -> &GridBasis {
        &self.basis_x
    }

    pub fn basis_y(&self) -> &LevelBasis {
        &self.basis_y
    }

    pub fn family(&self) -> Family {
        self.basis_x.family()
    }

    pub fn pairing(&self) -> &[usize] {
        &self.pairing
    }

    pub fn x_interval(&self) -> Interval {
        self.basis_x.grid().interval()
    }

    pub fn y_range(&self) -> (f64, f64) {
        (self.basis_y.lo(), self.basis_y.hi())
    }

    pub fn denominator_floor(&self) -> f64 {
        DENOMINATOR_FLOOR * (self.basis_y.hi() - self.basis_y.lo())
    }

    /// `R(x, y)`; points outside `X × Y` are an error.
    pub fn eval(&self, x: f64, y: f64) -> Result<f64> {
        self.basis_x.grid().interval().check(x)?;
        let (lo, hi) = self.y_range();
        if !(lo <= y && y <= hi) {
            return Err(Error::OutOfDomain { value: y, lo, hi });
        }
        Ok(self.value(x, y))
    }

    /// Cell-lookup evaluation; only the two active domain bumps are visited.
    #[inline]
    pub fn value(&self, x: f64, y: f64) -> f64 {
        let (k, a) = self.basis_x.active(x);
        let left = a[0] * self.basis_y.level_value(self.pairing[k - 1], y);
        let right = a[1] * self.basis_y.level_value(self.pairing[k], y);
        left.max(right)
    }

    /// Plain maximum over every index; the definition, at `O(m)` cost.
    pub fn value_reference(&self, x: f64, y: f64) -> f64 {
        (0..self.basis_x.len())
            .map(|i| self.basis_x.value(i, x) * self.basis_y.level_value(self.pairing[i], y))
            .fold(0.0, f64::max)
    }

    /// `(∫ R(x, y) dy, ∫ y R(x, y) dy)` over the level range.
    pub fn y_slice_integrals(&self, x: f64, q: QuadratureSpec) -> Result<(f64, f64)> {
        self.basis_x.grid().interval().check(x)?;
        let (i0, i1) = self.slice_unchecked(x, q);
        let floor = self.denominator_floor();
        if i0.is_nan() || i0 < floor || i0 == 0.0 {
            return Err(Error::DenominatorUnderflow { x, value: i0, floor });
        }
        Ok((i0, i1))
    }

    fn slice_unchecked(&self, x: f64, q: QuadratureSpec) -> (f64, f64) {
        let (k, a) = self.basis_x.active(x);
        let cands = [(a[0], self.pairing[k - 1]), (a[1], self.pairing[k])];
        let cells = self.basis_y.cells();

        let mut touched: Vec<usize> = Vec::with_capacity(4);
        for &(w, p) in &cands {
            if w > 0.0 {
                if p >= 1 {
                    touched.push(p);
                }
                if p < cells {
                    touched.push(p + 1);
                }
            }
        }
        touched.sort_unstable();
        touched.dedup();

        let family = self.family();
        let panels = q.panels_per_cell();
        let nodes = self.basis_y.strict_nodes();
        let (mut i0, mut i1) = (0.0, 0.0);
        for c in touched {
            // Level cell c spans strict nodes c-1 (falling piece) and c (rising piece).
            let w_fall = weight_for(&cands, c - 1);
            let w_rise = weight_for(&cands, c);
            let base = nodes[c - 1];
            let width = nodes[c] - base;
            let mut piece = |w: f64, rising: bool, t0: f64, t1: f64| {
                if w <= 0.0 || t1 <= t0 {
                    return;
                }
                let prof = |t: f64| if rising { family.rise(t) } else { family.fall(t) };
                i0 += width * simpson(|t| w * prof(t), t0, t1, panels);
                i1 += width * simpson(|t| (base + t * width) * w * prof(t), t0, t1, panels);
            };
            if w_fall > 0.0 && w_rise > 0.0 {
                let t = family.crossover(w_rise, w_fall);
                piece(w_fall, false, 0.0, t);
                piece(w_rise, true, t, 1.0);
            } else if w_fall > 0.0 {
                piece(w_fall, false, 0.0, 1.0);
            } else {
                piece(w_rise, true, 0.0, 1.0);
            }
        }
        (i0, i1)
    }

    /// Conditional mean `∫ y R dy / ∫ R dy` at `x`.
    pub fn conditional_mean(&self, x: f64, q: QuadratureSpec) -> Result<f64> {
        let (i0, i1) = self.y_slice_integrals(x, q)?;
        let (lo, hi) = self.y_range();
        Ok((i1 / i0).clamp(lo, hi))
    }
}

/// Largest domain weight among candidates paired with strict position `p`.
#[inline]
fn weight_for(cands: &[(f64, usize); 2], p: usize) -> f64 {
    cands
        .iter()
        .filter(|&&(_, q)| q == p)
        .map(|&(w, _)| w)
        .fold(0.0, f64::max)
}

/// `p(x, y) = R(x, y) / H` on `X × Y`, zero elsewhere.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct JointDensity {
    kernel: MaxProductKernel,
    h: f64,
    quadrature: QuadratureSpec,
}

/// Compute the normalization constant `H = ∬ R dx dy`.
///
/// The domain integral is composite Simpson over each grid cell of the slice
/// masses; slices are independent and evaluated in parallel, then summed in a
/// fixed order.
pub fn normalize(kernel: MaxProductKernel, q: QuadratureSpec) -> Result<JointDensity> {
    let grid = kernel.basis_x.grid();
    let panels = q.panels_per_cell();
    let nodes: Vec<(f64, f64)> = (1..=grid.cells())
        .flat_map(|c| simpson_nodes(grid.node(c - 1), grid.node(c), panels))
        .collect();
    let masses: Vec<f64> = nodes
        .par_iter()
        .map(|&(x, _)| kernel.slice_unchecked(x, q).0)
        .collect();
    let h: f64 = nodes.iter().zip(&masses).map(|(&(_, w), &m)| w * m).sum();
    if h.is_nan() || h <= kernel.denominator_floor() {
        return Err(Error::NonPositiveNormalization(h));
    }
    Ok(JointDensity { kernel, h, quadrature: q })
}

impl JointDensity {
    pub fn kernel(&self) -> &MaxProductKernel {
        &self.kernel
    }

    /// Normalization constant `H`.
    pub fn h(&self) -> f64 {
        self.h
    }

    pub fn quadrature(&self) -> QuadratureSpec {
        self.quadrature
    }

    pub fn x_interval(&self) -> Interval {
        self.kernel.x_interval()
    }

    pub fn y_range(&self) -> (f64, f64) {
        self.kernel.y_range()
    }

    /// Density value; zero outside the support rectangle.
    pub fn pdf(&self, x: f64, y: f64) -> f64 {
        let (lo, hi) = self.y_range();
        if !self.x_interval().contains(x) || !(lo <= y && y <= hi) {
            return 0.0;
        }
        self.kernel.value(x, y) / self.h
    }

    pub fn y_slice_integrals(&self, x: f64) -> Result<(f64, f64)> {
        self.kernel.y_slice_integrals(x, self.quadrature)
    }

    pub fn conditional_mean(&self, x: f64) -> Result<f64> {
        self.kernel.conditional_mean(x, self.quadrature)
    }

    /// Density sampled at cell centres of an `nx × ny` lattice over the
    /// support, row-major with one row per `x`.
    pub fn sample_grid(&self, nx: usize, ny: usize) -> DensityGrid {
        let iv = self.x_interval();
        let (lo, hi) = self.y_range();
        let dx = iv.width() / nx as f64;
        let dy = (hi - lo) / ny as f64;
        let xs: Vec<f64> = (0..nx).map(|j| iv.lo() + (j as f64 + 0.5) * dx).collect();
        let ys: Vec<f64> = (0..ny).map(|k| lo + (k as f64 + 0.5) * dy).collect();
        let values = xs
            .par_iter()
            .map(|&x| ys.iter().map(|&y| self.pdf(x, y)).collect::<Vec<_>>())
            .collect();
        DensityGrid { xs, ys, cell_area: dx * dy, values }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct DensityGrid {
    pub xs: Vec<f64>,
    pub ys: Vec<f64>,
    pub cell_area: f64,
    pub values: Vec<Vec<f64>>,
}

impl DensityGrid {
    /// Midpoint-rule estimate of the total mass.
    pub fn mass(&self) -> f64 {
        self.values.iter().flatten().sum::<f64>() * self.cell_area
    }
}
