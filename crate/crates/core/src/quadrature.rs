use serde::Serialize;

use crate::error::{Error, Result};

/// Composite Simpson resolution, counted per cell of the underlying partition.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuadratureSpec {
    panels_per_cell: usize,
}

impl QuadratureSpec {
    pub const DEFAULT_PANELS: usize = 64;

    pub fn new(panels_per_cell: usize) -> Result<Self> {
        if panels_per_cell < 2 || !panels_per_cell.is_multiple_of(2) {
            return Err(Error::InvalidQuadrature(format!(
                "panels per cell must be even and at least 2, got {panels_per_cell}"
            )));
        }
        Ok(Self { panels_per_cell })
    }

    pub fn panels_per_cell(&self) -> usize {
        self.panels_per_cell
    }

    /// Same rule with the panel count multiplied by `factor`.
    pub fn refined(&self, factor: usize) -> Self {
        Self { panels_per_cell: self.panels_per_cell * factor.max(1) }
    }
}

impl Default for QuadratureSpec {
    fn default() -> Self {
        Self { panels_per_cell: Self::DEFAULT_PANELS }
    }
}

/// Composite Simpson rule on `[a, b]` with an even number of panels.
pub fn simpson<F: FnMut(f64) -> f64>(mut f: F, a: f64, b: f64, panels: usize) -> f64 {
    debug_assert!(panels >= 2 && panels.is_multiple_of(2));
    if a == b {
        return 0.0;
    }
    let h = (b - a) / panels as f64;
    let mut odd = 0.0;
    let mut even = 0.0;
    for j in 1..panels {
        let v = f(a + j as f64 * h);
        if j % 2 == 1 {
            odd += v;
        } else {
            even += v;
        }
    }
    h / 3.0 * (f(a) + 4.0 * odd + 2.0 * even + f(b))
}

/// Abscissae and weights of [`simpson`], in evaluation order.
pub fn simpson_nodes(a: f64, b: f64, panels: usize) -> impl Iterator<Item = (f64, f64)> {
    let h = (b - a) / panels as f64;
    (0..=panels).map(move |j| {
        let w = if j == 0 || j == panels {
            1.0
        } else if j % 2 == 1 {
            4.0
        } else {
            2.0
        };
        let x = if j == panels { b } else { a + j as f64 * h };
        (x, w * h / 3.0)
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn exact_for_cubics() {
        let v = simpson(|x| x * x * x - 2.0 * x + 1.0, 0.0, 2.0, 2);
        assert!((v - 2.0).abs() < 1e-14);
    }

    #[test]
    fn converges_on_smooth_integrand() {
        let v = simpson(f64::sin, 0.0, std::f64::consts::PI, 64);
        assert!((v - 2.0).abs() < 1e-7);
    }

    #[test]
    fn node_form_matches() {
        let a: f64 = simpson_nodes(0.5, 1.5, 8).map(|(x, w)| w * x.exp()).sum();
        let b = simpson(f64::exp, 0.5, 1.5, 8);
        assert!((a - b).abs() < 1e-14);
    }

    #[test]
    fn panel_validation() {
        assert!(QuadratureSpec::new(0).is_err());
        assert!(QuadratureSpec::new(3).is_err());
        assert_eq!(QuadratureSpec::new(2).unwrap().panels_per_cell(), 2);
        assert_eq!(QuadratureSpec::default().panels_per_cell(), 64);
    }
}
