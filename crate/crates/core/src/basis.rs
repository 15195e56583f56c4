//! Base-function families on the domain axis and on the level axis.
//!
//! Both families are nodal bumps: the base function of node `i` rises from 0
//! at the previous node to 1 at node `i` and falls back to 0 at the next one.
//! They differ only in the profile of a single cell:
//!
//! * triangular: the linear pair `t` / `1 - t`;
//! * trigonometric: the ground-state probability pair `sin²(πt/2)` /
//!   `cos²(πt/2)` of a particle in a well twice the cell width.
//!
//! On the domain axis with `2n` cells over `[0, 1]`, the trigonometric bump of
//! node `i` equals `cos²(nπx)` (even `i`) or `sin²(nπx)` (odd `i`) on the window
//! `[(i-1)/2n, (i+1)/2n]`, clipped to the interval.

use std::f64::consts::FRAC_PI_2;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::grid::{make_grid, EquidistantGrid, Interval};
use crate::ordering::SortedOrder;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Family {
    Triangular,
    Trig,
}

impl Family {
    /// Rising half of a bump on local cell coordinate `t` in `[0, 1]`.
    ///
    /// Exactly 0 at `t = 0` and exactly 1 at `t = 1`.
    #[inline]
    pub fn rise(self, t: f64) -> f64 {
        self.halves(t).1
    }

    /// Falling half of a bump; exactly 1 at `t = 0` and exactly 0 at `t = 1`.
    #[inline]
    pub fn fall(self, t: f64) -> f64 {
        self.halves(t).0
    }

    /// `(fall(t), rise(t))`.
    ///
    /// Kept out of line: inlined, the compiler may pick `sin` alone or a fused
    /// `sincos` depending on which half the caller uses, and the two can round
    /// differently.
    #[inline(never)]
    pub fn halves(self, t: f64) -> (f64, f64) {
        match self {
            Family::Triangular => (1.0 - t, t),
            Family::Trig => {
                if t <= 0.5 {
                    let (s, c) = (FRAC_PI_2 * t).sin_cos();
                    (c * c, s * s)
                } else {
                    let (s, c) = (FRAC_PI_2 * (1.0 - t)).sin_cos();
                    (s * s, c * c)
                }
            }
        }
    }

    /// Where `a_rise * rise(t)` overtakes `a_fall * fall(t)` on `[0, 1]`.
    ///
    /// Both weights must be positive.
    pub fn crossover(self, a_rise: f64, a_fall: f64) -> f64 {
        match self {
            Family::Triangular => a_fall / (a_rise + a_fall),
            Family::Trig => (a_fall / a_rise).sqrt().atan() / FRAC_PI_2,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Family::Triangular => "tri",
            Family::Trig => "trig",
        }
    }
}

/// Domain-axis bases `A_0 .. A_m` over an equidistant grid.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct GridBasis {
    grid: EquidistantGrid,
    family: Family,
    quantum_number: Option<usize>,
}

impl GridBasis {
    /// Hat functions on `grid`.
    pub fn triangular(grid: EquidistantGrid) -> Self {
        Self { grid, family: Family::Triangular, quantum_number: None }
    }

    /// Squared well eigenstates of quantum number `n`, windowed on the
    /// `2n + 1` points where `sin(nπx)` or `cos(nπx)` vanishes.
    pub fn trig(interval: Interval, n: usize) -> Result<Self> {
        if n == 0 {
            return Err(Error::ZeroQuantumNumber);
        }
        let grid = make_grid(interval, 2 * n)?;
        Ok(Self { grid, family: Family::Trig, quantum_number: Some(n) })
    }

    pub fn grid(&self) -> &EquidistantGrid {
        &self.grid
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn quantum_number(&self) -> Option<usize> {
        self.quantum_number
    }

    /// Number of base functions, `m + 1`.
    pub fn len(&self) -> usize {
        self.grid.nodes().len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// `A_i(x)` with range checks.
    pub fn eval(&self, i: usize, x: f64) -> Result<f64> {
        let m = self.grid.cells();
        if i > m {
            return Err(Error::IndexOutOfRange { index: i, max: m });
        }
        self.grid.interval().check(x)?;
        Ok(self.value(i, x))
    }

    /// `A_i(x)`, zero outside its support.
    pub fn value(&self, i: usize, x: f64) -> f64 {
        let nodes = self.grid.nodes();
        if i > 0 && nodes[i - 1] <= x && x <= nodes[i] {
            return self.family.rise(local(nodes, i, x));
        }
        if i + 1 < nodes.len() && nodes[i] <= x && x <= nodes[i + 1] {
            return self.family.fall(local(nodes, i + 1, x));
        }
        0.0
    }

    /// Cell `k` containing `x` together with `(A_{k-1}(x), A_k(x))`.
    ///
    /// All other base functions vanish at `x`.
    #[inline]
    pub fn active(&self, x: f64) -> (usize, [f64; 2]) {
        let k = self.grid.locate(x);
        let (fall, rise) = self.family.halves(local(self.grid.nodes(), k, x));
        (k, [fall, rise])
    }
}

/// Local coordinate of `x` in cell `[nodes[k-1], nodes[k]]`.
#[inline]
fn local(nodes: &[f64], k: usize, x: f64) -> f64 {
    (x - nodes[k - 1]) / (nodes[k] - nodes[k - 1])
}

/// Level-axis bases `B_i` built on the distinct sorted node values.
///
/// The function of an original index is the bump of its class; duplicate
/// indices therefore evaluate identically.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelBasis {
    strict: Vec<f64>,
    class_map: Vec<usize>,
    family: Family,
}

impl LevelBasis {
    pub fn new(order: &SortedOrder, family: Family) -> Result<Self> {
        let strict = order.strict_values().to_vec();
        if strict.len() < 2 {
            return Err(Error::DegenerateRange(strict[0]));
        }
        Ok(Self { strict, class_map: order.class_map().to_vec(), family })
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn strict_nodes(&self) -> &[f64] {
        &self.strict
    }

    pub fn class_map(&self) -> &[usize] {
        &self.class_map
    }

    pub fn lo(&self) -> f64 {
        self.strict[0]
    }

    pub fn hi(&self) -> f64 {
        *self.strict.last().unwrap()
    }

    /// Number of level cells.
    pub fn cells(&self) -> usize {
        self.strict.len() - 1
    }

    /// `B_i(y)` for original index `i`, with range checks.
    pub fn eval(&self, i: usize, y: f64) -> Result<f64> {
        if i >= self.class_map.len() {
            return Err(Error::IndexOutOfRange { index: i, max: self.class_map.len() - 1 });
        }
        if !(self.lo() <= y && y <= self.hi()) {
            return Err(Error::OutOfDomain { value: y, lo: self.lo(), hi: self.hi() });
        }
        Ok(self.level_value(self.class_map[i], y))
    }

    /// Bump of strict position `p` at `y`, zero outside its support.
    ///
    /// At an interior node only one side's piece is used: both equal 1 there.
    pub fn level_value(&self, p: usize, y: f64) -> f64 {
        let s = &self.strict;
        if p > 0 && s[p - 1] <= y && y <= s[p] {
            return self.family.rise(local(s, p, y));
        }
        if p + 1 < s.len() && s[p] <= y && y <= s[p + 1] {
            return self.family.fall(local(s, p + 1, y));
        }
        0.0
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ordering::sort_and_screen;

    fn tri(n: usize) -> GridBasis {
        GridBasis::triangular(make_grid(Interval::unit(), n).unwrap())
    }

    fn level(values: &[f64], family: Family) -> LevelBasis {
        LevelBasis::new(&sort_and_screen(values).unwrap(), family).unwrap()
    }

    #[test]
    fn triangular_x_examples() {
        let b = tri(2);
        assert_eq!(b.eval(1, 0.5).unwrap(), 1.0);
        assert_eq!(b.eval(1, 0.25).unwrap(), 0.5);
        assert_eq!(b.eval(0, 1.0).unwrap(), 0.0);
        assert!(matches!(b.eval(3, 0.5), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(b.eval(0, 1.5), Err(Error::OutOfDomain { .. })));
    }

    #[test]
    fn triangular_y_examples() {
        let b = level(&[0.0, 1.0, 2.0], Family::Triangular);
        assert_eq!(b.eval(1, 1.0).unwrap(), 1.0);
        assert_eq!(b.eval(0, 0.5).unwrap(), 0.5);
        assert!(b.eval(0, 2.5).is_err());

        let dup = level(&[0.0, 1.0, 1.0, 2.0], Family::Triangular);
        for y in [0.0, 0.3, 1.0, 1.7, 2.0] {
            assert_eq!(dup.eval(1, y).unwrap(), dup.eval(2, y).unwrap());
        }
    }

    #[test]
    fn trig_x_examples() {
        let b = GridBasis::trig(Interval::unit(), 1).unwrap();
        assert_eq!(b.eval(0, 0.0).unwrap(), 1.0);
        assert_eq!(b.eval(1, 0.5).unwrap(), 1.0);
        assert!(b.eval(3, 0.5).is_err());
        assert!(matches!(GridBasis::trig(Interval::unit(), 0), Err(Error::ZeroQuantumNumber)));
    }

    #[test]
    fn trig_x_matches_windowed_eigenstates() {
        for n in 1..=6usize {
            let b = GridBasis::trig(Interval::unit(), n).unwrap();
            let m = 2 * n;
            for s in 0..=400 {
                let x = s as f64 / 400.0;
                for i in 0..=m {
                    let lo = (i as f64 - 1.0) / m as f64;
                    let hi = (i as f64 + 1.0) / m as f64;
                    let phase = n as f64 * std::f64::consts::PI * x;
                    let expected = if x < lo || x > hi {
                        0.0
                    } else if i % 2 == 0 {
                        phase.cos().powi(2)
                    } else {
                        phase.sin().powi(2)
                    };
                    let got = b.value(i, x);
                    assert!((got - expected).abs() < 1e-12, "n={n} i={i} x={x}: {got} vs {expected}");
                }
            }
        }
    }

    #[test]
    fn trig_y_examples() {
        let b = level(&[0.0, 0.25], Family::Trig);
        assert_eq!(b.eval(0, 0.0).unwrap(), 1.0);
        assert_eq!(b.eval(1, 0.25).unwrap(), 1.0);

        let b = level(&[0.0, 0.3, 1.0], Family::Trig);
        assert_eq!(b.eval(1, 0.3).unwrap(), 1.0);
        // continuity across its own node
        let eps = 1e-9;
        assert!((b.eval(1, 0.3 - eps).unwrap() - 1.0).abs() < 1e-12);
        assert!((b.eval(1, 0.3 + eps).unwrap() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn trig_y_pieces_are_ground_states() {
        let b = level(&[0.0, 0.3, 1.0], Family::Trig);
        for s in 0..=100 {
            let y = 0.3 + 0.7 * s as f64 / 100.0;
            let phase = std::f64::consts::PI * (y - 0.3) / (2.0 * 0.7);
            assert!((b.eval(1, y).unwrap() - phase.cos().powi(2)).abs() < 1e-12);
            assert!((b.eval(2, y).unwrap() - phase.sin().powi(2)).abs() < 1e-12);
        }
    }

    #[test]
    fn profiles_hit_exact_endpoints() {
        for f in [Family::Triangular, Family::Trig] {
            assert_eq!(f.rise(0.0), 0.0);
            assert_eq!(f.rise(1.0), 1.0);
            assert_eq!(f.fall(0.0), 1.0);
            assert_eq!(f.fall(1.0), 0.0);
        }
    }

    #[test]
    fn crossover_balances_weights() {
        for f in [Family::Triangular, Family::Trig] {
            for (ar, af) in [(0.5, 0.5), (0.9, 0.1), (0.2, 0.8), (1.0, 1e-9)] {
                let t = f.crossover(ar, af);
                assert!((0.0..=1.0).contains(&t));
                assert!((ar * f.rise(t) - af * f.fall(t)).abs() < 1e-14);
            }
        }
    }

    #[test]
    fn nodal_matrices_are_identity() {
        for b in [tri(5), GridBasis::trig(Interval::unit(), 3).unwrap()] {
            let nodes = b.grid().nodes().to_vec();
            for (j, &x) in nodes.iter().enumerate() {
                for i in 0..b.len() {
                    assert_eq!(b.value(i, x), if i == j { 1.0 } else { 0.0 });
                }
            }
        }
        let lb = level(&[0.0, 0.4, 0.5, 2.0], Family::Trig);
        for (q, &y) in lb.strict_nodes().iter().enumerate() {
            for p in 0..4 {
                assert_eq!(lb.level_value(p, y), if p == q { 1.0 } else { 0.0 });
            }
        }
    }

    #[test]
    fn degenerate_level_axis_rejected() {
        let order = sort_and_screen(&[2.0, 2.0]).unwrap();
        assert_eq!(LevelBasis::new(&order, Family::Trig), Err(Error::DegenerateRange(2.0)));
    }
}
