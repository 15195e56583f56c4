//! Conditional-expectation approximants and their error diagnostics.
//!
//! Three evaluation modes share one entry point:
//!
//! * `Quadrature` evaluates `∫ y p_n(x, y) dy / ∫ p_n(x, y) dy` by slice
//!   quadrature of the max-product density;
//! * `ClosedForm` (triangular family only) uses the interpolation weights
//!   `φ_l(x) = A_l(x) Δy_l / Σ_j A_j(x) Δy_j`, with the gaps taken in sorted
//!   order and the smallest value borrowing the gap of the next one;
//! * `Constant` is the degenerate case where every sample is equal.

use log::debug;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::basis::{Family, GridBasis};
use crate::error::{Error, Result};
use crate::grid::{make_grid, sample_nodes, Interval, NodeValues};
use crate::kernel::{normalize, JointDensity, MaxProductKernel, DENOMINATOR_FLOOR};
use crate::ordering::{gap_report, sort_and_screen, SortedOrder};
use crate::quadrature::QuadratureSpec;

/// Slack added to the `3 · max gap` bound to absorb quadrature error.
pub const STEP5_ALLOWANCE: f64 = 1e-6;

/// Smallest probe grid accepted by the error reports.
pub const MIN_PROBES: usize = 101;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Mode {
    Quadrature,
    ClosedForm,
}

impl Mode {
    /// Closed form for the triangular family, quadrature for the trigonometric one.
    pub fn default_for(family: Family) -> Self {
        match family {
            Family::Triangular => Mode::ClosedForm,
            Family::Trig => Mode::Quadrature,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Mode::Quadrature => "quad",
            Mode::ClosedForm => "closed",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum EvalMode {
    Quadrature,
    ClosedForm,
    Constant,
}

#[derive(Debug, Clone)]
struct ClosedForm {
    basis: GridBasis,
    gaps: Vec<f64>,
    y: Vec<f64>,
}

#[derive(Debug, Clone)]
#[allow(clippy::large_enum_variant)]
enum Inner {
    Constant { beta: f64 },
    Built { order: SortedOrder, density: JointDensity, closed: Option<ClosedForm> },
}

/// The approximant `f_n` of a sampled function.
#[derive(Debug, Clone)]
pub struct Approximant {
    n: usize,
    family: Family,
    nodes: NodeValues,
    inner: Inner,
}

/// [`Approximant::build`] with the default quadrature.
pub fn build_approximant<F>(
    f: F,
    interval: Interval,
    n: usize,
    family: Family,
    mode: Mode,
) -> Result<Approximant>
where
    F: Fn(f64) -> f64,
{
    Approximant::build(f, interval, n, family, mode, QuadratureSpec::default())
}

impl Approximant {
    /// Sample `f`, sort and screen the node values, and assemble the density.
    ///
    /// For the trigonometric family `n` is the quantum number and the grid has
    /// `2n` cells.
    pub fn build<F>(
        f: F,
        interval: Interval,
        n: usize,
        family: Family,
        mode: Mode,
        q: QuadratureSpec,
    ) -> Result<Self>
    where
        F: Fn(f64) -> f64,
    {
        if family == Family::Trig && mode == Mode::ClosedForm {
            return Err(Error::ClosedFormNeedsTriangular);
        }
        let basis = match family {
            Family::Triangular => GridBasis::triangular(make_grid(interval, n)?),
            Family::Trig => GridBasis::trig(interval, n)?,
        };
        let nodes = sample_nodes(f, basis.grid())?;
        if nodes.is_constant() {
            let beta = nodes.values()[0];
            return Ok(Self { n, family, nodes, inner: Inner::Constant { beta } });
        }

        let order = sort_and_screen(nodes.values())?;
        let closed = (mode == Mode::ClosedForm).then(|| ClosedForm {
            basis: basis.clone(),
            gaps: order.sorted_gaps(),
            y: nodes.values().to_vec(),
        });
        let kernel = MaxProductKernel::new(basis, &order)?;
        let density = normalize(kernel, q)?;
        Ok(Self { n, family, nodes, inner: Inner::Built { order, density, closed } })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn mode(&self) -> EvalMode {
        match &self.inner {
            Inner::Constant { .. } => EvalMode::Constant,
            Inner::Built { closed: Some(_), .. } => EvalMode::ClosedForm,
            Inner::Built { closed: None, .. } => EvalMode::Quadrature,
        }
    }

    pub fn nodes(&self) -> &NodeValues {
        &self.nodes
    }

    pub fn interval(&self) -> Interval {
        self.nodes.grid().interval()
    }

    /// Value of the constant path, if taken.
    pub fn beta(&self) -> Option<f64> {
        match self.inner {
            Inner::Constant { beta } => Some(beta),
            _ => None,
        }
    }

    pub fn density(&self) -> Option<&JointDensity> {
        match &self.inner {
            Inner::Built { density, .. } => Some(density),
            _ => None,
        }
    }

    pub fn order(&self) -> Option<&SortedOrder> {
        match &self.inner {
            Inner::Built { order, .. } => Some(order),
            _ => None,
        }
    }

    /// `f_n(x)`; always within `[y_min, y_max]`.
    pub fn eval(&self, x: f64) -> Result<f64> {
        self.interval().check(x)?;
        match &self.inner {
            Inner::Constant { beta } => Ok(*beta),
            Inner::Built { closed: Some(cf), .. } => Ok(self.closed_eval(cf, x)),
            Inner::Built { .. } => self.density_mean(x),
        }
    }

    /// Piecewise-linear interpolation of the node values.
    fn linear(&self, x: f64) -> f64 {
        let grid = self.nodes.grid();
        let k = grid.locate(x);
        let (x0, x1) = (grid.node(k - 1), grid.node(k));
        let t = ((x - x0) / (x1 - x0)).clamp(0.0, 1.0);
        let y = self.nodes.values();
        ((1.0 - t) * y[k - 1] + t * y[k]).clamp(self.nodes.y_min(), self.nodes.y_max())
    }

    fn closed_eval(&self, cf: &ClosedForm, x: f64) -> f64 {
        let (k, a) = cf.basis.active(x);
        let den = a[0] * cf.gaps[k - 1] + a[1] * cf.gaps[k];
        let value = if den < self.floor() {
            // Flat across the cell: the weights are undefined.
            debug!("closed-form denominator {den:e} below floor at x = {x}; using linear interpolation");
            a[0] * cf.y[k - 1] + a[1] * cf.y[k]
        } else {
            (a[0] * cf.gaps[k - 1] * cf.y[k - 1] + a[1] * cf.gaps[k] * cf.y[k]) / den
        };
        value.clamp(self.nodes.y_min(), self.nodes.y_max())
    }

    fn floor(&self) -> f64 {
        DENOMINATOR_FLOOR * (self.nodes.y_max() - self.nodes.y_min())
    }

    /// Interpolation weights `φ_l(x)` in original index order.
    ///
    /// `None` outside closed-form mode or where the denominator is below floor.
    pub fn weights(&self, x: f64) -> Option<Vec<f64>> {
        let Inner::Built { closed: Some(cf), .. } = &self.inner else {
            return None;
        };
        if !self.interval().contains(x) {
            return None;
        }
        let (k, a) = cf.basis.active(x);
        let den = a[0] * cf.gaps[k - 1] + a[1] * cf.gaps[k];
        if den < self.floor() {
            return None;
        }
        let mut w = vec![0.0; cf.y.len()];
        w[k - 1] += a[0] * cf.gaps[k - 1] / den;
        w[k] += a[1] * cf.gaps[k] / den;
        Some(w)
    }

    /// Conditional mean straight from the density, whatever the mode.
    ///
    /// Falls back to linear interpolation where the slice mass is below floor.
    fn density_mean(&self, x: f64) -> Result<f64> {
        match &self.inner {
            Inner::Constant { beta } => Ok(*beta),
            Inner::Built { density, .. } => match density.conditional_mean(x) {
                Err(Error::DenominatorUnderflow { value, .. }) => {
                    debug!("slice mass {value:e} below floor at x = {x}; using linear interpolation");
                    Ok(self.linear(x))
                }
                other => other,
            },
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ErrorReport {
    pub n: usize,
    /// Largest `|f_n - f|` on the probe grid; a lower bound on the true sup.
    pub sup_error: f64,
    /// `3 · max` gap between consecutive sorted node values.
    pub bound_3dy: f64,
    pub probe_count: usize,
    pub max_node_residual: f64,
    /// `sup_error <= bound_3dy + STEP5_ALLOWANCE`.
    pub within_bound: bool,
}

pub fn error_report<F>(appx: &Approximant, f: F, probes: usize) -> Result<ErrorReport>
where
    F: Fn(f64) -> f64,
{
    if probes < MIN_PROBES {
        return Err(Error::InvalidArgument(format!(
            "need at least {MIN_PROBES} probes, got {probes}"
        )));
    }
    let mut sup_error: f64 = 0.0;
    for x in appx.interval().probe_points(probes) {
        sup_error = sup_error.max((appx.eval(x)? - f(x)).abs());
    }
    let mut max_node_residual: f64 = 0.0;
    for (&x, &y) in appx.nodes.grid().nodes().iter().zip(appx.nodes.values()) {
        max_node_residual = max_node_residual.max((appx.eval(x)? - y).abs());
    }
    let bound_3dy = 3.0 * gap_report(appx.nodes.values())?.d;
    Ok(ErrorReport {
        n: appx.n,
        sup_error,
        bound_3dy,
        probe_count: probes,
        max_node_residual,
        within_bound: sup_error <= bound_3dy + STEP5_ALLOWANCE,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ResidualReport {
    pub n: usize,
    pub residual_sup: f64,
}

/// Sup over the probe grid of `|∫ y p dy / ∫ p dy - f(x)|`.
pub fn residual_report<F>(density: &JointDensity, f: F, probes: usize) -> Result<ResidualReport>
where
    F: Fn(f64) -> f64,
{
    let mut residual_sup: f64 = 0.0;
    for x in density.x_interval().probe_points(probes.max(2)) {
        residual_sup = residual_sup.max((density.conditional_mean(x)? - f(x)).abs());
    }
    let n = density.kernel().basis_x().quantum_number().unwrap_or(density.kernel().basis_x().grid().cells());
    Ok(ResidualReport { n, residual_sup })
}

impl Approximant {
    /// Residual of the density behind this approximant; zero on the constant path.
    pub fn residual_report<F>(&self, f: F, probes: usize) -> Result<ResidualReport>
    where
        F: Fn(f64) -> f64,
    {
        let mut residual_sup: f64 = 0.0;
        for x in self.interval().probe_points(probes.max(2)) {
            residual_sup = residual_sup.max((self.density_mean(x)? - f(x)).abs());
        }
        Ok(ResidualReport { n: self.n, residual_sup })
    }
}

/// One [`ErrorReport`] per entry of `ns`, all on the same probe grid.
///
/// Entries are built in parallel and returned in the order of `ns`.
pub fn convergence_study<F>(
    f: F,
    interval: Interval,
    ns: &[usize],
    family: Family,
    mode: Mode,
    q: QuadratureSpec,
    probes: usize,
) -> Result<Vec<ErrorReport>>
where
    F: Fn(f64) -> f64 + Sync,
{
    if ns.is_empty() {
        return Err(Error::InvalidArgument("empty list of partition sizes".into()));
    }
    ns.par_iter()
        .map(|&n| {
            let appx = Approximant::build(&f, interval, n, family, mode, q)?;
            error_report(&appx, &f, probes)
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn unit() -> Interval {
        Interval::unit()
    }

    #[test]
    fn constant_function_takes_degenerate_path() {
        for n in [1, 3, 10] {
            let a = build_approximant(|_| 7.0, unit(), n, Family::Trig, Mode::Quadrature).unwrap();
            assert_eq!(a.mode(), EvalMode::Constant);
            assert_eq!(a.beta(), Some(7.0));
            for x in [0.0, 0.3, 1.0] {
                assert_eq!(a.eval(x).unwrap(), 7.0);
            }
            let r = error_report(&a, |_| 7.0, 101).unwrap();
            assert_eq!(r.sup_error, 0.0);
            assert_eq!(a.residual_report(|_| 7.0, 101).unwrap().residual_sup, 0.0);
        }
    }

    #[test]
    fn closed_form_rejected_for_trig() {
        let err = build_approximant(|x| x, unit(), 3, Family::Trig, Mode::ClosedForm).unwrap_err();
        assert_eq!(err, Error::ClosedFormNeedsTriangular);
    }

    #[test]
    fn closed_form_interpolates_identity() {
        let a = build_approximant(|x| x, unit(), 4, Family::Triangular, Mode::ClosedForm).unwrap();
        for &x in a.nodes().grid().nodes() {
            assert_eq!(a.eval(x).unwrap(), x);
        }
        let a = build_approximant(|x| x, unit(), 2, Family::Triangular, Mode::ClosedForm).unwrap();
        assert_eq!(a.eval(0.5).unwrap(), 0.5);
    }

    #[test]
    fn quadrature_near_left_end_of_projectile() {
        let f = |x: f64| x - x * x;
        let a = build_approximant(f, unit(), 10, Family::Triangular, Mode::Quadrature).unwrap();
        let bound = 3.0 * gap_report(a.nodes().values()).unwrap().d;
        assert!(a.eval(0.0).unwrap().abs() <= bound);
    }

    #[test]
    fn probe_count_checked() {
        let a = build_approximant(|x| x, unit(), 2, Family::Triangular, Mode::ClosedForm).unwrap();
        assert!(error_report(&a, |x| x, 100).is_err());
        assert!(a.eval(1.5).is_err());
    }

    #[test]
    fn flat_cells_share_their_class_gap() {
        let f = |x: f64| if x <= 0.5 { 0.0 } else { x - 0.5 };
        let a = build_approximant(f, unit(), 4, Family::Triangular, Mode::ClosedForm).unwrap();
        assert_eq!(a.eval(0.1).unwrap(), 0.0);
        let w = a.weights(0.1).unwrap();
        assert!((w.iter().sum::<f64>() - 1.0).abs() < 1e-15);
    }

    #[test]
    fn near_ties_fall_back_to_linear_interpolation() {
        let f = |x: f64| if x < 0.75 { 1e-18 * x } else { x };
        let a = build_approximant(f, unit(), 2, Family::Triangular, Mode::ClosedForm).unwrap();
        assert!(a.weights(0.25).is_none());
        assert_eq!(a.eval(0.25).unwrap(), 0.25e-18);
        assert!(a.weights(0.75).is_some());
        let q = build_approximant(f, unit(), 2, Family::Triangular, Mode::Quadrature).unwrap();
        assert!(q.eval(0.0).is_ok());
    }

    #[test]
    fn residual_equals_sup_error_in_quadrature_mode() {
        let f = |x: f64| x * (1.0 - x);
        let a = build_approximant(f, unit(), 5, Family::Trig, Mode::Quadrature).unwrap();
        let e = error_report(&a, f, 201).unwrap();
        let r = residual_report(a.density().unwrap(), f, 201).unwrap();
        assert_eq!(e.sup_error, r.residual_sup);
        assert_eq!(r.n, 5);
    }

    #[test]
    fn study_single_entry() {
        let reports = convergence_study(
            |x| x,
            unit(),
            &[1],
            Family::Triangular,
            Mode::Quadrature,
            QuadratureSpec::default(),
            101,
        )
        .unwrap();
        assert_eq!(reports.len(), 1);
        assert!(reports[0].sup_error <= reports[0].bound_3dy);
    }
}
