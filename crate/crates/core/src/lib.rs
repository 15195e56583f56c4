//! Continuous functions as limits of conditional expectations.
//!
//! Given `f` continuous on `[a, b]`, sample it on an equidistant grid, pair a
//! family of bumps on the domain with a family of bumps on the sorted sample
//! values, and combine the pairs with a pointwise maximum. Normalized, the
//! result is a joint density `p_n(x, y)` whose conditional mean
//! `E[Y | X = x]` converges uniformly to `f` as the grid is refined.
//!
//! Two bump families are provided: piecewise-linear hats and squared
//! infinite-square-well ground states. For hats the conditional mean also has
//! a closed interpolation form.
//!
//! ```
//! use condexp::{build_approximant, Family, Interval, Mode};
//!
//! let f = |x: f64| x * (1.0 - x);
//! let appx = build_approximant(f, Interval::unit(), 20, Family::Trig, Mode::Quadrature).unwrap();
//! assert!((appx.eval(0.5).unwrap() - 0.25).abs() < 0.01);
//! ```

pub mod approx;
pub mod basis;
pub mod cli;
pub mod error;
pub mod expr;
pub mod grid;
pub mod kernel;
pub mod ordering;
pub mod quadrature;
pub mod well;

pub use approx::{
    build_approximant, convergence_study, error_report, residual_report, Approximant,
    ErrorReport, EvalMode, Mode, ResidualReport,
};
pub use basis::{Family, GridBasis, LevelBasis};
pub use error::{Error, Result};
pub use expr::{parse_expression, Expr, ParseError};
pub use grid::{make_grid, sample_nodes, EquidistantGrid, Interval, NodeValues};
pub use kernel::{normalize, DensityGrid, JointDensity, MaxProductKernel};
pub use ordering::{gap_report, sort_and_screen, GapReport, SortedOrder};
pub use quadrature::QuadratureSpec;
