//! Sup error against partition size for both families.
//!
//! `cargo run --example convergence_study`

use condexp::{convergence_study, Family, Interval, Mode, QuadratureSpec};

fn main() -> condexp::Result<()> {
    let f = |x: f64| (3.0 * x).sin() + 0.5 * x;
    let ns = [2, 4, 8, 16, 32, 64];
    for family in [Family::Triangular, Family::Trig] {
        let rows = convergence_study(
            f,
            Interval::unit(),
            &ns,
            family,
            Mode::Quadrature,
            QuadratureSpec::default(),
            1001,
        )?;
        println!("{}:", family.name());
        for r in rows {
            println!("  n={:<3} sup={:.3e} bound={:.3e}", r.n, r.sup_error, r.bound_3dy);
        }
    }
    Ok(())
}
