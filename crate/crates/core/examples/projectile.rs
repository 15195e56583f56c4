//! Approximate a projectile trajectory with the well-state family.
//!
//! `cargo run --example projectile`

use condexp::{build_approximant, error_report, Family, Interval, Mode};

fn main() -> condexp::Result<()> {
    let (g, alpha) = (9.81_f64, std::f64::consts::FRAC_PI_4);
    let v0 = g.sqrt();
    let height = move |x: f64| x * alpha.tan() - g * x * x / (2.0 * v0 * v0 * alpha.cos().powi(2));

    let appx = build_approximant(height, Interval::unit(), 20, Family::Trig, Mode::Quadrature)?;
    println!("{:>6} {:>10} {:>10}", "x", "f(x)", "f_20(x)");
    for i in 0..=10 {
        let x = i as f64 / 10.0;
        println!("{x:>6.2} {:>10.6} {:>10.6}", height(x), appx.eval(x)?);
    }

    let report = error_report(&appx, height, 1001)?;
    println!("sup error {:.3e}, 3·max gap {:.3e}", report.sup_error, report.bound_3dy);
    Ok(())
}
