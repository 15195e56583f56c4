//! Closed-form interpolation weights of the hat family.
//!
//! `cargo run --example closed_form`

use condexp::{build_approximant, Family, Interval, Mode};

fn main() -> condexp::Result<()> {
    let f = |x: f64| (2.0 * x).exp();
    let appx = build_approximant(f, Interval::unit(), 5, Family::Triangular, Mode::ClosedForm)?;

    for (&x, &y) in appx.nodes().grid().nodes().iter().zip(appx.nodes().values()) {
        println!("node x={x:.1}  f={y:.6}  f_n={:.6}", appx.eval(x)?);
    }
    for x in [0.13, 0.5, 0.77] {
        let w = appx.weights(x).expect("denominator above floor");
        let shown: Vec<String> = w.iter().map(|v| format!("{v:.3}")).collect();
        println!("x={x}: weights [{}], sum {:.15}", shown.join(", "), w.iter().sum::<f64>());
    }
    Ok(())
}
