//! Parse a user expression and approximate it.
//!
//! `cargo run --example expressions -- "x^3 - x/2"`

use condexp::{build_approximant, error_report, parse_expression, Family, Interval, Mode};

fn main() {
    let source = std::env::args().nth(1).unwrap_or_else(|| "exp(-x) * sin(7*x)".into());
    let expr = match parse_expression(&source) {
        Ok(e) => e,
        Err(e) => {
            eprintln!("{source}\n{}^ {e}", " ".repeat(e.offset()));
            std::process::exit(1);
        }
    };
    println!("parsed: {expr}");

    let f = |x: f64| expr.eval(x);
    for n in [4, 16, 64] {
        let appx = build_approximant(f, Interval::unit(), n, Family::Triangular, Mode::Quadrature)
            .expect("finite on [0, 1]");
        let r = error_report(&appx, f, 1001).expect("enough probes");
        println!("n={n:<3} sup error {:.3e}", r.sup_error);
    }
}
