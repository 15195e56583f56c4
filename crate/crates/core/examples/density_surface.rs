//! Sample the joint density on a lattice and check its mass.
//!
//! `cargo run --example density_surface`

use condexp::{build_approximant, Family, Interval, Mode};

fn main() -> condexp::Result<()> {
    let f = |x: f64| x * (1.0 - x);
    let appx = build_approximant(f, Interval::unit(), 6, Family::Trig, Mode::Quadrature)?;
    let density = appx.density().expect("non-constant f has a density");
    println!("H = {:.12}", density.h());

    let grid = density.sample_grid(200, 200);
    println!("midpoint mass on 200x200: {:.6}", grid.mass());

    // coarse text rendering, x across, y upwards
    let coarse = density.sample_grid(48, 12);
    let peak = coarse.values.iter().flatten().cloned().fold(0.0, f64::max);
    for j in (0..coarse.ys.len()).rev() {
        let line: String = coarse
            .values
            .iter()
            .map(|col| match col[j] / peak {
                v if v > 0.75 => '#',
                v if v > 0.4 => '+',
                v if v > 0.1 => '.',
                _ => ' ',
            })
            .collect();
        println!("{:>6.3} |{line}", coarse.ys[j]);
    }
    Ok(())
}
