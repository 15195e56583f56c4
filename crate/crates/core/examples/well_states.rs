//! Infinite square well: energies, waves and the duality numbers.
//!
//! `cargo run --example well_states`

use condexp::well::{
    complex_wave, cumulative_descendants, duality_numbers, energy, wave_table, WellState,
};

fn main() -> condexp::Result<()> {
    for n in 1..=4 {
        let d = duality_numbers(n)?;
        println!(
            "n={n}: E={} nu={} lambda={} nu*lambda={} descendants so far={}",
            energy(n, 1.0)?,
            d.nu,
            d.lambda,
            d.product,
            cumulative_descendants(n)
        );
    }

    for row in wave_table(2, 9)? {
        println!(
            "x={:.3} psi={:+.4} phi={:+.4} psi²+phi²={:.4}",
            row.x,
            row.psi,
            row.phi,
            row.psi_sq + row.phi_sq
        );
    }

    let z = complex_wave(3, 0.1)?;
    let state = WellState::new(3)?;
    println!("phi+i·psi at x=0.1: {z:.4}, Adam at t=0.5: {:.4}", state.adam_at(0.1, 0.5)?);
    Ok(())
}
