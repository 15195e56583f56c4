//! Largest sorted gap never exceeds the largest adjacent jump.
//!
//! `cargo run --example gap_lemma`

use condexp::cli::lemma_sweep;
use condexp::{gap_report, sort_and_screen};

fn main() -> condexp::Result<()> {
    let values = [3.0, 1.0, 2.0, 2.0, 0.5];
    let order = sort_and_screen(&values)?;
    println!("perm {:?}, classes {:?}, strict {:?}", order.perm(), order.classes(), order.strict_values());

    let g = gap_report(&values)?;
    println!("d = {}, e = {}", g.d, g.e);

    let s = lemma_sweep(10_000, 1, 100, 100.0);
    println!("{} random sequences, {} failures, smallest margin {:.3e}", s.count, s.failures, s.worst_margin);
    Ok(())
}
