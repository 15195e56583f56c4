//! Max-product kernel and its slice integrals at a few points.
//!
//! `cargo run --example kernel_slices`

use condexp::{
    make_grid, sample_nodes, sort_and_screen, GridBasis, Interval, MaxProductKernel, QuadratureSpec,
};

fn main() -> condexp::Result<()> {
    let grid = make_grid(Interval::new(-1.0, 1.0)?, 8)?;
    let nodes = sample_nodes(|x| x * x * x - x, &grid)?;
    let order = sort_and_screen(nodes.values())?;
    let kernel = MaxProductKernel::new(GridBasis::triangular(grid), &order)?;
    println!("pairing of domain index to level position: {:?}", kernel.pairing());

    let q = QuadratureSpec::default();
    for x in [-0.9, -0.4, 0.0, 0.3, 0.85] {
        let (i0, i1) = kernel.y_slice_integrals(x, q)?;
        println!("x={x:+.2}: mass {i0:.6}, mean {:+.6}, x³-x = {:+.6}", i1 / i0, x * x * x - x);
    }
    Ok(())
}
