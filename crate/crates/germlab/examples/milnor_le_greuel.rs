//! Milnor number of a positive-dimensional complete intersection via the
//! recursive intersection formula, with the per-step quotient dimensions.
//!
//! Run with `cargo run --example milnor_le_greuel`.

use germlab::invariants::{milnor_hypersurface, milnor_icis, validate_icis};
use germlab::parse::parse_poly;
use germlab::Ring;

fn main() -> germlab::Result<()> {
    let ring = Ring::local(&["x", "y", "z"])?;
    let eqs = vec![
        parse_poly(&ring, "x^2 + y^2 + z^2")?,
        parse_poly(&ring, "x*y")?,
    ];
    let x = validate_icis(&ring, eqs)?;
    println!(
        "curve in 3-space: dim {}, complete intersection: {}, isolated: {}",
        x.dimension(),
        x.is_complete_intersection(),
        x.has_isolated_singularity()
    );

    let m = milnor_icis(&x, 42, 5, 10)?;
    for step in &m.chain {
        println!(
            "prefix {}: quotient dimension {}, Milnor number {}",
            step.prefix_len, step.quotient_dim, step.prefix_mu
        );
    }
    println!("mu = {}", m.mu);

    // A hypersurface goes through the closed formula instead.
    let g = parse_poly(&ring, "x^3 + y^3 - z^2")?;
    println!("mu(x^3 + y^3 - z^2) = {}", milnor_hypersurface(&g)?.mu);
    Ok(())
}
