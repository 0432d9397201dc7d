//! Tjurina numbers and contact codimension: the number of parameters of a
//! miniversal deformation, and the monomial vectors that span the normal
//! space.
//!
//! Run with `cargo run --example tjurina_and_contact`.

use germlab::invariants::{contact_codim, tjurina_hypersurface, tjurina_icis, validate_icis};
use germlab::parse::parse_poly;
use germlab::{MapGerm, Ring};

fn main() -> germlab::Result<()> {
    let ring = Ring::local(&["x", "y", "z"])?;
    let eqs = vec![
        parse_poly(&ring, "x^2 + y^2 + z^2")?,
        parse_poly(&ring, "x*y")?,
    ];
    let x = validate_icis(&ring, eqs.clone())?;
    println!("tau of the curve = {}", tjurina_icis(&x)?);

    // The same number through the defining map: its contact codimension.
    let tgt = Ring::local(&["u", "v"])?;
    let f = MapGerm::new(ring.clone(), tgt, eqs, vec![])?;
    let (codim, basis) = contact_codim(&f)?;
    println!("contact codimension = {}", codim);
    println!("normal space basis (entries of a miniversal deformation):");
    for b in &basis {
        println!("  {}", b);
    }

    // Hypersurfaces have the one-line formula; weighted homogeneous ones
    // have mu = tau.
    let r2 = Ring::local(&["x", "y"])?;
    let cusp = parse_poly(&r2, "x^2 - y^3")?;
    println!("tau(cusp) = {}", tjurina_hypersurface(&cusp)?);
    let nonqh = parse_poly(&r2, "x^4 + y^5 + x^2*y^3")?;
    println!("tau(x^4 + y^5 + x^2*y^3) = {} (mu is 12)", tjurina_hypersurface(&nonqh)?);
    Ok(())
}
