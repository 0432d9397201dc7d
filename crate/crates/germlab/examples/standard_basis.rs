//! Standard bases in a local ring: leading terms, weak normal forms,
//! membership with unit multipliers, and staircase dimensions.
//!
//! Run with `cargo run --example standard_basis`.

use germlab::parse::parse_poly;
use germlab::{Ideal, Ring};

fn main() -> germlab::Result<()> {
    let ring = Ring::local(&["x", "y", "z"])?;
    let gens = vec![
        parse_poly(&ring, "x^2 - y^3")?,
        parse_poly(&ring, "x^3 - z^2")?,
    ];
    let ideal = Ideal::new(&ring, gens)?;

    println!("ring: {}", ring);
    println!("standard basis:");
    for b in ideal.std_basis() {
        println!("  {}   (leading term exponents {:?})", b, b.leading_term().unwrap().exp);
    }

    // In the local ordering 1 is the largest monomial, so x^2 + x^3 is a unit
    // multiple of x^2 and reduces to zero against (x^2).
    let small = Ideal::new(&ring, vec![parse_poly(&ring, "x^2")?])?;
    let p = parse_poly(&ring, "x^2 + x^3")?;
    println!("NF(x^2 + x^3, (x^2)) = {}", small.normal_form(&p)?);
    println!("x^2 + x^3 in (x^2)?  {}", small.contains(&p)?);
    println!("x in (x^2)?          {}", small.contains(&parse_poly(&ring, "x")?)?);

    // Vector-space dimension of a zero-dimensional quotient.
    let box_ideal = Ideal::new(
        &ring,
        vec![
            parse_poly(&ring, "x^2")?,
            parse_poly(&ring, "y^3")?,
            parse_poly(&ring, "z")?,
        ],
    )?;
    println!("dim O/(x^2, y^3, z) = {}", box_ideal.vs_dimension()?);
    println!("krull dim of the curve: {}", ideal.krull_dim_leading());
    Ok(())
}
