//! Image hypersurface of a finite germ: the reduced equation from kernel
//! elimination, the conductor element by determinantal division, and the
//! first Fitting ideal as a preimage.
//!
//! Run with `cargo run --example image_and_conductor`.

use germlab::invariants::IcisGerm;
use germlab::mond::{conductor_lambda, fitting_first, image_equation, MondProblem};
use germlab::parse::parse_poly;
use germlab::{MapGerm, Ring};

fn main() -> germlab::Result<()> {
    let src = Ring::local(&["x", "y"])?;
    let tgt = Ring::local(&["X", "Y", "Z"])?;
    let f = MapGerm::new(
        src.clone(),
        tgt.clone(),
        vec![
            parse_poly(&src, "x")?,
            parse_poly(&src, "y^2")?,
            parse_poly(&src, "x*y")?,
        ],
        vec![],
    )?;
    let p = MondProblem::new(IcisGerm::smooth(&src)?, f)?;

    let (g, ghat) = image_equation(&p)?;
    println!("image equation g = {}", g);
    assert_eq!(g, ghat.map_by_names(&tgt)?); // smooth source: no extension variables

    let lambda = conductor_lambda(&p, &ghat)?;
    println!("conductor element lambda = {}", lambda);
    println!("(the double-point locus of the cross-cap is x = 0)");

    let (fitting, warning) = fitting_first(&p, &lambda)?;
    let gens: Vec<String> = fitting.gens().iter().map(|q| q.to_string()).collect();
    println!("first Fitting ideal = ({})", gens.join(", "));
    println!("quotient dimension = {}", fitting.krull_dim_leading());
    if let Some(w) = warning {
        println!("warning: {}", w);
    }
    Ok(())
}
