//! The Jacobian module of an image hypersurface: its dimension splits as the
//! torsion dimension plus the left-right codimension, which the jet model
//! cross-checks for smooth sources.
//!
//! Run with `cargo run --example jacobian_module`.

use germlab::invariants::IcisGerm;
use germlab::jet::ae_codim_jet;
use germlab::mond::{jacobian_module, torsion_dim, MondProblem};
use germlab::parse::parse_poly;
use germlab::{MapGerm, Ring};

fn main() -> germlab::Result<()> {
    let src = Ring::local(&["x", "y"])?;
    let tgt = Ring::local(&["X", "Y", "Z"])?;

    for comps in [
        vec!["x", "y^2", "x*y"],             // stable cross-cap
        vec!["x", "y^2", "y^3 + x^2*y"],     // one-parameter germ
    ] {
        let polys = comps
            .iter()
            .map(|c| parse_poly(&src, c))
            .collect::<germlab::Result<Vec<_>>>()?;
        let f = MapGerm::new(src.clone(), tgt.clone(), polys, vec![])?;
        let p = MondProblem::new(IcisGerm::smooth(&src)?, f.clone())?;
        let (module, g, _) = jacobian_module(&p)?;
        let torsion = torsion_dim(&g)?;
        let jet = ae_codim_jet(&f, 7)?;
        println!("f = ({})", comps.join(", "));
        println!("  g = {}", g);
        println!("  dim M(g) = {}", module.dim);
        println!("  dim K(g) = {}", torsion);
        println!("  codimension from the module: {}", module.dim - torsion);
        println!("  codimension from the jet model: {}", jet);
        assert_eq!(module.dim - torsion, jet);
    }
    Ok(())
}
