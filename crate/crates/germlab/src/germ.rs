//! Map germs between ring presentations.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;

/// A germ f: (X,0) -> (C^p, 0), stored as a source ring, a target ring, one
/// component polynomial per target variable, and the equations cutting out X
/// inside the source (empty for a smooth source).
#[derive(Clone)]
pub struct MapGerm {
    source: Ring,
    target: Ring,
    components: Vec<Poly>,
    icis_equations: Vec<Poly>,
}

impl MapGerm {
    pub fn new(
        source: Ring,
        target: Ring,
        components: Vec<Poly>,
        icis_equations: Vec<Poly>,
    ) -> Result<MapGerm> {
        if components.len() != target.nvars() {
            return Err(Error::Arity(format!(
                "{} components for a target with {} variables",
                components.len(),
                target.nvars()
            )));
        }
        for v in source.vars() {
            if target.var_index(v).is_ok() {
                return Err(Error::DuplicateVariable(format!(
                    "`{}` used in both source and target",
                    v
                )));
            }
        }
        for p in components.iter().chain(&icis_equations) {
            if *p.ring() != source {
                return Err(Error::RingMismatch("map data outside the source ring"));
            }
            if !p.vanishes_at_origin() {
                return Err(Error::NotVanishing(p.to_string()));
            }
        }
        Ok(MapGerm { source, target, components, icis_equations })
    }

    pub fn source(&self) -> &Ring {
        &self.source
    }

    pub fn target(&self) -> &Ring {
        &self.target
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn icis_equations(&self) -> &[Poly] {
        &self.icis_equations
    }

    /// Pullback of a target polynomial: substitute the components for the
    /// target variables. No reduction modulo the source equations happens
    /// here.
    pub fn pullback(&self, p: &Poly) -> Result<Poly> {
        if *p.ring() != self.target {
            return Err(Error::RingMismatch("pullback of a polynomial outside the target ring"));
        }
        p.compose(&self.components)
    }
}

impl fmt::Display for MapGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")?;
        if !self.icis_equations.is_empty() {
            write!(f, " on V(")?;
            for (i, p) in self.icis_equations.iter().enumerate() {
                if i > 0 {
                    write!(f, ", ")?;
                }
                write!(f, "{}", p)?;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl fmt::Debug for MapGerm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn pullback_of_cross_cap_image_equation_vanishes() {
        let src = Ring::local(&["x", "y"]).unwrap();
        let tgt = Ring::local(&["X", "Y", "Z"]).unwrap();
        let f = MapGerm::new(
            src.clone(),
            tgt.clone(),
            vec![
                parse_poly(&src, "x").unwrap(),
                parse_poly(&src, "y^2").unwrap(),
                parse_poly(&src, "x*y").unwrap(),
            ],
            vec![],
        )
        .unwrap();
        let g = parse_poly(&tgt, "Z^2 - X^2*Y").unwrap();
        assert!(f.pullback(&g).unwrap().is_zero());
        let x = parse_poly(&tgt, "X").unwrap();
        assert_eq!(f.pullback(&x).unwrap(), parse_poly(&src, "x").unwrap());
        assert!(f.pullback(&Poly::zero(&tgt)).unwrap().is_zero());
    }

    #[test]
    fn rejects_non_vanishing_and_shared_names() {
        let src = Ring::local(&["x"]).unwrap();
        let tgt = Ring::local(&["X"]).unwrap();
        assert!(MapGerm::new(
            src.clone(),
            tgt.clone(),
            vec![parse_poly(&src, "x + 1").unwrap()],
            vec![]
        )
        .is_err());
        let tgt2 = Ring::local(&["x"]).unwrap();
        assert!(MapGerm::new(src.clone(), tgt2, vec![parse_poly(&src, "x").unwrap()], vec![])
            .is_err());
    }
}
