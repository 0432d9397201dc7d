//! Elements of a free module over a ring: fixed-length vectors of polynomials.

use std::fmt;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Clone, PartialEq, Eq)]
pub struct VecPoly {
    components: Vec<Poly>,
}

impl VecPoly {
    pub fn new(components: Vec<Poly>) -> Result<VecPoly> {
        let ring = match components.first() {
            Some(p) => p.ring().clone(),
            None => return Err(Error::Arity("module vector needs rank >= 1".into())),
        };
        for p in &components {
            if *p.ring() != ring {
                return Err(Error::RingMismatch("vector components in different rings"));
            }
        }
        Ok(VecPoly { components })
    }

    pub fn zero(ring: &Ring, rank: usize) -> VecPoly {
        VecPoly { components: vec![Poly::zero(ring); rank] }
    }

    /// Standard basis vector `e_i` of the rank-`rank` free module.
    pub fn unit(ring: &Ring, rank: usize, i: usize) -> VecPoly {
        let mut v = VecPoly::zero(ring, rank);
        v.components[i] = Poly::one(ring);
        v
    }

    /// `p * e_i`.
    pub fn scaled_unit(rank: usize, i: usize, p: Poly) -> VecPoly {
        let ring = p.ring().clone();
        let mut v = VecPoly::zero(&ring, rank);
        v.components[i] = p;
        v
    }

    pub fn ring(&self) -> &Ring {
        self.components[0].ring()
    }

    pub fn rank(&self) -> usize {
        self.components.len()
    }

    pub fn components(&self) -> &[Poly] {
        &self.components
    }

    pub fn component(&self, i: usize) -> &Poly {
        &self.components[i]
    }

    pub fn is_zero(&self) -> bool {
        self.components.iter().all(|p| p.is_zero())
    }

    pub fn add(&self, other: &VecPoly) -> Result<VecPoly> {
        if self.rank() != other.rank() {
            return Err(Error::Arity("vector ranks differ".into()));
        }
        let comps = self
            .components
            .iter()
            .zip(&other.components)
            .map(|(a, b)| a.add(b))
            .collect::<Result<_>>()?;
        Ok(VecPoly { components: comps })
    }

    pub fn scale_poly(&self, p: &Poly) -> Result<VecPoly> {
        let comps = self
            .components
            .iter()
            .map(|a| a.mul(p))
            .collect::<Result<_>>()?;
        Ok(VecPoly { components: comps })
    }

    /// Transport componentwise to another ring by variable names.
    pub fn map_by_names(&self, target: &Ring) -> Result<VecPoly> {
        let comps = self
            .components
            .iter()
            .map(|p| p.map_by_names(target))
            .collect::<Result<_>>()?;
        Ok(VecPoly { components: comps })
    }

    pub fn set_zero(&self, vars: &[usize]) -> VecPoly {
        VecPoly { components: self.components.iter().map(|p| p.set_zero(vars)).collect() }
    }
}

impl fmt::Display for VecPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, p) in self.components.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", p)?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for VecPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}
