//! Internal representation for the standard basis engine: sparse vectors in a
//! free module, with terms sorted under position-over-term ordering. Ideals
//! are the rank-1 case.

use std::cmp::Ordering;

use num_rational::BigRational;
use num_traits::Zero;

use crate::poly::{Poly, Term};
use crate::ring::Ring;
use crate::vecpoly::VecPoly;

#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct MTerm {
    pub coeff: BigRational,
    pub comp: u32,
    pub exp: Vec<u32>,
}

/// Module element; terms strictly decreasing under the module ordering.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct Elem {
    pub terms: Vec<MTerm>,
}

impl Elem {
    pub fn zero() -> Elem {
        Elem { terms: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn lead(&self) -> &MTerm {
        &self.terms[0]
    }

    /// Maximum total degree of the monomial parts.
    pub fn degree(&self) -> u64 {
        self.terms.iter().map(|t| Ring::total_degree(&t.exp)).max().unwrap_or(0)
    }

    /// Ecart: degree of the tail above the leading monomial.
    pub fn ecart(&self) -> u64 {
        self.degree() - Ring::total_degree(&self.lead().exp)
    }

    pub fn from_poly(p: &Poly) -> Elem {
        Elem {
            terms: p
                .terms()
                .iter()
                .map(|t| MTerm { coeff: t.coeff.clone(), comp: 0, exp: t.exp.clone() })
                .collect(),
        }
    }

    pub fn from_vecpoly(ring: &Ring, v: &VecPoly) -> Elem {
        let mut terms: Vec<MTerm> = Vec::new();
        for (c, p) in v.components().iter().enumerate() {
            for t in p.terms() {
                terms.push(MTerm { coeff: t.coeff.clone(), comp: c as u32, exp: t.exp.clone() });
            }
        }
        terms.sort_by(|a, b| ring.cmp_module(b.comp, &b.exp, a.comp, &a.exp));
        Elem { terms }
    }

    pub fn to_poly(&self, ring: &Ring) -> Poly {
        debug_assert!(self.terms.iter().all(|t| t.comp == 0));
        Poly::from_terms(
            ring,
            self.terms
                .iter()
                .map(|t| Term { coeff: t.coeff.clone(), exp: t.exp.clone() })
                .collect(),
        )
    }

    pub fn to_vecpoly(&self, ring: &Ring, rank: usize) -> VecPoly {
        let mut comps: Vec<Vec<Term>> = vec![Vec::new(); rank];
        for t in &self.terms {
            comps[t.comp as usize].push(Term { coeff: t.coeff.clone(), exp: t.exp.clone() });
        }
        VecPoly::new(
            comps
                .into_iter()
                .map(|ts| Poly::from_terms(ring, ts))
                .collect(),
        )
        .expect("rank >= 1")
    }

    /// Scale to integer coefficients with gcd 1 and positive leading
    /// coefficient. Constant rescaling is a unit multiple, so membership and
    /// leading data are unaffected; it keeps division chains fraction-free.
    pub fn primitive(mut self) -> Elem {
        use num_bigint::BigInt;
        use num_integer::Integer;
        use num_traits::{One, Signed};
        if self.terms.is_empty() {
            return self;
        }
        let mut den = BigInt::one();
        for t in &self.terms {
            den = den.lcm(t.coeff.denom());
        }
        let mut num = BigInt::zero();
        for t in &self.terms {
            num = num.gcd(&(t.coeff.numer() * &den / t.coeff.denom()));
        }
        if num.is_zero() {
            num = BigInt::one();
        }
        if self.terms[0].coeff.is_negative() {
            num = -num;
        }
        let factor = BigRational::new(den, num);
        for t in &mut self.terms {
            t.coeff = &t.coeff * &factor;
        }
        self
    }

    /// Drop all terms of total degree >= cap. In a fully local ring this is
    /// reduction modulo the cap-th power of the maximal ideal.
    pub fn truncate(mut self, cap: u64) -> Elem {
        self.terms.retain(|t| Ring::total_degree(&t.exp) < cap);
        self
    }

    /// `c_self * self - c_other * x^shift * other`. Cross-multiplication
    /// keeps integral inputs integral.
    pub fn cross_reduce(
        &self,
        ring: &Ring,
        c_self: &BigRational,
        c_other: &BigRational,
        shift: &[u32],
        other: &Elem,
    ) -> Elem {
        let scaled_self = Elem {
            terms: self
                .terms
                .iter()
                .map(|t| MTerm { coeff: &t.coeff * c_self, comp: t.comp, exp: t.exp.clone() })
                .collect(),
        };
        scaled_self.sub_scaled(ring, c_other, shift, other)
    }

    /// `self - c * x^shift * other`, merging sorted term lists.
    pub fn sub_scaled(&self, ring: &Ring, c: &BigRational, shift: &[u32], other: &Elem) -> Elem {
        let scaled = |t: &MTerm| -> MTerm {
            MTerm {
                coeff: -(&t.coeff * c),
                comp: t.comp,
                exp: t.exp.iter().zip(shift).map(|(&a, &b)| a + b).collect(),
            }
        };
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = scaled(&other.terms[j]);
            match ring.cmp_module(a.comp, &a.exp, b.comp, &b.exp) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    out.push(b);
                    j += 1;
                }
                Ordering::Equal => {
                    let coeff = &a.coeff + &b.coeff;
                    if !coeff.is_zero() {
                        out.push(MTerm { coeff, comp: a.comp, exp: a.exp.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        out.extend(other.terms[j..].iter().map(|t| scaled(t)));
        Elem { terms: out }
    }
}

/// Does the monomial of `a` divide the monomial of `b` (same component)?
pub(crate) fn lead_divides(a: &MTerm, b: &MTerm) -> bool {
    a.comp == b.comp && a.exp.iter().zip(&b.exp).all(|(&x, &y)| x <= y)
}

pub(crate) fn exp_lcm(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect()
}

pub(crate) fn exp_sub(a: &[u32], b: &[u32]) -> Vec<u32> {
    a.iter().zip(b).map(|(&x, &y)| x - y).collect()
}

pub(crate) fn exp_coprime(a: &[u32], b: &[u32]) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x == 0 || y == 0)
}
