//! Exact multivariate polynomials over the rationals.
//!
//! Terms are kept sorted strictly decreasing under the ring's monomial
//! ordering, with no zero coefficients and no repeated exponent vectors, so
//! the first term is always the leading term.

use std::cmp::Ordering;
use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::ring::{BlockOrder, Ring};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub coeff: BigRational,
    pub exp: Vec<u32>,
}

#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ring: Ring,
    terms: Vec<Term>,
}

impl Poly {
    pub fn zero(ring: &Ring) -> Poly {
        Poly { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn one(ring: &Ring) -> Poly {
        Poly::constant(ring, BigRational::one())
    }

    pub fn constant(ring: &Ring, c: BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(ring);
        }
        Poly { ring: ring.clone(), terms: vec![Term { coeff: c, exp: vec![0; ring.nvars()] }] }
    }

    pub fn int(ring: &Ring, n: i64) -> Poly {
        Poly::constant(ring, BigRational::from(BigInt::from(n)))
    }

    pub fn var(ring: &Ring, name: &str) -> Result<Poly> {
        let i = ring.var_index(name)?;
        let mut exp = vec![0; ring.nvars()];
        exp[i] = 1;
        Ok(Poly {
            ring: ring.clone(),
            terms: vec![Term { coeff: BigRational::one(), exp }],
        })
    }

    pub fn monomial(ring: &Ring, coeff: BigRational, exp: Vec<u32>) -> Poly {
        assert_eq!(exp.len(), ring.nvars());
        if coeff.is_zero() {
            return Poly::zero(ring);
        }
        Poly { ring: ring.clone(), terms: vec![Term { coeff, exp }] }
    }

    /// Normalizing constructor: sorts, merges duplicates, drops zeros.
    pub fn from_terms(ring: &Ring, terms: Vec<Term>) -> Poly {
        let mut terms = terms;
        terms.retain(|t| !t.coeff.is_zero());
        for t in &terms {
            assert_eq!(t.exp.len(), ring.nvars());
        }
        terms.sort_by(|a, b| ring.cmp_exp(&b.exp, &a.exp));
        let mut merged: Vec<Term> = Vec::with_capacity(terms.len());
        for t in terms {
            match merged.last_mut() {
                Some(last) if last.exp == t.exp => {
                    last.coeff += t.coeff;
                    if last.coeff.is_zero() {
                        merged.pop();
                    }
                }
                _ => merged.push(t),
            }
        }
        Poly { ring: ring.clone(), terms: merged }
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn terms(&self) -> &[Term] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn leading_term(&self) -> Option<&Term> {
        self.terms.first()
    }

    /// Total degree (maximum over terms); zero polynomial reports 0.
    pub fn total_degree(&self) -> u64 {
        self.terms.iter().map(|t| Ring::total_degree(&t.exp)).max().unwrap_or(0)
    }

    pub fn constant_term(&self) -> BigRational {
        self.terms
            .iter()
            .find(|t| t.exp.iter().all(|&e| e == 0))
            .map(|t| t.coeff.clone())
            .unwrap_or_else(BigRational::zero)
    }

    pub fn vanishes_at_origin(&self) -> bool {
        self.constant_term().is_zero()
    }

    /// Unit of the local ring: nonzero constant term.
    pub fn is_unit_at_origin(&self) -> bool {
        !self.constant_term().is_zero()
    }

    pub fn involves(&self, var: usize) -> bool {
        self.terms.iter().any(|t| t.exp[var] > 0)
    }

    fn check_ring(&self, other: &Poly) -> Result<()> {
        if self.ring == other.ring {
            Ok(())
        } else {
            Err(Error::RingMismatch("polynomials live in different rings"))
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, false))
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        Ok(self.merge(other, true))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let a = &self.terms[i];
            let b = &other.terms[j];
            match self.ring.cmp_exp(&a.exp, &b.exp) {
                Ordering::Greater => {
                    out.push(a.clone());
                    i += 1;
                }
                Ordering::Less => {
                    let c = if negate { -b.coeff.clone() } else { b.coeff.clone() };
                    out.push(Term { coeff: c, exp: b.exp.clone() });
                    j += 1;
                }
                Ordering::Equal => {
                    let c = if negate {
                        &a.coeff - &b.coeff
                    } else {
                        &a.coeff + &b.coeff
                    };
                    if !c.is_zero() {
                        out.push(Term { coeff: c, exp: a.exp.clone() });
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(self.terms[i..].iter().cloned());
        for b in &other.terms[j..] {
            let c = if negate { -b.coeff.clone() } else { b.coeff.clone() };
            out.push(Term { coeff: c, exp: b.exp.clone() });
        }
        Poly { ring: self.ring.clone(), terms: out }
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: -t.coeff.clone(), exp: t.exp.clone() })
                .collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        self.check_ring(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Poly::zero(&self.ring));
        }
        let mut prods = Vec::with_capacity(self.terms.len() * other.terms.len());
        for a in &self.terms {
            for b in &other.terms {
                let exp: Vec<u32> =
                    a.exp.iter().zip(&b.exp).map(|(&x, &y)| x + y).collect();
                prods.push(Term { coeff: &a.coeff * &b.coeff, exp });
            }
        }
        Ok(Poly::from_terms(&self.ring, prods))
    }

    pub fn scale(&self, c: &BigRational) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term { coeff: &t.coeff * c, exp: t.exp.clone() })
                .collect(),
        }
    }

    pub fn mul_monomial(&self, c: &BigRational, exp: &[u32]) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.ring);
        }
        Poly {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|t| Term {
                    coeff: &t.coeff * c,
                    exp: t.exp.iter().zip(exp).map(|(&a, &b)| a + b).collect(),
                })
                .collect(),
        }
    }

    /// Monic under the ring ordering (leading coefficient 1).
    pub fn monic(&self) -> Poly {
        match self.leading_term() {
            None => self.clone(),
            Some(lt) => {
                let inv = lt.coeff.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, e: u32) -> Poly {
        let mut acc = Poly::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self).expect("same ring");
        }
        acc
    }

    /// Exact division: returns `q` with `self = q * divisor`, or None.
    ///
    /// Runs plain leading-term division under a private global ordering so it
    /// terminates regardless of the ring's own (possibly local) ordering;
    /// exact quotients are unique, so the ordering choice is immaterial.
    pub fn exact_divide(&self, divisor: &Poly) -> Result<Option<Poly>> {
        self.check_ring(divisor)?;
        if divisor.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let cmp = |a: &[u32], b: &[u32]| -> Ordering {
            let da = Ring::total_degree(a);
            let db = Ring::total_degree(b);
            match da.cmp(&db) {
                Ordering::Equal => {
                    for i in (0..a.len()).rev() {
                        if a[i] != b[i] {
                            return b[i].cmp(&a[i]);
                        }
                    }
                    Ordering::Equal
                }
                o => o,
            }
        };
        let lead = |p: &Poly| -> Term {
            p.terms
                .iter()
                .max_by(|a, b| cmp(&a.exp, &b.exp))
                .cloned()
                .expect("nonzero")
        };
        let db = lead(divisor);
        let mut rem = self.clone();
        let mut quot: Vec<Term> = Vec::new();
        while !rem.is_zero() {
            let lr = lead(&rem);
            if lr.exp.iter().zip(&db.exp).any(|(&a, &b)| a < b) {
                return Ok(None);
            }
            let exp: Vec<u32> = lr.exp.iter().zip(&db.exp).map(|(&a, &b)| a - b).collect();
            let coeff = &lr.coeff / &db.coeff;
            rem = rem.sub(&divisor.mul_monomial(&coeff, &exp))?;
            quot.push(Term { coeff, exp });
        }
        Ok(Some(Poly::from_terms(&self.ring, quot)))
    }

    /// Formal partial derivative with respect to a named variable.
    pub fn differentiate(&self, var: &str) -> Result<Poly> {
        let i = self.ring.var_index(var)?;
        Ok(self.differentiate_index(i))
    }

    pub fn differentiate_index(&self, i: usize) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|t| t.exp[i] > 0)
            .map(|t| {
                let mut exp = t.exp.clone();
                let e = exp[i];
                exp[i] -= 1;
                Term { coeff: &t.coeff * BigRational::from(BigInt::from(e)), exp }
            })
            .collect();
        Poly { ring: self.ring.clone(), terms }
    }

    /// Simultaneous substitution: replace the i-th variable by `images[i]`.
    /// All images must live in one ring, which becomes the result's ring.
    pub fn compose(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.ring.nvars() {
            return Err(Error::Arity(format!(
                "substitution needs {} images, got {}",
                self.ring.nvars(),
                images.len()
            )));
        }
        let target = match images.first() {
            Some(p) => p.ring().clone(),
            None => return Ok(Poly::zero(&self.ring)),
        };
        for p in images {
            if *p.ring() != target {
                return Err(Error::RingMismatch("substitution images in different rings"));
            }
        }
        // Cache powers of each image as needed.
        let mut powers: Vec<Vec<Poly>> =
            images.iter().map(|p| vec![Poly::one(&target), p.clone()]).collect();
        let power = |i: usize, e: u32, powers: &mut Vec<Vec<Poly>>| -> Poly {
            while powers[i].len() <= e as usize {
                let next = powers[i].last().unwrap().mul(&images[i]).expect("same ring");
                powers[i].push(next);
            }
            powers[i][e as usize].clone()
        };
        let mut acc = Poly::zero(&target);
        for t in &self.terms {
            let mut m = Poly::constant(&target, t.coeff.clone());
            for (i, &e) in t.exp.iter().enumerate() {
                if e > 0 {
                    m = m.mul(&power(i, e, &mut powers))?;
                }
            }
            acc = acc.add(&m)?;
        }
        Ok(acc)
    }

    /// Set the listed variables to zero, staying in the same ring.
    pub fn set_zero(&self, vars: &[usize]) -> Poly {
        let terms = self
            .terms
            .iter()
            .filter(|t| vars.iter().all(|&i| t.exp[i] == 0))
            .cloned()
            .collect();
        Poly { ring: self.ring.clone(), terms }
    }

    /// Transport into `target`, sending variable i here to `var_map[i]` there.
    /// Every variable actually used must be mapped (entries may be None only
    /// if unused).
    pub fn map_to_ring(&self, target: &Ring, var_map: &[Option<usize>]) -> Result<Poly> {
        let mut terms = Vec::with_capacity(self.terms.len());
        for t in &self.terms {
            let mut exp = vec![0u32; target.nvars()];
            for (i, &e) in t.exp.iter().enumerate() {
                if e > 0 {
                    match var_map[i] {
                        Some(j) => exp[j] = e,
                        None => {
                            return Err(Error::Internal(format!(
                                "variable `{}` has no image in the target ring",
                                self.ring.var_name(i)
                            )))
                        }
                    }
                }
            }
            terms.push(Term { coeff: t.coeff.clone(), exp });
        }
        Ok(Poly::from_terms(target, terms))
    }

    /// Transport by matching variable names.
    pub fn map_by_names(&self, target: &Ring) -> Result<Poly> {
        let map: Vec<Option<usize>> = self
            .ring
            .vars()
            .iter()
            .map(|v| target.var_index(v).ok())
            .collect();
        self.map_to_ring(target, &map)
    }

    /// Weighted degree of a term under integer weights.
    pub fn weighted_degree(exp: &[u32], weights: &[u64]) -> u64 {
        exp.iter().zip(weights).map(|(&e, &w)| e as u64 * w).sum()
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (i, t) in self.terms.iter().enumerate() {
            let neg = t.coeff.is_negative();
            let mag = if neg { -t.coeff.clone() } else { t.coeff.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let is_const = t.exp.iter().all(|&e| e == 0);
            if is_const || !mag.is_one() {
                write!(f, "{}", mag)?;
                if !is_const {
                    write!(f, "*")?;
                }
            }
            let mut first = true;
            for (j, &e) in t.exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                write!(f, "{}", self.ring.var_name(j))?;
                if e > 1 {
                    write!(f, "^{}", e)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

macro_rules! poly_binop {
    ($trait:ident, $method:ident) => {
        impl std::ops::$trait for &Poly {
            type Output = Poly;
            fn $method(self, rhs: &Poly) -> Poly {
                Poly::$method(self, rhs).expect("ring mismatch")
            }
        }
    };
}
poly_binop!(Add, add);
poly_binop!(Sub, sub);
poly_binop!(Mul, mul);

impl std::ops::Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly::neg(self)
    }
}

/// The maximal ideal of a fully local ring, generated by all variables.
pub fn maximal_ideal_gens(ring: &Ring) -> Vec<Poly> {
    (0..ring.nvars())
        .map(|i| {
            let mut exp = vec![0; ring.nvars()];
            exp[i] = 1;
            Poly::monomial(ring, num_traits::One::one(), exp)
        })
        .collect()
}

/// Leading block of a ring if it is global: candidate elimination variables.
pub fn leading_global_block(ring: &Ring) -> Option<Vec<usize>> {
    let b = ring.blocks().first()?;
    if b.order == BlockOrder::GlobalDegRevLex {
        Some((b.start..b.start + b.len).collect())
    } else {
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn r3() -> Ring {
        Ring::local(&["x", "y", "z"]).unwrap()
    }

    #[test]
    fn arithmetic_basics() {
        let r = r3();
        let p = parse_poly(&r, "x + y").unwrap();
        let q = parse_poly(&r, "x - y").unwrap();
        assert_eq!(p.mul(&q).unwrap(), parse_poly(&r, "x^2 - y^2").unwrap());
        assert_eq!(p.add(&Poly::zero(&r)).unwrap(), p);
        let s = parse_poly(&r, "x^2 + y^2 + z^2").unwrap();
        assert_eq!(s.mul(&Poly::one(&r)).unwrap(), s);
    }

    #[test]
    fn exact_division() {
        let r = r3();
        let a = parse_poly(&r, "x^2*y").unwrap();
        let b = parse_poly(&r, "x").unwrap();
        assert_eq!(a.exact_divide(&b).unwrap().unwrap(), parse_poly(&r, "x*y").unwrap());
        let a = parse_poly(&r, "x^2 - y^2").unwrap();
        let b = parse_poly(&r, "x - y").unwrap();
        assert_eq!(a.exact_divide(&b).unwrap().unwrap(), parse_poly(&r, "x + y").unwrap());
        let a = parse_poly(&r, "x").unwrap();
        let b = parse_poly(&r, "y").unwrap();
        assert!(a.exact_divide(&b).unwrap().is_none());
        assert!(a.exact_divide(&Poly::zero(&r)).is_err());
    }

    #[test]
    fn differentiation() {
        let r = r3();
        let g = parse_poly(&r, "x^3 + y^3 - z^2").unwrap();
        assert_eq!(g.differentiate("z").unwrap(), parse_poly(&r, "-2*z").unwrap());
        assert_eq!(Poly::int(&r, 5).differentiate("x").unwrap(), Poly::zero(&r));
        let p = parse_poly(&r, "x^2*y").unwrap();
        assert_eq!(p.differentiate("x").unwrap(), parse_poly(&r, "2*x*y").unwrap());
    }

    #[test]
    fn leading_term_is_local_smallest_degree() {
        let r = r3();
        let p = parse_poly(&r, "x^3 + y^2").unwrap();
        assert_eq!(p.leading_term().unwrap().exp, vec![0, 2, 0]);
    }

    #[test]
    fn display_round_trips() {
        let r = r3();
        for s in ["x^2 - y^2", "-x + 3/2*y*z", "0", "1", "x*y*z - 1/3"] {
            let p = parse_poly(&r, s).unwrap();
            let q = parse_poly(&r, &p.to_string()).unwrap();
            assert_eq!(p, q);
        }
    }
}
