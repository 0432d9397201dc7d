//! Standard bases for ideals and submodules under arbitrary block orderings,
//! with elimination, ring-map preimages, syzygies, staircase dimensions and
//! Samuel functions built on top.

mod dims;
mod elem;
mod hilbert;
mod mora;
mod ops;

pub use dims::{subquotient_dim, subquotient_presentation, Dim};
pub use hilbert::{hilbert_samuel, HilbertSamuelData};
pub use ops::{map_kernel, map_preimage, syzygy_of_polys, syzygy_of_vecs};

use std::sync::{Arc, OnceLock};

use elem::{exp_coprime, exp_lcm, exp_sub, lead_divides, Elem, MTerm};

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::ring::Ring;
use crate::vecpoly::VecPoly;

/// A computed standard basis: minimalized, primitive, deterministic.
#[derive(Debug)]
pub(crate) struct Basis {
    pub elems: Vec<Elem>,
}

impl Basis {
    /// Leading (component, exponent) pairs.
    pub fn leads(&self) -> impl Iterator<Item = &MTerm> {
        self.elems.iter().map(|e| e.lead())
    }
}

/// Handle to an ideal: a generator list plus a lazily computed, cached
/// standard basis. Immutable and safe to share across threads.
pub struct Ideal {
    ring: Ring,
    gens: Vec<Poly>,
    cache: OnceLock<Arc<Basis>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(b) = self.cache.get() {
            let _ = cache.set(b.clone());
        }
        Ideal { ring: self.ring.clone(), gens: self.gens.clone(), cache }
    }
}

impl std::fmt::Debug for Ideal {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Ideal(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{}", g)?;
        }
        write!(f, ")")
    }
}

impl Ideal {
    pub fn new(ring: &Ring, gens: Vec<Poly>) -> Result<Ideal> {
        for g in &gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch("ideal generator outside the ring"));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { ring: ring.clone(), gens, cache: OnceLock::new() })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn gens(&self) -> &[Poly] {
        &self.gens
    }

    pub(crate) fn basis(&self) -> &Basis {
        self.cache.get_or_init(|| {
            let gens: Vec<Elem> = self.gens.iter().map(Elem::from_poly).collect();
            Arc::new(std_basis_engine(&self.ring, 1, gens))
        })
    }

    /// Generators of the cached (or now computed) standard basis.
    pub fn std_basis(&self) -> Vec<Poly> {
        self.basis().elems.iter().map(|e| e.to_poly(&self.ring)).collect()
    }

    /// Mora weak normal form of `p` against the standard basis.
    pub fn normal_form(&self, p: &Poly) -> Result<Poly> {
        if p.ring() != &self.ring {
            return Err(Error::RingMismatch("normal form of a polynomial outside the ring"));
        }
        let e = mora::weak_normal_form(&self.ring, &Elem::from_poly(p), &self.basis().elems);
        Ok(e.to_poly(&self.ring))
    }

    /// Membership in the localized ring.
    pub fn contains(&self, p: &Poly) -> Result<bool> {
        Ok(self.normal_form(p)?.is_zero())
    }

    /// Do the two ideals generate the same submodule of the localized ring?
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        for g in &other.gens {
            if !self.contains(g)? {
                return Ok(false);
            }
        }
        for g in &self.gens {
            if !other.contains(g)? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// Handle to a submodule of a free module `R^rank`.
pub struct Submodule {
    ring: Ring,
    rank: usize,
    gens: Vec<VecPoly>,
    cache: OnceLock<Arc<Basis>>,
}

impl Clone for Submodule {
    fn clone(&self) -> Self {
        let cache = OnceLock::new();
        if let Some(b) = self.cache.get() {
            let _ = cache.set(b.clone());
        }
        Submodule { ring: self.ring.clone(), rank: self.rank, gens: self.gens.clone(), cache }
    }
}

impl std::fmt::Debug for Submodule {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Submodule(rank {}, {} gens)", self.rank, self.gens.len())
    }
}

impl Submodule {
    pub fn new(ring: &Ring, rank: usize, gens: Vec<VecPoly>) -> Result<Submodule> {
        for g in &gens {
            if g.ring() != ring {
                return Err(Error::RingMismatch("module generator outside the ring"));
            }
            if g.rank() != rank {
                return Err(Error::Arity(format!(
                    "module generator of rank {} in a rank-{} module",
                    g.rank(),
                    rank
                )));
            }
        }
        let gens = gens.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Submodule { ring: ring.clone(), rank, gens, cache: OnceLock::new() })
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn gens(&self) -> &[VecPoly] {
        &self.gens
    }

    pub(crate) fn basis(&self) -> &Basis {
        self.cache.get_or_init(|| {
            let gens: Vec<Elem> =
                self.gens.iter().map(|g| Elem::from_vecpoly(&self.ring, g)).collect();
            Arc::new(std_basis_engine(&self.ring, self.rank, gens))
        })
    }

    pub fn std_basis(&self) -> Vec<VecPoly> {
        self.basis()
            .elems
            .iter()
            .map(|e| e.to_vecpoly(&self.ring, self.rank))
            .collect()
    }

    pub fn normal_form(&self, v: &VecPoly) -> Result<VecPoly> {
        if v.ring() != &self.ring {
            return Err(Error::RingMismatch("normal form of a vector outside the ring"));
        }
        if v.rank() != self.rank {
            return Err(Error::Arity("vector rank differs from the module rank".into()));
        }
        let e = mora::weak_normal_form(
            &self.ring,
            &Elem::from_vecpoly(&self.ring, v),
            &self.basis().elems,
        );
        Ok(e.to_vecpoly(&self.ring, self.rank))
    }

    pub fn contains(&self, v: &VecPoly) -> Result<bool> {
        Ok(self.normal_form(v)?.is_zero())
    }
}

// ---------------------------------------------------------------------------
// The Buchberger/Mora driver

/// Compute a minimal standard basis. Pairs are processed by increasing total
/// degree of the leading-term lcm (ties by the ordering, then by input
/// index), with the product criterion on ideals and Buchberger's chain
/// criterion pruning the queue; the result is deterministic for a fixed
/// generator order.
pub(crate) fn std_basis_engine(ring: &Ring, rank: usize, gens: Vec<Elem>) -> Basis {
    std_basis_engine_impl(ring, rank, gens, None, None)
}

/// Standard basis of the generators together with all monomials of degree
/// >= cap, for fully local rings: terms at or past the cap are dropped
/// throughout. The result describes the quotient modulo the cap-th power of
/// the maximal ideal.
pub(crate) fn std_basis_engine_truncated(
    ring: &Ring,
    rank: usize,
    gens: Vec<Elem>,
    cap: u64,
) -> Basis {
    std_basis_engine_impl(ring, rank, gens, None, Some(cap))
}

/// As `std_basis_engine`, but pairs are only formed between elements whose
/// leading component lies in the first `real_rank` components. Used by the
/// syzygy computation, where the trailing components are cofactor tags: the
/// pure-tag elements produced by the real-lead pair reductions already
/// generate the syzygy module, so tag-tag pairs are dead weight.
pub(crate) fn std_basis_engine_cofactor(
    ring: &Ring,
    rank: usize,
    gens: Vec<Elem>,
    real_rank: usize,
) -> Basis {
    std_basis_engine_impl(ring, rank, gens, Some(real_rank), None)
}

fn std_basis_engine_impl(
    ring: &Ring,
    rank: usize,
    gens: Vec<Elem>,
    pair_rank_limit: Option<usize>,
    cap: Option<u64>,
) -> Basis {
    let pairable = |e: &Elem| -> bool {
        match pair_rank_limit {
            Some(r) => (e.lead().comp as usize) < r,
            None => true,
        }
    };
    let mut basis: Vec<Elem> = Vec::new();
    for g in gens {
        let g = match cap {
            Some(c) => g.truncate(c),
            None => g,
        };
        if !g.is_zero() {
            basis.push(g.primitive());
        }
    }
    let mut pairs: Vec<(usize, usize)> = Vec::new();
    let mut treated: std::collections::HashSet<(usize, usize)> = Default::default();
    for j in 0..basis.len() {
        for i in 0..j {
            if basis[i].lead().comp == basis[j].lead().comp && pairable(&basis[i]) {
                pairs.push((i, j));
            }
        }
    }

    let trace = std::env::var_os("GERMLAB_TRACE").is_some();
    let mut pops: u64 = 0;
    while !pairs.is_empty() {
        pops += 1;
        if trace && pops % 500 == 0 {
            let max_terms = basis.iter().map(|b| b.terms.len()).max().unwrap_or(0);
            let max_bits = basis
                .iter()
                .flat_map(|b| b.terms.iter())
                .map(|t| t.coeff.numer().bits())
                .max()
                .unwrap_or(0);
            eprintln!(
                "[std] pops={} basis={} pairs={} max_terms={} max_coeff_bits={}",
                pops,
                basis.len(),
                pairs.len(),
                max_terms,
                max_bits
            );
        }
        let mut best = 0usize;
        let mut best_lcm =
            exp_lcm(&basis[pairs[0].0].lead().exp, &basis[pairs[0].1].lead().exp);
        for (k, &(i, j)) in pairs.iter().enumerate().skip(1) {
            let l = exp_lcm(&basis[i].lead().exp, &basis[j].lead().exp);
            let dl = crate::ring::Ring::total_degree(&l);
            let db = crate::ring::Ring::total_degree(&best_lcm);
            let better = dl < db
                || (dl == db
                    && match ring.cmp_exp(&l, &best_lcm) {
                        std::cmp::Ordering::Less => true,
                        std::cmp::Ordering::Equal => pairs[k] < pairs[best],
                        std::cmp::Ordering::Greater => false,
                    });
            if better {
                best = k;
                best_lcm = l;
            }
        }
        let (i, j) = pairs.swap_remove(best);
        treated.insert((i, j));

        // Product criterion, valid for ideals.
        if rank == 1 && exp_coprime(&basis[i].lead().exp, &basis[j].lead().exp) {
            continue;
        }
        // Chain criterion: a third leading term dividing the lcm whose two
        // side pairs are already handled makes this pair redundant.
        let comp = basis[i].lead().comp;
        let chain = (0..basis.len()).any(|k| {
            if k == i || k == j || basis[k].lead().comp != comp {
                return false;
            }
            let lk = &basis[k].lead().exp;
            if !lk.iter().zip(&best_lcm).all(|(&a, &b)| a <= b) {
                return false;
            }
            let p1 = (i.min(k), i.max(k));
            let p2 = (j.min(k), j.max(k));
            treated.contains(&p1) && treated.contains(&p2)
        });
        if chain {
            continue;
        }

        let s = s_vector(ring, &basis[i], &basis[j]);
        let h = mora::weak_normal_form_capped(ring, &s, &basis, cap);
        if !h.is_zero() {
            let h = h.primitive();
            let hc = h.lead().comp;
            let idx = basis.len();
            if pairable(&h) {
                for (k, g) in basis.iter().enumerate() {
                    if g.lead().comp == hc {
                        pairs.push((k, idx));
                    }
                }
            }
            basis.push(h);
        }
    }

    // In cofactor mode the tag-led elements are generators, not a standard
    // basis in this ordering, so lead divisibility may not prune them.
    minimalize(ring, basis, pair_rank_limit)
}

/// S-vector of two elements with equal leading component, cross-multiplied:
/// lc(b) (lcm/lm(a)) a - lc(a) (lcm/lm(b)) b.
pub(crate) fn s_vector(ring: &Ring, a: &Elem, b: &Elem) -> Elem {
    let la = a.lead();
    let lb = b.lead();
    debug_assert_eq!(la.comp, lb.comp);
    let lcm = exp_lcm(&la.exp, &lb.exp);
    let sa = exp_sub(&lcm, &la.exp);
    let sb = exp_sub(&lcm, &lb.exp);
    let left = Elem::zero().sub_scaled(ring, &-lb.coeff.clone(), &sa, a);
    left.sub_scaled(ring, &la.coeff.clone(), &sb, b)
}

/// Drop elements whose leading term is divisible by another leading term,
/// keeping the earlier one on ties, then sort by leading term (descending).
/// Elements whose lead component is at or past `protect_from` are always
/// kept.
fn minimalize(ring: &Ring, elems: Vec<Elem>, protect_from: Option<usize>) -> Basis {
    let protected = |e: &Elem| -> bool {
        match protect_from {
            Some(r) => (e.lead().comp as usize) >= r,
            None => false,
        }
    };
    let mut keep: Vec<bool> = vec![true; elems.len()];
    for i in 0..elems.len() {
        if !keep[i] || protected(&elems[i]) {
            continue;
        }
        for j in 0..elems.len() {
            if i == j || !keep[j] {
                continue;
            }
            let li = elems[i].lead();
            let lj = elems[j].lead();
            if lead_divides(lj, li) && !(lead_divides(li, lj) && j > i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut out: Vec<Elem> = elems
        .into_iter()
        .zip(keep)
        .filter_map(|(e, k)| if k { Some(e) } else { None })
        .collect();
    out.sort_by(|a, b| {
        let la = a.lead();
        let lb = b.lead();
        ring.cmp_module(lb.comp, &lb.exp, la.comp, &la.exp)
    });
    Basis { elems: out }
}

/// Reduce every s-vector of the basis to zero; used by the acceptance and
/// property suites to certify computed bases.
pub fn spairs_reduce_to_zero_ideal(ideal: &Ideal) -> bool {
    let b = ideal.basis();
    spairs_reduce(ideal.ring(), b)
}

pub fn spairs_reduce_to_zero_module(m: &Submodule) -> bool {
    let b = m.basis();
    spairs_reduce(m.ring(), b)
}

fn spairs_reduce(ring: &Ring, b: &Basis) -> bool {
    for i in 0..b.elems.len() {
        for j in (i + 1)..b.elems.len() {
            if b.elems[i].lead().comp != b.elems[j].lead().comp {
                continue;
            }
            let s = s_vector(ring, &b.elems[i], &b.elems[j]);
            if !mora::weak_normal_form(ring, &s, &b.elems).is_zero() {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
        let gens = gens.iter().map(|g| parse_poly(ring, g).unwrap()).collect();
        Ideal::new(ring, gens).unwrap()
    }

    #[test]
    fn monomial_input_is_its_own_basis() {
        let r = Ring::local(&["x", "y"]).unwrap();
        let i = ideal(&r, &["x^2", "y^3"]);
        let b = i.std_basis();
        assert_eq!(b.len(), 2);
        assert!(spairs_reduce_to_zero_ideal(&i));
    }

    #[test]
    fn zero_ideal_has_empty_basis() {
        let r = Ring::local(&["x"]).unwrap();
        let i = Ideal::new(&r, vec![Poly::zero(&r)]).unwrap();
        assert!(i.std_basis().is_empty());
    }

    #[test]
    fn curve_icis_leading_ideal() {
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        let i = ideal(&r, &["x^2 - y^3", "x^3 - z^2"]);
        let b = i.std_basis();
        // leading ideal is (x^2, z^2): a one-dimensional staircase
        let leads: Vec<Vec<u32>> =
            b.iter().map(|p| p.leading_term().unwrap().exp.clone()).collect();
        assert!(leads.contains(&vec![2, 0, 0]));
        assert!(leads.contains(&vec![0, 0, 2]));
        assert!(spairs_reduce_to_zero_ideal(&i));
    }

    #[test]
    fn membership_with_units() {
        let r = Ring::local(&["x"]).unwrap();
        let i = ideal(&r, &["x^2"]);
        assert!(i.contains(&parse_poly(&r, "x^2 + x^3").unwrap()).unwrap());
        assert!(!i.contains(&parse_poly(&r, "x").unwrap()).unwrap());
    }

    #[test]
    fn euler_relation_membership() {
        // g in J(g) for the weighted homogeneous g = Z^2 - X^2 Y.
        let r = Ring::local(&["X", "Y", "Z"]).unwrap();
        let g = parse_poly(&r, "Z^2 - X^2*Y").unwrap();
        let j = Ideal::new(
            &r,
            vec![
                g.differentiate("X").unwrap(),
                g.differentiate("Y").unwrap(),
                g.differentiate("Z").unwrap(),
            ],
        )
        .unwrap();
        assert!(j.contains(&g).unwrap());
    }

    #[test]
    fn normal_form_idempotent() {
        let r = Ring::local(&["x", "y"]).unwrap();
        let i = ideal(&r, &["x^2 - y^3", "x*y^2"]);
        let p = parse_poly(&r, "x^2 + x*y + y^5").unwrap();
        let n1 = i.normal_form(&p).unwrap();
        let n2 = i.normal_form(&n1).unwrap();
        assert_eq!(n1, n2);
    }
}
