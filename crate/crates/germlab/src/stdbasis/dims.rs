//! Vector-space dimensions of quotients via staircase counting, Krull
//! dimension of leading ideals, and dimensions of subquotients.

use super::elem::MTerm;
use super::{syzygy_of_polys, Basis, Ideal, Submodule};
use crate::error::{Error, Result};
use crate::ring::Ring;
use crate::vecpoly::VecPoly;

/// A vector-space dimension that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Dim {
    Finite(u64),
    Infinite,
}

impl Dim {
    pub fn finite(self) -> Option<u64> {
        match self {
            Dim::Finite(n) => Some(n),
            Dim::Infinite => None,
        }
    }

    pub fn expect_finite(self, what: &str) -> Result<u64> {
        self.finite().ok_or_else(|| Error::Infinite(what.to_string()))
    }
}

impl std::fmt::Display for Dim {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Dim::Finite(n) => write!(f, "{}", n),
            Dim::Infinite => write!(f, "infinite"),
        }
    }
}

impl Ideal {
    /// dim_C of (localized ring)/ideal: the number of standard monomials
    /// outside the leading ideal of a standard basis. Counted through the
    /// certified truncation ladder, falling back to the full standard basis
    /// when the ladder does not settle.
    pub fn vs_dimension(&self) -> Result<Dim> {
        if !self.ring().is_fully_local() {
            return Err(Error::NonLocalRing("vs_dimension"));
        }
        let gens: Vec<super::elem::Elem> =
            self.gens().iter().map(super::elem::Elem::from_poly).collect();
        if let Some(d) = ladder_dimension(self.ring(), 1, &gens) {
            return Ok(Dim::Finite(d));
        }
        Ok(count_basis_staircase(self.ring(), self.basis(), 1))
    }

    /// Krull dimension of ring/leading-ideal: the largest set of variables
    /// containing no leading monomial's full support.
    pub fn krull_dim_leading(&self) -> u64 {
        let exps: Vec<Vec<u32>> = self.basis().leads().map(|l| l.exp.clone()).collect();
        krull_dim_monomial(self.ring().nvars(), &exps)
    }
}

impl Submodule {
    /// dim_C of (free module)/submodule, summed over components.
    pub fn vs_dimension(&self) -> Result<Dim> {
        if !self.ring().is_fully_local() {
            return Err(Error::NonLocalRing("vs_dimension"));
        }
        let gens: Vec<super::elem::Elem> = self
            .gens()
            .iter()
            .map(|g| super::elem::Elem::from_vecpoly(self.ring(), g))
            .collect();
        if let Some(d) = ladder_dimension(self.ring(), self.rank(), &gens) {
            return Ok(Dim::Finite(d));
        }
        Ok(count_basis_staircase(self.ring(), self.basis(), self.rank()))
    }

    /// Monomial-times-unit-vector representatives of the quotient, in
    /// deterministic order. Errors when infinite.
    pub fn staircase_basis(&self) -> Result<Vec<(usize, Vec<u32>)>> {
        if !self.ring().is_fully_local() {
            return Err(Error::NonLocalRing("staircase_basis"));
        }
        let gens: Vec<super::elem::Elem> = self
            .gens()
            .iter()
            .map(|g| super::elem::Elem::from_vecpoly(self.ring(), g))
            .collect();
        if let Some((cap, basis)) = ladder_basis(self.ring(), self.rank(), &gens) {
            let mut out = Vec::new();
            for comp in 0..self.rank() {
                let leads = component_leads(&basis, comp as u32);
                let mons = enumerate_staircase_below(self.ring().nvars(), &leads, cap);
                out.extend(mons.into_iter().map(|m| (comp, m)));
            }
            return Ok(out);
        }
        let b = self.basis();
        let mut out = Vec::new();
        for comp in 0..self.rank() {
            let gens = component_leads(b, comp as u32);
            let mons = enumerate_staircase(self.ring().nvars(), &gens)
                .ok_or_else(|| Error::Infinite(format!("component {} staircase", comp)))?;
            out.extend(mons.into_iter().map(|m| (comp, m)));
        }
        Ok(out)
    }
}

/// Dimension bound for the truncation ladder: generous for few variables,
/// conservative past that.
fn ladder_limit(nvars: usize) -> u64 {
    (96 / nvars.max(1) as u64).max(24)
}

/// Certified dimension via truncated standard bases: once the count modulo
/// m^D equals the count modulo m^{D+1}, the D-th power of the maximal ideal
/// lies in the submodule (Nakayama) and the count is exact. Returns None
/// when the ladder exhausts its cap (possibly infinite dimension).
fn ladder_dimension(ring: &Ring, rank: usize, gens: &[super::elem::Elem]) -> Option<u64> {
    ladder_run(ring, rank, gens).map(|(_, _, n)| n)
}

fn ladder_basis(ring: &Ring, rank: usize, gens: &[super::elem::Elem]) -> Option<(u64, Basis)> {
    ladder_run(ring, rank, gens).map(|(cap, basis, _)| (cap, basis))
}

fn ladder_run(
    ring: &Ring,
    rank: usize,
    gens: &[super::elem::Elem],
) -> Option<(u64, Basis, u64)> {
    let limit = ladder_limit(ring.nvars());
    let mut prev: Option<(u64, Basis, u64)> = None;
    let mut cap = 2;
    while cap <= limit {
        let basis = super::std_basis_engine_truncated(ring, rank, gens.to_vec(), cap);
        let mut count = 0u64;
        for comp in 0..rank {
            let leads = component_leads(&basis, comp as u32);
            count += count_staircase_below(ring.nvars(), &leads, cap);
        }
        if let Some((_, pb, pn)) = &prev {
            if *pn == count {
                let _ = pb;
                return Some((cap, basis, count));
            }
        }
        prev = Some((cap, basis, count));
        cap += 1;
    }
    None
}

/// Monomials of total degree < cap not divisible by any generator.
fn count_staircase_below(nvars: usize, gens: &[Vec<u32>], cap: u64) -> u64 {
    enumerate_staircase_below(nvars, gens, cap).len() as u64
}

fn enumerate_staircase_below(nvars: usize, gens: &[Vec<u32>], cap: u64) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    loop {
        if Ring::total_degree(&cur) < cap {
            let divisible = gens
                .iter()
                .any(|g| g.iter().zip(&cur).all(|(&ge, &ce)| ge <= ce));
            if !divisible {
                out.push(cur.clone());
            }
        }
        // odometer bounded by total degree
        let mut i = 0;
        loop {
            if i == nvars {
                out.sort_by_key(|m| (Ring::total_degree(m), m.clone()));
                return out;
            }
            cur[i] += 1;
            if Ring::total_degree(&cur) < cap {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

fn component_leads(b: &Basis, comp: u32) -> Vec<Vec<u32>> {
    b.leads()
        .filter(|l| l.comp == comp)
        .map(|l: &MTerm| l.exp.clone())
        .collect()
}

fn count_basis_staircase(ring: &Ring, b: &Basis, rank: usize) -> Dim {
    let mut total: u64 = 0;
    for comp in 0..rank {
        let gens = component_leads(b, comp as u32);
        match count_staircase(ring.nvars(), &gens) {
            Some(n) => total += n,
            None => return Dim::Infinite,
        }
    }
    Dim::Finite(total)
}

/// Number of monomials outside the monomial ideal generated by `gens`;
/// None when infinite.
pub(crate) fn count_staircase(nvars: usize, gens: &[Vec<u32>]) -> Option<u64> {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return Some(0); // contains 1
    }
    // Finite iff every variable has a pure power among the generators.
    if nvars > 0 {
        for v in 0..nvars {
            let has_pure = gens
                .iter()
                .any(|g| g[v] > 0 && g.iter().enumerate().all(|(i, &e)| i == v || e == 0));
            if !has_pure {
                return None;
            }
        }
    }
    if gens.is_empty() {
        return if nvars == 0 { Some(1) } else { None };
    }
    Some(count_rec(nvars, gens))
}

fn count_rec(nvars: usize, gens: &[Vec<u32>]) -> u64 {
    if gens.iter().any(|g| g[..nvars].iter().all(|&e| e == 0)) {
        return 0;
    }
    if nvars == 0 {
        return 1;
    }
    let v = nvars - 1;
    // pure power bound in the last variable (finiteness already checked)
    let bound = gens
        .iter()
        .filter(|g| g[v] > 0 && g[..v].iter().all(|&e| e == 0))
        .map(|g| g[v])
        .min()
        .unwrap_or(u32::MAX);
    let mut total = 0u64;
    for d in 0..bound {
        // slice the staircase at last variable = d
        let sliced: Vec<Vec<u32>> = gens
            .iter()
            .filter(|g| g[v] <= d)
            .map(|g| g[..v].to_vec())
            .collect();
        total += count_rec(v, &sliced);
    }
    total
}

/// Monomials outside the ideal, ordered by total degree then exponents.
fn enumerate_staircase(nvars: usize, gens: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    count_staircase(nvars, gens)?;
    let mut bounds = vec![0u32; nvars];
    for v in 0..nvars {
        bounds[v] = gens
            .iter()
            .filter(|g| g[v] > 0 && g.iter().enumerate().all(|(i, &e)| i == v || e == 0))
            .map(|g| g[v])
            .min()
            .unwrap_or(1);
    }
    let mut out = Vec::new();
    let mut cur = vec![0u32; nvars];
    loop {
        let divisible = gens
            .iter()
            .any(|g| g.iter().zip(&cur).all(|(&ge, &ce)| ge <= ce));
        if !divisible {
            out.push(cur.clone());
        }
        // odometer
        let mut i = 0;
        loop {
            if i == nvars {
                out.sort_by_key(|m| (Ring::total_degree(m), m.clone()));
                return Some(out);
            }
            cur[i] += 1;
            if cur[i] < bounds[i] {
                break;
            }
            cur[i] = 0;
            i += 1;
        }
    }
}

/// Krull dimension of K[x]/(monomial ideal): the largest variable subset that
/// contains no generator's support.
pub(crate) fn krull_dim_monomial(nvars: usize, gens: &[Vec<u32>]) -> u64 {
    if gens.iter().any(|g| g.iter().all(|&e| e == 0)) {
        return 0; // unit ideal; empty variety
    }
    let supports: Vec<Vec<usize>> = gens
        .iter()
        .map(|g| (0..nvars).filter(|&i| g[i] > 0).collect())
        .collect();
    let mut best = 0u64;
    for mask in 0..(1u32 << nvars) {
        let size = mask.count_ones() as u64;
        if size <= best {
            continue;
        }
        let ok = supports
            .iter()
            .all(|s| s.iter().any(|&i| mask & (1 << i) == 0));
        if ok {
            best = size;
        }
    }
    best
}

/// dim_C of P/J for ideals J ⊆ P: present P/J as R^s/K with s = #gens(P) and
/// K the preimage of J under (a_1..a_s) -> sum a_i p_i, computed from the
/// syzygies of (p_1..p_s | gens J).
pub fn subquotient_dim(p: &Ideal, j: &Ideal) -> Result<Dim> {
    if p.ring() != j.ring() {
        return Err(Error::RingMismatch("subquotient of ideals in different rings"));
    }
    for g in j.gens() {
        if !p.contains(g)? {
            return Err(Error::NotApplicable(format!(
                "subquotient needs J contained in P; generator `{}` of J is not in P",
                g
            )));
        }
    }
    let k = subquotient_presentation(p, j)?;
    k.vs_dimension()
}

/// The kernel K of R^s -> P/J described above, as a rank-s submodule.
pub fn subquotient_presentation(p: &Ideal, j: &Ideal) -> Result<Submodule> {
    let s = p.gens().len();
    if s == 0 {
        // P = 0 forces J = 0; the quotient is zero, presented as R^0... use
        // rank 1 with the full module instead.
        let one = crate::poly::Poly::one(p.ring());
        return Submodule::new(
            p.ring(),
            1,
            vec![VecPoly::scaled_unit(1, 0, one)],
        );
    }
    let mut all: Vec<crate::poly::Poly> = p.gens().to_vec();
    all.extend(j.gens().iter().cloned());
    let syz = syzygy_of_polys(p.ring(), &all)?;
    // project syzygies to the first s coordinates
    let mut kgens = Vec::new();
    for v in syz.gens() {
        let head = VecPoly::new(v.components()[..s].to_vec())?;
        if !head.is_zero() {
            kgens.push(head);
        }
    }
    Submodule::new(p.ring(), s, kgens)
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
    fn box_staircase() {
        let r = Ring::local(&["x", "y"]).unwrap();
        assert_eq!(ideal(&r, &["x^2", "y^3"]).vs_dimension().unwrap(), Dim::Finite(6));
    }

    #[test]
    fn unit_scaled_monomials() {
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        let i = ideal(&r, &["3*x^2", "3*y^2", "-2*z"]);
        assert_eq!(i.vs_dimension().unwrap(), Dim::Finite(4));
    }

    #[test]
    fn maximal_ideal_jacobian() {
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        let i = ideal(&r, &["2*x", "2*y", "2*z"]);
        assert_eq!(i.vs_dimension().unwrap(), Dim::Finite(1));
    }

    #[test]
    fn infinite_when_a_variable_is_free() {
        let r = Ring::local(&["x", "y"]).unwrap();
        assert_eq!(ideal(&r, &["x^2"]).vs_dimension().unwrap(), Dim::Infinite);
    }

    #[test]
    fn krull_dims() {
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        assert_eq!(ideal(&r, &["x^2 - y^3", "x^3 - z^2"]).krull_dim_leading(), 1);
        assert_eq!(Ideal::new(&r, vec![]).unwrap().krull_dim_leading(), 3);
        assert_eq!(ideal(&r, &["x", "y", "z"]).krull_dim_leading(), 0);
        let r2 = Ring::local(&["x", "y"]).unwrap();
        assert_eq!(ideal(&r2, &["x*y"]).krull_dim_leading(), 1);
    }

    #[test]
    fn subquotient_trivial_and_small() {
        let r = Ring::local(&["x", "y"]).unwrap();
        let p = ideal(&r, &["x", "y"]);
        assert_eq!(subquotient_dim(&p, &p).unwrap(), Dim::Finite(0));
        let m2 = ideal(&r, &["x^2", "x*y", "y^2"]);
        assert_eq!(subquotient_dim(&p, &m2).unwrap(), Dim::Finite(2));
        // J not inside P errors
        let q = ideal(&r, &["x^3"]);
        assert!(subquotient_dim(&q, &p).is_err());
    }

    #[test]
    fn subquotient_matches_difference_of_dimensions() {
        let r = Ring::local(&["x", "y"]).unwrap();
        let p = ideal(&r, &["x", "y^2"]);
        let j = ideal(&r, &["x^2", "x*y^2", "y^4"]);
        let dp = p.vs_dimension().unwrap().finite().unwrap();
        let dj = j.vs_dimension().unwrap().finite().unwrap();
        assert_eq!(
            subquotient_dim(&p, &j).unwrap(),
            Dim::Finite(dj - dp)
        );
    }
}
