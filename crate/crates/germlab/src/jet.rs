//! Finite-dimensional jet model of the left-right tangent space.
//!
//! For a germ with smooth source, the codimension of the tangent space
//! spanned by source vector fields pushed through the differential and
//! target vector fields pulled back through the germ is computed by plain
//! linear algebra on jets of order d: generators are truncated to degree d
//! and the quotient dimension is a rank deficiency. The value stabilizes in
//! d once d dominates the determinacy degree; the caller asserts such a
//! bound and the routine checks equality at d and d+1.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::germ::MapGerm;
use crate::linalg::RatMat;
use crate::poly::Poly;
use crate::ring::Ring;

/// Left-right codimension via the jet model. The germ must have a smooth
/// source and be finitely determined with determinacy degree at most `d`.
pub fn ae_codim_jet(f: &MapGerm, d: u32) -> Result<u64> {
    if !f.icis_equations().is_empty() {
        return Err(Error::NotApplicable(
            "the jet model expects a smooth source (no defining equations)".into(),
        ));
    }
    let at_d = quotient_dim_at(f, d)?;
    let at_d1 = quotient_dim_at(f, d + 1)?;
    if at_d != at_d1 {
        return Err(Error::NotApplicable(format!(
            "jet quotient has not stabilized at order {} ({} vs {}); raise the jet order",
            d, at_d, at_d1
        )));
    }
    Ok(at_d)
}

fn quotient_dim_at(f: &MapGerm, d: u32) -> Result<u64> {
    let src = f.source();
    let n = src.nvars();
    let p = f.components().len();
    let mons = monomials_up_to(n, d);
    let index_of = |exp: &[u32]| -> Option<usize> {
        mons.iter().position(|m| m == exp)
    };
    let rows = mons.len() * p;

    // generator columns
    let mut cols: Vec<Vec<(usize, BigRational)>> = Vec::new();
    let push_vector = |polys: Vec<(usize, Poly)>, cols: &mut Vec<Vec<(usize, BigRational)>>| {
        let mut col = Vec::new();
        for (comp, poly) in polys {
            for t in poly.terms() {
                if Ring::total_degree(&t.exp) <= d as u64 {
                    if let Some(mi) = index_of(&t.exp) {
                        col.push((comp * mons.len() + mi, t.coeff.clone()));
                    }
                }
            }
        }
        if !col.is_empty() {
            cols.push(col);
        }
    };

    // pushforwards of source fields: x^a * d(components)/dx_j, truncated
    for j in 0..n {
        let partials: Vec<Poly> =
            f.components().iter().map(|c| c.differentiate_index(j)).collect();
        for m in &mons {
            let vec: Vec<(usize, Poly)> = partials
                .iter()
                .enumerate()
                .map(|(c, q)| (c, q.mul_monomial(&num_traits::One::one(), m)))
                .collect();
            push_vector(vec, &mut cols);
        }
    }
    // pullbacks of target fields: (components)^b * e_i for |b| <= d
    let bmons = monomials_up_to(p, d);
    for b in &bmons {
        let mut prod = Poly::one(src);
        for (i, &e) in b.iter().enumerate() {
            if e > 0 {
                prod = prod.mul(&f.components()[i].pow(e))?;
            }
        }
        for c in 0..p {
            push_vector(vec![(c, prod.clone())], &mut cols);
        }
    }

    let mut mat = RatMat::zero(rows, cols.len());
    for (j, col) in cols.iter().enumerate() {
        for (i, v) in col {
            let cur = mat.at(*i, j) + v;
            mat.set(*i, j, cur);
        }
    }
    let rank = mat.rank();
    Ok(rows as u64 - rank as u64)
}

fn monomials_up_to(n: usize, d: u32) -> Vec<Vec<u32>> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if i == cur.len() {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur[i] = e;
            rec(i + 1, left - e, cur, out);
        }
        cur[i] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out.sort_by_key(|m| (Ring::total_degree(m), m.clone()));
    out
}

/// Convenience used in reports: the stabilized value plus the order at which
/// stabilization was certified.
pub fn ae_codim_jet_auto(f: &MapGerm, start: u32, max: u32) -> Result<(u64, u32)> {
    let mut d = start;
    let mut prev = quotient_dim_at(f, d)?;
    while d < max {
        let next = quotient_dim_at(f, d + 1)?;
        if next == prev {
            return Ok((prev, d));
        }
        prev = next;
        d += 1;
    }
    Err(Error::NotApplicable(format!(
        "jet quotient did not stabilize below order {}; raise the jet order",
        max
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn germ(src: &Ring, tgt: &Ring, comps: &[&str]) -> MapGerm {
        let c = comps.iter().map(|p| parse_poly(src, p).unwrap()).collect();
        MapGerm::new(src.clone(), tgt.clone(), c, vec![]).unwrap()
    }

    #[test]
    fn cusp_parametrization_has_codimension_one() {
        let src = Ring::local(&["x"]).unwrap();
        let tgt = Ring::local(&["X", "Y"]).unwrap();
        let f = germ(&src, &tgt, &["x^2", "x^3"]);
        assert_eq!(ae_codim_jet(&f, 4).unwrap(), 1);
        assert_eq!(ae_codim_jet(&f, 6).unwrap(), 1);
    }

    #[test]
    fn cross_cap_is_stable() {
        let src = Ring::local(&["x", "y"]).unwrap();
        let tgt = Ring::local(&["X", "Y", "Z"]).unwrap();
        let f = germ(&src, &tgt, &["x", "y^2", "x*y"]);
        assert_eq!(ae_codim_jet(&f, 4).unwrap(), 0);
    }

    #[test]
    fn simple_one_parameter_germ() {
        let src = Ring::local(&["x", "y"]).unwrap();
        let tgt = Ring::local(&["X", "Y", "Z"]).unwrap();
        let f = germ(&src, &tgt, &["x", "y^2", "y^3 + x^2*y"]);
        assert_eq!(ae_codim_jet(&f, 6).unwrap(), 1);
    }
}
