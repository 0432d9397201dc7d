//! Ideal arithmetic, elimination, ring-map preimages, and syzygies.

use super::elem::Elem;
use super::{Ideal, Submodule};
use crate::error::{Error, Result};
use crate::germ::MapGerm;
use crate::poly::{leading_global_block, Poly};
use crate::ring::{BlockOrder, Ring};
use crate::vecpoly::VecPoly;

impl Ideal {
    pub fn sum(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch("sum of ideals in different rings"));
        }
        let mut gens = self.gens().to_vec();
        gens.extend(other.gens().iter().cloned());
        Ideal::new(self.ring(), gens)
    }

    pub fn product(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch("product of ideals in different rings"));
        }
        let mut gens = Vec::with_capacity(self.gens().len() * other.gens().len());
        for a in self.gens() {
            for b in other.gens() {
                gens.push(a.mul(b)?);
            }
        }
        Ideal::new(self.ring(), gens)
    }

    /// Intersection via a tag variable: eliminate t from t*A + (1-t)*B.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if self.ring() != other.ring() {
            return Err(Error::RingMismatch("intersection of ideals in different rings"));
        }
        let ring = self.ring();
        let tag = fresh_name(ring, "t");
        let ext = ring.with_front_block(&[&tag], BlockOrder::GlobalDegRevLex)?;
        let t = Poly::var(&ext, &tag)?;
        let one_minus_t = Poly::one(&ext).sub(&t)?;
        let mut gens = Vec::new();
        for a in self.gens() {
            gens.push(t.mul(&a.map_by_names(&ext)?)?);
        }
        for b in other.gens() {
            gens.push(one_minus_t.mul(&b.map_by_names(&ext)?)?);
        }
        let big = Ideal::new(&ext, gens)?;
        let elim = big.eliminate(&[&tag])?;
        // transport back to the original ring handle
        let gens = elim
            .gens()
            .iter()
            .map(|p| p.map_by_names(ring))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(ring, gens)
    }

    /// Ideal quotient (self : g) = {a : a*g in self}. The relations of
    /// (g | gens) project onto exactly these multipliers, which avoids the
    /// polynomial division that an intersect-and-divide route would need.
    pub fn colon(&self, g: &Poly) -> Result<Ideal> {
        if g.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if g.ring() != self.ring() {
            return Err(Error::RingMismatch("colon by a polynomial outside the ring"));
        }
        let mut all = vec![g.clone()];
        all.extend(self.gens().iter().cloned());
        let syz = syzygy_of_polys(self.ring(), &all)?;
        let gens: Vec<Poly> = syz
            .gens()
            .iter()
            .map(|v| v.component(0).clone())
            .filter(|p| !p.is_zero())
            .collect();
        Ideal::new(self.ring(), gens)
    }

    /// Intersect with the subring on the remaining variables. The dropped
    /// variables must form the leading, globally ordered block.
    pub fn eliminate(&self, drop: &[&str]) -> Result<Ideal> {
        let ring = self.ring();
        let block = leading_global_block(ring).ok_or_else(|| {
            Error::BadBlocks("elimination needs a leading global block".into())
        })?;
        let mut drop_idx: Vec<usize> =
            drop.iter().map(|v| ring.var_index(v)).collect::<Result<_>>()?;
        drop_idx.sort_unstable();
        if drop_idx != block {
            return Err(Error::BadBlocks(
                "the dropped variables must be exactly the leading global block".into(),
            ));
        }
        let keep: Vec<usize> = (0..ring.nvars()).filter(|i| !drop_idx.contains(i)).collect();
        let sub = ring.subring(&keep);
        let mut gens = Vec::new();
        for e in &self.basis().elems {
            let lead_free = drop_idx.iter().all(|&i| e.lead().exp[i] == 0);
            if lead_free {
                // the ordering makes the whole element free of dropped vars
                let p = e.to_poly(ring);
                gens.push(p.map_by_names(&sub)?);
            }
        }
        Ideal::new(&sub, gens)
    }
}

fn fresh_name(ring: &Ring, base: &str) -> String {
    let mut name = base.to_string();
    let mut i = 0;
    while ring.var_index(&name).is_ok() {
        i += 1;
        name = format!("{}{}", base, i);
    }
    name
}

/// Preimage of an ideal of the source ring (taken modulo the germ's defining
/// equations) under the pullback map of `phi`: build the combined ring with
/// the source variables as a global elimination block, add the graph
/// relations and the source equations, and eliminate the source variables.
pub fn map_preimage(phi: &MapGerm, ideal: &Ideal) -> Result<Ideal> {
    map_preimage_impl(phi, ideal, false)
}

/// Kernel of the pullback map of a germ with smooth source. Composition with
/// polynomial components is exact, so the kernel can be computed with a
/// global ordering on the kept block, where the minimal basis element of a
/// principal ideal carries no unit factor.
pub fn map_kernel(phi: &MapGerm) -> Result<Ideal> {
    let zero = Ideal::new(phi.source(), vec![])?;
    map_preimage_impl(phi, &zero, true)
}

fn map_preimage_impl(phi: &MapGerm, ideal: &Ideal, global_kept: bool) -> Result<Ideal> {
    if ideal.ring() != phi.source() {
        return Err(Error::RingMismatch("preimage of an ideal outside the source ring"));
    }
    let src = phi.source();
    let tgt = phi.target();
    let src_names: Vec<&str> = src.vars().iter().map(|s| s.as_str()).collect();
    let kept: Ring = if global_kept {
        let tgt_names: Vec<&str> = tgt.vars().iter().map(|s| s.as_str()).collect();
        Ring::global(&tgt_names)?
    } else {
        tgt.clone()
    };
    let combined = kept.with_front_block(&src_names, BlockOrder::GlobalDegRevLex)?;

    let mut gens = Vec::new();
    for p in ideal.gens() {
        gens.push(p.map_by_names(&combined)?);
    }
    // graph relations; components that are a plain multiple of one source
    // variable are substituted away instead of eliminated
    let mut graph: Vec<Option<Poly>> = Vec::new();
    for (j, comp) in phi.components().iter().enumerate() {
        let y = Poly::var(&combined, tgt.var_name(j))?;
        graph.push(Some(y.sub(&comp.map_by_names(&combined)?)?));
    }
    for h in phi.icis_equations() {
        gens.push(h.map_by_names(&combined)?);
    }
    let n_src = src.nvars();
    loop {
        // a relation with exactly two terms, one of them c * x_i of degree
        // one in a lone source variable, rewrites x_i away
        let mut subst: Option<(usize, Poly, usize)> = None;
        'scan: for (j, rel) in graph.iter().enumerate() {
            let Some(rel) = rel else { continue };
            if rel.terms().len() != 2 {
                continue;
            }
            for (ti, t) in rel.terms().iter().enumerate() {
                let support: Vec<usize> =
                    (0..combined.nvars()).filter(|&i| t.exp[i] > 0).collect();
                if support.len() == 1 && support[0] < n_src && t.exp[support[0]] == 1 {
                    let xi = support[0];
                    let other = &rel.terms()[1 - ti];
                    if other.exp[xi] != 0 {
                        continue; // x_i may not occur in its own image
                    }
                    // x_i = -(other term) / coeff
                    let image = Poly::monomial(
                        &combined,
                        -(&other.coeff / &t.coeff),
                        other.exp.clone(),
                    );
                    subst = Some((xi, image, j));
                    break 'scan;
                }
            }
        }
        let Some((xi, image, j)) = subst else { break };
        graph[j] = None;
        let mut images: Vec<Poly> = (0..combined.nvars())
            .map(|i| Poly::var(&combined, combined.var_name(i)).expect("own var"))
            .collect();
        images[xi] = image;
        for g in gens.iter_mut() {
            *g = g.compose(&images)?;
        }
        for rel in graph.iter_mut().flatten() {
            *rel = rel.compose(&images)?;
        }
    }
    gens.extend(graph.into_iter().flatten());
    let big = Ideal::new(&combined, gens)?;
    let elim = big.eliminate(&src_names)?;
    let gens = elim
        .gens()
        .iter()
        .map(|p| p.map_by_names(tgt))
        .collect::<Result<Vec<_>>>()?;
    Ideal::new(tgt, gens)
}

/// Syzygies of a list of polynomials: generators of the relations
/// {(a_1..a_s) : sum a_i f_i = 0} over the localized ring.
pub fn syzygy_of_polys(ring: &Ring, gens: &[Poly]) -> Result<Submodule> {
    let vecs: Vec<VecPoly> = gens
        .iter()
        .map(|p| {
            if p.ring() != ring {
                Err(Error::RingMismatch("syzygy generator outside the ring"))
            } else {
                Ok(VecPoly::scaled_unit(1, 0, p.clone()))
            }
        })
        .collect::<Result<_>>()?;
    syzygy_of_vecs(ring, 1, &vecs)
}

/// Syzygies of module elements in `R^rank`.
pub fn syzygy_of_vecs(ring: &Ring, rank: usize, gens: &[VecPoly]) -> Result<Submodule> {
    let s = gens.len();
    if s == 0 {
        return Submodule::new(ring, 1, vec![]);
    }
    // Augment: element i becomes (g_i | e_i) in R^{rank+s}; with position-
    // over-term priority on the first block of components, basis elements
    // with vanishing head are exactly the syzygy generators. Pairing is
    // restricted to head-led elements: their reductions to pure-tag vectors
    // already produce a generating set of the syzygies.
    let mut aug: Vec<Elem> = Vec::with_capacity(s);
    for (i, g) in gens.iter().enumerate() {
        if g.ring() != ring || g.rank() != rank {
            return Err(Error::RingMismatch("syzygy generator outside the module"));
        }
        let mut comps: Vec<Poly> = g.components().to_vec();
        let mut tail = vec![Poly::zero(ring); s];
        tail[i] = Poly::one(ring);
        comps.extend(tail);
        aug.push(Elem::from_vecpoly(ring, &VecPoly::new(comps)?));
    }
    let basis = super::std_basis_engine_cofactor(ring, rank + s, aug, rank);
    let mut out = Vec::new();
    for e in &basis.elems {
        if (e.lead().comp as usize) >= rank {
            // head part is zero by the ordering; the tail is a syzygy
            let v = e.to_vecpoly(ring, rank + s);
            let tail = VecPoly::new(v.components()[rank..].to_vec())?;
            debug_assert!(v.components()[..rank].iter().all(|p| p.is_zero()));
            out.push(tail);
        }
    }
    Submodule::new(ring, s, out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::stdbasis::Dim;

    fn ideal(ring: &Ring, gens: &[&str]) -> Ideal {
        let gens = gens.iter().map(|g| parse_poly(ring, g).unwrap()).collect();
        Ideal::new(ring, gens).unwrap()
    }

    #[test]
    fn sum_and_product() {
        let r = Ring::local(&["x", "y"]).unwrap();
        let a = ideal(&r, &["x"]);
        let b = ideal(&r, &["y"]);
        let s = a.sum(&b).unwrap();
        assert!(s.contains(&parse_poly(&r, "x + y").unwrap()).unwrap());
        let p = a.product(&b).unwrap();
        assert_eq!(p.gens().len(), 1);
        assert_eq!(p.gens()[0], parse_poly(&r, "x*y").unwrap());
    }

    #[test]
    fn intersection_of_principal_ideals() {
        let r = Ring::local(&["x", "y"]).unwrap();
        let a = ideal(&r, &["x"]);
        let b = ideal(&r, &["y"]);
        let cap = a.intersect(&b).unwrap();
        let expect = ideal(&r, &["x*y"]);
        assert!(cap.equals(&expect).unwrap());
    }

    #[test]
    fn colon_examples() {
        let r = Ring::local(&["x", "y"]).unwrap();
        assert!(ideal(&r, &["x*y"])
            .colon(&parse_poly(&r, "x").unwrap())
            .unwrap()
            .equals(&ideal(&r, &["y"]))
            .unwrap());
        let j = ideal(&r, &["x^2 - y^3", "x*y"]);
        assert!(j.colon(&Poly::one(&r)).unwrap().equals(&j).unwrap());
        assert!(ideal(&r, &["x^2", "x*y"])
            .colon(&parse_poly(&r, "x").unwrap())
            .unwrap()
            .equals(&ideal(&r, &["x", "y"]))
            .unwrap());
    }

    #[test]
    fn eliminate_monomial_curve() {
        // x global elimination block in front of a local (Y, Z) block
        let back = Ring::local(&["Y", "Z"]).unwrap();
        let r = back.with_front_block(&["x"], BlockOrder::GlobalDegRevLex).unwrap();
        let i = ideal(&r, &["Y - x^2", "Z - x^3"]);
        let e = i.eliminate(&["x"]).unwrap();
        let expect = ideal(&back, &["Y^3 - Z^2"]);
        assert!(e.equals(&expect).unwrap());
    }

    #[test]
    fn eliminate_everything_gives_zero_ideal() {
        let back = Ring::local(&["Y"]).unwrap();
        let r = back.with_front_block(&["x"], BlockOrder::GlobalDegRevLex).unwrap();
        let i = ideal(&r, &["x"]);
        let e = i.eliminate(&["x"]).unwrap();
        assert!(e.gens().is_empty());
    }

    #[test]
    fn cross_cap_graph_elimination() {
        let back = Ring::local(&["X", "Y", "Z"]).unwrap();
        let r = back
            .with_front_block(&["x", "y"], BlockOrder::GlobalDegRevLex)
            .unwrap();
        let i = ideal(&r, &["X - x", "Y - y^2", "Z - x*y"]);
        let e = i.eliminate(&["x", "y"]).unwrap();
        let expect = ideal(&back, &["Z^2 - X^2*Y"]);
        assert!(e.equals(&expect).unwrap());
    }

    #[test]
    fn preimage_examples() {
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
        // preimage of (x): p(x, y^2, xy) in (x) iff p(0, Y, 0) = 0
        let pre = map_preimage(&f, &ideal(&src, &["x"])).unwrap();
        let expect = ideal(&tgt, &["X", "Z"]);
        assert!(pre.equals(&expect).unwrap());
        // kernel as preimage of (0)
        let ker = map_preimage(&f, &Ideal::new(&src, vec![]).unwrap()).unwrap();
        let expect = ideal(&tgt, &["Z^2 - X^2*Y"]);
        assert!(ker.equals(&expect).unwrap());
    }

    #[test]
    fn preimage_under_identity_like_map() {
        let src = Ring::local(&["x", "y"]).unwrap();
        let tgt = Ring::local(&["X", "Y"]).unwrap();
        let f = MapGerm::new(
            src.clone(),
            tgt.clone(),
            vec![parse_poly(&src, "x").unwrap(), parse_poly(&src, "y").unwrap()],
            vec![],
        )
        .unwrap();
        let i = ideal(&src, &["x^2 - y^3", "x*y"]);
        let pre = map_preimage(&f, &i).unwrap();
        let expect = ideal(&tgt, &["X^2 - Y^3", "X*Y"]);
        assert!(pre.equals(&expect).unwrap());
    }

    #[test]
    fn kernel_of_monomial_curve_map() {
        let src = Ring::local(&["x"]).unwrap();
        let tgt = Ring::local(&["X", "Y"]).unwrap();
        let f = MapGerm::new(
            src.clone(),
            tgt.clone(),
            vec![parse_poly(&src, "x^2").unwrap(), parse_poly(&src, "x^3").unwrap()],
            vec![],
        )
        .unwrap();
        let ker = map_preimage(&f, &Ideal::new(&src, vec![]).unwrap()).unwrap();
        let expect = ideal(&tgt, &["X^3 - Y^2"]);
        assert!(ker.equals(&expect).unwrap());
    }

    #[test]
    fn koszul_syzygy() {
        let r = Ring::local(&["x", "y"]).unwrap();
        let s = syzygy_of_polys(&r, &[parse_poly(&r, "x").unwrap(), parse_poly(&r, "y").unwrap()])
            .unwrap();
        assert_eq!(s.gens().len(), 1);
        let v = &s.gens()[0];
        // (y, -x) up to sign
        let y = parse_poly(&r, "y").unwrap();
        let x = parse_poly(&r, "x").unwrap();
        let matches = (*v.component(0) == y && *v.component(1) == x.neg())
            || (*v.component(0) == y.neg() && *v.component(1) == x);
        assert!(matches, "got {}", v);
    }

    #[test]
    fn syzygy_of_unit_is_zero() {
        let r = Ring::local(&["x"]).unwrap();
        let s = syzygy_of_polys(&r, &[Poly::one(&r)]).unwrap();
        assert!(s.gens().is_empty());
    }

    #[test]
    fn syzygy_contains_koszul_relation() {
        let r = Ring::local(&["x", "y"]).unwrap();
        let s = syzygy_of_polys(
            &r,
            &[parse_poly(&r, "x^2").unwrap(), parse_poly(&r, "x*y").unwrap()],
        )
        .unwrap();
        let target = VecPoly::new(vec![
            parse_poly(&r, "y").unwrap(),
            parse_poly(&r, "-x").unwrap(),
        ])
        .unwrap();
        assert!(s.contains(&target).unwrap());
    }

    #[test]
    fn intersection_feeds_quotient_dimension() {
        // dim O_3 / ((q) + 2-minors) = 6 for q = x^2+y^2+z^2 paired with xy
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        let i = ideal(
            &r,
            &["x^2 + y^2 + z^2", "2*x^2 - 2*y^2", "-2*y*z", "-2*x*z"],
        );
        assert_eq!(i.vs_dimension().unwrap(), Dim::Finite(6));
    }
}
