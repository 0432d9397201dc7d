//! Mora weak normal form.
//!
//! Ecart-guided division that terminates for every block ordering, local and
//! mixed ones included. The reducer set is extended by intermediate results
//! whenever the chosen reducer has larger ecart, which is what buys
//! termination; the price is that the result is a weak normal form: it
//! represents `u * p` modulo the submodule for some unit u of the localized
//! ring. Membership tests are unaffected.

use super::elem::{exp_sub, lead_divides, Elem};
use crate::ring::Ring;

enum Stored<'a> {
    Shared(&'a Elem),
    Owned(Elem),
}

struct Reducer<'a> {
    elem: Stored<'a>,
    ecart: u64,
    terms: usize,
}

impl<'a> Reducer<'a> {
    fn get(&self) -> &Elem {
        match &self.elem {
            Stored::Shared(e) => e,
            Stored::Owned(e) => e,
        }
    }
}

/// Weak normal form of `p` against `basis`. The result is zero iff `p` lies
/// in the localized span when `basis` is a standard basis. Reduction steps
/// cross-multiply by leading coefficients (a unit factor) and rescale to
/// primitive integers, so chains stay fraction-free.
pub(crate) fn weak_normal_form(ring: &Ring, p: &Elem, basis: &[Elem]) -> Elem {
    weak_normal_form_capped(ring, p, basis, None)
}

/// As `weak_normal_form`, additionally working modulo all monomials of total
/// degree >= cap (valid in fully local rings, where leading terms have
/// minimal degree and truncated tails stay truncated).
pub(crate) fn weak_normal_form_capped(
    ring: &Ring,
    p: &Elem,
    basis: &[Elem],
    cap: Option<u64>,
) -> Elem {
    let mut reducers: Vec<Reducer> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Reducer { elem: Stored::Shared(g), ecart: g.ecart(), terms: g.terms.len() })
        .collect();
    let mut h = match cap {
        Some(c) => p.clone().truncate(c),
        None => p.clone(),
    };
    loop {
        if h.is_zero() {
            return h;
        }
        let lead = h.lead().clone();
        // smallest ecart wins; break ties by term count, then age
        let mut chosen: Option<usize> = None;
        for (i, r) in reducers.iter().enumerate() {
            if lead_divides(r.get().lead(), &lead) {
                match chosen {
                    Some(c)
                        if (reducers[c].ecart, reducers[c].terms) <= (r.ecart, r.terms) => {}
                    _ => chosen = Some(i),
                }
            }
        }
        let Some(ci) = chosen else { return h };
        let h_ecart = h.ecart();
        if reducers[ci].ecart > h_ecart {
            // Keep the current partial result as a reducer; this step may
            // multiply the input by a unit.
            reducers.push(Reducer {
                elem: Stored::Owned(h.clone()),
                ecart: h_ecart,
                terms: h.terms.len(),
            });
        }
        let g = reducers[ci].get();
        let gl = g.lead();
        let shift = exp_sub(&lead.exp, &gl.exp);
        let mut next = h.cross_reduce(ring, &gl.coeff, &lead.coeff, &shift, g);
        if let Some(c) = cap {
            next = next.truncate(c);
        }
        h = next.primitive();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::Ring;

    fn nf(ring: &Ring, p: &str, gens: &[&str]) -> String {
        let pe = Elem::from_poly(&parse_poly(ring, p).unwrap());
        let basis: Vec<Elem> = gens
            .iter()
            .map(|g| Elem::from_poly(&parse_poly(ring, g).unwrap()))
            .collect();
        weak_normal_form(ring, &pe, &basis).to_poly(ring).to_string()
    }

    #[test]
    fn plain_reductions() {
        let r = Ring::local(&["x", "y"]).unwrap();
        assert_eq!(nf(&r, "x^2", &["x"]), "0");
        assert_eq!(nf(&r, "x", &["x^2"]), "x");
    }

    #[test]
    fn unit_absorption_in_local_ring() {
        let r = Ring::local(&["x"]).unwrap();
        // x^2 + x^3 = x^2 (1 + x) is a unit multiple of x^2.
        assert_eq!(nf(&r, "x^2 + x^3", &["x^2"]), "0");
    }

    #[test]
    fn terminates_on_coprime_local_tails() {
        // Without the self-inclusion step this loops forever.
        let r = Ring::local(&["x", "y"]).unwrap();
        assert_eq!(nf(&r, "x^2*y - x*y^3", &["x + x^2", "y + y^3"]), "0");
    }
}
