//! Classical invariants of isolated complete intersection singularities and
//! of map germs: validation of the defining equations, Milnor numbers
//! (hypersurface formula and the recursive intersection formula), Tjurina
//! numbers, contact codimension, and ramification ideals.

use crate::error::{Error, Result};
use crate::germ::MapGerm;
use crate::linalg::SeededRng;
use crate::linalg::random_invertible_matrix;
use crate::matrix::{jacobian_matrix, mix_tuple};
use crate::poly::Poly;
use crate::ring::Ring;
use crate::stdbasis::{Dim, Ideal, Submodule};
use crate::vecpoly::VecPoly;

/// A validated germ of complete intersection: equations, computed dimension,
/// and the two validation flags.
#[derive(Debug, Clone)]
pub struct IcisGerm {
    ring: Ring,
    equations: Vec<Poly>,
    dimension: u64,
    is_complete_intersection: bool,
    has_isolated_singularity: bool,
}

impl IcisGerm {
    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    pub fn equations(&self) -> &[Poly] {
        &self.equations
    }

    /// Dimension of the zero set (Krull dimension of the quotient).
    pub fn dimension(&self) -> u64 {
        self.dimension
    }

    pub fn is_complete_intersection(&self) -> bool {
        self.is_complete_intersection
    }

    pub fn has_isolated_singularity(&self) -> bool {
        self.has_isolated_singularity
    }

    pub fn is_icis(&self) -> bool {
        self.is_complete_intersection && self.has_isolated_singularity
    }

    /// Smooth germ: the full ambient space, no equations.
    pub fn smooth(ring: &Ring) -> Result<IcisGerm> {
        validate_icis(ring, vec![])
    }

    pub fn ideal(&self) -> Result<Ideal> {
        Ideal::new(&self.ring, self.equations.clone())
    }

    pub fn codimension(&self) -> u64 {
        self.ring.nvars() as u64 - self.dimension
    }
}

/// Validate equations as a complete intersection with isolated singularity.
///
/// The dimension comes from the leading ideal of a standard basis; complete
/// intersection means the number of equations equals the codimension; the
/// singular locus test adjoins the c-minors of the jacobian for c equal to
/// the computed codimension and asks for a finite quotient.
pub fn validate_icis(ring: &Ring, equations: Vec<Poly>) -> Result<IcisGerm> {
    if !ring.is_fully_local() {
        return Err(Error::NonLocalRing("validate_icis"));
    }
    for e in &equations {
        if e.ring() != ring {
            return Err(Error::RingMismatch("equation outside the ring"));
        }
        if !e.vanishes_at_origin() {
            return Err(Error::NotVanishing(e.to_string()));
        }
        if e.is_zero() {
            return Err(Error::NotApplicable("zero equation in the defining tuple".into()));
        }
    }
    if equations.is_empty() {
        return Ok(IcisGerm {
            ring: ring.clone(),
            equations,
            dimension: ring.nvars() as u64,
            is_complete_intersection: true,
            has_isolated_singularity: true,
        });
    }
    let ideal = Ideal::new(ring, equations.clone())?;
    let dimension = ideal.krull_dim_leading();
    let is_complete_intersection = dimension == ring.nvars() as u64 - equations.len() as u64;
    let codim = (ring.nvars() as u64 - dimension) as usize;
    let var_names: Vec<&str> = ring.vars().iter().map(|s| s.as_str()).collect();
    let jac = jacobian_matrix(&equations, &var_names)?;
    let has_isolated_singularity = if codim > equations.len() {
        false
    } else {
        let minors = jac.minors(codim)?;
        let mut gens = equations.clone();
        gens.extend(minors);
        let sing = Ideal::new(ring, gens)?;
        matches!(sing.vs_dimension()?, Dim::Finite(_))
    };
    Ok(IcisGerm {
        ring: ring.clone(),
        equations,
        dimension,
        is_complete_intersection,
        has_isolated_singularity,
    })
}

/// Outcome of a Milnor number computation.
#[derive(Debug, Clone)]
pub struct MilnorResult {
    pub mu: u64,
    pub method: MilnorMethod,
    /// Per-step data for the recursive method: for each prefix length m, the
    /// quotient dimension and the Milnor number of the prefix germ.
    pub chain: Vec<MilnorStep>,
    pub seed: u64,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MilnorMethod {
    Hypersurface,
    Recursive,
}

#[derive(Debug, Clone)]
pub struct MilnorStep {
    pub prefix_len: usize,
    pub quotient_dim: u64,
    pub prefix_mu: u64,
}

/// Milnor number of a hypersurface germ: dim of the jacobian quotient.
pub fn milnor_hypersurface(g: &Poly) -> Result<MilnorResult> {
    let ring = g.ring();
    if !ring.is_fully_local() {
        return Err(Error::NonLocalRing("milnor_hypersurface"));
    }
    let partials: Vec<Poly> = (0..ring.nvars()).map(|i| g.differentiate_index(i)).collect();
    let j = Ideal::new(ring, partials)?;
    let mu = j
        .vs_dimension()?
        .expect_finite("jacobian quotient; the singularity is not isolated")?;
    Ok(MilnorResult {
        mu,
        method: MilnorMethod::Hypersurface,
        chain: vec![MilnorStep { prefix_len: 1, quotient_dim: mu, prefix_mu: mu }],
        seed: 0,
    })
}

/// Ideal of maximal minors of the jacobian of the components (the defining
/// equations are appended as extra rows when present).
pub fn ramification_ideal(f: &MapGerm) -> Result<Ideal> {
    let ring = f.source();
    let mut rows: Vec<Poly> = f.components().to_vec();
    rows.extend(f.icis_equations().iter().cloned());
    let var_names: Vec<&str> = ring.vars().iter().map(|s| s.as_str()).collect();
    let jac = jacobian_matrix(&rows, &var_names)?;
    let c = jac.rows.min(jac.cols);
    Ideal::new(ring, jac.minors(c)?)
}

/// Milnor number of a validated complete intersection via the alternating
/// sum of intersection quotients. A random linear mix of the equation tuple
/// stands in for a generic choice of coordinates on the target; finiteness
/// of every intermediate quotient is the operational genericity test, with
/// fresh randomness on failure.
pub fn milnor_icis(x: &IcisGerm, seed: u64, bound: i64, retries: u32) -> Result<MilnorResult> {
    if !x.is_icis() {
        return Err(Error::NotApplicable(
            "the input does not define an isolated complete intersection".into(),
        ));
    }
    let ring = x.ring();
    let k = x.equations().len();
    if k == 0 {
        return Ok(MilnorResult { mu: 0, method: MilnorMethod::Recursive, chain: vec![], seed });
    }
    let n = x.dimension();
    let var_names: Vec<&str> = ring.vars().iter().map(|s| s.as_str()).collect();
    let mut last_err = String::new();
    for attempt in 0..=retries {
        let attempt_seed = seed.wrapping_add(attempt as u64);
        let mut rng = SeededRng::new(attempt_seed);
        let matrix = random_invertible_matrix(&mut rng, k, bound.max(1));
        let mixed = mix_tuple(x.equations(), &matrix)?;

        let mut ok = true;
        let mut chain: Vec<MilnorStep> = Vec::new();
        let mut prev_mu: u64 = 0;
        for m in 1..=k {
            let prefix = &mixed[..m];
            // the prefix must cut a complete intersection of dimension n+k-m
            let prefix_ideal = Ideal::new(ring, prefix.to_vec())?;
            if prefix_ideal.krull_dim_leading() != n + (k - m) as u64 {
                last_err = format!(
                    "prefix of length {} has wrong dimension (seed {})",
                    m, attempt_seed
                );
                ok = false;
                break;
            }
            let jac = jacobian_matrix(prefix, &var_names)?;
            let minors = jac.minors(m)?;
            let mut gens: Vec<Poly> = mixed[..m - 1].to_vec();
            gens.extend(minors);
            let q = Ideal::new(ring, gens)?;
            match q.vs_dimension()? {
                Dim::Finite(d) => {
                    // mu(prefix m) + mu(prefix m-1) = d
                    let Some(mu_m) = d.checked_sub(prev_mu) else {
                        last_err = format!(
                            "negative partial Milnor number at prefix {} (seed {})",
                            m, attempt_seed
                        );
                        ok = false;
                        break;
                    };
                    chain.push(MilnorStep { prefix_len: m, quotient_dim: d, prefix_mu: mu_m });
                    prev_mu = mu_m;
                }
                Dim::Infinite => {
                    last_err = format!(
                        "infinite intersection quotient at prefix {} (seed {})",
                        m, attempt_seed
                    );
                    ok = false;
                    break;
                }
            }
        }
        if ok {
            return Ok(MilnorResult {
                mu: prev_mu,
                method: MilnorMethod::Recursive,
                chain,
                seed: attempt_seed,
            });
        }
    }
    Err(Error::Genericity { tried: retries + 1, detail: last_err })
}

/// Tjurina number of a hypersurface: dim of the quotient by the equation and
/// its partials.
pub fn tjurina_hypersurface(g: &Poly) -> Result<u64> {
    let ring = g.ring();
    if !ring.is_fully_local() {
        return Err(Error::NonLocalRing("tjurina_hypersurface"));
    }
    let mut gens = vec![g.clone()];
    for i in 0..ring.nvars() {
        gens.push(g.differentiate_index(i));
    }
    Ideal::new(ring, gens)?
        .vs_dimension()?
        .expect_finite("tjurina quotient; the singularity is not isolated")
}

/// Tjurina number of a complete intersection: dimension of the quotient of
/// the rank-k free module by the jacobian columns and the equation multiples.
pub fn tjurina_icis(x: &IcisGerm) -> Result<u64> {
    let k = x.equations().len();
    if k == 0 {
        return Ok(0);
    }
    let module = deformation_module(x.ring(), x.equations())?;
    module
        .vs_dimension()?
        .expect_finite("deformation module; the input is not an isolated complete intersection")
}

fn deformation_module(ring: &Ring, equations: &[Poly]) -> Result<Submodule> {
    let k = equations.len();
    let var_names: Vec<&str> = ring.vars().iter().map(|s| s.as_str()).collect();
    let jac = jacobian_matrix(equations, &var_names)?;
    let mut gens: Vec<VecPoly> = Vec::new();
    for col in 0..jac.cols {
        gens.push(VecPoly::new(jac.column(col))?);
    }
    for g in equations {
        for c in 0..k {
            gens.push(VecPoly::scaled_unit(k, c, g.clone()));
        }
    }
    Submodule::new(ring, k, gens)
}

/// Contact codimension of a map germ with smooth source, together with a
/// monomial-vector basis of the normal space (the entries of a miniversal
/// unfolding under contact equivalence).
pub fn contact_codim(f: &MapGerm) -> Result<(u64, Vec<VecPoly>)> {
    if !f.icis_equations().is_empty() {
        return Err(Error::NotApplicable(
            "contact codimension expects a smooth source (no defining equations)".into(),
        ));
    }
    let ring = f.source();
    let p = f.components().len();
    let var_names: Vec<&str> = ring.vars().iter().map(|s| s.as_str()).collect();
    let jac = jacobian_matrix(f.components(), &var_names)?;
    let mut gens: Vec<VecPoly> = Vec::new();
    for col in 0..jac.cols {
        gens.push(VecPoly::new(jac.column(col))?);
    }
    for comp in f.components() {
        for c in 0..p {
            gens.push(VecPoly::scaled_unit(p, c, comp.clone()));
        }
    }
    let module = Submodule::new(ring, p, gens)?;
    let dim = module
        .vs_dimension()?
        .expect_finite("contact tangent quotient; the germ is not finite on its critical set")?;
    let basis = module
        .staircase_basis()?
        .into_iter()
        .map(|(c, exp)| {
            VecPoly::scaled_unit(p, c, Poly::monomial(ring, num_traits::One::one(), exp))
        })
        .collect();
    Ok((dim, basis))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    fn local3() -> Ring {
        Ring::local(&["x", "y", "z"]).unwrap()
    }

    fn polys(r: &Ring, ps: &[&str]) -> Vec<Poly> {
        ps.iter().map(|p| parse_poly(r, p).unwrap()).collect()
    }

    #[test]
    fn validates_the_curve_icis() {
        let r = local3();
        let x = validate_icis(&r, polys(&r, &["x^2 - y^3", "x^3 - z^2"])).unwrap();
        assert_eq!(x.dimension(), 1);
        assert!(x.is_complete_intersection());
        assert!(x.has_isolated_singularity());
        assert!(x.is_icis());
    }

    #[test]
    fn cone_over_conic_is_isolated_but_not_ci() {
        let r = Ring::local(&["x", "y", "z", "w"]).unwrap();
        let x =
            validate_icis(&r, polys(&r, &["x*z - y^2", "y*w - z^2", "x*w - y*z"])).unwrap();
        assert_eq!(x.dimension(), 2);
        assert!(!x.is_complete_intersection());
        assert!(x.has_isolated_singularity());
        assert!(!x.is_icis());
    }

    #[test]
    fn smooth_hypersurface_is_icis() {
        let r = local3();
        let x = validate_icis(&r, polys(&r, &["x"])).unwrap();
        assert_eq!(x.dimension(), 2);
        assert!(x.is_icis());
    }

    #[test]
    fn rejects_nonvanishing_equations() {
        let r = local3();
        assert!(validate_icis(&r, polys(&r, &["x^2 - y^3 + 1"])).is_err());
    }

    #[test]
    fn hypersurface_milnor_numbers() {
        let r = local3();
        assert_eq!(
            milnor_hypersurface(&parse_poly(&r, "x^2 + y^2 + z^2").unwrap()).unwrap().mu,
            1
        );
        assert_eq!(
            milnor_hypersurface(&parse_poly(&r, "x^3 + y^3 - z^2").unwrap()).unwrap().mu,
            4
        );
        let r2 = Ring::local(&["x", "y"]).unwrap();
        assert_eq!(
            milnor_hypersurface(&parse_poly(&r2, "x^2 - y^3").unwrap()).unwrap().mu,
            2
        );
    }

    #[test]
    fn recursive_milnor_reproduces_the_pair_example() {
        let r = local3();
        let x = validate_icis(&r, polys(&r, &["x^2 + y^2 + z^2", "x*y"])).unwrap();
        let m = milnor_icis(&x, 42, 5, 10).unwrap();
        assert_eq!(m.mu, 5);
        assert_eq!(m.chain.len(), 2);
        assert_eq!(m.chain[1].quotient_dim, 6);
        assert_eq!(m.chain[0].prefix_mu, 1);
    }

    #[test]
    fn recursive_milnor_matches_hypersurface_for_one_equation() {
        let r = local3();
        let x = validate_icis(&r, polys(&r, &["x^3 + y^3 - z^2"])).unwrap();
        let m = milnor_icis(&x, 1, 5, 10).unwrap();
        assert_eq!(m.mu, 4);
    }

    #[test]
    fn smooth_germ_has_mu_zero() {
        let r = local3();
        let x = validate_icis(&r, polys(&r, &["x"])).unwrap();
        assert_eq!(milnor_icis(&x, 3, 5, 10).unwrap().mu, 0);
    }

    #[test]
    fn tjurina_hypersurface_values() {
        let r2 = Ring::local(&["x", "y"]).unwrap();
        assert_eq!(tjurina_hypersurface(&parse_poly(&r2, "x^2 - y^3").unwrap()).unwrap(), 2);
        let r = local3();
        assert_eq!(
            tjurina_hypersurface(&parse_poly(&r, "x^2 + y^2 + z^2").unwrap()).unwrap(),
            1
        );
    }

    #[test]
    fn tjurina_icis_reproduces_the_pair_example() {
        let r = local3();
        let x = validate_icis(&r, polys(&r, &["x^2 + y^2 + z^2", "x*y"])).unwrap();
        assert_eq!(tjurina_icis(&x).unwrap(), 5);
    }

    #[test]
    fn tjurina_routes_agree_on_hypersurfaces() {
        let r2 = Ring::local(&["x", "y"]).unwrap();
        let g = parse_poly(&r2, "x^2 - y^3").unwrap();
        let x = validate_icis(&r2, vec![g.clone()]).unwrap();
        assert_eq!(tjurina_icis(&x).unwrap(), tjurina_hypersurface(&g).unwrap());
    }

    #[test]
    fn smooth_germ_has_tau_zero() {
        let r = local3();
        let x = validate_icis(&r, polys(&r, &["x"])).unwrap();
        assert_eq!(tjurina_icis(&x).unwrap(), 0);
    }

    #[test]
    fn contact_codim_equals_tjurina_of_the_fiber() {
        let src = local3();
        let tgt = Ring::local(&["u", "v"]).unwrap();
        let f = MapGerm::new(
            src.clone(),
            tgt,
            polys(&src, &["x^2 + y^2 + z^2", "x*y"]),
            vec![],
        )
        .unwrap();
        let (dim, basis) = contact_codim(&f).unwrap();
        assert_eq!(dim, 5);
        assert_eq!(basis.len(), 5);
    }

    #[test]
    fn contact_codim_of_identity_like_germ_is_zero() {
        let r = Ring::local(&["x"]).unwrap();
        let tgt = Ring::local(&["u"]).unwrap();
        let f = MapGerm::new(r.clone(), tgt, polys(&r, &["x"]), vec![]).unwrap();
        assert_eq!(contact_codim(&f).unwrap().0, 0);
    }

    #[test]
    fn ramification_ideal_examples() {
        let r2 = Ring::local(&["x", "y"]).unwrap();
        let tgt = Ring::local(&["u", "v"]).unwrap();
        let f = MapGerm::new(r2.clone(), tgt, polys(&r2, &["x^2", "y^2"]), vec![]).unwrap();
        let ram = ramification_ideal(&f).unwrap();
        let expect = Ideal::new(&r2, polys(&r2, &["x*y"])).unwrap();
        assert!(ram.equals(&expect).unwrap());

        let r1 = Ring::local(&["x"]).unwrap();
        let t1 = Ring::local(&["u"]).unwrap();
        let id = MapGerm::new(r1.clone(), t1, polys(&r1, &["x"]), vec![]).unwrap();
        let ram = ramification_ideal(&id).unwrap();
        assert!(ram.contains(&Poly::one(&r1)).unwrap());
    }
}
