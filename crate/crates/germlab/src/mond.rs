//! The image-hypersurface pipeline for a germ on an isolated complete
//! intersection: the reduced image equation of the associated finite map
//! with smooth source, the conductor via determinantal division, the first
//! Fitting ideal, the Jacobian module of the image, its torsion part, the
//! codimension bookkeeping, and the Samuel-multiplicity certificate that
//! promotes the module dimension to the image Milnor number.

use crate::error::{Error, Result};
use crate::germ::MapGerm;
use crate::invariants::IcisGerm;
use crate::linalg::weighted_homogeneous_weights;
use crate::matrix::jacobian_matrix;
use crate::poly::Poly;
use crate::ring::Ring;
use crate::stdbasis::{
    hilbert_samuel, map_preimage, subquotient_dim, subquotient_presentation, Dim,
    HilbertSamuelData, Ideal,
};

/// One problem instance: a source germ X of dimension n cut by k equations,
/// a map f from X into n+1 variables, and the associated finite extension
/// into n+1+k variables whose last k components are the equations of X.
#[derive(Debug, Clone)]
pub struct MondProblem {
    x: IcisGerm,
    f: MapGerm,
    fhat: MapGerm,
    n: u64,
    k: usize,
}

impl MondProblem {
    /// Assemble a problem. The target of `f` must have `dimension(X) + 1`
    /// variables; the extension map must be finite (finite fiber over 0).
    pub fn new(x: IcisGerm, f: MapGerm) -> Result<MondProblem> {
        if !x.is_icis() {
            return Err(Error::NotApplicable(
                "the source is not an isolated complete intersection".into(),
            ));
        }
        if f.source() != x.ring() {
            return Err(Error::RingMismatch("map source differs from the germ ring"));
        }
        if f.icis_equations() != x.equations() {
            return Err(Error::RingMismatch("map carries different source equations"));
        }
        let n = x.dimension();
        let k = x.equations().len();
        let p = f.components().len();
        if p as u64 != n + 1 {
            return Err(Error::Arity(format!(
                "the pipeline needs a map into {} variables (dimension + 1), got {}",
                n + 1,
                p
            )));
        }
        // extended target: fresh local variables behind the original ones
        let mut names: Vec<String> = f.target().vars().to_vec();
        let mut fresh = Vec::new();
        let mut idx = 1;
        while fresh.len() < k {
            let cand = format!("w{}", idx);
            idx += 1;
            if !names.contains(&cand) && x.ring().var_index(&cand).is_err() {
                fresh.push(cand);
            }
        }
        names.extend(fresh.iter().cloned());
        let refs: Vec<&str> = names.iter().map(|s| s.as_str()).collect();
        let target_hat = Ring::local(&refs)?;
        let mut comps = f.components().to_vec();
        comps.extend(x.equations().iter().cloned());
        let fhat = MapGerm::new(x.ring().clone(), target_hat, comps, vec![])?;

        // finiteness gate: the fiber of the extension over 0 is finite
        let fiber = Ideal::new(x.ring(), fhat.components().to_vec())?;
        if fiber.vs_dimension()? == Dim::Infinite {
            return Err(Error::NotApplicable(
                "the extension map is not finite: its fiber over 0 has positive dimension"
                    .into(),
            ));
        }
        Ok(MondProblem { x, f, fhat, n, k })
    }

    pub fn source_germ(&self) -> &IcisGerm {
        &self.x
    }

    pub fn map(&self) -> &MapGerm {
        &self.f
    }

    /// The finite extension into n+1+k variables (smooth source).
    pub fn extension(&self) -> &MapGerm {
        &self.fhat
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn k(&self) -> usize {
        self.k
    }

    /// Indices of the k trailing target variables of the extension.
    fn trailing_target_vars(&self) -> Vec<usize> {
        let m = self.fhat.target().nvars();
        (m - self.k..m).collect()
    }
}

/// Reduced image equation of the extension map, and its restriction to the
/// original target (the image equation of f itself).
pub fn image_equation(p: &MondProblem) -> Result<(Poly, Poly)> {
    let ghat = kernel_generator(&p.fhat)?;
    let g_hat_restricted = ghat.set_zero(&p.trailing_target_vars());
    if g_hat_restricted.is_zero() {
        return Err(Error::NotApplicable(
            "the image is not a hypersurface through the origin".into(),
        ));
    }
    let g = g_hat_restricted.map_by_names(p.f.target())?;
    Ok((g, ghat))
}

/// Single monic generator of the kernel of the pullback map of a finite germ
/// with smooth source. Computed with a global kept block, where the minimal
/// basis element of a principal ideal is the smallest-degree generator; the
/// kernel of an exact polynomial composition is unaffected by the switch.
pub fn kernel_generator(f: &MapGerm) -> Result<Poly> {
    let ker = crate::stdbasis::map_kernel(f)?;
    let basis = ker.std_basis();
    match basis.len() {
        1 => Ok(basis[0].monic()),
        other => Err(Error::KernelNotPrincipal(other)),
    }
}

/// The conductor element: divide the pullback of a partial of the image
/// equation by the complementary jacobian minor. The quotient is the same
/// for every index by uniqueness, which the second index cross-checks.
pub fn conductor_lambda(p: &MondProblem, ghat: &Poly) -> Result<Poly> {
    let fhat = &p.fhat;
    let tgt = fhat.target();
    if ghat.ring() != tgt {
        return Err(Error::RingMismatch("image equation outside the extension target"));
    }
    let src_names: Vec<&str> = fhat.source().vars().iter().map(|s| s.as_str()).collect();
    let jac = jacobian_matrix(fhat.components(), &src_names)?;
    let mut lambdas: Vec<Poly> = Vec::new();
    for row in 0..jac.rows {
        let minor = jac.without_row(row).det()?;
        if minor.is_zero() {
            continue;
        }
        let partial = ghat.differentiate_index(row);
        let pulled = fhat.pullback(&partial)?;
        // 1-based sign
        let signed_minor = if (row + 1) % 2 == 1 { minor.neg() } else { minor };
        let lambda = pulled.exact_divide(&signed_minor)?.ok_or_else(|| {
            Error::Internal(format!(
                "conductor division failed at index {}: the pulled-back partial is not a \
                 polynomial multiple of the jacobian minor",
                row + 1
            ))
        })?;
        lambdas.push(lambda);
        if lambdas.len() == 2 {
            break;
        }
    }
    match lambdas.as_slice() {
        [] => Err(Error::NotApplicable(
            "all complementary jacobian minors vanish; the map is degenerate".into(),
        )),
        [a] => Ok(a.clone()),
        [a, b] => {
            if a != b {
                return Err(Error::Internal(format!(
                    "conductor element differs between minor indices: `{}` vs `{}`",
                    a, b
                )));
            }
            Ok(a.clone())
        }
        _ => unreachable!(),
    }
}

/// First Fitting ideal of the image: preimage of the conductor, with a
/// dimension sanity check that reports a warning string when it fails.
pub fn fitting_first(p: &MondProblem, lambda: &Poly) -> Result<(Ideal, Option<String>)> {
    let cond = Ideal::new(p.fhat.source(), vec![lambda.clone()])?;
    let fit = map_preimage(&p.fhat, &cond)?;
    let expected = p.n + p.k as u64;
    let krull = fit.krull_dim_leading();
    let warning = if krull + 1 != expected {
        Some(format!(
            "first Fitting ideal has quotient dimension {} where {} was expected",
            krull,
            expected - 1
        ))
    } else {
        None
    };
    Ok((fit, warning))
}

/// The Jacobian module data of an instance: its dimension plus the two
/// specialized ideals P (preimage of the pulled-back full jacobian ideal)
/// and J (partials with respect to the untrailed target variables).
#[derive(Debug, Clone)]
pub struct JacobianModule {
    pub dim: u64,
    pub preimage_specialized: Ideal,
    pub jacobian_specialized: Ideal,
}

/// Dimension of the Jacobian module of the image, computed with a caller
/// supplied image equation of the extension (tests use this to check unit
/// invariance).
pub fn jacobian_module_with(p: &MondProblem, ghat: &Poly) -> Result<JacobianModule> {
    let fhat = &p.fhat;
    let tgt_hat = fhat.target();
    // pullback of the full jacobian ideal into the smooth source
    let mut pulled = Vec::new();
    for i in 0..tgt_hat.nvars() {
        pulled.push(fhat.pullback(&ghat.differentiate_index(i))?);
    }
    let src_ideal = Ideal::new(fhat.source(), pulled)?;
    let preimage = map_preimage(fhat, &src_ideal)?;
    // partials with respect to the original target variables only
    let denom: Vec<Poly> = (0..(p.n + 1) as usize)
        .map(|i| ghat.differentiate_index(i))
        .collect();
    // specialize: trailing target variables to zero, then into the original
    // target ring
    let trail = p.trailing_target_vars();
    let f_target = p.f.target();
    let spec = |q: &Poly| -> Result<Option<Poly>> {
        let s = q.set_zero(&trail);
        if s.is_zero() {
            Ok(None)
        } else {
            Ok(Some(s.map_by_names(f_target)?))
        }
    };
    let mut p0 = Vec::new();
    for q in preimage.gens() {
        if let Some(s) = spec(q)? {
            p0.push(s);
        }
    }
    let mut j0 = Vec::new();
    for q in &denom {
        if let Some(s) = spec(q)? {
            j0.push(s);
        }
    }
    let p_ideal = Ideal::new(f_target, p0)?;
    let j_ideal = Ideal::new(f_target, j0)?;
    for g in j_ideal.gens() {
        if !p_ideal.contains(g)? {
            return Err(Error::Internal(format!(
                "specialized jacobian generator `{}` escapes the specialized preimage ideal",
                g
            )));
        }
    }
    let dim = subquotient_dim(&p_ideal, &j_ideal)?
        .expect_finite("Jacobian module of the image; the map is not finitely deformable")?;
    Ok(JacobianModule { dim, preimage_specialized: p_ideal, jacobian_specialized: j_ideal })
}

/// As `jacobian_module_with`, computing the image equation first.
pub fn jacobian_module(p: &MondProblem) -> Result<(JacobianModule, Poly, Poly)> {
    let (g, ghat) = image_equation(p)?;
    let m = jacobian_module_with(p, &ghat)?;
    Ok((m, g, ghat))
}

/// Image-module dimension of a finite germ with smooth source, using the
/// full jacobian ideal on both sides. Zero together with membership of the
/// equation in its jacobian ideal characterizes stability.
pub fn smooth_image_module_dim(f: &MapGerm, g: &Poly) -> Result<Dim> {
    let tgt = f.target();
    if g.ring() != tgt {
        return Err(Error::RingMismatch("image equation outside the target ring"));
    }
    let mut pulled = Vec::new();
    for i in 0..tgt.nvars() {
        pulled.push(f.pullback(&g.differentiate_index(i))?);
    }
    let src_ideal = Ideal::new(f.source(), pulled)?;
    let preimage = map_preimage(f, &src_ideal)?;
    let jac: Vec<Poly> = (0..tgt.nvars()).map(|i| g.differentiate_index(i)).collect();
    let j_ideal = Ideal::new(tgt, jac)?;
    for gen in j_ideal.gens() {
        if !preimage.contains(gen)? {
            return Err(Error::Internal(
                "jacobian ideal escapes its own preimage ideal".into(),
            ));
        }
    }
    subquotient_dim(&preimage, &j_ideal)
}

/// Torsion dimension of the image equation: dim of ((g) + J(g))/J(g),
/// reported through the colon ideal (J(g) : g). Weighted homogeneous
/// equations short-circuit to zero by the Euler relation.
pub fn torsion_dim(g: &Poly) -> Result<u64> {
    if g.is_zero() {
        return Err(Error::NotApplicable("torsion of the zero equation".into()));
    }
    if weighted_homogeneous_weights(g).is_some() {
        return Ok(0);
    }
    let ring = g.ring();
    let jac: Vec<Poly> = (0..ring.nvars()).map(|i| g.differentiate_index(i)).collect();
    let j = Ideal::new(ring, jac)?;
    let colon = j.colon(g)?;
    colon
        .vs_dimension()?
        .expect_finite("torsion quotient of the image equation")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Verdict {
    Equality,
    StrictInequality,
    NotApplicable,
}

impl std::fmt::Display for Verdict {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Verdict::Equality => write!(f, "equality"),
            Verdict::StrictInequality => write!(f, "strict-inequality"),
            Verdict::NotApplicable => write!(f, "not-applicable"),
        }
    }
}

#[derive(Debug, Clone)]
pub struct CmCertificate {
    pub multiplicity: u64,
    pub dim_mg: u64,
    pub passes: bool,
}

/// Full report for one instance.
#[derive(Debug, Clone)]
pub struct MondReport {
    pub n: u64,
    pub k: usize,
    pub g: Poly,
    pub ghat: Poly,
    pub dim_mg: u64,
    pub dim_kg: u64,
    pub codim_ae: u64,
    pub mu_image: Option<u64>,
    pub weighted_homogeneous: bool,
    pub weights: Option<(Vec<u64>, u64)>,
    pub cm_certificate: Option<CmCertificate>,
    pub verdict: Verdict,
    pub warnings: Vec<String>,
}

/// Assemble the full report: image equation, module dimension, torsion,
/// codimension, the image Milnor number when the dimension is two, and the
/// verdict for the instance.
pub fn mond_report(p: &MondProblem, germ_faithful: bool) -> Result<MondReport> {
    let mut warnings = Vec::new();
    if !germ_faithful {
        let mut all_wh = true;
        for q in p.f.components().iter().chain(p.x.equations()) {
            if weighted_homogeneous_weights(q).is_none() {
                all_wh = false;
                break;
            }
        }
        if !all_wh {
            warnings.push(
                "input is not quasi-homogeneous and germ-faithfulness was not asserted: \
                 the polynomial image computation may differ from the analytic germ"
                    .to_string(),
            );
        }
    }
    let (g, ghat) = image_equation(p)?;
    let module = jacobian_module_with(p, &ghat)?;
    let dim_mg = module.dim;
    let dim_kg = torsion_dim(&g)?;
    let codim_ae = dim_mg.checked_sub(dim_kg).ok_or_else(|| {
        Error::Internal("torsion dimension exceeds the module dimension".into())
    })?;
    let weights = weighted_homogeneous_weights(&g);
    let weighted_homogeneous = weights.is_some();
    let (mu_image, verdict) = match p.n {
        2 => {
            let v = if dim_kg == 0 { Verdict::Equality } else { Verdict::StrictInequality };
            (Some(dim_mg), v)
        }
        1 => {
            warnings.push(
                "source dimension 1: the codimension identity needs dimension at least 2, \
                 so the image Milnor number is withheld"
                    .to_string(),
            );
            (None, Verdict::NotApplicable)
        }
        _ => {
            warnings.push(
                "source dimension exceeds 2: the module dimension equals the image Milnor \
                 number only under a Cohen-Macaulay certificate (run the multiplicity check)"
                    .to_string(),
            );
            (None, Verdict::NotApplicable)
        }
    };
    Ok(MondReport {
        n: p.n,
        k: p.k,
        g,
        ghat,
        dim_mg,
        dim_kg,
        codim_ae,
        mu_image,
        weighted_homogeneous,
        weights,
        cm_certificate: None,
        verdict,
        warnings,
    })
}

/// Report plus the r = 0 multiplicity certificate when the extension map
/// happens to be stable. A passing certificate promotes the module dimension
/// to the image Milnor number independently of the source dimension; a
/// failed attempt is demoted to a warning.
pub fn mond_report_with_certificate(
    p: &MondProblem,
    germ_faithful: bool,
    t_max: usize,
) -> Result<MondReport> {
    let mut rep = mond_report(p, germ_faithful)?;
    match relative_multiplicity(p, &[], t_max) {
        Ok(rel) => {
            rep.cm_certificate = Some(CmCertificate {
                multiplicity: rel.multiplicity,
                dim_mg: rel.dim_mg,
                passes: rel.cm_pass,
            });
            if rel.cm_pass && rep.mu_image.is_none() {
                rep.mu_image = Some(rel.multiplicity);
                rep.verdict = if rep.dim_kg == 0 {
                    Verdict::Equality
                } else {
                    Verdict::StrictInequality
                };
            }
        }
        Err(e) => {
            rep.warnings.push(format!("multiplicity certificate unavailable: {}", e));
        }
    }
    Ok(rep)
}

/// Outcome of the relative-module multiplicity computation.
#[derive(Debug, Clone)]
pub struct RelativeMultiplicity {
    pub multiplicity: u64,
    pub cm_pass: bool,
    pub dim_mg: u64,
    pub hilbert: HilbertSamuelData,
}

/// Samuel multiplicity of the relative Jacobian module of a stable unfolding
/// of the extension map, compared against the module dimension. Equality
/// certifies the module Cohen-Macaulay and promotes the module dimension to
/// the image Milnor number regardless of the source dimension.
///
/// `unfolding` lists r deformation directions, each one polynomial per
/// component of the extension map; the default r = 0 requires the extension
/// itself to be stable.
pub fn relative_multiplicity(
    p: &MondProblem,
    unfolding: &[Vec<Poly>],
    t_max: usize,
) -> Result<RelativeMultiplicity> {
    let fhat = &p.fhat;
    let r = unfolding.len();
    let (big_f, big_g) = if r == 0 {
        (fhat.clone(), kernel_generator(fhat)?)
    } else {
        let f = build_unfolding(fhat, unfolding)?;
        let g = kernel_generator(&f)?;
        (f, g)
    };

    // stability gate: vanishing image module plus equation inside its
    // jacobian ideal
    let tgt = big_f.target();
    let jac_full: Vec<Poly> = (0..tgt.nvars()).map(|i| big_g.differentiate_index(i)).collect();
    let j_full = Ideal::new(tgt, jac_full)?;
    if !j_full.contains(&big_g)? {
        return Err(Error::NotApplicable(
            "no stable weighted-homogeneous unfolding available: the unfolded image \
             equation does not lie in its jacobian ideal"
                .into(),
        ));
    }
    match smooth_image_module_dim(&big_f, &big_g)? {
        Dim::Finite(0) => {}
        _ => {
            return Err(Error::NotApplicable(
                "the chosen unfolding is not stable (its image module does not vanish)"
                    .into(),
            ))
        }
    }

    // the relative module: full jacobian ideal over the partials in the
    // original target directions, presented over the parameter variables
    let y_count = (p.n + 1) as usize;
    let j_y: Vec<Poly> = (0..y_count).map(|i| big_g.differentiate_index(i)).collect();
    let j_y_ideal = Ideal::new(tgt, j_y)?;
    let presentation = subquotient_presentation(&j_full, &j_y_ideal)?;
    let param_count = p.k + r;
    let mut q_gens = Vec::new();
    for i in tgt.nvars() - param_count..tgt.nvars() {
        q_gens.push(Poly::var(tgt, tgt.var_name(i))?);
    }
    let q = Ideal::new(tgt, q_gens)?;
    let hilbert = hilbert_samuel(
        presentation.rank(),
        presentation.gens(),
        &q,
        t_max,
    )?;
    // multiplicity normalized at the parameter count: lower-dimensional
    // modules get multiplicity zero at that degree
    let multiplicity = if hilbert.dimension == param_count as u64 {
        hilbert.multiplicity
    } else {
        0
    };
    let dim_mg = jacobian_module_with(p, &kernel_generator(fhat)?)?.dim;
    let cm_pass = multiplicity == dim_mg;
    Ok(RelativeMultiplicity { multiplicity, cm_pass, dim_mg, hilbert })
}

/// Extend the source and target of `fhat` by r parameter variables and add
/// the deformation directions: components become f_j + sum_i u_i b_{i,j},
/// followed by the parameters themselves.
fn build_unfolding(fhat: &MapGerm, unfolding: &[Vec<Poly>]) -> Result<MapGerm> {
    let r = unfolding.len();
    let m = fhat.components().len();
    for b in unfolding {
        if b.len() != m {
            return Err(Error::Arity(format!(
                "each unfolding direction needs {} entries, got {}",
                m,
                b.len()
            )));
        }
        for q in b {
            if q.ring() != fhat.source() {
                return Err(Error::RingMismatch("unfolding direction outside the source ring"));
            }
        }
    }
    let mut src_names: Vec<String> = fhat.source().vars().to_vec();
    let mut tgt_names: Vec<String> = fhat.target().vars().to_vec();
    let mut src_params = Vec::new();
    let mut tgt_params = Vec::new();
    let mut idx = 1;
    while src_params.len() < r {
        let u = format!("u{}", idx);
        let cap = format!("U{}", idx);
        idx += 1;
        if !src_names.contains(&u)
            && !tgt_names.contains(&u)
            && !src_names.contains(&cap)
            && !tgt_names.contains(&cap)
        {
            src_params.push(u);
            tgt_params.push(cap);
        }
    }
    src_names.extend(src_params.iter().cloned());
    tgt_names.extend(tgt_params.iter().cloned());
    let src_refs: Vec<&str> = src_names.iter().map(|s| s.as_str()).collect();
    let tgt_refs: Vec<&str> = tgt_names.iter().map(|s| s.as_str()).collect();
    let src = Ring::local(&src_refs)?;
    let tgt = Ring::local(&tgt_refs)?;

    let mut comps = Vec::with_capacity(m + r);
    for j in 0..m {
        let mut c = fhat.components()[j].map_by_names(&src)?;
        for (i, b) in unfolding.iter().enumerate() {
            let u = Poly::var(&src, &src_params[i])?;
            c = c.add(&u.mul(&b[j].map_by_names(&src)?)?)?;
        }
        comps.push(c);
    }
    for u in &src_params {
        comps.push(Poly::var(&src, u)?);
    }
    MapGerm::new(src, tgt, comps, vec![])
}

/// Multiply an equation by the unit 1 + (first variable); the module and
/// torsion dimensions must not change. Test support.
pub fn unit_tweak(g: &Poly) -> Poly {
    let ring = g.ring();
    let x0 = Poly::var(ring, ring.var_name(0)).expect("ring has a variable");
    let unit = Poly::one(ring).add(&x0).expect("same ring");
    unit.mul(g).expect("same ring")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::invariants::validate_icis;
    use crate::parse::parse_poly;

    fn smooth_problem(src_vars: &[&str], tgt_vars: &[&str], comps: &[&str]) -> MondProblem {
        let src = Ring::local(src_vars).unwrap();
        let tgt = Ring::local(tgt_vars).unwrap();
        let x = validate_icis(&src, vec![]).unwrap();
        let c = comps.iter().map(|p| parse_poly(&src, p).unwrap()).collect();
        let f = MapGerm::new(src, tgt, c, vec![]).unwrap();
        MondProblem::new(x, f).unwrap()
    }

    fn cross_cap() -> MondProblem {
        smooth_problem(&["x", "y"], &["X", "Y", "Z"], &["x", "y^2", "x*y"])
    }

    #[test]
    fn cross_cap_image_equation() {
        let p = cross_cap();
        let (g, ghat) = image_equation(&p).unwrap();
        let tgt = p.map().target();
        assert_eq!(g, parse_poly(tgt, "Z^2 - X^2*Y").unwrap());
        assert_eq!(g, ghat.map_by_names(tgt).unwrap());
    }

    #[test]
    fn s1_image_equation() {
        let p = smooth_problem(&["x", "y"], &["X", "Y", "Z"], &["x", "y^2", "y^3 + x^2*y"]);
        let (g, _) = image_equation(&p).unwrap();
        let tgt = p.map().target();
        let expect = parse_poly(tgt, "Z^2 - Y^3 - 2*X^2*Y^2 - X^4*Y").unwrap();
        assert_eq!(g.monic(), expect.monic());
    }

    #[test]
    fn cusp_image_equation() {
        let p = smooth_problem(&["x"], &["X", "Y"], &["x^2", "x^3"]);
        let (g, _) = image_equation(&p).unwrap();
        let tgt = p.map().target();
        let expect = parse_poly(tgt, "X^3 - Y^2").unwrap();
        assert_eq!(g.monic(), expect.monic());
    }

    #[test]
    fn cross_cap_conductor_and_fitting() {
        let p = cross_cap();
        let (_, ghat) = image_equation(&p).unwrap();
        let lambda = conductor_lambda(&p, &ghat).unwrap();
        let src = p.map().source();
        let x = parse_poly(src, "x").unwrap();
        assert!(lambda == x || lambda == x.neg(), "lambda = {}", lambda);
        let (fit, warn) = fitting_first(&p, &lambda).unwrap();
        assert!(warn.is_none());
        let tgt = p.extension().target();
        let expect = Ideal::new(
            tgt,
            vec![parse_poly(tgt, "X").unwrap(), parse_poly(tgt, "Z").unwrap()],
        )
        .unwrap();
        assert!(fit.equals(&expect).unwrap());
    }

    #[test]
    fn immersion_conductor_is_a_unit() {
        let p = smooth_problem(&["x", "y"], &["X", "Y", "Z"], &["x", "y", "0"]);
        let (_, ghat) = image_equation(&p).unwrap();
        let lambda = conductor_lambda(&p, &ghat).unwrap();
        assert!(lambda.is_unit_at_origin());
        let (fit, _) = fitting_first(&p, &lambda).unwrap();
        assert!(fit.contains(&Poly::one(p.extension().target())).unwrap());
    }

    #[test]
    fn cross_cap_module_vanishes() {
        let p = cross_cap();
        let (m, g, _) = jacobian_module(&p).unwrap();
        assert_eq!(m.dim, 0);
        assert_eq!(torsion_dim(&g).unwrap(), 0);
    }

    #[test]
    fn s1_module_dimension_is_one() {
        let p = smooth_problem(&["x", "y"], &["X", "Y", "Z"], &["x", "y^2", "y^3 + x^2*y"]);
        let (m, g, _) = jacobian_module(&p).unwrap();
        assert_eq!(m.dim, 1);
        assert_eq!(torsion_dim(&g).unwrap(), 0);
    }

    #[test]
    fn cross_cap_report() {
        let p = cross_cap();
        let rep = mond_report(&p, false).unwrap();
        assert_eq!(rep.dim_mg, 0);
        assert_eq!(rep.codim_ae, 0);
        assert_eq!(rep.mu_image, Some(0));
        assert_eq!(rep.verdict, Verdict::Equality);
    }

    #[test]
    fn cusp_report_is_not_applicable() {
        let p = smooth_problem(&["x"], &["X", "Y"], &["x^2", "x^3"]);
        let rep = mond_report(&p, false).unwrap();
        assert_eq!(rep.n, 1);
        assert_eq!(rep.mu_image, None);
        assert_eq!(rep.verdict, Verdict::NotApplicable);
        assert!(!rep.warnings.is_empty());
    }

    #[test]
    fn cross_cap_relative_multiplicity() {
        let p = cross_cap();
        let rel = relative_multiplicity(&p, &[], 12).unwrap();
        assert_eq!(rel.multiplicity, 0);
        assert!(rel.cm_pass);
    }

    #[test]
    fn unit_invariance_of_module_dimensions() {
        let p = smooth_problem(&["x", "y"], &["X", "Y", "Z"], &["x", "y^2", "y^3 + x^2*y"]);
        let (_, ghat) = image_equation(&p).unwrap();
        let tweaked = unit_tweak(&ghat);
        let a = jacobian_module_with(&p, &ghat).unwrap();
        let b = jacobian_module_with(&p, &tweaked).unwrap();
        assert_eq!(a.dim, b.dim);
    }
}
