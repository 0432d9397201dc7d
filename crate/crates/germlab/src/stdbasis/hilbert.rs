//! Samuel functions and multiplicities.
//!
//! For a module M presented as R^rank / <gens> and an ideal q, the Samuel
//! function chi(t) = dim_C M / q^{t+1} M agrees with a polynomial for large
//! t. Its degree is the dimension of M and d! times its leading coefficient
//! is the multiplicity e(q, M).

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::{Dim, Ideal, Submodule};
use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::vecpoly::VecPoly;

#[derive(Debug, Clone)]
pub struct HilbertSamuelData {
    /// (t, length of M / q^{t+1} M) for t = 0..
    pub values: Vec<(usize, u64)>,
    /// Fitted polynomial in t, ascending coefficients.
    pub fitted: Vec<BigRational>,
    /// Index from which the fitted polynomial matches the values.
    pub stable_from: usize,
    /// Degree of the fitted polynomial = dimension of M.
    pub dimension: u64,
    /// d! times the leading coefficient.
    pub multiplicity: u64,
}

/// Number of consecutive equal d-th differences demanded before declaring
/// stabilization.
const WINDOW: usize = 3;

/// Compute the Samuel function of R^rank/<gens> with respect to q for
/// t = 0..t_max, detect polynomial stabilization, and read off dimension and
/// multiplicity. Lengths must be finite for every t (q primary enough for
/// the module), otherwise an error is returned.
pub fn hilbert_samuel(
    rank: usize,
    gens: &[VecPoly],
    q: &Ideal,
    t_max: usize,
) -> Result<HilbertSamuelData> {
    let ring = q.ring();
    for g in gens {
        if g.ring() != ring || g.rank() != rank {
            return Err(Error::RingMismatch("module presentation outside the ring of q"));
        }
    }
    let mut values: Vec<(usize, u64)> = Vec::new();
    let mut q_power: Vec<Poly> = q.gens().to_vec(); // generators of q^{t+1}
    for t in 0..=t_max {
        if t > 0 {
            let mut next = Vec::new();
            for a in &q_power {
                for b in q.gens() {
                    next.push(a.mul(b)?);
                }
            }
            q_power = dedupe(next);
        }
        let mut module_gens: Vec<VecPoly> = gens.to_vec();
        for c in 0..rank {
            if q_power.is_empty() {
                // q = (0): chi(t) = dim M for every t
                continue;
            }
            for w in &q_power {
                module_gens.push(VecPoly::scaled_unit(rank, c, w.clone()));
            }
        }
        let m = Submodule::new(ring, rank, module_gens)?;
        match m.vs_dimension()? {
            Dim::Finite(n) => values.push((t, n)),
            Dim::Infinite => {
                return Err(Error::Infinite(format!(
                    "length of M/q^{}M; q is not primary for the module",
                    t + 1
                )))
            }
        }
        // Early exit once the difference table stabilizes.
        if let Some(data) = try_fit(&values) {
            return Ok(data);
        }
    }
    Err(Error::NoStabilization { t_max })
}

fn dedupe(polys: Vec<Poly>) -> Vec<Poly> {
    let mut out: Vec<Poly> = Vec::new();
    for p in polys {
        if !out.contains(&p) {
            out.push(p);
        }
    }
    out
}

/// Look for the smallest degree d whose d-th finite differences are constant
/// over the last WINDOW entries; fit the polynomial from the tail by Newton's
/// forward formula and verify it against the stable range.
fn try_fit(values: &[(usize, u64)]) -> Option<HilbertSamuelData> {
    let n = values.len();
    let ys: Vec<BigInt> = values.iter().map(|&(_, v)| BigInt::from(v)).collect();
    for d in 0..n {
        // d-th differences
        let mut diff = ys.clone();
        for _ in 0..d {
            diff = diff.windows(2).map(|w| &w[1] - &w[0]).collect();
        }
        if diff.len() < WINDOW {
            return None;
        }
        let tail = &diff[diff.len() - WINDOW..];
        if tail.iter().all(|v| *v == tail[0]) {
            if tail[0].is_negative() {
                continue; // lengths of a module cannot eventually decrease
            }
            let stable_from = values.len() - (WINDOW + d);
            let fitted = newton_fit(values, stable_from, d);
            // verify against everything from the stabilization index on
            let ok = values[stable_from..]
                .iter()
                .all(|&(t, v)| eval(&fitted, t) == BigRational::from(BigInt::from(v)));
            if !ok {
                continue;
            }
            let lead = fitted.last().cloned().unwrap_or_else(BigRational::zero);
            let mult = &lead * factorial(d);
            let multiplicity = mult.to_integer();
            debug_assert!(mult.is_integer());
            return Some(HilbertSamuelData {
                values: values.to_vec(),
                fitted,
                stable_from,
                dimension: d as u64,
                multiplicity: u64::try_from(&multiplicity).unwrap_or(0),
            });
        }
    }
    None
}

fn factorial(d: usize) -> BigRational {
    let mut f = BigInt::one();
    for i in 2..=d {
        f *= BigInt::from(i);
    }
    BigRational::from(f)
}

/// Interpolate the degree-d polynomial through (t_i, y_i) for the d+1 points
/// starting at `from`; coefficients ascending in t.
fn newton_fit(values: &[(usize, u64)], from: usize, d: usize) -> Vec<BigRational> {
    let pts: Vec<(BigRational, BigRational)> = values[from..from + d + 1]
        .iter()
        .map(|&(t, v)| {
            (
                BigRational::from(BigInt::from(t)),
                BigRational::from(BigInt::from(v)),
            )
        })
        .collect();
    // Lagrange into monomial coefficients; degrees here are tiny.
    let mut coeffs = vec![BigRational::zero(); d + 1];
    for (i, (xi, yi)) in pts.iter().enumerate() {
        // basis polynomial prod_{j != i} (t - x_j)/(x_i - x_j)
        let mut basis = vec![BigRational::one()];
        let mut denom = BigRational::one();
        for (j, (xj, _)) in pts.iter().enumerate() {
            if i == j {
                continue;
            }
            // multiply basis by (t - xj)
            let mut next = vec![BigRational::zero(); basis.len() + 1];
            for (k, c) in basis.iter().enumerate() {
                next[k + 1] += c;
                next[k] -= c * xj;
            }
            basis = next;
            denom *= xi - xj;
        }
        let scale = yi / &denom;
        for (k, c) in basis.iter().enumerate() {
            coeffs[k] += c * &scale;
        }
    }
    while coeffs.len() > 1 && coeffs.last().map(|c| c.is_zero()).unwrap_or(false) {
        coeffs.pop();
    }
    coeffs
}

fn eval(coeffs: &[BigRational], t: usize) -> BigRational {
    let x = BigRational::from(BigInt::from(t));
    let mut acc = BigRational::zero();
    for c in coeffs.iter().rev() {
        acc = acc * &x + c;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::Ring;

    #[test]
    fn line_with_slope_two() {
        // M = O_1, q = (x^2): chi(t) = 2t + 2
        let r = Ring::local(&["x"]).unwrap();
        let q = Ideal::new(&r, vec![parse_poly(&r, "x^2").unwrap()]).unwrap();
        let h = hilbert_samuel(1, &[], &q, 12).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(h.multiplicity, 2);
        assert!(h.values.iter().all(|&(t, v)| v == 2 * t as u64 + 2));
    }

    #[test]
    fn maximal_ideal_of_a_line() {
        let r = Ring::local(&["x"]).unwrap();
        let q = Ideal::new(&r, vec![parse_poly(&r, "x").unwrap()]).unwrap();
        let h = hilbert_samuel(1, &[], &q, 12).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(h.multiplicity, 1);
    }

    #[test]
    fn cusp_multiplicity_is_two() {
        // M = O_2/(x^2 - y^3), q = (x, y)
        let r = Ring::local(&["x", "y"]).unwrap();
        let q = Ideal::new(
            &r,
            vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "y").unwrap()],
        )
        .unwrap();
        let m = vec![VecPoly::scaled_unit(1, 0, parse_poly(&r, "x^2 - y^3").unwrap())];
        let h = hilbert_samuel(1, &m, &q, 12).unwrap();
        assert_eq!(h.dimension, 1);
        assert_eq!(h.multiplicity, 2);
    }

    #[test]
    fn multiplicity_ignores_generator_presentation() {
        let r = Ring::local(&["x", "y"]).unwrap();
        let m = vec![VecPoly::scaled_unit(1, 0, parse_poly(&r, "x^2 - y^3").unwrap())];
        let q1 = Ideal::new(
            &r,
            vec![parse_poly(&r, "x").unwrap(), parse_poly(&r, "y").unwrap()],
        )
        .unwrap();
        let q2 = Ideal::new(
            &r,
            vec![
                parse_poly(&r, "x + y").unwrap(),
                parse_poly(&r, "x").unwrap(),
                parse_poly(&r, "y").unwrap(),
            ],
        )
        .unwrap();
        let h1 = hilbert_samuel(1, &m, &q1, 12).unwrap();
        let h2 = hilbert_samuel(1, &m, &q2, 12).unwrap();
        assert_eq!(h1.multiplicity, h2.multiplicity);
        assert_eq!(h1.dimension, h2.dimension);
    }

    #[test]
    fn non_primary_ideal_errors() {
        let r = Ring::local(&["x", "y"]).unwrap();
        let q = Ideal::new(&r, vec![parse_poly(&r, "x").unwrap()]).unwrap();
        assert!(hilbert_samuel(1, &[], &q, 6).is_err());
    }

    #[test]
    fn zero_dimensional_module_has_constant_function() {
        let r = Ring::local(&["x"]).unwrap();
        let q = Ideal::new(&r, vec![parse_poly(&r, "x").unwrap()]).unwrap();
        let m = vec![VecPoly::scaled_unit(1, 0, parse_poly(&r, "x^3").unwrap())];
        let h = hilbert_samuel(1, &m, &q, 12).unwrap();
        assert_eq!(h.dimension, 0);
        assert_eq!(h.multiplicity, 3);
    }
}
