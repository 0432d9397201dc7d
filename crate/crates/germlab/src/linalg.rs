//! Dense exact rational matrices, the weighted-homogeneity solver, and the
//! seeded integer-matrix sampler used for generic linear changes.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::poly::Poly;

/// Row-major matrix over Q.
#[derive(Debug, Clone)]
pub struct RatMat {
    pub rows: usize,
    pub cols: usize,
    a: Vec<BigRational>,
}

impl RatMat {
    pub fn zero(rows: usize, cols: usize) -> RatMat {
        RatMat { rows, cols, a: vec![BigRational::zero(); rows * cols] }
    }

    pub fn at(&self, i: usize, j: usize) -> &BigRational {
        &self.a[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: BigRational) {
        self.a[i * self.cols + j] = v;
    }

    /// In-place reduced row echelon form; returns the pivot columns.
    pub fn rref(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut row = 0;
        for col in 0..self.cols {
            if row == self.rows {
                break;
            }
            let Some(p) = (row..self.rows).find(|&r| !self.at(r, col).is_zero()) else {
                continue;
            };
            if p != row {
                for j in 0..self.cols {
                    self.a.swap(p * self.cols + j, row * self.cols + j);
                }
            }
            let inv = self.at(row, col).recip();
            for j in col..self.cols {
                let v = self.at(row, j) * &inv;
                self.set(row, j, v);
            }
            for r in 0..self.rows {
                if r != row && !self.at(r, col).is_zero() {
                    let f = self.at(r, col).clone();
                    for j in col..self.cols {
                        let v = self.at(r, j) - &f * self.at(row, j);
                        self.set(r, j, v);
                    }
                }
            }
            pivots.push(col);
            row += 1;
        }
        pivots
    }

    pub fn rank(mut self) -> usize {
        self.rref().len()
    }
}

/// Clear denominators and divide by the gcd, forcing the first nonzero entry
/// positive. Returns the integer vector.
pub fn primitive_integer_vector(v: &[BigRational]) -> Vec<BigInt> {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let mut ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if !g.is_zero() && !g.is_one() {
        for x in &mut ints {
            *x = &*x / &g;
        }
    }
    if let Some(first) = ints.iter().find(|x| !x.is_zero()) {
        if first.is_negative() {
            for x in &mut ints {
                *x = -&*x;
            }
        }
    }
    ints
}

/// Positive integer weights making every monomial of `p` the same weighted
/// degree, when they exist. Weights are normalized to the smallest positive
/// integer tuple produced by the deterministic pivot/free-variable search.
pub fn weighted_homogeneous_weights(p: &Poly) -> Option<(Vec<u64>, u64)> {
    let n = p.ring().nvars();
    let terms = p.terms();
    if terms.is_empty() {
        return None;
    }
    let base = &terms[0].exp;
    if terms.len() == 1 {
        let w = vec![1u64; n];
        let d = Poly::weighted_degree(base, &w);
        return Some((w, d));
    }
    // Difference system: weights orthogonal to exp_t - exp_0 for t > 0.
    let mut m = RatMat::zero(terms.len() - 1, n);
    for (r, t) in terms[1..].iter().enumerate() {
        for j in 0..n {
            let d = BigInt::from(t.exp[j] as i64 - base[j] as i64);
            m.set(r, j, BigRational::from(d));
        }
    }
    let pivots = m.rref();
    let free: Vec<usize> = (0..n).filter(|j| !pivots.contains(j)).collect();
    if free.is_empty() {
        return None; // only the zero solution
    }
    // Try small positive assignments of the free weights; all-ones first.
    let assignments = free_assignments(free.len());
    for assign in assignments {
        let mut w = vec![BigRational::zero(); n];
        for (k, &j) in free.iter().enumerate() {
            w[j] = BigRational::from(BigInt::from(assign[k] as i64));
        }
        for (r, &pc) in pivots.iter().enumerate() {
            // pivot row: w[pc] + sum_{j>pc} m[r][j] w[j] = 0
            let mut acc = BigRational::zero();
            for &j in &free {
                if j > pc {
                    acc += m.at(r, j) * &w[j];
                }
            }
            w[pc] = -acc;
        }
        if w.iter().all(|x| x.is_positive()) {
            let ints = primitive_integer_vector(&w);
            let weights: Vec<u64> = ints
                .iter()
                .map(|x| u64::try_from(x).expect("positive weight"))
                .collect();
            let d = Poly::weighted_degree(base, &weights);
            // Recheck every term; inconsistent pivot rows surface here.
            if terms.iter().all(|t| Poly::weighted_degree(&t.exp, &weights) == d) {
                return Some((weights, d));
            }
        }
    }
    None
}

fn free_assignments(f: usize) -> Vec<Vec<u32>> {
    let mut out = vec![vec![1u32; f]];
    if f <= 3 {
        let bound = 6u32;
        let total = (bound as usize).pow(f as u32);
        for idx in 0..total {
            let mut a = Vec::with_capacity(f);
            let mut rest = idx;
            for _ in 0..f {
                a.push((rest % bound as usize) as u32 + 1);
                rest /= bound as usize;
            }
            if a.iter().all(|&x| x == 1) {
                continue;
            }
            out.push(a);
        }
    }
    out
}

/// Tiny deterministic PRNG (splitmix64). A fixed inline algorithm keeps
/// seeded runs byte-stable across dependency and platform changes.
#[derive(Debug, Clone)]
pub struct SeededRng {
    state: u64,
}

impl SeededRng {
    pub fn new(seed: u64) -> SeededRng {
        SeededRng { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9e3779b97f4a7c15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xbf58476d1ce4e5b9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94d049bb133111eb);
        z ^ (z >> 31)
    }

    /// Uniform in [-bound, bound].
    pub fn int_in(&mut self, bound: i64) -> i64 {
        let span = (2 * bound + 1) as u64;
        (self.next_u64() % span) as i64 - bound
    }
}

pub fn int_matrix_det(m: &[Vec<i64>]) -> BigInt {
    let n = m.len();
    let mut a = RatMat::zero(n, n);
    for i in 0..n {
        for j in 0..n {
            a.set(i, j, BigRational::from(BigInt::from(m[i][j])));
        }
    }
    // Determinant via elimination.
    let mut det = BigRational::one();
    let mut mat = a;
    for col in 0..n {
        let Some(p) = (col..n).find(|&r| !mat.at(r, col).is_zero()) else {
            return BigInt::zero();
        };
        if p != col {
            for j in 0..n {
                let t = mat.at(p, j).clone();
                mat.set(p, j, mat.at(col, j).clone());
                mat.set(col, j, t);
            }
            det = -det;
        }
        det *= mat.at(col, col);
        let inv = mat.at(col, col).recip();
        for r in col + 1..n {
            if !mat.at(r, col).is_zero() {
                let f = mat.at(r, col) * &inv;
                for j in col..n {
                    let v = mat.at(r, j) - &f * mat.at(col, j);
                    mat.set(r, j, v);
                }
            }
        }
    }
    det.to_integer()
}

/// Sample an invertible integer matrix with entries in [-bound, bound],
/// reproducible from the seed. Resamples internally on determinant zero.
pub fn random_invertible_matrix(rng: &mut SeededRng, size: usize, bound: i64) -> Vec<Vec<i64>> {
    assert!(bound >= 1);
    loop {
        let m: Vec<Vec<i64>> = (0..size)
            .map(|_| (0..size).map(|_| rng.int_in(bound)).collect())
            .collect();
        if !int_matrix_det(&m).is_zero() {
            return m;
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;
    use crate::ring::Ring;

    #[test]
    fn weights_of_forced_system() {
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        let g = parse_poly(&r, "x^3 + y^3 - z^2").unwrap();
        let (w, d) = weighted_homogeneous_weights(&g).unwrap();
        assert_eq!(w, vec![2, 2, 3]);
        assert_eq!(d, 6);
    }

    #[test]
    fn weights_underdetermined() {
        let r = Ring::local(&["X", "Y", "Z"]).unwrap();
        let g = parse_poly(&r, "Z^2 - X^2*Y").unwrap();
        let (w, d) = weighted_homogeneous_weights(&g).unwrap();
        // Pivot on X, free Y and Z at 1 solves to (1,2,2), degree 4.
        assert_eq!(Poly::weighted_degree(&[2, 1, 0], &w), d);
        assert_eq!(Poly::weighted_degree(&[0, 0, 2], &w), d);
        assert_eq!(w, vec![1, 2, 2]);
        assert_eq!(d, 4);
    }

    #[test]
    fn not_weighted_homogeneous() {
        let r = Ring::local(&["x"]).unwrap();
        let g = parse_poly(&r, "x^2 + x^3").unwrap();
        assert!(weighted_homogeneous_weights(&g).is_none());
    }

    #[test]
    fn seeded_matrix_is_reproducible() {
        let a = random_invertible_matrix(&mut SeededRng::new(7), 3, 5);
        let b = random_invertible_matrix(&mut SeededRng::new(7), 3, 5);
        assert_eq!(a, b);
        assert!(!int_matrix_det(&a).is_zero());
    }
}
