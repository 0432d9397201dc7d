//! Polynomial matrices: jacobians, determinants, minors, and invertible
//! linear coordinate changes.

use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::linalg::{random_invertible_matrix, SeededRng};
use crate::poly::Poly;
use crate::ring::Ring;

#[derive(Debug, Clone)]
pub struct PolyMatrix {
    ring: Ring,
    pub rows: usize,
    pub cols: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    pub fn new(ring: &Ring, rows: usize, cols: usize, entries: Vec<Poly>) -> PolyMatrix {
        assert_eq!(entries.len(), rows * cols);
        PolyMatrix { ring: ring.clone(), rows, cols, entries }
    }

    pub fn at(&self, i: usize, j: usize) -> &Poly {
        &self.entries[i * self.cols + j]
    }

    pub fn ring(&self) -> &Ring {
        &self.ring
    }

    /// Column `j` as a vector of polynomials.
    pub fn column(&self, j: usize) -> Vec<Poly> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn det(&self) -> Result<Poly> {
        if self.rows != self.cols {
            return Err(Error::Arity("determinant of a non-square matrix".into()));
        }
        Ok(self.det_on(&(0..self.rows).collect::<Vec<_>>(), &(0..self.cols).collect::<Vec<_>>()))
    }

    /// Cofactor expansion along the first selected row.
    fn det_on(&self, rows: &[usize], cols: &[usize]) -> Poly {
        let n = rows.len();
        if n == 0 {
            return Poly::one(&self.ring);
        }
        if n == 1 {
            return self.at(rows[0], cols[0]).clone();
        }
        let mut acc = Poly::zero(&self.ring);
        let sub_rows = &rows[1..];
        for (k, &c) in cols.iter().enumerate() {
            let e = self.at(rows[0], c);
            if e.is_zero() {
                continue;
            }
            let rest: Vec<usize> =
                cols.iter().copied().filter(|&cc| cc != c).collect();
            let minor = self.det_on(sub_rows, &rest);
            let signed = if k % 2 == 0 { e.mul(&minor) } else { e.mul(&minor).map(|p| p.neg()) };
            acc = acc.add(&signed.expect("same ring")).expect("same ring");
        }
        acc
    }

    /// All `c x c` minors, as plain determinants of the selected rows and
    /// columns, ordered by lexicographic (row subset, column subset).
    pub fn minors(&self, c: usize) -> Result<Vec<Poly>> {
        if c > self.rows || c > self.cols {
            return Err(Error::Arity(format!(
                "{0}x{0} minors of a {1}x{2} matrix",
                c, self.rows, self.cols
            )));
        }
        let row_sets = subsets(self.rows, c);
        let col_sets = subsets(self.cols, c);
        let mut out = Vec::with_capacity(row_sets.len() * col_sets.len());
        for rs in &row_sets {
            for cs in &col_sets {
                out.push(self.det_on(rs, cs));
            }
        }
        Ok(out)
    }

    /// Matrix with one row removed.
    pub fn without_row(&self, row: usize) -> PolyMatrix {
        let mut entries = Vec::with_capacity((self.rows - 1) * self.cols);
        for i in 0..self.rows {
            if i == row {
                continue;
            }
            for j in 0..self.cols {
                entries.push(self.at(i, j).clone());
            }
        }
        PolyMatrix { ring: self.ring.clone(), rows: self.rows - 1, cols: self.cols, entries }
    }
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Jacobian matrix: row i holds the partials of `components[i]` with respect
/// to the listed variables.
pub fn jacobian_matrix(components: &[Poly], vars: &[&str]) -> Result<PolyMatrix> {
    let ring = match components.first() {
        Some(p) => p.ring().clone(),
        None => return Err(Error::Arity("jacobian of an empty map".into())),
    };
    for p in components {
        if *p.ring() != ring {
            return Err(Error::RingMismatch("jacobian components in different rings"));
        }
    }
    let idx: Vec<usize> = vars.iter().map(|v| ring.var_index(v)).collect::<Result<_>>()?;
    let mut entries = Vec::with_capacity(components.len() * idx.len());
    for p in components {
        for &i in &idx {
            entries.push(p.differentiate_index(i));
        }
    }
    Ok(PolyMatrix::new(&ring, components.len(), idx.len(), entries))
}

/// Invertible linear substitution on a subset of a ring's variables.
#[derive(Debug, Clone)]
pub struct LinearChange {
    ring: Ring,
    var_indices: Vec<usize>,
    pub matrix: Vec<Vec<i64>>,
}

impl LinearChange {
    /// Sample with integer entries in [-bound, bound] and nonzero
    /// determinant, reproducible from the seed.
    pub fn random(ring: &Ring, vars: &[&str], seed: u64, bound: i64) -> Result<LinearChange> {
        if bound < 1 {
            return Err(Error::Arity("linear change bound must be >= 1".into()));
        }
        let var_indices: Vec<usize> =
            vars.iter().map(|v| ring.var_index(v)).collect::<Result<_>>()?;
        let mut rng = SeededRng::new(seed);
        let matrix = random_invertible_matrix(&mut rng, var_indices.len(), bound);
        Ok(LinearChange { ring: ring.clone(), var_indices, matrix })
    }

    /// Apply the substitution x_i -> sum_j m[i][j] x_j to a polynomial.
    pub fn apply(&self, p: &Poly) -> Result<Poly> {
        let mut images: Vec<Poly> = (0..self.ring.nvars())
            .map(|i| Poly::var(&self.ring, self.ring.var_name(i)).expect("own var"))
            .collect();
        for (r, &vi) in self.var_indices.iter().enumerate() {
            let mut img = Poly::zero(&self.ring);
            for (c, &vj) in self.var_indices.iter().enumerate() {
                if self.matrix[r][c] != 0 {
                    let term = Poly::var(&self.ring, self.ring.var_name(vj))?
                        .scale(&BigRational::from(num_bigint::BigInt::from(self.matrix[r][c])));
                    img = img.add(&term)?;
                }
            }
            images[vi] = img;
        }
        p.compose(&images)
    }
}

/// Mix a tuple of polynomials by an invertible integer matrix: returns
/// `A * (p_1, ..., p_k)^T`. This is a linear coordinate change on the target
/// of the tuple.
pub fn mix_tuple(polys: &[Poly], matrix: &[Vec<i64>]) -> Result<Vec<Poly>> {
    let ring = polys[0].ring().clone();
    let mut out = Vec::with_capacity(polys.len());
    for row in matrix {
        let mut acc = Poly::zero(&ring);
        for (c, p) in polys.iter().enumerate() {
            if row[c] != 0 {
                acc = acc
                    .add(&p.scale(&BigRational::from(num_bigint::BigInt::from(row[c]))))?;
            }
        }
        out.push(acc);
    }
    Ok(out)
}

/// One is always invertible: scale a single polynomial tuple trivially.
pub fn identity_matrix(k: usize) -> Vec<Vec<i64>> {
    (0..k)
        .map(|i| (0..k).map(|j| if i == j { 1 } else { 0 }).collect())
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parse::parse_poly;

    #[test]
    fn jacobian_of_pair() {
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        let g1 = parse_poly(&r, "x^2 + y^2 + z^2").unwrap();
        let g2 = parse_poly(&r, "x*y").unwrap();
        let j = jacobian_matrix(&[g1, g2], &["x", "y", "z"]).unwrap();
        assert_eq!(*j.at(0, 0), parse_poly(&r, "2*x").unwrap());
        assert_eq!(*j.at(0, 2), parse_poly(&r, "2*z").unwrap());
        assert_eq!(*j.at(1, 0), parse_poly(&r, "y").unwrap());
        assert_eq!(*j.at(1, 2), Poly::zero(&r));
    }

    #[test]
    fn two_minors_match_hand_expansion() {
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        let g1 = parse_poly(&r, "x^2 + y^2 + z^2").unwrap();
        let g2 = parse_poly(&r, "x*y").unwrap();
        let j = jacobian_matrix(&[g1, g2], &["x", "y", "z"]).unwrap();
        let m = j.minors(2).unwrap();
        assert_eq!(m.len(), 3);
        assert_eq!(m[0], parse_poly(&r, "2*x^2 - 2*y^2").unwrap());
        assert_eq!(m[1], parse_poly(&r, "-2*y*z").unwrap());
        assert_eq!(m[2], parse_poly(&r, "-2*x*z").unwrap());
    }

    #[test]
    fn one_minors_are_entries_and_oversize_errors() {
        let r = Ring::local(&["x", "y"]).unwrap();
        let j = jacobian_matrix(
            &[parse_poly(&r, "x^2").unwrap(), parse_poly(&r, "y^2").unwrap()],
            &["x", "y"],
        )
        .unwrap();
        assert_eq!(j.minors(1).unwrap().len(), 4);
        assert!(j.minors(3).is_err());
    }

    #[test]
    fn linear_change_reproducible_and_invertible() {
        let r = Ring::local(&["x", "y", "z"]).unwrap();
        let a = LinearChange::random(&r, &["x", "y"], 11, 3).unwrap();
        let b = LinearChange::random(&r, &["x", "y"], 11, 3).unwrap();
        assert_eq!(a.matrix, b.matrix);
        let p = parse_poly(&r, "x^2 - y^3 + z").unwrap();
        assert_eq!(a.apply(&p).unwrap(), b.apply(&p).unwrap());
    }
}
