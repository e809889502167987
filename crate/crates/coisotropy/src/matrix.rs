//! Matrices of polynomials: determinants, minors, Jacobians.

use std::sync::Arc;

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Clone, Debug, PartialEq)]
pub struct PolyMatrix {
    rows: usize,
    cols: usize,
    /// Row-major entries, all in one ring.
    entries: Vec<Polynomial>,
}

impl PolyMatrix {
    pub fn new(rows: usize, cols: usize, entries: Vec<Polynomial>) -> PolyMatrix {
        assert_eq!(entries.len(), rows * cols);
        PolyMatrix { rows, cols, entries }
    }

    pub fn zero(ring: &Arc<Ring>, rows: usize, cols: usize) -> PolyMatrix {
        PolyMatrix {
            rows,
            cols,
            entries: vec![Polynomial::zero(ring); rows * cols],
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn entry(&self, r: usize, c: usize) -> &Polynomial {
        &self.entries[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, p: Polynomial) {
        self.entries[r * self.cols + c] = p;
    }

    pub fn ring(&self) -> &Arc<Ring> {
        self.entries[0].ring()
    }

    pub fn row(&self, r: usize) -> &[Polynomial] {
        &self.entries[r * self.cols..(r + 1) * self.cols]
    }

    /// Stacks `other` below `self`.
    pub fn stack(&self, other: &PolyMatrix) -> PolyMatrix {
        assert_eq!(self.cols, other.cols);
        let mut entries = self.entries.clone();
        entries.extend(other.entries.iter().cloned());
        PolyMatrix { rows: self.rows + other.rows, cols: self.cols, entries }
    }

    pub fn transpose(&self) -> PolyMatrix {
        let mut entries = Vec::with_capacity(self.entries.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                entries.push(self.entry(r, c).clone());
            }
        }
        PolyMatrix { rows: self.cols, cols: self.rows, entries }
    }

    /// Determinant of the square submatrix given by `rset` x `cset`,
    /// by Laplace expansion along the first selected row.
    pub fn minor(&self, rset: &[usize], cset: &[usize]) -> Polynomial {
        debug_assert_eq!(rset.len(), cset.len());
        let ring = self.ring();
        match rset.len() {
            0 => Polynomial::one(ring),
            1 => self.entry(rset[0], cset[0]).clone(),
            _ => {
                let mut acc = Polynomial::zero(ring);
                let sub_rows = &rset[1..];
                for (j, &c) in cset.iter().enumerate() {
                    let pivot = self.entry(rset[0], c);
                    if pivot.is_zero() {
                        continue;
                    }
                    let rest: Vec<usize> = cset
                        .iter()
                        .enumerate()
                        .filter(|(jj, _)| *jj != j)
                        .map(|(_, &cc)| cc)
                        .collect();
                    let sub = self.minor(sub_rows, &rest);
                    let term = pivot.mul(&sub);
                    if j % 2 == 0 {
                        acc = acc.add(&term);
                    } else {
                        acc = acc.sub(&term);
                    }
                }
                acc
            }
        }
    }

    pub fn det(&self) -> Polynomial {
        assert_eq!(self.rows, self.cols);
        let idx: Vec<usize> = (0..self.rows).collect();
        self.minor(&idx, &idx)
    }

    /// All size x size minors, ordered lexicographically by (row-set,
    /// column-set), with the Laplace sign convention.
    pub fn minors(&self, size: usize) -> Result<Vec<Polynomial>> {
        if size == 0 || size > self.rows.min(self.cols) {
            return Err(Error::MinorSize { size, rows: self.rows, cols: self.cols });
        }
        let mut out = Vec::new();
        for rset in (0..self.rows).combinations(size) {
            for cset in (0..self.cols).combinations(size) {
                out.push(self.minor(&rset, &cset));
            }
        }
        Ok(out)
    }

    /// Maximal minors in lexicographic column-set order.
    pub fn maximal_minors(&self) -> Vec<Polynomial> {
        let size = self.rows.min(self.cols);
        self.minors(size).expect("nonempty matrix")
    }
}

/// Jacobian matrix of `polys` with respect to the variables `vars`:
/// entry (i, j) = d polys[i] / d vars[j].
pub fn jacobian(polys: &[Polynomial], vars: &[usize]) -> PolyMatrix {
    assert!(!polys.is_empty());
    let mut entries = Vec::with_capacity(polys.len() * vars.len());
    for p in polys {
        for &v in vars {
            entries.push(p.derivative(v));
        }
    }
    PolyMatrix::new(polys.len(), vars.len(), entries)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::Polynomial;

    #[test]
    fn det_2x2() {
        let r = Ring::new(vec!["a", "b", "c", "d"]);
        let v = |i| Polynomial::var(&r, i);
        let m = PolyMatrix::new(2, 2, vec![v(0), v(1), v(2), v(3)]);
        let expect = v(0).mul(&v(3)).sub(&v(1).mul(&v(2)));
        assert_eq!(m.det(), expect);
    }

    #[test]
    fn minors_count_2x3() {
        let r = Ring::new(vec!["a0", "a1", "a2", "b0", "b1", "b2"]);
        let v = |i| Polynomial::var(&r, i);
        let m = PolyMatrix::new(2, 3, vec![v(0), v(1), v(2), v(3), v(4), v(5)]);
        let minors = m.minors(2).unwrap();
        assert_eq!(minors.len(), 3);
        // first minor is columns {0,1}
        let expect = v(0).mul(&v(4)).sub(&v(1).mul(&v(3)));
        assert_eq!(minors[0], expect);
    }

    #[test]
    fn minor_size_guard() {
        let r = Ring::new(vec!["a"]);
        let m = PolyMatrix::new(1, 1, vec![Polynomial::var(&r, 0)]);
        assert!(m.minors(2).is_err());
    }

    #[test]
    fn jacobian_basic() {
        let r = Ring::new(vec!["x", "y"]);
        let x = Polynomial::var(&r, 0);
        let y = Polynomial::var(&r, 1);
        let f = x.pow(2).add(&y.pow(2));
        let j = jacobian(&[f], &[0, 1]);
        assert_eq!(j.rows(), 1);
        assert_eq!(j.cols(), 2);
        assert_eq!(
            *j.entry(0, 0),
            x.mul_scalar(&num_rational::BigRational::from_integer(2.into()))
        );
    }
}
