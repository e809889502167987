//! Segre varieties of rank-one tensors and hyperdeterminants.
//!
//! The dual of P^{n_1} x ... x P^{n_d} is a hypersurface exactly when
//! 2 n_i <= n_1 + ... + n_d for all i, and its equation is the
//! hyperdeterminant. Every hyperdeterminant is a coisotropic form of a
//! Segre variety written in Stiefel coordinates.

use itertools::Itertools;

use crate::coisotropic::coisotropic_form;
use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::variety::ProjectiveVariety;

/// Ambient dimension guard for desk-scale computations.
pub const MAX_AMBIENT: usize = 7;

/// The toric ideal of the Segre embedding of P^{n_1} x ... x P^{n_d},
/// computed by eliminating the multilinear parametrization
/// x_(i_1..i_d) = u^(1)_{i_1} ... u^(d)_{i_d}.
pub fn segre_ideal(factors: &[usize]) -> Result<ProjectiveVariety> {
    if factors.is_empty() || factors.iter().any(|&n| n == 0) {
        return Err(Error::Precondition(
            "Segre factors must be positive dimensions".into(),
        ));
    }
    let ambient: usize = factors.iter().map(|n| n + 1).product::<usize>() - 1;
    if ambient > MAX_AMBIENT {
        return Err(Error::TooLarge(format!(
            "Segre ambient dimension {ambient} exceeds the desk-scale cap {MAX_AMBIENT}"
        )));
    }
    // parameters first, then the ambient coordinates
    let mut names: Vec<String> = Vec::new();
    for (j, &nj) in factors.iter().enumerate() {
        for i in 0..=nj {
            names.push(format!("@u{j}_{i}"));
        }
    }
    let nparams = names.len();
    names.extend((0..=ambient).map(|i| format!("x{i}")));
    let ring = Ring::new(names);

    let index_ranges: Vec<Vec<usize>> = factors.iter().map(|&nj| (0..=nj).collect()).collect();
    let mut gens = Vec::new();
    for (flat, multi) in index_ranges.iter().multi_cartesian_product().enumerate() {
        let mut monom = Polynomial::one(&ring);
        let mut offset = 0;
        for (j, &i) in multi.iter().enumerate() {
            monom = monom.mul(&Polynomial::var(&ring, offset + i));
            offset += factors[j] + 1;
        }
        gens.push(Polynomial::var(&ring, nparams + flat).sub(&monom));
    }
    let ideal = Ideal::new(&ring, gens)?;
    let params: Vec<usize> = (0..nparams).collect();
    let eliminated = ideal.eliminate(&params)?;
    let xring = Ring::projective(ambient);
    ProjectiveVariety::new(eliminated.rename(&xring)?)
}

/// codim of the dual of the Segre variety:
/// max(1, 2 max(n_i) - (n_1 + ... + n_d) + 1).
pub fn dual_codim_segre(factors: &[usize]) -> usize {
    let sum: usize = factors.iter().sum();
    let max = factors.iter().copied().max().unwrap_or(0);
    if 2 * max + 1 > sum {
        2 * max - sum + 1
    } else {
        1
    }
}

/// A hyperdeterminant in the entries of its tensor: the value and the
/// layout of the Stiefel variables as tensor slots.
#[derive(Clone, Debug)]
pub struct Hyperdeterminant {
    /// Polynomial in the Stiefel entries a_{r,c} of an
    /// format[0] x (ambient+1) matrix; entry a_{r,c} is the tensor slot
    /// (r-1, multi-index of c-1).
    pub polynomial: Polynomial,
    pub format: Vec<usize>,
    /// Degree of the underlying coisotropic form and its index i.
    pub coisotropic_index: usize,
}

/// The hyperdeterminant of the given format (sizes, each >= 2): the
/// (sum n_j - m_0)-th coisotropic form of the Segre variety of the tail
/// factors, composed with the maximal minors of a generic Stiefel matrix
/// whose columns are the flattened tail multi-indices.
pub fn hyperdeterminant(format: &[usize]) -> Result<Hyperdeterminant> {
    if format.len() < 2 || format.iter().any(|&s| s < 2) {
        return Err(Error::Precondition(
            "hyperdeterminant formats need at least two factors of size >= 2".into(),
        ));
    }
    let ns: Vec<usize> = format.iter().map(|&s| s - 1).collect();
    let total: usize = ns.iter().sum();
    for &ni in &ns {
        if 2 * ni > total {
            return Err(Error::Precondition(format!(
                "format {format:?} violates the hypersurface condition 2 n_i <= sum n_j"
            )));
        }
    }
    let m0 = ns[0];
    let tail = &ns[1..];
    let tail_sum: usize = tail.iter().sum();
    let i = tail_sum - m0;
    if tail.len() == 1 {
        // square matrix format: the underlying variety is the whole P^n and
        // the hyperdeterminant degenerates to the ordinary determinant
        let size = m0 + 1;
        let ring = Ring::new(
            (1..=size)
                .flat_map(|r| (1..=size).map(move |c| format!("a_{{{r},{c}}}")))
                .collect::<Vec<_>>(),
        );
        let entries = (0..size * size).map(|v| Polynomial::var(&ring, v)).collect();
        let a = crate::matrix::PolyMatrix::new(size, size, entries);
        return Ok(Hyperdeterminant {
            polynomial: a.det().normalized(),
            format: format.to_vec(),
            coisotropic_index: i,
        });
    }
    let x = segre_ideal(tail)?;
    let cf = coisotropic_form(&x, i)?;
    debug_assert_eq!(cf.grassmann.stiefel_rows(), m0 + 1);
    let a = cf.grassmann.stiefel_matrix();
    let poly = cf.grassmann.compose_pl(&cf.form, &a)?.normalized();
    Ok(Hyperdeterminant {
        polynomial: poly,
        format: format.to_vec(),
        coisotropic_index: i,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn segre_p1xp1_is_the_quadric() {
        let x = segre_ideal(&[1, 1]).unwrap();
        assert_eq!((x.dim(), x.degree()), (2, 2));
        let r = x.ideal().ring().clone();
        let xv = |i| Polynomial::var(&r, i);
        let expect = xv(0).mul(&xv(3)).sub(&xv(1).mul(&xv(2)));
        assert_eq!(x.ideal().gens(), &[expect.normalized()]);
    }

    #[test]
    fn segre_p1xp2_minors() {
        // 2x2 minors of a generic 2x3 matrix: three quadrics
        let x = segre_ideal(&[1, 2]).unwrap();
        assert_eq!((x.dim(), x.degree()), (3, 3));
        assert_eq!(x.ideal().gens().len(), 3);
        assert!(x.ideal().gens().iter().all(|g| g.degree() == 2));
    }

    #[test]
    fn segre_p1cubed_nine_quadrics() {
        let x = segre_ideal(&[1, 1, 1]).unwrap();
        assert_eq!(x.dim(), 3);
        assert_eq!(x.ideal().gens().len(), 9);
        assert!(x.ideal().gens().iter().all(|g| g.degree() == 2));
        // each generator vanishes on a rank-one tensor
        let t = Ring::new(vec!["s0", "s1", "u0", "u1", "v0", "v1"]);
        let sv = |i| Polynomial::var(&t, i);
        let mut images = Vec::new();
        for i in 0..2 {
            for j in 0..2 {
                for k in 0..2 {
                    images.push(sv(i).mul(&sv(2 + j)).mul(&sv(4 + k)));
                }
            }
        }
        for g in x.ideal().gens() {
            assert!(g.substitute(&t, &images).is_zero());
        }
    }

    #[test]
    fn dual_codim_formula() {
        assert_eq!(dual_codim_segre(&[1, 1, 1]), 1);
        assert_eq!(dual_codim_segre(&[1, 3]), 3);
        assert_eq!(dual_codim_segre(&[1, 1]), 1);
        assert_eq!(dual_codim_segre(&[1, 2]), 2);
    }

    #[test]
    fn ambient_guard() {
        assert!(matches!(segre_ideal(&[2, 2]), Err(Error::TooLarge(_))));
    }

    #[test]
    fn format_guard() {
        assert!(hyperdeterminant(&[2, 4]).is_err());
        assert!(hyperdeterminant(&[2]).is_err());
    }

    #[test]
    fn hyperdet_2x2_is_the_determinant() {
        let h = hyperdeterminant(&[2, 2]).unwrap();
        assert_eq!(h.coisotropic_index, 0);
        let r = h.polynomial.ring().clone();
        let a = |name: &str| Polynomial::var(&r, r.index_of(name).unwrap());
        let det = a("a_{1,1}")
            .mul(&a("a_{2,2}"))
            .sub(&a("a_{1,2}").mul(&a("a_{2,1}")));
        assert_eq!(h.polynomial, det.normalized());
    }

    #[test]
    fn hyperdet_2x2x2_degree_four() {
        let h = hyperdeterminant(&[2, 2, 2]).unwrap();
        assert_eq!(h.coisotropic_index, 1);
        assert_eq!(h.polynomial.degree(), 4);
        assert_eq!(h.polynomial.ring().nvars(), 8);
    }

    #[test]
    fn hyperdet_3x2x2_boundary_format() {
        let h = hyperdeterminant(&[3, 2, 2]).unwrap();
        assert_eq!(h.coisotropic_index, 0);
        // p012 p123 - p013 p023 under the 3x3 minors of a generic 3x4 matrix
        let gr = crate::grassmann::GrassmannRing::primal(0, 3).unwrap();
        let a = gr.stiefel_matrix();
        let images = gr.pl_images(&a).unwrap();
        let expect = images[0]
            .mul(&images[3])
            .sub(&images[1].mul(&images[2]))
            .normalized();
        assert_eq!(h.polynomial, expect);
    }
}
