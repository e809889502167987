//! Classical example varieties and forms used by the tests, the acceptance
//! suite and the runnable examples: the twisted cubic and its Bezout-matrix
//! Chow form, the Fermat cubic with its sextic Hurwitz forms and degree-12
//! dual surface, the Segre quadric, and the cubic Chow form of P^1 x P^2.

use num_rational::BigRational;

use crate::grassmann::GrassmannRing;
use crate::matrix::PolyMatrix;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::variety::ProjectiveVariety;

fn two() -> BigRational {
    BigRational::from_integer(2.into())
}

pub fn conic() -> ProjectiveVariety {
    let r = Ring::projective(2);
    let xv = |i| Polynomial::var(&r, i);
    let f = xv(0).mul(&xv(2)).sub(&xv(1).pow(2));
    ProjectiveVariety::from_generators(2, vec![f]).unwrap()
}

/// x0 x3 - x1 x2: the Segre embedding of P^1 x P^1.
pub fn segre_quadric() -> ProjectiveVariety {
    let r = Ring::projective(3);
    let xv = |i| Polynomial::var(&r, i);
    let f = xv(0).mul(&xv(3)).sub(&xv(1).mul(&xv(2)));
    ProjectiveVariety::from_generators(3, vec![f]).unwrap()
}

pub fn twisted_cubic() -> ProjectiveVariety {
    let r = Ring::projective(3);
    let xv = |i| Polynomial::var(&r, i);
    let gens = vec![
        xv(0).mul(&xv(2)).sub(&xv(1).pow(2)),
        xv(0).mul(&xv(3)).sub(&xv(1).mul(&xv(2))),
        xv(1).mul(&xv(3)).sub(&xv(2).pow(2)),
    ];
    ProjectiveVariety::from_generators(3, gens).unwrap()
}

pub fn fermat_cubic() -> ProjectiveVariety {
    let r = Ring::projective(3);
    let xv = |i| Polynomial::var(&r, i);
    let f = xv(0)
        .pow(3)
        .add(&xv(1).pow(3))
        .add(&xv(2).pow(3))
        .add(&xv(3).pow(3));
    ProjectiveVariety::from_generators(3, vec![f]).unwrap()
}

/// The determinant of the Bezout matrix
/// [[p01, p02, p03], [p02, p03 + p12, p13], [p03, p13, p23]]:
/// the Chow form of the twisted cubic in primal coordinates of Gr(1, P^3).
pub fn bezout_determinant(gr: &GrassmannRing) -> Polynomial {
    let p = |t: &[usize]| gr.var(t).unwrap();
    PolyMatrix::new(
        3,
        3,
        vec![
            p(&[0, 1]),
            p(&[0, 2]),
            p(&[0, 3]),
            p(&[0, 2]),
            p(&[0, 3]).add(&p(&[1, 2])),
            p(&[1, 3]),
            p(&[0, 3]),
            p(&[1, 3]),
            p(&[2, 3]),
        ],
    )
    .det()
}

/// det [[2 p02, p12 + p03], [p12 + p03, 2 p13]]: the Hurwitz form of the
/// Segre quadric x0 x3 - x1 x2.
pub fn segre_quadric_hurwitz(gr: &GrassmannRing) -> Polynomial {
    let p = |t: &[usize]| gr.var(t).unwrap();
    PolyMatrix::new(
        2,
        2,
        vec![
            p(&[0, 2]).mul_scalar(&two()),
            p(&[1, 2]).add(&p(&[0, 3])),
            p(&[1, 2]).add(&p(&[0, 3])),
            p(&[1, 3]).mul_scalar(&two()),
        ],
    )
    .det()
}

/// The sextic Hurwitz form of the Fermat cubic in primal Plücker
/// coordinates of Gr(1, P^3), written with all indices increasing.
pub fn fermat_hurwitz_primal(gr: &GrassmannRing) -> Polynomial {
    let p = |t: &[usize]| gr.var(t).unwrap();
    let (p01, p02, p03) = (p(&[0, 1]), p(&[0, 2]), p(&[0, 3]));
    let (p12, p13, p23) = (p(&[1, 2]), p(&[1, 3]), p(&[2, 3]));
    let cube = |a: &Polynomial| a.pow(3);
    let sq = |a: &Polynomial| a.pow(2);

    let mut f = Polynomial::zero(gr.ring());
    for v in [&p01, &p02, &p03, &p12, &p13, &p23] {
        f = f.add(&v.pow(6));
    }
    // 2 (p10^3 p02^3 + p10^3 p03^3 + p20^3 p03^3 + p01^3 p12^3
    //    + p01^3 p13^3 + p21^3 p13^3), with p_ji = -p_ij
    let mut line2 = cube(&p01).mul(&cube(&p02)).neg();
    line2 = line2.sub(&cube(&p01).mul(&cube(&p03)));
    line2 = line2.sub(&cube(&p02).mul(&cube(&p03)));
    line2 = line2.add(&cube(&p01).mul(&cube(&p12)));
    line2 = line2.add(&cube(&p01).mul(&cube(&p13)));
    line2 = line2.sub(&cube(&p12).mul(&cube(&p13)));
    f = f.add(&line2.mul_scalar(&two()));
    // 2 (p02^3 p21^3 + p02^3 p23^3 + p12^3 p23^3 + p03^3 p31^3
    //    + p03^3 p32^3 + p13^3 p32^3)
    let mut line3 = cube(&p02).mul(&cube(&p12)).neg();
    line3 = line3.add(&cube(&p02).mul(&cube(&p23)));
    line3 = line3.add(&cube(&p12).mul(&cube(&p23)));
    line3 = line3.sub(&cube(&p03).mul(&cube(&p13)));
    line3 = line3.sub(&cube(&p03).mul(&cube(&p23)));
    line3 = line3.sub(&cube(&p13).mul(&cube(&p23)));
    f = f.add(&line3.mul_scalar(&two()));
    // 2 (p01 p23 (p03^2 p12^2 - p02^2 p13^2)
    //    - p02 p13 (p01^2 p23^2 - p03^2 p12^2)
    //    + p03 p12 (p02^2 p13^2 - p01^2 p23^2))
    let t1 = p01
        .mul(&p23)
        .mul(&sq(&p03).mul(&sq(&p12)).sub(&sq(&p02).mul(&sq(&p13))));
    let t2 = p02
        .mul(&p13)
        .mul(&sq(&p01).mul(&sq(&p23)).sub(&sq(&p03).mul(&sq(&p12))));
    let t3 = p03
        .mul(&p12)
        .mul(&sq(&p02).mul(&sq(&p13)).sub(&sq(&p01).mul(&sq(&p23))));
    f.add(&t1.sub(&t2).add(&t3).mul_scalar(&two()))
}

/// The same Hurwitz form in dual Plücker coordinates (the image of the
/// primal form under the coordinate change).
pub fn fermat_hurwitz_dual(gr: &GrassmannRing) -> Polynomial {
    let q = |t: &[usize]| gr.var(t).unwrap();
    let (q01, q02, q03) = (q(&[0, 1]), q(&[0, 2]), q(&[0, 3]));
    let (q12, q13, q23) = (q(&[1, 2]), q(&[1, 3]), q(&[2, 3]));
    let cube = |a: &Polynomial| a.pow(3);
    let sq = |a: &Polynomial| a.pow(2);

    let mut f = Polynomial::zero(gr.ring());
    for v in [&q01, &q02, &q03, &q12, &q13, &q23] {
        f = f.add(&v.pow(6));
    }
    // -2 (q10^3 q02^3 + q10^3 q03^3 + q20^3 q03^3 + q01^3 q12^3
    //     + q01^3 q13^3 + q21^3 q13^3)
    let mut line2 = cube(&q01).mul(&cube(&q02));
    line2 = line2.add(&cube(&q01).mul(&cube(&q03)));
    line2 = line2.add(&cube(&q02).mul(&cube(&q03)));
    line2 = line2.sub(&cube(&q01).mul(&cube(&q12)));
    line2 = line2.sub(&cube(&q01).mul(&cube(&q13)));
    line2 = line2.add(&cube(&q12).mul(&cube(&q13)));
    f = f.add(&line2.mul_scalar(&two()));
    // -2 (q02^3 q21^3 + q02^3 q23^3 + q12^3 q23^3 + q03^3 q31^3
    //     + q03^3 q32^3 + q13^3 q32^3)
    let mut line3 = cube(&q02).mul(&cube(&q12));
    line3 = line3.sub(&cube(&q02).mul(&cube(&q23)));
    line3 = line3.sub(&cube(&q12).mul(&cube(&q23)));
    line3 = line3.add(&cube(&q03).mul(&cube(&q13)));
    line3 = line3.add(&cube(&q03).mul(&cube(&q23)));
    line3 = line3.add(&cube(&q13).mul(&cube(&q23)));
    f = f.add(&line3.mul_scalar(&two()));
    let t1 = q01
        .mul(&q23)
        .mul(&sq(&q03).mul(&sq(&q12)).sub(&sq(&q02).mul(&sq(&q13))));
    let t2 = q02
        .mul(&q13)
        .mul(&sq(&q01).mul(&sq(&q23)).sub(&sq(&q03).mul(&sq(&q12))));
    let t3 = q03
        .mul(&q12)
        .mul(&sq(&q02).mul(&sq(&q13)).sub(&sq(&q01).mul(&sq(&q23))));
    f.add(&t1.sub(&t2).add(&t3).mul_scalar(&two()))
}

/// The degree-12 surface dual to the Fermat cubic, as a polynomial in the
/// given 4-variable ring: with z_i the cube of the i-th variable,
/// 6 Σ z^4 - 8 (Σ z^3)(Σ z) + (Σ z^2)^2 + 2 (Σ z^2)(Σ z)^2 - 40 z0 z1 z2 z3.
pub fn fermat_dual_surface(ring: &std::sync::Arc<Ring>) -> Polynomial {
    assert_eq!(ring.nvars(), 4);
    let z: Vec<Polynomial> = (0..4).map(|i| Polynomial::var(ring, i).pow(3)).collect();
    let sum = |e: u32| {
        z.iter()
            .fold(Polynomial::zero(ring), |acc, zi| acc.add(&zi.pow(e)))
    };
    let c = |v: i64| BigRational::from_integer(v.into());
    let s1 = sum(1);
    let s2 = sum(2);
    let s3 = sum(3);
    let s4 = sum(4);
    let prod = z[0].mul(&z[1]).mul(&z[2]).mul(&z[3]);
    s4.mul_scalar(&c(6))
        .sub(&s3.mul(&s1).mul_scalar(&c(8)))
        .add(&s2.pow(2))
        .add(&s2.mul(&s1.pow(2)).mul_scalar(&c(2)))
        .sub(&prod.mul_scalar(&c(40)))
}

/// The 13-term cubic Chow form of P^1 x P^2 in dual Plücker coordinates of
/// Gr(1, P^5).
pub fn segre_p1xp2_chow_dual(gr: &GrassmannRing) -> Polynomial {
    let q = |a: usize, b: usize| gr.var(&[a, b]).unwrap();
    let m3 = |a: Polynomial, b: Polynomial, c: Polynomial| a.mul(&b).mul(&c);
    let mut f = m3(q(1, 3), q(1, 4), q(2, 4));
    f = f.sub(&m3(q(0, 3), q(1, 4), q(2, 5)));
    f = f.sub(&m3(q(1, 2), q(1, 4), q(2, 5)));
    f = f.add(&m3(q(0, 2), q(1, 5), q(2, 5)));
    f = f.sub(&m3(q(0, 3), q(1, 4), q(3, 4)));
    f = f.add(&q(0, 1).mul(&q(3, 4).pow(2)));
    f = f.add(&m3(q(0, 3), q(0, 4), q(3, 5)));
    f = f.sub(&m3(q(0, 2), q(0, 5), q(3, 5)));
    f = f.add(&m3(q(0, 2), q(1, 4), q(3, 5)));
    f = f.sub(&m3(q(0, 1), q(2, 4), q(3, 5)));
    f = f.add(&q(1, 2).pow(2).mul(&q(4, 5)));
    f = f.sub(&m3(q(0, 2), q(1, 3), q(4, 5)));
    f.sub(&m3(q(0, 1), q(2, 3), q(4, 5)))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn fixture_dimensions_and_degrees() {
        assert_eq!((conic().dim(), conic().degree()), (1, 2));
        assert_eq!((twisted_cubic().dim(), twisted_cubic().degree()), (1, 3));
        assert_eq!((fermat_cubic().dim(), fermat_cubic().degree()), (2, 3));
        assert_eq!((segre_quadric().dim(), segre_quadric().degree()), (2, 2));
    }

    #[test]
    fn hurwitz_forms_are_sextic_and_related_by_the_coordinate_change() {
        let primal = GrassmannRing::primal(1, 3).unwrap();
        let dual = GrassmannRing::dual(1, 3).unwrap();
        let f = fermat_hurwitz_primal(&primal);
        let g = fermat_hurwitz_dual(&dual);
        assert_eq!(f.degree(), 6);
        assert_eq!(g.degree(), 6);
        assert_eq!(primal.primal_to_dual(&f).unwrap(), g);
        assert_eq!(dual.dual_to_primal(&g).unwrap(), f);
    }

    #[test]
    fn dual_surface_has_degree_twelve() {
        let r = Ring::projective_dual(3);
        let f = fermat_dual_surface(&r);
        assert_eq!(f.degree(), 12);
        assert!(f.is_homogeneous());
    }

    #[test]
    fn chow_cubic_has_thirteen_terms() {
        let gr = GrassmannRing::dual(1, 5).unwrap();
        let f = segre_p1xp2_chow_dual(&gr);
        assert_eq!(f.num_terms(), 13);
        assert_eq!(f.degree(), 3);
    }
}
