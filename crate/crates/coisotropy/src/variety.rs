//! Projective varieties, conormal varieties, dual varieties and polar
//! degrees.
//!
//! The conormal variety of X lives in P^n x P^n: pairs (x, y) with x a
//! smooth point of X and the hyperplane {y = 0} tangent to X at x. Its
//! elimination onto the second factor is the projectively dual variety; the
//! coefficients of its multidegree are the polar degrees, computed here by
//! counting points in generic product slices.

use std::sync::{Arc, Mutex};

use rand::Rng;
use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

use num_bigint::BigInt;
use num_rational::BigRational;

use crate::error::{Error, Result};
use crate::ideal::Ideal;
use crate::matrix::jacobian;
use crate::poly::Polynomial;
use crate::ring::Ring;

#[derive(Debug)]
pub struct ProjectiveVariety {
    ideal: Ideal,
    ambient: usize,
    dim: isize,
    degree: u64,
    conormal: Mutex<Option<Arc<Ideal>>>,
}

impl Clone for ProjectiveVariety {
    fn clone(&self) -> Self {
        ProjectiveVariety {
            ideal: self.ideal.clone(),
            ambient: self.ambient,
            dim: self.dim,
            degree: self.degree,
            conormal: Mutex::new(self.conormal.lock().unwrap().clone()),
        }
    }
}

impl ProjectiveVariety {
    /// Wraps a homogeneous ideal as a projective variety. Irreducibility is
    /// asserted by the caller, not verified: the geometric operations in
    /// this crate assume it.
    pub fn new(ideal: Ideal) -> Result<ProjectiveVariety> {
        let ambient = ideal.ring().nvars() - 1;
        let (dim, degree) = ideal.dimension_degree()?;
        Ok(ProjectiveVariety {
            ideal,
            ambient,
            dim,
            degree,
            conormal: Mutex::new(None),
        })
    }

    pub fn from_generators(n: usize, gens: Vec<Polynomial>) -> Result<ProjectiveVariety> {
        let ring = gens
            .first()
            .map(|g| g.ring().clone())
            .unwrap_or_else(|| Ring::projective(n));
        ProjectiveVariety::new(Ideal::new(&ring, gens)?)
    }

    pub fn ideal(&self) -> &Ideal {
        &self.ideal
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> isize {
        self.dim
    }

    pub fn degree(&self) -> u64 {
        self.degree
    }

    pub fn codim(&self) -> isize {
        self.ambient as isize - self.dim
    }

    fn check_proper(&self) -> Result<()> {
        if self.dim < 0 {
            return Err(Error::Precondition("variety is empty".into()));
        }
        if self.ideal.is_zero() {
            return Err(Error::Precondition(
                "variety is the whole projective space; its dual is empty".into(),
            ));
        }
        Ok(())
    }

    /// The product ring Q[x_0..x_n, y_0..y_n]; x block first so that
    /// eliminating it projects onto the dual factor.
    pub fn conormal_ring(&self) -> Arc<Ring> {
        let mut names: Vec<String> = self.ideal.ring().var_names().to_vec();
        names.extend((0..=self.ambient).map(|i| format!("y{i}")));
        Ring::new(names)
    }

    /// Ideal of the conormal variety N_X in x- and y-variables.
    ///
    /// Over a smooth point x, the hyperplanes tangent at x form the row span
    /// of the Jacobian of I(X). The graph {(x, sum_r t_r grad g_r(x))} over
    /// the cone of X is irreducible, so eliminating the span parameters t_r
    /// yields the prime ideal of N_X directly, with no saturation.
    pub fn conormal_ideal(&self) -> Result<Arc<Ideal>> {
        if let Some(cached) = self.conormal.lock().unwrap().clone() {
            return Ok(cached);
        }
        self.check_proper()?;
        let n = self.ambient;
        let r = self.ideal.gens().len();
        let xpos: Vec<usize> = (0..=n).collect();
        let jac_x = jacobian(self.ideal.gens(), &xpos);

        // ring [t_1..t_r | x_0..x_n, y_0..y_n]
        let graph_ring = {
            let mut names: Vec<String> = (1..=r).map(|j| format!("@t{j}")).collect();
            names.extend(self.ideal.ring().var_names().iter().cloned());
            names.extend((0..=n).map(|i| format!("y{i}")));
            Ring::new(names)
        };
        let xmap: Vec<usize> = (r..=r + n).collect();
        let mut gens: Vec<Polynomial> = self
            .ideal
            .gens()
            .iter()
            .map(|g| g.map_vars(&graph_ring, &xmap))
            .collect();
        for c in 0..=n {
            let mut acc = Polynomial::var(&graph_ring, r + n + 1 + c);
            for row in 0..r {
                let t = Polynomial::var(&graph_ring, row);
                let entry = jac_x.entry(row, c).map_vars(&graph_ring, &xmap);
                acc = acc.sub(&t.mul(&entry));
            }
            gens.push(acc);
        }
        let graph = Ideal::new(&graph_ring, gens)?;
        let front: Vec<usize> = (0..r).collect();
        let eliminated = graph.eliminate(&front)?;
        let conormal = eliminated.into_ring(&self.conormal_ring())?;
        let arc = Arc::new(conormal);
        *self.conormal.lock().unwrap() = Some(arc.clone());
        Ok(arc)
    }

    /// Ideal of the dual variety in the y-coordinates, by eliminating x
    /// from the conormal ideal.
    pub fn dual_variety_ideal(&self) -> Result<Ideal> {
        let conormal = self.conormal_ideal()?;
        let xpos: Vec<usize> = (0..=self.ambient).collect();
        conormal.eliminate(&xpos)
    }

    /// The dual variety as a variety in its own right (coordinates renamed
    /// back to the x-names so it can be fed into further operations).
    pub fn dual_variety(&self) -> Result<ProjectiveVariety> {
        let dual = self.dual_variety_ideal()?;
        let renamed = dual.rename(self.ideal.ring())?;
        ProjectiveVariety::new(renamed)
    }

    /// s = dim X - codim X^dual + 1, the largest index for which the
    /// coisotropic variety is a hypersurface.
    pub fn hypersurface_index_range(&self) -> Result<isize> {
        let dual = self.dual_variety_ideal()?;
        let (ddim, _) = dual.dimension_degree()?;
        let codim_dual = self.ambient as isize - ddim;
        Ok(self.dim - codim_dual + 1)
    }

    /// Biduality: (X^dual)^dual = X, checked by mutual radical membership of
    /// the generators.
    pub fn biduality_check(&self) -> Result<bool> {
        let xdd = self.dual_variety()?.dual_variety()?;
        mutual_radical_membership(&self.ideal, xdd.ideal())
    }

    /// True when the singular locus is projectively empty: the ideal of X
    /// plus the codim-size minors of its Jacobian contains every coordinate
    /// in its radical.
    pub fn is_smooth(&self) -> Result<bool> {
        let c = self.codim();
        if c <= 0 {
            return Ok(true);
        }
        let c = c as usize;
        let xpos: Vec<usize> = (0..=self.ambient).collect();
        let jac = jacobian(self.ideal.gens(), &xpos);
        if c > jac.rows().min(jac.cols()) {
            return Ok(false);
        }
        let mut gens = self.ideal.gens().to_vec();
        gens.extend(jac.minors(c)?);
        let sing = Ideal::new(self.ideal.ring(), gens)?;
        for j in 0..=self.ambient {
            if !sing.radical_contains(&Polynomial::var(self.ideal.ring(), j))? {
                return Ok(false);
            }
        }
        Ok(true)
    }
}

/// f in sqrt(J) for every generator f of I and vice versa.
pub fn mutual_radical_membership(a: &Ideal, b: &Ideal) -> Result<bool> {
    for f in a.gens() {
        if !b.radical_contains(&f.clone().into_ring(b.ring())?)? {
            return Ok(false);
        }
    }
    for g in b.gens() {
        if !a.radical_contains(&g.clone().into_ring(a.ring())?)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn random_linear_form(ring: &Arc<Ring>, vars: &[usize], rng: &mut ChaCha8Rng) -> Polynomial {
    loop {
        let mut acc = Polynomial::zero(ring);
        for &v in vars {
            let c: i64 = rng.gen_range(-20..=20);
            if c != 0 {
                let coeff = BigRational::from_integer(BigInt::from(c));
                acc = acc.add(&Polynomial::var(ring, v).mul_scalar(&coeff));
            }
        }
        if !acc.is_zero() {
            return acc;
        }
    }
}

/// Polar degrees via the multidegree of the conormal variety: the i-th
/// entry counts the points of N_X sliced by generic linear subspaces with
/// dim X - i conditions on the x-side and codim X - 1 + i on the y-side,
/// both factors dehomogenized on generic affine charts. Non-generic slices
/// are detected by a nonzero-dimensional quotient and retried with a fresh
/// deterministic seed.
pub fn polar_degrees(x: &ProjectiveVariety, seed: u64) -> Result<Vec<u64>> {
    let k = x.dim();
    if k < 0 {
        return Err(Error::Precondition("variety is empty".into()));
    }
    let conormal = x.conormal_ideal()?;
    let xy = conormal.ring().clone();
    let n = x.ambient();
    let xvars: Vec<usize> = (0..=n).collect();
    let yvars: Vec<usize> = (n + 1..=2 * n + 1).collect();

    let mut out = Vec::new();
    for i in 0..=k as usize {
        let count = polar_slice_count(&conormal, &xy, &xvars, &yvars, k as usize, n, i, seed)?;
        if count == 0 {
            // confirm the range boundary on two more seeds
            let c2 = polar_slice_count(&conormal, &xy, &xvars, &yvars, k as usize, n, i, seed + 101)?;
            let c3 = polar_slice_count(&conormal, &xy, &xvars, &yvars, k as usize, n, i, seed + 202)?;
            if c2 == 0 && c3 == 0 {
                break;
            }
            out.push(c2.max(c3));
        } else {
            out.push(count);
        }
    }
    Ok(out)
}

/// Single polar degree; used as a cheap index-range test.
pub fn polar_degree_single(x: &ProjectiveVariety, i: usize, seed: u64) -> Result<u64> {
    let k = x.dim();
    if k < 0 || i > k as usize {
        return Ok(0);
    }
    let conormal = x.conormal_ideal()?;
    let xy = conormal.ring().clone();
    let n = x.ambient();
    let xvars: Vec<usize> = (0..=n).collect();
    let yvars: Vec<usize> = (n + 1..=2 * n + 1).collect();
    polar_slice_count(&conormal, &xy, &xvars, &yvars, k as usize, n, i, seed)
}

#[allow(clippy::too_many_arguments)]
fn polar_slice_count(
    conormal: &Ideal,
    xy: &Arc<Ring>,
    xvars: &[usize],
    yvars: &[usize],
    k: usize,
    n: usize,
    i: usize,
    seed: u64,
) -> Result<u64> {
    let x_forms = k - i;
    let y_forms = n - k - 1 + i;
    for attempt in 0..8u64 {
        let mut rng = ChaCha8Rng::seed_from_u64(
            seed.wrapping_add(attempt)
                .wrapping_add((i as u64).wrapping_mul(0x5851_f42d_4c95_7f2d)),
        );
        let mut gens = conormal.gens().to_vec();
        for _ in 0..x_forms {
            gens.push(random_linear_form(xy, xvars, &mut rng));
        }
        for _ in 0..y_forms {
            gens.push(random_linear_form(xy, yvars, &mut rng));
        }
        // dehomogenize both factors on generic affine charts
        let one = Polynomial::one(xy);
        gens.push(random_linear_form(xy, xvars, &mut rng).sub(&one));
        gens.push(random_linear_form(xy, yvars, &mut rng).sub(&one));
        let sliced = Ideal::new(xy, gens)?;
        if let Some(count) = sliced.zero_dim_length()? {
            return Ok(count);
        }
    }
    Err(Error::SliceFailure(format!(
        "no zero-dimensional slice found for polar degree index {i} after bounded retries"
    )))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{conic, fermat_cubic, segre_quadric, twisted_cubic};

    fn xring(n: usize) -> Arc<Ring> {
        Ring::projective(n)
    }

    fn xv(r: &Arc<Ring>, i: usize) -> Polynomial {
        Polynomial::var(r, i)
    }

    #[test]
    fn conic_conormal_and_dual() {
        let x = conic();
        let dual = x.dual_variety().unwrap();
        // the dual of a smooth conic is a conic
        assert_eq!(dual.dim(), 1);
        assert_eq!(dual.degree(), 2);
    }

    #[test]
    fn hyperplane_dual_is_point() {
        let r = xring(3);
        let x = ProjectiveVariety::from_generators(3, vec![xv(&r, 0)]).unwrap();
        let conormal = x.conormal_ideal().unwrap();
        // conormal = {x0 = 0} x {(1:0:0:0)}
        let xy = conormal.ring().clone();
        let expect = Ideal::new(
            &xy,
            vec![
                Polynomial::var(&xy, 0),
                Polynomial::var(&xy, 5),
                Polynomial::var(&xy, 6),
                Polynomial::var(&xy, 7),
            ],
        )
        .unwrap();
        assert!(conormal.equals(&expect).unwrap());
        let dual = x.dual_variety().unwrap();
        assert_eq!((dual.dim(), dual.degree()), (0, 1));
    }

    #[test]
    fn segre_quadric_self_dual() {
        let x = segre_quadric();
        let dual = x.dual_variety_ideal().unwrap();
        let yring = dual.ring().clone();
        let yv = |i| Polynomial::var(&yring, i);
        // y0 y3 - y1 y2
        let expect = yv(0).mul(&yv(3)).sub(&yv(1).mul(&yv(2)));
        assert_eq!(dual.gens(), &[expect.normalized()]);
    }

    #[test]
    fn twisted_cubic_dual_is_quartic_surface() {
        let x = twisted_cubic();
        let dual = x.dual_variety().unwrap();
        assert_eq!((dual.dim(), dual.degree()), (2, 4));
    }

    #[test]
    fn biduality_conic_and_segre() {
        assert!(conic().biduality_check().unwrap());
        assert!(segre_quadric().biduality_check().unwrap());
    }

    #[test]
    fn polar_degrees_segre_quadric() {
        let x = segre_quadric();
        assert_eq!(polar_degrees(&x, 7).unwrap(), vec![2, 2, 2]);
    }

    #[test]
    fn polar_degrees_twisted_cubic() {
        let x = twisted_cubic();
        assert_eq!(polar_degrees(&x, 7).unwrap(), vec![3, 4]);
    }

    #[test]
    fn index_range_twisted_cubic() {
        let x = twisted_cubic();
        assert_eq!(x.hypersurface_index_range().unwrap(), 1);
    }
}
