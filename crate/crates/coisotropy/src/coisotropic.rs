//! Coisotropic forms of projective varieties, coisotropy tests, and variety
//! recovery.
//!
//! The i-th coisotropic hypersurface of a k-dimensional X in P^n lives in
//! Gr(n-k+i-1, P^n) and consists of the subspaces meeting X non-transversely
//! at a smooth point. Its form is computed by eliminating the point
//! variables from an incidence ideal in a chart of the Grassmannian and
//! interpolating the result back into Plücker coordinates.

use itertools::Itertools;

use crate::error::{Error, Result};
use crate::grassmann::{plucker_form_from_composition, Chart, GrassmannRing};
use crate::groebner::normal_form;
use crate::ideal::Ideal;
use crate::matrix::{jacobian, PolyMatrix};
use crate::order::MonomialOrder;
use crate::poly::Polynomial;
use crate::ring::Ring;
use crate::variety::ProjectiveVariety;

/// A coisotropic form together with its provenance.
#[derive(Clone, Debug)]
pub struct CoisotropicForm {
    pub form: Polynomial,
    pub grassmann: GrassmannRing,
    pub index: usize,
    pub source_dim: isize,
    pub degree: u32,
}

/// Which ambient presentation carries the elimination.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum FormRoute {
    /// Affine chart of the Grassmannian (default; fewest variables).
    Chart,
    /// Full primal Stiefel coordinates.
    Stiefel,
}

/// Picks a coordinate x_j not vanishing identically on X, for
/// dehomogenizing the point factor of the incidence variety.
fn point_chart(x: &ProjectiveVariety) -> Result<usize> {
    for j in 0..=x.ambient() {
        let xj = Polynomial::var(x.ideal().ring(), j);
        if !x.ideal().radical_contains(&xj)? {
            return Ok(j);
        }
    }
    Err(Error::Precondition("variety is empty".into()))
}

/// Incidence generators with the point factor dehomogenized on x_j = 1 and
/// the subspace factor given by the matrix `a` over `combined`; the ring
/// layout is [x without x_j | matrix variables]. Dehomogenizing removes the
/// cone-origin junk that the irrelevant-ideal saturation would otherwise
/// have to eliminate.
fn incidence_generators(
    x: &ProjectiveVariety,
    i: usize,
    a: &PolyMatrix,
    combined: &std::sync::Arc<Ring>,
    chart_j: usize,
) -> Result<Vec<Polynomial>> {
    let n = x.ambient();
    // x_k -> combined var (skipping x_j, which maps to 1)
    let ximages: Vec<Polynomial> = (0..=n)
        .map(|k| {
            if k == chart_j {
                Polynomial::one(combined)
            } else {
                let pos = if k < chart_j { k } else { k - 1 };
                Polynomial::var(combined, pos)
            }
        })
        .collect();
    let dehom = |p: &Polynomial| p.substitute(combined, &ximages);
    let mut gens: Vec<Polynomial> = x.ideal().gens().iter().map(dehom).collect();
    // A x = 0: the subspace contains x
    for r in 0..a.rows() {
        let mut acc = Polynomial::zero(combined);
        for (c, img) in ximages.iter().enumerate() {
            acc = acc.add(&a.entry(r, c).mul(img));
        }
        gens.push(acc);
    }
    // dim(ker A ∩ T_x cone X) >= i+1: rank of A stacked on the Jacobian
    // drops to n-i
    if i >= 1 {
        let xpos: Vec<usize> = (0..=n).collect();
        let jac_x = jacobian(x.ideal().gens(), &xpos);
        let jac = PolyMatrix::new(
            jac_x.rows(),
            jac_x.cols(),
            (0..jac_x.rows())
                .flat_map(|r| (0..jac_x.cols()).map(move |c| (r, c)))
                .map(|(r, c)| dehom(jac_x.entry(r, c)))
                .collect(),
        );
        let stacked = a.stack(&jac);
        let size = n - i + 1;
        if size <= stacked.rows().min(stacked.cols()) {
            gens.extend(stacked.minors(size)?);
        }
    }
    Ok(gens)
}

/// Tangency only counts at smooth points: when X has a singular locus, the
/// incidence ideal is saturated by the dehomogenized singular-locus minors.
fn saturate_incidence(
    x: &ProjectiveVariety,
    i: usize,
    ideal: Ideal,
    combined: &std::sync::Arc<Ring>,
    chart_j: usize,
) -> Result<Ideal> {
    if i == 0 {
        return Ok(ideal);
    }
    if x.is_smooth()? {
        return Ok(ideal);
    }
    let n = x.ambient();
    let c = x.codim() as usize;
    let xpos: Vec<usize> = (0..=n).collect();
    let jac_x = jacobian(x.ideal().gens(), &xpos);
    if c == 0 || c > jac_x.rows().min(jac_x.cols()) {
        return Ok(ideal);
    }
    let ximages: Vec<Polynomial> = (0..=n)
        .map(|k| {
            if k == chart_j {
                Polynomial::one(combined)
            } else {
                let pos = if k < chart_j { k } else { k - 1 };
                Polynomial::var(combined, pos)
            }
        })
        .collect();
    let sing: Vec<Polynomial> = jac_x
        .minors(c)?
        .iter()
        .map(|m| m.substitute(combined, &ximages))
        .filter(|m| !m.is_zero())
        .map(|m| m.normalized())
        .dedup()
        .collect();
    ideal.saturate_by_ideal(&sing)
}

/// The index bound of the hypersurface range; errors when i exceeds it.
fn check_index_range(x: &ProjectiveVariety, i: usize) -> Result<()> {
    let s = x.hypersurface_index_range()?;
    if (i as isize) > s {
        return Err(Error::IndexOutOfRange { i: i as isize, max: s });
    }
    Ok(())
}

/// Computes the i-th coisotropic form of X in primal Plücker coordinates of
/// Gr(n-k+i-1, P^n), normalized to primitive integer coefficients, positive
/// leading coefficient, reduced modulo the Plücker relations.
pub fn coisotropic_form(x: &ProjectiveVariety, i: usize) -> Result<CoisotropicForm> {
    coisotropic_form_via(x, i, FormRoute::Chart)
}

pub fn coisotropic_form_via(
    x: &ProjectiveVariety,
    i: usize,
    route: FormRoute,
) -> Result<CoisotropicForm> {
    let k = x.dim();
    let n = x.ambient();
    if k < 0 {
        return Err(Error::Precondition("variety is empty".into()));
    }
    if (i as isize) > k {
        return Err(Error::IndexOutOfRange { i: i as isize, max: k });
    }
    check_index_range(x, i)?;
    let l = (n as isize - k + i as isize - 1) as usize;
    let gr = GrassmannRing::primal(l, n)?;
    let form = match route {
        FormRoute::Chart => chart_route_form(x, i, &gr)?,
        FormRoute::Stiefel => stiefel_route_form(x, i, &gr)?,
    };
    let form = form.normalized();
    let degree = form.degree();
    Ok(CoisotropicForm {
        form,
        grassmann: gr,
        index: i,
        source_dim: k,
        degree,
    })
}

/// The ring [x without x_j | matrix variables].
fn dehom_combined_ring(
    x_ring: &std::sync::Arc<Ring>,
    chart_j: usize,
    tail: &std::sync::Arc<Ring>,
) -> std::sync::Arc<Ring> {
    let mut names: Vec<String> = x_ring
        .var_names()
        .iter()
        .enumerate()
        .filter(|(k, _)| *k != chart_j)
        .map(|(_, s)| s.clone())
        .collect();
    names.extend(tail.var_names().iter().cloned());
    Ring::new(names)
}

fn eliminate_points(
    x: &ProjectiveVariety,
    i: usize,
    a: &PolyMatrix,
    combined: &std::sync::Arc<Ring>,
    chart_j: usize,
    npoint: usize,
) -> Result<Ideal> {
    let gens = incidence_generators(x, i, a, combined, chart_j)?;
    let raw = Ideal::new(combined, gens)?;
    let saturated = saturate_incidence(x, i, raw, combined, chart_j)?;
    let xpos: Vec<usize> = (0..npoint).collect();
    saturated.eliminate(&xpos)
}

fn chart_route_form(x: &ProjectiveVariety, i: usize, gr: &GrassmannRing) -> Result<Polynomial> {
    let n = x.ambient();
    let rows = gr.stiefel_rows();
    let chart_j = point_chart(x)?;
    let chart = gr.chart(&(0..rows).collect::<Vec<_>>())?;
    let combined = dehom_combined_ring(x.ideal().ring(), chart_j, chart.ring());
    // chart matrix moved into the combined ring
    let offset = n; // n point variables remain after dehomogenizing
    let amap: Vec<usize> = (0..chart.ring().nvars()).map(|v| v + offset).collect();
    let cm = chart.matrix(gr);
    let a = PolyMatrix::new(
        cm.rows(),
        cm.cols(),
        (0..cm.rows())
            .flat_map(|r| (0..cm.cols()).map(move |c| (r, c)))
            .map(|(r, c)| cm.entry(r, c).map_vars(&combined, &amap))
            .collect(),
    );
    let eliminated = eliminate_points(x, i, &a, &combined, chart_j, n)?;
    if eliminated.is_unit()? {
        // the hypersurface misses the chart entirely: it is the vanishing of
        // the chart coordinate itself
        return gr.var(chart.indices());
    }
    let gens = eliminated.gens();
    if gens.len() != 1 {
        return Err(Error::NotPrincipal(gens.len()));
    }
    let g = gens[0].into_ring(chart.ring())?;
    plucker_form_from_composition(gr, &chart.images(gr), &g, None)
}

fn stiefel_route_form(x: &ProjectiveVariety, i: usize, gr: &GrassmannRing) -> Result<Polynomial> {
    let n = x.ambient();
    let sring = gr.stiefel_ring();
    let chart_j = point_chart(x)?;
    let combined = dehom_combined_ring(x.ideal().ring(), chart_j, &sring);
    let offset = n;
    let amap: Vec<usize> = (0..sring.nvars()).map(|v| v + offset).collect();
    let sm = gr.stiefel_matrix();
    let a = PolyMatrix::new(
        sm.rows(),
        sm.cols(),
        (0..sm.rows())
            .flat_map(|r| (0..sm.cols()).map(move |c| (r, c)))
            .map(|(r, c)| sm.entry(r, c).map_vars(&combined, &amap))
            .collect(),
    );
    let eliminated = eliminate_points(x, i, &a, &combined, chart_j, n)?;
    let gens = eliminated.gens();
    if gens.len() != 1 {
        return Err(Error::NotPrincipal(gens.len()));
    }
    let g = gens[0].into_ring(&sring)?;
    crate::grassmann::stiefel_to_plucker(&g, gr)
}

/// Cross-check route through the dual variety: the i-th form of X is the
/// (s-i)-th form of the dual, transported by the coordinate change.
pub fn coisotropic_form_dual_route(x: &ProjectiveVariety, i: usize) -> Result<CoisotropicForm> {
    let s = x.hypersurface_index_range()?;
    if (i as isize) > s {
        return Err(Error::IndexOutOfRange { i: i as isize, max: s });
    }
    let xd = x.dual_variety()?;
    let j = (s - i as isize) as usize;
    let fd = coisotropic_form(&xd, j)?;
    // primal form of CH_j(X^dual-star) in Gr(n-l-1) transports verbatim to
    // the dual form on Gr(l), and the coordinate change brings it to primal
    let dualized = fd.grassmann.primal_to_dual(&fd.form)?;
    let n = x.ambient();
    let l = fd.grassmann.n() - fd.grassmann.l() - 1;
    let gr = GrassmannRing::primal(l, n)?;
    let dual_of_target = gr.opposite();
    let transported = dual_of_target.transfer(&dualized, &gr)?;
    // careful: "dualized" lives on the dual ring of Gr(n-l-1) whose index
    // size matches the primal ring of Gr(l); transfer is the verbatim rename
    let form = gr.reduce_mod_relations(&transported)?;
    let degree = form.degree();
    Ok(CoisotropicForm {
        form,
        grassmann: gr,
        index: i,
        source_dim: x.dim(),
        degree,
    })
}

/// Equality of the direct and dual-route forms, up to normalization.
pub fn duality_check(x: &ProjectiveVariety, i: usize) -> Result<bool> {
    let direct = coisotropic_form(x, i)?;
    let via_dual = coisotropic_form_dual_route(x, i)?;
    Ok(direct.form == via_dual.form)
}

/// Selects the lexicographically first chart whose coordinate does not
/// divide q.
fn select_chart(gr: &GrassmannRing, q: &Polynomial) -> Result<(usize, Chart)> {
    for (v, t) in gr.tuples().iter().enumerate() {
        if !q.divisible_by_var(v) {
            return Ok((v, gr.chart(t)?));
        }
    }
    Err(Error::Precondition(
        "polynomial is divisible by every Pluecker coordinate; it cannot be irreducible".into(),
    ))
}

fn validate_form_input(q: &Polynomial, gr: &GrassmannRing) -> Result<()> {
    if q.is_zero() {
        return Err(Error::ZeroDivisor);
    }
    if !crate::ring::same_ring(q.ring(), gr.ring()) {
        return Err(Error::RingMismatch);
    }
    if !q.is_homogeneous() {
        return Err(Error::NonHomogeneous);
    }
    Ok(())
}

/// Radical membership in a principal ideal: divisibility settles it for
/// squarefree generators; otherwise fall back to the Rabinowitsch test.
fn radical_member_principal(f: &Polynomial, g: &Polynomial) -> Result<bool> {
    if f.is_zero() {
        return Ok(true);
    }
    if g.is_zero() {
        return Ok(false);
    }
    if normal_form(f, &[g.clone()], MonomialOrder::DegRevLex)?.is_zero() {
        return Ok(true);
    }
    Ideal::new(g.ring(), vec![g.clone()])?.radical_contains(f)
}

/// Rank-one test in an affine chart: Q is coisotropic iff the 2x2 minors of
/// the Jacobian of Q∘rho vanish on V(Q∘rho).
///
/// Q must be homogeneous in primal Plücker coordinates of Gr(l, P^n) and is
/// assumed irreducible modulo the Plücker relations; irreducibility is the
/// caller's responsibility and is not verified here.
pub fn is_coisotropic(q: &Polynomial, l: usize, n: usize) -> Result<bool> {
    let gr = GrassmannRing::primal(l, n)?;
    validate_form_input(q, &gr)?;
    // a single Plücker coordinate is the Chow form of a coordinate subspace
    if q.num_terms() == 1 && q.terms()[0].0.degree() == 1 {
        return Ok(true);
    }
    let (_, chart) = select_chart(&gr, q)?;
    let f = chart.compose(&gr, q);
    let rows = gr.stiefel_rows();
    let cols = n + 1 - rows;
    if rows < 2 || cols < 2 {
        // the Jacobian has a single row or column; rank is at most one
        return Ok(true);
    }
    let jac = jacobian_of_chart(&f, rows, cols);
    for minor in jac.minors(2)? {
        if !radical_member_principal(&minor, &f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

fn jacobian_of_chart(f: &Polynomial, rows: usize, cols: usize) -> PolyMatrix {
    let vars: Vec<usize> = (0..rows * cols).collect();
    let j = jacobian(&[f.clone()], &vars);
    // reshape the single row into the (rows x cols) layout of the chart
    PolyMatrix::new(
        rows,
        cols,
        (0..rows * cols).map(|v| j.entry(0, v).clone()).collect(),
    )
}

/// Stiefel-coordinate variant of the rank-one test; requires l >= 1.
pub fn is_coisotropic_stiefel(q: &Polynomial, l: usize, n: usize) -> Result<bool> {
    if l < 1 {
        return Err(Error::Precondition(
            "the Stiefel characterization requires l >= 1".into(),
        ));
    }
    let gr = GrassmannRing::primal(l, n)?;
    validate_form_input(q, &gr)?;
    if q.num_terms() == 1 && q.terms()[0].0.degree() == 1 {
        return Ok(true);
    }
    let a = gr.stiefel_matrix();
    let f = gr.compose_pl(q, &a)?;
    let rows = gr.stiefel_rows();
    let cols = n + 1;
    let jac = jacobian_of_chart(&f, rows, cols);
    for minor in jac.minors(2)? {
        if !radical_member_principal(&minor, &f)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The result of recovering the underlying variety of a coisotropic
/// hypersurface.
#[derive(Clone, Debug)]
pub struct RecoveredVariety {
    /// Ideal of X in the coordinates y_0..y_n.
    pub ideal: Ideal,
    /// dim X + l + 1 - n: which coisotropic hypersurface of X the input was.
    pub index: isize,
    pub dim: isize,
    pub degree: u64,
}

/// Recovers the projective variety underlying a coisotropic hypersurface.
///
/// For coisotropic Q the Jacobian of Q∘pl has rank at most one everywhere on
/// V(Q∘pl), and the projective point spanning its row space sweeps out X. A
/// nonzero row of the Jacobian in a chart therefore parametrizes the affine
/// cone over X, and the graph ideal <Q∘rho, y_c - t J_c> eliminates to I(X)
/// directly. The input is assumed coisotropic (run `is_coisotropic` first
/// when in doubt).
pub fn recover_variety(q: &Polynomial, l: usize, n: usize) -> Result<RecoveredVariety> {
    let gr = GrassmannRing::primal(l, n)?;
    validate_form_input(q, &gr)?;
    let (_, chart) = select_chart(&gr, q)?;
    let chart_ring = chart.ring().clone();
    let rows = gr.stiefel_rows();

    // J_{Q∘pl} evaluated at the chart matrix: expand over the full Stiefel
    // matrix, differentiate, then pin the chart columns
    let sm = gr.stiefel_matrix();
    let sring = sm.ring().clone();
    let f_full = gr.compose_pl(q, &sm)?;
    let chart_images: Vec<Polynomial> = {
        let cm = chart.matrix(&gr);
        let mut images = Vec::with_capacity(sring.nvars());
        for r in 0..rows {
            for c in 0..=n {
                images.push(cm.entry(r, c).clone());
            }
        }
        images
    };
    let f_chart = chart.compose(&gr, q);
    let mut jac_rows: Vec<Vec<Polynomial>> = Vec::with_capacity(rows);
    for r in 0..rows {
        let mut row = Vec::with_capacity(n + 1);
        for c in 0..=n {
            let d = f_full.derivative(r * (n + 1) + c);
            row.push(d.substitute(&chart_ring, &chart_images));
        }
        jac_rows.push(row);
    }
    // pick a row that does not vanish identically on V(Q∘rho)
    let row = jac_rows
        .drain(..)
        .find(|row| {
            row.iter().any(|e| {
                !e.is_zero()
                    && !normal_form(e, &[f_chart.clone()], MonomialOrder::DegRevLex)
                        .map(|r| r.is_zero())
                        .unwrap_or(true)
            })
        })
        .ok_or_else(|| {
            Error::Precondition(
                "the Jacobian vanishes identically on the hypersurface; nothing to recover".into(),
            )
        })?;

    // graph ring [chart vars, t | y_0..y_n]
    let nchart = chart_ring.nvars();
    let combined = {
        let mut names = chart_ring.var_names().to_vec();
        names.push("@t".into());
        names.extend((0..=n).map(|i| format!("y{i}")));
        Ring::new(names)
    };
    let cmap: Vec<usize> = (0..nchart).collect();
    let t = Polynomial::var(&combined, nchart);
    let mut gens = vec![f_chart.map_vars(&combined, &cmap)];
    for (c, entry) in row.iter().enumerate() {
        let yc = Polynomial::var(&combined, nchart + 1 + c);
        gens.push(yc.sub(&t.mul(&entry.map_vars(&combined, &cmap))));
    }
    let graph = Ideal::new(&combined, gens)?;
    let front: Vec<usize> = (0..=nchart).collect();
    let eliminated = graph.eliminate(&front)?;
    if eliminated.is_unit()? {
        return Err(Error::Precondition(
            "recovery produced the unit ideal; the input is not coisotropic".into(),
        ));
    }
    let (dim, degree) = eliminated.dimension_degree()?;
    let index = dim + l as isize + 1 - n as isize;
    Ok(RecoveredVariety {
        ideal: eliminated,
        index,
        dim,
        degree,
    })
}

/// Convenience: the recovered ideal renamed into x-coordinates as a variety.
pub fn recovered_as_variety(rec: &RecoveredVariety, n: usize) -> Result<ProjectiveVariety> {
    let xring = Ring::projective(n);
    ProjectiveVariety::new(rec.ideal.rename(&xring)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::{bezout_determinant, fermat_cubic, segre_quadric,
        segre_quadric_hurwitz, twisted_cubic};

    #[test]
    fn chow_form_of_twisted_cubic_is_bezout_det() {
        let x = twisted_cubic();
        let cf = coisotropic_form(&x, 0).unwrap();
        assert_eq!(cf.degree, 3);
        assert_eq!(cf.index, 0);
        let gr = &cf.grassmann;
        let expected = gr.reduce_mod_relations(&bezout_determinant(gr)).unwrap();
        assert_eq!(cf.form, expected);
    }

    #[test]
    fn hurwitz_form_of_segre_quadric() {
        let x = segre_quadric();
        let cf = coisotropic_form(&x, 1).unwrap();
        assert_eq!(cf.degree, 2);
        let gr = &cf.grassmann;
        let expected = gr.reduce_mod_relations(&segre_quadric_hurwitz(gr)).unwrap();
        assert_eq!(cf.form, expected);
    }

    #[test]
    fn chow_form_of_fermat_is_fermat_in_dual_coords() {
        let x = fermat_cubic();
        let cf = coisotropic_form(&x, 0).unwrap();
        assert_eq!(cf.degree, 3);
        // the form lives in Gr(0, P3); in dual coordinates it is the Fermat
        // cubic itself
        let dual = cf.grassmann.primal_to_dual(&cf.form).unwrap();
        let dring = dual.ring().clone();
        let qv = |i: usize| Polynomial::var(&dring, i);
        let expect = qv(0)
            .pow(3)
            .add(&qv(1).pow(3))
            .add(&qv(2).pow(3))
            .add(&qv(3).pow(3));
        assert_eq!(dual.normalized(), expect.normalized());
    }

    #[test]
    fn segre_chow_form_index_zero() {
        // CH_0 of the Segre quadric lives in Gr(0, P3): points on the
        // quadric; the form is the quadric itself in primal coordinates
        let x = segre_quadric();
        let cf = coisotropic_form(&x, 0).unwrap();
        assert_eq!(cf.degree, 2);
        assert_eq!(cf.grassmann.l(), 0);
    }

    #[test]
    fn segre_second_form_via_duality_is_quadric_again() {
        let x = segre_quadric();
        let cf = coisotropic_form(&x, 2).unwrap();
        assert_eq!(cf.degree, 2);
        assert_eq!(cf.grassmann.l(), 2);
    }

    #[test]
    fn out_of_range_index_cites_bound() {
        let x = twisted_cubic();
        match coisotropic_form(&x, 2) {
            Err(Error::IndexOutOfRange { i: 2, max: 1 }) => {}
            other => panic!("expected range error, got {other:?}"),
        }
    }

    #[test]
    fn coisotropy_of_bezout_det() {
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let q = bezout_determinant(&gr);
        assert!(is_coisotropic(&q, 1, 3).unwrap());
        assert!(is_coisotropic_stiefel(&q, 1, 3).unwrap());
    }

    #[test]
    fn coisotropy_of_segre_hurwitz() {
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let q = segre_quadric_hurwitz(&gr);
        assert!(is_coisotropic(&q, 1, 3).unwrap());
        assert!(is_coisotropic_stiefel(&q, 1, 3).unwrap());
    }

    #[test]
    fn single_coordinate_is_coisotropic() {
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let q = gr.var(&[0, 1]).unwrap();
        assert!(is_coisotropic(&q, 1, 3).unwrap());
    }

    #[test]
    fn sum_of_two_coordinates_is_not_coisotropic() {
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let q = gr.var(&[0, 1]).unwrap().add(&gr.var(&[2, 3]).unwrap());
        assert!(!is_coisotropic(&q, 1, 3).unwrap());
        assert!(!is_coisotropic_stiefel(&q, 1, 3).unwrap());
    }

    #[test]
    fn everything_in_gr0_is_coisotropic() {
        let gr = GrassmannRing::primal(0, 3).unwrap();
        // an arbitrary quartic in the four coordinates of Gr(0, P3)
        let q = Polynomial::var(gr.ring(), 0)
            .pow(4)
            .add(&Polynomial::var(gr.ring(), 2).pow(4));
        assert!(is_coisotropic(&q, 0, 3).unwrap());
    }

    #[test]
    fn recover_segre_from_hurwitz() {
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let q = segre_quadric_hurwitz(&gr);
        let rec = recover_variety(&q, 1, 3).unwrap();
        assert_eq!(rec.index, 1);
        let yring = rec.ideal.ring().clone();
        let yv = |i: usize| Polynomial::var(&yring, i);
        let expect = yv(0).mul(&yv(3)).sub(&yv(1).mul(&yv(2)));
        let expected_ideal = Ideal::new(&yring, vec![expect]).unwrap();
        assert!(rec.ideal.equals(&expected_ideal).unwrap());
    }

    #[test]
    fn recover_twisted_cubic_from_bezout() {
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let q = bezout_determinant(&gr);
        let rec = recover_variety(&q, 1, 3).unwrap();
        assert_eq!(rec.index, 0);
        assert_eq!((rec.dim, rec.degree), (1, 3));
        let x = twisted_cubic();
        let recovered = recovered_as_variety(&rec, 3).unwrap();
        assert!(crate::variety::mutual_radical_membership(
            x.ideal(),
            recovered.ideal()
        )
        .unwrap());
    }

    #[test]
    fn duality_check_segre() {
        let x = segre_quadric();
        assert!(duality_check(&x, 1).unwrap());
    }
}
