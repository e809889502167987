//! Coordinate systems on the Grassmannian Gr(l, P^n).
//!
//! Primal Plücker coordinates p_I (|I| = n-l) are the maximal minors of an
//! (n-l) x (n+1) matrix whose kernel is the subspace; dual coordinates q_J
//! (|J| = l+1) are the maximal minors of an (l+1) x (n+1) matrix whose row
//! space is the subspace. The primal/dual change of coordinates is
//! q_J = s(I) p_I with I the complement of J and s the sign of the
//! concatenated permutation.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use itertools::Itertools;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, normal_form};
use crate::matrix::PolyMatrix;
use crate::modsolve::{solve_exact, SolveOutcome};
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial};
use crate::ring::Ring;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Convention {
    Primal,
    Dual,
}

#[derive(Clone, Debug)]
pub struct GrassmannRing {
    l: usize,
    n: usize,
    convention: Convention,
    ring: Arc<Ring>,
    tuples: Vec<Vec<usize>>,
}

/// Sign of the permutation (i_1..i_r, j_1..j_s) of {0..n}; both tuples must
/// be strictly increasing and partition {0..n}.
pub fn permutation_sign(i: &[usize], j: &[usize], n: usize) -> Result<i32> {
    let mut seen = vec![false; n + 1];
    let concat: Vec<usize> = i.iter().chain(j.iter()).copied().collect();
    if concat.len() != n + 1 {
        return Err(Error::BadIndices(format!(
            "expected {} indices, got {}",
            n + 1,
            concat.len()
        )));
    }
    for w in [i, j] {
        for pair in w.windows(2) {
            if pair[0] >= pair[1] {
                return Err(Error::BadIndices("tuple not strictly increasing".into()));
            }
        }
    }
    for &v in &concat {
        if v > n || seen[v] {
            return Err(Error::BadIndices(format!("index {v} repeated or out of range")));
        }
        seen[v] = true;
    }
    let mut inversions = 0usize;
    for a in 0..concat.len() {
        for b in (a + 1)..concat.len() {
            if concat[a] > concat[b] {
                inversions += 1;
            }
        }
    }
    Ok(if inversions % 2 == 0 { 1 } else { -1 })
}

impl GrassmannRing {
    pub fn new(l: usize, n: usize, convention: Convention) -> Result<GrassmannRing> {
        if n == 0 || l > n - 1 {
            return Err(Error::BadIndices(format!("Gr({l}, P^{n}) is not a valid Grassmannian")));
        }
        let size = match convention {
            Convention::Primal => n - l,
            Convention::Dual => l + 1,
        };
        let sym = match convention {
            Convention::Primal => 'p',
            Convention::Dual => 'q',
        };
        let tuples: Vec<Vec<usize>> = (0..=n).combinations(size).collect();
        let names: Vec<String> = tuples.iter().map(|t| var_name(sym, t)).collect();
        Ok(GrassmannRing {
            l,
            n,
            convention,
            ring: Ring::new(names),
            tuples,
        })
    }

    pub fn primal(l: usize, n: usize) -> Result<GrassmannRing> {
        GrassmannRing::new(l, n, Convention::Primal)
    }

    pub fn dual(l: usize, n: usize) -> Result<GrassmannRing> {
        GrassmannRing::new(l, n, Convention::Dual)
    }

    pub fn l(&self) -> usize {
        self.l
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn convention(&self) -> Convention {
        self.convention
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn nvars(&self) -> usize {
        self.tuples.len()
    }

    /// Number of indices per Plücker symbol.
    pub fn index_size(&self) -> usize {
        match self.convention {
            Convention::Primal => self.n - self.l,
            Convention::Dual => self.l + 1,
        }
    }

    pub fn tuples(&self) -> &[Vec<usize>] {
        &self.tuples
    }

    pub fn tuple(&self, var: usize) -> &[usize] {
        &self.tuples[var]
    }

    pub fn var_of_tuple(&self, t: &[usize]) -> Option<usize> {
        self.tuples.iter().position(|u| u == t)
    }

    pub fn var(&self, t: &[usize]) -> Result<Polynomial> {
        self.var_of_tuple(t)
            .map(|i| Polynomial::var(&self.ring, i))
            .ok_or_else(|| Error::BadIndices(format!("{t:?} is not a coordinate tuple")))
    }

    /// The number of rows of the Stiefel presentation matrix.
    pub fn stiefel_rows(&self) -> usize {
        self.index_size()
    }

    fn complement(&self, t: &[usize]) -> Vec<usize> {
        (0..=self.n).filter(|v| !t.contains(v)).collect()
    }

    /// The Grassmann ring of the opposite convention on the same Gr(l, P^n).
    pub fn opposite(&self) -> GrassmannRing {
        let conv = match self.convention {
            Convention::Primal => Convention::Dual,
            Convention::Dual => Convention::Primal,
        };
        GrassmannRing::new(self.l, self.n, conv).expect("valid parameters")
    }

    fn convert(&self, f: &Polynomial, expect: Convention) -> Result<Polynomial> {
        if self.convention != expect || !crate::ring::same_ring(f.ring(), &self.ring) {
            return Err(Error::WrongConvention);
        }
        let target = self.opposite();
        let signs: Vec<i32> = self
            .tuples
            .iter()
            .map(|t| {
                let c = self.complement(t);
                let (i, j) = match self.convention {
                    Convention::Primal => (t.as_slice(), c.as_slice()),
                    Convention::Dual => (c.as_slice(), t.as_slice()),
                };
                permutation_sign(i, j, self.n).expect("valid partition")
            })
            .collect();
        let var_map: Vec<usize> = self
            .tuples
            .iter()
            .map(|t| target.var_of_tuple(&self.complement(t)).expect("complement tuple"))
            .collect();
        let terms = f
            .terms()
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; target.nvars()];
                let mut coeff = c.clone();
                for (v, &e) in m.exps().iter().enumerate() {
                    if e == 0 {
                        continue;
                    }
                    exps[var_map[v]] = e;
                    if signs[v] < 0 && e % 2 == 1 {
                        coeff = -coeff;
                    }
                }
                (Monomial::new(exps), coeff)
            })
            .collect();
        Ok(Polynomial::from_terms(target.ring(), terms))
    }

    /// Substitutes p_I -> s(I) q_J (Eq. of the coordinate change); input must
    /// be primal.
    pub fn primal_to_dual(&self, f: &Polynomial) -> Result<Polynomial> {
        self.convert(f, Convention::Primal)
    }

    /// Inverse substitution q_J -> s(I) p_I; input must be dual.
    pub fn dual_to_primal(&self, f: &Polynomial) -> Result<Polynomial> {
        self.convert(f, Convention::Dual)
    }

    /// Moves a polynomial verbatim (no signs) onto another Grassmann ring
    /// with the same ambient dimension and index size. This realizes the
    /// identification "primal coordinates of Gr(l) = dual coordinates of
    /// Gr(n-l-1)".
    pub fn transfer(&self, f: &Polynomial, target: &GrassmannRing) -> Result<Polynomial> {
        if self.n != target.n || self.index_size() != target.index_size() {
            return Err(Error::WrongConvention);
        }
        let map: Vec<usize> = (0..self.nvars()).collect();
        Ok(f.map_vars(target.ring(), &map))
    }

    /// The quadratic exchange relations generating the Plücker ideal, in the
    /// variables of this ring. Empty for index size 1 or n.
    pub fn plucker_relations(&self) -> Vec<Polynomial> {
        let m = self.index_size();
        let n = self.n;
        if m <= 1 || m >= n + 1 {
            return Vec::new();
        }
        let mut rels: Vec<Polynomial> = Vec::new();
        for alpha in (0..=n).combinations(m - 1) {
            for beta in (0..=n).combinations(m + 1) {
                let mut terms: Vec<(Monomial, BigRational)> = Vec::new();
                for (t, &b) in beta.iter().enumerate() {
                    if alpha.contains(&b) {
                        continue;
                    }
                    // sign of sorting b into alpha
                    let bigger = alpha.iter().filter(|&&a| a > b).count();
                    let mut left = alpha.clone();
                    left.push(b);
                    left.sort_unstable();
                    let right: Vec<usize> = beta
                        .iter()
                        .enumerate()
                        .filter(|(s, _)| *s != t)
                        .map(|(_, &v)| v)
                        .collect();
                    let vl = self.var_of_tuple(&left).unwrap();
                    let vr = self.var_of_tuple(&right).unwrap();
                    let mut exps = vec![0u32; self.nvars()];
                    exps[vl] += 1;
                    exps[vr] += 1;
                    let sign = if (t + bigger) % 2 == 0 { 1 } else { -1 };
                    terms.push((Monomial::new(exps), BigRational::from_integer(sign.into())));
                }
                let rel = Polynomial::from_terms(&self.ring, terms).normalized();
                if !rel.is_zero() && !rels.contains(&rel) {
                    rels.push(rel);
                }
            }
        }
        rels.sort_by(|a, b| {
            MonomialOrder::DegRevLex.cmp(
                a.leading_term(MonomialOrder::DegRevLex).unwrap().0,
                b.leading_term(MonomialOrder::DegRevLex).unwrap().0,
            )
        });
        rels
    }

    /// Cached reduced Gröbner basis of the Plücker relation ideal.
    pub fn relations_groebner(&self) -> Result<Arc<Vec<Polynomial>>> {
        static CACHE: OnceLock<Mutex<HashMap<(usize, usize, Convention), Arc<Vec<Polynomial>>>>> =
            OnceLock::new();
        let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
        let key = (self.l, self.n, self.convention);
        if let Some(gb) = cache.lock().unwrap().get(&key) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger(&self.plucker_relations(), MonomialOrder::DegRevLex)?);
        cache.lock().unwrap().insert(key, gb.clone());
        Ok(gb)
    }

    /// Canonical representative modulo the Plücker relations: reduced by the
    /// degrevlex basis of the relation ideal and scalar-normalized.
    pub fn reduce_mod_relations(&self, f: &Polynomial) -> Result<Polynomial> {
        let gb = self.relations_groebner()?;
        Ok(normal_form(f, &gb, MonomialOrder::DegRevLex)?.normalized())
    }

    /// The generic Stiefel matrix of this presentation: index_size rows and
    /// n+1 columns of fresh variables a_{r,c} (1-based).
    pub fn stiefel_ring(&self) -> Arc<Ring> {
        let rows = self.stiefel_rows();
        let mut names = Vec::with_capacity(rows * (self.n + 1));
        for r in 1..=rows {
            for c in 1..=(self.n + 1) {
                names.push(format!("a_{{{r},{c}}}"));
            }
        }
        Ring::new(names)
    }

    pub fn stiefel_matrix(&self) -> PolyMatrix {
        let ring = self.stiefel_ring();
        let rows = self.stiefel_rows();
        let entries = (0..rows * (self.n + 1))
            .map(|i| Polynomial::var(&ring, i))
            .collect();
        PolyMatrix::new(rows, self.n + 1, entries)
    }

    /// Images of the Plücker variables under pl: the maximal minors of `a`,
    /// aligned with the variable order of this ring.
    pub fn pl_images(&self, a: &PolyMatrix) -> Result<Vec<Polynomial>> {
        if a.rows() != self.stiefel_rows() || a.cols() != self.n + 1 {
            return Err(Error::BadIndices(format!(
                "matrix shape {}x{} does not fit Gr({}, P^{}) with {} Stiefel rows",
                a.rows(),
                a.cols(),
                self.l,
                self.n,
                self.stiefel_rows()
            )));
        }
        let rset: Vec<usize> = (0..a.rows()).collect();
        Ok(self
            .tuples
            .iter()
            .map(|t| a.minor(&rset, t))
            .collect())
    }

    /// Q ∘ pl for an arbitrary Stiefel-shaped matrix.
    pub fn compose_pl(&self, q: &Polynomial, a: &PolyMatrix) -> Result<Polynomial> {
        let images = self.pl_images(a)?;
        Ok(q.substitute(a.ring(), &images))
    }

    pub fn chart(&self, indices: &[usize]) -> Result<Chart> {
        Chart::new(self, indices)
    }
}

fn var_name(sym: char, t: &[usize]) -> String {
    format!("{sym}_{{{}}}", t.iter().map(|i| i.to_string()).join(","))
}

/// A coordinate chart of the Grassmannian: the Stiefel matrix with identity
/// columns at `indices` and free entries elsewhere.
#[derive(Clone, Debug)]
pub struct Chart {
    indices: Vec<usize>,
    ring: Arc<Ring>,
    /// (row, col) of each free variable, row-major.
    free: Vec<(usize, usize)>,
}

impl Chart {
    pub fn new(gr: &GrassmannRing, indices: &[usize]) -> Result<Chart> {
        let rows = gr.stiefel_rows();
        if indices.len() != rows
            || indices.windows(2).any(|w| w[0] >= w[1])
            || indices.iter().any(|&i| i > gr.n())
        {
            return Err(Error::BadIndices(format!("invalid chart {indices:?}")));
        }
        let mut names = Vec::new();
        let mut free = Vec::new();
        for r in 0..rows {
            for c in 0..=gr.n() {
                if !indices.contains(&c) {
                    names.push(format!("a_{{{},{}}}", r + 1, c + 1));
                    free.push((r, c));
                }
            }
        }
        Ok(Chart {
            indices: indices.to_vec(),
            ring: Ring::new(names),
            free,
        })
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn free_positions(&self) -> &[(usize, usize)] {
        &self.free
    }

    /// The chart matrix over the chart ring: identity columns at the chart
    /// indices, free variables elsewhere.
    pub fn matrix(&self, gr: &GrassmannRing) -> PolyMatrix {
        let rows = gr.stiefel_rows();
        let mut m = PolyMatrix::zero(&self.ring, rows, gr.n() + 1);
        for (j, &c) in self.indices.iter().enumerate() {
            m.set(j, c, Polynomial::one(&self.ring));
        }
        for (v, &(r, c)) in self.free.iter().enumerate() {
            m.set(r, c, Polynomial::var(&self.ring, v));
        }
        m
    }

    /// Images of the Plücker variables in the chart (the map rho).
    pub fn images(&self, gr: &GrassmannRing) -> Vec<Polynomial> {
        gr.pl_images(&self.matrix(gr)).expect("chart matrix fits")
    }

    /// Q ∘ rho: the equation of the hypersurface in this affine chart.
    pub fn compose(&self, gr: &GrassmannRing, q: &Polynomial) -> Polynomial {
        q.substitute(&self.ring, &self.images(gr))
    }
}

/// Deterministic small-integer sample sequence for interpolation matrices.
fn sample_value(k: u64, j: u64) -> i64 {
    let mut x = k
        .wrapping_mul(0x9e3779b97f4a7c15)
        .wrapping_add(j.wrapping_mul(0xbf58476d1ce4e5b9))
        .wrapping_add(0x94d049bb133111eb);
    x ^= x >> 30;
    x = x.wrapping_mul(0xbf58476d1ce4e5b9);
    x ^= x >> 27;
    ((x % 19) as i64) - 9
}

fn monomials_of_degree(nvars: usize, d: u32) -> Vec<Monomial> {
    fn rec(nvars: usize, pos: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if pos == nvars - 1 {
            cur.push(left);
            out.push(Monomial::new(cur.clone()));
            cur.pop();
            return;
        }
        for e in (0..=left).rev() {
            cur.push(e);
            rec(nvars, pos + 1, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if nvars == 0 {
        return out;
    }
    rec(nvars, 0, d, &mut Vec::new(), &mut out);
    out
}

fn eval_images_at(
    images: &[Polynomial],
    base_nvars: usize,
    k: u64,
) -> (Vec<BigRational>, Vec<BigRational>) {
    let assignment: Vec<BigRational> = (0..base_nvars)
        .map(|j| BigRational::from_integer(BigInt::from(sample_value(k, j as u64))))
        .collect();
    let values = images.iter().map(|im| im.eval(&assignment)).collect();
    (assignment, values)
}

/// Interpolates a Plücker form Q with Q(images) = target, where `images`
/// give the Plücker coordinates as polynomials in the variables of
/// `target`'s ring (a chart or the full Stiefel matrix).
///
/// With `degree, None` the minimal consistent degree is searched. The
/// returned form is reduced modulo the Plücker relations, and the identity
/// Q(images) = target is re-verified symbolically, so the answer is exact.
pub fn plucker_form_from_composition(
    gr: &GrassmannRing,
    images: &[Polynomial],
    target: &Polynomial,
    degree: Option<u32>,
) -> Result<Polynomial> {
    if target.is_zero() {
        return Ok(Polynomial::zero(gr.ring()));
    }
    let base_nvars = target.ring().nvars();
    let degrees: Vec<u32> = match degree {
        Some(d) => vec![d],
        None => (1..=40).collect(),
    };
    for d in degrees {
        crate::groebner::deadline::check("Pluecker interpolation")?;
        let monomials = monomials_of_degree(gr.nvars(), d);
        if monomials.len() > 5000 {
            return Err(Error::TooLarge(format!(
                "interpolation would need {} monomials at degree {d}",
                monomials.len()
            )));
        }
        for attempt in 0..2 {
            let nsamples = monomials.len() + 24 + attempt * monomials.len();
            let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(nsamples);
            let mut rhs_rat: Vec<BigRational> = Vec::with_capacity(nsamples);
            for k in 0..nsamples {
                let seed = (attempt * 1_000_003 + k) as u64;
                let (assignment, values) = eval_images_at(images, base_nvars, seed);
                let row: Vec<BigInt> = monomials
                    .iter()
                    .map(|m| {
                        let mut acc = BigRational::one();
                        for (v, &e) in m.exps().iter().enumerate() {
                            for _ in 0..e {
                                acc *= &values[v];
                            }
                        }
                        debug_assert!(acc.is_integer());
                        acc.to_integer()
                    })
                    .collect();
                rows.push(row);
                rhs_rat.push(target.eval(&assignment));
            }
            // clear denominators of the right-hand side
            let mut den = BigInt::one();
            for v in &rhs_rat {
                den = num_integer::lcm(den.clone(), v.denom().clone());
            }
            let scale = BigRational::from_integer(den.clone());
            let rhs: Vec<BigInt> = rhs_rat.iter().map(|v| (v * &scale).to_integer()).collect();
            match solve_exact(&rows, &rhs)? {
                SolveOutcome::Inconsistent => break, // try next degree
                SolveOutcome::Solution(c) => {
                    let inv = BigRational::from_integer(den.clone()).recip();
                    let terms: Vec<(Monomial, BigRational)> = monomials
                        .iter()
                        .zip(&c)
                        .filter(|(_, c)| !c.is_zero())
                        .map(|(m, c)| (m.clone(), c * &inv))
                        .collect();
                    let q = Polynomial::from_terms(gr.ring(), terms);
                    let q = {
                        // reduce modulo relations without changing Q ∘ pl
                        let gb = gr.relations_groebner()?;
                        normal_form(&q, &gb, MonomialOrder::DegRevLex)?
                    };
                    let composed = q.substitute(target.ring(), images);
                    if composed == *target {
                        return Ok(q);
                    }
                    // undersampled: retry this degree with more samples
                }
            }
        }
    }
    Err(Error::Inconsistent(
        "no Pluecker form reproduces the target composition".into(),
    ))
}

/// Rewrites a polynomial in Stiefel entries as a Plücker polynomial:
/// returns Q with Q ∘ pl = f, canonical modulo the Plücker relations.
pub fn stiefel_to_plucker(f: &Polynomial, gr: &GrassmannRing) -> Result<Polynomial> {
    if f.is_zero() {
        return Ok(Polynomial::zero(gr.ring()));
    }
    let rows = gr.stiefel_rows();
    let stiefel = gr.stiefel_matrix();
    if !crate::ring::same_ring(f.ring(), stiefel.ring()) {
        return Err(Error::RingMismatch);
    }
    let Some(total) = f.homogeneous_degree() else {
        return Err(Error::Inconsistent("input is not homogeneous".into()));
    };
    if total % rows as u32 != 0 {
        return Err(Error::Inconsistent(format!(
            "degree {total} is not a multiple of the row count {rows}"
        )));
    }
    let d = total / rows as u32;
    let images = gr.pl_images(&stiefel)?;
    plucker_form_from_composition(gr, &images, f, Some(d))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::ToPrimitive;

    #[test]
    fn permutation_signs_match_displayed_examples() {
        assert_eq!(permutation_sign(&[0, 1], &[2, 3], 3).unwrap(), 1);
        assert_eq!(permutation_sign(&[0, 2], &[1, 3], 3).unwrap(), -1);
        assert_eq!(permutation_sign(&[2, 3], &[0, 1], 3).unwrap(), 1);
        assert!(permutation_sign(&[0, 1], &[1, 3], 3).is_err());
        assert!(permutation_sign(&[1, 0], &[2, 3], 3).is_err());
    }

    #[test]
    fn primal_dual_change_gr1p3() {
        // p01 -> q23, p02 -> -q13, p03 -> q12, p12 -> q03, p13 -> -q02,
        // p23 -> q01
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let dual = gr.opposite();
        let expect = [
            (vec![0, 1], vec![2, 3], 1),
            (vec![0, 2], vec![1, 3], -1),
            (vec![0, 3], vec![1, 2], 1),
            (vec![1, 2], vec![0, 3], 1),
            (vec![1, 3], vec![0, 2], -1),
            (vec![2, 3], vec![0, 1], 1),
        ];
        for (p, q, s) in expect {
            let pv = gr.var(&p).unwrap();
            let image = gr.primal_to_dual(&pv).unwrap();
            let qv = dual.var(&q).unwrap();
            let want = if s > 0 { qv.clone() } else { qv.neg() };
            assert_eq!(image, want, "p_{p:?}");
            // and back
            let back = dual.dual_to_primal(&image).unwrap();
            assert_eq!(back, pv);
        }
    }

    #[test]
    fn round_trip_random_polys() {
        let gr = GrassmannRing::primal(1, 4).unwrap();
        let r = gr.ring().clone();
        // a haphazard cubic
        let p = Polynomial::var(&r, 0)
            .mul(&Polynomial::var(&r, 3))
            .mul(&Polynomial::var(&r, 7))
            .sub(&Polynomial::var(&r, 2).pow(3))
            .add(&Polynomial::var(&r, 9).pow(2).mul(&Polynomial::var(&r, 1)));
        let there = gr.primal_to_dual(&p).unwrap();
        let back = gr.opposite().dual_to_primal(&there).unwrap();
        assert_eq!(back, p);
    }

    #[test]
    fn relations_gr1p3_single_three_term() {
        let gr = GrassmannRing::dual(1, 3).unwrap();
        let rels = gr.plucker_relations();
        assert_eq!(rels.len(), 1);
        // q01 q23 - q02 q13 + q03 q12 (up to normalization)
        let q = |t: &[usize]| gr.var(t).unwrap();
        let expect = q(&[0, 1])
            .mul(&q(&[2, 3]))
            .sub(&q(&[0, 2]).mul(&q(&[1, 3])))
            .add(&q(&[0, 3]).mul(&q(&[1, 2])))
            .normalized();
        assert_eq!(rels[0], expect);
    }

    #[test]
    fn relations_gr1p4_dual_count() {
        let gr = GrassmannRing::dual(1, 4).unwrap();
        assert_eq!(gr.plucker_relations().len(), 5);
    }

    #[test]
    fn relations_vanish_on_pl_of_random_matrices() {
        let gr = GrassmannRing::dual(1, 4).unwrap();
        let rels = gr.plucker_relations();
        for k in 0..20u64 {
            let vals: Vec<BigRational> = (0..gr.nvars())
                .map(|_| BigRational::zero())
                .collect();
            let _ = vals;
            // build a random integer 2x5 matrix and evaluate its minors
            let mut a = vec![vec![0i64; 5]; 2];
            for (r, row) in a.iter_mut().enumerate() {
                for (c, x) in row.iter_mut().enumerate() {
                    *x = sample_value(k, (r * 5 + c) as u64);
                }
            }
            let plucker: Vec<BigRational> = gr
                .tuples()
                .iter()
                .map(|t| {
                    let (i, j) = (t[0], t[1]);
                    BigRational::from_integer(BigInt::from(a[0][i] * a[1][j] - a[0][j] * a[1][i]))
                })
                .collect();
            for rel in &rels {
                assert!(rel.eval(&plucker).is_zero());
            }
        }
    }

    #[test]
    fn pl_map_of_identity_block() {
        // A = (I_2 | 0) in Gr(1, P3): p01 = 1, all other coordinates 0
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let ring = Ring::new(vec!["u"]);
        let mut a = PolyMatrix::zero(&ring, 2, 4);
        a.set(0, 0, Polynomial::one(&ring));
        a.set(1, 1, Polynomial::one(&ring));
        let images = gr.pl_images(&a).unwrap();
        assert_eq!(images[0], Polynomial::one(&ring));
        for im in &images[1..] {
            assert!(im.is_zero());
        }
    }

    #[test]
    fn pl_scales_by_determinant() {
        // pl(U A) = det(U) pl(A) for an invertible 2x2 U
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let a_ring = gr.stiefel_ring();
        let a = gr.stiefel_matrix();
        // U = [[2, 1], [1, 1]], det = 1... use [[2, 3], [1, 2]], det = 1;
        // take [[3, 1], [1, 1]] with det 2 to see the scaling
        let c = |v: i64| Polynomial::from_int(&a_ring, v);
        let u = [[c(3), c(1)], [c(1), c(1)]];
        let mut ua = PolyMatrix::zero(&a_ring, 2, 4);
        for r in 0..2 {
            for col in 0..4 {
                let mut acc = Polynomial::zero(&a_ring);
                for s in 0..2 {
                    acc = acc.add(&u[r][s].mul(a.entry(s, col)));
                }
                ua.set(r, col, acc);
            }
        }
        let im_a = gr.pl_images(&a).unwrap();
        let im_ua = gr.pl_images(&ua).unwrap();
        let det = BigRational::from_integer(2.into());
        for (x, y) in im_a.iter().zip(&im_ua) {
            assert_eq!(*y, x.mul_scalar(&det));
        }
    }

    #[test]
    fn chart_01_matches_displayed_substitution() {
        // chart (0,1) of Gr(1,P3): p01 -> 1, p02 -> a23, p03 -> a24,
        // p12 -> -a13, p13 -> -a14, p23 -> a13 a24 - a23 a14
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let chart = gr.chart(&[0, 1]).unwrap();
        let images = chart.images(&gr);
        let ring = chart.ring().clone();
        let name = |s: &str| Polynomial::var(&ring, ring.index_of(s).unwrap());
        assert_eq!(images[0], Polynomial::one(&ring));
        assert_eq!(images[1], name("a_{2,3}"));
        assert_eq!(images[2], name("a_{2,4}"));
        assert_eq!(images[3], name("a_{1,3}").neg());
        assert_eq!(images[4], name("a_{1,4}").neg());
        assert_eq!(
            images[5],
            name("a_{1,3}")
                .mul(&name("a_{2,4}"))
                .sub(&name("a_{2,3}").mul(&name("a_{1,4}")))
        );
    }

    #[test]
    fn chart_images_satisfy_relations() {
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let chart = gr.chart(&[0, 2]).unwrap();
        let images = chart.images(&gr);
        for rel in gr.plucker_relations() {
            assert!(rel.substitute(chart.ring(), &images).is_zero());
        }
    }

    #[test]
    fn invalid_chart_rejected() {
        let gr = GrassmannRing::primal(1, 3).unwrap();
        assert!(gr.chart(&[1, 0]).is_err());
        assert!(gr.chart(&[0]).is_err());
        assert!(gr.chart(&[0, 7]).is_err());
    }

    #[test]
    fn stiefel_to_plucker_single_minor() {
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let aring = gr.stiefel_ring();
        let name = |s: &str| Polynomial::var(&aring, aring.index_of(s).unwrap());
        // a11 a22 - a12 a21 = p01
        let f = name("a_{1,1}")
            .mul(&name("a_{2,2}"))
            .sub(&name("a_{1,2}").mul(&name("a_{2,1}")));
        let q = stiefel_to_plucker(&f, &gr).unwrap();
        assert_eq!(q, gr.var(&[0, 1]).unwrap());
    }

    #[test]
    fn stiefel_to_plucker_zero() {
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let aring = gr.stiefel_ring();
        let f = Polynomial::zero(&aring);
        assert!(stiefel_to_plucker(&f, &gr).unwrap().is_zero());
    }

    #[test]
    fn stiefel_to_plucker_rejects_non_composite() {
        let gr = GrassmannRing::primal(1, 3).unwrap();
        let aring = gr.stiefel_ring();
        // a11^2 is multihomogeneous of degree 2 but not of the form Q ∘ pl
        let f = Polynomial::var(&aring, 0).pow(2);
        assert!(stiefel_to_plucker(&f, &gr).is_err());
    }

    #[test]
    fn sample_values_are_small() {
        for k in 0..100 {
            for j in 0..10 {
                let v = sample_value(k, j);
                assert!((-9..=9).contains(&v));
                assert_eq!(v.to_i64().unwrap(), v);
            }
        }
    }
}
