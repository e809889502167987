//! Buchberger's algorithm with the Gebauer-Möller pair criteria,
//! fraction-free reduction, and multivariate division.

use std::cmp::Ordering;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::poly::{Coeff, Monomial, Polynomial};

/// Cooperative cancellation. A caller (typically the CLI) installs a deadline
/// for the current thread; long-running loops poll it between reduction steps.
pub mod deadline {
    use std::cell::Cell;
    use std::time::Instant;

    use crate::error::{Error, Result};

    thread_local! {
        static DEADLINE: Cell<Option<Instant>> = const { Cell::new(None) };
    }

    pub fn set(until: Option<Instant>) {
        DEADLINE.with(|d| d.set(until));
    }

    pub fn check(stage: &'static str) -> Result<()> {
        DEADLINE.with(|d| match d.get() {
            Some(t) if Instant::now() > t => Err(Error::DeadlineExceeded(stage)),
            _ => Ok(()),
        })
    }
}

type Term = (Monomial, Coeff);

/// A basis element with its term list pre-sorted under the active order.
struct Gen {
    poly: Polynomial,
    sorted: Vec<Term>,
    lm: Monomial,
    lc: Coeff,
}

impl Gen {
    fn new(poly: Polynomial, ord: MonomialOrder) -> Gen {
        let sorted = poly.sorted_terms(ord);
        let (lm, lc) = sorted[0].clone();
        Gen { poly, sorted, lm, lc }
    }
}

/// Terms sorted descending under one fixed order; the workhorse of division.
struct OrdPoly {
    terms: Vec<Term>,
}

impl OrdPoly {
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// self := self * s - (c * m) * g, merging sorted term lists.
    fn scale_sub_mul(&mut self, s: &Coeff, g: &[Term], m: &Monomial, c: &Coeff, ord: MonomialOrder) {
        let mut out: Vec<Term> = Vec::with_capacity(self.terms.len() + g.len());
        let scale_one = s.is_one();
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < g.len() {
            let gm = g[j].0.mul(m);
            match ord.cmp(&self.terms[i].0, &gm) {
                Ordering::Greater => {
                    let (mm, cc) = &self.terms[i];
                    let v = if scale_one { cc.clone() } else { cc * s };
                    out.push((mm.clone(), v));
                    i += 1;
                }
                Ordering::Less => {
                    out.push((gm, -(&g[j].1 * c)));
                    j += 1;
                }
                Ordering::Equal => {
                    let v = if scale_one {
                        &self.terms[i].1 - &(&g[j].1 * c)
                    } else {
                        &(&self.terms[i].1 * s) - &(&g[j].1 * c)
                    };
                    if !v.is_zero() {
                        out.push((gm, v));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        while i < self.terms.len() {
            let (mm, cc) = &self.terms[i];
            let v = if scale_one { cc.clone() } else { cc * s };
            out.push((mm.clone(), v));
            i += 1;
        }
        while j < g.len() {
            out.push((g[j].0.mul(m), -(&g[j].1 * c)));
            j += 1;
        }
        self.terms = out;
    }
}

fn strip_content(terms: &mut [Term]) {
    if terms.is_empty() {
        return;
    }
    let mut num = BigInt::zero();
    let mut den = BigInt::one();
    for (_, c) in terms.iter() {
        num = num.gcd(c.numer());
        den = den.lcm(c.denom());
    }
    if num.is_one() && den.is_one() {
        return;
    }
    let inv = BigRational::new(den, num);
    for (_, c) in terms.iter_mut() {
        *c = &*c * &inv;
    }
}

fn max_coeff_bits(terms: &[Term]) -> u64 {
    terms
        .iter()
        .map(|(_, c)| c.numer().bits().max(c.denom().bits()))
        .max()
        .unwrap_or(0)
}

/// Full multivariate division: returns the remainder of `f` modulo `basis`.
/// No term of the remainder is divisible by any leading term of the basis,
/// and f - remainder lies in the ideal generated by the basis.
pub fn normal_form(f: &Polynomial, basis: &[Polynomial], ord: MonomialOrder) -> Result<Polynomial> {
    for g in basis {
        if !crate::ring::same_ring(f.ring(), g.ring()) {
            return Err(Error::RingMismatch);
        }
    }
    let divisors: Vec<Gen> = basis
        .iter()
        .filter(|g| !g.is_zero())
        .map(|g| Gen::new(g.clone(), ord))
        .collect();
    let mut p = OrdPoly { terms: f.sorted_terms(ord) };
    let mut rem: Vec<Term> = Vec::new();
    let mut steps = 0usize;
    while !p.is_zero() {
        if steps % 256 == 0 {
            deadline::check("polynomial division")?;
        }
        steps += 1;
        let (lm, lc) = p.terms[0].clone();
        match divisors.iter().find(|g| g.lm.divides(&lm)) {
            Some(g) => {
                let m = lm.try_div(&g.lm).unwrap();
                let c = &lc / &g.lc;
                p.scale_sub_mul(&BigRational::one(), &g.sorted, &m, &c, ord);
            }
            None => {
                rem.push((lm, lc));
                p.terms.remove(0);
            }
        }
    }
    Ok(Polynomial::from_terms(f.ring(), rem))
}

/// Fraction-free full reduction used inside Buchberger: the result is the
/// remainder up to a positive rational factor, returned primitive.
fn reduce_primitive(f: OrdPoly, divisors: &[Gen], ord: MonomialOrder) -> Result<Vec<Term>> {
    let mut p = f;
    let mut rem: Vec<Term> = Vec::new();
    let mut steps = 0usize;
    while !p.is_zero() {
        if steps % 128 == 0 {
            deadline::check("Groebner reduction")?;
            if max_coeff_bits(&p.terms) > 2048 {
                // joint content strip keeps intermediate integers small
                let mut all = std::mem::take(&mut rem);
                let split = all.len();
                all.extend(std::mem::take(&mut p.terms));
                strip_content(&mut all);
                p.terms = all.split_off(split);
                rem = all;
            }
        }
        steps += 1;
        let (lm, lc) = p.terms[0].clone();
        match divisors.iter().find(|g| g.lm.divides(&lm)) {
            Some(g) => {
                let m = lm.try_div(&g.lm).unwrap();
                // cross-multiplied step: p := |lcg/d| p - sgn(lcg) (lcp/d) m g
                let d = lc.numer().gcd(g.lc.numer());
                let mut s = &g.lc / BigRational::from_integer(d.clone());
                let mut c = &lc / BigRational::from_integer(d);
                if s.is_negative() {
                    s = -s;
                    c = -c;
                }
                if !s.is_one() {
                    for (_, cc) in rem.iter_mut() {
                        *cc = &*cc * &s;
                    }
                }
                p.scale_sub_mul(&s, &g.sorted, &m, &c, ord);
            }
            None => {
                rem.push((lm, lc));
                p.terms.remove(0);
            }
        }
    }
    strip_content(&mut rem);
    Ok(rem)
}

fn s_poly_ordpoly(f: &Gen, g: &Gen, ord: MonomialOrder) -> OrdPoly {
    let l = f.lm.lcm(&g.lm);
    let mf = l.try_div(&f.lm).unwrap();
    let mg = l.try_div(&g.lm).unwrap();
    let d = f.lc.numer().gcd(g.lc.numer());
    let cf = &g.lc / BigRational::from_integer(d.clone());
    let cg = &f.lc / BigRational::from_integer(d);
    // s = cf * mf * f - cg * mg * g
    let mut p = OrdPoly {
        terms: f
            .sorted
            .iter()
            .map(|(m, c)| (m.mul(&mf), c * &cf))
            .collect(),
    };
    p.scale_sub_mul(&BigRational::one(), &g.sorted, &mg, &cg, ord);
    p
}

/// S-polynomial, exposed for the property tests.
pub fn s_polynomial(f: &Polynomial, g: &Polynomial, ord: MonomialOrder) -> Polynomial {
    let p = s_poly_ordpoly(&Gen::new(f.clone(), ord), &Gen::new(g.clone(), ord), ord);
    Polynomial::from_terms(f.ring(), p.terms)
}

#[derive(Clone)]
struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
}

/// Gebauer-Möller update: prunes the pending pair set and creates the pairs
/// for the newly added basis element `h`.
fn update_pairs(pairs: &mut Vec<Pair>, lms: &[Monomial], h: usize) {
    let lh = &lms[h];
    let cand: Vec<Pair> = (0..h)
        .map(|g| Pair { i: g, j: h, lcm: lms[g].lcm(lh) })
        .collect();
    let mut keep = vec![true; cand.len()];
    for a in 0..cand.len() {
        if lms[cand[a].i].coprime(lh) {
            // coprime pairs survive this stage so they can shield others;
            // they are dropped before insertion
            continue;
        }
        for b in 0..cand.len() {
            if a == b || !keep[b] {
                continue;
            }
            if cand[b].lcm.divides(&cand[a].lcm) && (cand[b].lcm != cand[a].lcm || b < a) {
                keep[a] = false;
                break;
            }
        }
    }
    // chain criterion on the old pairs
    pairs.retain(|p| {
        !(lh.divides(&p.lcm) && lms[p.i].lcm(lh) != p.lcm && lms[p.j].lcm(lh) != p.lcm)
    });
    for (a, p) in cand.into_iter().enumerate() {
        if keep[a] && !lms[p.i].coprime(lh) {
            pairs.push(p);
        }
    }
}

/// The reduced Gröbner basis of the given generators: deterministic,
/// auto-reduced, primitive integer coefficients, positive leading
/// coefficients, sorted ascending by leading monomial.
pub fn buchberger(gens: &[Polynomial], ord: MonomialOrder) -> Result<Vec<Polynomial>> {
    let ring = match gens.first() {
        None => return Ok(Vec::new()),
        Some(g) => g.ring().clone(),
    };
    let mut basis: Vec<Gen> = Vec::new();
    let mut lms: Vec<Monomial> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    fn add(p: Polynomial, ord: MonomialOrder, basis: &mut Vec<Gen>, lms: &mut Vec<Monomial>, pairs: &mut Vec<Pair>) {
        let g = Gen::new(p.normalized(), ord);
        lms.push(g.lm.clone());
        basis.push(g);
        update_pairs(pairs, lms, basis.len() - 1);
    }

    for g in gens {
        if !crate::ring::same_ring(g.ring(), &ring) {
            return Err(Error::RingMismatch);
        }
        if !g.is_zero() {
            add(g.clone(), ord, &mut basis, &mut lms, &mut pairs);
        }
    }

    while !pairs.is_empty() {
        deadline::check("Buchberger loop")?;
        // normal selection: smallest lcm degree, ties broken by the order
        let mut best = 0;
        for k in 1..pairs.len() {
            let a = &pairs[k].lcm;
            let b = &pairs[best].lcm;
            if a.degree().cmp(&b.degree()).then_with(|| ord.cmp(a, b)) == Ordering::Less {
                best = k;
            }
        }
        let pair = pairs.swap_remove(best);
        let s = s_poly_ordpoly(&basis[pair.i], &basis[pair.j], ord);
        if s.is_zero() {
            continue;
        }
        let rem = reduce_primitive(s, &basis, ord)?;
        if rem.is_empty() {
            continue;
        }
        let p = Polynomial::from_terms(&ring, rem);
        if p.is_constant() {
            return Ok(vec![Polynomial::one(&ring)]);
        }
        add(p, ord, &mut basis, &mut lms, &mut pairs);
    }

    reduce_basis(basis.into_iter().map(|g| g.poly).collect(), ord)
}

/// Minimalizes and tail-reduces a Gröbner basis, then normalizes it into the
/// canonical form.
fn reduce_basis(mut basis: Vec<Polynomial>, ord: MonomialOrder) -> Result<Vec<Polynomial>> {
    let lms: Vec<Monomial> = basis
        .iter()
        .map(|p| p.leading_term(ord).unwrap().0.clone())
        .collect();
    let mut keep: Vec<bool> = vec![true; basis.len()];
    for i in 0..basis.len() {
        for j in 0..basis.len() {
            if i != j && keep[j] && lms[j].divides(&lms[i]) && (lms[j] != lms[i] || j < i) {
                keep[i] = false;
                break;
            }
        }
    }
    let mut minimal: Vec<Polynomial> = basis
        .drain(..)
        .zip(keep)
        .filter_map(|(p, k)| if k { Some(p) } else { None })
        .collect();
    for i in 0..minimal.len() {
        let others: Vec<Polynomial> = minimal
            .iter()
            .enumerate()
            .filter(|(j, _)| *j != i)
            .map(|(_, p)| p.clone())
            .collect();
        if others.is_empty() {
            continue;
        }
        minimal[i] = normal_form(&minimal[i], &others, ord)?;
    }
    let mut out: Vec<Polynomial> = minimal
        .into_iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.normalized())
        .collect();
    out.sort_by(|a, b| {
        ord.cmp(
            a.leading_term(ord).unwrap().0,
            b.leading_term(ord).unwrap().0,
        )
    });
    Ok(out)
}

/// True when the basis generates the unit ideal.
pub fn is_unit_basis(basis: &[Polynomial]) -> bool {
    basis.iter().any(|p| !p.is_zero() && p.is_constant())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Ring;
    use std::sync::Arc;

    fn r3() -> Arc<Ring> {
        Ring::new(vec!["x", "y", "z"])
    }

    fn v(r: &Arc<Ring>, i: usize) -> Polynomial {
        Polynomial::var(r, i)
    }

    #[test]
    fn normal_form_multiple() {
        let r = r3();
        let x = v(&r, 0);
        let f = x.pow(2);
        let nf = normal_form(&f, &[x.clone()], MonomialOrder::DegRevLex).unwrap();
        assert!(nf.is_zero());
    }

    #[test]
    fn normal_form_partial() {
        let r = r3();
        let (x, y) = (v(&r, 0), v(&r, 1));
        let f = x.pow(2).add(&y);
        let nf = normal_form(&f, &[x], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(nf, y);
    }

    #[test]
    fn gb_two_vars_linear() {
        let r = r3();
        let (x, y) = (v(&r, 0), v(&r, 1));
        let gb = buchberger(&[x.add(&y), x.sub(&y)], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb, vec![y.clone(), x.clone()]);
    }

    #[test]
    fn gb_monomial_ideal() {
        let r = r3();
        let (x, y) = (v(&r, 0), v(&r, 1));
        let gb = buchberger(&[x.clone(), y.clone()], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb, vec![y, x]);
    }

    #[test]
    fn gb_twisted_cubic_affine_lex() {
        // <x^2 - y, x^3 - z> under lex contains y^3 - z^2
        let r = r3();
        let (x, y, z) = (v(&r, 0), v(&r, 1), v(&r, 2));
        let gens = vec![x.pow(2).sub(&y), x.pow(3).sub(&z)];
        let gb = buchberger(&gens, MonomialOrder::Lex).unwrap();
        let target = y.pow(3).sub(&z.pow(2));
        assert!(gb.contains(&target), "basis: {gb:?}");
        // y^3 - z^2 vanishes on (t, t^2, t^3)
        let tring = Ring::new(vec!["t"]);
        let t = Polynomial::var(&tring, 0);
        let sub = target.substitute(&tring, &[t.clone(), t.pow(2), t.pow(3)]);
        assert!(sub.is_zero());
    }

    #[test]
    fn gb_spoly_reduces_to_zero() {
        let r = r3();
        let (x, y, z) = (v(&r, 0), v(&r, 1), v(&r, 2));
        let gens = vec![
            x.pow(2).sub(&y.mul(&z)),
            x.mul(&y).sub(&z.pow(2)),
            y.pow(2).sub(&x.mul(&z)),
        ];
        let gb = buchberger(&gens, MonomialOrder::DegRevLex).unwrap();
        for i in 0..gb.len() {
            for j in (i + 1)..gb.len() {
                let s = s_polynomial(&gb[i], &gb[j], MonomialOrder::DegRevLex);
                let nf = normal_form(&s, &gb, MonomialOrder::DegRevLex).unwrap();
                assert!(nf.is_zero());
            }
        }
    }

    #[test]
    fn gb_unit_ideal() {
        let r = r3();
        let x = v(&r, 0);
        let one_minus_x = Polynomial::one(&r).sub(&x);
        let gb = buchberger(&[x, one_minus_x], MonomialOrder::DegRevLex).unwrap();
        assert_eq!(gb, vec![Polynomial::one(&r)]);
    }

    #[test]
    fn gb_empty_and_zero() {
        let r = r3();
        assert!(buchberger(&[], MonomialOrder::DegRevLex).unwrap().is_empty());
        let z = Polynomial::zero(&r);
        assert!(buchberger(&[z], MonomialOrder::DegRevLex).unwrap().is_empty());
    }

    #[test]
    fn membership_of_random_combinations() {
        let r = r3();
        let (x, y, z) = (v(&r, 0), v(&r, 1), v(&r, 2));
        let gens = vec![x.pow(2).sub(&y), y.mul(&z).sub(&x)];
        let gb = buchberger(&gens, MonomialOrder::DegRevLex).unwrap();
        // f = (z + 1) g0 + (x y - 3) g1 must reduce to zero
        let c0 = z.add(&Polynomial::one(&r));
        let c1 = x.mul(&y).sub(&Polynomial::from_int(&r, 3));
        let f = c0.mul(&gens[0]).add(&c1.mul(&gens[1]));
        let nf = normal_form(&f, &gb, MonomialOrder::DegRevLex).unwrap();
        assert!(nf.is_zero());
    }
}
