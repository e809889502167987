//! Sparse multivariate polynomials over Q.
//!
//! Terms are stored as (monomial, coefficient) pairs with nonzero
//! arbitrary-precision rational coefficients, sorted descending under
//! degrevlex. Degrevlex is also the `Ord` of `Monomial`, so the canonical
//! storage order and the default monomial order coincide.

use std::cmp::Ordering;
use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::order::MonomialOrder;
use crate::ring::{same_ring, Ring};

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial {
    exps: Vec<u32>,
    deg: u32,
}

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Monomial {
        let deg = exps.iter().sum();
        Monomial { exps, deg }
    }

    pub fn one(nvars: usize) -> Monomial {
        Monomial { exps: vec![0; nvars], deg: 0 }
    }

    pub fn var(nvars: usize, i: usize) -> Monomial {
        let mut exps = vec![0; nvars];
        exps[i] = 1;
        Monomial { exps, deg: 1 }
    }

    pub fn exps(&self) -> &[u32] {
        &self.exps
    }

    pub fn degree(&self) -> u32 {
        self.deg
    }

    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    pub fn is_one(&self) -> bool {
        self.deg == 0
    }

    pub fn exp(&self, i: usize) -> u32 {
        self.exps[i]
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let exps: Vec<u32> = self
            .exps
            .iter()
            .zip(&other.exps)
            .map(|(a, b)| a + b)
            .collect();
        Monomial { exps, deg: self.deg + other.deg }
    }

    /// self / other, if other divides self.
    pub fn try_div(&self, other: &Monomial) -> Option<Monomial> {
        if self.deg < other.deg {
            return None;
        }
        let mut exps = Vec::with_capacity(self.exps.len());
        for (a, b) in self.exps.iter().zip(&other.exps) {
            if a < b {
                return None;
            }
            exps.push(a - b);
        }
        Some(Monomial { exps, deg: self.deg - other.deg })
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.deg <= other.deg && self.exps.iter().zip(&other.exps).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial::new(
            self.exps
                .iter()
                .zip(&other.exps)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn coprime(&self, other: &Monomial) -> bool {
        self.exps.iter().zip(&other.exps).all(|(a, b)| *a == 0 || *b == 0)
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        MonomialOrder::DegRevLex.cmp(self, other)
    }
}

pub type Coeff = BigRational;

#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<Ring>,
    /// Sorted descending under degrevlex; no zero coefficients.
    terms: Vec<(Monomial, Coeff)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<Ring>) -> Polynomial {
        Polynomial { ring: ring.clone(), terms: Vec::new() }
    }

    pub fn constant(ring: &Arc<Ring>, c: Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(ring);
        }
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::one(ring.nvars()), c)],
        }
    }

    pub fn from_int(ring: &Arc<Ring>, c: i64) -> Polynomial {
        Polynomial::constant(ring, BigRational::from_integer(BigInt::from(c)))
    }

    pub fn one(ring: &Arc<Ring>) -> Polynomial {
        Polynomial::from_int(ring, 1)
    }

    pub fn var(ring: &Arc<Ring>, i: usize) -> Polynomial {
        Polynomial {
            ring: ring.clone(),
            terms: vec![(Monomial::var(ring.nvars(), i), BigRational::one())],
        }
    }

    /// Builds a polynomial from unsorted (monomial, coefficient) pairs,
    /// merging duplicates and dropping zeros.
    pub fn from_terms(ring: &Arc<Ring>, mut raw: Vec<(Monomial, Coeff)>) -> Polynomial {
        raw.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        let mut terms: Vec<(Monomial, Coeff)> = Vec::with_capacity(raw.len());
        for (m, c) in raw {
            if let Some(last) = terms.last_mut() {
                if last.0 == m {
                    last.1 += c;
                    if last.1.is_zero() {
                        terms.pop();
                    }
                    continue;
                }
            }
            if !c.is_zero() {
                terms.push((m, c));
            }
        }
        Polynomial { ring: ring.clone(), terms }
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Monomial, Coeff)] {
        &self.terms
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.is_empty() || (self.terms.len() == 1 && self.terms[0].0.is_one())
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// Total degree; 0 for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.iter().map(|(m, _)| m.degree()).max().unwrap_or(0)
    }

    /// Some(d) when all terms have total degree d.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let d = self.terms.first()?.0.degree();
        if self.terms.iter().all(|(m, _)| m.degree() == d) {
            Some(d)
        } else {
            None
        }
    }

    pub fn is_homogeneous(&self) -> bool {
        self.is_zero() || self.homogeneous_degree().is_some()
    }

    /// Leading term under the given order; None for zero.
    pub fn leading_term(&self, ord: MonomialOrder) -> Option<(&Monomial, &Coeff)> {
        match ord {
            MonomialOrder::DegRevLex => self.terms.first().map(|(m, c)| (m, c)),
            _ => self
                .terms
                .iter()
                .max_by(|a, b| ord.cmp(&a.0, &b.0))
                .map(|(m, c)| (m, c)),
        }
    }

    /// Terms sorted descending under `ord`.
    pub fn sorted_terms(&self, ord: MonomialOrder) -> Vec<(Monomial, Coeff)> {
        let mut ts = self.terms.clone();
        if ord != MonomialOrder::DegRevLex {
            ts.sort_unstable_by(|a, b| ord.cmp(&b.0, &a.0));
        }
        ts
    }

    pub fn neg(&self) -> Polynomial {
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn add(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            match self.terms[i].0.cmp(&other.terms[j].0) {
                Ordering::Greater => {
                    terms.push(self.terms[i].clone());
                    i += 1;
                }
                Ordering::Less => {
                    terms.push(other.terms[j].clone());
                    j += 1;
                }
                Ordering::Equal => {
                    let c = &self.terms[i].1 + &other.terms[j].1;
                    if !c.is_zero() {
                        terms.push((self.terms[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        terms.extend_from_slice(&self.terms[i..]);
        terms.extend_from_slice(&other.terms[j..]);
        Polynomial { ring: self.ring.clone(), terms }
    }

    pub fn sub(&self, other: &Polynomial) -> Polynomial {
        self.add(&other.neg())
    }

    pub fn mul_scalar(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect(),
        }
    }

    /// self * (c * m), preserving term order.
    pub fn mul_term(&self, m: &Monomial, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        Polynomial {
            ring: self.ring.clone(),
            terms: self
                .terms
                .iter()
                .map(|(a, b)| (a.mul(m), b * c))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Polynomial) -> Polynomial {
        debug_assert!(same_ring(&self.ring, &other.ring));
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // multiply the shorter one term by term into an accumulator
        let (short, long) = if self.terms.len() <= other.terms.len() {
            (self, other)
        } else {
            (other, self)
        };
        let mut raw = Vec::with_capacity(short.terms.len() * long.terms.len());
        for (m, c) in &short.terms {
            for (m2, c2) in &long.terms {
                raw.push((m.mul(m2), c * c2));
            }
        }
        Polynomial::from_terms(&self.ring, raw)
    }

    pub fn pow(&self, e: u32) -> Polynomial {
        let mut acc = Polynomial::one(&self.ring);
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    pub fn derivative(&self, var: usize) -> Polynomial {
        let mut raw = Vec::new();
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e == 0 {
                continue;
            }
            let mut exps = m.exps().to_vec();
            exps[var] = e - 1;
            raw.push((
                Monomial::new(exps),
                c * BigRational::from_integer(BigInt::from(e)),
            ));
        }
        Polynomial::from_terms(&self.ring, raw)
    }

    /// Substitutes `images[i]` for variable i. All images must live in one
    /// target ring. Powers of images are memoized per variable.
    pub fn substitute(&self, target: &Arc<Ring>, images: &[Polynomial]) -> Polynomial {
        assert_eq!(images.len(), self.ring.nvars());
        let mut pows: Vec<Vec<Polynomial>> = images
            .iter()
            .map(|im| vec![Polynomial::one(target), im.clone()])
            .collect();
        let mut acc = Polynomial::zero(target);
        for (m, c) in &self.terms {
            let mut t = Polynomial::constant(target, c.clone());
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let cache = &mut pows[v];
                while cache.len() <= e as usize {
                    let next = cache.last().unwrap().mul(&images[v]);
                    cache.push(next);
                }
                t = t.mul(&cache[e as usize]);
            }
            acc = acc.add(&t);
        }
        acc
    }

    /// Reinterprets this polynomial in `target`, sending variable i of the
    /// source to variable `var_map[i]` of the target.
    pub fn map_vars(&self, target: &Arc<Ring>, var_map: &[usize]) -> Polynomial {
        let nv = target.nvars();
        let terms = self
            .terms
            .iter()
            .map(|(m, c)| {
                let mut exps = vec![0u32; nv];
                for (i, &e) in m.exps().iter().enumerate() {
                    if e > 0 {
                        exps[var_map[i]] += e;
                    }
                }
                (Monomial::new(exps), c.clone())
            })
            .collect();
        let mut p = Polynomial { ring: target.clone(), terms };
        p.terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        p
    }

    /// Moves the polynomial to a ring with identically named variables
    /// (possibly in different positions, possibly with extra variables).
    pub fn into_ring(&self, target: &Arc<Ring>) -> Result<Polynomial> {
        if same_ring(&self.ring, target) {
            return Ok(self.clone());
        }
        let map: Vec<usize> = self
            .ring
            .var_names()
            .iter()
            .map(|n| target.index_of(n).ok_or(Error::RingMismatch))
            .collect::<Result<_>>()?;
        Ok(self.map_vars(target, &map))
    }

    /// True when no term involves any of the given variables.
    pub fn free_of(&self, vars: &[usize]) -> bool {
        self.terms
            .iter()
            .all(|(m, _)| vars.iter().all(|&v| m.exp(v) == 0))
    }

    pub fn eval(&self, vals: &[Coeff]) -> Coeff {
        let mut acc = BigRational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (v, &e) in m.exps().iter().enumerate() {
                for _ in 0..e {
                    t *= &vals[v];
                }
            }
            acc += t;
        }
        acc
    }

    /// Content as a positive rational: gcd of numerators over lcm of
    /// denominators. Zero polynomial has content 0.
    pub fn content(&self) -> Coeff {
        let mut num = BigInt::zero();
        let mut den = BigInt::one();
        for (_, c) in &self.terms {
            num = num.gcd(c.numer());
            den = den.lcm(c.denom());
        }
        if num.is_zero() {
            BigRational::zero()
        } else {
            BigRational::new(num, den)
        }
    }

    /// Canonical scalar normalization: primitive integer coefficients with
    /// positive leading coefficient under degrevlex.
    pub fn normalized(&self) -> Polynomial {
        if self.is_zero() {
            return self.clone();
        }
        let mut c = self.content();
        if self.terms[0].1.is_negative() {
            c = -c;
        }
        let inv = c.recip();
        self.mul_scalar(&inv)
    }

    /// Divides by the leading coefficient under `ord`.
    pub fn monic(&self, ord: MonomialOrder) -> Polynomial {
        match self.leading_term(ord) {
            None => self.clone(),
            Some((_, c)) => {
                let inv = c.recip();
                self.mul_scalar(&inv)
            }
        }
    }

    /// True if every term is divisible by variable `v`.
    pub fn divisible_by_var(&self, v: usize) -> bool {
        !self.is_zero() && self.terms.iter().all(|(m, _)| m.exp(v) > 0)
    }
}

fn write_coeff_mag(f: &mut fmt::Formatter<'_>, c: &Coeff) -> fmt::Result {
    let a = c.abs();
    if a.is_integer() {
        write!(f, "{}", a.numer())
    } else {
        // Non-integer coefficients only occur in intermediate values; the
        // canonical forms emitted by the CLI are integer.
        write!(f, "({}/{})", a.numer(), a.denom())
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().enumerate() {
            if i == 0 {
                if c.is_negative() {
                    write!(f, "-")?;
                }
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let unit = c.abs().is_one();
            if !unit || m.is_one() {
                write_coeff_mag(f, c)?;
            }
            let mut first_var = !unit || m.is_one();
            for (v, &e) in m.exps().iter().enumerate() {
                if e == 0 {
                    continue;
                }
                if first_var {
                    write!(f, "*")?;
                } else {
                    first_var = true;
                }
                write!(f, "{}", self.ring.var_name(v))?;
                if e > 1 {
                    write!(f, "^{e}")?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xring() -> Arc<Ring> {
        Ring::new(vec!["x", "y", "z"])
    }

    fn x(r: &Arc<Ring>) -> Polynomial {
        Polynomial::var(r, 0)
    }
    fn y(r: &Arc<Ring>) -> Polynomial {
        Polynomial::var(r, 1)
    }

    #[test]
    fn arithmetic_roundtrip() {
        let r = xring();
        let p = x(&r).add(&y(&r)); // x + y
        let q = x(&r).sub(&y(&r)); // x - y
        let prod = p.mul(&q); // x^2 - y^2
        let expect = x(&r).mul(&x(&r)).sub(&y(&r).mul(&y(&r)));
        assert_eq!(prod, expect);
        assert_eq!(prod.degree(), 2);
        assert!(prod.is_homogeneous());
    }

    #[test]
    fn zero_invariants() {
        let r = xring();
        let z = x(&r).sub(&x(&r));
        assert!(z.is_zero());
        assert_eq!(z.num_terms(), 0);
    }

    #[test]
    fn derivative_power_rule() {
        let r = xring();
        let p = x(&r).pow(3); // x^3
        assert_eq!(p.derivative(0), x(&r).pow(2).mul_scalar(&BigRational::from_integer(3.into())));
        assert!(p.derivative(1).is_zero());
    }

    #[test]
    fn normalization_primitive_positive() {
        let r = xring();
        // -2/3 x + 4/3 y  ->  x - 2y with positive lead
        let p = x(&r)
            .mul_scalar(&BigRational::new((-2).into(), 3.into()))
            .add(&y(&r).mul_scalar(&BigRational::new(4.into(), 3.into())));
        let n = p.normalized();
        let expect = x(&r).sub(&y(&r).mul_scalar(&BigRational::from_integer(2.into())));
        assert_eq!(n, expect);
    }

    #[test]
    fn substitution() {
        let r = xring();
        let s = Ring::new(vec!["u"]);
        let u = Polynomial::var(&s, 0);
        // x*y - z at (u, u^2, u^3) = u^3 - u^3 = 0
        let p = x(&r).mul(&y(&r)).sub(&Polynomial::var(&r, 2));
        let img = p.substitute(&s, &[u.clone(), u.pow(2), u.pow(3)]);
        assert!(img.is_zero());
    }

    #[test]
    fn display_reparse_shape() {
        let r = xring();
        let p = x(&r)
            .pow(2)
            .sub(&y(&r).mul_scalar(&BigRational::from_integer(2.into())));
        assert_eq!(format!("{p}"), "x^2 - 2*y");
    }
}
