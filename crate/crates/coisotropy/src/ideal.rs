//! Ideals with cached Gröbner bases, elimination, saturation, radical
//! membership and Hilbert-series dimension/degree.

use std::collections::HashMap;
use std::sync::{Arc, Mutex};

use crate::error::{Error, Result};
use crate::groebner::{buchberger, is_unit_basis, normal_form};
use crate::hilbert;
use crate::order::MonomialOrder;
use crate::poly::{Monomial, Polynomial};
use crate::ring::{same_ring, Ring};

#[derive(Debug)]
pub struct Ideal {
    ring: Arc<Ring>,
    gens: Vec<Polynomial>,
    cache: Mutex<HashMap<MonomialOrder, Arc<Vec<Polynomial>>>>,
}

impl Clone for Ideal {
    fn clone(&self) -> Self {
        let cache = self.cache.lock().unwrap().clone();
        Ideal {
            ring: self.ring.clone(),
            gens: self.gens.clone(),
            cache: Mutex::new(cache),
        }
    }
}

impl PartialEq for Ideal {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.gens == other.gens
    }
}

impl Ideal {
    /// Zero generators are dropped; all generators must share the ring.
    pub fn new(ring: &Arc<Ring>, gens: Vec<Polynomial>) -> Result<Ideal> {
        for g in &gens {
            if !same_ring(g.ring(), ring) {
                return Err(Error::RingMismatch);
            }
        }
        Ok(Ideal {
            ring: ring.clone(),
            gens: gens.into_iter().filter(|g| !g.is_zero()).collect(),
            cache: Mutex::new(HashMap::new()),
        })
    }

    pub fn ring(&self) -> &Arc<Ring> {
        &self.ring
    }

    pub fn gens(&self) -> &[Polynomial] {
        &self.gens
    }

    /// The reduced Gröbner basis under `ord`, computed once and cached.
    pub fn groebner(&self, ord: MonomialOrder) -> Result<Arc<Vec<Polynomial>>> {
        if let Some(gb) = self.cache.lock().unwrap().get(&ord) {
            return Ok(gb.clone());
        }
        let gb = Arc::new(buchberger(&self.gens, ord)?);
        self.cache.lock().unwrap().insert(ord, gb.clone());
        Ok(gb)
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> Result<bool> {
        Ok(is_unit_basis(&self.groebner(MonomialOrder::DegRevLex)?))
    }

    /// Ideal membership via normal form against the degrevlex basis.
    pub fn contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        let gb = self.groebner(MonomialOrder::DegRevLex)?;
        Ok(normal_form(f, &gb, MonomialOrder::DegRevLex)?.is_zero())
    }

    /// Radical membership by the Rabinowitsch trick: f in sqrt(I) iff
    /// 1 in I + <t*f - 1> in the extended ring.
    pub fn radical_contains(&self, f: &Polynomial) -> Result<bool> {
        if f.is_zero() {
            return Ok(true);
        }
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        let ext = self.ring.extend_front(vec!["@t"]);
        let shift: Vec<usize> = (1..=self.ring.nvars()).collect();
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.map_vars(&ext, &shift))
            .collect();
        let t = Polynomial::var(&ext, 0);
        gens.push(t.mul(&f.map_vars(&ext, &shift)).sub(&Polynomial::one(&ext)));
        let gb = buchberger(&gens, MonomialOrder::DegRevLex)?;
        Ok(is_unit_basis(&gb))
    }

    /// Two ideals are equal iff their reduced degrevlex bases agree.
    pub fn equals(&self, other: &Ideal) -> Result<bool> {
        if !same_ring(&self.ring, &other.ring) {
            return Ok(false);
        }
        Ok(*self.groebner(MonomialOrder::DegRevLex)? == *other.groebner(MonomialOrder::DegRevLex)?)
    }

    /// Intersection with the subring omitting `front` (variable positions):
    /// computes a block-order basis and keeps the generators free of the
    /// eliminated variables. The result lives in the subring of the
    /// remaining variables, in their current order.
    pub fn eliminate(&self, front: &[usize]) -> Result<Ideal> {
        let nv = self.ring.nvars();
        for &v in front {
            if v >= nv {
                return Err(Error::BadIndices(format!("variable index {v} out of range")));
            }
        }
        let rest: Vec<usize> = (0..nv).filter(|v| !front.contains(v)).collect();
        if front.is_empty() {
            let sub = self.ring.clone();
            return Ideal::new(&sub, self.gens.clone());
        }
        // permuted ring with the eliminated block first
        let mut order: Vec<usize> = front.to_vec();
        order.extend(&rest);
        let perm_ring = Ring::new(
            order
                .iter()
                .map(|&v| self.ring.var_name(v).to_string())
                .collect::<Vec<_>>(),
        );
        // position of source var v inside the permuted ring
        let mut var_map = vec![0usize; nv];
        for (pos, &v) in order.iter().enumerate() {
            var_map[v] = pos;
        }
        let gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.map_vars(&perm_ring, &var_map))
            .collect();
        let gb = buchberger(&gens, MonomialOrder::Block { front: front.len() })?;
        let sub = self.ring.subring(&rest);
        let front_pos: Vec<usize> = (0..front.len()).collect();
        let keep: Vec<Polynomial> = gb
            .iter()
            .filter(|g| g.free_of(&front_pos))
            .map(|g| {
                // drop the (zero) front exponents
                let map: Vec<usize> = (0..perm_ring.nvars())
                    .map(|i| i.saturating_sub(front.len()))
                    .collect();
                g.map_vars(&sub, &map)
            })
            .collect();
        Ideal::new(&sub, keep)
    }

    /// Variant of eliminate referring to variables by name.
    pub fn eliminate_named(&self, names: &[String]) -> Result<Ideal> {
        let front = self.ring.positions(names)?;
        self.eliminate(&front)
    }

    /// Saturation I : f^inf via the extra-variable trick: adjoin t, add
    /// t*f - 1 and eliminate t.
    pub fn saturate(&self, f: &Polynomial) -> Result<Ideal> {
        if f.is_zero() {
            return Err(Error::ZeroDivisor);
        }
        if !same_ring(f.ring(), &self.ring) {
            return Err(Error::RingMismatch);
        }
        if f.is_constant() {
            return Ok(self.clone());
        }
        let ext = self.ring.extend_front(vec!["@t"]);
        let shift: Vec<usize> = (1..=self.ring.nvars()).collect();
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| g.map_vars(&ext, &shift))
            .collect();
        let t = Polynomial::var(&ext, 0);
        gens.push(t.mul(&f.map_vars(&ext, &shift)).sub(&Polynomial::one(&ext)));
        let extended = Ideal::new(&ext, gens)?;
        let result = extended.eliminate(&[0])?;
        // eliminate returns the ideal over a ring with the original names
        debug_assert!(same_ring(result.ring(), &self.ring));
        Ideal::new(&self.ring, result.gens)
    }

    /// Intersection I ∩ K via the standard t-trick: eliminate t from
    /// t I + (1 - t) K.
    pub fn intersect(&self, other: &Ideal) -> Result<Ideal> {
        if !same_ring(&self.ring, &other.ring) {
            return Err(Error::RingMismatch);
        }
        if self.is_zero() || other.is_zero() {
            return Ideal::new(&self.ring, Vec::new());
        }
        let ext = self.ring.extend_front(vec!["@t"]);
        let shift: Vec<usize> = (1..=self.ring.nvars()).collect();
        let t = Polynomial::var(&ext, 0);
        let one_minus_t = Polynomial::one(&ext).sub(&t);
        let mut gens: Vec<Polynomial> = self
            .gens
            .iter()
            .map(|g| t.mul(&g.map_vars(&ext, &shift)))
            .collect();
        gens.extend(
            other
                .gens
                .iter()
                .map(|g| one_minus_t.mul(&g.map_vars(&ext, &shift))),
        );
        let extended = Ideal::new(&ext, gens)?;
        let result = extended.eliminate(&[0])?;
        Ideal::new(&self.ring, result.gens)
    }

    /// Saturation by the ideal generated by `by`:
    /// I : J^inf = the intersection of the saturations I : g^inf over the
    /// generators g of J. (Iterating single saturations instead would remove
    /// every component on which some individual generator vanishes, which is
    /// too much.)
    pub fn saturate_by_ideal(&self, by: &[Polynomial]) -> Result<Ideal> {
        let gens: Vec<&Polynomial> = by.iter().filter(|f| !f.is_zero()).collect();
        let mut result: Option<Ideal> = None;
        for f in gens {
            let sat = self.saturate(f)?;
            result = Some(match result {
                None => sat,
                Some(acc) => acc.intersect(&sat)?,
            });
        }
        Ok(result.unwrap_or_else(|| self.clone()))
    }

    fn leading_monomials(&self) -> Result<Vec<Monomial>> {
        let gb = self.groebner(MonomialOrder::DegRevLex)?;
        Ok(gb
            .iter()
            .map(|g| g.leading_term(MonomialOrder::DegRevLex).unwrap().0.clone())
            .collect())
    }

    /// Projective dimension and degree from the Hilbert series of the
    /// leading-term ideal. The irrelevant and unit cases report dimension -1
    /// with degree 0. Errors when a generator is not homogeneous.
    pub fn dimension_degree(&self) -> Result<(isize, u64)> {
        for g in &self.gens {
            if !g.is_homogeneous() {
                return Err(Error::NonHomogeneous);
            }
        }
        let lt = self.leading_monomials()?;
        match hilbert::dim_degree(&lt, self.ring.nvars()) {
            None => Ok((-1, 0)),
            Some((0, _)) => Ok((-1, 0)),
            Some((krull, deg)) => Ok((krull as isize - 1, deg as u64)),
        }
    }

    /// Length of the quotient ring for a zero-dimensional affine ideal,
    /// i.e. the number of solutions counted with multiplicity. None when
    /// the ideal is not zero-dimensional.
    pub fn zero_dim_length(&self) -> Result<Option<u64>> {
        let gb = self.groebner(MonomialOrder::DegRevLex)?;
        if is_unit_basis(&gb) {
            return Ok(Some(0));
        }
        let lt: Vec<Monomial> = gb
            .iter()
            .map(|g| g.leading_term(MonomialOrder::DegRevLex).unwrap().0.clone())
            .collect();
        match hilbert::dim_degree(&lt, self.ring.nvars()) {
            Some((0, len)) => Ok(Some(len as u64)),
            _ => Ok(None),
        }
    }

    /// Moves the ideal to a ring with identically named variables.
    pub fn into_ring(&self, target: &Arc<Ring>) -> Result<Ideal> {
        let gens = self
            .gens
            .iter()
            .map(|g| g.into_ring(target))
            .collect::<Result<Vec<_>>>()?;
        Ideal::new(target, gens)
    }

    /// Renames variables positionally into `target` (same variable count).
    pub fn rename(&self, target: &Arc<Ring>) -> Result<Ideal> {
        if target.nvars() != self.ring.nvars() {
            return Err(Error::RingMismatch);
        }
        let map: Vec<usize> = (0..self.ring.nvars()).collect();
        let gens = self.gens.iter().map(|g| g.map_vars(target, &map)).collect();
        Ideal::new(target, gens)
    }
}
