//! Ordered variable registries.
//!
//! A `Ring` is just the list of variable names of a polynomial ring over Q.
//! Variable order is significant: monomial orders, block elimination and all
//! canonical forms refer to it. Rings are immutable and shared via `Arc`.

use std::sync::Arc;

use crate::error::{Error, Result};

#[derive(Debug, PartialEq, Eq, Hash)]
pub struct Ring {
    vars: Vec<String>,
}

impl Ring {
    pub fn new<S: Into<String>>(vars: Vec<S>) -> Arc<Ring> {
        let vars: Vec<String> = vars.into_iter().map(Into::into).collect();
        debug_assert!({
            let mut v = vars.clone();
            v.sort();
            v.dedup();
            v.len() == vars.len()
        });
        Arc::new(Ring { vars })
    }

    /// The ring Q[x_0, ..., x_n].
    pub fn projective(n: usize) -> Arc<Ring> {
        Ring::new((0..=n).map(|i| format!("x{i}")).collect())
    }

    /// The ring Q[y_0, ..., y_n] of dual coordinates.
    pub fn projective_dual(n: usize) -> Arc<Ring> {
        Ring::new((0..=n).map(|i| format!("y{i}")).collect())
    }

    pub fn nvars(&self) -> usize {
        self.vars.len()
    }

    pub fn var_name(&self, i: usize) -> &str {
        &self.vars[i]
    }

    pub fn var_names(&self) -> &[String] {
        &self.vars
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.vars.iter().position(|v| v == name)
    }

    /// New ring with `names` prepended before the existing variables.
    pub fn extend_front<S: Into<String>>(&self, names: Vec<S>) -> Arc<Ring> {
        let mut vars: Vec<String> = names.into_iter().map(Into::into).collect();
        vars.extend(self.vars.iter().cloned());
        Ring::new(vars)
    }

    /// New ring with `names` appended after the existing variables.
    pub fn extend_back<S: Into<String>>(&self, names: Vec<S>) -> Arc<Ring> {
        let mut vars = self.vars.clone();
        vars.extend(names.into_iter().map(Into::into));
        Ring::new(vars)
    }

    /// Ring containing only the selected variables, in their current order.
    pub fn subring(&self, keep: &[usize]) -> Arc<Ring> {
        Ring::new(keep.iter().map(|&i| self.vars[i].clone()).collect())
    }

    /// Positions of `names` within this ring; errors on unknown names.
    pub fn positions(&self, names: &[String]) -> Result<Vec<usize>> {
        names
            .iter()
            .map(|n| {
                self.index_of(n)
                    .ok_or_else(|| Error::BadIndices(format!("unknown variable {n}")))
            })
            .collect()
    }
}

/// Two ring handles denote the same ring when their variable lists agree.
pub fn same_ring(a: &Arc<Ring>, b: &Arc<Ring>) -> bool {
    Arc::ptr_eq(a, b) || a.vars == b.vars
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn projective_ring_names() {
        let r = Ring::projective(3);
        assert_eq!(r.nvars(), 4);
        assert_eq!(r.var_name(0), "x0");
        assert_eq!(r.var_name(3), "x3");
        assert_eq!(r.index_of("x2"), Some(2));
        assert_eq!(r.index_of("z9"), None);
    }

    #[test]
    fn extend_and_subring() {
        let r = Ring::projective(2);
        let e = r.extend_front(vec!["t"]);
        assert_eq!(e.var_name(0), "t");
        assert_eq!(e.var_name(1), "x0");
        let s = e.subring(&[1, 2, 3]);
        assert!(same_ring(&s, &Ring::projective(2)));
    }
}
