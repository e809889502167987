//! Hilbert series of monomial ideals, used for dimension, degree and
//! zero-dimensional length computations.
//!
//! For a monomial ideal M in v variables the numerator N(t) with
//! HS(S/M) = N(t) / (1-t)^v is computed by the pivot recursion
//! N(M) = N(M + <x>) + t * N(M : x).

use crate::poly::Monomial;

type Ser = Vec<i128>;

fn ser_mul(a: &Ser, b: &Ser) -> Ser {
    let mut out = vec![0i128; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        if *x == 0 {
            continue;
        }
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn ser_add_shifted(a: &mut Ser, b: &Ser, shift: usize) {
    if a.len() < b.len() + shift {
        a.resize(b.len() + shift, 0);
    }
    for (j, y) in b.iter().enumerate() {
        a[j + shift] += y;
    }
}

/// Drops generators divisible by another generator.
fn minimalize(gens: &mut Vec<Monomial>) {
    gens.sort_by_key(|m| m.degree());
    let mut out: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens.drain(..) {
        if !out.iter().any(|g| g.divides(&m)) {
            out.push(m);
        }
    }
    *gens = out;
}

fn numerator_rec(mut gens: Vec<Monomial>, nvars: usize) -> Ser {
    minimalize(&mut gens);
    if gens.is_empty() {
        return vec![1];
    }
    if gens.iter().any(|m| m.is_one()) {
        return vec![0];
    }
    // base case: pairwise coprime generators give a complete intersection
    let coprime = gens
        .iter()
        .enumerate()
        .all(|(i, m)| gens[i + 1..].iter().all(|g| m.coprime(g)));
    if coprime {
        let mut acc: Ser = vec![1];
        for m in &gens {
            let d = m.degree() as usize;
            let mut f = vec![0i128; d + 1];
            f[0] = 1;
            f[d] = -1;
            acc = ser_mul(&acc, &f);
        }
        return acc;
    }
    // pivot: the variable hitting the most generators
    let mut counts = vec![0usize; nvars];
    for m in &gens {
        for (v, &e) in m.exps().iter().enumerate() {
            if e > 0 {
                counts[v] += 1;
            }
        }
    }
    let pivot = counts
        .iter()
        .enumerate()
        .max_by_key(|(_, &c)| c)
        .map(|(v, _)| v)
        .unwrap();
    // M + <x_pivot>
    let mut plus: Vec<Monomial> = gens
        .iter()
        .filter(|m| m.exp(pivot) == 0)
        .cloned()
        .collect();
    plus.push(Monomial::var(nvars, pivot));
    // M : x_pivot
    let quot: Vec<Monomial> = gens
        .iter()
        .map(|m| {
            if m.exp(pivot) == 0 {
                m.clone()
            } else {
                let mut e = m.exps().to_vec();
                e[pivot] -= 1;
                Monomial::new(e)
            }
        })
        .collect();
    let mut out = numerator_rec(plus, nvars);
    let q = numerator_rec(quot, nvars);
    ser_add_shifted(&mut out, &q, 1);
    out
}

/// Hilbert data of a monomial ideal: Krull dimension of S/M and its degree
/// (the multiplicity; for Krull dimension 0 this is the vector-space length).
/// Returns None when S/M = 0, i.e. the ideal is the whole ring.
pub fn dim_degree(lt_gens: &[Monomial], nvars: usize) -> Option<(usize, u128)> {
    let mut num = numerator_rec(lt_gens.to_vec(), nvars);
    if num.iter().all(|&c| c == 0) {
        return None;
    }
    // factor out (1 - t)^e
    let mut e = 0usize;
    loop {
        let at_one: i128 = num.iter().sum();
        if at_one != 0 {
            break;
        }
        // divide by (1 - t): q_k = n_k + q_{k-1}
        let mut q = vec![0i128; num.len().saturating_sub(1).max(1)];
        let mut carry = 0i128;
        for k in 0..num.len().saturating_sub(1) {
            carry += num[k];
            q[k] = carry;
        }
        num = q;
        e += 1;
        if e > nvars {
            break;
        }
    }
    let degree: i128 = num.iter().sum();
    debug_assert!(e <= nvars, "numerator divisible by (1-t)^(v+1)");
    Some((nvars - e, degree.unsigned_abs()))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(e: &[u32]) -> Monomial {
        Monomial::new(e.to_vec())
    }

    #[test]
    fn whole_ring() {
        // S/<> has dimension v, degree 1
        assert_eq!(dim_degree(&[], 3), Some((3, 1)));
    }

    #[test]
    fn unit_ideal() {
        assert_eq!(dim_degree(&[m(&[0, 0, 0])], 3), None);
    }

    #[test]
    fn hypersurface() {
        // <x^2> in k[x,y]: dim 1, degree 2
        assert_eq!(dim_degree(&[m(&[2, 0])], 2), Some((1, 2)));
    }

    #[test]
    fn point_with_multiplicity() {
        // <x^2, y^3>: dim 0, length 6
        assert_eq!(dim_degree(&[m(&[2, 0]), m(&[0, 3])], 2), Some((0, 6)));
    }

    #[test]
    fn twisted_cubic_lt_ideal() {
        // leading terms of the twisted cubic GB under degrevlex:
        // x1^2, x1 x2, x2^2 in k[x0..x3] -> cone dim 2, degree 3
        let gens = vec![
            m(&[0, 2, 0, 0]),
            m(&[0, 1, 1, 0]),
            m(&[0, 0, 2, 0]),
        ];
        assert_eq!(dim_degree(&gens, 4), Some((2, 3)));
    }

    #[test]
    fn mixed_non_coprime() {
        // <x y, x z> = <x> ∩ <y,z>: dim 2 (from <x>), degree 1
        let gens = vec![m(&[1, 1, 0]), m(&[1, 0, 1])];
        assert_eq!(dim_degree(&gens, 3), Some((2, 1)));
    }
}
