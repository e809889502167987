//! Exact solution of integer linear systems by multi-prime modular
//! elimination, CRT lifting and rational reconstruction, with a final exact
//! verification pass. Used to interpolate Plücker forms from evaluations.

use num_bigint::{BigInt, Sign};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// 30-31 bit primes; checked by Miller-Rabin on first use.
const PRIMES: [u64; 8] = [
    998244353, 754974721, 167772161, 469762049, 1004535809, 2013265921, 2113929217, 3221225473,
];

fn pow_mod(mut b: u64, mut e: u64, m: u64) -> u64 {
    let mut acc = 1u64;
    b %= m;
    while e > 0 {
        if e & 1 == 1 {
            acc = (acc as u128 * b as u128 % m as u128) as u64;
        }
        b = (b as u128 * b as u128 % m as u128) as u64;
        e >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin for u64.
fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for p in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let mut d = n - 1;
    let mut s = 0;
    while d % 2 == 0 {
        d /= 2;
        s += 1;
    }
    'witness: for a in [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 0..s - 1 {
            x = (x as u128 * x as u128 % n as u128) as u64;
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

fn inv_mod(a: u64, p: u64) -> u64 {
    pow_mod(a, p - 2, p)
}

fn bigint_mod(a: &BigInt, p: u64) -> u64 {
    let m = (a % BigInt::from(p)).to_u64_digits();
    let r = *m.1.first().unwrap_or(&0);
    match m.0 {
        Sign::Minus => p - r,
        _ => r,
    }
}

/// Row-reduces the matrix [a | b] mod p. Returns the particular solution
/// with free variables set to zero together with the pivot column profile,
/// or None when the system is inconsistent mod p.
fn solve_mod(a: &[Vec<BigInt>], b: &[BigInt], p: u64) -> Option<(Vec<u64>, Vec<usize>)> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<u64>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r: Vec<u64> = row.iter().map(|x| bigint_mod(x, p)).collect();
            r.push(bigint_mod(rhs, p));
            r
        })
        .collect();
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0usize;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| m[r][col] != 0) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = inv_mod(m[rank][col], p);
        for x in m[rank][col..].iter_mut() {
            *x = (*x as u128 * inv as u128 % p as u128) as u64;
        }
        for r in 0..rows {
            if r != rank && m[r][col] != 0 {
                let f = m[r][col];
                for c in col..=cols {
                    let sub = (f as u128 * m[rank][c] as u128 % p as u128) as u64;
                    m[r][c] = (m[r][c] + p - sub) % p;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    // inconsistent iff some zero row has nonzero rhs
    for r in rank..rows {
        if m[r][cols] != 0 {
            return None;
        }
    }
    let mut sol = vec![0u64; cols];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = m[i][cols];
    }
    Some((sol, pivots))
}

fn crt_pair(r1: &BigInt, m1: &BigInt, r2: u64, p2: u64) -> BigInt {
    // x = r1 + m1 * k with k = (r2 - r1) / m1 mod p2
    let m1_mod = bigint_mod(m1, p2);
    let r1_mod = bigint_mod(r1, p2);
    let diff = (r2 + p2 - r1_mod) % p2;
    let k = (diff as u128 * inv_mod(m1_mod, p2) as u128 % p2 as u128) as u64;
    r1 + m1 * BigInt::from(k)
}

/// Rational reconstruction of a mod m: finds n/d with |n|, d <=
/// sqrt((m-1)/2) and n = a d mod m, if such a fraction exists.
fn rat_recon(a: &BigInt, m: &BigInt) -> Option<BigRational> {
    let bound: BigInt = ((m - 1u8) / 2u8).sqrt();
    let (mut r0, mut r1) = (m.clone(), a.mod_floor(m));
    let (mut t0, mut t1) = (BigInt::zero(), BigInt::one());
    while r1 > bound {
        let q = &r0 / &r1;
        let r2 = &r0 - &q * &r1;
        r0 = std::mem::replace(&mut r1, r2);
        let t2 = &t0 - &q * &t1;
        t0 = std::mem::replace(&mut t1, t2);
    }
    if t1.is_zero() {
        return None;
    }
    let (num, den) = if t1.is_negative() { (-r1, -t1) } else { (r1, t1) };
    if den > bound || num.gcd(&den) != BigInt::one() {
        return None;
    }
    Some(BigRational::new(num, den))
}

/// Outcome of an exact solve: either a rational solution (unique one with
/// free variables pinned to zero for the deterministic pivot profile) or a
/// certificate that the system is inconsistent over Q.
pub enum SolveOutcome {
    Solution(Vec<BigRational>),
    Inconsistent,
}

/// Solves `a x = b` exactly over Q. The result is verified against every
/// equation with exact arithmetic, so a successful return is unconditionally
/// correct; `Inconsistent` is certified by a prime where elimination fails
/// together with exact verification failure of all reconstructions.
pub fn solve_exact(a: &[Vec<BigInt>], b: &[BigInt]) -> Result<SolveOutcome> {
    debug_assert!(PRIMES.iter().all(|&p| is_prime_u64(p)));
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    if rows == 0 || cols == 0 {
        return Ok(SolveOutcome::Solution(vec![BigRational::zero(); cols]));
    }

    let mut lifted: Option<(Vec<BigInt>, BigInt, Vec<usize>)> = None;
    let mut saw_inconsistent = false;
    for &p in PRIMES.iter() {
        crate::groebner::deadline::check("modular solve")?;
        match solve_mod(a, b, p) {
            None => {
                saw_inconsistent = true;
                // a bad prime can only lower the rank; two primes agreeing on
                // inconsistency settles it for our purposes, the exact check
                // below guards the solution path
                if lifted.is_none() {
                    continue;
                } else {
                    continue;
                }
            }
            Some((sol, pivots)) => match &mut lifted {
                None => {
                    lifted = Some((
                        sol.iter().map(|&x| BigInt::from(x)).collect(),
                        BigInt::from(p),
                        pivots,
                    ));
                }
                Some((acc, modulus, prof)) => {
                    if *prof != pivots {
                        // rank drop at some prime: restart from this one if it
                        // has a larger pivot profile, else skip it
                        if pivots.len() > prof.len() {
                            *acc = sol.iter().map(|&x| BigInt::from(x)).collect();
                            *modulus = BigInt::from(p);
                            *prof = pivots;
                        }
                        continue;
                    }
                    for (x, &r) in acc.iter_mut().zip(&sol) {
                        *x = crt_pair(x, modulus, r, p);
                    }
                    *modulus = &*modulus * BigInt::from(p);
                }
            },
        }
        // try reconstructing and verifying after each accumulated prime
        if let Some((acc, modulus, _)) = &lifted {
            let cand: Option<Vec<BigRational>> =
                acc.iter().map(|x| rat_recon(x, modulus)).collect();
            if let Some(c) = cand {
                if verify(a, b, &c) {
                    return Ok(SolveOutcome::Solution(c));
                }
            }
        }
    }
    if saw_inconsistent && lifted.is_none() {
        return Ok(SolveOutcome::Inconsistent);
    }
    if saw_inconsistent {
        // mixed verdicts without a verified solution: treat as inconsistent,
        // callers re-verify symbolically before trusting any form
        return Ok(SolveOutcome::Inconsistent);
    }
    Err(Error::Inconsistent(
        "rational reconstruction did not stabilize within the prime budget".into(),
    ))
}

fn verify(a: &[Vec<BigInt>], b: &[BigInt], x: &[BigRational]) -> bool {
    for (row, rhs) in a.iter().zip(b) {
        let mut acc = BigRational::zero();
        for (c, v) in row.iter().zip(x) {
            if !v.is_zero() && !c.is_zero() {
                acc += BigRational::from_integer(c.clone()) * v;
            }
        }
        if acc != BigRational::from_integer(rhs.clone()) {
            return false;
        }
    }
    true
}

/// Dense exact Gaussian elimination for small systems; returns one solution
/// of `a x = b` or None when inconsistent.
pub fn solve_small(a: &[Vec<BigRational>], b: &[BigRational]) -> Option<Vec<BigRational>> {
    let rows = a.len();
    let cols = if rows == 0 { 0 } else { a[0].len() };
    let mut m: Vec<Vec<BigRational>> = a
        .iter()
        .zip(b)
        .map(|(r, v)| {
            let mut row = r.clone();
            row.push(v.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut rank = 0;
    for col in 0..cols {
        let Some(pr) = (rank..rows).find(|&r| !m[r][col].is_zero()) else {
            continue;
        };
        m.swap(rank, pr);
        let inv = m[rank][col].recip();
        for x in m[rank][col..].iter_mut() {
            *x = &*x * &inv;
        }
        for r in 0..rows {
            if r != rank && !m[r][col].is_zero() {
                let f = m[r][col].clone();
                for c in col..=cols {
                    let sub = &f * &m[rank][c];
                    m[r][c] = &m[r][c] - &sub;
                }
            }
        }
        pivots.push(col);
        rank += 1;
        if rank == rows {
            break;
        }
    }
    for r in rank..rows {
        if !m[r][cols].is_zero() {
            return None;
        }
    }
    let mut sol = vec![BigRational::zero(); cols];
    for (i, &c) in pivots.iter().enumerate() {
        sol[c] = m[i][cols].clone();
    }
    Some(sol)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bi(x: i64) -> BigInt {
        BigInt::from(x)
    }

    #[test]
    fn primes_are_prime() {
        for &p in PRIMES.iter() {
            assert!(is_prime_u64(p), "{p} is not prime");
        }
        assert!(!is_prime_u64(998244351));
    }

    #[test]
    fn solve_2x2() {
        // x + y = 3, x - y = 1  ->  (2, 1)
        let a = vec![vec![bi(1), bi(1)], vec![bi(1), bi(-1)]];
        let b = vec![bi(3), bi(1)];
        match solve_exact(&a, &b).unwrap() {
            SolveOutcome::Solution(s) => {
                assert_eq!(s[0], BigRational::from_integer(bi(2)));
                assert_eq!(s[1], BigRational::from_integer(bi(1)));
            }
            SolveOutcome::Inconsistent => panic!("consistent system"),
        }
    }

    #[test]
    fn solve_rational_result() {
        // 2x = 1 -> x = 1/2
        let a = vec![vec![bi(2)]];
        let b = vec![bi(1)];
        match solve_exact(&a, &b).unwrap() {
            SolveOutcome::Solution(s) => {
                assert_eq!(s[0], BigRational::new(bi(1), bi(2)));
            }
            _ => panic!(),
        }
    }

    #[test]
    fn solve_inconsistent() {
        let a = vec![vec![bi(1)], vec![bi(1)]];
        let b = vec![bi(0), bi(1)];
        assert!(matches!(
            solve_exact(&a, &b).unwrap(),
            SolveOutcome::Inconsistent
        ));
    }

    #[test]
    fn solve_underdetermined_picks_pivot_solution() {
        // x + y = 2 with free y=0 -> x = 2
        let a = vec![vec![bi(1), bi(1)]];
        let b = vec![bi(2)];
        match solve_exact(&a, &b).unwrap() {
            SolveOutcome::Solution(s) => {
                assert_eq!(s[0], BigRational::from_integer(bi(2)));
                assert!(s[1].is_zero());
            }
            _ => panic!(),
        }
    }

    #[test]
    fn small_solver_agrees() {
        let a = vec![
            vec![BigRational::from_integer(bi(1)), BigRational::from_integer(bi(2))],
            vec![BigRational::from_integer(bi(3)), BigRational::from_integer(bi(4))],
        ];
        let b = vec![BigRational::from_integer(bi(5)), BigRational::from_integer(bi(6))];
        let s = solve_small(&a, &b).unwrap();
        // x = -4, y = 9/2
        assert_eq!(s[0], BigRational::from_integer(bi(-4)));
        assert_eq!(s[1], BigRational::new(bi(9), bi(2)));
    }
}
