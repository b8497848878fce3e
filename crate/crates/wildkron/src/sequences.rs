//! The coordinate sequences `A_i`, `B_i` and `s_r` of the quiver `K_n`.
//!
//! `A_i` is defined by `A_0 = 0`, `A_1 = 1`, `A_{i+2} = n·A_{i+1} - A_i`; the
//! dimension vectors of the indecomposable preprojectives are `(A_{i-1}, A_i)`
//! and of the preinjectives `(A_{j+1}, A_j)`. The interleaved sequence `B` is
//! given by `B_{2i} = A_i` and `B_{2i+1} = A_{i+1} - A_i`, and for odd `r`
//! the alternating sum `s_r = A_r - A_{r-2} + A_{r-4} - ...` satisfies
//! `n·s_r = A_{r+1}`.
//!
//! For `n = 3` these specialize to Fibonacci numbers: `A_i = F_{2i}` and
//! `B_{2i+1} = F_{2i+1}`.
//!
//! Everything here is exact `BigInt` arithmetic; the values grow like
//! `((n + sqrt(n²-4))/2)^i` and overflow 64-bit words around `i ≈ 40` already
//! for `n = 3`.

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::{Error, Result};

/// Memoized `A_i` / `B_i` values for one fixed `n`.
///
/// Growth happens on demand through the accessor methods. The cache is cheap
/// to build, so callers that need one on a different thread simply create
/// their own (the methods take `&mut self`).
#[derive(Debug, Clone)]
pub struct SeqCache {
    n: u32,
    a_vals: Vec<BigInt>,
    b_vals: Vec<BigInt>,
}

impl SeqCache {
    /// Creates an empty cache for the quiver `K_n`. Fails for `n < 3`.
    pub fn new(n: u32) -> Result<Self> {
        if n < 3 {
            return Err(Error::InvalidParameter(format!("n must be >= 3, got {n}")));
        }
        Ok(SeqCache {
            n,
            a_vals: vec![BigInt::zero(), BigInt::one()],
            b_vals: vec![BigInt::zero(), BigInt::one()],
        })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    fn grow_a(&mut self, upto: usize) {
        let n = BigInt::from(self.n);
        while self.a_vals.len() <= upto {
            let k = self.a_vals.len();
            let next = &n * &self.a_vals[k - 1] - &self.a_vals[k - 2];
            self.a_vals.push(next);
        }
    }

    fn grow_b(&mut self, upto: usize) {
        // B_{2i} = A_i, B_{2i+1} = A_{i+1} - A_i.
        self.grow_a(upto / 2 + 1);
        while self.b_vals.len() <= upto {
            let k = self.b_vals.len();
            let next = if k.is_multiple_of(2) {
                self.a_vals[k / 2].clone()
            } else {
                &self.a_vals[k / 2 + 1] - &self.a_vals[k / 2]
            };
            self.b_vals.push(next);
        }
    }

    /// `A_i`, exact.
    pub fn a(&mut self, i: usize) -> BigInt {
        self.grow_a(i);
        self.a_vals[i].clone()
    }

    /// `B_i`, exact.
    pub fn b(&mut self, i: usize) -> BigInt {
        self.grow_b(i);
        self.b_vals[i].clone()
    }

    /// `s_r = A_r - A_{r-2} + ... ± A_1` for odd `r`; satisfies `n·s_r = A_{r+1}`.
    pub fn s(&mut self, r: usize) -> Result<BigInt> {
        if r.is_multiple_of(2) {
            return Err(Error::InvalidParameter(format!(
                "s_r requires odd r, got {r}"
            )));
        }
        self.grow_a(r);
        let mut acc = BigInt::zero();
        let mut sign = BigInt::one();
        let mut k = r as i64;
        while k >= 1 {
            acc += &sign * &self.a_vals[k as usize];
            sign = -sign;
            k -= 2;
        }
        Ok(acc)
    }
}

/// `A_i` for the quiver `K_n`. Fails for `n < 3`.
pub fn a_seq(n: u32, i: usize) -> Result<BigInt> {
    let mut cache = SeqCache::new(n)?;
    Ok(cache.a(i))
}

/// `B_i` for the quiver `K_n`. Fails for `n < 3`.
pub fn b_seq(n: u32, i: usize) -> Result<BigInt> {
    let mut cache = SeqCache::new(n)?;
    Ok(cache.b(i))
}

/// `s_r` for odd `r >= 1`. Fails for `n < 3` or even `r`.
pub fn s_r(n: u32, r: usize) -> Result<BigInt> {
    let mut cache = SeqCache::new(n)?;
    cache.s(r)
}

/// Exact verification of the sequence identities over `n_lo..=n_hi` with
/// indices up to `upto`; see [`crate::verify::identities_suite`] for the
/// list of checks. The report carries the first counterexample if any.
pub fn verify_identities(n_lo: u32, n_hi: u32, upto: usize) -> crate::verify::Report {
    crate::verify::identities_suite(n_lo, n_hi, upto)
}

/// Exact verification of the ratio inequalities over `n_lo..=n_hi`; the
/// five-index ratio-equation scan runs over indices up to `tuple_bound`.
pub fn verify_inequalities(
    n_lo: u32,
    n_hi: u32,
    upto: usize,
    tuple_bound: usize,
) -> crate::verify::Report {
    crate::verify::inequalities_suite(n_lo, n_hi, upto, tuple_bound)
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Independent Fibonacci oracle: F_0 = 0, F_1 = 1, F_{j+2} = F_{j+1} + F_j.
    fn fib(j: usize) -> BigInt {
        let mut a = BigInt::zero();
        let mut b = BigInt::one();
        for _ in 0..j {
            let next = &a + &b;
            a = b;
            b = next;
        }
        a
    }

    #[test]
    fn a_values_n3() {
        let mut c = SeqCache::new(3).unwrap();
        let vals: Vec<BigInt> = (0..=5).map(|i| c.a(i)).collect();
        let expected: Vec<BigInt> = [0, 1, 3, 8, 21, 55].iter().map(|&v| v.into()).collect();
        assert_eq!(vals, expected);
    }

    #[test]
    fn a_zero_and_closed_forms() {
        for n in 3..=8u32 {
            assert_eq!(a_seq(n, 0).unwrap(), BigInt::zero());
            assert_eq!(a_seq(n, 1).unwrap(), BigInt::one());
            assert_eq!(a_seq(n, 2).unwrap(), BigInt::from(n));
            // A_4 = n³ - 2n
            let n_big = BigInt::from(n);
            assert_eq!(a_seq(n, 4).unwrap(), &n_big * &n_big * &n_big - 2 * &n_big);
        }
        assert_eq!(a_seq(4, 4).unwrap(), BigInt::from(56));
    }

    #[test]
    fn a_is_even_index_fibonacci_for_n3() {
        let mut c = SeqCache::new(3).unwrap();
        for i in 0..=15 {
            assert_eq!(c.a(i), fib(2 * i), "A_{i} != F_{}", 2 * i);
        }
    }

    #[test]
    fn b_small_table() {
        for n in 3..=8u32 {
            let m = i64::from(n);
            let mut c = SeqCache::new(n).unwrap();
            let vals: Vec<BigInt> = (0..=6).map(|i| c.b(i)).collect();
            let expected: Vec<BigInt> = [0, 1, 1, m - 1, m, m * m - m - 1, m * m - 1]
                .iter()
                .map(|&v| v.into())
                .collect();
            assert_eq!(vals, expected, "B table mismatch for n={n}");
        }
        assert_eq!(b_seq(3, 7).unwrap(), BigInt::from(13));
        assert_eq!(b_seq(4, 7).unwrap(), BigInt::from(41));
    }

    #[test]
    fn b_odd_is_fibonacci_for_n3() {
        let mut c = SeqCache::new(3).unwrap();
        for i in 0..=15 {
            assert_eq!(c.b(2 * i + 1), fib(2 * i + 1));
        }
    }

    #[test]
    fn s_values() {
        assert_eq!(s_r(3, 1).unwrap(), BigInt::one());
        assert_eq!(s_r(3, 3).unwrap(), BigInt::from(7));
        assert_eq!(s_r(4, 3).unwrap(), BigInt::from(14));
        assert!(s_r(3, 2).is_err());
        assert!(s_r(2, 1).is_err());
    }

    #[test]
    fn n_times_s_is_a_next() {
        for n in 3..=8u32 {
            let mut c = SeqCache::new(n).unwrap();
            for r in (1..=25usize).step_by(2) {
                assert_eq!(BigInt::from(n) * c.s(r).unwrap(), c.a(r + 1));
            }
        }
    }

    #[test]
    fn verification_entry_points() {
        assert!(verify_identities(3, 4, 8).ok());
        assert!(verify_inequalities(3, 4, 8, 4).ok());
    }

    #[test]
    fn b_monotone_from_index_two() {
        // B_1 = B_2 = 1 for every n (as with Fibonacci numbers); strict
        // growth starts at index 2.
        for n in 3..=8u32 {
            let mut c = SeqCache::new(n).unwrap();
            assert_eq!(c.b(1), c.b(2));
            for i in 2..=50usize {
                assert!(c.b(i) < c.b(i + 1), "B not strict at i={i}, n={n}");
            }
        }
    }
}
