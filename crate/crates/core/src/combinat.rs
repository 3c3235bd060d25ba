//! Bounded weak compositions, Kummer carries and prime factorizations of
//! factorial-type integers.
//!
//! Big integers coming from factorials are never materialized here; they are
//! kept as `{prime -> exponent}` maps assembled with Legendre sums.

use alloc::collections::{BTreeMap, BTreeSet};
use alloc::format;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::{Error, Result};

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin; the witness set is exact for all `u64`.
pub fn is_prime(n: u64) -> bool {
    const BASES: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];
    if n < 2 {
        return false;
    }
    for &p in &BASES {
        if n.is_multiple_of(p) {
            return n == p;
        }
    }
    let mut d = n - 1;
    let mut r = 0;
    while d.is_multiple_of(2) {
        d /= 2;
        r += 1;
    }
    'witness: for &a in &BASES {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..r {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primes `<= n` by the sieve of Eratosthenes.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return Vec::new();
    }
    let n = n as usize;
    let mut composite = vec![false; n + 1];
    let mut primes = Vec::new();
    for i in 2..=n {
        if !composite[i] {
            primes.push(i as u64);
            let mut j = i * i;
            while j <= n {
                composite[j] = true;
                j += i;
            }
        }
    }
    primes
}

/// `Some(m)` when `q = p^m` with `m >= 1`.
pub fn prime_power_exponent(q: u64, p: u64) -> Option<u32> {
    if p < 2 || q < p {
        return None;
    }
    let mut m = 0;
    let mut q = q;
    while q.is_multiple_of(p) {
        q /= p;
        m += 1;
    }
    (q == 1).then_some(m)
}

/// Whether some `p^m` with `m >= 1` lies in `[lo, hi]`.
pub fn prime_power_in_range(p: u64, lo: u64, hi: u64) -> Option<u64> {
    let mut q = p;
    while q <= hi {
        if q >= lo {
            return Some(q);
        }
        q = q.checked_mul(p)?;
    }
    None
}

/// A weak composition: nonnegative parts with a fixed total.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct WeakComposition {
    pub parts: Vec<u32>,
}

impl WeakComposition {
    pub fn total(&self) -> u32 {
        self.parts.iter().sum()
    }

    /// Componentwise `self <= other`.
    pub fn is_below(&self, other: &WeakComposition) -> bool {
        self.parts.iter().zip(&other.parts).all(|(a, b)| a <= b)
    }
}

/// Compositions of `k` into `bounds.len()` parts with `parts[i] <= bounds[i]`,
/// in lexicographically descending order.
pub fn weak_compositions(bounds: &[u32], k: u32) -> Vec<WeakComposition> {
    let mut out = Vec::new();
    if bounds.is_empty() {
        if k == 0 {
            out.push(WeakComposition { parts: Vec::new() });
        }
        return out;
    }
    // suffix[i] = sum of bounds[i..]
    let mut suffix = vec![0u64; bounds.len() + 1];
    for i in (0..bounds.len()).rev() {
        suffix[i] = suffix[i + 1] + u64::from(bounds[i]);
    }
    if u64::from(k) > suffix[0] {
        return out;
    }
    let mut parts = vec![0u32; bounds.len()];
    fill(bounds, &suffix, 0, k, &mut parts, &mut out);
    out
}

fn fill(bounds: &[u32], suffix: &[u64], i: usize, remaining: u32, parts: &mut [u32], out: &mut Vec<WeakComposition>) {
    if i + 1 == bounds.len() {
        parts[i] = remaining;
        out.push(WeakComposition { parts: parts.to_vec() });
        return;
    }
    let hi = remaining.min(bounds[i]);
    let lo = u64::from(remaining).saturating_sub(suffix[i + 1]) as u32;
    for v in (lo..=hi).rev() {
        parts[i] = v;
        fill(bounds, suffix, i + 1, remaining - v, parts, out);
    }
}

/// `#C(n, bounds, k)`, zero for negative `k`.
pub fn composition_count(bounds: &[u32], k: i64) -> u64 {
    if k < 0 {
        return 0;
    }
    let k = k as usize;
    let mut ways = vec![0u64; k + 1];
    ways[0] = 1;
    for &b in bounds {
        let b = b as usize;
        let mut next = vec![0u64; k + 1];
        let mut window = 0u64;
        for e in 0..=k {
            window += ways[e];
            if e > b {
                window -= ways[e - b - 1];
            }
            next[e] = window;
        }
        ways = next;
    }
    ways[k]
}

/// `delta_i = #C(n, bounds, i) - #C(n, bounds, i - 1)`.
pub fn composition_count_delta(bounds: &[u32], i: i64) -> i64 {
    composition_count(bounds, i) as i64 - composition_count(bounds, i - 1) as i64
}

/// Indices of the set bits of `n`.
pub fn bit_positions(n: u64) -> Result<BTreeSet<u32>> {
    if n == 0 {
        return Err(Error::ZeroBitPositions);
    }
    Ok((0..64).filter(|&i| n >> i & 1 == 1).collect())
}

/// Number of carries when adding `a` and `b` in base `p`.
pub fn carries_base_p(a: u64, b: u64, p: u64) -> Result<u32> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let (mut a, mut b) = (a, b);
    let mut carry = 0u64;
    let mut count = 0;
    while a > 0 || b > 0 || carry > 0 {
        let digit = a % p + b % p + carry;
        carry = u64::from(digit >= p);
        count += carry as u32;
        a /= p;
        b /= p;
    }
    Ok(count)
}

/// Exponent of `p` in `n!`.
pub fn legendre(n: u64, p: u64) -> u64 {
    let mut total = 0;
    let mut q = n;
    while q > 0 {
        q /= p;
        total += q;
    }
    total
}

/// Exponent of `p` in `n > 0`.
pub fn p_adic_valuation(mut n: u64, p: u64) -> u32 {
    debug_assert!(n > 0 && p > 1);
    let mut v = 0;
    while n.is_multiple_of(p) {
        n /= p;
        v += 1;
    }
    v
}

/// Magnitude of a nonzero integer as `{prime -> exponent}`; empty means one.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct PrimeFactorization {
    factors: BTreeMap<u64, u32>,
}

impl PrimeFactorization {
    pub fn one() -> Self {
        Self::default()
    }

    /// Trial division; intended for small direct values.
    pub fn of_u64(n: u64) -> Result<Self> {
        if n == 0 {
            return Err(Error::Precondition("zero has no factorization".into()));
        }
        let mut factors = BTreeMap::new();
        let mut n = n;
        let mut p = 2u64;
        while p * p <= n {
            while n.is_multiple_of(p) {
                *factors.entry(p).or_insert(0) += 1;
                n /= p;
            }
            p += if p == 2 { 1 } else { 2 };
        }
        if n > 1 {
            *factors.entry(n).or_insert(0) += 1;
        }
        Ok(Self { factors })
    }

    pub fn from_pairs(pairs: &[(u64, u32)]) -> Self {
        let mut factors = BTreeMap::new();
        for &(p, e) in pairs {
            if e > 0 {
                *factors.entry(p).or_insert(0) += e;
            }
        }
        Self { factors }
    }

    pub fn factors(&self) -> &BTreeMap<u64, u32> {
        &self.factors
    }

    pub fn exponent(&self, p: u64) -> u32 {
        self.factors.get(&p).copied().unwrap_or(0)
    }

    pub fn divisible_by(&self, p: u64) -> bool {
        self.exponent(p) > 0
    }

    pub fn primes(&self) -> BTreeSet<u64> {
        self.factors.keys().copied().collect()
    }

    pub fn is_one(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn mul(&self, other: &Self) -> Self {
        let mut factors = self.factors.clone();
        for (&p, &e) in &other.factors {
            *factors.entry(p).or_insert(0) += e;
        }
        Self { factors }
    }

    /// Exact quotient; fails when `other` does not divide `self`.
    pub fn div(&self, other: &Self) -> Result<Self> {
        let mut acc = FactorAccumulator::default();
        acc.add(self, 1);
        acc.add(other, -1);
        acc.finish()
    }

    pub fn value(&self) -> BigUint {
        let mut v = BigUint::one();
        for (&p, &e) in &self.factors {
            v *= BigUint::from(p).pow(e);
        }
        v
    }
}

impl fmt::Display for PrimeFactorization {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.factors.is_empty() {
            return f.write_str("1");
        }
        for (i, (p, e)) in self.factors.iter().enumerate() {
            if i > 0 {
                f.write_str(" * ")?;
            }
            if *e == 1 {
                write!(f, "{p}")?;
            } else {
                write!(f, "{p}^{e}")?;
            }
        }
        Ok(())
    }
}

/// Signed exponent bookkeeping for products of factorizations with negative
/// powers; the final result must be a genuine integer.
#[derive(Clone, Debug, Default)]
pub struct FactorAccumulator {
    exponents: BTreeMap<u64, i64>,
}

impl FactorAccumulator {
    pub fn add(&mut self, f: &PrimeFactorization, times: i64) {
        if times == 0 {
            return;
        }
        for (&p, &e) in f.factors() {
            *self.exponents.entry(p).or_insert(0) += i64::from(e) * times;
        }
    }

    pub fn finish(self) -> Result<PrimeFactorization> {
        let mut factors = BTreeMap::new();
        for (p, e) in self.exponents {
            if e < 0 {
                return Err(Error::Internal(format!(
                    "prime {p} has negative exponent {e} in what should be an integer"
                )));
            }
            if e > 0 {
                factors.insert(p, u32::try_from(e).map_err(|_| Error::Internal("exponent overflow".into()))?);
            }
        }
        Ok(PrimeFactorization { factors })
    }
}

pub fn factorial_factorization(n: u64) -> PrimeFactorization {
    let factors = primes_up_to(n).into_iter().map(|p| (p, legendre(n, p) as u32)).collect();
    PrimeFactorization { factors }
}

/// `(sum parts)! / prod(parts_i!)`.
pub fn multinomial_factorization(parts: &[u32]) -> PrimeFactorization {
    let total: u64 = parts.iter().map(|&a| u64::from(a)).sum();
    let factors = primes_up_to(total)
        .into_iter()
        .filter_map(|p| {
            let e = legendre(total, p) - parts.iter().map(|&a| legendre(u64::from(a), p)).sum::<u64>();
            (e > 0).then_some((p, e as u32))
        })
        .collect();
    PrimeFactorization { factors }
}

pub fn binomial_factorization(n: u64, k: u64) -> Result<PrimeFactorization> {
    if k > n {
        return Err(Error::Precondition(format!("binomial({n}, {k}) is zero")));
    }
    Ok(multinomial_factorization(&[k as u32, (n - k) as u32]))
}

/// A multinomial coefficient is odd iff the parts' bit sets are pairwise disjoint.
pub fn is_multinomial_odd(parts: &[u32]) -> bool {
    let mut seen = 0u32;
    for &a in parts {
        if seen & a != 0 {
            return false;
        }
        seen |= a;
    }
    true
}

/// `x (x+1) ... (x+m-1) = (x+m-1)! / (x-1)!`.
pub fn rising_factorial_factorization(x: u64, m: u64) -> Result<PrimeFactorization> {
    if x == 0 {
        return Err(Error::Precondition("rising factorial needs x >= 1".into()));
    }
    factorial_factorization(x + m - 1).div(&factorial_factorization(x - 1))
}

/// Parities of the pair of multinomials that cannot both be odd.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct OneOrOther {
    /// `binom(a_0 + ... + a_n; a_0, ..., a_n)` is even.
    pub full_even: bool,
    /// `binom(a_0 + 1; a_0 + 1 - (a_1 + ... + a_n), a_1, ..., a_n)` is even.
    pub shifted_even: bool,
}

impl OneOrOther {
    pub fn either(self) -> bool {
        self.full_even || self.shifted_even
    }
}

/// Checks the parity pair for `a_0 >= ... >= a_n >= 1` with `n >= 2` and
/// `a_0 >= a_1 + ... + a_n`.
pub fn one_or_other_even(a: &[u32]) -> Result<OneOrOther> {
    if a.len() < 3 {
        return Err(Error::Precondition("need at least three parts".into()));
    }
    if a.windows(2).any(|w| w[0] < w[1]) || a[a.len() - 1] < 1 {
        return Err(Error::Precondition("parts must be nonincreasing and positive".into()));
    }
    let rest: u32 = a[1..].iter().sum();
    if a[0] < rest {
        return Err(Error::Precondition("first part must dominate the sum of the others".into()));
    }
    let full_even = !is_multinomial_odd(a);
    let mut shifted = Vec::with_capacity(a.len());
    shifted.push(a[0] + 1 - rest);
    shifted.extend_from_slice(&a[1..]);
    let shifted_even = !is_multinomial_odd(&shifted);
    Ok(OneOrOther { full_even, shifted_even })
}
