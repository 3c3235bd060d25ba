//! The peak determinant `|det M_d|` in closed form, assembled as a prime
//! factorization.
//!
//! For odd socle degree `t = 2s + 1` and `d_0 <= ceil(t/2)`, WLP in
//! characteristic `p` is equivalent to `p` not dividing the determinant of
//! `x l^{d_0} : [S/J]_{s+1-d_0} -> [S/J]_{s+1}` on
//! `S/J = K[x_1..x_n]/(x_1^{d_1}, ..., x_n^{d_n})`.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::vec::Vec;

use num_bigint::BigInt;

use crate::combinat::{
    composition_count, composition_count_delta, factorial_factorization, multinomial_factorization,
    rising_factorial_factorization, weak_compositions, FactorAccumulator, PrimeFactorization,
};
use crate::domain::{Characteristic, DegreeTuple};
use crate::linalg::bareiss_determinant;
use crate::oracle::multiplication_matrix;
use crate::{Error, Method, Result, TheoremId, Verdict, Witness};

/// Largest peak matrix the brute-force determinant will attempt.
pub const BRUTEFORCE_DIMENSION_GUARD: usize = 2000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DeterminantReport {
    pub tuple: DegreeTuple,
    /// `|det M_d|`.
    pub magnitude: PrimeFactorization,
    /// The primes dividing `magnitude`.
    pub bad_primes: BTreeSet<u64>,
    /// `#C(n, d_hat - 1, s + 1)`.
    pub square_size: usize,
}

impl DeterminantReport {
    /// WLP over the given characteristic.
    pub fn verdict(&self, characteristic: Characteristic) -> Verdict {
        match characteristic.prime() {
            Some(p) if self.bad_primes.contains(&p) => {
                Verdict::fails(Method::Determinant, Witness::Prime { prime: p, exponent: self.magnitude.exponent(p) })
            }
            _ => Verdict::holds(Method::Determinant),
        }
    }
}

fn peak_preconditions(d: &DegreeTuple) -> Result<(u32, u32)> {
    let t = d.socle_degree();
    if t.is_multiple_of(2) {
        return Err(Error::EvenSocleDegree(t));
    }
    if d.top() > d.half_socle_ceil() {
        return Err(Error::TopDegreeTooLarge { top: d.top(), socle: t });
    }
    Ok((t, t / 2))
}

fn caps(d: &DegreeTuple) -> Vec<u32> {
    d.rest().iter().map(|&v| v - 1).collect()
}

/// `|det M_d| = prod_a a! / prod_b b! * prod_{i=0}^{s+1-d_0} rf(i+1, d_0)^{delta_{s+1-d_0-i}}`
/// with `a`, `b` running over the row and column compositions and
/// `delta_i = #C(i) - #C(i-1)`.
pub fn proctor_determinant(d: &DegreeTuple) -> Result<DeterminantReport> {
    let (_, s) = peak_preconditions(d)?;
    let top = d.top();
    let caps = caps(d);
    let low = s + 1 - top;
    let high = s + 1;

    let mut acc = FactorAccumulator::default();
    for a in weak_compositions(&caps, low) {
        for &part in &a.parts {
            acc.add(&factorial_factorization(u64::from(part)), 1);
        }
    }
    let columns = weak_compositions(&caps, high);
    for b in &columns {
        for &part in &b.parts {
            acc.add(&factorial_factorization(u64::from(part)), -1);
        }
    }
    for i in 0..=low {
        let delta = composition_count_delta(&caps, i64::from(low - i));
        let rf = rising_factorial_factorization(u64::from(i) + 1, u64::from(top))?;
        acc.add(&rf, delta);
    }
    let magnitude = acc.finish()?;
    let bad_primes = magnitude.primes();
    Ok(DeterminantReport { tuple: d.clone(), magnitude, bad_primes, square_size: columns.len() })
}

/// Characteristics in which WLP fails, read off the determinant.
pub fn bad_primes(d: &DegreeTuple) -> Result<BTreeSet<u64>> {
    Ok(proctor_determinant(d)?.bad_primes)
}

/// `d_0 = d_1 + ... + d_n - n`: the peak matrix is the single entry
/// `binom(d_0; d_1 - 1, ..., d_n - 1)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LargeTopReport {
    pub tuple: DegreeTuple,
    pub multinomial: PrimeFactorization,
}

impl LargeTopReport {
    pub fn failing_primes(&self) -> BTreeSet<u64> {
        self.multinomial.primes()
    }

    pub fn verdict(&self, characteristic: Characteristic) -> Verdict {
        match characteristic.prime() {
            Some(p) if self.multinomial.divisible_by(p) => Verdict::fails(
                Method::Theorem(TheoremId::SingleEntryDeterminant),
                Witness::Prime { prime: p, exponent: self.multinomial.exponent(p) },
            ),
            _ => Verdict::holds(Method::Theorem(TheoremId::SingleEntryDeterminant)),
        }
    }
}

pub fn is_large_top(d: &DegreeTuple) -> bool {
    let rest = d.rest();
    rest.len() >= 2 && i64::from(d.top()) == rest.iter().map(|&v| i64::from(v)).sum::<i64>() - rest.len() as i64
}

pub fn large_top_case(d: &DegreeTuple) -> Result<LargeTopReport> {
    if !is_large_top(d) {
        return Err(Error::Precondition(format!("{d} does not satisfy d_0 = d_1 + ... + d_n - n with n >= 2")));
    }
    Ok(LargeTopReport { tuple: d.clone(), multinomial: multinomial_factorization(&caps(d)) })
}

/// Signed determinant of the peak matrix by exact elimination; the oracle for
/// [`proctor_determinant`].
pub fn nilp_determinant_bruteforce(d: &DegreeTuple) -> Result<BigInt> {
    let (_, s) = peak_preconditions(d)?;
    let caps = caps(d);
    let size = composition_count(&caps, i64::from(s + 1)) as usize;
    if size > BRUTEFORCE_DIMENSION_GUARD {
        return Err(Error::DimensionGuard(size, BRUTEFORCE_DIMENSION_GUARD));
    }
    let bounds: Vec<u32> = d.rest().to_vec();
    let m = multiplication_matrix(&bounds, Characteristic::ZERO, s + 1 - d.top(), d.top());
    if !m.is_square() {
        return Err(Error::Internal(format!("peak matrix of {d} is {}x{}", m.num_rows(), m.num_columns())));
    }
    Ok(bareiss_determinant(m.entries().to_vec()))
}
