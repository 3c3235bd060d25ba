//! Degree tuples, characteristics and Hilbert functions.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};

use crate::combinat::is_prime;
use crate::{Error, Result};

/// Generator exponents `d_0 >= d_1 >= ... >= d_n` of a monomial complete
/// intersection. The input order is kept for reporting.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DegreeTuple {
    degrees: Vec<u32>,
    original: Vec<u32>,
    /// `permutation[i]` is the input position of `degrees[i]`.
    permutation: Vec<usize>,
}

impl DegreeTuple {
    /// Validates and sorts raw input into nonincreasing order.
    pub fn normalize(raw: &[i64]) -> Result<Self> {
        if raw.len() < 2 {
            return Err(Error::TooFewDegrees(raw.len()));
        }
        let mut original = Vec::with_capacity(raw.len());
        for &d in raw {
            if d < 1 {
                return Err(Error::NonPositiveDegree(d));
            }
            let d = u32::try_from(d).map_err(|_| Error::DegreeTooLarge(d))?;
            original.push(d);
        }
        let mut permutation: Vec<usize> = (0..original.len()).collect();
        // Stable sort keeps equal entries in input order, so the permutation is canonical.
        permutation.sort_by(|&a, &b| original[b].cmp(&original[a]));
        let degrees = permutation.iter().map(|&i| original[i]).collect();
        Ok(Self { degrees, original, permutation })
    }

    pub fn new(degrees: &[u32]) -> Result<Self> {
        let raw: Vec<i64> = degrees.iter().map(|&d| i64::from(d)).collect();
        Self::normalize(&raw)
    }

    /// Sorted degrees, largest first.
    pub fn degrees(&self) -> &[u32] {
        &self.degrees
    }

    pub fn original(&self) -> &[u32] {
        &self.original
    }

    pub fn permutation(&self) -> &[usize] {
        &self.permutation
    }

    /// `n`, so that the ring has `n + 1` variables.
    pub fn n(&self) -> usize {
        self.degrees.len() - 1
    }

    pub fn num_vars(&self) -> usize {
        self.degrees.len()
    }

    /// `d_0`, the largest exponent.
    pub fn top(&self) -> u32 {
        self.degrees[0]
    }

    /// `(d_1, ..., d_n)`.
    pub fn rest(&self) -> &[u32] {
        &self.degrees[1..]
    }

    pub fn min_degree(&self) -> u32 {
        *self.degrees.last().expect("tuple has at least two entries")
    }

    /// All exponents equal.
    pub fn is_uniform(&self) -> bool {
        self.degrees.iter().all(|&d| d == self.degrees[0])
    }

    /// `t = d_0 + ... + d_n - (n + 1)`.
    pub fn socle_degree(&self) -> u32 {
        socle_degree_of(&self.degrees)
    }

    /// `ceil(t / 2)`.
    pub fn half_socle_ceil(&self) -> u32 {
        self.socle_degree().div_ceil(2)
    }

    pub fn hilbert_function(&self) -> HilbertFunction {
        HilbertFunction::of_bounds(&self.degrees)
    }

    /// The tuple with one more generator of exponent `extra`.
    pub fn extended(&self, extra: u32) -> Result<Self> {
        let mut d = self.degrees.clone();
        d.push(extra);
        Self::new(&d)
    }

    /// Drops exponents equal to one. Returns `None` when fewer than two
    /// entries remain (the algebra is then `K[x]/(x^a)` or `K`).
    pub fn without_units(&self) -> Option<Self> {
        let d: Vec<u32> = self.degrees.iter().copied().filter(|&d| d > 1).collect();
        if d.len() < 2 {
            None
        } else {
            Self::new(&d).ok()
        }
    }

    pub fn has_units(&self) -> bool {
        self.min_degree() == 1
    }
}

impl fmt::Display for DegreeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, d) in self.degrees.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{d}")?;
        }
        f.write_str(")")
    }
}

pub(crate) fn socle_degree_of(bounds: &[u32]) -> u32 {
    bounds.iter().map(|&d| d - 1).sum()
}

/// Characteristic of the coefficient field: zero or a prime.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Characteristic(u64);

impl Characteristic {
    pub const ZERO: Characteristic = Characteristic(0);

    pub fn new(value: u64) -> Result<Self> {
        if value == 0 || is_prime(value) {
            Ok(Self(value))
        } else {
            Err(Error::NotPrime(value))
        }
    }

    pub fn value(self) -> u64 {
        self.0
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub fn prime(self) -> Option<u64> {
        (self.0 != 0).then_some(self.0)
    }
}

impl fmt::Display for Characteristic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Dimensions `h_0, ..., h_t` of the graded pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HilbertFunction {
    values: Vec<BigUint>,
}

impl HilbertFunction {
    /// Coefficients of `prod_i (1 + x + ... + x^{d_i - 1})`.
    pub fn of_bounds(bounds: &[u32]) -> Self {
        let mut values = vec![BigUint::from(1u32)];
        for &d in bounds {
            let d = d as usize;
            let mut next = vec![BigUint::zero(); values.len() + d - 1];
            // Sliding window sum of width d.
            let mut window = BigUint::zero();
            for (e, slot) in next.iter_mut().enumerate() {
                if e < values.len() {
                    window += &values[e];
                }
                if e >= d {
                    window -= &values[e - d];
                }
                *slot = window.clone();
            }
            values = next;
        }
        Self { values }
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    pub fn socle(&self) -> u32 {
        (self.values.len() - 1) as u32
    }

    /// `h_e` as a machine integer; zero outside `0..=t`.
    pub fn dim(&self, e: i64) -> usize {
        if e < 0 || e as usize >= self.values.len() {
            return 0;
        }
        self.values[e as usize].to_usize().expect("graded piece dimension exceeds usize")
    }

    pub fn total(&self) -> BigUint {
        self.values.iter().sum()
    }

    pub fn is_symmetric(&self) -> bool {
        let n = self.values.len();
        (0..n).all(|i| self.values[i] == self.values[n - 1 - i])
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn hf(d: &[u32]) -> Vec<u64> {
        DegreeTuple::new(d).unwrap().hilbert_function().values().iter().map(|v| v.to_u64().unwrap()).collect()
    }

    #[test]
    fn normalize_sorts_and_records_permutation() {
        let d = DegreeTuple::normalize(&[2, 5, 3]).unwrap();
        assert_eq!(d.degrees(), &[5, 3, 2]);
        assert_eq!(d.original(), &[2, 5, 3]);
        assert_eq!(d.permutation(), &[1, 2, 0]);
        assert_eq!(DegreeTuple::normalize(&[4, 4, 4, 1]).unwrap().degrees(), &[4, 4, 4, 1]);
        assert_eq!(DegreeTuple::normalize(&[2, 2]).unwrap().degrees(), &[2, 2]);
    }

    #[test]
    fn normalize_rejects_bad_input() {
        assert_eq!(DegreeTuple::normalize(&[]), Err(Error::TooFewDegrees(0)));
        assert_eq!(DegreeTuple::normalize(&[3]), Err(Error::TooFewDegrees(1)));
        assert_eq!(DegreeTuple::normalize(&[3, 0]), Err(Error::NonPositiveDegree(0)));
        assert_eq!(DegreeTuple::normalize(&[-2, 4]), Err(Error::NonPositiveDegree(-2)));
    }

    #[test]
    fn socle_degrees() {
        assert_eq!(DegreeTuple::new(&[2, 2]).unwrap().socle_degree(), 2);
        assert_eq!(DegreeTuple::new(&[4, 4, 4, 1]).unwrap().socle_degree(), 9);
        assert_eq!(DegreeTuple::new(&[5, 5, 5, 2]).unwrap().socle_degree(), 13);
    }

    #[test]
    fn small_hilbert_functions() {
        assert_eq!(hf(&[2, 2]), [1, 2, 1]);
        assert_eq!(hf(&[2, 2, 2]), [1, 3, 3, 1]);
        assert_eq!(hf(&[3, 2]), [1, 2, 2, 1]);
        assert_eq!(hf(&[4, 4, 4, 1]), hf(&[4, 4, 4]));
    }

    #[test]
    fn characteristic_validation() {
        assert!(Characteristic::new(0).unwrap().is_zero());
        assert_eq!(Characteristic::new(7).unwrap().prime(), Some(7));
        assert_eq!(Characteristic::new(9), Err(Error::NotPrime(9)));
        assert_eq!(Characteristic::new(1), Err(Error::NotPrime(1)));
    }

    #[test]
    fn units_are_stripped() {
        let d = DegreeTuple::new(&[4, 4, 4, 1]).unwrap();
        assert_eq!(d.without_units().unwrap().degrees(), &[4, 4, 4]);
        assert!(DegreeTuple::new(&[3, 1]).unwrap().without_units().is_none());
    }

    proptest! {
        #[test]
        fn hilbert_function_is_symmetric_with_product_total(
            d in proptest::collection::vec(1u32..=6, 2..=5)
        ) {
            let tuple = DegreeTuple::new(&d).unwrap();
            let h = tuple.hilbert_function();
            prop_assert!(h.is_symmetric());
            prop_assert_eq!(h.socle(), tuple.socle_degree());
            let product: u64 = d.iter().map(|&x| u64::from(x)).product();
            prop_assert_eq!(h.total(), BigUint::from(product));
            prop_assert_eq!(h.dim(0), 1);
        }

        #[test]
        fn normalize_is_idempotent(d in proptest::collection::vec(1i64..=9, 2..=6)) {
            let once = DegreeTuple::normalize(&d).unwrap();
            let raw: Vec<i64> = once.degrees().iter().map(|&x| i64::from(x)).collect();
            let twice = DegreeTuple::normalize(&raw).unwrap();
            prop_assert_eq!(once.degrees(), twice.degrees());
            prop_assert!(once.degrees().windows(2).all(|w| w[0] >= w[1]));
        }
    }
}
