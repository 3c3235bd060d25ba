//! Sparse multivariate polynomials over `F_p` or `Q`, and the explicit
//! low-degree syzygies of `(l^{d-3}, x^d, y^d, z^d)`.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinat::is_prime;
use crate::domain::Characteristic;
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CoefficientField {
    Prime(u64),
    Rationals,
}

impl From<Characteristic> for CoefficientField {
    fn from(c: Characteristic) -> Self {
        match c.prime() {
            Some(p) => CoefficientField::Prime(p),
            None => CoefficientField::Rationals,
        }
    }
}

/// Exponent vector ordered by total degree, then lexicographically.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SparsePolynomial {
    field: CoefficientField,
    nvars: usize,
    /// No zero coefficients are stored. Over `F_p` every coefficient is an
    /// integer in `[0, p)`.
    terms: BTreeMap<Monomial, BigRational>,
}

impl SparsePolynomial {
    pub fn zero(field: CoefficientField, nvars: usize) -> Self {
        Self { field, nvars, terms: BTreeMap::new() }
    }

    pub fn constant(field: CoefficientField, nvars: usize, c: i64) -> Self {
        Self::monomial(field, vec![0; nvars], BigRational::from_integer(BigInt::from(c)))
    }

    pub fn one(field: CoefficientField, nvars: usize) -> Self {
        Self::constant(field, nvars, 1)
    }

    pub fn monomial(field: CoefficientField, exponents: Vec<u32>, coefficient: BigRational) -> Self {
        let nvars = exponents.len();
        let mut p = Self::zero(field, nvars);
        p.add_term(Monomial(exponents), coefficient);
        p
    }

    pub fn var(field: CoefficientField, nvars: usize, i: usize) -> Self {
        let mut e = vec![0; nvars];
        e[i] = 1;
        Self::monomial(field, e, BigRational::one())
    }

    /// `x_i^e`.
    pub fn var_power(field: CoefficientField, nvars: usize, i: usize, e: u32) -> Self {
        let mut exps = vec![0; nvars];
        exps[i] = e;
        Self::monomial(field, exps, BigRational::one())
    }

    /// Sum of the given variables.
    pub fn linear_sum(field: CoefficientField, nvars: usize, vars: &[usize]) -> Self {
        let mut p = Self::zero(field, nvars);
        for &i in vars {
            p = p.add(&Self::var(field, nvars, i)).expect("same ring");
        }
        p
    }

    pub fn field(&self) -> CoefficientField {
        self.field
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &BigRational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exponents: &[u32]) -> BigRational {
        self.terms.get(&Monomial(exponents.to_vec())).cloned().unwrap_or_else(BigRational::zero)
    }

    /// Maximal total degree; zero for the zero polynomial.
    pub fn degree(&self) -> u32 {
        self.terms.keys().next_back().map_or(0, Monomial::degree)
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut degrees = self.terms.keys().map(Monomial::degree);
        match degrees.next() {
            None => true,
            Some(first) => degrees.all(|d| d == first),
        }
    }

    fn add_term(&mut self, m: Monomial, c: BigRational) {
        assert_eq!(m.0.len(), self.nvars, "exponent vector length");
        let entry = self.terms.entry(m);
        match entry {
            alloc::collections::btree_map::Entry::Vacant(v) => {
                let c = canonical_in(self.field, c);
                if !c.is_zero() {
                    v.insert(c);
                }
            }
            alloc::collections::btree_map::Entry::Occupied(mut o) => {
                let sum = o.get() + c;
                let sum = canonical_in(self.field, sum);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check(&self, other: &Self) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch);
        }
        if self.nvars != other.nvars {
            return Err(Error::Precondition(format!("polynomials in {} and {} variables", self.nvars, other.nvars)));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        self.scale(&BigRational::from_integer(BigInt::from(-1)))
    }

    pub fn scale(&self, c: &BigRational) -> Self {
        let mut out = Self::zero(self.field, self.nvars);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check(other)?;
        let mut out = Self::zero(self.field, self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// `self^e` by binary exponentiation.
    pub fn pow_generic(&self, mut e: u32) -> Self {
        let mut acc = Self::one(self.field, self.nvars);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base).expect("same ring");
            }
            e >>= 1;
            if e > 0 {
                base = base.mul(&base).expect("same ring");
            }
        }
        acc
    }

    /// `self^e`; over `F_p` the factor `p^m` of `e` is taken through the
    /// Frobenius map `sum c_m m  ->  sum c_m m^p`.
    pub fn pow(&self, e: u32) -> Self {
        match self.field {
            CoefficientField::Prime(p) if e > 0 => {
                let p32 = p as u32;
                if u64::from(p32) == p && e.is_multiple_of(p32) {
                    self.frobenius().pow(e / p32)
                } else {
                    self.pow_generic(e)
                }
            }
            _ => self.pow_generic(e),
        }
    }

    /// `f^p` over `F_p` (coefficients are fixed by Frobenius).
    pub fn frobenius(&self) -> Self {
        let CoefficientField::Prime(p) = self.field else {
            panic!("Frobenius needs positive characteristic");
        };
        let mut out = Self::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            out.add_term(Monomial(m.0.iter().map(|&e| e * p as u32).collect()), c.clone());
        }
        out
    }

    /// Deletes every term divisible by `x_i^{bounds[i]}` (a `None` bound
    /// leaves that variable unrestricted): the normal form modulo a monomial
    /// ideal of pure powers.
    pub fn reduce_pure_powers(&self, bounds: &[Option<u32>]) -> Self {
        let mut out = Self::zero(self.field, self.nvars);
        for (m, c) in &self.terms {
            let killed = m.0.iter().zip(bounds).any(|(&e, b)| matches!(b, Some(b) if e >= *b));
            if !killed {
                out.terms.insert(m.clone(), c.clone());
            }
        }
        out
    }
}

fn canonical_in(field: CoefficientField, c: BigRational) -> BigRational {
    match field {
        CoefficientField::Rationals => c,
        CoefficientField::Prime(p) => {
            let p = BigInt::from(p);
            let num = c.numer().mod_floor(&p);
            let den = c.denom().mod_floor(&p);
            assert!(!den.is_zero(), "denominator divisible by the characteristic");
            // den^(p-2) is the inverse modulo p
            let inv = den.modpow(&(&p - BigInt::from(2)), &p);
            BigRational::from_integer((num * inv).mod_floor(&p))
        }
    }
}

const XYZ: [&str; 3] = ["x", "y", "z"];

impl fmt::Display for SparsePolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        let name = |i: usize| -> String {
            if self.nvars <= 3 {
                String::from(XYZ[i])
            } else {
                format!("x{}", i + 1)
            }
        };
        for (k, (m, c)) in self.terms.iter().rev().enumerate() {
            let negative = c.is_negative();
            let magnitude = c.abs();
            if k == 0 {
                if negative {
                    f.write_str("-")?;
                }
            } else {
                f.write_str(if negative { " - " } else { " + " })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !magnitude.is_one() || m.degree() == 0 {
                factors.push(format!("{magnitude}"));
            }
            for (i, &e) in m.0.iter().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(name(i)),
                    _ => factors.push(format!("{}^{e}", name(i))),
                }
            }
            f.write_str(&factors.join("*"))?;
        }
        Ok(())
    }
}

fn ratio(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

fn binomial(n: u32, k: u32) -> BigInt {
    let mut acc = BigInt::one();
    for i in 0..k {
        acc = acc * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    acc
}

/// `f_k = (y^k - (-z)^k) / (y + z) = sum_{i<k} y^i (-z)^{k-i-1}`.
pub fn make_f(k: u32, field: CoefficientField, nvars: usize, y: usize, z: usize) -> Result<SparsePolynomial> {
    if k == 0 {
        return Err(Error::Precondition("f_k needs k >= 1".into()));
    }
    let mut out = SparsePolynomial::zero(field, nvars);
    for i in 0..k {
        let mut e = vec![0; nvars];
        e[y] = i;
        e[z] = k - i - 1;
        let sign = if (k - i - 1).is_multiple_of(2) { 1 } else { -1 };
        out.add_term(Monomial(e), ratio(sign));
    }
    Ok(out)
}

/// `g_k = (x^k - (x+y+z)^k) / (y + z) = -sum_{i<k} binom(k, i) x^i (y+z)^{k-i-1}`.
pub fn make_g(k: u32, field: CoefficientField, nvars: usize, x: usize, y: usize, z: usize) -> Result<SparsePolynomial> {
    if k == 0 {
        return Err(Error::Precondition("g_k needs k >= 1".into()));
    }
    let yz = SparsePolynomial::linear_sum(field, nvars, &[y, z]);
    let mut out = SparsePolynomial::zero(field, nvars);
    for i in 0..k {
        let term = SparsePolynomial::var_power(field, nvars, x, i)
            .mul(&yz.pow(k - i - 1))?
            .scale(&BigRational::from_integer(-binomial(k, i)));
        out = out.add(&term)?;
    }
    Ok(out)
}

/// Generators `(x^k, y^{k+j}, z^{k+j}, (x+y+z)^k)` of `K[x, y, z]` together
/// with the relation `(-f_{k+j}, g_k, (-1)^{k+j+1} g_k, f_{k+j})`.
pub fn standard_syzygy(
    k: u32,
    j: u32,
    field: CoefficientField,
) -> Result<(Vec<SparsePolynomial>, Vec<SparsePolynomial>)> {
    if k == 0 {
        return Err(Error::Precondition("standard syzygy needs k >= 1".into()));
    }
    let ell = SparsePolynomial::linear_sum(field, 3, &[0, 1, 2]);
    let gens = vec![
        SparsePolynomial::var_power(field, 3, 0, k),
        SparsePolynomial::var_power(field, 3, 1, k + j),
        SparsePolynomial::var_power(field, 3, 2, k + j),
        ell.pow(k),
    ];
    let f = make_f(k + j, field, 3, 1, 2)?;
    let g = make_g(k, field, 3, 0, 1, 2)?;
    let signed_g = if (k + j + 1).is_multiple_of(2) { g.clone() } else { g.neg() };
    let coeffs = vec![f.neg(), g, signed_g, f];
    Ok((gens, coeffs))
}

/// `sum coefficients_i * generators_i == 0`.
pub fn verify_syzygy(generators: &[SparsePolynomial], coefficients: &[SparsePolynomial]) -> Result<bool> {
    if generators.len() != coefficients.len() {
        return Err(Error::LengthMismatch(generators.len(), coefficients.len()));
    }
    let Some(first) = generators.first() else {
        return Ok(true);
    };
    let mut sum = SparsePolynomial::zero(first.field(), first.nvars());
    for (g, c) in generators.iter().zip(coefficients) {
        sum = sum.add(&c.mul(g)?)?;
    }
    Ok(sum.is_zero())
}

/// Sufficient test that a syzygy of `(l^{d_0}, x_1^{d_1}, ..., x_n^{d_n})` is
/// not Koszul: every Koszul relation has its first entry inside
/// `(x_1^{d_1}, ..., x_n^{d_n})`, so a first entry outside that ideal certifies
/// a non-Koszul class.
pub fn is_nonkoszul_witness(coefficients: &[SparsePolynomial], pure_powers: &[u32]) -> bool {
    let Some(first) = coefficients.first() else {
        return false;
    };
    let bounds: Vec<Option<u32>> = pure_powers.iter().map(|&b| Some(b)).collect();
    assert_eq!(bounds.len(), first.nvars(), "one pure power per variable");
    !first.reduce_pure_powers(&bounds).is_zero()
}

/// Polynomial degree of a homogeneous syzygy: `deg(coefficient_i) + deg(generator_i)`
/// for any nonzero component.
pub fn syzygy_degree(generators: &[SparsePolynomial], coefficients: &[SparsePolynomial]) -> Option<u32> {
    generators.iter().zip(coefficients).find(|(_, c)| !c.is_zero()).map(|(g, c)| g.degree() + c.degree())
}

/// Which branch of the case analysis produced a syzygy of `(l^{d-3}, x^d, y^d, z^d)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum NearUniformCase {
    /// `p = 2`, `d = 2^m + 1`.
    CharTwoPowerPlusOne,
    /// `p = 3`, `2d = 3^{m+1} + 1`.
    CharThreeExactPower,
    /// `p = 3`, `2 * 3^m <= q < 3^{m+1}` where `2d = 3q + r`.
    CharThreeUpperBand,
    /// `p >= 5`, `2d = qp + r` with `q`, `r` even.
    EvenQuotient,
    /// `p >= 5`, `q` odd and `r = 1`.
    OddQuotientUnitRemainder,
    /// `p >= 5`, `q` odd and `r >= 3`.
    OddQuotientLargeRemainder,
}

#[derive(Clone, Debug)]
pub struct NearUniformSyzygy {
    pub case: NearUniformCase,
    /// `(l^{d-3}, x^d, y^d, z^d)` with `l = x + y + z`.
    pub generators: Vec<SparsePolynomial>,
    /// Coefficients in the same order as `generators`.
    pub coefficients: Vec<SparsePolynomial>,
    pub degree: u32,
}

/// Explicit non-Koszul syzygy of degree at most `2d - 3` for
/// `(l^{d-3}, x^d, y^d, z^d)` over `F_p` with `2 <= p < d`, `d >= 6`.
///
/// Returns `Ok(None)` in the branches where failure of the WLP comes from a
/// prime power `d <= p^m <= 2d - 3` instead of an explicit relation.
pub fn build_near_uniform_syzygy(d: u32, p: u64) -> Result<Option<NearUniformSyzygy>> {
    if d < 6 {
        return Err(Error::Precondition(format!("need d >= 6, got {d}")));
    }
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    if p >= u64::from(d) {
        return Err(Error::Precondition(format!("need p < d, got p = {p}, d = {d}")));
    }
    let field = CoefficientField::Prime(p);
    let p32 = p as u32;
    let ell = SparsePolynomial::linear_sum(field, 3, &[0, 1, 2]);
    let xs = |e: [u32; 3]| SparsePolynomial::monomial(field, e.to_vec(), BigRational::one());
    let lp = |e: u32| ell.pow(e);
    let f = |k: u32| make_f(k, field, 3, 1, 2);
    let g = |k: u32| make_g(k, field, 3, 0, 1, 2);
    let mul = |a: &SparsePolynomial, b: &SparsePolynomial| a.mul(b).expect("same ring");

    // Built in the order (x^d, y^d, z^d, l^{d-3}), rotated to l-first below.
    let (case, [cx, cy, cz, cl]) = if p == 2 {
        match crate::combinat::prime_power_exponent(u64::from(d - 1), 2) {
            Some(_) => {
                let coeffs = [xs([0, 1, 1]), xs([1, 0, 1]), xs([1, 1, 0]), mul(&xs([1, 1, 1]), &lp(2))];
                (NearUniformCase::CharTwoPowerPlusOne, coeffs)
            }
            None => return Ok(None),
        }
    } else if p == 3 {
        let (q, r) = (2 * d / 3, 2 * d % 3);
        // m with 3^m <= q < 3^{m+1}
        let mut pm = 1u32;
        while pm * 3 <= q {
            pm *= 3;
        }
        if q == pm && r == 1 {
            let j = pm.div_ceil(2);
            if j < 3 {
                return Err(Error::Internal(format!("exact-power branch needs j >= 3, d = {d}")));
            }
            let xz = SparsePolynomial::var(field, 3, 0).sub(&SparsePolynomial::var(field, 3, 2))?.pow(pm);
            let lj = lp(j - 3);
            let coeffs = [
                mul(&xs([j - 1, j, 0]), &lj),
                mul(&xz, &lj),
                mul(&xs([0, j, j - 1]), &lj).neg(),
                mul(&xz, &xs([0, j, 0])).neg(),
            ];
            (NearUniformCase::CharThreeExactPower, coeffs)
        } else if q > pm && q < 2 * pm {
            return Ok(None);
        } else if q >= 2 * pm {
            let k = d - 3 * pm;
            let j = k.saturating_sub(3);
            let lj = lp(j);
            let coeffs = [
                mul(&xs([0, k, k]), &lj),
                mul(&xs([k, 0, k]), &lj),
                mul(&xs([k, k, 0]), &lj),
                mul(&xs([k, k, k]), &lp(3u32.saturating_sub(k))).neg(),
            ];
            (NearUniformCase::CharThreeUpperBand, coeffs)
        } else {
            return Err(Error::Internal(format!("unreachable characteristic-three branch, d = {d}")));
        }
    } else {
        let (q, r) = (2 * d / p32, 2 * d % p32);
        if q % 2 == 0 {
            let h = r / 2;
            let j = h.saturating_sub(3);
            let k = q / 2;
            let fk = f(k)?.pow(p32);
            let gk = g(k)?.pow(p32);
            let signed = if (k + 1) % 2 == 0 { gk.clone() } else { gk.neg() };
            let lj = lp(j);
            let coeffs = [
                mul(&mul(&xs([0, h, h]), &lj), &fk.neg()),
                mul(&mul(&xs([h, 0, h]), &lj), &gk),
                mul(&mul(&xs([h, h, 0]), &lj), &signed),
                mul(&mul(&xs([h, h, h]), &lp(3u32.saturating_sub(h))), &fk),
            ];
            (NearUniformCase::EvenQuotient, coeffs)
        } else if r == 1 {
            let j = d - (q - 1) / 2 * p32;
            let kf = q.div_ceil(2);
            let kg = (q - 1) / 2;
            let fp = f(kf)?.pow(p32);
            let gp = g(kg)?.pow(p32);
            let signed = if (kg + 2) % 2 == 0 { gp.clone() } else { gp.neg() };
            let lj = lp(j - 3);
            let coeffs = [
                mul(&lj, &fp.neg()),
                mul(&mul(&xs([j, j - 1, 0]), &lj), &gp),
                mul(&mul(&xs([j, 0, j - 1]), &lj), &signed),
                mul(&xs([j, 0, 0]), &fp),
            ];
            (NearUniformCase::OddQuotientUnitRemainder, coeffs)
        } else {
            let j = d - r - (q - 1) / 2 * p32;
            let k = q.div_ceil(2);
            let fp = f(k)?.pow(p32);
            let gp = g(k)?.pow(p32);
            let signed = if (k + 1) % 2 == 0 { gp.clone() } else { gp.neg() };
            let coeffs = [
                mul(&xs([j, 0, 0]), &fp.neg()),
                mul(&xs([0, j, 0]), &gp),
                mul(&xs([0, 0, j]), &signed),
                mul(&lp(j + 3), &fp),
            ];
            (NearUniformCase::OddQuotientLargeRemainder, coeffs)
        }
    };
    let generators = vec![
        lp(d - 3),
        SparsePolynomial::var_power(field, 3, 0, d),
        SparsePolynomial::var_power(field, 3, 1, d),
        SparsePolynomial::var_power(field, 3, 2, d),
    ];
    let coefficients = vec![cl, cx, cy, cz];
    let degree = syzygy_degree(&generators, &coefficients)
        .ok_or_else(|| Error::Internal(format!("zero syzygy for d = {d}, p = {p}")))?;
    Ok(Some(NearUniformSyzygy { case, generators, coefficients, degree }))
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec::Vec;

    const FIELDS: [CoefficientField; 6] = [
        CoefficientField::Prime(2),
        CoefficientField::Prime(3),
        CoefficientField::Prime(5),
        CoefficientField::Prime(7),
        CoefficientField::Prime(11),
        CoefficientField::Rationals,
    ];

    fn var(field: CoefficientField, n: usize, i: usize) -> SparsePolynomial {
        SparsePolynomial::var(field, n, i)
    }

    #[test]
    fn freshman_examples() {
        let f2 = CoefficientField::Prime(2);
        let xy = SparsePolynomial::linear_sum(f2, 2, &[0, 1]);
        assert_eq!(xy.pow(2).to_string(), "x^2 + y^2");
        let f3 = CoefficientField::Prime(3);
        let xyz = SparsePolynomial::linear_sum(f3, 3, &[0, 1, 2]);
        assert_eq!(xyz.pow(2).to_string(), "x^2 + 2*x*y + 2*x*z + y^2 + 2*y*z + z^2");
        assert_eq!(xyz.pow(0), SparsePolynomial::one(f3, 3));
    }

    #[test]
    fn field_mismatch_is_rejected() {
        let a = var(CoefficientField::Prime(2), 2, 0);
        let b = var(CoefficientField::Rationals, 2, 0);
        assert_eq!(a.add(&b), Err(Error::FieldMismatch));
        assert_eq!(a.mul(&b), Err(Error::FieldMismatch));
    }

    #[test]
    fn f_and_g_small_cases() {
        let q = CoefficientField::Rationals;
        assert_eq!(make_f(1, q, 2, 0, 1).unwrap(), SparsePolynomial::one(q, 2));
        assert_eq!(make_f(2, q, 2, 0, 1).unwrap().to_string(), "x - y");
        assert_eq!(make_f(3, q, 2, 0, 1).unwrap().to_string(), "x^2 - x*y + y^2");
        assert_eq!(make_g(1, q, 3, 0, 1, 2).unwrap(), SparsePolynomial::constant(q, 3, -1));
        assert_eq!(make_g(2, q, 3, 0, 1, 2).unwrap().to_string(), "-2*x - y - z");
        let f3 = CoefficientField::Prime(3);
        let yz = SparsePolynomial::linear_sum(f3, 3, &[1, 2]);
        assert_eq!(make_g(3, f3, 3, 0, 1, 2).unwrap(), yz.pow(2).neg());
        assert!(make_f(0, q, 2, 0, 1).is_err());
        assert!(make_g(0, q, 3, 0, 1, 2).is_err());
    }

    #[test]
    fn defining_identities_of_f_and_g() {
        for field in FIELDS {
            let yz = SparsePolynomial::linear_sum(field, 3, &[1, 2]);
            let ell = SparsePolynomial::linear_sum(field, 3, &[0, 1, 2]);
            let minus_z = var(field, 3, 2).neg();
            for k in 1..=20 {
                let lhs = yz.mul(&make_f(k, field, 3, 1, 2).unwrap()).unwrap();
                let rhs = var(field, 3, 1).pow(k).sub(&minus_z.pow(k)).unwrap();
                assert_eq!(lhs, rhs, "f_{k} over {field:?}");
                let lhs = yz.mul(&make_g(k, field, 3, 0, 1, 2).unwrap()).unwrap();
                let rhs = var(field, 3, 0).pow(k).sub(&ell.pow(k)).unwrap();
                assert_eq!(lhs, rhs, "g_{k} over {field:?}");
            }
        }
    }

    #[test]
    fn standard_syzygy_verifies() {
        for field in [
            CoefficientField::Prime(2),
            CoefficientField::Prime(3),
            CoefficientField::Prime(5),
            CoefficientField::Prime(7),
            CoefficientField::Prime(11),
            CoefficientField::Rationals,
        ] {
            for k in 1..=8 {
                for j in 0..=4 {
                    let (gens, coeffs) = standard_syzygy(k, j, field).unwrap();
                    assert!(verify_syzygy(&gens, &coeffs).unwrap(), "k={k} j={j} {field:?}");
                    // f_{k+j} sits opposite l^k and lies outside (x^k, y^{k+j}, z^{k+j}).
                    let ell_first = [coeffs[3].clone(), coeffs[0].clone(), coeffs[1].clone(), coeffs[2].clone()];
                    assert!(is_nonkoszul_witness(&ell_first, &[k, k + j, k + j]));
                }
            }
        }
    }

    #[test]
    fn syzygy_examples() {
        let f5 = CoefficientField::Prime(5);
        let (gens, coeffs) = standard_syzygy(2, 1, f5).unwrap();
        assert_eq!(gens[3], SparsePolynomial::linear_sum(f5, 3, &[0, 1, 2]).pow(2));
        assert!(verify_syzygy(&gens, &coeffs).unwrap());

        let q = CoefficientField::Rationals;
        let (a, b) = (3, 4);
        let gens = [SparsePolynomial::var_power(q, 2, 0, a), SparsePolynomial::var_power(q, 2, 1, b)];
        let koszul = [SparsePolynomial::var_power(q, 2, 1, b), SparsePolynomial::var_power(q, 2, 0, a).neg()];
        assert!(verify_syzygy(&gens, &koszul).unwrap());
        let bogus = [SparsePolynomial::one(q, 2), SparsePolynomial::zero(q, 2)];
        let xy = [var(q, 2, 0), var(q, 2, 1)];
        assert!(!verify_syzygy(&xy, &bogus).unwrap());
        assert_eq!(verify_syzygy(&xy, &bogus[..1]), Err(Error::LengthMismatch(2, 1)));
    }

    #[test]
    fn nonkoszul_examples() {
        let f2 = CoefficientField::Prime(2);
        let yz = SparsePolynomial::monomial(f2, vec![1, 1], BigRational::one());
        assert!(is_nonkoszul_witness(&[yz], &[5, 5]));
        let y5 = SparsePolynomial::var_power(f2, 2, 0, 5);
        assert!(!is_nonkoszul_witness(&[y5], &[5, 5]));
        let q = CoefficientField::Rationals;
        let f2_poly = make_f(2, q, 2, 0, 1).unwrap();
        assert!(is_nonkoszul_witness(&[f2_poly], &[2, 2]));
    }

    #[test]
    fn frobenius_matches_generic_power() {
        for p in [2u64, 3, 5] {
            let field = CoefficientField::Prime(p);
            for n in 1..=4 {
                let vars: Vec<usize> = (0..n).collect();
                let ell = SparsePolynomial::linear_sum(field, n, &vars);
                let mut q = 1u32;
                for _ in 0..=3 {
                    if q > 32 {
                        break;
                    }
                    let generic = ell.pow_generic(q);
                    assert_eq!(ell.pow(q), generic);
                    let sum = (0..n).fold(SparsePolynomial::zero(field, n), |acc, i| {
                        acc.add(&SparsePolynomial::var_power(field, n, i, q)).unwrap()
                    });
                    assert_eq!(generic, sum, "p={p} n={n} q={q}");
                    q *= p as u32;
                }
            }
            // a non-linear polynomial, mixed exponent
            let g = make_g(3, field, 3, 0, 1, 2).unwrap();
            assert_eq!(g.pow(2 * p as u32), g.pow_generic(2 * p as u32));
        }
    }

    #[test]
    fn near_uniform_char_two_example() {
        let s = build_near_uniform_syzygy(9, 2).unwrap().unwrap();
        assert_eq!(s.case, NearUniformCase::CharTwoPowerPlusOne);
        assert_eq!(s.degree, 11);
        assert_eq!(s.coefficients[1].to_string(), "y*z");
        assert!(verify_syzygy(&s.generators, &s.coefficients).unwrap());
        assert!(is_nonkoszul_witness(&s.coefficients, &[9, 9, 9]));
    }

    #[test]
    fn near_uniform_case_dispatch() {
        let s = build_near_uniform_syzygy(6, 5).unwrap().unwrap();
        assert_eq!(s.case, NearUniformCase::EvenQuotient);
        assert!(verify_syzygy(&s.generators, &s.coefficients).unwrap());
        assert!(build_near_uniform_syzygy(7, 3).unwrap().is_none());
        assert_eq!(build_near_uniform_syzygy(14, 3).unwrap().unwrap().case, NearUniformCase::CharThreeExactPower);
        assert!(build_near_uniform_syzygy(5, 2).is_err());
        assert!(build_near_uniform_syzygy(8, 11).is_err());
        assert!(build_near_uniform_syzygy(8, 4).is_err());
    }

    #[test]
    fn every_near_uniform_syzygy_is_a_low_degree_nonkoszul_relation() {
        for d in 6..=16u32 {
            for p in crate::combinat::primes_up_to(u64::from(d) - 1) {
                let Some(s) = build_near_uniform_syzygy(d, p).unwrap() else { continue };
                assert!(verify_syzygy(&s.generators, &s.coefficients).unwrap(), "d={d} p={p} {:?}", s.case);
                assert!(is_nonkoszul_witness(&s.coefficients, &[d, d, d]), "d={d} p={p}");
                assert!(s.degree <= 2 * d - 3, "d={d} p={p} degree {}", s.degree);
                for (g, c) in s.generators.iter().zip(&s.coefficients) {
                    assert!(c.is_homogeneous());
                    if !c.is_zero() {
                        assert_eq!(c.degree() + g.degree(), s.degree);
                    }
                }
            }
        }
    }
}
