//! Positivity of the syzygy gap of `(x^a, y^b, (x+y)^c)` through the
//! Manhattan distance from `p^s (a, b, c)` to odd lattice points, and the
//! two-variable SLP decisions built on it.

use alloc::format;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::combinat::{binomial_factorization, is_prime, p_adic_valuation};
use crate::domain::Characteristic;
use crate::{Error, Method, Result, TheoremId, Verdict, Witness};

/// Three nonnegative rationals sorted ascending, with the prime that scales them.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScaledTriple {
    entries: [BigRational; 3],
    prime: u64,
}

impl ScaledTriple {
    pub fn new(a: u64, b: u64, c: u64, prime: u64) -> Self {
        let mut v = [a, b, c];
        v.sort_unstable();
        let entries = v.map(|x| BigRational::from_integer(BigInt::from(x)));
        Self { entries, prime }
    }

    pub fn entries(&self) -> &[BigRational; 3] {
        &self.entries
    }

    pub fn prime(&self) -> u64 {
        self.prime
    }

    /// `c < a + b`.
    pub fn is_semistable(&self) -> bool {
        let [a, b, c] = &self.entries;
        c < &(a + b)
    }

    /// `p^scale * (a, b, c)`.
    pub fn scaled(&self, scale: i32) -> [BigRational; 3] {
        let factor = BigInt::from(self.prime).pow(scale.unsigned_abs());
        self.entries.clone().map(|x| if scale >= 0 { x * &factor } else { x / &factor })
    }
}

/// `|x_1 - y_1| + |x_2 - y_2| + |x_3 - y_3|`.
pub fn manhattan(x: &[BigRational; 3], y: &[i64; 3]) -> BigRational {
    x.iter()
        .zip(y)
        .fold(BigRational::zero(), |acc, (a, &b)| acc + (a - BigRational::from_integer(BigInt::from(b))).abs())
}

/// Scale `s < 0` and odd point `(u, v, w)` with `mu(p^s (a, b, c), (u, v, w))`
/// below the threshold that was searched for.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GapWitness {
    pub scale: i32,
    pub point: [i64; 3],
    pub distance: BigRational,
}

impl From<GapWitness> for Witness {
    fn from(w: GapWitness) -> Self {
        Witness::GapPoint { scale: w.scale, point: w.point }
    }
}

fn sorted_checked(a: u64, b: u64, c: u64, p: u64) -> Result<[u64; 3]> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let mut v = [a, b, c];
    v.sort_unstable();
    if v[0] == 0 {
        return Err(Error::Precondition("syzygy-gap entries must be positive".into()));
    }
    if v[2] >= v[0] + v[1] {
        return Err(Error::NotStable(v[0], v[1], v[2]));
    }
    Ok(v)
}

/// First `s = -1, -2, ...` with an odd point at scaled distance strictly
/// below `1 - slack * p^s`: in integers with `D = p^{-s}`, a point with
/// `|a - uD| + |b - vD| + |c - wD| < D - slack`.
///
/// Only `u in {floor(a/D), floor(a/D) + 1}` can be within distance one, and
/// likewise for `v`, `w`. The search stops once `D > a + b + c`: then every
/// scaled coordinate is below one and sums to less than one, so the odd
/// candidates are `(1,1,1)`, at distance above two, and the unit vectors,
/// where `(0,0,1)` gives `1 + x + y - z > 1` because `c < a + b`. The same
/// holds for every larger `D`.
fn search(v: [u64; 3], p: u64, slack: u64) -> Option<GapWitness> {
    let total = v.iter().sum::<u64>();
    let mut scale_power: u64 = p;
    let mut k: i32 = 1;
    while scale_power <= total {
        let dd = i128::from(scale_power);
        let mut best: Option<([i64; 3], i128)> = None;
        for du in 0..2i64 {
            for dv in 0..2i64 {
                for dw in 0..2i64 {
                    let point = [
                        (v[0] / scale_power) as i64 + du,
                        (v[1] / scale_power) as i64 + dv,
                        (v[2] / scale_power) as i64 + dw,
                    ];
                    if point.iter().sum::<i64>() % 2 == 0 {
                        continue;
                    }
                    let dist: i128 =
                        v.iter().zip(&point).map(|(&x, &u)| (i128::from(x) - i128::from(u) * dd).abs()).sum();
                    if dist < dd - i128::from(slack) && best.as_ref().is_none_or(|(_, b)| dist < *b) {
                        best = Some((point, dist));
                    }
                }
            }
        }
        if let Some((point, dist)) = best {
            let distance = BigRational::new(BigInt::from(dist), BigInt::from(scale_power));
            return Some(GapWitness { scale: -k, point, distance });
        }
        scale_power = match scale_power.checked_mul(p) {
            Some(q) => q,
            None => break,
        };
        k += 1;
    }
    None
}

/// Whether some `s < 0` and odd `(u, v, w)` satisfy `mu(p^s (a, b, c), (u, v, w)) < 1`
/// for the ascending sort `a <= b <= c < a + b`; such a pair is returned as
/// the witness of a positive gap.
pub fn han_delta_positive(a: u64, b: u64, c: u64, p: u64) -> Result<Option<GapWitness>> {
    Ok(search(sorted_checked(a, b, c, p)?, p, 0))
}

/// WLP of `K[x,y,z]/(x^a, y^b, z^c)` by the syzygy gap, defined for stable
/// triples. The gap has the parity of `a + b + c` and WLP holds iff it is at
/// most one, so even sums test for positivity and odd sums for a gap of at
/// least three, i.e. a scaled distance below `1 - p^s`.
pub fn wlp_three_gen_via_syzgap(a: u64, b: u64, c: u64, p: u64) -> Result<Verdict> {
    let v = sorted_checked(a, b, c, p)?;
    let slack = (v.iter().sum::<u64>() % 2) as u64;
    Ok(match search(v, p, slack) {
        Some(w) => Verdict::fails(Method::SyzygyGap, w.into()),
        None => Verdict::holds(Method::SyzygyGap),
    })
}

/// SLP of `K[x,y]/(x^a, y^b)`: WLP of every `(a, b, a+b-2-2k)` for
/// `0 <= k <= b-2` (larger `k` give a top degree above half the socle). The
/// endpoints reduce to `p | binom(a+b-2, b-1)` and `p | binom(a, b-1)`.
pub fn slp_two_var(a: u64, b: u64, characteristic: Characteristic) -> Result<Verdict> {
    let (a, b) = if a >= b { (a, b) } else { (b, a) };
    if b < 2 {
        return Err(Error::Precondition(format!("need a >= b >= 2, got ({a}, {b})")));
    }
    let Some(p) = characteristic.prime() else {
        return Ok(Verdict::holds(Method::Theorem(TheoremId::CharZero)));
    };
    for k in 0..=b - 2 {
        let c = a + b - 2 - 2 * k;
        let endpoint = if k == 0 {
            Some(binomial_factorization(a + b - 2, b - 1)?)
        } else if k == b - 2 {
            Some(binomial_factorization(a, b - 1)?)
        } else {
            None
        };
        if let Some(f) = endpoint {
            if f.divisible_by(p) {
                return Ok(Verdict::fails(Method::SyzygyGap, Witness::Prime { prime: p, exponent: f.exponent(p) }));
            }
            continue;
        }
        let v = wlp_three_gen_via_syzgap(a, b, c, p)?;
        if v.fails_property() {
            return Ok(v);
        }
    }
    Ok(Verdict::holds(Method::SyzygyGap))
}

/// `s` with `p^{s-1}` the exact power of `p` dividing `(2d-1)(2d+1)`.
pub fn dd_exponent(d: u64, p: u64) -> u32 {
    p_adic_valuation((2 * d - 1) * (2 * d + 1), p) + 1
}

/// SLP of `K[x,y]/(x^d, y^d)`: holds iff `p = 0` or `2d - 2 < p^s`.
pub fn slp_dd_criterion(d: u64, characteristic: Characteristic) -> Result<Verdict> {
    if d < 2 {
        return Err(Error::Precondition(format!("need d >= 2, got {d}")));
    }
    let Some(p) = characteristic.prime() else {
        return Ok(Verdict::holds(Method::Theorem(TheoremId::CharZero)));
    };
    let s = dd_exponent(d, p);
    let holds = match p.checked_pow(s) {
        Some(q) => 2 * d - 2 < q,
        None => true,
    };
    Ok(Verdict::by_theorem(TheoremId::UniformTwoVariablesSlp, holds))
}
