//! Exact rank and determinant: row reduction over `F_p`, fraction-free
//! (Bareiss) elimination over the integers.

use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A 61-bit prime used to certify full rank over the rationals: if an integer
/// matrix has full rank modulo a prime it has full rank over `Q`.
pub const CERTIFICATE_PRIME: u64 = (1 << 61) - 1;

pub(crate) fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

pub(crate) fn inv_mod(a: u64, m: u64) -> u64 {
    // m prime: a^(m-2)
    let mut base = a % m;
    let mut exp = m - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Rank over `F_p` of a dense matrix with entries already reduced into `[0, p)`.
pub fn rank_mod_p(mut rows: Vec<Vec<u64>>, p: u64) -> usize {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col], p);
        for v in rows[rank][col..].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        for row in bottom.iter_mut() {
            let factor = row[col];
            if factor == 0 {
                continue;
            }
            for (v, &pv) in row[col..].iter_mut().zip(&pivot_row[col..]) {
                *v = (*v + p - mul_mod(factor, pv, p)) % p;
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Basis of `{ v : rows * v = 0 }` over `F_p`.
pub fn nullspace_mod_p(mut rows: Vec<Vec<u64>>, ncols: usize, p: u64) -> Vec<Vec<u64>> {
    let mut pivots: Vec<usize> = Vec::new();
    let mut rank = 0;
    for col in 0..ncols {
        let Some(pivot) = (rank..rows.len()).find(|&r| rows[r][col] != 0) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = inv_mod(rows[rank][col], p);
        for v in rows[rank].iter_mut() {
            *v = mul_mod(*v, inv, p);
        }
        let pivot_row = rows[rank].clone();
        for (r, row) in rows.iter_mut().enumerate() {
            let factor = row[col];
            if r == rank || factor == 0 {
                continue;
            }
            for (v, &pv) in row.iter_mut().zip(&pivot_row) {
                *v = (*v + p - mul_mod(factor, pv, p)) % p;
            }
        }
        pivots.push(col);
        rank += 1;
    }
    let mut basis = Vec::new();
    let mut is_pivot = vec![false; ncols];
    for &c in &pivots {
        is_pivot[c] = true;
    }
    for free in (0..ncols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u64; ncols];
        v[free] = 1;
        for (r, &pc) in pivots.iter().enumerate() {
            v[pc] = (p - rows[r][free]) % p;
        }
        basis.push(v);
    }
    basis
}

/// Rank over `Q` of an integer matrix by fraction-free elimination.
pub fn bareiss_rank(rows: Vec<Vec<BigInt>>) -> usize {
    bareiss(rows).0
}

/// Signed determinant of a square integer matrix.
pub fn bareiss_determinant(rows: Vec<Vec<BigInt>>) -> BigInt {
    let n = rows.len();
    assert!(rows.iter().all(|r| r.len() == n), "determinant of a non-square matrix");
    if n == 0 {
        return BigInt::one();
    }
    let (rank, last_pivot, sign) = bareiss(rows);
    if rank < n {
        BigInt::zero()
    } else if sign {
        -last_pivot
    } else {
        last_pivot
    }
}

/// Returns (rank, last pivot, odd number of row swaps). For a full-rank square
/// matrix the last pivot is the determinant up to the swap sign.
fn bareiss(mut rows: Vec<Vec<BigInt>>) -> (usize, BigInt, bool) {
    let nrows = rows.len();
    let ncols = rows.first().map_or(0, Vec::len);
    let mut prev = BigInt::one();
    let mut rank = 0;
    let mut swapped = false;
    for col in 0..ncols {
        if rank == nrows {
            break;
        }
        let Some(pivot) = (rank..nrows).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        if pivot != rank {
            rows.swap(rank, pivot);
            swapped = !swapped;
        }
        let (top, bottom) = rows.split_at_mut(rank + 1);
        let pivot_row = &top[rank];
        let pv = &pivot_row[col];
        for row in bottom.iter_mut() {
            let factor = row[col].clone();
            for j in col..ncols {
                // Exact by Sylvester's identity.
                let v = (pv * &row[j] - &factor * &pivot_row[j]) / &prev;
                row[j] = v;
            }
        }
        prev = pivot_row[col].clone();
        rank += 1;
    }
    (rank, prev, swapped)
}

/// Reduces an integer matrix modulo a prime.
pub fn reduce_mod(rows: &[Vec<BigInt>], p: u64) -> Vec<Vec<u64>> {
    let modulus = BigInt::from(p);
    rows.iter()
        .map(|r| {
            r.iter()
                .map(|v| {
                    let m = v % &modulus;
                    let m = if m.is_negative() { m + &modulus } else { m };
                    u64::try_from(m).expect("residue fits")
                })
                .collect()
        })
        .collect()
}

/// Binomial coefficients modulo `p` by Pascal's rule (valid for any `p`,
/// including `p <= n`).
#[derive(Clone, Debug)]
pub struct BinomialTable {
    modulus: Option<u64>,
    rows: Vec<Vec<BigInt>>,
}

impl BinomialTable {
    /// `modulus = None` keeps exact integers.
    pub fn new(max_n: usize, modulus: Option<u64>) -> Self {
        let mut rows: Vec<Vec<BigInt>> = Vec::with_capacity(max_n + 1);
        for i in 0..=max_n {
            let mut row = vec![BigInt::one(); i + 1];
            for j in 1..i {
                let mut v = &rows[i - 1][j - 1] + &rows[i - 1][j];
                if let Some(p) = modulus {
                    v %= BigInt::from(p);
                }
                row[j] = v;
            }
            if let Some(p) = modulus {
                for v in row.iter_mut() {
                    *v %= BigInt::from(p);
                }
            }
            rows.push(row);
        }
        Self { modulus, rows }
    }

    pub fn binomial(&self, n: usize, k: usize) -> BigInt {
        if k > n {
            return BigInt::zero();
        }
        self.rows[n][k].clone()
    }

    /// `(sum parts)! / prod(parts_i!)` as a product of binomials.
    pub fn multinomial(&self, parts: &[u32]) -> BigInt {
        let mut acc = BigInt::one();
        let mut running = 0usize;
        for &c in parts {
            running += c as usize;
            acc *= self.binomial(running, c as usize);
            if let Some(p) = self.modulus {
                acc %= BigInt::from(p);
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn int(rows: &[&[i64]]) -> Vec<Vec<BigInt>> {
        rows.iter().map(|r| r.iter().map(|&v| BigInt::from(v)).collect()).collect()
    }

    #[test]
    fn zero_and_identity() {
        assert_eq!(rank_mod_p(vec![vec![0; 3]; 2], 5), 0);
        assert_eq!(bareiss_rank(int(&[&[0, 0], &[0, 0]])), 0);
        let id: Vec<Vec<u64>> = (0..3).map(|i| (0..3).map(|j| u64::from(i == j)).collect()).collect();
        assert_eq!(rank_mod_p(id, 2), 3);
    }

    #[test]
    fn rank_drops_modulo_divisor_of_determinant() {
        // det = 20
        let m = int(&[&[5, 5], &[1, 5]]);
        assert_eq!(bareiss_determinant(m.clone()), BigInt::from(20));
        assert_eq!(rank_mod_p(reduce_mod(&m, 5), 5), 1);
        assert_eq!(rank_mod_p(reduce_mod(&m, 2), 2), 1);
        assert_eq!(rank_mod_p(reduce_mod(&m, 3), 3), 2);
    }

    #[test]
    fn determinant_sign_and_swaps() {
        assert_eq!(bareiss_determinant(int(&[&[0, 1], &[1, 0]])), BigInt::from(-1));
        assert_eq!(bareiss_determinant(int(&[&[2, 0, 1], &[1, 3, 2], &[1, 1, 2]])), BigInt::from(6));
        assert_eq!(bareiss_determinant(int(&[&[1, 2], &[2, 4]])), BigInt::zero());
        assert_eq!(bareiss_rank(int(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]])), 2);
    }

    #[test]
    fn multinomials_mod_small_prime() {
        let t = BinomialTable::new(12, Some(7));
        // 12! / (4!)^3 = 34650 = 7 * 4950
        assert_eq!(t.multinomial(&[4, 4, 4]), BigInt::zero());
        let exact = BinomialTable::new(12, None);
        assert_eq!(exact.multinomial(&[4, 4, 4]), BigInt::from(34650));
    }
}
