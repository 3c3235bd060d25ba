//! Ground truth by definition: multiplication matrices on graded pieces,
//! exact rank, and non-Koszul syzygy degrees by dimension counting.

use alloc::collections::BTreeMap;
use alloc::string::{String, ToString};
use alloc::vec;
use alloc::vec::Vec;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::Zero;

use crate::combinat::{weak_compositions, WeakComposition};
use crate::domain::{Characteristic, DegreeTuple};
use crate::linalg::{bareiss_rank, nullspace_mod_p, rank_mod_p, reduce_mod, BinomialTable, CERTIFICATE_PRIME};
use crate::poly::{CoefficientField, SparsePolynomial};
use crate::{Error, Method, Result, Verdict, Witness};

/// Matrix of `x l^power : [A]_source -> [A]_{source + power}` where
/// `A = K[x_0..x_n] / (x_i^{bounds_i})` and `l = sum x_i`.
///
/// Rows are target monomials and columns source monomials, both in
/// lexicographically descending order. Entry `(b, a)` is the multinomial
/// `binom(power; b - a)` when `a <= b` and zero otherwise. Over `F_p` entries
/// are reduced into `[0, p)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GradedMatrix {
    characteristic: Characteristic,
    source_degree: u32,
    power: u32,
    rows: Vec<WeakComposition>,
    columns: Vec<WeakComposition>,
    entries: Vec<Vec<BigInt>>,
}

impl GradedMatrix {
    pub fn characteristic(&self) -> Characteristic {
        self.characteristic
    }

    pub fn source_degree(&self) -> u32 {
        self.source_degree
    }

    pub fn target_degree(&self) -> u32 {
        self.source_degree + self.power
    }

    pub fn power(&self) -> u32 {
        self.power
    }

    pub fn row_monomials(&self) -> &[WeakComposition] {
        &self.rows
    }

    pub fn column_monomials(&self) -> &[WeakComposition] {
        &self.columns
    }

    pub fn entries(&self) -> &[Vec<BigInt>] {
        &self.entries
    }

    pub fn num_rows(&self) -> usize {
        self.rows.len()
    }

    pub fn num_columns(&self) -> usize {
        self.columns.len()
    }

    pub fn is_square(&self) -> bool {
        self.num_rows() == self.num_columns()
    }

    pub fn rank(&self) -> usize {
        rank_in(self.characteristic, &self.entries)
    }

    /// `rank == min(rows, columns)`. Over `Q` full rank is first certified
    /// modulo [`CERTIFICATE_PRIME`] and only falls back to exact elimination
    /// when the reduction drops rank.
    pub fn has_maximal_rank(&self) -> bool {
        let target = self.num_rows().min(self.num_columns());
        if target == 0 {
            return true;
        }
        if self.characteristic.is_zero()
            && rank_mod_p(reduce_mod(&self.entries, CERTIFICATE_PRIME), CERTIFICATE_PRIME) == target
        {
            return true;
        }
        self.rank() == target
    }
}

fn rank_in(characteristic: Characteristic, rows: &[Vec<BigInt>]) -> usize {
    if rows.is_empty() || rows[0].is_empty() {
        return 0;
    }
    match characteristic.prime() {
        Some(p) => rank_mod_p(reduce_mod(rows, p), p),
        None => bareiss_rank(rows.to_vec()),
    }
}

fn index_of(list: &[WeakComposition], parts: &[u32]) -> Option<usize> {
    list.binary_search_by(|probe| parts.cmp(&probe.parts)).ok()
}

/// [`GradedMatrix`] for `K[x_0..]/(x_i^{bounds_i})`; a bound of `1` kills the
/// variable.
pub fn multiplication_matrix(bounds: &[u32], characteristic: Characteristic, from: u32, power: u32) -> GradedMatrix {
    let caps: Vec<u32> = bounds.iter().map(|&b| b.saturating_sub(1)).collect();
    let columns = weak_compositions(&caps, from);
    let rows = weak_compositions(&caps, from + power);
    let table = BinomialTable::new(power as usize, characteristic.prime());
    let mut entries = vec![vec![BigInt::zero(); columns.len()]; rows.len()];
    let mut diff = vec![0u32; caps.len()];
    for (r, b) in rows.iter().enumerate() {
        for (c, a) in columns.iter().enumerate() {
            if a.is_below(b) {
                for (slot, (x, y)) in diff.iter_mut().zip(b.parts.iter().zip(&a.parts)) {
                    *slot = x - y;
                }
                entries[r][c] = table.multinomial(&diff);
            }
        }
    }
    GradedMatrix { characteristic, source_degree: from, power, rows, columns, entries }
}

/// Matrix of `x l^power : [R/I_d]_from -> [R/I_d]_{from + power}`.
pub fn mult_map_matrix(d: &DegreeTuple, characteristic: Characteristic, from: u32, power: u32) -> Result<GradedMatrix> {
    if power == 0 {
        return Err(Error::Precondition("multiplication power must be at least 1".into()));
    }
    Ok(multiplication_matrix(d.degrees(), characteristic, from, power))
}

pub fn rank(m: &GradedMatrix) -> usize {
    m.rank()
}

/// WLP by definition; the witness is the least degree where `x l` drops rank.
pub fn has_wlp_oracle(d: &DegreeTuple, characteristic: Characteristic) -> Verdict {
    let t = d.socle_degree();
    for e in 0..t {
        if !multiplication_matrix(d.degrees(), characteristic, e, 1).has_maximal_rank() {
            return Verdict::fails(Method::Oracle, Witness::Degree { degree: e, power: 1 });
        }
    }
    Verdict::holds(Method::Oracle)
}

/// SLP through the bijections `x l^{t-2k} : [A]_k -> [A]_{t-k}`, which
/// suffice because the Hilbert function is symmetric.
pub fn has_slp_oracle(d: &DegreeTuple, characteristic: Characteristic) -> Verdict {
    let t = d.socle_degree();
    for k in 0..=t / 2 {
        let power = t - 2 * k;
        if power == 0 {
            continue;
        }
        if !multiplication_matrix(d.degrees(), characteristic, k, power).has_maximal_rank() {
            return Verdict::fails(Method::Oracle, Witness::Degree { degree: k, power });
        }
    }
    Verdict::holds(Method::Oracle)
}

/// SLP by the full definition: every `x l^k : [A]_e -> [A]_{e+k}` has maximal
/// rank. Slower than [`has_slp_oracle`]; kept as a cross-check.
pub fn has_slp_full_definition(d: &DegreeTuple, characteristic: Characteristic) -> Verdict {
    let t = d.socle_degree();
    for power in 1..=t {
        for e in 0..=t - power {
            if !multiplication_matrix(d.degrees(), characteristic, e, power).has_maximal_rank() {
                return Verdict::fails(Method::Oracle, Witness::Degree { degree: e, power });
            }
        }
    }
    Verdict::holds(Method::Oracle)
}

/// Generators `(l^{linear_power}, x_1^{pure_1}, ..., x_n^{pure_n})` of
/// `S = K[x_1..x_n]` with `l = sum x_i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSystem {
    pub linear_power: u32,
    pub pure_powers: Vec<u32>,
}

impl GeneratorSystem {
    /// The presentation of `R/I_d` obtained by eliminating `x_{index}` through
    /// `l`: `l^{d_index}` together with the remaining pure powers.
    pub fn eliminating(d: &DegreeTuple, index: usize) -> Result<Self> {
        let degrees = d.degrees();
        if index >= degrees.len() {
            return Err(Error::Precondition(alloc::format!("variable index {index} out of range for {d}")));
        }
        let pure_powers = degrees.iter().enumerate().filter(|&(i, _)| i != index).map(|(_, &v)| v).collect();
        Ok(Self { linear_power: degrees[index], pure_powers })
    }

    pub fn num_vars(&self) -> usize {
        self.pure_powers.len()
    }

    fn degrees(&self) -> Vec<u32> {
        let mut out = vec![self.linear_power];
        out.extend_from_slice(&self.pure_powers);
        out
    }
}

/// Dimensions of the syzygy module and its Koszul part in one degree.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SyzygyProfile {
    pub degree: u32,
    pub kernel_dim: usize,
    pub koszul_dim: usize,
}

impl SyzygyProfile {
    pub fn has_nonkoszul(&self) -> bool {
        self.kernel_dim > self.koszul_dim
    }
}

struct DegreeData {
    /// Offsets of each generator's block in the domain.
    offsets: Vec<usize>,
    blocks: Vec<Vec<WeakComposition>>,
    domain_len: usize,
    evaluation: Vec<Vec<BigInt>>,
    koszul: Vec<Vec<BigInt>>,
}

fn monomials(nvars: usize, degree: i64) -> Vec<WeakComposition> {
    if degree < 0 {
        return Vec::new();
    }
    weak_compositions(&vec![degree as u32; nvars], degree as u32)
}

/// `m * G_j` in the monomial basis: `(exponents, coefficient)` pairs.
fn expand(
    system: &GeneratorSystem,
    linear_terms: &[(Vec<u32>, BigInt)],
    j: usize,
    m: &[u32],
) -> Vec<(Vec<u32>, BigInt)> {
    if j == 0 {
        linear_terms.iter().map(|(c, v)| (m.iter().zip(c).map(|(a, b)| a + b).collect(), v.clone())).collect()
    } else {
        let mut e = m.to_vec();
        e[j - 1] += system.pure_powers[j - 1];
        vec![(e, BigInt::from(1))]
    }
}

fn degree_data(system: &GeneratorSystem, characteristic: Characteristic, e: u32) -> DegreeData {
    let n = system.num_vars();
    let gens = system.degrees();
    let table = BinomialTable::new(system.linear_power as usize, characteristic.prime());
    let linear_terms: Vec<(Vec<u32>, BigInt)> = monomials(n, i64::from(system.linear_power))
        .into_iter()
        .map(|c| {
            let v = table.multinomial(&c.parts);
            (c.parts, v)
        })
        .filter(|(_, v)| !v.is_zero())
        .collect();

    let blocks: Vec<Vec<WeakComposition>> = gens.iter().map(|&g| monomials(n, i64::from(e) - i64::from(g))).collect();
    let mut offsets = Vec::with_capacity(blocks.len());
    let mut domain_len = 0;
    for b in &blocks {
        offsets.push(domain_len);
        domain_len += b.len();
    }

    let target = monomials(n, i64::from(e));
    let target_index: BTreeMap<&[u32], usize> =
        target.iter().enumerate().map(|(i, m)| (m.parts.as_slice(), i)).collect();
    let mut evaluation = vec![vec![BigInt::zero(); domain_len]; target.len()];
    for (j, block) in blocks.iter().enumerate() {
        for (c, m) in block.iter().enumerate() {
            for (mono, v) in expand(system, &linear_terms, j, &m.parts) {
                evaluation[target_index[mono.as_slice()]][offsets[j] + c] += v;
            }
        }
    }

    let mut koszul = Vec::new();
    for i in 0..gens.len() {
        for j in i + 1..gens.len() {
            let shift = i64::from(e) - i64::from(gens[i]) - i64::from(gens[j]);
            for m in monomials(n, shift) {
                let mut row = vec![BigInt::zero(); domain_len];
                // component i carries m * G_j, component j carries -m * G_i
                for (mono, v) in expand(system, &linear_terms, j, &m.parts) {
                    row[offsets[i] + index_of(&blocks[i], &mono).expect("monomial in block")] += v;
                }
                for (mono, v) in expand(system, &linear_terms, i, &m.parts) {
                    row[offsets[j] + index_of(&blocks[j], &mono).expect("monomial in block")] -= v;
                }
                koszul.push(row);
            }
        }
    }
    DegreeData { offsets, blocks, domain_len, evaluation, koszul }
}

/// Kernel and Koszul dimensions of `(+)_j S(-deg G_j)_e -> S_e`.
pub fn syzygy_profile(system: &GeneratorSystem, characteristic: Characteristic, e: u32) -> SyzygyProfile {
    let data = degree_data(system, characteristic, e);
    let kernel_dim = data.domain_len - rank_in(characteristic, &data.evaluation);
    let koszul_dim = rank_in(characteristic, &data.koszul);
    SyzygyProfile { degree: e, kernel_dim, koszul_dim }
}

/// Least `e <= cap` carrying a syzygy outside the Koszul submodule.
pub fn mgd_of_system(system: &GeneratorSystem, characteristic: Characteristic, cap: u32) -> Option<u32> {
    (0..=cap).find(|&e| syzygy_profile(system, characteristic, e).has_nonkoszul())
}

/// [`mgd_of_system`] for `(l^{d_0}, x_1^{d_1}, ..., x_n^{d_n})`.
pub fn mgd_nonkoszul(d: &DegreeTuple, characteristic: Characteristic, cap: u32) -> Option<u32> {
    let system = GeneratorSystem::eliminating(d, 0).expect("index 0 exists");
    mgd_of_system(&system, characteristic, cap)
}

/// A degree-`e` syzygy outside the Koszul span, coefficients in generator
/// order. Only over `F_p`: over `Q` the kernel would need rational arithmetic
/// and the characteristic-zero algebra never needs a failure witness.
pub fn nonkoszul_syzygy(
    system: &GeneratorSystem,
    characteristic: Characteristic,
    e: u32,
) -> Option<Vec<SparsePolynomial>> {
    let p = characteristic.prime()?;
    let data = degree_data(system, characteristic, e);
    let koszul = reduce_mod(&data.koszul, p);
    let base_rank = rank_mod_p(koszul.clone(), p);
    let kernel = nullspace_mod_p(reduce_mod(&data.evaluation, p), data.domain_len, p);
    let vector = kernel.into_iter().find(|v| {
        let mut extended = koszul.clone();
        extended.push(v.clone());
        rank_mod_p(extended, p) > base_rank
    })?;
    let field = CoefficientField::Prime(p);
    let n = system.num_vars();
    let coefficients = data
        .blocks
        .iter()
        .zip(&data.offsets)
        .map(|(block, &offset)| {
            block.iter().enumerate().fold(SparsePolynomial::zero(field, n), |acc, (i, m)| {
                let c = BigRational::from_integer(BigInt::from(vector[offset + i]));
                acc.add(&SparsePolynomial::monomial(field, m.parts.clone(), c)).expect("same ring")
            })
        })
        .collect();
    Some(coefficients)
}

/// The polynomials `(l^{linear_power}, x_1^{pure_1}, ...)` themselves.
pub fn system_generators(system: &GeneratorSystem, field: CoefficientField) -> Vec<SparsePolynomial> {
    let n = system.num_vars();
    let vars: Vec<usize> = (0..n).collect();
    let mut out = vec![SparsePolynomial::linear_sum(field, n, &vars).pow(system.linear_power)];
    for (i, &b) in system.pure_powers.iter().enumerate() {
        out.push(SparsePolynomial::var_power(field, n, i, b));
    }
    out
}

/// WLP through the syzygy degree bound: holds iff no non-Koszul syzygy of
/// `(l^{d_0}, x_1^{d_1}, ...)` lives in degree below `floor((t+3)/2)`.
pub fn has_wlp_via_mgd(d: &DegreeTuple, characteristic: Characteristic) -> Verdict {
    let system = GeneratorSystem::eliminating(d, 0).expect("index 0 exists");
    let cap = (d.socle_degree() + 3) / 2 - 1;
    match mgd_of_system(&system, characteristic, cap) {
        None => Verdict::holds(Method::Oracle),
        Some(degree) => {
            let coefficients: Vec<String> = nonkoszul_syzygy(&system, characteristic, degree)
                .map(|cs| cs.iter().map(ToString::to_string).collect())
                .unwrap_or_default();
            Verdict::fails(Method::Oracle, Witness::Syzygy { degree, coefficients })
        }
    }
}
