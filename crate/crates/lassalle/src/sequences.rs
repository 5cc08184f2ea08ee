//! Exact integer and rational sequences: Catalan and Narayana numbers, the
//! Lassalle sequence, free Poisson moments with their classical cumulants,
//! and the two-parameter tail-length tables that refine the cumulant and
//! Lassalle counts.  Everything is big-integer or big-rational arithmetic;
//! nothing here rounds.

use std::collections::BTreeMap;

use num::{BigInt, BigRational, One, Zero};

use crate::error::{Error, Result};
use crate::permutation::{sn_par_fold, DEFAULT_ORACLE_BOUND};
use crate::vhc;

/// Ceiling on `k` for the refined (per-first-entry, per-eye) censuses.
pub const DEFAULT_REFINED_BOUND: usize = 5;

/// Ceiling on `m` for the exhaustive doubly-sorted sweep over `S_{2m}`.
pub const DEFAULT_DOUBLY_SORTED_BOUND: usize = 4;

pub fn factorial(n: usize) -> BigInt {
    (1..=n).map(BigInt::from).product()
}

/// Binomial coefficient; zero when `k > n`.
pub fn binomial(n: usize, k: usize) -> BigInt {
    if k > n {
        return BigInt::from(0);
    }
    let k = k.min(n - k);
    let mut num = BigInt::from(1);
    for i in 0..k {
        num = num * BigInt::from(n - i) / BigInt::from(i + 1);
    }
    num
}

/// `C_n = binom(2n, n) / (n + 1)`; `C_0 = 1`.
pub fn catalan(n: usize) -> BigInt {
    binomial(2 * n, n) / BigInt::from(n + 1)
}

/// `N(n, k) = binom(n, k) binom(n, k−1) / n` for `1 ≤ k ≤ n`.
pub fn narayana(n: usize, k: usize) -> Result<BigInt> {
    if n == 0 || k == 0 || k > n {
        return Err(Error::OutOfRange(format!(
            "narayana needs 1 <= k <= n, got n = {n}, k = {k}"
        )));
    }
    Ok(binomial(n, k) * binomial(n, k - 1) / BigInt::from(n))
}

/// The first `count` terms of the Lassalle sequence, from the recurrence
/// `A_m = (−1)^{m−1} C_m + Σ_{j=1}^{m−1} (−1)^{j−1} binom(2m−1, 2m−2j−1)
/// A_{m−j} C_j` with `A_1 = 1`.
pub fn lassalle(count: usize) -> Vec<BigInt> {
    let mut a: Vec<BigInt> = Vec::with_capacity(count);
    for m in 1..=count {
        let mut term = if m % 2 == 1 { catalan(m) } else { -catalan(m) };
        for j in 1..m {
            let product = binomial(2 * m - 1, 2 * m - 2 * j - 1) * &a[m - j - 1] * catalan(j);
            if j % 2 == 1 {
                term += product;
            } else {
                term -= product;
            }
        }
        a.push(term);
    }
    a
}

pub fn lassalle_term(m: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::OutOfRange("the sequence starts at index 1".into()));
    }
    Ok(lassalle(m).pop().unwrap())
}

/// Coefficients `c_1, …, c_N` of a truncated exponential generating
/// function `Σ c_n z^n / n!`, exact rationals throughout.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct BigRationalSeries {
    coeffs: Vec<BigRational>,
}

impl BigRationalSeries {
    pub fn new(coeffs: Vec<BigRational>) -> Self {
        Self { coeffs }
    }

    pub fn order(&self) -> usize {
        self.coeffs.len()
    }

    /// 1-indexed coefficient access; panics past the truncation order.
    pub fn coefficient(&self, n: usize) -> &BigRational {
        &self.coeffs[n - 1]
    }

    pub fn coefficients(&self) -> &[BigRational] {
        &self.coeffs
    }
}

/// Moments of the free Poisson law with rate `lambda`:
/// `m_n = Σ_{k=1}^n λ^k N(n, k)`.
pub fn free_poisson_moments(order: usize, lambda: &BigRational) -> BigRationalSeries {
    let mut coeffs = Vec::with_capacity(order);
    for n in 1..=order {
        let mut m_n = BigRational::zero();
        let mut power = BigRational::one();
        for k in 1..=n {
            power *= lambda;
            m_n += &power * BigRational::from_integer(narayana(n, k).unwrap());
        }
        coeffs.push(m_n);
    }
    BigRationalSeries::new(coeffs)
}

/// Classical cumulants of the same law, through the moment–cumulant
/// recurrence `k_n = m_n − Σ_{j=1}^{n−1} binom(n−1, j) m_j k_{n−j}`
/// (the coefficient extraction of `log` on the moment generating function).
pub fn classical_cumulants(order: usize, lambda: &BigRational) -> BigRationalSeries {
    let moments = free_poisson_moments(order, lambda);
    let mut cumulants: Vec<BigRational> = Vec::with_capacity(order);
    for n in 1..=order {
        let mut k_n = moments.coefficient(n).clone();
        for j in 1..n {
            let c = BigRational::from_integer(binomial(n - 1, j));
            k_n -= c * moments.coefficient(j) * &cumulants[n - j - 1];
        }
        cumulants.push(k_n);
    }
    BigRationalSeries::new(cumulants)
}

/// The same cumulant computed combinatorially: sweep the valid hook
/// configurations of `S_{n−1}` and evaluate
/// `k_n(λ) = −Σ_H (−λ)^{hooks(H) + 1}`.
pub fn cumulant_via_vhc(n: usize, lambda: &BigRational) -> Result<BigRational> {
    cumulant_via_vhc_with_bound(n, lambda, DEFAULT_ORACLE_BOUND)
}

pub fn cumulant_via_vhc_with_bound(
    n: usize,
    lambda: &BigRational,
    bound: usize,
) -> Result<BigRational> {
    if n == 0 {
        return Err(Error::OutOfRange("cumulants start at order 1".into()));
    }
    if n - 1 > bound {
        return Err(Error::BoundExceeded { size: n - 1, bound });
    }
    let census = vhc::vhc_census_by_hook_count(n - 1);
    let neg_lambda = -lambda.clone();
    let mut total = BigRational::zero();
    let mut power = neg_lambda.clone(); // (−λ)^{k+1} starting at k = 0
    for bucket in census {
        total += BigRational::from_integer(bucket) * &power;
        power *= &neg_lambda;
    }
    Ok(-total)
}

/// A triangular table `value(m, n)` for `0 ≤ m ≤ n ≤ n_max` with its upper
/// cumulative sums `cumulative(m, n) = Σ_{ℓ ≥ m} value(ℓ, n)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CountTable {
    name: String,
    n_max: usize,
    values: BTreeMap<(usize, usize), BigInt>,
    cumulative: BTreeMap<(usize, usize), BigInt>,
}

impl CountTable {
    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn n_max(&self) -> usize {
        self.n_max
    }

    /// Zero outside the stored triangle.
    pub fn value(&self, m: usize, n: usize) -> BigInt {
        self.values.get(&(m, n)).cloned().unwrap_or_default()
    }

    pub fn cumulative(&self, m: usize, n: usize) -> BigInt {
        self.cumulative.get(&(m, n)).cloned().unwrap_or_default()
    }

    /// All `(m, n, value)` rows, `n` outermost, both ascending.
    pub fn rows(&self) -> impl Iterator<Item = (usize, usize, &BigInt)> {
        let mut keys: Vec<&(usize, usize)> = self.values.keys().collect();
        keys.sort_by_key(|&&(m, n)| (n, m));
        keys.into_iter().map(|&(m, n)| (m, n, &self.values[&(m, n)]))
    }
}

/// Both tail-length tables satisfy the same convolution: a count for `(m, n)`
/// splits over the first return `i` and the depth `j` as
/// `Σ_{j=1}^m Σ_{i=1}^{n−m−1} binom(n−m−1, i−1) T_{≥j}(i+j−1) T_{≥m−j}(n−j−i)`,
/// with the diagonal supplied by the caller.
fn fill_table(name: &str, n_max: usize, diagonal: impl Fn(usize) -> BigInt) -> CountTable {
    let mut values: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    let mut cumulative: BTreeMap<(usize, usize), BigInt> = BTreeMap::new();
    for n in 1..=n_max {
        values.insert((n, n), diagonal(n));
        for m in 0..n {
            let mut total = BigInt::from(0);
            for j in 1..=m {
                for i in 1..=n.saturating_sub(m + 1) {
                    let weight = binomial(n - m - 1, i - 1);
                    if weight.is_zero() {
                        continue;
                    }
                    let left = cumulative.get(&(j, i + j - 1)).cloned().unwrap_or_default();
                    if left.is_zero() {
                        continue;
                    }
                    let right =
                        cumulative.get(&(m - j, n - j - i)).cloned().unwrap_or_default();
                    total += weight * left * right;
                }
            }
            values.insert((m, n), total);
        }
        let mut run = BigInt::from(0);
        for m in (0..=n).rev() {
            run += values.get(&(m, n)).cloned().unwrap_or_default();
            cumulative.insert((m, n), run.clone());
        }
    }
    CountTable { name: name.into(), n_max, values, cumulative }
}

/// Valid hook configurations of `S_n` refined by host tail length; the
/// column sums recover the cumulant values `−k_{n+1}(−1)`.
pub fn d_table(n_max: usize) -> CountTable {
    fill_table("hook-configurations-by-tail", n_max, |_| BigInt::from(1))
}

/// Uniquely sorted permutations of `S_n` refined by tail length; odd column
/// sums recover the Lassalle sequence and even columns vanish.
pub fn e_table(n_max: usize) -> CountTable {
    fill_table(
        "uniquely-sorted-by-tail",
        n_max,
        |n| if n == 1 { BigInt::from(1) } else { BigInt::from(0) },
    )
}

/// Uniquely sorted permutations of length `2k + 1` counted by first entry;
/// index `i` (0-based) counts words starting with `i + 1`.
pub fn refined_lassalle_first_entry(k: usize) -> Result<Vec<BigInt>> {
    refined_lassalle_first_entry_with_bound(k, DEFAULT_REFINED_BOUND)
}

pub fn refined_lassalle_first_entry_with_bound(k: usize, bound: usize) -> Result<Vec<BigInt>> {
    let mut counts = vec![BigInt::from(0); 2 * k + 1];
    for pi in vhc::enumerate_uniquely_sorted_with_bound(k, bound)? {
        counts[pi.entry(1) - 1] += 1;
    }
    Ok(counts)
}

/// Uniquely sorted permutations of length `2k + 1` counted by eye; index `i`
/// counts words whose eye equals `i`.  Matches the first-entry refinement
/// componentwise.  Needs `k ≥ 1` for the eye to exist.
pub fn refined_lassalle_eye(k: usize) -> Result<Vec<BigInt>> {
    refined_lassalle_eye_with_bound(k, DEFAULT_REFINED_BOUND)
}

pub fn refined_lassalle_eye_with_bound(k: usize, bound: usize) -> Result<Vec<BigInt>> {
    if k == 0 {
        return Err(Error::EyeUndefined(1));
    }
    let mut counts = vec![BigInt::from(0); 2 * k + 1];
    for pi in vhc::enumerate_uniquely_sorted_with_bound(k, bound)? {
        counts[vhc::eye(&pi)?] += 1;
    }
    Ok(counts)
}

/// Every interior square dominates its neighbors' product.
pub fn is_log_concave(seq: &[BigInt]) -> bool {
    seq.windows(3).all(|w| &w[1] * &w[1] >= &w[0] * &w[2])
}

/// Number of permutations of `S_{2m}` with exactly two preimages.
pub fn doubly_sorted_count(m: usize) -> Result<BigInt> {
    doubly_sorted_count_with_bound(m, DEFAULT_DOUBLY_SORTED_BOUND)
}

pub fn doubly_sorted_count_with_bound(m: usize, bound: usize) -> Result<BigInt> {
    if m == 0 {
        return Err(Error::OutOfRange("counting starts at length 2".into()));
    }
    if m > bound {
        return Err(Error::BoundExceeded { size: m, bound });
    }
    Ok(count_fertility_two(2 * m))
}

fn count_fertility_two(n: usize) -> BigInt {
    let two = BigInt::from(2);
    sn_par_fold(
        n,
        || BigInt::from(0),
        |acc, pi| {
            if vhc::fertility(pi) == two {
                *acc += 1;
            }
        },
        |a, b| a + b,
    )
}

/// Verify that no odd length up to `max_len` admits a doubly sorted
/// permutation.
pub fn no_doubly_sorted_of_odd_length(max_len: usize) -> Result<bool> {
    if max_len > DEFAULT_ORACLE_BOUND {
        return Err(Error::BoundExceeded { size: max_len, bound: DEFAULT_ORACLE_BOUND });
    }
    for n in (1..=max_len).step_by(2) {
        if !count_fertility_two(n).is_zero() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Number of permutations of `S_n` that `t` stack-sorting passes fully sort.
pub fn w_count(t: usize, n: usize) -> Result<BigInt> {
    w_count_with_bound(t, n, DEFAULT_ORACLE_BOUND)
}

pub fn w_count_with_bound(t: usize, n: usize, bound: usize) -> Result<BigInt> {
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    Ok(sn_par_fold(
        n,
        || BigInt::from(0),
        |acc, pi| {
            if pi.iterate_sort(t).is_identity() {
                *acc += 1;
            }
        },
        |a, b| a + b,
    ))
}

/// Closed form for the two-pass count: `2 binom(3n, n) / ((n+1)(2n+1))`.
pub fn w2_closed_form(n: usize) -> BigInt {
    let numerator = BigInt::from(2) * binomial(3 * n, n);
    let denominator = BigInt::from(n + 1) * BigInt::from(2 * n + 1);
    debug_assert!((&numerator % &denominator).is_zero());
    numerator / denominator
}
