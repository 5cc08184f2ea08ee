//! Permutations, West's stack-sorting map, and the brute-force preimage
//! oracle used to cross-check the faster counting formulas.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ceiling for exhaustive sweeps over all rearrangements (9! = 362 880).
pub const DEFAULT_ORACLE_BOUND: usize = 9;

/// A word of distinct positive integers, read 1-indexed.
///
/// Entries need not be `1..=n`: `5 2 9` is a permutation of `{2, 5, 9}`.
/// Statistics that only depend on relative order (descents, stack-sorting,
/// tail length) treat such words through their normalization.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<usize>", try_from = "Vec<usize>")]
pub struct Permutation {
    entries: Vec<usize>,
}

impl Permutation {
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if entries.contains(&0) {
            return Err(Error::InvalidPermutation(
                "entries must be positive".into(),
            ));
        }
        let mut seen = entries.clone();
        seen.sort_unstable();
        if seen.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::InvalidPermutation(
                "entries must be distinct".into(),
            ));
        }
        Ok(Self { entries })
    }

    /// Construct without the distinctness scan; callers guarantee validity.
    pub(crate) fn from_distinct_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(Self::new(entries.clone()).is_ok());
        Self { entries }
    }

    pub fn empty() -> Self {
        Self { entries: Vec::new() }
    }

    pub fn identity(n: usize) -> Self {
        Self { entries: (1..=n).collect() }
    }

    pub fn len(&self) -> usize {
        self.entries.len()
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn entries(&self) -> &[usize] {
        &self.entries
    }

    /// The entry at 1-indexed position `i`.  Panics when out of range.
    pub fn entry(&self, i: usize) -> usize {
        self.entries[i - 1]
    }

    /// 1-indexed position of `value`, if present.
    pub fn position_of(&self, value: usize) -> Option<usize> {
        self.entries.iter().position(|&v| v == value).map(|p| p + 1)
    }

    /// True when the entry set is exactly `{1, …, n}`.
    pub fn is_normalized(&self) -> bool {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable();
        sorted.iter().enumerate().all(|(i, &v)| v == i + 1)
    }

    pub fn is_identity(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] < w[1]) && self.is_normalized()
    }

    /// Replace each entry by its rank, yielding a permutation of `{1, …, n}`
    /// in the same relative order.
    pub fn normalize(&self) -> Self {
        let mut sorted = self.entries.clone();
        sorted.sort_unstable();
        let entries = self
            .entries
            .iter()
            .map(|v| sorted.binary_search(v).unwrap() + 1)
            .collect();
        Self { entries }
    }

    /// 1-indexed positions `i` with `π_i > π_{i+1}`, ascending.
    pub fn descents(&self) -> Vec<usize> {
        self.entries
            .windows(2)
            .enumerate()
            .filter(|(_, w)| w[0] > w[1])
            .map(|(i, _)| i + 1)
            .collect()
    }

    /// One pass of stack sorting: scan left to right, push each entry that is
    /// smaller than the top of the stack, otherwise pop to the output until it
    /// is; drain the stack at the end.
    pub fn stack_sort(&self) -> Self {
        let mut stack: Vec<usize> = Vec::with_capacity(self.len());
        let mut out: Vec<usize> = Vec::with_capacity(self.len());
        for &v in &self.entries {
            while let Some(&top) = stack.last() {
                if top < v {
                    out.push(stack.pop().unwrap());
                } else {
                    break;
                }
            }
            stack.push(v);
        }
        while let Some(top) = stack.pop() {
            out.push(top);
        }
        Self { entries: out }
    }

    /// `t`-fold iterate of [`Self::stack_sort`]; `t = 0` is the identity map.
    pub fn iterate_sort(&self, t: usize) -> Self {
        let mut cur = self.clone();
        for _ in 0..t {
            cur = cur.stack_sort();
        }
        cur
    }

    /// Length of the maximal fixed suffix of the normalization: the largest
    /// `i` such that the last `i` positions each hold their own index.  The
    /// identity has tail length `n`.
    pub fn tail_length(&self) -> usize {
        let norm = if self.is_normalized() { self.clone() } else { self.normalize() };
        let n = norm.len();
        let mut i = 0;
        while i < n && norm.entry(n - i) == n - i {
            i += 1;
        }
        i
    }

    /// All rearrangements `σ` of the same entry set with `s(σ) = self`,
    /// in lexicographic order.  Exhaustive over `n!` candidates; refuses
    /// lengths above [`DEFAULT_ORACLE_BOUND`].
    pub fn preimages_bruteforce(&self) -> Result<Vec<Permutation>> {
        self.preimages_bruteforce_with_bound(DEFAULT_ORACLE_BOUND)
    }

    pub fn preimages_bruteforce_with_bound(&self, bound: usize) -> Result<Vec<Permutation>> {
        if self.len() > bound {
            return Err(Error::BoundExceeded { size: self.len(), bound });
        }
        let mut values = self.entries.clone();
        values.sort_unstable();
        let mut found = Vec::new();
        for cand in values.iter().copied().permutations(values.len()) {
            let cand = Permutation::from_distinct_unchecked(cand);
            if cand.stack_sort() == *self {
                found.push(cand);
            }
        }
        Ok(found)
    }
}

impl fmt::Display for Permutation {
    /// Space-separated entries; the empty permutation prints as nothing.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in &self.entries {
            if !first {
                write!(f, " ")?;
            }
            write!(f, "{v}")?;
            first = false;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut entries = Vec::new();
        for tok in s.split_whitespace() {
            let v: usize = tok
                .parse()
                .map_err(|_| Error::Parse(format!("bad entry {tok:?}")))?;
            entries.push(v);
        }
        Permutation::new(entries)
    }
}

impl From<Permutation> for Vec<usize> {
    fn from(p: Permutation) -> Self {
        p.entries
    }
}

impl TryFrom<Vec<usize>> for Permutation {
    type Error = Error;

    fn try_from(entries: Vec<usize>) -> Result<Self> {
        Permutation::new(entries)
    }
}

/// Visit every arrangement of `values` (assumed distinct) in lexicographic
/// order of the word.
pub fn for_each_arrangement(values: &[usize], mut f: impl FnMut(&Permutation)) {
    let mut sorted = values.to_vec();
    sorted.sort_unstable();
    if sorted.is_empty() {
        f(&Permutation::empty());
        return;
    }
    for word in sorted.iter().copied().permutations(sorted.len()) {
        f(&Permutation::from_distinct_unchecked(word));
    }
}

/// Visit all of `S_n` in lexicographic order.
pub fn sn_for_each(n: usize, f: impl FnMut(&Permutation)) {
    let values: Vec<usize> = (1..=n).collect();
    for_each_arrangement(&values, f);
}

/// Parallel fold over `S_n`, partitioned by first entry.  Each slice
/// `{π : π_1 = v}` is folded sequentially in lexicographic order with `step`;
/// the per-slice accumulators are then merged in order of `v`, so the result
/// is deterministic regardless of thread scheduling.
pub fn sn_par_fold<T, Make, Step, Merge>(n: usize, make: Make, step: Step, merge: Merge) -> T
where
    T: Send,
    Make: Fn() -> T + Sync,
    Step: Fn(&mut T, &Permutation) + Sync,
    Merge: Fn(T, T) -> T,
{
    if n == 0 {
        let mut acc = make();
        step(&mut acc, &Permutation::empty());
        return acc;
    }
    let slices: Vec<T> = (1..=n)
        .into_par_iter()
        .map(|first| {
            let rest: Vec<usize> = (1..=n).filter(|&v| v != first).collect();
            let mut acc = make();
            if rest.is_empty() {
                step(&mut acc, &Permutation::from_distinct_unchecked(vec![first]));
                return acc;
            }
            for tail in rest.iter().copied().permutations(rest.len()) {
                let mut word = Vec::with_capacity(n);
                word.push(first);
                word.extend(tail);
                step(&mut acc, &Permutation::from_distinct_unchecked(word));
            }
            acc
        })
        .collect();
    slices.into_iter().reduce(merge).expect("n >= 1 gives at least one slice")
}

/// Tally all of `S_n` by stack-sorted image.  Keys are exactly the sorted
/// permutations of `S_n`; the values are their preimage counts, computed by
/// nothing but the map itself.
pub fn fertility_census(n: usize) -> BTreeMap<Permutation, u64> {
    sn_par_fold(
        n,
        BTreeMap::new,
        |acc, pi| *acc.entry(pi.stack_sort()).or_insert(0) += 1,
        |mut a, b| {
            for (image, count) in b {
                *a.entry(image).or_insert(0) += count;
            }
            a
        },
    )
}
