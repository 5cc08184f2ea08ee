//! Valid hook configurations.
//!
//! Draw a permutation as the points `(i, π_i)`.  A *hook* rises from a point
//! `(i, π_i)` (its southwest endpoint) to a higher point `(j, π_j)` further
//! right (its northeast endpoint): one vertical segment from `(i, π_i)` up to
//! `(i, π_j)`, then one horizontal segment across to `(j, π_j)`.  A set of
//! hooks is a *valid configuration* when
//!
//! 1. every descent top carries exactly one hook (and nothing else does),
//! 2. no hook passes above an intermediate point that is higher than its
//!    northeast endpoint, and
//! 3. no two hooks intersect, except that one hook's northeast endpoint may
//!    serve as another's southwest endpoint.
//!
//! Weighting each configuration by a product of Catalan numbers taken over
//! its induced coloring counts stack-sorting preimages exactly; that formula,
//! the coloring, and the structural decomposition under the highest hook all
//! live here.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::permutation::{sn_par_fold, Permutation};
use crate::sequences::catalan;
use crate::trees::DecreasingBinaryTree;

/// Construction ceiling for listing uniquely sorted permutations; the level
/// above the default already holds 32 670 words.
pub const DEFAULT_UNIQUELY_SORTED_BOUND: usize = 5;

/// A single hook, stored by the 1-indexed positions of its endpoints.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct Hook {
    pub sw: usize,
    pub ne: usize,
}

impl Hook {
    pub fn new(sw: usize, ne: usize) -> Self {
        Self { sw, ne }
    }
}

impl fmt::Display for Hook {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}>{}", self.sw, self.ne)
    }
}

impl FromStr for Hook {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (a, b) = s
            .split_once('>')
            .ok_or_else(|| Error::Parse(format!("hook {s:?} must look like SW>NE")))?;
        let sw = a.trim().parse().map_err(|_| Error::Parse(format!("bad position {a:?}")))?;
        let ne = b.trim().parse().map_err(|_| Error::Parse(format!("bad position {b:?}")))?;
        Ok(Hook { sw, ne })
    }
}

/// A host permutation together with a set of hooks satisfying the three
/// validity conditions.  Hooks are kept sorted by southwest position.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "RawConfiguration")]
pub struct ValidHookConfiguration {
    host: Permutation,
    hooks: Vec<Hook>,
}

#[derive(Deserialize)]
struct RawConfiguration {
    host: Permutation,
    hooks: Vec<Hook>,
}

impl TryFrom<RawConfiguration> for ValidHookConfiguration {
    type Error = Error;

    fn try_from(raw: RawConfiguration) -> Result<Self> {
        ValidHookConfiguration::new(raw.host, raw.hooks)
    }
}

/// Colors assigned to the points of a host permutation by its hooks.  Color
/// `0` is the sky; color `i ≥ 1` belongs to the `i`-th hook in southwest
/// order.  The *base* coloring leaves northeast endpoints uncolored; the
/// *extended* coloring gives each northeast endpoint its own hook's color.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColorAssignment {
    base: Vec<Option<usize>>,
    extended: Vec<usize>,
}

impl ColorAssignment {
    /// Base color of each position (1-indexed callers subtract themselves);
    /// `None` at northeast endpoints.
    pub fn base(&self) -> &[Option<usize>] {
        &self.base
    }

    /// Extended color of each position.
    pub fn extended(&self) -> &[usize] {
        &self.extended
    }

    /// Number of points of each base color, sky first: a sequence
    /// `(q_0, …, q_k)` summing to `n − k`.  Every hook id occurs in the
    /// extended coloring (at its own northeast endpoint), which fixes `k`.
    pub fn class_sizes(&self) -> Vec<usize> {
        let hooks = self.extended.iter().copied().max().unwrap_or(0);
        let mut sizes = vec![0usize; hooks + 1];
        for c in self.base.iter().flatten() {
            sizes[*c] += 1;
        }
        sizes
    }
}

impl ValidHookConfiguration {
    /// Validate and build; hooks may arrive in any order.
    pub fn new(host: Permutation, mut hooks: Vec<Hook>) -> Result<Self> {
        validate(&host, &hooks)?;
        hooks.sort_by_key(|h| h.sw);
        Ok(Self { host, hooks })
    }

    /// For hooks produced by the enumerator, already sorted and known valid.
    fn from_enumerated(host: Permutation, hooks: Vec<Hook>) -> Self {
        debug_assert!(validate(&host, &hooks).is_ok());
        Self { host, hooks }
    }

    pub fn host(&self) -> &Permutation {
        &self.host
    }

    pub fn hooks(&self) -> &[Hook] {
        &self.hooks
    }

    pub fn hook_count(&self) -> usize {
        self.hooks.len()
    }

    /// Color every point by the hook that shelters it most closely: among
    /// hooks whose horizontal run crosses the point's column strictly above
    /// the point, the one with the lowest such run wins; points nobody
    /// shelters see the sky (color 0).  Northeast endpoints stay uncolored in
    /// the base variant and take their own hook's color in the extended one.
    pub fn induced_coloring(&self) -> ColorAssignment {
        let n = self.host.len();
        let pi = self.host.entries();
        let mut base: Vec<Option<usize>> = vec![None; n];
        let mut extended: Vec<usize> = vec![0; n];
        let mut ne_hook: Vec<Option<usize>> = vec![None; n];
        for (idx, h) in self.hooks.iter().enumerate() {
            ne_hook[h.ne - 1] = Some(idx + 1);
        }
        for pos in 1..=n {
            if let Some(id) = ne_hook[pos - 1] {
                extended[pos - 1] = id;
                continue;
            }
            let mut best: Option<(usize, usize)> = None; // (height, hook id)
            for (idx, h) in self.hooks.iter().enumerate() {
                if h.sw < pos && pos <= h.ne {
                    let height = pi[h.ne - 1];
                    if height > pi[pos - 1] && best.is_none_or(|(bh, _)| height < bh) {
                        best = Some((height, idx + 1));
                    }
                }
            }
            let color = best.map_or(0, |(_, id)| id);
            base[pos - 1] = Some(color);
            extended[pos - 1] = color;
        }
        ColorAssignment { base, extended }
    }

    /// Base color class sizes `(q_0, …, q_k)`, sky first.  For a nonempty
    /// host every class is nonempty, so this is a composition of `n − k`
    /// into `k + 1` positive parts.
    pub fn valid_composition(&self) -> Vec<usize> {
        let mut sizes = vec![0usize; self.hooks.len() + 1];
        for c in self.induced_coloring().base.iter().flatten() {
            sizes[*c] += 1;
        }
        sizes
    }

    /// The hook whose northeast endpoint is highest.
    pub fn top_hook(&self) -> Option<Hook> {
        self.hooks
            .iter()
            .copied()
            .max_by_key(|h| self.host.entry(h.ne))
    }

    /// Split the configuration along its top hook: the points strictly under
    /// it (between its endpoints) form the sheltered piece, everything else —
    /// minus the top hook and its northeast endpoint — the unsheltered piece.
    /// Hooks never straddle the boundary, so both pieces inherit valid
    /// configurations on their subwords.
    pub fn top_hook_decomposition(&self) -> Result<TopHookDecomposition> {
        let top = self.top_hook().ok_or(Error::DecompositionUndefined)?;
        let (d, j) = (top.sw, top.ne);
        let pi = self.host.entries();
        let n = pi.len();

        let sheltered_word: Vec<usize> = pi[d..j - 1].to_vec();
        let unsheltered_word: Vec<usize> =
            pi[..d].iter().chain(pi[j..].iter()).copied().collect();

        let mut sheltered_hooks = Vec::new();
        let mut unsheltered_hooks = Vec::new();
        for &h in &self.hooks {
            if h == top {
                continue;
            }
            if h.sw > d && h.sw < j {
                debug_assert!(h.ne < j);
                sheltered_hooks.push(Hook::new(h.sw - d, h.ne - d));
            } else {
                debug_assert!(h.ne <= d || h.sw > j);
                let shift = |p: usize| if p > j { p - (j - d) } else { p };
                unsheltered_hooks.push(Hook::new(shift(h.sw), shift(h.ne)));
            }
        }

        let sheltered_values: Vec<usize> = sheltered_word.iter().copied().sorted().collect();
        let unsheltered_values: Vec<usize> = unsheltered_word.iter().copied().sorted().collect();
        let sheltered = ValidHookConfiguration::new(
            Permutation::from_distinct_unchecked(sheltered_word),
            sheltered_hooks,
        )?;
        let unsheltered = ValidHookConfiguration::new(
            Permutation::from_distinct_unchecked(unsheltered_word),
            unsheltered_hooks,
        )?;
        debug_assert_eq!(sheltered_values.len() + unsheltered_values.len(), n - 1);
        Ok(TopHookDecomposition {
            top_hook: top,
            sheltered,
            unsheltered,
            sheltered_values,
            unsheltered_values,
        })
    }

    /// For a configuration on a uniquely sorted host, rebuild the preimage
    /// tree: each hook hangs its southwest value as the left child of its
    /// northeast value, and the point just before a northeast endpoint
    /// becomes the right child.
    pub fn to_tree(&self) -> Result<DecreasingBinaryTree> {
        if !is_uniquely_sorted(&self.host) {
            return Err(Error::NotUniquelySorted);
        }
        let n = self.host.len();
        let pi = self.host.entries();
        let mut left: Vec<Option<usize>> = vec![None; n + 1];
        let mut right: Vec<Option<usize>> = vec![None; n + 1];
        let mut has_parent = vec![false; n + 1];
        for h in &self.hooks {
            let parent = pi[h.ne - 1];
            let lchild = pi[h.sw - 1];
            let rchild = pi[h.ne - 2];
            left[parent] = Some(lchild);
            right[parent] = Some(rchild);
            has_parent[lchild] = true;
            has_parent[rchild] = true;
        }
        let roots: Vec<usize> = (1..=n).filter(|&v| !has_parent[v]).collect();
        debug_assert_eq!(roots, vec![n]);
        let mut word = Vec::with_capacity(n);
        fn in_order(
            v: usize,
            left: &[Option<usize>],
            right: &[Option<usize>],
            out: &mut Vec<usize>,
        ) {
            if let Some(l) = left[v] {
                in_order(l, left, right, out);
            }
            out.push(v);
            if let Some(r) = right[v] {
                in_order(r, left, right, out);
            }
        }
        in_order(roots[0], &left, &right, &mut word);
        let tree =
            DecreasingBinaryTree::from_inorder(&Permutation::from_distinct_unchecked(word))
                .expect("uniquely sorted hosts are nonempty");
        debug_assert_eq!(tree.post_order(), self.host);
        Ok(tree)
    }
}

/// Holds both halves of a top-hook split, plus the value sets they carry.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct TopHookDecomposition {
    pub top_hook: Hook,
    pub sheltered: ValidHookConfiguration,
    pub unsheltered: ValidHookConfiguration,
    /// Values strictly under the top hook, ascending.
    pub sheltered_values: Vec<usize>,
    /// The remaining values (northeast value excluded), ascending.
    pub unsheltered_values: Vec<usize>,
}

impl fmt::Display for ValidHookConfiguration {
    /// Host, a `;`, then the hooks: `2 7 3 5 … 16 ; 2>7 7>15 9>13`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.host.is_empty() {
            write!(f, ";")?;
        } else {
            write!(f, "{} ;", self.host)?;
        }
        for h in &self.hooks {
            write!(f, " {h}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for ValidHookConfiguration {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Vhc({})", self.to_string().trim())
    }
}

impl FromStr for ValidHookConfiguration {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (host, hooks) = s
            .split_once(';')
            .ok_or_else(|| Error::Parse("expected HOST ; HOOKS".into()))?;
        if hooks.contains(';') {
            return Err(Error::Parse("more than one ';'".into()));
        }
        let host: Permutation = host.trim().parse()?;
        let hooks: Vec<Hook> = hooks
            .split_whitespace()
            .map(|tok| tok.parse())
            .collect::<Result<_>>()?;
        ValidHookConfiguration::new(host, hooks)
    }
}

/// Check the three validity conditions for an arbitrary hook set.  Endpoints
/// outside the host are an error; rule violations just return `false`.
pub fn is_valid(host: &Permutation, hooks: &[Hook]) -> Result<bool> {
    match validate(host, hooks) {
        Ok(()) => Ok(true),
        Err(Error::HookOutOfRange { sw, ne, len }) => Err(Error::HookOutOfRange { sw, ne, len }),
        Err(_) => Ok(false),
    }
}

fn validate(host: &Permutation, hooks: &[Hook]) -> Result<()> {
    let n = host.len();
    for h in hooks {
        if h.sw == 0 || h.ne == 0 || h.sw > n || h.ne > n {
            return Err(Error::HookOutOfRange { sw: h.sw, ne: h.ne, len: n });
        }
    }
    let sws: Vec<usize> = hooks.iter().map(|h| h.sw).sorted().collect();
    if sws != host.descents() {
        return Err(Error::InvalidConfiguration(
            "hooks must sit exactly on the descent tops, one each".into(),
        ));
    }
    for h in hooks {
        if h.ne <= h.sw || host.entry(h.ne) <= host.entry(h.sw) {
            return Err(Error::InvalidConfiguration(format!(
                "hook {h} must rise to a later, higher point"
            )));
        }
        let top = host.entry(h.ne);
        if (h.sw + 1..h.ne).any(|a| host.entry(a) > top) {
            return Err(Error::InvalidConfiguration(format!(
                "hook {h} passes under a higher intermediate point"
            )));
        }
    }
    for (a, b) in hooks.iter().tuple_combinations() {
        if hooks_conflict(host, *a, *b) {
            return Err(Error::InvalidConfiguration(format!("hooks {a} and {b} intersect")));
        }
    }
    Ok(())
}

/// Geometric intersection test for two hooks, allowing only the shared
/// point where one's northeast endpoint is the other's southwest endpoint.
fn hooks_conflict(host: &Permutation, a: Hook, b: Hook) -> bool {
    if a.ne == b.ne || a.sw == b.sw {
        return true;
    }
    // Vertical segment of `x` against horizontal segment of `y`.
    let v_h = |x: Hook, y: Hook| {
        let col = x.sw;
        let (lo, hi) = (host.entry(x.sw), host.entry(x.ne));
        let row = host.entry(y.ne);
        y.sw <= col && col <= y.ne && lo <= row && row <= hi && y.ne != x.sw
    };
    v_h(a, b) || v_h(b, a)
}

/// Northeast candidates for a hook anchored at descent `d`: positions past
/// `d` whose entry beats both `π_d` and everything in between.
fn hook_candidates(host: &Permutation, d: usize) -> Vec<usize> {
    let n = host.len();
    let mut out = Vec::new();
    let mut highest = host.entry(d);
    for j in d + 1..=n {
        if host.entry(j) > highest {
            out.push(j);
            highest = host.entry(j);
        }
    }
    out
}

/// Visit the hook set of every valid configuration of `pi`, in lexicographic
/// order of the northeast choices.  The identity gets one empty visit.
pub fn for_each_vhc(pi: &Permutation, mut f: impl FnMut(&[Hook])) {
    let descents = pi.descents();
    let candidates: Vec<Vec<usize>> = descents.iter().map(|&d| hook_candidates(pi, d)).collect();
    let mut chosen: Vec<Hook> = Vec::with_capacity(descents.len());
    fn rec(
        pi: &Permutation,
        descents: &[usize],
        candidates: &[Vec<usize>],
        chosen: &mut Vec<Hook>,
        f: &mut impl FnMut(&[Hook]),
    ) {
        let level = chosen.len();
        if level == descents.len() {
            f(chosen);
            return;
        }
        for &j in &candidates[level] {
            let h = Hook::new(descents[level], j);
            if chosen.iter().all(|&g| !hooks_conflict(pi, g, h)) {
                chosen.push(h);
                rec(pi, descents, candidates, chosen, f);
                chosen.pop();
            }
        }
    }
    rec(pi, &descents, &candidates, &mut chosen, &mut f);
}

/// All valid configurations of `pi`, sorted by their hook lists.
pub fn enumerate_vhcs(pi: &Permutation) -> Vec<ValidHookConfiguration> {
    let mut out = Vec::new();
    for_each_vhc(pi, |hooks| {
        out.push(ValidHookConfiguration::from_enumerated(pi.clone(), hooks.to_vec()));
    });
    out
}

pub fn count_vhcs(pi: &Permutation) -> u64 {
    let mut count = 0;
    for_each_vhc(pi, |_| count += 1);
    count
}

/// Number of stack-sorting preimages, computed as the sum over all valid
/// configurations of the product of Catalan numbers of the base color class
/// sizes.
pub fn fertility(pi: &Permutation) -> BigInt {
    let mut total = BigInt::from(0);
    let host = pi.clone();
    for_each_vhc(pi, |hooks| {
        let config = ValidHookConfiguration::from_enumerated(host.clone(), hooks.to_vec());
        let mut term = BigInt::from(1);
        for q in config.valid_composition() {
            term *= catalan(q);
        }
        total += term;
    });
    total
}

/// Does `pi` have any stack-sorting preimage?  Equivalent to owning at least
/// one valid configuration; the search stops at the first.
pub fn is_sorted(pi: &Permutation) -> bool {
    let descents = pi.descents();
    let candidates: Vec<Vec<usize>> = descents.iter().map(|&d| hook_candidates(pi, d)).collect();
    fn rec(
        pi: &Permutation,
        descents: &[usize],
        candidates: &[Vec<usize>],
        chosen: &mut Vec<Hook>,
    ) -> bool {
        let level = chosen.len();
        if level == descents.len() {
            return true;
        }
        for &j in &candidates[level] {
            let h = Hook::new(descents[level], j);
            if chosen.iter().all(|&g| !hooks_conflict(pi, g, h)) {
                chosen.push(h);
                if rec(pi, descents, candidates, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    rec(pi, &descents, &candidates, &mut Vec::new())
}

/// Exactly one preimage: sorted with `(n − 1) / 2` descents, `n` odd.
pub fn is_uniquely_sorted(pi: &Permutation) -> bool {
    let n = pi.len();
    n % 2 == 1 && 2 * pi.descents().len() + 1 == n && is_sorted(pi)
}

/// All uniquely sorted permutations of length `2k + 1`, ascending.
///
/// Built bottom-up: split `{1, …, 2k}` into two odd-size value sets, fill
/// each with a shorter uniquely sorted pattern, and append the maximum —
/// keeping only splits where the left part's maximum exceeds the right
/// part's first entry.
pub fn enumerate_uniquely_sorted(k: usize) -> Result<Vec<Permutation>> {
    enumerate_uniquely_sorted_with_bound(k, DEFAULT_UNIQUELY_SORTED_BOUND)
}

pub fn enumerate_uniquely_sorted_with_bound(k: usize, bound: usize) -> Result<Vec<Permutation>> {
    if k > bound {
        return Err(Error::BoundExceeded { size: k, bound });
    }
    Ok(uniquely_sorted_levels(k).pop().unwrap())
}

fn uniquely_sorted_levels(k: usize) -> Vec<Vec<Permutation>> {
    let mut levels: Vec<Vec<Permutation>> = vec![vec![Permutation::identity(1)]];
    for level in 1..=k {
        let mut set: BTreeSet<Permutation> = BTreeSet::new();
        let mut raw = 0usize;
        let ground = 2 * level;
        for left_k in 0..level {
            let right_k = level - 1 - left_k;
            let left_len = 2 * left_k + 1;
            for left_vals in (1..=ground).combinations(left_len) {
                let mut in_left = vec![false; ground + 1];
                for &v in &left_vals {
                    in_left[v] = true;
                }
                let right_vals: Vec<usize> =
                    (1..=ground).filter(|&v| !in_left[v]).collect();
                let left_max = *left_vals.last().unwrap();
                for tau in &levels[left_k] {
                    let left_word: Vec<usize> =
                        tau.entries().iter().map(|&e| left_vals[e - 1]).collect();
                    for mu in &levels[right_k] {
                        if left_max <= right_vals[mu.entry(1) - 1] {
                            continue;
                        }
                        let mut word = left_word.clone();
                        word.extend(mu.entries().iter().map(|&e| right_vals[e - 1]));
                        word.push(ground + 1);
                        set.insert(Permutation::from_distinct_unchecked(word));
                        raw += 1;
                    }
                }
            }
        }
        // The construction never repeats a word.
        debug_assert_eq!(raw, set.len());
        levels.push(set.into_iter().collect());
    }
    levels
}

/// The entry just right of the top hook's southwest corner — the leftmost
/// sheltered point.  Defined for uniquely sorted permutations of length ≥ 3.
pub fn eye(pi: &Permutation) -> Result<usize> {
    if !is_uniquely_sorted(pi) {
        return Err(Error::NotUniquelySorted);
    }
    if pi.len() == 1 {
        return Err(Error::EyeUndefined(1));
    }
    let configs = enumerate_vhcs(pi);
    debug_assert_eq!(configs.len(), 1);
    let top = configs[0].top_hook().expect("length ≥ 3 forces hooks");
    Ok(pi.entry(top.sw + 1))
}

/// Total number of valid configurations across all of `S_n`.
pub fn total_vhc_count(n: usize) -> BigInt {
    sn_par_fold(
        n,
        || BigInt::from(0),
        |acc, pi| *acc += count_vhcs(pi),
        |a, b| a + b,
    )
}

/// Valid configurations across `S_n`, bucketed by hook count.
pub fn vhc_census_by_hook_count(n: usize) -> Vec<BigInt> {
    sn_par_fold(
        n,
        || vec![BigInt::from(0); n / 2 + 1],
        |acc, pi| {
            for_each_vhc(pi, |hooks| acc[hooks.len()] += 1);
        },
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    )
}

/// Valid configurations across `S_n`, bucketed by the host's tail length
/// (index `m` of the result counts hosts with fixed suffix exactly `m`).
pub fn vhc_census_by_tail_length(n: usize) -> Vec<BigInt> {
    sn_par_fold(
        n,
        || vec![BigInt::from(0); n + 1],
        |acc, pi| acc[pi.tail_length()] += count_vhcs(pi),
        |mut a, b| {
            for (x, y) in a.iter_mut().zip(b) {
                *x += y;
            }
            a
        },
    )
}

/// Uniquely sorted permutations of length `2k + 1`, bucketed by tail length.
pub fn uniquely_sorted_census_by_tail_length(k: usize) -> Result<Vec<BigInt>> {
    let n = 2 * k + 1;
    let mut buckets = vec![BigInt::from(0); n + 1];
    for pi in enumerate_uniquely_sorted(k)? {
        buckets[pi.tail_length()] += 1;
    }
    Ok(buckets)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::sn_for_each;
    use num::BigInt;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn wide_example() -> ValidHookConfiguration {
        "2 7 3 5 9 10 11 4 8 1 6 12 13 14 15 16 ; 2>7 7>15 9>13".parse().unwrap()
    }

    #[test]
    fn display_parse_round_trip() {
        let c = wide_example();
        assert_eq!(c.to_string(), "2 7 3 5 9 10 11 4 8 1 6 12 13 14 15 16 ; 2>7 7>15 9>13");
        assert_eq!(c.to_string().parse::<ValidHookConfiguration>().unwrap(), c);
        let empty: ValidHookConfiguration = "1 2 3 ;".parse().unwrap();
        assert_eq!(empty.to_string(), "1 2 3 ;");
        assert_eq!(empty.hook_count(), 0);
    }

    #[test]
    fn validity_conditions() {
        let host = p("2 7 3 5 9 10 11 4 8 1 6 12 13 14 15 16");
        // Hook endpoints outside the host are a hard error.
        assert!(matches!(
            is_valid(&host, &[Hook::new(2, 17)]),
            Err(Error::HookOutOfRange { .. })
        ));
        // Wrong southwest set.
        assert_eq!(is_valid(&host, &[]), Ok(false));
        // (2>12) clears every intermediate point but runs straight through
        // the vertical of (7>15) at (7, 12).
        assert_eq!(
            is_valid(&host, &[Hook::new(2, 12), Hook::new(7, 15), Hook::new(9, 13)]),
            Ok(false)
        );
        // A lower northeast endpoint for the third hook also works.
        assert_eq!(
            is_valid(&host, &[Hook::new(2, 7), Hook::new(7, 15), Hook::new(9, 12)]),
            Ok(true)
        );
        // The canonical configuration is valid.
        assert_eq!(
            is_valid(&host, &[Hook::new(2, 7), Hook::new(7, 15), Hook::new(9, 13)]),
            Ok(true)
        );
        // Two hooks may not share a northeast endpoint.
        let host2 = p("3 1 4 2 5");
        assert_eq!(is_valid(&host2, &[Hook::new(1, 5), Hook::new(3, 5)]), Ok(false));
        assert_eq!(is_valid(&host2, &[Hook::new(1, 3), Hook::new(3, 5)]), Ok(true));
    }

    #[test]
    fn crossing_hooks_are_rejected() {
        // 1 5 2 4 3 6 7 has descents at 2 and 4.  Sending the first hook to
        // position 6 and the second to 7 makes the second hook's vertical
        // cut the first hook's horizontal at (4, 6); swapping the endpoints
        // nests the hooks cleanly instead.
        let host = p("1 5 2 4 3 6 7");
        assert_eq!(is_valid(&host, &[Hook::new(2, 6), Hook::new(4, 7)]), Ok(false));
        assert_eq!(is_valid(&host, &[Hook::new(2, 7), Hook::new(4, 6)]), Ok(true));
        assert_eq!(is_valid(&host, &[Hook::new(2, 6), Hook::new(4, 6)]), Ok(false));
        assert_eq!(count_vhcs(&host), 1);
        // Everything the enumerator emits passes the standalone validator.
        for n in 1..=7 {
            sn_for_each(n, |w| {
                for c in enumerate_vhcs(w) {
                    assert!(is_valid(w, c.hooks()).unwrap());
                }
            });
        }
    }

    #[test]
    fn enumeration_matches_hand_counts() {
        assert_eq!(count_vhcs(&p("2 1 3")), 1);
        assert_eq!(count_vhcs(&p("1 2 3")), 1);
        assert_eq!(count_vhcs(&p("3 2 1")), 0);
        assert_eq!(count_vhcs(&p("1 3 2")), 0);
        assert_eq!(count_vhcs(&Permutation::empty()), 1);
        // 1 4 2 3 5: descent at 2 with candidates 5 only? π_2 = 4; after it:
        // 2, 3, 5 — only 5 exceeds 4.  One configuration.
        assert_eq!(count_vhcs(&p("1 4 2 3 5")), 1);
        // 2 3 1 4: descent at 2 (3 > 1), candidate 4.  One configuration.
        assert_eq!(count_vhcs(&p("2 3 1 4")), 1);
    }

    #[test]
    fn coloring_of_wide_example() {
        let c = wide_example();
        let colors = c.induced_coloring();
        // Hook ids in southwest order: 1 = (2>7), 2 = (7>15), 3 = (9>13).
        let base: Vec<Option<usize>> = colors.base().to_vec();
        let expect_sky = [1usize, 2, 16];
        let expect_h1 = [3usize, 4, 5, 6];
        let expect_h2 = [8usize, 9, 14];
        let expect_h3 = [10usize, 11, 12];
        let expect_ne = [7usize, 13, 15];
        for pos in 1..=16 {
            let want = if expect_sky.contains(&pos) {
                Some(0)
            } else if expect_h1.contains(&pos) {
                Some(1)
            } else if expect_h2.contains(&pos) {
                Some(2)
            } else if expect_h3.contains(&pos) {
                Some(3)
            } else {
                assert!(expect_ne.contains(&pos));
                None
            };
            assert_eq!(base[pos - 1], want, "base color at position {pos}");
        }
        let ext = colors.extended();
        assert_eq!(ext[7 - 1], 1);
        assert_eq!(ext[13 - 1], 3);
        assert_eq!(ext[15 - 1], 2);
        assert_eq!(c.valid_composition(), vec![3, 4, 3, 3]);
    }

    #[test]
    fn compositions_have_positive_parts() {
        for n in 1..=7 {
            sn_for_each(n, |w| {
                for c in enumerate_vhcs(w) {
                    let q = c.valid_composition();
                    assert_eq!(q.len(), c.hook_count() + 1);
                    assert_eq!(q.iter().sum::<usize>(), n - c.hook_count());
                    assert!(q.iter().all(|&x| x > 0), "{c:?} gave {q:?}");
                }
            });
        }
    }

    #[test]
    fn same_colored_entries_increase() {
        // Within one base color class, values rise left to right.
        for n in 1..=7 {
            sn_for_each(n, |w| {
                for c in enumerate_vhcs(w) {
                    let base = c.induced_coloring().base().to_vec();
                    for color in 0..=c.hook_count() {
                        let class: Vec<usize> = (1..=n)
                            .filter(|&pos| base[pos - 1] == Some(color))
                            .map(|pos| w.entry(pos))
                            .collect();
                        assert!(
                            class.windows(2).all(|v| v[0] < v[1]),
                            "class {color} of {c:?} is {class:?}"
                        );
                    }
                }
            });
        }
    }

    #[test]
    fn fertility_small_cases() {
        assert_eq!(fertility(&p("1 2 3")), BigInt::from(5));
        assert_eq!(fertility(&p("2 1 3")), BigInt::from(1));
        assert_eq!(fertility(&p("1 3 2")), BigInt::from(0));
        assert_eq!(fertility(&Permutation::empty()), BigInt::from(1));
        assert_eq!(fertility(&p("1")), BigInt::from(1));
        assert_eq!(fertility(&p("2 3 5 6 1 4 7")), {
            let count = p("2 3 5 6 1 4 7").preimages_bruteforce().unwrap().len();
            BigInt::from(count)
        });
    }

    #[test]
    fn fertility_agrees_with_oracle_through_s6() {
        for n in 0..=6 {
            sn_for_each(n, |w| {
                let oracle = w.preimages_bruteforce().unwrap().len();
                assert_eq!(fertility(w), BigInt::from(oracle), "fertility of {w}");
            });
        }
    }

    #[test]
    fn sorted_predicates() {
        assert!(is_sorted(&p("1 2 3")));
        assert!(!is_sorted(&p("1 3 2")));
        assert!(is_uniquely_sorted(&p("2 1 3")));
        assert!(!is_uniquely_sorted(&p("1 2 3"))); // fertility 5
        assert!(!is_uniquely_sorted(&p("1 2 3 4"))); // even length
        assert!(is_uniquely_sorted(&p("1"))); // single entry, fertility 1
        assert!(!is_uniquely_sorted(&Permutation::empty()));
        assert!(is_uniquely_sorted(&p("5 4 7 6 2 1 3 8 9")));
        // Sorted permutations never have more than (n−1)/2 descents.
        for n in 1..=7 {
            sn_for_each(n, |w| {
                if is_sorted(w) {
                    assert!(2 * w.descents().len() < n);
                }
            });
        }
    }

    #[test]
    fn uniquely_sorted_enumeration() {
        assert_eq!(
            enumerate_uniquely_sorted(0).unwrap(),
            vec![Permutation::identity(1)]
        );
        assert_eq!(enumerate_uniquely_sorted(1).unwrap(), vec![p("2 1 3")]);
        let k2: Vec<String> = enumerate_uniquely_sorted(2)
            .unwrap()
            .iter()
            .map(|w| w.to_string())
            .collect();
        assert_eq!(
            k2,
            ["2 1 4 3 5", "3 1 4 2 5", "3 2 1 4 5", "3 2 4 1 5", "4 2 1 3 5"]
        );
        assert!(matches!(
            enumerate_uniquely_sorted(6),
            Err(Error::BoundExceeded { size: 6, bound: 5 })
        ));
    }

    #[test]
    fn uniquely_sorted_enumeration_matches_predicate() {
        for k in 0..=3 {
            let built = enumerate_uniquely_sorted(k).unwrap();
            let mut swept = Vec::new();
            sn_for_each(2 * k + 1, |w| {
                if is_uniquely_sorted(w) {
                    swept.push(w.clone());
                }
            });
            assert_eq!(built, swept, "k = {k}");
        }
    }

    #[test]
    fn top_hook_decomposition_of_wide_example() {
        let c = wide_example();
        let d = c.top_hook_decomposition().unwrap();
        assert_eq!(d.top_hook, Hook::new(7, 15));
        assert_eq!(d.sheltered.host(), &p("4 8 1 6 12 13 14"));
        assert_eq!(d.sheltered.hooks(), &[Hook::new(2, 6)]);
        assert_eq!(d.unsheltered.host(), &p("2 7 3 5 9 10 11 16"));
        assert_eq!(d.unsheltered.hooks(), &[Hook::new(2, 7)]);
        assert_eq!(d.sheltered_values, vec![1, 4, 6, 8, 12, 13, 14]);
        assert_eq!(d.unsheltered_values, vec![2, 3, 5, 7, 9, 10, 11, 16]);
    }

    #[test]
    fn top_hook_decomposition_smallest_case() {
        let c: ValidHookConfiguration = "2 1 3 ; 1>3".parse().unwrap();
        let d = c.top_hook_decomposition().unwrap();
        assert_eq!(d.sheltered.host(), &p("1"));
        assert_eq!(d.unsheltered.host(), &p("2"));
        assert_eq!(d.sheltered_values, vec![1]);
        assert_eq!(d.unsheltered_values, vec![2]);
        let empty: ValidHookConfiguration = "1 2 ;".parse().unwrap();
        assert!(matches!(
            empty.top_hook_decomposition(),
            Err(Error::DecompositionUndefined)
        ));
    }

    #[test]
    fn decomposition_is_consistent_everywhere() {
        // Both pieces are valid configurations (the constructor inside
        // top_hook_decomposition already checks), values partition the
        // non-top values, and the seam never hides a descent.
        for n in 1..=7 {
            sn_for_each(n, |w| {
                for c in enumerate_vhcs(w) {
                    if c.hook_count() == 0 {
                        continue;
                    }
                    let d = c.top_hook_decomposition().unwrap();
                    let ne_value = w.entry(d.top_hook.ne);
                    let mut all: Vec<usize> = d
                        .sheltered_values
                        .iter()
                        .chain(d.unsheltered_values.iter())
                        .copied()
                        .collect();
                    all.push(ne_value);
                    all.sort_unstable();
                    let mut expect: Vec<usize> = w.entries().to_vec();
                    expect.sort_unstable();
                    assert_eq!(all, expect);
                }
            });
        }
    }

    #[test]
    fn eyes_of_small_uniquely_sorted_words() {
        assert_eq!(eye(&p("2 1 3")).unwrap(), 1);
        assert_eq!(eye(&p("5 4 7 6 2 1 3 8 9")).unwrap(), 6);
        assert!(matches!(eye(&p("1")), Err(Error::EyeUndefined(1))));
        assert!(matches!(eye(&p("1 2 3")), Err(Error::NotUniquelySorted)));
        assert!(matches!(eye(&Permutation::empty()), Err(Error::NotUniquelySorted)));
    }

    #[test]
    fn trees_from_uniquely_sorted_configurations() {
        let c: ValidHookConfiguration = "2 1 3 ; 1>3".parse().unwrap();
        assert_eq!(c.to_tree().unwrap().to_string(), "3(2,1)");
        // The tree reads back to the one preimage.
        assert_eq!(c.to_tree().unwrap().in_order(), p("2 3 1"));
        for k in 0..=3 {
            for pi in enumerate_uniquely_sorted(k).unwrap() {
                let c = enumerate_vhcs(&pi).pop().unwrap();
                let tree = c.to_tree().unwrap();
                assert_eq!(tree.post_order(), pi);
                assert!(tree.is_lonely(), "preimage tree of {pi} must be lonely");
            }
        }
        let not_unique: ValidHookConfiguration = "1 2 3 ;".parse().unwrap();
        assert!(matches!(not_unique.to_tree(), Err(Error::NotUniquelySorted)));
    }

    #[test]
    fn census_helpers_agree_with_direct_sweeps() {
        assert_eq!(total_vhc_count(0), BigInt::from(1));
        assert_eq!(total_vhc_count(1), BigInt::from(1));
        assert_eq!(total_vhc_count(2), BigInt::from(1));
        assert_eq!(total_vhc_count(3), BigInt::from(2));
        for n in 1..=6 {
            let census = vhc_census_by_tail_length(n);
            assert_eq!(census.iter().sum::<BigInt>(), total_vhc_count(n));
        }
        let us = uniquely_sorted_census_by_tail_length(2).unwrap();
        assert_eq!(us.iter().sum::<BigInt>(), BigInt::from(5));
    }

    #[test]
    fn serde_round_trip() {
        let c = wide_example();
        let json = serde_json::to_string(&c).unwrap();
        let back: ValidHookConfiguration = serde_json::from_str(&json).unwrap();
        assert_eq!(back, c);
        // Deserialization re-validates.
        let bad = r#"{"host":[2,1,3],"hooks":[{"sw":1,"ne":2}]}"#;
        assert!(serde_json::from_str::<ValidHookConfiguration>(bad).is_err());
    }
}
