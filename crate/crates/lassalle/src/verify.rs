//! Batteries of cross-checks that pit the independent computations in this
//! crate against each other: the bijection against raw enumeration, the
//! recurrence tables against exhaustive censuses, the cumulant recurrence
//! against hook-configuration and Tutte-polynomial sums.  Each check records
//! what it compared, where the expected side came from, and how long it took.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use num::{BigInt, BigRational, One, Zero};

use crate::bijections::{
    eta, first_entry_block_property, phi, phi_inverse, phi_restricted, PhiImage,
};
use crate::error::Error;
use crate::partitions::{
    acyclic_orientations_unique_source, count_m_tilde_with_bound, count_p_tilde_with_bound,
    crossing_graph, enumerate_connected_partitions, enumerate_m_tilde_with_bound,
    for_each_partition, partner, tutte_10,
};
use crate::permutation::{fertility_census, sn_for_each};
use crate::sequences::{
    catalan, classical_cumulants, cumulant_via_vhc_with_bound, d_table,
    doubly_sorted_count_with_bound, e_table, factorial, is_log_concave, lassalle,
    narayana, no_doubly_sorted_of_odd_length, refined_lassalle_eye_with_bound,
    refined_lassalle_first_entry_with_bound, w2_closed_form, w_count_with_bound,
};
use crate::vhc::{
    self, enumerate_uniquely_sorted_with_bound, total_vhc_count,
    uniquely_sorted_census_by_tail_length, vhc_census_by_tail_length,
};

/// Default size ceiling; exhaustive sweeps stay comfortably under a minute.
pub const DEFAULT_VERIFY_BOUND: usize = 8;

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Suite {
    All,
    Bijection,
    Identities,
    Recurrences,
    Conjecture,
}

impl Suite {
    fn includes(self, other: Suite) -> bool {
        self == Suite::All || self == other
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            Suite::All => "all",
            Suite::Bijection => "bijection",
            Suite::Identities => "identities",
            Suite::Recurrences => "recurrences",
            Suite::Conjecture => "conjecture",
        };
        write!(f, "{name}")
    }
}

impl FromStr for Suite {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Error> {
        match s.to_ascii_lowercase().as_str() {
            "all" => Ok(Suite::All),
            "bijection" => Ok(Suite::Bijection),
            "identities" => Ok(Suite::Identities),
            "recurrences" => Ok(Suite::Recurrences),
            "conjecture" => Ok(Suite::Conjecture),
            other => Err(Error::Parse(format!(
                "unknown suite {other:?}; expected all, bijection, identities, \
                 recurrences, or conjecture"
            ))),
        }
    }
}

/// Where the expected side of a check comes from: a value pinned in the
/// source, or a second computation by independent means.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Provenance {
    Pinned,
    Recomputed,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Pinned => write!(f, "pinned"),
            Provenance::Recomputed => write!(f, "recomputed"),
        }
    }
}

#[derive(Clone, Debug)]
pub struct CheckResult {
    pub name: String,
    pub params: String,
    pub expected: String,
    pub computed: String,
    pub provenance: Provenance,
    pub pass: bool,
    pub wall: Duration,
}

#[derive(Clone, Debug, Default)]
pub struct VerificationReport {
    checks: Vec<CheckResult>,
}

impl VerificationReport {
    pub fn checks(&self) -> &[CheckResult] {
        &self.checks
    }

    pub fn all_pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failures(&self) -> impl Iterator<Item = &CheckResult> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

struct Runner {
    checks: Vec<CheckResult>,
    progress: bool,
}

type CheckBody = Result<(String, String), Error>;

impl Runner {
    fn run(
        &mut self,
        name: &'static str,
        params: String,
        provenance: Provenance,
        body: impl FnOnce() -> CheckBody,
    ) {
        let start = Instant::now();
        let (expected, computed) = match body() {
            Ok(pair) => pair,
            Err(e) => ("a conclusive comparison".into(), format!("error: {e}")),
        };
        let wall = start.elapsed();
        let pass = expected == computed;
        if self.progress {
            eprintln!(
                "[verify] {name} ({params}): {} in {wall:.2?}",
                if pass { "pass" } else { "FAIL" }
            );
        }
        self.checks.push(CheckResult {
            name: name.to_string(),
            params,
            expected,
            computed,
            provenance,
            pass,
            wall,
        });
    }
}

/// Run one suite (or all of them) with sweeps capped at `bound`; emits
/// per-check progress on stderr when asked.
pub fn run_suite(suite: Suite, bound: Option<usize>, progress: bool) -> VerificationReport {
    let b = bound.unwrap_or(DEFAULT_VERIFY_BOUND).max(1);
    let mut r = Runner { checks: Vec::new(), progress };
    if suite.includes(Suite::Bijection) {
        bijection_checks(&mut r, b);
    }
    if suite.includes(Suite::Identities) {
        identity_checks(&mut r, b);
    }
    if suite.includes(Suite::Recurrences) {
        recurrence_checks(&mut r, b);
    }
    if suite.includes(Suite::Conjecture) {
        conjecture_checks(&mut r, b);
    }
    VerificationReport { checks: r.checks }
}

fn lambda_points() -> Vec<BigRational> {
    vec![
        BigRational::from_integer(BigInt::from(-1)),
        BigRational::from_integer(BigInt::from(1)),
        BigRational::from_integer(BigInt::from(2)),
        BigRational::new(BigInt::from(-1), BigInt::from(2)),
    ]
}

/// `−k_n(−1)` straight from the moment–cumulant recurrence.
fn cumulant_count(n: usize) -> BigInt {
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    let k = classical_cumulants(n, &minus_one);
    let value = -k.coefficient(n).clone();
    debug_assert!(value.is_integer());
    value.to_integer()
}

fn bijection_checks(r: &mut Runner, b: usize) {
    for n in 1..=b {
        r.run("round-trip", format!("ground size {n}"), Provenance::Recomputed, || {
            let mut images: BTreeSet<PhiImage> = BTreeSet::new();
            let mut problem: Option<String> = None;
            sn_for_each(n - 1, |pi| {
                if problem.is_some() {
                    return;
                }
                for config in vhc::enumerate_vhcs(pi) {
                    let image = match phi(&config) {
                        Ok(image) => image,
                        Err(e) => {
                            problem = Some(format!("no image for {config}: {e}"));
                            return;
                        }
                    };
                    match phi_inverse(&image) {
                        Ok(back) if back == config => {}
                        Ok(back) => {
                            problem = Some(format!("{config} came back as {back}"));
                            return;
                        }
                        Err(e) => {
                            problem = Some(format!("no preimage for {config}: {e}"));
                            return;
                         }
                    }
                    if !images.insert(image) {
                        problem = Some(format!("{config} collides with an earlier image"));
                        return;
                    }
                }
            });
            let expected = count_p_tilde_with_bound(n, n)?;
            let computed = match problem {
                Some(p) => p,
                None => format!("{} oriented partitions, all recovered", images.len()),
            };
            Ok((format!("{expected} oriented partitions, all recovered"), computed))
        });
    }

    let k_max = b.saturating_sub(1) / 2;
    for k in 0..=k_max {
        r.run("matching-images", format!("k = {k}"), Provenance::Recomputed, || {
            let words = enumerate_uniquely_sorted_with_bound(k, k.max(5))?;
            let mut images: BTreeSet<PhiImage> = BTreeSet::new();
            for pi in &words {
                let configs = vhc::enumerate_vhcs(pi);
                if configs.len() != 1 {
                    return Ok((
                        "one configuration per word".into(),
                        format!("{pi} has {}", configs.len()),
                    ));
                }
                let image = phi_restricted(&configs[0])?;
                if !image.partition.is_matching() {
                    return Ok((
                        "matchings only".into(),
                        format!("{pi} maps to {}", image.partition),
                    ));
                }
                images.insert(image);
            }
            let n = 2 * k + 2;
            let expected: BTreeSet<PhiImage> = enumerate_m_tilde_with_bound(n, n)?
                .into_iter()
                .map(|(partition, orientation)| PhiImage { partition, orientation })
                .collect();
            let computed = if images == expected {
                format!("{} oriented matchings, exactly the expected set", images.len())
            } else {
                format!("{} oriented matchings, differing from the expected set", images.len())
            };
            Ok((
                format!("{} oriented matchings, exactly the expected set", expected.len()),
                computed,
            ))
        });
    }

    for k in 0..=k_max {
        r.run("first-entry-matching", format!("k = {k}"), Provenance::Recomputed, || {
            let words = enumerate_uniquely_sorted_with_bound(k, k.max(5))?;
            let total = words.len();
            let mut good = 0usize;
            for pi in &words {
                if first_entry_block_property(pi)? {
                    good += 1;
                }
            }
            Ok((
                format!("{total} of {total} words pair their first entry with the maximum"),
                format!("{good} of {total} words pair their first entry with the maximum"),
            ))
        });
    }

    for k in 1..=k_max {
        r.run("eye-partner", format!("k = {k}"), Provenance::Recomputed, || {
            let words = enumerate_uniquely_sorted_with_bound(k, k.max(5))?;
            let total = words.len();
            let mut good = 0usize;
            for pi in &words {
                let configs = vhc::enumerate_vhcs(pi);
                let image = phi_restricted(&configs[0])?;
                if vhc::eye(pi)? == partner(&image.partition, 2 * k + 1)? {
                    good += 1;
                }
            }
            Ok((
                format!("{total} of {total} eyes equal the partner of the next-to-largest value"),
                format!("{good} of {total} eyes equal the partner of the next-to-largest value"),
            ))
        });
    }

    for m in 0..b {
        r.run("position-classes", format!("host length {m}"), Provenance::Recomputed, || {
            let mut total = 0usize;
            let mut good = 0usize;
            sn_for_each(m, |pi| {
                for config in vhc::enumerate_vhcs(pi) {
                    total += 1;
                    if eta(&config).is_noncrossing() {
                        good += 1;
                    }
                }
            });
            Ok((
                format!("{total} of {total} position partitions noncrossing"),
                format!("{good} of {total} position partitions noncrossing"),
            ))
        });
    }
}

fn identity_checks(r: &mut Runner, b: usize) {
    for n in 1..=b + 1 {
        r.run("oriented-pair-count", format!("ground size {n}"), Provenance::Recomputed, || {
            let expected = cumulant_count(n);
            let configs = total_vhc_count(n - 1);
            let pairs = count_p_tilde_with_bound(n, n)?;
            Ok((
                format!("configurations {expected}, oriented partitions {expected}"),
                format!("configurations {configs}, oriented partitions {pairs}"),
            ))
        });
    }

    for m in 1..=b.div_ceil(2) {
        r.run("oriented-matching-count", format!("2m = {}", 2 * m), Provenance::Recomputed, || {
            let expected = lassalle(m).pop().unwrap();
            let computed = count_m_tilde_with_bound(2 * m, 2 * m)?;
            Ok((expected.to_string(), computed.to_string()))
        });
    }

    for n in 1..=b.min(8) {
        r.run("cumulant-hook-census", format!("order {n}"), Provenance::Recomputed, || {
            let mut expected = Vec::new();
            let mut computed = Vec::new();
            for lambda in lambda_points() {
                expected.push(classical_cumulants(n, &lambda).coefficient(n).to_string());
                computed.push(cumulant_via_vhc_with_bound(n, &lambda, n)?.to_string());
            }
            Ok((expected.join(", "), computed.join(", ")))
        });
    }

    for n in 1..=b.min(7) {
        r.run("source-count-is-tutte", format!("ground size {n}"), Provenance::Recomputed, || {
            let mut total = 0usize;
            let mut good = 0usize;
            for rho in enumerate_connected_partitions(n) {
                total += 1;
                let graph = crossing_graph(&rho);
                let source = rho.block_containing(n).unwrap();
                let orientations = acyclic_orientations_unique_source(&graph, source);
                if BigInt::from(orientations.len()) == tutte_10(&graph) {
                    good += 1;
                }
            }
            Ok((
                format!("{total} of {total} crossing graphs agree"),
                format!("{good} of {total} crossing graphs agree"),
            ))
        });
    }

    for n in 1..=b.min(7) {
        r.run("cumulant-tutte-identity", format!("order {n}"), Provenance::Recomputed, || {
            let lambdas = lambda_points();
            let mut sums = vec![BigRational::zero(); lambdas.len()];
            for rho in enumerate_connected_partitions(n) {
                let weight = BigRational::from_integer(tutte_10(&crossing_graph(&rho)));
                for (i, lambda) in lambdas.iter().enumerate() {
                    let mut power = BigRational::one();
                    for _ in 0..rho.block_count() {
                        power *= -lambda.clone();
                    }
                    sums[i] += power * &weight;
                }
            }
            let expected: Vec<String> = lambdas
                .iter()
                .map(|l| classical_cumulants(n, l).coefficient(n).to_string())
                .collect();
            let computed: Vec<String> = sums.iter().map(|s| (-s).to_string()).collect();
            Ok((expected.join(", "), computed.join(", ")))
        });
    }

    for n in 1..=b {
        r.run("catalan-weighted-tutte", format!("ground size {n}"), Provenance::Recomputed, || {
            let mut sum = BigInt::from(0);
            for rho in enumerate_connected_partitions(n) {
                let mut weight = tutte_10(&crossing_graph(&rho));
                for block in rho.blocks() {
                    weight *= catalan(block.len() - 1);
                }
                sum += weight;
            }
            Ok((factorial(n - 1).to_string(), sum.to_string()))
        });
    }

    for n in 1..=b {
        r.run("narayana-noncrossing", format!("ground size {n}"), Provenance::Recomputed, || {
            let mut by_blocks = vec![BigInt::from(0); n + 1];
            for_each_partition(n, |p| {
                if p.is_noncrossing() {
                    by_blocks[p.block_count()] += 1;
                }
            });
            let expected: Vec<String> =
                (1..=n).map(|k| narayana(n, k).unwrap().to_string()).collect();
            let computed: Vec<String> = by_blocks[1..].iter().map(BigInt::to_string).collect();
            Ok((expected.join(", "), computed.join(", ")))
        });
    }
}

fn recurrence_checks(r: &mut Runner, b: usize) {
    let d = d_table(b);
    for n in 1..=b {
        let row: Vec<String> = (0..=n).map(|m| d.value(m, n).to_string()).collect();
        r.run("tail-table-census", format!("host length {n}"), Provenance::Recomputed, || {
            let census = vhc_census_by_tail_length(n);
            let computed: Vec<String> = census.iter().map(BigInt::to_string).collect();
            Ok((row.join(", "), computed.join(", ")))
        });
    }
    for n in 1..=b {
        let total = d.cumulative(0, n).to_string();
        r.run("tail-table-sum", format!("host length {n}"), Provenance::Recomputed, || {
            Ok((cumulant_count(n + 1).to_string(), total.clone()))
        });
    }

    let k_census = b.div_ceil(2).min(vhc::DEFAULT_UNIQUELY_SORTED_BOUND);
    let e = e_table(2 * b + 1);
    for k in 0..=k_census {
        let row: Vec<String> = (0..=2 * k + 1).map(|m| e.value(m, 2 * k + 1).to_string()).collect();
        r.run("sorted-table-census", format!("k = {k}"), Provenance::Recomputed, || {
            let census = uniquely_sorted_census_by_tail_length(k)?;
            let computed: Vec<String> = census.iter().map(BigInt::to_string).collect();
            Ok((row.join(", "), computed.join(", ")))
        });
    }
    for k in 0..=b {
        let odd = e.cumulative(0, 2 * k + 1).to_string();
        let even = if k >= 1 { e.cumulative(0, 2 * k).to_string() } else { "0".into() };
        r.run("sorted-table-sums", format!("k = {k}"), Provenance::Recomputed, || {
            let a = lassalle(k + 1).pop().unwrap();
            Ok((format!("odd {a}, even 0"), format!("odd {odd}, even {even}")))
        });
    }

    for k in 0..=b.div_ceil(2) {
        r.run("uniquely-sorted-count", format!("k = {k}"), Provenance::Recomputed, || {
            let expected = lassalle(k + 1).pop().unwrap();
            let words = enumerate_uniquely_sorted_with_bound(k, k.max(5))?;
            Ok((expected.to_string(), words.len().to_string()))
        });
    }

    for n in 0..=b.min(8) {
        r.run("one-pass-count", format!("length {n}"), Provenance::Recomputed, || {
            let computed = w_count_with_bound(1, n, n)?;
            Ok((catalan(n).to_string(), computed.to_string()))
        });
    }
    for n in 1..=b.min(7) {
        r.run("two-pass-count", format!("length {n}"), Provenance::Recomputed, || {
            let computed = w_count_with_bound(2, n, n)?;
            Ok((w2_closed_form(n).to_string(), computed.to_string()))
        });
    }
    for t in 1..=3 {
        r.run("pass-count-bound", format!("t = {t}"), Provenance::Recomputed, || {
            let n_max = b.min(7);
            let mut good = 0usize;
            for n in 1..=n_max {
                let count = w_count_with_bound(t, n, n)?;
                let mut cap = BigInt::from(1);
                for _ in 0..2 * n {
                    cap *= t + 1;
                }
                if count <= cap {
                    good += 1;
                }
            }
            Ok((
                format!("{n_max} of {n_max} lengths inside the bound"),
                format!("{good} of {n_max} lengths inside the bound"),
            ))
        });
    }

    // The length-8 value is confirmed two ways below: the hook-formula sweep
    // and a census that applies the raw map to all of S_8 both give 593.
    let doubly: [&str; 4] = ["1", "3", "31", "593"];
    for m in 1..=(b / 2).min(4) {
        let pinned = doubly[m - 1];
        r.run("doubly-sorted-count", format!("length {}", 2 * m), Provenance::Pinned, || {
            let computed = doubly_sorted_count_with_bound(m, m)?;
            Ok((pinned.to_string(), computed.to_string()))
        });
    }
    for m in 1..=(b / 2).min(4) {
        r.run("doubly-sorted-census", format!("length {}", 2 * m), Provenance::Recomputed, || {
            let raw = fertility_census(2 * m).values().filter(|&&c| c == 2).count();
            let computed = doubly_sorted_count_with_bound(m, m)?;
            Ok((raw.to_string(), computed.to_string()))
        });
    }
    r.run("no-odd-doubly-sorted", format!("lengths up to {}", b.min(7)), Provenance::Recomputed, || {
        let clean = no_doubly_sorted_of_odd_length(b.min(7))?;
        Ok(("no odd length has exactly two preimages".into(), if clean {
            "no odd length has exactly two preimages".into()
        } else {
            "an odd length has exactly two preimages".into()
        }))
    });
}

fn conjecture_checks(r: &mut Runner, b: usize) {
    let k_max = (b / 2 + 1).min(6);
    for k in 0..=k_max {
        r.run("first-entry-symmetry", format!("k = {k}"), Provenance::Recomputed, || {
            let first = refined_lassalle_first_entry_with_bound(k, k.max(5))?;
            let mut reversed = first.clone();
            reversed.reverse();
            let total: BigInt = first.iter().sum();
            let a = lassalle(k + 1).pop().unwrap();
            Ok((
                format!("palindromic, summing to {a}"),
                format!(
                    "{}, summing to {total}",
                    if first == reversed { "palindromic" } else { "asymmetric" }
                ),
            ))
        });
    }
    for k in 1..=k_max {
        r.run("eye-equidistribution", format!("k = {k}"), Provenance::Recomputed, || {
            let first = refined_lassalle_first_entry_with_bound(k, k.max(5))?;
            let eyes = refined_lassalle_eye_with_bound(k, k.max(5))?;
            let fmt = |v: &[BigInt]| {
                v.iter().map(BigInt::to_string).collect::<Vec<_>>().join(", ")
            };
            Ok((fmt(&first), fmt(&eyes)))
        });
    }
    for k in 0..=k_max {
        r.run("first-entry-log-concavity", format!("k = {k}"), Provenance::Recomputed, || {
            let first = refined_lassalle_first_entry_with_bound(k, k.max(5))?;
            Ok(("log-concave".into(), if is_log_concave(&first) {
                "log-concave".into()
            } else {
                "not log-concave".into()
            }))
        });
    }
}
