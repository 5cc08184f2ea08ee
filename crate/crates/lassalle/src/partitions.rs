//! Set partitions, their crossing graphs, and acyclic orientations.
//!
//! Two blocks *cross* when some four elements alternate between them
//! (`a < b < c < d` with `a, c` in one block and `b, d` in the other).  The
//! crossing graph has a vertex per block and an edge per crossing pair; a
//! partition is *connected* when that graph is.  Orientation counting ties
//! in through the Tutte polynomial: for a connected graph, the number of
//! acyclic orientations whose unique source is a fixed vertex is `T(1, 0)`,
//! independent of the vertex chosen.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use num::BigInt;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Ceiling for sweeping all partitions of the ground set (Bell(10) = 115 975).
pub const DEFAULT_PARTITION_BOUND: usize = 10;

/// Ceiling for sweeping all perfect matchings (13!! = 135 135 on 14 points).
pub const DEFAULT_MATCHING_BOUND: usize = 14;

/// A partition of `{1, …, n}` in canonical form: each block ascending,
/// blocks ordered by their minima.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "String", try_from = "String")]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen = vec![false; n + 1];
        let mut count = 0usize;
        for block in &mut blocks {
            if block.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            block.sort_unstable();
            for &v in block.iter() {
                if v == 0 || v > n {
                    return Err(Error::InvalidPartition(format!(
                        "element {v} outside 1..={n}"
                    )));
                }
                if seen[v] {
                    return Err(Error::InvalidPartition(format!("element {v} repeated")));
                }
                seen[v] = true;
                count += 1;
            }
        }
        if count != n {
            return Err(Error::InvalidPartition(format!(
                "blocks cover {count} of {n} elements"
            )));
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(Self { n, blocks })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    /// Index (in canonical order) of the block holding `v`.
    pub fn block_containing(&self, v: usize) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&v).is_ok())
    }

    pub fn is_matching(&self) -> bool {
        self.blocks.iter().all(|b| b.len() == 2)
    }

    pub fn has_singleton(&self) -> bool {
        self.blocks.iter().any(|b| b.len() == 1)
    }

    pub fn is_noncrossing(&self) -> bool {
        self.blocks
            .iter()
            .tuple_combinations()
            .all(|(a, b)| !blocks_cross(a, b))
    }

    /// Connectivity of the crossing graph.
    pub fn is_connected(&self) -> bool {
        crossing_graph(self).is_connected()
    }
}

impl fmt::Display for SetPartition {
    /// Blocks joined by `|`, elements by `,`: `1,4|2,7,8,9|3,5,6`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|v| v.to_string()).join(","))
            .join("|");
        write!(f, "{text}")
    }
}

impl fmt::Debug for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "SetPartition({self})")
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return SetPartition::new(0, Vec::new());
        }
        let mut blocks = Vec::new();
        let mut max = 0usize;
        for chunk in s.split('|') {
            let mut block = Vec::new();
            for tok in chunk.split(',') {
                let v: usize = tok
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad element {tok:?}")))?;
                max = max.max(v);
                block.push(v);
            }
            blocks.push(block);
        }
        SetPartition::new(max, blocks)
    }
}

impl From<SetPartition> for String {
    fn from(p: SetPartition) -> Self {
        p.to_string()
    }
}

impl TryFrom<String> for SetPartition {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        s.parse()
    }
}

/// Four-element alternation test, by collapsing the merged sequence of the
/// two blocks into runs: the pair crosses exactly when at least four runs
/// survive.
pub fn blocks_cross(a: &[usize], b: &[usize]) -> bool {
    let merged = a
        .iter()
        .map(|&v| (v, 0u8))
        .chain(b.iter().map(|&v| (v, 1u8)))
        .sorted();
    let mut runs = 0;
    let mut last = 2u8;
    for (_, side) in merged {
        if side != last {
            runs += 1;
            last = side;
        }
    }
    runs >= 4
}

/// The crossing graph of a partition: one vertex per block (canonical
/// order), one edge per crossing pair.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct CrossingGraph {
    vertices: usize,
    edges: Vec<(usize, usize)>,
}

pub fn crossing_graph(p: &SetPartition) -> CrossingGraph {
    let mut edges = Vec::new();
    for (i, a) in p.blocks().iter().enumerate() {
        for (j, b) in p.blocks().iter().enumerate().skip(i + 1) {
            if blocks_cross(a, b) {
                edges.push((i, j));
            }
        }
    }
    CrossingGraph { vertices: p.block_count(), edges }
}

impl CrossingGraph {
    pub fn new(vertices: usize, mut edges: Vec<(usize, usize)>) -> Result<Self> {
        for e in edges.iter_mut() {
            if e.0 == e.1 {
                return Err(Error::OutOfRange(format!("loop at vertex {}", e.0)));
            }
            if e.0 >= vertices || e.1 >= vertices {
                return Err(Error::OutOfRange(format!(
                    "edge ({}, {}) outside 0..{vertices}",
                    e.0, e.1
                )));
            }
            if e.0 > e.1 {
                *e = (e.1, e.0);
            }
        }
        edges.sort_unstable();
        edges.dedup();
        Ok(Self { vertices, edges })
    }

    pub fn vertices(&self) -> usize {
        self.vertices
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices <= 1 {
            return true;
        }
        let mut seen = vec![false; self.vertices];
        let mut stack = vec![0usize];
        seen[0] = true;
        while let Some(u) = stack.pop() {
            for &(a, b) in &self.edges {
                let other = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if !seen[other] {
                    seen[other] = true;
                    stack.push(other);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// An orientation of some graph's edges, stored as directed pairs of vertex
/// indices and kept sorted by the underlying undirected edge.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(into = "Vec<String>", try_from = "Vec<String>")]
pub struct Orientation {
    edges: Vec<(usize, usize)>,
}

impl Orientation {
    pub fn new(mut edges: Vec<(usize, usize)>) -> Self {
        edges.sort_by_key(|&(u, v)| (u.min(v), u.max(v)));
        Self { edges }
    }

    pub fn edges(&self) -> &[(usize, usize)] {
        &self.edges
    }

    pub fn is_acyclic(&self) -> bool {
        !has_directed_cycle(&self.edges)
    }

    /// Vertices of `0..vertices` with no incoming edge.
    pub fn sources(&self, vertices: usize) -> Vec<usize> {
        let mut indegree = vec![0usize; vertices];
        for &(_, v) in &self.edges {
            indegree[v] += 1;
        }
        (0..vertices).filter(|&v| indegree[v] == 0).collect()
    }
}

impl fmt::Display for Orientation {
    /// Space-separated `from->to` pairs.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let text = self.edges.iter().map(|&(u, v)| format!("{u}->{v}")).join(" ");
        write!(f, "{text}")
    }
}

impl fmt::Debug for Orientation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Orientation({self})")
    }
}

impl FromStr for Orientation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut edges = Vec::new();
        for tok in s.split_whitespace() {
            edges.push(parse_arrow(tok)?);
        }
        Ok(Orientation::new(edges))
    }
}

fn parse_arrow(tok: &str) -> Result<(usize, usize)> {
    let (a, b) = tok
        .split_once("->")
        .ok_or_else(|| Error::Parse(format!("edge {tok:?} must look like FROM->TO")))?;
    let u = a.trim().parse().map_err(|_| Error::Parse(format!("bad vertex {a:?}")))?;
    let v = b.trim().parse().map_err(|_| Error::Parse(format!("bad vertex {b:?}")))?;
    Ok((u, v))
}

impl From<Orientation> for Vec<String> {
    fn from(o: Orientation) -> Self {
        o.edges.iter().map(|&(u, v)| format!("{u}->{v}")).collect()
    }
}

impl TryFrom<Vec<String>> for Orientation {
    type Error = Error;

    fn try_from(items: Vec<String>) -> Result<Self> {
        let edges = items.iter().map(|s| parse_arrow(s)).collect::<Result<_>>()?;
        Ok(Orientation::new(edges))
    }
}

fn has_directed_cycle(edges: &[(usize, usize)]) -> bool {
    let verts: BTreeSet<usize> = edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    // Kahn's algorithm: a cycle leaves vertices unpeeled.
    let mut indegree: std::collections::BTreeMap<usize, usize> =
        verts.iter().map(|&v| (v, 0)).collect();
    for &(_, v) in edges {
        *indegree.get_mut(&v).unwrap() += 1;
    }
    let mut queue: Vec<usize> = indegree
        .iter()
        .filter(|(_, &d)| d == 0)
        .map(|(&v, _)| v)
        .collect();
    let mut peeled = 0;
    while let Some(u) = queue.pop() {
        peeled += 1;
        for &(a, b) in edges {
            if a == u {
                let d = indegree.get_mut(&b).unwrap();
                *d -= 1;
                if *d == 0 {
                    queue.push(b);
                }
            }
        }
    }
    peeled != verts.len()
}

/// All acyclic orientations of `g` whose unique source is `source`, via
/// backtracking over the edges with three prunes: nothing may point into the
/// source, no directed cycle may close, and a vertex whose incident edges
/// are all decided must have an incoming one (unless it is the source).
pub fn acyclic_orientations_unique_source(g: &CrossingGraph, source: usize) -> Vec<Orientation> {
    let m = g.edges.len();
    if g.vertices == 0 {
        return Vec::new();
    }
    let mut remaining = vec![0usize; g.vertices];
    for &(u, v) in &g.edges {
        remaining[u] += 1;
        remaining[v] += 1;
    }
    // Isolated non-source vertices can never gain an incoming edge.
    if (0..g.vertices).any(|v| v != source && remaining[v] == 0) {
        return Vec::new();
    }
    let mut chosen: Vec<(usize, usize)> = Vec::with_capacity(m);
    let mut indegree = vec![0usize; g.vertices];
    let mut out = Vec::new();

    fn reaches(edges: &[(usize, usize)], from: usize, to: usize) -> bool {
        if from == to {
            return true;
        }
        let mut seen = BTreeSet::new();
        let mut stack = vec![from];
        seen.insert(from);
        while let Some(u) = stack.pop() {
            for &(a, b) in edges {
                if a == u && seen.insert(b) {
                    if b == to {
                        return true;
                    }
                    stack.push(b);
                }
            }
        }
        false
    }

    #[allow(clippy::too_many_arguments)]
    fn rec(
        g: &CrossingGraph,
        source: usize,
        idx: usize,
        chosen: &mut Vec<(usize, usize)>,
        indegree: &mut Vec<usize>,
        remaining: &mut Vec<usize>,
        out: &mut Vec<Orientation>,
    ) {
        if idx == g.edges.len() {
            out.push(Orientation::new(chosen.clone()));
            return;
        }
        let (a, b) = g.edges[idx];
        remaining[a] -= 1;
        remaining[b] -= 1;
        for (u, v) in [(a, b), (b, a)] {
            if v == source {
                continue;
            }
            // Closing a directed cycle means v already reaches u.
            if reaches(chosen, v, u) {
                continue;
            }
            chosen.push((u, v));
            indegree[v] += 1;
            let starved = (remaining[u] == 0 && u != source && indegree[u] == 0)
                || (remaining[v] == 0 && v != source && indegree[v] == 0);
            if !starved {
                rec(g, source, idx + 1, chosen, indegree, remaining, out);
            }
            indegree[v] -= 1;
            chosen.pop();
        }
        remaining[a] += 1;
        remaining[b] += 1;
    }

    rec(g, source, 0, &mut chosen, &mut indegree, &mut remaining, &mut out);
    out
}

/// The `2^E` sweep of every orientation, filtered to acyclic ones with the
/// required unique source.  Kept as an independent oracle for the pruned
/// search; refuses more than 20 edges.
pub fn acyclic_orientations_unique_source_bruteforce(
    g: &CrossingGraph,
    source: usize,
) -> Result<Vec<Orientation>> {
    let m = g.edges.len();
    if m > 20 {
        return Err(Error::BoundExceeded { size: m, bound: 20 });
    }
    if g.vertices == 0 {
        return Ok(Vec::new());
    }
    let mut out = Vec::new();
    for mask in 0u32..(1 << m) {
        let edges: Vec<(usize, usize)> = g
            .edges
            .iter()
            .enumerate()
            .map(|(i, &(u, v))| if mask & (1 << i) == 0 { (u, v) } else { (v, u) })
            .collect();
        let o = Orientation::new(edges);
        if o.is_acyclic() && o.sources(g.vertices) == [source] {
            out.push(o);
        }
    }
    out.sort();
    Ok(out)
}

/// Tutte polynomial of `g` evaluated at `(1, 0)`, by deletion–contraction on
/// multigraph edge lists: loops kill a branch, bridges contract, ordinary
/// edges split.  For a connected graph this equals the number of acyclic
/// orientations with one fixed unique source, whichever vertex is chosen.
pub fn tutte_10(g: &CrossingGraph) -> BigInt {
    fn component_of(edges: &[(usize, usize)], start: usize) -> BTreeSet<usize> {
        let mut seen = BTreeSet::new();
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(u) = stack.pop() {
            for &(a, b) in edges {
                let other = if a == u {
                    b
                } else if b == u {
                    a
                } else {
                    continue;
                };
                if seen.insert(other) {
                    stack.push(other);
                }
            }
        }
        seen
    }

    fn is_bridge(edges: &[(usize, usize)], idx: usize) -> bool {
        let (u, v) = edges[idx];
        let rest: Vec<(usize, usize)> = edges
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != idx)
            .map(|(_, &e)| e)
            .collect();
        !component_of(&rest, u).contains(&v)
    }

    fn rec(edges: Vec<(usize, usize)>) -> BigInt {
        if edges.iter().any(|&(u, v)| u == v) {
            return BigInt::from(0);
        }
        if edges.is_empty() {
            return BigInt::from(1);
        }
        let (u, v) = edges[0];
        let contracted: Vec<(usize, usize)> = edges[1..]
            .iter()
            .map(|&(a, b)| {
                let a = if a == v { u } else { a };
                let b = if b == v { u } else { b };
                (a, b)
            })
            .collect();
        if is_bridge(&edges, 0) {
            rec(contracted)
        } else {
            rec(edges[1..].to_vec()) + rec(contracted)
        }
    }

    rec(g.edges.clone())
}

/// Visit every partition of `{1, …, n}` through restricted growth strings,
/// in lexicographic string order.  `n = 0` visits the empty partition once.
pub fn for_each_partition(n: usize, mut f: impl FnMut(&SetPartition)) {
    if n == 0 {
        f(&SetPartition { n: 0, blocks: Vec::new() });
        return;
    }
    let mut assignment = vec![0usize; n];
    fn rec(
        n: usize,
        pos: usize,
        used: usize,
        assignment: &mut Vec<usize>,
        f: &mut impl FnMut(&SetPartition),
    ) {
        if pos == n {
            let mut blocks: Vec<Vec<usize>> = vec![Vec::new(); used];
            for (i, &b) in assignment.iter().enumerate() {
                blocks[b].push(i + 1);
            }
            // Restricted growth keeps blocks ordered by minima already.
            f(&SetPartition { n, blocks });
            return;
        }
        for b in 0..=used.min(pos) {
            assignment[pos] = b;
            rec(n, pos + 1, used.max(b + 1), assignment, f);
        }
    }
    rec(n, 0, 0, &mut assignment, &mut f);
}

/// Partitions of `{1, …, n}` whose crossing graph is connected.
pub fn enumerate_connected_partitions(n: usize) -> Vec<SetPartition> {
    let mut out = Vec::new();
    for_each_partition(n, |p| {
        if p.is_connected() {
            out.push(p.clone());
        }
    });
    out
}

/// Visit every pair (connected partition of `{1, …, n}`, acyclic orientation
/// of its crossing graph whose unique source is the block containing `n`).
pub fn for_each_oriented_connected_partition(
    n: usize,
    mut f: impl FnMut(&SetPartition, &Orientation),
) {
    if n == 0 {
        return;
    }
    for_each_partition(n, |p| {
        if !p.is_connected() {
            return;
        }
        let g = crossing_graph(p);
        let source = p.block_containing(n).unwrap();
        for o in acyclic_orientations_unique_source(&g, source) {
            f(p, &o);
        }
    });
}

/// Materialized form of [`for_each_oriented_connected_partition`], bounded
/// because the count grows super-exponentially.
pub fn enumerate_p_tilde(n: usize) -> Result<Vec<(SetPartition, Orientation)>> {
    enumerate_p_tilde_with_bound(n, DEFAULT_PARTITION_BOUND)
}

pub fn enumerate_p_tilde_with_bound(
    n: usize,
    bound: usize,
) -> Result<Vec<(SetPartition, Orientation)>> {
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    let mut out = Vec::new();
    for_each_oriented_connected_partition(n, |p, o| out.push((p.clone(), o.clone())));
    Ok(out)
}

pub fn count_p_tilde(n: usize) -> Result<BigInt> {
    count_p_tilde_with_bound(n, DEFAULT_PARTITION_BOUND)
}

pub fn count_p_tilde_with_bound(n: usize, bound: usize) -> Result<BigInt> {
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    let mut count = BigInt::from(0);
    for_each_oriented_connected_partition(n, |_, _| count += 1);
    Ok(count)
}

/// Visit every perfect matching of `{1, …, n}` (none when `n` is odd), by
/// always pairing the smallest free element first.
pub fn for_each_matching(n: usize, mut f: impl FnMut(&SetPartition)) {
    if n % 2 == 1 {
        return;
    }
    if n == 0 {
        f(&SetPartition { n: 0, blocks: Vec::new() });
        return;
    }
    let mut free: Vec<usize> = (1..=n).collect();
    let mut blocks: Vec<Vec<usize>> = Vec::with_capacity(n / 2);
    fn rec(
        n: usize,
        free: &mut Vec<usize>,
        blocks: &mut Vec<Vec<usize>>,
        f: &mut impl FnMut(&SetPartition),
    ) {
        if free.is_empty() {
            f(&SetPartition { n, blocks: blocks.clone() });
            return;
        }
        let a = free[0];
        for i in 1..free.len() {
            let b = free[i];
            let mut rest: Vec<usize> = free.clone();
            rest.remove(i);
            rest.remove(0);
            blocks.push(vec![a, b]);
            let saved = std::mem::replace(free, rest);
            rec(n, free, blocks, f);
            *free = saved;
            blocks.pop();
        }
    }
    rec(n, &mut free, &mut blocks, &mut f);
}

/// Visit every pair (connected perfect matching of `{1, …, n}`, acyclic
/// orientation of its crossing graph rooted at the block containing `n`).
pub fn for_each_oriented_connected_matching(
    n: usize,
    mut f: impl FnMut(&SetPartition, &Orientation),
) {
    if n == 0 {
        return;
    }
    for_each_matching(n, |p| {
        if !p.is_connected() {
            return;
        }
        let g = crossing_graph(p);
        let source = p.block_containing(n).unwrap();
        for o in acyclic_orientations_unique_source(&g, source) {
            f(p, &o);
        }
    });
}

pub fn enumerate_m_tilde(n: usize) -> Result<Vec<(SetPartition, Orientation)>> {
    enumerate_m_tilde_with_bound(n, DEFAULT_MATCHING_BOUND)
}

pub fn enumerate_m_tilde_with_bound(
    n: usize,
    bound: usize,
) -> Result<Vec<(SetPartition, Orientation)>> {
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    let mut out = Vec::new();
    for_each_oriented_connected_matching(n, |p, o| out.push((p.clone(), o.clone())));
    Ok(out)
}

pub fn count_m_tilde(n: usize) -> Result<BigInt> {
    count_m_tilde_with_bound(n, DEFAULT_MATCHING_BOUND)
}

pub fn count_m_tilde_with_bound(n: usize, bound: usize) -> Result<BigInt> {
    if n > bound {
        return Err(Error::BoundExceeded { size: n, bound });
    }
    let mut count = BigInt::from(0);
    for_each_oriented_connected_matching(n, |_, _| count += 1);
    Ok(count)
}

/// Reflect a perfect matching of an even ground set through its midpoint:
/// `x ↦ n − x`, with `n` held fixed.
pub fn reflect_matching(p: &SetPartition) -> Result<SetPartition> {
    if !p.is_matching() {
        return Err(Error::NotAMatching(format!("{p}")));
    }
    let n = p.n();
    let map = |x: usize| if x == n { n } else { n - x };
    let blocks = p
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&x| map(x)).collect())
        .collect();
    SetPartition::new(n, blocks)
}

/// The element sharing a block with `v` in a perfect matching.
pub fn partner(p: &SetPartition, v: usize) -> Result<usize> {
    if v == 0 || v > p.n() {
        return Err(Error::OutOfRange(format!("{v} outside 1..={}", p.n())));
    }
    let idx = p.block_containing(v).unwrap();
    let block = &p.blocks()[idx];
    if block.len() != 2 {
        return Err(Error::NotAMatching(format!("block of {v} has size {}", block.len())));
    }
    Ok(if block[0] == v { block[1] } else { block[0] })
}

/// The twist on partitions of an even ground set `{1, …, 2k + 2}`:
/// `x ↦ 2k + 1 − x` for `x ≤ 2k`, swapping `2k + 1` and `2k + 2`.
/// An involution that preserves the crossing graph up to isomorphism.
pub fn tilde_map(p: &SetPartition) -> Result<SetPartition> {
    let n = p.n();
    if n == 0 || n % 2 == 1 {
        return Err(Error::OutOfRange(format!("ground set size {n} must be even")));
    }
    let map = |x: usize| {
        if x == n {
            n - 1
        } else if x == n - 1 {
            n
        } else {
            n - 1 - x
        }
    };
    let blocks = p
        .blocks()
        .iter()
        .map(|b| b.iter().map(|&x| map(x)).collect())
        .collect();
    SetPartition::new(n, blocks)
}
