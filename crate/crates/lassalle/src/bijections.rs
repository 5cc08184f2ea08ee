//! The bijection between valid hook configurations and oriented connected
//! partitions, its restriction to perfect matchings on uniquely sorted
//! hosts, and the noncrossing position-class map.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partitions::{crossing_graph, Orientation, SetPartition};
use crate::permutation::Permutation;
use crate::vhc::{self, Hook, ValidHookConfiguration};

/// A connected partition of `{1, …, n}` together with an acyclic
/// orientation of its crossing graph whose unique source is the block
/// containing `n`.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
pub struct PhiImage {
    pub partition: SetPartition,
    pub orientation: Orientation,
}

/// Map a hook configuration on a host in `S_{n−1}` to an oriented partition
/// of `{1, …, n}`: the color classes of the induced coloring become blocks
/// of host values, `n` joins the sky block, and each crossing-graph edge is
/// directed out of the block whose leftmost host position is smaller.
pub fn phi(config: &ValidHookConfiguration) -> Result<PhiImage> {
    let host = config.host();
    if !host.is_normalized() {
        return Err(Error::NotNormalized);
    }
    let n = host.len() + 1;
    let coloring = config.induced_coloring();
    let color_count = config.hook_count() + 1;
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); color_count];
    let mut first_position = vec![n; color_count];
    for (idx, &color) in coloring.extended().iter().enumerate() {
        let position = idx + 1;
        classes[color].push(host.entry(position));
        first_position[color] = first_position[color].min(position);
    }
    classes[0].push(n);

    // Align the per-class leftmost positions with the canonical block order
    // (ascending minima) before directing edges.
    let mut order: Vec<usize> = (0..color_count).collect();
    order.sort_by_key(|&c| *classes[c].iter().min().unwrap());
    let mut blocks = Vec::with_capacity(color_count);
    let mut leftmost = Vec::with_capacity(color_count);
    for &c in &order {
        blocks.push(classes[c].clone());
        leftmost.push(first_position[c]);
    }
    let partition = SetPartition::new(n, blocks)?;
    let directed = crossing_graph(&partition)
        .edges()
        .iter()
        .map(|&(u, v)| if leftmost[u] < leftmost[v] { (u, v) } else { (v, u) })
        .collect();
    Ok(PhiImage { partition, orientation: Orientation::new(directed) })
}

/// Recover the unique hook configuration mapping to `image`, or report why
/// no configuration does.
pub fn phi_inverse(image: &PhiImage) -> Result<ValidHookConfiguration> {
    let partition = &image.partition;
    let n = partition.n();
    if n == 0 {
        return Err(Error::InvalidPartition("the ground set is empty".into()));
    }
    let graph = crossing_graph(partition);
    let mut undirected: Vec<(usize, usize)> = image
        .orientation
        .edges()
        .iter()
        .map(|&(u, v)| (u.min(v), u.max(v)))
        .collect();
    undirected.sort_unstable();
    if undirected != graph.edges() {
        return Err(Error::InvalidPair(
            "the orientation does not orient the crossing graph".into(),
        ));
    }
    if !image.orientation.is_acyclic() {
        return Err(Error::InvalidPair("the orientation has a directed cycle".into()));
    }
    let blue = partition.block_containing(n).unwrap();
    if image.orientation.sources(partition.block_count()) != [blue] {
        return Err(Error::InvalidPair(
            "the unique source must be the block containing the maximum".into(),
        ));
    }
    let (word, hooks) = invert(partition.blocks(), image.orientation.edges())?;
    let config = ValidHookConfiguration::new(Permutation::new(word)?, hooks)?;
    if &phi(&config)? != image {
        return Err(Error::InvalidPair(
            "the pair is not the image of any hook configuration".into(),
        ));
    }
    Ok(config)
}

/// Recursive core of the inverse map.  `blocks` partitions `{1, …, n}` in
/// canonical order and `edges` directs pairs of block indices.  Splits off
/// the blocks reachable from the block of the largest non-source value;
/// those rebuild the word under the top hook, the rest rebuild the prefix
/// and the ascending tail.
fn invert(blocks: &[Vec<usize>], edges: &[(usize, usize)]) -> Result<(Vec<usize>, Vec<Hook>)> {
    let n: usize = blocks.iter().map(Vec::len).sum();
    if blocks.len() == 1 {
        debug_assert!(edges.is_empty());
        return Ok(((1..n).collect(), Vec::new()));
    }
    let blue = blocks.iter().position(|b| b.contains(&n)).unwrap();
    let a = blocks
        .iter()
        .enumerate()
        .filter(|&(i, _)| i != blue)
        .flat_map(|(_, b)| b.iter().copied())
        .max()
        .unwrap();
    let a_idx = blocks.iter().position(|b| b.contains(&a)).unwrap();

    // Everything reachable from a's block goes under the top hook.
    let mut reachable = vec![false; blocks.len()];
    let mut stack = vec![a_idx];
    reachable[a_idx] = true;
    while let Some(u) = stack.pop() {
        for &(from, to) in edges {
            if from == u && !reachable[to] {
                reachable[to] = true;
                stack.push(to);
            }
        }
    }
    if reachable[blue] {
        return Err(Error::InvalidPair(
            "the source block is reachable from below".into(),
        ));
    }

    let (s_word, s_hooks, s_values) = solve_part(blocks, edges, &reachable, true)?;
    let (u_word, u_hooks, u_values) = solve_part(blocks, edges, &reachable, false)?;
    debug_assert_eq!(*s_values.last().unwrap(), a);
    debug_assert_eq!(*u_values.last().unwrap(), n);

    let tail_len = n - 1 - a;
    let b = match u_word.len().checked_sub(tail_len) {
        Some(b) if b > 0 => b,
        _ => {
            return Err(Error::InvalidPair(
                "too few values outside the top hook".into(),
            ))
        }
    };
    debug_assert_eq!(s_word.len(), a - 1 - b);

    let mut word = vec![0usize; n - 1];
    for (i, &letter) in u_word.iter().enumerate() {
        let value = u_values[letter - 1];
        if i < b {
            word[i] = value;
        } else if value != a + (i - b) + 1 {
            return Err(Error::InvalidPair(
                "the values above the top hook do not finish in order".into(),
            ));
        } else {
            word[a + (i - b)] = value;
        }
    }
    word[a - 1] = a;
    for (i, &letter) in s_word.iter().enumerate() {
        word[b + i] = s_values[letter - 1];
    }

    let mut hooks = Vec::with_capacity(u_hooks.len() + s_hooks.len() + 1);
    for h in u_hooks {
        if h.ne > b {
            return Err(Error::InvalidPair(
                "a hook outside the top hook reaches into the tail".into(),
            ));
        }
        hooks.push(h);
    }
    for h in s_hooks {
        hooks.push(Hook::new(h.sw + b, h.ne + b));
    }
    hooks.push(Hook::new(b, a));
    Ok((word, hooks))
}

/// Restrict to the blocks selected by `keep == reachable`, relabel their
/// values onto `{1, …, m}`, reindex the edges, and recurse.  Returns the
/// sub-word, its hooks, and the original values in ascending order.
fn solve_part(
    blocks: &[Vec<usize>],
    edges: &[(usize, usize)],
    reachable: &[bool],
    keep: bool,
) -> Result<(Vec<usize>, Vec<Hook>, Vec<usize>)> {
    let chosen: Vec<usize> = (0..blocks.len()).filter(|&i| reachable[i] == keep).collect();
    let mut values: Vec<usize> = chosen.iter().flat_map(|&i| blocks[i].iter().copied()).collect();
    values.sort_unstable();
    let rank = |v: usize| values.binary_search(&v).unwrap() + 1;

    let mut new_index = vec![usize::MAX; blocks.len()];
    for (ni, &oi) in chosen.iter().enumerate() {
        new_index[oi] = ni;
    }
    let sub_blocks: Vec<Vec<usize>> = chosen
        .iter()
        .map(|&i| blocks[i].iter().map(|&v| rank(v)).collect())
        .collect();
    let sub_edges: Vec<(usize, usize)> = edges
        .iter()
        .filter(|&&(u, v)| reachable[u] == keep && reachable[v] == keep)
        .map(|&(u, v)| (new_index[u], new_index[v]))
        .collect();
    let (word, hooks) = invert(&sub_blocks, &sub_edges)?;
    Ok((word, hooks, values))
}

/// The matching restriction: on a uniquely sorted host of length `2k + 1`
/// the image partition pairs up `{1, …, 2k + 2}` perfectly.
pub fn phi_restricted(config: &ValidHookConfiguration) -> Result<PhiImage> {
    if 2 * config.hook_count() + 1 != config.host().len() {
        return Err(Error::NotUniquelySorted);
    }
    let image = phi(config)?;
    debug_assert!(image.partition.is_matching());
    Ok(image)
}

/// A uniquely sorted permutation's first entry is always matched with the
/// maximum of the image partition's ground set.
pub fn first_entry_block_property(pi: &Permutation) -> Result<bool> {
    if !pi.is_normalized() {
        return Err(Error::NotNormalized);
    }
    if !vhc::is_uniquely_sorted(pi) {
        return Err(Error::NotUniquelySorted);
    }
    let configs = vhc::enumerate_vhcs(pi);
    debug_assert_eq!(configs.len(), 1);
    let image = phi_restricted(&configs[0])?;
    let n = pi.len() + 1;
    let idx = image.partition.block_containing(n).unwrap();
    Ok(image.partition.blocks()[idx] == [pi.entry(1), n])
}

/// Group host positions by extended color.  The result is always a
/// noncrossing partition of the positions.
pub fn eta(config: &ValidHookConfiguration) -> SetPartition {
    let coloring = config.induced_coloring();
    let mut classes: Vec<Vec<usize>> = vec![Vec::new(); config.hook_count() + 1];
    for (idx, &color) in coloring.extended().iter().enumerate() {
        classes[color].push(idx + 1);
    }
    classes.retain(|c| !c.is_empty());
    SetPartition::new(config.host().len(), classes)
        .expect("extended colors partition the positions")
}
