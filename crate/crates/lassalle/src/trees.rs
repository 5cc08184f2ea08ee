//! Decreasing binary plane trees.
//!
//! Reading a tree in symmetric order (`I`) is a bijection onto permutations;
//! reading it in postorder (`P`) is many-to-one, and the composite `P ∘ I⁻¹`
//! is exactly one pass of stack sorting.  The number of trees with a given
//! postorder is therefore the number of stack-sorting preimages, which gives
//! this module its role as an independent fertility oracle.

use std::collections::HashMap;
use std::fmt;
use std::rc::Rc;
use std::str::FromStr;

use num::BigInt;

use crate::error::{Error, Result};
use crate::permutation::{Permutation, DEFAULT_ORACLE_BOUND};

#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
struct Node {
    label: usize,
    left: Option<Box<Node>>,
    right: Option<Box<Node>>,
}

/// A plane binary tree with distinct positive labels decreasing along every
/// path away from the root.  Never empty.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DecreasingBinaryTree {
    root: Node,
}

impl Node {
    fn in_order(&self, out: &mut Vec<usize>) {
        if let Some(l) = &self.left {
            l.in_order(out);
        }
        out.push(self.label);
        if let Some(r) = &self.right {
            r.in_order(out);
        }
    }

    fn post_order(&self, out: &mut Vec<usize>) {
        if let Some(l) = &self.left {
            l.post_order(out);
        }
        if let Some(r) = &self.right {
            r.post_order(out);
        }
        out.push(self.label);
    }

    fn is_decreasing(&self) -> bool {
        let ok = |c: &Option<Box<Node>>| {
            c.as_ref().is_none_or(|c| c.label < self.label && c.is_decreasing())
        };
        ok(&self.left) && ok(&self.right)
    }

    /// Follow left children as far as possible.
    fn leftmost(&self) -> &Node {
        let mut cur = self;
        while let Some(l) = &cur.left {
            cur = l;
        }
        cur
    }

    fn for_each(&self, f: &mut impl FnMut(&Node)) {
        f(self);
        if let Some(l) = &self.left {
            l.for_each(f);
        }
        if let Some(r) = &self.right {
            r.for_each(f);
        }
    }
}

impl DecreasingBinaryTree {
    /// The unique tree whose symmetric-order reading is `word`: the maximum
    /// becomes the root and the flanks recurse.  Errors on the empty word.
    pub fn from_inorder(word: &Permutation) -> Result<Self> {
        fn build(w: &[usize]) -> Option<Box<Node>> {
            if w.is_empty() {
                return None;
            }
            let idx = (0..w.len()).max_by_key(|&i| w[i]).unwrap();
            Some(Box::new(Node {
                label: w[idx],
                left: build(&w[..idx]),
                right: build(&w[idx + 1..]),
            }))
        }
        match build(word.entries()) {
            Some(root) => Ok(Self { root: *root }),
            None => Err(Error::OutOfRange("the empty word reads no tree".into())),
        }
    }

    pub fn size(&self) -> usize {
        let mut n = 0;
        self.root.for_each(&mut |_| n += 1);
        n
    }

    pub fn root_label(&self) -> usize {
        self.root.label
    }

    pub fn labels(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.root.for_each(&mut |n| out.push(n.label));
        out.sort_unstable();
        out
    }

    /// Symmetric-order reading: left subtree, vertex, right subtree.
    pub fn in_order(&self) -> Permutation {
        let mut out = Vec::new();
        self.root.in_order(&mut out);
        Permutation::from_distinct_unchecked(out)
    }

    /// Postorder reading: left subtree, right subtree, vertex.
    pub fn post_order(&self) -> Permutation {
        let mut out = Vec::new();
        self.root.post_order(&mut out);
        Permutation::from_distinct_unchecked(out)
    }

    /// The leftmost vertex of the subtree rooted at the right sibling of the
    /// vertex labeled `label`.  Defined only when that vertex is a left child
    /// and its parent also has a right child.
    pub fn leftmost_cousin(&self, label: usize) -> Result<usize> {
        if self.root.label == label {
            return Err(Error::NoLeftmostCousin("the root is not a left child".into()));
        }
        let mut hit: Option<(&Node, bool)> = None;
        fn search<'a>(node: &'a Node, label: usize, hit: &mut Option<(&'a Node, bool)>) {
            if hit.is_some() {
                return;
            }
            if let Some(l) = &node.left {
                if l.label == label {
                    *hit = Some((node, true));
                    return;
                }
                search(l, label, hit);
            }
            if let Some(r) = &node.right {
                if r.label == label {
                    *hit = Some((node, false));
                    return;
                }
                search(r, label, hit);
            }
        }
        search(&self.root, label, &mut hit);
        match hit {
            None => Err(Error::NoLeftmostCousin(format!("no vertex labeled {label}"))),
            Some((_, false)) => {
                Err(Error::NoLeftmostCousin(format!("{label} is not a left child")))
            }
            Some((parent, true)) => match &parent.right {
                None => Err(Error::NoLeftmostCousin(format!(
                    "the parent of {label} has no right child"
                ))),
                Some(r) => Ok(r.leftmost().label),
            },
        }
    }

    /// Every vertex has zero or two children.
    pub fn is_full(&self) -> bool {
        let mut full = true;
        self.root
            .for_each(&mut |n| full &= n.left.is_some() == n.right.is_some());
        full
    }

    /// Every vertex with a left child also has a right child, and every left
    /// child's label exceeds the label of its leftmost cousin.
    pub fn is_canonical(&self) -> bool {
        let mut ok = true;
        self.root.for_each(&mut |n| {
            if let Some(l) = &n.left {
                match &n.right {
                    None => ok = false,
                    Some(r) => ok &= l.label > r.leftmost().label,
                }
            }
        });
        ok
    }

    /// True when this is the only tree with its postorder reading,
    /// equivalently when the tree is both full and canonical.
    pub fn is_lonely(&self) -> bool {
        self.is_full() && self.is_canonical()
    }
}

/// One stack-sorting pass computed through trees: invert the symmetric-order
/// reading, then read the same tree in postorder.
pub fn stack_sort_via_trees(pi: &Permutation) -> Permutation {
    if pi.is_empty() {
        return Permutation::empty();
    }
    DecreasingBinaryTree::from_inorder(pi)
        .expect("nonempty word")
        .post_order()
}

/// All decreasing binary plane trees whose postorder reading is `pi`, sorted.
/// Empty unless `pi` ends with its maximum.  Errors on the empty word or when
/// the length exceeds [`DEFAULT_ORACLE_BOUND`].
pub fn trees_with_postorder(pi: &Permutation) -> Result<Vec<DecreasingBinaryTree>> {
    trees_with_postorder_with_bound(pi, DEFAULT_ORACLE_BOUND)
}

pub fn trees_with_postorder_with_bound(
    pi: &Permutation,
    bound: usize,
) -> Result<Vec<DecreasingBinaryTree>> {
    if pi.is_empty() {
        return Err(Error::OutOfRange("the empty word reads no tree".into()));
    }
    if pi.len() > bound {
        return Err(Error::BoundExceeded { size: pi.len(), bound });
    }
    let w = pi.entries();
    let mut memo: HashMap<(usize, usize), Rc<Vec<Option<Node>>>> = HashMap::new();
    let all = enum_range(w, 0, w.len(), &mut memo);
    let mut trees: Vec<DecreasingBinaryTree> = all
        .iter()
        .filter_map(|t| t.clone().map(|root| DecreasingBinaryTree { root }))
        .collect();
    trees.sort();
    Ok(trees)
}

/// Subwords with a repeated shape are shared through the memo table; the
/// value for `(i, j)` lists every tree whose postorder is `w[i..j]`, with
/// `None` standing for the empty tree when `i == j`.
fn enum_range(
    w: &[usize],
    i: usize,
    j: usize,
    memo: &mut HashMap<(usize, usize), Rc<Vec<Option<Node>>>>,
) -> Rc<Vec<Option<Node>>> {
    if i == j {
        return Rc::new(vec![None]);
    }
    if let Some(hit) = memo.get(&(i, j)) {
        return hit.clone();
    }
    let mut out = Vec::new();
    let last = w[j - 1];
    if w[i..j].iter().all(|&v| v <= last) {
        for t in i..j {
            let lefts = enum_range(w, i, t, memo);
            let rights = enum_range(w, t, j - 1, memo);
            for l in lefts.iter() {
                for r in rights.iter() {
                    out.push(Some(Node {
                        label: last,
                        left: l.clone().map(Box::new),
                        right: r.clone().map(Box::new),
                    }));
                }
            }
        }
    }
    let rc = Rc::new(out);
    memo.insert((i, j), rc.clone());
    rc
}

/// Number of trees with postorder `pi`, without materializing them.  The
/// recurrence runs in polynomial time, so no size bound applies.
pub fn count_trees_with_postorder(pi: &Permutation) -> Result<BigInt> {
    if pi.is_empty() {
        return Err(Error::OutOfRange("the empty word reads no tree".into()));
    }
    let w = pi.entries();
    let mut memo: HashMap<(usize, usize), BigInt> = HashMap::new();
    fn count(
        w: &[usize],
        i: usize,
        j: usize,
        memo: &mut HashMap<(usize, usize), BigInt>,
    ) -> BigInt {
        if i == j {
            return BigInt::from(1);
        }
        if let Some(hit) = memo.get(&(i, j)) {
            return hit.clone();
        }
        let last = w[j - 1];
        let mut total = BigInt::from(0);
        if w[i..j].iter().all(|&v| v <= last) {
            for t in i..j {
                let l = count(w, i, t, memo);
                if l == BigInt::from(0) {
                    continue;
                }
                total += l * count(w, t, j - 1, memo);
            }
        }
        memo.insert((i, j), total.clone());
        total
    }
    Ok(count(w, 0, w.len(), &mut memo))
}

impl fmt::Display for DecreasingBinaryTree {
    /// `label(left,right)` with `.` for an absent child; bare label at leaves.
    /// The running example prints as `7(6(2,5(3,.)),4(.,1))`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn write_node(n: &Node, f: &mut fmt::Formatter<'_>) -> fmt::Result {
            write!(f, "{}", n.label)?;
            if n.left.is_some() || n.right.is_some() {
                write!(f, "(")?;
                match &n.left {
                    Some(l) => write_node(l, f)?,
                    None => write!(f, ".")?,
                }
                write!(f, ",")?;
                match &n.right {
                    Some(r) => write_node(r, f)?,
                    None => write!(f, ".")?,
                }
                write!(f, ")")?;
            }
            Ok(())
        }
        write_node(&self.root, f)
    }
}

impl fmt::Debug for DecreasingBinaryTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Tree({self})")
    }
}

impl FromStr for DecreasingBinaryTree {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let mut p = TreeParser { s: s.as_bytes(), pos: 0 };
        let root = p.node()?;
        p.skip_ws();
        if p.pos != p.s.len() {
            return Err(Error::Parse(format!("trailing input at byte {}", p.pos)));
        }
        let tree = DecreasingBinaryTree { root };
        if !tree.root.is_decreasing() {
            return Err(Error::Parse("labels must decrease away from the root".into()));
        }
        let labels = tree.labels();
        if labels.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Parse("labels must be distinct".into()));
        }
        Ok(tree)
    }
}

struct TreeParser<'a> {
    s: &'a [u8],
    pos: usize,
}

impl TreeParser<'_> {
    fn skip_ws(&mut self) {
        while self.s.get(self.pos).is_some_and(|b| b.is_ascii_whitespace()) {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.s.get(self.pos).copied()
    }

    fn expect(&mut self, b: u8) -> Result<()> {
        if self.peek() == Some(b) {
            self.pos += 1;
            Ok(())
        } else {
            Err(Error::Parse(format!("expected {:?} at byte {}", b as char, self.pos)))
        }
    }

    fn label(&mut self) -> Result<usize> {
        self.skip_ws();
        let start = self.pos;
        while self.s.get(self.pos).is_some_and(|b| b.is_ascii_digit()) {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(Error::Parse(format!("expected a label at byte {start}")));
        }
        let text = std::str::from_utf8(&self.s[start..self.pos]).unwrap();
        let v: usize = text
            .parse()
            .map_err(|_| Error::Parse(format!("label {text:?} out of range")))?;
        if v == 0 {
            return Err(Error::Parse("labels must be positive".into()));
        }
        Ok(v)
    }

    fn node(&mut self) -> Result<Node> {
        let label = self.label()?;
        let mut node = Node { label, left: None, right: None };
        if self.peek() == Some(b'(') {
            self.pos += 1;
            node.left = self.child()?;
            self.expect(b',')?;
            node.right = self.child()?;
            self.expect(b')')?;
        }
        Ok(node)
    }

    fn child(&mut self) -> Result<Option<Box<Node>>> {
        if self.peek() == Some(b'.') {
            self.pos += 1;
            Ok(None)
        } else {
            Ok(Some(Box::new(self.node()?)))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::permutation::sn_for_each;
    use num::BigInt;
    use proptest::prelude::*;

    fn p(s: &str) -> Permutation {
        s.parse().unwrap()
    }

    fn t(s: &str) -> DecreasingBinaryTree {
        s.parse().unwrap()
    }

    #[test]
    fn readings_of_running_example() {
        let tree = t("7(6(2,5(3,.)),4(.,1))");
        assert_eq!(tree.in_order(), p("2 6 3 5 7 4 1"));
        assert_eq!(tree.post_order(), p("2 3 5 6 1 4 7"));
        assert_eq!(tree.size(), 7);
        assert_eq!(tree.root_label(), 7);
    }

    #[test]
    fn inorder_inverse_builds_the_same_tree() {
        let tree = t("7(6(2,5(3,.)),4(.,1))");
        assert_eq!(DecreasingBinaryTree::from_inorder(&p("2 6 3 5 7 4 1")).unwrap(), tree);
        assert!(DecreasingBinaryTree::from_inorder(&Permutation::empty()).is_err());
    }

    #[test]
    fn parser_rejects_malformed_trees() {
        assert!("3(1,2".parse::<DecreasingBinaryTree>().is_err());
        assert!("3(4,1)".parse::<DecreasingBinaryTree>().is_err()); // not decreasing
        assert!("3(1,1)".parse::<DecreasingBinaryTree>().is_err()); // repeated label
        assert!("3(1,2)x".parse::<DecreasingBinaryTree>().is_err());
        assert!("".parse::<DecreasingBinaryTree>().is_err());
        assert_eq!(t(" 3 ( 1 , 2 ) ").to_string(), "3(1,2)");
    }

    #[test]
    fn sorting_through_trees_matches_the_stack() {
        sn_for_each(7, |w| {
            assert_eq!(stack_sort_via_trees(w), w.stack_sort());
        });
        assert_eq!(stack_sort_via_trees(&Permutation::empty()), Permutation::empty());
    }

    #[test]
    fn postorder_fibers_match_the_preimage_oracle() {
        sn_for_each(6, |w| {
            let fiber = trees_with_postorder(w).unwrap();
            let preimages = w.preimages_bruteforce().unwrap();
            let read: Vec<Permutation> = fiber.iter().map(|t| t.in_order()).collect();
            let mut sorted = read.clone();
            sorted.sort();
            assert_eq!(sorted, preimages, "postorder fiber of {w}");
            assert_eq!(
                count_trees_with_postorder(w).unwrap(),
                BigInt::from(fiber.len())
            );
        });
    }

    #[test]
    fn fiber_sizes_sum_to_factorial() {
        for n in 1..=7 {
            let mut total = BigInt::from(0);
            sn_for_each(n, |w| total += count_trees_with_postorder(w).unwrap());
            let factorial: BigInt = (1..=n).map(BigInt::from).product();
            assert_eq!(total, factorial);
        }
    }

    #[test]
    fn fiber_enumeration_respects_bound() {
        let long = Permutation::identity(10);
        assert!(matches!(
            trees_with_postorder(&long),
            Err(Error::BoundExceeded { size: 10, bound: 9 })
        ));
        assert!(count_trees_with_postorder(&long).is_ok());
    }

    #[test]
    fn leftmost_cousins_in_running_example() {
        let tree = t("7(6(2,5(3,.)),4(.,1))");
        assert_eq!(tree.leftmost_cousin(2).unwrap(), 3);
        assert_eq!(tree.leftmost_cousin(6).unwrap(), 4);
        assert!(tree.leftmost_cousin(7).is_err()); // root
        assert!(tree.leftmost_cousin(3).is_err()); // 3 is a left child, parent 5 lacks a right child
        assert!(tree.leftmost_cousin(1).is_err()); // right child
        assert!(tree.leftmost_cousin(9).is_err()); // absent
    }

    #[test]
    fn lonely_recognition_matches_fiber_size_one() {
        for n in 1..=6 {
            sn_for_each(n, |w| {
                let tree = DecreasingBinaryTree::from_inorder(w).unwrap();
                let fiber = trees_with_postorder(&tree.post_order()).unwrap();
                assert_eq!(
                    tree.is_lonely(),
                    fiber.len() == 1,
                    "tree {tree} has fiber size {}",
                    fiber.len()
                );
            });
        }
    }

    #[test]
    fn lonely_examples() {
        assert!(t("1").is_lonely());
        assert!(t("3(2,1)").is_lonely());
        // Full but not canonical: left child 1 does not exceed cousin 2.
        assert!(t("3(1,2)").is_full());
        assert!(!t("3(1,2)").is_lonely());
        // Canonical but not full.
        assert!(t("2(.,1)").is_canonical());
        assert!(!t("2(.,1)").is_lonely());
    }

    proptest! {
        #[test]
        fn display_parse_round_trip(word in proptest::sample::subsequence((1usize..=30).collect::<Vec<_>>(), 1..=8).prop_shuffle()) {
            let w = Permutation::new(word).unwrap();
            let tree = DecreasingBinaryTree::from_inorder(&w).unwrap();
            prop_assert_eq!(tree.to_string().parse::<DecreasingBinaryTree>().unwrap(), tree.clone());
            prop_assert_eq!(tree.in_order(), w);
        }
    }
}
