//! The stack-sorting map factors through decreasing binary plane trees:
//! build the tree whose in-order reading is the input, read it back in
//! postorder.  Fibers of the postorder reading are exactly the preimage
//! sets, and the lonely trees are the ones alone in their fiber.

use lassalle::trees::{trees_with_postorder, DecreasingBinaryTree};
use lassalle::Permutation;

fn main() {
    let pi: Permutation = "2 6 3 5 7 4 1".parse().unwrap();
    let tree = DecreasingBinaryTree::from_inorder(&pi).unwrap();
    println!("in-order {pi} builds {tree}");
    println!("postorder reading: {}", tree.post_order());
    println!("stack-sorted:      {}", pi.stack_sort());

    // Leftmost cousins witness the canonical-tree test.
    for label in [2, 6] {
        println!("leftmost cousin of {label}: {}", tree.leftmost_cousin(label).unwrap());
    }
    println!("full: {}, canonical: {}, lonely: {}", tree.is_full(), tree.is_canonical(), tree.is_lonely());

    // All trees reading 2 3 1 4 7 in postorder, i.e. the preimages of it.
    let target: Permutation = "2 3 1 4 5".parse().unwrap();
    println!();
    println!("trees with postorder {target}:");
    for t in trees_with_postorder(&target).unwrap() {
        println!("    {t}  (in-order {})", t.in_order());
    }

    // A lonely tree: full and canonical.
    let lonely: DecreasingBinaryTree = "3(2,1)".parse().unwrap();
    println!("{lonely} is lonely: {}", lonely.is_lonely());
}
