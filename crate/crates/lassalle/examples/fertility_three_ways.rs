//! Count the preimages of a permutation under the stack-sorting map three
//! independent ways: Catalan products over hook configurations, tree
//! counting, and plain brute force.

use lassalle::trees::count_trees_with_postorder;
use lassalle::{vhc, Permutation};

fn main() {
    for text in ["1 2 3", "2 1 3", "2 3 1 4", "1 3 2 4 5", "2 3 5 6 1 4 7"] {
        let pi: Permutation = text.parse().unwrap();
        let formula = vhc::fertility(&pi);
        let trees = count_trees_with_postorder(&pi).unwrap();
        let oracle = pi.preimages_bruteforce().unwrap();
        assert_eq!(formula, trees);
        assert_eq!(formula, oracle.len().into());
        println!("{pi}  ->  {formula} preimage(s)");
        for sigma in &oracle {
            println!("    {sigma}");
        }
    }

    // Permutations that are not sorted at all have no preimages; anything
    // not ending in its maximum is such.
    let blocked: Permutation = "1 3 2".parse().unwrap();
    println!("{blocked}  ->  {} preimage(s)", vhc::fertility(&blocked));
}
