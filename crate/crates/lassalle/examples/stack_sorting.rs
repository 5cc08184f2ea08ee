//! Push entries onto a stack while they decrease, pop while they block:
//! one pass of the map, then iterated passes until the identity appears.

use lassalle::Permutation;

fn main() {
    let pi: Permutation = "2 6 3 5 7 4 1".parse().unwrap();
    println!("one pass of {pi} gives {}", pi.stack_sort());

    let mut current = pi.clone();
    let mut passes = 0;
    while !current.is_identity() {
        current = current.stack_sort();
        passes += 1;
        println!("after {passes} pass(es): {current}");
    }

    // A length-n permutation never needs more than n−1 passes, and the
    // already-sorted suffix grows on the way.
    let word: Permutation = "5 2 4 1 3 6".parse().unwrap();
    println!();
    println!("{word} has descents at {:?}", word.descents());
    println!("its sorted tail has length {}", word.tail_length());
    println!("one pass later: {}", word.stack_sort());
    println!("tail length then: {}", word.stack_sort().tail_length());
}
