//! Hooks rise from a descent top to a later, larger entry; a valid set of
//! them covers every descent without collisions or crossings.  The induced
//! coloring slices the host into the classes that drive everything else.

use lassalle::{vhc, Permutation, ValidHookConfiguration};

fn main() {
    let config: ValidHookConfiguration =
        "2 7 3 5 9 10 11 4 8 1 6 12 13 14 15 16 ; 2>7 7>15 9>13".parse().unwrap();
    println!("host:  {}", config.host());
    println!("hooks: {:?}", config.hooks());

    let coloring = config.induced_coloring();
    println!("extended colors by position: {:?}", coloring.extended());
    println!("class sizes: {:?}", coloring.class_sizes());
    println!("composition: {:?}", config.valid_composition());

    // The highest hook splits the configuration into the part it shelters
    // and the rest; both halves are configurations in their own right.
    let split = config.top_hook_decomposition().unwrap();
    println!("top hook: {:?}", split.top_hook);
    println!("sheltered part:   {}", split.sheltered);
    println!("unsheltered part: {}", split.unsheltered);

    // Every host of length n with a descent set of size k admits between
    // zero and several configurations; enumerating them is cheap.
    let host: Permutation = "3 2 1 4 5".parse().unwrap();
    println!();
    println!("configurations on {host}:");
    for c in vhc::enumerate_vhcs(&host) {
        println!("    {c}");
    }
    println!("fertility of {host}: {}", vhc::fertility(&host));

    // Across all hosts of a given length the configuration count matches
    // a cumulant evaluation; see the sequences example.
    for n in 0..=6 {
        print!("{} ", vhc::total_vhc_count(n));
    }
    println!(" <- configurations over S_0 .. S_6");
}
