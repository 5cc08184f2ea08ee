//! Permutations with exactly one preimage, the statistics that refine
//! their count, and the matching involutions acting on their images.

use lassalle::partitions::{partner, reflect_matching, tilde_map};
use lassalle::bijections::phi_restricted;
use lassalle::sequences::{
    is_log_concave, refined_lassalle_eye, refined_lassalle_first_entry,
};
use lassalle::vhc;

fn main() {
    for k in 0..=3 {
        let words = vhc::enumerate_uniquely_sorted(k).unwrap();
        println!("length {:>2}: {} uniquely sorted word(s)", 2 * k + 1, words.len());
    }
    println!();

    println!("the five of length 5, with first entry and eye:");
    for pi in vhc::enumerate_uniquely_sorted(2).unwrap() {
        println!("    {pi}   first {}   eye {}", pi.entry(1), vhc::eye(&pi).unwrap());
    }

    // Counting by first entry gives a palindromic, log-concave vector, and
    // counting by eye gives the same vector.
    for k in 1..=4 {
        let first = refined_lassalle_first_entry(k).unwrap();
        let eyes = refined_lassalle_eye(k).unwrap();
        assert_eq!(first, eyes);
        let shown: Vec<String> = first.iter().map(|c| c.to_string()).collect();
        println!(
            "k = {k}: [{}]  log-concave: {}",
            shown.join(", "),
            is_log_concave(&first)
        );
    }

    // Two involutions on the matching images explain the symmetries.
    let pi: lassalle::Permutation = "5 4 7 6 2 1 3 8 9".parse().unwrap();
    let image = phi_restricted(&vhc::enumerate_vhcs(&pi)[0]).unwrap();
    let rho = image.partition;
    println!();
    println!("matching of {pi}: {rho}");
    println!("reflected:  {}", reflect_matching(&rho).unwrap());
    println!("tilde:      {}", tilde_map(&rho).unwrap());
    println!("partner of 9: {} (the eye)", partner(&rho, 9).unwrap());
}
