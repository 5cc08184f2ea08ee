//! From a hook configuration to an oriented connected partition and back.
//! Color classes become blocks of values (the maximum joins the sky class),
//! crossings become edges, and leftmost positions decide the arrows.

use lassalle::bijections::{eta, phi, phi_inverse, phi_restricted};
use lassalle::{vhc, Permutation, ValidHookConfiguration};

fn main() {
    let config: ValidHookConfiguration =
        "2 7 3 5 9 10 11 4 8 1 6 12 13 14 15 16 ; 2>7 7>15 9>13".parse().unwrap();
    let image = phi(&config).unwrap();
    println!("configuration: {config}");
    println!("partition:     {}", image.partition);
    println!("orientation:   {}", image.orientation);

    let back = phi_inverse(&image).unwrap();
    assert_eq!(back, config);
    println!("inverse recovers the configuration");

    // Grouping positions instead of values always yields a noncrossing
    // partition.
    println!("position classes: {}", eta(&config));

    // On uniquely sorted hosts the image is a perfect matching.
    let pi: Permutation = "5 4 7 6 2 1 3 8 9".parse().unwrap();
    let unique = vhc::enumerate_vhcs(&pi).pop().unwrap();
    let matched = phi_restricted(&unique).unwrap();
    println!();
    println!("uniquely sorted {pi}");
    println!("matching image: {}", matched.partition);
    println!("eye {} is the partner of 9", vhc::eye(&pi).unwrap());

    println!();
    println!("as JSON: {}", serde_json::to_string(&matched).unwrap());
}
