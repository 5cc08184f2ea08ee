//! The integer sequences behind the counts: Catalan and Narayana numbers,
//! the Lassalle sequence, free Poisson moments with their classical
//! cumulants, and the tail-length tables.

use lassalle::sequences::{
    catalan, classical_cumulants, cumulant_via_vhc, d_table, e_table, free_poisson_moments,
    lassalle, narayana,
};
use num::{BigInt, BigRational};

fn main() {
    print!("catalan: ");
    for n in 0..=9 {
        print!("{} ", catalan(n));
    }
    println!();
    print!("narayana row 5: ");
    for k in 1..=5 {
        print!("{} ", narayana(5, k).unwrap());
    }
    println!();
    print!("lassalle: ");
    for a in lassalle(8) {
        print!("{a} ");
    }
    println!();
    println!();

    // Moments of the free Poisson law at rate λ, and the classical
    // cumulants they generate.  At λ = −1 the negated cumulants count hook
    // configurations, which the combinatorial evaluation confirms.
    let minus_one = BigRational::from_integer(BigInt::from(-1));
    let moments = free_poisson_moments(8, &minus_one);
    let cumulants = classical_cumulants(8, &minus_one);
    println!("order  moment  cumulant  hook-configuration count");
    for n in 1..=8 {
        let via_sweep = cumulant_via_vhc(n, &minus_one).unwrap();
        assert_eq!(&via_sweep, cumulants.coefficient(n));
        println!(
            "{n:>5}  {:>6}  {:>8}  {:>23}",
            moments.coefficient(n),
            cumulants.coefficient(n),
            -via_sweep
        );
    }

    // Tail-length refinements.  Rows are tail lengths, columns are host
    // lengths; the all-tails column sums reproduce the counts above.
    let d = d_table(6);
    println!();
    println!("hook configurations by tail length:");
    for n in 1..=6 {
        let row: Vec<String> = (0..=n).map(|m| d.value(m, n).to_string()).collect();
        println!("  n = {n}: {}  (total {})", row.join(" "), d.cumulative(0, n));
    }
    let e = e_table(9);
    println!("uniquely sorted words by tail length (odd lengths):");
    for k in 0..=4 {
        let n = 2 * k + 1;
        let row: Vec<String> = (0..=n).map(|m| e.value(m, n).to_string()).collect();
        println!("  n = {n}: {}  (total {})", row.join(" "), e.cumulative(0, n));
    }
}
