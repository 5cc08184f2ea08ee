//! Set partitions, the graphs recording which blocks cross, and acyclic
//! orientations with a prescribed unique source.

use lassalle::partitions::{
    acyclic_orientations_unique_source, count_m_tilde, count_p_tilde, crossing_graph,
    enumerate_connected_partitions, tutte_10,
};
use lassalle::SetPartition;

fn main() {
    let rho: SetPartition = "1,4|2,7,8,9|3,5,6".parse().unwrap();
    println!("partition: {rho}");
    println!("matching: {}, noncrossing: {}", rho.is_matching(), rho.is_noncrossing());

    let graph = crossing_graph(&rho);
    println!("crossing edges (block indices): {:?}", graph.edges());
    println!("connected: {}", graph.is_connected());

    // Orientations of the crossing graph whose only source is the block
    // containing the largest element; their number is a Tutte evaluation.
    let source = rho.block_containing(rho.n()).unwrap();
    let oriented = acyclic_orientations_unique_source(&graph, source);
    println!("orientations sourced at block {source}:");
    for o in &oriented {
        println!("    {o}");
    }
    println!("tutte(1,0) = {}", tutte_10(&graph));

    println!();
    println!("connected partitions of 1..5:");
    for p in enumerate_connected_partitions(5) {
        println!("    {p}");
    }
    for n in 1..=8 {
        print!("{} ", count_p_tilde(n).unwrap());
    }
    println!(" <- oriented connected partitions of 1..n");
    for m in 1..=5 {
        print!("{} ", count_m_tilde(2 * m).unwrap());
    }
    println!(" <- oriented connected matchings on 1..2m");
}
