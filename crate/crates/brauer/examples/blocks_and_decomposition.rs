//! Blocks of B_n(delta) on Lambda_n, decomposition matrices from cap
//! diagrams, and the resulting simple dimensions.
//!
//! Run with: cargo run --example blocks_and_decomposition

use brauer::cap::{
    block_in_lambda_n, decomposition_matrix, simple_dimensions_in_block,
};
use brauer::geometry::count_walks;
use brauer::partition::{lambda_n, Partition};

fn main() {
    let (n, delta) = (6usize, 2i64);
    let mut seen: Vec<Partition> = Vec::new();
    println!("blocks of Lambda_{n} at delta = {delta}:");
    for l in lambda_n(n) {
        if seen.contains(&l) {
            continue;
        }
        let members = block_in_lambda_n(&l, n, delta);
        seen.extend(members.iter().cloned());
        let names: Vec<String> = members.iter().map(|p| p.to_string()).collect();
        println!("  {}", names.join("  "));
    }

    let members = block_in_lambda_n(&"1,1".parse().unwrap(), n, delta);
    let d = decomposition_matrix(&members, delta);
    println!("\ndecomposition matrix of the block of (1,1) (rows lambda, columns mu):");
    for (i, row) in d.iter().enumerate() {
        let vals: Vec<String> = row.iter().map(|v| v.to_string()).collect();
        println!("  {:>6}: {}", members[i].to_string(), vals.join(" "));
    }

    println!("\ndim Delta and dim L down the block:");
    let dims = simple_dimensions_in_block(&members, n, delta);
    for l in &members {
        let dim_delta = count_walks(l, n, 0, false).unwrap();
        let dim_l = dims[l.parts()];
        println!("  {:>6}: dim Delta = {dim_delta:>3}, dim L = {dim_l:>3}", l.to_string());
    }
    // the decomposition matrix ties the two dimension columns together
    for (j, mu) in members.iter().enumerate() {
        let total: u128 = members
            .iter()
            .enumerate()
            .map(|(i, l)| d[i][j] as u128 * dims[l.parts()])
            .sum();
        assert_eq!(total, count_walks(mu, n, 0, false).unwrap() as u128);
    }
}
