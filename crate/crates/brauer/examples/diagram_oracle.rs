//! The brute-force side: Brauer diagrams multiplied explicitly, cell
//! modules with their Gram forms, and exact ranks over the rationals.
//!
//! Run with: cargo run --example diagram_oracle

use num::rational::BigRational;
use num::{BigInt, FromPrimitive};

use brauer::geometry::count_walks;
use brauer::oracle::{
    cell_dimension, e_gen, element_from, gram_matrix, gram_rank, multiply_elements, sigma_gen,
};
use brauer::partition::{lambda_n, Partition};

fn main() {
    // e_1 sigma_2 e_1 = e_1 inside B_3, as bare diagrams
    let delta = BigRational::from_i64(5).unwrap();
    let e1 = element_from(e_gen(3, 1));
    let s2 = element_from(sigma_gen(3, 2));
    let lhs = multiply_elements(&multiply_elements(&e1, &s2, &delta), &e1, &delta);
    assert_eq!(lhs, e1);
    println!("e_1 sigma_2 e_1 = e_1 holds diagrammatically in B_3");

    // cell dimensions agree with walk counts
    let n = 6usize;
    for l in lambda_n(n) {
        assert_eq!(cell_dimension(&l, n) as u64, count_walks(&l, n, 0, false).unwrap());
    }
    println!("cell dimensions match walk counts across Lambda_{n}");

    // the Gram form of a cell module drops rank exactly at special delta
    let lambda: Partition = "1".parse().unwrap();
    let n = 3usize;
    for d in [-2i64, -1, 1, 2, 3] {
        let dq = BigRational::from_i64(d).unwrap();
        let g = gram_matrix(&lambda, n, &dq);
        println!(
            "delta = {d:>2}: Gram matrix {}x{}, rank {} = dim L_{n}({lambda})",
            g.len(),
            g.len(),
            gram_rank(&lambda, n, &dq)
        );
    }
    let generic = BigRational::new(BigInt::from(355), BigInt::from(113));
    println!(
        "generic delta = 355/113: rank {} (full)",
        gram_rank(&lambda, n, &generic)
    );
}
