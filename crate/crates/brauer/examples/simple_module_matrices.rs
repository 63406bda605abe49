//! Walk-basis matrices: the generic action of B_n(u), its specialisation
//! at u = delta, and the truncation to the simple module L_n(lambda).
//!
//! Run with: cargo run --example simple_module_matrices

use num::rational::BigRational;
use num::BigInt;

use brauer::leduc_ram::{
    check_relations, decoupling_max, evaluate_at, generic_matrices, simple_matrices,
};
use brauer::partition::Partition;
use brauer::ratfun::rational_to_f64;

fn print_matrix(name: &str, m: &[Vec<f64>]) {
    println!("{name}:");
    for row in m {
        let cells: Vec<String> = row.iter().map(|v| format!("{v:8.4}")).collect();
        println!("  [{}]", cells.join(" "));
    }
}

fn main() {
    let lambda: Partition = "1".parse().unwrap();
    let n = 3usize;

    // the generic module is semisimple: evaluate anywhere away from the
    // King roots and the relations hold on the full walk basis
    let generic = generic_matrices(&lambda, n).unwrap();
    let u0 = BigRational::new(BigInt::from(47), BigInt::from(2));
    let num = evaluate_at(&generic, &u0).unwrap();
    println!("generic module at u = 47/2, dimension {}", num.basis.len());
    let rep = check_relations(&num, rational_to_f64(&u0));
    println!("max relation residual: {:.2e}\n", rep.max_residual());

    // at u = delta the restricted walks decouple and span L_n(lambda)
    for delta in [1i64, -1, 3] {
        println!(
            "delta = {delta}: coupling to non-restricted walks {:.2e}",
            decoupling_max(&generic, delta)
        );
        let m = simple_matrices(&lambda, n, delta).unwrap();
        println!("L_{n}({lambda}) has dimension {}", m.basis.len());
        for (i, s) in m.sigma.iter().enumerate() {
            print_matrix(&format!("sigma_{}", i + 1), s);
        }
        for (i, e) in m.e.iter().enumerate() {
            print_matrix(&format!("e_{}", i + 1), e);
        }
        let rep = check_relations(&m, delta as f64);
        println!("max relation residual: {:.2e}\n", rep.max_residual());
    }
}
