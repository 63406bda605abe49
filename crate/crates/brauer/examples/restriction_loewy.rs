//! Restriction of simple modules to B_{n-1}: block components and their
//! full Loewy structure.
//!
//! Run with: cargo run --example restriction_loewy

use brauer::cap::simple_dimension;
use brauer::partition::Partition;
use brauer::restriction::{restrict_simple, restrict_standard};

fn main() {
    let delta = 2i64;
    let n = 4usize;
    let lambda: Partition = "1,1".parse().unwrap();

    let res = restrict_standard(&lambda, n, delta).unwrap();
    let names: Vec<String> = res.iter().map(|m| m.partition.to_string()).collect();
    println!("res Delta_{n}({lambda}) has standard factors: {}", names.join("  "));

    println!("\nres L_{n}({lambda}) at delta = {delta}, by block of B_{}:", n - 1);
    for (block, s) in restrict_simple(&lambda, n, delta).unwrap() {
        let layer = |ms: &[brauer::restriction::ModuleLabel]| -> String {
            if ms.is_empty() {
                String::from("0")
            } else {
                ms.iter()
                    .map(|m| format!("L({})", m.partition))
                    .collect::<Vec<_>>()
                    .join(" + ")
            }
        };
        println!(
            "  block of {block}: head {}, middle {}, socle {}",
            layer(&s.head),
            layer(&s.middle),
            layer(&s.socle)
        );
        let total: u128 = s
            .factors()
            .iter()
            .map(|f| simple_dimension(&f.partition, n - 1, delta))
            .sum();
        println!("    component dimension {total}");
    }
    println!("dim L_{n}({lambda}) = {}", simple_dimension(&lambda, n, delta));
}
