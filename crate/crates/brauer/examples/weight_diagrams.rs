//! Weight diagrams on the half-integer line: construction, the two
//! partition readings, and the balance count.
//!
//! Run with: cargo run --example weight_diagrams

use brauer::partition::Partition;
use brauer::weight::{partition_from_weight, weight_diagram, Label};

fn main() {
    let lambda: Partition = "10,10,9,9,8,5,3,3".parse().unwrap();
    for delta in [-3i64, 0, 3] {
        let w = weight_diagram(&lambda, delta);
        let line: String = w
            .prefix()
            .iter()
            .map(|l| l.ascii())
            .flat_map(|c| [c, ' '])
            .collect();
        println!("delta = {delta:>2}: {line}...");
        println!(
            "  #circ - #times = {} = m, degree of singularity {}",
            w.count(Label::Circle) as i64 - w.count(Label::Times) as i64,
            w.degree()
        );
        assert_eq!(partition_from_weight(&w).unwrap(), lambda);
    }
}
