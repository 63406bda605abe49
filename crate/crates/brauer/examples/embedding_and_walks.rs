//! Embedded points, singularity, the set A_delta of restricted
//! partitions, and up-down walks with their counts.
//!
//! Run with: cargo run --example embedding_and_walks

use brauer::geometry::{
    a_delta_by_bfs, count_walks, degree_of_singularity, enumerate_walks, in_a_delta,
    EmbeddedPoint,
};
use brauer::partition::Partition;

fn main() {
    let lambda: Partition = "3,2".parse().unwrap();
    for delta in [-1i64, 2] {
        let e = EmbeddedPoint::embed(&lambda, delta);
        println!(
            "e_{delta}({lambda}): doubled entries {:?}, degree of singularity {}",
            e.doubled_entries(6),
            degree_of_singularity(&lambda, delta)
        );
    }

    for delta in [-3i64, -1, 1, 2] {
        let a: Vec<String> = a_delta_by_bfs(delta, 4).iter().map(|p| p.to_string()).collect();
        println!("A_{delta} up to 4 boxes: {}", a.join("  "));
        assert!(a_delta_by_bfs(delta, 4)
            .iter()
            .all(|p| in_a_delta(p, delta)));
    }

    // dim Delta_n(lambda) is the number of up-down walks from the empty
    // partition; restricting every step to A_delta counts a basis of the
    // simple module instead
    let lambda: Partition = "1".parse().unwrap();
    let n = 5;
    println!(
        "walks to {lambda} in {n} steps: {} unrestricted, {} delta-restricted at delta = 1",
        count_walks(&lambda, n, 0, false).unwrap(),
        count_walks(&lambda, n, 1, true).unwrap()
    );
    for w in enumerate_walks(&lambda, 3, 0, false).unwrap() {
        let steps: Vec<String> = w.steps().iter().map(|p| p.to_string()).collect();
        println!("  {}", steps.join(" -> "));
    }
}
