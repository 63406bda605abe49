//! Draw weight and cap diagrams as text and as SVG.
//!
//! Run with: cargo run --example render_diagrams

use brauer::cap::CapDiagram;
use brauer::partition::Partition;
use brauer::render::{ascii_cap, svg_cap};

fn main() {
    for (l, delta) in [("", 2i64), ("2", 1), ("3,2,1", -2), ("10,10,9,9,8,5,3,3", 3)] {
        let lambda: Partition = if l.is_empty() { Partition::empty() } else { l.parse().unwrap() };
        let cap = CapDiagram::from_partition(&lambda, delta);
        println!("λ = {lambda}, δ = {delta}:");
        println!("{}", ascii_cap(&cap));
        println!();
    }

    let cap = CapDiagram::from_partition(&"3,2,1".parse().unwrap(), -2);
    let svg = svg_cap(&cap);
    let path = std::env::temp_dir().join("cap_3_2_1.svg");
    std::fs::write(&path, &svg).unwrap();
    println!("SVG for λ = (3,2,1), δ = -2 written to {}", path.display());
}
