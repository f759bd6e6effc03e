//! Partition to weighted Dynkin diagram, step by step.
//!
//! ```bash
//! cargo run --example convert_partition
//! ```

use dynkin_abelian::orbit::{h_eigenvalues, h_weights, ClassicalFamily, ClassicalOrbit, Partition};
use dynkin_abelian::partition_to_diagram;

fn show(family: ClassicalFamily, parts: &[u32]) {
    let partition = Partition::new(parts.to_vec()).unwrap();
    let orbit = ClassicalOrbit::new(family, partition).unwrap();
    println!("{orbit}");
    println!("  parity:      {}", orbit.parity_class());
    let eigen: Vec<String> = h_eigenvalues(orbit.partition())
        .iter()
        .map(|e| e.to_string())
        .collect();
    println!("  eigenvalues: {}", eigen.join(" "));
    if family != ClassicalFamily::A {
        let hw = h_weights(&orbit);
        println!("  h:           {:?}", hw.h);
        println!("  s:           {:?}", hw.s);
    }
    println!("  diagram:     {}", partition_to_diagram(&orbit));
    println!();
}

fn main() {
    // the same partition encodes orbits in two different algebras
    show(ClassicalFamily::A, &[8, 6, 3, 3, 2, 1, 1]);
    show(ClassicalFamily::C, &[8, 6, 3, 3, 2, 1, 1]);
    // a D-type orbit with the fork pair on the last two nodes
    show(ClassicalFamily::D, &[5, 3, 2, 2]);
}
