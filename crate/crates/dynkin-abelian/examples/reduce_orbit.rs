//! Strictly odd reduction, on the diagram and on the partition, with the
//! cross-check that both routes land on the same orbit.
//!
//! ```bash
//! cargo run --example reduce_orbit
//! ```

use dynkin_abelian::orbit::{ClassicalFamily, ClassicalOrbit, Partition};
use dynkin_abelian::reduction::crosscheck;
use dynkin_abelian::{partition_to_diagram, reduce_diagram, reduce_partition, ReductionOutcome};

fn main() {
    let cases = [
        (ClassicalFamily::D, vec![5, 3, 2, 2]),
        (ClassicalFamily::B, vec![5, 2, 2]),
        (ClassicalFamily::A, vec![4, 1]),
        (ClassicalFamily::C, vec![8, 6, 3, 3, 2, 1, 1]),
    ];
    for (family, parts) in cases {
        let orbit = ClassicalOrbit::new(family, Partition::new(parts).unwrap()).unwrap();
        let d = partition_to_diagram(&orbit);
        println!("{orbit}  (diagram {d})");
        match reduce_diagram(&d).unwrap() {
            ReductionOutcome::Reduced(r) => {
                println!(
                    "  erasing the 2s leaves {} with weights [{}]",
                    r.subtype, r.subdiagram
                );
                println!("  node embedding into the parent: {:?}", r.embedding);
            }
            other => println!("  {other:?}"),
        }
        let reduced = reduce_partition(&orbit).unwrap();
        println!("  partition route: {reduced}");
        println!("  routes agree: {}", crosscheck(&orbit).unwrap());
        println!();
    }
}
