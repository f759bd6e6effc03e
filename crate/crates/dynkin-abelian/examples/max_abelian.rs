//! The full pipeline on the two E6 orbits whose graphs decide half-ness
//! differently: grade, build the non-commutation graph, search exactly.
//!
//! ```bash
//! cargo run --example max_abelian
//! ```

use dynkin_abelian::grading::grade;
use dynkin_abelian::mis::{enumerate_independent_sets, max_independent_set};
use dynkin_abelian::orbit::WeightedDiagram;
use dynkin_abelian::root_system::{Family, RootSystem, SimpleType};
use dynkin_abelian::CommutationGraph;

fn main() {
    let e6 = RootSystem::build(SimpleType::new(Family::E6, 6).unwrap());

    for weights in [vec![1, 1, 0, 0, 0, 1], vec![0, 1, 1, 0, 1, 0]] {
        let d = WeightedDiagram::new(e6.stype(), weights).unwrap();
        let g = grade(&e6, &d).unwrap();
        let graph = CommutationGraph::from_grading(&g);
        println!(
            "E6 diagram [{d}]: dim g_1 = {}, graph has {} vertices / {} edges",
            g.dim_g1(),
            graph.vertex_count(),
            graph.edge_count()
        );

        // capped search stops as soon as the theoretical half bound is hit
        let capped = max_independent_set(&graph, Some(g.dim_g1() / 2));
        println!(
            "  with cap {}: size {} ({})",
            g.dim_g1() / 2,
            capped.size,
            if capped.capped_by_bound {
                "half-abelian, stopped at the bound"
            } else {
                "below half, proven optimal"
            }
        );

        // uncapped search proves the maximum outright
        let exact = max_independent_set(&graph, None);
        let witness: Vec<String> = exact
            .witness
            .iter()
            .map(|&v| {
                let c: Vec<String> = graph.vertex(v).iter().map(|x| x.to_string()).collect();
                format!("[{}]", c.join(" "))
            })
            .collect();
        println!("  exact maximum {}: {}", exact.size, witness.join(" "));

        let above = enumerate_independent_sets(&graph, exact.size + 1)
            .unwrap()
            .count();
        println!("  independent sets of size {}: {above}", exact.size + 1);
    }
}
