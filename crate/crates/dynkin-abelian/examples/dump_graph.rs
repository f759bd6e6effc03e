//! Dump the non-commutation graph of g_1 in the plain adjacency-list
//! format: one line per vertex with its index, root coefficients and
//! neighbor indices.
//!
//! ```bash
//! cargo run --example dump_graph
//! ```

use dynkin_abelian::grading::grade;
use dynkin_abelian::orbit::WeightedDiagram;
use dynkin_abelian::root_system::{Family, RootSystem, SimpleType};
use dynkin_abelian::CommutationGraph;

fn main() {
    let rs = RootSystem::build(SimpleType::new(Family::E6, 6).unwrap());
    let d = WeightedDiagram::new(rs.stype(), vec![1, 1, 0, 0, 0, 1]).unwrap();
    let g = grade(&rs, &d).unwrap();
    let graph = CommutationGraph::from_grading(&g);
    print!("{}", graph.dump());
}
