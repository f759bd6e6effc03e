//! Closed-form prediction against exact graph search, for every valid orbit
//! of one classical family up to a rank.
//!
//! ```bash
//! cargo run --release --example scan_family
//! ```

use dynkin_abelian::orbit::ClassicalFamily;
use dynkin_abelian::scan::scan_family;

fn main() {
    for (family, max_rank) in [(ClassicalFamily::C, 5), (ClassicalFamily::D, 5)] {
        let rows = scan_family(family, max_rank);
        let disagreements = rows.iter().filter(|r| !r.agree).count();
        println!(
            "family {family}, ranks up to {max_rank}: {} orbits",
            rows.len()
        );
        for r in rows.iter().filter(|r| r.dim_g1 > 0) {
            println!(
                "  {}{} [{}]: dim g_1 = {}, predicted {}, graph {}, half-abelian: {}",
                r.family,
                r.rank,
                r.partition,
                r.dim_g1,
                r.predicted_max,
                r.graph_max,
                r.half_abelian
            );
        }
        println!("  disagreements: {disagreements}\n");
        assert_eq!(disagreements, 0);
    }
}
