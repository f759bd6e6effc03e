//! One orbit, everything known about it, as text and as JSON.
//!
//! ```bash
//! cargo run --example orbit_info
//! ```

use dynkin_abelian::orbit::{ClassicalFamily, ClassicalOrbit, Partition};
use dynkin_abelian::report::{orbit_report, ReportOptions};

fn main() {
    let orbit = ClassicalOrbit::new(
        ClassicalFamily::D,
        Partition::new(vec![5, 3, 2, 2]).unwrap(),
    )
    .unwrap();
    let report = orbit_report(
        &orbit,
        ReportOptions {
            cap_half: true,
            enumerate: None,
        },
    );

    println!(
        "{orbit}: parity {}, diagram {}",
        report.parity, report.diagram
    );
    println!(
        "dim g_1 = {}, max abelian = {} ({})",
        report.dim_g1,
        report.mis.size,
        if report.mis.capped_by_bound {
            "reached the half bound"
        } else {
            "proven optimal"
        }
    );
    if let Some(c) = &report.classifier {
        println!(
            "partition-side prediction: {} (s = {:?}), half-abelian: {}",
            c.predicted_max, c.s, c.half_abelian_predicted
        );
    }

    println!(
        "\nas JSON:\n{}",
        serde_json::to_string_pretty(&report).unwrap()
    );
}
