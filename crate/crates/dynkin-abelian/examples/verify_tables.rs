//! Recompute every embedded table row from scratch and compare.
//!
//! ```bash
//! cargo run --release --example verify_tables
//! ```

use std::time::Instant;

use dynkin_abelian::tables::verify_all;

fn main() {
    let start = Instant::now();
    let reports = verify_all();
    let mut mismatches = 0;
    for r in &reports {
        println!("{r}");
        if !r.ok() {
            mismatches += 1;
        }
    }
    println!(
        "\n{} rows verified, {} mismatches, {:.2?}",
        reports.len(),
        mismatches,
        start.elapsed()
    );
    std::process::exit(if mismatches == 0 { 0 } else { 1 });
}
