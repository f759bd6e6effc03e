//! Exhaustive scans over classical orbits: enumerate every valid partition
//! per rank, run the closed-form prediction against the exact graph search,
//! and report a verdict per orbit.

use serde::{Deserialize, Serialize};

use crate::classify;
use crate::comm_graph::CommutationGraph;
use crate::grading::{grade, grade_classical};
use crate::mis::max_independent_set;
use crate::orbit::{partition_to_diagram, ClassicalFamily, ClassicalOrbit, Partition};
use crate::root_system::RootSystem;

/// All partitions of `n`, in decreasing lexicographic order.
pub fn partitions_of(n: u32) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut current: Vec<u32> = Vec::new();
    fn go(remaining: u32, max_part: u32, current: &mut Vec<u32>, out: &mut Vec<Partition>) {
        if remaining == 0 {
            out.push(Partition::new(current.clone()).expect("nonempty positive parts"));
            return;
        }
        let top = remaining.min(max_part);
        for part in (1..=top).rev() {
            current.push(part);
            go(remaining - part, part, current, out);
            current.pop();
        }
    }
    if n > 0 {
        go(n, n, &mut current, &mut out);
    }
    out
}

/// Every valid orbit of the family at exactly this rank.
pub fn orbits_of_rank(family: ClassicalFamily, rank: usize) -> Vec<ClassicalOrbit> {
    let n = match family {
        ClassicalFamily::A => rank as u32 + 1,
        ClassicalFamily::B => 2 * rank as u32 + 1,
        ClassicalFamily::C | ClassicalFamily::D => 2 * rank as u32,
    };
    partitions_of(n)
        .into_iter()
        .filter_map(|p| ClassicalOrbit::new(family, p).ok())
        .collect()
}

/// One scanned orbit: closed-form prediction next to the exact graph value.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ScanRow {
    pub family: ClassicalFamily,
    pub rank: usize,
    pub partition: String,
    pub dim_g1: usize,
    pub predicted_max: usize,
    pub graph_max: usize,
    pub half_abelian: bool,
    pub agree: bool,
}

/// Scans every orbit of every rank up to `max_rank`, comparing the
/// partition-side prediction with the exact maximum independent set of the
/// commutation graph. Root systems are built once per rank.
pub fn scan_family(family: ClassicalFamily, max_rank: usize) -> Vec<ScanRow> {
    let min_rank = if family == ClassicalFamily::D { 3 } else { 1 };
    let mut rows = Vec::new();
    for rank in min_rank..=max_rank {
        let orbits = orbits_of_rank(family, rank);
        if orbits.is_empty() {
            continue;
        }
        let rs = RootSystem::build(orbits[0].simple_type());
        for orbit in orbits {
            rows.push(scan_orbit(&rs, &orbit));
        }
    }
    rows
}

fn scan_orbit(rs: &RootSystem, orbit: &ClassicalOrbit) -> ScanRow {
    let diagram = partition_to_diagram(orbit);
    let grading = grade(rs, &diagram).expect("diagram type matches root system");
    let eps = grade_classical(orbit);
    debug_assert_eq!(grading.dims(), eps.dims());
    let dim_g1 = grading.dim_g1();
    let graph = CommutationGraph::from_grading(&grading);
    let mis = max_independent_set(&graph, Some(dim_g1 / 2));
    let predicted = classify::predicted_max(orbit);
    ScanRow {
        family: orbit.family(),
        rank: orbit.rank(),
        partition: orbit.partition().to_string(),
        dim_g1,
        predicted_max: predicted,
        graph_max: mis.size,
        half_abelian: dim_g1 > 0 && mis.size * 2 == dim_g1,
        agree: predicted == mis.size,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn partition_counts() {
        assert_eq!(partitions_of(1).len(), 1);
        assert_eq!(partitions_of(5).len(), 7);
        assert_eq!(partitions_of(10).len(), 42);
    }

    #[test]
    fn orbit_enumeration_respects_validity() {
        // C2: partitions of 4 with odd parts of even multiplicity
        let orbits = orbits_of_rank(ClassicalFamily::C, 2);
        let parts: Vec<String> = orbits.iter().map(|o| o.partition().to_string()).collect();
        assert_eq!(parts, vec!["4", "2,2", "2,1,1", "1,1,1,1"]);
    }

    #[test]
    fn d3_scan_contains_worked_row() {
        let rows = scan_family(ClassicalFamily::D, 3);
        let row = rows
            .iter()
            .find(|r| r.partition == "2,2,1,1")
            .expect("orbit [2,2,1,1] exists in D3");
        assert_eq!(row.dim_g1, 4);
        assert_eq!(row.graph_max, 2);
        assert!(row.half_abelian);
        assert!(row.agree);
    }

    #[test]
    fn small_scans_agree_everywhere() {
        for family in [ClassicalFamily::C, ClassicalFamily::B] {
            for row in scan_family(family, 3) {
                assert!(row.agree, "{family}{}: {}", row.rank, row.partition);
            }
        }
        for row in scan_family(ClassicalFamily::A, 4) {
            assert!(row.agree, "A{}: {}", row.rank, row.partition);
            assert!(row.dim_g1 % 2 == 0);
            assert_eq!(row.graph_max * 2, row.dim_g1);
        }
    }
}
