//! Assembled report for a single orbit or diagram: parity, grading
//! dimensions, the exact maximum abelian dimension with a witness, and the
//! partition-side prediction for classical inputs.

use serde::{Deserialize, Serialize};

use crate::classify::{self, ClassifierReport};
use crate::comm_graph::CommutationGraph;
use crate::grading::{check_g0_generation, grade};
use crate::mis::{enumerate_independent_sets, max_independent_set};
use crate::orbit::{partition_to_diagram, ClassicalOrbit, ParityClass, WeightedDiagram};
use crate::root_system::RootSystem;

#[derive(Clone, Debug, Serialize, Deserialize, PartialEq, Eq)]
pub struct MisReport {
    pub size: usize,
    /// Witness roots as coefficient vectors over the simple roots.
    pub witness: Vec<Vec<i32>>,
    pub proven_optimal: bool,
    pub capped_by_bound: bool,
}

#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct OrbitReport {
    pub stype: String,
    pub partition: Option<String>,
    pub parity: ParityClass,
    pub diagram: String,
    /// `(degree, dimension)` pairs for every nonzero component.
    pub dims: Vec<(i32, usize)>,
    pub dim_g1: usize,
    pub g0_generates_g1: bool,
    pub mis: MisReport,
    /// Partition-side prediction; classical inputs only.
    pub classifier: Option<ClassifierReport>,
    /// Independent sets of the requested cardinality, when enumeration was
    /// asked for.
    pub enumerated: Option<Vec<Vec<usize>>>,
}

/// Options for building a report.
#[derive(Clone, Copy, Debug, Default)]
pub struct ReportOptions {
    /// Pass the theoretical half bound to the solver as a cap.
    pub cap_half: bool,
    /// Enumerate all independent sets of this cardinality.
    pub enumerate: Option<usize>,
}

/// Builds the full report for a diagram, with the classical prediction
/// attached when the orbit is known.
pub fn diagram_report(
    d: &WeightedDiagram,
    orbit: Option<&ClassicalOrbit>,
    options: ReportOptions,
) -> OrbitReport {
    let rs = RootSystem::build(d.stype());
    let grading = grade(&rs, d).expect("report diagram matches its own type");
    let graph = CommutationGraph::from_grading(&grading);
    let dim_g1 = grading.dim_g1();
    let cap = if options.cap_half {
        Some(dim_g1 / 2)
    } else {
        None
    };
    let mis = max_independent_set(&graph, cap);
    let witness = mis
        .witness
        .iter()
        .map(|&v| graph.vertex(v).to_vec())
        .collect();
    let enumerated = options.enumerate.map(|d| {
        enumerate_independent_sets(&graph, d)
            .map(|it| it.collect())
            .unwrap_or_default()
    });
    OrbitReport {
        stype: d.stype().to_string(),
        partition: orbit.map(|o| o.partition().to_string()),
        parity: d.parity_class(),
        diagram: d.to_string(),
        dims: grading.dims().iter().map(|(&j, &n)| (j, n)).collect(),
        dim_g1,
        g0_generates_g1: check_g0_generation(&grading, d),
        mis: MisReport {
            size: mis.size,
            witness,
            proven_optimal: mis.proven_optimal,
            capped_by_bound: mis.capped_by_bound,
        },
        classifier: orbit.map(classify::report),
        enumerated,
    }
}

/// Report for a classical orbit given by its partition.
pub fn orbit_report(orbit: &ClassicalOrbit, options: ReportOptions) -> OrbitReport {
    let d = partition_to_diagram(orbit);
    diagram_report(&d, Some(orbit), options)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::{ClassicalFamily, Partition};

    #[test]
    fn report_for_the_d6_worked_orbit() {
        let orbit = ClassicalOrbit::new(
            ClassicalFamily::D,
            Partition::new(vec![5, 3, 2, 2]).unwrap(),
        )
        .unwrap();
        let r = orbit_report(&orbit, ReportOptions::default());
        assert_eq!(r.diagram, "2 0 1 0 1 1");
        assert_eq!(r.dim_g1, 8);
        assert_eq!(r.mis.size, 4);
        assert_eq!(r.parity, ParityClass::Odd);
        assert!(r.g0_generates_g1);
        let c = r.classifier.as_ref().unwrap();
        assert_eq!(c.predicted_max, r.mis.size);
    }

    #[test]
    fn json_roundtrip_reproduces_identical_values() {
        let orbit = ClassicalOrbit::new(ClassicalFamily::C, Partition::new(vec![2, 1, 1]).unwrap())
            .unwrap();
        let r = orbit_report(
            &orbit,
            ReportOptions {
                cap_half: true,
                enumerate: Some(1),
            },
        );
        let json = serde_json::to_string(&r).unwrap();
        let back: OrbitReport = serde_json::from_str(&json).unwrap();
        assert_eq!(serde_json::to_string(&back).unwrap(), json);
        // re-verifying the parsed record reproduces the same values
        let again = orbit_report(
            &orbit,
            ReportOptions {
                cap_half: true,
                enumerate: Some(1),
            },
        );
        assert_eq!(back.mis, again.mis);
        assert_eq!(back.dims, again.dims);
    }
}
