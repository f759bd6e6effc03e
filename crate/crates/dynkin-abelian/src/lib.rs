//! Dynkin gradings of simple Lie algebras and maximal abelian subspaces in
//! their degree-one part.
//!
//! A nilpotent element of a simple Lie algebra induces a grading
//! `g = ⊕ g_j` through its sl2-triple, recorded combinatorially by a
//! weighted Dynkin diagram (weights 0, 1, 2 on the nodes). This crate
//! computes that grading from either a weighted diagram (any simple type) or
//! a partition (classical types), builds the non-commutation graph on the
//! root-vector basis of `g_1`, and determines the largest abelian subspace
//! of `g_1` by exact maximum-independent-set search. For the classical types
//! the same maximum is predicted in closed form from the partition, and the
//! two routes are cross-checked against each other and against embedded
//! reference tables for the exceptional types.
//!
//! Entry points:
//!
//! - [`RootSystem::build`] enumerates a root system over the simple-root basis.
//! - [`partition_to_diagram`] converts a classical orbit to its weighted diagram.
//! - [`grade`] / [`grade_classical`] compute the grading two independent ways.
//! - [`CommutationGraph::build`] and [`max_independent_set`] find the largest
//!   abelian subspace dimension, with witness and optimality certificate.
//! - [`reduce_diagram`] / [`reduce_partition`] compute the strictly odd
//!   reduction of an odd orbit.
//! - [`classify`](mod@classify) predicts the maximum for classical types from
//!   the partition alone.
//! - [`tables`](mod@tables) carries the embedded reference tables and
//!   verifies every row end to end.
//!
//! The `examples/` directory has one runnable example per capability; the
//! thin `dynkin-abelian` binary exposes the same operations as subcommands.

pub mod classify;
pub mod comm_graph;
pub mod grading;
pub mod mis;
pub mod orbit;
pub mod reduction;
pub mod report;
pub mod root_system;
pub mod scan;
pub mod tables;

pub use comm_graph::CommutationGraph;
pub use grading::{check_g0_generation, grade, grade_classical, EpsGrading, GOneBasis, Grading};
pub use mis::{
    brute_force_mis, enumerate_independent_sets, max_independent_set, verify_witness, MisResult,
};
pub use orbit::{
    diagram_parity_class, h_eigenvalues, h_weights, parity_class, partition_to_diagram,
    ClassicalFamily, ClassicalOrbit, HWeights, ParityClass, Partition, WeightedDiagram,
};
pub use reduction::{
    crosscheck, reduce_diagram, reduce_partition, ReductionOutcome, ReductionResult,
};
pub use root_system::{Family, Root, RootSystem, SimpleType};
