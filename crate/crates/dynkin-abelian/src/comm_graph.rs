//! The non-commutation graph on the root-vector basis of the degree-1
//! component: vertices are the degree-1 roots, and two vertices are joined
//! exactly when their root sum is again a root (the bracket of the two root
//! vectors is then nonzero). Abelian subspaces spanned by root vectors
//! correspond to independent sets.
//!
//! Adjacency is kept as fixed-width bit rows so the solver's candidate-set
//! intersections are one or two word operations; the largest graph the
//! embedded tables produce has 64 vertices.

use std::fmt::Write as _;

use crate::grading::{GOneBasis, Grading};
use crate::root_system::RootSystem;

/// Symmetric adjacency stored as one bit row per vertex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BitRows {
    n: usize,
    words_per_row: usize,
    bits: Vec<u64>,
}

impl BitRows {
    pub fn new(n: usize) -> Self {
        let words_per_row = n.div_ceil(64).max(1);
        BitRows {
            n,
            words_per_row,
            bits: vec![0; n * words_per_row],
        }
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn words_per_row(&self) -> usize {
        self.words_per_row
    }

    pub fn set(&mut self, u: usize, v: usize) {
        let base = u * self.words_per_row;
        self.bits[base + v / 64] |= 1u64 << (v % 64);
    }

    pub fn get(&self, u: usize, v: usize) -> bool {
        let base = u * self.words_per_row;
        self.bits[base + v / 64] >> (v % 64) & 1 == 1
    }

    pub fn row(&self, u: usize) -> &[u64] {
        let base = u * self.words_per_row;
        &self.bits[base..base + self.words_per_row]
    }
}

/// The graph itself: the vertex list keeps the root coefficient vectors so
/// the graph stays meaningful without the root system it came from.
#[derive(Clone, Debug)]
pub struct CommutationGraph {
    vertices: Vec<Vec<i32>>,
    adj: BitRows,
    edge_count: usize,
}

impl CommutationGraph {
    /// Builds the graph on the degree-1 basis: an edge wherever the sum of
    /// the two roots is again a root.
    pub fn build(g1: &GOneBasis, rs: &RootSystem) -> CommutationGraph {
        let vertices: Vec<Vec<i32>> = g1
            .indices()
            .iter()
            .map(|&i| rs.root(i).coeffs().to_vec())
            .collect();
        let n = vertices.len();
        let mut adj = BitRows::new(n);
        let mut edge_count = 0;
        let rank = rs.rank();
        let mut sum = vec![0i32; rank];
        for u in 0..n {
            for v in u + 1..n {
                for k in 0..rank {
                    sum[k] = vertices[u][k] + vertices[v][k];
                }
                if rs.contains(&sum) {
                    adj.set(u, v);
                    adj.set(v, u);
                    edge_count += 1;
                }
            }
        }
        CommutationGraph {
            vertices,
            adj,
            edge_count,
        }
    }

    /// Convenience: grade, take the degree-1 basis, build.
    pub fn from_grading(g: &Grading<'_>) -> CommutationGraph {
        CommutationGraph::build(&g.g1_basis(), g.root_system())
    }

    /// Builds a graph from an explicit edge list, for solver tests and
    /// tooling. Vertices carry their own index as a one-entry coefficient
    /// vector.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> CommutationGraph {
        let mut adj = BitRows::new(n);
        let mut edge_count = 0;
        for &(u, v) in edges {
            if u != v && !adj.get(u, v) {
                adj.set(u, v);
                adj.set(v, u);
                edge_count += 1;
            }
        }
        CommutationGraph {
            vertices: (0..n).map(|i| vec![i as i32]).collect(),
            adj,
            edge_count,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    /// Root coefficient vector of vertex `v`.
    pub fn vertex(&self, v: usize) -> &[i32] {
        &self.vertices[v]
    }

    pub fn vertices(&self) -> &[Vec<i32>] {
        &self.vertices
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        self.adj.get(u, v)
    }

    pub fn adjacency(&self) -> &BitRows {
        &self.adj
    }

    pub fn degree(&self, u: usize) -> usize {
        self.adj
            .row(u)
            .iter()
            .map(|w| w.count_ones() as usize)
            .sum()
    }

    pub fn neighbors(&self, u: usize) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&v| self.adjacent(u, v))
            .collect()
    }

    /// Degree sequence, sorted ascending.
    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut degs: Vec<usize> = (0..self.vertex_count()).map(|u| self.degree(u)).collect();
        degs.sort_unstable();
        degs
    }

    /// Plain adjacency-list dump, one line per vertex:
    /// `index <TAB> root coefficients <TAB> neighbor indices`.
    pub fn dump(&self) -> String {
        let mut out = String::new();
        for u in 0..self.vertex_count() {
            let coeffs: Vec<String> = self.vertices[u].iter().map(|c| c.to_string()).collect();
            let nbrs: Vec<String> = self.neighbors(u).iter().map(|v| v.to_string()).collect();
            let _ = writeln!(out, "{}\t{}\t{}", u, coeffs.join(" "), nbrs.join(" "));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grading::grade;
    use crate::orbit::WeightedDiagram;
    use crate::root_system::{Family, RootSystem, SimpleType};

    fn e6_graph(weights: Vec<u8>) -> CommutationGraph {
        let rs = RootSystem::build(SimpleType::new(Family::E6, 6).unwrap());
        let d = WeightedDiagram::new(rs.stype(), weights).unwrap();
        let g = grade(&rs, &d).unwrap();
        CommutationGraph::from_grading(&g)
    }

    #[test]
    fn e6_worked_examples_have_the_right_sizes() {
        let g = e6_graph(vec![1, 1, 0, 0, 0, 1]);
        assert_eq!(g.vertex_count(), 14);
        let g = e6_graph(vec![0, 1, 1, 0, 1, 0]);
        assert_eq!(g.vertex_count(), 10);
    }

    #[test]
    fn zero_orbit_graph_is_empty() {
        let rs = RootSystem::build(SimpleType::new(Family::A, 3).unwrap());
        let d = WeightedDiagram::new(rs.stype(), vec![0, 0, 0]).unwrap();
        let g = grade(&rs, &d).unwrap();
        let graph = CommutationGraph::from_grading(&g);
        assert_eq!(graph.vertex_count(), 0);
        assert_eq!(graph.edge_count(), 0);
    }

    #[test]
    fn edges_certify_degree_two_sums() {
        let rs = RootSystem::build(SimpleType::new(Family::E6, 6).unwrap());
        let d = WeightedDiagram::new(rs.stype(), vec![1, 1, 0, 0, 0, 1]).unwrap();
        let g = grade(&rs, &d).unwrap();
        let graph = CommutationGraph::from_grading(&g);
        for u in 0..graph.vertex_count() {
            assert!(!graph.adjacent(u, u), "self-loop at {u}");
            for v in 0..graph.vertex_count() {
                assert_eq!(graph.adjacent(u, v), graph.adjacent(v, u));
                if graph.adjacent(u, v) {
                    let sum: Vec<i32> = graph
                        .vertex(u)
                        .iter()
                        .zip(graph.vertex(v))
                        .map(|(a, b)| a + b)
                        .collect();
                    let idx = rs.root_index(&sum).expect("edge sum must be a root");
                    assert_eq!(g.degree(idx), 2);
                }
            }
        }
    }

    #[test]
    fn dump_format_is_line_per_vertex() {
        let g = e6_graph(vec![1, 1, 0, 0, 0, 1]);
        let dump = g.dump();
        assert_eq!(dump.lines().count(), 14);
        let first = dump.lines().next().unwrap();
        let fields: Vec<&str> = first.split('\t').collect();
        assert_eq!(fields.len(), 3);
        assert_eq!(fields[0], "0");
        assert_eq!(fields[1].split_whitespace().count(), 6);
    }
}
