//! Strictly odd reduction of odd nilpotent orbits.
//!
//! Erasing every weight-2 node of a weighted Dynkin diagram leaves a disjoint
//! union of subdiagrams; for a genuine orbit all but one of them carry only
//! zero weights, and the one nonzero component is the weighted diagram of a
//! strictly odd orbit in the corresponding diagram subalgebra. The degree-1
//! component of the grading is unchanged by this passage, so every question
//! about abelian subspaces of `g_1` can be answered on the reduction.
//!
//! For classical types the same move reads off the partition: with `k` the
//! largest part whose parity differs from the top block's, every part above
//! `k` collapses to `k+1`, keeping the total multiplicity.

use std::fmt;

use thiserror::Error;

use crate::orbit::{
    partition_to_diagram, ClassicalFamily, ClassicalOrbit, ParityClass, Partition, WeightedDiagram,
};
use crate::root_system::{Family, SimpleType};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ReductionError {
    #[error("diagram has {0} components with nonzero weights after erasing the 2s; a genuine orbit diagram has exactly one")]
    MultipleNonzeroComponents(usize),
    #[error("surviving component is not the diagram of a simple type")]
    UnrecognizedShape,
    #[error("orbit is {0}, reduction applies to odd orbits only")]
    NotOdd(ParityClass),
}

/// The surviving component of an odd diagram after erasing its weight-2
/// nodes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ReductionResult {
    /// Simple type of the component.
    pub subtype: SimpleType,
    /// Weights on the component, in the subtype's own node order.
    pub subdiagram: WeightedDiagram,
    /// `embedding[i]` is the original node index of subdiagram node `i`.
    pub embedding: Vec<usize>,
}

impl fmt::Display for ReductionResult {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.subtype, self.subdiagram)
    }
}

/// Outcome of reducing a diagram.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ReductionOutcome {
    Reduced(ReductionResult),
    /// The diagram has 1s but no 2s; it is its own reduction.
    AlreadyStrictlyOdd,
    /// The diagram has no 1s; `g_1` is zero and there is nothing to reduce.
    EvenOrbit,
}

/// Erases all weight-2 nodes and identifies the unique component carrying
/// nonzero weights.
pub fn reduce_diagram(d: &WeightedDiagram) -> Result<ReductionOutcome, ReductionError> {
    match d.parity_class() {
        ParityClass::Even => return Ok(ReductionOutcome::EvenOrbit),
        ParityClass::StrictlyOdd => return Ok(ReductionOutcome::AlreadyStrictlyOdd),
        ParityClass::Odd => {}
    }
    let stype = d.stype();
    let weights = d.weights();
    let n = stype.rank();
    let surviving: Vec<usize> = (0..n).filter(|&i| weights[i] != 2).collect();

    // connected components of the induced subgraph
    let edges = stype.diagram_edges();
    let mut component = vec![usize::MAX; n];
    let mut comp_count = 0;
    for &start in &surviving {
        if component[start] != usize::MAX {
            continue;
        }
        let id = comp_count;
        comp_count += 1;
        let mut stack = vec![start];
        component[start] = id;
        while let Some(u) = stack.pop() {
            for &(a, b) in &edges {
                let other = match (a == u, b == u) {
                    (true, _) => b,
                    (_, true) => a,
                    _ => continue,
                };
                if weights[other] != 2 && component[other] == usize::MAX {
                    component[other] = id;
                    stack.push(other);
                }
            }
        }
    }

    let nonzero_components: Vec<usize> = (0..comp_count)
        .filter(|&id| {
            surviving
                .iter()
                .any(|&i| component[i] == id && weights[i] != 0)
        })
        .collect();
    match nonzero_components.len() {
        1 => {}
        m => return Err(ReductionError::MultipleNonzeroComponents(m)),
    }
    let id = nonzero_components[0];
    let nodes: Vec<usize> = surviving
        .iter()
        .copied()
        .filter(|&i| component[i] == id)
        .collect();

    let (subtype, embedding) = identify_component(stype, &nodes, weights)?;
    let subweights: Vec<u8> = embedding.iter().map(|&i| weights[i]).collect();
    let subdiagram =
        WeightedDiagram::new(subtype, subweights).expect("component weights stay in {0,1,2}");
    Ok(ReductionOutcome::Reduced(ReductionResult {
        subtype,
        subdiagram,
        embedding,
    }))
}

/// Identifies the simple type of a connected induced subdiagram and orders
/// its nodes in the subtype's Bourbaki numbering.
///
/// Erasing nodes can strand pieces whose family differs from the parent's
/// (a C3 tail inside F4, say), so the shape is read off the surviving
/// subgraph itself: edge multiplicities and the long/short split decide
/// between A, B, C, F4 and G2 on paths, and branch lengths decide between
/// D and E on forks.
fn identify_component(
    parent: SimpleType,
    nodes: &[usize],
    weights: &[u8],
) -> Result<(SimpleType, Vec<usize>), ReductionError> {
    let nodes_set = nodes.to_vec();
    let edges: Vec<(usize, usize)> = parent
        .diagram_edges()
        .into_iter()
        .filter(|&(a, b)| nodes_set.contains(&a) && nodes_set.contains(&b))
        .collect();
    let short = parent.short_nodes();
    let cartan = parent.cartan_matrix();
    let neighbors = |u: usize| -> Vec<usize> {
        edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == u {
                    Some(b)
                } else if b == u {
                    Some(a)
                } else {
                    None
                }
            })
            .collect()
    };

    let k = nodes.len();
    if k == 1 {
        let t = SimpleType::new(Family::A, 1).expect("A1 is valid");
        return Ok((t, nodes_set));
    }

    // a D-parent component keeping both fork tips is a D-piece even when
    // the fork degenerates to three nodes and looks like a path
    if parent.family() == Family::D && k == 3 {
        let pr = parent.rank();
        let tips = [pr - 2, pr - 1];
        if tips.iter().all(|t| nodes_set.contains(t)) {
            let center = nodes_set
                .iter()
                .copied()
                .find(|u| !tips.contains(u))
                .expect("three nodes, two of them tips");
            let (mut t1, mut t2) = (tips[0], tips[1]);
            if (weights[t1], t1) > (weights[t2], t2) {
                std::mem::swap(&mut t1, &mut t2);
            }
            let t = SimpleType::new(Family::D, 3).expect("D3 is valid");
            return Ok((t, vec![center, t1, t2]));
        }
    }

    let branch_nodes: Vec<usize> = nodes_set
        .iter()
        .copied()
        .filter(|&u| neighbors(u).len() >= 3)
        .collect();

    if branch_nodes.is_empty() {
        // a path; find its two ends
        let ends: Vec<usize> = nodes_set
            .iter()
            .copied()
            .filter(|&u| neighbors(u).len() == 1)
            .collect();
        debug_assert_eq!(ends.len(), 2);
        let walk = |start: usize| -> Vec<usize> {
            let mut path = vec![start];
            let mut prev = usize::MAX;
            let mut cur = start;
            while path.len() < k {
                let next = neighbors(cur)
                    .into_iter()
                    .find(|&v| v != prev)
                    .expect("path walk cannot dead-end");
                path.push(next);
                prev = cur;
                cur = next;
            }
            path
        };

        let has_triple = edges
            .iter()
            .any(|&(a, b)| cartan[a][b].min(cartan[b][a]) == -3);
        if has_triple {
            // G2: short node first
            let order = if short[ends[0]] {
                walk(ends[0])
            } else {
                walk(ends[1])
            };
            let t = SimpleType::new(Family::G2, 2).expect("G2 is valid");
            return Ok((t, order));
        }

        let n_short = nodes_set.iter().filter(|&&u| short[u]).count();
        let n_long = k - n_short;
        if n_short == 0 || n_long == 0 {
            // simply laced path: type A, oriented from the smaller end index
            let start = ends.into_iter().min().expect("two ends exist");
            let t = SimpleType::new(Family::A, k).map_err(|_| ReductionError::UnrecognizedShape)?;
            return Ok((t, walk(start)));
        }
        if k == 2 {
            // one long and one short node: B2 and C2 coincide as shapes, so
            // the parent decides the labeling (short node last for B, long
            // node last for C)
            let family = if parent.family() == Family::C {
                Family::C
            } else {
                Family::B
            };
            let start = if (family == Family::B) == short[ends[0]] {
                ends[1]
            } else {
                ends[0]
            };
            let t = SimpleType::new(family, 2).expect("rank 2 is valid");
            return Ok((t, walk(start)));
        }
        if n_short == 1 {
            // B: long chain ending in the single short node
            let order = if short[ends[1]] {
                walk(ends[0])
            } else {
                walk(ends[1])
            };
            if !short[*order.last().expect("nonempty")] {
                return Err(ReductionError::UnrecognizedShape);
            }
            let t = SimpleType::new(Family::B, k).map_err(|_| ReductionError::UnrecognizedShape)?;
            return Ok((t, order));
        }
        if n_long == 1 {
            // C: short chain ending in the single long node
            let order = if short[ends[0]] {
                walk(ends[0])
            } else {
                walk(ends[1])
            };
            if short[*order.last().expect("nonempty")] {
                return Err(ReductionError::UnrecognizedShape);
            }
            let t = SimpleType::new(Family::C, k).map_err(|_| ReductionError::UnrecognizedShape)?;
            return Ok((t, order));
        }
        if n_short == 2 && n_long == 2 {
            // F4 shape: start from the long end
            let order = if short[ends[0]] {
                walk(ends[1])
            } else {
                walk(ends[0])
            };
            let t = SimpleType::new(Family::F4, 4).expect("F4 is valid");
            return Ok((t, order));
        }
        return Err(ReductionError::UnrecognizedShape);
    }

    if branch_nodes.len() > 1 {
        return Err(ReductionError::UnrecognizedShape);
    }

    // a fork: collect the three branches hanging off the center
    let center = branch_nodes[0];
    let mut branches: Vec<Vec<usize>> = Vec::new();
    for first in neighbors(center) {
        let mut branch = vec![first];
        let mut prev = center;
        let mut cur = first;
        loop {
            let nbrs: Vec<usize> = neighbors(cur).into_iter().filter(|&v| v != prev).collect();
            match nbrs.len() {
                0 => break,
                1 => {
                    prev = cur;
                    cur = nbrs[0];
                    branch.push(cur);
                }
                _ => return Err(ReductionError::UnrecognizedShape),
            }
        }
        branches.push(branch);
    }
    if branches.len() != 3 {
        return Err(ReductionError::UnrecognizedShape);
    }
    branches.sort_by_key(|b| b.len());
    let lens = (branches[0].len(), branches[1].len(), branches[2].len());

    match lens {
        (1, 1, _) => {
            // D_k: the long branch read from its far end, then the center,
            // then the two fork tips (ascending weight, genuine fork weights
            // satisfy w_{n-1} <= w_n after this ordering)
            let t = SimpleType::new(Family::D, k).map_err(|_| ReductionError::UnrecognizedShape)?;
            let mut order: Vec<usize> = branches[2].iter().rev().copied().collect();
            order.push(center);
            let (mut t1, mut t2) = (branches[0][0], branches[1][0]);
            if (weights[t1], t1) > (weights[t2], t2) {
                std::mem::swap(&mut t1, &mut t2);
            }
            order.push(t1);
            order.push(t2);
            Ok((t, order))
        }
        (1, 2, m) if (2..=4).contains(&m) => {
            // E_{m+4}: chain from the far end of the 2-branch through the
            // center down the long branch, with the 1-branch as node 2
            let family = match m {
                2 => Family::E6,
                3 => Family::E7,
                4 => Family::E8,
                _ => unreachable!(),
            };
            let t = SimpleType::new(family, k).expect("rank matches family");
            let make_order = |two_branch: &[usize], long_branch: &[usize], tip: usize| {
                let mut order = vec![two_branch[1], tip, two_branch[0], center];
                order.extend(long_branch.iter().copied());
                order
            };
            if m == 2 {
                // both non-tip branches have length 2; take the assignment
                // with the lexicographically smaller weight sequence
                let a = make_order(&branches[1], &branches[2], branches[0][0]);
                let b = make_order(&branches[2], &branches[1], branches[0][0]);
                let wa: Vec<u8> = a.iter().map(|&i| weights[i]).collect();
                let wb: Vec<u8> = b.iter().map(|&i| weights[i]).collect();
                Ok((t, if wa <= wb { a } else { b }))
            } else {
                Ok((t, make_order(&branches[1], &branches[2], branches[0][0])))
            }
        }
        _ => Err(ReductionError::UnrecognizedShape),
    }
}

/// Partition-level strictly odd reduction.
///
/// Requires an odd (not strictly odd, not even) orbit: with `l` the smallest
/// part of the leading parity block and `k` the largest part below it, all
/// parts above `k` become `k+1`, keeping their total count. The result is
/// strictly odd and valid for the same family.
pub fn reduce_partition(orbit: &ClassicalOrbit) -> Result<ClassicalOrbit, ReductionError> {
    match orbit.parity_class() {
        ParityClass::Odd => {}
        other => return Err(ReductionError::NotOdd(other)),
    }
    let p = orbit.partition();
    let distinct = p.distinct_parts();
    let mu = distinct[0];
    let k = *distinct
        .iter()
        .find(|&&v| v % 2 != mu % 2)
        .expect("odd orbits mix parities");
    let above: usize = distinct
        .iter()
        .filter(|&&v| v > k)
        .map(|&v| p.multiplicity(v))
        .sum();
    let mut parts: Vec<u32> = vec![k + 1; above];
    parts.extend(p.parts().iter().copied().filter(|&v| v <= k));
    let reduced = Partition::new(parts).expect("reduction keeps parts positive");
    let out =
        ClassicalOrbit::new(orbit.family(), reduced).expect("reduction preserves family validity");
    debug_assert_eq!(out.parity_class(), ParityClass::StrictlyOdd);
    Ok(out)
}

/// Idempotent variant: strictly odd orbits pass through unchanged.
pub fn reduce_partition_or_self(orbit: &ClassicalOrbit) -> Result<ClassicalOrbit, ReductionError> {
    match orbit.parity_class() {
        ParityClass::StrictlyOdd => Ok(orbit.clone()),
        ParityClass::Odd => reduce_partition(orbit),
        ParityClass::Even => Err(ReductionError::NotOdd(ParityClass::Even)),
    }
}

/// Checks that the diagram-level and partition-level reductions of an odd
/// classical orbit agree: same subtype, same weights.
pub fn crosscheck(orbit: &ClassicalOrbit) -> Result<bool, ReductionError> {
    let reduced = reduce_partition(orbit)?;
    let expected = partition_to_diagram(&reduced);
    match reduce_diagram(&partition_to_diagram(orbit))? {
        ReductionOutcome::Reduced(r) => {
            Ok(r.subtype == expected.stype() && r.subdiagram == expected)
        }
        _ => Ok(false),
    }
}

/// Recovers the classical orbit whose diagram equals the given strictly odd
/// diagram, by exhaustive search over valid partitions of the matching `N`.
pub fn partition_from_diagram(d: &WeightedDiagram) -> Option<ClassicalOrbit> {
    let family = ClassicalFamily::from_family(d.stype().family())?;
    let rank = d.stype().rank() as u32;
    let n = match family {
        ClassicalFamily::A => rank + 1,
        ClassicalFamily::B => 2 * rank + 1,
        ClassicalFamily::C | ClassicalFamily::D => 2 * rank,
    };
    for p in crate::scan::partitions_of(n) {
        if let Ok(orbit) = ClassicalOrbit::new(family, p) {
            if partition_to_diagram(&orbit) == *d {
                return Some(orbit);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::orbit::Partition;

    fn orbit(family: ClassicalFamily, parts: &[u32]) -> ClassicalOrbit {
        ClassicalOrbit::new(family, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn d6_worked_reduction() {
        let o = orbit(ClassicalFamily::D, &[5, 3, 2, 2]);
        let d = partition_to_diagram(&o);
        assert_eq!(d.weights(), &[2, 0, 1, 0, 1, 1]);
        let out = reduce_diagram(&d).unwrap();
        match out {
            ReductionOutcome::Reduced(r) => {
                assert_eq!(r.subtype.to_string(), "D5");
                assert_eq!(r.subdiagram.weights(), &[0, 1, 0, 1, 1]);
                assert_eq!(r.embedding, vec![1, 2, 3, 4, 5]);
            }
            other => panic!("expected reduction, got {other:?}"),
        }
    }

    #[test]
    fn partition_level_examples() {
        let o = orbit(ClassicalFamily::D, &[5, 3, 2, 2]);
        let r = reduce_partition(&o).unwrap();
        assert_eq!(r.partition().parts(), &[3, 3, 2, 2]);
        assert_eq!(r.rank(), 5);

        // strictly odd input is refused without the idempotent variant
        let so = orbit(ClassicalFamily::C, &[2, 1, 1]);
        assert_eq!(
            reduce_partition(&so),
            Err(ReductionError::NotOdd(ParityClass::StrictlyOdd))
        );
        assert_eq!(reduce_partition_or_self(&so).unwrap(), so);

        let b = orbit(ClassicalFamily::B, &[5, 2, 2]);
        let r = reduce_partition(&b).unwrap();
        assert_eq!(r.partition().parts(), &[3, 2, 2]);
    }

    #[test]
    fn crosscheck_worked_examples() {
        assert!(crosscheck(&orbit(ClassicalFamily::D, &[5, 3, 2, 2])).unwrap());
        assert!(crosscheck(&orbit(ClassicalFamily::B, &[5, 2, 2])).unwrap());
        // type A trims both ends symmetrically
        assert!(crosscheck(&orbit(ClassicalFamily::A, &[4, 1])).unwrap());
    }

    #[test]
    fn strictly_odd_and_even_outcomes() {
        let so = partition_to_diagram(&orbit(ClassicalFamily::D, &[3, 3, 2, 2]));
        assert_eq!(
            reduce_diagram(&so).unwrap(),
            ReductionOutcome::AlreadyStrictlyOdd
        );
        let even = partition_to_diagram(&orbit(ClassicalFamily::C, &[2, 2]));
        assert_eq!(reduce_diagram(&even).unwrap(), ReductionOutcome::EvenOrbit);
    }

    #[test]
    fn multiple_nonzero_components_rejected() {
        // 1 2 1 is no orbit diagram: erasing the middle 2 leaves two
        // nonzero singletons
        let t = SimpleType::new(Family::A, 3).unwrap();
        let d = WeightedDiagram::new(t, vec![1, 2, 1]).unwrap();
        assert_eq!(
            reduce_diagram(&d),
            Err(ReductionError::MultipleNonzeroComponents(2))
        );
    }

    #[test]
    fn type_a_reduction_trims_symmetrically() {
        let o = orbit(ClassicalFamily::A, &[4, 1]);
        let d = partition_to_diagram(&o);
        assert_eq!(d.weights(), &[2, 1, 1, 2]);
        match reduce_diagram(&d).unwrap() {
            ReductionOutcome::Reduced(r) => {
                assert_eq!(r.subtype.to_string(), "A2");
                assert_eq!(r.subdiagram.weights(), &[1, 1]);
            }
            other => panic!("expected reduction, got {other:?}"),
        }
    }

    #[test]
    fn d3_piece_keeps_fork_shape() {
        // D5 [4,4,1,1] reduces to the D3 orbit [2,2,1,1]
        let o = orbit(ClassicalFamily::D, &[4, 4, 1, 1]);
        let d = partition_to_diagram(&o);
        assert_eq!(d.weights(), &[0, 2, 0, 1, 1]);
        match reduce_diagram(&d).unwrap() {
            ReductionOutcome::Reduced(r) => {
                assert_eq!(r.subtype.to_string(), "D3");
                assert_eq!(r.subdiagram.weights(), &[0, 1, 1]);
            }
            other => panic!("expected reduction, got {other:?}"),
        }
        assert!(crosscheck(&o).unwrap());
    }

    #[test]
    fn recover_partition_from_strictly_odd_diagram() {
        let o = orbit(ClassicalFamily::D, &[3, 3, 2, 2]);
        let d = partition_to_diagram(&o);
        assert_eq!(partition_from_diagram(&d), Some(o));
    }
}
