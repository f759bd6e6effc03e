//! Cross-module invariants: exhaustive checks on small ranks plus
//! randomized properties for the solver and the conversions.

use std::collections::HashMap;

use proptest::prelude::*;

use dynkin_abelian::classify::{dim_g1_from_s, s_values};
use dynkin_abelian::grading::{grade, grade_classical, EpsRoot};
use dynkin_abelian::mis::{
    brute_force_mis, enumerate_independent_sets, max_independent_set, verify_witness,
};
use dynkin_abelian::orbit::{
    diagram_parity_class, first_one_position, h_eigenvalues, parity_class, partition_to_diagram,
    ClassicalFamily, ClassicalOrbit, ParityClass, Partition,
};
use dynkin_abelian::root_system::{Family, RootSystem, SimpleType};
use dynkin_abelian::scan::{orbits_of_rank, partitions_of};
use dynkin_abelian::CommutationGraph;

fn all_classical_orbits(max_rank: usize) -> Vec<ClassicalOrbit> {
    let mut out = Vec::new();
    for family in [
        ClassicalFamily::A,
        ClassicalFamily::B,
        ClassicalFamily::C,
        ClassicalFamily::D,
    ] {
        let min_rank = if family == ClassicalFamily::D { 3 } else { 1 };
        for rank in min_rank..=max_rank {
            out.extend(orbits_of_rank(family, rank));
        }
    }
    out
}

#[test]
fn root_counts_up_to_rank_12() {
    for rank in 1..=12usize {
        for family in [Family::A, Family::B, Family::C, Family::D] {
            let Ok(stype) = SimpleType::new(family, rank) else {
                continue;
            };
            let rs = RootSystem::build(stype);
            assert_eq!(rs.len(), stype.root_count(), "{stype}");
        }
    }
}

#[test]
fn root_sum_lookup_matches_enumeration() {
    for stype in ["B3", "C3", "D4", "G2", "F4"] {
        let stype: SimpleType = stype.parse().unwrap();
        let rs = RootSystem::build(stype);
        let listed: std::collections::BTreeSet<Vec<i32>> =
            rs.roots().iter().map(|r| r.coeffs().to_vec()).collect();
        for a in rs.roots() {
            for b in rs.roots() {
                let sum: Vec<i32> = a
                    .coeffs()
                    .iter()
                    .zip(b.coeffs())
                    .map(|(x, y)| x + y)
                    .collect();
                assert_eq!(
                    rs.is_root(&sum).unwrap(),
                    listed.contains(&sum),
                    "{stype}: {a} + {b}"
                );
            }
        }
    }
}

#[test]
fn parity_classes_agree_up_to_rank_10() {
    for orbit in all_classical_orbits(10) {
        let d = partition_to_diagram(&orbit);
        assert_eq!(
            parity_class(orbit.partition()),
            diagram_parity_class(&d),
            "{orbit}"
        );
    }
}

#[test]
fn diagram_shape_rules_up_to_rank_10() {
    for orbit in all_classical_orbits(10) {
        let w = partition_to_diagram(&orbit).weights().to_vec();
        match orbit.family() {
            ClassicalFamily::A => {
                let mut rev = w.clone();
                rev.reverse();
                assert_eq!(w, rev, "{orbit}: type A diagram must be palindromic");
            }
            _ => {
                // no weight 1 may occur left of a weight 2
                if let Some(first_one) = w.iter().position(|&x| x == 1) {
                    assert!(
                        w[first_one..].iter().all(|&x| x != 2),
                        "{orbit}: weight 1 left of a 2 in {w:?}"
                    );
                }
            }
        }
    }
}

#[test]
fn first_one_formula_up_to_rank_10() {
    for orbit in all_classical_orbits(10) {
        let w = partition_to_diagram(&orbit).weights().to_vec();
        let actual = w.iter().position(|&x| x == 1).map(|i| i + 1);
        assert_eq!(
            first_one_position(orbit.partition()),
            actual,
            "{orbit}: diagram {w:?}"
        );
    }
}

#[test]
fn eigenvalue_multiplicities_match_ses_up_to_24() {
    for n in 1..=24u32 {
        for p in partitions_of(n) {
            let eigen = h_eigenvalues(&p);
            let mu = p.largest() as i32;
            let by_counting: Vec<usize> = (0..mu)
                .map(|k| eigen.iter().filter(|&&e| e == k).count())
                .collect();
            assert_eq!(s_values(&p), by_counting, "partition {p}");
            // the eigenvalue multiset is symmetric under negation
            for k in 1..=mu {
                assert_eq!(
                    eigen.iter().filter(|&&e| e == k).count(),
                    eigen.iter().filter(|&&e| e == -k).count(),
                    "partition {p}, eigenvalue {k}"
                );
            }
        }
    }
}

#[test]
fn both_grading_routes_agree_up_to_rank_8() {
    let mut systems: HashMap<SimpleType, RootSystem> = HashMap::new();
    for orbit in all_classical_orbits(8) {
        let rs = systems
            .entry(orbit.simple_type())
            .or_insert_with(|| RootSystem::build(orbit.simple_type()));
        let g = grade(rs, &partition_to_diagram(&orbit)).unwrap();
        let eps = grade_classical(&orbit);
        assert_eq!(g.dims(), eps.dims(), "{orbit}");
        for (&j, &d) in g.dims() {
            assert_eq!(g.dim(-j), d, "{orbit}: dims not symmetric at {j}");
        }
        if orbit.family() != ClassicalFamily::A {
            let s = s_values(orbit.partition());
            assert_eq!(g.dim_g1(), dim_g1_from_s(&s), "{orbit}: s-chain formula");
        }
    }
}

/// Two degree-1 epsilon-roots in eigenvalue layers that differ by at least
/// two never interact: their sum is checked against the epsilon root list
/// directly, independent of the simple-root machinery.
#[test]
fn distant_layers_commute() {
    for orbit in all_classical_orbits(6) {
        if orbit.family() == ClassicalFamily::A {
            continue;
        }
        let eps = grade_classical(&orbit);
        let h = eps.h();
        let n = h.len();
        let to_vec = |r: &EpsRoot| -> Vec<i32> {
            let mut v = vec![0i32; n];
            match *r {
                EpsRoot::Pair { i, j, si, sj } => {
                    v[i] = si as i32;
                    v[j] = sj as i32;
                }
                EpsRoot::Single { i, s } => v[i] = s as i32,
                EpsRoot::Double { i, s } => v[i] = 2 * s as i32,
            }
            v
        };
        let is_eps_root = |v: &[i32]| -> bool {
            let nz: Vec<i32> = v.iter().copied().filter(|&x| x != 0).collect();
            match orbit.family() {
                ClassicalFamily::B => {
                    (nz.len() == 2 && nz.iter().all(|x| x.abs() == 1))
                        || (nz.len() == 1 && nz[0].abs() == 1)
                }
                ClassicalFamily::C => {
                    (nz.len() == 2 && nz.iter().all(|x| x.abs() == 1))
                        || (nz.len() == 1 && nz[0].abs() == 2)
                }
                ClassicalFamily::D => nz.len() == 2 && nz.iter().all(|x| x.abs() == 1),
                ClassicalFamily::A => unreachable!(),
            }
        };
        let g1 = eps.g1_roots();
        for a in g1 {
            for b in g1 {
                let sum: Vec<i32> = to_vec(a)
                    .iter()
                    .zip(to_vec(b))
                    .map(|(x, y)| x + y)
                    .collect();
                let adjacent = is_eps_root(&sum);
                if (a.layer(h) - b.layer(h)).abs() >= 2 {
                    assert!(!adjacent, "{orbit}: {a:?} and {b:?} interact across layers");
                }
            }
        }
    }
}

/// The epsilon-space graph and the simple-root graph describe the same
/// orbit, so their sizes, edge counts and exact maxima coincide.
#[test]
fn eps_graph_matches_root_graph() {
    let mut systems: HashMap<SimpleType, RootSystem> = HashMap::new();
    for orbit in all_classical_orbits(5) {
        let eps = grade_classical(&orbit);
        let h = eps.h().to_vec();
        let n = h.len();
        let g1 = eps.g1_roots();
        let to_vec = |r: &EpsRoot| -> Vec<i32> {
            let mut v = vec![0i32; n];
            match *r {
                EpsRoot::Pair { i, j, si, sj } => {
                    v[i] = si as i32;
                    v[j] = sj as i32;
                }
                EpsRoot::Single { i, s } => v[i] = s as i32,
                EpsRoot::Double { i, s } => v[i] = 2 * s as i32,
            }
            v
        };
        let is_eps_root = |v: &[i32]| -> bool {
            let nz: Vec<i32> = v.iter().copied().filter(|&x| x != 0).collect();
            match orbit.family() {
                ClassicalFamily::A => {
                    v.iter().sum::<i32>() == 0 && nz.len() == 2 && nz.iter().all(|x| x.abs() == 1)
                }
                ClassicalFamily::B => {
                    (nz.len() == 2 && nz.iter().all(|x| x.abs() == 1))
                        || (nz.len() == 1 && nz[0].abs() == 1)
                }
                ClassicalFamily::C => {
                    (nz.len() == 2 && nz.iter().all(|x| x.abs() == 1))
                        || (nz.len() == 1 && nz[0].abs() == 2)
                }
                ClassicalFamily::D => nz.len() == 2 && nz.iter().all(|x| x.abs() == 1),
            }
        };
        let mut eps_edges = Vec::new();
        for (i, a) in g1.iter().enumerate() {
            for (j, b) in g1.iter().enumerate().skip(i + 1) {
                let sum: Vec<i32> = to_vec(a)
                    .iter()
                    .zip(to_vec(b))
                    .map(|(x, y)| x + y)
                    .collect();
                if is_eps_root(&sum) {
                    eps_edges.push((i, j));
                }
            }
        }
        let eps_graph = CommutationGraph::from_edges(g1.len(), &eps_edges);

        let rs = systems
            .entry(orbit.simple_type())
            .or_insert_with(|| RootSystem::build(orbit.simple_type()));
        let g = grade(rs, &partition_to_diagram(&orbit)).unwrap();
        let graph = CommutationGraph::from_grading(&g);

        assert_eq!(graph.vertex_count(), eps_graph.vertex_count(), "{orbit}");
        assert_eq!(graph.edge_count(), eps_graph.edge_count(), "{orbit}");
        assert_eq!(
            graph.degree_sequence(),
            eps_graph.degree_sequence(),
            "{orbit}"
        );
        assert_eq!(
            max_independent_set(&graph, None).size,
            max_independent_set(&eps_graph, None).size,
            "{orbit}"
        );
    }
}

fn arbitrary_graph() -> impl Strategy<Value = CommutationGraph> {
    (2usize..14, any::<u64>()).prop_map(|(n, seed)| {
        // xorshift-style edge selection keeps the strategy shrink-friendly
        let mut state = seed | 1;
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                if state % 100 < 45 {
                    edges.push((u, v));
                }
            }
        }
        CommutationGraph::from_edges(n, &edges)
    })
}

proptest! {
    #[test]
    fn solver_matches_brute_force_on_random_graphs(g in arbitrary_graph()) {
        let bf = brute_force_mis(&g).unwrap();
        let result = max_independent_set(&g, None);
        prop_assert_eq!(result.size, bf);
        prop_assert!(result.proven_optimal);
        prop_assert!(verify_witness(&g, &result.witness));
        prop_assert_eq!(result.witness.len(), result.size);
        // the enumerator finds a set at the maximum and nothing above it
        prop_assert!(enumerate_independent_sets(&g, bf).unwrap().next().is_some());
        if bf < g.vertex_count() {
            prop_assert!(enumerate_independent_sets(&g, bf + 1).unwrap().next().is_none());
        }
    }

    #[test]
    fn solver_size_is_permutation_invariant(g in arbitrary_graph(), seed in any::<u64>()) {
        let n = g.vertex_count();
        let mut perm: Vec<usize> = (0..n).collect();
        let mut state = seed | 1;
        for i in (1..n).rev() {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            perm.swap(i, (state as usize) % (i + 1));
        }
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                if g.adjacent(u, v) {
                    edges.push((perm[u], perm[v]));
                }
            }
        }
        let permuted = CommutationGraph::from_edges(n, &edges);
        prop_assert_eq!(
            max_independent_set(&g, None).size,
            max_independent_set(&permuted, None).size
        );
    }

    #[test]
    fn witness_is_lexicographically_least(g in arbitrary_graph()) {
        let result = max_independent_set(&g, None);
        let first = enumerate_independent_sets(&g, result.size).unwrap().next();
        prop_assert_eq!(first, Some(result.witness));
    }

    #[test]
    fn valid_orbit_diagrams_have_weights_up_to_two(
        parts in proptest::collection::vec(1u32..9, 1..7),
        family_pick in 0u8..4,
    ) {
        // build a family-valid partition by doubling the parts whose parity
        // the family restricts
        let family = match family_pick {
            0 => ClassicalFamily::A,
            1 => ClassicalFamily::B,
            2 => ClassicalFamily::C,
            _ => ClassicalFamily::D,
        };
        let mut fixed = Vec::new();
        for &p in &parts {
            let restricted = match family {
                ClassicalFamily::A => false,
                ClassicalFamily::B | ClassicalFamily::D => p % 2 == 0,
                ClassicalFamily::C => p % 2 == 1,
            };
            fixed.push(p);
            if restricted {
                fixed.push(p);
            }
        }
        if family == ClassicalFamily::B && fixed.iter().sum::<u32>() % 2 == 0 {
            fixed.push(1);
        }
        if family == ClassicalFamily::D {
            while fixed.iter().sum::<u32>() < 6 || fixed.iter().sum::<u32>() % 2 == 1 {
                fixed.push(1);
            }
        }
        let partition = Partition::new(fixed).unwrap();
        if let Ok(orbit) = ClassicalOrbit::new(family, partition) {
            let d = partition_to_diagram(&orbit);
            prop_assert!(d.weights().iter().all(|&w| w <= 2));
            prop_assert_eq!(parity_class(orbit.partition()), diagram_parity_class(&d));
            // diagram length always equals the rank
            prop_assert_eq!(d.weights().len(), orbit.rank());
        }
    }
}

#[test]
fn half_abelian_rows_reach_exactly_half() {
    // sanity companion to the solver flags: a capped search on an even-orbit
    // graph still reports its zero maximum as proven
    let orbit =
        ClassicalOrbit::new(ClassicalFamily::C, Partition::new(vec![2, 2]).unwrap()).unwrap();
    let rs = RootSystem::build(orbit.simple_type());
    let g = grade(&rs, &partition_to_diagram(&orbit)).unwrap();
    assert_eq!(g.dim_g1(), 0);
    assert_eq!(parity_class(orbit.partition()), ParityClass::Even);
    let graph = CommutationGraph::from_grading(&g);
    let mis = max_independent_set(&graph, Some(0));
    assert_eq!(mis.size, 0);
    assert!(mis.proven_optimal);
}
