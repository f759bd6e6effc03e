//! Nilpotent orbits of the classical types, modeled by partitions.
//!
//! A partition records the Jordan block sizes of the nilpotent on the
//! standard representation. Each part `k` contributes the h-eigenvalues
//! `1-k, 3-k, ..., k-3, k-1`; sorting the union of these progressions and
//! taking consecutive differences produces the weighted Dynkin diagram (with
//! a family-specific rule for the last node, and the fork pair for type D).

use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::root_system::{Family, SimpleType};

/// A partition with positive parts, canonicalized to weakly decreasing order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Partition {
    parts: Vec<u32>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum OrbitError {
    #[error("partition must have at least one part")]
    Empty,
    #[error("partition parts must be positive")]
    ZeroPart,
    #[error("cannot parse partition `{0}`")]
    Parse(String),
    #[error("part {part} has multiplicity {multiplicity}, which violates the parity rule for type {family}")]
    MultiplicityParity {
        family: ClassicalFamily,
        part: u32,
        multiplicity: usize,
    },
    #[error("partition sum {sum} has the wrong parity for type {family}")]
    SumParity { family: ClassicalFamily, sum: u32 },
    #[error("type {family} needs rank >= {min_rank}, partition gives {rank}")]
    RankTooSmall {
        family: ClassicalFamily,
        rank: usize,
        min_rank: usize,
    },
}

impl Partition {
    pub fn new(mut parts: Vec<u32>) -> Result<Self, OrbitError> {
        if parts.is_empty() {
            return Err(OrbitError::Empty);
        }
        if parts.contains(&0) {
            return Err(OrbitError::ZeroPart);
        }
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Ok(Partition { parts })
    }

    pub fn parts(&self) -> &[u32] {
        &self.parts
    }

    /// Total `N`, the dimension of the standard representation.
    pub fn sum(&self) -> u32 {
        self.parts.iter().sum()
    }

    pub fn largest(&self) -> u32 {
        self.parts[0]
    }

    /// Multiplicity of the part size `k`.
    pub fn multiplicity(&self, k: u32) -> usize {
        self.parts.iter().filter(|&&p| p == k).count()
    }

    /// Distinct part sizes in decreasing order.
    pub fn distinct_parts(&self) -> Vec<u32> {
        let mut out: Vec<u32> = Vec::new();
        for &p in &self.parts {
            if out.last() != Some(&p) {
                out.push(p);
            }
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.parts.iter().map(|p| p.to_string()).collect();
        f.write_str(&parts.join(","))
    }
}

impl std::str::FromStr for Partition {
    type Err = OrbitError;

    /// Parses the textual syntax `"8,6,3,3,2,1,1"`.
    fn from_str(s: &str) -> Result<Self, OrbitError> {
        let parts: Result<Vec<u32>, _> = s.split(',').map(|t| t.trim().parse::<u32>()).collect();
        match parts {
            Ok(parts) if !parts.is_empty() => Partition::new(parts),
            _ => Err(OrbitError::Parse(s.to_string())),
        }
    }
}

/// The four classical families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum ClassicalFamily {
    A,
    B,
    C,
    D,
}

impl ClassicalFamily {
    pub fn family(self) -> Family {
        match self {
            ClassicalFamily::A => Family::A,
            ClassicalFamily::B => Family::B,
            ClassicalFamily::C => Family::C,
            ClassicalFamily::D => Family::D,
        }
    }

    pub fn from_family(f: Family) -> Option<Self> {
        match f {
            Family::A => Some(ClassicalFamily::A),
            Family::B => Some(ClassicalFamily::B),
            Family::C => Some(ClassicalFamily::C),
            Family::D => Some(ClassicalFamily::D),
            _ => None,
        }
    }
}

impl fmt::Display for ClassicalFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.family())
    }
}

/// Parity classification of a nilpotent orbit.
///
/// `Even`: the diagram has no 1s. `StrictlyOdd`: the diagram has 1s but no
/// 2s. `Odd`: both occur. On the partition side these correspond to all
/// parts sharing one parity, the two largest distinct parts differing by
/// exactly one, and everything else, respectively.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ParityClass {
    Even,
    Odd,
    StrictlyOdd,
}

impl fmt::Display for ParityClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            ParityClass::Even => "even",
            ParityClass::Odd => "odd",
            ParityClass::StrictlyOdd => "strictly odd",
        };
        f.write_str(s)
    }
}

/// A nilpotent orbit of a classical simple Lie algebra, given by a valid
/// partition of the standard representation's dimension.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassicalOrbit {
    family: ClassicalFamily,
    partition: Partition,
}

/// Checks the per-type multiplicity parity rule: even parts must have even
/// multiplicity for B and D, odd parts must have even multiplicity for C.
/// Type A accepts any partition.
pub fn validate(family: ClassicalFamily, partition: &Partition) -> Result<(), OrbitError> {
    let n = partition.sum();
    match family {
        ClassicalFamily::A => {}
        ClassicalFamily::B => {
            if n.is_multiple_of(2) {
                return Err(OrbitError::SumParity { family, sum: n });
            }
        }
        ClassicalFamily::C | ClassicalFamily::D => {
            if !n.is_multiple_of(2) {
                return Err(OrbitError::SumParity { family, sum: n });
            }
        }
    }
    let restricted_parity = match family {
        ClassicalFamily::A => None,
        ClassicalFamily::B | ClassicalFamily::D => Some(0),
        ClassicalFamily::C => Some(1),
    };
    if let Some(bad_parity) = restricted_parity {
        for k in partition.distinct_parts() {
            if k % 2 == bad_parity {
                let m = partition.multiplicity(k);
                if !m.is_multiple_of(2) {
                    return Err(OrbitError::MultiplicityParity {
                        family,
                        part: k,
                        multiplicity: m,
                    });
                }
            }
        }
    }
    // the derived rank must be representable: A needs N >= 2, B needs
    // N >= 3, C needs N >= 2, D needs N >= 6 (rank 3 minimum)
    let (rank, min_rank) = match family {
        ClassicalFamily::A => ((n as usize).saturating_sub(1), 1),
        ClassicalFamily::B => ((n as usize).saturating_sub(1) / 2, 1),
        ClassicalFamily::C => (n as usize / 2, 1),
        ClassicalFamily::D => (n as usize / 2, 3),
    };
    if rank < min_rank {
        return Err(OrbitError::RankTooSmall {
            family,
            rank,
            min_rank,
        });
    }
    Ok(())
}

impl ClassicalOrbit {
    pub fn new(family: ClassicalFamily, partition: Partition) -> Result<Self, OrbitError> {
        validate(family, &partition)?;
        Ok(ClassicalOrbit { family, partition })
    }

    pub fn family(&self) -> ClassicalFamily {
        self.family
    }

    pub fn partition(&self) -> &Partition {
        &self.partition
    }

    /// Rank of the ambient algebra: `N-1` for A, `(N-1)/2` for B, `N/2`
    /// for C and D.
    pub fn rank(&self) -> usize {
        let n = self.partition.sum() as usize;
        match self.family {
            ClassicalFamily::A => n - 1,
            ClassicalFamily::B => (n - 1) / 2,
            ClassicalFamily::C | ClassicalFamily::D => n / 2,
        }
    }

    pub fn simple_type(&self) -> SimpleType {
        SimpleType::new(self.family.family(), self.rank())
            .expect("validated orbit always has a representable type")
    }

    pub fn parity_class(&self) -> ParityClass {
        parity_class(&self.partition)
    }
}

impl fmt::Display for ClassicalOrbit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} [{}]", self.simple_type(), self.partition)
    }
}

/// The h-eigenvalues on the standard representation: the multiset union of
/// `1-k, 3-k, ..., k-1` over all parts `k`, sorted decreasing.
pub fn h_eigenvalues(p: &Partition) -> Vec<i32> {
    let mut eigen = Vec::with_capacity(p.sum() as usize);
    for &part in p.parts() {
        let k = part as i32;
        let mut e = 1 - k;
        while e < k {
            eigen.push(e);
            e += 2;
        }
    }
    eigen.sort_unstable_by(|a, b| b.cmp(a));
    eigen
}

/// The h-weight data of an orbit: the first `rank` entries of the sorted
/// eigenvalue list, together with the eigenvalue multiplicities `s_k`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HWeights {
    /// `h(eps_i)` for `i = 1..rank`, weakly decreasing.
    pub h: Vec<i32>,
    /// `s[k]` = multiplicity of the eigenvalue `k` on the standard
    /// representation, for `k = 0..mu-1`.
    pub s: Vec<usize>,
}

/// Computes h and the s-multiplicities for a classical orbit.
///
/// For type B the eigenvalue list has odd length and taking the first
/// `(N-1)/2` entries silently drops one middle zero, matching the dimension
/// of the Cartan subalgebra.
pub fn h_weights(orbit: &ClassicalOrbit) -> HWeights {
    let eigen = h_eigenvalues(orbit.partition());
    let rank = orbit.rank();
    let h: Vec<i32> = eigen.iter().take(rank).copied().collect();
    let mu = orbit.partition().largest();
    let s: Vec<usize> = (0..mu as i32)
        .map(|k| eigen.iter().filter(|&&e| e == k).count())
        .collect();
    debug_assert_eq!(s, s_from_multiplicities(orbit.partition()));
    HWeights { h, s }
}

/// The s-values straight from the part multiplicities:
/// `s_k = m_{k+1} + m_{k+3} + m_{k+5} + ...`
pub(crate) fn s_from_multiplicities(p: &Partition) -> Vec<usize> {
    let mu = p.largest();
    (0..mu)
        .map(|k| {
            let mut total = 0usize;
            let mut j = k + 1;
            while j <= mu {
                total += p.multiplicity(j);
                j += 2;
            }
            total
        })
        .collect()
}

/// A Dynkin diagram with a weight in {0,1,2} at every node, in Bourbaki
/// node order.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct WeightedDiagram {
    stype: SimpleType,
    weights: Vec<u8>,
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DiagramError {
    #[error("diagram has {got} weights, expected rank {expected}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("weight {0} out of range, must be 0, 1 or 2")]
    WeightOutOfRange(u8),
    #[error("cannot parse diagram weights `{0}`")]
    Parse(String),
}

impl WeightedDiagram {
    pub fn new(stype: SimpleType, weights: Vec<u8>) -> Result<Self, DiagramError> {
        if weights.len() != stype.rank() {
            return Err(DiagramError::LengthMismatch {
                expected: stype.rank(),
                got: weights.len(),
            });
        }
        if let Some(&w) = weights.iter().find(|&&w| w > 2) {
            return Err(DiagramError::WeightOutOfRange(w));
        }
        Ok(WeightedDiagram { stype, weights })
    }

    /// Parses space-separated weights, e.g. `"2 0 1 0 1 1"`.
    pub fn parse(stype: SimpleType, s: &str) -> Result<Self, DiagramError> {
        let weights: Result<Vec<u8>, _> = s.split_whitespace().map(|t| t.parse::<u8>()).collect();
        match weights {
            Ok(w) => WeightedDiagram::new(stype, w),
            Err(_) => Err(DiagramError::Parse(s.to_string())),
        }
    }

    pub fn stype(&self) -> SimpleType {
        self.stype
    }

    pub fn weights(&self) -> &[u8] {
        &self.weights
    }

    pub fn parity_class(&self) -> ParityClass {
        diagram_parity_class(self)
    }
}

impl fmt::Display for WeightedDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.weights.iter().map(|w| w.to_string()).collect();
        f.write_str(&parts.join(" "))
    }
}

/// Parity class straight from the partition: all parts of one parity means
/// even; the two largest distinct parts differing by one means strictly odd;
/// anything else is odd.
pub fn parity_class(p: &Partition) -> ParityClass {
    let distinct = p.distinct_parts();
    if distinct.iter().all(|k| k % 2 == distinct[0] % 2) {
        return ParityClass::Even;
    }
    if distinct.len() >= 2 && distinct[0] - distinct[1] == 1 {
        ParityClass::StrictlyOdd
    } else {
        ParityClass::Odd
    }
}

/// Parity class of a weighted diagram: no 1s means even, otherwise no 2s
/// means strictly odd, otherwise odd. The all-zero diagram is even.
pub fn diagram_parity_class(d: &WeightedDiagram) -> ParityClass {
    let has_one = d.weights().contains(&1);
    let has_two = d.weights().contains(&2);
    match (has_one, has_two) {
        (false, _) => ParityClass::Even,
        (true, false) => ParityClass::StrictlyOdd,
        (true, true) => ParityClass::Odd,
    }
}

/// Converts a classical orbit to its weighted Dynkin diagram.
///
/// Type A: consecutive differences of the full sorted eigenvalue list.
/// Types B, C, D: the first nodes take consecutive differences of `h`; the
/// last node takes `h_n` (B), `2 h_n` (C), or the fork pair
/// `(h_{n-1} - h_n, h_{n-1} + h_n)` (D).
pub fn partition_to_diagram(orbit: &ClassicalOrbit) -> WeightedDiagram {
    let stype = orbit.simple_type();
    let rank = orbit.rank();
    let weights: Vec<u8> = match orbit.family() {
        ClassicalFamily::A => {
            let eigen = h_eigenvalues(orbit.partition());
            eigen.windows(2).map(|w| (w[0] - w[1]) as u8).collect()
        }
        ClassicalFamily::B | ClassicalFamily::C => {
            let hw = h_weights(orbit);
            let mut w: Vec<u8> = hw.h.windows(2).map(|p| (p[0] - p[1]) as u8).collect();
            let last = hw.h[rank - 1];
            w.push(match orbit.family() {
                ClassicalFamily::B => last as u8,
                ClassicalFamily::C => (2 * last) as u8,
                _ => unreachable!(),
            });
            w
        }
        ClassicalFamily::D => {
            let hw = h_weights(orbit);
            let mut w: Vec<u8> = hw.h[..rank - 1]
                .windows(2)
                .map(|p| (p[0] - p[1]) as u8)
                .collect();
            w.push((hw.h[rank - 2] - hw.h[rank - 1]) as u8);
            w.push((hw.h[rank - 2] + hw.h[rank - 1]) as u8);
            w
        }
    };
    WeightedDiagram::new(stype, weights).expect("orbit diagrams always have weights in {0,1,2}")
}

/// Position (1-indexed) of the first weight-1 node, computed from the
/// multiplicities alone: with `mu` the largest part and `l` the largest part
/// of opposite parity, the first 1 sits at `sum of i * m_{l-1+2i}` over the
/// ladder `l+1, l+3, ..., mu`. Returns `None` for even orbits.
pub fn first_one_position(p: &Partition) -> Option<usize> {
    let distinct = p.distinct_parts();
    let mu = distinct[0];
    let l = *distinct.iter().find(|&&k| k % 2 != mu % 2)?;
    let rungs = (mu - l).div_ceil(2);
    let mut total = 0usize;
    for i in 1..=rungs {
        let v = l - 1 + 2 * i;
        total += (i as usize) * p.multiplicity(v);
    }
    Some(total)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbit(family: ClassicalFamily, parts: &[u32]) -> ClassicalOrbit {
        ClassicalOrbit::new(family, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn validation_examples() {
        assert!(validate(
            ClassicalFamily::C,
            &Partition::new(vec![8, 6, 3, 3, 2, 1, 1]).unwrap()
        )
        .is_ok());
        let err = validate(
            ClassicalFamily::C,
            &Partition::new(vec![3, 2, 2, 1]).unwrap(),
        )
        .unwrap_err();
        assert_eq!(
            err,
            OrbitError::MultiplicityParity {
                family: ClassicalFamily::C,
                part: 3,
                multiplicity: 1
            }
        );
        assert!(validate(
            ClassicalFamily::D,
            &Partition::new(vec![5, 3, 2, 2]).unwrap()
        )
        .is_ok());
    }

    #[test]
    fn eigenvalues_of_worked_partition() {
        let p = Partition::new(vec![8, 6, 3, 3, 2, 1, 1]).unwrap();
        assert_eq!(
            h_eigenvalues(&p),
            vec![7, 5, 5, 3, 3, 2, 2, 1, 1, 1, 0, 0, 0, 0, -1, -1, -1, -2, -2, -3, -3, -5, -5, -7]
        );
        assert_eq!(
            h_eigenvalues(&Partition::new(vec![2]).unwrap()),
            vec![1, -1]
        );
        assert_eq!(
            h_eigenvalues(&Partition::new(vec![5, 3, 2, 2]).unwrap()),
            vec![4, 2, 2, 1, 1, 0, 0, -1, -1, -2, -2, -4]
        );
    }

    #[test]
    fn h_weights_examples() {
        let d = orbit(ClassicalFamily::D, &[5, 3, 2, 2]);
        assert_eq!(h_weights(&d).h, vec![4, 2, 2, 1, 1, 0]);

        let c = orbit(ClassicalFamily::C, &[8, 6, 3, 3, 2, 1, 1]);
        assert_eq!(h_weights(&c).h, vec![7, 5, 5, 3, 3, 2, 2, 1, 1, 1, 0, 0]);

        let b = orbit(ClassicalFamily::B, &[3]);
        let hw = h_weights(&b);
        assert_eq!(hw.h, vec![2]);
        assert_eq!(hw.s, vec![1, 0, 1]);
    }

    #[test]
    fn diagram_of_worked_partition() {
        let a = orbit(ClassicalFamily::A, &[8, 6, 3, 3, 2, 1, 1]);
        assert_eq!(
            partition_to_diagram(&a).weights(),
            &[2, 0, 2, 0, 1, 0, 1, 0, 0, 1, 0, 0, 0, 1, 0, 0, 1, 0, 1, 0, 2, 0, 2]
        );

        let c = orbit(ClassicalFamily::C, &[8, 6, 3, 3, 2, 1, 1]);
        assert_eq!(
            partition_to_diagram(&c).weights(),
            &[2, 0, 2, 0, 1, 0, 1, 0, 0, 1, 0, 0]
        );

        let d = orbit(ClassicalFamily::D, &[5, 3, 2, 2]);
        assert_eq!(partition_to_diagram(&d).weights(), &[2, 0, 1, 0, 1, 1]);
    }

    #[test]
    fn parity_examples() {
        let p = |v: &[u32]| Partition::new(v.to_vec()).unwrap();
        assert_eq!(parity_class(&p(&[5, 3, 1])), ParityClass::Even);
        assert_eq!(parity_class(&p(&[5, 3, 2, 2])), ParityClass::Odd);
        assert_eq!(parity_class(&p(&[3, 3, 2, 2])), ParityClass::StrictlyOdd);
        assert_eq!(parity_class(&p(&[2, 1, 1])), ParityClass::StrictlyOdd);
    }

    #[test]
    fn diagram_parity_examples() {
        let d6 = SimpleType::new(Family::D, 6).unwrap();
        let d = WeightedDiagram::new(d6, vec![2, 0, 1, 0, 1, 1]).unwrap();
        assert_eq!(diagram_parity_class(&d), ParityClass::Odd);

        let zero = WeightedDiagram::new(d6, vec![0; 6]).unwrap();
        assert_eq!(diagram_parity_class(&zero), ParityClass::Even);

        let d5 = SimpleType::new(Family::D, 5).unwrap();
        let so = WeightedDiagram::new(d5, vec![0, 1, 0, 1, 1]).unwrap();
        assert_eq!(diagram_parity_class(&so), ParityClass::StrictlyOdd);
        // and that diagram is exactly the one of D5 [3,3,2,2]
        let o = orbit(ClassicalFamily::D, &[3, 3, 2, 2]);
        assert_eq!(partition_to_diagram(&o), so);
    }

    #[test]
    fn first_one_formula_on_worked_example() {
        // ladder above 3 in [8,6,3,3,2,1,1]: values 4,6,8 with weights 1,2,3
        let p = Partition::new(vec![8, 6, 3, 3, 2, 1, 1]).unwrap();
        assert_eq!(first_one_position(&p), Some(5));
        let even = Partition::new(vec![5, 3, 1]).unwrap();
        assert_eq!(first_one_position(&even), None);
    }

    #[test]
    fn partition_parse_roundtrip() {
        let p: Partition = "8,6,3,3,2,1,1".parse().unwrap();
        assert_eq!(p.to_string(), "8,6,3,3,2,1,1");
        assert!("".parse::<Partition>().is_err());
        assert!("3,0".parse::<Partition>().is_err());
    }
}
