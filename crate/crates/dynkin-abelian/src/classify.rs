//! Closed-form predictions for the classical types.
//!
//! Everything here is computed from the partition alone. The eigenvalue
//! multiplicities `s_0, s_1, ...` of h on the standard representation give
//! `dim g_1 = s_0 s_1 + s_1 s_2 + ...`; a maximal abelian subspace spanned
//! by root vectors corresponds to an alternating choice on the eigenspace
//! chain, which leaves at most four candidate sums per family. The maximum
//! of those candidates is the predicted largest abelian dimension, and
//! comparing it with `dim g_1 / 2` yields the half-abelian classification.
//! An exhaustive scan over all admissible chain choices serves as an
//! independent oracle for the candidate list.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::orbit::{h_eigenvalues, ClassicalFamily, ClassicalOrbit, ParityClass, Partition};
use crate::reduction::reduce_partition_or_self;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ClassifyError {
    #[error("type A has no candidate-sum decomposition; its maximum is always half of dim g_1")]
    TypeAHasNoCandidates,
    #[error("s-vector {0:?} has a zero entry; reduce the orbit to strictly odd first")]
    ZeroEntry(Vec<usize>),
    #[error("s-vector must have at least two entries, got {0}")]
    TooShort(usize),
    #[error("orbit is {0}, expected strictly odd")]
    NotStrictlyOdd(ParityClass),
    #[error("largest part {0} exceeds the oracle guard {1}")]
    OracleGuard(u32, u32),
}

/// `s_k = m_{k+1} + m_{k+3} + ...` for `k = 0..mu-1`: the multiplicity of
/// the h-eigenvalue `k` on the standard representation.
pub fn s_values(p: &Partition) -> Vec<usize> {
    crate::orbit::s_from_multiplicities(p)
}

/// `dim g_1 = s_0 s_1 + s_1 s_2 + ...` for types B, C, D.
pub fn dim_g1_from_s(s: &[usize]) -> usize {
    s.windows(2).map(|w| w[0] * w[1]).sum()
}

/// `dim g_1` for type A: adjacent eigenvalue multiplicities over the whole
/// eigenvalue range, not just the non-negative half.
pub fn dim_g1_type_a(p: &Partition) -> usize {
    let eigen = h_eigenvalues(p);
    let mu = p.largest() as i32;
    (-mu..mu)
        .map(|k| {
            let a = eigen.iter().filter(|&&e| e == k).count();
            let b = eigen.iter().filter(|&&e| e == k + 1).count();
            a * b
        })
        .sum()
}

/// `dim g_1` of an orbit, by the partition-side formulas.
pub fn dim_g1(orbit: &ClassicalOrbit) -> usize {
    match orbit.family() {
        ClassicalFamily::A => dim_g1_type_a(orbit.partition()),
        _ => dim_g1_from_s(&s_values(orbit.partition())),
    }
}

/// One candidate for the maximal abelian dimension, labeled by the
/// alternating choice that produces it.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Candidate {
    pub label: String,
    pub value: usize,
}

impl Candidate {
    fn new(label: &str, value: usize) -> Candidate {
        Candidate {
            label: label.to_string(),
            value,
        }
    }
}

fn pair_sum(s: &[usize], start: usize) -> usize {
    // s[start]*s[start+1] + s[start+2]*s[start+3] + ...
    let mut total = 0;
    let mut i = start;
    while i + 1 < s.len() {
        total += s[i] * s[i + 1];
        i += 2;
    }
    total
}

/// The candidate sums for a strictly odd s-vector.
///
/// Types C and D get the two alternating chains; B and D additionally get
/// the two chains that start with a singleton choice at the bottom
/// eigenspace. Absent trailing entries count as zero.
pub fn candidate_sums(
    family: ClassicalFamily,
    s: &[usize],
) -> Result<Vec<Candidate>, ClassifyError> {
    if family == ClassicalFamily::A {
        return Err(ClassifyError::TypeAHasNoCandidates);
    }
    if s.len() < 2 {
        return Err(ClassifyError::TooShort(s.len()));
    }
    if s.contains(&0) {
        return Err(ClassifyError::ZeroEntry(s.to_vec()));
    }
    let e1 = pair_sum(s, 2); // s2 s3 + s4 s5 + ...
    let e2 = pair_sum(s, 1); // s1 s2 + s3 s4 + ...
    let e3 = pair_sum(s, 3); // s3 s4 + s5 s6 + ...
    let s2 = s.get(2).copied().unwrap_or(0);

    let mut out = Vec::new();
    match family {
        ClassicalFamily::B => {
            out.push(Candidate::new("x_odd=s", (s[0] - 1) / 2 * s[1] + 1 + e1));
        }
        ClassicalFamily::C | ClassicalFamily::D => {
            out.push(Candidate::new("x_odd=s", s[0] / 2 * s[1] + e1));
        }
        ClassicalFamily::A => unreachable!(),
    }
    out.push(Candidate::new("x_even=s", e2));
    if family != ClassicalFamily::C {
        out.push(Candidate::new("x1=1,x2=0", s[0] + e1));
        out.push(Candidate::new("x1=1,x2=s2", s[0] + (s[1] - 1) * s2 + e3));
    }
    Ok(out)
}

/// The predicted maximal abelian dimension in `g_1`.
///
/// Type A always reaches half of `dim g_1`. Even orbits have `g_1 = 0`.
/// Odd orbits are reduced to their strictly odd reduction first (which
/// preserves `g_1`), then the candidate maximum applies.
pub fn predicted_max(orbit: &ClassicalOrbit) -> usize {
    if orbit.family() == ClassicalFamily::A {
        return dim_g1_type_a(orbit.partition()) / 2;
    }
    match orbit.parity_class() {
        ParityClass::Even => 0,
        _ => {
            let reduced = reduce_partition_or_self(orbit).expect("non-even orbits always reduce");
            let s = s_values(reduced.partition());
            candidate_sums(reduced.family(), &s)
                .expect("strictly odd s-vectors are admissible")
                .into_iter()
                .map(|c| c.value)
                .max()
                .expect("candidate list is never empty")
        }
    }
}

/// The half-abelian test for strictly odd orbits of types B, C, D, straight
/// from the partition:
///
/// - largest part even, no other even parts, and for B the largest part has
///   multiplicity exactly 2; or
/// - largest part `mu` odd, and either no other odd parts, or (not for C)
///   the only other parts are `mu - 1` with multiplicity 2 and 1 with any
///   multiplicity.
pub fn is_half_abelian_strict(orbit: &ClassicalOrbit) -> Result<bool, ClassifyError> {
    if orbit.family() == ClassicalFamily::A {
        return Err(ClassifyError::TypeAHasNoCandidates);
    }
    match orbit.parity_class() {
        ParityClass::StrictlyOdd => {}
        other => return Err(ClassifyError::NotStrictlyOdd(other)),
    }
    let p = orbit.partition();
    let distinct = p.distinct_parts();
    let mu = distinct[0];
    if mu.is_multiple_of(2) {
        let no_other_even = distinct[1..].iter().all(|&v| v % 2 == 1);
        let mult_ok = orbit.family() != ClassicalFamily::B || p.multiplicity(mu) == 2;
        Ok(no_other_even && mult_ok)
    } else {
        let no_other_odd = distinct[1..].iter().all(|&v| v % 2 == 0);
        if no_other_odd {
            return Ok(true);
        }
        if orbit.family() == ClassicalFamily::C {
            return Ok(false);
        }
        let only_mu1_and_1 = distinct[1..].iter().all(|&v| v == mu - 1 || v == 1);
        Ok(only_mu1_and_1 && p.multiplicity(mu - 1) == 2 && distinct.contains(&(mu - 1)))
    }
}

/// Number of adjacent parity changes along the distinct part sizes in
/// decreasing order.
fn parity_changes(p: &Partition) -> usize {
    p.distinct_parts()
        .windows(2)
        .filter(|w| w[0] % 2 != w[1] % 2)
        .count()
}

/// The half-abelian test for arbitrary orbits of types B, C, D.
///
/// Type C: at most one parity change along the partition. Types B and D: at
/// most two changes; with at least one change, an even largest part forces
/// exactly one change (and for B the largest part must be the unique even
/// part, of multiplicity 2), while two changes force an odd largest part, a
/// unique even part of multiplicity 2, and all smaller parts equal to 1.
/// Even orbits (zero changes) are vacuously half-abelian since `g_1 = 0`.
pub fn is_half_abelian(orbit: &ClassicalOrbit) -> Result<bool, ClassifyError> {
    if orbit.family() == ClassicalFamily::A {
        return Err(ClassifyError::TypeAHasNoCandidates);
    }
    let p = orbit.partition();
    let changes = parity_changes(p);
    if changes == 0 {
        return Ok(true);
    }
    if orbit.family() == ClassicalFamily::C {
        return Ok(changes <= 1);
    }
    let distinct = p.distinct_parts();
    let mu = distinct[0];
    match changes {
        1 => {
            if mu.is_multiple_of(2) && orbit.family() == ClassicalFamily::B {
                // the largest part must be the unique even part, multiplicity 2
                let unique_even = distinct.iter().filter(|&&v| v % 2 == 0).count() == 1;
                Ok(unique_even && p.multiplicity(mu) == 2)
            } else {
                Ok(true)
            }
        }
        2 => {
            let evens: Vec<u32> = distinct.iter().copied().filter(|&v| v % 2 == 0).collect();
            let unique_even = evens.len() == 1;
            if mu % 2 != 1 || !unique_even {
                return Ok(false);
            }
            let even = evens[0];
            let smaller_all_one = distinct.iter().all(|&v| v >= even || v == 1);
            Ok(p.multiplicity(even) == 2 && smaller_all_one)
        }
        _ => Ok(false),
    }
}

/// Independent oracle for [`candidate_sums`]: exhausts every admissible
/// choice vector `x` with `0 <= x_k <= s_k`, scoring the bottom eigenspace
/// by the family-specific table (`x_1 = 0`, `x_1 = 1` and `x_1 > 1` are
/// distinct cases for B and D) and each later eigenspace by
/// `(s_{k-1} - x_{k-1}) x_k`, with the top eigenspace taken whole.
pub fn maximize_x_oracle(family: ClassicalFamily, s: &[usize]) -> Result<usize, ClassifyError> {
    if family == ClassicalFamily::A {
        return Err(ClassifyError::TypeAHasNoCandidates);
    }
    if s.len() < 2 {
        return Err(ClassifyError::TooShort(s.len()));
    }
    if s.contains(&0) {
        return Err(ClassifyError::ZeroEntry(s.to_vec()));
    }
    if s.len() > 12 {
        return Err(ClassifyError::OracleGuard(s.len() as u32, 12));
    }

    let bottom = |x1: usize| -> usize {
        match family {
            ClassicalFamily::B => match x1 {
                0 => 0,
                1 => s[0],
                _ => (s[0] - 1) / 2 * x1 + 1,
            },
            ClassicalFamily::C => s[0] / 2 * x1,
            ClassicalFamily::D => match x1 {
                0 => 0,
                1 => s[0],
                _ => s[0] / 2 * x1,
            },
            ClassicalFamily::A => unreachable!(),
        }
    };

    // free variables x_1..x_{mu-2}; the top variable is pinned to s_{mu-1}
    let free = s.len() - 2;
    let mut x = vec![0usize; free + 1];
    x[free] = s[s.len() - 1];
    let mut best = 0;
    loop {
        let mut value = bottom(x[0]);
        for k in 1..=free {
            value += (s[k] - x[k - 1]) * x[k];
        }
        best = best.max(value);

        // advance the mixed-radix counter over the free variables
        let mut pos = 0;
        loop {
            if pos == free {
                return Ok(best);
            }
            if x[pos] < s[pos + 1] {
                x[pos] += 1;
                break;
            }
            x[pos] = 0;
            pos += 1;
        }
    }
}

/// Everything the partition predicts about `g_1`, bundled for reporting.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct ClassifierReport {
    pub family: ClassicalFamily,
    pub partition: String,
    pub mu: u32,
    pub s: Vec<usize>,
    pub dim_g1: usize,
    /// Candidates of the strictly odd reduction (empty for type A and even
    /// orbits).
    pub candidates: Vec<Candidate>,
    pub predicted_max: usize,
    pub half_abelian_predicted: bool,
}

pub fn report(orbit: &ClassicalOrbit) -> ClassifierReport {
    let dim = dim_g1(orbit);
    let predicted = predicted_max(orbit);
    let candidates = match (orbit.family(), orbit.parity_class()) {
        (ClassicalFamily::A, _) | (_, ParityClass::Even) => Vec::new(),
        _ => {
            let reduced = reduce_partition_or_self(orbit).expect("non-even orbits always reduce");
            candidate_sums(reduced.family(), &s_values(reduced.partition()))
                .expect("strictly odd s-vectors are admissible")
        }
    };
    ClassifierReport {
        family: orbit.family(),
        partition: orbit.partition().to_string(),
        mu: orbit.partition().largest(),
        s: s_values(orbit.partition()),
        dim_g1: dim,
        candidates,
        predicted_max: predicted,
        half_abelian_predicted: 2 * predicted == dim,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn orbit(family: ClassicalFamily, parts: &[u32]) -> ClassicalOrbit {
        ClassicalOrbit::new(family, Partition::new(parts.to_vec()).unwrap()).unwrap()
    }

    #[test]
    fn s_value_examples() {
        // frozen from the eigenvalue-multiset oracle: counts of 0..7 in the
        // sorted eigenvalue list of [8,6,3,3,2,1,1]
        let p = Partition::new(vec![8, 6, 3, 3, 2, 1, 1]).unwrap();
        let eigen = h_eigenvalues(&p);
        let by_counting: Vec<usize> = (0..8)
            .map(|k| eigen.iter().filter(|&&e| e == k).count())
            .collect();
        assert_eq!(by_counting, vec![4, 3, 2, 2, 0, 2, 0, 1]);
        assert_eq!(s_values(&p), by_counting);

        assert_eq!(s_values(&Partition::new(vec![2]).unwrap()), vec![0, 1]);
        assert_eq!(
            s_values(&Partition::new(vec![3, 3, 2, 2]).unwrap()),
            vec![2, 2, 2]
        );
    }

    #[test]
    fn candidate_sum_examples() {
        let d: Vec<usize> = candidate_sums(ClassicalFamily::D, &[2, 2, 2])
            .unwrap()
            .iter()
            .map(|c| c.value)
            .collect();
        assert_eq!(d, vec![2, 4, 2, 4]);
        assert_eq!(d.iter().max(), Some(&4));
        assert_eq!(dim_g1_from_s(&[2, 2, 2]), 8);

        let c: Vec<usize> = candidate_sums(ClassicalFamily::C, &[2, 1])
            .unwrap()
            .iter()
            .map(|c| c.value)
            .collect();
        assert_eq!(c, vec![1, 0]);

        let b: Vec<usize> = candidate_sums(ClassicalFamily::B, &[1, 4])
            .unwrap()
            .iter()
            .map(|c| c.value)
            .collect();
        assert_eq!(b, vec![1, 0, 1, 1]);

        assert!(matches!(
            candidate_sums(ClassicalFamily::D, &[2, 0, 1]),
            Err(ClassifyError::ZeroEntry(_))
        ));
    }

    #[test]
    fn predicted_max_examples() {
        assert_eq!(predicted_max(&orbit(ClassicalFamily::A, &[2, 1])), 1);
        assert_eq!(predicted_max(&orbit(ClassicalFamily::D, &[5, 3, 2, 2])), 4);
        assert_eq!(
            predicted_max(&orbit(ClassicalFamily::B, &[2, 2, 2, 2, 1])),
            1
        );
    }

    #[test]
    fn strict_half_abelian_examples() {
        assert_eq!(
            is_half_abelian_strict(&orbit(ClassicalFamily::C, &[3, 3, 2])),
            Ok(true)
        );
        assert_eq!(
            is_half_abelian_strict(&orbit(ClassicalFamily::B, &[2, 2, 2, 2, 1])),
            Ok(false)
        );
        assert_eq!(
            is_half_abelian_strict(&orbit(ClassicalFamily::D, &[3, 2, 2, 1])),
            Ok(true)
        );
        assert!(matches!(
            is_half_abelian_strict(&orbit(ClassicalFamily::D, &[5, 3, 2, 2])),
            Err(ClassifyError::NotStrictlyOdd(ParityClass::Odd))
        ));
    }

    #[test]
    fn general_half_abelian_examples() {
        assert_eq!(
            is_half_abelian(&orbit(ClassicalFamily::C, &[8, 6, 3, 3, 2, 1, 1])),
            Ok(false)
        );
        assert_eq!(
            is_half_abelian(&orbit(ClassicalFamily::D, &[5, 3, 2, 2])),
            Ok(true)
        );
        assert_eq!(
            is_half_abelian(&orbit(ClassicalFamily::B, &[5, 4, 4, 1, 1])),
            Ok(true)
        );
        // even orbits are vacuously half-abelian
        assert_eq!(
            is_half_abelian(&orbit(ClassicalFamily::C, &[2, 2])),
            Ok(true)
        );
    }

    #[test]
    fn x_oracle_examples() {
        assert_eq!(maximize_x_oracle(ClassicalFamily::D, &[2, 2, 2]), Ok(4));
        assert_eq!(maximize_x_oracle(ClassicalFamily::C, &[2, 1]), Ok(1));
        assert_eq!(maximize_x_oracle(ClassicalFamily::B, &[1, 2]), Ok(1));
        assert!(matches!(
            maximize_x_oracle(ClassicalFamily::B, &[1; 13]),
            Err(ClassifyError::OracleGuard(13, 12))
        ));
    }

    #[test]
    fn report_invariants() {
        let r = report(&orbit(ClassicalFamily::D, &[5, 3, 2, 2]));
        assert_eq!(r.dim_g1, 8);
        assert_eq!(r.predicted_max, 4);
        assert!(r.half_abelian_predicted);
        assert!(2 * r.predicted_max <= r.dim_g1);
    }
}
