//! Dynkin gradings: the eigenspace decomposition of a root system under the
//! semisimple element encoded by a weighted diagram.
//!
//! The degree of a root is the weight-sum of its simple-root coefficients.
//! For classical orbits there is a second, independent route that never
//! touches simple-root coordinates: degrees of the epsilon-roots are plain
//! sums and differences of the h-values. The two routes must produce the
//! same dimension table, which is one of the crate's standing cross-checks.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::orbit::{h_weights, ClassicalFamily, ClassicalOrbit, WeightedDiagram};
use crate::root_system::{RootSystem, SimpleType};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum GradingError {
    #[error("diagram type {diagram} does not match root system type {root_system}")]
    TypeMismatch {
        diagram: SimpleType,
        root_system: SimpleType,
    },
}

/// A grading of a root system: an integer degree for every root, plus the
/// dimension of each graded component (the rank counts toward degree 0).
#[derive(Clone, Debug)]
pub struct Grading<'rs> {
    rs: &'rs RootSystem,
    degrees: Vec<i32>,
    dims: BTreeMap<i32, usize>,
}

impl<'rs> Grading<'rs> {
    pub fn root_system(&self) -> &'rs RootSystem {
        self.rs
    }

    /// Degree of the root at `index`.
    pub fn degree(&self, index: usize) -> i32 {
        self.degrees[index]
    }

    /// Dimension of the degree-`j` component.
    pub fn dim(&self, j: i32) -> usize {
        self.dims.get(&j).copied().unwrap_or(0)
    }

    /// All nonzero graded components, by degree.
    pub fn dims(&self) -> &BTreeMap<i32, usize> {
        &self.dims
    }

    pub fn dim_g1(&self) -> usize {
        self.dim(1)
    }

    /// Indices of the degree-1 roots, in root order (lexicographic on
    /// coefficient vectors).
    pub fn g1_basis(&self) -> GOneBasis {
        let indices: Vec<usize> = (0..self.rs.len())
            .filter(|&i| self.degrees[i] == 1)
            .collect();
        GOneBasis { indices }
    }

    /// True when every odd-degree component has even dimension. Holds for
    /// every grading induced by an actual nilpotent orbit; arbitrary weight
    /// labelings may violate it.
    pub fn odd_components_even(&self) -> bool {
        self.dims.iter().all(|(&j, &d)| j % 2 == 0 || d % 2 == 0)
    }
}

/// The root-vector basis of the degree-1 component.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GOneBasis {
    indices: Vec<usize>,
}

impl GOneBasis {
    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

/// Grades a root system by a weighted diagram.
///
/// Any {0,1,2} labeling is accepted, whether or not it comes from a
/// nilpotent orbit: the grading is well defined regardless. Orbit-only
/// invariants (such as even `dim g_1`) are checked by callers that know
/// their input is genuine.
pub fn grade<'rs>(rs: &'rs RootSystem, d: &WeightedDiagram) -> Result<Grading<'rs>, GradingError> {
    if d.stype() != rs.stype() {
        return Err(GradingError::TypeMismatch {
            diagram: d.stype(),
            root_system: rs.stype(),
        });
    }
    let weights = d.weights();
    let degrees: Vec<i32> = rs
        .roots()
        .iter()
        .map(|r| {
            r.coeffs()
                .iter()
                .zip(weights)
                .map(|(&c, &w)| c * w as i32)
                .sum()
        })
        .collect();
    let mut dims: BTreeMap<i32, usize> = BTreeMap::new();
    for &deg in &degrees {
        *dims.entry(deg).or_insert(0) += 1;
    }
    *dims.entry(0).or_insert(0) += rs.rank();
    Ok(Grading { rs, degrees, dims })
}

/// A root of a classical system in epsilon-coordinates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum EpsRoot {
    /// `s1*eps_i + s2*eps_j` with `i < j` and signs in {-1, +1}.
    Pair { i: usize, j: usize, si: i8, sj: i8 },
    /// `s*eps_i` (type B only).
    Single { i: usize, s: i8 },
    /// `2s*eps_i` (type C only).
    Double { i: usize, s: i8 },
}

impl EpsRoot {
    pub fn degree(&self, h: &[i32]) -> i32 {
        match *self {
            EpsRoot::Pair { i, j, si, sj } => si as i32 * h[i] + sj as i32 * h[j],
            EpsRoot::Single { i, s } => s as i32 * h[i],
            EpsRoot::Double { i, s } => 2 * s as i32 * h[i],
        }
    }

    /// The smaller of the two |h|-values touched by the root; used for the
    /// layer structure of degree-1 vertices.
    pub fn layer(&self, h: &[i32]) -> i32 {
        match *self {
            EpsRoot::Pair { i, j, .. } => h[i].abs().min(h[j].abs()),
            EpsRoot::Single { i, .. } | EpsRoot::Double { i, .. } => h[i].abs(),
        }
    }
}

/// The grading of a classical orbit computed entirely in epsilon-coordinates.
///
/// Independent of [`grade`]: no root system is built and no weighted diagram
/// is consulted. For type A the `h` vector is the full eigenvalue list.
#[derive(Clone, Debug)]
pub struct EpsGrading {
    family: ClassicalFamily,
    h: Vec<i32>,
    dims: BTreeMap<i32, usize>,
    g1: Vec<EpsRoot>,
}

impl EpsGrading {
    pub fn family(&self) -> ClassicalFamily {
        self.family
    }

    pub fn h(&self) -> &[i32] {
        &self.h
    }

    pub fn dim(&self, j: i32) -> usize {
        self.dims.get(&j).copied().unwrap_or(0)
    }

    pub fn dims(&self) -> &BTreeMap<i32, usize> {
        &self.dims
    }

    pub fn dim_g1(&self) -> usize {
        self.dim(1)
    }

    /// The degree-1 roots in epsilon-coordinates.
    pub fn g1_roots(&self) -> &[EpsRoot] {
        &self.g1
    }
}

/// Grades a classical orbit on the epsilon-root list: `deg(eps_i - eps_j) =
/// h_i - h_j` and so on. Type A uses all `N` eigenvalues; B adds the short
/// roots, C the doubled ones.
pub fn grade_classical(orbit: &ClassicalOrbit) -> EpsGrading {
    let family = orbit.family();
    let h: Vec<i32> = match family {
        ClassicalFamily::A => crate::orbit::h_eigenvalues(orbit.partition()),
        _ => h_weights(orbit).h,
    };
    let n = h.len();
    let mut roots: Vec<EpsRoot> = Vec::new();
    match family {
        ClassicalFamily::A => {
            for i in 0..n {
                for j in 0..n {
                    if i != j {
                        roots.push(EpsRoot::Pair {
                            i: i.min(j),
                            j: i.max(j),
                            si: if i < j { 1 } else { -1 },
                            sj: if i < j { -1 } else { 1 },
                        });
                    }
                }
            }
        }
        ClassicalFamily::B | ClassicalFamily::C | ClassicalFamily::D => {
            for i in 0..n {
                for j in i + 1..n {
                    for (si, sj) in [(1, 1), (1, -1), (-1, 1), (-1, -1)] {
                        roots.push(EpsRoot::Pair { i, j, si, sj });
                    }
                }
            }
            match family {
                ClassicalFamily::B => {
                    for i in 0..n {
                        for s in [1, -1] {
                            roots.push(EpsRoot::Single { i, s });
                        }
                    }
                }
                ClassicalFamily::C => {
                    for i in 0..n {
                        for s in [1, -1] {
                            roots.push(EpsRoot::Double { i, s });
                        }
                    }
                }
                _ => {}
            }
        }
    }

    let mut dims: BTreeMap<i32, usize> = BTreeMap::new();
    let mut g1 = Vec::new();
    for r in &roots {
        let deg = r.degree(&h);
        *dims.entry(deg).or_insert(0) += 1;
        if deg == 1 {
            g1.push(*r);
        }
    }
    *dims.entry(0).or_insert(0) += orbit.rank();
    EpsGrading {
        family,
        h,
        dims,
        g1,
    }
}

/// Checks that every degree-1 root is reachable from a weight-1 simple root
/// by repeatedly adding degree-0 roots inside the root system.
///
/// Root addition alone suffices for the degree-0 action: Cartan directions
/// rescale root vectors but never reach new root spaces.
pub fn check_g0_generation(g: &Grading<'_>, d: &WeightedDiagram) -> bool {
    let rs = g.root_system();
    let rank = rs.rank();
    let g1: Vec<usize> = g.g1_basis().indices().to_vec();
    if g1.is_empty() {
        return true;
    }
    let zero_roots: Vec<&[i32]> = (0..rs.len())
        .filter(|&i| g.degree(i) == 0)
        .map(|i| rs.root(i).coeffs())
        .collect();

    let pos = |idx: usize| g1.iter().position(|&r| r == idx);
    let mut reached = vec![false; g1.len()];
    let mut queue: Vec<usize> = Vec::new();
    for (node, &w) in d.weights().iter().enumerate() {
        if w == 1 {
            let mut coeffs = vec![0i32; rank];
            coeffs[node] = 1;
            if let Some(idx) = rs.root_index(&coeffs) {
                if let Some(p) = pos(idx) {
                    if !reached[p] {
                        reached[p] = true;
                        queue.push(p);
                    }
                }
            }
        }
    }

    let mut sum = vec![0i32; rank];
    while let Some(p) = queue.pop() {
        let base = rs.root(g1[p]).coeffs();
        for z in &zero_roots {
            for k in 0..rank {
                sum[k] = base[k] + z[k];
            }
            if let Some(idx) = rs.root_index(&sum) {
                if let Some(q) = pos(idx) {
                    if !reached[q] {
                        reached[q] = true;
                        queue.push(q);
                    }
                }
            }
        }
    }
    reached.iter().all(|&r| r)
}
