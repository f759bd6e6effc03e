//! Root systems of the simple Lie algebras, stored over the simple-root basis.
//!
//! Every root is an integer coefficient vector with respect to the simple
//! roots in Bourbaki numbering. The whole system is generated from the Cartan
//! matrix alone, by extending root strings upward from the simple roots, so no
//! Euclidean coordinates are needed here. The only queries the rest of the
//! crate performs are "is this vector a root?" and "what is the root at this
//! index?", both of which are O(1) after construction.

use std::collections::HashMap;
use std::fmt;

use thiserror::Error;

/// The nine families of simple root systems.
#[derive(
    Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize, serde::Deserialize,
)]
pub enum Family {
    A,
    B,
    C,
    D,
    G2,
    F4,
    E6,
    E7,
    E8,
}

impl Family {
    pub fn is_classical(self) -> bool {
        matches!(self, Family::A | Family::B | Family::C | Family::D)
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = match self {
            Family::A => "A",
            Family::B => "B",
            Family::C => "C",
            Family::D => "D",
            Family::G2 => "G2",
            Family::F4 => "F4",
            Family::E6 => "E6",
            Family::E7 => "E7",
            Family::E8 => "E8",
        };
        f.write_str(s)
    }
}

impl std::str::FromStr for Family {
    type Err = TypeError;

    fn from_str(s: &str) -> Result<Self, TypeError> {
        match s {
            "A" | "a" => Ok(Family::A),
            "B" | "b" => Ok(Family::B),
            "C" | "c" => Ok(Family::C),
            "D" | "d" => Ok(Family::D),
            "G2" | "g2" => Ok(Family::G2),
            "F4" | "f4" => Ok(Family::F4),
            "E6" | "e6" => Ok(Family::E6),
            "E7" | "e7" => Ok(Family::E7),
            "E8" | "e8" => Ok(Family::E8),
            other => Err(TypeError::UnknownFamily(other.to_string())),
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum TypeError {
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("rank {rank} is not valid for family {family}")]
    InvalidRank { family: Family, rank: usize },
}

/// A simple type: family plus rank.
///
/// Ranks are fixed for the exceptional families. `D3` is accepted and keeps
/// its own fork-shaped node numbering (node 1 is the center). `B1` and `C1`
/// are accepted as degenerate rank-one systems so that every classical orbit,
/// however small, has a diagram to live on.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, serde::Serialize, serde::Deserialize)]
pub struct SimpleType {
    family: Family,
    rank: usize,
}

impl SimpleType {
    pub fn new(family: Family, rank: usize) -> Result<Self, TypeError> {
        let ok = match family {
            Family::A | Family::B | Family::C => rank >= 1,
            Family::D => rank >= 3,
            Family::G2 => rank == 2,
            Family::F4 => rank == 4,
            Family::E6 => rank == 6,
            Family::E7 => rank == 7,
            Family::E8 => rank == 8,
        };
        if ok {
            Ok(SimpleType { family, rank })
        } else {
            Err(TypeError::InvalidRank { family, rank })
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Cartan matrix in the convention `c[i][j] = <alpha_j, alpha_i^vee>`,
    /// so row `i` describes the pairing of every simple root against the
    /// coroot of node `i`.
    pub fn cartan_matrix(&self) -> Vec<Vec<i32>> {
        let n = self.rank;
        let mut c = vec![vec![0i32; n]; n];
        for (i, row) in c.iter_mut().enumerate() {
            row[i] = 2;
        }
        let link = |c: &mut Vec<Vec<i32>>, i: usize, j: usize| {
            c[i][j] = -1;
            c[j][i] = -1;
        };
        match self.family {
            Family::A => {
                for i in 0..n.saturating_sub(1) {
                    link(&mut c, i, i + 1);
                }
            }
            Family::B => {
                for i in 0..n.saturating_sub(1) {
                    link(&mut c, i, i + 1);
                }
                if n >= 2 {
                    // last node is short: its coroot pairs to -2 with the neighbor
                    c[n - 1][n - 2] = -2;
                }
            }
            Family::C => {
                for i in 0..n.saturating_sub(1) {
                    link(&mut c, i, i + 1);
                }
                if n >= 2 {
                    // last node is long
                    c[n - 2][n - 1] = -2;
                }
            }
            Family::D => {
                if n == 3 {
                    // fork shape with node 1 as the center
                    link(&mut c, 0, 1);
                    link(&mut c, 0, 2);
                } else {
                    for i in 0..n - 2 {
                        link(&mut c, i, i + 1);
                    }
                    link(&mut c, n - 3, n - 1);
                }
            }
            Family::G2 => {
                // alpha_1 short, alpha_2 long
                c[0][1] = -3;
                c[1][0] = -1;
            }
            Family::F4 => {
                link(&mut c, 0, 1);
                link(&mut c, 2, 3);
                // nodes 1,2 long; 3,4 short; double edge between 2 and 3
                c[1][2] = -1;
                c[2][1] = -2;
            }
            Family::E6 | Family::E7 | Family::E8 => {
                // chain 1-3-4-5-...-n with node 2 attached to node 4
                link(&mut c, 0, 2);
                for i in 2..n - 1 {
                    link(&mut c, i, i + 1);
                }
                link(&mut c, 1, 3);
            }
        }
        c
    }

    /// Edges of the Dynkin diagram as unordered node pairs (ignoring bond
    /// multiplicity).
    pub fn diagram_edges(&self) -> Vec<(usize, usize)> {
        let c = self.cartan_matrix();
        let mut edges = Vec::new();
        for (i, row) in c.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate().skip(i + 1) {
                if entry != 0 {
                    edges.push((i, j));
                }
            }
        }
        edges
    }

    /// True for nodes whose simple root is short. All-false for the
    /// simply-laced families.
    pub fn short_nodes(&self) -> Vec<bool> {
        let n = self.rank;
        let mut short = vec![false; n];
        match self.family {
            Family::B => {
                if n >= 2 {
                    short[n - 1] = true;
                }
            }
            Family::C => {
                if n >= 2 {
                    for s in short.iter_mut().take(n - 1) {
                        *s = true;
                    }
                }
            }
            Family::G2 => short[0] = true,
            Family::F4 => {
                short[2] = true;
                short[3] = true;
            }
            _ => {}
        }
        short
    }

    /// Number of roots, by the classical closed forms.
    pub fn root_count(&self) -> usize {
        let n = self.rank;
        match self.family {
            Family::A => n * (n + 1),
            Family::B | Family::C => 2 * n * n,
            Family::D => 2 * n * (n - 1),
            Family::G2 => 12,
            Family::F4 => 48,
            Family::E6 => 72,
            Family::E7 => 126,
            Family::E8 => 240,
        }
    }
}

impl fmt::Display for SimpleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.family {
            Family::A | Family::B | Family::C | Family::D => {
                write!(f, "{}{}", self.family, self.rank)
            }
            _ => write!(f, "{}", self.family),
        }
    }
}

impl std::str::FromStr for SimpleType {
    type Err = TypeError;

    /// Parses `"D6"`, `"A5"`, `"E8"`, `"G2"`, ...
    fn from_str(s: &str) -> Result<Self, TypeError> {
        let s = s.trim();
        match s {
            "G2" | "F4" | "E6" | "E7" | "E8" => {
                let family: Family = s.parse()?;
                let rank = match family {
                    Family::G2 => 2,
                    Family::F4 => 4,
                    Family::E6 => 6,
                    Family::E7 => 7,
                    Family::E8 => 8,
                    _ => unreachable!(),
                };
                SimpleType::new(family, rank)
            }
            _ => {
                let (fam, digits) = s.split_at(1);
                let family: Family = fam.parse()?;
                let rank: usize = digits
                    .parse()
                    .map_err(|_| TypeError::UnknownFamily(s.to_string()))?;
                SimpleType::new(family, rank)
            }
        }
    }
}

/// One root, as coefficients over the simple roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Root {
    coeffs: Vec<i32>,
}

impl Root {
    pub fn coeffs(&self) -> &[i32] {
        &self.coeffs
    }

    pub fn is_positive(&self) -> bool {
        self.coeffs.iter().any(|&c| c > 0)
    }

    pub fn negated(&self) -> Root {
        Root {
            coeffs: self.coeffs.iter().map(|&c| -c).collect(),
        }
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "[{}]", parts.join(" "))
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum RootSystemError {
    #[error("coefficient vector has length {got}, expected rank {expected}")]
    LengthMismatch { expected: usize, got: usize },
}

/// All roots of a simple type, with O(1) membership lookup.
///
/// The root list is sorted lexicographically on coefficient vectors, which
/// fixes the vertex order of everything built on top of it. Immutable after
/// construction.
#[derive(Clone, Debug)]
pub struct RootSystem {
    stype: SimpleType,
    roots: Vec<Root>,
    index: HashMap<Vec<i32>, usize>,
}

impl RootSystem {
    /// Enumerates the full root system of `stype`.
    ///
    /// Positive roots are generated by closing the simple roots under the
    /// root-string rule: for a root `beta` and simple root `alpha_i`, with
    /// `p` the depth of the string below `beta`, the vector `beta + alpha_i`
    /// is a root exactly when `p - <beta, alpha_i^vee> > 0`.
    pub fn build(stype: SimpleType) -> RootSystem {
        let n = stype.rank();
        let cartan = stype.cartan_matrix();

        let mut positive: Vec<Vec<i32>> = Vec::new();
        let mut seen: HashMap<Vec<i32>, ()> = HashMap::new();
        for i in 0..n {
            let mut alpha = vec![0i32; n];
            alpha[i] = 1;
            seen.insert(alpha.clone(), ());
            positive.push(alpha);
        }

        let mut frontier = positive.clone();
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for beta in &frontier {
                for i in 0..n {
                    // pairing <beta, alpha_i^vee>
                    let pairing: i32 = (0..n).map(|j| beta[j] * cartan[i][j]).sum();
                    // depth of the alpha_i-string below beta; everything below
                    // beta in the string has smaller height and is already known
                    let mut p = 0i32;
                    let mut down = beta.clone();
                    loop {
                        down[i] -= 1;
                        if seen.contains_key(&down) {
                            p += 1;
                        } else {
                            break;
                        }
                    }
                    if p - pairing > 0 {
                        let mut up = beta.clone();
                        up[i] += 1;
                        if seen.insert(up.clone(), ()).is_none() {
                            next.push(up);
                        }
                    }
                }
            }
            positive.extend(next.iter().cloned());
            frontier = next;
        }

        let mut roots: Vec<Root> = positive
            .iter()
            .map(|c| Root { coeffs: c.clone() })
            .collect();
        let negatives: Vec<Root> = roots.iter().map(|r| r.negated()).collect();
        roots.extend(negatives);
        roots.sort();

        let index = roots
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();

        RootSystem {
            stype,
            roots,
            index,
        }
    }

    pub fn stype(&self) -> SimpleType {
        self.stype
    }

    pub fn rank(&self) -> usize {
        self.stype.rank()
    }

    pub fn roots(&self) -> &[Root] {
        &self.roots
    }

    pub fn len(&self) -> usize {
        self.roots.len()
    }

    pub fn is_empty(&self) -> bool {
        self.roots.is_empty()
    }

    pub fn root(&self, index: usize) -> &Root {
        &self.roots[index]
    }

    /// Index of the root with the given coefficient vector, if any.
    /// The vector length is assumed to equal the rank.
    pub fn root_index(&self, coeffs: &[i32]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// Checked membership query.
    pub fn is_root(&self, coeffs: &[i32]) -> Result<bool, RootSystemError> {
        if coeffs.len() != self.rank() {
            return Err(RootSystemError::LengthMismatch {
                expected: self.rank(),
                got: coeffs.len(),
            });
        }
        Ok(self.index.contains_key(coeffs))
    }

    /// Unchecked membership for internal hot paths.
    pub(crate) fn contains(&self, coeffs: &[i32]) -> bool {
        self.index.contains_key(coeffs)
    }
}
