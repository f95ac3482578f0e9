//! Graph families: binary Cayley graphs and the small classical graphs
//! built around them.

use alloc::collections::BTreeSet;
use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::BitSet;
use crate::graph::Graph;

/// Largest `ℤ₂^d` dimension (or power-set ground size) built by default.
pub const DEFAULT_DIM_CAP: u32 = 20;

/// Dimensions past this never fit in a `u64` element.
const HARD_DIM_LIMIT: u32 = 63;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FamilyError {
    #[error("the zero vector cannot be a generator")]
    ZeroGenerator,
    #[error("generator {0} listed twice")]
    DuplicateGenerator(Z2Vector),
    #[error("generator of dimension {found} in a dimension-{expected} spec")]
    DimensionMismatch { expected: u32, found: u32 },
    #[error("dimension {dim} exceeds the cap of {cap}")]
    DimensionCap { dim: u32, cap: u32 },
    #[error("bit pattern {bits:#x} does not fit in dimension {dim}")]
    BitsOutOfRange { dim: u32, bits: u64 },
    #[error("invalid parameter: {0}")]
    BadParameter(String),
}

/// An element of `ℤ₂^dim`. Bit `i` of `bits` is the coordinate of `e_{i+1}`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Z2Vector {
    dim: u32,
    bits: u64,
}

impl Z2Vector {
    pub fn new(dim: u32, bits: u64) -> Result<Z2Vector, FamilyError> {
        if dim > HARD_DIM_LIMIT || (dim < 64 && bits >> dim != 0) {
            return Err(FamilyError::BitsOutOfRange { dim, bits });
        }
        Ok(Z2Vector { dim, bits })
    }

    pub fn zero(dim: u32) -> Z2Vector {
        Z2Vector { dim, bits: 0 }
    }

    /// The basis vector `e_{i+1}` (0-based `i`).
    pub fn basis(dim: u32, i: u32) -> Z2Vector {
        assert!(i < dim);
        Z2Vector { dim, bits: 1 << i }
    }

    /// The all-ones vector `J`.
    pub fn all_ones(dim: u32) -> Z2Vector {
        Z2Vector {
            dim,
            bits: (1u64 << dim) - 1,
        }
    }

    pub fn dim(self) -> u32 {
        self.dim
    }

    pub fn bits(self) -> u64 {
        self.bits
    }

    pub fn is_zero(self) -> bool {
        self.bits == 0
    }

    pub fn weight(self) -> u32 {
        self.bits.count_ones()
    }

    /// Parses a bitstring whose leftmost character is the `e₁` coordinate.
    pub fn parse(s: &str) -> Result<Z2Vector, FamilyError> {
        let dim = s.len() as u32;
        if dim > HARD_DIM_LIMIT {
            return Err(FamilyError::DimensionCap {
                dim,
                cap: HARD_DIM_LIMIT,
            });
        }
        let mut bits = 0u64;
        for (i, c) in s.chars().enumerate() {
            match c {
                '0' => {}
                '1' => bits |= 1 << i,
                _ => return Err(FamilyError::BadParameter(format!("not a bitstring: {s:?}"))),
            }
        }
        Ok(Z2Vector { dim, bits })
    }
}

impl core::ops::Add for Z2Vector {
    type Output = Z2Vector;

    fn add(self, rhs: Z2Vector) -> Z2Vector {
        debug_assert_eq!(self.dim, rhs.dim);
        Z2Vector {
            dim: self.dim,
            bits: self.bits ^ rhs.bits,
        }
    }
}

impl fmt::Display for Z2Vector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&bitstring(self.bits, self.dim))
    }
}

fn bitstring(bits: u64, dim: u32) -> String {
    (0..dim).map(|i| if bits >> i & 1 == 1 { '1' } else { '0' }).collect()
}

/// The connection set `Ω` of `Cay(ℤ₂^dim, Ω)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CayleySpec {
    dim: u32,
    generators: Vec<Z2Vector>,
}

impl CayleySpec {
    /// Validates and stores the generators in the order given.
    pub fn new(dim: u32, generators: Vec<Z2Vector>) -> Result<CayleySpec, FamilyError> {
        if dim > HARD_DIM_LIMIT {
            return Err(FamilyError::DimensionCap {
                dim,
                cap: HARD_DIM_LIMIT,
            });
        }
        let mut seen = BTreeSet::new();
        for &g in &generators {
            if g.dim != dim {
                return Err(FamilyError::DimensionMismatch {
                    expected: dim,
                    found: g.dim,
                });
            }
            if g.is_zero() {
                return Err(FamilyError::ZeroGenerator);
            }
            if !seen.insert(g.bits) {
                return Err(FamilyError::DuplicateGenerator(g));
            }
        }
        Ok(CayleySpec { dim, generators })
    }

    /// Generators `e₁, …, e_d` followed by `J`.
    pub fn projective_cube(d: u32) -> Result<CayleySpec, FamilyError> {
        if d == 0 {
            return Err(FamilyError::BadParameter("projective cube needs d >= 1".into()));
        }
        let mut gens: Vec<Z2Vector> = (0..d).map(|i| Z2Vector::basis(d, i)).collect();
        // PC_1 = Cay(ℤ₂, {e₁}) since J = e₁ there.
        if d > 1 {
            gens.push(Z2Vector::all_ones(d));
        }
        CayleySpec::new(d, gens)
    }

    pub fn hypercube(d: u32) -> Result<CayleySpec, FamilyError> {
        if d == 0 {
            return Err(FamilyError::BadParameter("hypercube needs d >= 1".into()));
        }
        CayleySpec::new(d, (0..d).map(|i| Z2Vector::basis(d, i)).collect())
    }

    pub fn dim(&self) -> u32 {
        self.dim
    }

    pub fn generators(&self) -> &[Z2Vector] {
        &self.generators
    }

    pub fn contains(&self, v: u64) -> bool {
        self.generators.iter().any(|g| g.bits == v)
    }
}

fn check_cap(dim: u32, cap: u32) -> Result<(), FamilyError> {
    let cap = cap.min(HARD_DIM_LIMIT);
    if dim > cap {
        Err(FamilyError::DimensionCap { dim, cap })
    } else {
        Ok(())
    }
}

pub fn cayley(spec: &CayleySpec) -> Result<Graph, FamilyError> {
    cayley_with_cap(spec, DEFAULT_DIM_CAP)
}

/// `Cay(ℤ₂^dim, Ω)`: vertex `v` is the element whose bits are `v`, and
/// `u ~ v` iff `u ⊕ v ∈ Ω`. Labels are the element bitstrings.
pub fn cayley_with_cap(spec: &CayleySpec, cap: u32) -> Result<Graph, FamilyError> {
    check_cap(spec.dim, cap)?;
    let n = 1usize << spec.dim;
    let rows = (0..n)
        .map(|u| {
            BitSet::from_iter_with_len(n, spec.generators.iter().map(|g| u ^ g.bits as usize))
        })
        .collect();
    let labels = (0..n as u64).map(|v| bitstring(v, spec.dim)).collect();
    Ok(Graph::from_rows(rows)
        .with_labels(labels)
        .expect("one label per element")
        .assume_vertex_transitive())
}

pub fn projective_cube(d: u32) -> Result<Graph, FamilyError> {
    projective_cube_with_cap(d, DEFAULT_DIM_CAP)
}

pub fn projective_cube_with_cap(d: u32, cap: u32) -> Result<Graph, FamilyError> {
    check_cap(d, cap)?;
    cayley_with_cap(&CayleySpec::projective_cube(d)?, cap)
}

pub fn hypercube(d: u32) -> Result<Graph, FamilyError> {
    hypercube_with_cap(d, DEFAULT_DIM_CAP)
}

pub fn hypercube_with_cap(d: u32, cap: u32) -> Result<Graph, FamilyError> {
    check_cap(d, cap)?;
    cayley_with_cap(&CayleySpec::hypercube(d)?, cap)
}

pub fn cycle(n: usize) -> Result<Graph, FamilyError> {
    if n < 3 {
        return Err(FamilyError::BadParameter(format!("cycle needs n >= 3, got {n}")));
    }
    let edges: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
    Ok(Graph::from_edges(n, &edges)
        .expect("cycle edges are valid")
        .assume_vertex_transitive())
}

pub fn path(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::BadParameter("path needs n >= 1".into()));
    }
    let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
    Ok(Graph::from_edges(n, &edges).expect("path edges are valid"))
}

pub fn complete(n: usize) -> Result<Graph, FamilyError> {
    if n < 1 {
        return Err(FamilyError::BadParameter("complete graph needs n >= 1".into()));
    }
    Ok(Graph::empty(n).complement().assume_vertex_transitive())
}

/// Renders a subset mask with 1-based elements, e.g. `{1,3}`.
pub fn subset_label(mask: u64) -> String {
    let mut s = String::from("{");
    let mut first = true;
    for i in 0..64 {
        if mask >> i & 1 == 1 {
            if !first {
                s.push(',');
            }
            first = false;
            s.push_str(&format!("{}", i + 1));
        }
    }
    s.push('}');
    s
}

/// All `k`-subsets of `0..n` as masks, in increasing mask (colex) order.
pub(crate) fn k_subsets(n: u32, k: u32) -> Vec<u64> {
    let mut out = Vec::new();
    if k > n {
        return out;
    }
    if k == 0 {
        out.push(0);
        return out;
    }
    let limit = 1u64 << n;
    let mut s: u64 = (1u64 << k) - 1;
    while s < limit {
        out.push(s);
        // Gosper's hack: next mask with the same popcount.
        let c = s & s.wrapping_neg();
        let r = s + c;
        s = (((r ^ s) >> 2) / c) | r;
    }
    out
}

fn binomial(n: u64, k: u64) -> u64 {
    let k = k.min(n - k);
    (0..k).fold(1u64, |acc, i| acc.saturating_mul(n - i) / (i + 1))
}

/// The Kneser graph `K(n, k)`: `k`-subsets of `{1..n}`, adjacent when
/// disjoint. Vertices are in colexicographic order.
pub fn kneser(n: u32, k: u32) -> Result<Graph, FamilyError> {
    if k < 1 || k >= n {
        return Err(FamilyError::BadParameter(format!("kneser needs 1 <= k < n, got n={n}, k={k}")));
    }
    if n > HARD_DIM_LIMIT || binomial(n as u64, k as u64) > 1 << DEFAULT_DIM_CAP {
        return Err(FamilyError::BadParameter(format!("K({n},{k}) is too large")));
    }
    let sets = k_subsets(n, k);
    let m = sets.len();
    let rows = sets
        .iter()
        .map(|&a| {
            BitSet::from_iter_with_len(m, (0..m).filter(|&j| sets[j] & a == 0))
        })
        .collect();
    Ok(Graph::from_rows(rows)
        .with_labels(sets.iter().map(|&s| subset_label(s)).collect())
        .expect("one label per subset")
        .assume_vertex_transitive())
}

/// The generalized Mycielski graph `M^k(g)`.
///
/// Vertex `r·n + i` is the level-`r` copy of vertex `i` (`0 ≤ r ≤ k`) and
/// the apex `w` is the last vertex. Level 0 carries the edges of `g`; for
/// each edge `ij` of `g` and `1 ≤ r ≤ k`, the level-`r` copy of `i` is
/// joined to the level-`(r−1)` copy of `j`; `w` is joined to level `k`.
pub fn mycielski_level(g: &Graph, k: usize) -> Graph {
    let n = g.n();
    let total = (k + 1) * n + 1;
    let apex = total - 1;
    let mut edges = Vec::with_capacity((2 * k + 1) * g.edge_count() + n);
    for (i, j) in g.edges() {
        edges.push((i, j));
        for r in 1..=k {
            edges.push((r * n + i, (r - 1) * n + j));
            edges.push((r * n + j, (r - 1) * n + i));
        }
    }
    for i in 0..n {
        edges.push((k * n + i, apex));
    }
    let mut labels: Vec<String> = (0..=k)
        .flat_map(|r| (0..n).map(move |i| format!("v{r}_{i}")))
        .collect();
    labels.push(String::from("w"));
    Graph::from_edges(total, &edges)
        .expect("mycielski edges are valid")
        .with_labels(labels)
        .expect("one label per vertex")
}

/// A vertex `(A, Ā)` of the partition model of `PC_{2k}`: a bipartition of
/// a ground set of size `2k+1`, stored as its smaller part `A`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct PartitionVertex {
    ground: u32,
    part: u64,
}

impl PartitionVertex {
    /// Canonicalizes `set ⊆ {0..ground}` to the smaller side of `(set, complement)`.
    pub fn new(ground: u32, set: u64) -> Result<PartitionVertex, FamilyError> {
        if ground.is_multiple_of(2) || ground > HARD_DIM_LIMIT {
            return Err(FamilyError::BadParameter(format!("ground size {ground} must be odd")));
        }
        let full = (1u64 << ground) - 1;
        if set & !full != 0 {
            return Err(FamilyError::BitsOutOfRange { dim: ground, bits: set });
        }
        let part = if set.count_ones() > ground / 2 { set ^ full } else { set };
        Ok(PartitionVertex { ground, part })
    }

    pub fn ground(self) -> u32 {
        self.ground
    }

    /// The smaller part `A`, as a mask over `0..ground`.
    pub fn part(self) -> u64 {
        self.part
    }

    pub fn complement(self) -> u64 {
        self.part ^ ((1u64 << self.ground) - 1)
    }

    pub fn size(self) -> u32 {
        self.part.count_ones()
    }

    /// Adjacent iff `A` or `Ā` differs from `B` by exactly one element.
    pub fn is_adjacent(self, other: PartitionVertex) -> bool {
        self.ground == other.ground
            && ((self.part ^ other.part).count_ones() == 1
                || (self.complement() ^ other.part).count_ones() == 1)
    }
}

impl fmt::Display for PartitionVertex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&subset_label(self.part))
    }
}

/// `PC_{2k}` realized on the bipartitions of a `(2k+1)`-set.
#[derive(Clone, Debug)]
pub struct PartitionModel {
    pub k: u32,
    pub graph: Graph,
    /// Vertex `i` of `graph` is `vertices[i]`; ordered by part size, then
    /// colexicographically.
    pub vertices: Vec<PartitionVertex>,
}

impl PartitionModel {
    pub fn index_of(&self, v: PartitionVertex) -> Option<usize> {
        self.vertices.binary_search_by_key(&(v.size(), v.part), |p| (p.size(), p.part)).ok()
    }

    /// Indices of the parts of size exactly `k`.
    pub fn middle_layer(&self) -> Vec<usize> {
        (0..self.vertices.len()).filter(|&i| self.vertices[i].size() == self.k).collect()
    }

    /// Isomorphism onto [`projective_cube`]`(2k)`: each partition is sent to
    /// the side avoiding element `2k`, read as a vector of `ℤ₂^{2k}`.
    pub fn cube_isomorphism(&self) -> Vec<usize> {
        let top = 2 * self.k;
        self.vertices
            .iter()
            .map(|v| if v.part >> top & 1 == 1 { v.complement() } else { v.part } as usize)
            .collect()
    }
}

pub fn pc_partition_model(k: u32) -> Result<PartitionModel, FamilyError> {
    pc_partition_model_with_cap(k, DEFAULT_DIM_CAP)
}

pub fn pc_partition_model_with_cap(k: u32, cap: u32) -> Result<PartitionModel, FamilyError> {
    if k < 1 {
        return Err(FamilyError::BadParameter("partition model needs k >= 1".into()));
    }
    check_cap(2 * k, cap)?;
    let ground = 2 * k + 1;
    let vertices: Vec<PartitionVertex> = (0..=k)
        .flat_map(|s| k_subsets(ground, s))
        .map(|part| PartitionVertex { ground, part })
        .collect();
    let n = vertices.len();
    let model = PartitionModel {
        k,
        graph: Graph::empty(0),
        vertices,
    };
    let mut rows = vec![BitSet::new(n); n];
    for (i, v) in model.vertices.iter().enumerate() {
        for e in 0..ground {
            let moved = PartitionVertex::new(ground, v.part ^ (1 << e)).expect("in range");
            let j = model.index_of(moved).expect("every partition is listed");
            rows[i].insert(j);
        }
    }
    let labels = model.vertices.iter().map(|v| format!("{v}")).collect();
    let graph = Graph::from_rows(rows)
        .with_labels(labels)
        .expect("one label per partition")
        .assume_vertex_transitive();
    Ok(PartitionModel { graph, ..model })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::distance::{girth, odd_girth, Length};

    #[test]
    fn small_cayley_graphs() {
        let c4 = cayley(&CayleySpec::hypercube(2).unwrap()).unwrap();
        assert_eq!((c4.n(), c4.edge_count(), c4.regular_degree()), (4, 4, Some(2)));
        let k4 = projective_cube(2).unwrap();
        assert_eq!((k4.n(), k4.edge_count()), (4, 6));
        assert_eq!(k4.label(3), Some("11"));
    }

    #[test]
    fn cayley_spec_errors() {
        assert_eq!(
            CayleySpec::new(2, vec![Z2Vector::zero(2)]),
            Err(FamilyError::ZeroGenerator)
        );
        let e1 = Z2Vector::basis(2, 0);
        assert_eq!(
            CayleySpec::new(2, vec![e1, e1]),
            Err(FamilyError::DuplicateGenerator(e1))
        );
        assert!(matches!(
            CayleySpec::new(3, vec![e1]),
            Err(FamilyError::DimensionMismatch { .. })
        ));
        assert!(matches!(projective_cube(21), Err(FamilyError::DimensionCap { dim: 21, cap: 20 })));
        assert!(matches!(projective_cube_with_cap(5, 4), Err(FamilyError::DimensionCap { .. })));
        assert!(Z2Vector::new(3, 8).is_err());
    }

    #[test]
    fn bitstring_round_trip() {
        let v = Z2Vector::parse("11110").unwrap();
        assert_eq!(v.bits(), 0b01111);
        assert_eq!(format!("{v}"), "11110");
        assert!(Z2Vector::parse("12").is_err());
    }

    #[test]
    fn projective_cube_invariants() {
        let pc4 = projective_cube(4).unwrap();
        assert_eq!((pc4.n(), pc4.regular_degree()), (16, Some(5)));
        assert_eq!(odd_girth(&pc4), Length::Finite(5));
        assert_eq!(girth(&pc4), Length::Finite(4));
        assert!(projective_cube(3).unwrap().is_bipartite());
    }

    #[test]
    fn classical_families() {
        let q3 = hypercube(3).unwrap();
        assert_eq!((q3.n(), q3.regular_degree(), q3.is_bipartite()), (8, Some(3), true));
        assert_eq!(odd_girth(&cycle(5).unwrap()), Length::Finite(5));
        assert!(cycle(2).is_err());
        assert!(path(0).is_err());
        assert_eq!(path(1).unwrap().n(), 1);
        assert!(complete(0).is_err());
    }

    #[test]
    fn kneser_petersen() {
        let p = kneser(5, 2).unwrap();
        assert_eq!((p.n(), p.edge_count(), p.regular_degree()), (10, 15, Some(3)));
        assert_eq!(odd_girth(&p), Length::Finite(5));
        assert_eq!(p.label(0), Some("{1,2}"));
        assert!(kneser(3, 3).is_err());
        assert!(kneser(3, 0).is_err());
    }

    #[test]
    fn colex_subsets() {
        assert_eq!(k_subsets(4, 2), vec![0b0011, 0b0101, 0b0110, 0b1001, 0b1010, 0b1100]);
        assert_eq!(k_subsets(3, 0), vec![0]);
    }

    #[test]
    fn mycielski_sizes() {
        let c5 = cycle(5).unwrap();
        let grotzsch = mycielski_level(&c5, 1);
        assert_eq!((grotzsch.n(), grotzsch.edge_count()), (11, 20));
        assert_eq!(mycielski_level(&c5, 2).n(), 16);
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let m0 = mycielski_level(&k2, 0);
        assert_eq!(m0.n(), 3);
        assert!(m0.has_edge(0, 1) && m0.has_edge(0, 2) && m0.has_edge(1, 2));
    }

    #[test]
    fn partition_model_basics() {
        let m = pc_partition_model(2).unwrap();
        assert_eq!((m.graph.n(), m.graph.regular_degree()), (16, Some(5)));
        let empty = m.index_of(PartitionVertex::new(5, 0).unwrap()).unwrap();
        let nbrs: Vec<u64> = m.graph.neighbors(empty).map(|j| m.vertices[j].part()).collect();
        assert_eq!(nbrs, vec![1, 2, 4, 8, 16]);
        assert_eq!(m.middle_layer().len(), 10);
        let k1 = pc_partition_model(1).unwrap();
        assert_eq!(k1.graph.edge_count(), 6);
    }

    #[test]
    fn partition_vertex_canonical() {
        let a = PartitionVertex::new(5, 0b11100).unwrap();
        assert_eq!(a.part(), 0b00011);
        assert_eq!(a, PartitionVertex::new(5, 0b00011).unwrap());
        assert!(PartitionVertex::new(4, 1).is_err());
    }
}
