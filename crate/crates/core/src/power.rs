//! The power graph `Ĝ`: all subsets of `V(G)`, with `S ~ T` iff `S △ T` is
//! an edge of `G`. It is the Cayley graph of `(2^V, △)` generated by the
//! edges, so it is built with [`cayley`] on characteristic vectors.

use alloc::format;
use alloc::vec::Vec;

use crate::families::{cayley_with_cap, cycle, projective_cube_with_cap, CayleySpec, FamilyError, Z2Vector, DEFAULT_DIM_CAP};
use crate::graph::{Component, Graph};
use crate::hom::{verify_hom, HomCheck, HomError, Homomorphism};
use crate::iso::verify_isomorphism;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PowerError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error("homomorphism target is not the Cayley graph of the given spec")]
    TargetNotCayley,
    #[error("C_{0} has even length; its power graph components are not projective cubes")]
    EvenCycle(usize),
}

#[derive(Clone, Debug)]
pub struct PowerGraph {
    pub base: Graph,
    /// Vertex `S` is the subset whose characteristic vector is `S`.
    pub graph: Graph,
    /// Even-size subsets, increasing.
    pub even_component: Vec<usize>,
}

impl PowerGraph {
    /// `v ↦ {v}`.
    pub fn natural_injection(&self) -> Homomorphism {
        let map = (0..self.base.n()).map(|v| 1 << v).collect();
        Homomorphism::verified(self.base.clone(), self.graph.clone(), map)
            .expect("singletons of an edge differ by that edge")
    }

    /// The component containing `∅`, vertices in increasing order.
    pub fn component_of_empty(&self) -> Component {
        self.graph
            .components()
            .into_iter()
            .find(|c| c.vertices.first() == Some(&0))
            .expect("the empty set is a vertex")
    }

    /// The induced subgraph on [`PowerGraph::even_component`].
    pub fn even_graph(&self) -> Graph {
        self.graph
            .induced_subgraph(&self.even_component)
            .expect("subsets are vertices")
    }
}

/// The edge set of `g` as generators of `ℤ₂^{|V(g)|}`.
pub fn edge_spec(g: &Graph) -> Result<CayleySpec, FamilyError> {
    let dim = g.n() as u32;
    let gens = g
        .edges()
        .map(|(u, v)| Z2Vector::new(dim, (1 << u) | (1 << v)))
        .collect::<Result<Vec<_>, _>>()?;
    CayleySpec::new(dim, gens)
}

pub fn power_graph(g: &Graph) -> Result<PowerGraph, FamilyError> {
    power_graph_with_cap(g, DEFAULT_DIM_CAP)
}

pub fn power_graph_with_cap(g: &Graph, cap: u32) -> Result<PowerGraph, FamilyError> {
    if g.n() as u64 > cap as u64 {
        return Err(FamilyError::DimensionCap {
            dim: g.n() as u32,
            cap,
        });
    }
    let graph = cayley_with_cap(&edge_spec(g)?, cap)?;
    let even_component = (0..graph.n()).filter(|s| s.count_ones() % 2 == 0).collect();
    Ok(PowerGraph {
        base: g.clone(),
        graph,
        even_component,
    })
}

/// Extends `phi: G → Cay(ℤ₂^d, Ω)` to `φ̂: Ĝ → Cay(ℤ₂^d, Ω)` by
/// `φ̂(S) = ⊕_{v∈S} φ(v)`.
pub fn extend_hom(phi: &Homomorphism, spec: &CayleySpec) -> Result<Homomorphism, PowerError> {
    let target = phi.target();
    if target.n() as u64 != 1u64 << spec.dim() {
        return Err(PowerError::TargetNotCayley);
    }
    for u in 0..target.n() {
        let expected = spec.generators().len();
        if target.degree(u) != expected || target.neighbors(u).any(|v| !spec.contains((u ^ v) as u64)) {
            return Err(PowerError::TargetNotCayley);
        }
    }
    if let HomCheck::Violated { u, v } = verify_hom(phi) {
        return Err(HomError::NotEdgePreserving { u, v }.into());
    }
    let pg = power_graph(phi.source())?;
    let images = phi.map();
    let map = (0..pg.graph.n())
        .map(|s| {
            (0..images.len())
                .filter(|&v| s >> v & 1 == 1)
                .fold(0, |acc, v| acc ^ images[v])
        })
        .collect();
    Ok(Homomorphism::verified(pg.graph, target.clone(), map)?)
}

/// The even-size half of `Ĉ_n` together with its isomorphism to `PC_{n−1}`.
#[derive(Clone, Debug)]
pub struct EvenCycleComponent {
    /// Induced on the even subsets of `{0..n}`, in increasing order.
    pub graph: Graph,
    pub subsets: Vec<usize>,
    /// `to_pc[i]` is the vertex of `PC_{n−1}` matching `subsets[i]`.
    pub to_pc: Vec<usize>,
    pub pc: Graph,
}

impl EvenCycleComponent {
    /// Inverse of `to_pc`: the subset matching each vertex of `PC_{n−1}`.
    pub fn from_pc(&self) -> Vec<usize> {
        let mut inv = alloc::vec![0; self.to_pc.len()];
        for (i, &x) in self.to_pc.iter().enumerate() {
            inv[x] = self.subsets[i];
        }
        inv
    }
}

/// Coordinate `i` of the image of `S` is the parity of `|S ∩ {0..=i}|`, for
/// `i < n−1`. Edges `{i, i+1}` become `e_{i+1}` and `{n−1, 0}` becomes `J`.
fn prefix_parity(s: usize, n: usize) -> usize {
    let mut x = 0;
    let mut parity = 0;
    for i in 0..n - 1 {
        parity ^= s >> i & 1;
        x |= parity << i;
    }
    x
}

pub fn even_component_as_pc(n: usize) -> Result<EvenCycleComponent, PowerError> {
    if n.is_multiple_of(2) {
        return Err(PowerError::EvenCycle(n));
    }
    let c = cycle(n)?;
    let pg = power_graph(&c)?;
    let graph = pg.even_graph();
    let pc = projective_cube_with_cap((n - 1) as u32, DEFAULT_DIM_CAP)?;
    let to_pc: Vec<usize> = pg.even_component.iter().map(|&s| prefix_parity(s, n)).collect();
    if !verify_isomorphism(&graph, &pc, &to_pc) {
        return Err(FamilyError::BadParameter(format!("prefix map on C_{n} is not an isomorphism")).into());
    }
    Ok(EvenCycleComponent {
        graph,
        subsets: pg.even_component,
        to_pc,
        pc,
    })
}
