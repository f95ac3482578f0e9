//! Exact homomorphism search and the questions built on it.

mod audit;
mod coloring;
mod search;

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

pub use audit::{is_core, onto_audit, OntoAudit, OntoVerdict};
pub use coloring::{
    chromatic_bounds, chromatic_number, greedy_clique, greedy_coloring, max_clique, ChromaticReport, CliqueResult,
};
pub use search::{search, Mode, Pruning, SearchOptions, SearchOutcome, SearchStats, Status, VarOrder};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum HomError {
    #[error("map has {found} entries, source has {expected} vertices")]
    LengthMismatch { expected: usize, found: usize },
    #[error("vertex {v} maps to {image}, outside the target's {n} vertices")]
    ImageOutOfRange { v: usize, image: usize, n: usize },
    #[error("edge ({u}, {v}) is not preserved")]
    NotEdgePreserving { u: usize, v: usize },
    #[error("graphs do not compose: {0}")]
    GraphMismatch(&'static str),
    #[error("target graph has no vertices")]
    EmptyTarget,
    #[error("enumeration limit must be at least 1")]
    ZeroLimit,
    #[error("graph must be connected")]
    NotConnected,
    #[error("search budget exhausted")]
    Timeout,
}

/// A total vertex map from `source` to `target`. Construction only checks
/// shape; use [`verify_hom`] for edge preservation.
#[derive(Clone, Debug)]
pub struct Homomorphism {
    source: Graph,
    target: Graph,
    map: Vec<usize>,
}

impl Homomorphism {
    pub fn new(source: Graph, target: Graph, map: Vec<usize>) -> Result<Homomorphism, HomError> {
        if map.len() != source.n() {
            return Err(HomError::LengthMismatch {
                expected: source.n(),
                found: map.len(),
            });
        }
        if let Some((v, &image)) = map.iter().enumerate().find(|(_, &x)| x >= target.n()) {
            return Err(HomError::ImageOutOfRange {
                v,
                image,
                n: target.n(),
            });
        }
        Ok(Homomorphism { source, target, map })
    }

    /// Like [`Homomorphism::new`], then rejects maps that break an edge.
    pub fn verified(source: Graph, target: Graph, map: Vec<usize>) -> Result<Homomorphism, HomError> {
        let f = Homomorphism::new(source, target, map)?;
        match verify_hom(&f) {
            HomCheck::Valid => Ok(f),
            HomCheck::Violated { u, v } => Err(HomError::NotEdgePreserving { u, v }),
        }
    }

    pub fn identity(g: &Graph) -> Homomorphism {
        Homomorphism {
            source: g.clone(),
            target: g.clone(),
            map: (0..g.n()).collect(),
        }
    }

    pub fn source(&self) -> &Graph {
        &self.source
    }

    pub fn target(&self) -> &Graph {
        &self.target
    }

    pub fn map(&self) -> &[usize] {
        &self.map
    }

    pub fn into_map(self) -> Vec<usize> {
        self.map
    }

    pub fn image_size(&self) -> usize {
        let mut hit = vec![false; self.target.n()];
        self.map.iter().for_each(|&x| hit[x] = true);
        hit.into_iter().filter(|&b| b).count()
    }

    pub fn is_injective(&self) -> bool {
        self.image_size() == self.source.n()
    }

    pub fn is_surjective(&self) -> bool {
        self.image_size() == self.target.n()
    }

    /// `next ∘ self`. The target of `self` must equal the source of `next`.
    pub fn then(&self, next: &Homomorphism) -> Result<Homomorphism, HomError> {
        if self.target != next.source {
            return Err(HomError::GraphMismatch("target of first map is not source of second"));
        }
        Ok(Homomorphism {
            source: self.source.clone(),
            target: next.target.clone(),
            map: self.map.iter().map(|&x| next.map[x]).collect(),
        })
    }
}

/// Result of [`verify_hom`].
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HomCheck {
    Valid,
    /// The first source edge, in lexicographic order, whose image is not an edge.
    Violated { u: usize, v: usize },
}

impl HomCheck {
    pub fn is_valid(self) -> bool {
        self == HomCheck::Valid
    }
}

/// Checks every source edge against the target adjacency directly.
pub fn verify_hom(f: &Homomorphism) -> HomCheck {
    for (u, v) in f.source.edges() {
        if !f.target.has_edge(f.map[u], f.map[v]) {
            return HomCheck::Violated { u, v };
        }
    }
    HomCheck::Valid
}
