//! Constructive subgraph certificates into projective cubes and from them
//! into binary Cayley graphs of matching odd girth.

use alloc::format;
use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;

use crate::distance::{least_closed_walk, odd_girth, Length};
use crate::families::{
    cayley, cycle, mycielski_level, pc_partition_model, projective_cube, CayleySpec, FamilyError,
    PartitionModel, PartitionVertex,
};
use crate::hom::{verify_hom, HomCheck, HomError, Homomorphism};
use crate::power::{even_component_as_pc, extend_hom, PowerError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum EmbedError {
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Power(#[from] PowerError),
    #[error("construction check failed: {0}")]
    Validation(String),
    #[error("the Cayley graph is bipartite")]
    Bipartite,
    #[error("map is a homomorphism but identifies {identified} vertices")]
    NotInjective { identified: usize },
}

/// Result of checking a map edge by edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerificationReport {
    pub source_vertices: usize,
    pub target_vertices: usize,
    pub edges_checked: usize,
    /// Source edges whose image is not an edge, in lexicographic order.
    pub violations: Vec<(usize, usize)>,
    pub image_size: usize,
}

impl VerificationReport {
    pub fn of(f: &Homomorphism) -> VerificationReport {
        let (g, h, map) = (f.source(), f.target(), f.map());
        let violations = g.edges().filter(|&(u, v)| !h.has_edge(map[u], map[v])).collect();
        VerificationReport {
            source_vertices: g.n(),
            target_vertices: h.n(),
            edges_checked: g.edge_count(),
            violations,
            image_size: f.image_size(),
        }
    }

    pub fn is_valid(&self) -> bool {
        self.violations.is_empty()
    }
}

#[derive(Debug, Clone)]
pub struct EmbeddingCertificate {
    pub hom: Homomorphism,
    pub injective: bool,
    pub report: VerificationReport,
}

impl EmbeddingCertificate {
    /// Verifies `hom` and records whether it is injective.
    pub fn certify(hom: Homomorphism) -> Result<EmbeddingCertificate, EmbedError> {
        let report = VerificationReport::of(&hom);
        if let Some(&(u, v)) = report.violations.first() {
            return Err(HomError::NotEdgePreserving { u, v }.into());
        }
        Ok(EmbeddingCertificate {
            injective: report.image_size == report.source_vertices,
            hom,
            report,
        })
    }

    fn require_injective(self) -> Result<EmbeddingCertificate, EmbedError> {
        if self.injective {
            Ok(self)
        } else {
            Err(EmbedError::NotInjective {
                identified: self.report.source_vertices - self.report.image_size,
            })
        }
    }
}

/// `S_i = {i, i+2, …, i+2(k−1)} mod 2k+1` for `i = 0..2k`, a `(2k+1)`-cycle
/// in `K(2k+1, k)`.
pub fn canonical_kneser_cycle(k: u32) -> Result<Vec<PartitionVertex>, EmbedError> {
    if k < 1 {
        return Err(FamilyError::BadParameter("kneser cycle needs k >= 1".into()).into());
    }
    let m = 2 * k + 1;
    let sets: Vec<u64> = (0..m)
        .map(|i| (0..k).fold(0u64, |s, t| s | 1 << ((i + 2 * t) % m)))
        .collect();
    for i in 0..m as usize {
        let (a, b) = (sets[i], sets[(i + 1) % m as usize]);
        if a.count_ones() != k || a & b != 0 {
            return Err(EmbedError::Validation(format!("S_{i} and its successor are not disjoint {k}-sets")));
        }
    }
    sets.into_iter()
        .map(|s| PartitionVertex::new(m, s).map_err(EmbedError::from))
        .collect()
}

/// A Mycielski-type graph placed inside the partition model of `PC_{2k}`.
#[derive(Debug, Clone)]
pub struct MycielskiEmbedding {
    pub k: u32,
    pub levels: usize,
    /// `parts[r][j]` is the image of the level-`r` copy of cycle vertex `j`.
    pub parts: Vec<Vec<PartitionVertex>>,
    pub model: PartitionModel,
    /// Source is `M^levels(C_{2k+1})`, target the partition model.
    pub certificate: EmbeddingCertificate,
}

impl MycielskiEmbedding {
    /// The same embedding with target [`projective_cube`]`(2k)`.
    pub fn into_cube(&self) -> Result<EmbeddingCertificate, EmbedError> {
        let iso = self.model.cube_isomorphism();
        let map = self.certificate.hom.map().iter().map(|&x| iso[x]).collect();
        let pc = projective_cube(2 * self.k)?;
        EmbeddingCertificate::certify(Homomorphism::new(self.certificate.hom.source().clone(), pc, map)?)
    }
}

/// Maps `M^levels(C_{2k+1})` into the partition model of `PC_{2k}`: level 0
/// follows [`canonical_kneser_cycle`], level `r+1` takes
/// `A^{r+1}_j = A^r_{j−1} ∩ A^r_{j+1}`, and the apex goes to `(∅, 𝒜)`.
///
/// Every level is checked to consist of `2k+1` distinct parts of size
/// `k − r`, and the finished map is verified edge by edge. The apex needs
/// singleton parts on the last level, so `levels = k − 1` is the only
/// depth that passes.
pub fn mycielski_construction(k: u32, levels: usize) -> Result<MycielskiEmbedding, EmbedError> {
    let m = (2 * k + 1) as usize;
    let model = pc_partition_model(k)?;
    let mut parts = vec![canonical_kneser_cycle(k)?];
    for r in 0..levels {
        let prev = &parts[r];
        let next: Vec<u64> = (0..m)
            .map(|j| prev[(j + m - 1) % m].part() & prev[(j + 1) % m].part())
            .collect();
        let size = (k as usize).checked_sub(r + 1);
        if next.iter().any(|s| Some(s.count_ones() as usize) != size) {
            return Err(EmbedError::Validation(format!(
                "level {} parts do not all have size k - {}",
                r + 1,
                r + 1
            )));
        }
        let level = next
            .into_iter()
            .map(|s| PartitionVertex::new(m as u32, s))
            .collect::<Result<Vec<_>, _>>()?;
        parts.push(level);
    }
    for (r, level) in parts.iter().enumerate() {
        let mut sorted: Vec<u64> = level.iter().map(|p| p.part()).collect();
        sorted.sort_unstable();
        sorted.dedup();
        if sorted.len() != m {
            return Err(EmbedError::Validation(format!("level {r} repeats a part")));
        }
    }
    let empty = PartitionVertex::new(m as u32, 0)?;
    let top = parts.last().expect("level 0 exists");
    if let Some(j) = (0..m).find(|&j| !top[j].is_adjacent(empty)) {
        return Err(EmbedError::Validation(format!(
            "apex (empty part) is not adjacent to level {levels} vertex {j} with part {}",
            top[j]
        )));
    }

    let source = mycielski_level(&cycle(m)?, levels);
    let mut map: Vec<usize> = parts
        .iter()
        .flatten()
        .map(|&p| model.index_of(p).expect("partition model lists every part"))
        .collect();
    map.push(model.index_of(empty).expect("empty part is listed"));
    let hom = Homomorphism::new(source, model.graph.clone(), map)?;
    if let HomCheck::Violated { u, v } = verify_hom(&hom) {
        return Err(EmbedError::Validation(format!("edge ({u}, {v}) is not preserved")));
    }
    let certificate = EmbeddingCertificate::certify(hom)?.require_injective()?;
    Ok(MycielskiEmbedding {
        k,
        levels,
        parts,
        model,
        certificate,
    })
}

/// The Mycielski embedding into `PC_{2k}` with the deepest level that
/// works: `M^{k−1}(C_{2k+1})`, with `k(2k+1) + 1` vertices.
pub fn mycielski_into_pc(k: u32) -> Result<MycielskiEmbedding, EmbedError> {
    if k < 1 {
        return Err(FamilyError::BadParameter("mycielski embedding needs k >= 1".into()).into());
    }
    mycielski_construction(k, k as usize - 1)
}

/// Embeds `PC_{2k}` into `Cay(ℤ₂^d, Ω)` when that graph has odd girth
/// `2k+1`.
///
/// The shortest odd cycle is the lexicographically least closed walk of
/// that length from vertex 0. Its inclusion `C_{2k+1} → G` is extended to
/// `Ĉ_{2k+1} → G` by XOR and restricted to the even component, which is
/// identified with `PC_{2k}`.
pub fn pc_into_cayley(spec: &CayleySpec) -> Result<EmbeddingCertificate, EmbedError> {
    let g = cayley(spec)?;
    let len = match odd_girth(&g) {
        Length::Finite(l) => l,
        Length::Infinite => return Err(EmbedError::Bipartite),
    };
    let walk = least_closed_walk(&g, 0, len).expect("vertex 0 lies on a shortest odd cycle");
    let cyc: Vec<usize> = walk[..len as usize].to_vec();
    let mut distinct = cyc.clone();
    distinct.sort_unstable();
    distinct.dedup();
    if distinct.len() != cyc.len() {
        return Err(EmbedError::Validation("shortest odd closed walk repeats a vertex".into()));
    }
    let c = cycle(len as usize)?;
    let phi = Homomorphism::verified(c, g.clone(), cyc)?;
    let ext = extend_hom(&phi, spec)?;
    let comp = even_component_as_pc(len as usize)?;
    let map = comp.from_pc().into_iter().map(|s| ext.map()[s]).collect();
    let hom = Homomorphism::new(comp.pc, g, map)?;
    EmbeddingCertificate::certify(hom)?.require_injective()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::Z2Vector;

    #[test]
    fn kneser_cycles() {
        let parts = |k| -> Vec<u64> { canonical_kneser_cycle(k).unwrap().iter().map(|p| p.part()).collect() };
        assert_eq!(parts(1), [0b001, 0b010, 0b100]);
        assert_eq!(parts(2), [0b00101, 0b01010, 0b10100, 0b01001, 0b10010]);
        assert_eq!(parts(3).len(), 7);
    }

    #[test]
    fn mycielski_levels() {
        for k in 1..=3 {
            let e = mycielski_into_pc(k).unwrap();
            assert!(e.certificate.injective);
            let m = (2 * k + 1) as usize;
            assert_eq!(e.certificate.hom.source().n(), k as usize * m + 1);
            for (r, level) in e.parts.iter().enumerate() {
                assert!(level.iter().all(|p| p.size() as usize == k as usize - r));
            }
            assert!(e.into_cube().unwrap().injective);
        }
    }

    #[test]
    fn full_depth_mycielski_fails_validation() {
        assert!(matches!(mycielski_construction(2, 2), Err(EmbedError::Validation(_))));
        assert!(matches!(mycielski_construction(1, 1), Err(EmbedError::Validation(_))));
    }

    #[test]
    fn pc_into_itself() {
        let cert = pc_into_cayley(&CayleySpec::projective_cube(4).unwrap()).unwrap();
        assert!(cert.injective);
        assert_eq!(cert.report.image_size, 16);
    }

    #[test]
    fn bipartite_spec_is_rejected() {
        assert_eq!(
            pc_into_cayley(&CayleySpec::hypercube(3).unwrap()).unwrap_err(),
            EmbedError::Bipartite
        );
    }

    #[test]
    fn pc4_into_a_larger_cayley_graph() {
        let mut gens: Vec<Z2Vector> = (0..5).map(|i| Z2Vector::basis(5, i)).collect();
        gens.push(Z2Vector::parse("11110").unwrap());
        let cert = pc_into_cayley(&CayleySpec::new(5, gens).unwrap()).unwrap();
        assert!(cert.injective);
        assert_eq!((cert.report.source_vertices, cert.report.edges_checked), (16, 40));
    }
}
