use alloc::vec::Vec;

use super::search::{search, Mode, SearchOptions, SearchStats, Status};
use super::{HomError, Homomorphism};
use crate::graph::Graph;

/// Vertices whose deletion must be refuted: one for vertex-transitive
/// graphs, all of them otherwise.
fn deletion_representatives(h: &Graph) -> Vec<usize> {
    if h.is_vertex_transitive() {
        (0..h.n().min(1)).collect()
    } else {
        (0..h.n()).collect()
    }
}

/// Maps a vertex of `h - v` back to `h`.
fn lift(map: &[usize], v: usize) -> Vec<usize> {
    map.iter().map(|&x| if x >= v { x + 1 } else { x }).collect()
}

fn exists(opts: &SearchOptions) -> SearchOptions {
    SearchOptions {
        mode: Mode::Exists,
        ..opts.clone()
    }
}

/// `true` iff `g` has no homomorphism onto a proper subgraph of itself,
/// decided by refuting `g → g - v`.
pub fn is_core(g: &Graph, opts: &SearchOptions) -> Result<bool, HomError> {
    if !g.is_connected() {
        return Err(HomError::NotConnected);
    }
    if g.n() <= 1 {
        return Ok(true);
    }
    let opts = exists(opts);
    for v in deletion_representatives(g) {
        let out = search(g, &g.without_vertex(v).expect("vertex in range"), &opts)?;
        match out.status {
            Status::Found => return Ok(false),
            Status::Timeout => return Err(HomError::Timeout),
            _ => {}
        }
    }
    Ok(true)
}

#[derive(Debug, Clone)]
pub enum OntoVerdict {
    /// Homomorphisms exist and every one of them is surjective.
    AllOnto,
    /// A verified homomorphism missing at least one target vertex.
    CounterexampleHom(Homomorphism),
    /// The budget ran out before a decision.
    Unknown,
    NoHomAtAll,
}

#[derive(Debug, Clone)]
pub struct OntoAudit {
    pub verdict: OntoVerdict,
    /// Target vertices whose deletion was refuted.
    pub refuted: Vec<usize>,
    pub stats: SearchStats,
}

/// Decides whether every homomorphism `g → h` is onto.
pub fn onto_audit(g: &Graph, h: &Graph, opts: &SearchOptions) -> Result<OntoAudit, HomError> {
    let opts = exists(opts);
    let mut stats = SearchStats::default();
    let audit = |verdict, refuted, stats| Ok(OntoAudit { verdict, refuted, stats });

    let first = search(g, h, &opts)?;
    stats.absorb(&first.stats);
    match first.status {
        Status::Timeout => return audit(OntoVerdict::Unknown, Vec::new(), stats),
        Status::Unsat => return audit(OntoVerdict::NoHomAtAll, Vec::new(), stats),
        _ => {}
    }
    if let Some(w) = first.witness.filter(|w| !w.is_surjective()) {
        return audit(OntoVerdict::CounterexampleHom(w), Vec::new(), stats);
    }

    let mut refuted = Vec::new();
    for v in deletion_representatives(h) {
        let out = search(g, &h.without_vertex(v).expect("vertex in range"), &opts)?;
        stats.absorb(&out.stats);
        match out.status {
            Status::Found => {
                let map = lift(out.witness.expect("found has witness").map(), v);
                let f = Homomorphism::verified(g.clone(), h.clone(), map)?;
                return audit(OntoVerdict::CounterexampleHom(f), refuted, stats);
            }
            Status::Timeout => return audit(OntoVerdict::Unknown, refuted, stats),
            _ => refuted.push(v),
        }
    }
    audit(OntoVerdict::AllOnto, refuted, stats)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, projective_cube};

    #[test]
    fn cores() {
        let opts = SearchOptions::exists();
        assert!(is_core(&complete(4).unwrap(), &opts).unwrap());
        assert!(!is_core(&cycle(6).unwrap(), &opts).unwrap());
        assert!(is_core(&cycle(5).unwrap(), &opts).unwrap());
        assert_eq!(
            is_core(&Graph::empty(2), &opts).unwrap_err(),
            HomError::NotConnected
        );
    }

    #[test]
    fn onto_verdicts() {
        let opts = SearchOptions::exists();
        let pc4 = projective_cube(4).unwrap();
        let a = onto_audit(&cycle(5).unwrap(), &pc4, &opts).unwrap();
        assert!(matches!(a.verdict, OntoVerdict::CounterexampleHom(ref f) if !f.is_surjective()));
        let a = onto_audit(&pc4, &complete(3).unwrap(), &opts).unwrap();
        assert!(matches!(a.verdict, OntoVerdict::NoHomAtAll));
        let a = onto_audit(&complete(3).unwrap(), &complete(3).unwrap(), &opts).unwrap();
        assert!(matches!(a.verdict, OntoVerdict::AllOnto));
    }

    #[test]
    fn counterexample_is_lifted() {
        let c4 = cycle(4).unwrap();
        let a = onto_audit(&c4, &complete(3).unwrap(), &SearchOptions::exists()).unwrap();
        match a.verdict {
            OntoVerdict::CounterexampleHom(f) => {
                assert!(super::super::verify_hom(&f).is_valid());
                assert!(!f.is_surjective());
            }
            other => panic!("unexpected {other:?}"),
        }
    }
}
