//! Walk powers: `G^(l)` joins distinct `x, y` whenever some walk of length
//! exactly `l` connects them. Vertices with a closed walk of length `l` are
//! recorded as looped but the graph itself stays simple.

use crate::bitset::BitSet;
use crate::families::{projective_cube, FamilyError};
use crate::graph::Graph;
use crate::hom::{chromatic_bounds, max_clique, verify_hom, HomError, Homomorphism, SearchOptions};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum WalkError {
    #[error("walk length must be at least 1")]
    ZeroLength,
    #[error("map is not a homomorphism of the base graphs")]
    NotAHomomorphism,
    #[error("walk-power edge ({x}, {y}) maps to a non-edge ({fx}, {fy})")]
    TransportViolation { x: usize, y: usize, fx: usize, fy: usize },
    #[error("need r >= k >= 1, got r={r}, k={k}")]
    BadProbe { r: u32, k: u32 },
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Hom(#[from] HomError),
}

#[derive(Clone, Debug)]
pub struct WalkPowerGraph {
    pub base: Graph,
    pub l: usize,
    pub graph: Graph,
    /// Vertices lying on a closed walk of length `l`.
    pub looped: BitSet,
}

/// Vertices reachable from `s` by walks of length exactly `l`.
fn reach_exact(g: &Graph, s: usize, l: usize) -> BitSet {
    let mut cur = BitSet::new(g.n());
    cur.insert(s);
    for _ in 0..l {
        let mut next = BitSet::new(g.n());
        for x in cur.iter() {
            next.union_with(g.row(x));
        }
        cur = next;
    }
    cur
}

pub fn walk_power(g: &Graph, l: usize) -> Result<WalkPowerGraph, WalkError> {
    if l == 0 {
        return Err(WalkError::ZeroLength);
    }
    let n = g.n();
    let mut looped = BitSet::new(n);
    let rows = (0..n)
        .map(|s| {
            let mut r = reach_exact(g, s, l);
            if r.contains(s) {
                looped.insert(s);
                r.remove(s);
            }
            r
        })
        .collect();
    Ok(WalkPowerGraph {
        base: g.clone(),
        l,
        graph: Graph::from_rows(rows),
        looped,
    })
}

/// Checks that a homomorphism `g → h` is also one `g^(l) → h^(l)`, with
/// loops: identified endpoints must land on a looped vertex.
pub fn hom_transport_check(f: &Homomorphism, l: usize) -> Result<(), WalkError> {
    if !verify_hom(f).is_valid() {
        return Err(WalkError::NotAHomomorphism);
    }
    let gp = walk_power(f.source(), l)?;
    let hp = walk_power(f.target(), l)?;
    let map = f.map();
    let ok = |a: usize, b: usize| if a == b { hp.looped.contains(a) } else { hp.graph.has_edge(a, b) };
    let pairs = gp.graph.edges().chain(gp.looped.iter().map(|x| (x, x)));
    for (x, y) in pairs {
        let (fx, fy) = (map[x], map[y]);
        if !ok(fx, fy) {
            return Err(WalkError::TransportViolation { x, y, fx, fy });
        }
    }
    Ok(())
}

/// Evidence about `χ(PC_{2r}^(2k−1))` against the bound `2^{2k}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WalkPowerChromaticProbe {
    pub r: u32,
    pub k: u32,
    pub vertices: usize,
    /// `2^{2k}`.
    pub bound: usize,
    pub clique: usize,
    pub greedy_upper: usize,
    pub lower: usize,
    pub upper: usize,
    /// Set when `lower == upper`.
    pub chi: Option<usize>,
}

impl WalkPowerChromaticProbe {
    /// `Some(true)` if the lower bound already meets `2^{2k}`,
    /// `Some(false)` if a colouring beats it, `None` while undecided.
    pub fn consistent(&self) -> Option<bool> {
        if self.lower >= self.bound {
            Some(true)
        } else if self.upper < self.bound {
            Some(false)
        } else {
            None
        }
    }
}

pub fn walk_power_chromatic_probe(r: u32, k: u32, opts: &SearchOptions) -> Result<WalkPowerChromaticProbe, WalkError> {
    if k < 1 || r < k {
        return Err(WalkError::BadProbe { r, k });
    }
    let pc = projective_cube(2 * r)?;
    let wp = walk_power(&pc, (2 * k - 1) as usize)?;
    let clique = max_clique(&wp.graph, opts.node_limit.or(Some(1 << 20))).vertices.len();
    let greedy = crate::hom::greedy_coloring(&wp.graph);
    let greedy_upper = greedy.iter().map(|&c| c + 1).max().unwrap_or(0);
    let report = chromatic_bounds(&wp.graph, opts)?;
    Ok(WalkPowerChromaticProbe {
        r,
        k,
        vertices: wp.graph.n(),
        bound: 1 << (2 * k),
        clique,
        greedy_upper,
        lower: report.lower,
        upper: report.upper,
        chi: report.chi(),
    })
}
