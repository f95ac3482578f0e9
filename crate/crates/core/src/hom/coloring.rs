//! Cliques and colourings: bounds for the chromatic number, and the exact
//! value via homomorphisms into complete graphs.

use alloc::vec;
use alloc::vec::Vec;

use super::search::{search, Mode, SearchOptions, Status};
use super::HomError;
use crate::bitset::BitSet;
use crate::families::complete;
use crate::graph::Graph;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CliqueResult {
    pub vertices: Vec<usize>,
    /// `false` if the node limit cut the search short.
    pub exact: bool,
}

/// Greedy clique: repeatedly add the candidate with most candidate neighbours.
pub fn greedy_clique(g: &Graph) -> Vec<usize> {
    let mut cand = BitSet::full(g.n());
    let mut clique = Vec::new();
    while let Some(v) = cand.iter().max_by_key(|&v| (g.row(v).intersection_count(&cand), usize::MAX - v)) {
        clique.push(v);
        cand.intersect_with(g.row(v));
    }
    clique
}

/// Branch and bound maximum clique, bounded by greedy colouring of the
/// candidate set.
pub fn max_clique(g: &Graph, node_limit: Option<u64>) -> CliqueResult {
    struct St<'a> {
        g: &'a Graph,
        best: Vec<usize>,
        nodes: u64,
        limit: u64,
    }
    fn expand(st: &mut St, current: &mut Vec<usize>, cand: BitSet) -> bool {
        st.nodes += 1;
        if st.nodes > st.limit {
            return false;
        }
        // Colour classes give an upper bound on what each suffix can add.
        let mut order = Vec::new();
        let mut bound = Vec::new();
        let mut rest = cand.clone();
        let mut color = 0;
        while !rest.is_empty() {
            color += 1;
            let mut avail = rest.clone();
            while let Some(v) = avail.first() {
                avail.remove(v);
                avail.difference_with(st.g.row(v));
                rest.remove(v);
                order.push(v);
                bound.push(color);
            }
        }
        let mut cand = cand;
        for i in (0..order.len()).rev() {
            if current.len() + bound[i] <= st.best.len() {
                return true;
            }
            let v = order[i];
            current.push(v);
            let mut next = cand.clone();
            next.intersect_with(st.g.row(v));
            if next.is_empty() {
                if current.len() > st.best.len() {
                    st.best = current.clone();
                }
            } else if !expand(st, current, next) {
                current.pop();
                return false;
            }
            current.pop();
            cand.remove(v);
        }
        true
    }
    let mut st = St {
        g,
        best: greedy_clique(g),
        nodes: 0,
        limit: node_limit.unwrap_or(u64::MAX),
    };
    let exact = g.n() == 0 || expand(&mut st, &mut Vec::new(), BitSet::full(g.n()));
    let mut vertices = st.best;
    vertices.sort_unstable();
    CliqueResult { vertices, exact }
}

/// DSatur colouring; `colors[v]` in `0..k`.
pub fn greedy_coloring(g: &Graph) -> Vec<usize> {
    let n = g.n();
    let mut colors = vec![usize::MAX; n];
    let mut seen: Vec<BitSet> = (0..n).map(|_| BitSet::new(n + 1)).collect();
    for _ in 0..n {
        let v = (0..n)
            .filter(|&v| colors[v] == usize::MAX)
            .max_by_key(|&v| (seen[v].count(), g.degree(v), usize::MAX - v))
            .expect("uncoloured vertex remains");
        let c = (0..).find(|&c| !seen[v].contains(c)).expect("free colour exists");
        colors[v] = c;
        for u in g.neighbors(v) {
            seen[u].insert(c);
        }
    }
    colors
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChromaticReport {
    pub lower: usize,
    pub upper: usize,
    /// A proper colouring with `upper` colours.
    pub coloring: Vec<usize>,
    pub clique: Vec<usize>,
}

impl ChromaticReport {
    /// The chromatic number, once the bounds meet.
    pub fn chi(&self) -> Option<usize> {
        (self.lower == self.upper).then_some(self.upper)
    }
}

/// Tightens clique and colouring bounds with exact `g → K_k` searches,
/// stopping at the first timeout. The report may leave a gap.
pub fn chromatic_bounds(g: &Graph, opts: &SearchOptions) -> Result<ChromaticReport, HomError> {
    let clique = max_clique(g, opts.node_limit.or(Some(1 << 20))).vertices;
    let coloring = greedy_coloring(g);
    let upper = coloring.iter().map(|&c| c + 1).max().unwrap_or(0);
    let mut report = ChromaticReport {
        lower: clique.len().max(usize::from(g.n() > 0)),
        upper,
        coloring,
        clique,
    };
    let opts = SearchOptions {
        mode: Mode::Exists,
        forbid_image: Vec::new(),
        injective: false,
        break_symmetry: true,
        ..opts.clone()
    };
    while report.lower < report.upper {
        let k = report.lower;
        let out = search(g, &complete(k).expect("k is at least 1"), &opts)?;
        match out.status {
            Status::Found => {
                report.upper = k;
                report.coloring = out.witness.expect("found has witness").into_map();
            }
            Status::Unsat => report.lower = k + 1,
            _ => break,
        }
    }
    Ok(report)
}

/// Exact chromatic number; `Timeout` if the budget does not suffice.
pub fn chromatic_number(g: &Graph, opts: &SearchOptions) -> Result<ChromaticReport, HomError> {
    let report = chromatic_bounds(g, opts)?;
    if report.chi().is_none() {
        return Err(HomError::Timeout);
    }
    Ok(report)
}
