//! Immutable simple graphs with dense bitset adjacency.

use alloc::string::String;
use alloc::sync::Arc;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;

use crate::bitset::{BitSet, Ones};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum GraphError {
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    EndpointOutOfRange { u: usize, v: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("vertex {v} out of range 0..{n}")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("vertex {0} listed twice")]
    DuplicateVertex(usize),
    #[error("expected {expected} labels, got {found}")]
    LabelCount { expected: usize, found: usize },
}

#[derive(Debug)]
struct GraphData {
    rows: Vec<BitSet>,
    labels: Option<Vec<String>>,
    vertex_transitive: bool,
}

/// A simple undirected graph on vertices `0..n`.
///
/// Cloning is cheap: the adjacency is shared behind an [`Arc`] and never
/// mutated after construction. Equality compares adjacency only; labels and
/// the vertex-transitivity hint are ignored.
#[derive(Clone)]
pub struct Graph {
    inner: Arc<GraphData>,
}

impl Graph {
    /// Builds a graph from an edge list. Duplicate edges (in either
    /// orientation) collapse to one.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut rows = vec![BitSet::new(n); n];
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(GraphError::EndpointOutOfRange { u, v, n });
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            rows[u].insert(v);
            rows[v].insert(u);
        }
        Ok(Graph::from_rows(rows))
    }

    pub fn empty(n: usize) -> Graph {
        Graph::from_rows(vec![BitSet::new(n); n])
    }

    /// Rows must already be symmetric and loop-free; checked in debug builds.
    pub(crate) fn from_rows(rows: Vec<BitSet>) -> Graph {
        debug_assert!(rows.iter().enumerate().all(|(u, r)| {
            r.capacity() == rows.len() && !r.contains(u) && r.iter().all(|v| rows[v].contains(u))
        }));
        Graph {
            inner: Arc::new(GraphData {
                rows,
                labels: None,
                vertex_transitive: false,
            }),
        }
    }

    fn rebuild(&self, labels: Option<Vec<String>>, vertex_transitive: bool) -> Graph {
        Graph {
            inner: Arc::new(GraphData {
                rows: self.inner.rows.clone(),
                labels,
                vertex_transitive,
            }),
        }
    }

    pub fn with_labels(self, labels: Vec<String>) -> Result<Graph, GraphError> {
        if labels.len() != self.n() {
            return Err(GraphError::LabelCount {
                expected: self.n(),
                found: labels.len(),
            });
        }
        Ok(match Arc::try_unwrap(self.inner) {
            Ok(mut data) => {
                data.labels = Some(labels);
                Graph { inner: Arc::new(data) }
            }
            Err(inner) => Graph { inner }.rebuild(Some(labels), false),
        })
    }

    /// Marks the graph as vertex-transitive. Searches use this to test a
    /// single vertex deletion instead of all of them, so only assert it when
    /// it is true (every Cayley graph qualifies).
    pub fn assume_vertex_transitive(self) -> Graph {
        match Arc::try_unwrap(self.inner) {
            Ok(mut data) => {
                data.vertex_transitive = true;
                Graph { inner: Arc::new(data) }
            }
            Err(inner) => {
                let labels = inner.labels.clone();
                Graph { inner }.rebuild(labels, true)
            }
        }
    }

    #[inline]
    pub fn is_vertex_transitive(&self) -> bool {
        self.inner.vertex_transitive
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.inner.rows.len()
    }

    pub fn edge_count(&self) -> usize {
        self.inner.rows.iter().map(BitSet::count).sum::<usize>() / 2
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u < self.n() && self.inner.rows[u].contains(v)
    }

    #[inline]
    pub fn row(&self, v: usize) -> &BitSet {
        &self.inner.rows[v]
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> Ones<'_> {
        self.inner.rows[v].iter()
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.inner.rows[v].count()
    }

    /// The common degree if the graph is regular. `None` for non-regular
    /// graphs and for the graph with no vertices.
    pub fn regular_degree(&self) -> Option<usize> {
        if self.n() == 0 {
            return None;
        }
        let d = self.degree(0);
        (1..self.n()).all(|v| self.degree(v) == d).then_some(d)
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n()).flat_map(move |u| self.neighbors(u).filter(move |&v| v > u).map(move |v| (u, v)))
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.inner.labels.as_deref()
    }

    pub fn label(&self, v: usize) -> Option<&str> {
        self.inner.labels.as_ref().map(|l| l[v].as_str())
    }

    pub fn degree_sequence(&self) -> Vec<usize> {
        let mut d: Vec<usize> = (0..self.n()).map(|v| self.degree(v)).collect();
        d.sort_unstable();
        d
    }

    /// Two-colours the graph by breadth-first search.
    pub fn bipartition(&self) -> Option<Vec<bool>> {
        let n = self.n();
        let mut side: Vec<Option<bool>> = vec![None; n];
        let mut queue = Vec::with_capacity(n);
        for s in 0..n {
            if side[s].is_some() {
                continue;
            }
            side[s] = Some(false);
            queue.clear();
            queue.push(s);
            let mut head = 0;
            while head < queue.len() {
                let u = queue[head];
                head += 1;
                let su = side[u].unwrap();
                for v in self.neighbors(u) {
                    match side[v] {
                        None => {
                            side[v] = Some(!su);
                            queue.push(v);
                        }
                        Some(sv) if sv == su => return None,
                        Some(_) => {}
                    }
                }
            }
        }
        Some(side.into_iter().map(Option::unwrap).collect())
    }

    pub fn is_bipartite(&self) -> bool {
        self.bipartition().is_some()
    }

    /// Connected components, each with its vertex list (ascending) and
    /// induced subgraph. Components are ordered by their least vertex.
    pub fn components(&self) -> Vec<Component> {
        let n = self.n();
        let mut seen = BitSet::new(n);
        let mut out = Vec::new();
        for s in 0..n {
            if seen.contains(s) {
                continue;
            }
            let mut comp = BitSet::new(n);
            comp.insert(s);
            seen.insert(s);
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for v in self.neighbors(u) {
                    if !seen.contains(v) {
                        seen.insert(v);
                        comp.insert(v);
                        stack.push(v);
                    }
                }
            }
            let vertices: Vec<usize> = comp.iter().collect();
            let graph = self
                .induced_subgraph(&vertices)
                .expect("component vertices are in range and distinct");
            out.push(Component { vertices, graph });
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.n() <= 1 || self.components().len() == 1
    }

    /// Subgraph induced by `vs`. Vertex `i` of the result is `vs[i]`, so the
    /// caller controls the order. Labels are carried along.
    pub fn induced_subgraph(&self, vs: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n();
        let mut pos = vec![usize::MAX; n];
        for (i, &v) in vs.iter().enumerate() {
            if v >= n {
                return Err(GraphError::VertexOutOfRange { v, n });
            }
            if pos[v] != usize::MAX {
                return Err(GraphError::DuplicateVertex(v));
            }
            pos[v] = i;
        }
        let k = vs.len();
        let rows = vs
            .iter()
            .map(|&v| {
                BitSet::from_iter_with_len(
                    k,
                    self.neighbors(v).filter(|&w| pos[w] != usize::MAX).map(|w| pos[w]),
                )
            })
            .collect();
        let g = Graph::from_rows(rows);
        match self.labels() {
            Some(l) => g.with_labels(vs.iter().map(|&v| l[v].clone()).collect()),
            None => Ok(g),
        }
    }

    /// `self` with vertex `v` deleted; vertices above `v` shift down by one.
    pub fn without_vertex(&self, v: usize) -> Result<Graph, GraphError> {
        if v >= self.n() {
            return Err(GraphError::VertexOutOfRange { v, n: self.n() });
        }
        let keep: Vec<usize> = (0..self.n()).filter(|&u| u != v).collect();
        self.induced_subgraph(&keep)
    }

    /// Relabels vertex `v` as `perm[v]`. `perm` must be a permutation.
    pub fn permuted(&self, perm: &[usize]) -> Result<Graph, GraphError> {
        let n = self.n();
        let mut seen = BitSet::new(n);
        for &p in perm {
            if p >= n {
                return Err(GraphError::VertexOutOfRange { v: p, n });
            }
            if seen.contains(p) {
                return Err(GraphError::DuplicateVertex(p));
            }
            seen.insert(p);
        }
        if perm.len() != n {
            return Err(GraphError::LabelCount {
                expected: n,
                found: perm.len(),
            });
        }
        let edges: Vec<(usize, usize)> = self.edges().map(|(u, v)| (perm[u], perm[v])).collect();
        Graph::from_edges(n, &edges)
    }

    /// The complement graph.
    pub fn complement(&self) -> Graph {
        let n = self.n();
        let rows = (0..n)
            .map(|u| {
                let mut r = BitSet::full(n);
                r.difference_with(self.row(u));
                r.remove(u);
                r
            })
            .collect();
        Graph::from_rows(rows)
    }
}

impl PartialEq for Graph {
    fn eq(&self, other: &Graph) -> bool {
        Arc::ptr_eq(&self.inner, &other.inner) || self.inner.rows == other.inner.rows
    }
}

impl Eq for Graph {}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("n", &self.n())
            .field("m", &self.edge_count())
            .finish()
    }
}

/// One connected component of a graph.
#[derive(Debug, Clone)]
pub struct Component {
    pub vertices: Vec<usize>,
    pub graph: Graph,
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_on_three() {
        let g = Graph::from_edges(3, &[(0, 1), (1, 2), (2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert!(g.has_edge(1, 0));
        assert!(!g.has_edge(0, 2));
        assert_eq!(g.regular_degree(), None);
    }

    #[test]
    fn empty_and_complete() {
        let e = Graph::from_edges(0, &[]).unwrap();
        assert_eq!(e.n(), 0);
        assert_eq!(e.regular_degree(), None);
        assert!(e.is_connected());
        let mut edges = Vec::new();
        for u in 0..4 {
            for v in u + 1..4 {
                edges.push((u, v));
            }
        }
        let k4 = Graph::from_edges(4, &edges).unwrap();
        assert_eq!(k4.regular_degree(), Some(3));
        assert_eq!(k4.edge_count(), 6);
        assert_eq!(k4.complement().edge_count(), 0);
    }

    #[test]
    fn construction_errors() {
        assert_eq!(
            Graph::from_edges(2, &[(0, 2)]),
            Err(GraphError::EndpointOutOfRange { u: 0, v: 2, n: 2 })
        );
        assert_eq!(Graph::from_edges(2, &[(1, 1)]), Err(GraphError::Loop(1)));
        let g = Graph::empty(2);
        assert!(matches!(
            g.clone().with_labels(vec![String::from("a")]),
            Err(GraphError::LabelCount { .. })
        ));
        assert!(matches!(g.induced_subgraph(&[0, 0]), Err(GraphError::DuplicateVertex(0))));
        assert!(matches!(g.induced_subgraph(&[5]), Err(GraphError::VertexOutOfRange { .. })));
    }

    #[test]
    fn components_of_edgeless() {
        let g = Graph::empty(3);
        let c = g.components();
        assert_eq!(c.len(), 3);
        assert!(c.iter().all(|c| c.graph.n() == 1));
    }

    #[test]
    fn induced_keeps_order_and_labels() {
        let g = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)])
            .unwrap()
            .with_labels(["a", "b", "c", "d"].iter().map(|s| String::from(*s)).collect())
            .unwrap();
        let h = g.induced_subgraph(&[3, 2, 0]).unwrap();
        assert!(h.has_edge(0, 1));
        assert!(!h.has_edge(1, 2));
        assert_eq!(h.label(0), Some("d"));
        let k1 = g.induced_subgraph(&[1]).unwrap();
        assert_eq!((k1.n(), k1.edge_count()), (1, 0));
    }

    #[test]
    fn odd_cycle_is_not_bipartite() {
        let c5 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 0)]).unwrap();
        assert!(!c5.is_bipartite());
        let c6 = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 3), (3, 4), (4, 5), (5, 0)]).unwrap();
        assert!(c6.is_bipartite());
    }
}
