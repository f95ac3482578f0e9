//! Parity-aware distances, girth and odd girth.
//!
//! Even and odd walk lengths are shortest paths in the bipartite double
//! cover `G × K₂`, whose vertices are `(v, parity)`. A breadth-first search
//! from `(s, 0)` reaches `(t, p)` after exactly the length of the shortest
//! walk from `s` to `t` whose length has parity `p`.

use alloc::vec;
use alloc::vec::Vec;
use core::cmp::Ordering;
use core::fmt;

use crate::graph::Graph;

/// A length that may be infinite.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Length {
    Finite(u32),
    Infinite,
}

impl Length {
    pub(crate) fn from_raw(raw: u32) -> Length {
        if raw == INF {
            Length::Infinite
        } else {
            Length::Finite(raw)
        }
    }

    pub fn finite(self) -> Option<u32> {
        match self {
            Length::Finite(l) => Some(l),
            Length::Infinite => None,
        }
    }

    pub fn is_infinite(self) -> bool {
        self == Length::Infinite
    }
}

impl PartialOrd for Length {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Length {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (Length::Finite(a), Length::Finite(b)) => a.cmp(b),
            (Length::Finite(_), Length::Infinite) => Ordering::Less,
            (Length::Infinite, Length::Finite(_)) => Ordering::Greater,
            (Length::Infinite, Length::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for Length {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Length::Finite(l) => write!(f, "{l}"),
            Length::Infinite => f.write_str("inf"),
        }
    }
}

pub(crate) const INF: u32 = u32::MAX;

/// Shortest even-length and odd-length walks between every pair of
/// vertices. `even(v, v) = 0`; `odd(v, v)` is the shortest odd closed walk
/// through `v`.
#[derive(Clone, PartialEq, Eq)]
pub struct ParityDistances {
    n: usize,
    even: Vec<u32>,
    odd: Vec<u32>,
}

impl ParityDistances {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn even(&self, u: usize, v: usize) -> Length {
        Length::from_raw(self.even[u * self.n + v])
    }

    pub fn odd(&self, u: usize, v: usize) -> Length {
        Length::from_raw(self.odd[u * self.n + v])
    }

    /// Raw tables, `u32::MAX` standing for infinity.
    pub(crate) fn raw_even(&self, u: usize, v: usize) -> u32 {
        self.even[u * self.n + v]
    }

    pub(crate) fn raw_odd(&self, u: usize, v: usize) -> u32 {
        self.odd[u * self.n + v]
    }

    /// Ordinary graph distance: the smaller of the two parities.
    pub fn distance(&self, u: usize, v: usize) -> Length {
        self.even(u, v).min(self.odd(u, v))
    }
}

impl fmt::Debug for ParityDistances {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ParityDistances").field("n", &self.n).finish()
    }
}

/// BFS in the double cover from `(s, 0)`. Returns `(even, odd)` rows.
pub(crate) fn parity_bfs(g: &Graph, s: usize) -> (Vec<u32>, Vec<u32>) {
    let n = g.n();
    let mut dist = [vec![INF; n], vec![INF; n]];
    let mut queue: Vec<(usize, usize)> = Vec::with_capacity(2 * n);
    dist[0][s] = 0;
    queue.push((s, 0));
    let mut head = 0;
    while head < queue.len() {
        let (u, p) = queue[head];
        head += 1;
        let d = dist[p][u] + 1;
        let q = p ^ 1;
        for v in g.neighbors(u) {
            if dist[q][v] == INF {
                dist[q][v] = d;
                queue.push((v, q));
            }
        }
    }
    let [even, odd] = dist;
    (even, odd)
}

pub fn parity_distances(g: &Graph) -> ParityDistances {
    let n = g.n();
    let mut even = Vec::with_capacity(n * n);
    let mut odd = Vec::with_capacity(n * n);
    for s in 0..n {
        let (e, o) = parity_bfs(g, s);
        even.extend_from_slice(&e);
        odd.extend_from_slice(&o);
    }
    ParityDistances { n, even, odd }
}

/// Plain BFS distances from `s`.
pub fn bfs_distances(g: &Graph, s: usize) -> Vec<Length> {
    let n = g.n();
    let mut dist = vec![INF; n];
    let mut queue = Vec::with_capacity(n);
    dist[s] = 0;
    queue.push(s);
    let mut head = 0;
    while head < queue.len() {
        let u = queue[head];
        head += 1;
        for v in g.neighbors(u) {
            if dist[v] == INF {
                dist[v] = dist[u] + 1;
                queue.push(v);
            }
        }
    }
    dist.into_iter().map(Length::from_raw).collect()
}

fn roots(g: &Graph) -> core::ops::Range<usize> {
    // In a vertex-transitive graph every vertex lies on a shortest (odd) cycle.
    if g.is_vertex_transitive() {
        0..g.n().min(1)
    } else {
        0..g.n()
    }
}

/// Length of a shortest odd cycle; infinite iff the graph is bipartite.
pub fn odd_girth(g: &Graph) -> Length {
    // A shortest odd closed walk is always a cycle, and the minimum over all
    // start vertices of the shortest odd closed walk is the odd girth.
    let mut best = INF;
    for s in roots(g) {
        let (_, odd) = parity_bfs(g, s);
        best = best.min(odd[s]);
    }
    Length::from_raw(best)
}

/// Length of a shortest cycle; infinite for forests.
pub fn girth(g: &Graph) -> Length {
    let n = g.n();
    let mut best = INF;
    let mut dist = vec![INF; n];
    let mut parent = vec![usize::MAX; n];
    let mut queue = Vec::with_capacity(n);
    for s in roots(g) {
        dist.iter_mut().for_each(|d| *d = INF);
        parent.iter_mut().for_each(|p| *p = usize::MAX);
        queue.clear();
        dist[s] = 0;
        queue.push(s);
        let mut head = 0;
        while head < queue.len() {
            let u = queue[head];
            head += 1;
            if 2 * dist[u] >= best {
                break;
            }
            for v in g.neighbors(u) {
                if dist[v] == INF {
                    dist[v] = dist[u] + 1;
                    parent[v] = u;
                    queue.push(v);
                } else if parent[u] != v {
                    best = best.min(dist[u] + dist[v] + 1);
                }
            }
        }
    }
    Length::from_raw(best)
}

/// The lexicographically least closed walk `s = w₀, w₁, …, w_len = s` of the
/// given length, if any. Each step picks the least neighbour from which the
/// remaining length can still be completed back to `s` (walks of matching
/// parity can always be padded by back-and-forth steps).
pub fn least_closed_walk(g: &Graph, s: usize, len: u32) -> Option<Vec<usize>> {
    let (even, odd) = parity_bfs(g, s);
    let reach = |v: usize, r: u32| {
        let d = if r.is_multiple_of(2) { even[v] } else { odd[v] };
        d != INF && d <= r
    };
    if !reach(s, len) {
        return None;
    }
    let mut walk = vec![s];
    let mut cur = s;
    for step in 0..len {
        let remaining = len - step - 1;
        let next = g.neighbors(cur).find(|&v| reach(v, remaining))?;
        walk.push(next);
        cur = next;
    }
    debug_assert_eq!(cur, s);
    Some(walk)
}

/// A cycle of exactly `len` vertices through both `u` and `v`, listed from
/// `u`, if one exists. Depth-first over simple paths from `u`, cut off when
/// `u` or `v` can no longer be reached in the steps left.
pub fn cycle_through(g: &Graph, u: usize, v: usize, len: usize) -> Option<Vec<usize>> {
    if len < 3 || len > g.n() {
        return None;
    }
    let from_u = plain_bfs(g, u);
    let from_v = plain_bfs(g, v);
    let mut on = vec![false; g.n()];
    let mut path = Vec::with_capacity(len);
    on[u] = true;
    path.push(u);
    extend_cycle(g, &from_u, &from_v, v, len, &mut path, &mut on).then_some(path)
}

fn plain_bfs(g: &Graph, s: usize) -> Vec<u32> {
    bfs_distances(g, s)
        .into_iter()
        .map(|d| d.finite().unwrap_or(INF))
        .collect()
}

fn extend_cycle(
    g: &Graph,
    from_u: &[u32],
    from_v: &[u32],
    v: usize,
    len: usize,
    path: &mut Vec<usize>,
    on: &mut [bool],
) -> bool {
    let last = *path.last().expect("path starts at u");
    let has_v = on[v];
    if path.len() == len {
        return has_v && g.has_edge(last, path[0]);
    }
    let left = (len - path.len()) as u32;
    for w in g.neighbors(last) {
        if on[w] || from_u[w] > left {
            continue;
        }
        // Still need to pass through v and then return to u.
        if !has_v && w != v && from_v[w] + from_u[v] > left {
            continue;
        }
        on[w] = true;
        path.push(w);
        if extend_cycle(g, from_u, from_v, v, len, path, on) {
            return true;
        }
        path.pop();
        on[w] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cycle(n: usize) -> Graph {
        let e: Vec<_> = (0..n).map(|i| (i, (i + 1) % n)).collect();
        Graph::from_edges(n, &e).unwrap()
    }

    #[test]
    fn k2_parities() {
        let k2 = Graph::from_edges(2, &[(0, 1)]).unwrap();
        let d = parity_distances(&k2);
        assert_eq!(d.odd(0, 1), Length::Finite(1));
        assert_eq!(d.even(0, 1), Length::Infinite);
        assert_eq!(d.even(0, 0), Length::Finite(0));
        assert_eq!(d.odd(0, 0), Length::Infinite);
    }

    #[test]
    fn c5_parities() {
        let d = parity_distances(&cycle(5));
        assert_eq!(d.even(0, 2), Length::Finite(2));
        assert_eq!(d.odd(0, 2), Length::Finite(3));
        assert_eq!(d.odd(0, 0), Length::Finite(5));
        assert_eq!(d.distance(0, 2), Length::Finite(2));
    }

    #[test]
    fn bipartite_same_side_has_no_odd_walk() {
        let d = parity_distances(&cycle(6));
        assert_eq!(d.odd(0, 2), Length::Infinite);
        assert_eq!(d.even(0, 3), Length::Infinite);
    }

    #[test]
    fn girths() {
        assert_eq!(odd_girth(&cycle(5)), Length::Finite(5));
        assert_eq!(girth(&cycle(5)), Length::Finite(5));
        assert_eq!(odd_girth(&cycle(6)), Length::Infinite);
        assert_eq!(girth(&cycle(6)), Length::Finite(6));
        let p4 = Graph::from_edges(4, &[(0, 1), (1, 2), (2, 3)]).unwrap();
        assert_eq!(girth(&p4), Length::Infinite);
        assert_eq!(girth(&Graph::empty(0)), Length::Infinite);
    }

    #[test]
    fn length_ordering() {
        assert!(Length::Finite(100) < Length::Infinite);
        assert_eq!(alloc::format!("{}", Length::Infinite), "inf");
    }

    #[test]
    fn cycles_through_pairs() {
        let c = cycle(5);
        assert_eq!(cycle_through(&c, 0, 2, 5), Some(vec![0, 1, 2, 3, 4]));
        assert_eq!(cycle_through(&c, 0, 2, 4), None);
        let k4 = Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert_eq!(cycle_through(&k4, 0, 3, 3), Some(vec![0, 1, 3]));
    }

    #[test]
    fn least_closed_walk_on_c5() {
        assert_eq!(least_closed_walk(&cycle(5), 0, 5), Some(vec![0, 1, 2, 3, 4, 0]));
        assert_eq!(least_closed_walk(&cycle(5), 0, 3), None);
        assert_eq!(least_closed_walk(&cycle(5), 0, 4), Some(vec![0, 1, 0, 1, 0]));
    }
}
