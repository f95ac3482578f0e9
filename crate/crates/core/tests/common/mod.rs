//! Independent reference implementations used by the integration tests.
#![allow(dead_code)]

use cayhom_core::families::{CayleySpec, Z2Vector};
use cayhom_core::Graph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Erdős–Rényi graph with edge probability `p`.
pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.random_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(n, &edges).unwrap()
}

/// Random connection set in `ℤ₂^dim`, each nonzero element kept with
/// probability `p`.
pub fn random_spec(rng: &mut impl Rng, dim: u32, p: f64) -> CayleySpec {
    let gens = (1..1u64 << dim)
        .filter(|_| rng.random_bool(p))
        .map(|b| Z2Vector::new(dim, b).unwrap())
        .collect();
    CayleySpec::new(dim, gens).unwrap()
}

/// Counts homomorphisms by trying every map `V(g) → V(h)`.
pub fn brute_force_count(g: &Graph, h: &Graph) -> u128 {
    let (ng, nh) = (g.n(), h.n());
    let edges: Vec<(usize, usize)> = g.edges().collect();
    let mut map = vec![0usize; ng];
    let mut count = 0u128;
    loop {
        if edges.iter().all(|&(u, v)| h.has_edge(map[u], map[v])) {
            count += 1;
        }
        let mut i = 0;
        loop {
            if i == ng {
                return count;
            }
            map[i] += 1;
            if map[i] < nh {
                break;
            }
            map[i] = 0;
            i += 1;
        }
    }
}

/// `reach[l][u][v]`: a walk of length exactly `l` joins `u` and `v`, by
/// repeated boolean matrix products.
pub fn walk_table(g: &Graph, max_len: usize) -> Vec<Vec<Vec<bool>>> {
    let n = g.n();
    let mut table = vec![(0..n).map(|u| (0..n).map(|v| u == v).collect()).collect::<Vec<Vec<bool>>>()];
    for l in 1..=max_len {
        let prev = &table[l - 1];
        let next = (0..n)
            .map(|u| (0..n).map(|v| (0..n).any(|w| prev[u][w] && g.has_edge(w, v))).collect())
            .collect();
        table.push(next);
    }
    table
}

/// Shortest walk length of the given parity, from the walk table, or
/// `None` if none up to the table's length.
pub fn shortest_walk(table: &[Vec<Vec<bool>>], u: usize, v: usize, parity: usize) -> Option<u32> {
    (0..table.len()).filter(|l| l % 2 == parity).find(|&l| table[l][u][v]).map(|l| l as u32)
}

/// Shortest cycle through both `u` and `v` of exactly `len` vertices, by
/// depth-first search over simple paths from `u`.
pub fn common_cycle(g: &Graph, u: usize, v: usize, len: usize) -> Option<Vec<usize>> {
    fn dfs(g: &Graph, path: &mut Vec<usize>, on: &mut Vec<bool>, v: usize, len: usize) -> bool {
        let last = *path.last().unwrap();
        if path.len() == len {
            return g.has_edge(last, path[0]) && path.contains(&v);
        }
        for w in g.neighbors(last) {
            if !on[w] {
                on[w] = true;
                path.push(w);
                if dfs(g, path, on, v, len) {
                    return true;
                }
                path.pop();
                on[w] = false;
            }
        }
        false
    }
    let mut on = vec![false; g.n()];
    on[u] = true;
    let mut path = vec![u];
    dfs(g, &mut path, &mut on, v, len).then_some(path)
}

/// Random permutation of `0..n`.
pub fn permutation(rng: &mut impl Rng, n: usize) -> Vec<usize> {
    use rand::seq::SliceRandom;
    let mut p: Vec<usize> = (0..n).collect();
    p.shuffle(rng);
    p
}

/// Connection set of exactly `m` distinct nonzero elements of `ℤ₂^dim`.
pub fn random_spec_sized(rng: &mut impl Rng, dim: u32, m: usize) -> CayleySpec {
    use rand::seq::IteratorRandom;
    let gens = (1..1u64 << dim)
        .choose_multiple(rng, m)
        .into_iter()
        .map(|b| Z2Vector::new(dim, b).unwrap())
        .collect();
    CayleySpec::new(dim, gens).unwrap()
}
