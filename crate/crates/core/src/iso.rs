//! Graph isomorphism by colour refinement plus individualization.
//!
//! Both graphs are refined together on their disjoint union so colour names
//! are comparable. A branch dies as soon as some colour class has different
//! sizes on the two sides; discrete colourings are read off as a bijection
//! and checked edge by edge before being returned.

use alloc::vec;
use alloc::vec::Vec;

use crate::graph::Graph;

/// Stable colour refinement of the disjoint union `g ⊔ h` (g first).
fn refine(g: &Graph, h: &Graph, colors: &mut [u32]) {
    let ng = g.n();
    let total = colors.len();
    let mut classes = count_classes(colors);
    let mut sigs: Vec<(u32, Vec<u32>, usize)> = Vec::with_capacity(total);
    loop {
        sigs.clear();
        for x in 0..total {
            let mut nb: Vec<u32> = if x < ng {
                g.neighbors(x).map(|y| colors[y]).collect()
            } else {
                h.neighbors(x - ng).map(|y| colors[y + ng]).collect()
            };
            nb.sort_unstable();
            sigs.push((colors[x], nb, x));
        }
        sigs.sort_unstable();
        let mut next = 0u32;
        for i in 0..total {
            if i > 0 && (sigs[i].0 != sigs[i - 1].0 || sigs[i].1 != sigs[i - 1].1) {
                next += 1;
            }
            colors[sigs[i].2] = next;
        }
        let now = next as usize + 1;
        if total == 0 || now == classes {
            return;
        }
        classes = now;
    }
}

fn count_classes(colors: &[u32]) -> usize {
    let mut c: Vec<u32> = colors.to_vec();
    c.sort_unstable();
    c.dedup();
    c.len()
}

/// Per colour: (g-side count, h-side count). `None` if unbalanced.
fn balanced_classes(ng: usize, colors: &[u32]) -> Option<Vec<(usize, usize)>> {
    let max = colors.iter().copied().max().map_or(0, |m| m as usize + 1);
    let mut counts = vec![(0usize, 0usize); max];
    for (x, &c) in colors.iter().enumerate() {
        if x < ng {
            counts[c as usize].0 += 1;
        } else {
            counts[c as usize].1 += 1;
        }
    }
    counts.iter().all(|&(a, b)| a == b).then_some(counts)
}

/// `true` iff `map` is a bijection `V(g) → V(h)` preserving edges and
/// non-edges.
pub fn verify_isomorphism(g: &Graph, h: &Graph, map: &[usize]) -> bool {
    if g.n() != h.n() || map.len() != g.n() || g.edge_count() != h.edge_count() {
        return false;
    }
    let mut hit = vec![false; h.n()];
    for &y in map {
        if y >= h.n() || hit[y] {
            return false;
        }
        hit[y] = true;
    }
    g.edges().all(|(u, v)| h.has_edge(map[u], map[v]))
}

fn search(g: &Graph, h: &Graph, mut colors: Vec<u32>) -> Option<Vec<usize>> {
    let ng = g.n();
    refine(g, h, &mut colors);
    let counts = balanced_classes(ng, &colors)?;
    // Smallest non-trivial class; discrete colourings have none.
    let target = counts
        .iter()
        .enumerate()
        .filter(|(_, &(a, _))| a > 1)
        .min_by_key(|(c, &(a, _))| (a, *c))
        .map(|(c, _)| c as u32);
    let Some(target) = target else {
        let mut by_color = vec![usize::MAX; counts.len()];
        for y in 0..h.n() {
            by_color[colors[ng + y] as usize] = y;
        }
        let map: Vec<usize> = (0..ng).map(|x| by_color[colors[x] as usize]).collect();
        return verify_isomorphism(g, h, &map).then_some(map);
    };
    let x = (0..ng).find(|&x| colors[x] == target)?;
    let fresh = counts.len() as u32;
    for y in (0..h.n()).filter(|&y| colors[ng + y] == target) {
        let mut c = colors.clone();
        c[x] = fresh;
        c[ng + y] = fresh;
        if let Some(map) = search(g, h, c) {
            return Some(map);
        }
    }
    None
}

/// Finds an isomorphism `g → h` respecting initial vertex colours, where
/// `g_colors[x]` and `h_colors[y]` must agree for `x ↦ y`.
pub fn isomorphism_with_colors(
    g: &Graph,
    h: &Graph,
    g_colors: &[u32],
    h_colors: &[u32],
) -> Option<Vec<usize>> {
    if g.n() != h.n() || g.edge_count() != h.edge_count() {
        return None;
    }
    if g.degree_sequence() != h.degree_sequence() {
        return None;
    }
    let colors: Vec<u32> = g_colors.iter().chain(h_colors).copied().collect();
    search(g, h, colors)
}

/// An isomorphism `g → h` (`map[x]` is the image of `x`), if one exists.
pub fn isomorphism(g: &Graph, h: &Graph) -> Option<Vec<usize>> {
    isomorphism_with_colors(g, h, &vec![0; g.n()], &vec![0; h.n()])
}

pub fn is_isomorphic(g: &Graph, h: &Graph) -> bool {
    isomorphism(g, h).is_some()
}

/// Orbits of the automorphism group: `orbit[v]` is the least vertex in the
/// orbit of `v`.
pub fn automorphism_orbits(g: &Graph) -> Vec<usize> {
    automorphism_orbits_colored(g, &vec![0; g.n()])
}

/// Orbits of the automorphisms that also preserve the vertex colouring.
pub fn automorphism_orbits_colored(g: &Graph, colors: &[u32]) -> Vec<usize> {
    let n = g.n();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], mut x: usize) -> usize {
        while p[x] != x {
            p[x] = p[p[x]];
            x = p[x];
        }
        x
    }
    fn union(p: &mut [usize], a: usize, b: usize) {
        let (ra, rb) = (find(p, a), find(p, b));
        if ra != rb {
            let (lo, hi) = if ra < rb { (ra, rb) } else { (rb, ra) };
            p[hi] = lo;
        }
    }
    let mut base: Vec<u32> = colors.iter().chain(colors).copied().collect();
    refine(g, g, &mut base);
    for u in 0..n {
        if find(&mut parent, u) != u {
            continue;
        }
        for v in u + 1..n {
            if base[v] != base[u] || find(&mut parent, v) == u {
                continue;
            }
            let fresh = colors.iter().copied().max().unwrap_or(0) + 1;
            let mut cg = colors.to_vec();
            let mut ch = colors.to_vec();
            cg[u] = fresh;
            ch[v] = fresh;
            if let Some(auto) = search(g, g, cg.into_iter().chain(ch).collect()) {
                for (x, &y) in auto.iter().enumerate() {
                    union(&mut parent, x, y);
                }
            }
        }
    }
    (0..n).map(|v| find(&mut parent, v)).collect()
}
