//! Backtracking homomorphism search over bitset candidate domains.
//!
//! Every source vertex keeps the set of target vertices it may still map
//! to. Propagation runs to a fixpoint after each decision:
//!
//! * a vertex whose domain is a single target `w` restricts its neighbours
//!   to `N(w)` (always on, it is what makes leaves valid);
//! * arc consistency: a candidate survives only if every neighbour keeps a
//!   candidate adjacent to it;
//! * parity distances: homomorphisms send walks to walks of the same
//!   length, so once `u ↦ w`, any `v` may only go to targets `x` with
//!   `d_odd(w, x) ≤ d_odd(u, v)` and `d_even(w, x) ≤ d_even(u, v)`.
//!
//! `Unsat` is only reported once the whole tree has been exhausted.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;
use core::sync::atomic::{AtomicBool, AtomicU64, AtomicUsize, Ordering};
use core::time::Duration;

use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use super::{HomError, Homomorphism};
use crate::bitset::{ones, words_for};
use crate::distance::{parity_distances, INF};
use crate::graph::Graph;
use crate::iso::automorphism_orbits_colored;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    Exists,
    Count,
    /// Collect up to this many homomorphisms.
    Enumerate(usize),
}

/// Optional propagation rules. None of them changes which maps are
/// homomorphisms; they only prune.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Pruning {
    pub arc_consistency: bool,
    pub parity_distance: bool,
    /// When five or more source vertices share an image, they must have a
    /// common neighbour. Only sound for maps `PC_{2k+2} → PC_{2k}` (or into
    /// a subgraph of `PC_{2k}`); leave off for anything else.
    pub pc_preimage: bool,
}

impl Pruning {
    pub const NONE: Pruning = Pruning {
        arc_consistency: false,
        parity_distance: false,
        pc_preimage: false,
    };
}

impl Default for Pruning {
    fn default() -> Pruning {
        Pruning {
            arc_consistency: true,
            parity_distance: true,
            pc_preimage: false,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum VarOrder {
    /// Highest degree first, fixed for the whole search.
    StaticDegree,
    /// Smallest remaining domain first.
    #[default]
    MostConstrained,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchOptions {
    pub mode: Mode,
    pub pruning: Pruning,
    pub order: VarOrder,
    /// Target vertices no source vertex may map to.
    pub forbid_image: Vec<usize>,
    /// Require distinct images (subgraph search).
    pub injective: bool,
    /// In `Exists` mode, try only one image per automorphism orbit of the
    /// target for source vertex 0. Ignored in other modes, where it would
    /// change the answer.
    pub break_symmetry: bool,
    pub time_budget: Option<Duration>,
    pub node_limit: Option<u64>,
    /// Seeds the tie-break order between equally constrained vertices.
    /// Seed 0 breaks ties by vertex index.
    pub seed: u64,
    /// Worker threads; values above 1 need the `std` feature.
    pub workers: usize,
}

impl Default for SearchOptions {
    fn default() -> SearchOptions {
        SearchOptions {
            mode: Mode::Exists,
            pruning: Pruning::default(),
            order: VarOrder::default(),
            forbid_image: Vec::new(),
            injective: false,
            break_symmetry: false,
            time_budget: None,
            node_limit: None,
            seed: 0,
            workers: 1,
        }
    }
}

impl SearchOptions {
    pub fn exists() -> SearchOptions {
        SearchOptions::default()
    }

    pub fn count() -> SearchOptions {
        SearchOptions {
            mode: Mode::Count,
            ..SearchOptions::default()
        }
    }

    pub fn enumerate(limit: usize) -> SearchOptions {
        SearchOptions {
            mode: Mode::Enumerate(limit),
            ..SearchOptions::default()
        }
    }

    pub fn with_pruning(mut self, pruning: Pruning) -> SearchOptions {
        self.pruning = pruning;
        self
    }

    pub fn with_order(mut self, order: VarOrder) -> SearchOptions {
        self.order = order;
        self
    }

    pub fn with_budget(mut self, budget: Duration) -> SearchOptions {
        self.time_budget = Some(budget);
        self
    }

    pub fn with_node_limit(mut self, limit: u64) -> SearchOptions {
        self.node_limit = Some(limit);
        self
    }

    pub fn with_seed(mut self, seed: u64) -> SearchOptions {
        self.seed = seed;
        self
    }

    pub fn with_workers(mut self, workers: usize) -> SearchOptions {
        self.workers = workers.max(1);
        self
    }

    pub fn with_symmetry_breaking(mut self, on: bool) -> SearchOptions {
        self.break_symmetry = on;
        self
    }

    pub fn injective(mut self, on: bool) -> SearchOptions {
        self.injective = on;
        self
    }

    pub fn forbidding(mut self, vertices: Vec<usize>) -> SearchOptions {
        self.forbid_image = vertices;
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Status {
    Found,
    Unsat,
    Count,
    Enumerated,
    Timeout,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct SearchStats {
    /// Search-tree nodes visited (decisions plus the root).
    pub nodes: u64,
    /// Domain reductions performed by propagation.
    pub propagations: u64,
    /// Wall time; zero without the `std` feature.
    pub elapsed: Duration,
}

impl SearchStats {
    pub fn absorb(&mut self, other: &SearchStats) {
        self.nodes += other.nodes;
        self.propagations += other.propagations;
        self.elapsed += other.elapsed;
    }
}

#[derive(Debug, Clone)]
pub struct SearchOutcome {
    pub status: Status,
    pub witness: Option<Homomorphism>,
    pub count: Option<u128>,
    pub enumerated: Vec<Homomorphism>,
    pub stats: SearchStats,
}

impl SearchOutcome {
    pub fn is_found(&self) -> bool {
        self.status == Status::Found
    }

    pub fn is_unsat(&self) -> bool {
        self.status == Status::Unsat
    }
}

const NO_CLASS: u16 = u16::MAX;

/// Pair constraints from parity distances, grouped by the distinct
/// `(d_odd, d_even)` values seen in the source.
struct ParityRule {
    /// `class_of[u * ng + v]`, `NO_CLASS` when the pair constrains nothing.
    class_of: Vec<u16>,
    /// `masks[(class * nh + w) * words ..]`: allowed images of `v` once `u ↦ w`.
    masks: Vec<u64>,
    /// Allowed images of `u` alone (from odd closed walks through `u`).
    unary: Vec<Vec<u64>>,
}

impl ParityRule {
    fn new(g: &Graph, h: &Graph, words: usize) -> ParityRule {
        let (ng, nh) = (g.n(), h.n());
        let dg = parity_distances(g);
        let dh = parity_distances(h);
        let mut max_odd = 0;
        let mut max_even = 0;
        for w in 0..nh {
            for x in 0..nh {
                max_odd = max_odd.max(dh.raw_odd(w, x));
                max_even = max_even.max(dh.raw_even(w, x));
            }
        }
        let allowed = |w: usize, a: u32, b: u32| {
            let mut m = vec![0u64; words];
            for x in 0..nh {
                if dh.raw_odd(w, x) <= a && dh.raw_even(w, x) <= b {
                    m[x / 64] |= 1 << (x % 64);
                }
            }
            m
        };
        let mut classes: BTreeMap<(u32, u32), u16> = BTreeMap::new();
        let mut class_of = vec![NO_CLASS; ng * ng];
        for u in 0..ng {
            for v in 0..ng {
                if u == v {
                    continue;
                }
                let (a, b) = (dg.raw_odd(u, v), dg.raw_even(u, v));
                if a >= max_odd && b >= max_even {
                    continue;
                }
                let next = classes.len() as u16;
                class_of[u * ng + v] = *classes.entry((a, b)).or_insert(next);
            }
        }
        let mut masks = vec![0u64; classes.len() * nh * words];
        for (&(a, b), &c) in &classes {
            for w in 0..nh {
                let off = (c as usize * nh + w) * words;
                masks[off..off + words].copy_from_slice(&allowed(w, a, b));
            }
        }
        let unary = (0..ng)
            .map(|u| {
                let a = dg.raw_odd(u, u);
                let mut m = vec![0u64; words];
                for w in 0..nh {
                    if a == INF || dh.raw_odd(w, w) <= a {
                        m[w / 64] |= 1 << (w % 64);
                    }
                }
                m
            })
            .collect();
        ParityRule {
            class_of,
            masks,
            unary,
        }
    }
}

#[derive(Clone)]
struct Node {
    dom: Vec<u64>,
    /// Singleton domains whose consequences have been propagated.
    done: Vec<bool>,
}

struct Engine<'a> {
    g: &'a Graph,
    h: &'a Graph,
    ng: usize,
    nh: usize,
    words: usize,
    g_nbrs: Vec<Vec<usize>>,
    h_rows: Vec<u64>,
    parity: Option<ParityRule>,
    opts: &'a SearchOptions,
    rank: Vec<u32>,
    static_order: Vec<usize>,
}

enum Flow {
    Continue,
    /// Exists satisfied or enumeration limit reached.
    Done,
    Timeout,
    /// Another worker already settled the answer.
    Aborted,
}

struct Shared {
    stop: AtomicBool,
    /// Lowest task index that found a witness (exists mode).
    best_task: AtomicUsize,
    nodes: AtomicU64,
    node_limit: Option<u64>,
    #[cfg(feature = "std")]
    deadline: Option<std::time::Instant>,
}

impl Shared {
    fn expired(&self) -> bool {
        #[cfg(feature = "std")]
        if let Some(d) = self.deadline {
            if std::time::Instant::now() >= d {
                return true;
            }
        }
        false
    }
}

struct Ctx<'s> {
    shared: &'s Shared,
    task: usize,
    nodes: u64,
    unreported: u64,
    propagations: u64,
    count: u128,
    found: Vec<Vec<usize>>,
    queue: Vec<usize>,
    queued: Vec<bool>,
}

impl<'s> Ctx<'s> {
    fn new(shared: &'s Shared, task: usize, ng: usize) -> Ctx<'s> {
        Ctx {
            shared,
            task,
            nodes: 0,
            unreported: 0,
            propagations: 0,
            count: 0,
            found: Vec::new(),
            queue: Vec::with_capacity(ng),
            queued: vec![false; ng],
        }
    }

    fn tick(&mut self) -> Option<Flow> {
        self.nodes += 1;
        self.unreported += 1;
        let over = |l: u64| self.shared.nodes.load(Ordering::Relaxed) + self.unreported > l;
        let limit_hit = self.shared.node_limit.is_some_and(over);
        if self.unreported < 256 && !limit_hit {
            return None;
        }
        let batch = core::mem::take(&mut self.unreported);
        let total = self.shared.nodes.fetch_add(batch, Ordering::Relaxed) + batch;
        if self.shared.stop.load(Ordering::Relaxed) {
            return Some(Flow::Timeout);
        }
        if self.shared.best_task.load(Ordering::Relaxed) < self.task {
            return Some(Flow::Aborted);
        }
        if limit_hit || self.shared.node_limit.is_some_and(|l| total > l) || self.shared.expired() {
            self.shared.stop.store(true, Ordering::Relaxed);
            return Some(Flow::Timeout);
        }
        None
    }
}

#[inline]
fn count_bits(ws: &[u64]) -> u32 {
    ws.iter().map(|w| w.count_ones()).sum()
}

#[inline]
fn first_bit(ws: &[u64]) -> usize {
    ones(ws).next().unwrap_or(usize::MAX)
}

impl<'a> Engine<'a> {
    fn new(g: &'a Graph, h: &'a Graph, opts: &'a SearchOptions) -> Engine<'a> {
        let (ng, nh) = (g.n(), h.n());
        let words = words_for(nh).max(1);
        let mut h_rows = vec![0u64; nh * words];
        for x in 0..nh {
            h_rows[x * words..x * words + h.row(x).words().len()].copy_from_slice(h.row(x).words());
        }
        let parity = opts.pruning.parity_distance.then(|| ParityRule::new(g, h, words));
        let mut tie: Vec<usize> = (0..ng).collect();
        if opts.seed != 0 {
            tie.shuffle(&mut ChaCha8Rng::seed_from_u64(opts.seed));
        }
        let mut rank = vec![0u32; ng];
        for (r, &v) in tie.iter().enumerate() {
            rank[v] = r as u32;
        }
        let mut static_order: Vec<usize> = (0..ng).collect();
        static_order.sort_by_key(|&v| (core::cmp::Reverse(g.degree(v)), rank[v]));
        Engine {
            g,
            h,
            ng,
            nh,
            words,
            g_nbrs: (0..ng).map(|v| g.neighbors(v).collect()).collect(),
            h_rows,
            parity,
            opts,
            rank,
            static_order,
        }
    }

    #[inline]
    fn dom<'n>(&self, node: &'n Node, v: usize) -> &'n [u64] {
        &node.dom[v * self.words..(v + 1) * self.words]
    }

    fn root(&self) -> Node {
        let w = self.words;
        let mut full = vec![0u64; w];
        for x in 0..self.nh {
            full[x / 64] |= 1 << (x % 64);
        }
        for &x in &self.opts.forbid_image {
            full[x / 64] &= !(1 << (x % 64));
        }
        let mut dom = Vec::with_capacity(self.ng * w);
        for v in 0..self.ng {
            dom.extend_from_slice(&full);
            if let Some(p) = &self.parity {
                for (d, m) in dom[v * w..].iter_mut().zip(&p.unary[v]) {
                    *d &= m;
                }
            }
        }
        let mut node = Node {
            dom,
            done: vec![false; self.ng],
        };
        if self.opts.break_symmetry && self.opts.mode == Mode::Exists && self.ng > 0 {
            self.restrict_to_orbit_representatives(&mut node);
        }
        node
    }

    fn restrict_to_orbit_representatives(&self, node: &mut Node) {
        let forbidden: Vec<u32> = (0..self.nh)
            .map(|x| self.opts.forbid_image.contains(&x) as u32)
            .collect();
        let orbit = automorphism_orbits_colored(self.h, &forbidden);
        let mut seen = vec![false; self.nh];
        let cands: Vec<usize> = ones(self.dom(node, 0)).collect();
        for x in cands {
            if seen[orbit[x]] {
                node.dom[x / 64] &= !(1 << (x % 64));
            }
            seen[orbit[x]] = true;
        }
    }

    /// Intersects the domain of `v` with `mask`. Returns `false` on wipe-out.
    #[inline]
    fn narrow(&self, node: &mut Node, v: usize, mask: &[u64], ctx: &mut Ctx) -> bool {
        let d = &mut node.dom[v * self.words..(v + 1) * self.words];
        let mut changed = false;
        let mut any = 0u64;
        for (a, &b) in d.iter_mut().zip(mask) {
            let n = *a & b;
            changed |= n != *a;
            *a = n;
            any |= n;
        }
        if changed {
            ctx.propagations += 1;
            if any == 0 {
                return false;
            }
            if !ctx.queued[v] {
                ctx.queued[v] = true;
                ctx.queue.push(v);
            }
        }
        true
    }

    fn propagate(&self, node: &mut Node, ctx: &mut Ctx) -> bool {
        let ok = self.propagate_inner(node, ctx);
        for v in ctx.queue.drain(..) {
            ctx.queued[v] = false;
        }
        ok
    }

    fn propagate_inner(&self, node: &mut Node, ctx: &mut Ctx) -> bool {
        let words = self.words;
        let mut support = vec![0u64; words];
        let mut single = vec![0u64; words];
        while let Some(v) = ctx.queue.pop() {
            ctx.queued[v] = false;
            let d = self.dom(node, v);
            let size = count_bits(d);
            if size == 0 {
                return false;
            }
            if size == 1 {
                if node.done[v] {
                    continue;
                }
                let w = first_bit(d);
                node.done[v] = true;
                let row = &self.h_rows[w * words..(w + 1) * words];
                for &u in &self.g_nbrs[v] {
                    if !self.narrow(node, u, row, ctx) {
                        return false;
                    }
                }
                if let Some(p) = &self.parity {
                    for u in 0..self.ng {
                        let c = p.class_of[v * self.ng + u];
                        if c == NO_CLASS {
                            continue;
                        }
                        let off = (c as usize * self.nh + w) * words;
                        if !self.narrow(node, u, &p.masks[off..off + words], ctx) {
                            return false;
                        }
                    }
                }
                if self.opts.injective {
                    single.iter_mut().for_each(|x| *x = !0);
                    single[w / 64] &= !(1 << (w % 64));
                    for u in (0..self.ng).filter(|&u| u != v) {
                        if !self.narrow(node, u, &single, ctx) {
                            return false;
                        }
                    }
                }
                if self.opts.pruning.pc_preimage && !self.preimage_has_common_neighbour(node, w) {
                    return false;
                }
            } else if self.opts.pruning.arc_consistency {
                support.iter_mut().for_each(|x| *x = 0);
                for x in ones(d) {
                    for (s, r) in support.iter_mut().zip(&self.h_rows[x * words..(x + 1) * words]) {
                        *s |= r;
                    }
                }
                for &u in &self.g_nbrs[v] {
                    if !self.narrow(node, u, &support, ctx) {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn preimage_has_common_neighbour(&self, node: &Node, w: usize) -> bool {
        let pre: Vec<usize> = (0..self.ng)
            .filter(|&u| node.done[u] && first_bit(self.dom(node, u)) == w)
            .collect();
        if pre.len() < 5 {
            return true;
        }
        let mut common = self.g.row(pre[0]).clone();
        for &u in &pre[1..] {
            common.intersect_with(self.g.row(u));
        }
        !common.is_empty()
    }

    fn select(&self, node: &Node) -> Option<usize> {
        match self.opts.order {
            VarOrder::StaticDegree => self.static_order.iter().copied().find(|&v| !node.done[v]),
            VarOrder::MostConstrained => (0..self.ng)
                .filter(|&v| !node.done[v])
                .min_by_key(|&v| (count_bits(self.dom(node, v)), self.rank[v])),
        }
    }

    fn leaf(&self, node: &Node, ctx: &mut Ctx) -> Flow {
        let map: Vec<usize> = (0..self.ng).map(|v| first_bit(self.dom(node, v))).collect();
        debug_assert!(self.g.edges().all(|(u, v)| self.h.has_edge(map[u], map[v])));
        match self.opts.mode {
            Mode::Exists => {
                ctx.found.push(map);
                ctx.shared.best_task.fetch_min(ctx.task, Ordering::Relaxed);
                Flow::Done
            }
            Mode::Count => {
                ctx.count += 1;
                Flow::Continue
            }
            Mode::Enumerate(limit) => {
                ctx.found.push(map);
                if ctx.found.len() >= limit {
                    Flow::Done
                } else {
                    Flow::Continue
                }
            }
        }
    }

    #[cfg(feature = "std")]
    fn children(&self, node: &Node, v: usize, ctx: &mut Ctx) -> Vec<Node> {
        let values: Vec<usize> = ones(self.dom(node, v)).collect();
        let mut out = Vec::with_capacity(values.len());
        for w in values {
            let mut child = node.clone();
            self.assign(&mut child, v, w);
            ctx.queue.push(v);
            ctx.queued[v] = true;
            if self.propagate(&mut child, ctx) {
                out.push(child);
            }
        }
        out
    }

    fn assign(&self, node: &mut Node, v: usize, w: usize) {
        let d = &mut node.dom[v * self.words..(v + 1) * self.words];
        d.iter_mut().for_each(|x| *x = 0);
        d[w / 64] = 1 << (w % 64);
    }

    fn dfs(&self, node: Node, ctx: &mut Ctx) -> Flow {
        if let Some(flow) = ctx.tick() {
            return flow;
        }
        let Some(v) = self.select(&node) else {
            return self.leaf(&node, ctx);
        };
        let values: Vec<usize> = ones(self.dom(&node, v)).collect();
        let last = values.len().saturating_sub(1);
        let mut node = Some(node);
        for (i, w) in values.into_iter().enumerate() {
            let mut child = if i == last {
                node.take().expect("parent kept until last child")
            } else {
                node.as_ref().expect("parent kept until last child").clone()
            };
            self.assign(&mut child, v, w);
            ctx.queue.push(v);
            ctx.queued[v] = true;
            if !self.propagate(&mut child, ctx) {
                continue;
            }
            match self.dfs(child, ctx) {
                Flow::Continue => {}
                other => return other,
            }
        }
        Flow::Continue
    }
}

/// Outcome of one subtree.
struct TaskResult {
    flow: Flow,
    nodes: u64,
    propagations: u64,
    count: u128,
    found: Vec<Vec<usize>>,
}

fn run_task(engine: &Engine, shared: &Shared, task: usize, node: Node) -> TaskResult {
    let mut ctx = Ctx::new(shared, task, engine.ng);
    let flow = engine.dfs(node, &mut ctx);
    shared.nodes.fetch_add(ctx.unreported, Ordering::Relaxed);
    TaskResult {
        flow,
        nodes: ctx.nodes,
        propagations: ctx.propagations,
        count: ctx.count,
        found: ctx.found,
    }
}

/// Decides, counts or enumerates homomorphisms `g → h`.
pub fn search(g: &Graph, h: &Graph, opts: &SearchOptions) -> Result<SearchOutcome, HomError> {
    if h.n() == 0 {
        return Err(HomError::EmptyTarget);
    }
    if opts.mode == Mode::Enumerate(0) {
        return Err(HomError::ZeroLimit);
    }
    if let Some(&x) = opts.forbid_image.iter().find(|&&x| x >= h.n()) {
        return Err(HomError::ImageOutOfRange {
            v: usize::MAX,
            image: x,
            n: h.n(),
        });
    }
    #[cfg(feature = "std")]
    let started = std::time::Instant::now();
    let shared = Shared {
        stop: AtomicBool::new(false),
        best_task: AtomicUsize::new(usize::MAX),
        nodes: AtomicU64::new(0),
        node_limit: opts.node_limit,
        #[cfg(feature = "std")]
        deadline: opts.time_budget.map(|b| started + b),
    };
    let engine = Engine::new(g, h, opts);

    let mut root = engine.root();
    let mut root_ctx = Ctx::new(&shared, 0, engine.ng);
    root_ctx.queue.extend(0..engine.ng);
    root_ctx.queued.iter_mut().for_each(|q| *q = true);
    let feasible = engine.propagate(&mut root, &mut root_ctx);

    let mut results: Vec<TaskResult> = Vec::new();
    if feasible {
        #[cfg(feature = "std")]
        if opts.workers > 1 {
            results = run_parallel(&engine, &shared, root, &mut root_ctx);
        } else {
            results.push(run_task(&engine, &shared, 0, root));
        }
        #[cfg(not(feature = "std"))]
        results.push(run_task(&engine, &shared, 0, root));
    }

    let mut stats = SearchStats {
        nodes: root_ctx.nodes,
        propagations: root_ctx.propagations,
        elapsed: Duration::ZERO,
    };
    for r in &results {
        stats.nodes += r.nodes;
        stats.propagations += r.propagations;
    }
    let timed_out = results.iter().any(|r| matches!(r.flow, Flow::Timeout));
    let to_hom = |map: Vec<usize>| {
        Homomorphism::verified(g.clone(), h.clone(), map).expect("search leaves are homomorphisms")
    };

    let mut outcome = SearchOutcome {
        status: Status::Unsat,
        witness: None,
        count: None,
        enumerated: Vec::new(),
        stats,
    };
    match opts.mode {
        Mode::Exists => {
            // Tasks are in depth-first order, so the first witness is the
            // one a single worker would have found.
            if let Some(map) = results.into_iter().find_map(|r| r.found.into_iter().next()) {
                outcome.status = Status::Found;
                outcome.witness = Some(to_hom(map));
            } else if timed_out {
                outcome.status = Status::Timeout;
            }
        }
        Mode::Count => {
            outcome.status = if timed_out { Status::Timeout } else { Status::Count };
            if !timed_out {
                outcome.count = Some(results.iter().map(|r| r.count).sum());
            }
        }
        Mode::Enumerate(limit) => {
            let mut all: Vec<Vec<usize>> = results.into_iter().flat_map(|r| r.found).collect();
            all.truncate(limit);
            outcome.status = if timed_out && all.len() < limit {
                Status::Timeout
            } else {
                Status::Enumerated
            };
            outcome.count = Some(all.len() as u128);
            outcome.enumerated = all.into_iter().map(to_hom).collect();
        }
    }
    #[cfg(feature = "std")]
    {
        outcome.stats.elapsed = started.elapsed();
    }
    Ok(outcome)
}

/// Splits the tree into ordered subtrees and hands them to worker threads.
#[cfg(feature = "std")]
fn run_parallel(engine: &Engine, shared: &Shared, root: Node, root_ctx: &mut Ctx) -> Vec<TaskResult> {
    let workers = engine.opts.workers;
    let target = 8 * workers;
    let mut frontier = vec![root];
    for _ in 0..engine.ng {
        if frontier.len() >= target {
            break;
        }
        let mut next = Vec::new();
        let mut branched = false;
        for node in frontier {
            match engine.select(&node) {
                None => next.push(node),
                Some(v) => {
                    root_ctx.nodes += 1;
                    branched = true;
                    next.extend(engine.children(&node, v, root_ctx));
                }
            }
        }
        frontier = next;
        if !branched {
            break;
        }
    }

    let tasks: Vec<std::sync::Mutex<Option<Node>>> =
        frontier.into_iter().map(|n| std::sync::Mutex::new(Some(n))).collect();
    let next_task = AtomicUsize::new(0);
    let mut results: Vec<(usize, TaskResult)> = std::thread::scope(|scope| {
        let handles: Vec<_> = (0..workers)
            .map(|_| {
                scope.spawn(|| {
                    let mut mine = Vec::new();
                    loop {
                        let i = next_task.fetch_add(1, Ordering::Relaxed);
                        if i >= tasks.len() {
                            break;
                        }
                        let node = tasks[i].lock().expect("task lock").take().expect("task taken once");
                        if shared.best_task.load(Ordering::Relaxed) < i {
                            mine.push((i, skipped()));
                            continue;
                        }
                        mine.push((i, run_task(engine, shared, i, node)));
                    }
                    mine
                })
            })
            .collect();
        handles
            .into_iter()
            .flat_map(|h| h.join().expect("search worker panicked"))
            .collect()
    });
    results.sort_by_key(|(i, _)| *i);
    results.into_iter().map(|(_, r)| r).collect()
}

#[cfg(feature = "std")]
fn skipped() -> TaskResult {
    TaskResult {
        flow: Flow::Aborted,
        nodes: 0,
        propagations: 0,
        count: 0,
        found: Vec::new(),
    }
}
