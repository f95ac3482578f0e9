//! JSON certificates.
//!
//! Every certificate embeds the edge lists of both graphs, so it can be
//! checked without the tool that produced it. Vertex numbers are 1-indexed.

use cayhom_core::hom::{search, verify_hom, HomCheck, Homomorphism, SearchOptions, SearchStats, Status};
use cayhom_core::iso::verify_isomorphism;
use cayhom_core::Graph;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

pub const FORMAT_VERSION: u32 = 1;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Hom,
    Embedding,
    Unsat,
    Iso,
    Report,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDescriptor {
    pub name: String,
    pub n: usize,
    pub m: usize,
    pub sha256: String,
    pub edges: Vec<[usize; 2]>,
}

impl GraphDescriptor {
    pub fn of(name: &str, g: &Graph) -> GraphDescriptor {
        GraphDescriptor {
            name: name.to_string(),
            n: g.n(),
            m: g.edge_count(),
            sha256: edge_hash(g),
            edges: g.edges().map(|(u, v)| [u + 1, v + 1]).collect(),
        }
    }

    /// Rebuilds the graph and checks it against the recorded counts and hash.
    pub fn rebuild(&self) -> Result<Graph, String> {
        let mut edges = Vec::with_capacity(self.edges.len());
        for &[u, v] in &self.edges {
            if u == 0 || v == 0 {
                return Err(format!("{}: vertex 0 in a 1-indexed edge list", self.name));
            }
            edges.push((u - 1, v - 1));
        }
        let g = Graph::from_edges(self.n, &edges).map_err(|e| format!("{}: {e}", self.name))?;
        if g.edge_count() != self.m || self.edges.len() != self.m {
            return Err(format!("{}: edge count does not match m = {}", self.name, self.m));
        }
        if edge_hash(&g) != self.sha256 {
            return Err(format!("{}: sha256 mismatch", self.name));
        }
        Ok(g)
    }
}

#[derive(Debug, Clone, Default, Serialize, Deserialize)]
pub struct StatsJson {
    pub nodes: u64,
    pub propagations: u64,
    pub elapsed_ms: f64,
}

impl From<&SearchStats> for StatsJson {
    fn from(s: &SearchStats) -> StatsJson {
        StatsJson {
            nodes: s.nodes,
            propagations: s.propagations,
            elapsed_ms: s.elapsed.as_secs_f64() * 1000.0,
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct Certificate {
    pub kind: Kind,
    pub version: u32,
    pub tool: String,
    pub status: String,
    pub source: GraphDescriptor,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub target: Option<GraphDescriptor>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub map: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stats: Option<StatsJson>,
    #[serde(default)]
    pub details: Value,
}

impl Certificate {
    pub fn new(kind: Kind, status: &str, source: GraphDescriptor) -> Certificate {
        Certificate {
            kind,
            version: FORMAT_VERSION,
            tool: concat!("cayhom ", env!("CARGO_PKG_VERSION")).to_string(),
            status: status.to_string(),
            source,
            target: None,
            map: None,
            seed: None,
            stats: None,
            details: Value::Object(Default::default()),
        }
    }

    pub fn with_target(mut self, target: GraphDescriptor) -> Certificate {
        self.target = Some(target);
        self
    }

    pub fn with_map(mut self, map: &[usize]) -> Certificate {
        self.map = Some(one_indexed(map));
        self
    }

    pub fn with_search(mut self, seed: u64, stats: &SearchStats) -> Certificate {
        self.seed = Some(seed);
        self.stats = Some(stats.into());
        self
    }

    pub fn with_seed(mut self, seed: u64) -> Certificate {
        self.seed = Some(seed);
        self
    }

    pub fn detail(mut self, key: &str, value: impl Into<Value>) -> Certificate {
        if let Value::Object(m) = &mut self.details {
            m.insert(key.to_string(), value.into());
        }
        self
    }

    pub fn to_json(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("certificate serializes");
        s.push('\n');
        s
    }
}

pub fn one_indexed(map: &[usize]) -> Vec<usize> {
    map.iter().map(|&x| x + 1).collect()
}

fn zero_indexed(map: &[usize], what: &str) -> Result<Vec<usize>, String> {
    map.iter()
        .map(|&x| x.checked_sub(1).ok_or_else(|| format!("{what}: vertex 0 in a 1-indexed map")))
        .collect()
}

/// SHA-256 over the `p`/`e` lines of the graph, hex encoded.
pub fn edge_hash(g: &Graph) -> String {
    let mut h = Sha256::new();
    h.update(format!("p {} {}\n", g.n(), g.edge_count()));
    for (u, v) in g.edges() {
        h.update(format!("e {} {}\n", u + 1, v + 1));
    }
    h.finalize().iter().map(|b| format!("{b:02x}")).collect()
}

fn hom(source: &Graph, target: &Graph, map: &[usize], what: &str) -> Result<Homomorphism, String> {
    let map = zero_indexed(map, what)?;
    let f = Homomorphism::new(source.clone(), target.clone(), map).map_err(|e| format!("{what}: {e}"))?;
    match verify_hom(&f) {
        HomCheck::Valid => Ok(f),
        HomCheck::Violated { u, v } => Err(format!("{what}: edge {} {} is not preserved", u + 1, v + 1)),
    }
}

fn details_maps(cert: &Certificate, key: &str) -> Result<Vec<Vec<usize>>, String> {
    match cert.details.get(key) {
        None => Ok(Vec::new()),
        Some(v) => serde_json::from_value(v.clone()).map_err(|e| format!("details.{key}: {e}")),
    }
}

/// What [`check`] established.
#[derive(Debug)]
pub struct Verdict {
    pub summary: String,
}

/// Re-verifies a certificate from its embedded data alone.
///
/// Witness maps are always checked edge by edge. Negative claims carry no
/// witness; with `recheck` they are re-derived by a fresh exhaustive search.
pub fn check(cert: &Certificate, recheck: bool) -> Result<Verdict, String> {
    if cert.version != FORMAT_VERSION {
        return Err(format!("unsupported certificate version {}", cert.version));
    }
    let g = cert.source.rebuild()?;
    let h = cert.target.as_ref().map(GraphDescriptor::rebuild).transpose()?;
    let mut checked = Vec::new();

    if let Some(map) = &cert.map {
        let h = h.as_ref().ok_or("map given without a target graph")?;
        match cert.kind {
            Kind::Iso => {
                let m = zero_indexed(map, "map")?;
                if m.len() != g.n() || m.iter().any(|&x| x >= h.n()) || !verify_isomorphism(&g, h, &m) {
                    return Err("map is not an isomorphism".into());
                }
                checked.push("isomorphism".to_string());
            }
            _ => {
                let f = hom(&g, h, map, "map")?;
                checked.push(format!("homomorphism ({} edges)", g.edge_count()));
                let injective = f.is_injective();
                if cert.kind == Kind::Embedding && !injective {
                    return Err(format!("embedding is not injective: image has {} vertices", f.image_size()));
                }
                if let Some(claim) = cert.details.get("injective").and_then(Value::as_bool) {
                    if claim != injective {
                        return Err(format!("details.injective = {claim} but the map says {injective}"));
                    }
                }
                if let Some(claim) = cert.details.get("surjective").and_then(Value::as_bool) {
                    if claim != f.is_surjective() {
                        return Err(format!("details.surjective = {claim} does not match the map"));
                    }
                }
            }
        }
    } else if matches!(cert.kind, Kind::Hom | Kind::Embedding | Kind::Iso) {
        return Err(format!("{:?} certificate without a map", cert.kind));
    }

    let maps = details_maps(cert, "maps")?;
    if !maps.is_empty() {
        let h = h.as_ref().ok_or("maps given without a target graph")?;
        for (i, m) in maps.iter().enumerate() {
            hom(&g, h, m, &format!("maps[{i}]"))?;
        }
        checked.push(format!("{} enumerated homomorphisms", maps.len()));
    }

    if let Some(col) = cert.details.get("coloring") {
        let col: Vec<usize> = serde_json::from_value(col.clone()).map_err(|e| format!("details.coloring: {e}"))?;
        let k = col.iter().copied().max().unwrap_or(0);
        hom(&g, &cayhom_core::families::complete(k.max(1)).map_err(|e| e.to_string())?, &col, "coloring")?;
        checked.push(format!("proper {k}-coloring"));
    }
    if let Some(cl) = cert.details.get("clique") {
        let cl: Vec<usize> = serde_json::from_value(cl.clone()).map_err(|e| format!("details.clique: {e}"))?;
        let cl = zero_indexed(&cl, "clique")?;
        for (i, &u) in cl.iter().enumerate() {
            for &v in &cl[i + 1..] {
                if u >= g.n() || v >= g.n() || !g.has_edge(u, v) {
                    return Err(format!("clique vertices {} and {} are not adjacent", u + 1, v + 1));
                }
            }
        }
        checked.push(format!("{}-clique", cl.len()));
    }

    if recheck {
        let h = h.as_ref();
        match (cert.kind, cert.status.as_str(), h) {
            (Kind::Unsat, _, Some(h)) => {
                let out = search(&g, h, &SearchOptions::exists()).map_err(|e| e.to_string())?;
                if out.status != Status::Unsat {
                    return Err(format!("recheck: search returned {:?}", out.status));
                }
                checked.push("no homomorphism (re-searched)".into());
            }
            (Kind::Report, "all_onto", Some(h)) => {
                let audit = cayhom_core::hom::onto_audit(&g, h, &SearchOptions::exists()).map_err(|e| e.to_string())?;
                if !matches!(audit.verdict, cayhom_core::hom::OntoVerdict::AllOnto) {
                    return Err(format!("recheck: audit returned {:?}", audit.verdict));
                }
                checked.push("every homomorphism onto (re-searched)".into());
            }
            _ => {}
        }
    }

    if checked.is_empty() {
        checked.push("graph data".into());
    }
    Ok(Verdict {
        summary: format!("{} certificate, status {}: verified {}", kind_name(cert.kind), cert.status, checked.join(", ")),
    })
}

fn kind_name(k: Kind) -> &'static str {
    match k {
        Kind::Hom => "hom",
        Kind::Embedding => "embedding",
        Kind::Unsat => "unsat",
        Kind::Iso => "iso",
        Kind::Report => "report",
    }
}
