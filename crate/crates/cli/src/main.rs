//! `cayhom`: build binary Cayley graphs and their relatives, and decide
//! homomorphism questions about them with checkable certificates.
//!
//! Exit codes: 0 when the question was decided, 1 on usage, parse or
//! verification errors, 2 when a search budget ran out.

mod cert;
mod family;
mod formats;

use std::io::Write as _;
use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Duration;

use cayhom_core::distance::{girth, odd_girth, Length};
use cayhom_core::embeddings::{mycielski_into_pc, pc_into_cayley, EmbedError};
use cayhom_core::families::{complete, FamilyError};
use cayhom_core::hom::{
    chromatic_bounds, onto_audit, search, HomError, OntoVerdict, Pruning, SearchOptions, Status,
};
use cayhom_core::iso::isomorphism;
use cayhom_core::power::PowerError;
use cayhom_core::walk::WalkError;
use cayhom_core::Graph;
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use cert::{Certificate, GraphDescriptor, Kind};
use family::Named;

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("{0}")]
    Io(String),
    #[error("invalid certificate: {0}")]
    Invalid(String),
    #[error(transparent)]
    Family(#[from] FamilyError),
    #[error(transparent)]
    Hom(#[from] HomError),
    #[error(transparent)]
    Embed(#[from] EmbedError),
    #[error(transparent)]
    Power(#[from] PowerError),
    #[error(transparent)]
    Walk(#[from] WalkError),
}

#[derive(Parser)]
#[command(name = "cayhom", version, about = "Binary Cayley graphs and exact homomorphism search")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Write a graph file for a family expression, e.g. `gen kneser 5 2`.
    Gen {
        #[arg(required = true, num_args = 1..)]
        expr: Vec<String>,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Print basic invariants of a graph as JSON.
    Invariants { graph: String },
    /// Decide a homomorphism question from G to H.
    Hom(HomArgs),
    /// Bound or determine the chromatic number of a graph.
    Chromatic {
        graph: String,
        #[command(flatten)]
        search: SearchArgs,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Build a verified embedding certificate.
    Embed {
        #[command(subcommand)]
        kind: EmbedKind,
    },
    /// Decide whether two graphs are isomorphic.
    Iso {
        g: String,
        h: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// Re-check a certificate file from its embedded graph data.
    Verify {
        certificate: PathBuf,
        /// Re-derive negative claims by running the search again.
        #[arg(long)]
        recheck: bool,
    },
}

#[derive(Subcommand)]
enum EmbedKind {
    /// M^{k-1}(C_{2k+1}) into PC_{2k}.
    MycielskiInPc {
        k: u32,
        /// Use the bipartition model of PC_{2k} as the target.
        #[arg(long)]
        partition_model: bool,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
    /// PC_{2k} into a binary Cayley graph of odd girth 2k+1.
    PcInCayley {
        spec: String,
        #[arg(short, long)]
        output: Option<PathBuf>,
    },
}

#[derive(Args)]
#[group(id = "mode", multiple = false)]
struct ModeArgs {
    /// Look for one homomorphism (default).
    #[arg(long, group = "mode")]
    exists: bool,
    /// Count all homomorphisms.
    #[arg(long, group = "mode")]
    count: bool,
    /// List up to N homomorphisms.
    #[arg(long, value_name = "N", group = "mode")]
    enumerate: Option<usize>,
    /// Decide whether every homomorphism is onto.
    #[arg(long, group = "mode")]
    onto_audit: bool,
    /// Decide whether G maps to the complete graph K_k.
    #[arg(long, value_name = "K", group = "mode")]
    chromatic: Option<usize>,
}

#[derive(Args)]
struct HomArgs {
    g: String,
    /// Target graph; omitted with --chromatic.
    h: Option<String>,
    #[command(flatten)]
    mode: ModeArgs,
    /// Only accept injective maps.
    #[arg(long)]
    injective: bool,
    #[command(flatten)]
    search: SearchArgs,
    #[arg(short, long)]
    output: Option<PathBuf>,
}

#[derive(Args)]
struct SearchArgs {
    /// Wall-clock budget in seconds.
    #[arg(long, value_name = "SECONDS")]
    budget: Option<f64>,
    /// Tie-break seed; 0 keeps index order.
    #[arg(long, default_value_t = 0)]
    seed: u64,
    #[arg(long, default_value_t = 1)]
    workers: usize,
    /// Disable the parity-distance rule.
    #[arg(long)]
    no_parity: bool,
    /// Disable arc consistency.
    #[arg(long)]
    no_arc: bool,
    /// Enable the projective-cube preimage rule.
    #[arg(long)]
    pc_preimage: bool,
}

impl SearchArgs {
    fn options(&self, base: SearchOptions) -> Result<SearchOptions, CliError> {
        let mut o = base
            .with_seed(self.seed)
            .with_workers(self.workers.max(1))
            .with_pruning(Pruning {
                arc_consistency: !self.no_arc,
                parity_distance: !self.no_parity,
                pc_preimage: self.pc_preimage,
            });
        if let Some(b) = self.budget {
            let d = Duration::try_from_secs_f64(b)
                .map_err(|_| CliError::Usage(format!("--budget must be a non-negative number, got {b}")))?;
            o = o.with_budget(d);
        }
        Ok(o)
    }
}

/// What a command produced: text for the output sink plus an exit code.
struct Output {
    text: String,
    code: u8,
}

impl Output {
    fn decided(text: String) -> Output {
        Output { text, code: 0 }
    }

    fn cert(c: Certificate) -> Output {
        let code = if c.status == "timeout" { 2 } else { 0 };
        Output { text: c.to_json(), code }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(cli) {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn run(cli: Cli) -> Result<u8, CliError> {
    let (out, path) = match cli.command {
        Command::Gen { expr, output } => {
            let expr = if expr.len() == 1 {
                expr[0].split(':').map(str::to_string).collect()
            } else {
                expr
            };
            let g = family::build(&expr)?;
            (Output::decided(formats::write_graph(&g.graph)), output)
        }
        Command::Invariants { graph } => (cmd_invariants(&family::resolve(&graph)?.graph), None),
        Command::Hom(args) => {
            let out = cmd_hom(&args)?;
            (out, args.output)
        }
        Command::Chromatic { graph, search, output } => {
            let g = family::resolve(&graph)?;
            (cmd_chromatic(&g, &search)?, output)
        }
        Command::Embed { kind } => match kind {
            EmbedKind::MycielskiInPc {
                k,
                partition_model,
                output,
            } => (cmd_mycielski(k, partition_model)?, output),
            EmbedKind::PcInCayley { spec, output } => (cmd_pc_in_cayley(&spec)?, output),
        },
        Command::Iso { g, h, output } => (cmd_iso(&family::resolve(&g)?, &family::resolve(&h)?), output),
        Command::Verify { certificate, recheck } => (cmd_verify(&certificate, recheck)?, None),
    };
    emit(&out.text, path.as_deref())?;
    Ok(out.code)
}

/// Writes to stdout, or atomically replaces `path`.
fn emit(text: &str, path: Option<&Path>) -> Result<(), CliError> {
    let io = |e: std::io::Error| CliError::Io(e.to_string());
    match path {
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout.write_all(text.as_bytes()).map_err(io)?;
            stdout.flush().map_err(io)
        }
        Some(p) => {
            let dir = match p.parent() {
                Some(d) if !d.as_os_str().is_empty() => d,
                _ => Path::new("."),
            };
            let mut tmp = tempfile::NamedTempFile::new_in(dir).map_err(io)?;
            tmp.write_all(text.as_bytes()).map_err(io)?;
            tmp.persist(p).map_err(|e| CliError::Io(format!("{}: {}", p.display(), e.error)))?;
            Ok(())
        }
    }
}

fn length_json(l: Length) -> Value {
    match l {
        Length::Finite(x) => json!(x),
        Length::Infinite => json!("inf"),
    }
}

fn invariants(g: &Graph) -> Value {
    json!({
        "n": g.n(),
        "m": g.edge_count(),
        "regular_degree": g.regular_degree(),
        "bipartite": g.is_bipartite(),
        "girth": length_json(girth(g)),
        "odd_girth": length_json(odd_girth(g)),
        "components": g.components().len(),
    })
}

fn cmd_invariants(g: &Graph) -> Output {
    let mut s = serde_json::to_string_pretty(&invariants(g)).expect("json");
    s.push('\n');
    Output::decided(s)
}

fn count_json(c: u128) -> Value {
    u64::try_from(c).map_or_else(|_| json!(c.to_string()), |c| json!(c))
}

fn cmd_hom(args: &HomArgs) -> Result<Output, CliError> {
    let g = family::resolve(&args.g)?;
    let h = match (&args.h, args.mode.chromatic) {
        (Some(_), Some(_)) => return Err(CliError::Usage("--chromatic takes no target graph".into())),
        (None, Some(k)) => Named {
            name: format!("complete:{k}"),
            graph: complete(k)?,
        },
        (Some(h), None) => family::resolve(h)?,
        (None, None) => return Err(CliError::Usage("a target graph is required".into())),
    };
    let m = &args.mode;
    let base = if m.count {
        SearchOptions::count()
    } else if let Some(n) = m.enumerate {
        SearchOptions::enumerate(n)
    } else {
        SearchOptions::exists()
    };
    let opts = args.search.options(base)?.injective(args.injective);
    let src = GraphDescriptor::of(&g.name, &g.graph);
    let tgt = GraphDescriptor::of(&h.name, &h.graph);

    if m.onto_audit {
        let audit = onto_audit(&g.graph, &h.graph, &opts)?;
        let refuted: Vec<usize> = cert::one_indexed(&audit.refuted);
        let c = match audit.verdict {
            OntoVerdict::AllOnto => Certificate::new(Kind::Report, "all_onto", src).detail("refuted", refuted),
            OntoVerdict::CounterexampleHom(f) => Certificate::new(Kind::Hom, "not_onto", src)
                .with_map(f.map())
                .detail("surjective", false),
            OntoVerdict::NoHomAtAll => Certificate::new(Kind::Unsat, "unsat", src),
            OntoVerdict::Unknown => Certificate::new(Kind::Report, "timeout", src).detail("refuted", refuted),
        };
        return Ok(Output::cert(
            c.with_target(tgt).with_search(opts.seed, &audit.stats).detail("mode", "onto_audit"),
        ));
    }

    let out = search(&g.graph, &h.graph, &opts)?;
    let mode = if m.count {
        "count"
    } else if m.enumerate.is_some() {
        "enumerate"
    } else if m.chromatic.is_some() {
        "chromatic"
    } else {
        "exists"
    };
    let c = match out.status {
        Status::Found => {
            let f = out.witness.as_ref().expect("found carries a witness");
            Certificate::new(Kind::Hom, "found", src)
                .with_map(f.map())
                .detail("injective", f.is_injective())
                .detail("surjective", f.is_surjective())
        }
        Status::Unsat => Certificate::new(Kind::Unsat, "unsat", src),
        Status::Count => Certificate::new(Kind::Report, "count", src).detail("count", count_json(out.count.unwrap_or(0))),
        Status::Enumerated => {
            let maps: Vec<Vec<usize>> = out.enumerated.iter().map(|f| cert::one_indexed(f.map())).collect();
            Certificate::new(Kind::Report, "enumerated", src).detail("maps", maps)
        }
        Status::Timeout => Certificate::new(Kind::Report, "timeout", src),
    };
    let c = c.with_target(tgt).with_search(opts.seed, &out.stats).detail("mode", mode);
    let c = if args.injective { c.detail("injective_only", true) } else { c };
    Ok(Output::cert(c))
}

fn cmd_chromatic(g: &Named, args: &SearchArgs) -> Result<Output, CliError> {
    let opts = args.options(SearchOptions::exists())?;
    let r = chromatic_bounds(&g.graph, &opts)?;
    let status = if r.chi().is_some() { "decided" } else { "timeout" };
    let c = Certificate::new(Kind::Report, status, GraphDescriptor::of(&g.name, &g.graph))
        .detail("lower", r.lower)
        .detail("upper", r.upper)
        .detail("chi", r.chi())
        .detail("coloring", cert::one_indexed(&r.coloring))
        .detail("clique", cert::one_indexed(&r.clique))
        .with_seed(opts.seed);
    Ok(Output::cert(c))
}

fn checked(c: Certificate) -> Result<Output, CliError> {
    cert::check(&c, false).map_err(CliError::Invalid)?;
    Ok(Output::cert(c))
}

fn cmd_mycielski(k: u32, partition_model: bool) -> Result<Output, CliError> {
    let e = mycielski_into_pc(k)?;
    let certificate = if partition_model { e.certificate.clone() } else { e.into_cube()? };
    let f = &certificate.hom;
    let target_name = if partition_model {
        format!("pc-partition-model:{k}")
    } else {
        format!("pc:{}", 2 * k)
    };
    let parts: Vec<Vec<String>> = e.parts.iter().map(|l| l.iter().map(|p| p.to_string()).collect()).collect();
    let c = Certificate::new(
        Kind::Embedding,
        "found",
        GraphDescriptor::of(&format!("mycielski:{}:cycle:{}", e.levels, 2 * k + 1), f.source()),
    )
    .with_target(GraphDescriptor::of(&target_name, f.target()))
    .with_map(f.map())
    .detail("injective", certificate.injective)
    .detail("k", k)
    .detail("levels", e.levels)
    .detail("parts", parts)
    .detail("edges_checked", certificate.report.edges_checked);
    checked(c)
}

fn cmd_pc_in_cayley(spec_path: &str) -> Result<Output, CliError> {
    let spec = family::load_spec_file(spec_path)?;
    let cap = family::dim_cap()?;
    if spec.dim() > cap {
        return Err(FamilyError::DimensionCap { dim: spec.dim(), cap }.into());
    }
    let e = match pc_into_cayley(&spec) {
        Ok(e) => e,
        Err(EmbedError::Bipartite) => {
            return Err(CliError::Usage(format!(
                "{spec_path}: the Cayley graph is bipartite (odd girth inf); no projective cube embeds"
            )))
        }
        Err(e) => return Err(e.into()),
    };
    let f = &e.hom;
    let og = odd_girth(f.target());
    let k = og.finite().map_or(0, |l| (l - 1) / 2);
    let c = Certificate::new(
        Kind::Embedding,
        "found",
        GraphDescriptor::of(&format!("pc:{}", 2 * k), f.source()),
    )
    .with_target(GraphDescriptor::of(&format!("cayley:{spec_path}"), f.target()))
    .with_map(f.map())
    .detail("injective", e.injective)
    .detail("odd_girth", length_json(og))
    .detail("bijective", e.injective && f.is_surjective());
    checked(c)
}

/// Cheap invariants on which `g` and `h` differ, as `(name, g value, h value)`.
fn differing_invariants(g: &Graph, h: &Graph) -> Vec<(&'static str, Value, Value)> {
    let (a, b) = (invariants(g), invariants(h));
    let mut out: Vec<_> = ["n", "m", "regular_degree", "bipartite", "components", "odd_girth", "girth"]
        .into_iter()
        .filter(|k| a[k] != b[k])
        .map(|k| (k, a[k].clone(), b[k].clone()))
        .collect();
    let (da, db) = (g.degree_sequence(), h.degree_sequence());
    if da != db {
        out.push(("degree_sequence", json!(da), json!(db)));
    }
    out
}

fn cmd_iso(g: &Named, h: &Named) -> Output {
    let src = GraphDescriptor::of(&g.name, &g.graph);
    let tgt = GraphDescriptor::of(&h.name, &h.graph);
    let c = match isomorphism(&g.graph, &h.graph) {
        Some(map) => Certificate::new(Kind::Iso, "isomorphic", src).with_map(&map),
        None => {
            let diffs = differing_invariants(&g.graph, &h.graph);
            let c = Certificate::new(Kind::Report, "not_isomorphic", src);
            match diffs.first() {
                Some((key, _, _)) => {
                    let table: serde_json::Map<String, Value> =
                        diffs.iter().map(|(k, a, b)| (k.to_string(), json!([a, b]))).collect();
                    c.detail("invariant", *key).detail("differences", table)
                }
                None => c.detail("invariant", "exhaustive search"),
            }
        }
    };
    Output::cert(c.with_target(tgt))
}

fn cmd_verify(path: &Path, recheck: bool) -> Result<Output, CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let c: Certificate =
        serde_json::from_str(&text).map_err(|e| CliError::Parse(format!("{}: {e}", path.display())))?;
    let v = cert::check(&c, recheck).map_err(CliError::Invalid)?;
    Ok(Output::decided(format!("ok: {}\n", v.summary)))
}
