//! Acceptance suite: one line per criterion, nonzero exit if any fails.
//!
//! Runs as a plain binary (`harness = false`) so every check reports even
//! when an earlier one fails.

mod common;

use std::time::{Duration, Instant};

use cayhom_core::distance::{cycle_through, odd_girth, Length};
use cayhom_core::embeddings::{mycielski_construction, mycielski_into_pc, pc_into_cayley};
use cayhom_core::families::{
    cayley, cycle, hypercube, kneser, mycielski_level, path, pc_partition_model, projective_cube,
    complete, CayleySpec, Z2Vector,
};
use cayhom_core::hom::{
    chromatic_number, is_core, onto_audit, search, verify_hom, Mode, OntoVerdict,
    Pruning, SearchOptions, Status, VarOrder,
};
use cayhom_core::iso::{isomorphism, verify_isomorphism};
use cayhom_core::power::{extend_hom, power_graph};
use cayhom_core::walk::{walk_power_chromatic_probe, walk_power};
use cayhom_core::Graph;
use common::*;
use rand::Rng;

type Check = Result<String, String>;
type Criterion = (&'static str, Duration, fn() -> Check);

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn c1_family_invariants() -> Check {
    let pc3 = projective_cube(3).unwrap();
    ensure(pc3.is_bipartite(), || "PC3 is not bipartite".into())?;
    for (d, n, deg, og) in [(4u32, 16usize, 5usize, 5u32), (6, 64, 7, 7)] {
        let g = projective_cube(d).unwrap();
        let got = (g.n(), g.regular_degree(), odd_girth(&g));
        ensure(got == (n, Some(deg), Length::Finite(og)), || format!("PC{d}: {got:?}"))?;
    }
    Ok("PC3 bipartite; PC4 16/5-reg/og 5; PC6 64/7-reg/og 7".into())
}

fn is_cycle(g: &Graph, c: &[usize]) -> bool {
    let mut s = c.to_vec();
    s.sort_unstable();
    s.dedup();
    s.len() == c.len() && (0..c.len()).all(|i| g.has_edge(c[i], c[(i + 1) % c.len()]))
}

fn c2_common_cycles() -> Check {
    let mut checked = 0;
    for k in [1u32, 2] {
        let g = projective_cube(2 * k).unwrap();
        let len = (2 * k + 1) as usize;
        for u in 0..g.n() {
            for v in u + 1..g.n() {
                let c = cycle_through(&g, u, v, len).ok_or_else(|| format!("PC{}: no cycle through {u},{v}", 2 * k))?;
                ensure(is_cycle(&g, &c) && c.contains(&v), || format!("bad cycle {c:?}"))?;
                checked += 1;
            }
        }
    }
    let g = projective_cube(6).unwrap();
    let mut r = rng(7);
    for _ in 0..200 {
        let u = r.random_range(0..64);
        let v = (u + r.random_range(1..64)) % 64;
        let c = cycle_through(&g, u, v, 7).ok_or_else(|| format!("PC6: no 7-cycle through {u},{v}"))?;
        ensure(is_cycle(&g, &c) && c.contains(&v), || format!("bad cycle {c:?}"))?;
        checked += 1;
    }
    Ok(format!("{checked} pairs have a common shortest odd cycle"))
}

fn components_isomorphic_to(base: &Graph, target: &Graph) -> Result<usize, String> {
    let pg = power_graph(base).map_err(|e| e.to_string())?;
    let comps = pg.graph.components();
    ensure(comps.len() == 2, || format!("{} components", comps.len()))?;
    for c in &comps {
        let map = isomorphism(&c.graph, target).ok_or("component not isomorphic")?;
        ensure(verify_isomorphism(&c.graph, target, &map), || "witness fails".into())?;
    }
    Ok(comps.len())
}

fn c3_power_functor() -> Check {
    components_isomorphic_to(&cycle(5).unwrap(), &projective_cube(4).unwrap())?;
    components_isomorphic_to(&path(4).unwrap(), &hypercube(3).unwrap())?;
    components_isomorphic_to(&cycle(7).unwrap(), &projective_cube(6).unwrap())?;
    Ok("C5 -> 2 x PC4, P4 -> 2 x Q3, C7 -> 2 x PC6, witnesses verified".into())
}

fn c4_power_restriction() -> Check {
    let mut r = rng(1);
    let (mut sat, mut unsat) = (0, 0);
    for i in 0..120 {
        let n = r.random_range(1..=6);
        let g = random_graph(&mut r, n, 0.5);
        let dim = r.random_range(1..=4);
        let spec = random_spec(&mut r, dim, 0.35);
        let h = cayley(&spec).unwrap();
        let direct = search(&g, &h, &SearchOptions::exists()).unwrap();
        let comp = power_graph(&g).unwrap().component_of_empty();
        let lifted = search(&comp.graph, &h, &SearchOptions::exists()).unwrap();
        ensure(direct.status == lifted.status, || {
            format!("pair {i}: g -> H {:?} but component -> H {:?}", direct.status, lifted.status)
        })?;
        if let Some(phi) = direct.witness {
            let ext = extend_hom(&phi, &spec).map_err(|e| e.to_string())?;
            ensure(verify_hom(&ext).is_valid(), || format!("pair {i}: extension fails"))?;
            sat += 1;
        } else {
            unsat += 1;
        }
    }
    Ok(format!("120 pairs agree ({sat} sat, {unsat} unsat), all extensions verify"))
}

fn c5_kneser_layer() -> Check {
    for k in [2u32, 3] {
        let m = pc_partition_model(k).unwrap();
        let layer = m.graph.induced_subgraph(&m.middle_layer()).unwrap();
        let kn = kneser(2 * k + 1, k).unwrap();
        let map = isomorphism(&layer, &kn).ok_or_else(|| format!("k={k}: not isomorphic"))?;
        ensure(verify_isomorphism(&layer, &kn, &map), || "witness fails".into())?;
    }
    Ok("middle layers match K(5,2) and K(7,3)".into())
}

fn c6_mycielski() -> Check {
    let mut sizes = Vec::new();
    for k in [2u32, 3] {
        let e = mycielski_into_pc(k).map_err(|e| e.to_string())?;
        let cert = &e.certificate;
        ensure(cert.injective && verify_hom(&cert.hom).is_valid(), || format!("k={k}: not an embedding"))?;
        let cube = e.into_cube().map_err(|e| e.to_string())?;
        ensure(cube.injective, || format!("k={k}: cube image not injective"))?;
        sizes.push(format!("{}->{}", cert.hom.source().n(), cert.hom.target().n()));
    }
    let literal = mycielski_construction(2, 2).is_err();
    let c5 = cycle(5).unwrap();
    let opts = SearchOptions::exists();
    for k in [1, 2] {
        let chi = chromatic_number(&mycielski_level(&c5, k), &opts).map_err(|e| e.to_string())?.chi();
        ensure(chi == Some(4), || format!("chi(M^{k}(C5)) = {chi:?}"))?;
    }
    Ok(format!(
        "embeddings {} injective; chi(M^1(C5)) = chi(M^2(C5)) = 4; depth-k construction rejected: {literal}",
        sizes.join(", ")
    ))
}

fn c7_pc_into_cayley() -> Check {
    let mut gens: Vec<Z2Vector> = (0..5).map(|i| Z2Vector::basis(5, i)).collect();
    gens.push(Z2Vector::parse("11110").unwrap());
    let spec = CayleySpec::new(5, gens).unwrap();
    let og = odd_girth(&cayley(&spec).unwrap());
    ensure(og == Length::Finite(5), || format!("odd girth {og}"))?;
    let cert = pc_into_cayley(&spec).map_err(|e| e.to_string())?;
    let r = &cert.report;
    ensure(
        cert.injective && r.is_valid() && r.source_vertices == 16 && r.edges_checked == 40,
        || format!("{r:?}"),
    )?;
    Ok("PC4 embeds injectively: 16 vertices, 40 edges verified".into())
}

fn c8_cores() -> Check {
    for d in [2u32, 4] {
        let core = is_core(&projective_cube(d).unwrap(), &SearchOptions::exists()).map_err(|e| e.to_string())?;
        ensure(core, || format!("PC{d} retracts"))?;
    }
    Ok("PC2 and PC4 are cores".into())
}

fn c9_pc4_into_k4() -> Check {
    let pc4 = projective_cube(4).unwrap();
    let out = search(&pc4, &complete(3).unwrap(), &SearchOptions::exists()).unwrap();
    ensure(out.status == Status::Unsat, || format!("PC4 -> K3: {:?}", out.status))?;
    let audit = onto_audit(&pc4, &complete(4).unwrap(), &SearchOptions::exists()).unwrap();
    ensure(matches!(audit.verdict, OntoVerdict::AllOnto), || format!("{:?}", audit.verdict))?;
    Ok(format!("PC4 -> K3 unsat ({} nodes); PC4 -> K4 all onto", out.stats.nodes))
}

fn c10_flagship() -> Check {
    let pc6 = projective_cube(6).unwrap();
    let pc4 = projective_cube(4).unwrap();
    let opts = SearchOptions::exists()
        .with_pruning(Pruning {
            arc_consistency: true,
            parity_distance: true,
            pc_preimage: false,
        })
        .with_workers(4)
        .with_budget(Duration::from_secs(30 * 60));
    let out = search(&pc6, &pc4.without_vertex(0).unwrap(), &opts).unwrap();
    ensure(out.status == Status::Unsat, || format!("PC6 -> PC4 - v: {:?}", out.status))?;
    let audit = onto_audit(&pc6, &pc4, &opts).unwrap();
    ensure(matches!(audit.verdict, OntoVerdict::AllOnto), || format!("{:?}", audit.verdict))?;
    let gated = search(
        &pc6,
        &pc4.without_vertex(0).unwrap(),
        &SearchOptions {
            pruning: Pruning {
                pc_preimage: true,
                ..opts.pruning
            },
            ..opts.clone()
        },
    )
    .unwrap();
    ensure(gated.status == Status::Unsat, || "pre-image rule changed the answer".into())?;
    Ok(format!(
        "PC6 -> PC4 - v unsat: {} nodes, {} propagations, {:.2?}; all onto",
        out.stats.nodes, out.stats.propagations, out.stats.elapsed
    ))
}

fn c11_walk_powers() -> Check {
    let wp = walk_power(&projective_cube(4).unwrap(), 3).unwrap();
    ensure(wp.graph.edge_count() == 120, || format!("{} edges", wp.graph.edge_count()))?;
    let pc2 = projective_cube(2).unwrap();
    ensure(walk_power(&pc2, 1).unwrap().graph == complete(4).unwrap(), || "PC2^(1) != K4".into())?;
    let opts = SearchOptions::exists().with_budget(Duration::from_secs(20));
    for (r, k, chi) in [(1, 1, 4), (2, 2, 16)] {
        let p = walk_power_chromatic_probe(r, k, &opts).map_err(|e| e.to_string())?;
        ensure(p.chi == Some(chi), || format!("probe({r},{k}) = {p:?}"))?;
    }
    Ok("PC4^(3) = K16, PC2^(1) = K4, probes give 4 and 16".into())
}

fn c12_oracle() -> Check {
    let mut r = rng(12);
    let prunings = [false, true].iter().flat_map(|&ac| {
        [false, true].map(|pd| Pruning {
            arc_consistency: ac,
            parity_distance: pd,
            pc_preimage: false,
        })
    });
    let prunings: Vec<Pruning> = prunings.collect();
    let mut total = 0u128;
    for i in 0..50 {
        let (ng, nh) = (r.random_range(1..=8), r.random_range(1..=5));
        let g = random_graph(&mut r, ng, 0.35);
        let h = random_graph(&mut r, nh, 0.6);
        let brute = brute_force_count(&g, &h);
        total += brute;
        for &pruning in &prunings {
            for order in [VarOrder::StaticDegree, VarOrder::MostConstrained] {
                let opts = SearchOptions {
                    mode: Mode::Count,
                    pruning,
                    order,
                    ..SearchOptions::default()
                };
                let got = search(&g, &h, &opts).unwrap().count;
                ensure(got == Some(brute), || format!("pair {i}: {got:?} vs {brute} under {pruning:?}/{order:?}"))?;
            }
        }
    }
    Ok(format!("50 pairs x 8 configurations match brute force ({total} homs total)"))
}

fn main() {
    let criteria: [Criterion; 12] = [
        ("family invariants", Duration::from_secs(1), c1_family_invariants),
        ("common cycles", Duration::from_secs(30), c2_common_cycles),
        ("power functor", Duration::from_secs(10), c3_power_functor),
        ("power restriction", Duration::from_secs(120), c4_power_restriction),
        ("kneser middle layer", Duration::from_secs(5), c5_kneser_layer),
        ("mycielski chain", Duration::from_secs(60), c6_mycielski),
        ("pc into cayley", Duration::from_secs(10), c7_pc_into_cayley),
        ("core property", Duration::from_secs(120), c8_cores),
        ("pc4 into k4", Duration::from_secs(60), c9_pc4_into_k4),
        ("onto into pc4 - v", Duration::from_secs(30 * 60), c10_flagship),
        ("walk powers", Duration::from_secs(60), c11_walk_powers),
        ("engine oracle", Duration::from_secs(300), c12_oracle),
    ];
    let mut failed = 0;
    for (i, (name, limit, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let result = std::panic::catch_unwind(run).unwrap_or_else(|_| Err("panicked".into()));
        let took = start.elapsed();
        let (ok, detail) = match result {
            Ok(d) if took <= *limit => (true, d),
            Ok(d) => (false, format!("{d}; over the {limit:?} limit")),
            Err(e) => (false, e),
        };
        failed += usize::from(!ok);
        println!(
            "criterion {:>2} {:<20} {} {:>10.3?}  {}",
            i + 1,
            name,
            if ok { "PASS" } else { "FAIL" },
            took,
            detail
        );
    }
    if failed > 0 {
        println!("{failed} criteria failed");
        std::process::exit(1);
    }
    println!("all 12 criteria passed");
}
