use std::time::Duration;

use cayhom_core::distance::{odd_girth, Length};
use cayhom_core::embeddings::{canonical_kneser_cycle, mycielski_construction, mycielski_into_pc};
use cayhom_core::families::{complete, cycle, kneser, mycielski_level, pc_partition_model, projective_cube};
use cayhom_core::hom::{chromatic_number, onto_audit, search, OntoVerdict, SearchOptions, Status};
use cayhom_core::iso::is_isomorphic;
use cayhom_core::power::even_component_as_pc;
use cayhom_core::walk::walk_power_chromatic_probe;

#[test]
fn sixteen_vertex_mycielski_does_not_embed_in_pc4() {
    let m2 = mycielski_level(&cycle(5).unwrap(), 2);
    assert_eq!(m2.n(), 16);
    let pc4 = projective_cube(4).unwrap();
    let out = search(&m2, &pc4, &SearchOptions::exists().injective(true)).unwrap();
    assert_eq!(out.status, Status::Unsat);
    // Non-injective maps do exist, so only the subgraph claim fails.
    assert_eq!(search(&m2, &pc4, &SearchOptions::exists()).unwrap().status, Status::Found);
}

#[test]
fn grotzsch_embeds_in_pc4() {
    let e = mycielski_into_pc(2).unwrap();
    assert!(is_isomorphic(e.certificate.hom.source(), &mycielski_level(&cycle(5).unwrap(), 1)));
    let sizes: Vec<Vec<u32>> = e.parts.iter().map(|l| l.iter().map(|p| p.size()).collect()).collect();
    assert_eq!(sizes, [[2; 5], [1; 5]]);
}

#[test]
fn k1_construction_is_k4() {
    let e = mycielski_into_pc(1).unwrap();
    assert_eq!(e.certificate.hom.source().n(), 4);
    assert!(e.certificate.injective);
    assert!(mycielski_construction(1, 1).is_err());
}

#[test]
fn seven_cycle_in_k73() {
    let parts = canonical_kneser_cycle(3).unwrap();
    assert_eq!(parts.len(), 7);
    for i in 0..7 {
        assert_eq!(parts[i].part() & parts[(i + 1) % 7].part(), 0);
    }
}

#[test]
fn grotzsch_is_not_three_colourable() {
    let g = mycielski_level(&cycle(5).unwrap(), 1);
    let out = search(&g, &complete(3).unwrap(), &SearchOptions::exists()).unwrap();
    assert_eq!(out.status, Status::Unsat);
}

#[test]
fn kneser_6_2_needs_four_colours() {
    let r = chromatic_number(&kneser(6, 2).unwrap(), &SearchOptions::exists()).unwrap();
    assert_eq!(r.chi(), Some(4));
}

#[test]
fn pc4_onto_k4() {
    let pc4 = projective_cube(4).unwrap();
    let audit = onto_audit(&pc4, &projective_cube(2).unwrap(), &SearchOptions::exists()).unwrap();
    assert!(matches!(audit.verdict, OntoVerdict::AllOnto));
}

#[test]
fn even_cycle_components_are_projective_cubes() {
    for n in [3usize, 5, 7] {
        let ec = even_component_as_pc(n).unwrap();
        assert!(is_isomorphic(&ec.graph, &projective_cube(n as u32 - 1).unwrap()));
        assert!(ec.graph.n() == 1 << (n - 1));
    }
}

#[test]
fn partition_models_are_projective_cubes() {
    for k in 1..=3 {
        let m = pc_partition_model(k).unwrap();
        let pc = projective_cube(2 * k).unwrap();
        assert!(cayhom_core::iso::verify_isomorphism(&m.graph, &pc, &m.cube_isomorphism()));
        let layer = m.graph.induced_subgraph(&m.middle_layer()).unwrap();
        assert_eq!(layer, kneser(2 * k + 1, k).unwrap());
    }
}

#[test]
fn projective_cube_parities() {
    for k in 1..=3u32 {
        assert!(projective_cube(2 * k - 1).unwrap().is_bipartite());
        assert_eq!(odd_girth(&projective_cube(2 * k).unwrap()), Length::Finite(2 * k + 1));
    }
}

#[test]
fn walk_power_probe_on_pc6() {
    let opts = SearchOptions::exists().with_budget(Duration::from_secs(5));
    let p = walk_power_chromatic_probe(3, 2, &opts).unwrap();
    assert_eq!(p.vertices, 64);
    assert!(p.clique <= p.lower && p.lower <= p.upper && p.upper <= p.greedy_upper);
    assert_eq!(p.bound, 16);
}
