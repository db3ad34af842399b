use digraph_adjoints::constructions::{
    algebraic_length, complete, interleaved_adjoint, path, path_family, tournament, tree_dual,
    OrientedPath,
};
use digraph_adjoints::hom::{hom_exists, DEFAULT_BUDGET};
use digraph_adjoints::lab::generate::{all_digraphs_up_to, random_small, rng};
use digraph_adjoints::lab::suite::{
    exhaustive_finobs, random_four_chromatic, sweep_adjunction, sweep_duality_tree, sweep_finobs,
    sweep_hompath, sweep_mulpath,
};
use digraph_adjoints::lab::*;
use digraph_adjoints::{validate_hom, Digraph, Hom};

fn cfg() -> LabConfig {
    LabConfig::default()
}

fn passes(r: &VerifyReport) {
    assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json());
}

#[test]
fn obstruction_family_random_and_exhaustive() {
    passes(&sweep_finobs(100, 4, 2, 11, &cfg()).unwrap());
    passes(&exhaustive_finobs(3, 3, 2, &cfg()).unwrap());
    // the adjoint itself has no obstruction, checked over the whole family
    let target = interleaved_adjoint(&tournament(4), 2).unwrap();
    for p in &path_family(4, 1).unwrap().members {
        assert!(hom_exists(&p.as_digraph(), &target, DEFAULT_BUDGET).exists() == Some(false));
    }
}

#[test]
fn duality_for_a_star() {
    // three arcs at a centre, two in and one out
    let star = Digraph::new(4, [(1, 0), (2, 0), (0, 3)]).unwrap();
    passes(&sweep_duality_tree(&star, 50, 3, &cfg()).unwrap());
    let k1 = tree_dual(&path(1)).unwrap();
    assert_eq!(k1.vertex_count(), 1);
}

#[test]
fn random_sweeps() {
    passes(&sweep_adjunction(50, 5, &cfg()).unwrap());
    passes(&sweep_mulpath(50, 5, &cfg()).unwrap());
    passes(&sweep_hompath(50, 5, &cfg()).unwrap());
}

#[test]
fn adjoint_of_dual_sizes() {
    let r = verify_inadprod(4, 2, &cfg()).unwrap();
    passes(&r);
    assert_eq!(
        r.fact("dual_sizes"),
        Some(&serde_json::json!([8, 8, 8, 8, 8]))
    );
}

#[test]
fn steep_path_of_length_four() {
    let (r, q) = verify_steep_path(4, &cfg()).unwrap();
    passes(&r);
    let q = q.unwrap();
    assert_eq!(algebraic_length(&q.path), 4);
    let family = q.family.as_ref().unwrap();
    assert_eq!(family.len(), 7);
    let qg = q.path.as_digraph();
    for (p, h) in family.members.iter().zip(&q.homs) {
        assert!(validate_hom(h, &qg, &p.as_digraph()).unwrap());
    }
    assert_eq!(
        hom_exists(&qg, &path(3), DEFAULT_BUDGET).exists(),
        Some(false)
    );

    let mut samples = vec![complete(4), tournament(4)];
    samples.extend(random_four_chromatic(5, 1, &cfg()));
    let c = verify_steep_consequence(&q.path, &samples, &cfg()).unwrap();
    passes(&c);
    assert_eq!(c.fact("checked"), Some(&7.into()));
}

#[test]
fn steep_path_is_deterministic() {
    let a = find_steep_path(4, &cfg()).unwrap().unwrap();
    let b = find_steep_path(4, &cfg()).unwrap().unwrap();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(
        find_steep_path(2, &cfg()).unwrap().unwrap().path,
        OrientedPath::forward(2)
    );
}

#[test]
fn h_function_values() {
    assert_eq!(h_function(1, &cfg()).unwrap().value, 3);
    let t = h_function(2, &cfg()).unwrap();
    assert!(t.value <= 6);
    assert!(t.rows.iter().all(|r| r.maps_to_k_chi && r.refused_below));
}

#[test]
fn seeded_reports_are_reproducible() {
    let mut a = sweep_adjunction(30, 99, &cfg()).unwrap();
    let mut b = sweep_adjunction(30, 99, &cfg()).unwrap();
    a.clear_timing();
    b.clear_timing();
    assert_eq!(a.to_json(), b.to_json());
    assert_eq!(a.seed, Some(99));
}

#[test]
fn guards_give_indeterminate() {
    let tight = LabConfig {
        hom_budget: 1,
        cross_check: false,
        ..LabConfig::default()
    };
    // neither search finishes within a single node
    let r = verify_yz(10, 2, &tight).unwrap();
    assert_eq!(r.verdict, Verdict::Indeterminate);
    let r = verify_minty(&complete(5), 4, 1, &tight).unwrap();
    assert_eq!(r.verdict, Verdict::Indeterminate);
    assert_eq!(r.verdict.exit_code(), 2);
    let small = LabConfig {
        vertex_limit: 10,
        ..LabConfig::default()
    };
    let r = verify_chick(8, 3, &small).unwrap();
    assert_eq!(r.verdict, Verdict::Indeterminate);
    assert!(r.witness("guard").is_some());
}

#[test]
fn witnesses_revalidate_independently() {
    // every hom witness in a passing adjunction report checks out on its own
    let mut r = rng(8);
    for _ in 0..20 {
        let g = random_small(&mut r, 4, 0.1);
        let h = random_small(&mut r, 4, 0.1);
        let rep = verify_adjunction(&g, &h, 2, &cfg()).unwrap();
        passes(&rep);
        let ih = interleaved_adjoint(&h, 2).unwrap();
        if let Some(Witness {
            kind: WitnessKind::Hom { map, .. },
            ..
        }) = rep.witness("phi_from_psi")
        {
            assert!(validate_hom(&Hom::new(map.clone()), &g, &ih).unwrap());
        }
    }
}

#[test]
fn climb_bound_on_all_small_graphs() {
    for g in all_digraphs_up_to(2, true) {
        for n in 0..3 {
            passes(&verify_hompath(&g, n, &cfg()).unwrap());
        }
    }
}
