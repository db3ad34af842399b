//! Tree duality, products of path targets, and algebraic length.

use crate::constructions::{
    algebraic_length, categorical_product, interleaved_adjoint_bounded, path, path_family,
    tournament, tree_dual_bounded,
};
use crate::digraph::{validate_hom, Digraph, Hom};
use crate::error::{Error, Result};

use super::leveled::shortest_climb;
use super::report::{ReportBuilder, Verdict, VerifyReport};
use super::util::{conclude, decide, Halt};
use super::LabConfig;

/// `G → D(T)` iff `T ↛ G`, over the given sources.
pub fn verify_duality_tree(
    t: &Digraph,
    samples: &[Digraph],
    cfg: &LabConfig,
) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("duality-tree");
    b.graph_param("T", t).param("samples", samples.len());
    let outcome = (|| {
        let dual = tree_dual_bounded(t, cfg.dual_limit)?;
        b.fact("dual_vertices", dual.vertex_count());
        for g in samples {
            let into_dual = decide(g, &dual, cfg)?;
            let tree_in = decide(t, g, cfg)?;
            if into_dual.is_some() == tree_in.is_some() {
                b.digraph("counterexample", g)
                    .fact("maps_to_dual", into_dual.is_some())
                    .fact("tree_maps_in", tree_in.is_some());
                if let Some(h) = &into_dual {
                    b.hom("dual_map", h, g, &dual);
                }
                if let Some(h) = &tree_in {
                    b.hom("tree_map", h, t, g);
                }
                return Ok(Verdict::Fail);
            }
        }
        Ok(Verdict::Pass)
    })();
    conclude(b, outcome)
}

/// `ι_k(T_n)` against the duals of `𝒫_{n,k-1}` without forming their
/// product: (a) `ι_k(T_n) → D(P)` for every member `P`, and (b) every
/// member `Q` is hit by some `P → Q`, so `Q ↛ D(P)`.
pub fn verify_inadprod(n: usize, k: usize, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("inadprod");
    b.param("n", n).param("k", k);
    let outcome = (|| {
        if k == 0 {
            return Err(Halt::Invalid(Error::InvalidParameter(
                "k must be at least 1".into(),
            )));
        }
        let family = path_family(n, k - 1)?;
        let target = interleaved_adjoint_bounded(&tournament(n), k, cfg.vertex_limit)?;
        let members: Vec<Digraph> = family.members.iter().map(|p| p.as_digraph()).collect();
        let duals = members
            .iter()
            .map(|p| tree_dual_bounded(p, cfg.dual_limit))
            .collect::<Result<Vec<_>>>()?;
        b.fact("members", members.len()).fact(
            "dual_sizes",
            duals.iter().map(Digraph::vertex_count).collect::<Vec<_>>(),
        );

        let mut ok = true;
        for (p, d) in family.members.iter().zip(&duals) {
            if decide(&target, d, cfg)?.is_none() {
                b.path("no_map_into_dual", p);
                ok = false;
            }
        }
        for (q, qg) in family.members.iter().zip(&members) {
            let mut covered = false;
            for (pg, d) in members.iter().zip(&duals) {
                if decide(pg, qg, cfg)?.is_some() {
                    covered = decide(qg, d, cfg)?.is_none();
                    break;
                }
            }
            if !covered {
                b.path("uncovered", q);
                ok = false;
            }
        }
        Ok(Verdict::from_bool(ok))
    })();
    conclude(b, outcome)
}

/// `Π G_i → P_n` iff some `G_i → P_n`.
pub fn verify_mulpath(factors: &[Digraph], n: usize, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("mulpath");
    b.param(
        "factors",
        factors
            .iter()
            .map(|f| serde_json::from_str::<serde_json::Value>(&f.to_json()).expect("json"))
            .collect::<Vec<_>>(),
    )
    .param("n", n);
    let outcome = (|| {
        let spec = categorical_product(factors.to_vec(), cfg.product_threshold)?;
        let product = spec.explicit()?;
        let pn = path(n);
        let lhs = decide(product, &pn, cfg)?;
        let mut first = None;
        for (i, f) in factors.iter().enumerate() {
            if let Some(h) = decide(f, &pn, cfg)? {
                first = Some((i, h));
                break;
            }
        }
        b.fact("product_maps", lhs.is_some())
            .fact("some_factor_maps", first.is_some());
        let mut ok = lhs.is_some() == first.is_some();
        if let Some(h) = &lhs {
            b.hom("product_map", h, product, &pn);
        }
        if let Some((i, h)) = &first {
            // the projection composed with the factor's map
            let composed = Hom::new(
                product
                    .vertices()
                    .map(|v| h.map[spec.project(v, *i)])
                    .collect(),
            );
            let valid = validate_hom(&composed, product, &pn)?;
            b.fact("factor", i)
                .hom("factor_map", h, &factors[*i], &pn)
                .fact("composed_valid", valid);
            ok &= valid;
        }
        Ok(Verdict::from_bool(ok))
    })();
    conclude(b, outcome)
}

/// `G → P_n` iff no oriented path of algebraic length `n + 1` maps to `G`.
/// The path side is searched over (vertex, level) states; a shortest walk
/// visits each state once, so it has fewer than `|V(G)|·(n+2)` arcs.
pub fn verify_hompath(g: &Digraph, n: usize, cfg: &LabConfig) -> Result<VerifyReport> {
    let mut b = ReportBuilder::new("hompath");
    b.graph_param("G", g).param("n", n);
    let outcome = (|| {
        let states = g.vertex_count() as u128 * (n as u128 + 2);
        if states > cfg.max_climb_states as u128 {
            return Err(Halt::Guard(Error::SizeGuard {
                what: "climb states",
                size: states,
                limit: cfg.max_climb_states as u128,
            }));
        }
        let pn = path(n);
        let to_path = decide(g, &pn, cfg)?;
        let climb = shortest_climb(g, n + 1);
        b.fact("maps_to_path", to_path.is_some())
            .fact("steep_path_maps", climb.is_some());
        let mut ok = to_path.is_some() != climb.is_some();
        if let Some(h) = &to_path {
            b.hom("path_map", h, g, &pn);
        }
        if let Some(c) = &climb {
            let q = c.path.as_digraph();
            let walk = Hom::new(c.walk.clone());
            let valid = validate_hom(&walk, &q, g)?;
            let al = algebraic_length(&c.path);
            let bounded = (c.path.arc_count() as u128) < states;
            b.path("steep_path", &c.path)
                .hom("steep_map", &walk, &q, g)
                .fact("algebraic_length", al)
                .fact("steep_map_valid", valid);
            ok &= valid && al == n + 1 && bounded;
        }
        Ok(Verdict::from_bool(ok))
    })();
    conclude(b, outcome)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions::OrientedPath;
    use crate::lab::generate::all_digraphs_up_to;

    fn cfg() -> LabConfig {
        LabConfig::default()
    }

    #[test]
    fn duality_examples() {
        let samples: Vec<Digraph> = all_digraphs_up_to(2, true).collect();
        let r = verify_duality_tree(&path(1), &samples, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        let all3: Vec<Digraph> = all_digraphs_up_to(3, true).collect();
        let r = verify_duality_tree(&path(3), &all3, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json());
        // a dual of a non-tree is refused
        assert!(verify_duality_tree(&tournament(3), &samples, &cfg()).is_err());
    }

    #[test]
    fn adjoint_against_tree_duals() {
        for (n, k) in [(3, 1), (4, 2), (5, 2)] {
            let r = verify_inadprod(n, k, &cfg()).unwrap();
            assert_eq!(r.verdict, Verdict::Pass, "{}", r.to_json());
        }
    }

    #[test]
    fn products_of_path_targets() {
        let r = verify_mulpath(&[path(2), path(3)], 2, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.fact("product_maps"), Some(&true.into()));
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = verify_mulpath(&[c3.clone(), tournament(3)], 1, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.fact("product_maps"), Some(&false.into()));
        assert_eq!(
            verify_mulpath(&[c3], 2, &cfg()).unwrap().verdict,
            Verdict::Pass
        );
    }

    #[test]
    fn climbs_against_path_targets() {
        for n in 0..4 {
            let r = verify_hompath(&path(n), n, &cfg()).unwrap();
            assert_eq!(r.verdict, Verdict::Pass);
            assert_eq!(r.fact("steep_path_maps"), Some(&false.into()));
        }
        let c3 = Digraph::new(3, [(0, 1), (1, 2), (2, 0)]).unwrap();
        let r = verify_hompath(&c3, 1, &cfg()).unwrap();
        assert_eq!(r.verdict, Verdict::Pass);
        assert_eq!(r.fact("algebraic_length"), Some(&2.into()));
        let zig: OrientedPath = "+-++".parse().unwrap();
        let r = verify_hompath(&zig.as_digraph(), 1, &cfg()).unwrap();
        assert_eq!(r.fact("maps_to_path"), Some(&false.into()));
    }
}
